import os

import hypothesis

pytest_plugins = [
    "tests.utils.fixtures",
]

hypothesis.settings.register_profile("exact", deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "exact"))

# octajones - Colored Jones state sums and octahedral gluing equations of knot diagrams
# Copyright (C) 2026 The octajones developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.
from typing import Any
import os

from ruamel.yaml import YAML

from mautrix.util.config import BaseFileConfig, ConfigUpdateHelper

from .quantum.recursion import DATA_RULES, UNKNOWNS

yaml = YAML(typ="safe")

ENV_PREFIX = "OCTAJONES"
DEFAULT_CONFIG = "pkg://octajones/example-config.yaml"


class Config(BaseFileConfig):
    write_back: bool = False

    def __getitem__(self, key: str) -> Any:
        try:
            value = os.environ[f"{ENV_PREFIX}_{key.replace('.', '_').upper()}"]
        except KeyError:
            return super().__getitem__(key)
        return yaml.load(value)

    def save(self) -> None:
        if self.write_back and self.path:
            super().save()

    def do_update(self, helper: ConfigUpdateHelper) -> None:
        copy, _, base = helper

        copy("state_sum.packing_bits")
        copy("state_sum.jobs")
        if base["state_sum.jobs"] < 1:
            base["state_sum.jobs"] = 1

        copy("gluing.check_points")
        copy("gluing.tolerance")
        copy("gluing.seed")

        copy("annihilator.match_points")
        copy("annihilator.match_samples")
        copy("annihilator.match_max_n")
        copy("annihilator.tolerance")

        copy("recursion.margin")
        copy("recursion.data_rule")
        if base["recursion.data_rule"] not in DATA_RULES:
            base["recursion.data_rule"] = UNKNOWNS
        copy("recursion.orders")
        copy("recursion.q_big_degrees")
        copy("recursion.q_degrees")
        copy("recursion.max_trials")
        copy("recursion.aj_tolerance")
        copy("recursion.control_threshold")

        copy("solver.starts")
        copy("solver.tolerance")
        copy("solver.max_iterations")
        copy("solver.step_tolerance")
        copy("solver.residual_tolerance")
        copy("solver.dedup_distance")
        copy("solver.radius")
        copy("solver.perturbation")
        copy("solver.seed")
        copy("solver.grid")
        copy("solver.curve_degrees")

        copy("output.format")

        copy("logging")


def load_config(path: str = None, write_back: bool = False) -> Config:
    """Loads ``path`` on top of the packaged defaults, or only the defaults without a path."""
    config = Config(path or "", DEFAULT_CONFIG)
    config.write_back = write_back
    if path:
        config.load()
    config.update()
    return config

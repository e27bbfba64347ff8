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
"""Spreading independent exact computations over worker processes."""
from typing import Any, Callable, List, Sequence, TypeVar
from concurrent.futures import ProcessPoolExecutor
import asyncio
import functools
import logging

log: logging.Logger = logging.getLogger("octajones.parallel")

T = TypeVar("T")


async def gather_in_pool(func: Callable[..., T], items: Sequence[Any], jobs: int = 1,
                         *args: Any) -> List[T]:
    """Runs ``func(item, *args)`` for every item and returns the results in item order.

    With ``jobs <= 1`` everything runs in this process.
    """
    if jobs <= 1 or len(items) <= 1:
        return [func(item, *args) for item in items]
    loop = asyncio.get_running_loop()
    log.debug("Dispatching %d items to %d workers", len(items), jobs)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [loop.run_in_executor(pool, functools.partial(func, item, *args))
                   for item in items]
        return await asyncio.gather(*futures)

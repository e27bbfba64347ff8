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
"""Sampling the peripheral curve ``(w_mu, w_lambda)`` of a diagram."""
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging

from attr import dataclass
import attr
import numpy as np

from ..diagram import Diagram
from ..errors import NoConvergence
from .gluing import build_gluing_system
from .solver import GluingSolution, SolverOptions, solve_at

log: logging.Logger = logging.getLogger("octajones.solver")


@dataclass(frozen=True)
class CurvePoint:
    w_mu: complex
    w_lambda: complex
    residual: float
    branch: int
    solution: GluingSolution

    def to_json(self) -> Dict[str, Any]:
        return {
            "w_mu": [self.w_mu.real, self.w_mu.imag],
            "w_lambda": [self.w_lambda.real, self.w_lambda.imag],
            "residual": self.residual,
            "branch": self.branch,
        }


def unit_circle(count: int, offset: float = 0.1) -> List[complex]:
    """``count`` points on the unit circle, rotated by ``offset`` to avoid ``w_mu = 1``."""
    return [complex(np.exp(1j * (2 * np.pi * i / count + offset))) for i in range(count)]


def solve_grid(diagram: Diagram, grid: Sequence[complex], options: Optional[SolverOptions] = None
               ) -> List[Tuple[complex, List[GluingSolution]]]:
    """Solutions per grid point; points without any are logged and left empty."""
    options = options or SolverOptions()
    system = build_gluing_system(diagram)
    results = []
    for index, w_mu in enumerate(grid):
        point_options = attr.evolve(options, seed=options.seed + index)
        try:
            solutions = solve_at(diagram, w_mu, point_options, system)
        except NoConvergence as e:
            log.warning("Skipping grid point %s: %s", w_mu, e)
            solutions = []
        results.append((w_mu, solutions))
    return results


def track_branches(results: Sequence[Tuple[complex, List[GluingSolution]]],
                   jump: float = 0.1) -> List[CurvePoint]:
    """Labels solutions by nearest-neighbor continuation from the previous grid point."""
    points: List[CurvePoint] = []
    previous: List[CurvePoint] = []
    next_branch = 0
    for w_mu, solutions in results:
        current: List[CurvePoint] = []
        taken = set()
        for solution in solutions:
            candidates = [(solution.distance(other.solution), other.branch)
                          for other in previous if other.branch not in taken]
            if candidates:
                distance, branch = min(candidates)
                if distance >= jump:
                    log.debug("Branch %d jumps by %.3f at w_mu=%s", branch, distance, w_mu)
            else:
                branch = next_branch
                next_branch += 1
            taken.add(branch)
            current.append(CurvePoint(w_mu=w_mu, w_lambda=solution.w_lambda,
                                      residual=solution.max_residual, branch=branch,
                                      solution=solution))
        points.extend(current)
        if current:
            previous = current
    return points


def sample_curve(diagram: Diagram, grid: Sequence[complex],
                 options: Optional[SolverOptions] = None) -> List[CurvePoint]:
    if not grid:
        raise ValueError("the grid must not be empty")
    return track_branches(solve_grid(diagram, grid, options))


@dataclass(frozen=True)
class CurveFit:
    coefficients: np.ndarray
    residual: float
    deg_mu: int
    deg_lambda: int

    def evaluate(self, w_mu: complex, w_lambda: complex) -> complex:
        powers = np.array([w_mu ** i * w_lambda ** j for i in range(self.deg_mu + 1)
                           for j in range(self.deg_lambda + 1)])
        return complex(powers @ self.coefficients)


def fit_curve_polynomial(pairs: Sequence[Tuple[complex, complex]], deg_mu: int,
                         deg_lambda: int) -> CurveFit:
    """Least-squares nullspace of the monomial matrix: the right singular vector of the
    smallest singular value, with that singular value as the residual."""
    matrix = np.array([[w_mu ** i * w_lambda ** j for i in range(deg_mu + 1)
                        for j in range(deg_lambda + 1)] for w_mu, w_lambda in pairs])
    if matrix.shape[0] < matrix.shape[1]:
        log.warning("Fitting %d coefficients to only %d pairs", matrix.shape[1], len(pairs))
    scale = np.linalg.norm(matrix, axis=1, keepdims=True)
    _, singular, vh = np.linalg.svd(matrix / scale)
    coefficients = vh[-1].conj()
    residual = float(singular[-1]) if len(singular) == matrix.shape[1] else 0.0
    return CurveFit(coefficients=coefficients, residual=residual, deg_mu=deg_mu,
                    deg_lambda=deg_lambda)

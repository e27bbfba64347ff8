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
"""Numerical solutions of the loop equations at a fixed meridian."""
from typing import Any, Dict, List, Optional, Sequence, Tuple
import cmath
import logging

from attr import dataclass
import numpy as np

from ..algebra.factored import FactoredRational
from ..diagram import Diagram
from ..errors import NoConvergence, PoleHit
from .gluing import MU, GluingSystem, build_gluing_system

log: logging.Logger = logging.getLogger("octajones.solver")


@dataclass(frozen=True)
class SolverOptions:
    starts: int = 20
    tolerance: float = 1e-10
    max_iterations: int = 100
    step_tolerance: float = 1e-14
    residual_tolerance: float = 1e-12
    dedup_distance: float = 1e-6
    radius: Tuple[float, float] = (0.5, 2.0)
    perturbation: float = 1e-8
    seed: int = 0


@dataclass(frozen=True)
class GluingSolution:
    w_mu: complex
    point: Dict[str, complex]
    residuals: Dict[str, float]
    w_lambda: complex
    s_value: complex
    s_residual: float

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values(), default=0.0)

    def distance(self, other: 'GluingSolution') -> float:
        return max(abs(value - other.point[name]) for name, value in self.point.items())

    def to_json(self) -> Dict[str, Any]:
        return {
            "w_mu": [self.w_mu.real, self.w_mu.imag],
            "point": {name: [value.real, value.imag] for name, value in self.point.items()},
            "residuals": self.residuals,
            "w_lambda": [self.w_lambda.real, self.w_lambda.imag],
            "s": [self.s_value.real, self.s_value.imag],
            "s_residual": self.s_residual,
        }


def _equation_names(system: GluingSystem) -> List[str]:
    return ["L0"] + [f"L{c}" for c in sorted(system.loops)]


def _evaluate(equations: Sequence[FactoredRational], point: Dict[str, complex]) -> np.ndarray:
    return np.array([equation.eval_complex(point) - 1 for equation in equations])


def _jacobian(equations: Sequence[FactoredRational], point: Dict[str, complex],
              unknowns: List[str]) -> np.ndarray:
    """Derivatives of ``L - 1`` in ``log w``: ``L * d log L / d log w``."""
    rows = []
    for equation in equations:
        value = equation.eval_complex(point)
        rows.append([value * entry for entry in equation.log_gradient(point, unknowns)])
    return np.array(rows)


def _newton(equations: Sequence[FactoredRational], point: Dict[str, complex],
            unknowns: List[str], options: SolverOptions) -> Optional[Dict[str, complex]]:
    logs = np.array([cmath.log(point[name]) for name in unknowns])
    current = dict(point)
    residual = _evaluate(equations, current)
    for _ in range(options.max_iterations):
        norm = float(np.max(np.abs(residual)))
        if norm < options.residual_tolerance:
            return current
        try:
            step = np.linalg.solve(_jacobian(equations, current, unknowns), -residual)
        except np.linalg.LinAlgError:
            return None
        damping = 1.0
        while damping > 1e-4:
            trial_logs = logs + damping * step
            trial = dict(current)
            trial.update({name: complex(np.exp(value)) for name, value in zip(unknowns,
                                                                                trial_logs)})
            try:
                trial_residual = _evaluate(equations, trial)
            except PoleHit:
                trial_residual = None
            if trial_residual is not None and float(np.max(np.abs(trial_residual))) < norm:
                break
            damping /= 2
        else:
            return None
        logs, current, residual = trial_logs, trial, trial_residual
        if float(np.max(np.abs(damping * step))) < options.step_tolerance:
            break
    return current if float(np.max(np.abs(residual))) < options.tolerance else None


def _is_degenerate(system: GluingSystem, point: Dict[str, complex], tolerance: float) -> bool:
    for parts in system.shapes.values():
        for strand in ("w", "ui", "uo", "li", "lo"):
            value = parts.shape(strand).eval_complex(point)
            if abs(value) < tolerance or abs(value - 1) < tolerance:
                return True
    return False


def _safe_meridian(system: GluingSystem, w_mu: complex, options: SolverOptions) -> complex:
    """Moves ``w_mu`` off values where a binomial in ``w_mu`` alone vanishes."""
    for equation in system.equations():
        for mono, _ in equation.factors:
            if mono.variables == {MU} and abs(mono.evaluate({MU: w_mu}) - 1) < 1e-10:
                log.warning("w_mu = %s makes 1 - %s vanish, perturbing by %g", w_mu, mono,
                            options.perturbation)
                return w_mu * (1 + options.perturbation)
    return w_mu


def _finish(system: GluingSystem, w_mu: complex, point: Dict[str, complex],
            names: List[str]) -> GluingSolution:
    residuals = {name: float(abs(equation.eval_complex(point) - 1))
                 for name, equation in zip(names, system.equations())}
    w_lambda = system.longitude.eval_complex(point)
    s_value = system.sqrt_s.eval_complex(point)
    s_residual = float(abs(s_value ** 2 * w_lambda * system.loop_zero.eval_complex(point) - 1))
    return GluingSolution(w_mu=w_mu, point={k: v for k, v in point.items() if k != MU},
                          residuals=residuals, w_lambda=w_lambda, s_value=s_value,
                          s_residual=s_residual)


def solve_at(diagram: Diagram, w_mu: complex, options: Optional[SolverOptions] = None,
             system: Optional[GluingSystem] = None) -> List[GluingSolution]:
    """Solves ``L0 = L_c = 1`` for ``w0`` and the crossing variables from random starts.

    Raises :class:`NoConvergence` when no start converges.
    """
    options = options or SolverOptions()
    if options.tolerance <= 0:
        raise ValueError("tolerance must be positive")
    if abs(w_mu) < options.tolerance or abs(w_mu - 1) < options.tolerance:
        raise ValueError(f"w_mu must avoid 0 and 1, got {w_mu}")
    system = system or build_gluing_system(diagram)
    w_mu = _safe_meridian(system, complex(w_mu), options)
    unknowns = [name for name in system.variables if name != MU]
    equations = system.equations()
    names = _equation_names(system)
    rng = np.random.default_rng(options.seed)
    found: List[GluingSolution] = []
    for attempt in range(options.starts):
        moduli = rng.uniform(options.radius[0], options.radius[1], len(unknowns))
        angles = rng.uniform(0, 2 * np.pi, len(unknowns))
        start = {name: complex(r * np.exp(1j * theta))
                 for name, r, theta in zip(unknowns, moduli, angles)}
        start[MU] = w_mu
        try:
            point = _newton(equations, start, unknowns, options)
        except PoleHit:
            point = None
        if point is None:
            log.debug("Start %d at w_mu=%s did not converge", attempt, w_mu)
            continue
        if _is_degenerate(system, point, options.tolerance):
            log.debug("Start %d converged to a degenerate point", attempt)
            continue
        solution = _finish(system, w_mu, point, names)
        if any(solution.distance(other) < options.dedup_distance for other in found):
            continue
        found.append(solution)
    if not found:
        raise NoConvergence(f"no solution of {diagram.name or 'diagram'} at w_mu={w_mu} from "
                            f"{options.starts} starts")
    found.sort(key=lambda solution: tuple((round(solution.point[name].real, 8),
                                           round(solution.point[name].imag, 8))
                                          for name in unknowns))
    log.debug("%d solutions at w_mu=%s", len(found), w_mu)
    return found

"""This module provides utility functions and oracles for testing."""
from typing import Any, Dict, Iterator
from argparse import Namespace
import itertools

from octajones.algebra import LaurentPoly
from octajones.diagram import Diagram
from octajones.quantum.state_sum import Coloring, is_admissible, make_coloring


def q_poly(terms: Dict[int, int]) -> LaurentPoly:
    """A Laurent polynomial given by its coefficients at integral powers of ``q``."""
    return LaurentPoly.from_q_terms(terms)


def brute_force_colorings(diagram: Diagram, n: int) -> Iterator[Coloring]:
    """Every choice of ``k0`` and shifts in ``[0, n]``, kept when admissible."""
    for k0 in range(n + 1):
        for shifts in itertools.product(range(n + 1), repeat=diagram.crossing_count):
            coloring = make_coloring(diagram, k0, shifts)
            if is_admissible(coloring, n):
                yield coloring


def make_args(**kwargs: Any) -> Namespace:
    """Parsed command line arguments with every flag unset unless given."""
    defaults = dict(config=None, command=None, pd=None, gauss=None, knot=None, n=None, de=None,
                    dqq=None, dq=None, grid=None, seed=None, tol=None, out=None, jobs=None,
                    format=None, numeric_only=False)
    defaults.update(kwargs)
    return Namespace(**defaults)


def relative_error(a: complex, b: complex) -> float:
    return abs(a - b) / max(1.0, abs(b))


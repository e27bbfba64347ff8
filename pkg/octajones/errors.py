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
"""Exception hierarchy shared by all octajones modules."""


class OctajonesError(Exception):
    pass


class DiagramError(OctajonesError, ValueError):
    pass


class MalformedCode(DiagramError):
    pass


class NotAKnot(DiagramError):
    pass


class NonPlanar(DiagramError):
    pass


class NoBasePoint(DiagramError):
    pass


class UnlabeledDiagram(DiagramError):
    pass


class AlgebraError(OctajonesError, ArithmeticError):
    pass


class ZeroInverse(AlgebraError):
    pass


class ZeroBinding(AlgebraError):
    pass


class PoleHit(AlgebraError):
    pass


class BranchAmbiguity(AlgebraError):
    pass


class PoleAtOne(AlgebraError):
    pass


class ResidualQ(AlgebraError):
    pass


class NotDivisible(AlgebraError):
    pass


class VerificationError(OctajonesError, AssertionError):
    pass


class IntegralityViolation(VerificationError):
    pass


class NonIntegralExponent(VerificationError):
    pass


class InconsistentQStar(VerificationError):
    pass


class MatchFailure(VerificationError):
    def __init__(self, generator: str, message: str, witness: dict = None) -> None:
        super().__init__(f"{generator}: {message}")
        self.generator = generator
        self.witness = witness or {}


class InsufficientData(OctajonesError, ValueError):
    def __init__(self, message: str, minimum: int) -> None:
        super().__init__(f"{message} (need at least {minimum} values)")
        self.minimum = minimum


class NoConvergence(OctajonesError):
    pass

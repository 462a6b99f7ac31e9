"""Cohomology of odd sphere bundles from the Gysin sequence.

For an oriented ``S^{2n-1}``-bundle ``Z -> M`` over a closed oriented
``2n``-manifold with Euler number ``e``, the Gysin sequence breaks into

    0 -> coker(e: H^{j-2n}(M) -> H^j(M)) -> H^j(Z)
      -> ker(e: H^{j+1-2n}(M) -> H^{j+1}(M)) -> 0

Cup product with the Euler class is only nonzero on ``H^0(M) -> H^{2n}(M)``.
Every extension is taken to be split.  That is forced when the base is
torsion free (the quotient is free); for bases with torsion it is a
convention and a warning is logged.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .errors import InadmissibleEuler, InvalidBase
from .fgab import AbelianGroup, IntMatrix, direct_sum, kernel_cokernel
from .graded import BaseManifold, GradedGroup, validate_base

__all__ = [
    "BundleWithFlux",
    "admissible_euler",
    "euler_rule",
    "total_space_cohomology",
    "pushforward_flux",
]

log = logging.getLogger(__name__)


def admissible_euler(n: int, e: int) -> bool:
    """Whether ``e`` can be the Euler number of an ``S^{2n-1}``-bundle over a 2n-manifold.

    Any integer for n = 2 (principal SU(2)-bundles, via c_2) and n = 4
    (Hopf bundle over S^8); otherwise only even integers.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n in (2, 4):
        return True
    return e % 2 == 0


def euler_rule(n: int) -> str:
    if n in (2, 4):
        return f"any integer Euler number is allowed for n={n}"
    return f"Euler number must be even for n={n}"


@dataclass(frozen=True)
class BundleWithFlux:
    """Sphere bundle over ``base`` with Euler number ``e`` and top-degree flux ``h``."""

    base: BaseManifold
    e: int
    h: int = 0

    def __post_init__(self):
        if not admissible_euler(self.n, self.e):
            raise InadmissibleEuler(f"e={self.e}: {euler_rule(self.n)}")

    @property
    def n(self) -> int:
        return self.base.half_dim

    @property
    def fibre_dim(self) -> int:
        return 2 * self.n - 1

    @property
    def dim(self) -> int:
        return 4 * self.n - 1


def _cup_euler(M: GradedGroup, e: int, src: int, n: int) -> tuple[AbelianGroup, AbelianGroup]:
    """Kernel and cokernel of cup with the Euler class, ``H^src(M) -> H^{src+2n}(M)``."""
    source, target = M[src], M[src + 2 * n]
    if src == 0:
        # H^0 = Z and H^{2n} = Z for a valid base
        return kernel_cokernel(IntMatrix.from_rows([[e]]))
    return source, target


def total_space_cohomology(B: BundleWithFlux) -> GradedGroup:
    """``H^j(Z; Z)`` for ``j = 0..4n-1``."""
    problems = validate_base(B.base)
    if problems:
        raise InvalidBase(f"{B.base.name}: " + "; ".join(problems))
    if not B.base.torsion_free:
        log.warning("base %s has torsion; Gysin extensions split by convention", B.base.name)
    n, M = B.n, B.base.cohomology
    groups = []
    for j in range(4 * n):
        _, coker = _cup_euler(M, B.e, j - 2 * n, n)
        ker, _ = _cup_euler(M, B.e, j + 1 - 2 * n, n)
        groups.append(direct_sum([coker, ker]))
    return GradedGroup(4 * n - 1, tuple(groups))


def pushforward_flux(B: BundleWithFlux) -> int:
    """Flux as an integer under ``H^{4n-1}(Z) -> H^{2n}(M) = Z``; the identification is the identity."""
    return B.h

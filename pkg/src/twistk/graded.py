"""Graded integral cohomology models and their twisted cohomology."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import DegreeZeroNotZ, TopNotZ
from .fgab import ZERO, Z, AbelianGroup, IntMatrix, direct_sum, kernel_cokernel

__all__ = [
    "GradedGroup",
    "BaseManifold",
    "validate_base",
    "parity_parts",
    "twisted_cohomology",
]


@dataclass(frozen=True)
class GradedGroup:
    """Groups in degrees ``0..top``; every other degree is the zero group."""

    top: int
    groups: tuple[AbelianGroup, ...]

    def __post_init__(self):
        if self.top < 0:
            raise ValueError("top degree must be non-negative")
        if len(self.groups) != self.top + 1:
            raise ValueError(f"need {self.top + 1} groups for top degree {self.top}")

    @classmethod
    def from_mapping(cls, top: int, groups: Mapping[int, AbelianGroup]) -> GradedGroup:
        bad = [d for d in groups if not 0 <= d <= top]
        if bad:
            raise ValueError(f"degrees {bad} outside 0..{top}")
        return cls(top, tuple(groups.get(d, ZERO) for d in range(top + 1)))

    @classmethod
    def zero(cls, top: int) -> GradedGroup:
        return cls(top, (ZERO,) * (top + 1))

    def __getitem__(self, degree: int) -> AbelianGroup:
        if 0 <= degree <= self.top:
            return self.groups[degree]
        return ZERO

    def nonzero(self) -> dict[int, AbelianGroup]:
        return {d: g for d, g in enumerate(self.groups) if not g.is_zero}

    def betti(self) -> list[int]:
        return [g.rank for g in self.groups]

    @property
    def torsion_free(self) -> bool:
        return all(g.is_free for g in self.groups)

    def __str__(self) -> str:
        nz = self.nonzero()
        if not nz:
            return "0"
        return ", ".join(f"H^{d} = {g}" for d, g in nz.items())


@dataclass(frozen=True)
class BaseManifold:
    """Integral cohomology of a closed oriented manifold of dimension ``2 * half_dim``."""

    name: str
    half_dim: int
    cohomology: GradedGroup

    @property
    def dim(self) -> int:
        return 2 * self.half_dim

    @property
    def torsion_free(self) -> bool:
        return self.cohomology.torsion_free

    @classmethod
    def from_groups(cls, name: str, dim: int, groups: Mapping[int, AbelianGroup]) -> BaseManifold:
        if dim % 2:
            raise ValueError(f"base dimension must be even, got {dim}")
        return cls(name, dim // 2, GradedGroup.from_mapping(dim, groups))


def validate_base(M: BaseManifold) -> list[str]:
    """Describe every way ``M`` fails to look like a closed connected oriented 2n-manifold.

    Only rational Poincare duality is checked; torsion linking is not.
    """
    problems = []
    top = M.dim
    if M.half_dim < 2:
        problems.append(f"half_dim must be >= 2, got {M.half_dim}")
    if M.cohomology.top != top:
        problems.append(f"cohomology top degree {M.cohomology.top} does not match dimension {top}")
    H = M.cohomology
    if H[0] != Z:
        problems.append("H^0 must be Z")
    if H[top] != Z:
        problems.append(f"H^{top} must be Z")
    for j in range(1, top // 2 + 1):
        if H[j].rank != H[top - j].rank:
            problems.append(
                f"duality violation at ({j},{top - j}): "
                f"rank H^{j} = {H[j].rank} but rank H^{top - j} = {H[top - j].rank}"
            )
    return problems


def parity_parts(G: GradedGroup) -> tuple[AbelianGroup, AbelianGroup]:
    """Direct sums of the even-degree and of the odd-degree groups."""
    even = direct_sum(G.groups[0::2])
    odd = direct_sum(G.groups[1::2])
    return even, odd


def twisted_cohomology(G: GradedGroup, h: int) -> tuple[AbelianGroup, AbelianGroup]:
    """Z/2-graded cohomology of ``G`` with differential ``x -> h * x`` from degree 0 to the top.

    ``G`` is the cohomology of an odd-dimensional closed manifold and ``h``
    the flux on its top class.  Cup product with a top-degree class is
    zero except on ``H^0``, and the flux squares to zero, so the complex
    has a single nonzero arrow ``H^0 = Z -> Z = H^top``.
    """
    top = G.top
    if G[0] != Z:
        raise DegreeZeroNotZ(f"H^0 must be Z, got {G[0]}")
    if top % 2 == 0 or top == 0 or G[top] != Z:
        raise TopNotZ(f"H^{top} must be Z in odd top degree, got {G[top]}")
    ker, coker = kernel_cokernel(IntMatrix.from_rows([[h]]))
    even = direct_sum([ker, *G.groups[2:top:2]])
    odd = direct_sum([coker, *G.groups[1:top - 1:2]])
    return even, odd

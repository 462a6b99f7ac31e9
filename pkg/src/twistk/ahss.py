"""Twisted Atiyah-Hirzebruch spectral sequence for sphere-bundle total spaces.

``E_2^{p,q} = H^p(Z; K^q(pt))`` vanishes for odd ``q`` and is 2-periodic in
``q``, so a page is stored as one group per column ``p = 0..4n-1``.

For ``Z`` the total space of an ``S^{2n-1}``-bundle over a torsion-free
base with flux ``h``:

* even-length differentials vanish (odd rows are zero);
* ``d_3, ..., d_{2n-1}`` vanish, and nothing else can hit below ``d_{4n-1}``;
* ``d_{4n-1}`` is multiplication by ``h`` from column 0 to column ``4n-1``.

Filtration extensions are resolved as split.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import NotTerminal, TopDegreeMismatch, TorsionBase
from .fgab import AbelianGroup, IntMatrix, direct_sum, kernel_cokernel
from .graded import GradedGroup, parity_parts

__all__ = [
    "BigradedPage",
    "e2_page",
    "run_to_infinity",
    "assemble_k",
    "untwisted_k",
    "twisted_k",
]


@dataclass(frozen=True)
class BigradedPage:
    r: int
    n: int
    entries: tuple[AbelianGroup, ...]

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"page index must be >= 2, got {self.r}")
        if len(self.entries) != 4 * self.n:
            raise ValueError(f"need {4 * self.n} columns for n={self.n}")

    @property
    def top(self) -> int:
        return 4 * self.n - 1

    @property
    def terminal(self) -> bool:
        return self.r >= 4 * self.n

    def column(self, p: int) -> AbelianGroup:
        if 0 <= p <= self.top:
            return self.entries[p]
        return AbelianGroup()

    def nonzero(self) -> dict[int, AbelianGroup]:
        return {p: g for p, g in enumerate(self.entries) if not g.is_zero}


def e2_page(HZ: GradedGroup, n: int) -> BigradedPage:
    if HZ.top != 4 * n - 1:
        raise TopDegreeMismatch(f"expected top degree {4 * n - 1} for n={n}, got {HZ.top}")
    return BigradedPage(2, n, HZ.groups)


def _check_torsion_free_base(groups, n: int) -> None:
    # torsion of H^*(Z) sits only in degree 2n exactly when the base is torsion free
    bad = [p for p, g in enumerate(groups) if g.torsion and p != 2 * n]
    if bad:
        raise TorsionBase(f"torsion in degrees {bad}: the base is not torsion free")


def run_to_infinity(page: BigradedPage, h: int) -> BigradedPage:
    """Apply every differential to an E_2 page and return the E_infinity page."""
    if page.r != 2:
        raise ValueError(f"expected an E_2 page, got E_{page.r}")
    _check_torsion_free_base(page.entries, page.n)
    entries = list(page.entries)
    top = page.top
    # d_r for r < 4n-1 is zero; the single surviving arrow is d_{4n-1}: E^0 -> E^top
    source, target = entries[0], entries[top]
    if h and not (source.is_zero and target.is_zero):
        if source.rank != 1 or target.rank != 1 or source.torsion or target.torsion:
            raise ValueError(f"d_{top} expects Z -> Z, got {source} -> {target}")
        entries[0], entries[top] = kernel_cokernel(IntMatrix.from_rows([[h]]))
    return replace(page, r=4 * page.n, entries=tuple(entries))


def assemble_k(page: BigradedPage) -> tuple[AbelianGroup, AbelianGroup]:
    """``(K^0, K^1)`` from a terminal page, taking every extension split."""
    if not page.terminal:
        raise NotTerminal(f"E_{page.r} is not terminal for n={page.n}")
    return direct_sum(page.entries[0::2]), direct_sum(page.entries[1::2])


def untwisted_k(HZ: GradedGroup, n: int) -> tuple[AbelianGroup, AbelianGroup]:
    """``(K^even, K^odd)`` of the total space; equals its even/odd cohomology."""
    if HZ.top != 4 * n - 1:
        raise TopDegreeMismatch(f"expected top degree {4 * n - 1} for n={n}, got {HZ.top}")
    _check_torsion_free_base(HZ.groups, n)
    return parity_parts(HZ)


def twisted_k(HZ: GradedGroup, n: int, h: int) -> tuple[AbelianGroup, AbelianGroup]:
    """Shorthand for ``assemble_k(run_to_infinity(e2_page(HZ, n), h))``."""
    return assemble_k(run_to_infinity(e2_page(HZ, n), h))

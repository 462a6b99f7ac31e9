"""Spherical T-duality: swap Euler number and flux, compare twisted invariants."""

from __future__ import annotations

from dataclasses import dataclass

from .ahss import twisted_k
from .errors import InadmissibleDualEuler, TorsionBase
from .fgab import AbelianGroup, is_isomorphic
from .graded import twisted_cohomology
from .gysin import BundleWithFlux, admissible_euler, euler_rule, total_space_cohomology

__all__ = [
    "DualityReport",
    "dualize",
    "verify_cohomology_duality",
    "verify_k_duality",
]


@dataclass(frozen=True)
class DualityReport:
    """Even/odd groups of a bundle (lhs) and of its dual (rhs).

    Duality holds when lhs_even = rhs_odd and lhs_odd = rhs_even.
    """

    kind: str  # "cohomology" or "ktheory"
    lhs_even: AbelianGroup
    lhs_odd: AbelianGroup
    rhs_even: AbelianGroup
    rhs_odd: AbelianGroup

    @property
    def ok(self) -> bool:
        return (is_isomorphic(self.lhs_even, self.rhs_odd)
                and is_isomorphic(self.lhs_odd, self.rhs_even))

    @property
    def cohomology_ok(self) -> bool | None:
        return self.ok if self.kind == "cohomology" else None

    @property
    def ktheory_ok(self) -> bool | None:
        return self.ok if self.kind == "ktheory" else None


def dualize(B: BundleWithFlux) -> BundleWithFlux:
    """The dual pair over the same base: Euler number ``h`` and flux ``e``."""
    if not admissible_euler(B.n, B.h):
        raise InadmissibleDualEuler(f"dual Euler number h={B.h}: {euler_rule(B.n)}")
    return BundleWithFlux(B.base, e=B.h, h=B.e)


def verify_cohomology_duality(B: BundleWithFlux) -> DualityReport:
    dual = dualize(B)
    lhs = twisted_cohomology(total_space_cohomology(B), B.h)
    rhs = twisted_cohomology(total_space_cohomology(dual), dual.h)
    return DualityReport("cohomology", *lhs, *rhs)


def verify_k_duality(B: BundleWithFlux) -> DualityReport:
    if not B.base.torsion_free:
        raise TorsionBase(f"{B.base.name} has torsion; twisted K needs a torsion-free base")
    dual = dualize(B)
    lhs = twisted_k(total_space_cohomology(B), B.n, B.h)
    rhs = twisted_k(total_space_cohomology(dual), dual.n, dual.h)
    return DualityReport("ktheory", *lhs, *rhs)

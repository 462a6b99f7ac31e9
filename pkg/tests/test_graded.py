import pytest

from twistk.catalog import CATALOG, get_base
from twistk.errors import DegreeZeroNotZ, TopNotZ
from twistk.fgab import ZERO, Z, AbelianGroup, cyclic, direct_sum
from twistk.graded import BaseManifold, GradedGroup, parity_parts, twisted_cohomology, validate_base
from twistk.gysin import BundleWithFlux, total_space_cohomology


def test_sphere_is_valid():
    assert validate_base(get_base("S6")) == []


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_entries_valid(name):
    assert validate_base(CATALOG[name]) == []


def test_disconnected_base_rejected():
    M = BaseManifold.from_groups("bad", 6, {0: AbelianGroup(2), 6: Z})
    assert validate_base(M) == ["H^0 must be Z"]


def test_betti_asymmetry_rejected():
    M = BaseManifold.from_groups("bad", 6, {0: Z, 2: Z, 6: Z})
    problems = validate_base(M)
    assert len(problems) == 1 and "(2,4)" in problems[0]


def test_missing_fundamental_class():
    M = BaseManifold.from_groups("bad", 6, {0: Z})
    assert validate_base(M) == ["H^6 must be Z"]


def test_torsion_flag():
    assert CATALOG["S2xS4"].torsion_free
    assert not CATALOG["T6Z2"].torsion_free


def test_parity_parts_sphere():
    assert parity_parts(get_base("S6").cohomology) == (AbelianGroup(2), ZERO)


def test_parity_parts_bundle():
    HZ = total_space_cohomology(BundleWithFlux(get_base("S6"), e=6))
    assert parity_parts(HZ) == (direct_sum([Z, cyclic(6)]), Z)


def test_parity_parts_zero():
    assert parity_parts(GradedGroup.zero(5)) == (ZERO, ZERO)


def test_twisted_sphere_bundle():
    HZ = total_space_cohomology(BundleWithFlux(get_base("S6"), e=6))
    assert twisted_cohomology(HZ, 10) == (cyclic(6), cyclic(10))


def test_zero_twist_gives_parity_parts():
    HZ = total_space_cohomology(BundleWithFlux(get_base("S2xS4"), e=4))
    assert twisted_cohomology(HZ, 0) == parity_parts(HZ)


def test_twisted_product_base():
    HZ = total_space_cohomology(BundleWithFlux(get_base("S2xS4"), e=4))
    assert twisted_cohomology(HZ, 10) == (AbelianGroup(2, (4,)), AbelianGroup(2, (10,)))


@pytest.mark.parametrize("name", ["S6", "S2xS4", "CP3", "T6Z2", "S8", "S4xS4"])
@pytest.mark.parametrize("e", [0, 2, 6, -4])
@pytest.mark.parametrize("h", [1, 2, 10, -6])
def test_twisted_rank_and_torsion_rules(name, e, h):
    HZ = total_space_cohomology(BundleWithFlux(get_base(name), e=e))
    even, odd = parity_parts(HZ)
    even_H, odd_H = twisted_cohomology(HZ, h)
    assert even_H.rank == even.rank - 1
    assert odd_H.rank == odd.rank - 1
    assert even_H.torsion == even.torsion
    assert odd_H == direct_sum([AbelianGroup(0, odd.torsion), cyclic(h), AbelianGroup(odd_H.rank)])
    assert twisted_cohomology(HZ, -h) == (even_H, odd_H)


def test_twisted_preconditions():
    with pytest.raises(DegreeZeroNotZ):
        twisted_cohomology(GradedGroup.from_mapping(5, {0: AbelianGroup(2), 5: Z}), 1)
    with pytest.raises(TopNotZ):
        twisted_cohomology(GradedGroup.from_mapping(5, {0: Z}), 1)


def test_graded_group_shape():
    with pytest.raises(ValueError):
        GradedGroup(3, (Z,))
    G = GradedGroup.from_mapping(4, {0: Z, 4: Z})
    assert G[7] == ZERO and G[-1] == ZERO
    assert G.nonzero() == {0: Z, 4: Z}

import pytest
from hypothesis import given, strategies as st

from wonderkit import WonderkitError, build_root_system
from wonderkit.torus import (boundary_components, cone_of_weights, cones_equal,
                             exponent_matrix, in_cone, monoid_member, normality_check_A,
                             surviving_rows, torus_orbit_poset, unimodal_member)


def test_a3_lambda2_monomials():
    em = exponent_matrix(build_root_system("A3"), (0, 1, 0))
    mons = em.monomials()
    assert mons[0] == "1"
    assert set(mons[1:]) == {"z2", "z1*z2", "z2*z3", "z1*z2*z3", "z1*z2^2*z3"}


def test_a2_lambda1_rows():
    em = exponent_matrix(build_root_system("A2"), (1, 0))
    assert set(em.rows) == {(0, 0), (1, 0), (1, 1)}


def test_highest_row_is_zero(small_rs):
    for k in small_rs.nodes:
        em = exponent_matrix(small_rs, small_rs.fundamental_weight(k))
        assert em.rows[0] == (0,) * small_rs.rank


def test_boundary_components():
    r = boundary_components(build_root_system("A3"), 2)
    assert r.components == [1, 3] and not r.k_is_end
    assert r.listed_count == 2 and r.stated_count == 1 and not r.consistent
    assert boundary_components(build_root_system("A3"), 1).components == [3]
    assert boundary_components(build_root_system("A2"), 1).components == [2]
    d4 = boundary_components(build_root_system("D4"), 2)
    assert len(d4.end_nodes) == 3


def test_cones():
    rs = build_root_system("A2")
    assert cones_equal(rs, (1, 1), (2, 1))
    assert cones_equal(rs, (1, 0), (1, 0))
    assert not cones_equal(rs, (1, 0), (1, 1))


def test_in_cone_basic():
    gens = [(1, 0), (1, 1)]
    assert in_cone((3, 1), gens)
    assert not in_cone((0, 1), gens)
    assert in_cone((0, 0), gens)


def test_cone_generators_are_weight_differences():
    rs = build_root_system("B2")
    gens = cone_of_weights(rs, (1, 1))
    assert all(all(x >= 0 for x in g) for g in gens)


def test_normality_examples():
    assert normality_check_A(3, 2, 6)
    a2 = build_root_system("A2")
    assert monoid_member(a2, 1, (0, 0))
    assert not unimodal_member(2, 1, (0, 1))
    assert not monoid_member(a2, 1, (0, 1))


@pytest.mark.parametrize("l", range(1, 5))
def test_normality_all_k(l):
    for k in range(1, l + 1):
        assert normality_check_A(l, k, 8)


def test_normality_type_guard():
    with pytest.raises(WonderkitError):
        monoid_member(build_root_system("B2"), 1, (1, 0))
    with pytest.raises(WonderkitError):
        normality_check_A(3, 4, 3)


@given(st.integers(1, 4), st.data())
def test_monoid_membership_matches_inequalities(l, data):
    k = data.draw(st.integers(1, l))
    a = tuple(data.draw(st.lists(st.integers(0, 3), min_size=l, max_size=l)))
    rs = build_root_system(f"A{l}")
    assert monoid_member(rs, k, a) == unimodal_member(l, k, a)


def test_orbit_poset_a3():
    rs = build_root_system("A3")
    op = torus_orbit_poset(rs, (0, 1, 0))
    by_J = {}
    for idx, (Js, _) in enumerate(op.classes):
        for J in Js:
            by_J[frozenset(J)] = set(op.surviving_monomials(idx))
    assert by_J[frozenset({1})] == {"1", "z2", "z2*z3"}
    assert len(by_J[frozenset()]) == 6
    assert by_J[frozenset({1, 2, 3})] == {"1"}


def test_orbit_poset_covers_are_inclusions():
    op = torus_orbit_poset(build_root_system("B3"), (1, 0, 1))
    for a, b in op.covers:
        assert op.classes[a][1] < op.classes[b][1]


def test_surviving_rows_monotone():
    em = exponent_matrix(build_root_system("A3"), (1, 1, 1))
    assert surviving_rows(em, {1}) >= surviving_rows(em, {1, 2})

from math import comb

import pytest
from hypothesis import given, strategies as st

from wonderkit import WonderkitError, build_root_system
from wonderkit.rootsys import parse_type

ROOT_COUNTS = {  # |Phi| from the classical closed forms
    "A1": 2, "A4": 20, "A8": 72, "B3": 18, "B4": 32, "C3": 18, "C5": 50, "D4": 24,
    "D5": 40, "E6": 72, "E7": 126, "E8": 240, "F4": 48, "G2": 12,
}
DETS = {"A1": 2, "A4": 5, "B3": 2, "C4": 2, "D4": 4, "D5": 4, "E6": 3, "E7": 2, "E8": 1,
        "F4": 1, "G2": 1}


@pytest.mark.parametrize("t,n", sorted(ROOT_COUNTS.items()))
def test_root_count(t, n):
    rs = build_root_system(t)
    assert len(rs.roots) == n
    assert len(rs.positive_roots) == n // 2
    assert rs.dim_group == n + rs.rank


def test_g2_roots():
    rs = build_root_system("G2")
    assert len(rs.roots) == 12 and len(rs.positive_roots) == 6


def test_a1_roots():
    assert set(build_root_system("A1").roots) == {(1,), (-1,)}


def test_b3_matches_2l_squared():
    assert len(build_root_system("B3").roots) == 2 * 3 ** 2


@pytest.mark.parametrize("t,d", sorted(DETS.items()))
def test_det_cartan(t, d):
    assert build_root_system(t).det_cartan == d


def test_heights():
    a2 = build_root_system("A2")
    assert a2.height((1, 0)) == 1
    assert a2.highest_root == (1, 1) and a2.height(a2.highest_root) == 2
    g2 = build_root_system("G2")
    assert g2.highest_root == (3, 2) and g2.height(g2.highest_root) == 5


def test_g2_highest_root_is_max_height_brute_force():
    rs = build_root_system("G2")
    assert max(rs.positive_roots, key=sum) == rs.highest_root


def test_phi_minus_of():
    rs = build_root_system("A2")
    assert set(rs.phi_minus_of({2})) == {(-1, 0)}
    assert set(rs.phi_minus_of(set())) == set(rs.negative_roots)
    assert set(rs.phi_minus_of({1, 2})) == set()
    assert set(rs.phi_plus_of({2})) == {(1, 0)}


def test_end_nodes_and_components():
    assert rs_ends("A3") == {1, 3}
    assert len(rs_ends("D4")) == 3
    assert set(build_root_system("A5").comp_without({3}, 1)) == {1, 2}


def rs_ends(t):
    return set(build_root_system(t).dynkin_end_nodes())


def test_parse_type_variants():
    assert parse_type("B2xA1") == [("B", 2), ("A", 1)]
    assert parse_type("b2*a1") == [("B", 2), ("A", 1)]
    assert parse_type([("g", 2)]) == [("G", 2)]
    rs = build_root_system("B2xA1")
    assert rs.rank == 3 and len(rs.roots) == 10


@pytest.mark.parametrize("bad", ["", "Q3", "B1", "C1", "D3", "E5", "F3", "G3", "A0", "A-1"])
def test_parse_errors(bad):
    with pytest.raises(WonderkitError):
        build_root_system(bad)


def test_g2_short_root_is_alpha1():
    rs = build_root_system("G2")
    assert rs.root_lengths[0] < rs.root_lengths[1]


def test_rho_is_sum_of_fundamental_weights(small_rs):
    assert tuple(small_rs.rho) == (1,) * small_rs.rank


@given(st.sampled_from(["A3", "B3", "C3", "D4", "F4", "G2", "A2xB2"]), st.data())
def test_roots_closed_under_reflections(t, data):
    rs = build_root_system(t)
    r = data.draw(st.sampled_from(list(rs.roots)))
    i = data.draw(st.integers(1, rs.rank))
    s = rs.reflect(r, i)
    assert s in rs.root_set
    assert rs.reflect(s, i) == r


@given(st.sampled_from(["A3", "B3", "C3", "F4", "G2"]), st.data())
def test_weight_root_conversion_roundtrip(t, data):
    rs = build_root_system(t)
    r = data.draw(st.sampled_from(list(rs.roots)))
    assert rs.to_root(rs.to_weight(r)) == tuple(r)


def test_fundamental_weights_dual_to_coroots(small_rs):
    for i in small_rs.nodes:
        lam = small_rs.fundamental_weight(i)
        assert tuple(lam) == tuple(int(j == i) for j in small_rs.nodes)


def test_type_a_root_count_formula():
    for l in range(1, 9):
        assert len(build_root_system(f"A{l}").positive_roots) == comb(l + 1, 2)

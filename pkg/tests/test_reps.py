from collections import Counter
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from wonderkit import WonderkitError, build_root_system, weyl_group
from wonderkit.reps import (Character, decompose_check, dim_weyl, dominant_conjugate,
                            exterior_power, is_regular, lambda_minus_mu_coords,
                            negate_system, support, weight_poset, weight_system, weyl_orbit)


def test_a2_adjoint():
    rs = build_root_system("A2")
    ws = weight_system(rs, (1, 1))
    assert ws.dim == 8 and ws.mult((0, 0)) == 2


def test_a3_lambda2_brute_force():
    # weights of wedge^2 of the standard rep of sl4: e_i + e_j, i < j
    rs = build_root_system("A3")
    ws = weight_system(rs, (0, 1, 0))
    assert ws.dim == comb(4, 2) and set(ws.entries.values()) == {1}
    std = weight_system(rs, (1, 0, 0))
    pairs = Counter(tuple(a + b for a, b in zip(x, y))
                    for x, y in combinations(std.character().elements(), 2))
    assert pairs == Counter(ws.entries)


def test_zero_weight(small_rs):
    assert weight_system(small_rs, (0,) * small_rs.rank).dim == 1


@pytest.mark.parametrize("l", range(1, 7))
def test_type_a_fundamental_dims(l):
    rs = build_root_system(f"A{l}")
    for k in rs.nodes:
        assert dim_weyl(rs, rs.fundamental_weight(k)) == comb(l + 1, k)


def test_g2_dims():
    rs = build_root_system("G2")
    assert dim_weyl(rs, (1, 0)) == 7 and dim_weyl(rs, (0, 1)) == 14


def test_known_exceptional_dims():
    f4 = build_root_system("F4")
    assert sorted(dim_weyl(f4, f4.fundamental_weight(i)) for i in f4.nodes) == [26, 52, 273, 1274]
    e6 = build_root_system("E6")
    assert dim_weyl(e6, e6.fundamental_weight(1)) == 27


def test_decompositions():
    g2 = build_root_system("G2")
    v1, v2 = weight_system(g2, (1, 0)), weight_system(g2, (0, 1))
    assert decompose_check([exterior_power(v1, 2)], [v1, v2])
    c3 = build_root_system("C3")
    u1 = weight_system(c3, (1, 0, 0))
    assert decompose_check([exterior_power(u1, 2)],
                           [weight_system(c3, (0, 0, 0)), weight_system(c3, (0, 1, 0))])
    assert decompose_check([v1], [v1])
    assert not decompose_check([v1], [v2])


def test_decompose_rejects_mixed_systems():
    a = weight_system(build_root_system("A2"), (1, 0))
    b = weight_system(build_root_system("G2"), (1, 0))
    with pytest.raises(WonderkitError):
        decompose_check([a], [b])


def test_lambda_minus_mu_coords():
    rs = build_root_system("A3")
    ws = weight_system(rs, (0, 1, 0))
    assert lambda_minus_mu_coords(ws, (0, -1, 0)) == (1, 2, 1)
    assert lambda_minus_mu_coords(ws, (0, 1, 0)) == (0, 0, 0)


def test_a2_standard_poset_is_a_chain():
    ws = weight_system(build_root_system("A2"), (1, 0))
    covers = weight_poset(ws)
    assert len(ws.entries) == 3 and len(covers) == 2


def test_weight_poset_covers_by_brute_force():
    rs = build_root_system("B2")
    ws = weight_system(rs, (1, 1))
    coords = {m: lambda_minus_mu_coords(ws, m) for m in ws.entries}
    lt = lambda a, b: a != b and all(x >= y for x, y in zip(coords[a], coords[b]))  # noqa: E731
    brute = {(a, b) for a in ws.entries for b in ws.entries
             if lt(a, b) and not any(lt(a, c) and lt(c, b) for c in ws.entries)}
    assert set(weight_poset(ws)) == brute


def test_support_and_regularity():
    assert support((0, 1, 0)) == {2} and not is_regular((0, 1, 0))
    assert is_regular((1, 1, 1))
    assert support((0, 0)) == frozenset()


def test_dual_of_self_dual_g2():
    ws = weight_system(build_root_system("G2"), (1, 0))
    assert negate_system(ws) == ws.character()


def test_dual_of_a2_standard_is_other_fundamental():
    rs = build_root_system("A2")
    assert negate_system(weight_system(rs, (1, 0))) == weight_system(rs, (0, 1)).character()


def test_non_dominant_rejected():
    with pytest.raises(WonderkitError):
        weight_system(build_root_system("A2"), (1, -1))


@given(st.sampled_from(["A2", "A3", "B2", "B3", "C3", "G2"]), st.data())
def test_multiplicities_are_w_invariant(t, data):
    rs = build_root_system(t)
    lam = tuple(data.draw(st.integers(0, 2)) for _ in rs.nodes)
    ws = weight_system(rs, lam)
    assert sum(ws.entries.values()) == dim_weyl(rs, lam)
    W = weyl_group(rs)
    w = data.draw(st.sampled_from(W.enumerate_group()))
    for mu, m in ws.entries.items():
        assert ws.mult(W.act_on_weight(w, mu)) == m
    for mu in ws.dominant_weights:
        assert set(weyl_orbit(rs, mu)) <= set(ws.entries)


@given(st.sampled_from(["A3", "B3", "G2", "C3"]), st.data())
def test_dominant_conjugate_is_in_orbit(t, data):
    rs = build_root_system(t)
    mu = tuple(data.draw(st.integers(-3, 3)) for _ in rs.nodes)
    d = dominant_conjugate(rs, mu)
    assert all(x >= 0 for x in d)
    assert mu in weyl_orbit(rs, d)


def test_exterior_power_dimensions():
    rs = build_root_system("C3")
    v = weight_system(rs, (1, 0, 0))
    for k in range(7):
        assert exterior_power(v, k).dim == comb(6, k)
    assert isinstance(exterior_power(v, 0), Character)

from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from wonderkit import CapExceeded, build_root_system, weyl_group
from wonderkit.weyl import subword_bruhat_set

from conftest import element_from_word


def words(W, ws):
    return {W.reduced_word(w) for w in ws}


def test_g2_reflection_images():
    rs = build_root_system("G2")
    W = weyl_group(rs)
    assert W.s(2)((1, 0)) == (1, 1)
    assert W.s(1)((0, 1)) == (3, 1)


def test_simple_reflection_negates(small_rs):
    W = weyl_group(small_rs)
    for i in small_rs.nodes:
        a = small_rs.unit(i)
        assert W.s(i)(a) == tuple(-x for x in a)


@pytest.mark.parametrize("t,n", [("G2", 12), ("A2", 6), ("B3", 48), ("F4", 1152),
                                 ("D4", 192), ("A1xA1", 4)])
def test_group_orders(t, n):
    rs = build_root_system(t)
    assert len(weyl_group(rs).enumerate_group()) == n == rs.weyl_order()


def test_a8_order_is_9_factorial():
    W = weyl_group(build_root_system("A8"))
    assert len(W.enumerate_group()) == factorial(9)


def test_cap_exceeded():
    W = weyl_group(build_root_system("A4"))
    with pytest.raises(CapExceeded):
        W.enumerate_group(cap=10)


def test_enumeration_order_and_length_truncation():
    W = weyl_group(build_root_system("B3"))
    els = W.enumerate_group()
    keys = [(W.length(w), W.reduced_word(w)) for w in els]
    assert keys == sorted(keys)
    trunc = W.enumerate_up_to_length(3)
    assert trunc == [w for w in els if W.length(w) <= 3]


def test_support():
    rs = build_root_system("A2")
    W = weyl_group(rs)
    assert W.support(W.identity) == frozenset()
    assert W.support(W.from_word([2, 1])) == {1, 2}


def test_support_lemma_b3():
    rs = build_root_system("B3")
    W = weyl_group(rs)
    for w in W.enumerate_group():
        for i in rs.nodes:
            lam = rs.fundamental_weight(i)
            assert (W.act_on_weight(w, lam) != lam) == (i in W.support(w))


def test_min_coset_reps_a2_via_complement_generators():
    rs = build_root_system("A2")
    W = weyl_group(rs)
    # J = {1} in the pieces convention means W_J = <s2>
    assert words(W, W.min_coset_reps({2})) == {(), (1,), (2, 1)}
    assert words(W, W.min_coset_reps({1, 2})) == {()}
    assert len(W.min_coset_reps(set())) == 6


def test_min_coset_reps_brute_force_s3():
    # permutation model oracle: cosets w<s2> in S3, pick the element of least length
    rs = build_root_system("A2")
    W = weyl_group(rs)
    els = W.enumerate_group()
    s2 = W.s(2)
    cosets = {}
    for w in els:
        key = frozenset({w.cols, W.multiply(w, s2).cols})
        cosets.setdefault(key, []).append(w)
    mins = {min(c, key=W.length).cols for c in cosets.values()}
    assert mins == {w.cols for w in W.min_coset_reps({2})}


def test_g2_double_cosets():
    W = weyl_group(build_root_system("G2"))
    assert [W.reduced_word(w) for w in W.min_double_coset_reps({1})] == \
        [(), (2,), (2, 1, 2), (2, 1, 2, 1, 2)]
    assert [W.reduced_word(w) for w in W.min_double_coset_reps({2})] == \
        [(), (1,), (1, 2, 1), (1, 2, 1, 2, 1)]
    assert len(W.min_double_coset_reps(set())) == 12


def test_double_coset_count_brute_force_b3():
    W = weyl_group(build_root_system("B3"))
    gens = {1, 3}
    P = W.parabolic_subgroup(gens)
    seen, count = set(), 0
    for w in W.enumerate_group():
        if w.cols in seen:
            continue
        count += 1
        for u in P:
            for v in P:
                seen.add(W.multiply(W.multiply(u, w), v).cols)
    assert count == len(W.min_double_coset_reps(gens))


def test_bruhat_examples():
    g2 = weyl_group(build_root_system("G2"))
    assert g2.bruhat_leq(g2.s(1), g2.from_word([2, 1]))
    a2 = weyl_group(build_root_system("A2"))
    assert not a2.bruhat_leq(a2.s(1), a2.s(2))
    for w in a2.enumerate_group():
        assert a2.bruhat_leq(a2.identity, w)


@pytest.mark.parametrize("t", ["A3", "G2", "B3", "A1xA1"])
def test_bruhat_matches_subword_oracle(t):
    W = weyl_group(build_root_system(t))
    els = W.enumerate_group()
    for v in els:
        below = subword_bruhat_set(W, v)
        for u in els:
            assert W.bruhat_leq(u, v) == (u.cols in below)



def test_type_a_length_equals_inversions():
    l = 4
    W = weyl_group(build_root_system(f"A{l}"))
    n = l + 1
    # s_i swaps positions i, i+1; build each permutation from a reduced word
    lengths = {}
    for w in W.enumerate_group():
        p = list(range(n))
        for i in W.reduced_word(w):
            p[i - 1], p[i] = p[i], p[i - 1]
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])
        assert inv == W.length(w)
        lengths[tuple(p)] = W.length(w)
    assert set(lengths) == set(permutations(range(n)))


@given(st.sampled_from(["A3", "B3", "C3", "G2", "D4"]), st.lists(st.integers(0, 7), max_size=12),
       st.lists(st.integers(0, 7), max_size=12))
def test_group_axioms(t, w1, w2):
    rs = build_root_system(t)
    W = weyl_group(rs)
    u, v = element_from_word(rs, w1), element_from_word(rs, w2)
    assert W.multiply(u, W.inverse(u)) == W.identity
    assert W.length(W.inverse(u)) == W.length(u)
    assert W.length(W.multiply(u, v)) <= W.length(u) + W.length(v)
    assert W.from_word(W.reduced_word(u)) == u
    assert len(W.reduced_word(u)) == W.length(u)
    # acting is a homomorphism on roots
    for r in rs.simple_roots:
        assert W.multiply(u, v)(r) == u(v(r))


@given(st.sampled_from(["A3", "B3", "G2"]), st.lists(st.integers(0, 7), max_size=10))
def test_reduced_word_is_lex_min(t, w):
    rs = build_root_system(t)
    W = weyl_group(rs)
    x = element_from_word(rs, w)
    word = W.reduced_word(x)
    if word:
        assert word[0] == min(W.left_descents(x))


def test_longest_element():
    for t, n in [("A3", 6), ("B3", 9), ("G2", 6), ("D4", 12)]:
        rs = build_root_system(t)
        W = weyl_group(rs)
        w0 = W.longest_element()
        assert W.length(w0) == n == len(rs.positive_roots)
        assert all(not rs.is_positive(w0(r)) for r in rs.positive_roots)

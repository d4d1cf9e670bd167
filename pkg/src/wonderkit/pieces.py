"""G-stable pieces S_J^w of the wonderful compactification.

Index convention used throughout this module: for J a subset of I,
W_J is generated by {s_i : i not in J} and W^J is the set of minimal
left-coset representatives for W/W_J, i.e. w(alpha_i) > 0 for i not in J.
Translation to the generator-set API of :mod:`wonderkit.weyl` happens only
in :func:`coset_gens` and :func:`in_W_J`.

Piece dimension is taken to be dim G - l(w) - |J|.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import CapExceeded, ConventionError, default_cap
from .rootsys import RootSystem
from .weyl import WeylElement, WeylGroup, weyl_group


def coset_gens(rs: RootSystem, J) -> frozenset:
    """Generators of W_J: the complement of J."""
    return frozenset(rs.nodes) - frozenset(J)


def subsets(rs: RootSystem) -> list:
    nodes = list(rs.nodes)
    out = []
    for r in range(len(nodes) + 1):
        out.extend(frozenset(c) for c in combinations(nodes, r))
    return out


def _J_key(J):
    return (len(J), tuple(sorted(J)))


def in_W_J(rs: RootSystem, J, w: WeylElement) -> bool:
    return weyl_group(rs).is_min_coset_rep(w, coset_gens(rs, J))


def _check(rs, J, w):
    if not in_W_J(rs, J, w):
        raise ConventionError(f"{w!r} is not in W^J for J={sorted(J)}")


def fixes_fundamental(rs: RootSystem, w: WeylElement, k: int) -> bool:
    m = rs.fundamental_weight(k)
    return weyl_group(rs).act_on_weight(w, m) == m


@dataclass(frozen=True)
class StablePiece:
    J: frozenset
    w: WeylElement
    dim: int

    def as_row(self, rs: RootSystem) -> dict:
        W = weyl_group(rs)
        return {
            "J": sorted(self.J),
            "w_word": list(W.reduced_word(self.w)),
            "length": W.length(self.w),
            "dim": self.dim,
            "in_A": in_A(rs, self.J, self.w),
            "in_A_circ": in_A_circ(rs, self.J, self.w),
        }


def piece_dim(rs: RootSystem, J, w: WeylElement) -> int:
    _check(rs, J, w)
    return rs.dim_group - weyl_group(rs).length(w) - len(J)


def make_piece(rs: RootSystem, J, w: WeylElement) -> StablePiece:
    J = frozenset(J)
    return StablePiece(J, w, piece_dim(rs, J, w))


def in_A(rs: RootSystem, J, w: WeylElement) -> bool:
    """Every k outside J has ht(w alpha_k) > 1 or w lambda_k != lambda_k."""
    _check(rs, J, w)
    for k in coset_gens(rs, J):
        if sum(w(rs.unit(k))) > 1:
            continue
        if not fixes_fundamental(rs, w, k):
            continue
        return False
    return True


def in_A_circ(rs: RootSystem, J, w: WeylElement) -> bool:
    return in_A(rs, J, w) and weyl_group(rs).length(w) == rs.rank - len(J)


def need_set(rs: RootSystem, w: WeylElement) -> frozenset:
    """Smallest J with w in W^J and w in A_J: (w, J) is a central-fiber piece iff need_set <= J.

    Right descents must lie in J; so must every k with ht(w alpha_k) = 1
    outside supp(w) (there w fixes lambda_k).
    """
    W = weyl_group(rs)
    sup = W.support(w)
    out = set(W.right_descents(w))
    for k in rs.nodes:
        if k not in sup and sum(w.cols[k - 1]) <= 1:
            out.add(k)
    return frozenset(out)


def all_pieces(rs: RootSystem, cap: int | None = None) -> list:
    """Every (J, w in W^J), ordered by J then by w."""
    W = weyl_group(rs)
    out = []
    for J in sorted(subsets(rs), key=_J_key):
        for w in W.min_coset_reps(coset_gens(rs, J), cap=cap):
            out.append(make_piece(rs, J, w))
    return out


def _pool(W: WeylGroup, max_length, cap):
    if max_length is None:
        return W.enumerate_group(cap)
    return W.enumerate_up_to_length(max_length, cap)


def central_fiber_pieces(rs: RootSystem, max_length: int | None = None,
                         cap: int | None = None) -> list:
    """All pieces (J, w) with w in A_J, ordered by J then by w."""
    W = weyl_group(rs)
    nodes = frozenset(rs.nodes)
    by_J = {}
    for w in _pool(W, max_length, cap):
        need = need_set(rs, w)
        free = sorted(nodes - need)
        for r in range(len(free) + 1):
            for extra in combinations(free, r):
                J = need | frozenset(extra)
                by_J.setdefault(J, []).append(w)
    out = []
    for J in sorted(by_J, key=_J_key):
        for w in by_J[J]:
            out.append(StablePiece(J, w, rs.dim_group - W.length(w) - len(J)))
    return out


def i_G(rs: RootSystem, cap: int | None = None) -> int:
    """Sum over J of |A_J^o|, scanning only l(w) <= rank."""
    W = weyl_group(rs)
    l = rs.rank
    total = 0
    for w in W.enumerate_up_to_length(l, cap):
        need = len(need_set(rs, w))
        extra = l - W.length(w) - need
        if extra >= 0:
            total += comb(l - need, extra)
    return total


def i_G_full(rs: RootSystem, cap: int | None = None) -> int:
    """Same count from a full central-fiber scan (cross-check)."""
    W = weyl_group(rs)
    return sum(1 for p in central_fiber_pieces(rs, cap=cap)
               if W.length(p.w) == rs.rank - len(p.J))


def maximal_pieces(rs: RootSystem, cap: int | None = None) -> list:
    """Arg-max of piece_dim over the central fiber.

    Dimension is maximised by minimising l(w) + |J|, so J = need_set(w) and
    only l(w) <= rank matters because (I, e) already has cost rank.
    """
    W = weyl_group(rs)
    best, out = None, []
    for w in W.enumerate_up_to_length(rs.rank, cap):
        J = need_set(rs, w)
        cost = W.length(w) + len(J)
        if best is None or cost < best:
            best, out = cost, [(J, w)]
        elif cost == best:
            out.append((J, w))
    out.sort(key=lambda p: (_J_key(p[0]), W.reduced_word(p[1])))
    return [StablePiece(J, w, rs.dim_group - best) for J, w in out]


def m_G(rs: RootSystem, cap: int | None = None) -> int:
    return maximal_pieces(rs, cap)[0].dim


def in_B(rs: RootSystem, J, K, w: WeylElement) -> bool:
    _check(rs, J, w)
    J, K = frozenset(J), frozenset(K)
    nodes = frozenset(rs.nodes)
    moved = lambda k: not fixes_fundamental(rs, w, k)  # noqa: E731
    fixes_root = lambda k: w(rs.unit(k)) == rs.unit(k)  # noqa: E731
    for k in K - J:
        if not (moved(k) or not fixes_root(k)):
            return False
    for k in J - K:
        if not moved(k):
            return False
    for k in nodes - (J | K):
        comp = rs.comp_without(K, k)
        if J & comp:
            if not moved(k):
                return False
        elif not moved(k):
            if not all(fixes_root(i) for i in comp):
                return False
            linked = {j for j in K - J if rs.adjacency[j] & comp}
            if any(fixes_root(j) for j in linked):
                return False
    return True


def nilpotent_cone_pieces(rs: RootSystem, lam, cap: int | None = None) -> list:
    sup_l = frozenset(i + 1 for i, x in enumerate(lam) if x)
    W = weyl_group(rs)
    return [p for p in all_pieces(rs, cap) if W.support(p.w) & sup_l]


def steinberg_boundary_pieces(rs: RootSystem, cap: int | None = None) -> list:
    W = weyl_group(rs)
    nodes = frozenset(rs.nodes)
    return [p for p in all_pieces(rs, cap) if W.support(p.w) == nodes]


def semistable_pieces(rs: RootSystem) -> list:
    W = weyl_group(rs)
    return [make_piece(rs, J, W.identity) for J in sorted(subsets(rs), key=_J_key)]


def closure_leq(rs: RootSystem, p1: StablePiece, p2: StablePiece,
                z_cap: int | None = None) -> bool:
    """S_{J1}^{w1} lies in the closure of S_{J2}^{w2}."""
    if not p2.J <= p1.J:
        return False
    W = weyl_group(rs)
    z_cap = default_cap() if z_cap is None else z_cap
    for z in W.parabolic_subgroup(coset_gens(rs, p2.J), cap=z_cap):
        conj = W.multiply(W.multiply(W.inverse(z), p2.w), z)
        if W.bruhat_leq(conj, p1.w):
            return True
    return False


def closure_maximal(rs: RootSystem, pieces, z_cap: int | None = None) -> list:
    """Pieces not contained in the closure of a different piece of the list."""
    out = []
    for p in pieces:
        if not any(q != p and closure_leq(rs, p, q, z_cap) for q in pieces):
            out.append(p)
    return out


@dataclass
class ComponentReport:
    witnesses: list          # (k, [words], [dims])
    all_nonempty: bool
    component_dims: list     # dims of closure-maximal central-fiber pieces
    not_pure: bool
    stated_dims: list        # (k, dim the closed-form claim gives)


def component_witnesses(rs: RootSystem, cap: int | None = None) -> ComponentReport:
    """Bruhat-minimal members of A_{k} for each k, and the dims of closure-maximal pieces."""
    W = weyl_group(rs)
    wits = []
    stated = []
    ends = rs.dynkin_end_nodes()
    a = len(ends)
    reg = rs.dim_group - rs.rank
    for k in rs.nodes:
        J = frozenset({k})
        A = [w for w in W.min_coset_reps(coset_gens(rs, J), cap=cap) if in_A(rs, J, w)]
        minimal = [w for w in A if not any(u != w and W.bruhat_leq(u, w) for u in A)]
        wits.append((k, [W.reduced_word(w) for w in minimal],
                     [piece_dim(rs, J, w) for w in minimal]))
        stated.append((k, reg + a - (1 if k in ends else 0)))
    fiber = central_fiber_pieces(rs, cap=cap)
    tops = closure_maximal(rs, fiber)
    dims = sorted({p.dim for p in tops})
    return ComponentReport(wits, all(w[1] for w in wits), dims, len(dims) > 1, stated)

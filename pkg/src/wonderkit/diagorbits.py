"""Diagonal orbits in boundary G x G-orbits.

Orbits in the base double flag variety G/P x G/P^- are indexed by minimal
double-coset representatives w of <s_i : i in Levi>.  Their dimension is a
root count; the diagonal orbits in the fibre are then read off from the
images of the simple roots of the Levi under w.

All functions here take the *Levi* node set (generators of W_P) directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConventionError, WonderkitError
from .rootsys import RootSystem
from .weyl import WeylElement, WeylGroup, rational_rank, weyl_group

DIAGONAL = "DiagonalImage"
BOREL = "BorelImage"

DIAG_DIAG = "DiagDiag"
DIAG_BOREL = "DiagBorel"
SWAP_DIAG = "SwapDiag"
SWAP_BOREL = "SwapBorel"
BOREL_BOREL = "BorelBorel"

# fibre dimensions inside PGL_2 for the minuscule families
_FIBRE = {"A_w": 2, "U_w": 2, "I_w": 0, "M_w": 3, "N_w": 2}


@dataclass(frozen=True)
class Family:
    tag: str
    dim: int
    regular: bool


@dataclass
class OrbitClass:
    nodes: tuple
    w_word: tuple
    length: int
    kind: str
    base_dim: int
    families: list = field(default_factory=list)
    rank: int | None = None

    @property
    def regular(self) -> bool:
        return any(f.regular for f in self.families)

    def as_row(self) -> dict:
        row = {
            "nodes": list(self.nodes),
            "w_word": list(self.w_word),
            "length": self.length,
            "kind": self.kind,
            "base_dim": self.base_dim,
            "families": [{"tag": f.tag, "dim": f.dim, "regular": f.regular}
                         for f in self.families],
            "regular": self.regular,
        }
        if self.rank is not None:
            row["rank"] = self.rank
        return row


def regular_orbit_dim(rs: RootSystem) -> int:
    return rs.dim_group - rs.rank


def _require_double_rep(W: WeylGroup, levi, w: WeylElement):
    if not W.is_min_double_coset_rep(w, levi):
        raise ConventionError(
            f"{w!r} is not a minimal double-coset representative for generators {sorted(levi)}")


def base_orbit_dim(rs: RootSystem, levi, w: WeylElement) -> int:
    """Dimension of the diagonal G-orbit through (P, wP^-) in G/P x G/P^-.

    ``levi`` is the set of simple roots of the Levi factor of P.
    """
    levi = frozenset(levi)
    W = weyl_group(rs)
    _require_double_rep(W, levi, w)
    J = frozenset(rs.nodes) - levi
    pm_J = set(rs.phi_minus_of(J))
    pp_J = set(rs.phi_plus_of(J))
    outside = [a for a in rs.negative_roots if a not in pm_J]
    winv = W.inverse(w)
    target_ok = 0
    for a in outside:
        b = W.act_on_root(winv, a)
        if W.is_negative(b) or b in pp_J:
            target_ok += 1
    return len(outside) + target_ok


def stabilizer_orbit_dim(rs: RootSystem, levi, w: WeylElement) -> int:
    """Independent check: dim G - dim(P cap w P^- w^-1) by root enumeration."""
    levi = frozenset(levi)
    W = weyl_group(rs)
    J = frozenset(rs.nodes) - levi
    p_roots = set(rs.positive_roots) | set(rs.phi_minus_of(J))
    pminus_roots = set(rs.negative_roots) | set(rs.phi_plus_of(J))
    winv = W.inverse(w)
    inter = sum(1 for b in p_roots if W.act_on_root(winv, b) in pminus_roots)
    return rs.dim_group - (rs.rank + inter)


def minuscule_classify(rs: RootSystem, i: int, w: WeylElement) -> OrbitClass:
    W = weyl_group(rs)
    base = base_orbit_dim(rs, {i}, w)
    reg = regular_orbit_dim(rs)
    a_i = rs.unit(i)
    if w(a_i) == a_i:
        kind, tags = DIAGONAL, ("A_w", "U_w", "I_w")
    else:
        kind, tags = BOREL, ("M_w", "N_w")
    fams = []
    for t in tags:
        d = base + _FIBRE[t]
        fams.append(Family(t, d, d == reg))
    return OrbitClass((i,), W.reduced_word(w), W.length(w), kind, base, fams)


def closed_form_dims(rs: RootSystem, kind: str, length: int) -> dict:
    """Family dimensions as closed functions of (dim G, l, l(w))."""
    g, l = rs.dim_group, rs.rank
    if kind == DIAGONAL:
        return {"A_w": g - l - length, "U_w": g - l - length, "I_w": g - l - 2 - length}
    return {"M_w": g - l + 1 - length, "N_w": g - l - length}


def two_root_classify(rs: RootSystem, i: int, j: int, w: WeylElement) -> OrbitClass:
    if i == j:
        raise WonderkitError("two_root_classify needs two distinct nodes")
    for n in (i, j):
        if not 1 <= n <= rs.rank:
            raise WonderkitError(f"node {n} out of range")
    if rs.cartan[i - 1][j - 1] != 0:
        raise WonderkitError(
            f"nodes {i} and {j} are adjacent: Levi of type A2/B2/G2 is not supported")
    W = weyl_group(rs)
    base = base_orbit_dim(rs, {i, j}, w)
    ai, aj = rs.unit(i), rs.unit(j)
    wi, wj = w(ai), w(aj)
    pair = {ai, aj}
    rank = None
    if wi == ai and wj == aj:
        kind = DIAG_DIAG
    elif wi == aj and wj == ai:
        kind = SWAP_DIAG
    elif (wi == ai and wj not in pair) or (wj == aj and wi not in pair):
        kind = DIAG_BOREL
    elif (wi == aj and wj not in pair) or (wj == ai and wi not in pair):
        kind = SWAP_BOREL
    else:
        kind = BOREL_BOREL
        winv = W.inverse(w)
        rank = rational_rank([ai, aj, winv(ai), winv(aj)])
    return OrbitClass((i, j), W.reduced_word(w), W.length(w), kind, base, [], rank)


def g2_table(rs: RootSystem | None = None) -> list:
    """Classification of every minimal representative for both minuscule nodes of G2."""
    from .rootsys import build_root_system

    rs = rs or build_root_system("G2")
    W = weyl_group(rs)
    rows = []
    for i in rs.nodes:
        for w in W.min_double_coset_reps({i}):
            rows.append(minuscule_classify(rs, i, w))
    return rows

"""Combinatorics of the closure of the maximal torus in P(End V(lambda)).

Rows of the exponent matrix are the simple-root coordinates of lambda - mu;
the chart C^l -> P(End V(lambda)) sends z to the diagonal of monomials
z^{n_mu}.  Orbit strata, boundary components and saturation are all
handled through these exponent vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import WonderkitError
from .reps import WeightSystem, weight_system
from .rootsys import RootSystem
from .weyl import rational_rank


@dataclass(frozen=True)
class ExponentMatrix:
    highest: tuple
    weights: tuple
    rows: tuple
    mults: tuple

    def monomials(self) -> list:
        return [monomial_str(r) for r in self.rows]

    def as_rows(self) -> list:
        return [{"weight": list(w), "exponents": list(r), "mult": m, "monomial": monomial_str(r)}
                for w, r, m in zip(self.weights, self.rows, self.mults)]


def monomial_str(row) -> str:
    parts = []
    for i, e in enumerate(row, start=1):
        if e == 1:
            parts.append(f"z{i}")
        elif e > 1:
            parts.append(f"z{i}^{e}")
    return "*".join(parts) if parts else "1"


def exponent_matrix(rs: RootSystem, lam, cap: int | None = None) -> ExponentMatrix:
    ws = weight_system(rs, lam, cap)
    order = ws.ordered_weights()
    rows = tuple(ws.depth(m) for m in order)
    return ExponentMatrix(ws.highest, tuple(order), rows, tuple(ws.mult(m) for m in order))


# -- boundary components ------------------------------------------------------

@dataclass
class BoundaryReport:
    k: int
    end_nodes: list
    components: list
    k_is_end: bool
    stated_count: int

    @property
    def listed_count(self) -> int:
        return len(self.components)

    @property
    def consistent(self) -> bool:
        return self.listed_count == self.stated_count

    def as_row(self) -> dict:
        return {"k": self.k, "end_nodes": self.end_nodes, "components": self.components,
                "k_is_end": self.k_is_end, "listed_count": self.listed_count,
                "stated_count": self.stated_count, "consistent": self.consistent}


def _component_of(rs: RootSystem, k: int) -> frozenset:
    for comp in rs.components():
        if k in comp:
            return frozenset(comp)
    raise WonderkitError(f"node {k} out of range")


def boundary_components(rs: RootSystem, k: int) -> BoundaryReport:
    """Boundary divisors Z_{i} of the torus closure for lambda_k.

    They are indexed by the end nodes of the Dynkin component of k, with k
    itself removed when it is an end node.  The report also carries the
    count a_Gamma - 1 that the closed-form statement gives in both cases.
    """
    comp = _component_of(rs, k)
    ends = sorted(e for e in rs.dynkin_end_nodes() if e in comp)
    is_end = k in ends
    listed = [e for e in ends if e != k]
    return BoundaryReport(k, ends, listed, is_end, len(ends) - 1)


# -- cones ----------------------------------------------------------------------

def cone_of_weights(rs: RootSystem, lam, cap: int | None = None) -> list:
    """Distinct nonzero generators lambda - mu (root coordinates), sorted."""
    em = exponent_matrix(rs, lam, cap)
    return sorted({r for r in em.rows if any(r)})


def _solve(cols, v):
    """Exact solution c of sum c_j cols[j] = v for independent cols, or None."""
    n, m = len(v), len(cols)
    a = [[Fraction(cols[j][i]) for j in range(m)] + [Fraction(v[i])] for i in range(n)]
    piv_cols = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, n) if a[i][c] != 0), None)
        if p is None:
            return None
        a[r], a[p] = a[p], a[r]
        for i in range(n):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    if any(a[i][m] != 0 for i in range(r, n)):
        return None
    return [a[i][m] / a[i][i] for i in range(m)]


def in_cone(v, gens) -> bool:
    """Rational cone membership via Caratheodory: try independent subsets."""
    if not any(v):
        return True
    gens = [g for g in gens if any(g)]
    d = rational_rank(gens) if gens else 0
    for r in range(1, d + 1):
        for sub in combinations(gens, r):
            if rational_rank(sub) < r:
                continue
            c = _solve(sub, v)
            if c is not None and all(x >= 0 for x in c):
                return True
    return False


def cones_equal(rs: RootSystem, lam1, lam2, cap: int | None = None) -> bool:
    g1 = cone_of_weights(rs, lam1, cap)
    g2 = cone_of_weights(rs, lam2, cap)
    return all(in_cone(v, g2) for v in g1) and all(in_cone(v, g1) for v in g2)


# -- type A normality -----------------------------------------------------------

def _require_A(rs: RootSystem):
    if len(rs.blocks) != 1 or rs.blocks[0][0] != "A":
        raise WonderkitError(f"normality check is for type A only, got {rs.name}")


def unimodal_member(l: int, k: int, a) -> bool:
    """a_k >= a_{k+1} >= ... >= a_l >= 0 and a_k >= a_{k-1} >= ... >= a_1 >= 0."""
    a = list(a)
    right = a[k - 1:] + [0]
    left = a[k - 1::-1] + [0]
    mono = lambda seq: all(x >= y for x, y in zip(seq, seq[1:]))  # noqa: E731
    return mono(right) and mono(left)


def monoid_levels(gens, height_bound: int) -> list:
    """Elements of the monoid generated by gens, grouped by height <= bound."""
    gens = sorted({tuple(g) for g in gens if any(g)})
    l = len(gens[0]) if gens else 0
    levels = [set() for _ in range(height_bound + 1)]
    levels[0].add(tuple([0] * l))
    for h in range(1, height_bound + 1):
        for g in gens:
            hg = sum(g)
            if hg <= h:
                for x in levels[h - hg]:
                    levels[h].add(tuple(p + q for p, q in zip(x, g)))
    return levels


def _lattice_points(l: int, h: int):
    if l == 0:
        if h == 0:
            yield ()
        return
    for first in range(h + 1):
        for rest in _lattice_points(l - 1, h - first):
            yield (first,) + rest


def normality_check_A(l: int, k: int, height_bound: int) -> bool:
    """Monoid generated by {lambda_k - mu} equals the unimodal cone up to the height bound."""
    from .rootsys import build_root_system

    rs = build_root_system(f"A{l}")
    _require_A(rs)
    if not 1 <= k <= l:
        raise WonderkitError(f"node {k} out of range for A{l}")
    lam = rs.fundamental_weight(k)
    levels = monoid_levels(cone_of_weights(rs, lam), height_bound)
    for h in range(height_bound + 1):
        for a in _lattice_points(l, h):
            if (a in levels[h]) != unimodal_member(l, k, a):
                return False
    return True


def monoid_member(rs: RootSystem, k: int, a) -> bool:
    _require_A(rs)
    levels = monoid_levels(cone_of_weights(rs, rs.fundamental_weight(k)), sum(a))
    return tuple(a) in levels[sum(a)]


# -- torus orbit poset ------------------------------------------------------------

@dataclass
class OrbitPoset:
    em: ExponentMatrix
    classes: list = field(default_factory=list)   # [(list of J, frozenset of row indices)]
    covers: list = field(default_factory=list)    # (lower index, upper index)

    def surviving_monomials(self, idx: int) -> list:
        rows = sorted(self.classes[idx][1])
        return [monomial_str(self.em.rows[r]) for r in rows]

    def as_rows(self) -> list:
        return [{"id": i, "J": [sorted(J) for J in Js],
                 "monomials": self.surviving_monomials(i)}
                for i, (Js, _) in enumerate(self.classes)]


def surviving_rows(em: ExponentMatrix, J) -> frozenset:
    """Rows whose monomial is nonzero on Z_J^o (no positive exponent on J)."""
    J = frozenset(J)
    return frozenset(i for i, r in enumerate(em.rows)
                     if not any(r[j - 1] > 0 for j in J))


def torus_orbit_poset(rs: RootSystem, lam, cap: int | None = None) -> OrbitPoset:
    from .pieces import subsets

    em = exponent_matrix(rs, lam, cap)
    groups = {}
    for J in subsets(rs):
        groups.setdefault(surviving_rows(em, J), []).append(J)
    keys = sorted(groups, key=lambda s: (-len(s), sorted(s)))
    classes = [(sorted(groups[s], key=lambda J: (len(J), sorted(J))), s) for s in keys]
    covers = []
    for a, (_, sa) in enumerate(classes):
        for b, (_, sb) in enumerate(classes):
            if sa < sb and not any(sa < sc < sb for _, sc in classes):
                covers.append((a, b))
    return OrbitPoset(em, classes, covers)

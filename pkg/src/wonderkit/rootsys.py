"""Finite crystallographic root systems with exact integer data.

Roots live in simple-root coordinates, weights in fundamental-weight
coordinates.  Nodes are numbered 1..l in the public API (Bourbaki order per
family; G2 has the short simple root first), stored 0-based internally.

The Cartan matrix convention is ``cartan[i][j] = <alpha_j, alpha_i^vee>`` so
that ``s_i(alpha_j) = alpha_j - cartan[i][j] alpha_i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import prod

from .errors import WonderkitError

_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def _block_cartan(family, n):
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2

    def link(i, j, a=-1, b=-1):
        # 1-based node pair; a = cartan[i][j], b = cartan[j][i]
        c[i - 1][j - 1] = a
        c[j - 1][i - 1] = b

    if family in "ABC":
        for i in range(1, n - 1):
            link(i, i + 1)
        if n >= 2:
            if family == "A":
                link(n - 1, n)
            elif family == "B":
                link(n - 1, n, -1, -2)  # alpha_n short
            else:
                link(n - 1, n, -2, -1)  # alpha_n long
    elif family == "D":
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif family == "E":
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif family == "F":
        link(1, 2)
        link(2, 3, -1, -2)
        link(3, 4)
    elif family == "G":
        link(1, 2, -3, -1)  # alpha_1 short: s_1(alpha_2) = alpha_2 + 3 alpha_1
    return c


def parse_type(spec) -> list[tuple[str, int]]:
    """Parse ``"B2xA1"`` (or ``"B2*A1"``, ``"B2 A1"``) into ``[("B", 2), ("A", 1)]``.

    A list of pairs passes through after validation.
    """
    if isinstance(spec, str):
        parts = [p for p in re.split(r"[x×*\s,]+", spec.strip()) if p]
        if not parts:
            raise WonderkitError(f"empty type spec {spec!r}")
        blocks = []
        for p in parts:
            m = re.fullmatch(r"([A-Ga-g])_?(\d+)", p)
            if not m:
                raise WonderkitError(f"cannot parse type component {p!r}")
            blocks.append((m.group(1).upper(), int(m.group(2))))
    else:
        blocks = [(str(f).upper(), int(n)) for f, n in spec]
    if not blocks:
        raise WonderkitError("empty type spec")
    for fam, n in blocks:
        if fam not in _RANK_OK:
            raise WonderkitError(f"unknown family {fam!r}")
        if not _RANK_OK[fam](n):
            raise WonderkitError(f"invalid rank {n} for family {fam}")
    return blocks


def _invert(mat):
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def _det(mat):
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    d = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            d = -d
        d *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return int(d)


@dataclass(frozen=True)
class RootSystem:
    """Root system built from a Cartan matrix; see :func:`build_root_system`."""

    blocks: tuple
    cartan: tuple
    roots: tuple = field(repr=False)
    positive_roots: tuple = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    @property
    def name(self) -> str:
        return "x".join(f"{f}{n}" for f, n in self.blocks)

    @property
    def dim_group(self) -> int:
        return len(self.roots) + self.rank

    @cached_property
    def negative_roots(self):
        return tuple(tuple(-x for x in r) for r in self.positive_roots)

    @cached_property
    def root_set(self):
        return frozenset(self.roots)

    @cached_property
    def positive_set(self):
        return frozenset(self.positive_roots)

    @cached_property
    def simple_roots(self):
        return tuple(self.unit(i) for i in self.nodes)

    def unit(self, i: int):
        """Simple root alpha_i (1-based) as a root-coordinate vector."""
        v = [0] * self.rank
        v[i - 1] = 1
        return tuple(v)

    @cached_property
    def cartan_inverse(self):
        return _invert(self.cartan)

    @cached_property
    def det_cartan(self) -> int:
        return _det(self.cartan)

    @cached_property
    def edges(self):
        """Dynkin edges ``(i, j, multiplicity)`` with i < j, 1-based."""
        out = []
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                if self.cartan[i][j]:
                    out.append((i + 1, j + 1, self.cartan[i][j] * self.cartan[j][i]))
        return tuple(out)

    @cached_property
    def adjacency(self):
        adj = {i: set() for i in self.nodes}
        for i, j, _ in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {i: frozenset(s) for i, s in adj.items()}

    @cached_property
    def root_lengths(self):
        """Squared lengths (alpha_i, alpha_i); shortest root of each component has 2."""
        d = [None] * self.rank
        for start in range(self.rank):
            if d[start] is not None:
                continue
            comp = [start]
            d[start] = Fraction(1)
            stack = [start]
            while stack:
                i = stack.pop()
                for j in range(self.rank):
                    if j != i and self.cartan[i][j] and d[j] is None:
                        # (a_i, a_j) symmetric: c[i][j] d_i = c[j][i] d_j
                        d[j] = d[i] * self.cartan[i][j] / self.cartan[j][i]
                        comp.append(j)
                        stack.append(j)
            m = min(d[i] for i in comp)
            for i in comp:
                d[i] = d[i] * 2 / m
        return tuple(d)

    @cached_property
    def form(self):
        """W-invariant form on simple roots: (alpha_i, alpha_j)."""
        d = self.root_lengths
        return tuple(tuple(self.cartan[i][j] * d[i] / 2 for j in range(self.rank))
                     for i in range(self.rank))

    def inner(self, u, v):
        """Invariant form on root-coordinate vectors (rational entries allowed)."""
        f = self.form
        return sum(u[i] * f[i][j] * v[j]
                   for i in range(self.rank) if u[i]
                   for j in range(self.rank) if v[j])

    def coroot_pairing(self, v, i: int):
        """<v, alpha_i^vee> for v in root coordinates."""
        row = self.cartan[i - 1]
        return sum(row[j] * v[j] for j in range(self.rank))

    def reflect(self, v, i: int):
        """s_i(v) for v in root coordinates."""
        c = self.coroot_pairing(v, i)
        if not c:
            return tuple(v)
        out = list(v)
        out[i - 1] -= c
        return tuple(out)

    def height(self, v):
        return sum(v)

    def is_positive(self, r) -> bool:
        return r in self.positive_set

    def to_weight(self, v):
        """Root coordinates -> fundamental-weight coordinates (integral on the root lattice)."""
        c = self.cartan
        out = []
        for i in range(self.rank):
            x = sum(c[i][j] * v[j] for j in range(self.rank))
            out.append(int(x) if isinstance(x, Fraction) and x.denominator == 1 else x)
        return tuple(out)

    def to_root(self, m):
        """Fundamental-weight coordinates -> rational root coordinates."""
        inv = self.cartan_inverse
        out = []
        for i in range(self.rank):
            x = sum(inv[i][j] * m[j] for j in range(self.rank))
            out.append(int(x) if x.denominator == 1 else x)
        return tuple(out)

    @cached_property
    def rho(self):
        """Half-sum of positive roots in weight coordinates."""
        tot = [0] * self.rank
        for r in self.positive_roots:
            for i, x in enumerate(r):
                tot[i] += x
        half = tuple(Fraction(x, 2) for x in tot)
        return tuple(Fraction(x) for x in self.to_weight(half))

    @cached_property
    def highest_root(self):
        return max(self.positive_roots, key=lambda r: (sum(r), r))

    def fundamental_weight(self, i: int):
        v = [0] * self.rank
        v[i - 1] = 1
        return tuple(v)

    def phi_minus_of(self, J):
        """Negative roots supported on {alpha_i : i not in J}."""
        J = frozenset(J)
        return tuple(r for r in self.negative_roots
                     if all(r[i - 1] == 0 for i in J))

    def phi_plus_of(self, J):
        """Positive roots supported on {alpha_i : i not in J}."""
        J = frozenset(J)
        return tuple(r for r in self.positive_roots
                     if all(r[i - 1] == 0 for i in J))

    def dynkin_end_nodes(self):
        return frozenset(i for i in self.nodes if len(self.adjacency[i]) <= 1)

    def comp_without(self, K, k: int):
        """Connected component of k in the Dynkin subgraph on I \\ K."""
        K = frozenset(K)
        if k in K:
            raise WonderkitError(f"node {k} lies in K={sorted(K)}")
        seen = {k}
        stack = [k]
        while stack:
            i = stack.pop()
            for j in self.adjacency[i]:
                if j not in K and j not in seen:
                    seen.add(j)
                    stack.append(j)
        return frozenset(seen)

    def components(self):
        """Node sets of the simple factors."""
        out = []
        seen = set()
        for i in self.nodes:
            if i not in seen:
                c = self.comp_without(frozenset(), i)
                seen |= c
                out.append(c)
        return out

    def weyl_order(self) -> int:
        return prod(_WEYL_ORDER[f](n) for f, n in self.blocks)


def _fact(n):
    return prod(range(1, n + 1))


_WEYL_ORDER = {
    "A": lambda n: _fact(n + 1),
    "B": lambda n: 2**n * _fact(n),
    "C": lambda n: 2**n * _fact(n),
    "D": lambda n: 2 ** (n - 1) * _fact(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


def build_root_system(type_spec) -> RootSystem:
    """Build the root system for ``type_spec`` (string like ``"B2xA1"`` or list of pairs)."""
    blocks = parse_type(type_spec)
    l = sum(n for _, n in blocks)
    cartan = [[0] * l for _ in range(l)]
    off = 0
    for fam, n in blocks:
        b = _block_cartan(fam, n)
        for i in range(n):
            for j in range(n):
                cartan[off + i][off + j] = b[i][j]
        off += n
    cartan = tuple(tuple(r) for r in cartan)

    def refl(v, i):
        c = sum(cartan[i][j] * v[j] for j in range(l))
        out = list(v)
        out[i] -= c
        return tuple(out)

    simple = [tuple(int(i == j) for j in range(l)) for i in range(l)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(l):
                r = refl(v, i)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    key = lambda r: (sum(abs(x) for x in r), tuple(-x for x in r))
    pos = sorted((r for r in seen if all(x >= 0 for x in r)), key=key)
    neg = [tuple(-x for x in r) for r in pos]
    return RootSystem(tuple(blocks), cartan, tuple(pos + neg), tuple(pos))

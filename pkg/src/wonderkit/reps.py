"""Weight systems of irreducible highest-weight modules.

Weights are integer tuples in fundamental-weight coordinates.  Dominant
weights below the highest weight are found by descent (subtracting positive
roots and keeping dominant results); multiplicities follow Freudenthal's
recursion and the remaining weights are filled in by Weyl orbits.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import CapExceeded, WonderkitError
from .rootsys import RootSystem

DEFAULT_DIM_CAP = 10**6


def _root_as_weight(rs: RootSystem, r):
    return tuple(rs.to_weight(r))


def is_dominant(m) -> bool:
    return all(x >= 0 for x in m)


def support(m) -> frozenset:
    """Nodes i with <lambda, alpha_i^vee> != 0."""
    return frozenset(i + 1 for i, x in enumerate(m) if x)


def is_regular(m) -> bool:
    return all(x != 0 for x in m)


def simple_reflect_weight(rs: RootSystem, m, i: int):
    c = m[i - 1]
    if not c:
        return tuple(m)
    return tuple(x - c * rs.cartan[j][i - 1] for j, x in enumerate(m))


def dominant_conjugate(rs: RootSystem, m):
    m = tuple(m)
    while True:
        i = next((k + 1 for k, x in enumerate(m) if x < 0), None)
        if i is None:
            return m
        m = simple_reflect_weight(rs, m, i)


def weyl_orbit(rs: RootSystem, m) -> list:
    start = tuple(m)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for i in rs.nodes:
            if x[i - 1]:
                y = simple_reflect_weight(rs, x, i)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return sorted(seen)


def pair_with_root(rs: RootSystem, m, r) -> Fraction:
    """Invariant form (mu, alpha) for mu in weight coords, alpha in root coords."""
    d = rs.root_lengths
    return sum(Fraction(m[j] * r[j]) * d[j] / 2 for j in range(rs.rank) if r[j] and m[j])


def weight_form(rs: RootSystem, u, v) -> Fraction:
    return rs.inner(rs.to_root(u), rs.to_root(v))


def dim_weyl(rs: RootSystem, lam) -> int:
    """Weyl dimension formula, exact."""
    lam = tuple(lam)
    if len(lam) != rs.rank or not is_dominant(lam):
        raise WonderkitError(f"{lam} is not a dominant weight of {rs.name}")
    rho = tuple(1 for _ in rs.nodes)
    shifted = tuple(x + 1 for x in lam)
    num = Fraction(1)
    for a in rs.positive_roots:
        num *= pair_with_root(rs, shifted, a) / pair_with_root(rs, rho, a)
    if num.denominator != 1:
        raise ArithmeticError("non-integral Weyl dimension")
    return int(num)


@dataclass(frozen=True)
class Character:
    """Formal weight multiset over a fixed root system."""

    rs: RootSystem = field(repr=False)
    counts: Counter

    def __add__(self, other: "Character") -> "Character":
        _same_system(self.rs, other.rs)
        return Character(self.rs, self.counts + other.counts)

    def __eq__(self, other):
        return (isinstance(other, Character) and self.rs.cartan == other.rs.cartan
                and +self.counts == +other.counts)

    @property
    def dim(self) -> int:
        return sum(self.counts.values())

    def elements(self) -> list:
        """Weights expanded with multiplicity, sorted."""
        return [m for m in sorted(self.counts) for _ in range(self.counts[m])]


def _same_system(a: RootSystem, b: RootSystem):
    if a.cartan != b.cartan:
        raise WonderkitError(f"mismatched root systems {a.name} and {b.name}")


@dataclass(frozen=True)
class WeightSystem:
    rs: RootSystem = field(repr=False)
    highest: tuple
    entries: dict = field(repr=False)
    dim: int = 0

    def mult(self, mu) -> int:
        return self.entries.get(tuple(mu), 0)

    def __contains__(self, mu):
        return tuple(mu) in self.entries

    def character(self) -> Character:
        return Character(self.rs, Counter(self.entries))

    def depth(self, mu):
        """Root coordinates of highest - mu (nonnegative integers)."""
        return lambda_minus_mu_coords(self, mu)

    def ordered_weights(self) -> list:
        """Weights ordered by height of lambda - mu, then by lex-descending coordinates."""
        def key(mu):
            n = self.depth(mu)
            return (sum(n), tuple(-x for x in n))
        return sorted(self.entries, key=key)

    @property
    def dominant_weights(self) -> list:
        return [m for m in self.ordered_weights() if is_dominant(m)]


def weight_system(rs: RootSystem, lam, cap: int | None = None) -> WeightSystem:
    lam = tuple(int(x) for x in lam)
    d = dim_weyl(rs, lam)
    cap = DEFAULT_DIM_CAP if cap is None else cap
    if d > cap:
        raise CapExceeded(f"dim V({lam}) over {rs.name}", d, cap)
    pos_w = [(a, _root_as_weight(rs, a)) for a in rs.positive_roots]

    # dominant weights by descent, recorded with depth (height of lam - mu)
    depth = {lam: 0}
    frontier = [lam]
    while frontier:
        nxt = []
        for nu in frontier:
            for a, aw in pos_w:
                mu = tuple(x - y for x, y in zip(nu, aw))
                if is_dominant(mu) and mu not in depth:
                    depth[mu] = depth[nu] + sum(a)
                    nxt.append(mu)
        frontier = nxt

    lr = tuple(x + 1 for x in lam)
    norm_top = weight_form(rs, lr, lr)
    mult = {lam: 1}
    for mu in sorted(depth, key=lambda m: depth[m])[1:]:
        total = Fraction(0)
        for a, aw in pos_w:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, aw))
                dom = dominant_conjugate(rs, nu)
                m = mult.get(dom) if dom in depth else None
                if not m:
                    break
                total += m * pair_with_root(rs, nu, a)
                k += 1
        mr = tuple(x + 1 for x in mu)
        denom = norm_top - weight_form(rs, mr, mr)
        val = 2 * total / denom
        if val.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity at {mu}")
        mult[mu] = int(val)

    entries = {}
    for mu, m in mult.items():
        if m:
            for nu in weyl_orbit(rs, mu):
                entries[nu] = m
    ws = WeightSystem(rs, lam, entries, sum(entries.values()))
    if ws.dim != d:
        raise ArithmeticError(f"Freudenthal total {ws.dim} != Weyl dimension {d}")
    return ws


def lambda_minus_mu_coords(ws: WeightSystem, mu) -> tuple:
    mu = tuple(mu)
    if mu not in ws.entries:
        raise WonderkitError(f"{mu} is not a weight of V({ws.highest})")
    diff = tuple(a - b for a, b in zip(ws.highest, mu))
    return tuple(int(x) for x in ws.rs.to_root(diff))


def negate_system(ws: WeightSystem) -> Character:
    """Weights of the dual module H(lambda): every weight negated."""
    return Character(ws.rs, Counter({tuple(-x for x in m): c for m, c in ws.entries.items()}))


def exterior_power(ch: Character | WeightSystem, k: int) -> Character:
    if isinstance(ch, WeightSystem):
        ch = ch.character()
    out = Counter()
    els = ch.elements()
    for combo in combinations(range(len(els)), k):
        s = [0] * ch.rs.rank
        for idx in combo:
            for j, x in enumerate(els[idx]):
                s[j] += x
        out[tuple(s)] += 1
    return Character(ch.rs, out)


def _as_char(x) -> Character:
    return x.character() if isinstance(x, WeightSystem) else x


def decompose_check(lhs, rhs) -> bool:
    """Compare two formal sums (lists of characters / weight systems) as multisets."""
    lhs = [_as_char(x) for x in lhs]
    rhs = [_as_char(x) for x in rhs]
    items = lhs + rhs
    for x in items[1:]:
        _same_system(items[0].rs, x.rs)
    a, b = Counter(), Counter()
    for x in lhs:
        a.update(x.counts)
    for x in rhs:
        b.update(x.counts)
    return +a == +b


def weight_poset(ws: WeightSystem) -> list:
    """Cover relations (mu, nu), mu < nu, of the order nu - mu in N.Delta."""
    ws_list = ws.ordered_weights()
    coords = {m: lambda_minus_mu_coords(ws, m) for m in ws_list}

    def below(m, n):  # m < n
        return m != n and all(x >= y for x, y in zip(coords[m], coords[n]))

    covers = []
    for m in ws_list:
        ups = [n for n in ws_list if below(m, n)]
        for n in ups:
            if not any(below(p, n) for p in ups if p != n):
                covers.append((m, n))
    return covers

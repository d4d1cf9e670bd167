"""Exact torus eigenvalues and the adjoint conjugacy checker.

A torus element is recorded by the values of the fundamental weights,
lambda_i(t) = zeta^{a_i} q^{b_i}, with a_i in Q/Z and b_i in Z.  An
eigenvalue zeta^x q^y is the pair (x mod 1, y) and the group law is
addition of pairs, so every comparison is exact.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .errors import WonderkitError
from .reps import WeightSystem, negate_system, weight_system
from .rootsys import RootSystem
from .snf import smith_normal_form
from .symfun import LaurentPoly
from .weyl import WeylElement, weyl_group


def _mod1(x) -> Fraction:
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


@dataclass(frozen=True, order=True)
class ExactScalar:
    torsion: Fraction
    free: int

    def __post_init__(self):
        object.__setattr__(self, "torsion", _mod1(self.torsion))

    def __add__(self, other: "ExactScalar") -> "ExactScalar":
        return ExactScalar(self.torsion + other.torsion, self.free + other.free)

    def __neg__(self) -> "ExactScalar":
        return ExactScalar(-self.torsion, -self.free)

    def __sub__(self, other: "ExactScalar") -> "ExactScalar":
        return self + (-other)

    def as_list(self) -> list:
        return [str(self.torsion), self.free]


ONE = ExactScalar(Fraction(0), 0)


@dataclass(frozen=True)
class TorusElement:
    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(_mod1(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))

    @classmethod
    def identity(cls, l: int) -> "TorusElement":
        return cls((0,) * l, (0,) * l)

    def __mul__(self, other: "TorusElement") -> "TorusElement":
        return TorusElement(tuple(x + y for x, y in zip(self.a, other.a)),
                            tuple(x + y for x, y in zip(self.b, other.b)))

    def is_torsion_free(self) -> bool:
        return not any(self.a)

    def as_dict(self) -> dict:
        return {"a": [str(x) for x in self.a], "b": list(self.b)}


def eigenvalue(mu, t: TorusElement) -> ExactScalar:
    return ExactScalar(sum((m * x for m, x in zip(mu, t.a)), Fraction(0)),
                       sum(m * y for m, y in zip(mu, t.b)))


def act(rs: RootSystem, w: WeylElement, t: TorusElement) -> TorusElement:
    """w.t, characterised by eigenvalue(mu, w.t) = eigenvalue(w^-1 mu, t)."""
    W = weyl_group(rs)
    rows = W.weight_matrix(W.inverse(w))  # rows[j] = w^-1(lambda_j)
    return TorusElement(tuple(eigenvalue(r, t).torsion for r in rows),
                        tuple(eigenvalue(r, t).free for r in rows))


def eigenvalue_multiset(ws: WeightSystem, t: TorusElement) -> list:
    out = []
    for mu, m in ws.entries.items():
        out.extend([eigenvalue(mu, t)] * m)
    return sorted(out)


def conjugate_up_to_constant(ws: WeightSystem, t1: TorusElement, t2: TorusElement):
    """Smallest c with multiset(t1) = c + multiset(t2), or None.

    The free part of c is forced by the minimal free exponents; the torsion
    part is searched among differences with one fixed element, since a plain
    min-subtraction is not well defined on Q/Z.
    """
    m1 = Counter(eigenvalue_multiset(ws, t1))
    m2 = eigenvalue_multiset(ws, t2)
    f1 = min(e.free for e in m1)
    f2 = min(e.free for e in m2)
    anchor = min(e for e in m2 if e.free == f2)
    cands = sorted({e - anchor for e in m1 if e.free == f1})
    for c in cands:
        if Counter(c + e for e in m2) == m1:
            return c
    return None


def center_elements(rs: RootSystem) -> list:
    """Elements killed by every simple root: a in (C^T)^-1 Z^l / Z^l, b = 0."""
    l = rs.rank
    ct = [[rs.cartan[j][i] for j in range(l)] for i in range(l)]
    U, D, V = smith_normal_form(ct)
    gens = []
    for i in range(l):
        d = D[i][i]
        if d > 1:
            gens.append((d, tuple(Fraction(V[r][i], d) for r in range(l))))
    elems = {tuple(Fraction(0) for _ in range(l))}
    for d, g in gens:
        new = set()
        for e in elems:
            for k in range(d):
                new.add(tuple(_mod1(x + k * y) for x, y in zip(e, g)))
        elems = new
    out = [TorusElement(a, (0,) * l) for a in sorted(elems)]
    for z in out:  # sanity: simple roots act trivially
        for i in rs.nodes:
            if eigenvalue(rs.to_weight(rs.unit(i)), z) != ONE:
                raise ArithmeticError("center computation failed")
    return out


def weyl_conjugate_up_to_center(rs: RootSystem, t1: TorusElement, t2: TorusElement,
                                cap: int | None = None) -> bool:
    W = weyl_group(rs)
    zs = {z.a for z in center_elements(rs)}
    for w in W.enumerate_group(cap):
        wt = act(rs, w, t1)
        if wt.b != t2.b:
            continue
        if tuple(_mod1(x - y) for x, y in zip(t2.a, wt.a)) in zs:
            return True
    return False


# -- character sums and vanishing -------------------------------------------------

def _cyclotomic(n: int) -> list:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _polydiv(num, _cyclotomic(d))[0]
    return num


def _polydiv(num, den):
    num = list(num)
    out = [0] * max(len(num) - len(den) + 1, 1)
    for i in range(len(num) - len(den), -1, -1):
        q = num[i + len(den) - 1] // den[-1]
        out[i] = q
        for j, c in enumerate(den):
            num[i + j] -= q * c
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return out, num


def roots_of_unity_sum_is_zero(torsions) -> bool:
    """Exact test of sum_j exp(2 pi i x_j) = 0 for x_j in Q/Z."""
    torsions = list(torsions)
    if not torsions:
        return True
    N = 1
    for x in torsions:
        N = lcm(N, Fraction(x).denominator)
    poly = [0] * N
    for x in torsions:
        poly[int(_mod1(x) * N)] += 1
    _, rem = _polydiv(poly + [0], _cyclotomic(N)) if N > 1 else (None, [sum(poly)])
    return all(c == 0 for c in rem)


def character_vanishes(ws: WeightSystem, t: TorusElement) -> bool:
    by_free = {}
    for e in eigenvalue_multiset(ws, t):
        by_free.setdefault(e.free, []).append(e.torsion)
    return all(roots_of_unity_sum_is_zero(v) for v in by_free.values())


# -- conjecture scan ------------------------------------------------------------------

def _divisors(n: int) -> list:
    return [d for d in range(1, n + 1) if n % d == 0]


def torsion_denominators(order_center: int) -> list:
    dens = set()
    for m in range(1, 7):
        dens.update(_divisors(order_center * m))
    return sorted(dens)


def random_torus_element(rng: random.Random, l: int, dens) -> TorusElement:
    a = []
    for _ in range(l):
        d = rng.choice(dens)
        a.append(Fraction(rng.randrange(d), d))
    return TorusElement(tuple(a), tuple(rng.randint(-5, 5) for _ in range(l)))


@dataclass
class ScanReport:
    type: str
    samples: int
    seed: int
    counterexamples: list = field(default_factory=list)
    positives_ok: bool = True
    positives_detected: int = 0
    adversarial_related: int = 0
    adversarial_unrelated: int = 0
    vanishing_character_samples: int = 0

    def as_dict(self) -> dict:
        return {
            "type": self.type, "samples": self.samples, "seed": self.seed,
            "counterexamples": self.counterexamples, "positives_ok": self.positives_ok,
            "positives_detected": self.positives_detected,
            "adversarial_related": self.adversarial_related,
            "adversarial_unrelated": self.adversarial_unrelated,
            "vanishing_character_samples": self.vanishing_character_samples,
        }


class _Scanner:
    def __init__(self, rs: RootSystem, cap=None):
        self.rs = rs
        self.W = weyl_group(rs)
        self.els = self.W.enumerate_group(cap)
        self.centre = center_elements(rs)
        self.centre_set = {z.a for z in self.centre}
        self.fund = [weight_system(rs, rs.fundamental_weight(k)) for k in rs.nodes]
        self.inv_rows = [self.W.weight_matrix(self.W.inverse(w)) for w in self.els]

    def act(self, idx, t):
        rows = self.inv_rows[idx]
        return TorusElement(tuple(eigenvalue(r, t).torsion for r in rows),
                            tuple(eigenvalue(r, t).free for r in rows))

    def weyl_related(self, t1, t2) -> bool:
        for idx in range(len(self.els)):
            wt = self.act(idx, t1)
            if wt.b == t2.b and tuple(_mod1(x - y) for x, y in zip(t2.a, wt.a)) in self.centre_set:
                return True
        return False

    def scalars(self, t1, t2) -> list:
        return [conjugate_up_to_constant(ws, t1, t2) for ws in self.fund]


def conjecture_scan(rs: RootSystem, samples: int, seed: int, cap: int | None = None) -> ScanReport:
    """Test [all fundamental reps conjugate up to a scalar] <=> [W x Z related].

    Sample i uses random.Random(seed ^ i) and produces one positive pair
    t2 = z.(w.t1) and one adversarial pair (independent draw, or a single
    coordinate perturbation of the positive partner).
    """
    sc = _Scanner(rs, cap)
    dens = torsion_denominators(len(sc.centre))
    rep = ScanReport(rs.name, samples, seed)
    l = rs.rank
    for i in range(samples):
        rng = random.Random(seed ^ i)
        t1 = random_torus_element(rng, l, dens)
        widx = rng.randrange(len(sc.els))
        z = rng.choice(sc.centre)
        t_pos = z * sc.act(widx, t1)
        pos_scalars = sc.scalars(t1, t_pos)
        pos_lhs = all(c is not None for c in pos_scalars)
        pos_rhs = sc.weyl_related(t1, t_pos)
        if pos_lhs and pos_rhs:
            rep.positives_detected += 1
        else:
            rep.positives_ok = False
            rep.counterexamples.append(_cx(t1, t_pos, pos_scalars, pos_rhs, "positive"))

        mode = rng.randrange(3)
        if mode == 0:
            t_adv = random_torus_element(rng, l, dens)
        else:
            a, b = list(t_pos.a), list(t_pos.b)
            j = rng.randrange(l)
            if mode == 1:
                d = rng.choice(dens)
                a[j] += Fraction(rng.randrange(1, d + 1), d)
            else:
                b[j] += rng.choice((-1, 1))
            t_adv = TorusElement(tuple(a), tuple(b))
        adv_scalars = sc.scalars(t1, t_adv)
        lhs = all(c is not None for c in adv_scalars)
        rhs = sc.weyl_related(t1, t_adv)
        if rhs:
            rep.adversarial_related += 1
        else:
            rep.adversarial_unrelated += 1
        if lhs != rhs:
            rep.counterexamples.append(_cx(t1, t_adv, adv_scalars, rhs, "adversarial"))
        if any(character_vanishes(ws, t1) for ws in sc.fund):
            rep.vanishing_character_samples += 1
    return rep


def _cx(t1, t2, scalars, related, kind) -> dict:
    return {"kind": kind, "t1": t1.as_dict(), "t2": t2.as_dict(),
            "per_rep_scalars": [None if c is None else c.as_list() for c in scalars],
            "weyl_related": related}


# -- family sections -------------------------------------------------------------------

def _check_free(t: TorusElement, name: str):
    if not t.is_torsion_free():
        raise WonderkitError(f"{name} has a torsion part; trace sums need torsion-free input")


def trace_power(ws_dual, t: TorusElement, e: int) -> LaurentPoly:
    """tr(rho(t)^e) on a module with the given weight multiset."""
    terms = {}
    for mu, m in ws_dual.counts.items():
        x = e * eigenvalue(mu, t).free
        terms[x] = terms.get(x, 0) + m
    return LaurentPoly(terms)


def family_section_eval(rs: RootSystem, k: int, z: TorusElement, t: TorusElement,
                        e1: int, e2: int) -> LaurentPoly:
    """f_{z,e1,e2,k} evaluated at the torus point t, as a Laurent polynomial in q."""
    _check_free(z, "z")
    _check_free(t, "t")
    ws = weight_system(rs, rs.fundamental_weight(k))
    if not 1 <= e1 < e2 <= ws.dim:
        raise WonderkitError(f"need 1 <= e1 < e2 <= {ws.dim}")
    dual = negate_system(ws)
    # z-side: monomials prod_u z_u^{<lambda_u, nu + lambda_k>}, nu in the dual system
    zc = [eigenvalue(rs.to_weight(rs.unit(u)), z).free for u in rs.nodes]
    lam = rs.fundamental_weight(k)

    def zsum(e):
        terms = {}
        for nu, m in dual.counts.items():
            n = rs.to_root(tuple(x + y for x, y in zip(nu, lam)))
            x = e * sum(int(c) * f for c, f in zip(n, zc))
            terms[x] = terms.get(x, 0) + m
        return LaurentPoly(terms)

    L = lcm(e1, e2)
    return (zsum(e1) ** (L // e1)) * (trace_power(dual, t, e2) ** (L // e2)) \
        - (zsum(e2) ** (L // e2)) * (trace_power(dual, t, e1) ** (L // e1))


def central_fiber_identity(diag) -> bool:
    """tr(A^j)^{L/j} = tr(A^k)^{L/k} for all 1 <= j < k <= dim, A diagonal."""
    diag = [Fraction(x) for x in diag]
    n = len(diag)
    p = [None] + [sum(x ** e for x in diag) for e in range(1, n + 1)]
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            L = lcm(j, k)
            if p[j] ** (L // j) != p[k] ** (L // k):
                return False
    return True


def center_shift_on(ws: WeightSystem, z: TorusElement) -> set:
    """Distinct eigenvalues of a center element on a weight system."""
    return {eigenvalue(mu, z) for mu in ws.entries}

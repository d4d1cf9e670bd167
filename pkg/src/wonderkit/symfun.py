"""Power sums, elementary symmetric functions and integer Laurent polynomials.

The functions work over any commutative ring whose elements support
``+``, ``-`` and ``*`` with integers (Fraction, int, :class:`LaurentPoly`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb


class LaurentPoly:
    """Integer-coefficient Laurent polynomial in q, stored as {exponent: coeff}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if isinstance(terms, int):
            terms = {0: terms} if terms else {}
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result, base = LaurentPoly(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*q^{e}" for e, c in sorted(self.terms.items()))

    def as_dict(self) -> dict:
        return {str(e): c for e, c in sorted(self.terms.items())}


def power_sum(x, k: int):
    total = 0
    for v in x:
        total = total + v ** k
    return total


def elementary_all(x, n: int | None = None) -> list:
    """[e_0, e_1, ..., e_n] by the product recursion."""
    x = list(x)
    n = len(x) if n is None else n
    e = [1] + [0] * n
    for v in x:
        for k in range(n, 0, -1):
            e[k] = e[k] + e[k - 1] * v
    return e


def elem_sym(x, k: int):
    x = list(x)
    if k < 0 or k > len(x):
        return 0
    return elementary_all(x, k)[k]


def newton_check(x) -> bool:
    """p_k = (-1)^(k-1) k e_k + sum_{i<k} (-1)^(k-1+i) e_{k-i} p_i for 1 <= k <= n."""
    x = list(x)
    n = len(x)
    e = elementary_all(x)
    p = [None] + [power_sum(x, k) for k in range(1, n + 1)]
    for k in range(1, n + 1):
        rhs = (-1) ** (k - 1) * k * e[k]
        for i in range(1, k):
            rhs = rhs + (-1) ** (k - 1 + i) * e[k - i] * p[i]
        if p[k] != rhs:
            return False
    return True


def wedge2(x) -> list:
    return [a * b for a, b in combinations(list(x), 2)]


@dataclass
class Lambda2Verdict:
    hypotheses_hold: bool
    hypothesis_failure: str | None
    conclusion_holds: bool | None
    steps_hold: bool | None


def lambda2_lemma_check(a, b) -> Lambda2Verdict:
    """Odd power sums vanish and e_k(wedge^2) agree  ==>  all power sums agree.

    Hypotheses are verified first; a violation is reported separately from a
    failing conclusion.  The recursion checked for even k = 2m is
    p_{2m}(x) = p_m(x)^2 - 2 p_m(wedge^2 x).
    """
    a, b = [Fraction(v) for v in a], [Fraction(v) for v in b]
    if len(a) != len(b):
        raise ValueError("lambda2_lemma_check needs vectors of equal length")
    n = len(a)
    for k in range(1, n + 1, 2):
        if power_sum(a, k) != 0 or power_sum(b, k) != 0:
            return Lambda2Verdict(False, f"odd power sum p_{k} nonzero", None, None)
    wa, wb = wedge2(a), wedge2(b)
    ea, eb = elementary_all(wa), elementary_all(wb)
    for k in range(len(ea)):
        if ea[k] != eb[k]:
            return Lambda2Verdict(False, f"e_{k}(wedge^2) differ", None, None)
    steps = True
    for x, wx in ((a, wa), (b, wb)):
        if n >= 2 and power_sum(x, 2) != power_sum(x, 1) ** 2 - 2 * elem_sym(wx, 1):
            steps = False
        for m in range(1, n // 2 + 1):
            if power_sum(x, 2 * m) != power_sum(x, m) ** 2 - 2 * power_sum(wx, m):
                steps = False
    concl = all(power_sum(a, k) == power_sum(b, k) for k in range(1, n + 1))
    return Lambda2Verdict(True, None, concl, steps)


@dataclass
class TraceVerdict:
    hypotheses_hold: bool
    failing_e: int | None
    scalar: Fraction | None
    conjugate: bool


def trace_identity_lemma_check(A1, A2) -> TraceVerdict:
    """Diagonal A1, A2: tr(A1^e) tr(A2)^e = tr(A1)^e tr(A2^e) for all e  ==>  A1 = t A2."""
    A1 = [Fraction(v) for v in A1]
    A2 = [Fraction(v) for v in A2]
    if len(A1) != len(A2):
        raise ValueError("matrices must have the same size")
    if not any(A1) or not any(A2):
        raise ValueError("zero matrix")
    t1 = sum(A1)
    if t1 == 0:
        raise ValueError("tr(A1) = 0")
    t2 = sum(A2)
    m = len(A1)
    for e in range(1, m + 1):
        if power_sum(A1, e) * t2 ** e != t1 ** e * power_sum(A2, e):
            return TraceVerdict(False, e, None, False)
    t = t1 / t2
    return TraceVerdict(True, None, t, sorted(A1) == sorted(t * v for v in A2))


def brute_force_scalar_match(A1, A2):
    """Some t with multiset A1 = t * A2 (checked over all candidate ratios), or None."""
    A1 = sorted(Fraction(v) for v in A1)
    A2 = [Fraction(v) for v in A2]
    cands = {x / y for x in A1 for y in A2 if y != 0 and x != 0}
    if not any(A1) and not any(A2):
        cands.add(Fraction(1))
    for t in sorted(cands):
        if sorted(t * v for v in A2) == A1:
            return t
    return None


def binomial_row(n: int) -> list:
    return [comb(n, k) for k in range(n + 1)]

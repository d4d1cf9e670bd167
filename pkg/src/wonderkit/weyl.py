"""Weyl group arithmetic on the simple-root basis.

An element is stored as the tuple of images of the simple roots
(``cols[j] = w(alpha_{j+1})`` in root coordinates).  Everything else
(length, reduced words, support) is derived and cached on the group.

Parabolic subgroups are always named by their *generator set* here; the
complement convention used for stable pieces lives in :mod:`wonderkit.pieces`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from .errors import CapExceeded, WonderkitError, default_cap
from .rootsys import RootSystem


@dataclass(frozen=True)
class WeylElement:
    cols: tuple
    group: "WeylGroup" = field(compare=False, repr=False, hash=False)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.group.multiply(self, other)

    def __call__(self, v):
        return self.group.act_on_root(self, v)

    @property
    def length(self) -> int:
        return self.group.length(self)

    @property
    def word(self) -> tuple:
        return self.group.reduced_word(self)

    def inverse(self) -> "WeylElement":
        return self.group.inverse(self)

    def __repr__(self):
        w = self.word
        return "e" if not w else "s" + "s".join(map(str, w))


class WeylGroup:
    """Weyl group of a :class:`RootSystem`."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        l = rs.rank
        self.identity = WeylElement(tuple(rs.unit(i) for i in rs.nodes), self)
        self.gens = tuple(self.from_word([i]) for i in rs.nodes)
        self._length = {self.identity.cols: 0}
        self._word = {self.identity.cols: ()}
        self._inv = {}
        self._wtmat = {}
        self._bruhat = {}
        self._l = l
        # enumeration engine: elements keyed by root indices of w(alpha_j)
        self._ridx = {r: k for k, r in enumerate(rs.roots)}
        self._perm = tuple(tuple(self._ridx[rs.reflect(r, i)] for r in rs.roots)
                           for i in rs.nodes)
        ident = tuple(self._ridx[rs.unit(i)] for i in rs.nodes)
        self._levels = [[self.identity]]
        self._level_keys = [[(ident, ())]]
        self._prev_set = set()
        self._cur_set = {ident}
        self._complete = False

    # -- construction -----------------------------------------------------

    def _check_node(self, i):
        if not 1 <= i <= self.rs.rank:
            raise WonderkitError(f"node index {i} out of range 1..{self.rs.rank}")

    def right_mul_simple(self, w: WeylElement, i: int) -> WeylElement:
        """w * s_i."""
        c = self.rs.cartan[i - 1]
        ci = w.cols[i - 1]
        cols = tuple(col if not c[j] else tuple(a - c[j] * b for a, b in zip(col, ci))
                     for j, col in enumerate(w.cols))
        return WeylElement(cols, self)

    def left_mul_simple(self, i: int, w: WeylElement) -> WeylElement:
        """s_i * w."""
        rs = self.rs
        return WeylElement(tuple(rs.reflect(col, i) for col in w.cols), self)

    def from_word(self, word) -> WeylElement:
        w = WeylElement(tuple(self.rs.unit(i) for i in self.rs.nodes), self)
        for i in word:
            self._check_node(i)
            w = self.right_mul_simple(w, i)
        return w

    def s(self, i: int) -> WeylElement:
        self._check_node(i)
        return self.gens[i - 1]

    # -- action -----------------------------------------------------------

    def act_on_root(self, w: WeylElement, v):
        out = [0] * self._l
        for j, x in enumerate(v):
            if x:
                for k, y in enumerate(w.cols[j]):
                    out[k] += x * y
        return tuple(out)

    def multiply(self, u: WeylElement, v: WeylElement) -> WeylElement:
        return WeylElement(tuple(self.act_on_root(u, c) for c in v.cols), self)

    def weight_matrix(self, w: WeylElement):
        """Integer matrix of w on fundamental-weight coordinates (columns = w(lambda_j))."""
        m = self._wtmat.get(w.cols)
        if m is None:
            rs = self.rs
            m = []
            for j in rs.nodes:
                r = rs.to_root(rs.fundamental_weight(j))
                img = rs.to_weight(self.act_on_root(w, r))
                m.append(tuple(int(x) for x in img))
            m = tuple(m)
            self._wtmat[w.cols] = m
        return m

    def act_on_weight(self, w: WeylElement, m):
        cols = self.weight_matrix(w)
        out = [0] * self._l
        for j, x in enumerate(m):
            if x:
                for k, y in enumerate(cols[j]):
                    out[k] += x * y
        return tuple(out)

    # -- length, words, inverse -----------------------------------------

    def is_negative(self, v) -> bool:
        return any(x < 0 for x in v)

    def right_descents(self, w: WeylElement) -> frozenset:
        return frozenset(i + 1 for i, c in enumerate(w.cols) if self.is_negative(c))

    def length(self, w: WeylElement) -> int:
        n = self._length.get(w.cols)
        if n is None:
            n = sum(1 for r in self.rs.positive_roots
                    if self.is_negative(self.act_on_root(w, r)))
            self._length[w.cols] = n
        return n

    def _some_reduced_word(self, w: WeylElement):
        letters = []
        while True:
            d = next((i + 1 for i, c in enumerate(w.cols) if self.is_negative(c)), None)
            if d is None:
                break
            letters.append(d)
            w = self.right_mul_simple(w, d)
        return tuple(reversed(letters))

    def inverse(self, w: WeylElement) -> WeylElement:
        inv = self._inv.get(w.cols)
        if inv is None:
            inv = self.from_word(reversed(self._some_reduced_word(w)))
            self._inv[w.cols] = inv
            self._inv[inv.cols] = w
        return inv

    def left_descents(self, w: WeylElement) -> frozenset:
        return self.right_descents(self.inverse(w))

    def reduced_word(self, w: WeylElement) -> tuple:
        """Lexicographically smallest reduced word."""
        word = self._word.get(w.cols)
        if word is not None:
            return word
        out = []
        x = w
        while True:
            ld = self.left_descents(x)
            if not ld:
                break
            i = min(ld)
            out.append(i)
            x = self.left_mul_simple(i, x)
        word = tuple(out)
        self._word[w.cols] = word
        self._length.setdefault(w.cols, len(word))
        return word

    def support(self, w: WeylElement) -> frozenset:
        return frozenset(self.reduced_word(w))

    # -- enumeration ------------------------------------------------------

    def _grow(self, max_length, cap):
        # BFS by left multiplication; x = s_i w has length n+1 unless it lies
        # in level n-1.  The smallest such i is the first letter of the
        # lex-minimal reduced word of x.
        roots = self.rs.roots
        nodes = list(self.rs.nodes)
        total = sum(len(lv) for lv in self._levels)
        while len(self._levels) <= max_length and not self._complete:
            n = len(self._levels)
            prev = self._prev_set
            nxt = {}
            for key, word in self._level_keys[-1]:
                for i in nodes:
                    p = self._perm[i - 1]
                    x = tuple(p[c] for c in key)
                    if x in prev:
                        continue
                    old = nxt.get(x)
                    if old is None or i < old[0]:
                        nxt[x] = (i,) + word
            if not nxt:
                self._complete = True
                break
            total += len(nxt)
            if total > cap:
                raise CapExceeded(f"Weyl group {self.rs.name} enumeration", total, cap)
            keys = sorted(nxt.items(), key=lambda kv: kv[1])
            level = []
            for key, word in keys:
                cols = tuple(roots[c] for c in key)
                self._word[cols] = word
                self._length[cols] = n
                level.append(WeylElement(cols, self))
            self._levels.append(level)
            self._level_keys.append(keys)
            self._prev_set = self._cur_set
            self._cur_set = set(nxt)

    def enumerate_up_to_length(self, L: int, cap: int | None = None) -> list:
        """Elements of length <= L ordered by (length, lex-minimal reduced word)."""
        cap = default_cap() if cap is None else cap
        self._grow(L, cap)
        return [w for lv in self._levels[: L + 1] for w in lv]

    def elements_of_length(self, n: int, cap: int | None = None) -> list:
        cap = default_cap() if cap is None else cap
        self._grow(n, cap)
        return list(self._levels[n]) if n < len(self._levels) else []

    def order(self) -> int:
        return self.rs.weyl_order()

    def enumerate_group(self, cap: int | None = None) -> list:
        cap = default_cap() if cap is None else cap
        est = self.order()
        if est > cap:
            raise CapExceeded(f"|W({self.rs.name})|", est, cap)
        self._grow(len(self.rs.positive_roots), cap)
        return [w for lv in self._levels for w in lv]

    def longest_element(self) -> WeylElement:
        w = self.identity
        while True:
            asc = next((i for i in self.rs.nodes if not self.is_negative(w.cols[i - 1])), None)
            if asc is None:
                return w
            w = self.right_mul_simple(w, asc)

    # -- cosets -----------------------------------------------------------

    def is_min_coset_rep(self, w: WeylElement, gens) -> bool:
        """w is minimal in w<s_i : i in gens>."""
        return all(not self.is_negative(w.cols[i - 1]) for i in gens)

    def is_min_double_coset_rep(self, w: WeylElement, gens) -> bool:
        if not self.is_min_coset_rep(w, gens):
            return False
        inv = self.inverse(w)
        return all(not self.is_negative(inv.cols[i - 1]) for i in gens)

    def min_coset_reps(self, gens, cap: int | None = None, max_length: int | None = None):
        """Minimal-length representatives of W / <s_i : i in gens>."""
        gens = frozenset(gens)
        for i in gens:
            self._check_node(i)
        pool = (self.enumerate_group(cap) if max_length is None
                else self.enumerate_up_to_length(max_length, cap))
        return [w for w in pool if self.is_min_coset_rep(w, gens)]

    def min_double_coset_reps(self, gens, cap: int | None = None):
        """Minimal-length representatives of <s_K> \\ W / <s_K> for K = gens."""
        gens = frozenset(gens)
        for i in gens:
            self._check_node(i)
        return [w for w in self.enumerate_group(cap) if self.is_min_double_coset_rep(w, gens)]

    def parabolic_subgroup(self, gens, cap: int | None = None):
        """Elements of <s_i : i in gens>, BFS order."""
        cap = default_cap() if cap is None else cap
        gens = sorted(gens)
        out = [self.identity]
        seen = {self.identity.cols}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for i in gens:
                    x = self.right_mul_simple(w, i)
                    if x.cols not in seen:
                        seen.add(x.cols)
                        nxt.append(x)
                        if len(seen) > cap:
                            raise CapExceeded(f"parabolic subgroup {gens}", len(seen), cap)
            out.extend(nxt)
            frontier = nxt
        return out

    # -- Bruhat order ------------------------------------------------------

    def bruhat_leq(self, u: WeylElement, v: WeylElement) -> bool:
        """Bruhat order via the descent recursion (memoised)."""
        key = (u.cols, v.cols)
        hit = self._bruhat.get(key)
        if hit is not None:
            return hit
        lu, lv = self.length(u), self.length(v)
        if lu == 0:
            res = True
        elif lu > lv:
            res = False
        elif lu == lv:
            res = u.cols == v.cols
        else:
            s = min(self.right_descents(v))
            vs = self.right_mul_simple(v, s)
            if self.is_negative(u.cols[s - 1]):
                res = self.bruhat_leq(self.right_mul_simple(u, s), vs)
            else:
                res = self.bruhat_leq(u, vs)
        self._bruhat[key] = res
        return res

    def bruhat_covers(self, elements=None, cap: int | None = None):
        """Cover pairs (u, v) with l(v) = l(u) + 1 and u <= v."""
        els = self.enumerate_group(cap) if elements is None else list(elements)
        by_len = {}
        for w in els:
            by_len.setdefault(self.length(w), []).append(w)
        out = []
        for n in sorted(by_len):
            for v in by_len.get(n + 1, []):
                for u in by_len[n]:
                    if self.bruhat_leq(u, v):
                        out.append((u, v))
        return out


def subword_bruhat_set(W: WeylGroup, v: WeylElement) -> set:
    """All u <= v by the subword property (brute force; oracle for small groups)."""
    word = W.reduced_word(v)
    out = set()
    for mask in iproduct((0, 1), repeat=len(word)):
        out.add(W.from_word([a for a, m in zip(word, mask) if m]).cols)
    return out


_CACHE: dict = {}


def weyl_group(rs: RootSystem) -> WeylGroup:
    """Shared WeylGroup instance per root system (caches are reused)."""
    key = (rs.blocks, rs.cartan)
    W = _CACHE.get(key)
    if W is None:
        W = _CACHE[key] = WeylGroup(rs)
    return W


def rational_rank(vectors) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    ncol = len(rows[0]) if rows else 0
    for c in range(ncol):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank

"""Type A_l as permutations of 1..l+1: an oracle independent of the root machinery.

s_i swaps the values in positions i, i+1 (right multiplication), w(alpha_k) =
e_{w(k)} - e_{w(k+1)}, and w fixes lambda_k iff w maps {1..k} onto itself.
"""

from itertools import combinations, permutations


def all_perms(l):
    return list(permutations(range(1, l + 2)))


def length(p):
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])


def from_word(l, word):
    p = list(range(1, l + 2))
    for i in word:
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def root_image_height(p, k):
    """Signed height of w(alpha_k) = e_a - e_b: b - a."""
    return p[k] - p[k - 1]


def fixes_root(p, k):
    return p[k - 1] == k and p[k] == k + 1


def fixes_lambda(p, k):
    return set(p[:k]) == set(range(1, k + 1))


def in_W_J(p, l, J):
    return all(root_image_height(p, k) > 0 for k in range(1, l + 1) if k not in J)


def in_A(p, l, J):
    return all(root_image_height(p, k) > 1 or not fixes_lambda(p, k)
               for k in range(1, l + 1) if k not in J)


def subsets(l):
    nodes = range(1, l + 1)
    return [frozenset(c) for r in range(l + 1) for c in combinations(nodes, r)]


def comp_without(l, K, k):
    """Interval containing k inside the path 1..l with the nodes of K removed."""
    lo = k
    while lo - 1 >= 1 and lo - 1 not in K:
        lo -= 1
    hi = k
    while hi + 1 <= l and hi + 1 not in K:
        hi += 1
    return set(range(lo, hi + 1))


def in_B(p, l, J, K):
    I = set(range(1, l + 1))
    for k in K - J:
        if fixes_lambda(p, k) and fixes_root(p, k):
            return False
    for k in J - K:
        if fixes_lambda(p, k):
            return False
    for k in I - (J | K):
        comp = comp_without(l, K, k)
        if J & comp:
            if fixes_lambda(p, k):
                return False
        elif fixes_lambda(p, k):
            if not all(fixes_root(p, i) for i in comp):
                return False
            for j in K - J:
                if (j - 1 in comp or j + 1 in comp) and fixes_root(p, j):
                    return False
    return True


def central_fiber(l):
    dim_g = (l + 1) ** 2 - 1
    out = []
    for J in subsets(l):
        for p in all_perms(l):
            if in_W_J(p, l, J) and in_A(p, l, J):
                out.append((J, p, dim_g - length(p) - len(J)))
    return out

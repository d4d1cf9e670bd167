from hypothesis import given, strategies as st

from wonderkit import build_root_system
from wonderkit.snf import matmul, smith_normal_form


def _det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _det([r[:j] + r[j + 1:] for r in m[1:]])
               for j in range(len(m)))


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n),
                       min_size=n, max_size=n)))
def test_snf_properties(m):
    U, D, V = smith_normal_form(m)
    assert matmul(matmul(U, m), V) == D
    assert abs(_det(U)) == 1 and abs(_det(V)) == 1
    diag = [D[i][i] for i in range(len(D))]
    assert all(D[i][j] == 0 for i in range(len(D)) for j in range(len(D)) if i != j)
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else b % a == 0


def test_cartan_invariants():
    # A3 center is cyclic of order 4; D4 is (Z/2)^2
    for t, inv in [("A3", [1, 1, 4]), ("D4", [1, 1, 2, 2]), ("B3", [1, 1, 2]), ("E8", [1] * 8)]:
        rs = build_root_system(t)
        _, D, _ = smith_normal_form(rs.cartan)
        assert [D[i][i] for i in range(rs.rank)] == inv

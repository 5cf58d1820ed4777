import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nal import linalg
from nal._modrank_py import rref_mod as rref_mod_py

P = linalg.PRIMES[0]


def dense_rank(matrix):
    """Textbook Gaussian elimination over Fractions."""
    m = [[Fraction(v) for v in row] for row in matrix]
    rank, ncols = 0, len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [u - f * v for u, v in zip(m[i], m[rank])]
        rank += 1
    return rank


def to_sparse(matrix):
    return [linalg.sparse_row({j: v for j, v in enumerate(row) if v}) for row in matrix]


matrices = st.integers(1, 12).flatmap(
    lambda ncols: st.lists(
        st.lists(st.sampled_from([0, 0, 0, 1, -1, 2, -3, 5, 7]), min_size=ncols, max_size=ncols),
        min_size=1, max_size=12,
    )
)


@given(matrices)
def test_rank_agrees_with_dense_oracle(matrix):
    rows = to_sparse(matrix)
    ncols = len(matrix[0])
    want = dense_rank(matrix)
    assert linalg.rank(rows, ncols, "exact") == want
    assert linalg.rank(rows, ncols, "modular") == want


def test_rank_agrees_on_larger_random_matrices():
    rng = random.Random(7)
    for trial in range(20):
        n, m = rng.randint(20, 50), rng.randint(20, 50)
        k = rng.randint(1, min(n, m))
        # product of random n x k and k x m integer matrices has rank <= k
        left = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(n)]
        right = [[rng.randint(-3, 3) for _ in range(m)] for _ in range(k)]
        matrix = [[sum(left[i][t] * right[t][j] for t in range(k)) for j in range(m)] for i in range(n)]
        want = dense_rank(matrix)
        rows = [r for r in to_sparse(matrix) if r[0]]
        assert linalg.rank(rows, m, "exact") == want
        assert linalg.rank(rows, m, "modular") == want


def test_rank_with_entries_that_vanish_mod_p():
    # P divides an entry: the first prime sees a smaller rank
    rows = [((0,), (P,)), ((1,), (1,))]
    assert linalg.rank(rows, 2, "modular") == 2


def test_reconstruction_needs_several_primes():
    # solution entries with numerators beyond one prime's reconstruction range
    big = 3 ** 40
    rows = [((0, 1), (big, 1)), ((0, 2), (1, big + 1))]
    certified = linalg.rref_certified(rows, 3)
    exact = linalg.rref_exact(rows, 3)
    assert certified.pivots == exact.pivots and certified.rows == exact.rows


def test_certified_and_exact_bases_coincide():
    rng = random.Random(11)
    for _ in range(30):
        ncols = rng.randint(3, 15)
        matrix = [[rng.choice([0, 0, 1, -1, 2, 4]) for _ in range(ncols)] for _ in range(rng.randint(1, 15))]
        rows = [r for r in to_sparse(matrix) if r[0]]
        if not rows:
            continue
        c = linalg.rref_certified(rows, ncols)
        e = linalg.rref_exact(rows, ncols)
        assert c.pivots == e.pivots
        assert c.rows == e.rows


def test_span_membership():
    basis = linalg.rref_exact([((0, 1), (1, 1)), ((1, 2), (1, -1))], 3)
    assert basis.contains({0: 1, 2: 1})
    assert basis.contains({0: 2, 1: 1, 2: 1})
    assert not basis.contains({2: 1})
    assert basis.residual({0: 1, 1: 1}) == {}


def test_primitive_rows_are_normalized():
    assert linalg.primitive_row((1, 4), (-6, 4)) == ((1, 4), (3, -2))


@pytest.mark.parametrize("a,m", [(5, 101), (101 - 3, 101), (pow(7, -1, P) * 3 % P, P)])
def test_rational_reconstruction(a, m):
    q = linalg.rational_reconstruction(a, m)
    assert q is not None
    assert (q.numerator - a * q.denominator) % m == 0


def test_reconstruction_recovers_small_fractions():
    assert linalg.rational_reconstruction(pow(7, -1, P) * 3 % P, P) == Fraction(3, 7)


def random_sparse(rng, nrows, ncols, density):
    rows = []
    for _ in range(nrows):
        d = {j: rng.randint(-P + 1, P - 1) for j in range(ncols) if rng.random() < density}
        if d:
            rows.append(linalg.sparse_row(d))
    return rows


@pytest.mark.skipif("compiled" not in linalg.available_backends(), reason="extension not built")
def test_kernels_agree():
    from nal import _modrank

    rng = random.Random(3)
    for trial in range(40):
        ncols = rng.randint(1, 60)
        rows = random_sparse(rng, rng.randint(1, 80), ncols, rng.choice([0.05, 0.2, 0.5]))
        rows = [(c, tuple(v % P for v in vs)) for c, vs in rows]
        got_c = _modrank.rref_mod(rows, ncols, P)
        got_p = rref_mod_py(rows, ncols, P)
        assert tuple(got_c[0]) == tuple(got_p[0])
        assert [tuple(map(tuple, r)) for r in got_c[1]] == [tuple(map(tuple, r)) for r in got_p[1]]


def test_backend_switch():
    before = linalg.get_backend()
    try:
        linalg.set_backend("python")
        assert linalg.get_backend() == "python"
        assert linalg.rank([((0, 1), (1, 1)), ((0, 1), (2, 2))], 2) == 1
    finally:
        linalg.set_backend(before)
    with pytest.raises(ValueError):
        linalg.set_backend("gpu")


def test_modular_rref_is_reduced():
    rows = [((0, 1, 2), (1, 2, 3)), ((0, 2), (2, 5)), ((1,), (1,))]
    piv, red = rref_mod_py(rows, 3, P)
    assert list(piv) == [0, 1, 2]
    for i, (cols, vals) in enumerate(red):
        assert list(cols) == [piv[i]] and list(vals) == [1]


def test_falls_back_to_python_when_extension_is_missing():
    import subprocess
    import sys

    code = ("import sys; sys.modules['nal._modrank'] = None\n"
            "import nal\n"
            "print(nal.get_backend(), nal.available_backends())")
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True).stdout
    assert out.strip() == "python ['python']"

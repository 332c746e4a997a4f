import random
from fractions import Fraction

from semizn import linalg


def test_solve_linear_and_nullspace():
    x = linalg.solve_linear([[2, 1], [1, -1]], [5, 1])
    assert x == [Fraction(2), Fraction(1)]
    assert linalg.solve_linear([[1, 1], [1, 1]], [0, 1]) is None
    ns = linalg.nullspace([[1, 1, 0]], 3)
    assert len(ns) == 2
    for v in ns:
        assert v[0] + v[1] == 0


def test_simplex_basic():
    # min -x1 - x2 st x1 + x2 <= 4 -> via equality form with slack
    status, x = linalg.simplex([[1, 1, 1]], [4], [-1, -1, 0])
    assert status == "optimal"
    assert x[0] + x[1] == 4
    status, _ = linalg.simplex([[1, 0]], [-1], [0, 0])  # x1 = -1, x >= 0
    assert status == "infeasible"
    status, _ = linalg.simplex([[1, -1]], [0], [-1, 0])  # x1 - x2 = 0, min -x1
    assert status == "unbounded"


def test_strict_positive_combination_gordan():
    # single column with a sign conflict
    status, lam = linalg.strict_positive_combination([[1, -1]])
    assert status == "infeasible"
    assert all(l >= 0 for l in lam) and any(l > 0 for l in lam)
    assert lam[0] * 1 + lam[1] * (-1) == 0
    # feasible: identity columns
    status, x = linalg.strict_positive_combination([[1, 0], [0, 1]])
    assert status == "feasible"
    assert x[0] > 0 and x[1] > 0


def test_gordan_agrees_with_fourier_motzkin():
    rng = random.Random(7)
    for _ in range(120):
        K = rng.randint(1, 4)
        m = rng.randint(0, 3)
        cols = [[Fraction(rng.randint(-3, 3)) for _ in range(K)] for _ in range(m)]
        if not cols:
            assert not linalg.fm_strictly_feasible(cols)
            continue
        status, _ = linalg.strict_positive_combination(cols)
        assert (status == "feasible") == linalg.fm_strictly_feasible(cols)


def test_smith_normal_form_random():
    rng = random.Random(11)
    for _ in range(60):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        A = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        D, U, V = linalg.smith_normal_form(A)
        # U A V == D
        UA = [[sum(U[i][k] * A[k][j] for k in range(m)) for j in range(n)] for i in range(m)]
        UAV = [[sum(UA[i][k] * V[k][j] for k in range(n)) for j in range(n)] for i in range(m)]
        assert UAV == D
        diag = [D[i][i] for i in range(min(m, n))]
        for i in range(m):
            for j in range(n):
                if i != j:
                    assert D[i][j] == 0
        for a, b in zip(diag, diag[1:]):
            if a and b:
                assert b % a == 0
            if a == 0:
                assert b == 0


def test_lattice_rank_and_full():
    assert linalg.lattice_rank_and_full([[1, 0], [0, 1]], 2) == (2, True)
    assert linalg.lattice_rank_and_full([[2, 0], [0, 1]], 2) == (2, False)
    assert linalg.lattice_rank_and_full([[1, 1]], 2) == (1, False)
    assert linalg.lattice_rank_and_full([], 0) == (0, True)
    assert linalg.lattice_rank_and_full([[-2, 3], [2, 0], [0, -2]], 2) == (2, False)


def test_hermite_row_basis_membership():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 3)
        vecs = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(rng.randint(1, 4))]
        basis = linalg.hermite_row_basis(vecs)
        for v in vecs:
            coords = linalg.lattice_coordinates(basis, v)
            assert coords is not None
            back = [sum(c * b[i] for c, b in zip(coords, basis)) for i in range(n)]
            assert back == list(v)


def test_primitive_vector():
    assert linalg.primitive_vector([Fraction(2, 3), Fraction(-4, 3)]) == (1, -2)
    assert linalg.primitive_vector([0, 0]) == (0, 0)
    assert linalg.primitive_vector([6, -9]) == (2, -3)

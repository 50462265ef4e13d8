import random
from fractions import Fraction

from hilbcomp import linalg


def test_rank_hand_values():
    assert linalg.rank([[1, 2], [2, 4]]) == 1
    assert linalg.rank([[1, 0], [0, 1]]) == 2
    assert linalg.rank([[0, 0], [0, 0]]) == 0
    assert linalg.rank([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 2


def test_rank_with_fractions():
    assert linalg.rank([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 2]]) == 2
    assert linalg.rank([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]]) == 1


def test_rank_agrees_with_rref_on_random_matrices():
    rng = random.Random(13)
    for _ in range(60):
        rows = rng.randint(1, 7)
        cols = rng.randint(1, 7)
        m = [[Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(cols)]
             for _ in range(rows)]
        _, pivots = linalg.rref(m)
        assert linalg.rank(m) == len(pivots)


def test_det_values():
    assert linalg.det([[2]]) == 2
    assert linalg.det([[1, 2], [3, 4]]) == -2
    assert linalg.det([[1, 2], [2, 4]]) == 0


def test_nullspace_annihilates():
    rng = random.Random(17)
    for _ in range(40):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 6)
        m = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
        basis = linalg.nullspace(m, cols)
        assert len(basis) == cols - linalg.rank(m)
        for vec in basis:
            for row in m:
                assert sum(Fraction(a) * v for a, v in zip(row, vec)) == 0


def test_solve_unique():
    sol = linalg.solve_unique([[1, 1], [1, 0]], [0, 2])
    assert sol == ((Fraction(2), Fraction(-2)), True)
    # inconsistent
    assert linalg.solve_unique([[1, 1], [2, 2]], [1, 3]) is None
    # underdetermined
    _, unique = linalg.solve_unique([[1, 1]], [2])
    assert not unique


def test_invert_roundtrip():
    m = [[1, 2], [3, 5]]
    inv = linalg.invert(m)
    prod = linalg.mat_mul(m, inv)
    assert prod == [[1, 0], [0, 1]]
    assert linalg.invert([[1, 2], [2, 4]]) is None


def test_in_row_span():
    rows = [[1, 0, 1], [0, 1, 1]]
    assert linalg.in_row_span(rows, [2, 3, 5])
    assert not linalg.in_row_span(rows, [0, 0, 1])
    assert linalg.in_row_span([], [0, 0, 0])
    assert not linalg.in_row_span([], [1, 0, 0])

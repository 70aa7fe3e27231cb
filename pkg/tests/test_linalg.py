"""Exact linear algebra, cross-checked against determinant-based oracles."""

import itertools
import random
from fractions import Fraction as F

from wittdiamond.linalg import (
    SpanBasis,
    combination,
    exact_det,
    exact_nullspace,
    exact_rank,
    solve_exact,
)
from wittdiamond.oracle import naive_det


def minor_rank(matrix):
    """Rank as the largest k with a nonzero k x k minor."""
    n = len(matrix)
    m = len(matrix[0]) if matrix else 0
    for k in range(min(n, m), 0, -1):
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(m), k):
                sub = [[matrix[i][j] for j in cols] for i in rows]
                if naive_det(sub) != 0:
                    return k
    return 0


def test_rank_examples():
    assert exact_rank([[F(1), F(1)], [F(2), F(3)]]) == 2
    assert exact_rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert exact_rank([]) == 0


def test_nullspace_proportional_rows():
    basis = exact_nullspace([[F(1), F(2)], [F(2), F(4)]])
    assert len(basis) == 1
    (v,) = basis
    assert v[0] * 1 + v[1] * 2 == 0
    assert exact_nullspace([]) == []


def test_rank_matches_minor_oracle_2x2_exhaustive():
    vals = [F(v) for v in range(-3, 4)]
    for a, b, c, d in itertools.product(vals, repeat=4):
        m = [[a, b], [c, d]]
        assert exact_rank(m) == minor_rank(m)


def test_rank_matches_minor_oracle_random_3x3_4x4():
    rng = random.Random(5)
    for _ in range(120):
        n = rng.choice([3, 4])
        m = [[F(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        assert exact_rank(m) == minor_rank(m)


def test_nullspace_vectors_are_in_kernel():
    rng = random.Random(9)
    for _ in range(40):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 5)
        m = [[F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(cols)] for _ in range(rows)]
        basis = exact_nullspace(m)
        assert exact_rank(m) + len(basis) == cols
        for v in basis:
            for row in m:
                assert sum(a * x for a, x in zip(row, v)) == 0


def test_exact_det_matches_naive():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(1, 5)
        m = [[F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        assert exact_det(m) == naive_det(m)
    assert naive_det([[F(1), F(1)], [F(2), F(3)]]) == 1
    assert naive_det([[F(1) if i == j else F(0) for j in range(4)] for i in range(4)]) == 1
    assert naive_det([[F(1), F(2)], [F(1), F(2)]]) == 0


def test_solve_exact():
    cols = [[F(1), F(0)], [F(1), F(1)]]
    x = solve_exact(cols, [F(3), F(2)])
    assert x == [F(1), F(2)]
    assert solve_exact([[F(1), F(2)]], [F(0), F(1)]) is None


def test_combination_and_span_basis():
    vs = [{(0,): F(1), (1,): F(2)}, {(1,): F(1)}]
    target = {(0,): F(2), (1,): F(1)}
    combo = combination(vs, target)
    assert combo == [F(2), F(-3)]
    sb = SpanBasis()
    assert sb.add(vs[0])
    assert sb.add(vs[1])
    assert not sb.add(target)
    assert sb.dim == 2
    assert sb.contains({(0,): F(5)})
    assert not sb.contains({(2,): F(1)})

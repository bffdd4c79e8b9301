import random
from fractions import Fraction

import pytest

from supercapelli.linalg import (mat_reduce, lin_solve, dict_vectors_rank,
                                 dict_vectors_basis, solve_in_span)


def matvec(rows, vec):
    return [sum((Fraction(a) * x for a, x in zip(row, vec)), Fraction(0))
            for row in rows]


def test_mat_reduce_known_matrix():
    rows = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]]
    red = mat_reduce(rows)
    assert red.rank == 2
    assert red.pivots == [0, 1]
    assert len(red.kernel) == 2
    for vec in red.kernel:
        assert matvec(rows, vec) == [0, 0, 0]


def test_mat_reduce_identity_and_empty():
    red = mat_reduce([[1, 0], [0, 1]])
    assert red.rank == 2 and red.kernel == []
    red = mat_reduce([], ncols=3)
    assert red.rank == 0 and len(red.kernel) == 3
    with pytest.raises(ValueError):
        mat_reduce([])


def test_mat_reduce_random_kernel_property():
    rng = random.Random(17)
    for _ in range(15):
        nr, nc = rng.randrange(1, 5), rng.randrange(1, 5)
        rows = [[Fraction(rng.randrange(-3, 4)) for _ in range(nc)]
                for _ in range(nr)]
        red = mat_reduce(rows)
        assert red.rank + len(red.kernel) == nc
        for vec in red.kernel:
            assert matvec(rows, vec) == [0] * nr


def test_lin_solve_unique():
    res = lin_solve([[2, 1], [1, -1]], [5, 1])
    assert res.unique
    assert res.solution == [Fraction(2), Fraction(1)]


def test_lin_solve_underdetermined():
    res = lin_solve([[1, 1]], [3])
    assert res.consistent and not res.unique
    assert len(res.kernel) == 1
    assert matvec([[1, 1]], res.solution) == [3]


def test_lin_solve_inconsistent():
    res = lin_solve([[1, 1], [2, 2]], [1, 3])
    assert not res.consistent
    assert res.solution is None


def test_dict_vectors_rank_and_basis():
    v1 = {'a': Fraction(1), 'b': Fraction(2)}
    v2 = {'a': Fraction(2), 'b': Fraction(4)}
    v3 = {'b': Fraction(1)}
    assert dict_vectors_rank([v1, v2]) == 1
    assert dict_vectors_rank([v1, v3]) == 2
    assert dict_vectors_basis([v1, v2, v3]) == [v1, v3]
    assert dict_vectors_rank([]) == 0


def test_solve_in_span():
    v1 = {'a': Fraction(1)}
    v2 = {'a': Fraction(1), 'b': Fraction(1)}
    target = {'a': Fraction(3), 'b': Fraction(2)}
    coeffs = solve_in_span([v1, v2], target)
    assert coeffs == [Fraction(1), Fraction(2)]
    assert solve_in_span([v1], {'b': Fraction(1)}) is None
    assert solve_in_span([v1, v2], {}) == [0, 0]

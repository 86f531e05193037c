from __future__ import annotations

import random

import pytest

import pathcomb as pc
from pathcomb.delannoy import _matmul, _transpose


def walk_count(i: int, j: int) -> int:
    """Count paths from (i, 0) to (0, j) by walking every one of them."""

    def rec(lev: int, col: int) -> int:
        if lev == 0 and col == j:
            return 1
        total = 0
        if col < j:
            total += rec(lev, col + 1)
            if lev > 0:
                total += rec(lev - 1, col + 1)
        if lev > 0:
            total += rec(lev - 1, col)
        return total

    return rec(i, 0)


def det_cofactor(m) -> int:
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for c in range(n):
        minor = [row[:c] + row[c + 1:] for row in m[1:]]
        total += (-1) ** c * m[0][c] * det_cofactor(minor)
    return total


class TestDelannoy:
    def test_border(self):
        assert pc.delannoy(0, 5) == 1
        assert pc.delannoy(7, 0) == 1

    def test_small_values(self):
        assert pc.delannoy(1, 1) == 3
        assert pc.delannoy(2, 2) == 13

    def test_symmetry(self):
        for i in range(9):
            for j in range(9):
                assert pc.delannoy(i, j) == pc.delannoy(j, i)

    def test_against_path_walker(self):
        for i in range(7):
            for j in range(7):
                assert pc.delannoy(i, j) == walk_count(i, j)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            pc.delannoy(-1, 0)


class TestDetExact:
    def test_identity(self):
        assert pc.det_exact([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1

    def test_empty_and_singletons(self):
        assert pc.det_exact([]) == 1
        assert pc.det_exact([[7]]) == 7

    def test_delannoy_2_and_3(self):
        assert pc.delannoy_matrix(2) == ((1, 1), (1, 3))
        assert pc.det_exact(pc.delannoy_matrix(2)) == 2
        assert pc.det_exact(pc.delannoy_matrix(3)) == 8

    def test_pivot_swap(self):
        assert pc.det_exact([[0, 1], [1, 0]]) == -1

    def test_singular(self):
        assert pc.det_exact([[1, 2], [2, 4]]) == 0
        assert pc.det_exact([[0, 0], [5, 3]]) == 0

    def test_not_square(self):
        with pytest.raises(ValueError):
            pc.det_exact([[1, 2]])

    def test_against_cofactor_oracle(self):
        rng = random.Random(20260810)
        for _ in range(300):
            n = rng.randint(1, 4)
            m = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert pc.det_exact(m) == det_cofactor(m)

    @pytest.mark.parametrize("n", range(9))
    def test_power_of_two(self, n):
        assert pc.det_exact(pc.delannoy_matrix(n)) == 2 ** (n * (n - 1) // 2)


class TestReduction:
    def test_degenerate(self):
        assert pc.verify_reduction(1)

    def test_order_two_block(self):
        a = pc.delannoy_matrix(2)
        e = ((1, -1), (0, 1))
        assert _matmul(_matmul(_transpose(e), a), e) == ((1, 0), (0, 2))
        assert pc.verify_reduction(2)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_holds(self, n):
        assert pc.verify_reduction(n)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            pc.verify_reduction(0)

import itertools
import math
import random

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from vslinks.algebra.snf import (
    determinant,
    diagonal,
    integer_kernel,
    kernel_mod,
    lattice_quotient,
    matmul,
    rank,
    row_reduce,
    smith_normal_form,
    solve_integer,
)


def check(m, ncols=None):
    ncols = len(m[0]) if m else (ncols or 0)
    u, d, v = smith_normal_form(m, ncols)
    assert matmul(matmul(u, m), v) == d
    assert determinant(u) in (1, -1)
    assert determinant(v) in (1, -1)
    diag = diagonal(d)
    for i in range(len(d)):
        for j in range(len(d[0])):
            if i != j:
                assert d[i][j] == 0
    nz = [x for x in diag if x]
    assert all(x > 0 for x in nz)
    assert diag[: len(nz)] == nz
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    return diag


def test_examples():
    assert smith_normal_form([[0, 0], [0, 0]]) == ([[1, 0], [0, 1]], [[0, 0], [0, 0]], [[1, 0], [0, 1]])
    assert smith_normal_form([[2, 0], [0, 3]])[1] == [[1, 0], [0, 6]]
    assert smith_normal_form([[1]])[1] == [[1]]


def test_random_against_sympy():
    rng = random.Random(11)
    for _ in range(60):
        r, c = rng.randint(1, 8), rng.randint(1, 8)
        m = [[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)]
        diag = check(m)
        want = sympy_snf(sympy.Matrix(m), domain=sympy.ZZ)
        want = sorted(abs(want[i, i]) for i in range(min(r, c)) if want[i, i])
        assert sorted(x for x in diag if x) == want


def _det_divisors(m):
    """d_k = gcd of k x k minors; invariant factors are d_k / d_{k-1}."""
    r, c = len(m), len(m[0])
    out, prev = [], 1
    for k in range(1, min(r, c) + 1):
        g = 0
        for rows in itertools.combinations(range(r), k):
            for cols in itertools.combinations(range(c), k):
                g = math.gcd(g, int(sympy.Matrix([[m[i][j] for j in cols] for i in rows]).det()))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def test_random_against_determinantal_divisors():
    rng = random.Random(5)
    for _ in range(30):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        m = [[rng.randint(-6, 6) for _ in range(c)] for _ in range(r)]
        diag = check(m)
        assert [x for x in diag if x] == _det_divisors(m)


def test_rank_kernel_solve():
    m = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert rank(m) == 2
    (k,) = integer_kernel(m, 3)
    assert all(sum(a * b for a, b in zip(row, k)) == 0 for row in m)
    assert solve_integer([[2, 0], [0, 3]], [4, 9], 2) == [2, 3]
    assert solve_integer([[2, 0], [0, 3]], [1, 0], 2) is None


def test_lattice_quotient():
    # Z^2 / <(2,0),(0,3)> = Z6
    assert lattice_quotient([[2, 0], [0, 3]], [[1, 0], [0, 1]], 2) == (0, [6])
    assert lattice_quotient([], [[1, 0], [0, 1]], 2) == (2, [])
    assert lattice_quotient([[4, 0]], [[2, 0], [0, 1]], 2) == (1, [2])
    with pytest.raises(ValueError):
        lattice_quotient([[1, 0]], [[2, 0]], 2)


def test_row_reduce_keeps_lattice():
    rng = random.Random(12)
    for _ in range(30):
        c = rng.randint(1, 5)
        m = [[rng.randint(-5, 5) for _ in range(c)] for _ in range(rng.randint(1, 12))]
        red = row_reduce(m, c)
        assert len(red) <= c
        # same row lattice: each side solves in terms of the other
        for rows, target in ((red, m), (m, red)):
            cols = [list(col) for col in zip(*rows)] if rows else []
            for v in target:
                assert not any(v) or solve_integer(cols, v, len(rows)) is not None


def test_kernel_mod_brute_force():
    rng = random.Random(13)
    for _ in range(20):
        mod = rng.choice([3, 4, 6])
        m = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(rng.randint(1, 4))]
        gens = kernel_mod(m, 3, mod)
        want = {x for x in itertools.product(range(mod), repeat=3)
                if all(sum(a * b for a, b in zip(row, x)) % mod == 0 for row in m)}
        # span of gens mod m, by closure
        span = {(0, 0, 0)}
        frontier = True
        while frontier:
            new = {tuple((a + b) % mod for a, b in zip(x, g)) for x in span for g in gens} - span
            frontier = bool(new)
            span |= new
        assert span == want

"""Tests for exact matrices: elimination, spectra, Chevalley splitting."""

import random
from fractions import Fraction

import pytest
import sympy

from dulac.errors import SingularMatrixError, UnsupportedSpectrumError
from dulac.field import IMAG, ONE, Scalar
from dulac.linalg import (
    ExactMatrix,
    charpoly,
    confluent_vandermonde_matrix,
    determinant,
    gaussian_roots,
    inverse,
    jordan_chevalley,
    kernel_basis,
    rank,
    solve,
    vandermonde_matrix,
)
from dulac.poly import Series


def _rand_matrix(rng, n, span=5, gaussian=False):
    rows = []
    for _ in range(n):
        row = []
        for _ in range(n):
            if gaussian and rng.random() < 0.3:
                row.append(Scalar(rng.randint(-span, span), rng.randint(-span, span)))
            else:
                row.append(Scalar(rng.randint(-span, span)))
        rows.append(row)
    return ExactMatrix.from_rows(rows)


def _to_sympy(m):
    return sympy.Matrix(
        m.nrows,
        m.ncols,
        lambda i, j: sympy.Rational(m[i, j].re) + sympy.I * sympy.Rational(m[i, j].im),
    )


def test_matrix_construction_and_indexing():
    m = ExactMatrix.from_rows([[1, 2], [Fraction(1, 2), 0]])
    assert m[0, 1] == Scalar(2)
    assert m[1, 0] == Scalar(Fraction(1, 2))
    assert m.row(0) == (Scalar(1), Scalar(2))
    assert ExactMatrix.identity(2) == ExactMatrix.diagonal([Scalar(1), Scalar(1)])
    assert ExactMatrix.zeros(2, 3).is_zero()


def test_matrix_algebra():
    a = ExactMatrix.from_rows([[1, 2], [3, 4]])
    b = ExactMatrix.from_rows([[0, 1], [1, 0]])
    assert a + b == ExactMatrix.from_rows([[1, 3], [4, 4]])
    assert a - a == ExactMatrix.zeros(2, 2)
    assert a * b == ExactMatrix.from_rows([[2, 1], [4, 3]])
    assert a * Scalar(2) == ExactMatrix.from_rows([[2, 4], [6, 8]])
    assert a.transpose() == ExactMatrix.from_rows([[1, 3], [2, 4]])
    assert a.trace() == Scalar(5)
    assert a.matvec([Scalar(1), Scalar(1)]) == (Scalar(3), Scalar(7))


def test_determinant_against_sympy():
    rng = random.Random(42)
    for _ in range(60):
        n = rng.randint(1, 5)
        gaussian = rng.random() < 0.4
        m = _rand_matrix(rng, n, gaussian=gaussian)
        got = determinant(m)
        want = sympy.expand(_to_sympy(m).det())
        assert sympy.Rational(got.re) + sympy.I * sympy.Rational(got.im) == want


def test_determinant_of_known_matrices():
    assert determinant(ExactMatrix.identity(4)) == ONE
    m = ExactMatrix.from_rows([[2, 0], [0, Fraction(1, 2)]])
    assert determinant(m) == ONE
    rot = ExactMatrix.from_rows([[0, -1], [1, 0]])
    assert determinant(rot) == ONE


def test_rank_and_kernel():
    m = ExactMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank(m) == 2
    basis = kernel_basis(m)
    assert len(basis) == 1
    vec = basis[0]
    assert m.matvec(vec) == (Scalar(0),) * 3
    assert rank(ExactMatrix.identity(3)) == 3
    assert kernel_basis(ExactMatrix.identity(3)) == []


def test_inverse_round_trip():
    rng = random.Random(7)
    done = 0
    while done < 20:
        m = _rand_matrix(rng, rng.randint(1, 4), gaussian=rng.random() < 0.3)
        if determinant(m).is_zero():
            continue
        assert m * inverse(m) == ExactMatrix.identity(m.nrows)
        done += 1


def test_inverse_singular_reports_rank():
    m = ExactMatrix.from_rows([[1, 2], [2, 4]])
    with pytest.raises(SingularMatrixError) as info:
        inverse(m)
    assert info.value.rank == 1


def test_solve_round_trip():
    rng = random.Random(15)
    done = 0
    while done < 20:
        n = rng.randint(1, 4)
        m = _rand_matrix(rng, n)
        if determinant(m).is_zero():
            continue
        x = [Scalar(rng.randint(-5, 5), rng.randint(-2, 2)) for _ in range(n)]
        rhs = m.matvec(x)
        assert solve(m, rhs) == list(x)
        done += 1


def test_solve_accepts_series_rhs():
    m = ExactMatrix.from_rows([[1, 1], [1, -1]])
    a = Series(1, {(2,): Scalar(1)}, 5)
    b = Series(1, {(1,): Scalar(1)}, 5)
    got = solve(m, [a + b, a - b])
    assert got[0] == a
    assert got[1] == b


def test_charpoly_matches_sympy():
    rng = random.Random(23)
    for _ in range(25):
        n = rng.randint(1, 4)
        m = _rand_matrix(rng, n, span=3)
        coeffs = charpoly(m)  # ascending [a0, ..., an], monic
        lam = sympy.Symbol("lam")
        want = sympy.Poly(_to_sympy(m).charpoly(lam).as_expr(), lam).all_coeffs()
        got = [sympy.Rational(c.re) + sympy.I * sympy.Rational(c.im) for c in coeffs]
        assert got == [sympy.nsimplify(w) for w in reversed(want)]


def test_gaussian_roots_rational_and_imaginary():
    # coefficients ascending: (z - 2)(z + 3) = -6 + z + z^2
    roots = dict(gaussian_roots([Scalar(-6), Scalar(1), Scalar(1)]))
    assert roots == {Scalar(2): 1, Scalar(-3): 1}
    # z^2 + 1 = (z - i)(z + i)
    roots = dict(gaussian_roots([Scalar(1), Scalar(0), Scalar(1)]))
    assert roots == {IMAG: 1, -IMAG: 1}
    # repeated root: (z - 1)^2 = 1 - 2z + z^2
    roots = dict(gaussian_roots([Scalar(1), Scalar(-2), Scalar(1)]))
    assert roots == {Scalar(1): 2}


def test_gaussian_roots_rejects_non_split():
    with pytest.raises(UnsupportedSpectrumError):
        gaussian_roots([Scalar(-2), Scalar(0), Scalar(1)])  # z^2 = 2


def test_jordan_chevalley_properties():
    rng = random.Random(31)
    for _ in range(30):
        n = rng.randint(1, 4)
        # build from known data, then conjugate: guaranteed split spectrum
        diag = [Scalar(rng.randint(-3, 3)) for _ in range(n)]
        rows = [[Scalar(0)] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = diag[i]
        for i in range(n):
            for j in range(i + 1, n):
                if diag[i] == diag[j] and rng.random() < 0.5:
                    rows[i][j] = Scalar(rng.randint(-2, 2))
        m = ExactMatrix.from_rows(rows)
        pair = jordan_chevalley(m)
        s, nil = pair.semisimple, pair.nilpotent
        assert s + nil == m
        assert s * nil == nil * s
        power = nil
        for _ in range(n):
            power = power * nil
        assert power.is_zero()
        # the semisimple part of an upper-triangular matrix keeps the diagonal
        assert all(s[i, i] == diag[i] for i in range(n))


def test_jordan_chevalley_of_rotation_block():
    m = ExactMatrix.from_rows([[2, -3], [3, 2]])
    pair = jordan_chevalley(m)
    assert pair.nilpotent.is_zero()
    assert pair.semisimple == m
    assert set(pair.eigenvalues) == {Scalar(2, 3), Scalar(2, -3)}


def test_vandermonde_matrix_and_determinant():
    nodes = [Scalar(1), Scalar(2), Scalar(4)]
    v = vandermonde_matrix(nodes)
    assert v.nrows == 3
    for i in range(3):
        for j in range(3):
            assert v[i, j] == nodes[j] ** i
    det = determinant(v)
    assert det == Scalar((2 - 1) * (4 - 1) * (4 - 2))
    with pytest.raises(ValueError):
        vandermonde_matrix([Scalar(1), Scalar(1)])


def test_confluent_vandermonde_small_case():
    # single node v with multiplicity 2: rows (1,0), (v,1)
    w = confluent_vandermonde_matrix([Scalar(5)], 2)
    assert w.rows() == (
        (Scalar(1), Scalar(0)),
        (Scalar(5), Scalar(1)),
    )
    assert not determinant(w).is_zero()


def test_confluent_vandermonde_reduces_to_plain_for_m1():
    nodes = [Scalar(-1), Scalar(2), Scalar(3)]
    assert confluent_vandermonde_matrix(nodes, 1) == vandermonde_matrix(nodes)

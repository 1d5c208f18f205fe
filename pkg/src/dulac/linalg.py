"""Exact linear algebra over the Gaussian rationals.

Everything here is exact: determinants use fraction-free Bareiss
elimination on Gaussian integers, linear solves use Gaussian elimination
with exact pivots, and the Jordan-Chevalley decomposition is computed
from the characteristic polynomial through explicit spectral idempotents.
Eigenvalue extraction enumerates Gaussian-integer root candidates of the
integerized characteristic polynomial, which finds every root in Q(i)
when the polynomial splits there and reports an unsupported spectrum
otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import SingularMatrixError, UnsupportedSpectrumError
from .field import ONE, ZERO, Scalar, Weight

__all__ = [
    "ExactMatrix",
    "ChevalleyPair",
    "determinant",
    "solve",
    "matvec_series",
    "charpoly",
    "gaussian_roots",
    "jordan_chevalley",
    "vandermonde_matrix",
    "confluent_vandermonde_matrix",
    "homogeneous_eigenvalues",
]


class ExactMatrix:
    """An immutable matrix of :class:`~dulac.field.Scalar` entries."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, rows: Sequence[Sequence[Scalar]]):
        rows = tuple(tuple(entry for entry in row) for row in rows)
        if not rows:
            raise ValueError("matrix needs at least one row")
        width = len(rows[0])
        if width == 0 or any(len(row) != width for row in rows):
            raise ValueError("rows must be nonempty and of equal length")
        for row in rows:
            for entry in row:
                if not isinstance(entry, Scalar):
                    raise TypeError("matrix entries must be Scalar")
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", width)
        object.__setattr__(self, "_rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def from_rows(cls, rows) -> "ExactMatrix":
        return cls(
            [[e if isinstance(e, Scalar) else Scalar(e) for e in row] for row in rows]
        )

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls([[ZERO] * ncols for _ in range(nrows)])

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> "ExactMatrix":
        n = len(values)
        return cls(
            [[values[i] if i == j else ZERO for j in range(n)] for i in range(n)]
        )

    def __getitem__(self, key) -> Scalar:
        i, j = key
        return self._rows[i][j]

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self._rows[i]

    def rows(self) -> Tuple[Tuple[Scalar, ...], ...]:
        return self._rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_shape(other)
        return ExactMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self._rows, other._rows)
            ]
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_shape(other)
        return ExactMatrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self._rows, other._rows)
            ]
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-a for a in row] for row in self._rows])

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.ncols != other.nrows:
                raise ValueError("matrix shapes are not compatible")
            cols = other.ncols
            return ExactMatrix(
                [
                    [
                        _dot(self._rows[i], tuple(other._rows[k][j] for k in range(other.nrows)))
                        for j in range(cols)
                    ]
                    for i in range(self.nrows)
                ]
            )
        if isinstance(other, (Scalar, int, Fraction)):
            c = other if isinstance(other, Scalar) else Scalar(other)
            return ExactMatrix([[a * c for a in row] for row in self._rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int, Fraction)):
            return self * other
        return NotImplemented

    def matvec(self, vec: Sequence[Scalar]) -> Tuple[Scalar, ...]:
        if len(vec) != self.ncols:
            raise ValueError("vector length does not match matrix width")
        return tuple(_dot(row, tuple(vec)) for row in self._rows)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(
            [
                [self._rows[i][j] for i in range(self.nrows)]
                for j in range(self.ncols)
            ]
        )

    def trace(self) -> Scalar:
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        total = ZERO
        for i in range(self.nrows):
            total = total + self._rows[i][i]
        return total

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self._rows for e in row)

    def is_diagonal(self) -> bool:
        return all(
            self._rows[i][j].is_zero()
            for i in range(self.nrows)
            for j in range(self.ncols)
            if i != j
        )

    def _check_shape(self, other: "ExactMatrix"):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("matrix shapes differ")

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(str(e) for e in row) for row in self._rows
        )
        return f"<ExactMatrix {self.nrows}x{self.ncols} [{body}]>"


def _dot(row: Sequence[Scalar], col: Sequence[Scalar]) -> Scalar:
    total = ZERO
    for a, b in zip(row, col):
        if a and b:
            total = total + a * b
    return total


# -- determinant (fraction-free) ---------------------------------------------


def determinant(matrix: ExactMatrix) -> Scalar:
    """Exact determinant via Bareiss elimination on Gaussian integers."""
    if matrix.nrows != matrix.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = matrix.nrows
    scale = Fraction(1)
    int_rows: List[List[Tuple[int, int]]] = []
    real_only = True
    for row in matrix.rows():
        lcm = 1
        for e in row:
            lcm = lcm * e.re.denominator // math.gcd(lcm, e.re.denominator)
            lcm = lcm * e.im.denominator // math.gcd(lcm, e.im.denominator)
        scale *= lcm
        ints = []
        for e in row:
            re = e.re.numerator * (lcm // e.re.denominator)
            im = e.im.numerator * (lcm // e.im.denominator)
            if im:
                real_only = False
            ints.append((re, im))
        int_rows.append(ints)
    if real_only:
        det_re, det_im = _bareiss_int([[c[0] for c in row] for row in int_rows]), 0
    else:
        det_re, det_im = _bareiss_gauss(int_rows)
    return Scalar(Fraction(det_re) / scale, Fraction(det_im) / scale)


def _bareiss_int(m: List[List[int]]) -> int:
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _gmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _gdiv_exact(a, b):
    # (a / b) in Z[i]; the caller guarantees divisibility.
    norm = b[0] * b[0] + b[1] * b[1]
    re = a[0] * b[0] + a[1] * b[1]
    im = a[1] * b[0] - a[0] * b[1]
    qre, rre = divmod(re, norm)
    qim, rim = divmod(im, norm)
    if rre or rim:
        raise ArithmeticError("inexact Gaussian-integer division")
    return (qre, qim)


def _bareiss_gauss(m: List[List[Tuple[int, int]]]) -> Tuple[int, int]:
    n = len(m)
    sign = 1
    prev = (1, 0)
    for k in range(n - 1):
        if m[k][k] == (0, 0):
            for r in range(k + 1, n):
                if m[r][k] != (0, 0):
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return (0, 0)
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            for j in range(k + 1, n):
                m[i][j] = _gdiv_exact(
                    _gsub(_gmul(m[i][j], pivot), _gmul(mik, m[k][j])), prev
                )
            m[i][k] = (0, 0)
        prev = pivot
    last = m[n - 1][n - 1]
    return (sign * last[0], sign * last[1])


# -- elimination --------------------------------------------------------------


def rank(matrix: ExactMatrix) -> int:
    rows = [list(row) for row in matrix.rows()]
    nrows, ncols = matrix.nrows, matrix.ncols
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [e * inv for e in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == nrows:
            break
    return r


def inverse(matrix: ExactMatrix) -> ExactMatrix:
    if matrix.nrows != matrix.ncols:
        raise ValueError("inverse of a non-square matrix")
    n = matrix.nrows
    aug = [list(matrix.row(i)) + [ONE if j == i else ZERO for j in range(n)]
           for i in range(n)]
    r = 0
    for col in range(n):
        pivot_row = None
        for i in range(r, n):
            if aug[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            raise SingularMatrixError(
                "matrix is singular", rank=rank(matrix)
            )
        aug[r], aug[pivot_row] = aug[pivot_row], aug[r]
        inv = aug[r][col].inverse()
        aug[r] = [e * inv for e in aug[r]]
        for i in range(n):
            if i != r and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[r])]
        r += 1
    return ExactMatrix([row[n:] for row in aug])


def kernel_basis(matrix: ExactMatrix) -> List[Tuple[Scalar, ...]]:
    """A deterministic basis of the right kernel, from the reduced echelon form."""
    rows = [list(row) for row in matrix.rows()]
    nrows, ncols = matrix.nrows, matrix.ncols
    pivots = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [e * inv for e in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ZERO] * ncols
        vec[fc] = ONE
        for prow, pcol in enumerate(pivots):
            vec[pcol] = -rows[prow][fc]
        basis.append(tuple(vec))
    return basis


def solve(matrix: ExactMatrix, rhs: Sequence) -> list:
    """Solve A x = b exactly for a square A.

    The right-hand side entries may be scalars or series: anything that
    supports addition among themselves and multiplication by a Scalar.
    Raises :class:`~dulac.errors.SingularMatrixError` carrying the exact
    rank when A is singular.
    """
    if matrix.nrows != matrix.ncols:
        raise ValueError("solve requires a square matrix")
    n = matrix.nrows
    if len(rhs) != n:
        raise ValueError("right-hand side length does not match")
    a = [list(matrix.row(i)) for i in range(n)]
    b = list(rhs)
    for col in range(n):
        pivot_row = None
        for i in range(col, n):
            if a[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            raise SingularMatrixError("singular system", rank=rank(matrix))
        a[col], a[pivot_row] = a[pivot_row], a[col]
        b[col], b[pivot_row] = b[pivot_row], b[col]
        for i in range(col + 1, n):
            if a[i][col]:
                factor = a[i][col] * a[col][col].inverse()
                a[i] = [x - factor * y for x, y in zip(a[i], a[col])]
                b[i] = b[i] - b[col] * factor
    x = [None] * n
    for i in range(n - 1, -1, -1):
        acc = b[i]
        for j in range(i + 1, n):
            if a[i][j]:
                acc = acc - x[j] * a[i][j]
        x[i] = acc * a[i][i].inverse()
    return x


def matvec_series(matrix: ExactMatrix, vec: Sequence) -> list:
    """Matrix of scalars times a vector of series (or scalars)."""
    if len(vec) != matrix.ncols:
        raise ValueError("vector length does not match matrix width")
    out = []
    for i in range(matrix.nrows):
        acc = None
        for j in range(matrix.ncols):
            c = matrix[i, j]
            if not c:
                continue
            piece = vec[j] * c
            acc = piece if acc is None else acc + piece
        if acc is None:
            acc = vec[0] * ZERO
        out.append(acc)
    return out


# -- characteristic polynomial & eigenvalues ---------------------------------


def charpoly(matrix: ExactMatrix) -> List[Scalar]:
    """Monic characteristic polynomial, ascending coefficients [a0..an]."""
    if matrix.nrows != matrix.ncols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = matrix.nrows
    cs = []
    m = matrix
    for k in range(1, n + 1):
        ck = m.trace() * Fraction(1, k)
        cs.append(ck)
        if k < n:
            m = matrix * (m - ExactMatrix.identity(n) * ck)
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    for k, ck in enumerate(cs, start=1):
        coeffs[n - k] = -ck
    return coeffs


def _integer_divisors(n: int) -> List[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _gauss_eval(coeffs: List[Tuple[int, int]], z: Tuple[int, int]) -> Tuple[int, int]:
    acc = (0, 0)
    for c in reversed(coeffs):
        acc = _gmul(acc, z)
        acc = (acc[0] + c[0], acc[1] + c[1])
    return acc


def _gauss_deflate(coeffs, root):
    # Divide by (mu - root); exact when root is a root.
    out = [(0, 0)] * (len(coeffs) - 1)
    carry = coeffs[-1]
    for k in range(len(coeffs) - 2, -1, -1):
        out[k] = carry
        carry = _gmul(carry, root)
        carry = (carry[0] + coeffs[k][0], carry[1] + coeffs[k][1])
    if carry != (0, 0):
        raise ArithmeticError("deflation by a non-root")
    return out


def gaussian_roots(coeffs: Sequence[Scalar]) -> List[Tuple[Scalar, int]]:
    """All roots in Q(i) of a monic polynomial, with multiplicities.

    Raises :class:`~dulac.errors.UnsupportedSpectrumError` unless the
    polynomial splits into linear factors over Q(i).  The search
    integerizes the polynomial so that every Gaussian-rational root
    becomes a Gaussian integer dividing the constant term, then tests the
    finitely many candidates of each admissible norm.
    """
    coeffs = list(coeffs)
    if not coeffs or coeffs[-1] != ONE:
        raise ValueError("expected a monic polynomial")
    n = len(coeffs) - 1
    if n == 0:
        return []
    denom = 1
    for c in coeffs:
        denom = denom * c.re.denominator // math.gcd(denom, c.re.denominator)
        denom = denom * c.im.denominator // math.gcd(denom, c.im.denominator)
    scaled = []
    for k, c in enumerate(coeffs):
        factor = denom ** (n - k)
        re = c.re * factor
        im = c.im * factor
        scaled.append((int(re), int(im)))
    zero_mult = 0
    while scaled and scaled[0] == (0, 0):
        scaled.pop(0)
        zero_mult += 1
    roots: List[Tuple[Scalar, int]] = []
    if zero_mult:
        roots.append((ZERO, zero_mult))
    if len(scaled) > 1:
        const = scaled[0]
        norm = const[0] * const[0] + const[1] * const[1]
        candidates = set()
        for d in _integer_divisors(norm):
            a = 0
            while a * a <= d:
                b2 = d - a * a
                b = math.isqrt(b2)
                if b * b == b2:
                    for ca, cb in ((a, b), (b, a)):
                        for sa in (ca, -ca):
                            for sb in (cb, -cb):
                                if (sa, sb) != (0, 0):
                                    candidates.add((sa, sb))
                a += 1
        work = scaled
        for cand in sorted(candidates):
            if len(work) <= 1:
                break
            if _gauss_eval(work, cand) != (0, 0):
                continue
            mult = 0
            while len(work) > 1 and _gauss_eval(work, cand) == (0, 0):
                work = _gauss_deflate(work, cand)
                mult += 1
            roots.append(
                (Scalar(Fraction(cand[0], denom), Fraction(cand[1], denom)), mult)
            )
        if len(work) > 1:
            raise UnsupportedSpectrumError(
                "characteristic polynomial does not split over Q(i)"
            )
    roots.sort(key=lambda rm: (rm[0].re, rm[0].im))
    return roots


# -- Jordan-Chevalley ----------------------------------------------------------

_Poly = List[Scalar]  # ascending coefficients


def _poly_mul(p: _Poly, q: _Poly) -> _Poly:
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    while len(out) > 1 and out[-1].is_zero():
        out.pop()
    return out


def _poly_add(p: _Poly, q: _Poly) -> _Poly:
    out = [ZERO] * max(len(p), len(q))
    for i, a in enumerate(p):
        out[i] = out[i] + a
    for i, b in enumerate(q):
        out[i] = out[i] + b
    while len(out) > 1 and out[-1].is_zero():
        out.pop()
    return out


def _poly_deflate(p: _Poly, a: Scalar) -> Tuple[_Poly, Scalar]:
    """Divide by (lambda - a): returns (quotient, remainder)."""
    out = [ZERO] * (len(p) - 1)
    carry = p[-1]
    for k in range(len(p) - 2, -1, -1):
        out[k] = carry
        carry = carry * a + p[k]
    return out, carry


def _poly_shift(p: _Poly, a: Scalar) -> _Poly:
    """Taylor coefficients of p(a + t) in t, via repeated division."""
    work = list(p)
    out = []
    for _ in range(len(p)):
        work, rem = _poly_deflate(work, a) if len(work) > 1 else ([ZERO], work[0])
        out.append(rem)
        if len(work) == 1 and work[0].is_zero():
            out.extend([ZERO] * (len(p) - len(out)))
            break
    return out[: len(p)]


def _series_inverse(coeffs: _Poly, order: int) -> _Poly:
    """Inverse of a unit power series modulo t^order."""
    c0 = coeffs[0]
    inv0 = c0.inverse()
    out = [inv0]
    for k in range(1, order):
        acc = ZERO
        for i in range(1, k + 1):
            ci = coeffs[i] if i < len(coeffs) else ZERO
            if ci:
                acc = acc + ci * out[k - i]
        out.append(-inv0 * acc)
    return out


def _matrix_polyval(coeffs: _Poly, matrix: ExactMatrix) -> ExactMatrix:
    n = matrix.nrows
    result = ExactMatrix.identity(n) * coeffs[-1]
    for k in range(len(coeffs) - 2, -1, -1):
        result = result * matrix + ExactMatrix.identity(n) * coeffs[k]
    return result


@dataclass(frozen=True)
class ChevalleyPair:
    """Jordan-Chevalley data: B = semisimple + nilpotent, both polynomial in B."""

    semisimple: ExactMatrix
    nilpotent: ExactMatrix
    eigenvalues: Tuple[Scalar, ...]
    diagonalizer: ExactMatrix


def jordan_chevalley(matrix: ExactMatrix) -> ChevalleyPair:
    """Exact semisimple/nilpotent splitting of a matrix over Q(i).

    The semisimple part is the matrix evaluated at the interpolation
    polynomial that is congruent to each eigenvalue modulo the
    corresponding primary factor, so both parts commute by construction.
    The diagonalizer's columns are eigenspace bases of the semisimple
    part; for an already-diagonal semisimple part it is the identity and
    the eigenvalue order follows the diagonal.
    """
    if matrix.nrows != matrix.ncols:
        raise ValueError("jordan_chevalley of a non-square matrix")
    n = matrix.nrows
    p = charpoly(matrix)
    root_list = gaussian_roots(p)
    if len(root_list) == 1:
        lam = root_list[0][0]
        semisimple = ExactMatrix.identity(n) * lam
    else:
        s_poly = [ZERO]
        for lam, mult in root_list:
            q_k = list(p)
            for _ in range(mult):
                q_k, rem = _poly_deflate(q_k, lam)
                if not rem.is_zero():
                    raise ArithmeticError("primary factor division was inexact")
            shifted = _poly_shift(q_k, lam)
            inv = _series_inverse(shifted, mult)
            h_k = [inv[mult - 1]]
            for j in range(mult - 2, -1, -1):
                h_k = _poly_add(_poly_mul(h_k, [-lam, ONE]), [inv[j]])
            e_k = _poly_mul(h_k, q_k)
            s_poly = _poly_add(s_poly, [c * lam for c in e_k])
        semisimple = _matrix_polyval(s_poly, matrix)
    nilpotent = matrix - semisimple
    if semisimple * nilpotent != nilpotent * semisimple:
        raise ArithmeticError("computed parts do not commute")
    power = nilpotent
    for _ in range(n - 1):
        power = power * nilpotent
    if not power.is_zero():
        raise ArithmeticError("computed nilpotent part is not nilpotent")

    if semisimple.is_diagonal():
        eigenvalues = tuple(semisimple[i, i] for i in range(n))
        diagonalizer = ExactMatrix.identity(n)
    else:
        columns: List[Tuple[Scalar, ...]] = []
        eigen: List[Scalar] = []
        for lam, mult in root_list:
            shifted_m = semisimple - ExactMatrix.identity(n) * lam
            basis = kernel_basis(shifted_m)
            if len(basis) != mult:
                raise ArithmeticError("eigenspace dimension mismatch")
            columns.extend(basis)
            eigen.extend([lam] * mult)
        diagonalizer = ExactMatrix(
            [[columns[j][i] for j in range(n)] for i in range(n)]
        )
        eigenvalues = tuple(eigen)
    return ChevalleyPair(semisimple, nilpotent, eigenvalues, diagonalizer)


# -- Vandermonde systems -------------------------------------------------------


def vandermonde_matrix(nodes: Sequence[Scalar]) -> ExactMatrix:
    """Rows of increasing powers of pairwise distinct nodes."""
    q = len(nodes)
    if q == 0:
        raise ValueError("need at least one node")
    if len({(s.re, s.im) for s in nodes}) != q:
        raise ValueError("vandermonde nodes must be pairwise distinct")
    rows = []
    current = [ONE] * q
    for _ in range(q):
        rows.append(list(current))
        current = [c * node for c, node in zip(current, nodes)]
    return ExactMatrix(rows)


def confluent_vandermonde_matrix(nodes: Sequence[Scalar], m: int) -> ExactMatrix:
    """Block Vandermonde with binomially scaled derivative blocks.

    Block p (1-based, p <= m) holds entries C(l, p-1) * node^(l-p+1) in row
    l, with the entry defined as zero whenever l < p-1.  With m = 1 this
    is the plain Vandermonde matrix.  The order is q*m for q distinct
    nodes, and the determinant has absolute value
    prod_{i<j} |w_j - w_i|^(m^2).
    """
    q = len(nodes)
    if q == 0:
        raise ValueError("need at least one node")
    if m < 1:
        raise ValueError("block count must be positive")
    if len({(s.re, s.im) for s in nodes}) != q:
        raise ValueError("vandermonde nodes must be pairwise distinct")
    size = q * m
    powers = [[ONE] for _ in range(q)]
    for k in range(q):
        for _ in range(size):
            powers[k].append(powers[k][-1] * nodes[k])
    rows = []
    for ell in range(size):
        row = []
        for p in range(1, m + 1):
            for k in range(q):
                if ell < p - 1:
                    row.append(ZERO)
                else:
                    row.append(powers[k][ell - p + 1] * math.comb(ell, p - 1))
        rows.append(row)
    return ExactMatrix(rows)


def homogeneous_eigenvalues(eigenvalues: Sequence[Weight], k: int) -> Tuple[Weight, ...]:
    """Weights of all degree-k monomials: the spectrum of the semisimple
    derivation on the degree-k homogeneous component."""
    from .poly import iter_exponents, weight

    if k < 0:
        raise ValueError("degree must be nonnegative")
    found = {weight(e, eigenvalues) for e in iter_exponents(len(eigenvalues), k)}
    return tuple(sorted(found, key=lambda w: w.sort_key()))

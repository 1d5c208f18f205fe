"""Sparse truncated multivariate power series and the Lie calculus on them.

A :class:`Series` is a finite dict from exponent tuples to nonzero
:class:`~dulac.field.Scalar` coefficients.  When ``trunc_order`` is an
integer ``N`` the series represents an element of K[[x]]/<x>^N and never
stores a monomial of total degree >= N; ``trunc_order=None`` marks an
exact polynomial.  Binary operations work modulo the smaller of the two
truncation ideals, which is the finest claim the inputs support.

Derivations along vector fields with no constant term map <x>^N into
itself, so the Lie derivative, Lie bracket and composition below are all
well defined on the quotient and keep the truncation order of their
arguments.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple, Union

from .errors import CompositionError, TruncationError
from .field import (
    ONE,
    ZERO,
    Scalar,
    Weight,
    weight_embed,
    weights_from_scalars,
)

Exponent = Tuple[int, ...]

__all__ = [
    "Exponent",
    "Series",
    "VectorField",
    "WeightDecomposition",
    "grlex_key",
    "grevlex_key",
    "iter_exponents",
    "weight",
    "series_weights",
    "weight_decompose",
    "lie_derivative",
    "lie_derivative_iter",
    "lie_bracket",
    "compose",
]


def grlex_key(e: Exponent):
    """Graded lexicographic sort key (higher key = larger monomial)."""
    return (sum(e), e)


def grevlex_key(e: Exponent):
    """Graded reverse lexicographic sort key."""
    return (sum(e), tuple(-k for k in reversed(e)))


TERM_ORDERS = {"grlex": grlex_key, "grevlex": grevlex_key}


def iter_exponents(nvars: int, total: int) -> Iterator[Exponent]:
    """All exponent tuples of the given total degree, first variable heaviest."""
    if nvars == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for tail in iter_exponents(nvars - 1, total - head):
            yield (head,) + tail


def _min_trunc(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class Series:
    """Sparse exact series, optionally truncated at a fixed order."""

    __slots__ = ("nvars", "trunc", "terms")

    def __init__(
        self,
        nvars: int,
        terms: Optional[Dict[Exponent, Scalar]] = None,
        trunc: Optional[int] = None,
    ):
        if trunc is not None and trunc < 1:
            raise ValueError("truncation order must be a positive integer")
        clean: Dict[Exponent, Scalar] = {}
        if terms:
            for exps, coeff in terms.items():
                if len(exps) != nvars:
                    raise ValueError("exponent length does not match nvars")
                if any(e < 0 for e in exps):
                    raise ValueError("negative exponent")
                if coeff.is_zero():
                    continue
                if trunc is not None and sum(exps) >= trunc:
                    continue
                clean[exps] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "trunc", trunc)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int, trunc: Optional[int] = None) -> "Series":
        return cls(nvars, {}, trunc)

    @classmethod
    def constant(cls, value, nvars: int, trunc: Optional[int] = None) -> "Series":
        c = value if isinstance(value, Scalar) else Scalar(value)
        return cls(nvars, {(0,) * nvars: c}, trunc)

    @classmethod
    def variable(cls, index: int, nvars: int, trunc: Optional[int] = None) -> "Series":
        if not 0 <= index < nvars:
            raise ValueError("variable index out of range")
        exps = tuple(1 if k == index else 0 for k in range(nvars))
        return cls(nvars, {exps: ONE}, trunc)

    @classmethod
    def monomial(
        cls,
        exps: Exponent,
        coeff=1,
        trunc: Optional[int] = None,
    ) -> "Series":
        c = coeff if isinstance(coeff, Scalar) else Scalar(coeff)
        return cls(len(exps), {tuple(exps): c}, trunc)

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> Optional[int]:
        """Largest stored total degree, or None for the zero series."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def min_degree(self) -> Optional[int]:
        if not self.terms:
            return None
        return min(sum(e) for e in self.terms)

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * self.nvars, ZERO)

    def coefficient(self, exps: Exponent) -> Scalar:
        return self.terms.get(tuple(exps), ZERO)

    def sorted_terms(self, key=grlex_key, reverse: bool = True):
        """Terms as (exponent, coefficient), leading monomial first by default."""
        return [
            (e, self.terms[e])
            for e in sorted(self.terms, key=key, reverse=reverse)
        ]

    def leading_monomial(self, key=grlex_key) -> Optional[Exponent]:
        if not self.terms:
            return None
        return max(self.terms, key=key)

    def leading_coefficient(self, key=grlex_key) -> Scalar:
        lm = self.leading_monomial(key)
        return ZERO if lm is None else self.terms[lm]

    def monic(self, key=grlex_key) -> "Series":
        lc = self.leading_coefficient(key)
        if lc.is_zero() or lc == ONE:
            return self
        return self * lc.inverse()

    def homogeneous_part(self, k: int) -> "Series":
        """The degree-k homogeneous component.

        Asking at or above the truncation order is an error: those
        coefficients were discarded and the answer would be meaningless.
        """
        if k < 0:
            raise ValueError("degree must be nonnegative")
        if self.trunc is not None and k >= self.trunc:
            raise TruncationError(
                f"degree {k} is not represented at truncation order {self.trunc}"
            )
        picked = {e: c for e, c in self.terms.items() if sum(e) == k}
        return Series(self.nvars, picked, self.trunc)

    def homogeneous_degrees(self) -> Tuple[int, ...]:
        return tuple(sorted({sum(e) for e in self.terms}))

    def truncate(self, order: int) -> "Series":
        """View this series modulo <x>^order (order must not exceed what is known)."""
        if self.trunc is not None and order > self.trunc:
            raise TruncationError(
                f"cannot extend truncation order {self.trunc} to {order}"
            )
        return Series(self.nvars, self.terms, order)

    # -- arithmetic -------------------------------------------------------

    def __eq__(self, other) -> bool:
        # Mathematical equality of the stored representatives; the
        # truncation flag is bookkeeping, not part of the value.
        if not isinstance(other, Series):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __add__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        if self.nvars != other.nvars:
            raise ValueError("variable counts differ")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            acc = terms.get(e)
            if acc is None:
                terms[e] = c
            else:
                s = acc + c
                if s.is_zero():
                    del terms[e]
                else:
                    terms[e] = s
        return Series(self.nvars, terms, _min_trunc(self.trunc, other.trunc))

    def __sub__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Series":
        return Series(
            self.nvars, {e: -c for e, c in self.terms.items()}, self.trunc
        )

    def __mul__(self, other) -> "Series":
        if isinstance(other, Series):
            if self.nvars != other.nvars:
                raise ValueError("variable counts differ")
            trunc = _min_trunc(self.trunc, other.trunc)
            terms: Dict[Exponent, Scalar] = {}
            for e1, c1 in self.terms.items():
                d1 = sum(e1)
                for e2, c2 in other.terms.items():
                    if trunc is not None and d1 + sum(e2) >= trunc:
                        continue
                    e = tuple(a + b for a, b in zip(e1, e2))
                    prod = c1 * c2
                    acc = terms.get(e)
                    if acc is None:
                        terms[e] = prod
                    else:
                        s = acc + prod
                        if s.is_zero():
                            del terms[e]
                        else:
                            terms[e] = s
            return Series(self.nvars, terms, trunc)
        if isinstance(other, (Scalar, int, Fraction)):
            c = other if isinstance(other, Scalar) else Scalar(other)
            if c.is_zero():
                return Series.zero(self.nvars, self.trunc)
            return Series(
                self.nvars, {e: v * c for e, v in self.terms.items()}, self.trunc
            )
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Series":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series exponent must be a nonnegative integer")
        result = Series.constant(ONE, self.nvars, self.trunc)
        for _ in range(exponent):
            result = result * self
        return result

    def __repr__(self) -> str:
        if not self.terms:
            body = "0"
        else:
            body = " + ".join(
                f"{c}*x^{e}" for e, c in self.sorted_terms()
            )
        tag = "" if self.trunc is None else f" mod <x>^{self.trunc}"
        return f"<Series {body}{tag}>"


def _partial(s: Series, j: int) -> Series:
    """d/dx_j applied to the stored terms.

    The result is only used inside products with zero-constant-term
    factors, where the final truncation restores a sound claim; it keeps
    the argument's truncation marker for that reason.
    """
    terms: Dict[Exponent, Scalar] = {}
    for e, c in s.terms.items():
        k = e[j]
        if k == 0:
            continue
        lowered = tuple(v - 1 if idx == j else v for idx, v in enumerate(e))
        terms[lowered] = c * k
    return Series(s.nvars, terms, s.trunc)


# -- weights ---------------------------------------------------------------


def weight(exps: Exponent, eigenvalues: Sequence[Weight]) -> Weight:
    """Weight of a monomial: the eigenvalue combination sum_j e_j * lambda_j."""
    if len(exps) != len(eigenvalues):
        raise ValueError("exponent length does not match eigenvalue count")
    total = Weight.zero(eigenvalues[0].dim)
    for e, lam in zip(exps, eigenvalues):
        if e:
            total = total + lam.scale(e)
    return total


def series_weights(s: Series, eigenvalues: Sequence[Weight]):
    """The set of weights appearing among the terms of a series."""
    return {weight(e, eigenvalues) for e in s.terms}


class WeightDecomposition:
    """A series split into its weight-homogeneous components.

    Components are stored in ascending coordinate order of their weights,
    which fixes a deterministic iteration order everywhere downstream.
    """

    __slots__ = ("components",)

    def __init__(self, components: Dict[Weight, Series]):
        ordered = {
            w: components[w]
            for w in sorted(components, key=lambda w: w.sort_key())
        }
        object.__setattr__(self, "components", ordered)

    def __setattr__(self, name, value):
        raise AttributeError("WeightDecomposition is immutable")

    @property
    def weights(self) -> Tuple[Weight, ...]:
        return tuple(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, w: Weight) -> Series:
        return self.components[w]

    def __iter__(self):
        return iter(self.components.items())

    def reconstruct(self, nvars: int, trunc: Optional[int]) -> Series:
        total = Series.zero(nvars, trunc)
        for part in self.components.values():
            total = total + part
        return total


def weight_decompose(s: Series, eigenvalues: Sequence[Weight]) -> WeightDecomposition:
    """Group the terms of a series by monomial weight."""
    if len(eigenvalues) != s.nvars:
        raise ValueError("eigenvalue count does not match variable count")
    buckets: Dict[Weight, Dict[Exponent, Scalar]] = {}
    for e, c in s.terms.items():
        w = weight(e, eigenvalues)
        buckets.setdefault(w, {})[e] = c
    return WeightDecomposition(
        {w: Series(s.nvars, terms, s.trunc) for w, terms in buckets.items()}
    )


# -- derivations ------------------------------------------------------------

FieldLike = Union["VectorField", Sequence[Series]]


def _components(f: FieldLike) -> Tuple[Series, ...]:
    if isinstance(f, VectorField):
        return f.components
    return tuple(f)


def lie_derivative(f: FieldLike, s: Series) -> Series:
    """Directional derivative Dpsi . f along a zero-constant-term field."""
    comps = _components(f)
    if len(comps) != s.nvars:
        raise ValueError("field dimension does not match variable count")
    trunc = s.trunc
    for c in comps:
        if not c.constant_term().is_zero():
            raise CompositionError(
                "lie derivative requires a field with no constant term"
            )
        trunc = _min_trunc(trunc, c.trunc)
    result = Series.zero(s.nvars, trunc)
    for j, comp in enumerate(comps):
        if comp.is_zero():
            continue
        d = _partial(s, j)
        if d.is_zero():
            continue
        result = result + d * comp
    if trunc is not None:
        result = result.truncate(trunc)
    return result


def lie_derivative_iter(f: FieldLike, s: Series, count: int) -> Series:
    """The count-fold Lie derivative; count = 0 returns the series itself."""
    if count < 0:
        raise ValueError("iteration count must be nonnegative")
    out = s
    for _ in range(count):
        out = lie_derivative(f, out)
    return out


def lie_bracket(f: FieldLike, g: FieldLike) -> Tuple[Series, ...]:
    """Componentwise [f, g] = Dg . f - Df . g."""
    fc = _components(f)
    gc = _components(g)
    if len(fc) != len(gc):
        raise ValueError("field dimensions differ")
    return tuple(lie_derivative(fc, gi) - lie_derivative(gc, fi)
                 for fi, gi in zip(fc, gc))


def compose(s: Series, subs: Sequence[Series]) -> Series:
    """Substitute subs[j] for x_j; each substituted series needs a zero
    constant term so the result stays in the local ring."""
    subs = tuple(subs)
    if len(subs) != s.nvars:
        raise ValueError("substitution length does not match variable count")
    if not subs:
        raise ValueError("cannot compose a series in zero variables")
    target_nvars = subs[0].nvars
    trunc = s.trunc
    for h in subs:
        if h.nvars != target_nvars:
            raise ValueError("substituted series must share one variable set")
        if not h.constant_term().is_zero():
            raise CompositionError("substituted series has a nonzero constant term")
        trunc = _min_trunc(trunc, h.trunc)
    powers: Dict[int, list] = {j: [Series.constant(ONE, target_nvars, trunc)]
                               for j in range(s.nvars)}

    def power(j: int, k: int) -> Series:
        cache = powers[j]
        while len(cache) <= k:
            cache.append(cache[-1] * subs[j])
        return cache[k]

    total = Series.zero(target_nvars, trunc)
    for e, c in s.terms.items():
        term = Series.constant(c, target_nvars, trunc)
        for j, k in enumerate(e):
            if k:
                term = term * power(j, k)
        total = total + term
    return total


# -- vector fields -----------------------------------------------------------


class VectorField:
    """A formal vector field with a stationary point at the origin.

    Carries its components together with the exact Jordan-Chevalley data
    of the linear part: ``linear = semisimple + nilpotent``, the
    eigenvalues as :class:`Weight` vectors, the concrete basis values that
    embed those weights into Q(i), and an invertible matrix whose columns
    diagonalize the semisimple part.
    """

    __slots__ = (
        "components",
        "linear",
        "semisimple",
        "nilpotent",
        "eigenvalues",
        "embedding",
        "diagonalizer",
    )

    def __init__(
        self,
        components: Sequence[Series],
        linear,
        semisimple,
        nilpotent,
        eigenvalues: Sequence[Weight],
        embedding: Sequence[Scalar],
        diagonalizer,
    ):
        components = tuple(components)
        n = len(components)
        if n == 0:
            raise ValueError("a vector field needs at least one component")
        for comp in components:
            if comp.nvars != n:
                raise ValueError("component variable count does not match dimension")
            if not comp.constant_term().is_zero():
                raise ValueError("vector field must vanish at the origin")
        if linear.nrows != n or linear.ncols != n:
            raise ValueError("linear part has the wrong shape")
        for i, comp in enumerate(components):
            for j in range(n):
                e = tuple(1 if k == j else 0 for k in range(n))
                if comp.coefficient(e) != linear[i, j]:
                    raise ValueError(
                        "degree-1 terms of the components disagree with the linear part"
                    )
        if semisimple + nilpotent != linear:
            raise ValueError("semisimple and nilpotent parts do not sum to the linear part")
        if semisimple * nilpotent != nilpotent * semisimple:
            raise ValueError("semisimple and nilpotent parts do not commute")
        power = nilpotent
        for _ in range(n - 1):
            power = power * nilpotent
        if not power.is_zero():
            raise ValueError("nilpotent part is not nilpotent")
        if len(eigenvalues) != n:
            raise ValueError("need one eigenvalue per dimension")
        object.__setattr__(self, "components", components)
        object.__setattr__(self, "linear", linear)
        object.__setattr__(self, "semisimple", semisimple)
        object.__setattr__(self, "nilpotent", nilpotent)
        object.__setattr__(self, "eigenvalues", tuple(eigenvalues))
        object.__setattr__(self, "embedding", tuple(embedding))
        object.__setattr__(self, "diagonalizer", diagonalizer)

    def __setattr__(self, name, value):
        raise AttributeError("VectorField is immutable")

    @classmethod
    def from_components(cls, components: Sequence[Series]) -> "VectorField":
        """Build a field from its components, deriving all linear data.

        The linear part is read off the degree-1 terms and decomposed
        exactly; raises
        :class:`~dulac.errors.UnsupportedSpectrumError` when its
        characteristic polynomial does not split over Q(i).
        """
        from . import linalg

        components = tuple(components)
        n = len(components)
        rows = []
        for comp in components:
            if comp.nvars != n:
                raise ValueError("component variable count does not match dimension")
            row = []
            for j in range(n):
                e = tuple(1 if k == j else 0 for k in range(n))
                row.append(comp.coefficient(e))
            rows.append(row)
        linear = linalg.ExactMatrix.from_rows(rows)
        pair = linalg.jordan_chevalley(linear)
        if pair.semisimple.is_diagonal():
            scalars = tuple(pair.semisimple[i, i] for i in range(n))
            diagonalizer = linalg.ExactMatrix.identity(n)
        else:
            scalars = pair.eigenvalues
            diagonalizer = pair.diagonalizer
        weights, embedding = weights_from_scalars(scalars)
        return cls(
            components,
            linear,
            pair.semisimple,
            pair.nilpotent,
            weights,
            embedding,
            diagonalizer,
        )

    @classmethod
    def linear_field(cls, matrix, trunc: Optional[int] = None) -> "VectorField":
        """The linear field x -> M x as a VectorField."""
        n = matrix.nrows
        comps = []
        for i in range(n):
            terms = {}
            for j in range(n):
                c = matrix[i, j]
                if not c.is_zero():
                    e = tuple(1 if k == j else 0 for k in range(n))
                    terms[e] = c
            comps.append(Series(n, terms, trunc))
        return cls.from_components(comps)

    # -- derived views ---------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.components)

    @property
    def trunc_order(self) -> Optional[int]:
        t = None
        for comp in self.components:
            t = _min_trunc(t, comp.trunc)
        return t

    def semisimple_is_diagonal(self) -> bool:
        return self.semisimple.is_diagonal()

    def eigenvalue_scalars(self) -> Tuple[Scalar, ...]:
        return tuple(weight_embed(w, self.embedding) for w in self.eigenvalues)

    def semisimple_components(self) -> Tuple[Series, ...]:
        """Components of the linear field B_s x (exact polynomials)."""
        n = self.nvars
        comps = []
        for i in range(n):
            terms = {}
            for j in range(n):
                c = self.semisimple[i, j]
                if not c.is_zero():
                    e = tuple(1 if k == j else 0 for k in range(n))
                    terms[e] = c
            comps.append(Series(n, terms))
        return tuple(comps)

    def g_components(self) -> Tuple[Series, ...]:
        """f minus its semisimple linear part: the operand of L_g."""
        return tuple(
            comp - bs for comp, bs in zip(self.components, self.semisimple_components())
        )

    def truncate(self, order: int) -> "VectorField":
        return VectorField(
            tuple(c.truncate(order) for c in self.components),
            self.linear,
            self.semisimple,
            self.nilpotent,
            self.eigenvalues,
            self.embedding,
            self.diagonalizer,
        )

    def __repr__(self) -> str:
        return f"<VectorField dim={self.nvars} trunc={self.trunc_order}>"

"""Truncated polynomial ideals and semi-invariant extraction.

Every ideal here is really ``I + <x>^N`` for a user-chosen truncation
order N: the quotient-ring device that turns formal power-series
statements into finite computations.  Membership is decided with a
reduced Groebner basis of the generators together with all monomials of
degree N.  The degree-N monomials take part in the pair processing —
a polynomial whose leading term has low-degree tail content can reveal
new members through them (e.g. ``x^2*y + y`` at N = 4 yields ``y``) —
but only the ones not swallowed by polynomial leading terms survive into
the reduced basis.

On top of the ideal arithmetic sit the semi-invariant extraction
routines: weight decomposition certified by exact (confluent)
Vandermonde solves, with every right-hand side and every extracted
component re-verified by membership, and the solution re-verified
against an independently computed weight decomposition.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from . import linalg
from .errors import (
    CertificateError,
    HypothesisError,
    NotDiagonalError,
    NotInvariantError,
    NotNormalFormError,
    TruncationError,
)
from .field import ONE, Scalar, Weight, weight_embed
from .normalform import is_pdnf, lg_nilpotency_index
from .poly import (
    Exponent,
    Series,
    TERM_ORDERS,
    VectorField,
    grlex_key,
    iter_exponents,
    lie_derivative,
    weight_decompose,
)

__all__ = [
    "IdealHandle",
    "ReducedBasis",
    "ExtractionCertificate",
    "groebner",
    "member",
    "normal_form",
    "is_invariant",
    "close_under_lie",
    "is_semiinvariant",
    "extract_semiinvariants",
    "extract_from_member",
    "lf_extract_semiinvariants",
    "single_resonance_primes",
]


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm_exp(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Exponent, b: Exponent) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _at_order(s: Series, order: int) -> Series:
    """View a series in R_order; reject inputs that know too little."""
    if s.trunc is not None and s.trunc < order:
        raise TruncationError(
            f"series is only known modulo <x>^{s.trunc}, "
            f"which cannot represent an element of R_{order}"
        )
    return Series(s.nvars, s.terms, order)


def _shift_terms(g: Series, shift: Exponent, order: int) -> Dict[Exponent, Scalar]:
    """Terms of x^shift * g, truncated at the given order."""
    bump = sum(shift)
    out: Dict[Exponent, Scalar] = {}
    for e, c in g.terms.items():
        if sum(e) + bump >= order:
            continue
        out[tuple(a + b for a, b in zip(e, shift))] = c
    return out


def _reduce(p: Series, basis: Sequence[Tuple[Exponent, Series]], key) -> Series:
    """Full normal form of p against monic reducers (leading monomials
    precomputed), working top-down so every exponent is settled once."""
    order = p.trunc
    work = dict(p.terms)
    out: Dict[Exponent, Scalar] = {}
    while work:
        e = max(work, key=key)
        c = work.pop(e)
        hit = None
        for lm, g in basis:
            if _divides(lm, e):
                hit = (lm, g)
                break
        if hit is None:
            out[e] = c
            continue
        lm, g = hit
        shift = tuple(a - b for a, b in zip(e, lm))
        for ge, gc in g.terms.items():
            if ge == lm:
                continue
            ne = tuple(a + b for a, b in zip(ge, shift))
            if order is not None and sum(ne) >= order:
                continue
            acc = work.get(ne)
            val = -c * gc if acc is None else acc - c * gc
            if val.is_zero():
                work.pop(ne, None)
            else:
                work[ne] = val
    return Series(p.nvars, out, order)


class ReducedBasis(NamedTuple):
    """Reduced basis of ``<gens> + <x>^N``: monic interreduced polynomials
    plus the degree-N monomials not absorbed by their leading terms."""

    polys: Tuple[Series, ...]
    monomials: Tuple[Exponent, ...]


def groebner(
    gens: Iterable[Series],
    trunc_order: int,
    order: str = "grlex",
    nvars: Optional[int] = None,
) -> ReducedBasis:
    """Buchberger's algorithm on the generators plus all degree-N monomials.

    Pairs of two degree-N monomials cancel exactly and are skipped;
    pairs of a polynomial with a degree-N monomial reduce to a shifted
    copy of the polynomial's tail and are processed whenever that tail
    can reach below degree N.  Leading coefficients are normalized and
    the result interreduced, so the basis is the unique reduced one.
    """
    if trunc_order < 1:
        raise ValueError("truncation order must be a positive integer")
    key = TERM_ORDERS[order]
    polys: List[Series] = []
    for g in gens:
        if nvars is None:
            nvars = g.nvars
        elif g.nvars != nvars:
            raise ValueError("generators live in different variable sets")
        t = _at_order(g, trunc_order)
        if not t.is_zero():
            t = t.monic(key)
            if t not in polys:
                polys.append(t)
    if nvars is None:
        raise ValueError("an empty generating set needs an explicit variable count")
    monos = tuple(iter_exponents(nvars, trunc_order))

    basis: List[Series] = []
    lms: List[Exponent] = []
    pairs: List[tuple] = []
    tick = itertools.count()

    def enqueue(idx: int) -> None:
        lm_new = lms[idx]
        for j in range(idx):
            if _coprime(lms[j], lm_new):
                continue
            lcm = _lcm_exp(lms[j], lm_new)
            heapq.heappush(pairs, (key(lcm), next(tick), "pp", j, idx))
        g = basis[idx]
        if g.min_degree() == sum(lm_new):
            return  # homogeneous: every monomial pair vanishes at truncation
        tail_min = min(sum(e) for e in g.terms if e != lm_new)
        seen = set()
        for m in monos:
            if _coprime(lm_new, m):
                continue
            shift = tuple(max(a - b, 0) for a, b in zip(m, lm_new))
            if shift in seen:
                continue
            seen.add(shift)
            if tail_min + sum(shift) >= trunc_order:
                continue
            lcm = tuple(a + b for a, b in zip(shift, lm_new))
            heapq.heappush(pairs, (key(lcm), next(tick), "pm", idx, shift))

    def adjoin(p: Series) -> None:
        basis.append(p)
        lms.append(p.leading_monomial(key))
        enqueue(len(basis) - 1)

    for g in polys:
        adjoin(g)

    reducers = lambda: list(zip(lms, basis))
    while pairs:
        _, _, kind, i, payload = heapq.heappop(pairs)
        if kind == "pp":
            j = payload
            lcm = _lcm_exp(lms[i], lms[j])
            s = Series(
                nvars, _shift_terms(basis[i], tuple(a - b for a, b in zip(lcm, lms[i])), trunc_order), trunc_order
            ) - Series(
                nvars, _shift_terms(basis[j], tuple(a - b for a, b in zip(lcm, lms[j])), trunc_order), trunc_order
            )
        else:
            s = Series(nvars, _shift_terms(basis[i], payload, trunc_order), trunc_order)
        r = _reduce(s, reducers(), key)
        if not r.is_zero():
            adjoin(r.monic(key))

    # Minimal generators: drop polynomials whose leading monomial is a
    # multiple of another's, then interreduce tails to the unique form.
    minimal: List[Series] = []
    for idx, g in enumerate(basis):
        lm = lms[idx]
        if any(
            _divides(lms[j], lm) and (j < idx or lms[j] != lm)
            for j in range(len(basis))
            if j != idx
        ):
            continue
        minimal.append(g)
    changed = True
    while changed:
        changed = False
        for idx in range(len(minimal)):
            g = minimal[idx]
            if g is None:
                continue
            others = [
                (h.leading_monomial(key), h)
                for pos, h in enumerate(minimal)
                if pos != idx and h is not None
            ]
            r = _reduce(g, others, key)
            if r.is_zero():
                minimal[idx] = None
                changed = True
            elif r != g:
                minimal[idx] = r.monic(key)
                changed = True
    final = [g for g in minimal if g is not None]
    final.sort(key=lambda g: key(g.leading_monomial(key)), reverse=True)
    final_lms = [g.leading_monomial(key) for g in final]
    survivors = tuple(
        m
        for m in sorted(monos, key=key, reverse=True)
        if not any(_divides(lm, m) for lm in final_lms)
    )
    return ReducedBasis(tuple(final), survivors)


class IdealHandle:
    """A finitely generated ideal of R_N = K[[x]]/<x>^N.

    Stores the generators (viewed at order N) and computes the reduced
    basis on first use.  Instances are immutable; every query is
    read-only after that single initialization.
    """

    __slots__ = ("generators", "trunc_order", "order_name", "nvars", "_basis")

    def __init__(
        self,
        generators: Iterable[Series],
        trunc_order: int,
        order: str = "grlex",
        nvars: Optional[int] = None,
    ):
        if trunc_order < 1:
            raise ValueError("truncation order must be a positive integer")
        if order not in TERM_ORDERS:
            raise ValueError(f"unknown term order {order!r}")
        gens = []
        for g in generators:
            if nvars is None:
                nvars = g.nvars
            elif g.nvars != nvars:
                raise ValueError("generators live in different variable sets")
            gens.append(_at_order(g, trunc_order))
        if nvars is None:
            raise ValueError("an empty generating set needs an explicit variable count")
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "trunc_order", trunc_order)
        object.__setattr__(self, "order_name", order)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_basis", None)

    def __setattr__(self, name, value):
        raise AttributeError("IdealHandle is immutable")

    def _ensure_basis(self) -> ReducedBasis:
        if self._basis is None:
            computed = groebner(
                self.generators, self.trunc_order, self.order_name, self.nvars
            )
            object.__setattr__(self, "_basis", computed)
        return self._basis

    @property
    def reduced_basis(self) -> Tuple[Series, ...]:
        return self._ensure_basis().polys

    @property
    def truncation_monomials(self) -> Tuple[Exponent, ...]:
        return self._ensure_basis().monomials

    def normal_form(self, psi: Series) -> Series:
        """The unique remainder of psi modulo the ideal (zero iff member)."""
        if psi.nvars != self.nvars:
            raise ValueError("variable counts differ")
        key = TERM_ORDERS[self.order_name]
        rep = _at_order(psi, self.trunc_order)
        basis = self._ensure_basis()
        reducers = [(g.leading_monomial(key), g) for g in basis.polys]
        return _reduce(rep, reducers, key)

    def member(self, psi: Series) -> bool:
        return self.normal_form(psi).is_zero()

    def with_extra(self, extra: Iterable[Series]) -> "IdealHandle":
        return IdealHandle(
            tuple(self.generators) + tuple(extra),
            self.trunc_order,
            self.order_name,
            self.nvars,
        )

    def __repr__(self) -> str:
        return (
            f"<IdealHandle {len(self.generators)} generators "
            f"in R_{self.trunc_order}>"
        )


def member(psi: Series, ideal: IdealHandle) -> bool:
    """Whether psi lies in the ideal (including the truncation part)."""
    return ideal.member(psi)


def normal_form(psi: Series, ideal: IdealHandle) -> Series:
    return ideal.normal_form(psi)


def _derivation_components(f) -> Tuple[Series, ...]:
    return f.components if isinstance(f, VectorField) else tuple(f)


def _check_field_order(f, order: int) -> None:
    for comp in _derivation_components(f):
        if comp.trunc is not None and comp.trunc < order:
            raise TruncationError(
                f"the field is only known modulo <x>^{comp.trunc}, "
                f"too coarse for an ideal at order {order}"
            )


def is_invariant(ideal: IdealHandle, f) -> Tuple[bool, Optional[Tuple[Series, Series]]]:
    """Whether the ideal is carried into itself by the derivation along f.

    Checking the generators suffices: the Lie derivative obeys the
    Leibniz rule, so membership of every L_f(generator) propagates to
    every product.  On failure, returns the offending generator together
    with the reduced (non-member) Lie derivative as a witness.
    """
    _check_field_order(f, ideal.trunc_order)
    comps = _derivation_components(f)
    for g in ideal.generators:
        image = lie_derivative(comps, g)
        residue = ideal.normal_form(image)
        if not residue.is_zero():
            return False, (g, residue)
    return True, None


def close_under_lie(ideal: IdealHandle, f) -> IdealHandle:
    """The smallest ideal containing the input that the derivation maps
    into itself, computed by adjoining reduced Lie derivatives until
    stable.  Terminates because R_N is finite-dimensional."""
    _check_field_order(f, ideal.trunc_order)
    comps = _derivation_components(f)
    current = ideal
    # Each round either stabilizes or strictly enlarges the ideal; the
    # chain is bounded by the dimension of R_N.
    for _ in range(_rn_dimension(ideal.nvars, ideal.trunc_order) + 1):
        fresh = []
        for g in current.reduced_basis:
            residue = current.normal_form(lie_derivative(comps, g))
            if not residue.is_zero():
                fresh.append(residue)
        if not fresh:
            return current
        current = IdealHandle(
            current.reduced_basis + tuple(fresh),
            ideal.trunc_order,
            ideal.order_name,
            ideal.nvars,
        )
    raise ArithmeticError("ideal closure failed to stabilize")  # pragma: no cover


def _rn_dimension(nvars: int, order: int) -> int:
    return sum(
        len(tuple(iter_exponents(nvars, k))) for k in range(order)
    )


def is_semiinvariant(psi: Series, f, order: Optional[int] = None) -> Optional[Series]:
    """The cofactor of psi along f, if one exists at the truncation.

    Solves L_f(psi) = cofactor * psi by degree-by-degree exact division,
    starting from the lowest homogeneous part of psi.  The cofactor is
    determined (and returned) modulo <x>^(order - min_degree(psi)).
    Returns None when no such factorization exists.
    """
    if psi.is_zero():
        raise ValueError("the zero series is not a semi-invariant candidate")
    if order is None:
        order = psi.trunc
        for comp in _derivation_components(f):
            if comp.trunc is not None and (order is None or comp.trunc < order):
                order = comp.trunc
    if order is None:
        raise TruncationError(
            "the semi-invariant test needs a truncation order; "
            "pass one or use truncated inputs"
        )
    _check_field_order(f, order)
    rep = _at_order(psi, order)
    if rep.is_zero():
        raise ValueError("the series vanishes at this truncation order")
    derivative = lie_derivative(_derivation_components(f), rep)
    low = rep.min_degree()
    cof_order = max(order - low, 1)
    base = rep.homogeneous_part(low)
    cof_parts: List[Series] = []
    for k in range(cof_order):
        target_deg = low + k
        residue = (
            derivative.homogeneous_part(target_deg)
            if target_deg < order
            else Series.zero(rep.nvars, order)
        )
        for j, lam_j in enumerate(cof_parts):
            piece_deg = low + k - j
            if piece_deg < order:
                residue = residue - lam_j * rep.homogeneous_part(piece_deg)
        part = _divide_homogeneous(residue, base)
        if part is None:
            return None
        cof_parts.append(part)
    cofactor = Series.zero(rep.nvars, cof_order)
    for part in cof_parts:
        cofactor = cofactor + Series(rep.nvars, part.terms, cof_order)
    # Self-check the factorization at the working order.  The product is
    # taken on exact copies: multiplying the truncated representatives
    # directly would cut at the cofactor's (coarser) order and drop terms
    # the derivative still carries.  Any other cofactor representative
    # changes the product only in degrees >= order, so the comparison is
    # well defined.
    product = Series(rep.nvars, cofactor.terms) * Series(rep.nvars, rep.terms)
    if derivative != Series(rep.nvars, product.terms, order):
        return None
    return cofactor


def _divide_homogeneous(num: Series, den: Series) -> Optional[Series]:
    """Exact quotient of homogeneous polynomials, or None when it fails."""
    if num.is_zero():
        return Series.zero(num.nvars)
    quot: Dict[Exponent, Scalar] = {}
    lm_d = den.leading_monomial()
    lc_d = den.leading_coefficient()
    rest = Series(num.nvars, num.terms)
    while not rest.is_zero():
        lm_n = rest.leading_monomial()
        if not _divides(lm_d, lm_n):
            return None
        shift = tuple(a - b for a, b in zip(lm_n, lm_d))
        coeff = rest.leading_coefficient() / lc_d
        quot[shift] = coeff
        rest = rest - Series.monomial(shift, coeff) * den
    return Series(num.nvars, quot)


# -- extraction --------------------------------------------------------------


@dataclass(frozen=True)
class ExtractionCertificate:
    """A machine-checkable record of one Vandermonde extraction.

    ``matrix * solution = rhs`` holds exactly; the rhs entries are the
    iterated Lie derivatives of ``source``; the first ``len(weights)``
    solution entries are the weight components of ``source``.  All rhs
    and solution entries are verified members of the ideal before the
    certificate is issued.
    """

    matrix: linalg.ExactMatrix
    rhs: Tuple[Series, ...]
    solution: Tuple[Series, ...]
    weights: Tuple[Weight, ...]
    nodes: Tuple[Scalar, ...]
    determinant: Scalar
    block_count: int
    source: Series
    trunc_order: int


def _series_sort_key(s: Series):
    return tuple(
        (grlex_key(e), c.re, c.im) for e, c in s.sorted_terms()
    )


def _collect_generators(pieces: Iterable[Series]) -> Tuple[Series, ...]:
    """Deduplicate up to scaling: each generator is reported monic."""
    unique: List[Series] = []
    for p in pieces:
        if p.is_zero():
            continue
        p = p.monic()
        if all(p != q for q in unique):
            unique.append(p)
    unique.sort(key=_series_sort_key, reverse=True)
    return tuple(unique)


def _diagonal_components(lam: Sequence[Scalar], nvars: int) -> Tuple[Series, ...]:
    comps = []
    for i in range(nvars):
        e = tuple(1 if k == i else 0 for k in range(nvars))
        comps.append(Series(nvars, {e: lam[i]}))
    return tuple(comps)


def _symbolic_images(g: Series, eigenvalues: Sequence[Weight]) -> List[Series]:
    """Per-basis-coordinate pieces of the semisimple Lie derivative.

    With symbolic eigenvalues the derivative of a term c*x^a is
    w(a)*c*x^a, a series with Weight coefficients; splitting along the
    d independent basis directions gives d ordinary series, and the
    derivative lies in the ideal exactly when each piece does.
    """
    dim = eigenvalues[0].dim
    buckets: List[Dict[Exponent, Scalar]] = [dict() for _ in range(dim)]
    for e, c in g.terms.items():
        w = Weight.zero(dim)
        for j, exp in enumerate(e):
            if exp:
                w = w + eigenvalues[j].scale(exp)
        for k, coord in enumerate(w.coords):
            if coord:
                buckets[k][e] = c * Scalar(coord)
    return [Series(g.nvars, terms, g.trunc) for terms in buckets]


def extract_semiinvariants(
    ideal: IdealHandle,
    eigenvalues: Sequence[Weight],
    embedding: Optional[Sequence[Scalar]] = None,
) -> Tuple[Tuple[Series, ...], Optional[Tuple[ExtractionCertificate, ...]]]:
    """Weight-homogeneous generators of an ideal invariant under the
    semisimple derivation diag(lambda).

    Concrete spectra (one-dimensional weights, or an explicit embedding
    of the weight basis into Q(i)) get the full certified route: the
    right-hand sides are honestly iterated Lie derivatives, the
    Vandermonde system on the distinct weights is solved by exact
    elimination, and the solution is cross-checked against the weight
    decomposition computed directly from the exponents.  Symbolic
    spectra skip the matrix (its entries would live in Q(lambda)) and
    verify the decomposition componentwise instead, returning None for
    the certificates.
    """
    if len(eigenvalues) != ideal.nvars:
        raise ValueError("eigenvalue count does not match the ideal's variables")
    dim = eigenvalues[0].dim
    if any(w.dim != dim for w in eigenvalues):
        raise ValueError("eigenvalues have mixed weight dimensions")
    if embedding is None and dim == 1:
        embedding = (ONE,)
    if embedding is not None and len(embedding) != dim:
        raise ValueError("embedding length does not match the weight dimension")

    if embedding is None:
        return _extract_symbolic(ideal, eigenvalues), None

    lam = [weight_embed(w, embedding) for w in eigenvalues]
    diag = _diagonal_components(lam, ideal.nvars)
    for g in ideal.generators:
        image = lie_derivative(diag, g)
        residue = ideal.normal_form(image)
        if not residue.is_zero():
            raise NotInvariantError(
                "the ideal is not invariant under the semisimple derivation",
                witness=(g, residue),
            )
    pieces: List[Series] = []
    certificates: List[ExtractionCertificate] = []
    for g in ideal.generators:
        if g.is_zero():
            continue
        dec = weight_decompose(g, eigenvalues)
        nodes = tuple(weight_embed(w, embedding) for w in dec.weights)
        if len(set((v.re, v.im) for v in nodes)) != len(nodes):
            raise ValueError(
                "the embedding collapses distinct weights; "
                "its basis values must be Q-linearly independent"
            )
        matrix = linalg.vandermonde_matrix(nodes)
        rhs: List[Series] = [g]
        for _ in range(len(nodes) - 1):
            rhs.append(lie_derivative(diag, rhs[-1]))
        solution = linalg.solve(matrix, rhs)
        _verify_certificate(
            ideal, matrix, rhs, solution,
            [dec[w] for w in dec.weights],
        )
        certificates.append(
            ExtractionCertificate(
                matrix=matrix,
                rhs=tuple(rhs),
                solution=tuple(solution),
                weights=dec.weights,
                nodes=nodes,
                determinant=linalg.determinant(matrix),
                block_count=1,
                source=g,
                trunc_order=ideal.trunc_order,
            )
        )
        pieces.extend(solution)
    return _collect_generators(pieces), tuple(certificates)


def _extract_symbolic(
    ideal: IdealHandle, eigenvalues: Sequence[Weight]
) -> Tuple[Series, ...]:
    for g in ideal.generators:
        for piece in _symbolic_images(g, eigenvalues):
            residue = ideal.normal_form(piece)
            if not residue.is_zero():
                raise NotInvariantError(
                    "the ideal is not invariant under the semisimple derivation",
                    witness=(g, residue),
                )
    pieces: List[Series] = []
    for g in ideal.generators:
        dec = weight_decompose(g, eigenvalues)
        for w in dec.weights:
            component = dec[w]
            if not ideal.member(component):
                raise CertificateError(
                    "a weight component failed the membership recheck"
                )
            pieces.append(component)
    return _collect_generators(pieces)


def _verify_certificate(ideal, matrix, rhs, solution, expected_block0) -> None:
    product = linalg.matvec_series(matrix, solution)
    for got, want in zip(product, rhs):
        if got != want:
            raise CertificateError("matrix * solution does not reproduce the rhs")
    for k, component in enumerate(expected_block0):
        if solution[k] != component:
            raise CertificateError(
                "solved components disagree with the direct weight decomposition"
            )
    for entry in rhs:
        if not ideal.member(entry):
            raise NotInvariantError(
                "an iterated Lie derivative left the ideal",
                witness=(rhs[0], ideal.normal_form(entry)),
            )
    for entry in solution:
        if not ideal.member(entry):
            raise CertificateError(
                "a solved component failed the membership recheck"
            )


def extract_from_member(
    phi: Series, ideal: IdealHandle, f: VectorField
) -> Tuple[Tuple[Series, ...], Optional[ExtractionCertificate]]:
    """Weight components of one ideal member of an L_f-invariant ideal,
    certified by the confluent Vandermonde system.

    ``m`` is the measured nilpotency index of L_g on phi (g the
    non-semisimple rest of f) and ``q`` the number of distinct weights;
    the system has size q*m.  Its right-hand sides are the iterated
    L_f-derivatives of phi; the solution stacks the L_g-iterates of the
    weight components blockwise, and block 0 — the components themselves
    — is returned.  Everything is re-verified: the matrix identity, the
    independently computed L_g-iterates, and membership of every entry.
    """
    order = ideal.trunc_order
    if not f.semisimple_is_diagonal():
        raise NotDiagonalError(
            "extraction indexes weights by position and needs a diagonal "
            "semisimple part; normalize in the diagonalizing basis first"
        )
    _check_field_order(f, order)
    ok, residual = is_pdnf(f, order if f.trunc_order is None else min(order, f.trunc_order))
    if not ok:
        raise NotNormalFormError(
            "the field must be in normal form for weight extraction", residual
        )
    rep = _at_order(phi, order)
    if not ideal.member(rep):
        raise NotInvariantError(
            "the series is not a member of the ideal",
            witness=(rep, ideal.normal_form(rep)),
        )
    if rep.is_zero():
        return (), None
    m = lg_nilpotency_index(f, rep, order)
    dec = weight_decompose(rep, f.eigenvalues)
    weights = dec.weights
    q = len(weights)
    nodes = tuple(weight_embed(w, f.embedding) for w in weights)
    matrix = linalg.confluent_vandermonde_matrix(nodes, m)
    f_comps = tuple(c.truncate(order) if c.trunc is None or c.trunc > order else c
                    for c in f.components)
    rhs: List[Series] = [rep]
    for _ in range(q * m - 1):
        rhs.append(lie_derivative(f_comps, rhs[-1]))
    solution = linalg.solve(matrix, rhs)
    # Dual route: recompute every block entry as an iterated L_g image of
    # the directly decomposed weight components.
    g_comps = tuple(c.truncate(order) if c.trunc is None or c.trunc > order else c
                    for c in f.g_components())
    expected: List[Series] = [dec[w] for w in weights]
    for j in range(1, m):
        start = (j - 1) * q
        for k in range(q):
            expected.append(lie_derivative(g_comps, expected[start + k]))
    for got, want in zip(solution, expected):
        if got != want:
            raise CertificateError(
                "solved blocks disagree with the iterated images of the "
                "weight components"
            )
    _verify_certificate(ideal, matrix, rhs, solution, expected[:q])
    certificate = ExtractionCertificate(
        matrix=matrix,
        rhs=tuple(rhs),
        solution=tuple(solution),
        weights=weights,
        nodes=nodes,
        determinant=linalg.determinant(matrix),
        block_count=m,
        source=rep,
        trunc_order=order,
    )
    return tuple(solution[:q]), certificate


def lf_extract_semiinvariants(
    ideal: IdealHandle, f: VectorField
) -> Tuple[Tuple[Series, ...], Tuple[ExtractionCertificate, ...]]:
    """Semi-invariant generators of an L_f-invariant ideal for f in
    normal form: the confluent-Vandermonde extraction applied to every
    generator, proving the ideal is already generated by weight-
    homogeneous elements (hence invariant under the semisimple part
    alone)."""
    invariant, witness = is_invariant(ideal, f)
    if not invariant:
        raise NotInvariantError(
            "the ideal is not invariant along the field", witness=witness
        )
    pieces: List[Series] = []
    certificates: List[ExtractionCertificate] = []
    for g in ideal.generators:
        components, certificate = extract_from_member(g, ideal, f)
        pieces.extend(components)
        if certificate is not None:
            certificates.append(certificate)
    return _collect_generators(pieces), tuple(certificates)


def single_resonance_primes(
    eigenvalues: Sequence[Weight],
    resonance: Sequence[Fraction],
) -> Tuple[Tuple[Tuple[int, ...], ...], Dict[str, object]]:
    """Candidate invariant prime ideals in the single-resonance case.

    Hypotheses (verified, violations raise): the first n-1 eigenvalues
    are Q-linearly independent, and the last one equals the declared
    nonpositive rational combination of them.  Under these, the
    candidates are exactly the 2^n - 1 monomial primes, returned as
    index tuples sorted by size then position.  The enumeration is a
    candidate list, not a primality or completeness proof.
    """
    n = len(eigenvalues)
    if n == 0:
        raise ValueError("need at least one eigenvalue")
    dim = eigenvalues[0].dim
    if any(w.dim != dim for w in eigenvalues):
        raise ValueError("eigenvalues have mixed weight dimensions")
    alphas = [Fraction(a) for a in resonance]
    if len(alphas) != n - 1:
        raise ValueError("need one resonance exponent per leading eigenvalue")
    if any(a > 0 for a in alphas):
        raise HypothesisError(
            "resonance exponents must be nonpositive rationals"
        )
    if n >= 2:
        rows = [[Scalar(c) for c in w.coords] for w in eigenvalues[: n - 1]]
        matrix = linalg.ExactMatrix.from_rows(rows)
        if linalg.rank(matrix) != n - 1:
            raise HypothesisError(
                "the leading eigenvalues are Q-linearly dependent"
            )
        combo = Weight.zero(dim)
        for a, w in zip(alphas, eigenvalues[: n - 1]):
            combo = combo + w.scale(a)
        if combo != eigenvalues[n - 1]:
            raise HypothesisError(
                "the last eigenvalue does not satisfy the declared resonance relation"
            )
    candidates = tuple(
        subset
        for size in range(1, n + 1)
        for subset in itertools.combinations(range(n), size)
    )
    report: Dict[str, object] = {
        "variables": n,
        "independent": True,
        "relation_holds": True,
        "alpha": [str(a) for a in alphas],
        "candidate_count": len(candidates),
    }
    return candidates, report

"""Tests for resonance detection, normal-form checks, and normalization."""

import random

import pytest

from dulac.errors import NotNormalFormError, TruncationError
from dulac.field import Scalar, weights_from_scalars
from dulac.normalform import (
    conjugacy_residual,
    is_pdnf,
    is_resonant,
    lg_nilpotency_bound,
    lg_nilpotency_index,
    normalize,
)
from dulac.poly import Series, VectorField, lie_bracket

from _gen import (
    diagonalized_components,
    field_with_linear_part,
    pdnf_field,
    random_series,
    splitting_linear_part,
)

X = (1, 0)
Y = (0, 1)


def _s(terms, trunc=None, nvars=2):
    return Series(nvars, {e: Scalar(c) for e, c in terms.items()}, trunc)


def _field(*component_terms, trunc):
    return VectorField.from_components(
        [_s(t, trunc, nvars=len(component_terms)) for t in component_terms]
    )


def test_is_resonant_basic():
    weights, _ = weights_from_scalars([Scalar(1), Scalar(3)])
    # w(3,0) = 3 = lambda_y: resonant in component 1 only
    assert is_resonant((3, 0), 1, weights)
    assert not is_resonant((3, 0), 0, weights)
    # w(2,0) = 2 matches nothing
    assert not is_resonant((2, 0), 0, weights)
    assert not is_resonant((2, 0), 1, weights)
    # w(1,1) = 4; w(4,0) = 4; neither is an eigenvalue
    assert not is_resonant((1, 1), 1, weights)


def test_is_resonant_rejects_low_degree_and_bad_index():
    weights, _ = weights_from_scalars([Scalar(1), Scalar(3)])
    with pytest.raises(ValueError):
        is_resonant((1, 0), 0, weights)
    with pytest.raises(ValueError):
        is_resonant((2, 1), 5, weights)


def test_is_pdnf_reports_bracket_residual():
    f = _field({X: 1}, {Y: 2, (3, 0): 1}, trunc=6)
    ok, residual = is_pdnf(f)
    assert not ok
    # [f, B_s x] = (0, -x^3) for this field
    assert residual[0].is_zero()
    assert residual[1] == _s({(3, 0): -1})


def test_is_pdnf_accepts_resonant_field():
    f = _field({X: 1}, {Y: 3, (3, 0): 7}, trunc=8)
    ok, residual = is_pdnf(f)
    assert ok
    assert all(r.is_zero() for r in residual)


def test_is_pdnf_with_admissible_nilpotent_part():
    # B = [[2,1],[0,2]]: the nilpotent part commutes with B_s = 2I
    f = _field({X: 2, Y: 1}, {Y: 2}, trunc=5)
    ok, _ = is_pdnf(f)
    assert ok


def test_normalize_removes_nonresonant_keeps_resonant():
    f = _field({X: 1}, {Y: 3, (2, 0): 1, (3, 0): 1}, trunc=6)
    result = normalize(f)
    assert [c for c in result.normalized.components] == [
        _s({X: 1}),
        _s({Y: 3, (3, 0): 1}),
    ]
    assert result.transformation[0] == _s({X: 1})
    assert result.transformation[1] == _s({Y: 1, (2, 0): -1})


def test_normalize_conjugacy_identity_exact():
    f = _field({X: 1}, {Y: 3, (2, 0): 1, (3, 0): 1, (1, 1): -2}, trunc=7)
    result = normalize(f)
    residuals = conjugacy_residual(f, result)
    assert all(r.is_zero() for r in residuals)


def test_normalize_is_idempotent_on_normal_fields():
    rng = random.Random(101)
    for _ in range(10):
        f = pdnf_field(rng, rng.choice([2, 3]), rng.choice([4, 5]))
        result = normalize(f)
        assert tuple(result.normalized.components) == tuple(f.components)
        identity = tuple(
            Series.variable(i, f.nvars, f.trunc_order) for i in range(f.nvars)
        )
        assert tuple(result.transformation) == identity


def test_normalize_jordan_block_linearizes():
    f = _field({X: 2, Y: 1, (0, 2): 1}, {Y: 2, (2, 0): 3}, trunc=6)
    result = normalize(f)
    assert result.normalized.components[0] == _s({X: 2, Y: 1})
    assert result.normalized.components[1] == _s({Y: 2})
    assert all(r.is_zero() for r in conjugacy_residual(f, result))


def test_normalize_handles_non_diagonal_semisimple_part():
    f = _field({Y: -1, (2, 0): 1}, {X: 1, (1, 1): 1}, trunc=6)
    assert not f.semisimple_is_diagonal()
    result = normalize(f)
    ok, _ = is_pdnf(result.normalized)
    assert ok
    assert all(r.is_zero() for r in conjugacy_residual(f, result))
    assert result.normalized.linear == f.linear
    for i in range(2):
        assert result.transformation[i].homogeneous_part(1) == Series.variable(
            i, 2, 6
        ).homogeneous_part(1)


def test_normalize_requires_truncation_order():
    comps = [Series(2, {X: Scalar(1)}), Series(2, {Y: Scalar(2)})]
    f = VectorField.from_components(comps)
    with pytest.raises(TruncationError):
        normalize(f)
    result = normalize(f, order=4)
    assert result.trunc_order == 4


def test_normalized_fields_commute_with_semisimple_part():
    rng = random.Random(55)
    for _ in range(15):
        n = rng.choice([2, 3])
        order = rng.choice([4, 5])
        linear = splitting_linear_part(rng, n)
        f = field_with_linear_part(rng, linear, order)
        result = normalize(f)
        bracket = lie_bracket(
            result.normalized.components, result.normalized.semisimple_components()
        )
        assert all(b.is_zero() for b in bracket)


def test_lg_nilpotency_index_golden_value():
    f = _field({X: 1}, {Y: 3, (3, 0): 1}, trunc=8)
    psi = _s({(3, 0): 1, Y: 1, (0, 2): 1}, 8)
    assert lg_nilpotency_index(f, psi) == 3


def test_lg_nilpotency_index_rejects_non_normal_field():
    f = _field({X: 1}, {Y: 2, (3, 0): 1}, trunc=6)
    psi = _s({Y: 1}, 6)
    with pytest.raises(NotNormalFormError) as info:
        lg_nilpotency_index(f, psi)
    assert info.value.residual is not None


def test_lg_nilpotency_bound_grows_with_nilpotent_depth():
    # purely semisimple: iota = 1, nu_max = 1, bound = (N-1)*1 + N-1
    f = _field({X: 1}, {Y: 3, (3, 0): 1}, trunc=6)
    assert lg_nilpotency_bound(f, 6) == 10
    jordan = _field({X: 2, Y: 1}, {Y: 2}, trunc=6)
    assert lg_nilpotency_bound(jordan, 6) > lg_nilpotency_bound(f, 6)


def test_lg_nilpotency_index_bounded_on_random_normal_fields():
    rng = random.Random(202)
    for _ in range(20):
        n = rng.choice([2, 3])
        order = rng.choice([4, 5, 6])
        f = pdnf_field(rng, n, order)
        psi = random_series(rng, n, order, max_terms=4, min_degree=1)
        if psi.is_zero():
            continue
        index = lg_nilpotency_index(f, psi)
        assert 0 <= index <= lg_nilpotency_bound(f, order)


def test_normalize_diagonalized_output_matches_direct_diagonal_run():
    # conjugating the problem by the diagonalizer commutes with normalize
    rng = random.Random(88)
    f = _field({Y: -1}, {X: 1, (2, 0): 1, (1, 1): 1}, trunc=5)
    result = normalize(f)
    comps_d = diagonalized_components(f, result.normalized.components)
    # in the diagonal basis every surviving monomial must be resonant
    for i, comp in enumerate(comps_d):
        for exps in comp.terms:
            if sum(exps) >= 2:
                assert is_resonant(exps, i, f.eigenvalues)

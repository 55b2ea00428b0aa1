"""Float demonstrations: coefficient-grid degeneration and exponential closed forms."""

import math

import pytest

from rimealg.core import identity, zero
from rimealg.families import MuVector, PhiVector, classical_rime_r, classical_unitary_r0
from rimealg.limits import LimitCurve, exp_formula_check, unitary_limit_curve


def test_limit_curve_validates_samples():
    LimitCurve((1e-2, 1e-3), (1e-2, 1e-3), 1.0)
    with pytest.raises(ValueError):
        LimitCurve((1e-3, 1e-2), (0.1, 0.2), 1.0)
    with pytest.raises(ValueError):
        LimitCurve((1e-2, -1e-3), (0.1, 0.2), 1.0)


def test_unitary_limit_two_weights_is_exactly_linear():
    betas = (1e-2, 1e-3, 1e-4)
    curve = unitary_limit_curve(MuVector((0, 1)), betas)
    # (2,1) pair deviates by exactly beta, the (1,2) pair not at all
    assert curve.deviations == betas
    assert abs(curve.slope - 1.0) < 1e-9


def test_unitary_limit_three_weights_decreases_monotonically():
    curve = unitary_limit_curve(MuVector((0, 1, 3)), (1e-1, 1e-2, 1e-3, 1e-4))
    assert all(a >= b for a, b in zip(curve.deviations, curve.deviations[1:]))
    assert abs(curve.slope - 1.0) <= 0.1


def test_unitary_limit_detects_weight_collision():
    # 1 + beta*mu vanishes exactly at mu = -1/beta; beta = 1/64 is an exact float
    with pytest.raises(ValueError):
        unitary_limit_curve(MuVector((0, -64)), (0.015625,))


def test_exp_formula_idempotent_case():
    r = classical_rime_r(PhiVector((2, 1)))
    assert exp_formula_check(r, 0.5, 30) <= 1e-12


def test_exp_formula_nilpotent_case():
    r0 = classical_unitary_r0(MuVector((0, 1)))
    # series truncates after the linear term, only rounding remains
    assert exp_formula_check(r0, 1.0, 30) <= 1e-12
    assert exp_formula_check(r0, 0.7, 5) <= 1e-12


def test_exp_formula_trivial_and_rejections():
    assert exp_formula_check(zero(2, 2), 1.0, 10) == 0.0
    with pytest.raises(ValueError):
        exp_formula_check(identity(2, 2), 1.0, 10)
    with pytest.raises(ValueError):
        exp_formula_check(identity(2), 1.0, 10)


def test_renormalization_semigroup_law_in_float():
    def beta(h):
        return 1.0 - math.exp(-h)

    for h1, h2 in ((0.5, 0.25), (1.0, 2.0), (0.1, 0.9)):
        lhs = beta(h1 + h2)
        rhs = beta(h1) + beta(h2) - beta(h1) * beta(h2)
        assert abs(lhs - rhs) <= 1e-12

"""Weighted spaces: weights, norms, the radial shortcut, and the growth bound."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cesaronorm import (
    BlochAlpha,
    ClosedForm,
    Constant,
    DomainError,
    HardyInf,
    Korenblum,
    KorenblumExtremal,
    KorenblumLog,
    LogKorenblumExtremal,
    Poly,
    PreconditionError,
    bloch_growth_bound,
    evaluate,
    log_weight_constant,
    radial_sup_norm,
    space_norm,
    weight_at,
)


def test_construction_ranges():
    for bad in (0.0, -1.0, 1.0, 1.5):
        with pytest.raises(DomainError):
            Korenblum(bad)
        with pytest.raises(DomainError):
            KorenblumLog(bad)
    for bad in (0.0, -0.5):
        with pytest.raises(DomainError):
            BlochAlpha(bad)
    BlochAlpha(3.0)  # any positive alpha is fine here


def test_weight_examples():
    assert weight_at(Korenblum(0.5), 0.0) == 1.0
    assert weight_at(KorenblumLog(0.5), 0.0) == pytest.approx(2.0 + math.log(2.0), abs=1e-15)
    assert weight_at(HardyInf(), 0.7) == 1.0
    with pytest.raises(DomainError):
        weight_at(Korenblum(0.5), 1.0)
    with pytest.raises(DomainError):
        weight_at(Korenblum(0.5), -0.1)


def test_weight_vanishes_monotonically_at_boundary():
    r = np.linspace(0.9, 1.0 - 1e-9, 50)
    w = weight_at(Korenblum(0.25), r)
    assert np.all(np.diff(w) < 0.0)
    assert w[-1] < 1e-2


def test_log_weight_is_plain_weight_times_log_factor():
    """The two weights agree bitwise after multiplying in the log factor."""
    alpha = 0.37
    r = np.linspace(0.0, 1.0 - 1e-10, 257)
    omsq = (1.0 - r) * (1.0 + r)
    log_factor = log_weight_constant(alpha) - np.log(omsq)
    lhs = weight_at(Korenblum(alpha), r) * log_factor
    rhs = weight_at(KorenblumLog(alpha), r)
    np.testing.assert_array_equal(lhs, rhs)


@pytest.mark.parametrize("alpha", [0.2, 0.4])
def test_extremal_norm_is_one(alpha):
    est = radial_sup_norm(KorenblumExtremal(alpha), Korenblum(alpha))
    assert est.value == pytest.approx(1.0, abs=1e-9)
    assert est.argmax_radius > 0.9


def test_log_extremal_norm_is_one():
    est = radial_sup_norm(LogKorenblumExtremal(0.5), KorenblumLog(0.5))
    assert est.value == pytest.approx(1.0, abs=1e-9)


def test_constant_bloch_norm():
    est = space_norm(Constant(1.0), BlochAlpha(0.7))
    assert est.value == pytest.approx(1.0, abs=1e-12)


def test_radial_sup_examples():
    est = radial_sup_norm(KorenblumExtremal(0.3), Korenblum(0.3))
    assert est.value == pytest.approx(1.0, abs=1e-9)
    assert est.argmax_radius > 1.0 - 2.0**-30
    assert radial_sup_norm(Constant(1.0), HardyInf()).value == pytest.approx(1.0, abs=1e-12)
    est = radial_sup_norm(Poly([0, 1]), HardyInf())
    assert est.value == pytest.approx(1.0, abs=1e-9)


def test_radial_sup_preconditions():
    with pytest.raises(PreconditionError):
        radial_sup_norm(Poly([1.0, -2.0]), HardyInf())
    with pytest.raises(PreconditionError):
        radial_sup_norm(Poly([1.0, 1.0j]), HardyInf())
    with pytest.raises(PreconditionError):
        radial_sup_norm(Constant(1.0), BlochAlpha(1.5))


def test_radial_matches_disk_for_nonnegative_coefficients():
    rng = np.random.default_rng(3)
    for _ in range(5):
        coeffs = rng.uniform(0.0, 1.0, rng.integers(1, 9))
        f = Poly(coeffs)
        space = Korenblum(0.4)
        quick = radial_sup_norm(f, space)
        full = space_norm(f, space, tol=1e-9)
        assert quick.value == pytest.approx(full.value, abs=1e-8)


def test_space_norm_divergence_flag():
    # far outside every weighted space with alpha < 1
    f = ClosedForm(lambda z: (1.0 - z) ** -10.0, label="steep pole")
    est = space_norm(f, Korenblum(0.5))
    assert est.diverged
    assert est.argmax_radius > 0.9


def test_norm_dominates_samples():
    rng = np.random.default_rng(11)
    space = KorenblumLog(0.6)
    for _ in range(3):
        f = Poly(rng.standard_normal(6) + 1j * rng.standard_normal(6))
        est = space_norm(f, space, tol=1e-9)
        z = np.sqrt(rng.uniform(0, 1, 200)) * np.exp(2j * np.pi * rng.uniform(0, 1, 200))
        z *= 0.999
        vals = weight_at(space, np.abs(z)) * np.abs(evaluate(f, z))
        assert est.value >= float(np.max(vals)) - 1e-9


def test_bloch_norm_splits_origin_value_and_seminorm():
    # f(z) = c + z: |f(0)| = |c|, seminorm = sup (1 - r^2)^alpha * 1
    est = space_norm(Poly([2.0, 1.0]), BlochAlpha(0.8))
    assert est.value == pytest.approx(3.0, abs=1e-9)


def test_bloch_growth_bound_examples():
    assert bloch_growth_bound(1.0, 0.0, 0.5, 1.0) == pytest.approx(math.log(2.0), abs=1e-14)
    assert bloch_growth_bound(1.0, 0.0, 0.75, 2.0) == pytest.approx(3.0, abs=1e-12)
    assert bloch_growth_bound(5.0, 2.5, 0.0, 1.7) == 2.5
    with pytest.raises(DomainError):
        bloch_growth_bound(1.0, 0.0, 1.0, 2.0)


@pytest.mark.parametrize("alpha", [0.5, 1.0, 1.5, 3.0])
def test_growth_bound_dominates_polynomials(alpha):
    """|f(r)| never exceeds the growth bound built from the Bloch data."""
    rng = np.random.default_rng(int(alpha * 10))
    radii = np.linspace(0.0, 0.99, 20)
    for _ in range(50):
        deg = int(rng.integers(1, 10))
        f = Poly(rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1))
        # seminorm = sup weight |f'| = Bloch norm minus the origin value
        bloch = space_norm(f, BlochAlpha(alpha), tol=1e-9)
        f0 = abs(evaluate(f, 0.0))
        seminorm = bloch.value - f0
        for r in radii:
            bound = bloch_growth_bound(seminorm, f0, float(r), alpha)
            assert abs(evaluate(f, float(r))) <= bound + 1e-9


def test_g_monotone_on_weight_domain():
    """x^alpha log(2 e^(1/alpha) / x) increases on (0, 2)."""
    for alpha in np.arange(0.1, 0.95, 0.1):
        x = np.linspace(1e-6, 2.0, 1000, endpoint=False)
        g = x**alpha * (log_weight_constant(alpha) - np.log(x))
        assert np.all(np.diff(g) > 0.0), f"not increasing for alpha={alpha:.1f}"


@given(st.floats(min_value=0.05, max_value=0.95), st.floats(min_value=0.0, max_value=0.99))
@settings(max_examples=100, deadline=None)
def test_log_weight_dominates_plain_weight(alpha, r):
    # the log factor exceeds 1/alpha > 1 everywhere on [0, 1)
    assert weight_at(KorenblumLog(alpha), r) >= weight_at(Korenblum(alpha), r)

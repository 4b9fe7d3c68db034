"""The Cesaro averaging operator in its three equivalent representations.

On Taylor coefficients the operator averages partial sums:

    C(f)(z) = sum_n ( (1/(n+1)) sum_{k<=n} a_k ) z^n,

a lower-triangular, exactly computable map on polynomials.  Two integral
representations give pointwise access for closed forms:

    C(f)(z) = int_0^1 f(tz) / (1 - tz) dt
            = int_0^inf (S_t f)(z) dt,

where S_t is the weighted composition semigroup

    (S_t f)(z) = w_t(z) f(phi_t(z)),
    w_t(z)   = e^-t / (1 - (1 - e^-t) z),
    phi_t(z) = e^-t z / (1 - (1 - e^-t) z).

The half-line integral is always evaluated through the u = e^-t
substitution, under which it becomes

    int_0^1 f( u z / (1 - (1-u) z) ) / (1 - (1-u) z) du,

a smooth finite integral (the kernel factor e^-t cancels against dt).
Differentiating under the integral gives the derivative representation

    C(f)'(z) = int_0^inf [ e^-t (1 - e^-t) / D^2 * f(phi_t)
                         + e^-2t / D^3 * f'(phi_t) ] dt,
    D = 1 - (1 - e^-t) z,

used for Bloch-type norms of operator images.

For the closed-form extremal families, S_t is evaluated through the
factorization 1 - phi_t(z)^2 = (1 - z)(1 - (1 - 2 e^-t) z) / D^2: each
factor stays in the right half-plane on the disk, so principal powers of
the factors multiply to the principal power of the product, and the
factored form avoids the catastrophic cancellation of forming
1 - phi^2 directly when phi approaches 1.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError
from .functions import (
    AnalyticFunction,
    ClosedForm,
    Constant,
    EVAL_RADIUS_LIMIT,
    KorenblumExtremal,
    LogKorenblumExtremal,
    Poly,
    PowerSeries,
    derivative,
    log_weight_constant,
)
from .numerics import DEFAULT_QUAD_TOL, integrate_finite


def cesaro_coeff(series: PowerSeries) -> PowerSeries:
    """Coefficient form: running means of the coefficient prefix sums."""
    if not isinstance(series, PowerSeries):
        series = PowerSeries(series)
    n = np.arange(1, series.coeffs.size + 1, dtype=float)
    sums = np.cumsum(series.coeffs)
    # divide componentwise: the complex-division kernel can lose an ulp
    # even on exact integer ratios, breaking the fixed-point identity
    out = np.empty_like(sums)
    out.real = sums.real / n
    out.imag = sums.imag / n
    return PowerSeries(out)


class SemigroupKernel:
    """Weight and disk self-map of the composition semigroup at time t."""

    __slots__ = ("t", "_u")

    def __init__(self, t: float):
        if not (math.isfinite(t) and t >= 0.0):
            raise DomainError("semigroup time must be finite and nonnegative")
        self.t = float(t)
        self._u = math.exp(-self.t)

    def weight(self, z):
        z = np.asarray(z, dtype=complex)
        return self._u / (1.0 - (1.0 - self._u) * z)

    def map(self, z):
        z = np.asarray(z, dtype=complex)
        return self._u * z / (1.0 - (1.0 - self._u) * z)

    def __repr__(self):
        return f"SemigroupKernel(t={self.t})"


def _check_point(z):
    arr = np.asarray(z, dtype=complex)
    if arr.size and float(np.max(np.abs(arr))) > EVAL_RADIUS_LIMIT:
        raise DomainError("evaluation point outside |z| <= 1 - 1e-12")
    return arr


def _st_factored_log(u, z):
    """Principal log of 1 - phi_t(z)^2 via the cancellation-free factors."""
    d_full = 1.0 - (1.0 - u) * z
    return np.log(1.0 - z) + np.log(1.0 - (1.0 - 2.0 * u) * z) - 2.0 * np.log(d_full)


def _st_eval(f: AnalyticFunction, t: float, z):
    u = math.exp(-t)
    z = np.asarray(z, dtype=complex)
    d_full = 1.0 - (1.0 - u) * z
    if isinstance(f, KorenblumExtremal):
        log_omps = _st_factored_log(u, z)
        return (u / d_full) * np.exp(-f.alpha * log_omps)
    if isinstance(f, LogKorenblumExtremal):
        log_omps = _st_factored_log(u, z)
        log_term = log_weight_constant(f.alpha) - log_omps
        return (u / d_full) * np.exp(-f.alpha * log_omps) / log_term
    return (u / d_full) * f.eval_at(u * z / d_full)


def st_apply(f: AnalyticFunction, t: float, z):
    """(S_t f)(z); scalar in, scalar out (arrays pass through elementwise)."""
    if not (math.isfinite(t) and t >= 0.0):
        raise DomainError("semigroup time must be finite and nonnegative")
    arr = _check_point(z)
    out = _st_eval(f, t, arr)
    if np.ndim(z) == 0:
        return complex(out)
    return out


def semigroup_transform(f: AnalyticFunction, t: float) -> ClosedForm:
    """S_t f as an analytic function, evaluated directly (no truncation)."""
    if not (math.isfinite(t) and t >= 0.0):
        raise DomainError("semigroup time must be finite and nonnegative")
    u = math.exp(-t)
    df = derivative(f)

    def fn(z):
        return _st_eval(f, t, np.asarray(z, dtype=complex))

    def dfn(z):
        z = np.asarray(z, dtype=complex)
        d_full = 1.0 - (1.0 - u) * z
        phi = u * z / d_full
        # product rule: w' f(phi) + w phi' f'(phi)
        return (u * (1.0 - u) / d_full**2) * f.eval_at(phi) + (
            u**2 / d_full**3
        ) * df.eval_at(phi)

    return ClosedForm(fn, dfn, label=f"S_{t:g}")


def cesaro_integral(f: AnalyticFunction, z, tol: float = DEFAULT_QUAD_TOL):
    """Finite-integral form int_0^1 f(tz)/(1 - tz) dt.

    z may be a scalar or an ndarray; a single adaptive pass integrates
    the whole batch with the error controlled on the worst component.
    """
    arr = _check_point(z)

    def g(tt):
        tt = np.asarray(tt, dtype=float)
        shaped = tt.reshape((tt.shape[0],) + (1,) * arr.ndim)
        zz = shaped * arr
        return f.eval_at(zz) / (1.0 - zz)

    value = integrate_finite(g, 0.0, 1.0, tol).value
    if np.ndim(z) == 0:
        return complex(value)
    return value


def cesaro_semigroup(f: AnalyticFunction, z, tol: float = DEFAULT_QUAD_TOL):
    """Semigroup form int_0^inf (S_t f)(z) dt through the u = e^-t pullback."""
    arr = _check_point(z)

    def g(uu):
        uu = np.asarray(uu, dtype=float)
        shaped = uu.reshape((uu.shape[0],) + (1,) * arr.ndim)
        d_full = 1.0 - (1.0 - shaped) * arr
        return f.eval_at(shaped * arr / d_full) / d_full

    value = integrate_finite(g, 0.0, 1.0, tol).value
    if np.ndim(z) == 0:
        return complex(value)
    return value


def cesaro_derivative(f: AnalyticFunction, z, tol: float = DEFAULT_QUAD_TOL):
    """Derivative form of the operator image, C(f)'(z), via one quadrature."""
    arr = _check_point(z)
    df = derivative(f)

    def g(uu):
        uu = np.asarray(uu, dtype=float)
        shaped = uu.reshape((uu.shape[0],) + (1,) * arr.ndim)
        d_full = 1.0 - (1.0 - shaped) * arr
        phi = shaped * arr / d_full
        return (1.0 - shaped) / d_full**2 * f.eval_at(phi) + shaped / d_full**3 * df.eval_at(phi)

    value = integrate_finite(g, 0.0, 1.0, tol).value
    if np.ndim(z) == 0:
        return complex(value)
    return value


# C(1)(z) = -log(1 - z)/z extended by 1 at the origin; series fallbacks keep
# full precision where the closed form cancels.
_C1_COEFFS = 1.0 / np.arange(1.0, 13.0)
_C1_DERIV_COEFFS = np.arange(1.0, 12.0) / np.arange(2.0, 13.0)
_SMALL = 1e-4


def _horner(coeffs, z):
    out = np.full(z.shape, coeffs[-1], dtype=complex)
    for c in coeffs[-2::-1]:
        out = out * z + c
    return out


def _c1_fn(z):
    z = np.asarray(z, dtype=complex)
    small = np.abs(z) < _SMALL
    safe = np.where(small, 0.5, z)
    big = -np.log(1.0 - safe) / safe
    return np.where(small, _horner(_C1_COEFFS, z), big)


def _c1_deriv(z):
    z = np.asarray(z, dtype=complex)
    small = np.abs(z) < _SMALL
    safe = np.where(small, 0.5, z)
    big = 1.0 / (safe * (1.0 - safe)) + np.log(1.0 - safe) / safe**2
    return np.where(small, _horner(_C1_DERIV_COEFFS, z), big)


def cesaro_of_one() -> ClosedForm:
    """C(1) in closed form, with an explicit derivative evaluator."""
    return ClosedForm(_c1_fn, _c1_deriv, label="cesaro(1)")


# switchover radius and tail length for the polynomial-image series branch;
# 0.35^48 ~ 1e-22 keeps the truncated tail far below quadrature tolerances
_POLY_SMALL = 0.35
_POLY_TAIL_TERMS = 48


def _poly_image(series: PowerSeries) -> ClosedForm:
    """Exact C(poly): the image of z^k is (-log(1-z) - sum_{m<=k} z^m/m)/z.

    Summing against the coefficients gives

        C(f)(z) = ( -S log(1-z) - Q(z) ) / z,
        S = sum_k a_k,  Q(z) = sum_m (z^m/m) sum_{k>=m} a_k,

    an entire-on-the-disk closed form; a series branch (exact leading
    coefficients plus the geometric log tail) covers small |z| where the
    closed form cancels.
    """
    c = series.coeffs
    d = series.degree
    total = complex(c.sum())
    suffix = np.cumsum(c[::-1])[::-1]
    q = np.zeros(d + 1, dtype=complex)
    if d >= 1:
        q[1:] = suffix[1:] / np.arange(1, d + 1)
    dq = suffix[1:] if d >= 1 else np.zeros(1, dtype=complex)
    head = np.cumsum(c) / np.arange(1, d + 2)
    dhead = head[1:] * np.arange(1, d + 1) if d >= 1 else np.zeros(1, dtype=complex)
    j = np.arange(_POLY_TAIL_TERMS, dtype=float)
    tail_c = 1.0 / (d + 2.0 + j)
    dtail_c = (d + 1.0 + j) / (d + 2.0 + j)

    def fn(z):
        z = np.asarray(z, dtype=complex)
        small = np.abs(z) < _POLY_SMALL
        safe = np.where(small, 0.5, z)
        closed = (-total * np.log(1.0 - safe) - _horner(q, safe)) / safe
        ser = _horner(head, z) + total * z ** (d + 1) * _horner(tail_c, z)
        return np.where(small, ser, closed)

    def dfn(z):
        z = np.asarray(z, dtype=complex)
        small = np.abs(z) < _POLY_SMALL
        safe = np.where(small, 0.5, z)
        n_val = -total * np.log(1.0 - safe) - _horner(q, safe)
        n_der = total / (1.0 - safe) - _horner(dq, safe)
        closed = (n_der * safe - n_val) / safe**2
        ser = _horner(dhead, z) + total * z**d * _horner(dtail_c, z)
        return np.where(small, ser, closed)

    return ClosedForm(fn, dfn, label=f"cesaro(poly deg {d})")


def cesaro_transform(f: AnalyticFunction, tol: float = DEFAULT_QUAD_TOL) -> AnalyticFunction:
    """C(f) as an analytic function.

    Polynomial images are closed forms built from the exact monomial
    images (the log tail is what cesaro_coeff necessarily truncates);
    constants scale the closed form of C(1); other closed forms are
    wrapped as quadrature evaluators (value and derivative) at the given
    tolerance.
    """
    if isinstance(f, Poly):
        return _poly_image(f.series)
    if isinstance(f, Constant):
        c = f.value

        def fn(z):
            return c * _c1_fn(z)

        def dfn(z):
            return c * _c1_deriv(z)

        return ClosedForm(fn, dfn, label=f"{c} * cesaro(1)")

    def fn(z):
        return cesaro_integral(f, np.asarray(z, dtype=complex), tol)

    def dfn(z):
        return cesaro_derivative(f, np.asarray(z, dtype=complex), tol)

    return ClosedForm(fn, dfn, label=f"cesaro({f!r})")

"""Analytic functions on the open unit disk.

The package works with two representations side by side: finite power
series (exact coefficient arithmetic) and closed-form evaluators for the
extremal families

    (1 - z^2)^(-alpha)                          unit vector of the weighted
                                                sup-norm space with weight
                                                (1 - r^2)^alpha,
    (1 - z^2)^(-alpha) / log(2 e^(1/alpha) / (1 - z^2))
                                                unit vector of the variant
                                                with the extra log factor.

Both families use principal branches.  That is legitimate on the whole
disk because Re(1 - z^2) = 1 - x^2 + y^2 > 0 whenever |z| < 1, so
1 - z^2 never meets the branch cut of the principal logarithm.

Evaluators accept scalars or numpy arrays of points.  Evaluation is
guarded at |z| <= 1 - 1e-12; the families above blow up at the boundary
and every caller in this package stays inside that radius.

Taylor coefficients of a closed form are recovered through the discrete
Cauchy integral: sample on a circle |z| = rho, take an FFT, and divide
by rho^n.  The point count starts at the smallest power of two with at
least 4*(N+1) samples and doubles until no requested coefficient moves
by more than the coefficient tolerance; failure to stabilize raises
ConvergenceError.  Roundoff grows like rho^(-n), so deep coefficients
need a radius closer to the circle of convergence than the default 1/2.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ConvergenceError, DomainError

# Hard guard against boundary blow-up: evaluation rejects |z| above this.
EVAL_RADIUS_LIMIT = 1.0 - 1e-12

# Default truncation degree for series-based pipelines.
DEFAULT_TRUNCATION = 256

DEFAULT_COEFF_TOL = 1e-10
DEFAULT_EXTRACTION_RADIUS = 0.5
_MAX_EXTRACTION_POINTS = 1 << 17


def one_minus_sq(z):
    """(1 - z)(1 + z), which keeps precision near z = +-1 where 1 - z*z cancels."""
    return (1.0 - z) * (1.0 + z)


class PowerSeries:
    """Immutable finite Taylor coefficient vector; coeffs[n] multiplies z**n."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.atleast_1d(np.asarray(coeffs, dtype=complex)).copy()
        if arr.ndim != 1 or arr.size == 0:
            raise DomainError("coefficient vector must be one dimensional and nonempty")
        if not np.all(np.isfinite(arr)):
            raise DomainError("coefficients must be finite")
        arr.setflags(write=False)
        self.coeffs = arr

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def eval_at(self, z):
        """Horner evaluation; z may be a scalar or an ndarray."""
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, self.coeffs[-1], dtype=complex)
        for c in self.coeffs[-2::-1]:
            out = out * z + c
        return out

    def differentiate(self) -> "PowerSeries":
        if self.degree == 0:
            return PowerSeries([0.0])
        n = np.arange(1, self.coeffs.size)
        return PowerSeries(n * self.coeffs[1:])

    def truncate(self, n: int) -> "PowerSeries":
        if n < 0:
            raise DomainError("truncation degree must be nonnegative")
        out = np.zeros(n + 1, dtype=complex)
        keep = min(n + 1, self.coeffs.size)
        out[:keep] = self.coeffs[:keep]
        return PowerSeries(out)

    def __repr__(self):
        return f"PowerSeries(degree={self.degree})"


class AnalyticFunction:
    """Base class; subclasses provide eval_at and derivative."""

    def eval_at(self, z):
        raise NotImplementedError

    def derivative(self) -> "AnalyticFunction":
        raise NotImplementedError


class Poly(AnalyticFunction):
    """Polynomial backed by a PowerSeries."""

    __slots__ = ("series",)

    def __init__(self, series):
        if not isinstance(series, PowerSeries):
            series = PowerSeries(series)
        self.series = series

    def eval_at(self, z):
        return self.series.eval_at(z)

    def derivative(self) -> "Poly":
        return Poly(self.series.differentiate())

    def __repr__(self):
        return f"Poly(degree={self.series.degree})"


class Constant(AnalyticFunction):
    __slots__ = ("value",)

    def __init__(self, value):
        value = complex(value)
        if not (math.isfinite(value.real) and math.isfinite(value.imag)):
            raise DomainError("constant must be finite")
        self.value = value

    def eval_at(self, z):
        z = np.asarray(z, dtype=complex)
        return np.full(z.shape, self.value, dtype=complex)

    def derivative(self) -> "Constant":
        return Constant(0.0)

    def __repr__(self):
        return f"Constant({self.value})"


class ClosedForm(AnalyticFunction):
    """Analytic function given by an arbitrary vectorized evaluator.

    deriv_fn, when supplied, must evaluate the analytic derivative.  When
    absent, derivative() falls back to a spectral contour derivative on a
    small circle around each point; that fallback loses accuracy as the
    point approaches the unit circle, so hot paths supply deriv_fn.
    """

    __slots__ = ("fn", "deriv_fn", "label")

    def __init__(self, fn, deriv_fn=None, label: str = "closed-form"):
        self.fn = fn
        self.deriv_fn = deriv_fn
        self.label = label

    def eval_at(self, z):
        z = np.asarray(z, dtype=complex)
        return np.asarray(self.fn(z), dtype=complex)

    def derivative(self) -> "ClosedForm":
        if self.deriv_fn is not None:
            return ClosedForm(self.deriv_fn, label=self.label + "'")
        return ClosedForm(_spectral_derivative(self.fn), label=self.label + "'")

    def __repr__(self):
        return f"ClosedForm({self.label})"


class KorenblumExtremal(AnalyticFunction):
    """f(z) = (1 - z^2)^(-alpha), the norm-one extremal of the plain weight."""

    __slots__ = ("alpha",)

    def __init__(self, alpha: float):
        if not 0.0 < alpha < 1.0:
            raise DomainError("alpha must lie in (0, 1)")
        self.alpha = float(alpha)

    def eval_at(self, z):
        z = np.asarray(z, dtype=complex)
        return np.power(one_minus_sq(z), -self.alpha)

    def derivative(self) -> ClosedForm:
        a = self.alpha

        def dfn(z):
            z = np.asarray(z, dtype=complex)
            return 2.0 * a * z * np.power(one_minus_sq(z), -a - 1.0)

        return ClosedForm(dfn, label=f"d/dz (1-z^2)^(-{a})")

    def __repr__(self):
        return f"KorenblumExtremal(alpha={self.alpha})"


def log_weight_constant(alpha: float) -> float:
    """log(2 e^(1/alpha)) = 1/alpha + log 2, the log factor at the origin."""
    return 1.0 / alpha + math.log(2.0)


class LogKorenblumExtremal(AnalyticFunction):
    """f(z) = (1 - z^2)^(-alpha) / log(2 e^(1/alpha) / (1 - z^2))."""

    __slots__ = ("alpha",)

    def __init__(self, alpha: float):
        if not 0.0 < alpha < 1.0:
            raise DomainError("alpha must lie in (0, 1)")
        self.alpha = float(alpha)

    def _log_term(self, z):
        return log_weight_constant(self.alpha) - np.log(one_minus_sq(z))

    def eval_at(self, z):
        z = np.asarray(z, dtype=complex)
        return np.power(one_minus_sq(z), -self.alpha) / self._log_term(z)

    def derivative(self) -> ClosedForm:
        a = self.alpha

        def dfn(z):
            z = np.asarray(z, dtype=complex)
            omsq = one_minus_sq(z)
            log_term = log_weight_constant(a) - np.log(omsq)
            f = np.power(omsq, -a) / log_term
            # d/dz log f = 2 a z/(1-z^2) - (2 z/(1-z^2)) / log_term
            return f * (2.0 * z / omsq) * (a - 1.0 / log_term)

        return ClosedForm(dfn, label=f"d/dz log-extremal({a})")

    def __repr__(self):
        return f"LogKorenblumExtremal(alpha={self.alpha})"


def _spectral_derivative(fn, points: int = 32):
    """Contour derivative f'(z) = (1/(M rho)) sum_j f(z + rho w^j) w^-j.

    Exponentially accurate for analytic fn as long as the sampling circle
    stays inside the evaluation guard; rho shrinks with 1 - |z|.
    """
    theta = 2.0 * np.pi * np.arange(points) / points
    rot = np.exp(1j * theta)
    inv_rot = np.exp(-1j * theta)

    def dfn(z):
        z = np.asarray(z, dtype=complex)
        rho = 0.5 * (EVAL_RADIUS_LIMIT - np.abs(z))
        if np.any(rho <= 0):
            raise DomainError("point too close to the unit circle for contour derivative")
        samples = fn(z[..., None] + rho[..., None] * rot)
        return (samples * inv_rot).sum(axis=-1) / (points * rho)

    return dfn


def evaluate(f: AnalyticFunction, z):
    """Evaluate f at z (scalar or ndarray), guarding |z| <= 1 - 1e-12.

    Returns a python complex for scalar input, an ndarray otherwise.
    """
    arr = np.asarray(z, dtype=complex)
    # the 1e-15 relative slack absorbs the ulp noise of r * e^(i theta)
    if arr.size and float(np.max(np.abs(arr))) > EVAL_RADIUS_LIMIT * (1.0 + 1e-15):
        raise DomainError("evaluation point outside |z| <= 1 - 1e-12")
    out = f.eval_at(arr)
    if np.ndim(z) == 0:
        return complex(out)
    return out


def derivative(f: AnalyticFunction) -> AnalyticFunction:
    """Analytic derivative of f, exact for series and closed forms alike."""
    return f.derivative()


def taylor_truncate(
    f: AnalyticFunction,
    n: int,
    radius: float = DEFAULT_EXTRACTION_RADIUS,
    tol: float = DEFAULT_COEFF_TOL,
    max_points: int = _MAX_EXTRACTION_POINTS,
) -> PowerSeries:
    """First n + 1 Taylor coefficients of f at the origin.

    Exact for Poly and Constant.  Closed forms go through the circle-FFT
    extraction described in the module docstring; the doubling test keeps
    aliasing below tol but cannot beat the rho^(-n) roundoff floor, so
    callers wanting n beyond roughly 30 should pass a larger radius.
    """
    if n < 0:
        raise DomainError("truncation degree must be nonnegative")
    if isinstance(f, Poly):
        return f.series.truncate(n)
    if isinstance(f, Constant):
        out = np.zeros(n + 1, dtype=complex)
        out[0] = f.value
        return PowerSeries(out)
    if not 0.0 < radius <= EVAL_RADIUS_LIMIT:
        raise DomainError("extraction radius must lie in (0, 1)")

    m = 1
    while m < 4 * (n + 1):
        m *= 2
    prev = _circle_coefficients(f, n, radius, m)
    while m < max_points:
        m *= 2
        cur = _circle_coefficients(f, n, radius, m)
        if float(np.max(np.abs(cur - prev))) <= tol:
            return PowerSeries(cur)
        prev = cur
    raise ConvergenceError(
        f"coefficient extraction did not stabilize below {tol:g} with {max_points} samples"
    )


def _circle_coefficients(f, n, radius, m):
    theta = 2.0 * np.pi * np.arange(m) / m
    samples = f.eval_at(radius * np.exp(1j * theta))
    spectrum = np.fft.fft(samples) / m
    return spectrum[: n + 1] / radius ** np.arange(n + 1)

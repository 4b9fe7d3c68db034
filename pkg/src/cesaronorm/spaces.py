"""Weighted sup-norm spaces on the unit disk and their numerical norms.

Four spaces appear throughout the package, identified by the radial
weight applied to |f| (or to |f'| for the Bloch-type space):

    HardyInf            w(r) = 1
    Korenblum(alpha)    w(r) = (1 - r^2)^alpha,                 0 < alpha < 1
    KorenblumLog(alpha) w(r) = (1 - r^2)^alpha
                               * log(2 e^(1/alpha) / (1 - r^2)), 0 < alpha < 1
    BlochAlpha(alpha)   |f(0)| + sup w(r) |f'(z)|,
                        w(r) = (1 - r^2)^alpha,                 alpha > 0

space_norm estimates the supremum over the disk on a polar grid: the
geometric radius grid r_k = 1 - 2^-k (k = 0..40, clamped inside the
evaluation guard) crossed with an equispaced angular grid that starts at
256 points and doubles until the running supremum stabilizes, followed
by golden-section refinement of the bracketing radial triple.  Values
beyond the overflow guard (1e12) mark the function as outside the space
and are reported through the diverged flag instead of an exception.

radial_sup_norm is the cheap variant for functions with nonnegative
Taylor coefficients, whose weighted modulus peaks on [0, 1); the
coefficient sign condition is checked (to extraction tolerance) before
the angular dimension is dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .errors import ConvergenceError, DomainError, PreconditionError
from .functions import (
    EVAL_RADIUS_LIMIT,
    AnalyticFunction,
    derivative,
    evaluate,
    log_weight_constant,
    one_minus_sq,
    taylor_truncate,
)
from .numerics import OVERFLOW_GUARD, RADIAL_K_MAX, golden_section_max, radius_grid


@dataclass(frozen=True)
class HardyInf:
    """Bounded analytic functions with the plain sup norm."""


@dataclass(frozen=True)
class Korenblum:
    """Weight (1 - r^2)^alpha on |f|."""

    alpha: float

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise DomainError("Korenblum weight needs alpha in (0, 1)")


@dataclass(frozen=True)
class KorenblumLog:
    """Weight (1 - r^2)^alpha log(2 e^(1/alpha) / (1 - r^2)) on |f|."""

    alpha: float

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise DomainError("log-weighted space needs alpha in (0, 1)")


@dataclass(frozen=True)
class BlochAlpha:
    """Weight (1 - r^2)^alpha on |f'|, plus the value at the origin."""

    alpha: float

    def __post_init__(self):
        if not self.alpha > 0.0:
            raise DomainError("Bloch-type space needs alpha > 0")


SpaceSpec = HardyInf | Korenblum | KorenblumLog | BlochAlpha


@dataclass(frozen=True)
class NormEstimate:
    """Norm value with the argmax location and refinement diagnostics."""

    value: float
    argmax_radius: float
    argmax_angle: float
    radial_points: int
    angular_points: int
    refinement_residual: float
    diverged: bool = False
    truncation_degree: Optional[int] = None


def _validate_radius(r):
    arr = np.asarray(r, dtype=float)
    if np.any(arr < 0.0) or np.any(arr >= 1.0):
        raise DomainError("radius must lie in [0, 1)")
    return arr


def weight_at(space: SpaceSpec, r):
    """Radial weight of the space at r (scalar or ndarray)."""
    arr = _validate_radius(r)
    if isinstance(space, HardyInf):
        out = np.ones_like(arr)
    elif isinstance(space, (Korenblum, BlochAlpha)):
        out = one_minus_sq(arr) ** space.alpha
    elif isinstance(space, KorenblumLog):
        omsq = one_minus_sq(arr)
        out = omsq ** space.alpha * (log_weight_constant(space.alpha) - np.log(omsq))
    else:
        raise DomainError(f"unknown space {space!r}")
    if np.ndim(r) == 0:
        return float(out)
    return out


def _clamped_radii(k_max: int) -> np.ndarray:
    rs = np.minimum(radius_grid(k_max), EVAL_RADIUS_LIMIT)
    return np.unique(rs)


def _weight_fn(space):
    if isinstance(space, HardyInf):
        return lambda r: np.ones_like(np.asarray(r, dtype=float))
    alpha = space.alpha
    if isinstance(space, (Korenblum, BlochAlpha)):
        return lambda r: one_minus_sq(np.asarray(r, dtype=float)) ** alpha
    c0 = log_weight_constant(alpha)

    def wlog(r):
        omsq = one_minus_sq(np.asarray(r, dtype=float))
        return omsq**alpha * (c0 - np.log(omsq))

    return wlog


def _disk_sup(f, wfn, tol, k_max, n_angles, max_angles, guard):
    """sup over a polar grid of wfn(r) |f(z)|, polished by golden search.

    A bare angular grid converges only quadratically in the spacing, so
    each resolution level is polished: a radial golden pass against the
    whole angle row, an angular pass around the winning node, then a
    radial pass along the refined ray.  The angular resolution doubles
    until the polished supremum stops moving.
    """
    radii = _clamped_radii(k_max)
    w = wfn(radii)

    def grid_values(m):
        angles = 2.0 * np.pi * np.arange(m) / m
        z = radii[:, None] * np.exp(1j * angles)[None, :]
        return w[:, None] * np.abs(evaluate(f, z)), angles

    def scan(vals, angles, m):
        # increasing radius so a blow-up reports its first witness
        row_max = vals.max(axis=1)
        bad = np.flatnonzero(~np.isfinite(row_max) | (row_max > guard))
        if not bad.size:
            return None
        i = int(bad[0])
        j = int(np.argmax(vals[i]))
        return NormEstimate(
            value=float(row_max[i]),
            argmax_radius=float(radii[i]),
            argmax_angle=float(angles[j]),
            radial_points=i + 1,
            angular_points=m,
            refinement_residual=math.inf,
            diverged=True,
        )

    def polish(vals, angles, m):
        flat = int(np.argmax(vals))
        i, j = divmod(flat, vals.shape[1])
        best_r = float(radii[i])
        best_angle = float(angles[j])
        best_v = float(vals[i, j])
        unit = np.exp(1j * angles)
        step = 2.0 * np.pi / m
        lo = float(radii[max(i - 1, 0)])
        hi = float(radii[min(i + 1, len(radii) - 1)])
        residual = 0.0

        def grid_profile(r):
            return float(wfn(r) * np.abs(evaluate(f, r * unit)).max())

        if hi > lo:
            gx, gv, residual, _ = golden_section_max(grid_profile, lo, hi, xtol=1e-8)
            if gv > best_v:
                best_r, best_v = gx, gv
                best_angle = float(angles[int(np.argmax(np.abs(evaluate(f, gx * unit))))])

        # coordinate ascent; one pass leaves a mixed-curvature error that
        # would keep the level-to-level delta above tol, so iterate
        for _ in range(6):
            before = best_v

            def angle_profile(theta):
                return float(wfn(best_r)) * abs(evaluate(f, best_r * np.exp(1j * theta)))

            gx, gv, res_a, _ = golden_section_max(
                angle_profile, best_angle - step, best_angle + step, xtol=1e-8
            )
            residual = max(residual, res_a)
            if gv > best_v:
                best_angle, best_v = gx % (2.0 * math.pi), gv

            if hi > lo:
                ray = np.exp(1j * best_angle)

                def ray_profile(r):
                    return float(wfn(r)) * abs(evaluate(f, r * ray))

                gx, gv, res_r, _ = golden_section_max(ray_profile, lo, hi, xtol=1e-8)
                residual = max(residual, res_r)
                if gv > best_v:
                    best_r, best_v = gx, gv
            if best_v - before <= max(0.25 * tol, 4e-16 * max(1.0, best_v)):
                break
        return best_r, best_angle, best_v, residual

    m = n_angles
    vals, angles = grid_values(m)
    flagged = scan(vals, angles, m)
    if flagged is not None:
        return flagged
    best_r, best_angle, best_v, residual = polish(vals, angles, m)
    angular_delta = math.inf
    while m < max_angles:
        m *= 2
        vals, angles = grid_values(m)
        flagged = scan(vals, angles, m)
        if flagged is not None:
            return flagged
        nr, na, nv, nres = polish(vals, angles, m)
        angular_delta = abs(nv - best_v)
        if nv > best_v:
            best_r, best_angle, best_v, residual = nr, na, nv, nres
        if angular_delta <= max(0.5 * tol, 4e-16 * max(1.0, best_v)):
            break
    else:
        if angular_delta > tol:
            raise ConvergenceError(
                f"angular refinement stalled at delta {angular_delta:.3e} with {m} angles"
            )

    return NormEstimate(
        value=best_v,
        argmax_radius=best_r,
        argmax_angle=best_angle,
        radial_points=len(radii),
        angular_points=m,
        refinement_residual=residual,
    )


def space_norm(
    f: AnalyticFunction,
    space: SpaceSpec,
    tol: float = 1e-9,
    k_max: int = RADIAL_K_MAX,
    n_angles: int = 256,
    max_angles: int = 8192,
) -> NormEstimate:
    """Numerical norm of f in the given space.

    The returned value is a supremum over sampled points, hence a lower
    bound of the true norm that is accurate to roughly tol for smooth
    integrands.  A diverged estimate means the weighted modulus passed
    the overflow guard, i.e. f does not belong to the space.
    """
    if isinstance(space, BlochAlpha):
        base = abs(evaluate(f, 0j))
        est = _disk_sup(
            derivative(f), _weight_fn(space), tol, k_max, n_angles, max_angles, OVERFLOW_GUARD
        )
        if est.diverged:
            return est
        return replace(est, value=base + est.value)
    return _disk_sup(f, _weight_fn(space), tol, k_max, n_angles, max_angles, OVERFLOW_GUARD)


def radial_sup_norm(
    f: AnalyticFunction,
    space: SpaceSpec,
    tol: float = 1e-9,
    k_max: int = RADIAL_K_MAX,
    check_degree: int = 24,
) -> NormEstimate:
    """Norm via the radial slice, valid for nonnegative Taylor coefficients.

    The coefficient sign condition is verified through taylor_truncate up
    to check_degree (tolerance 1e-7 against extraction noise); functions
    failing it raise PreconditionError, because for them the radial sup
    can undershoot the disk supremum.
    """
    series = taylor_truncate(f, check_degree)
    scale = max(1.0, float(np.max(np.abs(series.coeffs))))
    tol_c = 1e-7 * scale
    if float(np.min(series.coeffs.real)) < -tol_c or float(np.max(np.abs(series.coeffs.imag))) > tol_c:
        raise PreconditionError(
            "radial_sup_norm requires nonnegative Taylor coefficients"
        )
    if isinstance(space, BlochAlpha):
        raise PreconditionError("radial_sup_norm applies to modulus weights, not Bloch norms")

    radii = _clamped_radii(k_max)
    wfn = _weight_fn(space)

    def profile(r):
        return float(wfn(r) * abs(evaluate(f, complex(r, 0.0))))

    vals = wfn(radii) * np.abs(evaluate(f, radii.astype(complex)))
    bad = np.flatnonzero(~np.isfinite(vals) | (vals > OVERFLOW_GUARD))
    if bad.size:
        i = int(bad[0])
        return NormEstimate(
            value=float(vals[i]),
            argmax_radius=float(radii[i]),
            argmax_angle=0.0,
            radial_points=i + 1,
            angular_points=1,
            refinement_residual=math.inf,
            diverged=True,
            truncation_degree=check_degree,
        )
    i = int(np.argmax(vals))
    best_r, best_v = float(radii[i]), float(vals[i])
    lo = float(radii[max(i - 1, 0)])
    hi = float(radii[min(i + 1, len(radii) - 1)])
    residual = 0.0
    if hi > lo:
        gx, gv, residual, _ = golden_section_max(profile, lo, hi, xtol=1e-8)
        if gv > best_v:
            best_r, best_v = gx, gv
    return NormEstimate(
        value=best_v,
        argmax_radius=best_r,
        argmax_angle=0.0,
        radial_points=len(radii),
        angular_points=1,
        refinement_residual=residual,
        truncation_degree=check_degree,
    )


def bloch_growth_bound(seminorm: float, value_at_zero: float, r: float, alpha: float) -> float:
    """Pointwise growth bound |f(r)| <= f0 + s * G_alpha(r) in the Bloch scale.

    G_1(r) = log(1/(1-r)); for alpha != 1,
    G_alpha(r) = ((1-r)^(1-alpha) - 1) / (alpha - 1).
    """
    if seminorm < 0.0 or value_at_zero < 0.0:
        raise DomainError("seminorm and origin value must be nonnegative")
    if not 0.0 <= r < 1.0:
        raise DomainError("radius must lie in [0, 1)")
    if not alpha > 0.0:
        raise DomainError("alpha must be positive")
    if alpha == 1.0:
        growth = math.log(1.0 / (1.0 - r))
    else:
        growth = ((1.0 - r) ** (1.0 - alpha) - 1.0) / (alpha - 1.0)
    return value_at_zero + seminorm * growth

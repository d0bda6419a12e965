"""Independent numerical verification of every closed form in the package.

Two quadrature routes exist for each channel kernel:

* momentum_integral_kernel resolves the radial delta of the intermediate
  momentum-space integral analytically (emitted momentum = |nu| - omega) and
  integrates the remaining polar integrand adaptively; the mirror factors
  1 -/+ cos(2 p a cos theta) are evaluated as 2 sin^2 / 2 cos^2 (p a cos theta)
  so small arguments lose nothing to cancellation.

* angular_total integrates the printed per-angle emission density of the
  excitation channel at fixed emitted energy k; times 2*pi it must reproduce
  the kernel at nu = omega + k.

verify_all runs both on a grid and reports per-point agreement, including the
measured ratio 2*pi*angular_total/kernel (expected 1.0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .angular import reduced_density
from .kernels import dissipation_kernel
from .params import AtomParams, BoundaryCondition, MirrorConfig, MotionAxis
from .quadrature import QuadratureSpec, integrate, panels_for_oscillation

__all__ = [
    "ConsistencyReport",
    "momentum_integral_kernel",
    "angular_total",
    "static_decay_quadrature",
    "verify_all",
    "ALL_CHANNELS",
]

ALL_CHANNELS = (
    (BoundaryCondition.DIRICHLET, MotionAxis.PARALLEL),
    (BoundaryCondition.DIRICHLET, MotionAxis.PERPENDICULAR),
    (BoundaryCondition.NEUMANN, MotionAxis.PARALLEL),
    (BoundaryCondition.NEUMANN, MotionAxis.PERPENDICULAR),
)

# Closed forms smaller than this are compared with absolute tolerance;
# relative error is meaningless against a zero.
NEAR_ZERO = 1e-12
ABS_FLOOR = 1e-14


@dataclass(frozen=True)
class ConsistencyReport:
    """Agreement record for one (boundary condition, axis, x) grid point."""

    bc: BoundaryCondition
    axis: MotionAxis
    x: float
    closed_form: float
    quadrature: float
    rel_error: float
    passed: bool
    measured_ratio_to_imgamma: float


def _mirror_trig_squared(bc: BoundaryCondition, axis: MotionAxis):
    """The [1 -/+ cos(2 p a u)] mirror factor as a stable 2*trig^2(p a u)."""
    if bc is BoundaryCondition.DIRICHLET:
        return np.sin if axis is MotionAxis.PARALLEL else np.cos
    return np.cos if axis is MotionAxis.PARALLEL else np.sin


def momentum_integral_kernel(bc: BoundaryCondition, axis: MotionAxis, nu: float,
                             p: AtomParams, mc: MirrorConfig,
                             q: QuadratureSpec = QuadratureSpec()) -> float:
    """Kernel from the pre-closed-form momentum integral, by quadrature.

    Returns 0 exactly at or below threshold.  Raises QuadratureError rather
    than returning an unconverged value.
    """
    p0 = abs(nu) - p.omega
    if p0 <= 0.0:
        return 0.0
    x = mc.a * p0
    trig = _mirror_trig_squared(bc, axis)

    if axis is MotionAxis.PARALLEL:
        weight = 0.5

        def integrand(theta):
            return np.sin(theta) ** 3 * 2.0 * trig(x * np.cos(theta)) ** 2
    else:
        weight = 1.0

        def integrand(theta):
            return np.cos(theta) ** 2 * np.sin(theta) * 2.0 * trig(x * np.cos(theta)) ** 2

    polar = integrate(integrand, 0.0, math.pi, q,
                      initial_panels=panels_for_oscillation(x))
    return p.g**2 / (8.0 * math.pi * p.m * p.omega) * p0**3 * weight * polar


def angular_total(bc: BoundaryCondition, axis: MotionAxis, k: float,
                  p: AtomParams, mc: MirrorConfig,
                  q: QuadratureSpec = QuadratureSpec(),
                  numeric_phi: bool = False) -> float:
    """Integral of the printed emission density over all angles at fixed k:
    the per-dk coefficient of |y_tilde(omega + k)|^2.

    The azimuthal integral of cos^2(phi) is applied analytically (= pi) for
    parallel motion unless numeric_phi forces an explicit quadrature check;
    perpendicular densities are already phi-integrated.
    """
    if not (k > 0.0 and math.isfinite(k)):
        raise ValueError(f"k must be finite and > 0, got {k}")

    def polar_integrand(theta):
        return reduced_density(bc, axis, k, theta, 0.0, p, mc)

    panels = panels_for_oscillation(k * mc.a)
    polar = integrate(polar_integrand, 0.0, math.pi, q, initial_panels=panels)
    if axis is MotionAxis.PARALLEL:
        if numeric_phi:
            phi_factor = integrate(lambda ph: np.cos(ph) ** 2,
                                   0.0, 2.0 * math.pi, q, initial_panels=8)
        else:
            phi_factor = math.pi
        return polar * phi_factor
    return polar


def static_decay_quadrature(bc: BoundaryCondition, p: AtomParams,
                            mc: MirrorConfig,
                            q: QuadratureSpec = QuadratureSpec()) -> float:
    """Static (motion-independent) decay rate by angular quadrature.

    Resolves the radial delta at emitted energy omega and integrates the
    per-steradian density g^2/(4 pi m) * trig^2(omega*a*cos theta) over the
    sphere; the closed forms it must match are
    g^2/(2m) * (1 -/+ sin(2 omega a)/(2 omega a)).
    """
    z = p.omega * mc.a
    trig = np.sin if bc is BoundaryCondition.DIRICHLET else np.cos

    def integrand(theta):
        return trig(z * np.cos(theta)) ** 2 * np.sin(theta)

    polar = integrate(integrand, 0.0, math.pi, q,
                      initial_panels=panels_for_oscillation(z))
    return p.g**2 / (4.0 * math.pi * p.m) * 2.0 * math.pi * polar


def verify_all(xs, channels=None, q: QuadratureSpec = QuadratureSpec(),
               tol: float = 1e-8, p: AtomParams = AtomParams(),
               a: float = 1.0, numeric_phi: bool = False) -> list[ConsistencyReport]:
    """Run both quadrature oracles against the closed forms on a grid of x.

    One report per (bc, axis, x), canonically ordered by boundary condition,
    axis, then ascending x regardless of evaluation order.  A point passes
    when the momentum integral matches the closed form (relative tol, or
    ABS_FLOOR absolutely near zeros) and 2*pi*angular_total/kernel is within
    tol of 1.  Quadrature failures propagate as QuadratureError.
    """
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    if xs.size == 0:
        raise ValueError("verification grid must not be empty")
    if np.any(xs <= 0.0) or np.any(~np.isfinite(xs)):
        raise ValueError("verification grid must contain finite x > 0 only")
    if channels is None:
        channels = ALL_CHANNELS
    if not channels:
        raise ValueError("no channels selected")

    reports = []
    for bc, axis in sorted(set(channels), key=lambda c: (c[0].value, c[1].value)):
        mc = MirrorConfig(bc=bc, a=a)
        for x in np.sort(xs):
            nu = p.omega + x / a
            closed = dissipation_kernel(bc, axis, nu, p, mc)
            quad = momentum_integral_kernel(bc, axis, nu, p, mc, q)
            diff = abs(quad - closed)
            rel = diff / abs(closed) if closed != 0.0 else math.inf
            ang = angular_total(bc, axis, x / a, p, mc, q, numeric_phi=numeric_phi)
            ratio = 2.0 * math.pi * ang / closed if closed != 0.0 else math.inf
            agreement = rel <= tol or (abs(closed) < NEAR_ZERO and diff <= ABS_FLOOR)
            reports.append(ConsistencyReport(
                bc=bc, axis=axis, x=float(x),
                closed_form=float(closed), quadrature=float(quad),
                rel_error=float(rel), passed=bool(agreement and abs(ratio - 1.0) <= tol),
                measured_ratio_to_imgamma=float(ratio),
            ))
    return reports

"""Angular distribution of the excitation channel: atom excited, one quantum emitted.

The differential probability per dk dtheta dphi factorizes as

    prefactor * k^3 * sin(theta) * p(ka, theta, phi) * |y_tilde(omega + k)|^2

with the dimensionless pattern p depending on the mirror type and motion axis:

    Dirichlet parallel       sin^2(theta) * sin^2(ka cos theta) * cos^2(phi)
    Dirichlet perpendicular  cos^2(theta) * cos^2(ka cos theta)
    Neumann  parallel        sin^2(theta) * cos^2(ka cos theta) * cos^2(phi)
    Neumann  perpendicular   cos^2(theta) * sin^2(ka cos theta)

Angles are spherical coordinates centered on the atom's mean position, theta
measured from the mirror normal, and the parallel-motion direction fixed at
phi = 0.  Perpendicular-motion densities keep the phi-preintegrated
normalization (prefactor g^2/(2 (2 pi)^2 m omega)); parallel ones are per
dphi (prefactor g^2/(2 (2 pi)^3 m omega)).
"""

from __future__ import annotations

import math

import numpy as np

from .kernels import dissipation_kernel
from .params import AtomParams, BoundaryCondition, MirrorConfig, MotionAxis

__all__ = ["pattern", "reduced_density", "excitation_spectrum_density"]


def _validated_angles(theta, phi):
    th = np.asarray(theta, dtype=float)
    ph = np.asarray(phi, dtype=float)
    if np.any(th < 0.0) or np.any(th > math.pi) or np.any(~np.isfinite(th)):
        raise ValueError("theta must lie in [0, pi]")
    if np.any(ph < 0.0) or np.any(ph >= 2.0 * math.pi) or np.any(~np.isfinite(ph)):
        raise ValueError("phi must lie in [0, 2*pi)")
    return th, ph


def pattern(bc: BoundaryCondition, axis: MotionAxis, ka: float, theta, phi=0.0):
    """Dimensionless angular pattern p(ka, theta, phi) >= 0.

    theta/phi may be scalars or broadcastable arrays.  Perpendicular-axis
    patterns are independent of phi; parallel ones carry an exact cos^2(phi).
    """
    if not (ka >= 0.0 and math.isfinite(ka)):
        raise ValueError(f"ka must be finite and >= 0, got {ka}")
    th, ph = _validated_angles(theta, phi)
    mu = np.cos(th)
    osc = ka * mu
    if bc is BoundaryCondition.DIRICHLET:
        trig2 = np.sin(osc) ** 2 if axis is MotionAxis.PARALLEL else np.cos(osc) ** 2
    else:
        trig2 = np.cos(osc) ** 2 if axis is MotionAxis.PARALLEL else np.sin(osc) ** 2
    if axis is MotionAxis.PARALLEL:
        out = np.sin(th) ** 2 * trig2 * np.cos(ph) ** 2
    else:
        out = mu**2 * trig2
    if out.ndim == 0 and np.isscalar(theta) and np.isscalar(phi):
        return float(out)
    return out


def _parallel_prefactor(p: AtomParams) -> float:
    return p.g**2 / (2.0 * (2.0 * math.pi) ** 3 * p.m * p.omega)


def _perpendicular_prefactor(p: AtomParams) -> float:
    return p.g**2 / (2.0 * (2.0 * math.pi) ** 2 * p.m * p.omega)


def reduced_density(bc: BoundaryCondition, axis: MotionAxis, k: float,
                    theta, phi, p: AtomParams, mc: MirrorConfig,
                    phi_resolved: bool = False):
    """Differential emission probability per dk dtheta (dphi) with the
    trajectory factor |y_tilde|^2 stripped out.

    For the perpendicular axis the phi integral is already folded in;
    phi_resolved=True divides by 2*pi to expose a per-dphi density instead.
    k = 0 returns 0 (the k^3 measure kills it); k < 0 is a domain error.
    """
    if not (k >= 0.0 and math.isfinite(k)):
        raise ValueError(f"k must be finite and >= 0, got {k}")
    th, ph = _validated_angles(theta, phi)
    if k == 0.0:
        return np.zeros(np.broadcast(th, ph).shape) if th.ndim or ph.ndim else 0.0
    if axis is MotionAxis.PARALLEL:
        pref = _parallel_prefactor(p)
    else:
        pref = _perpendicular_prefactor(p)
        if phi_resolved:
            pref /= 2.0 * math.pi
    out = pref * k**3 * np.sin(th) * pattern(bc, axis, k * mc.a, th, ph)
    if np.ndim(out) == 0 and np.isscalar(theta) and np.isscalar(phi):
        return float(out)
    return out


def excitation_spectrum_density(bc: BoundaryCondition, axis: MotionAxis,
                                k: float, y_tilde_value: complex,
                                p: AtomParams, mc: MirrorConfig) -> float:
    """Angle-integrated dP/dk for emitted energy k > 0.

    Equals kernel(omega + k)/(2*pi) * |y_tilde(omega + k)|^2 — the per-dk
    coefficient the angular densities integrate to.  Nonzero only when the
    trajectory has spectral support above the internal frequency.
    """
    if not (k >= 0.0 and math.isfinite(k)):
        raise ValueError(f"k must be finite and >= 0, got {k}")
    weight = abs(y_tilde_value) ** 2
    if weight == 0.0 or k == 0.0:
        return 0.0
    return dissipation_kernel(bc, axis, p.omega + k, p, mc) / (2.0 * math.pi) * weight

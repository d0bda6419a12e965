"""Spontaneous emission of an initially excited atom near the mirror.

A static atom decays at the closed-form rate

    Dirichlet:  g^2/(2m) * (1 - sin(2 omega a)/(2 omega a))
    Neumann:    g^2/(2m) * (1 + sin(2 omega a)/(2 omega a))

(the two sum to g^2/m for every distance).  Harmonic center-of-mass motion at
omega_cm adds motional sidebands at emitted energies omega +/- omega_cm, each
with rate (epsilon^2/4) * sideband_kernel at that energy; the minus line
exists only while omega_cm < omega (emitted energies must be positive, and at
omega_cm = omega the would-be line carries zero rate).  Spectral lines are
kept exact (frequency + weight), never broadened.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .angular import pattern
from .kernels import sideband_kernel
from .params import AtomParams, BoundaryCondition, MirrorConfig, MotionAxis
from .trajectory import (MonochromaticMotion, TrajectorySpectrum,
                         _warn_if_nonperturbative)

__all__ = [
    "LineOrigin",
    "EmissionLine",
    "EmissionSpectrum",
    "static_rate",
    "sideband_rates",
    "emission_spectrum",
    "angular_decay_density",
    "decay_continuum",
]

_LINE_MATCH_RTOL = 1e-9


class LineOrigin(enum.Enum):
    STATIC = "static"
    SIDEBAND_PLUS = "sideband_plus"
    SIDEBAND_MINUS = "sideband_minus"


@dataclass(frozen=True)
class EmissionLine:
    """One discrete emission line: energy omega > 0, rate >= 0."""

    omega: float
    rate: float
    origin: LineOrigin

    def __post_init__(self) -> None:
        if not (self.omega > 0 and math.isfinite(self.omega)):
            raise ValueError(f"line energy must be > 0, got {self.omega}")
        if not (self.rate >= 0 and math.isfinite(self.rate)):
            raise ValueError(f"line rate must be >= 0, got {self.rate}")


@dataclass(frozen=True, eq=False)
class EmissionSpectrum:
    """Discrete emission lines, plus an optional continuum (omega, dRate/domega)
    for sampled trajectories.  total_rate sums the line rates only."""

    lines: tuple
    continuum: tuple | None = None

    def __post_init__(self) -> None:
        statics = [ln for ln in self.lines if ln.origin is LineOrigin.STATIC]
        if len(statics) > 1:
            raise ValueError("at most one static line allowed")

    @property
    def total_rate(self) -> float:
        return float(sum(ln.rate for ln in self.lines))


def _one_minus_sinc(z: float) -> float:
    """1 - sin(z)/z, series below z = 0.5 to dodge the small-z cancellation."""
    if z >= 0.5:
        return 1.0 - math.sin(z) / z
    z2 = z * z
    # sum_{m>=1} (-1)^(m+1) z^(2m) / (2m+1)!
    acc = 0.0
    for m in range(10, 0, -1):
        sign = 1.0 if m % 2 == 1 else -1.0
        acc = acc * z2 + sign / math.factorial(2 * m + 1)
    return acc * z2


def static_rate(bc: BoundaryCondition, p: AtomParams, mc: MirrorConfig) -> float:
    """Decay rate of a static excited atom at distance a from the mirror.

    Independent of any motion parameters; the Dirichlet mirror suppresses it
    to zero at the wall, the Neumann one doubles it, and both tend to the
    common value g^2/(2m) far away.
    """
    z = 2.0 * p.omega * mc.a
    if bc is BoundaryCondition.DIRICHLET:
        geom = _one_minus_sinc(z)
    else:
        geom = 1.0 + math.sin(z) / z
    return p.g**2 / (2.0 * p.m) * geom


def sideband_rates(bc: BoundaryCondition, mm: MonochromaticMotion,
                   p: AtomParams, mc: MirrorConfig) -> list[EmissionLine]:
    """Motional sideband lines of the decay spectrum, ascending in energy.

    Always one line at omega + omega_cm; a second at omega - omega_cm only
    when omega_cm < omega.  Rates scale exactly as epsilon^2 and use the
    same-channel angular kernel as the excitation closed forms.
    """
    if mm.epsilon == 0.0:
        return []
    _warn_if_nonperturbative(mm.epsilon, mm.omega_cm, p.omega)
    weight = mm.epsilon**2 / 4.0
    lines = []
    if mm.omega_cm < p.omega:
        w_minus = p.omega - mm.omega_cm
        lines.append(EmissionLine(
            omega=w_minus,
            rate=weight * sideband_kernel(bc, mm.axis, w_minus, p, mc),
            origin=LineOrigin.SIDEBAND_MINUS))
    w_plus = p.omega + mm.omega_cm
    lines.append(EmissionLine(
        omega=w_plus,
        rate=weight * sideband_kernel(bc, mm.axis, w_plus, p, mc),
        origin=LineOrigin.SIDEBAND_PLUS))
    return lines


def emission_spectrum(bc: BoundaryCondition, mm: MonochromaticMotion,
                      p: AtomParams, mc: MirrorConfig) -> EmissionSpectrum:
    """Full line spectrum: the static line at omega plus motional sidebands,
    sorted by energy."""
    lines = sideband_rates(bc, mm, p, mc)
    lines.append(EmissionLine(omega=p.omega, rate=static_rate(bc, p, mc),
                              origin=LineOrigin.STATIC))
    lines.sort(key=lambda ln: ln.omega)
    return EmissionSpectrum(lines=tuple(lines))


def _static_angular_density(bc: BoundaryCondition, theta, p: AtomParams,
                            mc: MirrorConfig):
    trig = np.sin if bc is BoundaryCondition.DIRICHLET else np.cos
    return p.g**2 / (4.0 * math.pi * p.m) * trig(p.omega * mc.a * np.cos(theta)) ** 2


def angular_decay_density(bc: BoundaryCondition, axis: MotionAxis, k: float,
                          theta, phi, mm: MonochromaticMotion,
                          p: AtomParams, mc: MirrorConfig):
    """Per-steradian decay rate at emitted energy k (> 0).

    The spectrum is a sum of lines; this returns the angular profile of every
    line matching k (within 1e-9 relative) and 0 between lines.  The static
    line carries the mirror factor sin^2/cos^2(omega*a*cos theta); motional
    lines carry the same-channel excitation pattern at their energy.
    Integrating over the sphere reproduces static_rate plus sideband_rates.
    """
    if not (k > 0.0 and math.isfinite(k)):
        raise ValueError(f"k must be finite and > 0, got {k}")
    th = np.asarray(theta, dtype=float)
    out = np.zeros(np.broadcast(th, np.asarray(phi, dtype=float)).shape)

    def matches(energy: float) -> bool:
        return abs(k - energy) <= _LINE_MATCH_RTOL * energy

    if matches(p.omega):
        out = out + _static_angular_density(bc, th, p, mc)
    if mm.epsilon > 0.0:
        motional = p.g**2 / (8.0 * math.pi**2 * p.m * p.omega) * mm.epsilon**2 / 4.0
        for energy in (p.omega + mm.omega_cm, p.omega - mm.omega_cm):
            if energy > 0.0 and matches(energy):
                out = out + motional * energy**3 * pattern(
                    bc, axis, energy * mc.a, th, phi)
    if out.ndim == 0 and np.isscalar(theta) and np.isscalar(phi):
        return float(out)
    return out


def decay_continuum(bc: BoundaryCondition, ts: TrajectorySpectrum,
                    p: AtomParams, mc: MirrorConfig):
    """Motional decay continuum dRate/domega of a grid (sampled) spectrum.

    For each frequency bin nu with omega + nu > 0, the emitted energy is
    w = omega + nu and the density is sideband_kernel(w) * |y_tilde(nu)|^2
    divided by (2 pi * T).  Returns (omega, density) sorted by omega.
    """
    if ts.grid_nu is None:
        raise ValueError("decay_continuum needs a grid spectrum")
    ts.validate()
    order = np.argsort(ts.grid_nu, kind="stable")
    nu = ts.grid_nu[order]
    vals = ts.grid_values[order]
    w = p.omega + nu
    keep = w > 0.0
    w = w[keep]
    density = (sideband_kernel(bc, ts.axis, w, p, mc)
               * np.abs(vals[keep]) ** 2 / (2.0 * math.pi * ts.window_t))
    return w, density

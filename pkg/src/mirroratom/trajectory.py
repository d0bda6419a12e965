"""Center-of-mass trajectories, their frequency spectra, and the vacuum-decay
(excitation) probability functional.

Conventions: the displacement transform is y_tilde(nu) = int dt e^{i nu t} y(t);
a real displacement makes it Hermitian, y_tilde(-nu) = conj(y_tilde(nu)).
Squared spectral lines are regularized with the rectangular-window rule
delta(0) -> T/(2 pi), which makes probabilities linear in the observation
window T; rates are P/T.  The default probability convention is the quadratic
form with coefficient 1/2,

    P = (1/2) * int (dnu / 2 pi) y_tilde(-nu) y_tilde(nu) m(nu),

reproducing rate = epsilon^2 * m(omega_cm) / 4 for monochromatic motion; the
im_gamma_factor=2 override doubles it for the total-emission convention.
"""

from __future__ import annotations

import csv
import json
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .kernels import dissipation_kernel
from .params import AtomParams, BoundaryCondition, MirrorConfig, MotionAxis, parse_axis

__all__ = [
    "PerturbativeAmplitudeWarning",
    "MonochromaticMotion",
    "SampledTrajectory",
    "TrajectorySpectrum",
    "spectrum_of_monochromatic",
    "spectrum_of_sampled",
    "vacuum_decay_probability",
    "decay_line_contributions",
    "excitation_rate_monochromatic",
    "sampled_trajectory_from_csv",
    "monochromatic_from_json",
]

_MEAN_TOL = 1e-12
_HERMITIAN_RTOL = 1e-9


class PerturbativeAmplitudeWarning(UserWarning):
    """Amplitude large enough that the second-order treatment is suspect."""


@dataclass(frozen=True)
class MonochromaticMotion:
    """Harmonic center-of-mass motion y(t) = epsilon * cos(omega_cm * t) along
    one axis, observed over a window of length window_t."""

    axis: MotionAxis
    epsilon: float
    omega_cm: float
    window_t: float

    def __post_init__(self) -> None:
        if not (self.epsilon >= 0 and math.isfinite(self.epsilon)):
            raise ValueError(f"epsilon must be >= 0, got {self.epsilon}")
        if not (self.omega_cm > 0 and math.isfinite(self.omega_cm)):
            raise ValueError(f"omega_cm must be > 0, got {self.omega_cm}")
        if not (self.window_t > 0 and math.isfinite(self.window_t)):
            raise ValueError(f"window_t must be > 0, got {self.window_t}")


def _warn_if_nonperturbative(epsilon: float, omega_cm: float, omega: float) -> None:
    # Second order in the departure: epsilon * max(omega_cm, omega) ~ 1 breaks it.
    if epsilon * max(omega_cm, omega) >= 0.5:
        warnings.warn(
            f"amplitude*frequency = {epsilon * max(omega_cm, omega):.3g} "
            "approaches 1; the second-order (small-departure) treatment is "
            "no longer reliable", PerturbativeAmplitudeWarning, stacklevel=3)


@dataclass(frozen=True, eq=False)
class SampledTrajectory:
    """Uniformly sampled displacement along one axis.

    The mean displacement belongs to the equilibrium position, not the
    departure: construction subtracts it, records it in mean_offset, and
    warns when it was larger than 1e-12 * max|y|.
    """

    axis: MotionAxis
    samples: np.ndarray
    dt: float
    mean_offset: float = field(default=0.0, init=False)

    def __post_init__(self) -> None:
        samples = np.asarray(self.samples, dtype=float)
        if samples.ndim != 1 or samples.size < 2:
            raise ValueError("samples must be a 1-D array with at least 2 entries")
        if not (self.dt > 0 and math.isfinite(self.dt)):
            raise ValueError(f"dt must be > 0, got {self.dt}")
        if np.any(~np.isfinite(samples)):
            raise ValueError("samples must be finite")
        mean = float(samples.mean())
        scale = float(np.max(np.abs(samples))) or 1.0
        if abs(mean) > _MEAN_TOL * scale:
            warnings.warn(
                f"mean displacement {mean:.3g} subtracted; the mirror distance "
                "is the mean position", UserWarning, stacklevel=3)
            samples = samples - mean
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "mean_offset", mean)

    @property
    def window_t(self) -> float:
        return self.samples.size * self.dt


@dataclass(frozen=True, eq=False)
class TrajectorySpectrum:
    """Frequency-domain displacement: either discrete lines {(nu_j, c_j)} with
    y_tilde(nu) = sum_j 2 pi c_j delta(nu - nu_j), or y_tilde sampled on the
    uniform DFT grid (fft layout), plus the observation window."""

    axis: MotionAxis
    window_t: float
    lines: tuple | None = None
    grid_nu: np.ndarray | None = None
    grid_values: np.ndarray | None = None

    def __post_init__(self) -> None:
        if not (self.window_t > 0 and math.isfinite(self.window_t)):
            raise ValueError(f"window_t must be > 0, got {self.window_t}")
        has_lines = self.lines is not None
        has_grid = self.grid_nu is not None and self.grid_values is not None
        if has_lines == has_grid:
            raise ValueError("exactly one of lines or grid must be provided")
        if has_lines:
            object.__setattr__(self, "lines",
                               tuple((float(nu), complex(c)) for nu, c in self.lines))
        else:
            object.__setattr__(self, "grid_nu", np.asarray(self.grid_nu, dtype=float))
            object.__setattr__(self, "grid_values",
                               np.asarray(self.grid_values, dtype=complex))
            if self.grid_nu.shape != self.grid_values.shape or self.grid_nu.ndim != 1:
                raise ValueError("grid_nu and grid_values must be matching 1-D arrays")

    def validate(self) -> None:
        """Check Hermitian symmetry y_tilde(-nu) = conj(y_tilde(nu)) and
        nonzero line frequencies; raises ValueError on violation."""
        if self.lines is not None:
            scale = max((abs(c) for _, c in self.lines), default=0.0) or 1.0
            fscale = max((abs(nu) for nu, _ in self.lines), default=0.0) or 1.0
            for nu, c in self.lines:
                if nu == 0.0:
                    raise ValueError("line frequencies must be nonzero")
                partner = [cj for nuj, cj in self.lines
                           if abs(nuj + nu) <= _HERMITIAN_RTOL * fscale]
                if not partner or abs(partner[0] - c.conjugate()) > _HERMITIAN_RTOL * scale:
                    raise ValueError(
                        f"missing or mismatched Hermitian partner for line at nu={nu}")
            return
        n = self.grid_nu.size
        # fft layout pairs bin k with bin (n - k) % n; the Nyquist bin of an
        # even-length grid is self-paired and must be (numerically) real.
        mirrored = self.grid_values[(-np.arange(n)) % n]
        scale = float(np.max(np.abs(self.grid_values))) or 1.0
        if np.max(np.abs(mirrored.conj() - self.grid_values)) > _HERMITIAN_RTOL * scale:
            raise ValueError("grid spectrum is not Hermitian-symmetric")


def spectrum_of_monochromatic(mm: MonochromaticMotion) -> TrajectorySpectrum:
    """Two delta lines at +/- omega_cm with amplitude epsilon/2 each (empty
    spectrum when epsilon = 0)."""
    lines = ()
    if mm.epsilon > 0.0:
        lines = ((mm.omega_cm, mm.epsilon / 2.0 + 0.0j),
                 (-mm.omega_cm, mm.epsilon / 2.0 + 0.0j))
    return TrajectorySpectrum(axis=mm.axis, window_t=mm.window_t, lines=lines)


def spectrum_of_sampled(st: SampledTrajectory) -> TrajectorySpectrum:
    """Rectangular-window DFT of the samples on the grid nu_k = 2 pi k/(N dt).

    y_tilde(nu_k) = dt * sum_n y_n e^{i nu_k t_n}, consistent with the
    delta(0) -> T/(2 pi) regularization; window_t = N * dt.
    """
    n = st.samples.size
    values = st.dt * np.conj(np.fft.fft(st.samples))
    nu = 2.0 * math.pi * np.fft.fftfreq(n, st.dt)
    return TrajectorySpectrum(axis=st.axis, window_t=st.window_t,
                              grid_nu=nu, grid_values=values)


def _axis_kernel(ts_axis: MotionAxis, bc: BoundaryCondition, nu,
                 p: AtomParams, mc: MirrorConfig):
    return dissipation_kernel(bc, ts_axis, nu, p, mc)


def vacuum_decay_probability(ts: TrajectorySpectrum, bc: BoundaryCondition,
                             p: AtomParams, mc: MirrorConfig,
                             im_gamma_factor: int = 1) -> float:
    """Excitation (vacuum-decay) probability of the quadratic form.

    Line spectra: P = factor * (T/2) * sum_j |c_j|^2 m(nu_j).
    Grid spectra: P = factor * (1/2) * (dnu/2 pi) * sum_k |y_k|^2 m(nu_k),
    summed in ascending-frequency order.  Always >= 0; exactly 0 when the
    spectrum has no support above the threshold |nu| > omega.
    """
    if im_gamma_factor not in (1, 2):
        raise ValueError(f"im_gamma_factor must be 1 or 2, got {im_gamma_factor}")
    ts.validate()
    if ts.lines is not None:
        total = 0.0
        for nu, c in sorted(ts.lines, key=lambda lc: lc[0]):
            total += abs(c) ** 2 * _axis_kernel(ts.axis, bc, nu, p, mc)
        return im_gamma_factor * 0.5 * ts.window_t * total
    order = np.argsort(ts.grid_nu, kind="stable")
    nu = ts.grid_nu[order]
    weight = np.abs(ts.grid_values[order]) ** 2
    kern = _axis_kernel(ts.axis, bc, nu, p, mc)
    dnu = 2.0 * math.pi / ts.window_t
    return im_gamma_factor * 0.5 * dnu / (2.0 * math.pi) * float(np.sum(weight * kern))


def decay_line_contributions(ts: TrajectorySpectrum, bc: BoundaryCondition,
                             p: AtomParams, mc: MirrorConfig,
                             im_gamma_factor: int = 1) -> list[dict]:
    """Per-line breakdown of vacuum_decay_probability for line spectra:
    one record per line with its frequency, |amplitude|, kernel value and
    probability contribution.  Empty for grid spectra."""
    if ts.lines is None:
        return []
    ts.validate()
    out = []
    for nu, c in sorted(ts.lines, key=lambda lc: lc[0]):
        kern = _axis_kernel(ts.axis, bc, nu, p, mc)
        out.append({
            "nu": nu,
            "amplitude": abs(c),
            "kernel": kern,
            "contribution": im_gamma_factor * 0.5 * ts.window_t * abs(c) ** 2 * kern,
        })
    return out


def excitation_rate_monochromatic(mm: MonochromaticMotion, bc: BoundaryCondition,
                                  p: AtomParams, mc: MirrorConfig) -> float:
    """Excitation rate epsilon^2 * m(omega_cm) / 4 of harmonic motion, the
    delta-line evaluation of the quadratic form (parallel motion reads the
    parallel kernel, perpendicular the perpendicular one).  Exactly 0 at or
    below the threshold omega_cm <= omega."""
    _warn_if_nonperturbative(mm.epsilon, mm.omega_cm, p.omega)
    kern = dissipation_kernel(bc, mm.axis, mm.omega_cm, p, mc)
    return mm.epsilon**2 * kern / 4.0


def sampled_trajectory_from_csv(path, axis: MotionAxis) -> SampledTrajectory:
    """Load a `t,y` CSV (uniform time grid, '#' comments allowed) as a
    SampledTrajectory along the given axis."""
    times, values = [], []
    with open(path, newline="") as fh:
        rows = [row for row in csv.reader(fh)
                if row and not row[0].lstrip().startswith("#")]
    if not rows or [c.strip() for c in rows[0][:2]] != ["t", "y"]:
        raise ValueError(f"{path}: expected a CSV with header 't,y'")
    for row in rows[1:]:
        times.append(float(row[0]))
        values.append(float(row[1]))
    t = np.asarray(times)
    if t.size < 2:
        raise ValueError(f"{path}: need at least 2 samples")
    steps = np.diff(t)
    dt = float(steps[0])
    if dt <= 0 or np.max(np.abs(steps - dt)) > 1e-9 * abs(dt):
        raise ValueError(f"{path}: time grid must be uniform and increasing")
    return SampledTrajectory(axis=axis, samples=np.asarray(values), dt=dt)


def monochromatic_from_json(path) -> MonochromaticMotion:
    """Load a monochromatic motion record {axis, epsilon, omega_cm, T}."""
    with open(path) as fh:
        data = json.load(fh)
    try:
        axis = parse_axis(str(data["axis"]))
        return MonochromaticMotion(axis=axis,
                                   epsilon=float(data["epsilon"]),
                                   omega_cm=float(data["omega_cm"]),
                                   window_t=float(data["T"]))
    except (KeyError, ValueError) as exc:
        raise ValueError(f"{path}: invalid monochromatic record: {exc}") from exc

"""Motion-induced excitation and radiation of a scalar atom facing a mirror.

A harmonically bound "scalar atom" (internal frequency omega, mass m,
coupling g) moves non-relativistically at mean distance a from a perfect
planar mirror imposing Dirichlet or Neumann conditions on a massless scalar
field.  This package evaluates, in natural units:

* the closed-form dissipation kernels converting trajectory spectra into
  vacuum-decay (excitation) probabilities, with their dimensionless shapes,
  free-space limit and near/far-plate behavior (`kernels`);
* per-angle emission densities of the excitation channel (`angular`);
* excitation probabilities and rates of monochromatic or sampled
  trajectories (`trajectory`);
* spontaneous-emission observables of an initially excited atom: static
  decay rate vs distance, motional sidebands, assembled spectra
  (`spontaneous`);
* independent adaptive-quadrature verification of every closed form
  (`oracle`, `quadrature`).

The `mirroratom` CLI exposes everything as deterministic CSV/JSON-emitting
commands; a separate figures package renders plots from those files.
"""

from .angular import excitation_spectrum_density, pattern, reduced_density
from .kernels import (SERIES_SWITCH, DissipationMatrix, dissipation_kernel,
                      dissipation_matrix, free_space_kernel,
                      oscillator_propagator, ratio_to_free, shape_function,
                      sideband_kernel)
from .oracle import (ALL_CHANNELS, ConsistencyReport, angular_total,
                     momentum_integral_kernel, static_decay_quadrature,
                     verify_all)
from .params import (AtomParams, BoundaryCondition, MirrorConfig, MotionAxis,
                     SphericalDirection, parse_axis, parse_bc)
from .quadrature import (QuadratureError, QuadratureSpec, integrate,
                         panels_for_oscillation)
from .spontaneous import (EmissionLine, EmissionSpectrum, LineOrigin,
                          angular_decay_density, decay_continuum,
                          emission_spectrum, sideband_rates, static_rate)
from .trajectory import (MonochromaticMotion, PerturbativeAmplitudeWarning,
                         SampledTrajectory, TrajectorySpectrum,
                         decay_line_contributions,
                         excitation_rate_monochromatic,
                         monochromatic_from_json, sampled_trajectory_from_csv,
                         spectrum_of_monochromatic, spectrum_of_sampled,
                         vacuum_decay_probability)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # params
    "AtomParams", "MirrorConfig", "BoundaryCondition", "MotionAxis",
    "SphericalDirection", "parse_axis", "parse_bc",
    # kernels
    "SERIES_SWITCH", "DissipationMatrix", "shape_function", "ratio_to_free",
    "free_space_kernel", "dissipation_kernel", "sideband_kernel",
    "dissipation_matrix", "oscillator_propagator",
    # angular
    "pattern", "reduced_density", "excitation_spectrum_density",
    # quadrature + oracle
    "QuadratureSpec", "QuadratureError", "integrate", "panels_for_oscillation",
    "ConsistencyReport", "momentum_integral_kernel", "angular_total",
    "static_decay_quadrature", "verify_all", "ALL_CHANNELS",
    # trajectory
    "MonochromaticMotion", "SampledTrajectory", "TrajectorySpectrum",
    "PerturbativeAmplitudeWarning", "spectrum_of_monochromatic",
    "spectrum_of_sampled", "vacuum_decay_probability",
    "decay_line_contributions", "excitation_rate_monochromatic",
    "sampled_trajectory_from_csv", "monochromatic_from_json",
    # spontaneous
    "LineOrigin", "EmissionLine", "EmissionSpectrum", "static_rate",
    "sideband_rates", "emission_spectrum", "angular_decay_density",
    "decay_continuum",
]

"""Domain types shared by every module: atom, mirror and motion descriptors.

Natural units (hbar = c = 1) throughout: frequencies, wavenumbers and inverse
lengths share one unit, and the coupling g, mass m, distance a are raw numbers.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


class BoundaryCondition(enum.Enum):
    """Perfect-mirror idealization imposed on the field at the plane."""

    DIRICHLET = "dirichlet"
    NEUMANN = "neumann"


class MotionAxis(enum.Enum):
    """Direction of the center-of-mass displacement relative to the mirror.

    PARALLEL means motion in the mirror plane (conventionally along the
    azimuth phi = 0 axis); PERPENDICULAR means motion along the mirror normal.
    """

    PARALLEL = "parallel"
    PERPENDICULAR = "perpendicular"


def parse_bc(name: str) -> BoundaryCondition:
    """Parse 'dirichlet'/'neumann' (or their initials) case-insensitively."""
    key = name.strip().lower()
    for bc in BoundaryCondition:
        if key in (bc.value, bc.value[0]):
            return bc
    raise ValueError(f"unknown boundary condition {name!r}")


def parse_axis(name: str) -> MotionAxis:
    """Parse 'parallel'/'perpendicular' or the short forms 'par'/'perp'."""
    key = name.strip().lower()
    for axis in MotionAxis:
        if key in (axis.value, axis.value[:3], axis.value[:4]):
            return axis
    raise ValueError(f"unknown motion axis {name!r}")


@dataclass(frozen=True)
class AtomParams:
    """Internal oscillator of the atom: coupling g, mass m, frequency omega.

    g couples the internal coordinate to the field; g**2 >= 0 appears in every
    rate, so g only needs to be real.  m > 0 and omega > 0 strictly.
    """

    g: float = 1.0
    m: float = 1.0
    omega: float = 1.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.g):
            raise ValueError(f"coupling g must be finite, got {self.g}")
        if not (self.m > 0 and math.isfinite(self.m)):
            raise ValueError(f"mass m must be > 0, got {self.m}")
        if not (self.omega > 0 and math.isfinite(self.omega)):
            raise ValueError(f"frequency omega must be > 0, got {self.omega}")


@dataclass(frozen=True)
class MirrorConfig:
    """Mirror boundary condition and mean atom-mirror distance a > 0."""

    bc: BoundaryCondition = BoundaryCondition.DIRICHLET
    a: float = 1.0

    def __post_init__(self) -> None:
        if not isinstance(self.bc, BoundaryCondition):
            raise TypeError(f"bc must be a BoundaryCondition, got {self.bc!r}")
        if not (self.a > 0 and math.isfinite(self.a)):
            raise ValueError(f"mirror distance a must be > 0, got {self.a}")


@dataclass(frozen=True)
class SphericalDirection:
    """Emission direction: theta in [0, pi] from the mirror normal through the
    atom, phi in [0, 2*pi) with the parallel-motion direction at phi = 0."""

    theta: float
    phi: float = 0.0

    def __post_init__(self) -> None:
        if not (0.0 <= self.theta <= math.pi):
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")
        if not (0.0 <= self.phi < 2.0 * math.pi):
            raise ValueError(f"phi must lie in [0, 2*pi), got {self.phi}")

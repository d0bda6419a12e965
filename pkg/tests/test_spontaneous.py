"""Spontaneous-emission observables: static rate, sidebands, angular profiles."""

import math
import warnings

import numpy as np
import pytest

from mirroratom import (AtomParams, BoundaryCondition, LineOrigin, MirrorConfig,
                        MotionAxis, MonochromaticMotion, QuadratureSpec,
                        SampledTrajectory, angular_decay_density, decay_continuum,
                        emission_spectrum, integrate, pattern,
                        panels_for_oscillation, sideband_kernel, sideband_rates,
                        spectrum_of_monochromatic, spectrum_of_sampled,
                        static_decay_quadrature, static_rate)
from mirroratom.spontaneous import EmissionLine, EmissionSpectrum

D, N = BoundaryCondition.DIRICHLET, BoundaryCondition.NEUMANN
PAR, PERP = MotionAxis.PARALLEL, MotionAxis.PERPENDICULAR

P = AtomParams()
MC = MirrorConfig()


def test_static_rate_frozen_values():
    assert static_rate(D, P, MC) == pytest.approx(0.27267564329357958, rel=1e-14)
    assert static_rate(N, P, MC) == pytest.approx(0.72732435670642042, rel=1e-14)


def test_static_rate_limits():
    # Dirichlet suppressed at the wall like (2 omega a)^2/6, Neumann doubled
    for a in (1e-8, 1e-6, 1e-4):
        mc = MirrorConfig(bc=D, a=a)
        expect = 0.5 * (2 * a) ** 2 / 6.0
        assert static_rate(D, P, mc) == pytest.approx(expect, rel=1e-6)
        assert static_rate(N, P, MirrorConfig(bc=N, a=a)) == pytest.approx(
            1.0, rel=1e-8)
    # far away both converge on the free-space value g^2/(2m)
    far = MirrorConfig(a=1e6)
    assert static_rate(D, P, far) == pytest.approx(0.5, rel=1e-5)
    assert static_rate(N, P, far) == pytest.approx(0.5, rel=1e-5)


def test_static_rate_duality():
    # sin^2 + cos^2 collapse under the angular integral: rate_D + rate_N = g^2/m
    for a in np.logspace(-2, 2, 25):
        mc_d = MirrorConfig(bc=D, a=float(a))
        mc_n = MirrorConfig(bc=N, a=float(a))
        assert static_rate(D, P, mc_d) + static_rate(N, P, mc_n) == pytest.approx(
            P.g**2 / P.m, rel=1e-10)


def test_static_rate_matches_quadrature():
    for bc in (D, N):
        for a in (0.01, 0.5, 1.0, 30.0):
            mc = MirrorConfig(bc=bc, a=a)
            assert static_rate(bc, P, mc) == pytest.approx(
                static_decay_quadrature(bc, P, mc), rel=1e-8)


def test_static_rate_independent_of_motion():
    # no epsilon or omega_cm anywhere in the static closed form
    assert static_rate(D, P, MC) == static_rate(D, P, MC)
    r = static_rate(D, AtomParams(g=2.0, m=4.0), MC)
    assert r == pytest.approx(4.0 / 8.0 * (1 - math.sin(2) / 2), rel=1e-12)


def test_sideband_line_bookkeeping():
    # omega_cm < omega: two sidebands symmetric about the static line
    mm = MonochromaticMotion(axis=PAR, epsilon=0.01, omega_cm=0.5, window_t=1.0)
    lines = sideband_rates(D, mm, P, MC)
    assert [ln.origin for ln in lines] == [LineOrigin.SIDEBAND_MINUS,
                                           LineOrigin.SIDEBAND_PLUS]
    assert [ln.omega for ln in lines] == [0.5, 1.5]
    assert lines[0].omega + lines[1].omega == pytest.approx(2 * P.omega)

    # omega_cm > omega: the minus line would sit at negative energy: dropped
    fast = MonochromaticMotion(axis=PAR, epsilon=0.01, omega_cm=3.0, window_t=1.0)
    fast_lines = sideband_rates(D, fast, P, MC)
    assert [ln.origin for ln in fast_lines] == [LineOrigin.SIDEBAND_PLUS]
    assert fast_lines[0].omega == pytest.approx(4.0)

    # omega_cm = omega: the would-be zero-energy line is omitted
    edge = MonochromaticMotion(axis=PAR, epsilon=0.01, omega_cm=1.0, window_t=1.0)
    assert [ln.origin for ln in sideband_rates(D, edge, P, MC)] == [
        LineOrigin.SIDEBAND_PLUS]

    # epsilon = 0: no sidebands at all
    still = MonochromaticMotion(axis=PAR, epsilon=0.0, omega_cm=0.5, window_t=1.0)
    assert sideband_rates(D, still, P, MC) == []


def test_sideband_rates_values_and_scaling():
    mm = MonochromaticMotion(axis=PERP, epsilon=0.02, omega_cm=0.5, window_t=1.0)
    lines = sideband_rates(N, mm, P, MC)
    for ln in lines:
        expect = mm.epsilon**2 / 4.0 * sideband_kernel(N, PERP, ln.omega, P, MC)
        assert ln.rate == pytest.approx(expect, rel=1e-14)
    doubled = sideband_rates(
        N, MonochromaticMotion(axis=PERP, epsilon=0.04, omega_cm=0.5,
                               window_t=1.0), P, MC)
    for ln2, ln in zip(doubled, lines):
        assert ln2.rate == pytest.approx(4.0 * ln.rate, rel=1e-14)


def test_emission_spectrum_assembly():
    # eps = 0: a single static line
    still = MonochromaticMotion(axis=PAR, epsilon=0.0, omega_cm=0.5, window_t=1.0)
    spec = emission_spectrum(D, still, P, MC)
    assert [ln.origin for ln in spec.lines] == [LineOrigin.STATIC]
    assert spec.total_rate == pytest.approx(static_rate(D, P, MC), rel=1e-14)

    # three lines at {0.5, 1, 1.5} for omega_cm = omega/2
    mm = MonochromaticMotion(axis=PAR, epsilon=0.01, omega_cm=0.5, window_t=1.0)
    spec3 = emission_spectrum(D, mm, P, MC)
    assert [ln.omega for ln in spec3.lines] == pytest.approx([0.5, 1.0, 1.5])
    assert [ln.origin for ln in spec3.lines] == [
        LineOrigin.SIDEBAND_MINUS, LineOrigin.STATIC, LineOrigin.SIDEBAND_PLUS]
    assert spec3.total_rate == pytest.approx(sum(l.rate for l in spec3.lines))

    # two lines when omega_cm > omega
    fast = MonochromaticMotion(axis=PAR, epsilon=0.01, omega_cm=3.0, window_t=1.0)
    assert len(emission_spectrum(D, fast, P, MC).lines) == 2

    # Dirichlet vs Neumann differ in both the static weight and sidebands
    spec_n = emission_spectrum(N, mm, P, MC)
    assert spec_n.lines[1].rate != spec3.lines[1].rate
    assert spec_n.lines[0].rate != spec3.lines[0].rate


def test_emission_line_validation():
    with pytest.raises(ValueError):
        EmissionLine(omega=0.0, rate=1.0, origin=LineOrigin.STATIC)
    with pytest.raises(ValueError):
        EmissionLine(omega=1.0, rate=-1.0, origin=LineOrigin.STATIC)
    static = EmissionLine(omega=1.0, rate=0.1, origin=LineOrigin.STATIC)
    with pytest.raises(ValueError):
        EmissionSpectrum(lines=(static, static))


def test_angular_decay_density_static_term():
    mm = MonochromaticMotion(axis=PAR, epsilon=0.0, omega_cm=0.5, window_t=1.0)
    # Dirichlet static profile dies uniformly as omega*a -> 0
    tiny = MirrorConfig(bc=D, a=1e-9)
    for th in (0.3, 1.0, 2.2):
        assert angular_decay_density(D, PAR, P.omega, th, 0.0, mm, P, tiny) < 1e-17
    # off every line: density is zero
    assert angular_decay_density(D, PAR, 0.77, 1.0, 0.0, mm, P, MC) == 0.0
    with pytest.raises(ValueError):
        angular_decay_density(D, PAR, 0.0, 1.0, 0.0, mm, P, MC)


def test_angular_decay_density_motional_shape():
    mm = MonochromaticMotion(axis=PERP, epsilon=0.01, omega_cm=0.5, window_t=1.0)
    k = P.omega + mm.omega_cm
    thetas = np.linspace(0.0, math.pi, 91)
    vals = angular_decay_density(N, PERP, k, thetas, 0.0, mm, P, MC)
    shape = np.cos(thetas) ** 2 * np.sin(k * MC.a * np.cos(thetas)) ** 2
    keep = shape > 1e-6
    recon = vals[keep] / shape[keep]
    assert np.ptp(recon) <= 1e-10 * np.max(recon)


@pytest.mark.parametrize("bc,axis", [(D, PAR), (D, PERP), (N, PAR), (N, PERP)])
def test_angular_decay_density_integrates_to_line_rates(bc, axis):
    mm = MonochromaticMotion(axis=axis, epsilon=0.01, omega_cm=0.6, window_t=1.0)
    spec = emission_spectrum(bc, mm, P, MC)
    q = QuadratureSpec()
    for line in spec.lines:
        def polar(th, k=line.omega):
            return angular_decay_density(bc, axis, k, th, 0.0, mm, P, MC) * np.sin(th)

        polar_part = integrate(polar, 0.0, math.pi, q,
                               initial_panels=panels_for_oscillation(line.omega * MC.a))
        if line.origin is LineOrigin.STATIC or axis is MotionAxis.PERPENDICULAR:
            total = polar_part * 2.0 * math.pi
        else:
            total = polar_part * math.pi  # cos^2(phi) integrates to pi
        assert total == pytest.approx(line.rate, rel=1e-8)


def test_angular_decay_density_coincident_lines_sum():
    # when a sideband lands exactly on the static line the profiles add
    mm_resonant = MonochromaticMotion(axis=PAR, epsilon=0.01, omega_cm=2 * P.omega,
                                      window_t=1.0)
    # plus line at omega + 2 omega = 3, static at omega: no overlap here, so
    # instead make omega_cm tiny enough that omega + omega_cm rounds within
    # the match tolerance
    mm_tiny = MonochromaticMotion(axis=PAR, epsilon=0.01, omega_cm=1e-12,
                                  window_t=1.0)
    th = 1.0
    combined = angular_decay_density(D, PAR, P.omega, th, 0.0, mm_tiny, P, MC)
    static_only = angular_decay_density(D, PAR, P.omega, th, 0.0, mm_resonant, P, MC)
    assert combined > static_only


def test_decay_continuum_matches_line_rates():
    # an on-grid sampled cosine concentrates the continuum on the sideband
    # energies; its integral reproduces the line rates
    eps, wcm = 0.01, 0.5
    period = 2 * math.pi / wcm
    dt = period / 64
    n = int(round(100 * period / dt))
    t = np.arange(n) * dt
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        st = SampledTrajectory(axis=PAR, samples=eps * np.cos(wcm * t), dt=dt)
    ts = spectrum_of_sampled(st)
    w, density = decay_continuum(D, ts, P, MC)
    dnu = 2 * math.pi / ts.window_t
    total = float(np.sum(density)) * dnu
    mm = MonochromaticMotion(axis=PAR, epsilon=eps, omega_cm=wcm, window_t=1.0)
    expect = sum(ln.rate for ln in sideband_rates(D, mm, P, MC))
    assert total == pytest.approx(expect, rel=1e-10)
    assert np.all(w > 0.0)
    with pytest.raises(ValueError):
        decay_continuum(D, spectrum_of_monochromatic(mm), P, MC)


def test_rates_are_nonnegative_and_linear_in_time():
    mm = MonochromaticMotion(axis=PAR, epsilon=0.01, omega_cm=0.5, window_t=5.0)
    spec = emission_spectrum(D, mm, P, MC)
    for ln in spec.lines:
        assert ln.rate >= 0.0
    # probability over a window is rate * T by construction
    assert spec.total_rate * 7.0 == pytest.approx(7.0 * spec.total_rate)

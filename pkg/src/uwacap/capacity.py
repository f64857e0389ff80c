"""Capacity sandwich for generalized-Gaussian-noise channels.

The channel capacity is squeezed between the equal-variance AWGN capacity
and that capacity plus a shape-only gap

    gap(beta) = 0.5 * log(beta**2 * pi * e**(1 - 2/beta) * Gamma(3/beta)
                          / (2 * Gamma(1/beta)**3)),

which vanishes exactly at beta = 2. Ergodic quantities average the
conditional capacity over an alpha-mu fading gain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import fading as _fading
from . import gg_noise as _gg
from .numerics import DEFAULT_QUADRATURE, DomainError, integrate, log_gamma, to_units


def gap(beta, units="bits"):
    """The shape-only capacity gap; >= 0 everywhere, zero only at beta = 2."""
    if not (np.isscalar(beta) and math.isfinite(float(beta)) and beta > 0):
        raise DomainError("beta must be a positive finite real")
    b = float(beta)
    nats = 0.5 * (
        2.0 * math.log(b)
        + math.log(math.pi)
        + (1.0 - 2.0 / b)
        + log_gamma(3.0 / b)
        - math.log(2.0)
        - 3.0 * log_gamma(1.0 / b)
    )
    return to_units(nats, units)


def awgn_capacity(snr, units="bits"):
    """0.5 * log(1 + snr) for a linear power ratio snr >= 0."""
    if not (np.isscalar(snr) and math.isfinite(float(snr)) and snr >= 0):
        raise DomainError("snr must be a nonnegative finite linear power ratio")
    return to_units(0.5 * math.log1p(snr), units)


@dataclass(frozen=True)
class CapacityBounds:
    """A (lower, upper) rate pair; upper - lower is the generating law's gap."""

    lower: float
    upper: float
    units: str = "bits"

    def __post_init__(self):
        if not self.lower <= self.upper:
            raise DomainError("CapacityBounds requires lower <= upper")
        if self.units not in ("bits", "nats"):
            raise DomainError("units must be 'bits' or 'nats'")

    @property
    def width(self):
        return self.upper - self.lower


@dataclass(frozen=True)
class ChannelConfig:
    """Signal power P together with the additive GG noise law."""

    signal_power: float
    noise: _gg.GGNoise

    def __post_init__(self):
        if not (np.isscalar(self.signal_power) and math.isfinite(float(self.signal_power)) and self.signal_power >= 0):
            raise DomainError("signal_power must be a nonnegative finite real")

    @property
    def snr(self):
        return self.signal_power / _gg.variance(self.noise)


def awggn_bounds(config, units="bits"):
    """Capacity sandwich at SNR = P / noise variance."""
    lower = awgn_capacity(config.snr, units)
    return CapacityBounds(lower, lower + gap(config.noise.beta, units), units)


def conditional_bounds(config, h, units="bits"):
    """Sandwich conditioned on a fading gain h: P is replaced by P*h**2."""
    if not (np.isscalar(h) and math.isfinite(float(h)) and h >= 0):
        raise DomainError("channel gain h must be a nonnegative finite real")
    lower = awgn_capacity(config.snr * h * h, units)
    return CapacityBounds(lower, lower + gap(config.noise.beta, units), units)


def ergodic_awgn_capacity(snr_avg, fading, spec=DEFAULT_QUADRATURE, units="bits"):
    """E_h{0.5 * log(1 + snr * h**2)} by adaptive quadrature against the fading pdf.

    ``snr_avg`` is the average received SNR when the law carries unit average
    power gain (E{h**2} = 1); with an unnormalized law it is the raw P/sigma**2.
    """
    if not (np.isscalar(snr_avg) and math.isfinite(float(snr_avg)) and snr_avg >= 0):
        raise DomainError("snr_avg must be a nonnegative finite linear power ratio")
    if snr_avg == 0:
        return 0.0
    rho = float(snr_avg)
    am1 = fading.alpha * fading.mu - 1.0
    c0 = fading.log_norm
    mu, alpha, h_root = fading.mu, fading.alpha, fading.h_root

    def integrand(h):
        if h <= 0.0:
            return 0.0
        lp = c0 + am1 * math.log(h) - mu * (h / h_root) ** alpha
        return 0.5 * math.log1p(rho * h * h) * math.exp(lp)

    nats = integrate(integrand, 0.0, math.inf, spec)
    return to_units(nats, units)


def ergodic_bounds(snr_avg, fading, beta, spec=DEFAULT_QUADRATURE, units="bits"):
    """Ergodic sandwich: the gap is constant in h, so it commutes with E_h."""
    lower = ergodic_awgn_capacity(snr_avg, fading, spec, units)
    return CapacityBounds(lower, lower + gap(beta, units), units)

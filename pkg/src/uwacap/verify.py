"""Empirical machinery that squeezes the analytic bounds.

Numeric density grids, Monte-Carlo entropy, the Gaussian-input mutual
information computed by density convolution, and the sphere-packing count
ratio. Everything here is an independent route used to check the closed
forms in the other modules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as _special

from . import gg_noise as _gg
from .capacity import awggn_bounds, gap
from .numerics import DomainError, QuadratureSpec, _quad, to_units


@dataclass(frozen=True)
class DensityGrid:
    """A density tabulated on strictly increasing abscissae.

    ``truncation_mass`` is the probability left outside the grid; the
    trapezoidal mass of the tabulated values must land in
    [1 - 2*truncation_mass, 1].
    """

    points: np.ndarray
    values: np.ndarray
    truncation_mass: float

    def __post_init__(self):
        points = np.asarray(self.points, dtype=float)
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "values", values)
        if points.ndim != 1 or points.shape != values.shape or len(points) < 2:
            raise DomainError("points and values must be matching 1-d arrays")
        if not np.all(np.diff(points) > 0):
            raise DomainError("grid points must be strictly increasing")
        if np.any(values < 0) or not np.all(np.isfinite(values)):
            raise DomainError("density values must be finite and >= 0")
        if not 0 < self.truncation_mass < 1:
            raise DomainError("truncation_mass must lie in (0, 1)")
        mass = self.mass
        if not (1.0 - 2.0 * self.truncation_mass <= mass <= 1.0 + 1e-12):
            raise DomainError(
                "grid mass %.17g outside [1 - 2*truncation_mass, 1]" % mass
            )

    @property
    def mass(self):
        return float(np.trapezoid(self.values, self.points))


def grid_entropy(grid):
    """-integral f*log(f) by composite trapezoidal quadrature, 0*log(0) := 0."""
    f = grid.values
    integrand = np.zeros_like(f)
    positive = f > 0
    integrand[positive] = -f[positive] * np.log(f[positive])
    return float(np.trapezoid(integrand, grid.points))


def gg_density_grid(law, truncation_mass=1e-8, points_per_side=200_000, cluster_power=4.0):
    """Tabulate a GG density on a grid clustered around its mean.

    The power-law clustering resolves the cusp at the mean for beta < 2
    (the density's derivative is singular there), which a uniform grid
    cannot integrate to the mass tolerance. Extent is set by inverting the
    tail mass, not by a fixed multiple of the standard deviation.
    """
    radius = _gg.tail_radius(law, truncation_mass)
    u = np.linspace(0.0, 1.0, points_per_side + 1)
    offsets = radius * u**cluster_power
    points = np.concatenate([law.mean - offsets[:0:-1], law.mean + offsets])
    return DensityGrid(points, _gg.pdf(law, points), truncation_mass)


def mc_entropy(law, config):
    """Resubstitution entropy estimate -(1/n) sum log pdf(N_i) with its standard error."""
    if config.samples < 1_000:
        raise DomainError("mc_entropy needs at least 1000 samples")
    draws = _gg.sample(law, config.seed, config.samples, chunks=config.chunks, threads=config.threads)
    log_p = _gg.log_pdf(law, draws)
    estimate = -float(np.mean(log_p))
    std_error = float(np.std(log_p, ddof=1)) / math.sqrt(config.samples)
    return estimate, std_error


_POINTWISE_QUAD = QuadratureSpec(relative_tolerance=1e-10, absolute_tolerance=1e-14, max_subdivisions=200)


def _gaussian_tail_radius(var, mass):
    return math.sqrt(2.0 * var) * float(_special.erfcinv(mass))


def _convolved_values(law, power, points, noise_radius, input_radius, spec):
    log_gauss_norm = -0.5 * math.log(2.0 * math.pi * power)
    log_noise_norm = law.log_norm
    beta, scale, mean = law.beta, law.scale, law.mean
    n_lo, n_hi = mean - noise_radius, mean + noise_radius

    values = np.empty(len(points))
    for i, y in enumerate(points):
        lo = max(n_lo, y - input_radius)
        hi = min(n_hi, y + input_radius)
        if not lo < hi:
            values[i] = 0.0
            continue

        def integrand(n, y=y):
            z = abs(n - mean) / scale
            x = y - n
            return math.exp(
                log_noise_norm - z**beta + log_gauss_norm - 0.5 * x * x / power
            )

        breaks = [mean] if lo < mean < hi else None
        values[i] = max(0.0, _quad(integrand, lo, hi, spec, points=breaks))
    return values


def output_density(config, truncation_mass=1e-10, grid_points=2001, spec=_POINTWISE_QUAD,
                   max_grid_points=20_000):
    """Density of Y = X + N with X ~ Normal(0, P), by per-point quadrature.

    The grid extends until each factor density's tail mass is below half of
    ``truncation_mass``. When the Gaussian smoothing scale sqrt(P) is too
    narrow for the grid step to resolve the noise peak, the grid is doubled;
    if the trapezoidal error is still resolution-limited at the cap, the
    returned grid declares the coarser truncation mass it can actually
    certify (and its tails are cut to match), rather than overstating the
    accuracy. Pointwise values are quadrature-accurate either way.
    """
    if config.signal_power <= 0:
        raise DomainError("output_density requires signal_power > 0")
    law = config.noise
    power = float(config.signal_power)

    # integration radii stay tied to the requested mass so each value keeps
    # its pointwise accuracy even when the declared mass has to be coarser
    noise_radius = _gg.tail_radius(law, 0.5 * truncation_mass)
    input_radius = _gaussian_tail_radius(power, 0.5 * truncation_mass)

    count = grid_points
    declared = truncation_mass
    for _ in range(24):
        half_width = _gg.tail_radius(law, 0.5 * declared) + _gaussian_tail_radius(
            power, 0.5 * declared
        )
        points = law.mean + np.linspace(-half_width, half_width, count)
        values = _convolved_values(law, power, points, noise_radius, input_radius, spec)
        mass = float(np.trapezoid(values, points))
        if 1.0 - 2.0 * declared <= mass <= 1.0 + 1e-12:
            return DensityGrid(points, values, declared)
        if count < max_grid_points:
            count = 2 * count - 1
        else:
            # overshoot above the truncated mass 1 - declared; absorb it by
            # honestly declaring (and cutting) a matching truncation mass
            overshoot = mass - (1.0 - declared)
            declared = max(2.0 * declared, 4.0 * abs(overshoot))
    return DensityGrid(points, values, declared)


def gaussian_input_mi(config, units="bits", truncation_mass=1e-10, grid_points=2001):
    """I(X;Y) = h(Y) - h(N) for a Gaussian input of power P.

    Deterministic (convolution + quadrature); must land inside the
    awggn_bounds sandwich for the same config.
    """
    grid = output_density(config, truncation_mass=truncation_mass, grid_points=grid_points)
    nats = grid_entropy(grid) - _gg.entropy(config.noise, "nats")
    return to_units(nats, units)


def sphere_packing_ratio(beta, dimensions):
    """Packing-count factor 2**(K*gap(beta)) for K-dimensional codewords.

    Equals exp(K * (h(N_gaussian) - h(N_gg))) at equal noise variance: GG
    noise spheres are smaller, so more of them fit in the output sphere.
    """
    if int(dimensions) != dimensions or dimensions < 1:
        raise DomainError("dimensions must be a positive integer")
    return math.exp(dimensions * gap(beta, "nats"))

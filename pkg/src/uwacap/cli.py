"""Command-line surface: single-value queries, sweeps as CSV, verification.

Subcommands: gap, capacity, ergodic, secrecy, sample, verify. SNRs are
accepted in dB (matching the figures) and converted once at this boundary;
all CSV values carry 9 significant digits with LF line endings.

Exit codes: 0 success, 1 usage error, 2 numeric non-convergence,
3 verification failure.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import fading as _fading
from . import gg_noise as _gg
from . import verify as _verify
from .capacity import (
    ChannelConfig,
    awggn_bounds,
    ergodic_bounds,
    gap,
)
from .config import SimConfig
from .numerics import DomainError, QuadratureError, QuadratureSpec
from .secrecy import (
    SecrecyScenario,
    secrecy_positive,
    secrecy_rate_awggn,
    secrecy_threshold,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fmt(x):
    return "%.9g" % x


def _db_to_linear(db):
    return 10.0 ** (db / 10.0)


def _parse_range(text):
    """Parse 'lo:hi:step' (or a single value) into an ascending value list."""
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return [float(parts[0])]
        if len(parts) == 3:
            lo, hi, step = (float(p) for p in parts)
        else:
            raise ValueError
    except ValueError:
        raise UsageError("range must be 'lo:hi:step' or a single number, got %r" % text)
    if step == 0 or not all(map(math.isfinite, (lo, hi, step))):
        raise UsageError("range step must be finite and nonzero")
    if (hi - lo) * step < 0:
        lo, hi = hi, lo
    lo, hi, step = min(lo, hi), max(lo, hi), abs(step)
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [lo + k * step for k in range(count)]


def _emit(lines, out):
    text = "\n".join(lines) + "\n"
    if out in (None, "-", "stdout"):
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def _quad_spec(args):
    return QuadratureSpec(relative_tolerance=args.quad_rtol)


def cmd_gap(args):
    betas = sorted(args.betas)
    if not betas:
        raise UsageError("gap requires at least one beta value")
    if any(b <= 0 for b in betas):
        raise UsageError("all beta values must be > 0")
    lines = ["beta,gap_bits,gap_nats"]
    for b in betas:
        lines.append(",".join([_fmt(b), _fmt(gap(b, "bits")), _fmt(gap(b, "nats"))]))
    _emit(lines, args.out)
    return 0


def cmd_capacity(args):
    if args.beta <= 0:
        raise UsageError("--beta must be > 0")
    noise = _gg.with_variance(args.beta, 1.0)
    lines = ["snr_db,lower,upper"]
    for snr_db in _parse_range(args.snr_db):
        config = ChannelConfig(_db_to_linear(snr_db), noise)
        bounds = awggn_bounds(config, args.units)
        lines.append(",".join([_fmt(snr_db), _fmt(bounds.lower), _fmt(bounds.upper)]))
    _emit(lines, args.out)
    return 0


def cmd_ergodic(args):
    if args.beta <= 0 or args.alpha <= 0 or args.mu <= 0:
        raise UsageError("--beta, --alpha and --mu must be > 0")
    law = _fading.unit_power(args.alpha, args.mu)
    spec = _quad_spec(args)
    lines = ["snr_db,lower,upper"]
    for snr_db in _parse_range(args.snr_db):
        bounds = ergodic_bounds(_db_to_linear(snr_db), law, args.beta, spec, args.units)
        lines.append(",".join([_fmt(snr_db), _fmt(bounds.lower), _fmt(bounds.upper)]))
    _emit(lines, args.out)
    return 0


def cmd_secrecy(args):
    if args.beta_sd <= 0 or args.beta_se <= 0:
        raise UsageError("--beta-sd and --beta-se must be > 0")
    snr_se = _db_to_linear(args.snr_se_db)
    condition = "printed" if args.as_printed else "derived"
    threshold = secrecy_threshold(args.beta_sd, args.beta_se, snr_se)
    threshold_db = 10.0 * math.log10(threshold) if threshold > 0 else -math.inf
    sys.stderr.write(
        "# secrecy threshold: snr_sd = %s (%s dB)\n" % (_fmt(threshold), _fmt(threshold_db))
    )
    lines = ["snr_sd_db,secrecy_rate,positive"]
    for snr_sd_db in _parse_range(args.snr_sd_db):
        scenario = SecrecyScenario(
            snr_sd=_db_to_linear(snr_sd_db),
            snr_se=snr_se,
            beta_sd=args.beta_sd,
            beta_se=args.beta_se,
        )
        rate = secrecy_rate_awggn(scenario, args.units)
        positive = secrecy_positive(scenario, condition)
        lines.append(",".join([_fmt(snr_sd_db), _fmt(rate), "1" if positive else "0"]))
    _emit(lines, args.out)
    return 0


def cmd_sample(args):
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    if args.law == "gg":
        if args.beta <= 0 or args.scale <= 0:
            raise UsageError("--beta and --scale must be > 0")
        law = _gg.GGNoise(beta=args.beta, scale=args.scale, mean=args.mean)
        draws = _gg.sample(law, args.seed, args.count, chunks=args.chunks, threads=args.threads)
    else:
        if args.alpha <= 0 or args.mu <= 0 or args.h_root <= 0:
            raise UsageError("--alpha, --mu and --h-root must be > 0")
        law = _fading.AlphaMuFading(alpha=args.alpha, mu=args.mu, h_root=args.h_root)
        draws = _fading.sample(law, args.seed, args.count, chunks=args.chunks, threads=args.threads)
    lines = ["value"] + [_fmt(v) for v in draws]
    _emit(lines, args.out)
    return 0


def _verify_checks(config, quick):
    """Yield (name, measured, tolerance, passed) rows for the invariant suite."""
    from .numerics import integrate

    betas = (1.0, 2.0) if quick else (0.5, 0.8, 1.0, 1.5, 2.0, 3.0)
    snrs = (1.0,) if quick else (0.1, 1.0, 10.0, 100.0)
    rows = []

    for beta in betas:
        law = _gg.with_variance(beta, 1.0)
        mass = integrate(lambda n: _gg.pdf(law, n), -math.inf, math.inf, config.quadrature)
        rows.append(("pdf_mass beta=%g" % beta, abs(mass - 1.0), 1e-8, abs(mass - 1.0) <= 1e-8))

    for beta in betas:
        law = _gg.with_variance(beta, 1.0)
        estimate, stderr = _verify.mc_entropy(law, config)
        z = abs(estimate - _gg.entropy(law, "nats")) / stderr
        rows.append(("mc_entropy beta=%g (|z|)" % beta, z, 4.0, z <= 4.0))

    points = 20_000 if quick else 200_000
    grid_mass = 1e-7 if quick else 1e-8
    gauss_grid = _verify.gg_density_grid(
        _gg.with_variance(2.0, 1.0), truncation_mass=grid_mass, points_per_side=points
    )
    gauss_entropy = _verify.grid_entropy(gauss_grid)
    for beta in betas:
        grid = _verify.gg_density_grid(
            _gg.with_variance(beta, 1.0), truncation_mass=grid_mass, points_per_side=points
        )
        diff = gauss_entropy - _verify.grid_entropy(grid)
        err = abs(diff - gap(beta, "nats"))
        tol = 1e-5 if quick else 1e-6
        rows.append(("entropy_gap_identity beta=%g" % beta, err, tol, err <= tol))
        mass_err = abs(grid.mass - 1.0)
        bound = 2.0 * grid.truncation_mass
        rows.append(("grid_mass beta=%g" % beta, mass_err, bound, mass_err <= bound))

    mi_points = 801 if quick else 2001
    for beta in betas:
        for snr in snrs:
            cfg = ChannelConfig(snr, _gg.with_variance(beta, 1.0))
            mi = _verify.gaussian_input_mi(cfg, "bits", grid_points=mi_points)
            bounds = awggn_bounds(cfg, "bits")
            inside = bounds.lower - 1e-4 <= mi <= bounds.upper + 1e-4
            slack = max(bounds.lower - mi, mi - bounds.upper, 0.0)
            rows.append(("mi_sandwich beta=%g snr=%g" % (beta, snr), slack, 1e-4, inside))
            grid = _verify.output_density(cfg, grid_points=mi_points)
            mass_err = abs(grid.mass - 1.0)
            bound = 2.0 * grid.truncation_mass
            rows.append(("output_mass beta=%g snr=%g" % (beta, snr), mass_err, bound, mass_err <= bound))
    return rows


def cmd_verify(args):
    config = SimConfig(
        seed=args.seed,
        samples=args.samples,
        chunks=args.chunks,
        quadrature=_quad_spec(args),
        units=args.units,
        threads=args.threads,
    )
    rows = _verify_checks(config, args.quick)
    width = max(len(r[0]) for r in rows)
    lines = []
    failures = 0
    for name, measured, tolerance, passed in rows:
        failures += 0 if passed else 1
        lines.append(
            "%-*s  measured=%-14s tolerance=%-12s %s"
            % (width, name, _fmt(measured), _fmt(tolerance), "PASS" if passed else "FAIL")
        )
    lines.append("verify: %d checks, %d failed" % (len(rows), failures))
    _emit(lines, args.out)
    return 3 if failures else 0


def build_parser():
    parser = _Parser(prog="uwacap", description=__doc__)
    parser.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    parser.add_argument("--samples", type=int, default=100_000, help="Monte-Carlo sample count")
    parser.add_argument("--chunks", type=int, default=8, help="sampling chunks (affects output)")
    parser.add_argument("--threads", type=int, default=1, help="worker threads (never affects output)")
    parser.add_argument("--units", choices=("bits", "nats"), default="bits")
    parser.add_argument("--out", default="stdout", help="output path or 'stdout'")
    parser.add_argument("--quad-rtol", type=float, default=1e-8, help="quadrature relative tolerance")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gap", help="capacity gap f(beta) per shape value")
    p.add_argument("betas", type=float, nargs="*", help="shape values")
    p.set_defaults(func=cmd_gap)

    p = sub.add_parser("capacity", help="AWGGN capacity sandwich over an SNR sweep")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--snr-db", required=True, help="'lo:hi:step' in dB")
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("ergodic", help="ergodic capacity sandwich under alpha-mu fading")
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--mu", type=float, default=1.0)
    p.add_argument("--snr-db", required=True, help="'lo:hi:step' in dB")
    p.set_defaults(func=cmd_ergodic)

    p = sub.add_parser("secrecy", help="secrecy rate versus destination SNR")
    p.add_argument("--beta-sd", type=float, required=True)
    p.add_argument("--beta-se", type=float, required=True)
    p.add_argument("--snr-se-db", type=float, required=True)
    p.add_argument("--snr-sd-db", required=True, help="'lo:hi:step' in dB")
    p.add_argument("--as-printed", action="store_true",
                   help="evaluate the positivity condition with the e**(1-1/beta) shape factor")
    p.set_defaults(func=cmd_secrecy)

    p = sub.add_parser("sample", help="raw draws from either law")
    p.add_argument("--law", choices=("gg", "alpha-mu"), required=True)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--beta", type=float, default=2.0)
    p.add_argument("--scale", type=float, default=1.0)
    p.add_argument("--mean", type=float, default=0.0)
    p.add_argument("--alpha", type=float, default=2.0)
    p.add_argument("--mu", type=float, default=1.0)
    p.add_argument("--h-root", type=float, default=1.0)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="run the empirical invariant suite")
    p.add_argument("--quick", action="store_true", help="reduced grids for smoke testing")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write("usage error: %s\n" % exc)
        return 1
    except DomainError as exc:
        sys.stderr.write("usage error: %s\n" % exc)
        return 1
    except QuadratureError as exc:
        sys.stderr.write(
            "quadrature failure: %s (estimate=%r, error=%r)\n"
            % (exc, exc.estimate, exc.error_indicator)
        )
        return 2


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()

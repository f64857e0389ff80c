"""Run configuration for the stochastic and numeric estimators."""

from __future__ import annotations

from dataclasses import dataclass, field

from .numerics import DEFAULT_QUADRATURE, DomainError, QuadratureSpec


@dataclass(frozen=True)
class SimConfig:
    """Seed, sample budget and tolerances; identical configs give identical output."""

    seed: int = 0
    samples: int = 100_000
    chunks: int = 8
    quadrature: QuadratureSpec = field(default_factory=lambda: DEFAULT_QUADRATURE)
    units: str = "bits"
    threads: int = 1

    def __post_init__(self):
        if int(self.seed) != self.seed or not 0 <= self.seed < 2**64:
            raise DomainError("seed must be a 64-bit unsigned integer")
        if int(self.samples) != self.samples or self.samples < 1:
            raise DomainError("samples must be a positive integer")
        if int(self.chunks) != self.chunks or self.chunks < 1:
            raise DomainError("chunks must be a positive integer")
        if self.units not in ("bits", "nats"):
            raise DomainError("units must be 'bits' or 'nats'")
        if int(self.threads) != self.threads or self.threads < 1:
            raise DomainError("threads must be a positive integer")

"""Deterministic chunked sampling shared by the noise and fading laws.

Each chunk draws from an independent stream derived from (seed, chunk index),
so output depends only on (seed, count, chunks) and not on thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .numerics import DomainError


def chunk_rng(seed, index):
    """Independent generator for one chunk of a (seed, chunks) sampling plan."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def chunk_sizes(count, chunks):
    if int(count) != count or count < 1:
        raise DomainError("count must be a positive integer")
    if int(chunks) != chunks or chunks < 1:
        raise DomainError("chunks must be a positive integer")
    base, extra = divmod(int(count), int(chunks))
    return [base + (1 if i < extra else 0) for i in range(int(chunks))]


def chunked_draw(draw, seed, count, chunks=8, threads=1):
    """Concatenate per-chunk draws in chunk order.

    ``draw(rng, n)`` must return an array of n variates. Results are placed
    by chunk index, so any thread count yields identical output.
    """
    sizes = chunk_sizes(count, chunks)

    def one(i):
        return draw(chunk_rng(seed, i), sizes[i])

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(one, range(len(sizes))))
    else:
        parts = [one(i) for i in range(len(sizes))]
    return np.concatenate([p for p in parts if len(p)]) if sum(sizes) else np.empty(0)

"""Susceptible-infected Monte-Carlo simulation.

Synchronous dynamics: at each step every susceptible node runs one
independent Bernoulli(beta) trial per infected neighbor (at the start of the
step) and becomes infected if any trial fires.  Infection is permanent.

Randomness is counter-based: each run derives a 64-bit key from
(rng_seed, seed set, run index) and every trial hashes (key, step, source,
target).  Results are therefore bit-identical for any thread count or
backend, and trials are perfectly coupled across beta values, which makes
infection counts monotone in beta run by run.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from . import _kernels
from .graph import Graph


@dataclass(frozen=True)
class SiConfig:
    """Infection probability, horizon, repetition count and RNG seed."""

    beta: float
    t_max: int = 10
    runs: int = 100
    rng_seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise ValueError(f"beta must be in [0, 1], got {self.beta}")
        if self.t_max < 1:
            raise ValueError(f"t_max must be >= 1, got {self.t_max}")
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")


@dataclass(frozen=True, eq=False)
class SiOutcome:
    """Cumulative infected counts: one row per run, one column per step 0..T."""

    seeds: tuple[str, ...]
    config: SiConfig
    counts: np.ndarray  # int64, (runs, t_max + 1)

    @cached_property
    def n_of_t(self) -> np.ndarray:
        """Average infected count per step (exact integer sums, then divide)."""
        return self.counts.sum(axis=0, dtype=np.int64) / self.counts.shape[0]

    @cached_property
    def std_of_t(self) -> np.ndarray:
        return self.counts.std(axis=0)

    @property
    def final_counts(self) -> np.ndarray:
        return self.counts[:, -1]

    def to_csv(self, fp) -> None:
        cfg = self.config
        fp.write(
            f"# config: beta={cfg.beta!r} t_max={cfg.t_max} runs={cfg.runs} "
            f"rng_seed={cfg.rng_seed} seeds={','.join(self.seeds)}\n"
        )
        fp.write("t,N_t,stddev\n")
        for t, (mean, std) in enumerate(zip(self.n_of_t, self.std_of_t)):
            fp.write(f"{t},{float(mean)!r},{float(std)!r}\n")


def _run_keys(rng_seed: int, seed_indices: np.ndarray, runs: int) -> np.ndarray:
    """Per-run uint64 keys (as int64 bits) from (seed, seed set, run index)."""
    words = [int(seed_indices.size), *map(int, seed_indices)]
    base = _kernels.fold_key(rng_seed, words)
    keys = np.empty(runs, dtype=np.uint64)
    for r in range(runs):
        keys[r] = _kernels.fold_key(base, [r])
    return keys.view(np.int64)


def si_simulate(
    g: Graph, seeds: Iterable[str], cfg: SiConfig, threads: int = 1
) -> SiOutcome:
    """Run `cfg.runs` independent SI epidemics from the given seed nodes."""
    seed_labels = sorted({str(s) for s in seeds})
    if not seed_labels:
        raise ValueError("seed set must not be empty")
    seed_idx = np.array(
        sorted(g.index_of(s) for s in seed_labels), dtype=np.int32
    )
    keys = _run_keys(cfg.rng_seed, seed_idx, cfg.runs)
    if threads <= 1 or cfg.runs == 1:
        counts = _kernels.si_counts(
            g.indptr, g.indices, seed_idx, cfg.beta, cfg.t_max, keys
        )
    else:
        counts = np.empty((cfg.runs, cfg.t_max + 1), dtype=np.int64)
        step = -(-cfg.runs // threads)
        blocks = [(lo, min(lo + step, cfg.runs)) for lo in range(0, cfg.runs, step)]

        def work(block):
            lo, hi = block
            counts[lo:hi] = _kernels.si_counts(
                g.indptr, g.indices, seed_idx, cfg.beta, cfg.t_max, keys[lo:hi]
            )

        with ThreadPoolExecutor(max_workers=len(blocks)) as pool:
            list(pool.map(work, blocks))
    return SiOutcome(seeds=tuple(seed_labels), config=cfg, counts=counts)


def spreading_ability(
    g: Graph, node: str, cfg: SiConfig, threads: int = 1
) -> float:
    """Average infected count at the final step when seeding one node."""
    outcome = si_simulate(g, [node], cfg, threads=threads)
    return float(outcome.n_of_t[-1])

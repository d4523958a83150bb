"""Rank-correlation evaluation of centrality methods against SI spreading.

Two harnesses:

* a beta sweep correlating each method's scores with per-node spreading
  ability (average infected count after T steps, seeding one node) across a
  range of infection probabilities, and
* a top-k seeding comparison tracking the infection curve when each method's
  k best-ranked nodes start infected.

Spreading-ability ground truth is computed once per beta and shared across
methods; each (beta, node) simulation derives its own RNG stream, so adding
or removing methods never changes the ground truth.
"""

from __future__ import annotations

import struct
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import IO, Sequence

import numpy as np

from . import _kernels
from .centrality import CentralityScores, RadiusSpec, compute_scores
from .epidemic import SiConfig, si_simulate
from .graph import Graph, all_pairs_shortest_paths

DEFAULT_BETAS = tuple(k / 10.0 for k in range(1, 11))


def kendall_tau(x: Sequence[float], y: Sequence[float], variant: str = "a") -> float:
    """Pair-concordance correlation of two equal-length score vectors.

    Variant "a" (the default) counts ties as neither concordant nor
    discordant and divides by the total pair count n(n-1)/2.  Variant "b"
    divides by the geometric mean of the non-tied pair counts of each input
    (0/0 degenerates to 0).
    """
    xa = np.asarray(x, dtype=np.float64)
    ya = np.asarray(y, dtype=np.float64)
    if xa.ndim != 1 or ya.ndim != 1 or xa.size != ya.size:
        raise ValueError("inputs must be 1-D vectors of equal length")
    n = xa.size
    if n < 2:
        raise ValueError("need at least 2 observations")
    sx = np.sign(xa[:, None] - xa[None, :])
    sy = np.sign(ya[:, None] - ya[None, :])
    # both sign matrices are antisymmetric: summing over all ordered pairs
    # double-counts every unordered pair exactly once per direction
    prod_sum = float((sx * sy).sum())  # = 2 * (c+ minus c-)
    if variant == "a":
        return prod_sum / (n * (n - 1))
    if variant == "b":
        nontied_x = float(np.abs(sx).sum()) / 2.0
        nontied_y = float(np.abs(sy).sum()) / 2.0
        denom = np.sqrt(nontied_x * nontied_y)
        return (prod_sum / 2.0) / denom if denom > 0 else 0.0
    raise ValueError(f"variant must be 'a' or 'b', got {variant!r}")


@dataclass(frozen=True, eq=False)
class TauSweep:
    """Kendall tau of each method against spreading ability, per beta."""

    methods: tuple[str, ...]
    betas: tuple[float, ...]
    taus: np.ndarray  # (methods, betas)
    abilities: np.ndarray  # (betas, nodes) spreading-ability ground truth
    t_max: int
    runs: int
    rng_seed: int

    def to_csv(self, fp: IO[str]) -> None:
        fp.write(
            f"# config: T={self.t_max} K={self.runs} rng_seed={self.rng_seed}\n"
        )
        fp.write("method,beta,tau\n")
        for mi, method in enumerate(self.methods):
            for bi, beta in enumerate(self.betas):
                fp.write(f"{method},{beta!r},{float(self.taus[mi, bi])!r}\n")


@dataclass(frozen=True, eq=False)
class SpreadingCurveSet:
    """Average infection curves when each method's top-k nodes are seeded."""

    methods: tuple[str, ...]
    seed_sets: dict[str, tuple[str, ...]]
    curves: np.ndarray  # (methods, t_max + 1)
    beta: float
    t_max: int
    runs: int
    rng_seed: int

    def to_csv(self, fp: IO[str]) -> None:
        fp.write(
            f"# config: beta={self.beta!r} T={self.t_max} K={self.runs} "
            f"rng_seed={self.rng_seed}\n"
        )
        fp.write("method,t,N_t\n")
        for mi, method in enumerate(self.methods):
            for t in range(self.curves.shape[1]):
                fp.write(f"{method},{t},{float(self.curves[mi, t])!r}\n")


def _beta_bits(beta: float) -> int:
    return struct.unpack("<Q", struct.pack("<d", beta))[0]


def _ability_vector(
    g: Graph, beta: float, t_max: int, runs: int, rng_seed: int, threads: int
) -> np.ndarray:
    """Spreading ability of every node at one beta.

    Each node's simulation batch is seeded from (rng_seed, beta, node), so
    the vector does not depend on evaluation order or thread count.
    """
    n = g.node_count
    out = np.empty(n)
    bits = _beta_bits(beta)

    def work(i: int) -> None:
        node_seed = _kernels.fold_key(rng_seed, [bits, i])
        cfg = SiConfig(beta=beta, t_max=t_max, runs=runs, rng_seed=node_seed)
        outcome = si_simulate(g, [g.labels[i]], cfg)
        out[i] = outcome.n_of_t[-1]

    if threads <= 1:
        for i in range(n):
            work(i)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(work, range(n)))
    return out


def _method_scores(
    g: Graph,
    methods: Sequence[str],
    alpha: float,
    radius: RadiusSpec,
    threads: int,
) -> dict[str, CentralityScores]:
    d = all_pairs_shortest_paths(g, threads=threads)
    return {
        m: compute_scores(g, m, d=d, alpha=alpha, radius=radius, threads=threads)
        for m in methods
    }


def tau_vs_beta_sweep(
    g: Graph,
    methods: Sequence[str],
    betas: Sequence[float] = DEFAULT_BETAS,
    t_max: int = 10,
    runs: int = 100,
    rng_seed: int = 0,
    alpha: float = 1.0,
    radius: RadiusSpec = "default",
    variant: str = "a",
    threads: int = 1,
) -> TauSweep:
    """Correlate each method's ranking with SI spreading ability per beta."""
    betas = tuple(sorted(float(b) for b in betas))
    scores = _method_scores(g, methods, alpha, radius, threads)
    finite = {m: s.finite_scores() for m, s in scores.items()}
    abilities = np.empty((len(betas), g.node_count))
    taus = np.empty((len(methods), len(betas)))
    for bi, beta in enumerate(betas):
        abilities[bi] = _ability_vector(g, beta, t_max, runs, rng_seed, threads)
        for mi, m in enumerate(methods):
            taus[mi, bi] = kendall_tau(finite[m], abilities[bi], variant=variant)
    return TauSweep(
        methods=tuple(methods),
        betas=betas,
        taus=taus,
        abilities=abilities,
        t_max=t_max,
        runs=runs,
        rng_seed=rng_seed,
    )


def topk_spreading(
    g: Graph,
    methods: Sequence[str],
    k: int = 10,
    beta: float = 0.1,
    t_max: int = 25,
    runs: int = 100,
    rng_seed: int = 0,
    alpha: float = 1.0,
    radius: RadiusSpec = "default",
    threads: int = 1,
) -> SpreadingCurveSet:
    """Seed each method's top-k nodes and track the average infection curve."""
    if g.node_count < k:
        warnings.warn(
            f"graph has only {g.node_count} nodes; using all of them as seeds",
            RuntimeWarning,
            stacklevel=2,
        )
        k = g.node_count
    scores = _method_scores(g, methods, alpha, radius, threads)
    curves = np.empty((len(methods), t_max + 1))
    seed_sets: dict[str, tuple[str, ...]] = {}
    cfg = SiConfig(beta=beta, t_max=t_max, runs=runs, rng_seed=rng_seed)
    for mi, m in enumerate(methods):
        seed_sets[m] = scores[m].top(k)
        outcome = si_simulate(g, seed_sets[m], cfg, threads=threads)
        curves[mi] = outcome.n_of_t
    return SpreadingCurveSet(
        methods=tuple(methods),
        seed_sets=seed_sets,
        curves=curves,
        beta=beta,
        t_max=t_max,
        runs=runs,
        rng_seed=rng_seed,
    )

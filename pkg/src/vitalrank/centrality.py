"""Node-ranking methods.

Eight methods share one result type: plain degree, three gravity-style
interaction sums (bare, eigenvector-weighted, clustering-damped), shortest
path betweenness, iterative resource allocation, quasi-Laplacian energy
drop, and the efficiency-scaled gravity score that ranks a node by its
gravity interaction sum times how much deleting it hurts network efficiency.

Scores are float64 arrays aligned to the graph's dense node order; +inf is a
legal score (a node whose deletion removes every remaining edge).  Rankings
break ties deterministically: descending score, then descending secondary
key (gravity sum, where one applies), then ascending label.
"""

from __future__ import annotations

import csv
import json
import math
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import IO, Any

import numpy as np

from . import _kernels
from .efficiency import EfficiencyReport, efficiency_ratios
from .errors import ConvergenceError
from .graph import (
    DistanceMatrix,
    Graph,
    all_pairs_shortest_paths,
    connected_components,
    local_clustering_all,
    mean_shortest_path,
)

METHODS = ("degree", "g", "wg", "gg", "bc", "ira", "ql", "neg")

RadiusSpec = float | str | None


@dataclass(frozen=True, eq=False)
class CentralityScores:
    """Per-node scores for one method plus the induced deterministic ranking."""

    method: str
    params: dict[str, Any]
    labels: tuple[str, ...]
    scores: np.ndarray
    tiebreak: np.ndarray | None = field(default=None, repr=False)

    @cached_property
    def order(self) -> tuple[int, ...]:
        """Dense node indices sorted by descending score (ties: tiebreak, label)."""
        tb = self.tiebreak if self.tiebreak is not None else np.zeros(len(self.labels))
        return tuple(
            sorted(
                range(len(self.labels)),
                key=lambda i: (-self.scores[i], -tb[i], self.labels[i]),
            )
        )

    @cached_property
    def ranking(self) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in self.order)

    def top(self, k: int) -> tuple[str, ...]:
        return self.ranking[:k]

    def score_of(self, label: str) -> float:
        return float(self.scores[self.labels.index(label)])

    def finite_scores(self) -> np.ndarray:
        """Scores with +inf collapsed to distinct values above the finite max.

        The collapsed values follow the ranking order, so any rank statistic
        computed from the result matches the ranking exactly.
        """
        s = self.scores.astype(np.float64, copy=True)
        inf_idx = [i for i in self.order if math.isinf(s[i])]
        if inf_idx:
            finite = s[np.isfinite(s)]
            base = float(finite.max()) if finite.size else 0.0
            for pos, i in enumerate(inf_idx):
                s[i] = base + (len(inf_idx) - pos)
        return s

    def to_csv(self, fp: IO[str]) -> None:
        """Rows `node_label,score,rank` in rank order; +inf prints as `inf`."""
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(["node_label", "score", "rank"])
        for rank, i in enumerate(self.order, start=1):
            writer.writerow([self.labels[i], repr(float(self.scores[i])), rank])

    def to_json(self, fp: IO[str]) -> None:
        payload = {
            "method": self.method,
            "params": _jsonable(self.params),
            "nodes": [
                {
                    "label": self.labels[i],
                    "score": _jsonable(float(self.scores[i])),
                    "rank": rank,
                }
                for rank, i in enumerate(self.order, start=1)
            ],
        }
        json.dump(payload, fp, indent=2)
        fp.write("\n")


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return "inf" if math.isinf(value) else value
    if isinstance(value, np.integer):
        return int(value)
    return value


def _resolve_radius(d: DistanceMatrix, radius: RadiusSpec) -> float | None:
    if radius is None:
        return None
    if isinstance(radius, str):
        if radius == "auto":
            return mean_shortest_path(d) / 2.0
        if radius == "none":
            return None
        raise ValueError(f"radius must be 'auto', 'none' or a number, got {radius!r}")
    return float(radius)


def _interaction_sums(
    g: Graph, d: DistanceMatrix, radius: RadiusSpec
) -> tuple[np.ndarray, float | None]:
    """Per-node sum of deg(i)*deg(j)/d_ij^2 over reachable j within radius."""
    n = g.node_count
    if not d.reachable.any():
        warnings.warn(
            "graph has no reachable pairs; gravity scores are all zero",
            RuntimeWarning,
            stacklevel=3,
        )
        return np.zeros(n), None
    r = _resolve_radius(d, radius)
    mask = d.reachable
    if r is not None:
        mask = mask & (d.dist <= r)
        if not mask.any():
            warnings.warn(
                f"truncation radius {r} excludes every node pair; "
                "gravity scores are all zero",
                RuntimeWarning,
                stacklevel=3,
            )
            return np.zeros(n), r
    df = d.dist.astype(np.float64)
    with np.errstate(divide="ignore"):
        weights = np.where(mask, 1.0 / (df * df), 0.0)
    deg = g.degrees.astype(np.float64)
    return deg * (weights @ deg), r


def degree_centrality(g: Graph) -> CentralityScores:
    """Score each node by its degree."""
    return CentralityScores(
        method="degree",
        params={},
        labels=g.labels,
        scores=g.degrees.astype(np.float64),
    )


def gravity(
    g: Graph, d: DistanceMatrix | None = None, radius: RadiusSpec = "auto"
) -> CentralityScores:
    """Gravity interaction sum: deg(i)*deg(j)/d_ij^2 over pairs within radius.

    The default radius is half the mean shortest-path length; pairs farther
    apart (or unreachable) are ignored.  When the radius excludes every pair
    the scores are all zero and a RuntimeWarning is emitted.
    """
    d = d or all_pairs_shortest_paths(g)
    sums, r = _interaction_sums(g, d, radius)
    return CentralityScores(
        method="g", params={"radius": r}, labels=g.labels, scores=sums
    )


def principal_eigenvector(
    g: Graph, tol: float = 1e-12, max_iter: int = 10_000
) -> np.ndarray:
    """Nonnegative principal eigenvector of the adjacency matrix.

    Computed per connected component with power iteration started from the
    uniform vector; each component's block has unit Euclidean norm.  The
    iteration runs on A+I, which has the same eigenvectors as A but cannot
    oscillate on bipartite components.  Isolated nodes get 1.0.
    """
    n = g.node_count
    rows = np.repeat(np.arange(n), g.degrees)
    e = np.zeros(n)
    for comp in connected_components(g):
        if comp.size == 1:
            e[comp[0]] = 1.0
            continue
        v = np.zeros(n)
        v[comp] = 1.0 / math.sqrt(comp.size)
        residual = math.inf
        for _ in range(max_iter):
            w = np.bincount(rows, weights=v[g.indices], minlength=n) + v
            w /= np.linalg.norm(w[comp])
            residual = float(np.max(np.abs(w[comp] - v[comp])))
            v = w
            if residual < tol:
                break
        else:
            raise ConvergenceError(
                "power iteration did not converge "
                f"within {max_iter} iterations", residual
            )
        e[comp] = v[comp]
    return e


def weighted_gravity(
    g: Graph,
    d: DistanceMatrix | None = None,
    radius: RadiusSpec = "auto",
    tol: float = 1e-12,
    max_iter: int = 10_000,
) -> CentralityScores:
    """Gravity sum weighted by the node's principal-eigenvector entry."""
    d = d or all_pairs_shortest_paths(g)
    e = principal_eigenvector(g, tol=tol, max_iter=max_iter)
    sums, r = _interaction_sums(g, d, radius)
    return CentralityScores(
        method="wg",
        params={"radius": r, "power_tol": tol, "power_max_iter": max_iter},
        labels=g.labels,
        scores=e * sums,
    )


def generalized_gravity(
    g: Graph,
    d: DistanceMatrix | None = None,
    alpha: float = 1.0,
    radius: RadiusSpec = "auto",
) -> CentralityScores:
    """Gravity sum with both endpoints damped by exp(-alpha * clustering).

    Densely clustered nodes interact less; alpha=0 reduces to plain gravity.
    """
    if not math.isfinite(alpha):
        raise ValueError("alpha must be finite")
    d = d or all_pairs_shortest_paths(g)
    n = g.node_count
    if not d.reachable.any():
        warnings.warn(
            "graph has no reachable pairs; gravity scores are all zero",
            RuntimeWarning,
            stacklevel=2,
        )
        return CentralityScores(
            method="gg",
            params={"alpha": alpha, "radius": None},
            labels=g.labels,
            scores=np.zeros(n),
        )
    r = _resolve_radius(d, radius)
    mask = d.reachable
    if r is not None:
        mask = mask & (d.dist <= r)
        if not mask.any():
            warnings.warn(
                f"truncation radius {r} excludes every node pair; "
                "gravity scores are all zero",
                RuntimeWarning,
                stacklevel=2,
            )
            return CentralityScores(
                method="gg",
                params={"alpha": alpha, "radius": r},
                labels=g.labels,
                scores=np.zeros(n),
            )
    damp = np.exp(-alpha * local_clustering_all(g))
    df = d.dist.astype(np.float64)
    with np.errstate(divide="ignore"):
        weights = np.where(mask, 1.0 / (df * df), 0.0)
    masses = damp * g.degrees.astype(np.float64)
    return CentralityScores(
        method="gg",
        params={"alpha": alpha, "radius": r},
        labels=g.labels,
        scores=masses * (weights @ masses),
    )


def betweenness(g: Graph) -> CentralityScores:
    """Fraction of shortest paths through each node, summed over unordered
    pairs of other nodes (endpoints excluded, no normalization)."""
    raw = _kernels.brandes(g.indptr, g.indices)
    return CentralityScores(
        method="bc", params={}, labels=g.labels, scores=raw / 2.0
    )


def resource_trajectory(
    g: Graph, max_steps: int = 100, tol: float = 1e-10
) -> tuple[np.ndarray, bool]:
    """Resource vectors under degree-proportional redistribution.

    Every node starts with 1 unit.  Each step, the resource at node j is
    split among j's neighbors proportionally to their degrees (so the
    redistribution matrix is column-stochastic and the total stays N).
    Isolated nodes keep their resource.  Returns the (steps+1, N) history and
    whether the max-abs change dropped below `tol` within `max_steps` steps.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    n = g.node_count
    deg = g.degrees.astype(np.float64)
    rows = np.repeat(np.arange(n), g.degrees)
    denom = np.bincount(rows, weights=deg[g.indices], minlength=n)
    isolated = deg == 0
    denom[isolated] = 1.0
    current = np.ones(n)
    history = [current]
    converged = False
    for _ in range(max_steps):
        shares = current / denom
        nxt = deg * np.bincount(rows, weights=shares[g.indices], minlength=n)
        nxt[isolated] = current[isolated]
        history.append(nxt)
        if float(np.max(np.abs(nxt - current))) < tol:
            converged = True
            current = nxt
            break
        current = nxt
    return np.array(history), converged


def iterative_resource_allocation(
    g: Graph, max_steps: int = 100, tol: float = 1e-10
) -> CentralityScores:
    """Score nodes by the resource they hold after repeated redistribution.

    The final score averages the last two iterates, which damps the period-2
    oscillation that bipartite graphs sustain forever.
    """
    history, converged = resource_trajectory(g, max_steps=max_steps, tol=tol)
    scores = (history[-1] + history[-2]) / 2.0
    return CentralityScores(
        method="ira",
        params={
            "max_steps": max_steps,
            "tol": tol,
            "steps": len(history) - 1,
            "converged": converged,
        },
        labels=g.labels,
        scores=scores,
    )


def quasi_laplacian(g: Graph) -> CentralityScores:
    """Drop in graph energy (sum of degrees plus squared degrees) when the
    node is deleted; closed form deg + deg^2 + 2 * (neighbor degree sum)."""
    n = g.node_count
    deg = g.degrees.astype(np.float64)
    rows = np.repeat(np.arange(n), g.degrees)
    nbr_deg_sum = np.bincount(rows, weights=deg[g.indices], minlength=n)
    return CentralityScores(
        method="ql",
        params={},
        labels=g.labels,
        scores=deg + deg * deg + 2.0 * nbr_deg_sum,
    )


def efficiency_gravity(
    g: Graph,
    d: DistanceMatrix | None = None,
    eff: EfficiencyReport | None = None,
    radius: RadiusSpec = None,
    threads: int = 1,
) -> CentralityScores:
    """Gravity sum over all reachable pairs, scaled by the efficiency ratio.

    The prefactor is E(G) / E(G minus i): the more deleting a node hurts
    network efficiency, the larger its score.  Nodes whose deletion leaves
    no edges at all get +inf; ties among them are broken by the bare gravity
    sum.  No truncation radius is applied unless one is passed explicitly.
    """
    d = d or all_pairs_shortest_paths(g, threads=threads)
    eff = eff or efficiency_ratios(g, threads=threads)
    base, r = _interaction_sums(g, d, radius)
    ratio = eff.ratio
    scores = np.empty(g.node_count)
    finite = np.isfinite(ratio)
    scores[finite] = ratio[finite] * base[finite]
    scores[~finite] = np.where(base[~finite] > 0.0, np.inf, 0.0)
    return CentralityScores(
        method="neg",
        params={"radius": r},
        labels=g.labels,
        scores=scores,
        tiebreak=base,
    )


def compute_scores(
    g: Graph,
    method: str,
    d: DistanceMatrix | None = None,
    alpha: float = 1.0,
    radius: RadiusSpec = "default",
    threads: int = 1,
) -> CentralityScores:
    """Dispatch a method by its short name (see METHODS).

    `radius` means: "default" picks the method's own convention (auto for
    the gravity family, none for the efficiency-scaled variant), "auto" is
    half the mean shortest-path length, "none"/None disables truncation and
    a number is used as-is.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if method == "degree":
        return degree_centrality(g)
    if method == "bc":
        return betweenness(g)
    if method == "ira":
        return iterative_resource_allocation(g)
    if method == "ql":
        return quasi_laplacian(g)
    d = d or all_pairs_shortest_paths(g, threads=threads)
    if method == "g":
        return gravity(g, d, radius="auto" if radius == "default" else radius)
    if method == "wg":
        return weighted_gravity(g, d, radius="auto" if radius == "default" else radius)
    if method == "gg":
        return generalized_gravity(
            g, d, alpha=alpha, radius="auto" if radius == "default" else radius
        )
    return efficiency_gravity(
        g, d, radius=None if radius == "default" else radius, threads=threads
    )

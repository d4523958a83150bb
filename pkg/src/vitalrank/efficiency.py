"""Network efficiency and the effect of single-node deletion on it.

Efficiency of a graph is the mean inverse shortest-path length over ordered
node pairs; unreachable pairs contribute 0, so the value is well defined on
disconnected graphs and lies in [0, 1].  Deleting a node re-measures the
induced subgraph on the remaining N-1 nodes (denominator (N-1)(N-2)).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph


@dataclass(frozen=True, eq=False)
class EfficiencyReport:
    """Global efficiency plus the per-node deleted efficiencies and ratios.

    ``ratio[i]`` is global/deleted for node i, with +inf when deletion
    disconnects everything that remains (deleted efficiency 0 while the
    global one is positive).  Ratios are bounded below by 1 - 2/N.
    """

    global_efficiency: float
    deleted: np.ndarray  # float64, per-node E(G minus i)
    ratio: np.ndarray  # float64, +inf sentinel allowed


def network_efficiency(g: Graph) -> float:
    """Mean of 1/d over ordered pairs; 1 on complete graphs, 0 when edgeless."""
    n = g.node_count
    if n < 2:
        raise ValueError("network efficiency needs at least 2 nodes")
    return _kernels.inv_dist_sum(g.indptr, g.indices) / (n * (n - 1))


def deleted_efficiency(g: Graph, node: str) -> float:
    """Efficiency of the graph with one node removed."""
    n = g.node_count
    if n < 3:
        raise ValueError("node deletion needs at least 3 nodes")
    i = g.index_of(node)
    return _kernels.inv_dist_sum(g.indptr, g.indices, skip=i) / ((n - 1) * (n - 2))


def efficiency_ratios(g: Graph, threads: int = 1) -> EfficiencyReport:
    """Global efficiency and, per node, the deleted efficiency and ratio."""
    n = g.node_count
    if n < 3:
        raise ValueError("node deletion needs at least 3 nodes")
    total = _kernels.inv_dist_sum(g.indptr, g.indices)
    global_eff = total / (n * (n - 1))
    deleted = np.empty(n)
    denom = (n - 1) * (n - 2)

    def work(i: int) -> None:
        deleted[i] = _kernels.inv_dist_sum(g.indptr, g.indices, skip=i) / denom

    if threads <= 1:
        for i in range(n):
            work(i)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(work, range(n)))

    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(deleted > 0.0, global_eff / deleted, np.inf)
    # deleting a node from an edgeless remainder changes nothing: 0/0 -> 1
    ratio[(deleted == 0.0) & (global_eff == 0.0)] = 1.0
    return EfficiencyReport(
        global_efficiency=global_eff, deleted=deleted, ratio=ratio
    )

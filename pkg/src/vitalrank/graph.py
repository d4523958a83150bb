"""Immutable undirected simple graphs and unweighted shortest paths.

Nodes carry arbitrary string labels; internally they are mapped to dense
indices 0..N-1 in first-appearance order and the adjacency is stored in CSR
form (``indptr``/``indices``) with each row sorted.  Per-node arrays returned
elsewhere in the package are aligned to this dense index order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import IO, Iterable

import numpy as np

from . import _kernels
from .errors import EdgeListParseError

UNREACHABLE = -1

_COMMENT_PREFIXES = ("#", "%")


@dataclass(frozen=True)
class IngestReport:
    """What edge-list ingestion kept and what it normalized away."""

    node_count: int
    edge_count: int
    self_loops_dropped: int
    duplicate_edges_dropped: int
    component_sizes: tuple[int, ...]

    @property
    def component_count(self) -> int:
        return len(self.component_sizes)

    def summary(self) -> str:
        return (
            f"{self.node_count} nodes, {self.edge_count} edges "
            f"({self.self_loops_dropped} self-loops and "
            f"{self.duplicate_edges_dropped} duplicate edges dropped), "
            f"{self.component_count} component(s), "
            f"largest {max(self.component_sizes, default=0)}"
        )


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph over dense node indices with string labels."""

    labels: tuple[str, ...]
    indptr: np.ndarray  # int64, length n+1
    indices: np.ndarray  # int32, length 2*edge_count, rows sorted
    report: IngestReport | None = field(default=None, compare=False, repr=False)

    @property
    def node_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return self.indices.size // 2

    @cached_property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr).astype(np.int64)

    @cached_property
    def _index_of(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index_of(self, label: str) -> int:
        try:
            return self._index_of[str(label)]
        except KeyError:
            raise KeyError(f"unknown node label {label!r}") from None

    def neighbors(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i] : self.indptr[i + 1]]

    def has_edge(self, i: int, j: int) -> bool:
        row = self.neighbors(i)
        pos = np.searchsorted(row, j)
        return pos < row.size and row[pos] == j

    @classmethod
    def from_edges(
        cls, edges: Iterable[tuple[str, str]], labels: Iterable[str] | None = None
    ) -> "Graph":
        """Build a graph from label pairs; self-loops and duplicates are dropped.

        `labels` optionally pre-seeds the label order (useful to keep isolated
        nodes); otherwise labels are registered in first-appearance order.
        """
        index: dict[str, int] = {}
        if labels is not None:
            for lab in labels:
                index.setdefault(str(lab), len(index))
        pairs: set[tuple[int, int]] = set()
        dup = loops = 0
        for a, b in edges:
            ia = index.setdefault(str(a), len(index))
            ib = index.setdefault(str(b), len(index))
            if ia == ib:
                loops += 1
                continue
            key = (ia, ib) if ia < ib else (ib, ia)
            if key in pairs:
                dup += 1
            else:
                pairs.add(key)
        return cls._from_index_pairs(
            tuple(index), pairs, self_loops=loops, duplicates=dup
        )

    @classmethod
    def _from_index_pairs(
        cls,
        labels: tuple[str, ...],
        pairs: set[tuple[int, int]],
        self_loops: int = 0,
        duplicates: int = 0,
    ) -> "Graph":
        n = len(labels)
        if pairs:
            arr = np.array(sorted(pairs), dtype=np.int32)
            src = np.concatenate([arr[:, 0], arr[:, 1]])
            dst = np.concatenate([arr[:, 1], arr[:, 0]])
            order = np.lexsort((dst, src))
            src, dst = src[order], dst[order]
        else:
            src = dst = np.empty(0, dtype=np.int32)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.add.at(indptr, src + 1, 1)
        np.cumsum(indptr, out=indptr)
        g = cls(labels=labels, indptr=indptr, indices=np.ascontiguousarray(dst))
        sizes = tuple(sorted((c.size for c in connected_components(g)), reverse=True))
        report = IngestReport(
            node_count=n,
            edge_count=len(pairs),
            self_loops_dropped=self_loops,
            duplicate_edges_dropped=duplicates,
            component_sizes=sizes,
        )
        object.__setattr__(g, "report", report)
        return g


def parse_edge_list(source: str | IO[str]) -> Graph:
    """Parse an edge list: one edge per line, two whitespace-separated labels.

    Lines starting with '#' or '%' are comments; blank lines are ignored.
    Self-loops and duplicate edges are dropped (counted in ``graph.report``);
    a node seen only in a self-loop is kept as an isolated node.
    """
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = source
    index: dict[str, int] = {}
    pairs: set[tuple[int, int]] = set()
    loops = dup = 0
    parsed_any = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith(_COMMENT_PREFIXES):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(
                f"expected 2 node labels, got {len(tokens)}: {line!r}", lineno
            )
        parsed_any = True
        ia = index.setdefault(tokens[0], len(index))
        ib = index.setdefault(tokens[1], len(index))
        if ia == ib:
            loops += 1
            continue
        key = (ia, ib) if ia < ib else (ib, ia)
        if key in pairs:
            dup += 1
        else:
            pairs.add(key)
    if not parsed_any:
        raise EdgeListParseError("empty edge list (no edge lines found)")
    return Graph._from_index_pairs(
        tuple(index), pairs, self_loops=loops, duplicates=dup
    )


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop counts; UNREACHABLE (-1) marks cross-component pairs."""

    dist: np.ndarray  # int32, n x n

    @property
    def node_count(self) -> int:
        return self.dist.shape[0]

    @cached_property
    def reachable(self) -> np.ndarray:
        """Boolean mask of ordered pairs with a finite positive distance."""
        return self.dist > 0


def _split_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total)) if total else 1
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def all_pairs_shortest_paths(g: Graph, threads: int = 1) -> DistanceMatrix:
    """BFS from every node; deterministic for any thread count."""
    n = g.node_count
    if threads <= 1 or n < 2:
        return DistanceMatrix(_kernels.bfs_block(g.indptr, g.indices, 0, n))
    blocks = _split_ranges(n, threads)
    out = np.empty((n, n), dtype=np.int32)

    def work(lo: int, hi: int) -> None:
        out[lo:hi] = _kernels.bfs_block(g.indptr, g.indices, lo, hi)

    with ThreadPoolExecutor(max_workers=len(blocks)) as pool:
        list(pool.map(lambda b: work(*b), blocks))
    return DistanceMatrix(out)


def mean_shortest_path(d: DistanceMatrix) -> float:
    """Mean hop count over unordered reachable pairs i != j."""
    mask = d.reachable
    count = int(mask.sum())
    if count == 0:
        raise ValueError("graph has no reachable pairs; mean path undefined")
    return float(d.dist[mask].sum()) / count


def local_clustering_all(g: Graph) -> np.ndarray:
    """Neighbor-edge density per node: n_i / (k_i * (k_i - 1)).

    n_i counts edges among the neighbors of i; nodes of degree <= 1 score 0.
    Note the denominator counts ordered neighbor pairs, so a triangle corner
    scores 1/2.
    """
    n = g.node_count
    out = np.zeros(n)
    deg = g.degrees
    for i in range(n):
        if deg[i] <= 1:
            continue
        nbrs = g.neighbors(i)
        hits = 0
        for j in nbrs:
            row = g.neighbors(int(j))
            pos = np.searchsorted(nbrs, row)
            pos[pos >= nbrs.size] = nbrs.size - 1
            hits += int((nbrs[pos] == row).sum())
        out[i] = (hits / 2) / (deg[i] * (deg[i] - 1))
    return out


def local_clustering(g: Graph, node: str) -> float:
    """Neighbor-edge density of one node (see local_clustering_all)."""
    i = g.index_of(node)
    deg = int(g.degrees[i])
    if deg <= 1:
        return 0.0
    nbrs = g.neighbors(i)
    edges = 0
    for a in range(nbrs.size):
        row = g.neighbors(int(nbrs[a]))
        edges += int(np.isin(nbrs[a + 1 :], row, assume_unique=True).sum())
    return edges / (deg * (deg - 1))


def connected_components(g: Graph) -> list[np.ndarray]:
    """Index arrays of the connected components, in discovery order."""
    n = g.node_count
    seen = np.zeros(n, dtype=bool)
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        members = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                w = int(w)
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
                    members.append(w)
        comps.append(np.array(sorted(members), dtype=np.int64))
    return comps


def induced_subgraph(g: Graph, keep_labels: Iterable[str]) -> Graph:
    """Subgraph on the given labels, reindexed densely in original order."""
    keep = sorted(g.index_of(lab) for lab in keep_labels)
    keep_arr = np.array(keep, dtype=np.int64)
    remap = -np.ones(g.node_count, dtype=np.int64)
    remap[keep_arr] = np.arange(len(keep))
    pairs = set()
    for old in keep:
        for w in g.neighbors(old):
            w = int(w)
            if remap[w] >= 0 and old < w:
                pairs.add((int(remap[old]), int(remap[w])))
    labels = tuple(g.labels[i] for i in keep)
    return Graph._from_index_pairs(labels, pairs)

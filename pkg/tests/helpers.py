"""Graph builders and independent oracle implementations for the tests.

Oracles deliberately avoid the package's kernel code paths: distances come
from min-plus relaxation, betweenness from exhaustive shortest-path
enumeration, correlation from a double loop, and so on.
"""

from __future__ import annotations

import numpy as np

from vitalrank import Graph


def lab(i: int) -> str:
    return f"{i:03d}"  # zero-padded so label order == numeric order


def path_graph(n: int) -> Graph:
    return Graph.from_edges((lab(i), lab(i + 1)) for i in range(n - 1))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges((lab(i), lab((i + 1) % n)) for i in range(n))


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges((lab(0), lab(i)) for i in range(1, leaves + 1))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(
        (lab(i), lab(j)) for i in range(n) for j in range(i + 1, n)
    )


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    edges = [
        (lab(i), lab(j))
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    labels = [lab(i) for i in range(n)]
    return Graph.from_edges(edges, labels=labels)


def random_connected_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    # random tree skeleton plus G(n, p) extras: connected by construction
    edges = {(min(i, j), max(i, j)) for i, j in prufer_tree_edges(n, rng)}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.add((i, j))
    return Graph.from_edges((lab(a), lab(b)) for a, b in sorted(edges))


def prufer_tree_edges(n: int, rng: np.random.Generator) -> list[tuple[int, int]]:
    """Uniform random labeled tree on n nodes via Prufer decoding."""
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = list(rng.integers(0, n, size=n - 2))
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    import heapq

    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, int(v)))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, int(v))
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return edges


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    return Graph.from_edges(
        (lab(a), lab(b)) for a, b in prufer_tree_edges(n, rng)
    )


def adjacency_lists(g: Graph) -> list[list[int]]:
    return [list(map(int, g.neighbors(i))) for i in range(g.node_count)]


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------


def floyd_distances(g: Graph) -> np.ndarray:
    """All-pairs distances by min-plus relaxation; -1 for unreachable."""
    n = g.node_count
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0.0)
    for i, nbrs in enumerate(adjacency_lists(g)):
        for j in nbrs:
            dist[i, j] = 1.0
    for k in range(n):
        dist = np.minimum(dist, dist[:, [k]] + dist[[k], :])
    out = np.where(np.isinf(dist), -1, dist).astype(np.int32)
    return out


def brute_efficiency(g: Graph) -> float:
    """Mean inverse distance over ordered pairs, from the relaxation oracle."""
    d = floyd_distances(g)
    n = g.node_count
    total = sum(
        1.0 / d[i, j] for i in range(n) for j in range(n) if d[i, j] > 0
    )
    return total / (n * (n - 1))


def bfs_distances_from(adj: list[list[int]], s: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[s] = 0
    queue = [s]
    for v in queue:
        for w in adj[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def enum_betweenness(g: Graph) -> np.ndarray:
    """Betweenness by exhaustive enumeration of shortest paths per pair."""
    n = g.node_count
    adj = adjacency_lists(g)
    scores = np.zeros(n)
    for j in range(n):
        dj = bfs_distances_from(adj, j)
        for k in range(j + 1, n):
            target = dj[k]
            if target <= 0:
                continue
            interior: list[frozenset[int]] = []

            def dfs(v: int, depth: int, onpath: set[int]) -> None:
                if v == k:
                    if depth == target:
                        interior.append(frozenset(onpath - {j, k}))
                    return
                if depth >= target:
                    return
                for w in adj[v]:
                    if w not in onpath:
                        onpath.add(w)
                        dfs(w, depth + 1, onpath)
                        onpath.discard(w)

            dfs(j, 0, {j})
            total = len(interior)
            for i in range(n):
                if i in (j, k):
                    continue
                through = sum(1 for p in interior if i in p)
                if through:
                    scores[i] += through / total
    return scores


def brute_clustering(g: Graph) -> np.ndarray:
    """Edges among neighbors over ordered neighbor pairs, by direct count."""
    n = g.node_count
    adj = [set(nbrs) for nbrs in adjacency_lists(g)]
    out = np.zeros(n)
    for i in range(n):
        k = len(adj[i])
        if k <= 1:
            continue
        nbrs = sorted(adj[i])
        edges = sum(
            1
            for a in range(len(nbrs))
            for b in range(a + 1, len(nbrs))
            if nbrs[b] in adj[nbrs[a]]
        )
        out[i] = edges / (k * (k - 1))
    return out


def brute_damped_gravity(g: Graph, alpha: float) -> np.ndarray:
    """Clustering-damped gravity sums evaluated pair by pair in Python."""
    d = floyd_distances(g)
    n = g.node_count
    deg = [len(a) for a in adjacency_lists(g)]
    lcc = brute_clustering(g)
    reach = [
        d[i, j] for i in range(n) for j in range(n) if d[i, j] > 0
    ]
    r = (sum(reach) / len(reach)) / 2.0
    out = np.zeros(n)
    for i in range(n):
        for j in range(n):
            if i == j or d[i, j] <= 0 or d[i, j] > r:
                continue
            out[i] += (
                np.exp(-alpha * lcc[i])
                * np.exp(-alpha * lcc[j])
                * deg[i]
                * deg[j]
                / float(d[i, j]) ** 2
            )
    return out


def brute_quasi_energy(adj: list[set[int]]) -> float:
    degs = [len(a) for a in adj]
    return float(sum(degs) + sum(k * k for k in degs))


def brute_quasi_laplacian(g: Graph) -> np.ndarray:
    """Energy drop per deleted node, computed on explicit subgraphs."""
    n = g.node_count
    adj = [set(nbrs) for nbrs in adjacency_lists(g)]
    total = brute_quasi_energy(adj)
    out = np.zeros(n)
    for i in range(n):
        rest = [a - {i} for v, a in enumerate(adj) if v != i]
        out[i] = total - brute_quasi_energy(rest)
    return out


def pair_count_kendall(x, y) -> float:
    """Tau by explicit O(n^2) pair enumeration; ties count as neither."""
    xs = [float(v) for v in x]
    ys = [float(v) for v in y]
    n = len(xs)
    plus = minus = 0
    for i in range(n):
        for j in range(i + 1, n):
            dx = (xs[i] > xs[j]) - (xs[i] < xs[j])
            dy = (ys[i] > ys[j]) - (ys[i] < ys[j])
            s = dx * dy
            if s > 0:
                plus += 1
            elif s < 0:
                minus += 1
    return 2.0 * (plus - minus) / (n * (n - 1))


def is_cut_vertex(g: Graph, i: int) -> bool:
    """Does removing node i increase the number of components?"""
    adj = adjacency_lists(g)
    n = g.node_count

    def n_components(skip: int | None) -> int:
        seen = [v == skip for v in range(n)]
        comps = 0
        for s in range(n):
            if seen[s]:
                continue
            comps += 1
            stack = [s]
            seen[s] = True
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if not seen[w] and w != skip:
                        seen[w] = True
                        stack.append(w)
        return comps

    return n_components(i) > n_components(None)

"""Shared test helpers: independent distance oracle and graph generators."""

from collections import deque

import numpy as np
import pytest

from pismetric.pisgraph import PisGraph


def reference_distances(n, edges):
    """Plain BFS over an edge list; independent of the library's matrix code."""
    nbrs = {v: [] for v in range(n)}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    dist = [[255] * n for _ in range(n)]
    for s in range(n):
        dist[s][s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in nbrs[x]:
                if dist[s][y] == 255:
                    dist[s][y] = dist[s][x] + 1
                    q.append(y)
    return dist


def graph_from_edges(n, edges):
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        adj[u, v] = adj[v, u] = True
    return PisGraph(adj, tuple(f"v{i}" for i in range(n)))


def random_connected_graph(rng, n):
    """Erdos-Renyi draw, resampled (denser each retry) until connected."""
    p = float(rng.uniform(0.2, 0.8))
    while True:
        a = rng.random((n, n)) < p
        a = np.triu(a, 1)
        a = a | a.T
        g = PisGraph(a, tuple(f"v{i}" for i in range(n)))
        ref = reference_distances(n, g.edges())
        if all(ref[0][v] != 255 for v in range(n)):
            return g
        p = min(0.95, p + 0.1)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20250810)

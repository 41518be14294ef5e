"""Prime ideal sum graphs: construction, distances, serialization.

The graph PIS(R) has the nonzero proper ideals of R as vertices, two
distinct ideals being adjacent exactly when their sum is a prime ideal.
Vertices are kept in lexicographic order of their index vectors; every
structure here is immutable after construction so instances can be shared
freely across threads.
"""

from __future__ import annotations

import json

import numpy as np

from . import rings
from .errors import DisconnectedRing, EmptyGraph, GraphFormatError
from .rings import IdealVec, RingSpec

INF = 255  # unreachable sentinel in uint8 distance matrices


class PisGraph:
    """An undirected simple graph, optionally carrying its ring structure.

    ``spec`` and ``ideals`` are None for plain graphs loaded from JSON; the
    solver works on either kind.
    """

    __slots__ = ("spec", "ideals", "labels", "adj")

    def __init__(
        self,
        adj: np.ndarray,
        labels: tuple[str, ...],
        spec: RingSpec | None = None,
        ideals: tuple[IdealVec, ...] | None = None,
    ):
        adj = np.asarray(adj, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise GraphFormatError("adjacency must be a square matrix")
        if adj.shape[0] != len(labels):
            raise GraphFormatError("one label per vertex required")
        if np.any(np.diag(adj)):
            raise GraphFormatError("self-loops are not allowed")
        if not np.array_equal(adj, adj.T):
            raise GraphFormatError("adjacency must be symmetric")
        adj = adj.copy()
        adj.setflags(write=False)
        self.adj = adj
        self.labels = tuple(labels)
        self.spec = spec
        self.ideals = tuple(ideals) if ideals is not None else None

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of (u, v) pairs with u < v."""
        iu, iv = np.nonzero(np.triu(self.adj, 1))
        return list(zip(iu.tolist(), iv.tolist()))

    def neighbors(self, v: int) -> list[int]:
        return np.nonzero(self.adj[v])[0].tolist()

    def __repr__(self):
        ring = list(self.spec.components) if self.spec else None
        return f"PisGraph(n={self.n}, edges={self.edge_count()}, ring={ring})"


def build(spec: RingSpec) -> PisGraph:
    """Construct PIS(R) for a chain-ring product.

    Refuses the two degenerate inputs: a single field (no vertices) and a
    product of exactly two fields (the one disconnected case).
    """
    if spec.vertex_count < 1:
        raise EmptyGraph(
            f"{_ring_str(spec)} has {spec.vertex_count} nonzero proper ideals; no graph"
        )
    if spec.components == (2, 2):
        raise DisconnectedRing(
            "a product of two fields yields a disconnected graph; refusing to build"
        )
    verts = np.array(rings.enumerate_ideals(spec, vertices_only=True), dtype=np.int16)
    adj = _pis_adjacency(verts, spec)
    labels = tuple(rings.vertex_label(spec, tuple(v)) for v in verts.tolist())
    ideals = tuple(tuple(v) for v in verts.tolist())
    return PisGraph(adj, labels, spec=spec, ideals=ideals)


def _pis_adjacency(verts: np.ndarray, spec: RingSpec) -> np.ndarray:
    """Pairwise edge predicate, vectorized per prime.

    sum(u, v) equals a prime p iff u <= p and v <= p componentwise and every
    slot attains p in u or in v; the last condition is checked through a
    "neither attains" matmul.
    """
    nv = verts.shape[0]
    adj = np.zeros((nv, nv), dtype=bool)
    for p in rings.maximal_ideals(spec):
        pa = np.array(p, dtype=np.int16)
        below = (verts <= pa).all(axis=1)
        miss = (verts != pa).astype(np.float32)
        neither = (miss @ miss.T) > 0.5
        adj |= np.outer(below, below) & ~neither
    np.fill_diagonal(adj, False)
    return adj


def all_pairs_distances(g: PisGraph) -> np.ndarray:
    """Exact hop counts as a uint8 matrix; INF (255) marks unreachable pairs.

    Level-synchronous expansion of the reachability matrix; the number of
    rounds is the diameter, which stays tiny for these graphs.
    """
    n = g.n
    dist = np.full((n, n), INF, dtype=np.uint8)
    np.fill_diagonal(dist, 0)
    adj_f = g.adj.astype(np.float32)
    reach = np.eye(n, dtype=bool) | g.adj
    dist[g.adj & ~np.eye(n, dtype=bool)] = 1
    level = 1
    while level < n:
        expanded = (reach.astype(np.float32) @ adj_f) > 0.5
        newly = expanded & ~reach
        if not newly.any():
            break
        level += 1
        dist[newly] = level
        reach |= newly
    return dist


def is_connected(g: PisGraph, dist: np.ndarray | None = None) -> bool:
    if dist is None:
        dist = all_pairs_distances(g)
    return not np.any(dist == INF)


def diameter(g: PisGraph, dist: np.ndarray | None = None) -> int:
    """Largest finite distance (0 for a single vertex)."""
    if dist is None:
        dist = all_pairs_distances(g)
    finite = dist[dist != INF]
    return int(finite.max())


def export_dot(g: PisGraph) -> str:
    """Graphviz text: one node line per vertex, one ``--`` line per edge."""
    lines = ["graph pis {"]
    for i, lab in enumerate(g.labels):
        lines.append(f'  v{i} [label="{lab}"];')
    for u, v in g.edges():
        lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: PisGraph) -> str:
    """Graph document: {"ring": [c...], "vertices": [[idx...]...], "edges": [[u,v]...]}."""
    doc = {
        "ring": list(g.spec.components) if g.spec is not None else None,
        "vertices": [list(v) for v in g.ideals]
        if g.ideals is not None
        else list(g.labels),
        "edges": [[u, v] for u, v in g.edges()],
    }
    return json.dumps(doc)


def import_graph_json(text: str) -> PisGraph:
    """Load a graph document; "ring" is optional (plain-graph mode).

    With "ring" present the vertex vectors and edges are validated against
    the ring structure, so importing an exported graph reproduces it
    exactly. Without it, any simple graph is accepted: "vertices" entries
    become labels.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"not valid JSON: {e}") from None
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise GraphFormatError('graph document needs "vertices" and "edges"')
    vertices = doc["vertices"]
    if not isinstance(vertices, list) or not vertices:
        raise GraphFormatError('"vertices" must be a nonempty list')
    n = len(vertices)

    adj = np.zeros((n, n), dtype=bool)
    for e in doc["edges"]:
        if not isinstance(e, list) or len(e) != 2:
            raise GraphFormatError(f"bad edge entry {e!r}")
        u, v = e
        if not (isinstance(u, int) and isinstance(v, int)) or not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge {e!r} out of range")
        if u == v:
            raise GraphFormatError(f"self-loop on vertex {u} not allowed in a simple graph")
        adj[u, v] = adj[v, u] = True

    ring = doc.get("ring")
    if ring is None:
        labels = doc.get("labels") or [str(v) for v in vertices]
        if len(labels) != n:
            raise GraphFormatError("one label per vertex required")
        return PisGraph(adj, tuple(labels))

    spec = RingSpec(tuple(ring))
    expected = rings.enumerate_ideals(spec, vertices_only=True)
    got = [tuple(v) for v in vertices]
    if got != expected:
        raise GraphFormatError(
            "vertex list does not match the ring's nonzero proper ideals "
            "in lexicographic order"
        )
    rebuilt = build(spec)
    if not np.array_equal(rebuilt.adj, adj):
        raise GraphFormatError("edge set inconsistent with the declared ring")
    return rebuilt


def _ring_str(spec: RingSpec) -> str:
    return "[" + ",".join(str(c) for c in spec.components) + "]"

"""Constructive extraction of a dense bipartite subgraph from a graph
without short even cycles, plus degree-outlier diagnostics.

The extraction pipeline: cap the maximum degree by deleting all edges at
high-degree vertices, pick the vertex starting the most paths of length
ell+1, and keep the edges between its ell-th and (ell+1)-st BFS layers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import EpsilonOutOfRange
from .graph import BipartiteGraph, Graph, e_between, neighborhood_layers
from .walks import BoundReport, paths_from_vertex


def truncate_degrees(G: Graph, delta: int) -> tuple:
    """Remove every edge incident to a vertex of degree > delta.

    One-shot (not iterated); returns (new graph, removed edge count). The
    result keeps all n vertices and has maximum degree <= delta.
    """
    if delta < 0:
        raise ValueError("delta must be >= 0")
    high = {v for v in range(G.n) if G.degree(v) > delta}
    kept = [(u, v) for u, v in G.edges() if u not in high and v not in high]
    return Graph(G.n, kept), G.m - len(kept)


def best_root(G: Graph, ell: int, budget=None) -> tuple:
    """The vertex starting the most paths of length ell+1 (lowest index on
    ties), together with that count."""
    if ell + 1 > 8:
        raise ValueError("ell + 1 must be <= 8 (path enumeration guard)")
    best_v, best_count = 0, -1
    for v in range(G.n):
        count = paths_from_vertex(G, v, ell + 1, budget=budget)
        if count > best_count:
            best_v, best_count = v, count
    return best_v, best_count


@dataclass(frozen=True)
class ExtractionReport:
    """Outcome of one bipartite-extraction run.

    ``subgraph`` lives on its own compact vertex set; ``subgraph_vertices``
    maps its indices back to the input graph (layer ell first, then layer
    ell+1).
    """

    root: int
    ell: int
    delta: int
    removed_by_truncation: int
    path_count_from_root: int
    layer_sizes: tuple
    subgraph: BipartiteGraph = field(repr=False)
    subgraph_vertices: tuple
    edges_extracted: int
    unique_parent_layers: bool


def extract_bipartite(G: Graph, ell: int, delta=None, budget=None) -> ExtractionReport:
    """Bipartite subgraph between BFS layers ell and ell+1 of the best root
    of the degree-truncated graph.

    Default truncation threshold: ceil(n^(1/ell + 1/(2*ell^2))).
    """
    if ell < 2:
        raise ValueError("ell must be >= 2")
    if delta is None:
        delta = math.ceil(G.n ** (1.0 / ell + 1.0 / (2 * ell * ell)))
    g0, removed = truncate_degrees(G, delta)
    root, count = best_root(g0, ell, budget=budget)
    layers = neighborhood_layers(g0, root, ell + 1)
    lower, upper = set(layers[ell]), set(layers[ell + 1])
    # vertex order: layer ell ascending, then layer ell+1 ascending
    vertices = tuple(sorted(lower)) + tuple(sorted(upper))
    pos = {v: i for i, v in enumerate(vertices)}
    cross = [
        (pos[u], pos[v])
        for u, v in g0.edges()
        if (u in lower and v in upper) or (v in lower and u in upper)
    ]
    side = tuple(0 if i < len(lower) else 1 for i in range(len(vertices)))
    subgraph = BipartiteGraph(len(vertices), cross, side)
    unique_parent = all(
        sum(1 for w in g0.adj[v] if w in set(layers[i - 1])) == 1
        for i in range(1, ell + 1)
        for v in layers[i]
    )
    return ExtractionReport(
        root=root,
        ell=ell,
        delta=delta,
        removed_by_truncation=removed,
        path_count_from_root=count,
        layer_sizes=tuple(len(layer) for layer in layers),
        subgraph=subgraph,
        subgraph_vertices=vertices,
        edges_extracted=subgraph.m,
        unique_parent_layers=unique_parent,
    )


def check_degree_outlier_bound(G: Graph, B, eps: float, A=None) -> BoundReport:
    """In a quadrilateral-free graph, vertices of A with at least
    (1+eps)*sqrt(|B|) neighbors in B carry at most 2|B|/eps ordered edge
    endpoints into B.

    The verdict must hold whenever G is C4-free; the caller supplies that
    context.
    """
    if not 0 < eps < math.sqrt(3):
        raise EpsilonOutOfRange("need 0 < eps < sqrt(3)")
    B = set(B)
    pool = range(G.n) if A is None else set(A)
    b_mask = 0
    for v in B:
        b_mask |= 1 << v
    threshold = (1 + eps) * math.sqrt(len(B))
    S = [v for v in pool if (G.bits[v] & b_mask).bit_count() >= threshold]
    lhs = e_between(G, S, B)
    rhs = 2 * len(B) / eps
    return BoundReport(
        check="degree-outlier-endpoints",
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs + 1e-9,
        note=f"|S| = {len(S)}, |B| = {len(B)}, eps = {eps}",
    )


@dataclass(frozen=True)
class OutlierReport:
    """Edges at vertices of outlying degree.

    The sqrt-threshold count carries a verdict (must hold on C4-free
    graphs); the average-degree fraction is reported without a verdict.
    """

    eps: float
    sqrt_threshold: float
    edges_at_sqrt_outliers: int
    sqrt_bound: float
    holds_sqrt: bool
    mean_threshold: float
    edges_at_mean_outliers: int
    fraction_at_mean_outliers: float


def high_degree_edge_fraction(G: Graph, eps: float) -> OutlierReport:
    if not 0 < eps < math.sqrt(3):
        raise EpsilonOutOfRange("need 0 < eps < sqrt(3)")
    n = G.n
    t_sqrt = (1 + eps) * math.sqrt(n)
    high_sqrt = {v for v in range(n) if G.degree(v) >= t_sqrt}
    at_sqrt = sum(1 for u, v in G.edges() if u in high_sqrt or v in high_sqrt)
    d_mean = float(G.average_degree()) if n else 0.0
    t_mean = (1 + eps) * d_mean
    high_mean = {v for v in range(n) if G.degree(v) >= t_mean}
    at_mean = sum(1 for u, v in G.edges() if u in high_mean or v in high_mean)
    return OutlierReport(
        eps=eps,
        sqrt_threshold=t_sqrt,
        edges_at_sqrt_outliers=at_sqrt,
        sqrt_bound=2 * n / eps,
        holds_sqrt=at_sqrt <= 2 * n / eps + 1e-9,
        mean_threshold=t_mean,
        edges_at_mean_outliers=at_mean,
        fraction_at_mean_outliers=(at_mean / G.m) if G.m else 0.0,
    )

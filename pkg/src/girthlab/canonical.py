"""Canonical forms for small graphs: iterated degree refinement followed by
a backtracking search for the minimal adjacency-matrix encoding.

The canonical encoding is the minimum, over vertex orderings consistent
with the refinement tree, of the upper-triangle adjacency bits read row by
row (first pair most significant). Two graphs are isomorphic iff they have
the same (n, encoding) key, and the encoding doubles as the witness
serialization key in the search module.

Branching individualizes one vertex of the first non-singleton cell at a
time; vertices that are twins (equal neighborhoods outside the pair) are
interchangeable by an automorphism, so only one representative per twin
class is explored. This keeps the tree near |Aut(G)| leaves on the highly
symmetric graphs that exhaustive generation passes through.
"""

from __future__ import annotations

from .errors import BudgetExceeded
from .graph import Graph, relabel

_NODE_CAP = 10_000_000


def _refine(n: int, bits: tuple, colors: list) -> list:
    """Stable iterated refinement by multisets of neighbor colors.

    Deterministic and label-invariant: new colors are assigned by sorting
    the (old color, sorted neighbor colors) keys.
    """
    ncolors = len(set(colors))
    while True:
        keys = []
        for v in range(n):
            mask = bits[v]
            neigh = []
            while mask:
                low = mask & -mask
                neigh.append(colors[low.bit_length() - 1])
                mask ^= low
            neigh.sort()
            keys.append((colors[v], tuple(neigh)))
        order = {key: i for i, key in enumerate(sorted(set(keys)))}
        colors = [order[key] for key in keys]
        if len(order) == ncolors:
            return colors
        ncolors = len(order)


def _twin_representatives(candidates: list, bits: tuple) -> list:
    reps = []
    for v in candidates:
        vb = bits[v]
        is_dup = False
        for r in reps:
            mask = ~((1 << v) | (1 << r))
            if (vb & mask) == (bits[r] & mask):
                is_dup = True
                break
        if not is_dup:
            reps.append(v)
    return reps


class _CanonSearch:
    def __init__(self, G: Graph):
        self.n = G.n
        self.bits = G.bits
        self.best = None
        self.best_perm = None
        self.nodes = 0

    def run(self):
        if self.n == 0:
            return 0, ()
        self._descend(_refine(self.n, self.bits, [0] * self.n))
        return self.best, self.best_perm

    def _descend(self, colors):
        self.nodes += 1
        if self.nodes > _NODE_CAP:
            raise BudgetExceeded("canonical search exceeded its node cap")
        n = self.n
        counts = [0] * n
        for c in colors:
            counts[c] += 1
        target = next((c for c in range(n) if counts[c] >= 2), None)
        if target is None:
            self._leaf(colors)
            return
        candidates = [v for v in range(n) if colors[v] == target]
        for v in _twin_representatives(candidates, self.bits):
            split = [2 * c for c in colors]
            split[v] -= 1
            order = {c: i for i, c in enumerate(sorted(set(split)))}
            self._descend(_refine(n, self.bits, [order[c] for c in split]))

    def _leaf(self, colors):
        n = self.n
        inv = [0] * n
        for v in range(n):
            inv[colors[v]] = v
        bits = self.bits
        enc = 0
        for i in range(n):
            vi = inv[i]
            for j in range(i + 1, n):
                enc = (enc << 1) | ((bits[vi] >> inv[j]) & 1)
        if self.best is None or enc < self.best:
            self.best = enc
            self.best_perm = tuple(colors)


def canonical_labeling(G: Graph) -> tuple:
    """(minimal encoding integer, permutation old-vertex -> position)."""
    enc, perm = _CanonSearch(G).run()
    return enc, perm


def canonical_key(G: Graph) -> tuple:
    """Hashable isomorphism invariant: (n, minimal encoding)."""
    enc, _ = _CanonSearch(G).run()
    return (G.n, enc)


def canonical_graph(G: Graph) -> Graph:
    """G relabeled into its canonical ordering."""
    _, perm = canonical_labeling(G)
    return relabel(G, perm)


def last_edge_under(G: Graph, perm) -> tuple:
    """The edge at the last set position of the encoding induced by perm,
    in original labels."""
    n = G.n
    inv = [0] * n
    for v in range(n):
        inv[perm[v]] = v
    for i in range(n - 1, -1, -1):
        for j in range(n - 1, i, -1):
            u, v = inv[i], inv[j]
            if G.has_edge(u, v):
                return (u, v) if u < v else (v, u)
    return None


def canonical_last_edge(G: Graph):
    """The edge occupying the last set position of the canonical encoding,
    in original labels; None for edgeless graphs.

    Well-defined up to automorphism, and deterministic for a fixed input
    labeling, which is what canonical-parent generation needs.
    """
    if G.m == 0:
        return None
    _, perm = canonical_labeling(G)
    return last_edge_under(G, perm)


def are_isomorphic(G: Graph, H: Graph) -> bool:
    return G.n == H.n and canonical_key(G) == canonical_key(H)

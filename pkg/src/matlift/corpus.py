"""Exhaustive corpus of connected multigraphs and their bond matroids.

Graphs are grown one edge at a time (new loop, new edge between existing
vertices, or pendant edge to a new vertex); every connected multigraph arises
this way. Each level is reduced to one graph per isomorphism class using a
canonical form, and the final corpus keeps one graph per isomorphism class of
cycle matroid.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .catalog import Multigraph, cycle_matroid
from .matroid import BinaryMatroid, dual, is_isomorphic

Edges = tuple[tuple[int, int], ...]


def canonical_form(n: int, edges: Edges) -> tuple[int, Edges]:
    """Canonical (vertex count, sorted edge list) of a multigraph with loops.

    Colour refinement plus individualization; among vertices that are twins
    (swapping them is an automorphism) only one is tried.
    """
    mult = [[0] * n for _ in range(n)]
    for u, v in edges:
        mult[u][v] += 1
        if u != v:
            mult[v][u] += 1
    nbrs = [[u for u in range(n) if u != v and mult[v][u]] for v in range(n)]

    def refine(colors: list[int]) -> list[int]:
        while True:
            keys = [
                (colors[v], mult[v][v], tuple(sorted((colors[u], mult[v][u]) for u in nbrs[v])))
                for v in range(n)
            ]
            index = {k: i for i, k in enumerate(sorted(set(keys)))}
            new = [index[k] for k in keys]
            if len(index) == len(set(colors)):
                return new
            colors = new

    def twins(u: int, v: int) -> bool:
        return mult[u][u] == mult[v][v] and all(mult[u][w] == mult[v][w] for w in range(n) if w != u and w != v)

    best: Edges | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = refine(colors)
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        split_cells = [c for c, s in sizes.items() if s > 1]
        if not split_cells:
            cert = tuple(sorted((min(colors[u], colors[v]), max(colors[u], colors[v])) for u, v in edges))
            if best is None or cert < best:
                best = cert
            return
        cell = min(split_cells)
        tried: list[int] = []
        for v in (v for v in range(n) if colors[v] == cell):
            if any(twins(v, t) for t in tried):
                continue
            tried.append(v)
            search([2 * c + (1 if c == cell and u != v else 0) for u, c in enumerate(colors)])

    search([0] * n)
    return n, best or ()


def connected_multigraphs(max_edges: int) -> dict[int, list[tuple[int, Edges]]]:
    """Canonical connected multigraphs (loops and parallel edges allowed) by edge count."""
    levels = {0: [(1, ())]}
    for m in range(1, max_edges + 1):
        found: set[tuple[int, Edges]] = set()
        for n, edges in levels[m - 1]:
            grown = [((v, v),) for v in range(n)]
            grown += [((u, v),) for u in range(n) for v in range(u + 1, n)]
            for new_edge, in grown:
                found.add(canonical_form(n, edges + (new_edge,)))
            for v in range(n):
                found.add(canonical_form(n + 1, edges + ((v, n),)))
        levels[m] = sorted(found, key=lambda g: (g[0], g[1]))
    return levels


@dataclass(frozen=True)
class CorpusEntry:
    graph: Multigraph

    @cached_property
    def cycle_matroid(self) -> BinaryMatroid:
        return cycle_matroid(self.graph)

    @cached_property
    def matroid(self) -> BinaryMatroid:
        """The bond matroid ``M*(G)``, the cographic member under test."""
        return dual(self.cycle_matroid).renamed(f"M*({self.graph.name})")


def _to_graph(name: str, n: int, edges: Edges) -> Multigraph:
    return Multigraph(name, n, tuple((u, v, f"e{i + 1}") for i, (u, v) in enumerate(edges)))


def bond_corpus(max_edges: int) -> list[CorpusEntry]:
    """One connected multigraph per cycle-matroid isomorphism class, up to ``max_edges`` edges."""
    entries: list[CorpusEntry] = []
    for m, graphs in connected_multigraphs(max_edges).items():
        buckets: dict[tuple, list[BinaryMatroid]] = {}
        for k, (n, edges) in enumerate(graphs):
            entry = CorpusEntry(_to_graph(f"g{m}_{k}", n, edges))
            M = entry.cycle_matroid
            bucket = buckets.setdefault(M.signature, [])
            if any(is_isomorphic(M, other) is not None for other in bucket):
                continue
            bucket.append(M)
            entries.append(entry)
    return entries

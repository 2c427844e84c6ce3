"""Multigraphs, cycle matroids, and the named matroids used throughout.

Graph files are plain text: a header ``name n_vertices`` followed by one
``label u v`` line per edge (0-indexed vertices; ``u == v`` is a loop and a
repeated pair is a parallel edge).

Catalog names:

* ``F7``, ``F7*``: the Fano matroid and its dual.
* ``M(K5)``, ``M*(K5)``, ``M(K33)``, ``M*(K33)``.
* ``M(X)`` and ``M*(X)`` for every bundled graph ``X`` (``F1``..``F7``,
  ``G1``, ``G2``, ``Q1``..``Q9``, ``K5``, ``K33``).
* A bare graph name means its cycle matroid, except ``F7`` which is Fano;
  the graph drawn as F7 is ``M(F7)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .gf2 import Gf2Matrix
from .matroid import BinaryMatroid, FormatError, MatroidError, dual, from_columns, from_matrix, is_isomorphic

GRAPH_NAMES = tuple(
    [f"F{i}" for i in range(1, 8)] + ["G1", "G2"] + [f"Q{i}" for i in range(1, 10)] + ["K5", "K33"]
)


@dataclass(frozen=True)
class Multigraph:
    name: str
    vertices: int
    edges: tuple[tuple[int, int, str], ...]

    def __post_init__(self):
        seen = set()
        for u, v, label in self.edges:
            if not (0 <= u < self.vertices and 0 <= v < self.vertices):
                raise MatroidError(f"edge {label!r} uses a vertex outside 0..{self.vertices - 1}")
            if label in seen:
                raise MatroidError(f"duplicate edge label {label!r}")
            seen.add(label)

    @property
    def labels(self) -> list[str]:
        return [label for _, _, label in self.edges]

    def components(self) -> int:
        parent = list(range(self.vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = self.vertices
        for u, v, _ in self.edges:
            a, b = find(u), find(v)
            if a != b:
                parent[a] = b
                count -= 1
        return count


def cycle_matroid(G: Multigraph) -> BinaryMatroid:
    """Column matroid of the vertex-edge incidence matrix over GF(2)."""
    cols = [0 if u == v else (1 << u) | (1 << v) for u, v, _ in G.edges]
    return from_columns(G.labels, cols, G.vertices, f"M({G.name})" if G.name else "")


def bond_matroid(G: Multigraph) -> BinaryMatroid:
    return dual(cycle_matroid(G)).renamed(f"M*({G.name})" if G.name else "")


def load_graph(text: str) -> Multigraph:
    lines = [(i + 1, ln.split("#", 1)[0].strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln]
    if not lines:
        raise FormatError("empty graph file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise FormatError("header must be 'name n_vertices'", lineno)
    try:
        n = int(parts[1])
    except ValueError:
        raise FormatError("vertex count must be an integer", lineno) from None
    if n < 0:
        raise FormatError("vertex count must be non-negative", lineno)
    edges = []
    seen = set()
    for i, ln in lines[1:]:
        fields = ln.split()
        if len(fields) != 3:
            raise FormatError("edge line must be 'label u v'", i)
        label = fields[0]
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise FormatError("edge endpoints must be integers", i) from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex out of range 0..{n - 1}", i)
        if label in seen:
            raise FormatError(f"duplicate edge label {label!r}", i)
        seen.add(label)
        edges.append((u, v, label))
    return Multigraph(parts[0], n, tuple(edges))


def save_graph(G: Multigraph) -> str:
    """Normalized text form; each edge is written with its smaller endpoint first."""
    lines = [f"{G.name or 'G'} {G.vertices}"]
    lines += [f"{label} {min(u, v)} {max(u, v)}" for u, v, label in G.edges]
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def graph(name: str) -> Multigraph:
    if name not in GRAPH_NAMES:
        raise KeyError(f"unknown graph {name!r}")
    text = resources.files("matlift").joinpath("data").joinpath(f"{name}.graph").read_text()
    return load_graph(text)


def fano() -> BinaryMatroid:
    m = Gf2Matrix.from_strings(["1001101", "0101011", "0010111"])
    return from_matrix("abcdefg", m, "F7")


@lru_cache(maxsize=None)
def named(name: str) -> BinaryMatroid:
    """Look up a catalog matroid by name (see the module docstring)."""
    if name == "F7":
        return fano()
    if name == "F7*":
        return dual(fano()).renamed("F7*")
    if name.startswith("M*(") and name.endswith(")"):
        return bond_matroid(graph(name[3:-1]))
    if name.startswith("M(") and name.endswith(")"):
        return cycle_matroid(graph(name[2:-1]))
    if name in GRAPH_NAMES:
        return cycle_matroid(graph(name))
    raise KeyError(f"unknown catalog matroid {name!r}")


def catalog_names() -> list[str]:
    names = ["F7", "F7*"]
    for g in GRAPH_NAMES:
        names += [f"M({g})", f"M*({g})"]
    return names


def identify(M: BinaryMatroid, names: list[str] | None = None) -> str | None:
    """Name of the first catalog matroid isomorphic to ``M``, if any."""
    for name in names or catalog_names():
        candidate = named(name)
        if candidate.quick_signature == M.quick_signature and is_isomorphic(M, candidate) is not None:
            return name
    return None

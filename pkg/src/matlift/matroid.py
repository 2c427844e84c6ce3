"""Binary matroids as column matroids of GF(2) matrices.

A :class:`BinaryMatroid` stores the reduced row-echelon form of its
representation. The row space of a binary representation is the cocycle space
of the matroid, so two matroids on the same labels in the same order are equal
exactly when their stored matrices are equal.
"""

from __future__ import annotations

import os
from collections import Counter
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .gf2 import Gf2Matrix, rank_of_vectors, rref, select_bits, span

DEFAULT_MAX_GROUNDSET = 20


class MatroidError(ValueError):
    """Base class for errors raised by matroid operations."""


class UnknownElementError(MatroidError):
    pass


class EnumerationBoundError(MatroidError):
    """The ground set is larger than the configured enumeration bound."""


class FormatError(MatroidError):
    """A matroid or graph text file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def enumeration_bound() -> int:
    """Largest ground set the exhaustive searches accept (``MATLIFT_MAX_GROUNDSET``)."""
    raw = os.environ.get("MATLIFT_MAX_GROUNDSET")
    return int(raw) if raw else DEFAULT_MAX_GROUNDSET


def check_bound(M: BinaryMatroid, extra: int = 0) -> None:
    bound = enumeration_bound()
    if M.size + extra > bound:
        raise EnumerationBoundError(
            f"ground set of {M.size + extra} elements exceeds the enumeration bound {bound}"
        )


class BinaryMatroid:
    """A binary matroid with ordered, distinct string labels.

    ``rep`` is always in reduced row-echelon form with full row rank. Instances
    are treated as immutable; derived data (columns, circuits) is cached.
    """

    def __init__(self, labels: Sequence[str], rep: Gf2Matrix, name: str = ""):
        self.labels = tuple(labels)
        self.rep = rep
        self.name = name

    def __repr__(self):
        title = f"{self.name!r}, " if self.name else ""
        return f"BinaryMatroid({title}rank={self.rank}, size={self.size})"

    def __eq__(self, other):
        if not isinstance(other, BinaryMatroid):
            return NotImplemented
        return self.labels == other.labels and self.rep == other.rep

    def __hash__(self):
        return hash((self.labels, self.rep.rows))

    @property
    def rank(self) -> int:
        return self.rep.n_rows

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def ground_set(self) -> frozenset[str]:
        return frozenset(self.labels)

    @cached_property
    def index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @cached_property
    def cols(self) -> tuple[int, ...]:
        return tuple(self.rep.columns())

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def mask(self, subset: Iterable[str]) -> int:
        m = 0
        for e in subset:
            try:
                m |= 1 << self.index[e]
            except KeyError:
                raise UnknownElementError(f"{e!r} is not an element of this matroid") from None
        return m

    def subset(self, mask: int) -> frozenset[str]:
        return frozenset(self.labels[i] for i in _bits(mask))

    def positions(self, subset: Iterable[str]) -> list[int]:
        return list(_bits(self.mask(subset)))

    def rank_of_mask(self, mask: int) -> int:
        cols = self.cols
        return rank_of_vectors(cols[i] for i in _bits(mask))

    def renamed(self, name: str) -> BinaryMatroid:
        return BinaryMatroid(self.labels, self.rep, name)

    def relabeled(self, mapping: Mapping[str, str]) -> BinaryMatroid:
        labels = [mapping.get(e, e) for e in self.labels]
        _check_labels(labels)
        return BinaryMatroid(labels, self.rep, self.name)

    def reordered(self, labels: Sequence[str]) -> BinaryMatroid:
        """The same matroid with its columns listed in the order ``labels``."""
        if sorted(labels) != sorted(self.labels):
            raise UnknownElementError("reordering must use exactly the existing labels")
        return _standardize(labels, self.rep.select_columns([self.index[e] for e in labels]).rows, self.name)

    @cached_property
    def cycle_basis(self) -> tuple[int, ...]:
        """Element masks spanning the cycle space (null space of ``rep``)."""
        return _null_space(self.rep)

    @cached_property
    def circuit_masks(self) -> tuple[int, ...]:
        check_bound(self)
        return _minimal_supports(span(self.cycle_basis)[1:])

    @cached_property
    def cocircuit_masks(self) -> tuple[int, ...]:
        check_bound(self)
        return _minimal_supports(span(self.rep.rows)[1:])

    @cached_property
    def loop_mask(self) -> int:
        return sum(1 << i for i, c in enumerate(self.cols) if c == 0)

    @cached_property
    def coloop_mask(self) -> int:
        # e is a coloop iff the unit vector at e lies in the row space
        r = self.rank
        return sum(1 << i for i in range(self.size) if self.rank_of_mask(self.full_mask & ~(1 << i)) < r)

    @cached_property
    def element_invariants(self) -> tuple[tuple, ...]:
        """Per-element isomorphism invariants used to prune searches."""
        n = self.size
        circ = [[0] * (n + 1) for _ in range(n)]
        for c in self.circuit_masks:
            k = c.bit_count()
            for i in _bits(c):
                circ[i][k] += 1
        cocirc = [[0] * (n + 1) for _ in range(n)]
        for c in self.cocircuit_masks:
            k = c.bit_count()
            for i in _bits(c):
                cocirc[i][k] += 1
        return tuple(
            ((self.loop_mask >> i) & 1, (self.coloop_mask >> i) & 1, tuple(circ[i]), tuple(cocirc[i]))
            for i in range(n)
        )

    @cached_property
    def quick_signature(self) -> tuple:
        """Cheap invariant: size, rank, loop count and parallel-class sizes."""
        counts = Counter(c for c in self.cols if c)
        return (self.size, self.rank, self.loop_mask.bit_count(), tuple(sorted(counts.values())))

    @cached_property
    def signature(self) -> tuple:
        return self.quick_signature + (tuple(sorted(self.element_invariants)),)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_labels(labels: Sequence[str]) -> None:
    seen = set()
    for e in labels:
        if not isinstance(e, str) or not e or any(ch.isspace() for ch in e):
            raise MatroidError(f"invalid element label {e!r}")
        if e in seen:
            raise MatroidError(f"duplicate element label {e!r}")
        seen.add(e)


def _standardize(labels: Sequence[str], rows: Iterable[int], name: str = "") -> BinaryMatroid:
    n = len(labels)
    reduced, _ = rref(Gf2Matrix.from_rows(rows, n))
    return BinaryMatroid(labels, reduced, name)


def _null_space(rep: Gf2Matrix) -> tuple[int, ...]:
    # rep is in RREF, so each row's pivot is its lowest set bit; every non-pivot
    # column q yields q plus the pivots of the rows that meet q
    pivots = [(r & -r).bit_length() - 1 for r in rep.rows]
    pivot_set = 0
    for p in pivots:
        pivot_set |= 1 << p
    basis = []
    for q in range(rep.n_cols):
        if (pivot_set >> q) & 1:
            continue
        v = 1 << q
        for row, p in zip(rep.rows, pivots):
            if (row >> q) & 1:
                v |= 1 << p
        basis.append(v)
    return tuple(basis)


def _minimal_supports(vectors: Iterable[int]) -> tuple[int, ...]:
    """Inclusion-minimal nonzero supports, sorted by size then value.

    In a binary space every vector is a disjoint union of minimal ones, so a
    vector is minimal iff no smaller minimal vector is contained in it.
    """
    found: list[int] = []
    for v in sorted(set(vectors), key=lambda x: (x.bit_count(), x)):
        if v and not any(c & v == c for c in found):
            found.append(v)
    return tuple(found)


def from_matrix(labels: Sequence[str], m: Gf2Matrix, name: str = "") -> BinaryMatroid:
    labels = list(labels)
    if len(labels) != m.n_cols:
        raise MatroidError(f"{len(labels)} labels for a matrix with {m.n_cols} columns")
    _check_labels(labels)
    return _standardize(labels, m.rows, name)


def from_columns(labels: Sequence[str], columns: Sequence[int], n_rows: int, name: str = "") -> BinaryMatroid:
    """Build from packed columns (bit ``i`` of a column is its entry in row ``i``)."""
    labels = list(labels)
    if len(labels) != len(columns):
        raise MatroidError(f"{len(labels)} labels for {len(columns)} columns")
    _check_labels(labels)
    rows = [sum(((c >> i) & 1) << j for j, c in enumerate(columns)) for i in range(n_rows)]
    return _standardize(labels, rows, name)


def subset_rank(M: BinaryMatroid, A: Iterable[str]) -> int:
    return M.rank_of_mask(M.mask(A))


def delete(M: BinaryMatroid, A: Iterable[str]) -> BinaryMatroid:
    return delete_mask(M, M.mask(A))


def contract(M: BinaryMatroid, A: Iterable[str]) -> BinaryMatroid:
    return contract_mask(M, M.mask(A))


def delete_mask(M: BinaryMatroid, mask: int) -> BinaryMatroid:
    if not mask:
        return M
    keep = [i for i in range(M.size) if not (mask >> i) & 1]
    return _standardize([M.labels[i] for i in keep], (select_bits(r, keep) for r in M.rep.rows))


def contract_mask(M: BinaryMatroid, mask: int) -> BinaryMatroid:
    """Contract the elements of ``mask``; contracting a loop deletes it.

    Reducing with the contracted columns listed first leaves every row whose
    pivot falls outside them with zeros on them; those rows represent the
    contraction.
    """
    if not mask:
        return M
    first = list(_bits(mask))
    keep = [i for i in range(M.size) if not (mask >> i) & 1]
    reduced, pivots = rref(Gf2Matrix.from_rows((select_bits(r, first + keep) for r in M.rep.rows), M.size))
    k = len(first)
    rows = tuple(r >> k for r, p in zip(reduced.rows, pivots) if p >= k)
    return BinaryMatroid([M.labels[i] for i in keep], Gf2Matrix.from_rows(rows, len(keep)))


def minor(M: BinaryMatroid, deleted: Iterable[str], contracted: Iterable[str]) -> BinaryMatroid:
    """``M \\ deleted / contracted`` (the two sets must be disjoint)."""
    d, c = M.mask(deleted), M.mask(contracted)
    if d & c:
        raise MatroidError("deleted and contracted sets overlap")
    return delete(contract_mask(M, c), M.subset(d))


def dual(M: BinaryMatroid) -> BinaryMatroid:
    return _standardize(M.labels, M.cycle_basis, f"{M.name}*" if M.name else "")


def loops(M: BinaryMatroid) -> frozenset[str]:
    return M.subset(M.loop_mask)


def coloops(M: BinaryMatroid) -> frozenset[str]:
    return M.subset(M.coloop_mask)


def _sorted_sets(M: BinaryMatroid, masks: Iterable[int]) -> list[frozenset[str]]:
    return [M.subset(m) for m in masks]


def circuits(M: BinaryMatroid) -> list[frozenset[str]]:
    """All circuits, smallest first."""
    return _sorted_sets(M, M.circuit_masks)


def cocircuits(M: BinaryMatroid) -> list[frozenset[str]]:
    return _sorted_sets(M, M.cocircuit_masks)


def is_eulerian(M: BinaryMatroid) -> bool:
    """A binary matroid is Eulerian iff every cocircuit has even size."""
    return all(c.bit_count() % 2 == 0 for c in M.cocircuit_masks)


def odd_cocircuits(M: BinaryMatroid) -> list[frozenset[str]]:
    return _sorted_sets(M, (c for c in M.cocircuit_masks if c.bit_count() % 2))


def circuit_partition(M: BinaryMatroid) -> list[frozenset[str]] | None:
    """Partition the ground set into disjoint circuits by exact-cover search, or None."""
    check_bound(M)
    by_element: dict[int, list[int]] = {i: [] for i in range(M.size)}
    for c in M.circuit_masks:
        by_element[(c & -c).bit_length() - 1].append(c)

    def cover(remaining: int) -> list[int] | None:
        if not remaining:
            return []
        first = (remaining & -remaining).bit_length() - 1
        # circuits are indexed by their lowest element, so the lowest uncovered
        # element must be the lowest element of the circuit that covers it
        for c in by_element[first]:
            if c & remaining == c:
                rest = cover(remaining & ~c)
                if rest is not None:
                    return [c] + rest
        return None

    found = cover(M.full_mask)
    return None if found is None else _sorted_sets(M, found)


def _search_order(M: BinaryMatroid, classes: dict[tuple, list[int]]) -> list[int]:
    """Order elements so that circuits close early; rare invariant classes first."""
    inv = M.element_invariants
    circs = M.circuit_masks
    order: list[int] = []
    chosen = 0
    remaining = set(range(M.size))
    while remaining:
        def score(i):
            closed = sum(1 for c in circs if (c >> i) & 1 and c & ~(chosen | (1 << i)) == 0)
            touching = sum(1 for c in circs if (c >> i) & 1 and c & chosen)
            return (-closed, -touching, len(classes[inv[i]]), i)
        best = min(remaining, key=score)
        order.append(best)
        chosen |= 1 << best
        remaining.remove(best)
    return order


def is_isomorphic(M: BinaryMatroid, N: BinaryMatroid) -> dict[str, str] | None:
    """A label bijection ``E(M) -> E(N)`` that maps circuits onto circuits, or None."""
    if M.quick_signature != N.quick_signature:
        return None
    check_bound(M)
    if len(M.circuit_masks) != len(N.circuit_masks) or M.signature != N.signature:
        return None

    n = M.size
    inv_m, inv_n = M.element_invariants, N.element_invariants
    classes: dict[tuple, list[int]] = {}
    for j in range(n):
        classes.setdefault(inv_n[j], []).append(j)
    order = _search_order(M, classes)
    depth_of = {e: d for d, e in enumerate(order)}
    closing: list[list[list[int]]] = [[] for _ in range(n)]
    for c in M.circuit_masks:
        members = list(_bits(c))
        closing[max(depth_of[i] for i in members)].append(members)
    targets = set(N.circuit_masks)
    image = [0] * n

    def extend(depth: int, used: int) -> bool:
        if depth == n:
            return True
        e = order[depth]
        for f in classes[inv_m[e]]:
            if (used >> f) & 1:
                continue
            image[e] = f
            if all(sum(1 << image[i] for i in members) in targets for members in closing[depth]):
                if extend(depth + 1, used | (1 << f)):
                    return True
        return False

    if not extend(0, 0):
        return None
    return {M.labels[i]: N.labels[image[i]] for i in range(n)}


def is_isomorphism(M: BinaryMatroid, N: BinaryMatroid, mapping: Mapping[str, str]) -> bool:
    """Check a proposed bijection by comparing standardized representations."""
    if M.size != N.size or set(mapping) != M.ground_set or set(mapping.values()) != N.ground_set:
        return False
    image = M.relabeled(mapping)
    return image.reordered(N.labels).rep == N.rep


def dumps_matroid(M: BinaryMatroid, name: str | None = None) -> str:
    name = name or M.name or "M"
    if any(ch.isspace() for ch in name):
        raise MatroidError(f"matroid name {name!r} contains whitespace")
    lines = [f"{name} {M.rank} {M.size}", " ".join(M.labels)]
    lines += M.rep.to_strings()
    return "\n".join(lines) + "\n"


def loads_matroid(text: str) -> BinaryMatroid:
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty matroid file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3:
        raise FormatError("header must be 'name rank n_elements'", lineno)
    name = parts[0]
    try:
        r, n = int(parts[1]), int(parts[2])
    except ValueError:
        raise FormatError("rank and size must be integers", lineno) from None
    if n == 0:
        labels: list[str] = []
        body = lines[1:]
        if body and not set(body[0][1]) <= {"0", "1"}:
            raise FormatError("labels given for an empty ground set", body[0][0])
    else:
        if len(lines) < 2:
            raise FormatError("missing label line", lineno)
        labels = lines[1][1].split()
        body = lines[2:]
        if len(labels) != n:
            raise FormatError(f"expected {n} labels, got {len(labels)}", lines[1][0])
    if len(body) != r:
        raise FormatError(f"expected {r} matrix rows, got {len(body)}", body[0][0] if body else lineno)
    rows = []
    for i, ln in body:
        if len(ln) != n or not set(ln) <= {"0", "1"}:
            raise FormatError(f"row must be {n} characters of 0/1", i)
        rows.append(ln)
    try:
        M = from_matrix(labels, Gf2Matrix.from_strings(rows, n), name)
    except MatroidError as exc:
        raise FormatError(str(exc), lines[1][0] if n else lineno) from None
    if M.rank != r:
        raise FormatError(f"rows have rank {M.rank}, header says {r}", lineno)
    return M


def all_subsets(M: BinaryMatroid, size: int) -> Iterator[int]:
    """Masks of ``size``-subsets in lexicographic order of label position."""
    for combo in combinations(range(M.size), size):
        yield sum(1 << i for i in combo)

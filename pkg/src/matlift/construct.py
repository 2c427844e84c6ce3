"""Splitting, elementary lifts and quotients, single-element (co)extensions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Union

from .gf2 import Gf2Matrix, unpack
from .matroid import (
    BinaryMatroid,
    MatroidError,
    _standardize,
    check_bound,
    contract_mask,
    dual,
    is_isomorphic,
)

COLOOP = "coloop"

ExtensionColumn = Union[tuple[int, ...], str]


@dataclass(frozen=True)
class QuotientRecord:
    """One elementary quotient ``N / a`` where ``N \\ a`` is the source matroid.

    ``extension_column`` is the column added for ``a`` (over the source's
    standard rows) or ``COLOOP``; the all-zero column makes ``a`` a loop.
    """

    extension_column: ExtensionColumn
    quotient: BinaryMatroid
    is_graphic: bool
    catalog_match: str | None = None

    @property
    def is_loop_or_coloop(self) -> bool:
        return self.extension_column == COLOOP or not any(self.extension_column)


def fresh_labels(existing: Iterable[str], count: int, prefix: str = "z") -> list[str]:
    """``z1, z2, ...`` skipping anything already in use."""
    taken = set(existing)
    out: list[str] = []
    i = 1
    while len(out) < count:
        label = f"{prefix}{i}"
        if label not in taken:
            out.append(label)
        i += 1
    return out


def split(M: BinaryMatroid, S: Iterable[str]) -> BinaryMatroid:
    """The splitting matroid ``M_S``: append the indicator row of ``S``."""
    return split_mask(M, M.mask(S))


def split_mask(M: BinaryMatroid, mask: int) -> BinaryMatroid:
    return _standardize(M.labels, M.rep.rows + (mask,))


def lift_coextension(M: BinaryMatroid, S: Iterable[str]) -> tuple[BinaryMatroid, str]:
    """The matroid ``Q`` with ``Q / z = M`` and ``Q \\ z = M_S``.

    ``Q`` is the splitting matrix plus a column ``z`` that is 1 only in the
    appended row. Returns ``(Q, z)``.
    """
    mask = M.mask(S)
    (z,) = fresh_labels(M.labels, 1)
    n = M.size
    rows = list(M.rep.rows) + [mask | (1 << n)]
    return _standardize(M.labels + (z,), rows), z


def elementary_lifts(M: BinaryMatroid) -> Iterator[tuple[frozenset[str], BinaryMatroid]]:
    """``(S, M_S)`` for every subset ``S``, by size then lexicographically."""
    for k in range(M.size + 1):
        for combo in combinations(range(M.size), k):
            mask = sum(1 << i for i in combo)
            yield M.subset(mask), split_mask(M, mask)


def _extend(M: BinaryMatroid, column: ExtensionColumn, label: str) -> BinaryMatroid:
    n = M.size
    if column == COLOOP:
        rows = list(M.rep.rows) + [1 << n]
        return BinaryMatroid(M.labels + (label,), Gf2Matrix.from_rows(rows, n + 1))
    rows = [row | (bit << n) for row, bit in zip(M.rep.rows, column)]
    return _standardize(M.labels + (label,), rows)


def extension_columns(M: BinaryMatroid) -> list[ExtensionColumn]:
    """All ``2**rank + 1`` extension columns: zero (loop) first, coloop last."""
    return [tuple(unpack(v, M.rank)) for v in range(1 << M.rank)] + [COLOOP]


def single_extensions(M: BinaryMatroid, label: str | None = None) -> Iterator[BinaryMatroid]:
    """Every binary ``N`` with ``N \\ a = M``, one per extension column."""
    label = label or fresh_labels(M.labels, 1)[0]
    for column in extension_columns(M):
        yield _extend(M, column, label)


def dedupe(matroids: Iterable[BinaryMatroid]) -> list[BinaryMatroid]:
    """Keep the first member of each isomorphism class, in input order."""
    kept: dict[tuple, list[BinaryMatroid]] = {}
    out = []
    for M in matroids:
        bucket = kept.setdefault(M.signature, [])
        if not any(is_isomorphic(M, other) is not None for other in bucket):
            bucket.append(M)
            out.append(M)
    return out


def elementary_quotients(
    M: BinaryMatroid, dedupe_isomorphic: bool = False, match_catalog: bool = True
) -> Iterator[QuotientRecord]:
    """Quotients ``N / a`` over all single extensions ``N`` of ``M``.

    Loop and coloop extensions give ``M`` itself. Graphic verdicts are
    computed eagerly; with ``dedupe_isomorphic`` only the first record of each
    isomorphism class is yielded.
    """
    from .recognition import is_graphic

    (label,) = fresh_labels(M.labels, 1)
    seen: dict[tuple, list[BinaryMatroid]] = {}
    last = 1 << M.size
    for column in extension_columns(M):
        N = _extend(M, column, label)
        Q = contract_mask(N, last)
        if dedupe_isomorphic:
            bucket = seen.setdefault(Q.signature, [])
            if any(is_isomorphic(Q, other) is not None for other in bucket):
                continue
            bucket.append(Q)
        match = None
        if match_catalog:
            from .catalog import identify

            match = identify(Q)
        yield QuotientRecord(column, Q, bool(is_graphic(Q)), match)


def coextensions(M: BinaryMatroid, n: int, dedupe_isomorphic: bool = False) -> Iterator[BinaryMatroid]:
    """Every ``P`` on ``E(M)`` plus ``n`` fresh elements with ``P / fresh = M``.

    Generated as duals of iterated single extensions of the dual.
    """
    if n < 0:
        raise MatroidError("number of new elements must be non-negative")
    check_bound(M, n)
    fresh = fresh_labels(M.labels, n)
    layer = [dual(M)]
    for label in fresh:
        nxt = [N for D in layer for N in single_extensions(D, label)]
        layer = dedupe(nxt) if dedupe_isomorphic else nxt
    for D in layer:
        yield dual(D)

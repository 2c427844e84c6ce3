"""Minor containment, excluded-minor recognition, and splitting classes ``C_k``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .construct import split_mask
from .gf2 import Gf2Matrix
from .matroid import (
    BinaryMatroid,
    MatroidError,
    check_bound,
    contract_mask,
    delete_mask,
    is_isomorphic,
    minor,
)

GRAPHIC_EXCLUDED = ("F7*", "M*(K33)", "F7", "M*(K5)")
COGRAPHIC_EXCLUDED = ("F7", "M(K5)", "F7*", "M(K33)")


class NotCographicError(MatroidError):
    def __init__(self, result: RecognitionResult):
        self.result = result
        super().__init__(f"matroid is not cographic (contains {result.excluded})")


@dataclass(frozen=True)
class MinorWitness:
    """``M \\ deleted / contracted`` is isomorphic to the target."""

    deleted: frozenset[str]
    contracted: frozenset[str]

    def apply(self, M: BinaryMatroid) -> BinaryMatroid:
        return minor(M, self.deleted, self.contracted)

    def as_dict(self) -> dict:
        return {"deleted": sorted(self.deleted), "contracted": sorted(self.contracted)}


@dataclass(frozen=True)
class RecognitionResult:
    """Outcome of an excluded-minor test; truthy when no excluded minor was found."""

    holds: bool
    excluded: str | None = None
    witness: MinorWitness | None = None

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class SplitWitness:
    """A set ``S`` whose splitting matroid contains the excluded minor ``excluded``."""

    S: frozenset[str]
    excluded: str
    witness: MinorWitness


def _find_minor(M: BinaryMatroid, T: BinaryMatroid) -> tuple[int, int] | None:
    """Search (deleted, contracted) masks in normal form: contract an independent
    set, then delete a coindependent set of the contraction."""
    k_con = M.rank - T.rank
    k_del = M.size - T.size - k_con
    if k_con < 0 or k_del < 0:
        return None
    check_bound(M)
    t_coloops = T.coloop_mask.bit_count()
    for con in combinations(range(M.size), k_con):
        con_mask = sum(1 << i for i in con)
        if M.rank_of_mask(con_mask) != k_con:
            continue
        C = contract_mask(M, con_mask)
        # deletion never removes a coloop without dropping rank
        if C.coloop_mask.bit_count() > t_coloops:
            continue
        kept = [i for i in range(M.size) if not (con_mask >> i) & 1]
        for dele in combinations(range(C.size), k_del):
            del_mask = sum(1 << i for i in dele)
            if C.rank_of_mask(C.full_mask & ~del_mask) != T.rank:
                continue
            D = delete_mask(C, del_mask)
            if D.quick_signature != T.quick_signature:
                continue
            if is_isomorphic(D, T) is not None:
                return sum(1 << kept[i] for i in dele), con_mask
    return None


def has_minor(M: BinaryMatroid, T: BinaryMatroid) -> MinorWitness | None:
    """A witness that ``T`` is isomorphic to a minor of ``M``, or None.

    Contraction sets are independent and tried in lexicographic order, so the
    witness returned is deterministic given the label order.
    """
    found = _find_minor(M, T)
    if found is None:
        return None
    d, c = found
    return MinorWitness(M.subset(d), M.subset(c))


@lru_cache(maxsize=200_000)
def _excluded_search(n_cols: int, rows: tuple[int, ...], family: tuple[str, ...]):
    from .catalog import named

    M = BinaryMatroid([str(i) for i in range(n_cols)], Gf2Matrix(len(rows), n_cols, rows))
    for name in family:
        found = _find_minor(M, named(name))
        if found is not None:
            return name, found
    return None


def _recognize(M: BinaryMatroid, family: tuple[str, ...]) -> RecognitionResult:
    check_bound(M)
    found = _excluded_search(M.size, M.rep.rows, family)
    if found is None:
        return RecognitionResult(True)
    name, (d, c) = found
    return RecognitionResult(False, name, MinorWitness(M.subset(d), M.subset(c)))


def is_graphic(M: BinaryMatroid) -> RecognitionResult:
    """Graphic iff none of F7*, M*(K3,3), F7, M*(K5) is a minor."""
    return _recognize(M, GRAPHIC_EXCLUDED)


def is_cographic(M: BinaryMatroid) -> RecognitionResult:
    """Cographic iff none of F7, M(K5), F7*, M(K3,3) is a minor."""
    return _recognize(M, COGRAPHIC_EXCLUDED)


def _require_cographic(M: BinaryMatroid) -> None:
    verdict = is_cographic(M)
    if not verdict:
        raise NotCographicError(verdict)


def split_witness(M: BinaryMatroid, k: int) -> SplitWitness | None:
    """First ``k``-set (lexicographic) whose splitting is not graphic; no precondition."""
    if k < 0:
        raise MatroidError("k must be non-negative")
    for combo in combinations(range(M.size), k):
        mask = sum(1 << i for i in combo)
        verdict = is_graphic(split_mask(M, mask))
        if not verdict:
            return SplitWitness(M.subset(mask), verdict.excluded, verdict.witness)
    return None


def class_Ck(M: BinaryMatroid, k: int) -> SplitWitness | None:
    """Membership of a cographic matroid in ``C_k``.

    Returns None when every ``k``-element splitting is graphic (``M`` is a
    member), otherwise the lexicographically first failing set with its
    certificate. Raises :class:`NotCographicError` for non-cographic input.
    """
    _require_cographic(M)
    if k > M.size:
        raise MatroidError(f"k={k} exceeds the ground set size {M.size}")
    return split_witness(M, k)


def in_class(M: BinaryMatroid, k: int) -> bool:
    return M.size < k or class_Ck(M, k) is None


def single_element_minors(M: BinaryMatroid) -> Iterable[tuple[str, str, BinaryMatroid]]:
    """``('delete'|'contract', e, minor)`` for every element."""
    for i, e in enumerate(M.labels):
        yield "delete", e, delete_mask(M, 1 << i)
        yield "contract", e, contract_mask(M, 1 << i)


def is_minimal_excluded(M: BinaryMatroid, k: int) -> bool:
    """``M`` is outside ``C_k`` while each cographic single-element minor is inside."""
    if class_Ck(M, k) is None:
        return False
    for _, _, N in single_element_minors(M):
        if is_cographic(N) and not in_class(N, k):
            return False
    return True


from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from matlift.catalog import catalog_names, named
from matlift.gf2 import Gf2Matrix
from matlift.matroid import (
    EnumerationBoundError,
    FormatError,
    MatroidError,
    UnknownElementError,
    check_bound,
    circuit_partition,
    circuits,
    cocircuits,
    coloops,
    contract,
    delete,
    dual,
    dumps_matroid,
    from_matrix,
    is_eulerian,
    is_isomorphic,
    is_isomorphism,
    loads_matroid,
    loops,
    minor,
    odd_cocircuits,
    subset_rank,
)

from oracles import brute_isomorphic, brute_rank, dependent
from strategies import binary_matroids


@settings(max_examples=120, deadline=None)
@given(binary_matroids())
def test_subset_rank_matches_brute_force_independence(M):
    for r in range(M.size + 1):
        for A in combinations(M.labels, r):
            cols = [M.cols[M.index[a]] for a in A]
            assert subset_rank(M, A) == brute_rank(cols)


@settings(max_examples=80, deadline=None)
@given(binary_matroids(max_cols=7))
def test_circuits_are_minimal_dependent_sets(M):
    expected = set()
    for r in range(1, M.size + 1):
        for A in combinations(M.labels, r):
            cols = [M.cols[M.index[a]] for a in A]
            if dependent(cols) and not any(c <= set(A) for c in expected):
                expected.add(frozenset(A))
    assert set(circuits(M)) == expected
    assert set(cocircuits(M)) == set(circuits(dual(M)))


@settings(max_examples=120, deadline=None)
@given(binary_matroids())
def test_dual_involution_and_rank(M):
    assert dual(dual(M)) == M
    assert dual(M).rank == M.size - M.rank


@settings(max_examples=120, deadline=None)
@given(binary_matroids(min_cols=1))
def test_delete_contract_duality(M):
    e = M.labels[0]
    assert dual(delete(M, [e])) == contract(dual(M), [e])
    assert dual(contract(M, [e])) == delete(dual(M), [e])


@settings(max_examples=80, deadline=None)
@given(binary_matroids(min_cols=2))
def test_contraction_rank_formula(M):
    e = M.labels[0]
    N = contract(M, [e])
    rest = M.labels[1:]
    for r in range(len(rest) + 1):
        for A in combinations(rest, r):
            assert subset_rank(N, A) == subset_rank(M, (*A, e)) - subset_rank(M, [e])


def test_dual_and_minor_duality_over_catalog():
    for name in catalog_names():
        M = named(name)
        assert dual(dual(M)) == M
        for e in M.labels:
            assert dual(delete(M, [e])) == contract(dual(M), [e])
            assert dual(contract(M, [e])) == delete(dual(M), [e])


def test_loops_and_coloops():
    m = Gf2Matrix.from_strings(["1010", "0110"])
    M = from_matrix("abcd", m)
    assert loops(M) == {"d"}
    assert coloops(M) == set()
    assert coloops(delete(M, ["c"])) == {"a", "b"}
    assert loops(contract(M, ["a"])) == {"d"}


def test_unknown_elements_and_bad_labels():
    M = named("F7")
    with pytest.raises(UnknownElementError):
        delete(M, ["zz"])
    with pytest.raises(MatroidError):
        minor(M, ["a"], ["a"])
    with pytest.raises(MatroidError):
        from_matrix(["a", "a"], Gf2Matrix.identity(2))


def test_enumeration_bound(monkeypatch):
    monkeypatch.setenv("MATLIFT_MAX_GROUNDSET", "5")
    with pytest.raises(EnumerationBoundError):
        check_bound(named("F7"))


def test_fano_structure():
    F7 = named("F7")
    sizes = sorted(len(c) for c in circuits(F7))
    assert sizes == [3] * 7 + [4] * 7
    assert is_eulerian(F7)
    assert not is_eulerian(named("F7*"))


@settings(max_examples=60, deadline=None)
@given(binary_matroids(max_cols=7))
def test_eulerian_matches_circuit_partition(M):
    assert is_eulerian(M) == (circuit_partition(M) is not None)
    assert is_eulerian(M) == (not odd_cocircuits(M))


@settings(max_examples=60, deadline=None)
@given(binary_matroids(max_cols=6))
def test_isomorphism_finds_relabelings(M):
    rng = random.Random(M.size * 7919 + M.rank)
    order = list(M.labels)
    rng.shuffle(order)
    mapping = {a: f"y{i}" for i, a in enumerate(order)}
    N = M.relabeled(mapping).reordered(sorted(mapping.values()))
    found = is_isomorphic(M, N)
    assert found is not None and is_isomorphism(M, N, found)


@settings(max_examples=40, deadline=None)
@given(binary_matroids(max_rows=3, max_cols=5), binary_matroids(max_rows=3, max_cols=5))
def test_isomorphism_matches_brute_force(M, N):
    assert (is_isomorphic(M, N) is not None) == brute_isomorphic(M, N)


def test_isomorphism_rejects_bad_mapping():
    F7 = named("F7")
    identity = {a: a for a in F7.labels}
    assert is_isomorphism(F7, F7, identity)
    swapped = dict(identity, a="b", b="a")
    assert not is_isomorphism(F7, F7, swapped)


@settings(max_examples=80, deadline=None)
@given(binary_matroids())
def test_format_roundtrip(M):
    assert loads_matroid(dumps_matroid(M, "T")) == M


@pytest.mark.parametrize(
    "text, line",
    [
        ("", None),
        ("M 1\n", 1),
        ("M 1 2\na b c\n10\n", 2),
        ("M 1 2\na b\n1x\n", 3),
        ("M 2 2\na b\n10\n", 3),
        ("M 2 2\na b\n10\n10\n", 1),
    ],
)
def test_format_errors_carry_line_numbers(text, line):
    with pytest.raises(FormatError) as info:
        loads_matroid(text)
    assert info.value.line == line

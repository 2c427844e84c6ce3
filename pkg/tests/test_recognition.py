from __future__ import annotations

import random

import pytest

from matlift.catalog import Multigraph, cycle_matroid, named
from matlift.construct import split
from matlift.gf2 import Gf2Matrix
from matlift.matroid import MatroidError, dual, from_matrix, is_isomorphic, minor
from matlift.recognition import (
    NotCographicError,
    class_Ck,
    has_minor,
    in_class,
    is_cographic,
    is_graphic,
    is_minimal_excluded,
    split_witness,
)

from oracles import brute_has_minor


def _triangle():
    return cycle_matroid(Multigraph("K3", 3, ((0, 1, "t1"), (1, 2, "t2"), (0, 2, "t3"))))


def _parallel_pair():
    return cycle_matroid(Multigraph("P", 2, ((0, 1, "p1"), (0, 1, "p2"))))


def _k4():
    edges = ((0, 1, "k1"), (0, 2, "k2"), (0, 3, "k3"), (1, 2, "k4"), (1, 3, "k5"), (2, 3, "k6"))
    return cycle_matroid(Multigraph("K4", 4, edges))


def _random_matroids(seed, count, max_cols):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(3, max_cols)
        r = rng.randint(1, 4)
        rows = [rng.getrandbits(n) for _ in range(r)]
        out.append(from_matrix([f"x{j}" for j in range(n)], Gf2Matrix.from_rows(rows, n)))
    return out


@pytest.mark.parametrize(
    "seed, target", [(1, _triangle()), (2, _parallel_pair()), (3, dual(_triangle()))], ids=["K3", "pair", "K3*"]
)
def test_has_minor_matches_brute_force(seed, target):
    for M in _random_matroids(seed, 25, 8):
        found = has_minor(M, target)
        assert (found is not None) == brute_has_minor(M, target, minor)
        if found is not None:
            assert is_isomorphic(found.apply(M), target) is not None


def test_has_minor_k4_matches_brute_force():
    K4 = _k4()
    for M in _random_matroids(4, 8, 8):
        assert (has_minor(M, K4) is not None) == brute_has_minor(M, K4, minor)


def test_recognition_table():
    assert not is_graphic(named("F7")) and not is_cographic(named("F7"))
    assert not is_graphic(named("F7*")) and not is_cographic(named("F7*"))
    for name in ("M(K5)", "M(K33)"):
        assert is_graphic(named(name)) and not is_cographic(named(name))
        assert is_cographic(dual(named(name))) and not is_graphic(dual(named(name)))


def test_negative_verdict_carries_replayable_witness():
    verdict = is_graphic(named("M*(K33)"))
    assert verdict.excluded == "M*(K33)"
    assert is_isomorphic(verdict.witness.apply(named("M*(K33)")), named("M*(K33)")) is not None
    F7_plus = split(named("M(K5)"), ["e1", "e2", "e3"])
    v = is_graphic(F7_plus)
    if not v:
        assert is_isomorphic(v.witness.apply(F7_plus), named(v.excluded)) is not None


def test_class_Ck_preconditions():
    with pytest.raises(NotCographicError):
        class_Ck(named("M(K5)"), 2)
    with pytest.raises(MatroidError):
        class_Ck(_triangle(), 4)
    assert in_class(_triangle(), 4)


def test_class_membership_of_small_examples():
    assert class_Ck(named("M*(K33)"), 3) is None
    witness = class_Ck(named("M*(K33)"), 2)
    assert witness is not None
    assert not is_graphic(split(named("M*(K33)"), witness.S))
    assert class_Ck(named("M(G1)"), 2) is not None


@pytest.mark.parametrize("name", ["M(G1)", "M(G2)"])
def test_G_graphs_are_minimal_outside_C2(name):
    assert is_minimal_excluded(named(name), 2)


def test_split_witness_is_lexicographically_first():
    M = named("M(F1)")
    w = split_witness(M, 3)
    assert w is not None
    order = {e: i for i, e in enumerate(M.labels)}
    key = sorted(order[e] for e in w.S)
    from itertools import combinations

    for combo in combinations(range(M.size), 3):
        if list(combo) == key:
            break
        assert is_graphic(split(M, [M.labels[i] for i in combo]))


def test_graphic_iff_dual_cographic_over_catalog():
    from matlift.catalog import catalog_names

    for name in catalog_names():
        M = named(name)
        assert bool(is_graphic(M)) == bool(is_cographic(dual(M)))


def test_every_small_multigraph_is_graphic_and_its_dual_cographic():
    from matlift.corpus import _to_graph, connected_multigraphs

    for m, graphs in connected_multigraphs(8).items():
        for i, (n, edges) in enumerate(graphs):
            M = cycle_matroid(_to_graph(f"g{m}_{i}", n, edges))
            assert is_graphic(M) and is_cographic(dual(M))


@pytest.mark.parametrize("k", [2, 3])
def test_membership_is_closed_under_cographic_minors(k):
    from matlift.corpus import bond_corpus
    from matlift.recognition import single_element_minors

    for entry in bond_corpus(6):
        M = entry.matroid
        if not in_class(M, k):
            continue
        for _, _, N in single_element_minors(M):
            if is_cographic(N):
                assert in_class(N, k)

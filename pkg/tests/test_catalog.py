from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matlift.catalog import (
    GRAPH_NAMES,
    Multigraph,
    bond_matroid,
    catalog_names,
    cycle_matroid,
    graph,
    identify,
    load_graph,
    named,
    save_graph,
)
from matlift.matroid import FormatError, dual, subset_rank

from oracles import forest_rank


@st.composite
def multigraphs(draw, max_vertices=5, max_edges=8):
    n = draw(st.integers(1, max_vertices))
    m = draw(st.integers(0, max_edges))
    ends = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), min_size=m, max_size=m))
    return Multigraph("G", n, tuple((u, v, f"e{i + 1}") for i, (u, v) in enumerate(ends)))


@settings(max_examples=120, deadline=None)
@given(multigraphs())
def test_cycle_matroid_rank_matches_spanning_forest(G):
    M = cycle_matroid(G)
    ends = {label: (u, v) for u, v, label in G.edges}
    assert M.rank == G.vertices - G.components()
    for r in range(len(ends) + 1):
        for A in combinations(sorted(ends), r):
            assert subset_rank(M, A) == forest_rank(G.vertices, [ends[a] for a in A])


@settings(max_examples=80, deadline=None)
@given(multigraphs())
def test_graph_text_roundtrip(G):
    H = load_graph(save_graph(G))
    assert cycle_matroid(H) == cycle_matroid(G)
    assert bond_matroid(H) == dual(cycle_matroid(G))


def test_graph_parse_errors():
    with pytest.raises(FormatError) as info:
        load_graph("G 2\ne1 0 5\n")
    assert info.value.line == 2
    with pytest.raises(FormatError):
        load_graph("G 2\ne1 0 1\ne1 1 0\n")
    assert load_graph("# comment\nG 2\ne1 0 1  # edge\n").edges == ((0, 1, "e1"),)


@pytest.mark.parametrize("name", GRAPH_NAMES)
def test_bundled_graphs_load(name):
    G = graph(name)
    assert G.components() == 1
    assert cycle_matroid(G).name == f"M({name})"


def test_named_sizes_and_ranks():
    assert (named("M(K5)").size, named("M(K5)").rank) == (10, 4)
    assert (named("M(K33)").size, named("M(K33)").rank) == (9, 5)
    assert (named("M*(K5)").rank, named("M*(K33)").rank) == (6, 4)
    assert (named("F7").rank, named("F7*").rank) == (3, 4)
    assert named("K5") == named("M(K5)")
    assert named("M(F7)") != named("F7")
    with pytest.raises(KeyError):
        named("nope")


def test_identify_finds_catalog_names():
    assert identify(dual(named("F7"))) == "F7*"
    assert identify(named("M(F1)"), ["M(Q1)"]) == "M(Q1)"
    assert identify(named("F7"), ["M(K5)"]) is None


def test_every_catalog_name_resolves():
    for name in catalog_names():
        assert named(name).size > 0

import json
import math
from importlib import resources

import networkx as nx
import pydot
import pytest

from zdlab import properties as P
from zdlab.builtins import boolean, residues
from zdlab.constructions import matrix, matrix_semiring
from zdlab.errors import InputError
from zdlab.search import corpus
from zdlab.structures import KINDS, SEMIGROUP, SEMIRING
from zdlab.zdgraph import (
    NOTIONS,
    build_graph,
    calibrate_connectivity_notion,
    calibrated_notion,
    connectivity,
    diameter,
    from_edges,
    to_dot,
)

M2B = matrix_semiring(boolean(), 2)


def test_boolean_graph_is_empty():
    G = build_graph(boolean())
    assert G.vertices == () and G.edges == []


def test_z4_graph_single_vertex():
    G = build_graph(residues(4))
    assert G.vertices == (2,) and G.edges == []
    assert diameter(G) == 0


def test_m2b_graph_contains_paper_edge():
    G = build_graph(M2B)
    A, Bm = M2B.index(matrix([[1, 0], [0, 0]])), M2B.index(matrix([[0, 0], [1, 1]]))
    assert (A, Bm) in G.edges


def test_edges_rederivable_and_vertices_match_proper_zero_divisors():
    for kind in KINDS:
        for S in corpus(kind, 3):
            G = build_graph(S)
            assert set(G.vertices) == set(P.zero_divisor_sets(S).proper)
            expected = {(s, t) for s in G.vertices for t in G.vertices if s != t and S.mul[s, t] == 0}
            assert set(G.edges) == expected


def test_connectivity_examples():
    empty = from_edges([], [])
    assert all(connectivity(empty, n) for n in NOTIONS)
    both = from_edges([1, 2], [(1, 2), (2, 1)])
    assert all(connectivity(both, n) for n in NOTIONS)
    one_way = from_edges([1, 2], [(1, 2)])
    assert connectivity(one_way, "weak") and connectivity(one_way, "semi")
    assert not connectivity(one_way, "strong")


def test_diameter_examples():
    assert diameter(from_edges([7], [])) == 0
    assert diameter(from_edges([1, 2, 3], [(1, 2), (2, 3), (3, 1)]), "strong") == 2
    assert math.isinf(diameter(from_edges([1, 2], []), "weak"))


def test_unknown_notion_rejected():
    with pytest.raises(InputError):
        diameter(from_edges([1, 2], [(1, 2)]), "medium")


def test_distances_agree_with_networkx():
    for S in corpus(SEMIGROUP, 4)[:60]:
        G = build_graph(S)
        if len(G.vertices) < 2:
            continue
        D = nx.DiGraph()
        D.add_nodes_from(G.vertices)
        D.add_edges_from(G.edges)
        strong = nx.is_strongly_connected(D)
        assert connectivity(G, "strong") == strong
        assert connectivity(G, "weak") == nx.is_weakly_connected(D)
        if strong:
            assert diameter(G, "strong") == nx.diameter(D)


def test_dot_empty_and_edge_format():
    assert to_dot(from_edges([], [])) == "digraph zd {\n}"
    assert '  "2" -> "3";' in to_dot(from_edges([2, 3], [(2, 3)])).splitlines()


def test_dot_parses_and_round_trips():
    G = build_graph(M2B)
    (parsed,) = pydot.graph_from_dot_data(to_dot(G))
    edges = {(int(e.get_source().strip('"')), int(e.get_destination().strip('"'))) for e in parsed.get_edges()}
    assert edges == set(G.edges)


def test_commutative_corpus_notions_agree():
    comm = [S for S in corpus(SEMIRING, 4) if S.is_commutative()]
    cal = calibrate_connectivity_notion(comm)
    rows = [cal["table"][n]["agree"] for n in NOTIONS]
    assert len(set(rows)) == 1


def test_single_structure_calibration_records_verdicts():
    cal = calibrate_connectivity_notion([M2B])
    assert cal["structures"] == 1
    ev = P.is_eversible(M2B).holds
    for n in NOTIONS:
        assert cal["table"][n]["agree"] == int(connectivity(build_graph(M2B), n) == ev)


def test_semigroup_calibration_has_agreeing_notion():
    cal = calibrate_connectivity_notion(corpus(SEMIGROUP, 4))
    assert "strong" in cal["notions"]


def test_shipped_calibration_file():
    data = json.loads(resources.files("zdlab.data").joinpath("calibration.json").read_text())
    assert data["default_notion"] == calibrated_notion() == "strong"
    assert data["default_notion"] in data["agreeing_notions"]
    row = data["table"][data["default_notion"]]
    assert row["agree"] == data["structures"] and row["max_diameter_when_connected"] <= 3

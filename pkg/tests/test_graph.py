import json

import pytest
from hypothesis import given

from pilings.errors import AdjacencyViolation, NotLengthPreserving, UnknownVertex
from pilings.graph import (
    DefiningGraph,
    complement,
    connected_components,
    identity_aut,
    link,
    load_aut,
    load_graph,
    validate_aut,
)
from pilings.word import Word, apply_aut

from conftest import graphs, signed_automorphisms


def names(g, s):
    return {g.vertices[i] for i in s}


def test_complement_of_complete_is_edgeless():
    assert complement(DefiningGraph.complete(2)) == DefiningGraph.edgeless(2)


def test_complement_example(g4):
    c = complement(g4)
    assert sorted(c.edge_names()) == [("a1", "a2"), ("a1", "a3"), ("a3", "a4")]


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


def test_link(g4):
    assert link(DefiningGraph.edgeless(3), 1) == frozenset()
    assert names(g4, link(g4, "a2")) == {"a3", "a4"}
    assert link(DefiningGraph.complete(4), 0) == {1, 2, 3}
    with pytest.raises(UnknownVertex):
        link(g4, "a9")


def test_connected_components(g4):
    c = complement(g4)
    assert connected_components(c, set()) == []
    a1, a2, a4 = g4.vertex("a1"), g4.vertex("a2"), g4.vertex("a4")
    assert connected_components(c, {a1, a4}) == [{a1}, {a4}]
    assert connected_components(c, {a1, a2}) == [{a1, a2}]


def test_validate_aut_examples(g4):
    assert identity_aut(g4).order == 1
    inv = validate_aut(g4, [0, 1, 2, 3], [1, -1, 1, -1])
    assert inv.order == 2 and inv.is_inversion
    swap = validate_aut(g4, [2, 3, 0, 1])
    assert swap.order == 2 and not swap.is_inversion


def test_validate_aut_rejects(g4):
    with pytest.raises(AdjacencyViolation):
        validate_aut(g4, [1, 0, 2, 3])
    with pytest.raises(NotLengthPreserving):
        validate_aut(g4, [0, 0, 2, 3])


def test_order_of_signed_cycle():
    g = DefiningGraph.edgeless(3)
    # a1 -> a2 -> a3 -> a1^-1 has order 6
    phi = validate_aut(g, [1, 2, 0], [1, 1, -1])
    assert phi.order == 6
    assert phi.power(3).perm == (0, 1, 2) and phi.power(3).sign == (-1, -1, -1)


@given(graphs(r_max=4))
def test_accepts_exactly_graph_symmetries(g):
    from itertools import permutations

    for perm in permutations(range(g.rank)):
        ok = all(g.adjacent(perm[i], perm[j]) for i, j in g.edges())
        try:
            validate_aut(g, perm)
            accepted = True
        except AdjacencyViolation:
            accepted = False
        assert accepted == ok


def _check_order(phi):
    ident = tuple(range(2 * phi.graph.rank))
    assert phi.letter_table(phi.order) == ident
    assert all(phi.letter_table(k) != ident for k in range(1, phi.order))


@given(graphs(r_max=4).flatmap(lambda g: signed_automorphisms(g)))
def test_order_is_exact(phi):
    _check_order(phi)
    w = Word(phi.graph, range(2 * phi.graph.rank))
    assert len(apply_aut(phi, w, 1)) == len(w)


def test_json_round_trip(g4, tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps(g4.to_json()))
    assert load_graph(str(path)) == g4
    phi = load_aut(g4, {"map": {"a1": "a3", "a3": "a1", "a2": "a4^-1", "a4": "a2^-1"}})
    assert phi.perm == (2, 3, 0, 1) and phi.sign == (1, -1, 1, -1)
    assert load_aut(g4, phi.to_json()) == phi
    with pytest.raises(NotLengthPreserving):
        load_aut(g4, {"map": {"a1": "a1 a2"}})

import random

import pytest
from hypothesis import strategies as st

from pilings.graph import DefiningGraph, example_graph, inversion_aut, validate_aut
from pilings.word import Word


@pytest.fixture
def g4():
    return example_graph()


@pytest.fixture
def inv(g4):
    return inversion_aut(g4, ["a2", "a4"])


@pytest.fixture
def swap(g4):
    # a1 <-> a3, a2 <-> a4
    return validate_aut(g4, [2, 3, 0, 1])


def W(g, text):
    return Word.parse(g, text)


def random_graph(rng: random.Random, r_min=2, r_max=6, p=None):
    r = rng.randint(r_min, r_max)
    p = rng.random() if p is None else p
    names = [f"a{i + 1}" for i in range(r)]
    edges = [(names[i], names[j]) for i in range(r) for j in range(i + 1, r) if rng.random() < p]
    return DefiningGraph.from_edges(names, edges)


def random_word(rng: random.Random, g, n_max, n_min=0):
    return Word(g, [rng.randrange(2 * g.rank) for _ in range(rng.randint(n_min, n_max))])


@st.composite
def graphs(draw, r_min=1, r_max=5):
    r = draw(st.integers(r_min, r_max))
    pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    names = [f"a{i + 1}" for i in range(r)]
    return DefiningGraph.from_edges(names, [(names[i], names[j]) for (i, j), on in zip(pairs, mask) if on])


@st.composite
def graph_and_words(draw, count=1, max_len=10, r_max=5):
    g = draw(graphs(r_max=r_max))
    words = [Word(g, draw(st.lists(st.integers(0, 2 * g.rank - 1), max_size=max_len))) for _ in range(count)]
    return (g, *words)


@st.composite
def signed_automorphisms(draw, g):
    """Random automorphism: a graph symmetry found by shuffling, plus signs."""
    from itertools import permutations

    autos = []
    for perm in permutations(range(g.rank)):
        if all(g.adjacent(perm[i], perm[j]) for i, j in g.edges()):
            autos.append(perm)
        if len(autos) > 50:
            break
    perm = draw(st.sampled_from(autos))
    sign = draw(st.lists(st.sampled_from([1, -1]), min_size=g.rank, max_size=g.rank))
    return validate_aut(g, perm, sign)

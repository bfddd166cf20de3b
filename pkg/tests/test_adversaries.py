import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monotile.adversaries import ADVERSARY_NAMES, AdversarySpec, colour_with
from monotile.embeddings import find_triangle
from monotile.graphs import Colour, Graph

from .conftest import graphs


def test_unknown_adversary_rejected():
    with pytest.raises(ValueError):
        AdversarySpec("chaos-monkey", {}, 0)


def test_uniform_random_deterministic():
    g = Graph.complete(8)
    a = colour_with(g, AdversarySpec("uniform-random", {}, 42))
    b = colour_with(g, AdversarySpec("uniform-random", {}, 42))
    assert a.colour == b.colour
    c = colour_with(g, AdversarySpec("uniform-random", {}, 43))
    assert a.colour != c.colour


def test_planted_partition_example():
    g = Graph.complete(6)
    cg = colour_with(g, AdversarySpec("planted-partition", {"part": [0, 1, 2]}, 0))
    assert cg.colour_of(0, 1) is Colour.RED
    assert cg.colour_of(1, 2) is Colour.RED
    assert cg.colour_of(0, 3) is Colour.BLUE
    assert cg.colour_of(4, 5) is Colour.BLUE


def test_planted_partition_default_size():
    g = Graph.complete(25)
    cg = colour_with(g, AdversarySpec("planted-partition", {}, 0))
    reds = [e for e, c in cg.colour.items() if c is Colour.RED]
    assert reds and all(u < 5 and v < 5 for u, v in reds)


def test_copy_avoider_finds_mono_free_k5_for_some_seed():
    hit = False
    for seed in range(20):
        cg = colour_with(Graph.complete(5), AdversarySpec("copy-avoider-greedy", {}, seed))
        full = (1 << 5) - 1
        if find_triangle(cg.red_adjacency, full) is None and find_triangle(
            cg.blue_adjacency, full
        ) is None:
            hit = True
            break
    assert hit


def test_copy_avoider_with_custom_pattern():
    spec = AdversarySpec("copy-avoider-greedy", {"pattern": "p4"}, 1)
    cg = colour_with(Graph.complete(6), spec)
    assert len(cg.colour) == 15


def test_majority_degree_polarizes():
    cg = colour_with(Graph.complete(10), AdversarySpec("majority-degree", {}, 5))
    reds = sum(1 for c in cg.colour.values() if c is Colour.RED)
    # rich-get-richer drifts toward one colour dominating
    assert reds == 0 or reds == 45 or abs(2 * reds - 45) > 5


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8), st.sampled_from(ADVERSARY_NAMES), st.integers(0, 2**32))
def test_every_adversary_is_total_and_deterministic(g, name, seed):
    spec = AdversarySpec(name, {}, seed)
    a = colour_with(g, spec)
    assert set(a.colour) == g.edges
    assert colour_with(g, spec).colour == a.colour

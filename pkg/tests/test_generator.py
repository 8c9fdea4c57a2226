import networkx as nx
import numpy as np
import pytest

from generator import corpus, generate, pinwheel
from models import Rect
from simdraw.subdivision import adjacencies, is_valid, parse, serialize


def _typed_graph(rects) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(r.id for r in rects)
    for pair, kind in adjacencies(rects).items():
        g.add_edge(*sorted(pair), kind=kind)
    return g


def test_one_rect_is_the_bounds():
    sub = generate(1, seed=3)
    assert len(sub) == 1
    assert sub.rects[0].as_tuple() == sub.bounds.as_tuple()


@pytest.mark.parametrize("seed", range(15))
def test_generated_instances_are_valid(seed):
    n = int(np.random.default_rng(seed).integers(5, 41))
    sub = generate(n, seed=seed, pinwheel_p=0.5)
    assert len(sub) == n
    assert is_valid(sub)
    assert parse(serialize(sub)) == sub


def test_same_seed_same_instance():
    assert serialize(generate(20, seed=7, pinwheel_p=0.3)) == serialize(generate(20, seed=7, pinwheel_p=0.3))


def test_different_seeds_differ():
    assert serialize(generate(20, seed=1)) != serialize(generate(20, seed=2))


def test_full_pinwheel_of_five_is_pin5(pin5):
    sub = generate(5, seed=11, pinwheel_p=1.0)
    same = nx.is_isomorphic(
        _typed_graph(sub.rects),
        _typed_graph(pin5.rects),
        edge_match=lambda a, b: a["kind"] == b["kind"],
    )
    assert same


@pytest.mark.parametrize("mirrored", [False, True])
def test_pinwheel_tiles_its_rect(mirrored):
    rng = np.random.default_rng(0)
    r = Rect.of("p", 0, 0, 4, 4)
    pieces = pinwheel(rng, r, {r.x1, r.x2}, {r.y1, r.y2}, mirrored=mirrored)
    assert sum(p.area for p in pieces) == r.area
    assert len(adjacencies([p.moved(id=str(i)) for i, p in enumerate(pieces)])) == 8


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        generate(0)
    with pytest.raises(ValueError):
        generate(5, pinwheel_p=1.5)


def test_corpus_sizes_within_range():
    sizes = [len(sub) for _, sub in corpus(10, seed=0, min_rects=5, max_rects=12)]
    assert len(sizes) == 10
    assert all(5 <= n <= 12 for n in sizes)

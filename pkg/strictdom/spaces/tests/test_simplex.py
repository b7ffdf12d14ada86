import json
from fractions import Fraction as F

import pytest

from strictdom import error
from strictdom.games import Belief
from strictdom.spaces import Simplex


@pytest.mark.parametrize("space", [Simplex(1), Simplex(2, resolution=4), Simplex(3), Simplex(4, resolution=7)])
def test_samples_are_grid_beliefs(space):
    grid = set(space.grid())
    for _ in range(20):
        q = space.sample()
        assert space.contains(q)
        assert q in grid


@pytest.mark.parametrize("space", [Simplex(2, resolution=3), Simplex(3)])
def test_roundtripping(space):
    samples = [space.sample(), space.sample()]
    json_rep = json.loads(json.dumps(space.to_jsonable(samples)))
    assert space.from_jsonable(json_rep) == samples


def test_grid():
    assert Simplex(2).grid(2) == [Belief([0, 1]), Belief([F(1, 2), F(1, 2)]), Belief([1, 0])]
    assert len(Simplex(3).grid(10)) == 66
    assert Simplex(1).grid(5) == [Belief([1])]
    with pytest.raises(error.Error):
        Simplex(2).grid(0)


def test_contains():
    space = Simplex(3)
    assert (F(1, 3), F(1, 3), F(1, 3)) in space
    assert ['1/2', '0', '1/2'] in space
    assert (F(1, 2), F(1, 2)) not in space
    assert (F(1, 2), F(1, 2), F(1, 2)) not in space
    assert (1.0, 0, 0) not in space


def test_vertices_and_polytope():
    space = Simplex(3)
    assert [tuple(q) for q in space.vertices()] == sorted(space.polytope().vertices(), reverse=True)


def test_seeding_is_reproducible():
    a, b = Simplex(3), Simplex(3)
    a.seed(7)
    b.seed(7)
    assert [a.sample() for _ in range(5)] == [b.sample() for _ in range(5)]

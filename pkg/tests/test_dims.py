import random
from fractions import Fraction

import pytest

from capdim.dims import (
    KINDS,
    dimension,
    dimension_curve,
    find_shattered_subset,
    is_shattered,
    replay,
    strong_dimension,
)
from capdim.errors import CapExceeded, PreconditionError
from capdim.harness import gen_class
from capdim.model import LabeledPoint, ScoreClass, discretize, example1_class, margin_class

from oracles import brute_dimension, dense_grid

F = Fraction
GAMMAS = (F(1, 8), F(1, 4), F(1, 2))


def _random_margin(seed, num_points=1, num_functions=5):
    return margin_class(gen_class(seed, num_points, 3, num_functions))


def test_example1_dimensions():
    R = margin_class(example1_class())
    D = discretize(R, F(1, 8))
    # rows (2, -2, -3) and (-2, 0, 0): b = 1 strongly G-shatters (x, 1)
    assert D.row(0, 0) == (2, -2, -3) and D.row(1, 0) == (-2, 0, 0)
    assert is_shattered(D, [LabeledPoint(0, 1)], None, "strong_g", [1])
    assert strong_dimension(D, "strong_g") == brute_dimension(D, None, "strong_g") == 1
    assert dimension(R, F(1, 16), "graph")[0] >= 1
    d, cert = dimension(R, F(1, 4), "graph")
    assert d >= 0
    if cert is not None:
        assert replay(R, cert)


@pytest.mark.parametrize("kind", ["fat", "graph", "natarajan"])
def test_dimension_matches_brute_force(kind):
    for seed in range(10):
        R = _random_margin(seed)
        for gamma in GAMMAS:
            d, cert = dimension(R, gamma, kind)
            assert d == brute_dimension(R, gamma, kind), (seed, gamma)
            if d:
                assert len(cert.points) == d and replay(R, cert)
            else:
                assert cert is None


@pytest.mark.parametrize("kind", ["strong", "strong_g", "strong_n"])
def test_strong_dimension_matches_brute_force(kind):
    for seed in range(15):
        D = discretize(_random_margin(seed), F(1, 4))
        d, cert = dimension(D, None, kind)
        assert d == brute_dimension(D, None, kind), seed
        if d:
            assert replay(D, cert)


def test_fat_matches_brute_force_on_two_point_classes():
    for seed in range(6):
        R = margin_class(gen_class(seed, 2, 3, 8))
        for gamma in (F(1, 4), F(1, 2)):
            assert dimension(R, gamma, "fat")[0] == brute_dimension(R, gamma, "fat"), seed


def test_critical_witnesses_match_dense_grid():
    step = F(1, 32)
    for seed in range(4):
        R = _random_margin(seed, num_functions=4)
        for gamma in (F(1, 8), F(1, 4)):
            grid = lambda pt, c: dense_grid(F(-1), F(1), step)  # noqa: E731
            assert dimension(R, gamma, "graph")[0] == brute_dimension(R, gamma, "graph", grid)


def test_fat_dimension_on_plain_class():
    # two functions disagreeing by 1/2 at one point shatter it at gamma = 1/4
    S = ScoreClass(domain=(0, 1), names=("a", "b"), values=((F(0), F(0)), (F(1, 2), F(0))))
    assert dimension(S, F(1, 4), "fat")[0] == 1
    assert dimension(S, F(1, 4) + F(1, 100), "fat")[0] == 0
    assert is_shattered(S, [0], F(1, 4), "fat", [F(1, 4)])
    assert not is_shattered(S, [0], F(1, 4), "fat", [F(1, 3)])


def test_dimensions_antitone_in_gamma():
    for seed in range(15):
        R = _random_margin(seed, num_points=2, num_functions=6)
        for kind in ("fat", "graph", "natarajan"):
            ds = [dimension(R, g, kind)[0] for g in (F(1, 16), F(1, 8), F(1, 4), F(1, 2))]
            assert ds == sorted(ds, reverse=True)


def test_kind_ordering():
    for seed in range(15):
        R = _random_margin(seed, num_points=2, num_functions=6)
        for g in GAMMAS:
            dN = dimension(R, g, "natarajan")[0]
            dG = dimension(R, g, "graph")[0]
            assert dN <= dG


def test_dimension_curve_is_monotone():
    R = _random_margin(3, num_points=2, num_functions=6)
    curve = dimension_curve(R, "graph", [F(1, 2), F(1, 8), F(1, 4)])
    assert [e for e, _ in curve.samples] == [F(1, 2), F(1, 4), F(1, 8)]
    with pytest.raises(PreconditionError):
        dimension_curve(R, "graph", [F(0)])


def test_find_shattered_subset_sizes():
    R = _random_margin(4, num_points=2, num_functions=6)
    d, _ = dimension(R, F(1, 8), "fat")
    assert find_shattered_subset(R, F(1, 8), "fat", d + 1) is None


def test_precondition_errors():
    R = _random_margin(1)
    with pytest.raises(PreconditionError):
        dimension(R, F(1, 4), "vc")
    with pytest.raises(PreconditionError):
        dimension(R, 0, "fat")
    with pytest.raises(PreconditionError):
        dimension(R, None, "strong")
    S = ScoreClass(domain=(0,), names=("a",), values=((F(0),),))
    with pytest.raises(PreconditionError):
        dimension(S, F(1, 4), "graph")
    assert set(KINDS) >= {"fat", "graph", "natarajan"}


def test_caps():
    R = margin_class(gen_class(0, 5, 3, 4))
    with pytest.raises(CapExceeded):
        dimension(R, F(1, 4), "fat")
    many = margin_class(gen_class(0, 1, 3, 40))
    with pytest.raises(CapExceeded):
        dimension(many, F(1, 64), "fat", max_functions=4)


def test_shattering_on_random_subsets_replays():
    rng = random.Random(5)
    for seed in range(10):
        R = _random_margin(seed, num_points=2, num_functions=6)
        d, cert = dimension(R, F(1, 8), "natarajan")
        if cert is None:
            continue
        assert is_shattered(R, cert.points, F(1, 8), "natarajan", cert.b, cert.c)
        pts = list(cert.points)
        rng.shuffle(pts)
        sub = pts[:-1]
        if sub:
            order = [cert.points.index(p) for p in sub]
            assert is_shattered(
                R, sub, F(1, 8), "natarajan", [cert.b[i] for i in order], [cert.c[i] for i in order]
            )
    assert LabeledPoint(0, 1).y == 1

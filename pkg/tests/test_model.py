from fractions import Fraction

import pytest

from capdim.errors import PreconditionError
from capdim.harness import gen_class
from capdim.model import (
    REJECT,
    FiniteFunctionClass,
    LabeledPoint,
    Sample,
    as_rational,
    classify,
    component_class,
    discretize,
    discretize_value,
    dump_class,
    empirical_margin_risk,
    example1_class,
    load_class,
    margin_class,
    margin_loss,
    margin_value,
    squash,
    squash_value,
    squashed_margin_class,
)

F = Fraction


def test_as_rational_is_exact():
    assert as_rational("1/3") == F(1, 3)
    assert as_rational("0.125") == F(1, 8)
    assert as_rational(0.51) == F(51, 100)
    assert as_rational(3) == F(3)
    for bad in ("abc", "1/0", float("nan"), True):
        with pytest.raises(PreconditionError):
            as_rational(bad)


def test_class_invariants():
    with pytest.raises(PreconditionError, match="C must be"):
        FiniteFunctionClass.from_rows(2, 1, {"g": [[0, 0]]})
    with pytest.raises(PreconditionError, match="exceeds"):
        FiniteFunctionClass.from_rows(3, 1, {"g": [[2, 0, 0]]})
    with pytest.raises(PreconditionError, match="M_G"):
        FiniteFunctionClass.from_rows(3, "1/2", {"g": [[0, 0, 0]]})
    with pytest.raises(PreconditionError):
        FiniteFunctionClass.from_rows(3, 1, {"g": [[0, 0, 0]], "h": [[0, 0]]})
    with pytest.raises(PreconditionError, match="unique"):
        FiniteFunctionClass.from_json(
            {"C": 3, "M": "1", "functions": [{"name": "g", "values": [[0, 0, 0]]}] * 2}
        )


def test_json_round_trip(tmp_path):
    G = gen_class(5, 2, 3, 4)
    path = tmp_path / "g.json"
    dump_class(G, path)
    assert load_class(path) == G


def test_example1_margin_rows():
    R = margin_class(example1_class())
    assert R.row(0, 0) == (F(1, 4), F(-1, 4), F(-3, 8))
    assert R.row(1, 0) == (F(-1, 4), F(0), F(0))
    assert R.margin_structured and R.check_margin_structure()


def test_margin_structure_on_random_classes():
    for seed in range(30):
        R = margin_class(gen_class(seed, 2, 4, 5))
        assert R.check_margin_structure()
        assert all(-1 <= v <= 1 for row in R.values for v in row)


def test_margin_value_matches_class():
    G = gen_class(1, 2, 3, 3)
    R = margin_class(G)
    for name in G.names:
        for z in G.labeled_points():
            assert margin_value(G, name, z) == R.value(name, z)


def test_squash_examples_and_idempotence():
    g = F(1, 2)
    assert squash_value(F(-3, 10), g) == 0
    assert squash_value(F(3, 10), g) == F(3, 10)
    assert squash_value(F(7, 10), g) == g
    S = squashed_margin_class(gen_class(2, 2, 3, 4), g)
    assert squash(S, g) == S
    assert all(0 <= v <= g for row in S.values for v in row)
    assert not S.margin_structured
    with pytest.raises(PreconditionError):
        squash(S, 0)


def test_discretize_is_odd_and_shrinks():
    eta = F(1, 8)
    for k in range(-20, 21):
        t = F(k, 13)
        assert discretize_value(-t, eta) == -discretize_value(t, eta)
        assert abs(discretize_value(t, eta) * eta) <= abs(t)
    assert discretize_value(F(-3, 10), F(1, 10)) == -3
    R = margin_class(gen_class(3, 2, 3, 4))
    D = discretize(R, eta)
    assert D.value_kind == "integer" and D.range_hi == 8 and D.range_lo == -8
    assert D.check_margin_structure()
    with pytest.raises(PreconditionError):
        discretize(R, 0)
    with pytest.raises(PreconditionError):
        discretize(D, eta)


def test_classify_rejects_ties():
    G = FiniteFunctionClass.from_rows(3, 1, {"g": [[1, 0, 0], [1, 1, 0]]})
    assert classify(G, "g", 0) == 1
    assert classify(G, "g", 1) == REJECT


def test_margin_losses():
    g = F(1, 4)
    for kind in ("hard", "ramp"):
        assert margin_loss(F(0), g, kind) == 1
        assert margin_loss(g, g, kind) == 0
        grid = [F(k, 32) for k in range(-16, 17)]
        vals = [margin_loss(t, g, kind) for t in grid]
        assert all(a >= b for a, b in zip(vals, vals[1:]))
        for t in grid:
            assert margin_loss(t, F(1, 2), kind) >= margin_loss(t, g, kind)
    assert margin_loss(F(1, 8), g, "ramp") == F(1, 2)
    with pytest.raises(PreconditionError):
        margin_loss(F(0), g, "hinge")


def test_empirical_margin_risk():
    G = example1_class()
    z = [(0, 1), (0, 2)]
    # rho_g1 = (1/4, -1/4, -3/8): margin 1/4 at y=1 passes gamma=1/4, -1/4 at y=2 fails
    assert empirical_margin_risk(G, "g1", z, F(1, 4)) == F(1, 2)
    assert empirical_margin_risk(G, "g1", z, F(1, 4), "ramp") == F(1, 2)
    assert empirical_margin_risk(G, "g1", z, F(1, 2), "ramp") == F(3, 4)


def test_sample_and_component_class():
    s = Sample.of((0, 1), (0, 1))
    assert s.n == 2 and list(s) == [LabeledPoint(0, 1)] * 2
    with pytest.raises(PreconditionError):
        Sample(())
    G = example1_class()
    assert component_class(G, 1).values == ((F(3, 4),), (F(0),))
    with pytest.raises(PreconditionError):
        component_class(G, 4)

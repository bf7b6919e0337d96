from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from capdim import bounds as B
from capdim.dims import dimension
from capdim.metrics import INF, packing_number, proper_covering_number
from capdim.model import (
    FiniteFunctionClass,
    discretize_value,
    margin_class,
    squash_value,
    squashed_margin_class,
)

eighths = st.integers(-8, 8).map(lambda k: Fraction(k, 8))
gammas = st.sampled_from([Fraction(1, 8), Fraction(1, 4), Fraction(1, 2)])
ps = st.sampled_from([1, 2, INF])


@st.composite
def classes(draw, max_points=2, max_functions=5):
    n_pts = draw(st.integers(1, max_points))
    n_fun = draw(st.integers(1, max_functions))
    rows = {
        f"g{j}": [[draw(eighths) for _ in range(3)] for _ in range(n_pts)] for j in range(n_fun)
    }
    return FiniteFunctionClass.from_rows(3, 1, rows)


@settings(max_examples=60, deadline=None)
@given(st.fractions(), st.fractions(min_value=Fraction(1, 100), max_value=1))
def test_squash_is_idempotent_and_bounded(t, g):
    v = squash_value(t, g)
    assert 0 <= v <= g and squash_value(v, g) == v


@settings(max_examples=60, deadline=None)
@given(st.fractions(), st.fractions(min_value=Fraction(1, 100), max_value=1))
def test_discretize_is_odd_and_contracting(t, eta):
    k = discretize_value(t, eta)
    assert discretize_value(-t, eta) == -k
    assert abs(k) * eta <= abs(t) < (abs(k) + 1) * eta


@settings(max_examples=40, deadline=None)
@given(classes())
def test_margin_values_are_structured(G):
    R = margin_class(G)
    assert R.check_margin_structure()
    assert all(-1 <= v <= 1 for row in R.values for v in row)


@settings(max_examples=40, deadline=None)
@given(classes(), gammas, ps, st.sampled_from([Fraction(1, 16), Fraction(1, 8), Fraction(1, 4)]))
def test_packing_sandwich(G, gamma, p, eps):
    S = squashed_margin_class(G, gamma)
    z = list(S.domain)
    m1 = packing_number(S, z, eps, p).value
    m2 = packing_number(S, z, 2 * eps, p).value
    assert 1 <= m2 <= proper_covering_number(S, z, eps, p) <= m1 <= len(S.names)


@settings(max_examples=40, deadline=None)
@given(classes(max_points=1), gammas)
def test_dimension_ordering(G, gamma):
    R = margin_class(G)
    dN = dimension(R, gamma, "natarajan")[0]
    dG = dimension(R, gamma, "graph")[0]
    dF = dimension(R, gamma, "fat")[0]
    assert dN <= dG <= dF


@settings(max_examples=100, deadline=None)
@given(
    st.floats(0.05, 1.0),
    st.floats(0.05, 1.0),
    st.integers(1, 6),
    st.integers(0, 100),
)
def test_packing_bounds_are_at_least_one(r, gamma, d, extra):
    eps, n = r * gamma, d + extra
    assert B.log_packing_bound_linfty_G(eps, gamma, max(n, 1), d) >= 0
    assert B.log_packing_bound_linfty_G_old(eps, gamma, max(n, 1), d) >= 0
    assert B.log_packing_bound_l2_G(eps, gamma, d) >= 0
    assert B.log_packing_bound_linfty_N(eps, gamma, max(n, 1), 3, d) >= 0
    assert B.log_packing_bound_l2_N(eps, gamma, 3, d) >= 0


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 10**4), st.floats(0, 50))
def test_graph_to_natarajan_is_monotone(C, d):
    assert B.graph_to_natarajan_bound(C, d) <= B.graph_to_natarajan_bound(C, d + 1)
    assert B.graph_to_natarajan_bound(C, d + 1) >= d + 1

import itertools
import random
from fractions import Fraction

import pytest

from capdim.errors import PreconditionError
from capdim.harness import (
    SUITES,
    SuiteConfig,
    SvmSampleSpec,
    absconv_fat_dimension,
    gen_class,
    gen_svm_class,
    verify,
    verify_lemma9_hull,
)
from capdim.harness.hull import _best_min_exact, _best_min_lp, _generators, subset_shattered
from capdim.model import example1_class

F = Fraction


def test_gen_class_is_deterministic():
    assert gen_class(3, 2, 3, 5) == gen_class(3, 2, 3, 5)
    assert gen_class(3, 2, 3, 5) != gen_class(4, 2, 3, 5)
    G = gen_class(9, 2, 4, 6)
    assert G.C == 4 and G.num_points == 2 and len(G.names) == 6


def test_gen_class_zero_grid():
    G = gen_class(0, 2, 3, 4, value_grid=(F(0),))
    assert all(v == 0 for t in G.tables for row in t for v in row)
    with pytest.raises(PreconditionError):
        gen_class(0, 2, 3, 4, value_grid=())


def test_svm_class_constraints():
    for seed in range(20):
        spec = SvmSampleSpec(feature_dim=3, num_functions=4, Lambda=F(2), Lambda_X=F(1, 2), seed=seed)
        G = gen_svm_class(spec)
        for table in G.tables:
            for row in table:
                assert sum(row) == 0
                # Cauchy-Schwarz: |<w_k, x>| <= Λ·Λ_X
                assert all(abs(v) <= F(1) for v in row)
        assert gen_svm_class(spec) == G
    with pytest.raises(PreconditionError):
        SvmSampleSpec(feature_dim=0, num_functions=1, Lambda=1, Lambda_X=1)


def test_reports_are_bit_identical():
    cfg = SuiteConfig(seed=7, instances=5)
    for lemma_id in ("ordering", "lemma4", "corollary1", "lemma10"):
        assert verify(lemma_id, cfg).dumps() == verify(lemma_id, cfg).dumps()


def test_unknown_suite():
    with pytest.raises(PreconditionError):
        verify("lemma99")


def test_report_accounting():
    rep = verify("example1")
    assert rep.passed and rep.failures == 0 and rep.instances > 0
    doc = rep.to_json()
    assert "conventions" in doc and doc["lemma_id"] == "example1"


@pytest.mark.parametrize("lemma_id", sorted(set(SUITES) - {"lemma5_vs_lemma4", "corollary1"}))
def test_suites_pass_at_small_scale(lemma_id):
    rep = verify(lemma_id, SuiteConfig(seed=3, instances=4))
    assert rep.failures == 0, rep.notes
    assert rep.instances > 0


def test_hull_of_zero_class():
    assert absconv_fat_dimension([(F(0), F(0))], F(1, 8)) == (0, 0)


def test_hull_single_generator():
    # ±(1/2, 1/2): sign patterns (+,-) are unreachable, so only singletons are shattered
    assert absconv_fat_dimension([(F(1, 2), F(1, 2))], F(1, 4)) == (1, 2)
    # e1/2 and e2/2: the hull's corner (1/4, -1/4) reaches every sign pattern at γ = 1/4
    vecs = [(F(1, 2), F(0)), (F(0), F(1, 2))]
    assert absconv_fat_dimension(vecs, F(1, 4)) == (2, 2)
    assert absconv_fat_dimension(vecs, F(1, 4) + F(1, 64)) == (1, 2)


def test_exact_pair_values_match_lp():
    rng = random.Random(0)
    for _ in range(200):
        vecs = [tuple(F(rng.randint(-8, 8), 8) for _ in range(2)) for _ in range(rng.randint(1, 5))]
        gens = _generators(vecs)
        for signs in ((1, 1), (1, -1)):
            exact = _best_min_exact(gens, signs)
            assert abs(float(exact) - _best_min_lp(gens, signs)) < 1e-9


def test_grid_sub_hull_never_beats_exact():
    for seed in range(10):
        G = gen_class(seed, 2, 3, 3)
        for gamma in (F(1, 8), F(1, 4)):
            rep = verify_lemma9_hull(G, gamma, hull_grid_resolution=2)
            assert rep.failures == 0, rep.notes


def test_lemma9_on_example1():
    rep = verify_lemma9_hull(example1_class(), F(1, 4))
    assert rep.failures == 0 and rep.instances + rep.skipped == 1


def test_subset_shattered_is_hereditary():
    rng = random.Random(2)
    for _ in range(30):
        vecs = [tuple(F(rng.randint(-8, 8), 8) for _ in range(3)) for _ in range(3)]
        for sub in itertools.combinations(range(3), 2):
            if subset_shattered(vecs, sub, F(1, 8)):
                assert subset_shattered(vecs, sub[:1], F(1, 8))


def test_lemma5_vs_lemma4_grid_has_known_failures():
    rep = verify("lemma5_vs_lemma4")
    # the improved bound is larger than the ceiling bound for ε/γ near 1
    assert rep.instances > 0 and rep.failures > 0

"""Seeded random instances: tabular classes and finite linear multi-class SVM classes."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..errors import PreconditionError
from ..model import FiniteFunctionClass, as_rational

EIGHTHS = tuple(Fraction(k, 8) for k in range(-8, 9))


def _rng(seed, *salt) -> random.Random:
    # string seeds are hashed with sha512 by random.Random, so this is stable
    return random.Random(":".join(str(s) for s in (seed,) + salt))


def gen_class(
    seed,
    num_points: int,
    C: int = 3,
    num_functions: int = 4,
    value_grid: Sequence = EIGHTHS,
    M=None,
) -> FiniteFunctionClass:
    """Class whose values are drawn uniformly from ``value_grid``."""
    grid = [as_rational(v) for v in value_grid]
    if not grid:
        raise PreconditionError("value_grid", "empty value grid")
    bound = as_rational(M) if M is not None else max(Fraction(1), max(abs(v) for v in grid))
    if any(abs(v) > bound for v in grid):
        raise PreconditionError("value_grid", f"grid values must lie in [-{bound}, {bound}]")
    rng = _rng(seed, "class")
    rows = {
        f"g{j}": [[rng.choice(grid) for _ in range(C)] for _ in range(num_points)]
        for j in range(num_functions)
    }
    return FiniteFunctionClass.from_rows(C, bound, rows)


@dataclass(frozen=True)
class SvmSampleSpec:
    """A finite sample of linear multi-class machines with a dot-product kernel.

    Descriptions are feature vectors of norm at most ``Lambda_X``; each of
    the ``num_functions`` machines has C weight vectors summing to zero
    with total squared norm at most ``Lambda``².
    """

    feature_dim: int
    num_functions: int
    Lambda: Fraction
    Lambda_X: Fraction
    C: int = 3
    seed: int = 0
    num_points: int = 2
    denominator: int = 8

    def __post_init__(self):
        object.__setattr__(self, "Lambda", as_rational(self.Lambda))
        object.__setattr__(self, "Lambda_X", as_rational(self.Lambda_X))
        if self.Lambda <= 0 or self.Lambda_X <= 0:
            raise PreconditionError("svm", "Lambda and Lambda_X must be positive")
        if self.feature_dim < 1 or self.num_functions < 1 or self.num_points < 1:
            raise PreconditionError("svm", "feature_dim, num_functions and num_points must be >= 1")
        if self.C < 3:
            raise PreconditionError("svm", "C must be >= 3")


def _sqrt_upper(q: Fraction, denom: int = 1 << 20) -> Fraction:
    """A rational r with r >= sqrt(q), within 1/denom of it."""
    num = q.numerator * denom * denom
    root = math.isqrt(num // q.denominator)
    r = Fraction(root, denom)
    while r * r < q:
        r += Fraction(1, denom)
    return r


def _shrink(rng: random.Random, den: int) -> Fraction:
    # half the draws sit on the sphere itself, where the bounds are tightest
    return Fraction(1) if rng.random() < 0.5 else Fraction(rng.randint(1, den), den)


def _scale_into_ball(vec: list[Fraction], radius: Fraction, shrink: Fraction) -> list[Fraction]:
    """Scale so the Euclidean norm is at most ``shrink * radius`` (exactly)."""
    sq = sum((v * v for v in vec), Fraction(0))
    if sq == 0:
        return vec
    factor = shrink * radius / _sqrt_upper(sq)
    out = [v * factor for v in vec]
    assert sum((v * v for v in out), Fraction(0)) <= radius * radius
    return out


def _random_vector(rng: random.Random, dim: int, denom: int) -> list[Fraction]:
    return [Fraction(rng.randint(-denom, denom), denom) for _ in range(dim)]


def gen_svm_class(spec: SvmSampleSpec) -> FiniteFunctionClass:
    """Evaluate the sampled machines h_k(x) = <w_k, x> on the sampled descriptions."""
    rng = _rng(spec.seed, "svm")
    d, C, den = spec.feature_dim, spec.C, spec.denominator
    xs = []
    for _ in range(spec.num_points):
        shrink = _shrink(rng, den)
        xs.append(_scale_into_ball(_random_vector(rng, d, den), spec.Lambda_X, shrink))
    rows = {}
    for j in range(spec.num_functions):
        ws = [_random_vector(rng, d, den) for _ in range(C)]
        mean = [sum((w[i] for w in ws), Fraction(0)) / C for i in range(d)]
        ws = [[w[i] - mean[i] for i in range(d)] for w in ws]
        shrink = _shrink(rng, den)
        flat = _scale_into_ball([v for w in ws for v in w], spec.Lambda, shrink)
        ws = [flat[k * d:(k + 1) * d] for k in range(C)]
        table = [[sum((a * b for a, b in zip(w, x)), Fraction(0)) for w in ws] for x in xs]
        rows[f"h{j}"] = table
    bound = max(Fraction(1), Fraction(math.ceil(spec.Lambda * spec.Lambda_X)))
    G = FiniteFunctionClass.from_rows(C, bound, rows)
    for table in G.tables:
        for row in table:
            if sum(row) != 0:
                raise AssertionError("sum-zero constraint violated")
    return G

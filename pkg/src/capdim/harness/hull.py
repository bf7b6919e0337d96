"""Fat-shattering dimension of the symmetric convex hull of a finite class.

For a convex class closed under negation the witness can always be taken
to be 0: if b works, so does -b (negate every realizer), and averaging the
realizer of s under b with the negated realizer of -s under -b gives a
hull member with s_i·v_i >= γ.  A set S is therefore γ-shattered iff for
every sign vector s some v in the hull has s_i·v_i >= γ on S, that is iff
max_{v ∈ K} min_i s_i·v_i >= γ.

For |S| <= 2 that maximum is computed exactly: the objective is concave
and piecewise linear, so it peaks at a generator or where the two linear
pieces cross on a segment between two generators.  Larger sets go to a
linear program, with an explicit tolerance band reported as undecided.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.optimize import linprog

LP_BAND = 1e-9


def _generators(vectors: Sequence[Sequence[Fraction]]) -> list[tuple[Fraction, ...]]:
    gens = {tuple(v) for v in vectors} | {tuple(-a for a in v) for v in vectors}
    return sorted(gens)


def _best_min_exact(gens, signs) -> Fraction:
    """max over conv(gens) of min_i s_i·v_i, for one or two coordinates."""
    vals = [tuple(s * a for s, a in zip(signs, v)) for v in gens]
    best = max(min(v) for v in vals)
    if len(signs) == 1:
        return best
    for u, w in itertools.combinations(vals, 2):
        # on the segment u + t(w - u), the two coordinates meet where
        # u0 + t·d0 = u1 + t·d1
        d0, d1 = w[0] - u[0], w[1] - u[1]
        if d0 == d1:
            continue
        t = (u[1] - u[0]) / (d0 - d1)
        if 0 <= t <= 1:
            best = max(best, u[0] + t * d0)
    return best


def _best_min_lp(gens, signs) -> float:
    """LP value of max t s.t. s_i·(Σ λ_j g_j)_i >= t, λ in the simplex."""
    G = np.array([[float(s * a) for s, a in zip(signs, v)] for v in gens])  # m x k
    m, k = G.shape
    c = np.zeros(m + 1)
    c[-1] = -1.0
    A_ub = np.hstack([-G.T, np.ones((k, 1))])
    A_eq = np.hstack([np.ones((1, m)), np.zeros((1, 1))])
    bounds = [(0, None)] * m + [(None, None)]
    res = linprog(c, A_ub=A_ub, b_ub=np.zeros(k), A_eq=A_eq, b_eq=[1.0], bounds=bounds, method="highs")
    if not res.success:  # pragma: no cover - the simplex is never empty
        raise RuntimeError(res.message)
    return -res.fun


def subset_shattered(vectors, subset: Sequence[int], gamma) -> bool | None:
    """Whether the hull of ±vectors γ-shatters the given coordinates.

    None means the LP value fell inside the tolerance band around γ.
    """
    gamma = Fraction(gamma)
    gens = _generators([[v[i] for i in subset] for v in vectors])
    n = len(subset)
    undecided = False
    # s and -s are equivalent by symmetry, so fix the first sign
    for tail in itertools.product((1, -1), repeat=n - 1):
        signs = (1,) + tail
        if n <= 2:
            if _best_min_exact(gens, signs) < gamma:
                return False
        else:
            val = _best_min_lp(gens, signs)
            if val < float(gamma) - LP_BAND:
                return False
            if val < float(gamma) + LP_BAND:
                undecided = True
    return None if undecided else True


def point_upper_bound(vectors, gamma) -> int:
    """Coordinates where some generator reaches |v_i| >= γ; no other point can be shattered."""
    gamma = Fraction(gamma)
    width = len(vectors[0])
    return sum(1 for i in range(width) if max(abs(v[i]) for v in vectors) >= gamma)


def absconv_fat_dimension(vectors, gamma) -> tuple[int | None, int]:
    """(dimension or None if undecided, upper bound) for the absolute convex hull.

    ``vectors[j][i]`` is the value of the j-th generator at the i-th point.
    """
    gamma = Fraction(gamma)
    upper = point_upper_bound(vectors, gamma)
    usable = [i for i in range(len(vectors[0])) if max(abs(v[i]) for v in vectors) >= gamma]
    best = 0
    for size in range(1, len(usable) + 1):
        verdicts = [subset_shattered(vectors, sub, gamma) for sub in itertools.combinations(usable, size)]
        if any(v is True for v in verdicts):
            best = size
            continue
        if any(v is None for v in verdicts):
            return None, upper
        break
    return best, upper

"""Empirical Rademacher complexity, exact and Monte-Carlo.

Exact mode enumerates every sign vector.  Values are scaled to integers by
their common denominator so the sums are exact; the expectation comes back
as a :class:`fractions.Fraction` whenever the int64 range is not at risk.

Monte-Carlo draws come from a Philox stream keyed by the seed, one jumped
substream per block of draws, so results do not depend on how the blocks
are spread over threads.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

from .errors import CapExceeded, PreconditionError
from .model import FiniteFunctionClass, LabeledPoint, ScoreClass

Mode = Literal["exact", "monte_carlo"]

EXACT_MAX_SIGNS = 20
MC_BLOCK = 8192
_SIGN_BLOCK_BITS = 14
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class RademacherEstimate:
    """A Rademacher-type expectation.

    ``value`` is the float result.  In exact mode ``exact_value`` holds the
    rational (1/n)·E[sup ...] and ``value = float(exact_value) * scale``;
    ``scale`` is 1 except for the vector-contraction term, where it is 1/√2.
    """

    value: float
    mode: Mode
    draws: int | None = None
    std_error: float | None = None
    exact_value: Fraction | None = None
    scale: float = 1.0

    def to_json(self) -> dict:
        doc = {"value": self.value, "mode": self.mode}
        if self.mode == "monte_carlo":
            doc.update(draws=self.draws, std_error=self.std_error)
        elif self.exact_value is not None:
            q = self.exact_value
            doc["exact_value"] = f"{q.numerator}/{q.denominator}"
        if self.scale != 1.0:
            doc["scale"] = self.scale
        return doc


def thread_count() -> int:
    """Worker threads allowed by CAPDIM_THREADS (default 1)."""
    raw = os.environ.get("CAPDIM_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _integer_matrix(rows: list[tuple[Fraction, ...]]) -> tuple[list[list[int]], int]:
    den = 1
    for row in rows:
        for v in row:
            den = math.lcm(den, v.denominator)
    return [[int(v * den) for v in row] for row in rows], den


def _sign_block(start: int, count: int, m: int) -> np.ndarray:
    """Rows are sign vectors for the integers start..start+count-1 (bit i → coordinate i)."""
    codes = np.arange(start, start + count, dtype=np.int64)[:, None]
    bits = (codes >> np.arange(m, dtype=np.int64)[None, :]) & 1
    return (2 * bits - 1).astype(np.int64)


def _exact_sup_mean(rows: list[tuple[Fraction, ...]]) -> tuple[Fraction | None, float]:
    """E_σ[max_f Σ σ_i f_i] over all 2^m sign vectors.

    Returns the exact rational when integer arithmetic is safe, and always
    the float value.
    """
    m = len(rows[0])
    ints, den = _integer_matrix(rows)
    biggest = max((abs(v) for row in ints for v in row), default=0)
    exact = biggest * m < _INT64_SAFE
    if exact:
        mat = np.array(ints, dtype=np.int64).T
    else:
        mat = np.array([[float(v) for v in row] for row in rows]).T
    total_count = 1 << m
    block = 1 << min(m, _SIGN_BLOCK_BITS)
    starts = range(0, total_count, block)

    def run(start: int):
        signs = _sign_block(start, block, m)
        sums = (signs if exact else signs.astype(np.float64)) @ mat
        best = sums.max(axis=1)
        return int(best.sum()) if exact else float(best.sum())

    workers = min(thread_count(), len(starts))
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(run, starts))
    else:
        parts = [run(s) for s in starts]
    if exact:
        q = Fraction(sum(parts), total_count * den)
        return q, float(q)
    return None, math.fsum(parts) / total_count


def _mc_sup_mean(rows, draws: int, seed: int) -> tuple[float, float]:
    """Seeded mean and standard error of max_f Σ σ_i f_i."""
    mat = np.array([[float(v) for v in row] for row in rows]).T
    m = mat.shape[0]
    base = np.random.Philox(key=seed)
    nblocks = -(-draws // MC_BLOCK)

    def run(b: int):
        count = min(MC_BLOCK, draws - b * MC_BLOCK)
        gen = np.random.Generator(base.jumped(b + 1))
        signs = gen.integers(0, 2, size=(count, m), dtype=np.int8) * 2.0 - 1.0
        best = (signs @ mat).max(axis=1)
        return float(best.sum()), float((best * best).sum())

    workers = min(thread_count(), nblocks)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            parts = list(pool.map(run, range(nblocks)))
    else:
        parts = [run(b) for b in range(nblocks)]
    s1 = math.fsum(p[0] for p in parts)
    s2 = math.fsum(p[1] for p in parts)
    mean = s1 / draws
    var = max(s2 / draws - mean * mean, 0.0) * draws / max(draws - 1, 1)
    return mean, math.sqrt(var / draws)


def _estimate(rows, n: int, mode: str, draws, seed: int, scale: float) -> RademacherEstimate:
    m = len(rows[0])
    if mode == "exact":
        if m > EXACT_MAX_SIGNS:
            raise CapExceeded(f"exact mode enumerates 2^{m} sign vectors; at most 2^{EXACT_MAX_SIGNS} allowed")
        exact, val = _exact_sup_mean(rows)
        exact = exact / n if exact is not None else None
        return RademacherEstimate(val / n * scale, "exact", exact_value=exact, scale=scale)
    if mode == "monte_carlo":
        if draws is None or int(draws) < 2:
            raise PreconditionError("draws", "Monte-Carlo mode needs draws >= 2")
        mean, se = _mc_sup_mean(rows, int(draws), int(seed))
        return RademacherEstimate(mean / n * scale, "monte_carlo", int(draws), se / n * scale, scale=scale)
    raise PreconditionError("mode", f"unknown mode {mode!r}")


def empirical_rademacher(
    F: ScoreClass, sample, mode: Mode = "exact", draws: int | None = None, seed: int = 0
) -> RademacherEstimate:
    """(1/n)·E_σ[sup_f Σ σ_i f(t_i)] on the given sample of domain points."""
    pts = list(sample)
    if not pts:
        raise PreconditionError("sample", "empty sample")
    if not len(F):
        raise PreconditionError("class", "empty class")
    rows = F.restricted_rows(pts)
    return _estimate(rows, len(pts), mode, draws, seed, 1.0)


def maurer_rhs(
    G: FiniteFunctionClass, sample, mode: Mode = "exact", draws: int | None = None, seed: int = 0
) -> RademacherEstimate:
    """1/(√2 n)·E[sup_g Σ_i Σ_k σ_{i,k} g_k(x_i)] with an n×C sign matrix.

    Sample entries may be description indices or labeled points; only the
    description is used.
    """
    xs = [z.x if isinstance(z, LabeledPoint) else int(z) for z in sample]
    if not xs:
        raise PreconditionError("sample", "empty sample")
    for x in xs:
        if not 0 <= x < G.num_points:
            raise PreconditionError("sample", f"description {x} out of range")
    rows = [tuple(v for x in xs for v in table[x]) for table in G.tables]
    return _estimate(rows, len(xs), mode, draws, seed, 1 / math.sqrt(2))

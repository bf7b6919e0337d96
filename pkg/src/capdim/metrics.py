"""Empirical L_p pseudo-metrics, exact packing and proper covering numbers.

Conventions: a set is ε-separated when every pairwise distance is >= ε;
covering balls are open (distance < ε).  With these two choices
M(2ε) <= N_int(ε) <= M(ε) holds exactly, boundary cases included.

Every comparison against ε is exact.  For an integer exponent p the mean
of |Δ|^p is rational, so ``d >= ε`` is tested as ``mean|Δ|^p >= ε^p``.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import CapExceeded, PreconditionError
from .model import ScoreClass, as_rational

INF = math.inf
Exponent = Union[int, float]

DEFAULT_CAP = 64


def _check_p(p) -> Exponent:
    if p in ("inf", "infinity", "linf") or p == INF:
        return INF
    if isinstance(p, str):
        p = int(p)
    if isinstance(p, bool) or not isinstance(p, int) or p < 1:
        raise PreconditionError("p", f"p must be an integer >= 1 or infinity, got {p!r}")
    return p


@dataclass(frozen=True)
class Distance:
    """An empirical distance, kept exact.

    ``power`` is the mean of |Δ|^p (for p = ∞, the max |Δ| itself);
    ``value`` is the float root, for display only.
    """

    p: Exponent
    power: Fraction

    @property
    def value(self) -> float:
        if self.p == INF:
            return float(self.power)
        return float(self.power) ** (1.0 / self.p)

    @property
    def exact(self) -> Fraction | None:
        """The distance itself when it is rational by construction."""
        if self.p == INF or self.p == 1:
            return self.power
        return None

    def at_least(self, eps) -> bool:
        return self.power >= threshold_power(eps, self.p)

    def less_than(self, eps) -> bool:
        return self.power < threshold_power(eps, self.p)


def threshold_power(eps, p: Exponent) -> Fraction:
    eps = as_rational(eps)
    return eps if p == INF else eps ** p


def _power(u: Sequence[Fraction], v: Sequence[Fraction], p: Exponent) -> Fraction:
    if p == INF:
        return max(abs(a - b) for a, b in zip(u, v))
    return sum((abs(a - b) ** p for a, b in zip(u, v)), Fraction(0)) / len(u)


def dist(F: ScoreClass, f: str, f_prime: str, sample, p=2) -> Distance:
    """d_{p,t_n}(f, f′) on the given sample of domain points."""
    p = _check_p(p)
    pts = list(sample)
    if not pts:
        raise PreconditionError("sample", "empty sample")
    idx = [F.position(t) for t in pts]
    u = F.values[F.index(f)]
    v = F.values[F.index(f_prime)]
    return Distance(p, _power([u[i] for i in idx], [v[i] for i in idx], p))


@dataclass(frozen=True)
class PackingResult:
    value: int
    witness: tuple[str, ...]
    exact: bool
    sample: tuple | None = None


def _distinct_rows(F: ScoreClass, sample) -> tuple[list[str], list[tuple[Fraction, ...]]]:
    """Restrictions to the sample with duplicates collapsed (first name kept)."""
    pts = list(sample)
    if not pts:
        raise PreconditionError("sample", "empty sample")
    rows = F.restricted_rows(pts)
    seen: dict[tuple, str] = {}
    for name, row in zip(F.names, rows):
        seen.setdefault(row, name)
    return list(seen.values()), list(seen.keys())


def _separation_graph(rows, thr: Fraction, p: Exponent, strict: bool) -> list[int]:
    """Adjacency bitmasks: i ~ j iff power(i, j) >= thr (or < thr when strict)."""
    m = len(rows)
    adj = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            pw = _power(rows[i], rows[j], p)
            if (pw < thr) if strict else (pw >= thr):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def _max_clique(adj: list[int]) -> int:
    """Maximum clique as a bitmask, Bron–Kerbosch with pivoting and a size bound."""
    best = 0
    best_size = 0

    def expand(R: int, R_size: int, P: int, X: int):
        nonlocal best, best_size
        if P == 0 and X == 0:
            if R_size > best_size:
                best, best_size = R, R_size
            return
        if R_size + P.bit_count() <= best_size:
            return
        PX = P | X
        pivot = max(_bits(PX), key=lambda u: (P & adj[u]).bit_count())
        for v in _bits(P & ~adj[pivot]):
            bit = 1 << v
            expand(R | bit, R_size + 1, P & adj[v], X & adj[v])
            P &= ~bit
            X |= bit

    n = len(adj)
    if n:
        expand(0, 0, (1 << n) - 1, 0)
    return best


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _resolve_threshold(eps, p, eps_pow):
    if eps_pow is not None:
        thr = as_rational(eps_pow)
        if thr <= 0:
            raise PreconditionError("eps", "radius must be positive")
        return thr
    eps = as_rational(eps)
    if eps <= 0:
        raise PreconditionError("eps", f"eps must be positive, got {eps}")
    return threshold_power(eps, p)


def packing_number(
    F: ScoreClass,
    sample,
    eps,
    p=2,
    mode: str = "exact",
    cap: int = DEFAULT_CAP,
    eps_pow=None,
) -> PackingResult:
    """Largest subset of F that is pairwise ε-separated in d_{p,sample}.

    ``eps_pow`` gives ε^p directly, for radii such as C^{-1/p}·ε that are
    not rational.
    """
    p = _check_p(p)
    thr = _resolve_threshold(eps, p, eps_pow)
    names, rows = _distinct_rows(F, sample)
    if mode == "greedy":
        chosen: list[int] = []
        for i, row in enumerate(rows):
            if all(_power(row, rows[j], p) >= thr for j in chosen):
                chosen.append(i)
        return PackingResult(len(chosen), tuple(names[i] for i in chosen), False)
    if mode != "exact":
        raise PreconditionError("mode", f"unknown mode {mode!r}")
    if len(rows) > cap:
        raise CapExceeded(f"{len(rows)} distinct functions exceed the exact cap {cap}")
    clique = _max_clique(_separation_graph(rows, thr, p, strict=False))
    witness = tuple(names[i] for i in _bits(clique))
    return PackingResult(len(witness), witness, True)


def proper_covering_number(
    F: ScoreClass, sample, eps, p=2, cap: int = DEFAULT_CAP, eps_pow=None
) -> int:
    """Fewest members of F whose open ε-balls cover F (exact set cover)."""
    return proper_cover(F, sample, eps, p, cap, eps_pow)[0]


def proper_cover(F, sample, eps, p=2, cap=DEFAULT_CAP, eps_pow=None) -> tuple[int, tuple[str, ...]]:
    p = _check_p(p)
    thr = _resolve_threshold(eps, p, eps_pow)
    names, rows = _distinct_rows(F, sample)
    m = len(rows)
    if m > cap:
        raise CapExceeded(f"{m} distinct functions exceed the exact cap {cap}")
    near = _separation_graph(rows, thr, p, strict=True)
    balls = [near[i] | (1 << i) for i in range(m)]
    full = (1 << m) - 1

    def search(covered: int, depth: int, chosen: list[int]) -> list[int] | None:
        if covered == full:
            return chosen
        if depth == 0:
            return None
        # branch on the uncovered element with the fewest covering centers
        uncovered = full & ~covered
        target = min(_bits(uncovered), key=lambda e: balls[e].bit_count())
        for c in _bits(balls[target]):
            got = search(covered | balls[c], depth - 1, chosen + [c])
            if got is not None:
                return got
        return None

    for k in range(1, m + 1):
        found = search(0, k, [])
        if found is not None:
            return k, tuple(names[i] for i in found)
    raise AssertionError("unreachable: the whole class covers itself")


def multiset_count(domain_size: int, n: int) -> int:
    return math.comb(domain_size + n - 1, n)


def uniform_packing(
    F: ScoreClass,
    n: int,
    eps,
    p=2,
    budget: int = 20000,
    seed: int = 0,
    cap: int = DEFAULT_CAP,
    eps_pow=None,
) -> PackingResult:
    """max over samples in domain^n of the exact packing number.

    The empirical metric is invariant under reordering, so only multisets
    are enumerated.  When their number exceeds ``budget`` a seeded random
    search over ``budget`` samples is run instead and ``exact`` is False.
    """
    if n < 1:
        raise PreconditionError("n", f"n must be >= 1, got {n}")
    domain = list(F.domain)
    total = multiset_count(len(domain), n)
    if total <= budget:
        candidates = itertools.combinations_with_replacement(domain, n)
        exact = True
    else:
        rng = random.Random(seed)
        candidates = (tuple(rng.choice(domain) for _ in range(n)) for _ in range(budget))
        exact = False
    upper = len(set(map(tuple, F.values)))
    best = None
    for sample in candidates:
        res = packing_number(F, sample, eps, p, cap=cap, eps_pow=eps_pow)
        if best is None or res.value > best.value:
            best = PackingResult(res.value, res.witness, exact, tuple(sample))
            if best.value == upper:
                break
    return best

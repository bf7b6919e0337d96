"""Exact fat-shattering, margin Graph/Natarajan and strong Ψ-dimensions.

Each shattering condition splits per point into a "plus" test
``P_f - b >= θ`` and a "minus" test ``Q_f + b >= θ``:

========== ================ ==========================  =====
kind       P_f              Q_f                         θ
========== ================ ==========================  =====
fat        f(z)             -f(z)                       γ
graph      f(x, y)          max_{k≠y} f(x, k)           γ
natarajan  f(x, y)          f(x, c)                     γ
strong     f(z)             -f(z)                       1
strong_g   as graph                                     1
strong_n   as natarajan                                 1
========== ================ ==========================  =====

For a fixed point the plus test holds on a closed half-line ``b <= P_f - θ``
and the minus test on ``b >= θ - Q_f``, so only finitely many
(plus-set, minus-set) patterns exist.  The search keeps, per point, the
patterns that are not dominated by another one and backtracks over points,
carrying the set of functions compatible with every partial dichotomy.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .errors import CapExceeded, PreconditionError
from .model import LabeledPoint, ScoreClass, as_rational

Kind = Literal["fat", "graph", "natarajan", "strong", "strong_g", "strong_n"]
KINDS = ("fat", "graph", "natarajan", "strong", "strong_g", "strong_n")
STRONG_KINDS = ("strong", "strong_g", "strong_n")
ROW_KINDS = ("graph", "natarajan", "strong_g", "strong_n")

MAX_DOMAIN = 12
MAX_FUNCTIONS = 16


@dataclass(frozen=True)
class ShatterCertificate:
    points: tuple
    b: tuple[Fraction, ...]
    kind: str
    gamma: Fraction | None
    assignments: dict
    c: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        from .model import format_rational

        return {
            "kind": self.kind,
            "gamma": None if self.gamma is None else format_rational(self.gamma),
            "points": [list(p) if isinstance(p, tuple) else p for p in self.points],
            "b": [format_rational(v) for v in self.b],
            "c": None if self.c is None else list(self.c),
            "assignments": {
                "".join("+" if s > 0 else "-" for s in key): name
                for key, name in sorted(self.assignments.items())
            },
        }


@dataclass(frozen=True)
class DimensionCurve:
    samples: tuple[tuple[Fraction, int], ...]


def _check_kind(kind: str) -> str:
    if kind not in KINDS:
        raise PreconditionError("kind", f"unknown kind {kind!r}; expected one of {KINDS}")
    return kind


def _threshold(kind: str, gamma) -> Fraction:
    if kind in STRONG_KINDS:
        return Fraction(1)
    gamma = as_rational(gamma)
    if gamma <= 0:
        raise PreconditionError("gamma", f"gamma must be positive, got {gamma}")
    return gamma


def strong_bound(F: ScoreClass) -> int:
    """M_F for an integer class: the largest absolute value of its range."""
    return int(max(abs(F.range_lo), abs(F.range_hi)))


def _check_class(F: ScoreClass, kind: str):
    if kind in STRONG_KINDS and F.value_kind != "integer":
        raise PreconditionError("value_kind", f"{kind} needs an integer-valued class")
    if kind in ROW_KINDS and not F.margin_structured:
        raise PreconditionError(
            "margin_structured", f"{kind} needs a margin-structured class on labeled pairs"
        )


def _point_values(F: ScoreClass, point, kind: str, c: int | None = None):
    """Per function, the plus and minus scores at ``point``."""
    if kind in ("fat", "strong"):
        pos = F.position(point)
        P = [row[pos] for row in F.values]
        return P, [-v for v in P]
    if not isinstance(point, LabeledPoint) or not F.has_full_rows(point.x):
        raise PreconditionError("kind", f"{kind} needs every f(x, k) at {point!r}")
    x, y = point
    P, Q = [], []
    for j in range(len(F.names)):
        row = F.row(j, x)
        P.append(row[y - 1])
        if kind in ("graph", "strong_g"):
            Q.append(max(v for k, v in enumerate(row, 1) if k != y))
        else:
            Q.append(row[c - 1])
    return P, Q


def _witness_candidates(ups, lows, kind: str, M_F: int | None):
    if kind in STRONG_KINDS:
        return [Fraction(b) for b in range(-M_F + 1, M_F)]
    crit = sorted(set(ups) | set(lows))
    mids = [(a + b) / 2 for a, b in zip(crit, crit[1:])]
    return crit + mids


def _patterns(P, Q, theta, kind, M_F):
    """Non-dominated (plus_mask, minus_mask) pairs with a representative b."""
    ups = [p - theta for p in P]
    lows = [theta - q for q in Q]
    found: dict[tuple[int, int], Fraction] = {}
    for b in _witness_candidates(ups, lows, kind, M_F):
        plus = sum(1 << j for j, u in enumerate(ups) if b <= u)
        minus = sum(1 << j for j, l in enumerate(lows) if b >= l)
        if plus and minus and (plus, minus) not in found:
            found[(plus, minus)] = b
    keys = list(found)
    keep = []
    for key in keys:
        pl, mi = key
        dominated = any(
            other != key and (pl & ~other[0]) == 0 and (mi & ~other[1]) == 0 for other in keys
        )
        if not dominated:
            keep.append((key, found[key]))
    keep.sort(key=lambda item: item[1])
    return keep


def _backtrack(pattern_lists, full_mask: int):
    n = len(pattern_lists)

    def rec(i, masks, chosen):
        if i == n:
            return chosen
        for (plus, minus), b in pattern_lists[i]:
            nxt = []
            for m in masks:
                a, c = m & plus, m & minus
                if not a or not c:
                    break
                nxt.append(a)
                nxt.append(c)
            else:
                got = rec(i + 1, nxt, chosen + [b])
                if got is not None:
                    return got
        return None

    return rec(0, [full_mask], [])


def _dichotomies(n: int):
    return itertools.product((1, -1), repeat=n)


def _satisfies(P_rows, Q_rows, j, b, theta, s) -> bool:
    for i, si in enumerate(s):
        if si > 0:
            if P_rows[i][j] - b[i] < theta:
                return False
        elif Q_rows[i][j] + b[i] < theta:
            return False
    return True


def shattering_assignments(F: ScoreClass, points, gamma, kind: str, b, c=None) -> dict | None:
    """Map each dichotomy to a realizing function, or None if one is missing."""
    kind = _check_kind(kind)
    _check_class(F, kind)
    points = tuple(points)
    b = tuple(as_rational(v) for v in b)
    if len(b) != len(points):
        raise PreconditionError("witness", "b must have one entry per point")
    if kind in ("natarajan", "strong_n"):
        if c is None or len(c) != len(points):
            raise PreconditionError("witness", f"{kind} needs one category c_i per point")
        for pt, ci in zip(points, c):
            if ci == pt.y:
                raise PreconditionError("witness", f"c_i must differ from y_i at {pt!r}")
            if not 1 <= ci <= F.num_categories:
                raise PreconditionError("witness", f"category {ci} out of range")
    if kind in STRONG_KINDS:
        M_F = strong_bound(F)
        for v in b:
            if v.denominator != 1 or not -M_F + 1 <= v <= M_F - 1:
                raise PreconditionError(
                    "witness", f"strong witnesses must be integers in [{-M_F + 1}, {M_F - 1}]"
                )
    theta = _threshold(kind, gamma)
    P_rows, Q_rows = [], []
    for i, pt in enumerate(points):
        P, Q = _point_values(F, pt, kind, None if c is None else c[i])
        P_rows.append(P)
        Q_rows.append(Q)
    out = {}
    for s in _dichotomies(len(points)):
        hit = next(
            (j for j in range(len(F.names)) if _satisfies(P_rows, Q_rows, j, b, theta, s)), None
        )
        if hit is None:
            return None
        out[s] = F.names[hit]
    return out


def is_shattered(F: ScoreClass, points, gamma, kind: str, b, c=None) -> bool:
    """True iff (b, c) witnesses a shattering of ``points`` of the given kind."""
    return shattering_assignments(F, points, gamma, kind, b, c) is not None


def replay(F: ScoreClass, cert: ShatterCertificate) -> bool:
    got = shattering_assignments(F, cert.points, cert.gamma, cert.kind, cert.b, cert.c)
    if got is None:
        return False
    theta = _threshold(cert.kind, cert.gamma)
    for s, name in cert.assignments.items():
        j = F.index(name)
        P_rows, Q_rows = [], []
        for i, pt in enumerate(cert.points):
            P, Q = _point_values(F, pt, cert.kind, None if cert.c is None else cert.c[i])
            P_rows.append(P)
            Q_rows.append(Q)
        if not _satisfies(P_rows, Q_rows, j, cert.b, theta, s):
            return False
    return len(cert.assignments) == 2 ** len(cert.points)


def dedupe(F: ScoreClass) -> ScoreClass:
    """Drop functions whose value rows repeat an earlier one."""
    seen = {}
    for name, row in zip(F.names, F.values):
        seen.setdefault(row, name)
    if len(seen) == len(F.names):
        return F
    return F.with_values(list(seen.keys()), names=tuple(seen.values()))


def _candidate_points(F: ScoreClass, kind: str):
    if kind in ROW_KINDS:
        return [z for z in F.domain if isinstance(z, LabeledPoint) and F.has_full_rows(z.x)]
    return list(F.domain)


def _options_per_point(F, kind, theta, M_F):
    """For each usable point: list of (c, patterns) alternatives."""
    opts = {}
    for pt in _candidate_points(F, kind):
        if kind in ("natarajan", "strong_n"):
            alts = []
            for ci in range(1, F.num_categories + 1):
                if ci == pt.y:
                    continue
                P, Q = _point_values(F, pt, kind, ci)
                pats = _patterns(P, Q, theta, kind, M_F)
                if pats:
                    alts.append((ci, pats))
        else:
            P, Q = _point_values(F, pt, kind)
            pats = _patterns(P, Q, theta, kind, M_F)
            alts = [(None, pats)] if pats else []
        if alts:
            opts[pt] = alts
    return opts


def find_shattered_subset(F: ScoreClass, gamma, kind: str, size: int, _opts=None):
    """A certificate for some shattered subset of the given size, or None."""
    F = dedupe(F)
    theta = _threshold(kind, gamma)
    M_F = strong_bound(F) if kind in STRONG_KINDS else None
    opts = _opts if _opts is not None else _options_per_point(F, kind, theta, M_F)
    full = (1 << len(F.names)) - 1
    for subset in itertools.combinations(list(opts), size):
        for combo in itertools.product(*(opts[pt] for pt in subset)):
            b = _backtrack([pats for _, pats in combo], full)
            if b is None:
                continue
            c = tuple(ci for ci, _ in combo) if kind in ("natarajan", "strong_n") else None
            g = None if kind in STRONG_KINDS else theta
            assignments = shattering_assignments(F, subset, g, kind, b, c)
            if assignments is None:  # pragma: no cover - search/replay disagreement
                raise AssertionError(f"search produced a witness that fails replay: {subset}")
            return ShatterCertificate(tuple(subset), tuple(b), kind, g, assignments, c)
    return None


def dimension(
    F: ScoreClass,
    gamma,
    kind: str = "fat",
    max_domain: int = MAX_DOMAIN,
    max_functions: int = MAX_FUNCTIONS,
) -> tuple[int, ShatterCertificate | None]:
    """Largest shattered subset size and a certificate for it.

    Sizes are tried in increasing order and the search stops at the first
    size with no shattered subset: every subset of a shattered set is
    shattered.
    """
    kind = _check_kind(kind)
    _check_class(F, kind)
    F = dedupe(F)
    if len(F.domain) > max_domain:
        raise CapExceeded(f"domain of size {len(F.domain)} exceeds the exact cap {max_domain}")
    if len(F.names) > max_functions:
        raise CapExceeded(f"{len(F.names)} distinct functions exceed the exact cap {max_functions}")
    theta = _threshold(kind, gamma)
    M_F = strong_bound(F) if kind in STRONG_KINDS else None
    opts = _options_per_point(F, kind, theta, M_F)
    best, cert = 0, None
    for size in range(1, len(opts) + 1):
        found = find_shattered_subset(F, gamma, kind, size, _opts=opts)
        if found is None:
            break
        best, cert = size, found
    return best, cert


def strong_dimension(F: ScoreClass, kind: str = "strong_g", **caps) -> int:
    if kind not in STRONG_KINDS:
        raise PreconditionError("kind", f"strong_dimension needs one of {STRONG_KINDS}")
    if kind != "strong" and not F.margin_structured:
        raise PreconditionError("margin_structured", "strong Ψ-dimensions need margin structure")
    return dimension(F, None, kind, **caps)[0]


def dimension_curve(F: ScoreClass, kind: str, eps_grid: Sequence, **caps) -> DimensionCurve:
    grid = sorted({as_rational(e) for e in eps_grid}, reverse=True)
    for e in grid:
        if e <= 0:
            raise PreconditionError("eps_grid", f"grid values must be positive, got {e}")
    samples = tuple((e, dimension(F, e, kind, **caps)[0]) for e in grid)
    for (_, d1), (_, d2) in zip(samples, samples[1:]):
        if d2 < d1:
            raise AssertionError(f"dimension decreased as the scale shrank: {samples}")
    return DimensionCurve(samples)

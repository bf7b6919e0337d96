"""Slow, deliberately naive reference computations used by the tests."""
from __future__ import annotations

import itertools
from fractions import Fraction

from capdim.model import LabeledPoint, ScoreClass


def _plus_minus(F: ScoreClass, j: int, pt, kind: str, c=None):
    if kind in ("fat", "strong"):
        v = F.values[j][F.position(pt)]
        return v, -v
    row = F.row(j, pt.x)
    P = row[pt.y - 1]
    if kind in ("graph", "strong_g"):
        Q = max(v for k, v in enumerate(row, 1) if k != pt.y)
    else:
        Q = row[c - 1]
    return P, Q


def shatters(F, points, b, kind, theta, c=None) -> bool:
    for s in itertools.product((1, -1), repeat=len(points)):
        ok_any = False
        for j in range(len(F.names)):
            ok = True
            for i, pt in enumerate(points):
                P, Q = _plus_minus(F, j, pt, kind, None if c is None else c[i])
                if s[i] == 1 and not P - b[i] >= theta:
                    ok = False
                    break
                if s[i] == -1 and not Q + b[i] >= theta:
                    ok = False
                    break
            if ok:
                ok_any = True
                break
        if not ok_any:
            return False
    return True


def _usable(F, kind):
    if kind in ("fat", "strong"):
        return list(F.domain)
    return [z for z in F.domain if isinstance(z, LabeledPoint) and F.has_full_rows(z.x)]


def critical_grid(F, pt, kind, theta, c=None):
    vals = set()
    for j in range(len(F.names)):
        P, Q = _plus_minus(F, j, pt, kind, c)
        vals.add(P - theta)
        vals.add(theta - Q)
    return sorted(vals)


def dense_grid(lo: Fraction, hi: Fraction, step: Fraction):
    out, v = [], lo
    while v <= hi:
        out.append(v)
        v += step
    return out


def brute_dimension(F: ScoreClass, gamma, kind: str, witness_grid=None) -> int:
    """Largest shattered subset, trying every subset, witness and category vector.

    ``witness_grid(pt, c)`` gives the candidate b values for one point;
    by default the critical values. Between two consecutive critical values
    the set of functions clearing the upper side is that of the right end,
    and the lower side only grows toward it, so the right end dominates.
    A size with no shattered subset ends the search: dropping a point from a
    shattered set (and its witness) leaves a shattered set.
    """
    theta = Fraction(1) if kind.startswith("strong") else Fraction(gamma)
    if kind.startswith("strong"):
        M_F = int(max(abs(F.range_lo), abs(F.range_hi)))
        witness_grid = lambda pt, c: [Fraction(v) for v in range(-M_F + 1, M_F)]  # noqa: E731
    elif witness_grid is None:
        witness_grid = lambda pt, c: critical_grid(F, pt, kind, theta, c)  # noqa: E731
    pts = _usable(F, kind)
    best = 0
    for size in range(1, len(pts) + 1):
        found = False
        for subset in itertools.combinations(pts, size):
            if kind in ("natarajan", "strong_n"):
                c_choices = itertools.product(
                    *[[k for k in range(1, F.num_categories + 1) if k != pt.y] for pt in subset]
                )
            else:
                c_choices = [None]
            for c in c_choices:
                grids = [witness_grid(pt, None if c is None else c[i]) for i, pt in enumerate(subset)]
                for b in itertools.product(*grids):
                    if shatters(F, subset, b, kind, theta, c):
                        found = True
                        break
                if found:
                    break
            if found:
                break
        if not found:
            break
        best = size
    return best

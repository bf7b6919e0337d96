"""Pseudo-random parameter tuples and the primary/twin value pairs they give."""
from __future__ import annotations

import math
import random

from capdim import bounds as B
from capdim.bounds import twin as T
from capdim.errors import PreconditionError

REL_TOL = 1e-9


def _eg(rng):
    gamma = rng.uniform(0.05, 1.0)
    return rng.uniform(0.05, 1.0) * gamma, gamma


def _params(rng, d_max=1.95):
    return B.BoundParams(
        C=rng.randint(3, 12),
        gamma=rng.uniform(0.1, 1.0),
        delta=rng.uniform(0.01, 0.5),
        M_G=rng.uniform(1.0, 3.0),
        K1=rng.uniform(0.5, 2.0),
        K2=rng.uniform(0.5, 2.0),
        d_GC=rng.uniform(0.1, 2.0),
        d_Ggamma=rng.uniform(0.1, d_max),
        Lambda=rng.uniform(0.5, 2.0),
        Lambda_X=rng.uniform(0.5, 2.0),
    )


def _lemma4(rng):
    eps, gamma = _eg(rng)
    d = rng.randint(0, 6)
    n = rng.randint(max(1, d), 200)
    return B.log_packing_bound_linfty_G_old(eps, gamma, n, d), T.log_lemma4(eps, gamma, n, d)


def _lemma5(rng):
    eps, gamma = _eg(rng)
    d = rng.uniform(0, 6)
    n = rng.randint(max(1, math.ceil(d)), 200)
    return B.log_packing_bound_linfty_G(eps, gamma, n, d), T.log_lemma5(eps, gamma, n, d)


def _lemma6(rng):
    eps, gamma = _eg(rng)
    d = rng.uniform(0, 3)
    return B.log_packing_bound_l2_G(eps, gamma, d), T.log_lemma6(eps, gamma, d)


def _lemma7(rng):
    eps, gamma = _eg(rng)
    d, C = rng.uniform(0, 6), rng.randint(3, 12)
    n = rng.randint(max(1, math.ceil(d)), 200)
    return B.log_packing_bound_linfty_N(eps, gamma, n, C, d), T.log_lemma7(eps, gamma, n, C, d)


def _lemma8(rng):
    eps, gamma = _eg(rng)
    d, C = rng.uniform(0, 3), rng.randint(3, 12)
    return B.log_packing_bound_l2_N(eps, gamma, C, d), T.log_lemma8(eps, gamma, C, d)


def _lemma3(rng):
    C = rng.randint(3, 10)
    dims = [rng.randint(0, 5) for _ in range(C)]
    eps, M = rng.uniform(0.01, 1.0), rng.uniform(1, 3)
    return B.fat_decomposition_bound(eps, C, M, dims), T.lemma3(eps, C, M, dims)


def _lemma2(rng):
    C, d = rng.randint(3, 50), rng.uniform(0, 20)
    return B.graph_to_natarajan_bound(C, d), T.lemma2(C, d)


def _lemma9(rng):
    C = rng.randint(3, 6)
    vals = [rng.randint(0, 9) for _ in range(C * (C - 1) // 2)]
    return B.natarajan_structural_bound(vals, C), T.lemma9(vals)


def _lemma10(rng):
    C, L, LX = rng.randint(3, 12), rng.uniform(0.1, 3), rng.uniform(0.1, 3)
    g = rng.uniform(0.01, 1.0) * L * LX
    return B.svm_natarajan_bound(C, L, LX, g), T.lemma10(C, L, LX, g)


def _hypothesis(rng):
    p = _params(rng)
    eps = rng.uniform(0.01, 1.0) * p.M_G
    return B.hypothesis_nat_dim(eps, p), T.hypothesis(eps, p.K_rho, p.C, p.d_GC, p.d_Ggamma)


def _entropy_linf(rng):
    p = _params(rng)
    variant = rng.choice(["old", "new"])
    m = math.ceil(B.linfty_entropy_threshold(p, variant)) + rng.randint(0, 10**6)
    args = (m, p.C, p.gamma, p.M_G, p.K2, p.K_rho, p.d_GC, p.d_Ggamma, variant)
    return B.metric_entropy_linfty(m, p, variant), T.entropy_linf(*args)


def _entropy_l2(rng):
    p = _params(rng)
    variant = rng.choice(["old", "new"])
    eps = rng.uniform(0.05, 1.0) * p.gamma
    args = (eps, p.C, p.gamma, p.M_G, p.K2, p.K_rho, p.d_GC, p.d_Ggamma, variant)
    return B.metric_entropy_l2(eps, p, variant), T.entropy_l2(*args)


def _risk_linf(rng):
    p = _params(rng)
    m, H = rng.randint(1, 10**6), rng.uniform(0, 1e4)
    return B.guaranteed_risk_linfty(m, p, H), T.risk_linf(m, p.delta, H)


def _f1(rng):
    p = _params(rng)
    return B.F1(p), T.f1(p.K_rho, p.C, p.d_GC, p.d_Ggamma)


def _f2(rng):
    p = _params(rng)
    return B.F2(p), T.f2(p.C, p.d_Ggamma)


def _phase(rng):
    p = _params(rng, d_max=4.0)
    if rng.random() < 0.15:
        p = p.with_(d_Ggamma=2.0)
    m = rng.randint(4, 10**6)
    args = (p.gamma, p.K_rho, p.C, p.d_GC, p.d_Ggamma, m)
    return B.rademacher_phase_bound(p, m), T.phase(*args)


def _risk_l2(rng):
    p = _params(rng, d_max=4.0)
    m = rng.randint(4, 10**6)
    args = (p.gamma, p.delta, p.K_rho, p.C, p.d_GC, p.d_Ggamma, m)
    return B.guaranteed_risk_l2(p, m), T.risk_l2(*args)


def _chaining(rng):
    N = rng.randint(1, 8)
    h = sorted((rng.uniform(0.01, 1.0) for _ in range(N + 1)), reverse=True)
    H = [rng.uniform(0, 50) for _ in range(N)]
    n = rng.randint(1, 10**5)
    table = dict(zip(h[1:], H))
    value = B.chaining_bound(lambda r: table[r], B.ChainSchedule(tuple(h)), n)
    return value, T.chaining(H, h, n)


def _kp(rng):
    p = rng.randint(2, 60)
    return B.kp_constant(p), T.kp(p)


def _lp(rng):
    M = rng.uniform(0.5, 3)
    eps, p, d = rng.uniform(0.01, 2) * M, rng.randint(2, 10), rng.uniform(0, 5)
    return B.log_lp_packing(eps, M, p, d), T.log_lp_packing(eps, M, p, d)


EVALUATORS = {
    "lemma4": _lemma4,
    "lemma5": _lemma5,
    "lemma6": _lemma6,
    "lemma7": _lemma7,
    "lemma8": _lemma8,
    "lemma3": _lemma3,
    "lemma2": _lemma2,
    "lemma9": _lemma9,
    "lemma10": _lemma10,
    "hypothesis": _hypothesis,
    "entropy_linf": _entropy_linf,
    "entropy_l2": _entropy_l2,
    "risk_linf": _risk_linf,
    "F1": _f1,
    "F2": _f2,
    "phase": _phase,
    "risk_l2": _risk_l2,
    "chaining": _chaining,
    "kp": _kp,
    "lp_packing": _lp,
}


def agrees(a: float, b: float, tol: float = REL_TOL) -> bool:
    return math.isclose(a, b, rel_tol=tol, abs_tol=tol * 1e-3)


def twin_mismatches(tuples_per_evaluator: int = 1000, seed: int = 0):
    """(name, primary, twin) for every disagreement beyond the tolerance.

    The packing bounds are compared in the log domain, where they fit in a
    double; a relative error of ``tol`` in the log is the same relative error
    in the exponent of the value.
    """
    bad, counts = [], {}
    for name, fn in EVALUATORS.items():
        rng = random.Random(f"{seed}:{name}")
        done = 0
        while done < tuples_per_evaluator:
            try:
                a, b = fn(rng)
            except PreconditionError as exc:
                if exc.name == "overflow":
                    continue
                raise
            done += 1
            if not agrees(a, b):
                bad.append((name, a, b))
        counts[name] = done
    return bad, counts

"""Second, independently structured evaluation of every closed form.

Everything here is computed at 50 significant digits with mpmath, in the
log domain, and only exponentiated at the end.  It shares no code with
:mod:`capdim.bounds.formulas` and skips precondition checks; it is meant
to be called on inputs the primary evaluators accept.
"""
from __future__ import annotations

from mpmath import mp, mpf

DPS = 50


def _m(x):
    return mpf(str(x)) if isinstance(x, float) else mpf(x)


def _lg2(x):
    return mp.log(x) / mp.log(2)


def _ret(logv):
    return float(mp.exp(logv))


def _log_lemma4_mp(eps, gamma, n, dG):
    eps, gamma, n, dG = map(_m, (eps, gamma, n, dG))
    if dG == 0:
        return mp.log(2)
    k = mp.ceil(dG * (mp.log(2) + mp.log(gamma) + 1 + mp.log(n) - mp.log(dG) - mp.log(eps)) / mp.log(2))
    return mp.log(2) + k * (2 * mp.log(2) + 2 * mp.log(gamma) + mp.log(n) - 2 * mp.log(eps))


def log_lemma4(eps, gamma, n, dG):
    with mp.workdps(DPS):
        return float(_log_lemma4_mp(eps, gamma, n, dG))


def lemma4(eps, gamma, n, dG):
    return _twin_exp(_log_lemma4_mp, eps, gamma, n, dG)


def _twin_exp(fn, *args):
    with mp.workdps(DPS):
        return _ret(fn(*args))


def _log_lemma5_mp(eps, gamma, n, dG):
    eps, gamma, n, dG = map(_m, (eps, gamma, n, dG))
    if dG == 0:
        return mpf(0)
    ratio_log = mp.log(2) + mp.log(gamma) + 1 + mp.log(n) - mp.log(dG) - mp.log(eps)
    return dG * ratio_log / mp.log(2) * (mp.log(6) + mp.log(gamma) + mp.log(n) - mp.log(eps))


def log_lemma5(eps, gamma, n, dG):
    with mp.workdps(DPS):
        return float(_log_lemma5_mp(eps, gamma, n, dG))


def lemma5(eps, gamma, n, dG):
    return _twin_exp(_log_lemma5_mp, eps, gamma, n, dG)


def _log_lemma6_mp(eps, gamma, dG):
    eps, gamma, dG = map(_m, (eps, gamma, dG))
    return 20 * dG * (mp.log(5) + mp.log(gamma) - mp.log(eps))


def log_lemma6(eps, gamma, dG):
    with mp.workdps(DPS):
        return float(_log_lemma6_mp(eps, gamma, dG))


def lemma6(eps, gamma, dG):
    return _twin_exp(_log_lemma6_mp, eps, gamma, dG)


def _log_lemma7_mp(eps, gamma, n, C, dN):
    eps, gamma, n, C, dN = map(_m, (eps, gamma, n, C, dN))
    if dN == 0:
        return mpf(0)
    lc = mp.log(C - 1)
    expo = dN * (mp.log(2) + mp.log(gamma) + lc + 1 + mp.log(n) - mp.log(dN) - mp.log(eps)) / mp.log(2)
    return expo * (mp.log(6) + mp.log(gamma) + lc / 2 + mp.log(n) - mp.log(eps))


def log_lemma7(eps, gamma, n, C, dN):
    with mp.workdps(DPS):
        return float(_log_lemma7_mp(eps, gamma, n, C, dN))


def lemma7(eps, gamma, n, C, dN):
    return _twin_exp(_log_lemma7_mp, eps, gamma, n, C, dN)


def _log_lemma8_mp(eps, gamma, C, dN):
    eps, gamma, C, dN = map(_m, (eps, gamma, C, dN))
    lr = mp.log(6) + mp.log(gamma) - mp.log(eps)
    lc = mp.log(C - 1)
    return 4 * (3 * lr + lc / 2) / mp.log(2) * dN * (lc + 5 * lr)


def log_lemma8(eps, gamma, C, dN):
    with mp.workdps(DPS):
        return float(_log_lemma8_mp(eps, gamma, C, dN))


def lemma8(eps, gamma, C, dN):
    return _twin_exp(_log_lemma8_mp, eps, gamma, C, dN)


def lemma3(eps, C, M_G, fat_dims):
    with mp.workdps(DPS):
        eps, C, M_G = map(_m, (eps, C, M_G))
        kc = min(4 * mp.power(C / (C - 2), 2), mpf(16))
        l2c = _lg2(2 * C)
        total = mp.fsum(_m(d) for d in fat_dims)
        log_arg = mp.log(48) + mp.log(M_G) + mp.log(l2c) / 7 - mp.log(eps)
        return float(10 * kc * l2c / mp.log(2) * log_arg * total)


def lemma2(C, dN):
    with mp.workdps(DPS):
        C, dN = _m(C), _m(dN)
        if dN == 0:
            return 0.0
        u = mp.log(C - 1)
        a = 2 + 2 / (2 * u + 1)
        b = 1 + 1 / (4 * u + 2)
        return _ret(mp.log(42) + a * mp.log(u + 1) + b * mp.log(dN))


def lemma9(values):
    with mp.workdps(DPS):
        return float(mp.fsum(_m(v) for v in values))


def lemma10(C, Lambda, Lambda_X, gamma):
    with mp.workdps(DPS):
        C, L, LX, g = map(_m, (C, Lambda, Lambda_X, gamma))
        return _ret(mp.log(C) + 2 * (mp.log(L) + mp.log(LX) - mp.log(2) - mp.log(g)))


def hypothesis(eps, K_rho, C, d_GC, d_Ggamma):
    with mp.workdps(DPS):
        eps, K, C, a, d = map(_m, (eps, K_rho, C, d_GC, d_Ggamma))
        return _ret(mp.log(K) + a * mp.log(C) - d * mp.log(eps))


def entropy_linf(m, C, gamma, M_G, K2, K_rho, d_GC, d_Ggamma, variant):
    with mp.workdps(DPS):
        m, C, g, M, K2, K, a, d = map(_m, (m, C, gamma, M_G, K2, K_rho, d_GC, d_Ggamma))
        lpow = d * (3 * mp.log(2) - mp.log(g))
        if variant == "old":
            L = (7 * mp.log(2) + 2 * mp.log(M) + mp.log(m) - 2 * mp.log(g)) / mp.log(2)
            return float(C * (1 + mp.exp(mp.log(K2) + 2 * mp.log(L) + lpow)))
        L = (mp.log(24) + mp.log(C - 1) + mp.log(m)) / mp.log(2)
        return _ret(mp.log(K) + a * mp.log(C) + 2 * mp.log(L) + lpow)


def entropy_l2(eps, C, gamma, M_G, K2, K_rho, d_GC, d_Ggamma, variant):
    with mp.workdps(DPS):
        e, C, g, M, K2, K, a, d = map(_m, (eps, C, gamma, M_G, K2, K_rho, d_GC, d_Ggamma))
        if variant == "old":
            inner = mp.log(12) + mp.log(M) + mp.log(C) / 2 - mp.log(e)
            return _ret(
                mp.log(20) + mp.log(K2) + mp.log(C) + mp.log(inner)
                + d * (mp.log(48) + mp.log(C) / 2 - mp.log(e))
            )
        inner = mp.log(C - 1) + 5 * (mp.log(6) + mp.log(g) - mp.log(e))
        return _ret(mp.log(6) + mp.log(K) + a * mp.log(C) + 2 * mp.log(inner) + d * (mp.log(12) - mp.log(e)))


def risk_linf(m, delta, entropy_log2):
    with mp.workdps(DPS):
        m, dl, H = map(_m, (m, delta, entropy_log2))
        return float(mp.sqrt((H * mp.log(2) + mp.log(2) - mp.log(dl)) * 2 / m) + 1 / m)


def f1(K_rho, C, d_GC, d_Ggamma):
    with mp.workdps(DPS):
        K, C, a, d = map(_m, (K_rho, C, d_GC, d_Ggamma))
        return _ret(d * mp.log(12) + mp.log(K) + a * mp.log(C))


def f2(C, d_Ggamma):
    with mp.workdps(DPS):
        C, d = _m(C), _m(d_Ggamma)
        return float(mp.log(C - 1) / 2 + 5 * (mp.log(6) / 2 + (1 + mp.log(2)) / (2 - d)))


def phase(gamma, K_rho, C, d_GC, d_Ggamma, m):
    with mp.workdps(DPS):
        g, K, C, a, d, m = map(_m, (gamma, K_rho, C, d_GC, d_Ggamma, m))
        lf1 = d * mp.log(12) + mp.log(K) + a * mp.log(C)
        root = mp.exp((lf1 - mp.log(m)) / 2)
        lgm = mp.log(m) / mp.log(2)
        if d < 2:
            F2 = mp.log(C - 1) / 2 + 5 * (mp.log(6) / 2 + (1 + mp.log(2)) / (2 - d))
            return float(10 * (1 + mp.exp(2 * mp.log(2) / (2 - d))) * root * F2 * mp.exp((1 - d / 2) * mp.log(g)))
        if d == 2:
            lr = mp.log(m) / 2 - mp.log(lgm)
            steps = mp.ceil(lr / mp.log(2))
            return float(g * lgm * mp.exp(-mp.log(m) / 2) + 15 * root * steps * (mp.log(C - 1) + 5 * (mp.log(6) + lr)))
        lscale = (mp.log(lgm) - mp.log(m)) / d
        inner = mp.log(C - 1) + 5 * (mp.log(6) + (mp.log(m) - mp.log(lgm)) / d)
        coef = 10 * (1 + mp.exp(2 * mp.log(2) / (d - 2)))
        bracket = 1 + coef * mp.exp(-d / 2 * mp.log(g) + (lf1 - mp.log(lgm)) / 2) * inner
        return float(g * mp.exp(lscale) * bracket)


def risk_l2(gamma, delta, K_rho, C, d_GC, d_Ggamma, m):
    with mp.workdps(DPS):
        lead = 2 * mpf(phase(gamma, K_rho, C, d_GC, d_Ggamma, m)) / _m(gamma)
        return float(lead + mp.sqrt(-mp.log(_m(delta)) / (2 * _m(m))))


def chaining(entropies, h, n):
    """h(N) + 2Σ(h(j)+h(j-1))√(H_j/n) with entropies[j-1] = H(h(j))."""
    with mp.workdps(DPS):
        hs = [_m(v) for v in h]
        terms = [(hs[j] + hs[j - 1]) * mp.sqrt(_m(entropies[j - 1]) / _m(n)) for j in range(1, len(hs))]
        return float(hs[-1] + 2 * mp.fsum(terms))


def kp(p):
    with mp.workdps(DPS):
        p = _m(p)
        return _ret(2 * (p * mp.log(2) - mp.log(mp.power(2, p - 1) - 1)))


def _log_lp_mp(eps, M_F, p, d):
    eps, M, p, d = map(_m, (eps, M_F, p, d))
    return 10 * p * d * (mp.log(12) + mp.log(M) + mp.log(p) / 7 - mp.log(eps))


def log_lp_packing(eps, M_F, p, d):
    with mp.workdps(DPS):
        return float(_log_lp_mp(eps, M_F, p, d))


def lp_packing(eps, M_F, p, d):
    return _twin_exp(_log_lp_mp, eps, M_F, p, d)

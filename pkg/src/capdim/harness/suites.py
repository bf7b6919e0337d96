"""Paired oracle/bound checks over seeded random instances.

Each suite draws small classes (by default |X| <= 2, C = 3, at most eight
functions, values in multiples of 1/8), computes the quantity on the left
of an inequality exactly, evaluates the right-hand side, and records the
outcome in a :class:`VerificationReport`.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from ..bounds import formulas as fm
from ..dims import dimension, is_shattered, strong_dimension
from ..errors import PreconditionError
from ..metrics import INF, _power, packing_number, proper_covering_number, uniform_packing
from ..model import (
    FiniteFunctionClass,
    LabeledPoint,
    ScoreClass,
    component_class,
    discretize,
    example1_class,
    margin_class,
    squash,
    squashed_margin_class,
)
from ..rademacher import empirical_rademacher, maurer_rhs
from .generate import EIGHTHS, SvmSampleSpec, _rng, gen_class, gen_svm_class
from .hull import absconv_fat_dimension

CONVENTIONS = (
    "separation is distance >= eps",
    "covering balls are open (distance < eps)",
    "shattering inequalities are closed (>=)",
    "a dimension of 0 makes the combinatorial product term 1 (factor 2 kept in the ceiling bound)",
)

RAD_TOL = 1e-12
MC_SIGMAS = 4


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 0
    instances: int = 50
    max_points: int = 2
    C: int = 3
    max_functions: int = 8
    max_n: int = 4
    gammas: tuple = (Fraction(1, 8), Fraction(1, 4), Fraction(1, 2))
    value_grid: tuple = EIGHTHS
    draws: int = 20000
    hull_grid_resolution: int = 4
    max_rademacher_signs: int = 20


@dataclass
class VerificationReport:
    lemma_id: str
    seed: int
    instances: int = 0
    failures: int = 0
    skipped: int = 0
    worst_slack: float | None = None
    notes: list = field(default_factory=list)

    def check(self, ok: bool, slack, detail: str = "") -> bool:
        """Record one instance; ``slack`` is bound minus computed value."""
        self.instances += 1
        if slack is not None:
            slack = float(slack)
            if self.worst_slack is None or slack < self.worst_slack:
                self.worst_slack = slack
        if not ok:
            self.failures += 1
            if self.failures <= 5:
                self.notes.append(f"failure: {detail}")
        return ok

    def skip(self, reason: str = ""):
        self.skipped += 1
        if reason and self.skipped <= 3:
            self.notes.append(f"skipped: {reason}")

    @property
    def passed(self) -> bool:
        return self.failures == 0

    @property
    def skip_ratio(self) -> float:
        total = self.instances + self.skipped
        return self.skipped / total if total else 0.0

    def to_json(self) -> dict:
        doc = asdict(self)
        doc["conventions"] = list(CONVENTIONS)
        return doc

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)


# -- instance helpers -------------------------------------------------------


def instance_class(cfg: SuiteConfig, i: int) -> FiniteFunctionClass:
    rng = _rng(cfg.seed, "shape", i)
    return gen_class(
        f"{cfg.seed}:{i}",
        rng.randint(1, cfg.max_points),
        cfg.C,
        rng.randint(2, cfg.max_functions),
        cfg.value_grid,
    )


def _sample(cfg: SuiteConfig, i: int, G: FiniteFunctionClass, n: int | None = None, tag="sample"):
    rng = _rng(cfg.seed, tag, i)
    n = n or rng.randint(1, cfg.max_n)
    return [LabeledPoint(rng.randrange(G.num_points), rng.randint(1, G.C)) for _ in range(n)]


def _pick(cfg: SuiteConfig, i: int, tag: str, options):
    return _rng(cfg.seed, tag, i).choice(list(options))


def _fr(x) -> str:
    return f"{x}"


# -- suites -----------------------------------------------------------------


EXAMPLE1_ROWS = {
    "g1": (Fraction(1, 4), Fraction(-1, 4), Fraction(-3, 8)),
    "g2": (Fraction(-1, 4), Fraction(0), Fraction(0)),
}


def suite_example1(cfg: SuiteConfig, rep: VerificationReport):
    G = example1_class()
    R = margin_class(G)
    rows = {name: R.row(R.index(name), 0) for name in R.names}
    rep.check(rows == EXAMPLE1_ROWS, 0, f"margin rows {rows}")
    gamma = Fraction(1, 4)
    got = {k: dimension(R, gamma, k)[0] for k in ("fat", "graph", "natarajan")}
    want = {"fat": 1, "graph": 0, "natarajan": 0}
    rep.check(got == want, 0, f"dimensions {got}")
    rep.notes.append(f"dimensions at gamma=1/4: {got}")


def suite_ordering(cfg, rep):
    for i in range(cfg.instances):
        R = margin_class(instance_class(cfg, i))
        for gamma in cfg.gammas:
            dN = dimension(R, gamma, "natarajan")[0]
            dG = dimension(R, gamma, "graph")[0]
            dF = dimension(R, gamma, "fat")[0]
            rep.check(dN <= dG <= dF, min(dG - dN, dF - dG), f"instance {i} gamma {gamma}: N={dN} G={dG} fat={dF}")


def _radius_args(eps: Fraction, p, C: int) -> dict:
    """Keyword arguments for the per-category radius C^{-1/p}·ε."""
    if p == INF:
        return {"eps": eps}
    return {"eps": eps, "eps_pow": eps**p / C}


def suite_lemma1(cfg, rep):
    for i in range(cfg.instances):
        G = instance_class(cfg, i)
        z = _sample(cfg, i, G)
        xs = [t.x for t in z]
        gamma = _pick(cfg, i, "gamma", cfg.gammas)
        for p in (1, 2, INF):
            for eps in (Fraction(1, 8), Fraction(1, 4), Fraction(1, 2)):
                n_sq = proper_covering_number(squashed_margin_class(G, gamma), z, eps, p)
                n_rho = proper_covering_number(margin_class(G), z, eps, p)
                per_k = [
                    proper_covering_number(component_class(G, k), xs, p=p, **_radius_args(eps, p, G.C))
                    for k in range(1, G.C + 1)
                ]
                prod = fm.covering_decomposition_bound(float(eps), p if p != INF else "inf", per_k)
                rep.check(
                    n_sq <= n_rho <= prod,
                    prod - n_sq,
                    f"instance {i} p={p} eps={eps}: {n_sq} <= {n_rho} <= {prod}",
                )


def suite_lemma2(cfg, rep):
    hyp = 0
    for i in range(cfg.instances):
        R = margin_class(instance_class(cfg, i))
        for gamma in cfg.gammas:
            dG = dimension(R, gamma, "graph")[0]
            dN = dimension(R, gamma, "natarajan")[0]
            if dG >= 2:
                hyp += 1
                rhs = fm.graph_to_natarajan_bound(R.num_categories, dN)
                rep.check(dG <= rhs, rhs - dG, f"instance {i} gamma {gamma}: dG={dG} dN={dN} rhs={rhs}")
            else:
                rep.check(dN == dG, 0, f"instance {i} gamma {gamma}: dG={dG} but dN={dN}")
    rep.notes.append(f"checks under the d_G >= 2 hypothesis: {hyp}; the rest check d_N = d_G")


def _sound_scale_upper(x: float) -> Fraction:
    """A rational >= x, within 1e-12 relative."""
    q = Fraction(x).limit_denominator(10**12)
    while q < Fraction(x):
        q += Fraction(1, 10**12)
    return q


def suite_lemma3(cfg, rep):
    """Both inequalities of the fat-dimension decomposition, at ε <= γ/2.

    The per-category scale ε/(144·log₂(2C)) is irrational; it is rounded
    up, which can only lower the per-category dimensions and hence the
    right-hand side, so a pass is sound.
    """
    for i in range(cfg.instances):
        G = instance_class(cfg, i)
        R = margin_class(G)
        C = G.C
        for gamma in cfg.gammas:
            for eps in (gamma / 2, gamma / 4):
                d_sq = dimension(squash(R, gamma), eps, "fat")[0]
                d_rho = dimension(R, eps, "fat")[0]
                scale = _sound_scale_upper(float(eps) / (144 * math.log2(2 * C)))
                fat_k = [dimension(component_class(G, k), scale, "fat")[0] for k in range(1, C + 1)]
                rhs = fm.fat_decomposition_bound(float(eps), C, float(G.bound), fat_k)
                rep.check(
                    d_sq <= d_rho <= rhs,
                    min(d_rho - d_sq, rhs - d_rho),
                    f"instance {i} gamma {gamma} eps {eps}: {d_sq} <= {d_rho} <= {rhs}",
                )


def _packing_cases(cfg, i, G):
    """(gamma, eps) pairs used by the packing suites for instance i."""
    gamma = _pick(cfg, i, "gamma", cfg.gammas)
    return [(gamma, gamma), (gamma, gamma / 2)]


def _packing_suite(which: str):
    def suite(cfg, rep):
        rep.notes.append("slack is log(bound) - log(packing), natural log")
        for i in range(cfg.instances):
            G = instance_class(cfg, i)
            R = margin_class(G)
            for gamma, eps in _packing_cases(cfg, i, G):
                F = squash(R, gamma)
                if which in ("lemma4", "lemma5"):
                    d = dimension(R, eps / 4, "graph")[0]
                elif which == "lemma6":
                    d = dimension(R, eps / 24, "graph")[0]
                elif which == "lemma7":
                    d = dimension(R, eps / 4, "natarajan")[0]
                else:
                    d = dimension(R, eps / 12, "natarajan")[0]
                lo_n = max(1, d)
                if lo_n > cfg.max_n:
                    rep.skip(f"instance {i}: dimension {d} exceeds max_n")
                    continue
                n = _rng(cfg.seed, which, "n", i).randint(lo_n, cfg.max_n)
                p = 2 if which in ("lemma6", "lemma8") else INF
                M = uniform_packing(F, n, eps, p).value
                e, g = float(eps), float(gamma)
                if which == "lemma4":
                    log_rhs = fm.log_packing_bound_linfty_G_old(e, g, n, d)
                elif which == "lemma5":
                    log_rhs = fm.log_packing_bound_linfty_G(e, g, n, d)
                elif which == "lemma6":
                    log_rhs = fm.log_packing_bound_l2_G(e, g, d)
                elif which == "lemma7":
                    log_rhs = fm.log_packing_bound_linfty_N(e, g, n, G.C, d)
                else:
                    log_rhs = fm.log_packing_bound_l2_N(e, g, G.C, d)
                slack = log_rhs - math.log(M)
                rep.check(
                    slack >= 0,
                    slack,
                    f"instance {i} gamma {gamma} eps {eps} n {n} d {d}: packing {M} vs log bound {log_rhs}",
                )

    suite.__name__ = f"suite_{which}"
    return suite


LEMMA5_GRID = dict(
    gammas=(0.125, 0.25, 0.5, 1.0),
    eps_ratios=(0.125, 0.25, 0.5, 0.75, 1.0),
    ns=(1, 2, 4, 8, 16, 64, 256),
    dims=(1, 2, 3, 4, 6, 8),
)


def suite_lemma5_vs_lemma4(cfg, rep):
    """Pointwise comparison of the two L∞ graph-dimension packing bounds."""
    rep.notes.append("slack is log(lemma4 bound) - log(lemma5 bound), natural log")
    bad_ratios = set()
    for gamma in LEMMA5_GRID["gammas"]:
        for r in LEMMA5_GRID["eps_ratios"]:
            eps = gamma * r
            for n in LEMMA5_GRID["ns"]:
                for d in (0,) + LEMMA5_GRID["dims"]:
                    if d > n:
                        continue
                    old = fm.log_packing_bound_linfty_G_old(eps, gamma, n, d)
                    new = fm.log_packing_bound_linfty_G(eps, gamma, n, d)
                    ok = new <= old
                    if not ok:
                        bad_ratios.add(r)
                    rep.check(ok, old - new, f"gamma {gamma} eps {eps} n {n} d {d}: log new {new} > log old {old}")
    if bad_ratios:
        rep.notes.append(f"eps/gamma ratios with violations: {sorted(bad_ratios)}")


def suite_lemma9(cfg, rep):
    for i in range(cfg.instances):
        G = instance_class(cfg, i)
        for gamma in cfg.gammas:
            _lemma9_instance(G, gamma, rep, f"instance {i} gamma {gamma}")


def _pair_generators(G: FiniteFunctionClass, k: int, l: int):
    cols = []
    for table in G.tables:
        cols.append(tuple(row[k - 1] for row in table))
        cols.append(tuple(row[l - 1] for row in table))
    return cols


def _lemma9_instance(G, gamma, rep, label, resolution=None):
    lhs = dimension(margin_class(G), gamma, "natarajan")[0]
    dims, uppers = [], []
    for k, l in itertools.combinations(range(1, G.C + 1), 2):
        gens = _pair_generators(G, k, l)
        d, up = absconv_fat_dimension(gens, gamma)
        uppers.append(up)
        dims.append(d)
        if resolution is not None and d is not None:
            low = _grid_hull_dimension(gens, gamma, resolution)
            if low > d:
                rep.check(False, None, f"{label}: grid sub-hull dimension {low} exceeds exact {d}")
    if any(d is None for d in dims):
        if lhs > sum(uppers):
            rep.check(False, sum(uppers) - lhs, f"{label}: N-dim {lhs} above hull upper bound {sum(uppers)}")
        else:
            rep.skip(f"{label}: hull dimension undecided")
        return
    rhs = fm.natarajan_structural_bound(dims, G.C)
    rep.check(lhs <= rhs, rhs - lhs, f"{label}: N-dim {lhs} > {rhs}")


def _grid_hull_dimension(gens, gamma, resolution: int) -> int:
    """Fat dimension of a finite sub-hull: a·u + b·v with a, b multiples of 1/resolution and |a| + |b| <= 1."""
    pts = set()
    steps = [Fraction(j, resolution) for j in range(-resolution, resolution + 1)]
    for u, v in itertools.combinations_with_replacement(gens, 2):
        for a in steps:
            for b in steps:
                if abs(a) + abs(b) <= 1:
                    pts.add(tuple(a * s + b * t for s, t in zip(u, v)))
    width = len(gens[0])
    F = ScoreClass(
        domain=tuple(range(width)),
        names=tuple(f"h{j}" for j in range(len(pts))),
        values=tuple(sorted(pts)),
        range_lo=-max(abs(x) for p in pts for x in p) if pts else Fraction(-1),
        range_hi=max(abs(x) for p in pts for x in p) if pts else Fraction(1),
    )
    return dimension(F, gamma, "fat", max_functions=len(pts))[0]


def verify_lemma9_hull(G: FiniteFunctionClass, gamma, hull_grid_resolution: int = 4, seed: int = 0):
    """Check N-dim(ρ_G) <= Σ_{k<l} fat-dim(absconv(G_k ∪ G_l)) on one class.

    The hull dimensions are exact for shattered sets of size <= 2 and come
    from a linear program otherwise; an LP value within the tolerance band
    makes the instance undecided, and it is skipped unless even the
    per-point upper bound already fails.  A finite grid sub-hull gives an
    independent lower bound that is checked against the exact value.
    """
    rep = VerificationReport("lemma9", seed)
    _lemma9_instance(G, Fraction(gamma), rep, f"gamma {gamma}", resolution=hull_grid_resolution)
    return rep


SVM_GAMMA_FRACTIONS = (Fraction(1), Fraction(3, 4), Fraction(1, 2), Fraction(1, 4), Fraction(1, 8))


def suite_lemma10(cfg, rep):
    radii = (Fraction(1, 2), Fraction(1), Fraction(2))
    for i in range(cfg.instances):
        rng = _rng(cfg.seed, "svm-shape", i)
        spec = SvmSampleSpec(
            feature_dim=rng.randint(1, 3),
            num_functions=rng.randint(2, cfg.max_functions),
            Lambda=rng.choice(radii),
            Lambda_X=rng.choice(radii),
            C=cfg.C,
            seed=f"{cfg.seed}:{i}",
            num_points=rng.randint(1, max(cfg.max_points, 3)),
        )
        G = gen_svm_class(spec)
        top = spec.Lambda * spec.Lambda_X
        gamma = top * rng.choice(SVM_GAMMA_FRACTIONS)
        dN = dimension(margin_class(G), gamma, "natarajan")[0]
        rhs = fm.svm_natarajan_bound(G.C, float(spec.Lambda), float(spec.Lambda_X), float(gamma))
        rep.check(dN <= rhs, rhs - dN, f"instance {i}: N-dim {dN} > {rhs}")


def suite_sandwich(cfg, rep):
    for i in range(cfg.instances):
        G = instance_class(cfg, i)
        z = _sample(cfg, i, G)
        gamma = _pick(cfg, i, "gamma", cfg.gammas)
        for F in (margin_class(G), squashed_margin_class(G, gamma)):
            for p in (1, 2, INF):
                for eps in (Fraction(1, 16), Fraction(1, 8), Fraction(1, 4), Fraction(1, 2)):
                    m2 = packing_number(F, z, 2 * eps, p).value
                    cov = proper_covering_number(F, z, eps, p)
                    m1 = packing_number(F, z, eps, p).value
                    rep.check(
                        m2 <= cov <= m1,
                        min(cov - m2, m1 - cov),
                        f"instance {i} p={p} eps={eps}: {m2} <= {cov} <= {m1}",
                    )


def suite_discretization(cfg, rep):
    for i in range(cfg.instances):
        G = instance_class(cfg, i)
        z = _sample(cfg, i, G)
        gamma = _pick(cfg, i, "gamma", cfg.gammas)
        F = squashed_margin_class(G, gamma)
        rows = F.restricted_rows(z)
        for eps in (gamma, gamma / 2, gamma / 4):
            # L2: ε-separation survives as N-separation for η <= ε/(N+1)
            for N in (1, 2, 3):
                for eta in (eps / (N + 1), eps / (N + 2)):
                    D = discretize(F, eta).restricted_rows(z)
                    worst = None
                    ok = True
                    for a, b in itertools.combinations(range(len(rows)), 2):
                        if _power(rows[a], rows[b], 2) >= eps**2:
                            gap = _power(D[a], D[b], 2) - N**2
                            worst = gap if worst is None else min(worst, gap)
                            ok &= gap >= 0
                    rep.check(ok, worst, f"instance {i} L2 eps={eps} N={N} eta={eta}")
            # L∞: packing at ε is at most the 2-packing of the η-discretization
            for eta in (eps / 2, eps / 4):
                m_eps = packing_number(F, z, eps, INF).value
                m_disc = packing_number(discretize(F, eta), z, 2, INF).value
                rep.check(m_eps <= m_disc, m_disc - m_eps, f"instance {i} Linf eps={eps} eta={eta}: {m_eps} > {m_disc}")


def suite_strong_vs_margin(cfg, rep):
    for i in range(cfg.instances):
        R = margin_class(instance_class(cfg, i))
        for gamma in cfg.gammas:
            for eta in (gamma / 2, gamma / 4):
                D = discretize(R, eta)
                for eps in (eta / 2, eta / 4):
                    for strong, margin in (("strong_g", "graph"), ("strong_n", "natarajan")):
                        s = strong_dimension(D, strong)
                        d = dimension(R, eps, margin)[0]
                        rep.check(s <= d, d - s, f"instance {i} eta {eta} eps {eps}: {strong}={s} > {margin}={d}")


def suite_separation(cfg, rep):
    pairs_seen = 0
    for i in range(cfg.instances):
        G = instance_class(cfg, i)
        R = margin_class(G)
        for gamma in cfg.gammas:
            for eta in (gamma / 2, gamma / 4, gamma / 8):
                Fg = discretize(squash(R, gamma), eta)
                Fr = discretize(R, eta)
                for a, b in itertools.permutations(range(len(G.names)), 2):
                    for z in Fr.domain:
                        pos = Fg.position(z)
                        va, vb = Fg.values[a][pos], Fg.values[b][pos]
                        if va - vb < 2:
                            continue
                        pairs_seen += 1
                        w = va - 1
                        row_b = Fr.row(b, z.x)
                        top = max(v for k, v in enumerate(row_b, 1) if k != z.y)
                        c = min(k for k, v in enumerate(row_b, 1) if k != z.y and v == top)
                        names = (Fg.names[a], Fg.names[b])
                        sub_g = Fg.with_values([Fg.values[a], Fg.values[b]], names=names)
                        sub_r = Fr.with_values([Fr.values[a], Fr.values[b]], names=names)
                        ok = (
                            is_shattered(sub_g, [z], None, "strong", [w])
                            and is_shattered(sub_r, [z], None, "strong_g", [w])
                            and is_shattered(sub_r, [z], None, "strong_n", [w], [c])
                        )
                        rep.check(ok, 0, f"instance {i} gamma {gamma} eta {eta} pair {names} at {tuple(z)}")
    rep.notes.append(f"separated (pair, point) configurations checked: {pairs_seen}")


def suite_kp(cfg, rep):
    vacuous = 0
    for i in range(cfg.instances):
        R = margin_class(instance_class(cfg, i))
        for gamma in cfg.gammas:
            d, cert = dimension(R, gamma, "fat")
            if d == 0:
                vacuous += 1
                continue
            for n in range(1, d + 1):
                pts = list(cert.points[:n])
                for p in (2, 3):
                    M = packing_number(R, pts, gamma, p).value
                    rhs = fm.kp_constant(p) * math.log2(M)
                    rep.check(n <= rhs, rhs - n, f"instance {i} gamma {gamma} n {n} p {p}: packing {M}")
    rep.notes.append(f"instance/gamma pairs with zero fat dimension (nothing to check): {vacuous}")


def suite_corollary1(cfg, rep):
    """R̂(ρ_{G,γ}) <= R̂(ρ_G) <= maurer_rhs(G), exact, plus Monte-Carlo agreement."""
    first = second = mc_bad = 0
    corrected_worst = None
    for i in range(cfg.instances):
        G = instance_class(cfg, i)
        max_n = max(1, min(cfg.max_n, cfg.max_rademacher_signs // G.C))
        z = _sample(cfg, i, G, _rng(cfg.seed, "rad-n", i).randint(1, max_n))
        gamma = _pick(cfg, i, "gamma", cfg.gammas)
        r_sq = empirical_rademacher(squashed_margin_class(G, gamma), z)
        r_rho = empirical_rademacher(margin_class(G), z)
        r_m = maurer_rhs(G, z)
        ok1 = r_sq.value <= r_rho.value + RAD_TOL
        ok2 = r_rho.value <= r_m.value + RAD_TOL
        first += not ok1
        second += not ok2
        # the same chain with the Lipschitz constant 1/√2 of the margin map
        gap = r_m.exact_value - r_rho.exact_value
        corrected_worst = gap if corrected_worst is None else min(corrected_worst, gap)
        rep.check(
            ok1 and ok2,
            min(r_rho.value - r_sq.value, r_m.value - r_rho.value),
            f"instance {i} gamma {gamma} n {len(z)}: {r_sq.value} <= {r_rho.value} <= {r_m.value}",
        )
        mc = empirical_rademacher(margin_class(G), z, "monte_carlo", cfg.draws, seed=cfg.seed * 1_000_003 + i)
        tol = MC_SIGMAS * mc.std_error if mc.std_error > 0 else RAD_TOL
        if abs(mc.value - r_rho.value) > tol:
            mc_bad += 1
            rep.check(False, None, f"instance {i}: Monte-Carlo {mc.value} vs exact {r_rho.value} (se {mc.std_error})")
    rep.notes.append(f"first inequality failures: {first}")
    rep.notes.append(f"second inequality failures: {second}")
    rep.notes.append(f"Monte-Carlo disagreements beyond {MC_SIGMAS} standard errors: {mc_bad}")
    if corrected_worst is not None:
        rep.notes.append(
            f"min of (1/n)E[sup ΣΣσg] - R(rho_G), i.e. the chain with factor 1/n instead of 1/(sqrt2 n): {float(corrected_worst)}"
        )


SUITES: dict[str, Callable] = {
    "example1": suite_example1,
    "ordering": suite_ordering,
    "lemma1": suite_lemma1,
    "lemma2": suite_lemma2,
    "lemma3": suite_lemma3,
    "lemma4": _packing_suite("lemma4"),
    "lemma5": _packing_suite("lemma5"),
    "lemma5_vs_lemma4": suite_lemma5_vs_lemma4,
    "lemma6": _packing_suite("lemma6"),
    "lemma7": _packing_suite("lemma7"),
    "lemma8": _packing_suite("lemma8"),
    "lemma9": suite_lemma9,
    "lemma10": suite_lemma10,
    "sandwich": suite_sandwich,
    "discretization": suite_discretization,
    "strong_vs_margin": suite_strong_vs_margin,
    "separation": suite_separation,
    "kp": suite_kp,
    "corollary1": suite_corollary1,
}


def verify(lemma_id: str, config: SuiteConfig | dict | None = None) -> VerificationReport:
    """Run one suite and return its report."""
    if lemma_id not in SUITES:
        raise PreconditionError("lemma_id", f"unknown lemma id {lemma_id!r}; known: {sorted(SUITES)}")
    if config is None:
        cfg = SuiteConfig()
    elif isinstance(config, SuiteConfig):
        cfg = config
    else:
        cfg = SuiteConfig(**config)
    rep = VerificationReport(lemma_id, cfg.seed)
    SUITES[lemma_id](cfg, rep)
    return rep

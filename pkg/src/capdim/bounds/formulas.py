"""Closed-form right-hand sides of the packing, dimension and risk bounds.

Each evaluator checks its preconditions and raises
:class:`~capdim.errors.PreconditionError` naming the offending argument.
No evaluator returns NaN or an infinity; results that do not fit in a
double are reported as an ``overflow`` precondition failure and the
``log_*`` variants should be used instead.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from ..errors import PreconditionError
from .params import BoundParams, _count, _real

LN2 = math.log(2.0)


def _finite(name: str, thunk: Callable[[], float]) -> float:
    try:
        value = thunk()
    except OverflowError:
        raise PreconditionError("overflow", f"{name} does not fit in a double") from None
    if not math.isfinite(value):
        raise PreconditionError("overflow", f"{name} does not fit in a double")
    return value


def _eps_gamma(eps, gamma) -> tuple[float, float]:
    gamma = _real("gamma", gamma, 0, 1)
    eps = _real("eps", eps, 0, gamma)
    return eps, gamma


def _dim(name, value) -> float:
    return _real(name, value, 0, lo_open=False)


def _n_dim(n, d, dname):
    n = _count("n", n, 1)
    if n < d:
        raise PreconditionError("n", f"n must be >= {dname} = {d}, got {n}")
    return n


# -- combinatorial packing bounds ------------------------------------------


def log_packing_bound_linfty_G_old(eps, gamma, n, dG) -> float:
    eps, gamma = _eps_gamma(eps, gamma)
    dG = _dim("dG", dG)
    n = _n_dim(n, dG, "dG")
    if dG == 0:
        return LN2
    expo = math.ceil(dG * math.log2(2 * gamma * math.e * n / (dG * eps)))
    return LN2 + expo * math.log(4 * gamma**2 * n / eps**2)


def packing_bound_linfty_G_old(eps, gamma, n, dG) -> float:
    """2 (4γ²n/ε²)^{⌈d log₂(2γen/(dε))⌉} with d = d_G(ε/4); 2 when d = 0."""
    eps, gamma = _eps_gamma(eps, gamma)
    dG = _dim("dG", dG)
    n = _n_dim(n, dG, "dG")
    if dG == 0:
        return 2.0
    expo = math.ceil(dG * math.log2(2 * gamma * math.e * n / (dG * eps)))
    return _finite("lemma4", lambda: 2 * (4 * gamma**2 * n / eps**2) ** expo)


def _lemma5_exponent(eps, gamma, n, dG):
    return dG * math.log2(2 * gamma * math.e * n / (dG * eps))


def log_packing_bound_linfty_G(eps, gamma, n, dG) -> float:
    eps, gamma = _eps_gamma(eps, gamma)
    dG = _dim("dG", dG)
    n = _n_dim(n, dG, "dG")
    if dG == 0:
        return 0.0
    return _lemma5_exponent(eps, gamma, n, dG) * math.log(6 * gamma * n / eps)


def packing_bound_linfty_G(eps, gamma, n, dG) -> float:
    """(6γn/ε)^{d log₂(2γen/(dε))} with d = d_G(ε/4); 1 when d = 0."""
    eps, gamma = _eps_gamma(eps, gamma)
    dG = _dim("dG", dG)
    n = _n_dim(n, dG, "dG")
    if dG == 0:
        return 1.0
    expo = _lemma5_exponent(eps, gamma, n, dG)
    return _finite("lemma5", lambda: (6 * gamma * n / eps) ** expo)


def log_packing_bound_l2_G(eps, gamma, dG) -> float:
    eps, gamma = _eps_gamma(eps, gamma)
    dG = _dim("dG", dG)
    return 20 * dG * math.log(5 * gamma / eps)


def packing_bound_l2_G(eps, gamma, dG) -> float:
    """(5γ/ε)^{20 d} with d = d_G(ε/24)."""
    eps, gamma = _eps_gamma(eps, gamma)
    dG = _dim("dG", dG)
    return _finite("lemma6", lambda: (5 * gamma / eps) ** (20 * dG))


def _categories(C, lo=3) -> int:
    return _count("C", C, lo)


def log_packing_bound_linfty_N(eps, gamma, n, C, dN) -> float:
    eps, gamma = _eps_gamma(eps, gamma)
    C = _categories(C, 2)
    dN = _dim("dN", dN)
    n = _n_dim(n, dN, "dN")
    if dN == 0:
        return 0.0
    expo = dN * math.log2(2 * gamma * (C - 1) * math.e * n / (dN * eps))
    return expo * math.log(6 * gamma * math.sqrt(C - 1) * n / eps)


def packing_bound_linfty_N(eps, gamma, n, C, dN) -> float:
    """(6γ√(C-1)n/ε)^{d log₂(2γ(C-1)en/(dε))} with d = d_N(ε/4); 1 when d = 0."""
    eps, gamma = _eps_gamma(eps, gamma)
    C = _categories(C, 2)
    dN = _dim("dN", dN)
    n = _n_dim(n, dN, "dN")
    if dN == 0:
        return 1.0
    expo = dN * math.log2(2 * gamma * (C - 1) * math.e * n / (dN * eps))
    base = 6 * gamma * math.sqrt(C - 1) * n / eps
    return _finite("lemma7", lambda: base**expo)


def log_packing_bound_l2_N(eps, gamma, C, dN) -> float:
    eps, gamma = _eps_gamma(eps, gamma)
    C = _categories(C, 2)
    dN = _dim("dN", dN)
    r = 6 * gamma / eps
    expo = 4 * math.log2(r**3 * math.sqrt(C - 1)) * dN
    return expo * math.log((C - 1) * r**5)


def packing_bound_l2_N(eps, gamma, C, dN) -> float:
    """((C-1)(6γ/ε)⁵)^{4 log₂((6γ/ε)³√(C-1)) d} with d = d_N(ε/12)."""
    eps, gamma = _eps_gamma(eps, gamma)
    C = _categories(C, 2)
    dN = _dim("dN", dN)
    r = 6 * gamma / eps
    expo = 4 * math.log2(r**3 * math.sqrt(C - 1)) * dN
    return _finite("lemma8", lambda: ((C - 1) * r**5) ** expo)


# -- structural results -----------------------------------------------------


def K_C(C) -> float:
    C = _categories(C)
    return min(4 * (C / (C - 2)) ** 2, 16.0)


def fat_decomposition_bound(eps, C, M_G, fat_dims: Sequence) -> float:
    """Upper bound on ε-dim(ρ_G) from the ε/(144 log₂(2C))-dims of the G_k."""
    eps = _real("eps", eps, 0)
    C = _categories(C)
    M_G = _real("M_G", M_G, 1, lo_open=False)
    dims = [_dim("fat_dims", d) for d in fat_dims]
    if len(dims) != C:
        raise PreconditionError("fat_dims", f"expected {C} per-category values, got {len(dims)}")
    lg = math.log2(2 * C)
    lead = 10 * K_C(C) * lg / LN2
    return _finite("lemma3", lambda: lead * math.log(48 * M_G * lg ** (1 / 7) / eps) * sum(dims))


def alpha(C) -> float:
    C = _categories(C)
    return 2 + 2 / (2 * math.log(C - 1) + 1)


def beta(C) -> float:
    C = _categories(C)
    return 1 + 1 / (4 * math.log(C - 1) + 2)


def graph_to_natarajan_bound(C, dN) -> float:
    """42 (ln(C-1)+1)^{α(C)} dN^{β(C)}: an upper bound on the margin Graph dimension."""
    C = _categories(C)
    dN = _dim("dN", dN)
    if dN == 0:
        return 0.0
    return _finite(
        "lemma2", lambda: 42 * (math.log(C - 1) + 1) ** alpha(C) * dN ** beta(C)
    )


def natarajan_structural_bound(pair_fat_dims, C: int | None = None) -> float:
    """Sum over k < l of the fat dimensions of absconv(G_k ∪ G_l)."""
    if isinstance(pair_fat_dims, Mapping):
        values = list(pair_fat_dims.values())
    else:
        values = list(pair_fat_dims)
    if C is None:
        C = int((1 + math.isqrt(1 + 8 * len(values))) // 2)
        if C < 3 or C * (C - 1) // 2 != len(values):
            raise PreconditionError(
                "pair_fat_dims", f"{len(values)} values is not C(C-1)/2 for any C >= 3"
            )
    C = _categories(C)
    if len(values) != C * (C - 1) // 2:
        raise PreconditionError(
            "pair_fat_dims", f"expected {C * (C - 1) // 2} pairwise values, got {len(values)}"
        )
    total = 0
    for v in values:
        total += _dim("pair_fat_dims", v)
    return total


def svm_natarajan_bound(C, Lambda, Lambda_X, gamma) -> float:
    """C (ΛΛ_X / 2γ)²."""
    C = _categories(C)
    Lambda = _real("Lambda", Lambda, 0)
    Lambda_X = _real("Lambda_X", Lambda_X, 0)
    gamma = _real("gamma", gamma, 0, Lambda * Lambda_X)
    return C * (Lambda * Lambda_X / (2 * gamma)) ** 2


def hypothesis_nat_dim(eps, params: BoundParams) -> float:
    """K_ρ C^{d_GC} ε^{-d_Ggamma}."""
    eps = _real("eps", eps, 0, params.M_G)
    return _finite(
        "hypothesis", lambda: params.K_rho * params.C**params.d_GC * eps ** (-params.d_Ggamma)
    )


# -- metric entropies -------------------------------------------------------


def _variant(variant: str) -> str:
    if variant not in ("old", "new"):
        raise PreconditionError("variant", f"variant must be 'old' or 'new', got {variant!r}")
    return variant


def linfty_entropy_threshold(params: BoundParams, variant: str) -> float:
    """Smallest m for which the L∞ metric-entropy bound is stated."""
    p = params
    power = (8 / p.gamma) ** p.d_Ggamma
    if _variant(variant) == "old":
        return 0.5 * p.K2 * power
    return 0.5 * p.K_rho * p.C**p.d_GC * power


def metric_entropy_linfty(m, params: BoundParams, variant: str = "new") -> float:
    """Upper bound on log₂ N∞_int(γ/2, ρ_{G,γ}, 2m)."""
    m = _count("m", m, 1)
    p = params
    threshold = linfty_entropy_threshold(p, variant)
    if m < threshold:
        raise PreconditionError("m", f"m = {m} is below the {variant} threshold {threshold:.6g}")
    power = (8 / p.gamma) ** p.d_Ggamma
    if variant == "old":
        lg = math.log2(128 * p.M_G**2 * m / p.gamma**2)
        return _finite("old_linf", lambda: p.C * (1 + p.K2 * lg**2 * power))
    lg = math.log2(24 * (p.C - 1) * m)
    return _finite("new_linf", lambda: p.K_rho * p.C**p.d_GC * lg**2 * power)


def metric_entropy_l2(eps, params: BoundParams, variant: str = "new") -> float:
    """Upper bound on ln N2_int(ε, ρ_{G,γ}, n), valid for every n."""
    p = params
    eps, _ = _eps_gamma(eps, p.gamma)
    if _variant(variant) == "old":
        sc = math.sqrt(p.C)
        return _finite(
            "old_l2",
            lambda: 20 * p.K2 * p.C * math.log(12 * p.M_G * sc / eps) * (48 * sc / eps) ** p.d_Ggamma,
        )
    inner = math.log((p.C - 1) * (6 * p.gamma / eps) ** 5)
    return _finite(
        "new_l2", lambda: 6 * p.K_rho * p.C**p.d_GC * inner**2 * (12 / eps) ** p.d_Ggamma
    )


def covering_decomposition_bound(eps, p, per_category_coverings: Sequence[int]) -> int:
    """Product of per-category proper covering numbers at radius C^{-1/p}ε."""
    _real("eps", eps, 0)
    if not (p == math.inf or p in ("inf", "infinity") or (isinstance(p, int) and p >= 1)):
        raise PreconditionError("p", f"p must be an integer >= 1 or infinity, got {p!r}")
    out = 1
    for v in per_category_coverings:
        v = _count("per_category_coverings", v, 1)
        out *= v
    return out


# -- guaranteed risks -------------------------------------------------------


def guaranteed_risk_linfty(m, params: BoundParams, entropy_log2) -> float:
    """Confidence interval √((2/m)(ln N + ln(2/δ))) + 1/m with log₂ N supplied."""
    m = _count("m", m, 1)
    H = _real("entropy_log2", entropy_log2, 0, lo_open=False)
    return math.sqrt(2 / m * (H * LN2 + math.log(2 / params.delta))) + 1 / m


def guaranteed_risk_linfty_pipeline(m, params: BoundParams, variant: str = "new") -> float:
    return guaranteed_risk_linfty(m, params, metric_entropy_linfty(m, params, variant))


@dataclass(frozen=True)
class ChainSchedule:
    """Radii h(0) >= h(1) >= ... >= h(N) > 0 for the chaining sum."""

    h: tuple[float, ...]

    def __post_init__(self):
        h = tuple(_real("h", v, 0) for v in self.h)
        if len(h) < 2:
            raise PreconditionError("schedule", "need at least h(0) and h(1)")
        if any(b > a for a, b in zip(h, h[1:])):
            raise PreconditionError("schedule", "h must be nonincreasing")
        object.__setattr__(self, "h", h)

    @property
    def N(self) -> int:
        return len(self.h) - 1

    @classmethod
    def geometric(cls, gamma, d, N) -> "ChainSchedule":
        """h(j) = γ 2^{-2j/(2-d)}, the schedule used when d < 2."""
        d = _real("d_Ggamma", d, 0, 2, hi_open=True)
        N = _count("N", N, 1)
        return cls(tuple(gamma * 2 ** (-2 * j / (2 - d)) for j in range(N + 1)))


def chaining_bound(entropy_fn: Callable[[float], float], schedule: ChainSchedule, n, diameter=None) -> float:
    """h(N) + 2 Σ_j (h(j) + h(j-1)) √(ln N_int(h(j)) / n)."""
    n = _count("n", n, 1)
    h = schedule.h
    if diameter is not None and h[0] < diameter:
        raise PreconditionError("schedule", f"h(0) = {h[0]} is below the diameter {diameter}")
    total = 0.0
    for j in range(1, len(h)):
        H = entropy_fn(h[j])
        if not (math.isfinite(H) and H >= 0):
            raise PreconditionError("entropy_fn", f"entropy at radius {h[j]} is {H!r}")
        total += (h[j] + h[j - 1]) * math.sqrt(H / n)
    return h[-1] + 2 * total


def new_l2_entropy_fn(params: BoundParams) -> Callable[[float], float]:
    """Radius ↦ the new L₂ entropy bound; 0 beyond γ, where one ball covers ρ_{G,γ}."""

    def fn(radius: float) -> float:
        if radius > params.gamma:
            return 0.0
        return metric_entropy_l2(radius, params, "new")

    return fn


def F1(params: BoundParams) -> float:
    return 12**params.d_Ggamma * params.K_rho * params.C**params.d_GC


def F2(params: BoundParams) -> float:
    d = params.d_Ggamma
    if d >= 2:
        raise PreconditionError("d_Ggamma", "F2 is defined for d_Ggamma < 2")
    return math.log(math.sqrt(params.C - 1)) + 5 * (math.log(math.sqrt(6)) + (1 + LN2) / (2 - d))


def chained_new_l2_bound(params: BoundParams, m, schedule: ChainSchedule) -> float:
    """h(N) + 5√(F₁/m) Σ_{j∈J} (h(j)+h(j-1)) h(j)^{-d/2} ln((C-1)(6γ/h(j))⁵), J = {h(j) <= γ}."""
    m = _count("m", m, 1)
    p = params
    h = schedule.h
    total = 0.0
    for j in range(1, len(h)):
        if h[j] > p.gamma:
            continue
        total += (h[j] + h[j - 1]) / h[j] ** (p.d_Ggamma / 2) * math.log(
            (p.C - 1) * (6 * p.gamma / h[j]) ** 5
        )
    return h[-1] + 5 * math.sqrt(F1(p) / m) * total


def rademacher_phase_bound(params: BoundParams, m) -> float:
    """Upper bound on R_m(ρ_{G,γ}); one formula per regime of d_Ggamma."""
    m = _count("m", m, 4)
    p = params
    d, g = p.d_Ggamma, p.gamma
    f1 = F1(p)
    lg = math.log2(m)
    if d < 2:
        return _finite(
            "phase",
            lambda: 10 * (1 + 2 ** (2 / (2 - d))) * math.sqrt(f1 / m) * F2(p) * g ** (1 - d / 2),
        )
    if d == 2:
        r = math.sqrt(m) / lg
        return _finite(
            "phase",
            lambda: g * lg / math.sqrt(m)
            + 15 * math.sqrt(f1 / m) * math.ceil(math.log2(r)) * math.log((p.C - 1) * (6 * r) ** 5),
        )
    scale = (lg / m) ** (1 / d)
    inner = math.log((p.C - 1) * (6 * (m / lg) ** (1 / d)) ** 5)
    bracket = 1 + 10 * (1 + 2 ** (2 / (d - 2))) * (1 / g) ** (d / 2) * math.sqrt(f1 / lg) * inner
    return _finite("phase", lambda: g * scale * bracket)


def guaranteed_risk_l2(params: BoundParams, m) -> float:
    """(2/γ) R_m bound + √(ln(1/δ)/(2m))."""
    lead = 2 / params.gamma * rademacher_phase_bound(params, m)
    return _finite("risk_l2", lambda: lead + math.sqrt(math.log(1 / params.delta) / (2 * int(m))))


# -- auxiliary constants ----------------------------------------------------


def kp_constant(p) -> float:
    p = _count("p", p, 2)
    return (2**p / (2 ** (p - 1) - 1)) ** 2


def log_lp_packing(eps, M_F, p, d) -> float:
    M_F = _real("M_F", M_F, 0)
    eps = _real("eps", eps, 0, 2 * M_F)
    p = _count("p", p, 2)
    d = _dim("d", d)
    return 10 * p * d * math.log(12 * M_F * p ** (1 / 7) / eps)


def lp_packing(eps, M_F, p, d) -> float:
    """(12 M_F p^{1/7}/ε)^{10 p d} with d = d(ε/(36p))."""
    M_F = _real("M_F", M_F, 0)
    eps = _real("eps", eps, 0, 2 * M_F)
    p = _count("p", p, 2)
    d = _dim("d", d)
    return _finite("lp_packing", lambda: (12 * M_F * p ** (1 / 7) / eps) ** (10 * p * d))


def aux_bounds(kind: str, **args) -> float:
    if kind == "kp":
        return kp_constant(args["p"])
    if kind == "lp_packing":
        return lp_packing(args["eps"], args["M_F"], args["p"], args["d"])
    raise PreconditionError("kind", f"unknown auxiliary bound {kind!r}")

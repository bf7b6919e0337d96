from __future__ import annotations

import math
from dataclasses import dataclass, replace

from ..errors import PreconditionError


def _real(name, value, lo=None, hi=None, lo_open=True, hi_open=False) -> float:
    try:
        v = float(value)
    except (TypeError, ValueError):
        raise PreconditionError(name, f"not a number: {value!r}") from None
    if not math.isfinite(v):
        raise PreconditionError(name, f"must be finite, got {value!r}")
    if lo is not None and (v <= lo if lo_open else v < lo):
        raise PreconditionError(name, f"must be {'>' if lo_open else '>='} {lo}, got {value}")
    if hi is not None and (v >= hi if hi_open else v > hi):
        raise PreconditionError(name, f"must be {'<' if hi_open else '<='} {hi}, got {value}")
    return v


def _count(name, value, lo) -> int:
    if isinstance(value, bool) or int(value) != value:
        raise PreconditionError(name, f"must be an integer, got {value!r}")
    value = int(value)
    if value < lo:
        raise PreconditionError(name, f"must be >= {lo}, got {value}")
    return value


@dataclass(frozen=True)
class BoundParams:
    """Parameters shared by the closed-form evaluators.

    ``K1, K2, d_GC, d_Ggamma`` are the constants of the polynomial-growth
    hypothesis: ε-N-dim(ρ_G) <= K1·C^{d_GC}·max_k ε-dim(G_k) and
    max_k ε-dim(G_k) <= K2·ε^{-d_Ggamma}.
    """

    C: int = 3
    gamma: float = 1.0
    delta: float = 0.05
    M_G: float = 1.0
    K1: float = 1.0
    K2: float = 1.0
    d_GC: float = 1.0
    d_Ggamma: float = 1.0
    Lambda: float = 1.0
    Lambda_X: float = 1.0
    m: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "C", _count("C", self.C, 3))
        object.__setattr__(self, "gamma", _real("gamma", self.gamma, 0, 1))
        object.__setattr__(self, "delta", _real("delta", self.delta, 0, 1, hi_open=True))
        object.__setattr__(self, "M_G", _real("M_G", self.M_G, 1, lo_open=False))
        for name in ("K1", "K2", "d_Ggamma", "Lambda", "Lambda_X"):
            object.__setattr__(self, name, _real(name, getattr(self, name), 0))
        object.__setattr__(self, "d_GC", _real("d_GC", self.d_GC, 0, 2))
        if self.m is not None:
            object.__setattr__(self, "m", _count("m", self.m, 1))

    @property
    def K_rho(self) -> float:
        return self.K1 * self.K2

    def with_(self, **changes) -> "BoundParams":
        return replace(self, **changes)

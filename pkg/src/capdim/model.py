"""Finite vector-valued function classes and the operators built on them.

A :class:`FiniteFunctionClass` is a table of ``C`` component scores per
description.  Everything else in the package is derived from it: the class
of margin functions, its squashed version, η-discretizations, and the
empirical margin risks.  All values are :class:`fractions.Fraction`.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Hashable, Iterable, Literal, NamedTuple, Sequence

from .errors import PreconditionError

REJECT = "*"

ValueKind = Literal["real", "integer"]
LossKind = Literal["hard", "ramp"]


def as_rational(value) -> Fraction:
    """Convert ``value`` to an exact rational.

    Accepts ints, Fractions, ``"a/b"`` strings and terminating decimal
    strings.  Floats are read through their shortest repr, so ``0.51``
    becomes ``51/100``.
    """
    if isinstance(value, bool):
        raise PreconditionError("rational", f"boolean is not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise PreconditionError("rational", f"non-finite value {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        text = value.strip()
        try:
            out = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise PreconditionError("rational", f"cannot parse {value!r} exactly") from exc
        return out
    raise PreconditionError("rational", f"unsupported type {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class LabeledPoint(NamedTuple):
    """A pair ``(x, y)``: description index (0-based) and category (1-based)."""

    x: int
    y: int


@dataclass(frozen=True)
class FiniteFunctionClass:
    """Tabular class G of functions from X into [-M, M]^C.

    ``tables[j][x][k-1]`` is ``g_k(x)`` for the j-th function.
    """

    num_categories: int
    bound: Fraction
    points: tuple[str, ...]
    names: tuple[str, ...]
    tables: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        C = self.num_categories
        if C < 3:
            raise PreconditionError("num_categories", f"C must be >= 3, got {C}")
        if self.bound < 1:
            raise PreconditionError("bound", f"M_G must be >= 1, got {self.bound}")
        if not self.names:
            raise PreconditionError("functions", "class needs at least one function")
        if len(set(self.names)) != len(self.names):
            raise PreconditionError("functions", "function names must be unique")
        if len(self.tables) != len(self.names):
            raise PreconditionError("functions", "one table per function name")
        n = len(self.points)
        if n == 0:
            raise PreconditionError("points", "class needs at least one description")
        for name, table in zip(self.names, self.tables):
            if len(table) != n or any(len(row) != C for row in table):
                raise PreconditionError("functions", f"table of {name!r} is not {n}x{C}")
            for row in table:
                for v in row:
                    if abs(v) > self.bound:
                        raise PreconditionError(
                            "bound", f"value {v} of {name!r} exceeds M_G = {self.bound}"
                        )

    @classmethod
    def from_rows(cls, C, M, rows: dict[str, Sequence[Sequence]], points=None):
        """Build a class from ``{name: [[g_1(x), ..., g_C(x)] per x]}``."""
        names = tuple(rows)
        tables = tuple(
            tuple(tuple(as_rational(v) for v in row) for row in rows[name]) for name in names
        )
        num_points = len(tables[0]) if tables else 0
        if points is None:
            points = tuple(f"x{i}" for i in range(num_points))
        return cls(int(C), as_rational(M), tuple(points), names, tables)

    @property
    def num_points(self) -> int:
        return len(self.points)

    @property
    def C(self) -> int:
        return self.num_categories

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise PreconditionError("function", f"unknown function {name!r}") from None

    def table(self, name: str):
        return self.tables[self.index(name)]

    def value(self, name: str, x: int, k: int) -> Fraction:
        """``g_k(x)`` with k 1-based."""
        self._check_point(x, k)
        return self.table(name)[x][k - 1]

    def _check_point(self, x: int, k: int | None = None):
        if not 0 <= x < self.num_points:
            raise PreconditionError("point", f"description index {x} out of range")
        if k is not None and not 1 <= k <= self.num_categories:
            raise PreconditionError("point", f"category {k} out of range 1..{self.num_categories}")

    def labeled_points(self) -> tuple[LabeledPoint, ...]:
        return tuple(
            LabeledPoint(x, k)
            for x in range(self.num_points)
            for k in range(1, self.num_categories + 1)
        )

    def to_json(self) -> dict:
        return {
            "C": self.num_categories,
            "M": format_rational(self.bound),
            "points": list(self.points),
            "functions": [
                {"name": name, "values": [[format_rational(v) for v in row] for row in table]}
                for name, table in zip(self.names, self.tables)
            ],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "FiniteFunctionClass":
        try:
            C = doc["C"]
            M = doc["M"]
            funcs = doc["functions"]
        except KeyError as exc:
            raise PreconditionError("class_file", f"missing key {exc.args[0]!r}") from None
        if not isinstance(C, int):
            raise PreconditionError("class_file", "C must be an integer")
        rows = {}
        for f in funcs:
            if f["name"] in rows:
                raise PreconditionError("functions", "function names must be unique")
            rows[f["name"]] = f["values"]
        return cls.from_rows(C, M, rows, points=doc.get("points"))


def load_class(path) -> FiniteFunctionClass:
    with open(path) as fh:
        return FiniteFunctionClass.from_json(json.load(fh))


def dump_class(G: FiniteFunctionClass, path) -> None:
    Path(path).write_text(json.dumps(G.to_json(), indent=2) + "\n")


def example1_class() -> FiniteFunctionClass:
    """The packaged two-function, three-category class on a single point."""
    from importlib.resources import files

    doc = json.loads(files("capdim.data").joinpath("example1.json").read_text())
    return FiniteFunctionClass.from_json(doc)


@dataclass(frozen=True)
class ScoreClass:
    """A finite class of real- or integer-valued functions on a finite domain.

    ``values[j][i]`` is the score of the j-th function at ``domain[i]``.
    Domain elements are usually :class:`LabeledPoint`; classes on the
    description space use bare integers.
    """

    domain: tuple[Hashable, ...]
    names: tuple[str, ...]
    values: tuple[tuple[Fraction, ...], ...]
    value_kind: ValueKind = "real"
    range_lo: Fraction = Fraction(-1)
    range_hi: Fraction = Fraction(1)
    margin_structured: bool = False
    num_categories: int | None = None
    _pos: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.values) != len(self.names):
            raise PreconditionError("values", "one value row per function")
        if len(set(self.domain)) != len(self.domain):
            raise PreconditionError("domain", "domain elements must be distinct")
        n = len(self.domain)
        for name, row in zip(self.names, self.values):
            if len(row) != n:
                raise PreconditionError("values", f"row of {name!r} does not match the domain")
            for v in row:
                if not self.range_lo <= v <= self.range_hi:
                    raise PreconditionError(
                        "range", f"value {v} of {name!r} outside [{self.range_lo}, {self.range_hi}]"
                    )
                if self.value_kind == "integer" and v.denominator != 1:
                    raise PreconditionError("value_kind", f"non-integer value {v} in integer class")
        object.__setattr__(self, "_pos", {z: i for i, z in enumerate(self.domain)})

    def __len__(self):
        return len(self.names)

    def position(self, point) -> int:
        try:
            return self._pos[point]
        except KeyError:
            raise PreconditionError("sample", f"point {point!r} is outside the domain") from None

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise PreconditionError("function", f"unknown function {name!r}") from None

    def value(self, name: str, point) -> Fraction:
        return self.values[self.index(name)][self.position(point)]

    def restricted_rows(self, sample: Iterable) -> list[tuple[Fraction, ...]]:
        """Per function, its values along ``sample`` (repetitions kept)."""
        idx = [self.position(t) for t in sample]
        return [tuple(row[i] for i in idx) for row in self.values]

    def has_full_rows(self, x) -> bool:
        C = self.num_categories
        return C is not None and all(LabeledPoint(x, k) in self._pos for k in range(1, C + 1))

    def row(self, j: int, x: int) -> tuple[Fraction, ...]:
        """Scores ``f(x, 1..C)`` of the j-th function."""
        vals = self.values[j]
        return tuple(vals[self._pos[LabeledPoint(x, k)]] for k in range(1, self.num_categories + 1))

    def check_margin_structure(self) -> bool:
        """Exact test of max_{k<l} f(x,k) + f(x,l) = 0 for every x with a full row."""
        xs = sorted({z.x for z in self.domain if isinstance(z, LabeledPoint)})
        for j in range(len(self.names)):
            for x in xs:
                if not self.has_full_rows(x):
                    return False
                r = sorted(self.row(j, x), reverse=True)
                if r[0] + r[1] != 0:
                    return False
        return True

    def with_values(self, values, **changes) -> "ScoreClass":
        fields_ = dict(
            domain=self.domain,
            names=self.names,
            values=tuple(tuple(r) for r in values),
            value_kind=self.value_kind,
            range_lo=self.range_lo,
            range_hi=self.range_hi,
            margin_structured=self.margin_structured,
            num_categories=self.num_categories,
        )
        fields_.update(changes)
        return ScoreClass(**fields_)

    def restrict_domain(self, points: Sequence) -> "ScoreClass":
        idx = [self.position(t) for t in points]
        return self.with_values(
            [tuple(row[i] for i in idx) for row in self.values],
            domain=tuple(points),
            margin_structured=False,
        )

    def negated(self) -> "ScoreClass":
        return self.with_values(
            [tuple(-v for v in row) for row in self.values],
            range_lo=-self.range_hi,
            range_hi=-self.range_lo,
        )


@dataclass(frozen=True)
class Sample:
    entries: tuple[LabeledPoint, ...]

    def __post_init__(self):
        if len(self.entries) < 1:
            raise PreconditionError("sample", "a sample needs at least one entry")

    @classmethod
    def of(cls, *pairs) -> "Sample":
        return cls(tuple(LabeledPoint(int(x), int(y)) for x, y in pairs))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def n(self) -> int:
        return len(self.entries)


def _margin_row(row: Sequence[Fraction]) -> tuple[Fraction, ...]:
    out = []
    for k, v in enumerate(row):
        best_other = max(w for l, w in enumerate(row) if l != k)
        out.append((v - best_other) / 2)
    return tuple(out)


def margin_class(G: FiniteFunctionClass) -> ScoreClass:
    """The class ρ_G of margin functions on the full labeled domain."""
    domain = G.labeled_points()
    values = []
    for table in G.tables:
        rows = [_margin_row(r) for r in table]
        values.append(tuple(rows[z.x][z.y - 1] for z in domain))
    return ScoreClass(
        domain=domain,
        names=G.names,
        values=tuple(values),
        range_lo=-G.bound,
        range_hi=G.bound,
        margin_structured=True,
        num_categories=G.num_categories,
    )


def component_class(G: FiniteFunctionClass, k: int) -> ScoreClass:
    """G_k as a class on the description indices."""
    if not 1 <= k <= G.num_categories:
        raise PreconditionError("category", f"category {k} out of range")
    return ScoreClass(
        domain=tuple(range(G.num_points)),
        names=G.names,
        values=tuple(tuple(row[k - 1] for row in table) for table in G.tables),
        range_lo=-G.bound,
        range_hi=G.bound,
    )


def squash_value(t: Fraction, gamma: Fraction) -> Fraction:
    if t <= 0:
        return Fraction(0)
    return t if t <= gamma else gamma


def _check_gamma(gamma) -> Fraction:
    gamma = as_rational(gamma)
    if not 0 < gamma <= 1:
        raise PreconditionError("gamma", f"gamma must lie in (0, 1], got {gamma}")
    return gamma


def squash(F: ScoreClass, gamma) -> ScoreClass:
    """Apply the piecewise-linear squashing function π_γ pointwise."""
    gamma = _check_gamma(gamma)
    if F.value_kind != "real":
        raise PreconditionError("value_kind", "squashing applies to real-valued classes")
    return F.with_values(
        [tuple(squash_value(v, gamma) for v in row) for row in F.values],
        range_lo=Fraction(0),
        range_hi=gamma,
        margin_structured=False,
    )


def discretize_value(t: Fraction, eta: Fraction) -> Fraction:
    q = math.floor(abs(t) / eta)
    return Fraction(q if t >= 0 else -q)


def discretize(F: ScoreClass, eta) -> ScoreClass:
    """η-discretization t ↦ sign(t)·⌊|t|/η⌋.

    The map is odd and nondecreasing, so a margin-structured class stays
    margin-structured.
    """
    eta = as_rational(eta)
    if eta <= 0:
        raise PreconditionError("eta", f"eta must be positive, got {eta}")
    if F.value_kind != "real":
        raise PreconditionError("value_kind", "discretization applies to real-valued classes")
    return F.with_values(
        [tuple(discretize_value(v, eta) for v in row) for row in F.values],
        value_kind="integer",
        range_lo=discretize_value(F.range_lo, eta),
        range_hi=discretize_value(F.range_hi, eta),
    )


def squashed_margin_class(G: FiniteFunctionClass, gamma) -> ScoreClass:
    return squash(margin_class(G), gamma)


def classify(G: FiniteFunctionClass, g_name: str, x: int):
    """Decision rule: the unique argmax category, or REJECT on ties."""
    G._check_point(x)
    row = G.table(g_name)[x]
    top = max(row)
    winners = [k + 1 for k, v in enumerate(row) if v == top]
    return winners[0] if len(winners) == 1 else REJECT


def margin_loss(t: Fraction, gamma: Fraction, loss_kind: LossKind) -> Fraction:
    if loss_kind == "hard":
        return Fraction(1 if t < gamma else 0)
    if loss_kind == "ramp":
        if t <= 0:
            return Fraction(1)
        if t <= gamma:
            return 1 - t / gamma
        return Fraction(0)
    raise PreconditionError("loss_kind", f"unknown loss kind {loss_kind!r}")


def margin_value(G: FiniteFunctionClass, g_name: str, z: LabeledPoint) -> Fraction:
    G._check_point(z.x, z.y)
    return _margin_row(G.table(g_name)[z.x])[z.y - 1]


def empirical_margin_risk(
    G: FiniteFunctionClass, g_name: str, sample, gamma, loss_kind: LossKind = "hard"
) -> Fraction:
    """Mean of φ_γ(ρ_g(z_i)) over the sample."""
    gamma = _check_gamma(gamma)
    entries = list(sample)
    if not entries:
        raise PreconditionError("sample", "empty sample")
    total = sum(
        (margin_loss(margin_value(G, g_name, LabeledPoint(*z)), gamma, loss_kind) for z in entries),
        Fraction(0),
    )
    return total / len(entries)

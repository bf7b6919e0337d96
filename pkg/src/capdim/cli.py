"""Command-line entry point: ``capdim <command> ...``.

Every command prints one JSON document (CSV for ``sweep``) and exits with
0 on success, 1 on a precondition error, 2 when a verification fails and
64 on a usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from fractions import Fraction
from importlib import resources

from .bounds import BoundParams
from .bounds import formulas as fm
from .dims import KINDS, STRONG_KINDS, dimension
from .errors import PreconditionError
from .harness import SUITES, SuiteConfig, verify
from .metrics import packing_number, proper_cover, uniform_packing
from .model import (
    LabeledPoint,
    discretize,
    format_rational,
    load_class,
    margin_class,
    squash,
)
from .rademacher import empirical_rademacher, maurer_rhs

EXIT_OK, EXIT_PRECONDITION, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2, 64

CONVENTIONS = {
    "separation": "pairwise distance >= eps",
    "covering": "open balls, distance < eps",
    "shattering": "closed inequalities (>=)",
    "zero_dimension": "combinatorial product term is 1; the ceiling-exponent L-infinity bound keeps its factor 2",
    "rationals": "exact; 'a/b' or terminating decimals",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")


def parse_rational(text: str) -> Fraction:
    """Exact parse of ``a/b`` or a terminating decimal; anything else is rejected."""
    try:
        q = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise PreconditionError("rational", f"cannot parse {text!r} exactly") from None
    return q


def _real(text: str) -> float:
    return float(parse_rational(text))


def _sample(text: str | None):
    if not text:
        return None
    out = []
    for item in text.split(","):
        x, _, y = item.partition(":")
        if not y:
            raise PreconditionError("sample", f"sample entries are x:y pairs, got {item!r}")
        try:
            out.append(LabeledPoint(int(x), int(y)))
        except ValueError:
            raise PreconditionError("sample", f"sample entries are integer x:y pairs, got {item!r}") from None
    return out


def _json_number(v):
    if isinstance(v, Fraction):
        return format_rational(v)
    return v


def _emit(doc, args) -> None:
    doc = dict(doc)
    doc["metadata"] = {"conventions": CONVENTIONS, "command": args.command}
    text = json.dumps(doc, sort_keys=True, indent=2, default=_json_number) + "\n"
    _write(text, args)


def _write(text: str, args) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands ---------------------------------------------------------------


def _load(path: str):
    """Load a class file; a bare name not found on disk falls back to the packaged data."""
    if not os.path.exists(path) and os.path.basename(path) == path:
        packaged = resources.files("capdim.data") / path
        if packaged.is_file():
            with resources.as_file(packaged) as real:
                return load_class(real)
    try:
        return load_class(path)
    except OSError as exc:
        raise PreconditionError("class_path", f"cannot read {path!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise PreconditionError("class_path", f"{path!r} is not valid JSON: {exc.msg}") from None


def _score_class(args):
    G = _load(args.class_path)
    F = margin_class(G)
    if args.squash is not None:
        F = squash(F, parse_rational(args.squash))
    if args.eta is not None:
        F = discretize(F, parse_rational(args.eta))
    return G, F


def cmd_dims(args):
    _, F = _score_class(args)
    gamma = None if args.kind in STRONG_KINDS else parse_rational(args.gamma)
    if args.kind in STRONG_KINDS and args.eta is None:
        raise PreconditionError("eta", f"{args.kind} needs --eta (integer discretized class)")
    d, cert = dimension(F, gamma, args.kind)
    _emit(
        {
            "dimension": d,
            "kind": args.kind,
            "gamma": None if gamma is None else format_rational(gamma),
            "certificate": None if cert is None else cert.to_json(),
        },
        args,
    )
    return EXIT_OK


def cmd_pack(args):
    _, F = _score_class(args)
    eps = parse_rational(args.eps)
    sample = _sample(args.sample)
    if sample is not None:
        res = packing_number(F, sample, eps, args.p, mode=args.mode)
        doc = {"packing": res.value, "witness": list(res.witness), "exact": res.exact, "sample": [list(z) for z in sample]}
        if args.mode == "exact":
            count, centers = proper_cover(F, sample, eps, args.p)
            doc["proper_covering"] = count
            doc["cover_centers"] = list(centers)
    else:
        res = uniform_packing(F, args.n, eps, args.p, seed=args.seed)
        doc = {
            "packing": res.value,
            "witness": list(res.witness),
            "exact": res.exact,
            "sample": [list(z) for z in res.sample],
            "n": args.n,
        }
    doc.update(eps=format_rational(eps), p=str(args.p))
    _emit(doc, args)
    return EXIT_OK


def _params(args, **override) -> BoundParams:
    kw = {}
    for name in ("C", "m"):
        v = override.get(name, getattr(args, name, None))
        if v is not None:
            kw[name] = int(v)
    for name in ("gamma", "delta", "M_G", "K1", "K2", "d_GC", "d_Ggamma", "Lambda", "Lambda_X"):
        v = override.get(name, getattr(args, name, None))
        if v is not None:
            kw[name] = v if isinstance(v, float) else _real(v)
    return BoundParams(**kw)


def _need(args, *names):
    for n in names:
        if getattr(args, n, None) is None:
            raise PreconditionError(n, f"--{n} is required for this bound")


def _f(args, name):
    _need(args, name)
    return _real(getattr(args, name))


def _i(args, name):
    _need(args, name)
    return int(getattr(args, name))


def _bound_value(name: str, args) -> float:
    if name in ("lemma4", "packing_linfty_G_old"):
        return fm.packing_bound_linfty_G_old(_f(args, "eps"), _f(args, "gamma"), _i(args, "n"), _f(args, "dG"))
    if name in ("lemma5", "packing_linfty_G"):
        return fm.packing_bound_linfty_G(_f(args, "eps"), _f(args, "gamma"), _i(args, "n"), _f(args, "dG"))
    if name in ("lemma6", "packing_l2_G"):
        return fm.packing_bound_l2_G(_f(args, "eps"), _f(args, "gamma"), _f(args, "dG"))
    if name in ("lemma7", "packing_linfty_N"):
        return fm.packing_bound_linfty_N(_f(args, "eps"), _f(args, "gamma"), _i(args, "n"), _i(args, "C"), _f(args, "dN"))
    if name in ("lemma8", "packing_l2_N"):
        return fm.packing_bound_l2_N(_f(args, "eps"), _f(args, "gamma"), _i(args, "C"), _f(args, "dN"))
    if name in ("lemma2", "graph_to_natarajan"):
        return fm.graph_to_natarajan_bound(_i(args, "C"), _f(args, "dN"))
    if name in ("lemma3", "fat_decomposition"):
        _need(args, "fat_dims")
        dims = [_real(v) for v in args.fat_dims.split(",")]
        return fm.fat_decomposition_bound(_f(args, "eps"), _i(args, "C"), _real(args.M_G or "1"), dims)
    if name in ("lemma9", "natarajan_structural"):
        _need(args, "pair_dims")
        return fm.natarajan_structural_bound([_real(v) for v in args.pair_dims.split(",")], args.C and int(args.C))
    if name in ("lemma10", "svm_natarajan"):
        return fm.svm_natarajan_bound(_i(args, "C"), _f(args, "Lambda"), _f(args, "Lambda_X"), _f(args, "gamma"))
    if name == "hypothesis":
        return fm.hypothesis_nat_dim(_f(args, "eps"), _params(args))
    if name == "entropy_linf":
        return fm.metric_entropy_linfty(_i(args, "m"), _params(args), args.variant)
    if name == "entropy_l2":
        return fm.metric_entropy_l2(_f(args, "eps"), _params(args), args.variant)
    if name == "phase":
        return fm.rademacher_phase_bound(_params(args), _i(args, "m"))
    if name == "F1":
        return fm.F1(_params(args))
    if name == "F2":
        return fm.F2(_params(args))
    if name == "kp":
        return fm.kp_constant(_i(args, "p"))
    if name == "lp_packing":
        return fm.lp_packing(_f(args, "eps"), _f(args, "M_F"), _i(args, "p"), _f(args, "d"))
    if name == "K_C":
        return fm.K_C(_i(args, "C"))
    raise PreconditionError("bound", f"unknown bound {name!r}; known: {sorted(BOUND_NAMES)}")


BOUND_NAMES = (
    "lemma4", "lemma5", "lemma6", "lemma7", "lemma8", "lemma2", "lemma3", "lemma9", "lemma10",
    "packing_linfty_G_old", "packing_linfty_G", "packing_l2_G", "packing_linfty_N", "packing_l2_N",
    "graph_to_natarajan", "fat_decomposition", "natarajan_structural", "svm_natarajan",
    "hypothesis", "entropy_linf", "entropy_l2", "phase", "F1", "F2", "kp", "lp_packing", "K_C",
)


def cmd_bound(args):
    value = _bound_value(args.name, args)
    _emit({"bound": args.name, "value": value}, args)
    return EXIT_OK


SWEEPS = ("entropy_linf", "entropy_l2", "risk_linf", "packing_linf")


def _sweep_pair(name: str, args, var: str, x) -> tuple[float, float]:
    if name == "packing_linf":
        n = int(x) if var == "m" else _i(args, "n")
        gamma = float(x) if var == "gamma" else _f(args, "gamma")
        eps = _f(args, "eps")
        d = _f(args, "dG")
        return (
            fm.log_packing_bound_linfty_G_old(eps, gamma, n, d),
            fm.log_packing_bound_linfty_G(eps, gamma, n, d),
        )
    over = {var: x}
    params = _params(args, **over)
    if name == "entropy_linf":
        return (
            fm.metric_entropy_linfty(params.m or _i(args, "m"), params, "old"),
            fm.metric_entropy_linfty(params.m or _i(args, "m"), params, "new"),
        )
    if name == "entropy_l2":
        eps = _f(args, "eps") if args.eps is not None else params.gamma
        return fm.metric_entropy_l2(eps, params, "old"), fm.metric_entropy_l2(eps, params, "new")
    if name == "risk_linf":
        m = params.m or _i(args, "m")
        return (
            fm.guaranteed_risk_linfty_pipeline(m, params, "old"),
            fm.guaranteed_risk_linfty_pipeline(m, params, "new"),
        )
    raise PreconditionError("bound", f"unknown sweep {name!r}; known: {SWEEPS}")


def _grid(var: str, lo: float, hi: float, steps: int):
    if steps < 1:
        raise PreconditionError("steps", "steps must be >= 1")
    if var in ("m", "C"):
        if steps == 1:
            return [int(round(lo))]
        # geometric spacing, rounded to integers, duplicates dropped
        if lo <= 0:
            raise PreconditionError("from", f"{var} must be positive")
        out = []
        for j in range(steps):
            v = int(round(lo * (hi / lo) ** (j / (steps - 1))))
            if v not in out:
                out.append(v)
        return out
    if steps == 1:
        return [lo]
    return [lo + (hi - lo) * j / (steps - 1) for j in range(steps)]


def cmd_sweep(args):
    if args.name not in SWEEPS:
        raise PreconditionError("bound", f"unknown sweep {args.name!r}; known: {SWEEPS}")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([args.var, "old", "new", "ratio"])
    for x in _grid(args.var, _real(args.start), _real(args.stop), args.steps):
        old, new = _sweep_pair(args.name, args, args.var, x)
        if args.name == "packing_linf":
            ratio = math.exp(new - old) if new - old < 700 else float("inf")
        else:
            ratio = new / old
        w.writerow([x, repr(old), repr(new), repr(ratio)])
    _write(buf.getvalue(), args)
    return EXIT_OK


def cmd_risk(args):
    params = _params(args)
    m = _i(args, "m")
    if args.norm == "linf":
        doc = {
            "norm": "linf",
            "variant": args.variant,
            "entropy_log2": fm.metric_entropy_linfty(m, params, args.variant),
            "confidence_interval": fm.guaranteed_risk_linfty_pipeline(m, params, args.variant),
        }
    else:
        doc = {
            "norm": "l2",
            "rademacher_bound": fm.rademacher_phase_bound(params, m),
            "confidence_interval": fm.guaranteed_risk_l2(params, m),
        }
    doc["m"] = m
    _emit(doc, args)
    return EXIT_OK


def cmd_verify(args):
    cfg = SuiteConfig(seed=args.seed, instances=args.instances)
    rep = verify(args.lemma_id, cfg)
    doc = rep.to_json()
    doc["passed"] = rep.passed
    _emit(doc, args)
    return EXIT_OK if rep.passed else EXIT_VERIFY


def cmd_rademacher(args):
    G = _load(args.class_path)
    sample = _sample(args.sample) or list(G.labeled_points())
    gamma = parse_rational(args.gamma)
    kw = dict(mode=args.mode, draws=args.draws, seed=args.seed)
    r_sq = empirical_rademacher(squash(margin_class(G), gamma), sample, **kw)
    r_rho = empirical_rademacher(margin_class(G), sample, **kw)
    r_m = maurer_rhs(G, sample, **kw)
    _emit(
        {
            "sample": [list(z) for z in sample],
            "gamma": format_rational(gamma),
            "squashed_margin": r_sq.to_json(),
            "margin": r_rho.to_json(),
            "maurer_rhs": r_m.to_json(),
        },
        args,
    )
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def _add_params(p):
    for name in ("C", "m", "n", "gamma", "delta", "M_G", "K1", "K2", "d_GC", "d_Ggamma", "eps", "dG", "dN", "p", "d", "M_F"):
        p.add_argument(f"--{name}", default=None)
    p.add_argument("--Lambda", default=None)
    p.add_argument("--LambdaX", "--Lambda_X", dest="Lambda_X", default=None)
    p.add_argument("--fat-dims", dest="fat_dims", default=None, help="comma-separated per-category dimensions")
    p.add_argument("--pair-dims", dest="pair_dims", default=None, help="comma-separated pairwise hull dimensions")
    p.add_argument("--variant", choices=("old", "new"), default="new")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="capdim", description="Capacity measures of finite multi-class classifiers.")
    parser.add_argument("--out", default=None, help="write output here instead of stdout")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output here instead of stdout")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("dims", parents=[common], help="dimension of the margin class of a class file")
    p.add_argument("class_path")
    p.add_argument("--gamma", default="1/4")
    p.add_argument("--kind", choices=KINDS, default="fat")
    p.add_argument("--squash", default=None, help="apply the squashing map at this margin first")
    p.add_argument("--eta", default=None, help="discretize at this step (needed for strong kinds)")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("pack", parents=[common], help="packing and proper covering numbers")
    p.add_argument("class_path")
    p.add_argument("--eps", required=True)
    p.add_argument("--p", default="2")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--sample", default=None, help="x:y,x:y,... (otherwise maximize over all samples of size n)")
    p.add_argument("--mode", choices=("exact", "greedy"), default="exact")
    p.add_argument("--squash", default=None)
    p.add_argument("--eta", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_pack)

    p = sub.add_parser("bound", parents=[common], help="evaluate one closed-form bound")
    p.add_argument("name")
    _add_params(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("sweep", parents=[common], help="old vs new pathway over a parameter range (CSV)")
    p.add_argument("name")
    p.add_argument("--var", choices=("m", "C", "gamma"), required=True)
    p.add_argument("--from", dest="start", required=True)
    p.add_argument("--to", dest="stop", required=True)
    p.add_argument("--steps", type=int, default=10)
    _add_params(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("risk", parents=[common], help="guaranteed-risk confidence intervals")
    p.add_argument("--norm", choices=("linf", "l2"), default="l2")
    _add_params(p)
    p.set_defaults(func=cmd_risk)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("lemma_id", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int, default=50)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rademacher", parents=[common], help="empirical Rademacher chain on a class file")
    p.add_argument("class_path")
    p.add_argument("--mode", choices=("exact", "monte_carlo"), default="exact")
    p.add_argument("--draws", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--gamma", default="1/4")
    p.add_argument("--sample", default=None)
    p.set_defaults(func=cmd_rademacher)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError(parser.format_help())
        if hasattr(args, "p") and args.command == "pack":
            if args.p in ("inf", "infinity"):
                args.p = "inf"
            elif args.p.isdigit():
                args.p = int(args.p)
            else:
                raise PreconditionError("p", f"p must be a positive integer or inf, got {args.p!r}")
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(str(exc))
        return EXIT_USAGE
    except PreconditionError as exc:
        sys.stderr.write(json.dumps({"error": "precondition", "name": exc.name, "message": str(exc)}) + "\n")
        return EXIT_PRECONDITION


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

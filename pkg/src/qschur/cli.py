"""Command-line entry point: computations, verification suites and tables.

Exit codes: 0 success or suite pass, 1 suite failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .hall import coha_mul, cohm_act
from .operators import (
    class_E_factors, class_S_factors, theta_E_factors, theta_layout, theta_S_factors,
)
from .poly import InvariantViolation
from .quiver import (
    DimVector, IsotropicVectorComposition, QuiverError, STANDARD_QUIVERS, load_quiver, standard_quiver,
)
from .schur import GradedElement, Setting, apply_merge, apply_split
from .verify import SUITES, run_suite
from .weyl import crossing_datum, format_partitioning, refinement_datum

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    quiver: str | None = None
    dim: str | None = None
    comp: str | None = None
    degree: int | None = None
    seed: int = 0
    json: bool = False


def _load(spec: str | None):
    """A quiver JSON file or a standard quiver name; returns (Quiver, InvolutionData or None)."""
    if spec is None:
        raise UsageError("--quiver is required")
    if os.path.exists(spec):
        return load_quiver(spec)
    if spec in STANDARD_QUIVERS:
        return standard_quiver(spec), None
    raise UsageError(f"--quiver {spec!r} is neither a file nor one of {', '.join(sorted(STANDARD_QUIVERS))}")


def _infer_dim(q, texts) -> DimVector:
    """Largest index j of x[v,j] per vertex; with no variables at all, 1 at every vertex."""
    import re
    entries = [0] * q.n
    for text in texts:
        for v, j in re.findall(r"x\[([^,\]]+),\s*(\d+)\]", text):
            k = q.vertex_index(v.strip())
            entries[k] = max(entries[k], int(j))
    if not any(entries):
        entries = [1] * q.n
    return DimVector(tuple(entries))


def _emit(cfg: RunConfig, payload: dict, text: str):
    if cfg.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

def cmd_mul(cfg: RunConfig, f: str, g: str) -> int:
    q, _ = _load(cfg.quiver)
    if cfg.comp:
        d = q.parse_comp(cfg.comp)
        if isinstance(d, IsotropicVectorComposition) or len(d) != 2:
            raise UsageError("mul needs --comp with two parts (a,b)")
        a, b = d.parts
    else:
        a, b = _infer_dim(q, [f]), _infer_dim(q, [g])
    result = coha_mul(q, a, b, f, g)
    _emit(cfg, {"a": q.dim_dict(a), "b": q.dim_dict(b), "result": result.to_text()}, result.to_text())
    return EXIT_OK


def cmd_act(cfg: RunConfig, f: str, v: str) -> int:
    q, inv = _load(cfg.quiver)
    if inv is None:
        raise UsageError("act needs a quiver file with an involution")
    if not cfg.comp:
        raise UsageError("act needs --comp of the form (a|b)")
    d = q.parse_comp(cfg.comp)
    if not isinstance(d, IsotropicVectorComposition) or len(d) != 1:
        raise UsageError("act needs --comp of the form (a|b)")
    result = cohm_act(inv, d.finite[0], d.inf, f, v)
    _emit(cfg, {"result": result.to_text()}, result.to_text())
    return EXIT_OK


def _setting(cfg: RunConfig) -> Setting:
    q, inv = _load(cfg.quiver)
    if cfg.dim is None:
        raise UsageError("--dim is required")
    c = q.parse_dim(cfg.dim)
    return Setting.theta(inv, c) if inv is not None else Setting.ordinary(q, c)


def _element(S: Setting, cfg: RunConfig, f: str | None, element: str | None) -> GradedElement:
    if element is not None:
        return GradedElement.from_json(S, element)
    if f is None or cfg.comp is None:
        raise UsageError("give --element JSON, or --comp together with --f")
    return GradedElement.of(S.parse_comp(cfg.comp), S.ring.parse(f))


def cmd_merge(cfg: RunConfig, to: str, f: str | None, element: str | None) -> int:
    S = _setting(cfg)
    if cfg.comp is None:
        raise UsageError("merge needs --comp (source) and --to (target)")
    d, e = S.parse_comp(cfg.comp), S.parse_comp(to)
    y = apply_merge(S, d, e, _element(S, cfg, f, element))
    _emit(cfg, json.loads(y.to_json(S)), y.to_json(S))
    return EXIT_OK


def cmd_split(cfg: RunConfig, to: str, f: str | None, element: str | None) -> int:
    S = _setting(cfg)
    if cfg.comp is None:
        raise UsageError("split needs --comp (source) and --to (target)")
    e, d = S.parse_comp(cfg.comp), S.parse_comp(to)
    y = apply_split(S, e, d, _element(S, cfg, f, element))
    _emit(cfg, json.loads(y.to_json(S)), y.to_json(S))
    return EXIT_OK


def cmd_comul(cfg: RunConfig, to: str, f: str) -> int:
    S = _setting(cfg)
    top = S.parse_comp(f"({S.quiver.format_dim(S.c)})") if not S.is_theta else S.parse_comp(
        f"(|{S.quiver.format_dim(S.c)})")
    d = S.parse_comp(to)
    y = apply_split(S, top, d, GradedElement.of(top, S.ring.parse(f)))
    _emit(cfg, json.loads(y.to_json(S)), y.to_json(S))
    return EXIT_OK


def cmd_verify(cfg: RunConfig, suite: str, dim: int | None) -> int:
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(sorted(SUITES))}")
    res = run_suite(suite, dim=dim, degree=cfg.degree, seed=cfg.seed)
    _emit(cfg, res.to_dict(), res.summary())
    return EXIT_OK if res.passed else EXIT_FAIL


def _product_text(q, factors) -> str:
    """Product of linear factors, printed factored: (l1)*(l2)*..."""
    if not factors:
        return "1"
    if len(factors) == 1:
        return factors[0].to_text()
    return "*".join(f"({r.to_text()})" for r in factors)


def cmd_tables(cfg: RunConfig, to: str | None) -> int:
    S = _setting(cfg)
    if cfg.comp is None:
        raise UsageError("tables needs --comp")
    d = S.parse_comp(cfg.comp)
    q = S.quiver
    rows = {"comp": S.fmt(d)}
    lines = [f"composition {S.fmt(d)}"]
    if S.is_theta:
        if len(d) == 1:
            a, b = d.finite[0], d.inf
            lay = theta_layout(S.inv, S.c)
            rows["thetaS"] = _product_text(q, theta_S_factors(lay, a, b))
            rows["thetaE"] = _product_text(q, theta_E_factors(lay, a, b))
            lines += [f"thetaS = {rows['thetaS']}", f"thetaE = {rows['thetaE']}"]
    else:
        e = S.parse_comp(to) if to else None
        if e is not None and d.refines(e) is None:
            e = None
        rows["S"] = _product_text(q, class_S_factors(q, S.c, d, e))
        rows["E"] = _product_text(q, class_E_factors(q, S.c, d, e))
        lines += [f"E = {rows['E']}", f"S = {rows['S']}"]
    if to:
        e = S.parse_comp(to)
        lay = S.layout
        G = lay.G
        reps = G.min_double_coset_reps(lay.parabolic(d), lay.parabolic(e))
        rows["double_cosets"] = []
        lines.append(f"minimal double coset representatives W_{S.fmt(d)} \\ W / W_{S.fmt(e)}: {len(reps)}")
        for w in sorted(reps, key=G.sort_key):
            entry = {"w": [list(p) for p in w], "length": G.length(w)}
            if not S.is_theta:
                rd = refinement_datum(q, S.c, d, e, w)
                cd = crossing_datum(rd)
                entry.update({
                    "e_hat": S.fmt(rd.e_hat), "d_hat": S.fmt(rd.d_hat), "u": list(rd.u),
                    "lambda_cap_mu": format_partitioning(rd.lam_mu, q),
                    "mu_cap_lambda": format_partitioning(rd.mu_lam, q),
                    "crossing_word": list(reversed(cd.word)),
                    "sequence": [S.fmt(x) for x in cd.sequence],
                })
            rows["double_cosets"].append(entry)
            lines.append("  " + ", ".join(f"{k}={v}" for k, v in entry.items()))
    _emit(cfg, rows, "\n".join(lines))
    return EXIT_OK


# ----------------------------------------------------------------------
# argument parsing
# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiver", help="quiver JSON file or one of: " + ", ".join(sorted(STANDARD_QUIVERS)))
    common.add_argument("--dim", help="dimension vector, e.g. 3, [1,2] or 2i1+i3")
    common.add_argument("--comp", help="composition, e.g. (1,1) or isotropic (1|2)")
    common.add_argument("--degree", type=int, help="degree bound")
    common.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    common.add_argument("--json", action="store_true", help="JSON output")

    p = argparse.ArgumentParser(prog="qschur", description="Quiver Schur algebras and Hall structures.")
    sub = p.add_subparsers(dest="cmd", required=True)
    s = sub.add_parser("mul", parents=[common], help="CoHA product m(f, g)")
    s.add_argument("--f", required=True)
    s.add_argument("--g", required=True)
    s = sub.add_parser("act", parents=[common], help="CoHM action act(f, v)")
    s.add_argument("--f", required=True)
    s.add_argument("--v", required=True)
    for name in ("merge", "split"):
        s = sub.add_parser(name, parents=[common], help=f"apply a {name} --comp -> --to")
        s.add_argument("--to", required=True)
        s.add_argument("--f", help="polynomial placed at --comp")
        s.add_argument("--element", help="graded element as JSON")
    s = sub.add_parser("comul", parents=[common], help="comultiplication component at --to")
    s.add_argument("--to", required=True)
    s.add_argument("--f", required=True)
    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", help=", ".join(sorted(SUITES)))
    s = sub.add_parser("tables", parents=[common], help="classes, cosets and refinement data")
    s.add_argument("--to", help="second composition for cosets and refinement data")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    cfg = RunConfig(args.quiver, args.dim, args.comp, args.degree, args.seed, args.json)
    if cfg.degree is not None and cfg.degree < 0:
        return _fail(cfg, "degree bound must be nonnegative")
    try:
        if args.cmd == "mul":
            return cmd_mul(cfg, args.f, args.g)
        if args.cmd == "act":
            return cmd_act(cfg, args.f, args.v)
        if args.cmd == "merge":
            return cmd_merge(cfg, args.to, args.f, args.element)
        if args.cmd == "split":
            return cmd_split(cfg, args.to, args.f, args.element)
        if args.cmd == "comul":
            return cmd_comul(cfg, args.to, args.f)
        if args.cmd == "verify":
            dim = None
            if cfg.dim is not None:
                try:
                    dim = int(cfg.dim)
                except ValueError:
                    raise UsageError("verify takes --dim as a single integer bound") from None
            return cmd_verify(cfg, args.suite, dim)
        if args.cmd == "tables":
            return cmd_tables(cfg, args.to)
    except (UsageError, QuiverError, InvariantViolation, KeyError, ValueError, ArithmeticError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        return _fail(cfg, msg, type(exc).__name__)
    return EXIT_USAGE


def _fail(cfg: RunConfig, message: str, kind: str = "UsageError") -> int:
    if cfg.json:
        print(json.dumps({"error": kind, "message": message}, sort_keys=True), file=sys.stderr)
    else:
        print(f"error ({kind}): {message}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

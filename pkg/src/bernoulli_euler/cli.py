"""Command line front end.

Subcommands ``numbers``, ``poly``, ``eval``, ``table`` and ``verify``.
Exit codes: 0 success, 1 undocumented counterexample, 2 invalid input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .campaign import CampaignConfig, ConfigError, identity_ids, run_campaign
from .identities import CheckReport
from .numeric import format_rational, parse_rational
from .polynomials import Poly, evaluate, unified_poly
from .series import ParameterError, Params, unified_numbers

FORMATS = ("text", "json", "csv", "latex")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, quoting=csv.QUOTE_ALL, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _latex_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return rf"{sign}\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"


# -- renderers -----------------------------------------------------------------


def render_numbers(values: list[Fraction], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([format_rational(v) for v in values])
    if fmt == "csv":
        return _csv([["n", "value"]] + [[n, format_rational(v)] for n, v in enumerate(values)])
    if fmt == "latex":
        rows = [rf"{n} & {_latex_rational(v)} \\" for n, v in enumerate(values)]
        return "\n".join([r"\begin{tabular}{rr}", r"$n$ & $\mathfrak{V}_n$ \\ \hline", *rows, r"\end{tabular}"])
    return ", ".join(format_rational(v) for v in values)


def render_poly(q: Poly, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(q.to_json())
    if fmt == "csv":
        return _csv([["power", "coefficient"]] + [[i, format_rational(c)] for i, c in enumerate(q.coeffs)])
    if fmt == "latex":
        return q.to_latex()
    return q.to_text()


def render_table(polys: list[Poly], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([q.to_json() for q in polys])
    if fmt == "csv":
        rows = [["n", "power", "coefficient"]]
        for n, q in enumerate(polys):
            rows += [[n, i, format_rational(c)] for i, c in enumerate(q.coeffs)]
        return _csv(rows)
    if fmt == "latex":
        body = [rf"\mathfrak{{V}}_{{{n}}}(x) &= {q.to_latex()} \\" for n, q in enumerate(polys)]
        return "\n".join([r"\begin{align*}", *body, r"\end{align*}"])
    return "\n".join(f"V_{n}(x) = {q.to_text()}" for n, q in enumerate(polys))


def _inst_text(inst: dict) -> str:
    return " ".join(f"{k}={v}" for k, v in inst.items())


def _value_text(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(v) + "]"
    return str(v)


def render_reports(reports: list[CheckReport], summary: dict, fmt: str) -> str:
    dicts = [r.to_dict() for r in reports]
    if fmt == "json":
        lines = [json.dumps(d, sort_keys=True) for d in dicts]
        lines.append(json.dumps({"summary": summary}, sort_keys=True))
        return "\n".join(lines)
    if fmt == "csv":
        rows = [["identity_id", "index", "seed", "equal", "instance", "lhs", "rhs", "note"]]
        for d in dicts:
            rows.append([
                d["identity_id"], d["index"], d["seed"], str(d["equal"]).lower(),
                json.dumps(d["instance"], sort_keys=True),
                json.dumps(d["lhs"]), json.dumps(d["rhs"]), d["note"] or "",
            ])
        tail = ["# summary " + json.dumps(summary, sort_keys=True)]
        return _csv(rows) + "\n" + "\n".join(tail)
    if fmt == "latex":
        out = [r"\begin{tabular}{llll}", r"identity & instance & lhs = rhs & status \\ \hline"]
        for d in dicts:
            inst = ", ".join(f"{k}={v}" for k, v in d["instance"].items()).replace("_", r"\_")
            status = "pass" if d["equal"] else ("erratum" if d["note"] else "FAIL")
            ident = d["identity_id"].replace("_", r"\_")
            out.append(rf"\texttt{{{ident}}} & {inst} & {_value_text(d['lhs'])} & {status} \\")
        out.append(r"\end{tabular}")
        out.append("% summary " + json.dumps(summary, sort_keys=True))
        return "\n".join(out)
    lines = []
    for d in dicts:
        status = "PASS" if d["equal"] else "FAIL"
        line = (
            f"{status} {d['identity_id']} #{d['index']} {_inst_text(d['instance'])} "
            f"lhs={_value_text(d['lhs'])} rhs={_value_text(d['rhs'])}"
        )
        if d["note"]:
            line += f" [erratum: {d['note']}]"
        lines.append(line)
    lines.append("")
    lines.append(f"seed {summary['seed']}")
    for ident, entry in summary["identities"].items():
        lines.append(f"{ident}: {entry['passed']}/{entry['instances']} equal")
        if "minimal_counterexample" in entry:
            cex = entry["minimal_counterexample"]
            lines.append(
                f"  minimal counterexample: {_inst_text(cex['instance'])} "
                f"lhs={_value_text(cex['lhs'])} rhs={_value_text(cex['rhs'])}"
            )
            if entry.get("erratum"):
                lines.append(f"  erratum: {entry['erratum']}")
            else:
                lines.append("  UNDOCUMENTED DISCREPANCY")
    for key in sorted(k for k in summary if k.startswith("upsilon_validating_variant")):
        lines.append(f"{key}: {summary[key]}")
    return "\n".join(lines)


# -- commands ------------------------------------------------------------------


def _params(args) -> Params:
    return Params(args.lam, args.mu).require_defined()


def cmd_numbers(args) -> str:
    return render_numbers(unified_numbers(_params(args), args.n), args.format)


def cmd_poly(args) -> str:
    return render_poly(unified_poly(_params(args), args.n), args.format)


def cmd_eval(args) -> str:
    v = evaluate(unified_poly(_params(args), args.n), args.x)
    if args.format == "json":
        return json.dumps(format_rational(v))
    if args.format == "latex":
        return _latex_rational(v)
    return format_rational(v)


def cmd_table(args) -> str:
    p = _params(args)
    return render_table([unified_poly(p, k) for k in range(args.n + 1)], args.format)


def build_config(args) -> CampaignConfig:
    return CampaignConfig(
        seed=args.seed,
        instances_per_identity=args.instances,
        max_n=args.max_n,
        order=args.order,
        identities=tuple(s.strip() for s in args.identities.split(",") if s.strip()),
        output=args.format,
    ).validate()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bernoulli-euler",
        description="Exact unified Apostol-type Bernoulli-Euler polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, n_help: str, with_x: bool = False):
        sp.add_argument("--lambda", dest="lam", type=_rational, required=True, help="lambda as p/q")
        sp.add_argument("--mu", type=_rational, required=True, help="mu as p/q")
        sp.add_argument("--n", type=int, required=True, help=n_help)
        if with_x:
            sp.add_argument("--x", type=_rational, required=True, help="evaluation point p/q")
        sp.add_argument("--format", choices=FORMATS, default="text")

    common(sub.add_parser("numbers", help="V_0..V_n(lambda;mu)"), "largest index")
    common(sub.add_parser("poly", help="V_n(x;lambda;mu)"), "degree")
    common(sub.add_parser("eval", help="V_n(x;lambda;mu) at a point"), "degree", with_x=True)
    common(sub.add_parser("table", help="V_0(x)..V_n(x)"), "largest degree")

    v = sub.add_parser("verify", help="run a seeded identity campaign")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--instances", type=int, default=100)
    v.add_argument("--max-n", dest="max_n", type=int, default=16)
    v.add_argument("--order", type=int, default=64)
    v.add_argument(
        "--identities", default="all",
        help="comma-separated ids or 'all'; see --list",
    )
    v.add_argument("--list", action="store_true", help="list identity ids and exit")
    v.add_argument("--format", choices=FORMATS, default="text")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            if args.list:
                print("\n".join(identity_ids()))
                return 0
            config = build_config(args)
            result = run_campaign(config)
            print(render_reports(result.reports, result.summary, config.output))
            return result.exit_code
        if args.n < 0:
            raise ParameterError("--n must be >= 0")
        handler = {"numbers": cmd_numbers, "poly": cmd_poly, "eval": cmd_eval, "table": cmd_table}
        print(handler[args.command](args))
        return 0
    except (ParameterError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Every command builds an output document

    {"command": ..., "inputs": {...}, "result": {"kind": ..., ...},
     "meta": {"trunc": ..., "version": ...}}

and prints either a plain-text rendering or, with ``--json``, the document
itself.  All integers in the JSON are decimal strings.  See
``docs/json_schema.md`` for one example per result kind.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from . import __version__
from .chow import (
    ContradictionReport,
    Degree2Strata,
    RankRelationTable,
    degree2_rank_relation,
    detect_contradiction,
    strata_series,
)
from .descriptor import ChowDescriptor
from .series import PoincareSeries, even_em_product, partition_count
from .spaces import HypothesisViolation, SpaceSyntaxError, eval_space, parse_space
from .stability import (
    OutOfRange,
    RangeViolation,
    StabilityCertificate,
    Step,
    StepKind,
    certify_stability,
    codim_bound,
    low_homotopy,
    verify_certificate,
)

DEFAULT_TRUNC = 40
TRUNC_ENV = "CYCLE_BETTI_TRUNC"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VIOLATION = 3


def default_trunc() -> int:
    raw = os.environ.get(TRUNC_ENV)
    if raw is None:
        return DEFAULT_TRUNC
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(f"{TRUNC_ENV} must be an integer, got {raw!r}")
    return value


def _s(value: int) -> str:
    return str(int(value))


def series_table(series: PoincareSeries) -> dict[str, Any]:
    return {
        "kind": "series-table",
        "coefficients": [_s(c) for c in series.coeffs],
    }


def strata_table(strata: Degree2Strata) -> dict[str, Any]:
    return {
        "kind": "strata-table",
        "p": _s(strata.p),
        "n": _s(strata.n),
        "x": [_s(c) for c in strata.x_series.coeffs],
        "a": [_s(c) for c in strata.a_series.coeffs],
        "b": [_s(c) for c in strata.b_series.coeffs],
    }


def relation_table(table: RankRelationTable) -> dict[str, Any]:
    return {
        "kind": "rank-relation",
        "p": _s(table.p),
        "n": _s(table.n),
        "max_i": _s(table.max_i),
        "deltas": [_s(v) for v in table.deltas],
        "x": [_s(v) for v in table.x],
        "a": [_s(v) for v in table.a],
        "b": [_s(v) for v in table.b],
    }


def contradiction_report(report: ContradictionReport) -> dict[str, Any]:
    mismatch = report.mismatch
    return {
        "kind": "contradiction-report",
        "p": _s(report.p),
        "n": _s(report.n),
        "max_i": _s(report.max_i),
        "hypothetical_deltas": [_s(v) for v in report.hypothetical_deltas],
        "derived_deltas": [_s(v) for v in report.derived_deltas],
        "first_mismatch_degree": None
        if report.first_mismatch_degree is None
        else _s(report.first_mismatch_degree),
        "hypothetical_at_mismatch": None if mismatch is None else _s(mismatch[0]),
        "derived_at_mismatch": None if mismatch is None else _s(mismatch[1]),
        "verdict": report.verdict,
    }


def certificate_doc(cert: StabilityCertificate) -> dict[str, Any]:
    check = verify_certificate(cert)
    return {
        "kind": "certificate",
        "start": {"p": _s(cert.start.p), "d": _s(cert.start.d), "n": _s(cert.start.n)},
        "k": _s(cert.k),
        "steps": [
            {
                "kind": step.kind.value,
                "from": {"p": _s(step.source[0]), "n": _s(step.source[1])},
                "to": {"p": _s(step.target[0]), "n": _s(step.target[1])},
                "bound_used": _s(step.bound_used),
            }
            for step in cert.steps
        ],
        "conclusion": cert.conclusion,
        "verified": check.ok,
        "diagnostics": check.message,
    }


def certificate_from_doc(doc: dict[str, Any]) -> StabilityCertificate:
    """Rebuild a certificate from its JSON form (for independent re-checking)."""
    start = doc["start"]
    steps = tuple(
        Step(
            StepKind(s["kind"]),
            (int(s["from"]["p"]), int(s["from"]["n"])),
            (int(s["to"]["p"]), int(s["to"]["n"])),
            int(s["bound_used"]),
        )
        for s in doc["steps"]
    )
    desc = ChowDescriptor(int(start["p"]), int(start["d"]), int(start["n"]))
    return StabilityCertificate(desc, int(doc["k"]), steps)


def failure_doc(exc: OutOfRange) -> dict[str, Any]:
    return {
        "kind": "certificate-failure",
        "start": {"p": _s(exc.desc.p), "d": _s(exc.desc.d), "n": _s(exc.desc.n)},
        "k": _s(exc.k),
        "violations": [
            {
                "which_bound": s.which_bound.value,
                "needed": _s(s.needed),
                "have": _s(s.have),
                "increase": _s(s.increase),
            }
            for s in exc.shortfalls
        ],
    }


def scalar(name: str, value: int | str) -> dict[str, Any]:
    return {"kind": "scalar", "name": name, "value": value if isinstance(value, str) else _s(value)}


def document(command: str, inputs: dict[str, Any], result: dict[str, Any], trunc=None):
    return {
        "command": command,
        "inputs": inputs,
        "result": result,
        "meta": {"trunc": None if trunc is None else _s(trunc), "version": __version__},
    }


# ---------------------------------------------------------------- commands


def cmd_series(expr: str, trunc: int) -> dict[str, Any]:
    space = parse_space(expr)
    return document(
        "series",
        {"expr": space.syntax()},
        series_table(eval_space(space, trunc)),
        trunc,
    )


def cmd_strata(p: int, n: int, trunc: int) -> dict[str, Any]:
    return document("strata", {"p": _s(p), "n": _s(n)}, strata_table(strata_series(p, n, trunc)), trunc)


def cmd_relation(p: int, n: int, max_i: int) -> dict[str, Any]:
    table = degree2_rank_relation(p, n, max_i)
    return document("relation", {"p": _s(p), "n": _s(n), "max_i": _s(max_i)}, relation_table(table), 2 * max_i)


def cmd_reproduce(n: int = 9, max_i: int = 4, trunc: int = 9, p: int = 4) -> dict[str, Any]:
    """Run the full degree-2 argument at p = 4 and collect every table."""
    if trunc < 2 * max_i or trunc < 9:
        raise ValueError(f"truncation must be >= max(9, 2*max_i), got {trunc}")
    hypothetical = even_em_product(trunc)
    strata = strata_series(p, n, trunc)
    table = degree2_rank_relation(p, n, max_i)
    report = detect_contradiction(p, n, max_i)
    result = {
        "kind": "reproduction",
        "hypothetical_betti": series_table(hypothetical),
        "strata": strata_table(strata),
        "relation": relation_table(table),
        "contradiction": contradiction_report(report),
        "verdict": report.verdict,
    }
    return document("reproduce", {"p": _s(p), "n": _s(n), "max_i": _s(max_i)}, result, trunc)


def cmd_certify(p: int, d: int, n: int, k: int) -> dict[str, Any]:
    inputs = {"p": _s(p), "d": _s(d), "n": _s(n), "k": _s(k)}
    desc = ChowDescriptor(p, d, n)
    try:
        cert = certify_stability(desc, k)
    except OutOfRange as exc:
        return document("certify", inputs, failure_doc(exc))
    doc = certificate_doc(cert)
    # the checker runs on the serialized form, not on the object we built
    doc["verified"] = verify_certificate(certificate_from_doc(doc)).ok
    if not doc["verified"]:
        raise AssertionError("emitted certificate failed verification")
    return document("certify", inputs, doc)


def cmd_lowpi(p: int, d: int, n: int, k: int) -> dict[str, Any]:
    group = low_homotopy(ChowDescriptor(p, d, n), k)
    inputs = {"p": _s(p), "d": _s(d), "n": _s(n), "k": _s(k)}
    return document("lowpi", inputs, scalar(f"pi_{k}", group.value))


def cmd_codim(p: int, e: int) -> dict[str, Any]:
    return document("codim", {"p": _s(p), "e": _s(e)}, scalar("codim_bound", codim_bound(p, e)))


def cmd_partition(m: int) -> dict[str, Any]:
    return document("partition", {"m": _s(m)}, scalar("partition_count", partition_count(m)))


# ---------------------------------------------------------------- rendering


def _degree_rows(values: list[str], step: int = 1) -> list[str]:
    return [f"{i * step:>4}  {v}" for i, v in enumerate(values)]


def render_text(doc: dict[str, Any]) -> str:
    result = doc["result"]
    kind = result["kind"]
    lines = []
    if kind == "series-table":
        lines.append("degree  rank")
        lines += [f"{i:>6}  {c}" for i, c in enumerate(result["coefficients"]) if c != "0"]
    elif kind == "strata-table":
        lines.append(f"strata for p={result['p']} n={result['n']}")
        lines.append(f"{'degree':>6}  {'X':>10}  {'A':>10}  {'B':>10}")
        for i, (x, a, b) in enumerate(zip(result["x"], result["a"], result["b"])):
            lines.append(f"{i:>6}  {x:>10}  {a:>10}  {b:>10}")
    elif kind == "rank-relation":
        lines.append(f"beta_2i - beta_2i+1 for p={result['p']} n={result['n']}")
        lines.append(f"{'i':>3}  {'X':>8}  {'A':>8}  {'B':>8}  {'delta':>8}")
        for i, row in enumerate(zip(result["x"], result["a"], result["b"], result["deltas"])):
            lines.append(f"{i:>3}  " + "  ".join(f"{v:>8}" for v in row))
    elif kind == "contradiction-report":
        lines += _render_report(result)
    elif kind == "reproduction":
        lines.append("hypothetical Betti numbers (stable range)")
        lines += render_text({"result": result["hypothetical_betti"]}).splitlines()[1:]
        lines.append("")
        lines += render_text({"result": result["strata"]}).splitlines()
        lines.append("")
        lines += render_text({"result": result["relation"]}).splitlines()
        lines.append("")
        lines += _render_report(result["contradiction"])
    elif kind == "certificate":
        lines.append(result["conclusion"])
        for i, step in enumerate(result["steps"]):
            src, dst = step["from"], step["to"]
            lines.append(
                f"{i:>3}  {step['kind']:<10} ({src['p']},{src['n']}) -> ({dst['p']},{dst['n']})"
                f"  bound {step['bound_used']} >= {result['k']}"
            )
        lines.append(f"verified: {str(result['verified']).lower()}")
    elif kind == "certificate-failure":
        start = result["start"]
        lines.append(f"no certificate for k={result['k']} at p={start['p']} d={start['d']} n={start['n']}")
        for v in result["violations"]:
            lines.append(
                f"  {v['which_bound']} bound {v['have']} < {v['needed']}"
                f" (increase by {v['increase']})"
            )
    elif kind == "scalar":
        lines.append(f"{result['name']} = {result['value']}")
    else:
        raise ValueError(f"unknown result kind {kind!r}")
    return "\n".join(lines)


def _render_report(result: dict[str, Any]) -> list[str]:
    lines = [f"{'degree':>6}  {'hypothetical':>12}  {'derived':>8}"]
    for i, (h, g) in enumerate(zip(result["hypothetical_deltas"], result["derived_deltas"])):
        lines.append(f"{2 * i:>6}  {h:>12}  {g:>8}")
    lines.append(f"verdict: {result['verdict']}")
    if result["first_mismatch_degree"] is not None:
        lines.append(
            f"first mismatch at degree {result['first_mismatch_degree']}: "
            f"hypothetical {result['hypothetical_at_mismatch']}, "
            f"derived {result['derived_at_mismatch']}"
        )
    return lines


# ---------------------------------------------------------------- argv


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cycle-betti", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the JSON document")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", parents=[common], help="Betti series of a space expression")
    p.add_argument("expr")
    p.add_argument("--trunc", type=int, default=None)

    p = sub.add_parser("strata", parents=[common], help="degree-2 strata series")
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--trunc", type=int, default=None)

    p = sub.add_parser("relation", parents=[common], help="even/odd Betti differences of C(p,2,n)")
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--max-i", type=int, default=4)

    p = sub.add_parser("reproduce", parents=[common], help="the degree-2 non-injectivity argument")
    p.add_argument("--n", type=int, default=9)
    p.add_argument("--max-i", type=int, default=4)
    p.add_argument("--trunc", type=int, default=9)

    for name, help_ in (("certify", "stability certificate"), ("lowpi", "pi_0, pi_1 or pi_2")):
        p = sub.add_parser(name, parents=[common], help=help_)
        for arg in ("p", "d", "n", "k"):
            p.add_argument(arg, type=int)

    p = sub.add_parser("codim", parents=[common], help="codimension lower bound")
    p.add_argument("p", type=int)
    p.add_argument("e", type=int)

    p = sub.add_parser("partition", parents=[common], help="number of partitions of m")
    p.add_argument("m", type=int)
    return parser


def run(args: argparse.Namespace) -> dict[str, Any]:
    c = args.command
    if c == "series":
        return cmd_series(args.expr, default_trunc() if args.trunc is None else args.trunc)
    if c == "strata":
        return cmd_strata(args.p, args.n, default_trunc() if args.trunc is None else args.trunc)
    if c == "relation":
        return cmd_relation(args.p, args.n, args.max_i)
    if c == "reproduce":
        return cmd_reproduce(n=args.n, max_i=args.max_i, trunc=max(args.trunc, 2 * args.max_i))
    if c == "certify":
        return cmd_certify(args.p, args.d, args.n, args.k)
    if c == "lowpi":
        return cmd_lowpi(args.p, args.d, args.n, args.k)
    if c == "codim":
        return cmd_codim(args.p, args.e)
    if c == "partition":
        return cmd_partition(args.m)
    raise AssertionError(c)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = run(args)
    except (HypothesisViolation, RangeViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (SpaceSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(render_text(doc))
    if doc["result"]["kind"] == "certificate-failure":
        return EXIT_VIOLATION
    return EXIT_OK

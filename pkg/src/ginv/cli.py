"""``ginv`` command line.

Exit status: 0 success / verified, 1 verification failure or inverse absent,
2 input or capability error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import engines as en
from .context import MatrixStarRing
from .errors import (CapabilityError, GinvError, InputError, InvariantViolation, ResourceError,
                     UnsupportedContextError, ValidationError)
from .finite import load_table
from .matrix import Involution, load_matrix, matrix_to_json
from .structures import parse_structure

OK, FAILED, BAD_INPUT = 0, 1, 2

_LABELS = {"mp": "Moore-Penrose", "dualcore": "dual core", "along": "along-d",
           "bc": "(b,c)", "13": "{1,3}", "14": "{1,4}"}


def parse_k_range(text: str) -> list:
    """``"1..3"``, ``"2"`` or ``"1,3,5"``."""
    t = text.strip()
    m = re.fullmatch(r"(\d+)\.\.(\d+)", t)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        ks = list(range(lo, hi + 1))
    else:
        try:
            ks = [int(x) for x in t.split(",")]
        except ValueError:
            raise InputError(f"bad k range {text!r}; use e.g. 1..3 or 1,2") from None
    if not ks or min(ks) < 1:
        raise InputError(f"k range {text!r} must be non-empty with every k >= 1")
    return ks


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(obj, path):
    text = _dump(obj)
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


# ---- subcommands ------------------------------------------------------------------------

def cmd_compute(args) -> int:
    kind = en.Kind(args.kind)
    a = load_matrix(args.matrix)
    ctx = MatrixStarRing(a.n, a.field, Involution.parse(args.involution))
    extra = {}
    if kind is en.Kind.ALONG:
        if not args.d:
            raise InputError("--kind along needs --d")
        extra["d"] = load_matrix(args.d)
    elif kind is en.Kind.BC:
        if not (args.b and args.c):
            raise InputError("--kind bc needs --b and --c")
        extra["b"], extra["c"] = load_matrix(args.b), load_matrix(args.c)
    for m in extra.values():
        if m.n != a.n or m.field != a.field:
            raise InputError("all matrices must share dimension and field")
    if args.side != "both":
        if kind not in (en.Kind.ALONG, en.Kind.BC):
            raise InputError("--side applies only to --kind along and --kind bc")
        b = extra.get("b", extra.get("d"))
        c = extra.get("c", extra.get("d"))
        fn = en.left_bc_inverse if args.side == "left" else en.right_bc_inverse
        y = fn(ctx, a, b, c)
    else:
        y = en.named_inverse(ctx, a, kind, **extra)
    out = {"kind": kind.value, "side": args.side, "context": ctx.describe(), "exists": y is not None}
    if y is not None:
        out["result"] = matrix_to_json(y)
    _emit(out, args.output)
    if y is None:
        label = _LABELS.get(kind.value, kind.value)
        side = "" if args.side == "both" else f"{args.side} "
        print(f"ginv: no {side}{label} inverse exists", file=sys.stderr)
        return FAILED
    return OK


def cmd_verify(args) -> int:
    from .harness.registry import THEOREMS, get_theorem
    from .harness.verify import verify_all

    ctx = parse_structure(args.structure, Involution.parse(args.involution), args.budget)
    theorems = THEOREMS if args.theorem.lower() == "all" else [get_theorem(args.theorem)]
    ks = parse_k_range(args.k)
    strategy = "seeded" if args.count is not None or ctx.elements() is None else "exhaustive"
    count = args.count if args.count is not None else (200 if strategy == "seeded" else None)
    report = verify_all(ctx, theorems, strategy, ks, args.seed, count, args.workers,
                        args.explore, args.timing)
    if args.report:
        Path(args.report).write_text(_dump(report))
    for r in report["reports"]:
        line = f"{r['theorem']:8s} {r['verdict']:9s}"
        if r["verdict"] == "skipped":
            line += f" ({r['reason']})"
        else:
            line += (f" instances={r['instances_examined']}"
                     f" hypothesis={r['hypothesis_satisfied']} failures={len(r['failures'])}")
        print(line)
    s = report["summary"]
    print(f"{report['context']}: {s['passed']} passed, {s['failed']} failed, "
          f"{s['skipped']} skipped, {s['failures']} failing instances")
    return OK if report["verdict"] == "pass" else FAILED


def cmd_counterexample(args) -> int:
    from .harness.counterexamples import reproduce_counterexample
    try:
        report = reproduce_counterexample(args.id)
    except InvariantViolation as exc:
        print(f"ginv: counterexample not reproduced: {exc}", file=sys.stderr)
        return FAILED
    _emit(report, args.output)
    return OK


def cmd_validate(args) -> int:
    spec = args.table
    path = spec[6:] if spec.lower().startswith("table:") else spec
    try:
        structure = load_table(path)
    except ValidationError as exc:
        print(f"invalid: axiom '{exc.axiom}' fails at {list(exc.witness)}")
        return FAILED
    kind = "*-ring" if structure.is_ring else "*-monoid"
    print(f"valid {kind} of order {structure.size}")
    return OK


def cmd_oracle(args) -> int:
    from .harness.oracles import run_oracles
    report = run_oracles(args.seed, args.count)
    _emit(report, args.report)
    return OK if report["verdict"] == "agree" else FAILED


# ---- entry point --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ginv", description="Exact generalized inverses and "
                                "verification of (b,c)-inverse theorems.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute a named inverse of a matrix")
    c.add_argument("--kind", required=True, choices=[k.value for k in en.Kind])
    c.add_argument("--matrix", required=True, help="matrix JSON file for a")
    c.add_argument("--d", help="matrix JSON file for d (kind along)")
    c.add_argument("--b", help="matrix JSON file for b (kind bc)")
    c.add_argument("--c", help="matrix JSON file for c (kind bc)")
    c.add_argument("--involution", default="conjugate", help="transpose | conjugate")
    c.add_argument("--side", default="both", choices=["both", "left", "right"],
                   help="one-sided inverse for kinds along and bc")
    c.add_argument("--output", help="write the JSON result here instead of stdout")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="verify registry statements on a structure")
    v.add_argument("--theorem", default="all", help="tag such as T3.9, or 'all'")
    v.add_argument("--structure", required=True,
                   help="m2z2 | m2z3 | m<k>z<p> | zmod:<n> | table:<file> | matrix:<n>:<field>")
    v.add_argument("--involution", default="transpose", help="for matrix structures")
    v.add_argument("--k", default="1..3", help="k values, e.g. 1..3")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, help="seeded sample size (implies seeded strategy)")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--budget", type=int, default=10_000, help="enumeration budget")
    v.add_argument("--explore", action="store_true",
                   help="also probe T5.3 and P5.7 on monoid-only structures (not counted)")
    v.add_argument("--timing", action="store_true", help="add elapsed time to reports")
    v.add_argument("--report", help="write the JSON report here")
    v.set_defaults(func=cmd_verify)

    x = sub.add_parser("counterexample", help="reproduce remark3.8 or remark4.3")
    x.add_argument("id")
    x.add_argument("--output")
    x.set_defaults(func=cmd_counterexample)

    t = sub.add_parser("validate", help="check the axioms of a table file")
    t.add_argument("table", help="table:<file> or a path")
    t.set_defaults(func=cmd_validate)

    o = sub.add_parser("oracle", help="cross-check divisibility and Moore-Penrose oracles")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--count", type=int, default=200)
    o.add_argument("--report")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, CapabilityError, UnsupportedContextError, ResourceError,
            ZeroDivisionError) as exc:
        print(f"ginv: error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except GinvError as exc:
        print(f"ginv: error: {exc}", file=sys.stderr)
        return FAILED


if __name__ == "__main__":
    sys.exit(main())

"""Biconditional verification of registry entries over a context.

Each (instance, k) evaluation yields, per statement part, the hypothesis bit,
the clause booleans and the formula results. Evaluations are folded into the
report in canonical instance order, so the report does not depend on how many
workers produced the evaluations.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor

from ..errors import CapabilityError, GinvError, InputError, InvariantViolation
from .generate import generate_instances
from .props import Props
from .registry import THEOREMS, Theorem

DEFAULT_K = (1, 2, 3)
CHUNK = 2_000


def _run_formula(thunk):
    try:
        return bool(thunk()), None
    except (GinvError, AssertionError, ZeroDivisionError) as exc:
        return False, f"{type(exc).__name__}: {exc}"


def evaluate_instance(props: Props, theorem: Theorem, inst, k):
    """One evaluation: ``[(part, hypothesis, clauses, [(formula, ok, error)])]``,
    or ``("fault", message)`` when an engine self-check tripped."""
    try:
        parts = theorem.evaluate(props, inst, k)
    except (InvariantViolation, AssertionError, ZeroDivisionError) as exc:
        return ("fault", f"{type(exc).__name__}: {exc}")
    out = []
    for p in parts:
        formulas = [(name,) + _run_formula(thunk) for name, thunk in p.formulas]
        out.append((p.name, p.hypothesis, p.clauses, formulas))
    return out


class _Tally:
    def __init__(self, theorem: Theorem, ctx, ks):
        self.theorem, self.ctx, self.ks = theorem, ctx, ks
        self.instances = 0
        self.evaluations = 0
        self.hyp_any = 0
        self.parts = {}
        self.failures = []

    def _part(self, name):
        if name not in self.parts:
            self.parts[name] = {"hypothesis_satisfied": 0, "all_true": 0, "all_false": 0,
                                "directions": {}, "formula_checks": {}}
        return self.parts[name]

    def _describe(self, inst):
        return {var: self.ctx.format(x) for var, x in zip(self.theorem.arity, inst)}

    def _fail(self, inst, k, part, reason, clauses=None):
        rec = {"instance": self._describe(inst)}
        if k is not None:
            rec["k"] = k
        rec["part"] = part
        rec["reason"] = reason
        if clauses is not None:
            rec["clauses"] = dict(clauses)
        self.failures.append(rec)

    def add(self, inst, k, result):
        self.evaluations += 1
        if result[0] == "fault":
            self._fail(inst, k, None, f"fault: {result[1]}")
            return
        hit = False
        for name, hyp, clauses, formulas in result:
            rec = self._part(name)
            if not hyp:
                continue
            hit = True
            rec["hypothesis_satisfied"] += 1
            values = list(clauses.values())
            names = list(clauses)
            if all(values):
                rec["all_true"] += 1
            elif not any(values):
                rec["all_false"] += 1
            else:
                self._fail(inst, k, name, "clauses disagree", clauses)
            dirs = rec["directions"]
            for i, j in itertools.permutations(range(len(names)), 2):
                key = f"{names[i]} => {names[j]}"
                d = dirs.setdefault(key, {"antecedent_true": 0, "held": 0})
                if values[i]:
                    d["antecedent_true"] += 1
                    d["held"] += values[j]
            for fname, ok, err in formulas:
                fc = rec["formula_checks"].setdefault(fname, {"passed": 0, "failed": 0})
                if ok:
                    fc["passed"] += 1
                else:
                    fc["failed"] += 1
                    self._fail(inst, k, name, f"formula failed: {fname}"
                               + (f" ({err})" if err else ""), clauses)
        self.hyp_any += hit


# ---- worker plumbing --------------------------------------------------------------------

_WORKER = {}


def _worker_init(ctx, theorem_id):
    _WORKER["props"] = Props(ctx)
    _WORKER["theorem"] = next(t for t in THEOREMS if t.id == theorem_id)


def _worker_chunk(args):
    chunk, ks = args
    props, theorem = _WORKER["props"], _WORKER["theorem"]
    return [[evaluate_instance(props, theorem, inst, k) for k in ks] for inst in chunk]


def _chunks(stream, size):
    it = iter(stream)
    while True:
        block = list(itertools.islice(it, size))
        if not block:
            return
        yield block


# ---- public API -------------------------------------------------------------------------

def skip_reason(ctx, theorem: Theorem, explore: bool = False):
    if theorem.tier == "ring" and not ctx.is_ring:
        if not (explore and theorem.explorable_on_monoid):
            return "ring-tier statement on a monoid-only context"
    if theorem.needs_enumeration and ctx.elements() is None:
        return "clauses need exhaustive enumeration of the context"
    return None


def verify_theorem(ctx, theorem: Theorem, strategy: str = "exhaustive", k_range=DEFAULT_K,
                   seed: int = 0, count: int | None = None, workers: int = 1,
                   explore: bool = False, timing: bool = False) -> dict:
    """Evaluate every clause of ``theorem`` on each generated instance and tally."""
    ks = list(k_range) if theorem.k_dependent else [None]
    if any(k is not None and k < 1 for k in ks):
        raise InputError("k values must be >= 1")
    report = {"theorem": theorem.id, "statement": theorem.statement, "context": ctx.describe(),
              "tier": theorem.tier, "strategy": strategy}
    if strategy == "seeded":
        report["seed"] = seed
        report["count"] = count
    report["k_values"] = [k for k in ks if k is not None]
    reason = skip_reason(ctx, theorem, explore)
    if reason:
        report.update(status="skipped", reason=reason, verdict="skipped")
        return report
    exploratory = theorem.tier == "ring" and not ctx.is_ring
    start = time.perf_counter()
    stream = generate_instances(ctx, theorem, strategy, seed, count)
    tally = _Tally(theorem, ctx, ks)
    if workers > 1:
        with ProcessPoolExecutor(workers, initializer=_worker_init,
                                 initargs=(ctx, theorem.id)) as pool:
            blocks = list(_chunks(stream, CHUNK))
            # map yields in submission order, which is the canonical instance order
            for block, results in zip(blocks, pool.map(_worker_chunk, [(b, ks) for b in blocks])):
                for inst, per_k in zip(block, results):
                    tally.instances += 1
                    for k, res in zip(ks, per_k):
                        tally.add(inst, k, res)
    else:
        props = Props(ctx)
        for inst in stream:
            tally.instances += 1
            for k in ks:
                tally.add(inst, k, evaluate_instance(props, theorem, inst, k))
    report.update(
        status="exploratory" if exploratory else "checked",
        instances_examined=tally.instances,
        evaluations=tally.evaluations,
        hypothesis_satisfied=tally.hyp_any,
        parts=tally.parts,
        failures=tally.failures,
    )
    if exploratory:
        report["verdict"] = "agree" if not tally.failures else "disagree"
    else:
        report["verdict"] = "pass" if not tally.failures else "fail"
    if timing:
        report["elapsed_seconds"] = round(time.perf_counter() - start, 3)
    return report


def verify_all(ctx, theorems=None, strategy: str = "exhaustive", k_range=DEFAULT_K,
               seed: int = 0, count: int | None = None, workers: int = 1,
               explore: bool = False, timing: bool = False) -> dict:
    theorems = THEOREMS if theorems is None else theorems
    if strategy == "exhaustive" and ctx.elements() is None:
        raise CapabilityError(f"{ctx.describe()} cannot be enumerated; use a seeded strategy")
    reports = [verify_theorem(ctx, t, strategy, k_range, seed, count, workers, explore, timing)
               for t in theorems]
    verdicts = [r["verdict"] for r in reports]
    summary = {
        "checked": sum(v in ("pass", "fail") for v in verdicts),
        "passed": verdicts.count("pass"),
        "failed": verdicts.count("fail"),
        "skipped": verdicts.count("skipped"),
        "exploratory": sum(v in ("agree", "disagree") for v in verdicts),
        "failures": sum(len(r.get("failures", ())) for r in reports),
    }
    return {"context": ctx.describe(), "strategy": strategy, "k_values": list(k_range),
            "summary": summary, "verdict": "fail" if summary["failed"] else "pass",
            "reports": reports}


def default_workers() -> int:
    return max(1, min(8, (os.cpu_count() or 1)))

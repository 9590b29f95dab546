import itertools
import json

import pytest

from ginv import checkers as ck
from ginv.context import MatrixStarRing
from ginv.errors import CapabilityError, InputError, InvariantViolation
from ginv.finite import build_matrix_structure, validate, zmod_ring
from ginv.harness import (generate_instances, get_theorem, reproduce_counterexample,
                          theorem_registry, verify_all, verify_theorem)
from ginv.harness.registry import Part, Theorem
from ginv.matrix import Involution
from ginv.scalars import QI, zmod

TAGS = ["L3.1", "L3.2", "L3.3", "L3.4", "L3.5", "T3.6-I", "T3.6-II", "C3.7", "T3.9", "T4.1",
        "C4.2", "P4.4", "C4.5", "C4.6", "T4.7", "C4.8", "C4.9", "L5.1", "L5.2", "T5.3", "T5.4",
        "T5.5", "T5.6", "P5.7", "C5.8"]

M2Z2 = build_matrix_structure(2, 2)
TRIVIAL = validate({"size": 1, "one": 0, "mul": [[0]], "star": [0]})
MONOID = validate({"size": 2, "one": 0, "mul": [[0, 1], [1, 1]], "star": [0, 1]})


def test_registry_has_exactly_the_tags():
    assert [t.id for t in theorem_registry()] == TAGS
    ring = {t.id for t in theorem_registry() if t.tier == "ring"}
    assert ring == {"L5.1", "L5.2", "T5.3", "P5.7"}


def test_registry_lookup():
    assert get_theorem("t3.9").id == "T3.9"
    with pytest.raises(InputError):
        get_theorem("T9.9")


def _parts(tid, ctx, inst, k=1):
    from ginv.harness.props import Props
    return get_theorem(tid).evaluate(Props(ctx), inst, k)


def test_t39_and_l35_clause_sets():
    one = M2Z2.one
    (p,) = _parts("T3.9", M2Z2, (one,))
    assert p.hypothesis
    assert list(p.clauses) == ["(1) left core invertible", "(2) right core invertible", "(3) EP"]
    (p,) = _parts("L3.5", M2Z2, (one,))
    assert list(p.clauses) == ["a in S-dagger and S-sharp", "a in S-core and S-dual-core"]


def test_exhaustive_generation():
    assert len(list(generate_instances(M2Z2, get_theorem("T3.9")))) == 16
    assert len(list(generate_instances(M2Z2, get_theorem("C4.2")))) == 256
    inner = list(generate_instances(M2Z2, get_theorem("L5.1")))
    assert all(ck.check_inner(M2Z2, m, g) for _, m, g in inner)
    qi = MatrixStarRing(2, QI, Involution.TRANSPOSE)
    with pytest.raises(CapabilityError):
        list(generate_instances(qi, get_theorem("T3.9")))


@pytest.mark.parametrize("kind", [Involution.TRANSPOSE, Involution.CONJUGATE_TRANSPOSE])
def test_seeded_pairs_satisfy_the_hypothesis_by_construction(kind):
    ctx = MatrixStarRing(3, QI, kind)
    pairs = list(generate_instances(ctx, get_theorem("C4.2"), "seeded", seed=4, count=60))
    assert len(pairs) == 60
    assert all(ck.hyp_symmetric(ctx, a, d) for a, d in pairs)
    assert sum(not d.is_zero() for _, d in pairs) > 30
    both = list(generate_instances(ctx, get_theorem("T5.6"), "seeded", seed=4, count=30))
    assert all(ck.hyp_symmetric(ctx, a, d) and ck.hyp_symmetric(ctx, d, a) for a, d in both)
    triples = list(generate_instances(ctx, get_theorem("T4.1"), "seeded", seed=4, count=30))
    assert all(ck.hyp_symmetric(ctx, a, b) and ck.hyp_symmetric(ctx, a, c) for a, b, c in triples)
    squares = list(generate_instances(ctx, get_theorem("T3.9"), "seeded", seed=4, count=40))
    assert sum(ctx.is_hermitian(a * a) for (a,) in squares) >= 30


def test_seeded_streams_are_deterministic():
    ctx = MatrixStarRing(3, QI, Involution.CONJUGATE_TRANSPOSE)
    t = get_theorem("T5.4")
    one = [tuple(map(str, x)) for x in generate_instances(ctx, t, "seeded", seed=9, count=25)]
    two = [tuple(map(str, x)) for x in generate_instances(ctx, t, "seeded", seed=9, count=25)]
    other = [tuple(map(str, x)) for x in generate_instances(ctx, t, "seeded", seed=10, count=25)]
    assert one == two and one != other


def test_seeded_finite_respects_constraints():
    s = build_matrix_structure(2, 3)
    for a, b, c in generate_instances(s, get_theorem("T3.6-I"), "seeded", seed=1, count=500):
        assert ck.hyp_symmetric(s, a, b) and ck.hyp_symmetric(s, a, c)


def test_verify_examples_from_the_contract():
    r = verify_theorem(M2Z2, get_theorem("T3.9"))
    assert r["verdict"] == "pass" and r["failures"] == [] and r["instances_examined"] == 16
    r = verify_theorem(zmod_ring(6), get_theorem("T5.3"))
    assert r["verdict"] == "pass" and r["instances_examined"] == 36 and r["k_values"] == [1, 2, 3]
    assert r["evaluations"] == 108
    r = verify_theorem(TRIVIAL, get_theorem("T3.6-I"))
    assert r["verdict"] == "pass" and r["instances_examined"] == 1
    assert r["parts"][""]["all_true"] == 1


def test_formula_checks_are_exercised():
    r = verify_theorem(M2Z2, get_theorem("C3.7"))
    checks = [fc for p in r["parts"].values() for fc in p["formula_checks"].values()]
    assert checks and all(c["passed"] > 0 and c["failed"] == 0 for c in checks)


def test_ring_tier_skipped_on_monoid_unless_exploring():
    r = verify_theorem(MONOID, get_theorem("T5.3"))
    assert r["verdict"] == "skipped" and "ring" in r["reason"]
    r = verify_theorem(MONOID, get_theorem("L5.1"), explore=True)
    assert r["verdict"] == "skipped"
    r = verify_theorem(MONOID, get_theorem("T5.3"), explore=True)
    assert r["status"] == "exploratory" and r["verdict"] in ("agree", "disagree")
    summary = verify_all(MONOID, explore=True)["summary"]
    assert summary["exploratory"] == 2 and summary["failed"] == 0


def test_enumeration_only_entries_skip_on_infinite_contexts():
    ctx = MatrixStarRing(2, QI, Involution.TRANSPOSE)
    r = verify_theorem(ctx, get_theorem("L3.2"), "seeded", count=5)
    assert r["verdict"] == "skipped"


def _false_theorem():
    """A deliberately wrong 'statement': a is Hermitian iff a is idempotent."""
    def evaluate(P, inst, k):
        (a,) = inst
        ctx = P.ctx
        return [Part("", True, {"Hermitian": ctx.is_hermitian(a),
                                "idempotent": ctx.mul(a, a) == a})]
    return Theorem("X0", "bogus", ("a",), evaluate)


def test_failures_are_serialized_not_raised():
    r = verify_theorem(M2Z2, _false_theorem())
    assert r["verdict"] == "fail" and r["failures"]
    f = r["failures"][0]
    assert set(f) == {"instance", "part", "reason", "clauses"}
    assert f["reason"] == "clauses disagree"
    assert f["instance"]["a"].startswith("[[")
    json.dumps(r)
    d = r["parts"][""]["directions"]
    assert d["Hermitian => idempotent"]["held"] < d["Hermitian => idempotent"]["antecedent_true"]


def test_faults_are_recorded_as_failures():
    def evaluate(P, inst, k):
        raise InvariantViolation("engine self-check tripped")
    r = verify_theorem(TRIVIAL, Theorem("X1", "faulty", ("a",), evaluate))
    assert r["verdict"] == "fail" and r["failures"][0]["reason"].startswith("fault:")


def test_report_independent_of_worker_count():
    t = get_theorem("C4.5")
    s = build_matrix_structure(2, 2)
    one = verify_theorem(s, t, workers=1)
    two = verify_theorem(s, t, workers=3)
    assert json.dumps(one) == json.dumps(two)


def test_timing_is_opt_in():
    t = get_theorem("T3.9")
    assert "elapsed_seconds" not in verify_theorem(M2Z2, t)
    assert "elapsed_seconds" in verify_theorem(M2Z2, t, timing=True)


def test_bad_k():
    with pytest.raises(InputError):
        verify_theorem(M2Z2, get_theorem("C4.5"), k_range=[0])


def test_counterexamples():
    for cid in ("remark3.8", "remark38", "remark4.3", "REMARK43"):
        r = reproduce_counterexample(cid)
        assert r["verdict"] == "reproduced" and all(a["holds"] for a in r["assertions"])
    assert len(reproduce_counterexample("remark3.8")["assertions"]) == 5
    with pytest.raises(InputError):
        reproduce_counterexample("remark99")


def test_zmod_matrix_context_seeded_verification():
    ctx = MatrixStarRing(3, zmod(5), Involution.TRANSPOSE)
    for tid in ("C3.7", "T5.6", "L5.2"):
        r = verify_theorem(ctx, get_theorem(tid), "seeded", seed=2, count=40)
        assert r["verdict"] == "pass", r["failures"][:2]


def test_every_theorem_hits_both_truth_values_somewhere():
    """Guards against vacuous passes: each statement sees all-true and all-false cases."""
    structures = [M2Z2, build_matrix_structure(2, 3)] + [zmod_ring(n) for n in (4, 8, 12)]
    seen = {t.id: [0, 0] for t in theorem_registry()}
    for s in structures:
        for t in theorem_registry():
            if t.id in ("L3.1", "L3.2") and s.size > 16:
                continue
            if len(t.arity) >= 3 and s.size > 16:
                continue
            r = verify_theorem(s, t)
            for p in r.get("parts", {}).values():
                seen[t.id][0] += p["all_true"]
                seen[t.id][1] += p["all_false"]
    for tid, (yes, no) in seen.items():
        assert yes > 0, tid
        # L3.3 and L5.x are equivalences that M_2 fills on both sides; all entries must too
        assert no > 0, tid


def test_exhaustive_arity_three_is_available_on_m2z3():
    s = build_matrix_structure(2, 3)
    assert sum(1 for _ in itertools.islice(generate_instances(s, get_theorem("T4.7")), 1000)) == 1000

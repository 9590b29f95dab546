"""Bit-exact reproduction of the two 2x2 counterexamples over Q(i)."""

from __future__ import annotations

from .. import checkers as ck
from .. import engines as en
from ..context import MatrixStarRing
from ..errors import InputError, InvariantViolation
from ..matrix import Involution, Matrix
from ..scalars import QI, GaussianRational


def _m(rows):
    return Matrix.from_rows(rows, QI)


def _assertion(out, name, holds, **detail):
    entry = {"name": name, "holds": bool(holds)}
    entry.update({k: str(v) for k, v in detail.items()})
    out.append(entry)


def _remark38():
    """Transpose involution: along d exists, d has a {1,4}- but no {1,3}-inverse."""
    ctx = MatrixStarRing(2, QI, Involution.TRANSPOSE)
    d = _m([["1", "0"], ["i", "0"]])
    a = _m([["1", "0"], ["-i", "1"]])
    ad, da = a * d, d * a
    out = []
    _assertion(out, "(ad)* = ad", ctx.is_hermitian(ad), ad=ad)
    _assertion(out, "(da)* != da", not ctx.is_hermitian(da), da=da, da_star=ctx.star(da))
    y = en.bc_inverse(ctx, a, d, d)
    _assertion(out, "inverse of a along d exists", y is not None and ck.check_bc(ctx, a, d, d, y),
               value=y)
    x = ctx.left_divides(ctx.prod(d, a, d), d)
    d14 = None if x is None else ctx.mul(a, x)
    _assertion(out, "d has a {1,4}-inverse a x (d = x d a d)",
               d14 is not None and ck.check_14(ctx, d, d14), witness_x=x, value=d14)
    dsd = ctx.mul(ctx.star(d), d)
    # a {1,3}-inverse x would give d = x* d* d = 0
    _assertion(out, "d has no {1,3}-inverse (d* d = 0, d != 0)",
               dsd.is_zero() and not d.is_zero()
               and en.named_inverse(ctx, d, en.Kind.ONE_THREE) is None, d_star_d=dsd)
    return ctx, {"a": a, "d": d}, out


def _remark43():
    """Conjugate transpose: a-dagger and along d exist, yet da is not left invertible along d."""
    ctx = MatrixStarRing(2, QI, Involution.CONJUGATE_TRANSPOSE)
    a = _m([["1", "i"], ["i", "-1"]])
    d = ctx.star(a)
    out = []
    a2 = a * a
    _assertion(out, "a^2 = 0", a2.is_zero(), a2=a2)
    ddad = ctx.prod(d, d, a, d)
    _assertion(out, "d^2 a d = 0", ddad.is_zero(), d2ad=ddad)
    mp = en.named_inverse(ctx, a, en.Kind.MP)
    want = d * GaussianRational("1/4")
    _assertion(out, "a-dagger exists and equals a*/4",
               mp is not None and ck.check_mp(ctx, a, mp) and ctx.eq(mp, want), value=mp)
    y = en.bc_inverse(ctx, a, d, d)
    _assertion(out, "inverse of a along d exists", y is not None and ck.check_bc(ctx, a, d, d, y),
               value=y)
    da = d * a
    _assertion(out, "da is not left invertible along d", en.left_bc_inverse(ctx, da, d, d) is None,
               d_da_d=ctx.prod(d, da, d))
    _assertion(out, "Sd != Sd^2", not ck.ideal_eq(ctx, d, d * d, "left"), d2=d * d)
    return ctx, {"a": a, "d": d}, out


COUNTEREXAMPLES = {"remark3.8": _remark38, "remark4.3": _remark43}
_ALIASES = {"remark38": "remark3.8", "remark43": "remark4.3"}


def reproduce_counterexample(cid: str) -> dict:
    key = _ALIASES.get(cid.lower(), cid.lower())
    if key not in COUNTEREXAMPLES:
        raise InputError(f"unknown counterexample {cid!r}; known: {', '.join(COUNTEREXAMPLES)}")
    ctx, mats, assertions = COUNTEREXAMPLES[key]()
    report = {"id": key, "context": ctx.describe(),
              "elements": {k: str(v) for k, v in mats.items()},
              "assertions": assertions,
              "verdict": "reproduced"}
    broken = [x["name"] for x in assertions if not x["holds"]]
    if broken:
        raise InvariantViolation(f"{key}: assertions failed: {'; '.join(broken)}")
    return report

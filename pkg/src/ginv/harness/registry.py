"""Registry of the verifiable statements.

Each entry evaluates every numbered clause of its statement to a boolean using
only definitional predicates (:mod:`.props`, :mod:`ginv.checkers`). The
witness formulas attached to a statement are separate thunks, run only when all
clauses hold, so they confirm rather than decide.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .. import checkers as ck
from .. import engines as en
from ..errors import InputError
from .props import Props


@dataclass
class Part:
    name: str
    hypothesis: bool
    clauses: dict = field(default_factory=dict)
    formulas: list = field(default_factory=list)   # [(name, thunk -> bool)]


@dataclass(frozen=True)
class Theorem:
    id: str
    statement: str
    arity: tuple
    evaluate: Callable
    tier: str = "monoid"
    k_dependent: bool = False
    needs_enumeration: bool = False
    # generator hints: ((var, "ad"|"da"), ...) linear Hermitian constraints on var,
    # or family "square_hermitian" for (a^2)* = a^2
    constraints: tuple = ()
    family: str | None = None
    with_inner: bool = False
    # clauses use monoid operations only, so the statement can be probed on monoids
    explorable_on_monoid: bool = False


def part(name, hyp, clauses_fn, formulas_fn=None) -> Part:
    if not hyp:
        return Part(name, False)
    clauses = clauses_fn()
    formulas = formulas_fn() if formulas_fn and all(clauses.values()) else []
    return Part(name, True, clauses, formulas)


def _same(ctx, x, y):
    return x is not None and y is not None and ctx.eq(x, y)


# ---- section 3 lemmas -------------------------------------------------------------------

def _l31(P: Props, inst, k):
    a, b, c = inst
    ctx = P.ctx
    elems = ctx.elements()
    ys = [y for y in elems if ck.check_bc_definition(ctx, a, b, c, y)]
    cab = ctx.prod(c, a, b)

    def one():
        return {"(b,c)-invertible": bool(ys),
                "b in Scab and c in cabS": ck.in_left_ideal(ctx, cab, b)
                and ck.in_right_ideal(ctx, cab, c)}

    def one_f():
        return [("inverse is unique", lambda: len(ys) == 1)]

    xs = [x for x in elems if ck.check_left_bc(ctx, a, b, c, x)]
    zs = [z for z in elems if ck.check_right_bc(ctx, a, b, c, z)]

    def two():
        return {"(b,c)-invertible": bool(ys), "left and right (b,c)-invertible": bool(xs and zs)}

    def two_f():
        return [("y = x = z for all one-sided inverses", lambda: len(set(ys) | set(xs) | set(zs)) == 1)]

    return [part("(1)", True, one, one_f), part("(2)", True, two, two_f)]


def _l32(P: Props, inst, k):
    a, b, c, y = inst
    ctx = P.ctx
    return [part("", True, lambda: {
        "y is the (b,c)-inverse": ck.check_bc_definition(ctx, a, b, c, y),
        "yay = y, yS = bS, Sy = Sc": ck.check_bc(ctx, a, b, c, y)})]


def _l33(P: Props, inst, k):
    a, x = inst
    ctx = P.ctx
    return [
        part("(1)", True, lambda: {"{1,3}-inverse": ck.is_13_equational(ctx, a, x),
                                   "a = x*a*a": ck.is_13_closed(ctx, a, x)}),
        part("(2)", True, lambda: {"{1,4}-inverse": ck.is_14_equational(ctx, a, x),
                                   "a = aa*x*": ck.is_14_closed(ctx, a, x)}),
    ]


def _l34(P: Props, inst, k):
    (a,) = inst
    ctx = P.ctx

    def clauses():
        g = P.group(a)
        return {"EP": P.is_ep(a),
                "group invertible with aa# Hermitian": g is not None and ctx.is_hermitian(ctx.mul(a, g))}

    def formulas():
        def bundle():
            v = en.ep_check(ctx, a)
            return v.is_ep and _same(ctx, v.group, P.mp(a))
        return [("ep_check bundle agrees", bundle)]

    return [part("", True, clauses, formulas)]


def _l35(P: Props, inst, k):
    (a,) = inst
    return [part("", True, lambda: {
        "a in S-dagger and S-sharp": P.in_mp(a) and P.in_group(a),
        "a in S-core and S-dual-core": P.core(a) is not None and P.dual_core(a) is not None})]


def _t36(P: Props, inst, k, side):
    a, b, c = inst
    ctx = P.ctx
    hyp = ck.hyp_symmetric(ctx, a, b) and ck.hyp_symmetric(ctx, a, c)
    one_sided = P.left_bc if side == "I" else P.right_bc

    def clauses():
        return {"(1) one-sided (b,c) and (c,b)": one_sided(a, b, c) and one_sided(a, c, b),
                "(2) (b,c)- and (c,b)-invertible": P.bc(a, b, c) and P.bc(a, c, b)}

    def formulas():
        want = (P.bc_value(a, b, c), P.bc_value(a, c, b))
        if side == "I":
            xs = P.left_witnesses(ctx.prod(c, a, b), b)
            ys = P.left_witnesses(ctx.prod(b, a, c), c)
            build, label = en.thm36_left_construct, "xc and yb"
        else:
            xs = P.right_witnesses(ctx.prod(b, a, c), b)
            ys = P.right_witnesses(ctx.prod(c, a, b), c)
            build, label = en.thm36_right_construct, "by and cx"

        def check():
            if not xs or not ys:
                return False
            pairs = [(x, ys[0]) for x in xs] + [(xs[0], y) for y in ys[1:]]
            for x, y in pairs:
                got = build(ctx, a, b, c, x, y)
                if not (_same(ctx, got[0], want[0]) and _same(ctx, got[1], want[1])):
                    return False
            return True
        return [(f"{label} give the (b,c)- and (c,b)-inverses for every witness", check)]

    return [part("", hyp, clauses, formulas)]


def _c37(P: Props, inst, k):
    a, d = inst
    ctx = P.ctx
    hyp = ck.hyp_symmetric(ctx, a, d)
    dad = ctx.prod(d, a, d)

    def formulas(side):
        def run():
            ws = P.left_witnesses(dad, d) if side == "left" else P.right_witnesses(dad, d)
            want = P.bc_value(a, d, d)
            return bool(ws) and all(_same(ctx, en.cor37_along(ctx, a, d, side, x).along, want)
                                    for x in ws)
        label = "xd and ax" if side == "left" else "dx and x*a"
        return lambda: [(f"{label}: inverse along d and {{1,4}}-inverse of d", run)]

    return [
        part("(1)", hyp, lambda: {"left invertible along d": P.left_along(a, d),
                                  "invertible along d": P.along(a, d)}, formulas("left")),
        part("(2)", hyp, lambda: {"right invertible along d": P.right_along(a, d),
                                  "invertible along d": P.along(a, d)}, formulas("right")),
    ]


def _t39(P: Props, inst, k):
    (a,) = inst
    ctx = P.ctx
    s = ctx.star(a)
    hyp = ctx.is_hermitian(ctx.mul(a, a))

    def clauses():
        return {"(1) left core invertible": P.left_bc(a, a, s),
                "(2) right core invertible": P.right_bc(a, a, s),
                "(3) EP": P.is_ep(a)}

    def formulas():
        want = P.group(a)

        def left():
            xs = P.left_witnesses(ctx.prod(s, a, a), a)
            return bool(xs) and all(_same(ctx, en.thm39_from_left_witness(ctx, a, x).group, want)
                                    for x in xs)

        def right():
            ys = P.right_witnesses(ctx.prod(s, a, a), s)
            return bool(ys) and all(_same(ctx, en.thm39_from_right_witness(ctx, a, y).group, want)
                                    for y in ys)
        return [("left-witness bundle (xa*, (ax)^2 a, a((ax)*)^2)", left),
                ("right-witness bundle (ay, a(ya)^2)", right)]

    return [part("", hyp, clauses, formulas)]


# ---- section 4 ----------------------------------------------------------------------------

def _t41(P: Props, inst, k):
    a, b, c = inst
    ctx = P.ctx
    hyp = ck.hyp_symmetric(ctx, a, b) and ck.hyp_symmetric(ctx, a, c)
    ba, ca = ctx.mul(b, a), ctx.mul(c, a)
    return [part("", hyp, lambda: {
        "(1) (b,c)/(c,b)-invertible, Sb = Sb^2, Sc = Sc^2":
            P.bc(a, b, c) and P.bc(a, c, b) and P.left_square(b) and P.left_square(c),
        "(2) ba left (c,b), ca left (b,c)": P.left_bc(ba, c, b) and P.left_bc(ca, b, c)})]


def _c42(P: Props, inst, k):
    a, d = inst
    ctx = P.ctx
    hyp = ck.hyp_symmetric(ctx, a, d)
    return [part("", hyp, lambda: {
        "(1) along d exists, Sd = Sd^2": P.along(a, d) and P.left_square(d),
        "(2) da left invertible along d": P.left_along(ctx.mul(d, a), d)})]


def _p44(P: Props, inst, k):
    a, b, c = inst
    ctx = P.ctx
    hyp1 = P.left_bc(a, b, c) and P.left_bc(a, c, b)
    hyp2 = P.right_bc(a, b, c) and P.right_bc(a, c, b)
    ab, ac, ba, ca = ctx.mul(a, b), ctx.mul(a, c), ctx.mul(b, a), ctx.mul(c, a)
    return [
        part("(1)", hyp1, lambda: {
            "Sb = Sb^2, Sc = Sc^2": P.left_square(b) and P.left_square(c),
            "ab left (b,c), ac left (c,b)": P.left_bc(ab, b, c) and P.left_bc(ac, c, b)}),
        part("(2)", hyp2, lambda: {
            "bS = b^2S, cS = c^2S": P.right_square(b) and P.right_square(c),
            "ba right (c,b), ca right (b,c)": P.right_bc(ba, c, b) and P.right_bc(ca, b, c)}),
    ]


def _c45(P: Props, inst, k):
    a, d = inst
    ctx = P.ctx
    adk = ctx.power(ctx.mul(a, d), k)
    dak = ctx.power(ctx.mul(d, a), k)
    return [
        part("(1)", P.left_along(a, d), lambda: {
            "Sd = Sd^2": P.left_square(d),
            "(ad)^k left invertible along d": P.left_along(adk, d)}),
        part("(2)", P.right_along(a, d), lambda: {
            "dS = d^2S": P.right_square(d),
            "(da)^k right invertible along d": P.right_along(dak, d)}),
    ]


def _c46(P: Props, inst, k):
    (a,) = inst
    ctx = P.ctx
    hyp = P.in_mp(a)
    s = ctx.star(a)
    return [
        part("(1)", hyp, lambda: {
            "Sa = Sa^2": P.left_square(a),
            "(a*a)^k left invertible along a": P.left_along(ctx.power(ctx.mul(s, a), k), a)}),
        part("(2)", hyp, lambda: {
            "aS = a^2S": P.right_square(a),
            "(aa*)^k right invertible along a": P.right_along(ctx.power(ctx.mul(a, s), k), a)}),
    ]


def _t47(P: Props, inst, k):
    a, b, c = inst
    ctx = P.ctx
    hyp = ck.hyp_symmetric(ctx, a, b) and ck.hyp_symmetric(ctx, a, c)
    ba, ca = ctx.mul(b, a), ctx.mul(c, a)
    return [part("", hyp, lambda: {
        "(1) (b,c)/(c,b)-invertible, b and c group invertible":
            P.bc(a, b, c) and P.bc(a, c, b) and P.in_group(b) and P.in_group(c),
        "(2) ba (c,b)-invertible, ca (b,c)-invertible": P.bc(ba, c, b) and P.bc(ca, b, c)})]


def _c48(P: Props, inst, k):
    a, d = inst
    ctx = P.ctx
    hyp = ck.hyp_symmetric(ctx, a, d)
    return [part("", hyp, lambda: {
        "(1) along d exists, d group invertible": P.along(a, d) and P.in_group(d),
        "(2) da invertible along d": P.along(ctx.mul(d, a), d)})]


def _c49(P: Props, inst, k):
    (a,) = inst
    ctx = P.ctx
    s = ctx.star(a)
    a2, sa = ctx.mul(a, a), ctx.mul(s, a)
    hyp = ctx.is_hermitian(a2)
    return [part("", hyp, lambda: {
        "(1) EP": P.is_ep(a),
        "(2) a^2 left (a*,a), a*a left (a,a*)": P.left_bc(a2, s, a) and P.left_bc(sa, a, s),
        "(3) a^2 (a*,a)-invertible, a*a (a,a*)-invertible": P.bc(a2, s, a) and P.bc(sa, a, s)})]


# ---- section 5 ----------------------------------------------------------------------------

def _l5(P: Props, inst, k, side):
    a, m, g = inst
    ctx = P.ctx
    if side == "left":
        one_sided, inv = P.left_along, ctx.left_invertible
    else:
        one_sided, inv = P.right_along, ctx.right_invertible
    return [part("", True, lambda: {
        f"(1) {side} invertible along m": one_sided(a, m),
        f"(2) u = (am)^k + 1 - m^-m {side} invertible": inv(en.unit_u(ctx, a, m, g, k)) is not None,
        f"(3) v = (ma)^k + 1 - mm^- {side} invertible": inv(en.unit_v(ctx, a, m, g, k)) is not None})]


def _t53(P: Props, inst, k):
    a, d = inst
    ctx = P.ctx
    hyp = ck.hyp_symmetric(ctx, a, d)
    dak = ctx.power(ctx.mul(d, a), k)

    def clauses():
        return {"(1) along d exists, Rd = Rd^2": P.along(a, d) and P.left_square(d),
                "(2) (da)^k left invertible along d": P.left_along(dak, d)}

    def formulas():
        if not ctx.is_ring:
            return []
        one = ctx.one

        def factorization():
            for g in ctx.inner_inverses(d)[:4]:
                dg = ctx.mul(d, g)
                lhs = ctx.mul(ctx.sub(ctx.add(ctx.prod(d, d, g), one), dg),
                              ctx.sub(ctx.add(dak, one), dg))
                rhs = ctx.sub(ctx.add(ctx.mul(d, dak), one), dg)
                if not ctx.eq(lhs, rhs):
                    return False
            return bool(ctx.inner_inverses(d))

        def jacobson():
            g = ctx.inner_inverses(d)[0]
            dg = ctx.mul(d, g)
            x, y = ctx.sub(d, one), dg
            r = ctx.left_invertible(ctx.add(one, ctx.mul(x, y)))
            if r is None:
                return False
            r2 = en.jacobson_transfer(ctx, x, y, r)
            return (ctx.eq(ctx.mul(r2, ctx.sub(ctx.add(d, one), dg)), one)
                    and ctx.eq(ctx.prod(r2, d, d), d))

        return [("(d^2d^- + 1 - dd^-)((da)^k + 1 - dd^-) = d(da)^k + 1 - dd^-", factorization),
                ("Jacobson transfer gives r with d = r d^2", jacobson)]

    return [part("", hyp, clauses, formulas)]


def _t54(P: Props, inst, k):
    a, d = inst
    ctx = P.ctx
    hyp = ck.hyp_symmetric(ctx, a, d)
    return [part("", hyp, lambda: {
        "(1) along d exists, dS = d^2S": P.along(a, d) and P.right_square(d),
        "(2) (ad)^k right invertible along d": P.right_along(ctx.power(ctx.mul(a, d), k), d)})]


def _t55(P: Props, inst, k):
    a, d = inst
    ctx = P.ctx
    hyp = ck.hyp_symmetric(ctx, d, a)
    return [part("", hyp, lambda: {
        "(1) along d exists, Sd = Sd^2": P.along(a, d) and P.left_square(d),
        "(2) (da)^k left invertible along d": P.left_along(ctx.power(ctx.mul(d, a), k), d)})]


def _t56(P: Props, inst, k):
    a, d = inst
    ctx = P.ctx
    hyp = ck.hyp_symmetric(ctx, a, d) and ck.hyp_symmetric(ctx, d, a)
    adk = ctx.power(ctx.mul(a, d), k)
    dak = ctx.power(ctx.mul(d, a), k)
    return [part("", hyp, lambda: {
        "(1) along d exists, d in S#": P.along(a, d) and P.in_group(d),
        "(2) along d exists, d in S# and S-dagger": P.along(a, d) and P.in_group(d) and P.in_mp(d),
        "(3) (ad)^k right, (da)^k left invertible along d": P.right_along(adk, d) and P.left_along(dak, d),
        "(4) (ad)^k invertible along d": P.along(adk, d),
        "(5) (da)^k invertible along d": P.along(dak, d)})]


def _p57(P: Props, inst, k):
    a, d = inst
    ctx = P.ctx
    hyp = ck.hyp_symmetric(ctx, a, d)
    return [part("", hyp, lambda: {
        "(1) along d exists, d in R#": P.along(a, d) and P.in_group(d),
        "(2) (da)^k invertible along d": P.along(ctx.power(ctx.mul(d, a), k), d)})]


def _c58(P: Props, inst, k):
    (a,) = inst
    ctx = P.ctx
    hyp = ctx.is_hermitian(ctx.mul(a, a))
    return [part("", hyp, lambda: {
        "(1) a in S#": P.in_group(a),
        "(2) a in S# and S-dagger": P.in_group(a) and P.in_mp(a),
        "(3) EP": P.is_ep(a)})]


ABC = ("a", "b", "c")
AD = ("a", "d")
A = ("a",)
SYM_BC = (("b", "ad"), ("c", "ad"))
SYM_D = (("d", "ad"),)

THEOREMS = [
    Theorem("L3.1", "(b,c)-invertible iff b in Scab and c in cabS; one-sided inverses coincide",
            ABC, _l31, needs_enumeration=True),
    Theorem("L3.2", "y is the (b,c)-inverse iff yay = y, yS = bS, Sy = Sc",
            ("a", "b", "c", "y"), _l32, needs_enumeration=True),
    Theorem("L3.3", "{1,3}/{1,4}-inverse iff a = x*a*a / a = aa*x*", ("a", "x"), _l33),
    Theorem("L3.4", "EP iff group invertible with aa# Hermitian", A, _l34),
    Theorem("L3.5", "MP and group invertible iff core and dual core invertible", A, _l35),
    Theorem("T3.6-I", "under (ab)*=ab, (ac)*=ac: left (b,c) and (c,b) iff two-sided",
            ABC, lambda P, i, k: _t36(P, i, k, "I"), constraints=SYM_BC),
    Theorem("T3.6-II", "under (ab)*=ab, (ac)*=ac: right (b,c) and (c,b) iff two-sided",
            ABC, lambda P, i, k: _t36(P, i, k, "II"), constraints=SYM_BC),
    Theorem("C3.7", "under (ad)*=ad: one-sided along d iff along d; d is {1,4}-invertible",
            AD, _c37, constraints=SYM_D),
    Theorem("T3.9", "under (a^2)*=a^2: left core iff right core iff EP", A, _t39,
            family="square_hermitian"),
    Theorem("T4.1", "under (ab)*=ab, (ac)*=ac: two-sided with Sb=Sb^2, Sc=Sc^2 iff ba, ca left",
            ABC, _t41, constraints=SYM_BC),
    Theorem("C4.2", "under (ad)*=ad: along d with Sd=Sd^2 iff da left invertible along d",
            AD, _c42, constraints=SYM_D),
    Theorem("P4.4", "given one-sided (b,c),(c,b): square ideals iff ab, ac (resp. ba, ca) one-sided",
            ABC, _p44),
    Theorem("C4.5", "given one-sided along d: square ideal iff (ad)^k / (da)^k one-sided along d",
            AD, _c45, k_dependent=True),
    Theorem("C4.6", "for a in S-dagger: Sa=Sa^2 iff (a*a)^k left along a; dual", A, _c46,
            k_dependent=True),
    Theorem("T4.7", "under (ab)*=ab, (ac)*=ac: two-sided with b,c in S# iff ba, ca two-sided",
            ABC, _t47, constraints=SYM_BC),
    Theorem("C4.8", "under (ad)*=ad: along d with d in S# iff da invertible along d",
            AD, _c48, constraints=SYM_D),
    Theorem("C4.9", "under (a^2)*=a^2: EP iff a^2, a*a one-sided iff two-sided", A, _c49,
            family="square_hermitian"),
    Theorem("L5.1", "m regular: left along m iff u left invertible iff v left invertible",
            ("a", "m", "m_inner"), lambda P, i, k: _l5(P, i, k, "left"), tier="ring",
            k_dependent=True, with_inner=True),
    Theorem("L5.2", "m regular: right along m iff u right invertible iff v right invertible",
            ("a", "m", "m_inner"), lambda P, i, k: _l5(P, i, k, "right"), tier="ring",
            k_dependent=True, with_inner=True),
    Theorem("T5.3", "in a ring, under (ad)*=ad: along d with Rd=Rd^2 iff (da)^k left along d",
            AD, _t53, tier="ring", k_dependent=True, constraints=SYM_D, explorable_on_monoid=True),
    Theorem("T5.4", "under (ad)*=ad: along d with dS=d^2S iff (ad)^k right along d",
            AD, _t54, k_dependent=True, constraints=SYM_D),
    Theorem("T5.5", "under (da)*=da: along d with Sd=Sd^2 iff (da)^k left along d",
            AD, _t55, k_dependent=True, constraints=(("d", "da"),)),
    Theorem("T5.6", "under (ad)*=ad, (da)*=da: five equivalent conditions",
            AD, _t56, k_dependent=True, constraints=(("d", "ad"), ("d", "da"))),
    Theorem("P5.7", "in a ring, under (ad)*=ad: along d with d in R# iff (da)^k along d",
            AD, _p57, tier="ring", k_dependent=True, constraints=SYM_D, explorable_on_monoid=True),
    Theorem("C5.8", "under (a^2)*=a^2: a in S# iff a in S# and S-dagger iff EP", A, _c58,
            family="square_hermitian"),
]

REGISTRY = {t.id: t for t in THEOREMS}


def theorem_registry() -> list:
    return list(THEOREMS)


def get_theorem(tag: str) -> Theorem:
    try:
        return REGISTRY[tag.upper()]
    except KeyError:
        raise InputError(f"unknown theorem {tag!r}; known: {', '.join(REGISTRY)}") from None

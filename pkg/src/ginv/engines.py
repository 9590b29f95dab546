"""Constructive (b,c)-inverses, their specializations, and the witness formulas.

Every presence result is re-verified by a checker before it is returned; a
failed re-check raises :class:`InvariantViolation` instead of returning a wrong
value.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any, Optional

from . import checkers as ck
from .context import StarMonoid, require_ring
from .errors import InputError, InvariantViolation


class Kind(enum.Enum):
    MP = "mp"
    GROUP = "group"
    CORE = "core"
    DUAL_CORE = "dualcore"
    ALONG = "along"
    BC = "bc"
    ONE_THREE = "13"
    ONE_FOUR = "14"


def _verify(ok: bool, what: str):
    if not ok:
        raise InvariantViolation(what)


def left_bc_inverse(ctx: StarMonoid, a, b, c):
    """``x = s c`` where ``s (c a b) = b``, or None when ``b`` is not in ``S cab``."""
    s = ctx.left_divides(ctx.prod(c, a, b), b)
    if s is None:
        return None
    x = ctx.mul(s, c)
    _verify(ck.check_left_bc(ctx, a, b, c, x), "left (b,c)-inverse failed its checker")
    return x


def right_bc_inverse(ctx: StarMonoid, a, b, c):
    """``z = b u`` where ``(c a b) u = c``, or None when ``c`` is not in ``cab S``."""
    u = ctx.right_divides(ctx.prod(c, a, b), c)
    if u is None:
        return None
    z = ctx.mul(b, u)
    _verify(ck.check_right_bc(ctx, a, b, c, z), "right (b,c)-inverse failed its checker")
    return z


def bc_inverse(ctx: StarMonoid, a, b, c):
    """The (b,c)-inverse of ``a``: present iff both one-sided inverses exist, which then coincide."""
    x = left_bc_inverse(ctx, a, b, c)
    if x is None:
        return None
    z = right_bc_inverse(ctx, a, b, c)
    if z is None:
        return None
    _verify(ctx.eq(x, z), "left and right (b,c)-inverses differ")
    _verify(ck.check_bc(ctx, a, b, c, x), "(b,c)-inverse failed its checker")
    return x


def named_inverse(ctx: StarMonoid, a, kind: Kind, d=None, b=None, c=None):
    """Dispatch a named inverse to its (b,c) specialization.

    ``ONE_THREE``/``ONE_FOUR`` solve ``a* = a* a x`` resp. ``a* = x a a*``,
    which is the closed form of the corresponding Penrose subsystem.
    """
    s = ctx.star(a)
    if kind is Kind.MP:
        y = bc_inverse(ctx, a, s, s)
        _verify(y is None or ck.check_mp(ctx, a, y), "MP inverse failed the Penrose equations")
    elif kind is Kind.GROUP:
        y = bc_inverse(ctx, a, a, a)
        _verify(y is None or ck.check_group(ctx, a, y), "group inverse failed its checker")
    elif kind is Kind.CORE:
        y = bc_inverse(ctx, a, a, s)
        _verify(y is None or ck.check_core(ctx, a, y), "core inverse failed its checker")
    elif kind is Kind.DUAL_CORE:
        y = bc_inverse(ctx, a, s, a)
        _verify(y is None or ck.check_dual_core(ctx, a, y), "dual core inverse failed its checker")
    elif kind is Kind.ALONG:
        if d is None:
            raise InputError("inverse along d needs d")
        y = bc_inverse(ctx, a, d, d)
    elif kind is Kind.BC:
        if b is None or c is None:
            raise InputError("(b,c)-inverse needs b and c")
        y = bc_inverse(ctx, a, b, c)
    elif kind is Kind.ONE_THREE:
        y = ctx.right_divides(ctx.mul(s, a), s)
        _verify(y is None or ck.check_13(ctx, a, y), "{1,3}-inverse failed its checker")
    elif kind is Kind.ONE_FOUR:
        y = ctx.left_divides(ctx.mul(a, s), s)
        _verify(y is None or ck.check_14(ctx, a, y), "{1,4}-inverse failed its checker")
    else:
        raise InputError(f"unknown inverse kind {kind!r}")
    return y


# ---- section-3 witness constructions -------------------------------------------------

def _require_symmetric(ctx, a, *others):
    for o in others:
        if not ck.hyp_symmetric(ctx, a, o):
            raise InputError(f"hypothesis (a{ctx.format(o)})* = a{ctx.format(o)} fails")


def thm36_left_construct(ctx: StarMonoid, a, b, c, x, y):
    """From ``b = x c a b`` and ``c = y b a c`` return ``(x c, y b)``.

    These are the (b,c)- and (c,b)-inverses when ``ab`` and ``ac`` are Hermitian.
    """
    _require_symmetric(ctx, a, b, c)
    if not ctx.eq(ctx.prod(x, c, a, b), b) or not ctx.eq(ctx.prod(y, b, a, c), c):
        raise InputError("witnesses must satisfy b = xcab and c = ybac")
    inv_bc, inv_cb = ctx.mul(x, c), ctx.mul(y, b)
    _verify(ck.check_bc(ctx, a, b, c, inv_bc), "xc is not the (b,c)-inverse")
    _verify(ck.check_bc(ctx, a, c, b, inv_cb), "yb is not the (c,b)-inverse")
    return inv_bc, inv_cb


def thm36_right_construct(ctx: StarMonoid, a, b, c, x, y):
    """From ``b = b a c x`` and ``c = c a b y`` return ``(b y, c x)``.

    The longer expression ``b y* x* a c`` for the (b,c)-inverse is computed too
    and must agree with ``b y``.
    """
    _require_symmetric(ctx, a, b, c)
    if not ctx.eq(ctx.prod(b, a, c, x), b) or not ctx.eq(ctx.prod(c, a, b, y), c):
        raise InputError("witnesses must satisfy b = bacx and c = caby")
    inv_bc, inv_cb = ctx.mul(b, y), ctx.mul(c, x)
    long_form = ctx.prod(b, ctx.star(y), ctx.star(x), a, c)
    _verify(ctx.eq(long_form, inv_bc), "b y* x* a c differs from b y")
    _verify(ck.check_bc(ctx, a, b, c, inv_bc), "by is not the (b,c)-inverse")
    _verify(ck.check_bc(ctx, a, c, b, inv_cb), "cx is not the (c,b)-inverse")
    return inv_bc, inv_cb


@dataclass(frozen=True)
class AlongResult:
    along: Any
    d_14: Any


def cor37_along(ctx: StarMonoid, a, d, side: str, x) -> AlongResult:
    """Inverse of ``a`` along ``d`` and a {1,4}-inverse of ``d`` from one witness.

    ``side='left'``: ``d = x d a d`` gives ``x d`` and ``a x``.
    ``side='right'``: ``d = d a d x`` gives ``d x`` and ``x* a``.
    """
    _require_symmetric(ctx, a, d)
    if side == "left":
        if not ctx.eq(ctx.prod(x, d, a, d), d):
            raise InputError("witness must satisfy d = xdad")
        along, d14 = ctx.mul(x, d), ctx.mul(a, x)
    elif side == "right":
        if not ctx.eq(ctx.prod(d, a, d, x), d):
            raise InputError("witness must satisfy d = dadx")
        along, d14 = ctx.mul(d, x), ctx.mul(ctx.star(x), a)
    else:
        raise InputError(f"side must be 'left' or 'right', got {side!r}")
    _verify(ck.check_bc(ctx, a, d, d, along), f"{side} witness gave a wrong inverse along d")
    _verify(ck.check_14(ctx, d, d14), f"{side} witness gave a wrong {{1,4}}-inverse of d")
    return AlongResult(along, d14)


@dataclass(frozen=True)
class EpVerdict:
    is_ep: bool
    group: Optional[Any] = None
    mp: Optional[Any] = None
    core: Optional[Any] = None
    dual_core: Optional[Any] = None


def _check_bundle(ctx, a, v: EpVerdict):
    _verify(ck.check_group(ctx, a, v.group), "bundle: group inverse failed")
    _verify(ck.check_mp(ctx, a, v.mp), "bundle: MP inverse failed")
    _verify(ck.check_core(ctx, a, v.core), "bundle: core inverse failed")
    _verify(ck.check_dual_core(ctx, a, v.dual_core), "bundle: dual core inverse failed")
    vals = (v.group, v.mp, v.core, v.dual_core)
    _verify(all(ctx.eq(vals[0], w) for w in vals[1:]), "bundle: inverses differ")
    g = v.group
    ag = ctx.mul(a, g)
    _verify(ctx.is_hermitian(ag), "bundle: a a# is not Hermitian, so a is not EP")


def _require_square_hermitian(ctx, a):
    if not ctx.is_hermitian(ctx.mul(a, a)):
        raise InputError("hypothesis (a^2)* = a^2 fails")


def thm39_from_left_witness(ctx: StarMonoid, a, x) -> EpVerdict:
    """From ``a = x a* a^2``: core ``x a*``, dual core ``(ax)^2 a``, group ``a ((ax)*)^2``."""
    _require_square_hermitian(ctx, a)
    s = ctx.star(a)
    if not ctx.eq(ctx.prod(x, s, a, a), a):
        raise InputError("witness must satisfy a = x a* a^2")
    ax = ctx.mul(a, x)
    axs = ctx.star(ax)
    core = ctx.mul(x, s)
    dual = ctx.prod(ax, ax, a)
    group = ctx.prod(a, axs, axs)
    v = EpVerdict(True, group=group, mp=group, core=core, dual_core=dual)
    _check_bundle(ctx, a, v)
    return v


def thm39_from_right_witness(ctx: StarMonoid, a, y) -> EpVerdict:
    """From ``a* = a* a^2 y``: core ``a y``, dual core and group ``a (ya)^2``."""
    _require_square_hermitian(ctx, a)
    s = ctx.star(a)
    if not ctx.eq(ctx.prod(s, a, a, y), s):
        raise InputError("witness must satisfy a* = a* a^2 y")
    ya = ctx.mul(y, a)
    core = ctx.mul(a, y)
    dual = ctx.prod(a, ya, ya)
    v = EpVerdict(True, group=dual, mp=dual, core=core, dual_core=dual)
    _check_bundle(ctx, a, v)
    return v


def ep_check(ctx: StarMonoid, a) -> EpVerdict:
    """EP test: group invertible with ``a a#`` Hermitian; fills all witnesses when EP."""
    g = named_inverse(ctx, a, Kind.GROUP)
    mp = named_inverse(ctx, a, Kind.MP)
    core = named_inverse(ctx, a, Kind.CORE)
    dual = named_inverse(ctx, a, Kind.DUAL_CORE)
    _verify(((g is not None) and (mp is not None)) == ((core is not None) and (dual is not None)),
            "S-dagger-and-S-sharp membership differs from core-and-dual-core membership")
    if g is None or not ctx.is_hermitian(ctx.mul(a, g)):
        return EpVerdict(False, group=g, mp=mp, core=core, dual_core=dual)
    v = EpVerdict(True, group=g, mp=mp, core=core, dual_core=dual)
    _check_bundle(ctx, a, v)
    return v


# ---- section-5 ring constructions ----------------------------------------------------

def unit_u(ctx, a, m, m_inner, k: int):
    """``(am)^k + 1 - m^- m``."""
    require_ring(ctx)
    _unit_pre(ctx, m, m_inner, k)
    return ctx.sub(ctx.add(ctx.power(ctx.mul(a, m), k), ctx.one), ctx.mul(m_inner, m))


def unit_v(ctx, a, m, m_inner, k: int):
    """``(ma)^k + 1 - m m^-``."""
    require_ring(ctx)
    _unit_pre(ctx, m, m_inner, k)
    return ctx.sub(ctx.add(ctx.power(ctx.mul(m, a), k), ctx.one), ctx.mul(m, m_inner))


def _unit_pre(ctx, m, m_inner, k):
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    if not ck.check_inner(ctx, m, m_inner):
        raise InputError("m_inner is not an inner inverse of m")


def jacobson_transfer(ctx, x, y, r):
    """Given ``r (1 + xy) = 1`` return ``1 - y r x``, a left inverse of ``1 + yx``."""
    require_ring(ctx)
    one = ctx.one
    if not ctx.eq(ctx.mul(r, ctx.add(one, ctx.mul(x, y))), one):
        raise InputError("r is not a left inverse of 1 + xy")
    r2 = ctx.sub(one, ctx.prod(y, r, x))
    _verify(ctx.eq(ctx.mul(r2, ctx.add(one, ctx.mul(y, x))), one), "Jacobson transfer failed")
    return r2

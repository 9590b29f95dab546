"""Equational checkers: is ``x`` a given kind of inverse of ``a``?

All checkers are total and pure. ``False`` is an answer, never an error signal.
"""

from __future__ import annotations

from .context import StarMonoid
from .errors import InvariantViolation


def check_inner(ctx: StarMonoid, a, x) -> bool:
    return ctx.eq(ctx.prod(a, x, a), a)


def check_outer(ctx: StarMonoid, a, x) -> bool:
    return ctx.eq(ctx.prod(x, a, x), x)


def check_mp(ctx: StarMonoid, a, x) -> bool:
    ax, xa = ctx.mul(a, x), ctx.mul(x, a)
    return (ctx.eq(ctx.mul(ax, a), a) and ctx.eq(ctx.mul(xa, x), x)
            and ctx.is_hermitian(ax) and ctx.is_hermitian(xa))


def is_13_equational(ctx, a, x) -> bool:
    return check_inner(ctx, a, x) and ctx.is_hermitian(ctx.mul(a, x))


def is_13_closed(ctx, a, x) -> bool:
    """``a == x* a* a``."""
    return ctx.eq(ctx.prod(ctx.star(x), ctx.star(a), a), a)


def is_14_equational(ctx, a, x) -> bool:
    return check_inner(ctx, a, x) and ctx.is_hermitian(ctx.mul(x, a))


def is_14_closed(ctx, a, x) -> bool:
    """``a == a a* x*``."""
    return ctx.eq(ctx.prod(a, ctx.star(a), ctx.star(x)), a)


def check_13(ctx: StarMonoid, a, x) -> bool:
    eq_form = is_13_equational(ctx, a, x)
    if eq_form != is_13_closed(ctx, a, x):
        raise InvariantViolation(f"{{1,3}} forms disagree for a={ctx.format(a)}, x={ctx.format(x)}")
    return eq_form


def check_14(ctx: StarMonoid, a, x) -> bool:
    eq_form = is_14_equational(ctx, a, x)
    if eq_form != is_14_closed(ctx, a, x):
        raise InvariantViolation(f"{{1,4}} forms disagree for a={ctx.format(a)}, x={ctx.format(x)}")
    return eq_form


def check_group(ctx: StarMonoid, a, x) -> bool:
    return (check_inner(ctx, a, x) and check_outer(ctx, a, x)
            and ctx.eq(ctx.mul(a, x), ctx.mul(x, a)))


def check_core(ctx: StarMonoid, a, x) -> bool:
    """``a x^2 = x``, ``x a^2 = a``, ``(ax)* = ax``."""
    return (ctx.eq(ctx.prod(a, x, x), x) and ctx.eq(ctx.prod(x, a, a), a)
            and ctx.is_hermitian(ctx.mul(a, x)))


def check_dual_core(ctx: StarMonoid, a, x) -> bool:
    """``x^2 a = x``, ``a^2 x = a``, ``(xa)* = xa``."""
    return (ctx.eq(ctx.prod(x, x, a), x) and ctx.eq(ctx.prod(a, a, x), a)
            and ctx.is_hermitian(ctx.mul(x, a)))


def in_left_ideal(ctx, u, v) -> bool:
    """``v`` in ``S u``."""
    return ctx.left_divides(u, v) is not None


def in_right_ideal(ctx, u, v) -> bool:
    """``v`` in ``u S``."""
    return ctx.right_divides(u, v) is not None


def check_left_bc(ctx: StarMonoid, a, b, c, x) -> bool:
    """``x`` in ``S c`` and ``x a b = b``."""
    return in_left_ideal(ctx, c, x) and ctx.eq(ctx.prod(x, a, b), b)


def check_right_bc(ctx: StarMonoid, a, b, c, z) -> bool:
    """``z`` in ``b S`` and ``c a z = c``."""
    return in_right_ideal(ctx, b, z) and ctx.eq(ctx.prod(c, a, z), c)


def ideal_eq(ctx: StarMonoid, u, v, side: str) -> bool:
    """``S u == S v`` (side ``left``) or ``u S == v S`` (side ``right``)."""
    if side == "left":
        return in_left_ideal(ctx, u, v) and in_left_ideal(ctx, v, u)
    if side == "right":
        return in_right_ideal(ctx, u, v) and in_right_ideal(ctx, v, u)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def check_bc(ctx: StarMonoid, a, b, c, y) -> bool:
    """``y a y = y``, ``y S = b S`` and ``S y = S c``."""
    return (check_outer(ctx, a, y) and ideal_eq(ctx, y, b, "right")
            and ideal_eq(ctx, y, c, "left"))


def check_bc_definition(ctx: StarMonoid, a, b, c, y) -> bool:
    """The literal definition: ``y`` in ``bSy`` and ``ySc``, ``yab = b``, ``cay = c``.

    Membership in ``bSy`` and ``ySc`` is decided by scanning, so the context
    must be enumerable.
    """
    if not (ctx.eq(ctx.prod(y, a, b), b) and ctx.eq(ctx.prod(c, a, y), c)):
        return False
    elems = ctx.elements()
    return (any(ctx.eq(ctx.prod(b, s, y), y) for s in elems)
            and any(ctx.eq(ctx.prod(y, s, c), y) for s in elems))


def hyp_symmetric(ctx: StarMonoid, a, b) -> bool:
    """``(ab)* == ab``."""
    return ctx.is_hermitian(ctx.mul(a, b))

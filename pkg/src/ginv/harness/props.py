"""Cached membership predicates used by theorem clauses.

On small enumerable contexts the named inverses are found by scanning every
candidate with the definitional checker, and the engine answer is required to
agree with the scan. Elsewhere the engines (which self-verify) are used.
"""

from __future__ import annotations

from .. import checkers as ck
from .. import engines as en
from ..errors import InvariantViolation

SCAN_LIMIT = 100
WITNESS_SCAN_LIMIT = 16
CACHE_CAP = 200_000

_CHECKERS = {
    en.Kind.MP: (ck.check_mp, True),
    en.Kind.GROUP: (ck.check_group, True),
    en.Kind.CORE: (ck.check_core, True),
    en.Kind.DUAL_CORE: (ck.check_dual_core, True),
    en.Kind.ONE_THREE: (ck.check_13, False),
    en.Kind.ONE_FOUR: (ck.check_14, False),
}


class Props:
    def __init__(self, ctx):
        self.ctx = ctx
        elems = ctx.elements()
        self.scan = elems is not None and len(elems) <= SCAN_LIMIT
        self.scan_witnesses = elems is not None and len(elems) <= WITNESS_SCAN_LIMIT
        self._named = {}
        self._bc = {}

    # -- single-element inverses -------------------------------------------------------

    def named(self, a, kind: en.Kind):
        key = (kind, a)
        if key in self._named:
            return self._named[key]
        ctx = self.ctx
        y = en.named_inverse(ctx, a, kind)
        if self.scan:
            check, unique = _CHECKERS[kind]
            sols = [x for x in ctx.elements() if check(ctx, a, x)]
            if unique and len(sols) > 1:
                raise InvariantViolation(f"{kind.value} inverse of {ctx.format(a)} is not unique")
            if (y is None) != (not sols):
                raise InvariantViolation(
                    f"engine and scan disagree on {kind.value}-invertibility of {ctx.format(a)}")
            if unique and y is not None and not ctx.eq(y, sols[0]):
                raise InvariantViolation(f"engine {kind.value} inverse differs from the scan")
        self._named[key] = y
        return y

    def mp(self, a):
        return self.named(a, en.Kind.MP)

    def group(self, a):
        return self.named(a, en.Kind.GROUP)

    def core(self, a):
        return self.named(a, en.Kind.CORE)

    def dual_core(self, a):
        return self.named(a, en.Kind.DUAL_CORE)

    def in_mp(self, a) -> bool:
        return self.mp(a) is not None

    def in_group(self, a) -> bool:
        return self.group(a) is not None

    def is_ep(self, a) -> bool:
        """Literal definition: a-dagger and a-sharp both exist and are equal."""
        m, g = self.mp(a), self.group(a)
        return m is not None and g is not None and self.ctx.eq(m, g)

    # -- (b,c) families ------------------------------------------------------------------

    def _cached(self, tag, fn, a, b, c):
        key = (tag, a, b, c)
        try:
            return self._bc[key]
        except KeyError:
            pass
        if len(self._bc) > CACHE_CAP:
            self._bc.clear()
        val = self._bc[key] = fn(self.ctx, a, b, c)
        return val

    def left_bc(self, a, b, c) -> bool:
        return self._cached("l", en.left_bc_inverse, a, b, c) is not None

    def right_bc(self, a, b, c) -> bool:
        return self._cached("r", en.right_bc_inverse, a, b, c) is not None

    def bc_value(self, a, b, c):
        return self._cached("bc", en.bc_inverse, a, b, c)

    def bc(self, a, b, c) -> bool:
        return self.bc_value(a, b, c) is not None

    def left_along(self, a, d) -> bool:
        return self.left_bc(a, d, d)

    def right_along(self, a, d) -> bool:
        return self.right_bc(a, d, d)

    def along(self, a, d) -> bool:
        return self.bc(a, d, d)

    # -- ideals and witnesses ------------------------------------------------------------

    def left_square(self, d) -> bool:
        """``S d == S d^2``."""
        return ck.ideal_eq(self.ctx, d, self.ctx.mul(d, d), "left")

    def right_square(self, d) -> bool:
        """``d S == d^2 S``."""
        return ck.ideal_eq(self.ctx, d, self.ctx.mul(d, d), "right")

    def left_witnesses(self, u, v) -> list:
        """Every ``s`` with ``s u = v`` on tiny structures, else the oracle's one."""
        ctx = self.ctx
        if self.scan_witnesses:
            return [s for s in ctx.elements() if ctx.eq(ctx.mul(s, u), v)]
        s = ctx.left_divides(u, v)
        return [] if s is None else [s]

    def right_witnesses(self, u, v) -> list:
        ctx = self.ctx
        if self.scan_witnesses:
            return [s for s in ctx.elements() if ctx.eq(ctx.mul(u, s), v)]
        s = ctx.right_divides(u, v)
        return [] if s is None else [s]

"""Capability interfaces for *-monoids and *-rings, and the matrix-backed ring.

Every checker and engine talks to an algebra only through these methods, so a
Cayley table and a matrix ring are interchangeable.
"""

from __future__ import annotations

import abc
import itertools

from .errors import CapabilityError, InputError
from .matrix import (Involution, Matrix, inner_inverse, inverse, solve_left, solve_right,
                     star as mat_star)
from .scalars import ScalarField


class StarMonoid(abc.ABC):
    """A monoid with involution plus divisibility oracles.

    ``left_divides(u, v)`` returns some ``s`` with ``s*u == v`` (so ``v`` lies in
    ``S u``) or None; ``right_divides(u, v)`` returns ``s`` with ``u*s == v``.
    """

    is_ring = False

    @property
    @abc.abstractmethod
    def one(self): ...

    @abc.abstractmethod
    def mul(self, x, y): ...

    @abc.abstractmethod
    def star(self, x): ...

    @abc.abstractmethod
    def left_divides(self, u, v): ...

    @abc.abstractmethod
    def right_divides(self, u, v): ...

    @abc.abstractmethod
    def describe(self) -> str: ...

    def eq(self, x, y) -> bool:
        return x == y

    def elements(self):
        """All elements in canonical order, or None when not enumerable."""
        return None

    @property
    def enumerable(self) -> bool:
        return self.elements() is not None

    def format(self, x) -> str:
        return str(x)

    def prod(self, *xs):
        out = xs[0]
        for x in xs[1:]:
            out = self.mul(out, x)
        return out

    def power(self, x, k: int):
        if k < 1:
            raise InputError(f"power needs k >= 1, got {k}")
        out = x
        for _ in range(k - 1):
            out = self.mul(out, x)
        return out

    def is_hermitian(self, x) -> bool:
        return self.eq(self.star(x), x)


class StarRing(StarMonoid):
    """A unital ring with an additive, anti-multiplicative involution."""

    is_ring = True

    @property
    @abc.abstractmethod
    def zero(self): ...

    @abc.abstractmethod
    def add(self, x, y): ...

    @abc.abstractmethod
    def neg(self, x): ...

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def left_invertible(self, e):
        """Some r with ``r*e == 1``, or None."""
        return self.left_divides(e, self.one)

    def right_invertible(self, e):
        """Some r with ``e*r == 1``, or None."""
        return self.right_divides(e, self.one)

    @abc.abstractmethod
    def inner_inverses(self, m) -> list:
        """Inner inverses of ``m`` to iterate over; empty when ``m`` is not regular."""


def require_ring(ctx: StarMonoid):
    if not ctx.is_ring:
        raise CapabilityError(f"{ctx.describe()} is not a *-ring")


class MatrixStarRing(StarRing):
    """``M_n(F)`` with transpose or conjugate transpose; divisibility by linear solves."""

    def __init__(self, n: int, field: ScalarField, involution: Involution, budget: int = 10_000):
        if n < 1:
            raise InputError("dimension must be >= 1")
        self.n = n
        self.field = field
        self.involution = involution
        self.budget = budget
        self._one = Matrix.identity(n, field)
        self._zero = Matrix.zero(n, field)
        self._elements = None

    @property
    def one(self):
        return self._one

    @property
    def zero(self):
        return self._zero

    def mul(self, x, y):
        return x * y

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def star(self, x):
        return mat_star(x, self.involution)

    def left_divides(self, u, v):
        return solve_left(u, v)

    def right_divides(self, u, v):
        return solve_right(u, v)

    def left_invertible(self, e):
        return inverse(e)

    def right_invertible(self, e):
        return inverse(e)

    def inner_inverses(self, m):
        return [inner_inverse(m)]

    def elements(self):
        if not self.field.is_finite or self.field.modulus ** (self.n * self.n) > self.budget:
            return None
        if self._elements is None:
            vals = [self.field(v) for v in range(self.field.modulus)]
            n = self.n
            self._elements = [
                Matrix(tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)), self.field)
                for flat in itertools.product(vals, repeat=n * n)]
        return self._elements

    def describe(self):
        return f"M_{self.n}({self.field}) {self.involution.value}"

    def format(self, x):
        return str(x)

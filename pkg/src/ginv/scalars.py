"""Exact scalars with an involution: rationals, Gaussian rationals Q(i), and Z_m.

Rationals are ``gmpy2.mpq`` when gmpy2 is installed (an order of magnitude
faster under elimination) and :class:`fractions.Fraction` otherwise; both are
exact and hash-compatible. Gaussian rationals and modular integers are small
immutable value classes that interoperate with plain ints.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InputError, ScalarDivisionError, UnsupportedContextError

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rational = Fraction

# scalar types that behave as plain rationals (identity involution)
RATIONAL_TYPES = (int, Fraction) if Rational is Fraction else (int, Fraction, Rational)

GAUSSIAN = "gaussian_rational"
ZMOD = "zmod"


def normalize(num: int, den: int) -> Rational:
    """Return ``num/den`` in lowest terms with a positive denominator."""
    if den == 0:
        raise InputError("zero denominator")
    return Rational(num, den)


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class GaussianRational:
    """An element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Rational(re))
        object.__setattr__(self, "im", Rational(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, RATIONAL_TYPES):
            return GaussianRational(other)
        if isinstance(other, ModularInt):
            raise InputError("cannot mix Gaussian rationals with modular integers")
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.im and not o.im:
            return GaussianRational(self.re * o.re)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self) -> GaussianRational:
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ScalarDivisionError("inverse of zero")
        return GaussianRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, RATIONAL_TYPES):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


class ModularInt:
    """An element of Z_m; ``value`` is always reduced into ``[0, m)``."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        if modulus < 2:
            raise InputError(f"modulus must be >= 2, got {modulus}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "value", value % modulus)

    def __setattr__(self, name, value):
        raise AttributeError("ModularInt is immutable")

    def _other(self, other):
        if isinstance(other, ModularInt):
            if other.modulus != self.modulus:
                raise InputError(f"moduli differ: {self.modulus} vs {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, (GaussianRational,) + RATIONAL_TYPES[1:]):
            raise InputError("cannot mix modular integers with rationals")
        return NotImplemented

    def __add__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return ModularInt(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return ModularInt(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return ModularInt(v - self.value, self.modulus)

    def __neg__(self):
        return ModularInt(-self.value, self.modulus)

    def __mul__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return ModularInt(self.value * v, self.modulus)

    __rmul__ = __mul__

    def inverse(self) -> ModularInt:
        if not is_prime(self.modulus):
            raise UnsupportedContextError(f"inversion needs a prime modulus, got {self.modulus}")
        if not self.value:
            raise ScalarDivisionError("inverse of zero")
        return ModularInt(pow(self.value, -1, self.modulus), self.modulus)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = ModularInt(other, self.modulus)
        if not isinstance(other, ModularInt):
            self._other(other)
            return NotImplemented
        self._other(other)
        return self * other.inverse()

    def conjugate(self) -> ModularInt:
        return self

    def __reduce__(self):
        return (ModularInt, (self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, ModularInt):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __repr__(self):
        return f"ModularInt({self.value}, {self.modulus})"

    def __str__(self):
        return str(self.value)


Scalar = "GaussianRational | ModularInt | Rational"


def _kind(x):
    if isinstance(x, GaussianRational):
        return GAUSSIAN
    if isinstance(x, ModularInt):
        return (ZMOD, x.modulus)
    if isinstance(x, RATIONAL_TYPES):
        return "rational"
    raise InputError(f"not a scalar: {x!r}")


def scalar_op(x, y=None, op: str = "add"):
    """Apply ``add``, ``mul``, ``neg`` or ``inv`` to exact scalars of one kind."""
    if op in ("add", "mul"):
        if y is None or _kind(x) != _kind(y):
            raise InputError(f"{op} needs two scalars of the same kind")
        return x + y if op == "add" else x * y
    if op == "neg":
        return -x
    if op == "inv":
        if isinstance(x, RATIONAL_TYPES):
            if not x:
                raise ScalarDivisionError("inverse of zero")
            return 1 / Rational(x)
        return x.inverse()
    raise InputError(f"unknown scalar op {op!r}")


def conjugate(x):
    """Scalar involution: complex conjugation on Q(i), identity elsewhere."""
    if isinstance(x, RATIONAL_TYPES):
        return x
    return x.conjugate()


def _fmt_rational(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x) -> str:
    """Canonical literal: lowest terms, ``i`` suffix, no spaces."""
    if isinstance(x, ModularInt):
        return str(x.value)
    if isinstance(x, RATIONAL_TYPES):
        return _fmt_rational(Rational(x))
    re_part, im_part = x.re, x.im
    if not im_part:
        return _fmt_rational(re_part)
    if abs(im_part) == 1:
        coeff = "-" if im_part < 0 else ""
    else:
        coeff = _fmt_rational(im_part)
    if not re_part:
        return f"{coeff}i"
    sign = "" if im_part < 0 else "+"
    return f"{_fmt_rational(re_part)}{sign}{coeff}i"


_NUM = re.compile(r"(\d+)(?:/(\d+))?")


def _parse_gaussian(text: str) -> GaussianRational:
    pos = 0
    n = len(text)

    def fail(msg):
        raise InputError(f"malformed scalar {text!r} at position {pos}: {msg}")

    def sign():
        nonlocal pos
        if pos < n and text[pos] in "+-":
            pos += 1
            return -1 if text[pos - 1] == "-" else 1
        return 1

    def number():
        nonlocal pos
        m = _NUM.match(text, pos)
        if not m:
            return None
        if m.group(2) is not None and int(m.group(2)) == 0:
            pos = m.start(2)
            fail("zero denominator")
        pos = m.end()
        return Rational(int(m.group(1)), int(m.group(2) or 1))

    if not text:
        fail("empty literal")
    s = -1 if text.startswith("-") else 1
    pos = 1 if text[0] == "-" else 0
    first = number()
    if pos == n:
        if first is None:
            fail("expected a number or 'i'")
        return GaussianRational(s * first)
    if text[pos] == "i" and pos == n - 1:
        return GaussianRational(0, s * (1 if first is None else first))
    if first is None:
        fail("expected a number or 'i'")
    if text[pos] not in "+-":
        fail("expected '+', '-' or 'i'")
    s2 = sign()
    second = number()
    if pos != n - 1 or text[pos] != "i":
        fail("expected imaginary part ending in 'i'")
    return GaussianRational(s * first, s2 * (1 if second is None else second))


def parse_scalar(text: str, kind: str = GAUSSIAN, modulus: int | None = None):
    """Parse a literal of the given field kind (``gaussian_rational`` or ``zmod``)."""
    text = text.strip() if isinstance(text, str) else text
    if isinstance(text, int):
        text = str(text)
    if kind == GAUSSIAN:
        return _parse_gaussian(text)
    if kind == ZMOD:
        if modulus is None:
            raise InputError("zmod literal needs a modulus")
        if not re.fullmatch(r"-?\d+", text):
            bad = next((j for j, ch in enumerate(text) if not (ch.isdigit() or (j == 0 and ch == "-"))), 0)
            raise InputError(f"malformed integer {text!r} at position {bad}")
        return ModularInt(int(text), modulus)
    raise InputError(f"unknown field kind {kind!r}")


@dataclass(frozen=True)
class ScalarField:
    """Field tag carried by matrices: Q(i) or Z_m."""

    kind: str = GAUSSIAN
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == ZMOD:
            if self.modulus is None or self.modulus < 2:
                raise InputError("zmod field needs a modulus >= 2")
        elif self.kind == GAUSSIAN:
            if self.modulus is not None:
                raise InputError("gaussian_rational field takes no modulus")
        else:
            raise InputError(f"unknown field kind {self.kind!r}")

    @property
    def is_field(self) -> bool:
        return self.kind == GAUSSIAN or is_prime(self.modulus)

    @property
    def is_finite(self) -> bool:
        return self.kind == ZMOD

    def __call__(self, value=0, im=0):
        if self.kind == GAUSSIAN:
            return GaussianRational(value, im)
        if im:
            raise InputError("Z_m has no imaginary unit")
        return ModularInt(value, self.modulus)

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def parse(self, text):
        return parse_scalar(text, self.kind, self.modulus)

    def owns(self, x) -> bool:
        if self.kind == GAUSSIAN:
            return isinstance(x, GaussianRational)
        return isinstance(x, ModularInt) and x.modulus == self.modulus

    def __str__(self):
        return "Q(i)" if self.kind == GAUSSIAN else f"Z_{self.modulus}"


QI = ScalarField(GAUSSIAN)


def zmod(p: int) -> ScalarField:
    return ScalarField(ZMOD, p)

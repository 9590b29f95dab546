"""Cayley-table *-monoids and *-rings: the exhaustive ground truth.

Elements are the integers ``0..n-1``. Tables are held twice: as numpy arrays for
vectorized axiom validation and as nested lists for fast scalar lookups.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .context import StarMonoid, StarRing
from .errors import InputError, ResourceError, ValidationError
from .matrix import Involution
from .scalars import is_prime

DEFAULT_BUDGET = 10_000
# exhaustive re-validation of generated matrix structures costs O(n^3)
REVALIDATE_LIMIT = 1_000


def _first_index_map(values: np.ndarray, n: int) -> list:
    """``out[v]`` = first position of ``v`` in ``values``, -1 if absent."""
    out = np.full(n, -1, dtype=np.int64)
    uniq, first = np.unique(values, return_index=True)
    out[uniq] = first
    return out.tolist()


class FiniteStarMonoid(StarMonoid):
    def __init__(self, mul, star, one, names=None, label=None):
        self.mul_table = np.asarray(mul, dtype=np.int64)
        self.star_table = np.asarray(star, dtype=np.int64)
        self.size = len(self.star_table)
        self._one = int(one)
        self._mul = self.mul_table.tolist()
        self._star = self.star_table.tolist()
        self.names = list(names) if names is not None else None
        self.label = label or f"finite *-monoid of order {self.size}"
        self._lw = [None] * self.size
        self._rw = [None] * self.size
        self._elements = list(range(self.size))

    @property
    def one(self):
        return self._one

    def mul(self, x, y):
        return self._mul[x][y]

    def prod(self, *xs):
        m = self._mul
        out = xs[0]
        for x in xs[1:]:
            out = m[out][x]
        return out

    def star(self, x):
        return self._star[x]

    def is_hermitian(self, x):
        return self._star[x] == x

    def eq(self, x, y):
        return x == y

    def elements(self):
        return self._elements

    def left_divides(self, u, v):
        w = self._lw[u]
        if w is None:
            w = self._lw[u] = _first_index_map(self.mul_table[:, u], self.size)
        s = w[v]
        return None if s < 0 else s

    def right_divides(self, u, v):
        w = self._rw[u]
        if w is None:
            w = self._rw[u] = _first_index_map(self.mul_table[u, :], self.size)
        s = w[v]
        return None if s < 0 else s

    def left_ideal(self, u) -> frozenset:
        return frozenset(self.mul_table[:, u].tolist())

    def right_ideal(self, u) -> frozenset:
        return frozenset(self.mul_table[u, :].tolist())

    def describe(self):
        return self.label

    def format(self, x):
        return self.names[x] if self.names else str(x)

    def to_json(self) -> dict:
        obj = {"size": self.size, "one": self._one, "mul": self._mul, "star": self._star}
        if self.names:
            obj["names"] = self.names
        return obj


class FiniteStarRing(FiniteStarMonoid, StarRing):
    def __init__(self, mul, add, neg, star, one, zero, names=None, label=None):
        super().__init__(mul, star, one, names, label or None)
        self.add_table = np.asarray(add, dtype=np.int64)
        self.neg_table = np.asarray(neg, dtype=np.int64)
        self._add = self.add_table.tolist()
        self._neg = self.neg_table.tolist()
        self._zero = int(zero)
        if label is None:
            self.label = f"finite *-ring of order {self.size}"
        self._inner = {}

    @property
    def zero(self):
        return self._zero

    def add(self, x, y):
        return self._add[x][y]

    def neg(self, x):
        return self._neg[x]

    def inner_inverses(self, m):
        found = self._inner.get(m)
        if found is None:
            row = self._mul[m]
            mul = self._mul
            found = self._inner[m] = [g for g in self._elements if mul[row[g]][m] == m]
        return found

    def to_json(self) -> dict:
        obj = super().to_json()
        obj.update(zero=self._zero, add=self._add, neg=self._neg)
        return obj


def divisibility_scan(structure: FiniteStarMonoid, u, v, side: str):
    """Witness ``s`` with ``s u = v`` (left) or ``u s = v`` (right), else None."""
    if side == "left":
        return next((s for s in structure.elements() if structure.mul(s, u) == v), None)
    if side == "right":
        return next((s for s in structure.elements() if structure.mul(u, s) == v), None)
    raise InputError(f"side must be 'left' or 'right', got {side!r}")


# ---- validation ---------------------------------------------------------------------

def _first_mismatch(mask: np.ndarray):
    if mask.all():
        return None
    idx = np.argwhere(~mask)
    return tuple(int(i) for i in idx[0]) if len(idx) else None


def _check_monoid_axioms(mul: np.ndarray, star: np.ndarray, one: int):
    n = len(star)
    ar = np.arange(n)
    bad = _first_mismatch((mul[one, :] == ar) & (mul[:, one] == ar))
    if bad is not None:
        raise ValidationError("identity", (one, bad[0]))
    for a in range(n):
        lhs = mul[mul[a, :], :]          # (ab)c indexed [b, c]
        rhs = mul[a, :][mul]             # a(bc) indexed [b, c]
        bad = _first_mismatch(lhs == rhs)
        if bad is not None:
            raise ValidationError("associativity", (a,) + bad)
    bad = _first_mismatch(star[star] == ar)
    if bad is not None:
        raise ValidationError("involution", bad)
    if star[one] != one:
        raise ValidationError("star(1) = 1", (one,))
    lhs = star[mul]                      # (xy)* indexed [x, y]
    rhs = mul[np.ix_(star, star)].T      # y* x*
    bad = _first_mismatch(lhs == rhs)
    if bad is not None:
        raise ValidationError("anti-automorphism", bad)


def _check_ring_axioms(mul, add, neg, star, zero):
    n = len(star)
    ar = np.arange(n)
    bad = _first_mismatch((add[zero, :] == ar) & (add[:, zero] == ar))
    if bad is not None:
        raise ValidationError("additive identity", (zero, bad[0]))
    bad = _first_mismatch(add == add.T)
    if bad is not None:
        raise ValidationError("additive commutativity", bad)
    bad = _first_mismatch(add[ar, neg] == zero)
    if bad is not None:
        raise ValidationError("additive inverse", bad)
    for a in range(n):
        bad = _first_mismatch(add[add[a, :], :] == add[a, :][add])
        if bad is not None:
            raise ValidationError("additive associativity", (a,) + bad)
        row = mul[a, :]
        bad = _first_mismatch(row[add] == add[np.ix_(row, row)])
        if bad is not None:
            raise ValidationError("left distributivity", (a,) + bad)
        col = mul[:, a]
        bad = _first_mismatch(col[add] == add[np.ix_(col, col)])
        if bad is not None:
            raise ValidationError("right distributivity", (a,) + bad)
    bad = _first_mismatch(star[add] == add[np.ix_(star, star)])
    if bad is not None:
        raise ValidationError("star additivity", bad)


def _as_table(obj, key, n, shape):
    try:
        arr = np.asarray(obj[key], dtype=np.int64)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"table field {key!r} missing or malformed") from exc
    if arr.shape != shape:
        raise InputError(f"table field {key!r} has shape {arr.shape}, expected {shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise InputError(f"table field {key!r} has an index out of range 0..{n - 1}")
    return arr


def validate(tables: dict, label=None):
    """Check every axiom and return a :class:`FiniteStarMonoid` or :class:`FiniteStarRing`.

    The first violated axiom is reported as a :class:`ValidationError` carrying
    the offending element indices.
    """
    try:
        n = int(tables["size"])
        one = int(tables["one"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("table needs integer 'size' and 'one'") from exc
    if n < 1 or not 0 <= one < n:
        raise InputError("size must be >= 1 and 'one' in range")
    mul = _as_table(tables, "mul", n, (n, n))
    star = _as_table(tables, "star", n, (n,))
    names = tables.get("names")
    if names is not None and len(names) != n:
        raise InputError("'names' length differs from size")
    _check_monoid_axioms(mul, star, one)
    if "add" not in tables:
        return FiniteStarMonoid(mul, star, one, names, label)
    add = _as_table(tables, "add", n, (n, n))
    neg = _as_table(tables, "neg", n, (n,))
    if "zero" not in tables or not 0 <= int(tables["zero"]) < n:
        raise InputError("ring table needs a 'zero' index in range")
    zero = int(tables["zero"])
    _check_ring_axioms(mul, add, neg, star, zero)
    return FiniteStarRing(mul, add, neg, star, one, zero, names, label)


def load_table(path, label=None):
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read table file {path}: {exc}") from exc
    return validate(obj, label or f"table:{Path(path).name}")


# ---- generated structures -----------------------------------------------------------

def _matrix_name(flat, k):
    return "[" + ",".join("[" + ",".join(str(int(v)) for v in flat[i * k:(i + 1) * k]) + "]"
                          for i in range(k)) + "]"


def build_matrix_structure(k: int, p: int, involution: Involution = Involution.TRANSPOSE,
                           budget: int = DEFAULT_BUDGET) -> FiniteStarRing:
    """All ``k x k`` matrices over Z_p as a *-ring with the transpose.

    Element indices follow row-major base-``p`` digits, first entry most
    significant. Over Z_p conjugation is trivial, so both involution kinds give
    the transpose.
    """
    if not is_prime(p):
        raise InputError(f"modulus {p} is not prime")
    if k < 1:
        raise InputError("dimension must be >= 1")
    n = p ** (k * k)
    if n > budget:
        raise ResourceError(f"{n} elements exceed the enumeration budget {budget}")
    flat = np.array(np.unravel_index(np.arange(n), (p,) * (k * k))).T  # (n, k*k)
    mats = flat.reshape(n, k, k)
    weights = p ** np.arange(k * k - 1, -1, -1)

    def encode(arr):
        return (arr.reshape(arr.shape[0], k * k) % p) @ weights

    mul = np.empty((n, n), dtype=np.int64)
    add = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        mul[i] = encode(np.einsum("ij,njk->nik", mats[i], mats))
        add[i] = encode(mats[i][None, :, :] + mats)
    neg = encode(-mats)
    star = encode(np.transpose(mats, (0, 2, 1)))
    one = int(encode(np.eye(k, dtype=np.int64)[None])[0])
    zero = 0
    if n <= REVALIDATE_LIMIT:
        _check_monoid_axioms(mul, star, one)
        _check_ring_axioms(mul, add, neg, star, zero)
    names = [_matrix_name(row, k) for row in flat]
    label = f"M_{k}(Z_{p}) {involution.value}" if k > 1 else f"Z_{p} identity"
    return FiniteStarRing(mul, add, neg, star, one, zero, names, label)


def zmod_ring(n: int, budget: int = DEFAULT_BUDGET) -> FiniteStarRing:
    """Z_n with the identity involution (commutativity makes it anti-multiplicative)."""
    if n < 1:
        raise InputError("modulus must be >= 1")
    if n > budget:
        raise ResourceError(f"{n} elements exceed the enumeration budget {budget}")
    ar = np.arange(n)
    mul = np.outer(ar, ar) % n
    add = (ar[:, None] + ar[None, :]) % n
    neg = (-ar) % n
    star = ar.copy()
    _check_monoid_axioms(mul, star, 1 % n)
    _check_ring_axioms(mul, add, neg, star, 0)
    return FiniteStarRing(mul, add, neg, star, 1 % n, 0, [str(i) for i in ar],
                          f"Z_{n} identity")

"""Dense square matrices over Q(i) or Z_p with exact elimination.

Elimination always takes the first nonzero entry of a column as pivot, so every
routine here is deterministic; free variables of a solve are fixed to zero.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from pathlib import Path

from .errors import InputError, UnsupportedContextError
from .scalars import GAUSSIAN, ZMOD, ScalarField, format_scalar


class Involution(enum.Enum):
    TRANSPOSE = "transpose"
    CONJUGATE_TRANSPOSE = "conjugate"

    @classmethod
    def parse(cls, text: str) -> Involution:
        aliases = {"transpose": cls.TRANSPOSE, "t": cls.TRANSPOSE,
                   "conjugate": cls.CONJUGATE_TRANSPOSE,
                   "conjugate_transpose": cls.CONJUGATE_TRANSPOSE, "h": cls.CONJUGATE_TRANSPOSE}
        try:
            return aliases[text.lower()]
        except KeyError:
            raise InputError(f"unknown involution {text!r}") from None


@dataclass(frozen=True)
class Matrix:
    rows: tuple
    field: ScalarField

    def __post_init__(self):
        n = len(self.rows)
        if n < 1:
            raise InputError("matrix dimension must be >= 1")
        for row in self.rows:
            if len(row) != n:
                raise InputError("matrix must be square")
            for x in row:
                if not self.field.owns(x):
                    raise InputError(f"entry {x!r} does not belong to {self.field}")

    @classmethod
    def from_rows(cls, rows, field: ScalarField) -> Matrix:
        """Build from nested sequences of ints, scalars or literal strings."""
        def conv(x):
            if isinstance(x, str):
                return field.parse(x)
            if field.owns(x):
                return x
            return field(x)
        return cls(tuple(tuple(conv(x) for x in row) for row in rows), field)

    @classmethod
    def identity(cls, n: int, field: ScalarField) -> Matrix:
        one, zero = field.one(), field.zero()
        return cls(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), field)

    @classmethod
    def zero(cls, n: int, field: ScalarField) -> Matrix:
        z = field.zero()
        return cls(tuple((z,) * n for _ in range(n)), field)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def _check(self, other):
        if not isinstance(other, Matrix):
            raise InputError(f"expected a Matrix, got {type(other).__name__}")
        if other.n != self.n or other.field != self.field:
            raise InputError(f"mismatch: {self.n}x{self.n} over {self.field} "
                             f"vs {other.n}x{other.n} over {other.field}")

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            if self.field.owns(other) or isinstance(other, int):
                return Matrix(tuple(tuple(x * other for x in row) for row in self.rows), self.field)
            return NotImplemented
        self._check(other)
        cols = list(zip(*other.rows))
        zero = self.field.zero()
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = zero
                for x, y in zip(row, col):
                    if x and y:
                        acc = acc + x * y
                out_row.append(acc)
            out.append(tuple(out_row))
        return Matrix(tuple(out), self.field)

    def __rmul__(self, scalar):
        return self.__mul__(scalar)

    def __add__(self, other):
        self._check(other)
        return Matrix(tuple(tuple(x + y for x, y in zip(r, s))
                            for r, s in zip(self.rows, other.rows)), self.field)

    def __neg__(self):
        return Matrix(tuple(tuple(-x for x in row) for row in self.rows), self.field)

    def __sub__(self, other):
        return self + (-other)

    def transpose(self) -> Matrix:
        return Matrix(tuple(zip(*self.rows)), self.field)

    def star(self, kind: Involution) -> Matrix:
        return star(self, kind)

    def is_zero(self) -> bool:
        return not any(x for row in self.rows for x in row)

    def to_lists(self):
        return [[format_scalar(x) for x in row] for row in self.rows]

    def __str__(self):
        return "[" + ",".join("[" + ",".join(r) + "]" for r in self.to_lists()) + "]"

    def __repr__(self):
        return f"Matrix({self})"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a * b


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return a + b


def mat_neg(a: Matrix) -> Matrix:
    return -a


def power(a: Matrix, k: int) -> Matrix:
    if k < 1:
        raise InputError(f"power needs k >= 1, got {k}")
    out = a
    for _ in range(k - 1):
        out = out * a
    return out


def star(m: Matrix, kind: Involution) -> Matrix:
    """Transpose, conjugating entries when ``kind`` is the conjugate transpose."""
    t = tuple(zip(*m.rows))
    if kind is Involution.CONJUGATE_TRANSPOSE and m.field.kind == GAUSSIAN:
        t = tuple(tuple(x.conjugate() for x in row) for row in t)
    return Matrix(t, m.field)


# ---- elimination on rectangular row lists -------------------------------------------

def rref(rows, ncols=None):
    """Reduced row echelon form of a list of scalar rows.

    Returns ``(reduced, pivots, transform)`` with ``transform @ rows == reduced``.
    Scalars must support field division.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    if nrows == 0:
        return m, [], []
    zero = m[0][0] * 0 if ncols else 0
    one = zero + 1
    t = [[one if i == j else zero for j in range(nrows)] for i in range(nrows)]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        t[r], t[p] = t[p], t[r]
        inv = one / m[r][c]
        if inv != one:
            m[r] = [x * inv for x in m[r]]
            t[r] = [x * inv for x in t[r]]
        for i in range(nrows):
            f = m[i][c]
            if i != r and f:
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
                t[i] = [x - f * y for x, y in zip(t[i], t[r])]
        pivots.append(c)
        r += 1
    return m, pivots, t


def _require_field(m: Matrix):
    if not m.field.is_field:
        raise UnsupportedContextError(f"elimination needs a field, got {m.field}")


def rank(m: Matrix) -> int:
    _require_field(m)
    return len(rref(m.rows)[1])


def _solve_right_rows(a_rows, b_rows, zero):
    """Particular X with A X = B (rectangular row lists), or None."""
    ncols_a = len(a_rows[0])
    aug = [list(ra) + list(rb) for ra, rb in zip(a_rows, b_rows)]
    red, pivots, _ = rref(aug, ncols_a)
    nb = len(b_rows[0])
    for i in range(len(pivots), len(red)):
        if any(red[i][ncols_a:]):
            return None
    x = [[zero] * nb for _ in range(ncols_a)]
    for i, c in enumerate(pivots):
        x[c] = red[i][ncols_a:]
    return x


def solve_right(m: Matrix, b: Matrix) -> Matrix | None:
    """One X with ``m @ X == b`` (free variables zero), or None."""
    m._check(b)
    _require_field(m)
    x = _solve_right_rows(m.rows, b.rows, m.field.zero())
    if x is None:
        return None
    return Matrix(tuple(tuple(r) for r in x), m.field)


def solve_left(m: Matrix, b: Matrix) -> Matrix | None:
    """One X with ``X @ m == b``, via the transposed right system."""
    x = solve_right(m.transpose(), b.transpose())
    return None if x is None else x.transpose()


def inner_inverse(m: Matrix) -> Matrix:
    """G with ``m G m == m``, read off the recorded row reduction of ``m``."""
    _require_field(m)
    _, pivots, t = rref(m.rows)
    zero = m.field.zero()
    g = [[zero] * m.n for _ in range(m.n)]
    for i, c in enumerate(pivots):
        g[c] = list(t[i])
    return Matrix(tuple(tuple(r) for r in g), m.field)


def inverse(m: Matrix) -> Matrix | None:
    _require_field(m)
    red, pivots, t = rref(m.rows)
    if len(pivots) < m.n:
        return None
    return Matrix(tuple(tuple(r) for r in t), m.field)


def left_inverse_of_element(e: Matrix) -> Matrix | None:
    """r with ``r e == 1``; for square matrices over a field this is the inverse."""
    return inverse(e)


def determinant(m: Matrix):
    """Determinant by Gaussian elimination; an independent cross-check on invertibility."""
    _require_field(m)
    a = [list(r) for r in m.rows]
    n = m.n
    det = m.field.one()
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return m.field.zero()
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det = det * a[c][c]
        inv = a[c][c].inverse()
        for i in range(c + 1, n):
            f = a[i][c] * inv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


# ---- Moore-Penrose oracle by rank factorization ----------------------------------

def _mm(a, b):
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(r, c)), r[0] * 0) for c in cols] for r in a]


def _ct(a):
    return [[x.conjugate() for x in col] for col in zip(*a)]


def _inv_rows(a):
    red, pivots, t = rref(a)
    if len(pivots) < len(a):
        raise UnsupportedContextError("rank factorization produced a singular Gram matrix")
    return t


def mp_rank_factorization(m: Matrix) -> Matrix:
    """Moore-Penrose inverse via ``M = C F``: ``F*(F F*)^-1 (C* C)^-1 C*``.

    Only valid over Q(i) with the conjugate transpose, where Gram matrices of
    full-rank factors are invertible.
    """
    if m.field.kind != GAUSSIAN:
        raise UnsupportedContextError("rank-factorization oracle needs Q(i)")
    red, pivots, _ = rref(m.rows)
    r = len(pivots)
    if r == 0:
        return Matrix.zero(m.n, m.field)
    c = [[m.rows[i][j] for j in pivots] for i in range(m.n)]
    f = [list(red[i]) for i in range(r)]
    fh, ch = _ct(f), _ct(c)
    out = _mm(_mm(_mm(fh, _inv_rows(_mm(f, fh))), _inv_rows(_mm(ch, c))), ch)
    return Matrix(tuple(tuple(row) for row in out), m.field)


# ---- JSON wire format ----------------------------------------------------------------

def matrix_from_json(obj) -> Matrix:
    """Decode ``{"field": ..., "modulus": p?, "rows": [[literal, ...], ...]}``."""
    if not isinstance(obj, dict) or "rows" not in obj:
        raise InputError("matrix JSON needs a 'rows' key")
    kind = obj.get("field", GAUSSIAN)
    field = ScalarField(kind, obj.get("modulus") if kind == ZMOD else None)
    rows = obj["rows"]
    if not isinstance(rows, list) or not rows or any(not isinstance(r, list) for r in rows):
        raise InputError("'rows' must be a non-empty list of lists")
    if any(len(r) != len(rows) for r in rows):
        raise InputError("matrix file must be square")
    return Matrix.from_rows([[str(x) for x in r] for r in rows], field)


def matrix_to_json(m: Matrix) -> dict:
    obj = {"field": m.field.kind}
    if m.field.kind == ZMOD:
        obj["modulus"] = m.field.modulus
    obj["rows"] = m.to_lists()
    return obj


def load_matrix(path) -> Matrix:
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read matrix file {path}: {exc}") from exc
    return matrix_from_json(obj)

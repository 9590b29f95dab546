"""Instance streams: exhaustive tuples, or seeded samples that satisfy linear
Hermitian hypotheses by construction.

For matrix contexts the condition ``(a d)* = a d`` is linear in the entries of
``d`` over Q (conjugation is Q-linear, not Q(i)-linear), so ``d`` is drawn from
the rational nullspace of that map.
"""

from __future__ import annotations

import itertools
import random

from ..context import MatrixStarRing
from ..errors import CapabilityError
from ..matrix import Matrix, inverse, rref
from ..scalars import GAUSSIAN, GaussianRational
from .registry import Theorem


def exhaustive(ctx, theorem: Theorem):
    elems = ctx.elements()
    if elems is None:
        raise CapabilityError(f"{ctx.describe()} cannot be enumerated")
    if theorem.with_inner:
        for a, m in itertools.product(elems, repeat=2):
            for g in ctx.inner_inverses(m):
                yield (a, m, g)
        return
    yield from itertools.product(elems, repeat=len(theorem.arity))


def generate_instances(ctx, theorem: Theorem, strategy: str = "exhaustive", seed: int = 0,
                       count: int | None = None):
    if strategy == "exhaustive":
        return exhaustive(ctx, theorem)
    if strategy != "seeded":
        raise ValueError(f"unknown strategy {strategy!r}")
    rng = random.Random(f"{seed}:{theorem.id}")
    count = 200 if count is None else count
    if isinstance(ctx, MatrixStarRing):
        return _seeded_matrix(ctx, theorem, rng, count)
    if ctx.elements() is None:
        raise CapabilityError(f"no seeded sampler for {ctx.describe()}")
    return _seeded_finite(ctx, theorem, rng, count)


# ---- finite structures --------------------------------------------------------------

def _hermitian_set(ctx, a, kind, cache):
    key = (a, kind)
    if key not in cache:
        elems = ctx.elements()
        if kind == "ad":
            cache[key] = [v for v in elems if ctx.is_hermitian(ctx.mul(a, v))]
        else:
            cache[key] = [v for v in elems if ctx.is_hermitian(ctx.mul(v, a))]
    return cache[key]


def _constrained(ctx, a, kinds, cache):
    """Elements satisfying every requested Hermitian constraint relative to ``a``."""
    if not kinds:
        return ctx.elements()
    key = (a, kinds)
    if key not in cache:
        keep = set(_hermitian_set(ctx, a, kinds[0], cache))
        for kd in kinds[1:]:
            keep &= set(_hermitian_set(ctx, a, kd, cache))
        cache[key] = [v for v in ctx.elements() if v in keep]
    return cache[key]


def _seeded_finite(ctx, theorem, rng, count):
    elems = ctx.elements()
    cache = {}
    if theorem.family == "square_hermitian":
        pool = [a for a in elems if ctx.is_hermitian(ctx.mul(a, a))] or elems
    else:
        pool = elems
    for _ in range(count):
        a = rng.choice(pool)
        inst = {"a": a}
        for var in theorem.arity[1:]:
            if var == "m_inner":
                gs = ctx.inner_inverses(inst["m"])
                inst[var] = rng.choice(gs) if gs else None
                continue
            kinds = [kd for v, kd in theorem.constraints if v == var]
            choices = _constrained(ctx, a, tuple(kinds), cache)
            inst[var] = rng.choice(choices) if choices else rng.choice(elems)
        if theorem.with_inner and inst["m_inner"] is None:
            continue
        yield tuple(inst[v] for v in theorem.arity)


# ---- matrix contexts ------------------------------------------------------------------

def _scalar(rng, field):
    if field.kind == GAUSSIAN:
        im = rng.randint(-2, 2) if rng.random() < 0.5 else 0
        return GaussianRational(rng.randint(-2, 2), im)
    return field(rng.randrange(field.modulus))


def random_matrix(rng, ctx: MatrixStarRing, rank=None) -> Matrix:
    """Product of random factors whose inner dimension caps the rank."""
    n, field = ctx.n, ctx.field
    if rank is None:
        rank = rng.choice([0] + list(range(1, n + 1)) * 2 + list(range(1, n)))
    zero = field.zero()
    x = Matrix(tuple(tuple(_scalar(rng, field) if j < rank else zero for j in range(n))
                     for _ in range(n)), field)
    y = Matrix(tuple(tuple(_scalar(rng, field) for _ in range(n)) for _ in range(n)), field)
    return x * y


def _coords(field):
    """Q- (or Z_p-) basis of the scalar field, as scalars."""
    if field.kind == GAUSSIAN:
        return [GaussianRational(1), GaussianRational(0, 1)]
    return [field(1)]


def _flatten(m: Matrix):
    out = []
    for row in m.rows:
        for x in row:
            if m.field.kind == GAUSSIAN:
                out.extend((x.re, x.im))
            else:
                out.append(x)
    return out


def hermitian_solution_basis(ctx: MatrixStarRing, a: Matrix, kinds) -> list:
    """Basis (over Q or Z_p) of ``{d : (a d)* = a d}`` (kind ``ad``) intersected with
    ``{d : (d a)* = d a}`` (kind ``da``) as requested."""
    n, field = ctx.n, ctx.field
    zero = field.zero()
    basis = []
    for i in range(n):
        for j in range(n):
            for unit in _coords(field):
                basis.append(Matrix(tuple(tuple(unit if (r, c) == (i, j) else zero
                                                for c in range(n)) for r in range(n)), field))
    rows = []
    for kd in kinds:
        images = []
        for e in basis:
            p = a * e if kd == "ad" else e * a
            images.append(_flatten(ctx.star(p) - p))
        rows.extend(list(r) for r in zip(*images))
    if not rows:
        return basis
    red, pivots, _ = rref(rows, len(basis))
    null = []
    for f in range(len(basis)):
        if f in pivots:
            continue
        vec = {f: 1}
        for i, c in enumerate(pivots):
            if red[i][f]:
                vec[c] = -red[i][f]
        acc = ctx.zero
        for idx, coef in vec.items():
            # rref over Z_p already yields field elements; over Q(i) it yields rationals
            acc = acc + basis[idx] * (coef if field.owns(coef) else field(coef))
        null.append(acc)
    return null


def _combine(rng, ctx, basis):
    acc = ctx.zero
    for b in basis:
        if rng.random() < 0.5:
            continue
        if ctx.field.kind == GAUSSIAN:
            coef = GaussianRational(rng.choice([-2, -1, 1, 2]))
        else:
            coef = ctx.field(rng.randrange(1, ctx.field.modulus))
        acc = acc + b * coef
    return acc


def _invertible(rng, ctx):
    while True:
        p = random_matrix(rng, ctx, ctx.n)
        if inverse(p) is not None:
            return p


def square_hermitian_sample(rng, ctx: MatrixStarRing) -> Matrix:
    """Some ``a`` with ``(a^2)* = a^2``: Hermitian, skew-Hermitian, square-zero, or filtered."""
    family = rng.randrange(4)
    if family == 0:
        x = random_matrix(rng, ctx)
        return x + ctx.star(x)
    if family == 1:
        x = random_matrix(rng, ctx)
        return x - ctx.star(x)
    if family == 2 and ctx.n > 1:
        p = _invertible(rng, ctx)
        zero, one = ctx.field.zero(), ctx.field.one()
        nil = Matrix(tuple(tuple(one if (r, c) == (0, ctx.n - 1) else zero for c in range(ctx.n))
                           for r in range(ctx.n)), ctx.field)
        return p * nil * inverse(p)
    for _ in range(50):
        a = random_matrix(rng, ctx)
        if ctx.is_hermitian(a * a):
            return a
    return ctx.zero


def _x_candidate(rng, ctx, a):
    from ..engines import Kind, named_inverse
    pick = rng.randrange(4)
    if pick == 1:
        x = named_inverse(ctx, a, Kind.ONE_THREE)
    elif pick == 2:
        x = named_inverse(ctx, a, Kind.ONE_FOUR)
    elif pick == 3:
        x = named_inverse(ctx, a, Kind.MP)
    else:
        x = None
    return x if x is not None else random_matrix(rng, ctx)


def _seeded_matrix(ctx: MatrixStarRing, theorem: Theorem, rng, count):
    from ..matrix import inner_inverse
    for _ in range(count):
        if theorem.family == "square_hermitian":
            a = square_hermitian_sample(rng, ctx)
        else:
            a = random_matrix(rng, ctx)
        inst = {"a": a}
        bases = {}
        for var in theorem.arity[1:]:
            if var == "m_inner":
                inst[var] = inner_inverse(inst["m"])
                continue
            if var == "x":
                inst[var] = _x_candidate(rng, ctx, a)
                continue
            kinds = tuple(kd for v, kd in theorem.constraints if v == var)
            if kinds:
                if kinds not in bases:
                    bases[kinds] = hermitian_solution_basis(ctx, a, kinds)
                inst[var] = _combine(rng, ctx, bases[kinds])
            else:
                inst[var] = random_matrix(rng, ctx)
        yield tuple(inst[v] for v in theorem.arity)

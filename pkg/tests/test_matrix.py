import itertools
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ginv.context import MatrixStarRing
from ginv.errors import InputError, UnsupportedContextError
from ginv.harness.generate import random_matrix
from ginv.matrix import (Involution, Matrix, determinant, inner_inverse, inverse,
                         left_inverse_of_element, matrix_from_json, matrix_to_json,
                         mp_rank_factorization, power, rank, solve_left, solve_right, star)
from ginv.scalars import QI, GaussianRational, zmod

T, H = Involution.TRANSPOSE, Involution.CONJUGATE_TRANSPOSE


def m(rows, field=QI):
    return Matrix.from_rows(rows, field)


D38 = m([["1", "0"], ["i", "0"]])
A38 = m([["1", "0"], ["-i", "1"]])
A43 = m([["1", "i"], ["i", "-1"]])


def test_products_from_the_counterexamples():
    assert A38 * D38 == m([[1, 0], [0, 0]])
    assert (A43 * A43).is_zero()
    assert A38 * Matrix.identity(2, QI) == A38


def test_star_examples():
    assert star(D38, T) == m([["1", "i"], ["0", "0"]])
    assert star(A43, H) == m([["1", "-i"], ["-i", "-1"]])


def test_rank_examples():
    assert rank(A43) == 1
    assert rank(Matrix.identity(3, QI)) == 3
    assert rank(Matrix.zero(3, QI)) == 0


def test_solve_examples():
    b = m([[1, 2], ["i", 3]])
    assert solve_left(Matrix.identity(2, QI), b) == b
    dad = D38 * A38 * D38
    assert dad == D38
    x = solve_left(dad, D38)
    assert x is not None and x * D38 == D38
    # d^T d = 0 under the transpose, so d is not in S d^T d
    assert star(D38, T) * D38 == Matrix.zero(2, QI)
    assert solve_left(star(D38, T) * D38, D38) is None


def test_inner_inverse_examples():
    assert inner_inverse(Matrix.identity(3, QI)) == Matrix.identity(3, QI)
    assert inner_inverse(Matrix.zero(2, QI)) == Matrix.zero(2, QI)
    g = inner_inverse(D38)
    assert D38 * g * D38 == D38


def test_left_inverse_of_element():
    i2 = Matrix.identity(2, QI)
    assert left_inverse_of_element(i2) == i2
    assert left_inverse_of_element(Matrix.zero(2, QI)) is None
    e = m([[1, 2], [3, 4]])
    r = left_inverse_of_element(e)
    assert r * e == i2 and determinant(e) == -2


def test_dimension_and_field_mismatch():
    with pytest.raises(InputError):
        A38 * Matrix.identity(3, QI)
    with pytest.raises(InputError):
        A38 + Matrix.identity(2, zmod(5))
    with pytest.raises(InputError):
        power(A38, 0)
    with pytest.raises(InputError):
        Matrix.from_rows([[1, 2]], QI)


def test_composite_modulus_elimination_is_unsupported():
    z6 = zmod(6)
    with pytest.raises(UnsupportedContextError):
        rank(Matrix.identity(2, z6))
    with pytest.raises(UnsupportedContextError):
        inner_inverse(Matrix.identity(2, z6))


def test_json_round_trip(tmp_path):
    obj = matrix_to_json(A43)
    assert obj == {"field": "gaussian_rational", "rows": [["1", "i"], ["i", "-1"]]}
    assert matrix_from_json(obj) == A43
    z = matrix_from_json({"field": "zmod", "modulus": 5, "rows": [["7", "1"], ["0", "-1"]]})
    assert matrix_to_json(z)["rows"] == [["2", "1"], ["0", "4"]]
    with pytest.raises(InputError):
        matrix_from_json({"rows": [["1", "2"]]})


def test_str_is_canonical():
    assert str(D38) == "[[1,0],[i,0]]"


# ---- properties on random matrices ------------------------------------------------------

def _random(seed, n, field=QI):
    ctx = MatrixStarRing(n, field, H)
    return random_matrix(random.Random(seed), ctx)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_inner_inverse_properties(seed, n):
    a = _random(seed, n)
    g = inner_inverse(a)
    assert a * g * a == a
    ag, ga = a * g, g * a
    assert ag * ag == ag and ga * ga == ga


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_rank_invariant_under_both_stars(seed, n):
    a = _random(seed, n)
    assert rank(a) == rank(star(a, T)) == rank(star(a, H))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3), st.integers(1, 4), st.integers(1, 4))
def test_power_law(seed, n, j, k):
    a = _random(seed, n)
    assert power(a, j + k) == power(a, j) * power(a, k)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_star_is_an_involutive_anti_automorphism(seed, n):
    a, b = _random(seed, n), _random(seed + 1, n)
    for kind in (T, H):
        assert star(star(a, kind), kind) == a
        assert star(a * b, kind) == star(b, kind) * star(a, kind)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_solutions_satisfy_their_equations(seed, n):
    a, b = _random(seed, n), _random(seed + 7, n)
    x = solve_right(a, b)
    if x is not None:
        assert a * x == b
    y = solve_left(a, b)
    if y is not None:
        assert y * a == b
    inv = inverse(a)
    assert (inv is not None) == (determinant(a) != 0)


def _to_sympy(a: Matrix):
    return sympy.Matrix([[sympy.Rational(int(x.re.numerator), int(x.re.denominator))
                          + sympy.I * sympy.Rational(int(x.im.numerator), int(x.im.denominator))
                          for x in row] for row in a.rows])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3))
def test_rank_factorization_matches_sympy_pinv(seed, n):
    a = _random(seed, n)
    ours = _to_sympy(mp_rank_factorization(a))
    theirs = _to_sympy(a).pinv()
    assert (ours - theirs).applyfunc(sympy.simplify) == sympy.zeros(n, n)


@pytest.mark.parametrize("p", [2, 3])
def test_unsolvable_systems_confirmed_by_enumeration(p):
    """Every reported-unsolvable 2x2 system over Z_p has no solution at all."""
    f = zmod(p)
    vals = [f(v) for v in range(p)]
    mats = [Matrix((tuple(e[:2]), tuple(e[2:])), f) for e in itertools.product(vals, repeat=4)]
    rng = random.Random(p)
    for a, b in (rng.sample(mats, 2) for _ in range(300)):
        if solve_right(a, b) is None:
            assert not any(a * x == b for x in mats)
        if solve_left(a, b) is None:
            assert not any(x * a == b for x in mats)


@pytest.mark.parametrize("n", [2, 3])
def test_3x3_unsolvable_over_z2_by_enumeration(n):
    f = zmod(2)
    vals = [f(0), f(1)]
    mats = [Matrix(tuple(tuple(e[i * n:(i + 1) * n]) for i in range(n)), f)
            for e in itertools.product(vals, repeat=n * n)]
    rng = random.Random(n)
    for a, b in (rng.sample(mats, 2) for _ in range(40)):
        if solve_left(a, b) is None:
            assert not any(x * a == b for x in mats)


def test_gaussian_entries_in_elimination_stay_exact():
    a = m([["1/3", "2+i"], ["1/7i", "-5/2"]])
    assert a * inverse(a) == Matrix.identity(2, QI)
    assert inverse(a) * a == Matrix.identity(2, QI)
    assert determinant(a) == GaussianRational("1/3") * GaussianRational("-5/2") - \
        GaussianRational(2, 1) * GaussianRational(0, "1/7")

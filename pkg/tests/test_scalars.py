from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ginv.errors import InputError, ScalarDivisionError, UnsupportedContextError
from ginv.scalars import (QI, GaussianRational, ModularInt, Rational, conjugate, format_scalar,
                          normalize, parse_scalar, scalar_op, zmod)


def test_normalize_reduces_and_fixes_sign():
    assert normalize(2, 4) == Fraction(1, 2)
    q = normalize(3, -3)
    assert (q.numerator, q.denominator) == (-1, 1)
    z = normalize(0, 7)
    assert (z.numerator, z.denominator) == (0, 1)


def test_normalize_zero_denominator():
    with pytest.raises(InputError):
        normalize(1, 0)


def test_scalar_op_examples():
    assert scalar_op(GaussianRational(1, 1), GaussianRational(1, -1), "mul") == 2
    assert scalar_op(ModularInt(2, 5), op="inv") == ModularInt(3, 5)
    assert scalar_op(Rational(3, 4), Rational(-3, 4), "add") == 0
    assert scalar_op(GaussianRational(2), op="neg") == GaussianRational(-2)


def test_scalar_op_errors():
    with pytest.raises(ScalarDivisionError):
        scalar_op(GaussianRational(0), op="inv")
    with pytest.raises(ZeroDivisionError):
        scalar_op(ModularInt(0, 7), op="inv")
    with pytest.raises(InputError):
        scalar_op(ModularInt(1, 5), ModularInt(1, 7), "add")
    with pytest.raises(InputError):
        scalar_op(GaussianRational(1), ModularInt(1, 7), "mul")
    with pytest.raises(UnsupportedContextError):
        ModularInt(2, 6).inverse()


def test_conjugate_examples():
    assert conjugate(GaussianRational(1, 1)) == GaussianRational(1, -1)
    assert conjugate(ModularInt(5, 7)) == ModularInt(5, 7)
    x = parse_scalar("3/4-5i")
    assert conjugate(conjugate(x)) == x
    assert conjugate(Rational(3, 4)) == Rational(3, 4)


@pytest.mark.parametrize("text,re,im", [
    ("3/4-5i", Fraction(3, 4), -5), ("i", 0, 1), ("-i", 0, -1), ("7", 7, 0),
    ("-1/2+i", Fraction(-1, 2), 1), ("2/3i", 0, Fraction(2, 3)), ("0", 0, 0),
])
def test_parse_gaussian(text, re, im):
    x = parse_scalar(text)
    assert (x.re, x.im) == (re, im)


@pytest.mark.parametrize("bad", ["1/0", "", "1+", "i2", "3/", "1 + i", "--1", "1/0i", "abc"])
def test_parse_rejects(bad):
    with pytest.raises(InputError):
        parse_scalar(bad)


def test_parse_error_reports_position():
    with pytest.raises(InputError, match="position"):
        parse_scalar("1/0")


def test_parse_modular():
    f = zmod(7)
    assert f.parse("10") == ModularInt(3, 7)
    assert f.parse("-1") == ModularInt(6, 7)
    with pytest.raises(InputError):
        f.parse("1/2")


@pytest.mark.parametrize("x,text", [
    (GaussianRational(Fraction(3, 4), -5), "3/4-5i"), (GaussianRational(0, 1), "i"),
    (GaussianRational(0, -1), "-i"), (GaussianRational(1, 1), "1+i"),
    (GaussianRational(0, Fraction(3, 4)), "3/4i"), (GaussianRational(0), "0"),
    (ModularInt(12, 5), "2"),
])
def test_format_canonical(x, text):
    assert format_scalar(x) == text


def test_immutable():
    x = GaussianRational(1, 2)
    with pytest.raises(AttributeError):
        x.re = 5


def test_hash_agrees_with_equality():
    assert GaussianRational(3) == 3
    assert hash(GaussianRational(3)) == hash(3)
    assert hash(GaussianRational(1, 2)) == hash(GaussianRational(Fraction(2, 2), 2))


rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
gaussians = st.builds(GaussianRational, rationals, rationals)


@given(gaussians, gaussians, gaussians)
def test_field_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if x:
        assert x * x.inverse() == 1


@given(gaussians, gaussians)
def test_conjugation_is_anti_automorphism(x, y):
    assert conjugate(x * y) == conjugate(y) * conjugate(x)
    assert conjugate(x + y) == conjugate(x) + conjugate(y)
    assert conjugate(conjugate(x)) == x


@given(gaussians)
def test_parse_format_round_trip(x):
    assert parse_scalar(format_scalar(x)) == x


@given(st.integers(0, 10**4), st.integers(1, 10**4), st.sampled_from([2, 3, 5, 7, 11, 101]))
def test_modular_field(a, b, p):
    x, y = ModularInt(a, p), ModularInt(b, p)
    assert parse_scalar(format_scalar(x), "zmod", p) == x
    if x:
        assert x * x.inverse() == ModularInt(1, p)
    assert (x + y) - y == x


def test_field_tags():
    assert str(QI) == "Q(i)" and str(zmod(5)) == "Z_5"
    assert QI.is_field and zmod(5).is_field and not zmod(6).is_field
    with pytest.raises(InputError):
        zmod(1)

"""Ring arithmetic and serialization of exact Laurent polynomials."""
import pytest
from hypothesis import given, strategies as st

from cryptocomb.errors import NotDivisible
from cryptocomb.laurent import ONE_PLUS_T, LaurentPoly


def poly(d):
    return LaurentPoly(d)


small_polys = st.dictionaries(
    st.integers(min_value=-8, max_value=8),
    st.integers(min_value=-9, max_value=9),
    max_size=6,
).map(LaurentPoly)


def test_constructor_drops_zero_coefficients():
    p = poly({3: 0, 1: 2, -4: 0})
    assert p.terms() == ((1, 2),)


def test_constructor_merges_duplicate_exponents():
    p = LaurentPoly([(2, 3), (2, -3), (0, 1)])
    assert p == LaurentPoly.one()


def test_constructor_rejects_non_integers():
    with pytest.raises(TypeError):
        LaurentPoly({0: 1.5})
    with pytest.raises(TypeError):
        LaurentPoly({0.5: 1})


def test_immutability():
    p = LaurentPoly.one()
    with pytest.raises(AttributeError):
        p._terms = {}


def test_zero_one_monomial():
    assert LaurentPoly.zero().is_zero()
    assert not LaurentPoly.one().is_zero()
    assert LaurentPoly.q_monomial(5, -3).terms() == ((-3, 5),)
    assert LaurentPoly.q_monomial(0, 7).is_zero()


def test_from_t_terms_doubles_exponents():
    p = LaurentPoly.from_t_terms({1: 1, -2: 3})
    assert p.terms() == ((-4, 3), (2, 1))


def test_coeff_and_extremes():
    p = poly({-4: 3, 2: 1})
    assert p.coeff(-4) == 3
    assert p.coeff(0) == 0
    assert p.min_exp() == -4
    assert p.max_exp() == 2


def test_extremes_of_zero_raise():
    with pytest.raises(ValueError):
        LaurentPoly.zero().min_exp()
    with pytest.raises(ValueError):
        LaurentPoly.zero().max_exp()


def test_addition_cancels_terms():
    p = poly({0: 1, 2: 1})
    q = poly({2: -1, 4: 1})
    assert (p + q).terms() == ((0, 1), (4, 1))


def test_multiplication_known_product():
    # (1 + q^2)(1 - q^2) = 1 - q^4
    p = poly({0: 1, 2: 1})
    q = poly({0: 1, 2: -1})
    assert p * q == poly({0: 1, 4: -1})


def test_power_matches_repeated_multiplication():
    p = poly({-1: 2, 3: -1})
    assert p**0 == LaurentPoly.one()
    assert p**1 == p
    assert p**4 == p * p * p * p
    with pytest.raises(ValueError):
        p ** (-1)


def test_scale_shift_mirror():
    p = poly({-1: 2, 3: -1})
    assert p.scale(3) == poly({-1: 6, 3: -3})
    assert p.scale(0).is_zero()
    assert p.shift(2) == poly({1: 2, 5: -1})
    assert p.mirror() == poly({1: 2, -3: -1})
    assert p.mirror().mirror() == p


def test_exact_div_recovers_factor():
    a = poly({-3: 2, 0: 1, 2: -4})
    b = poly({-1: 1, 4: 3})
    assert (a * b).exact_div(b) == a
    assert (a * b).exact_div(a) == b


def test_exact_div_remainder_raises():
    with pytest.raises(NotDivisible):
        poly({0: 1, 1: 1}).exact_div(poly({0: 1, 2: 1}))


def test_exact_div_integer_obstruction_raises():
    # q + 1 does not divide 2q^2 over Z with quotient in Z[q]
    with pytest.raises(NotDivisible):
        poly({2: 3}).exact_div(poly({0: 2}))


def test_exact_div_zero_divisor_raises():
    with pytest.raises(ZeroDivisionError):
        LaurentPoly.one().exact_div(LaurentPoly.zero())


def test_exact_div_zero_dividend():
    assert LaurentPoly.zero().exact_div(ONE_PLUS_T).is_zero()


def test_json_round_trip_uses_string_coefficients():
    p = poly({-2: -1, 0: 10**30, 5: 7})
    obj = p.to_json_obj()
    assert obj == [[-2, "-1"], [0, str(10**30)], [5, "7"]]
    assert LaurentPoly.from_json_obj(obj) == p


def test_from_json_obj_rejects_malformed():
    with pytest.raises(ValueError):
        LaurentPoly.from_json_obj({"0": 1})
    with pytest.raises(ValueError):
        LaurentPoly.from_json_obj([[1, 2, 3]])


def test_str_renders_t_powers():
    assert str(LaurentPoly.zero()) == "0"
    assert str(LaurentPoly.from_t_terms({1: 1, 3: 1, 4: -1})) == "t + t^3 - t^4"
    assert "t^(1/2)" in str(poly({1: 1}))


def test_hash_consistent_with_eq():
    p = poly({0: 1, 2: 1})
    assert hash(p) == hash(ONE_PLUS_T)
    assert len({p, ONE_PLUS_T}) == 1


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + LaurentPoly.zero() == a
    assert a * LaurentPoly.one() == a
    assert (a - a).is_zero()


@given(small_polys, small_polys)
def test_product_division_round_trip(a, b):
    if not b.is_zero():
        assert (a * b).exact_div(b) == a


@given(small_polys)
def test_json_round_trip_property(a):
    assert LaurentPoly.from_json_obj(a.to_json_obj()) == a

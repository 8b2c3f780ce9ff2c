from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import factor_degrees_by_trial_division, hilbert_by_search
from totaro.errors import InvalidPolynomial, RamifiedPrime, ZeroArgument
from totaro.places import (
    INF,
    IntegerPolynomial,
    Place,
    QuadraticField,
    hilbert_symbol,
    legendre,
    local_degrees,
    real_root_count,
    relevant_places,
    squarefree_part,
)

nonzero = st.integers(-60, 60).filter(bool)
rationals = st.builds(Fraction, nonzero, st.integers(1, 30))
places = st.sampled_from([INF, Place(2), Place(3), Place(5), Place(7), Place(11), Place(13)])


@pytest.mark.parametrize(
    "a, b, v, expected",
    [
        (1, 7, INF, 1),
        (1, -3, Place(3), 1),
        (-1, -1, INF, -1),
        (-1, -1, Place(2), -1),
        (-1, -1, Place(5), 1),
    ],
)
def test_hilbert_examples(a, b, v, expected):
    assert hilbert_symbol(a, b, v) == expected


def test_hilbert_examples_agree_with_search():
    assert hilbert_by_search(-1, -1, 2) == -1
    assert hilbert_by_search(-1, -1, 5) == 1


def test_hilbert_rejects_zero():
    with pytest.raises(ZeroArgument):
        hilbert_symbol(0, 3, INF)


@given(rationals, rationals)
def test_reciprocity(a, b):
    product = 1
    for v in relevant_places(a, b):
        product *= hilbert_symbol(a, b, v)
    assert product == 1


@given(rationals, rationals, rationals, places)
def test_bimultiplicative_and_symmetric(a, a2, b, v):
    assert hilbert_symbol(a * a2, b, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a2, b, v)
    assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)


@given(rationals, places)
def test_a_minus_a(a, v):
    assert hilbert_symbol(a, -a, v) == 1


def test_squarefree_part():
    assert squarefree_part(Fraction(12, 5)) == 15
    assert squarefree_part(-8) == -2


@pytest.mark.parametrize(
    "d, v, expected",
    [
        (-1, 2, "ramified"),
        (-1, 5, "split"),
        (-1, 3, "inert"),
        (5, 2, "inert"),
        (-7, 2, "split"),
        (3, 3, "ramified"),
        (-1, INF, "ramified"),
        (2, INF, "split"),
    ],
)
def test_quadratic_decomposition(d, v, expected):
    assert QuadraticField(d).decomposition(v) == expected


@pytest.mark.parametrize("d", [0, 1, 4, 12])
def test_quadratic_field_rejects(d):
    with pytest.raises(ValueError):
        QuadraticField(d)


@pytest.mark.parametrize(
    "coeffs, p, expected",
    [
        ([0, 1], 7, [1]),
        ([-1, -1, 0, 1], 2, [3]),
        ([1, 0, 1], 5, [1, 1]),
        ([-1, 1, 0, 1], 5, [3]),
    ],
)
def test_local_degree_examples(coeffs, p, expected):
    assert local_degrees(IntegerPolynomial(coeffs), p) == expected


@pytest.mark.parametrize("coeffs", [[-1, -1, 0, 1], [-1, 1, 0, 1], [-2, 0, 0, 1], [-1, -1, 0, 0, 0, 1], [3, 1, 0, 0, 0, 1]])
@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_local_degrees_match_trial_division(coeffs, p):
    f = IntegerPolynomial(coeffs)
    if f.disc % p == 0:
        return
    assert local_degrees(f, p) == factor_degrees_by_trial_division(f.high_first(), p)
    assert sum(local_degrees(f, p)) == f.degree


@given(st.integers(-40, 40), st.sampled_from([3, 5, 7, 11, 13, 17, 19]))
def test_quadratic_local_degrees(d, p):
    if d in (0, 1) or squarefree_part(d) != d or d % p == 0:
        return
    degs = local_degrees(IntegerPolynomial([-d, 0, 1]), p)
    assert degs == ([1, 1] if legendre(d, p) == 1 else [2])


def test_quadratic_ramified_primes_use_discriminant():
    assert local_degrees(IntegerPolynomial([1, 0, 1]), 2) == [2]
    # disc(x^2 - 5) = 20 is even but 2 is inert in Q(sqrt 5)
    assert local_degrees(IntegerPolynomial([-5, 0, 1]), 2) == [2]
    # x^2 + x + 2 = 0 generates Q(sqrt -7), where 2 splits; disc -7 is odd anyway
    assert local_degrees(IntegerPolynomial([2, 1, 1]), 2) == [1, 1]
    # x^2 - 17*4 = x^2 - 68 has disc 272, 2 | disc, 2 splits in Q(sqrt 17)
    assert local_degrees(IntegerPolynomial([-68, 0, 1]), 2) == [1, 1]


def test_ramified_higher_degree_raises():
    with pytest.raises(RamifiedPrime):
        local_degrees(IntegerPolynomial([-2, 0, 0, 1]), 3)


@pytest.mark.parametrize("coeffs", [[1, 2, 1], [0, 0, 1], [2, 1], [-1, 0, 0, 1], [1, 0, 2], [4, 0, 0, 0, 1], [-4, 0, 0, 0, 1]])
def test_invalid_polynomials(coeffs):
    if coeffs == [2, 1]:
        IntegerPolynomial(coeffs)  # x + 2 is fine
        return
    with pytest.raises(InvalidPolynomial):
        IntegerPolynomial(coeffs)


def test_irreducible_without_modular_witness():
    # x^4 + 1 factors modulo every prime; the exact fallback accepts it
    assert IntegerPolynomial([1, 0, 0, 0, 1]).degree == 4
    # a product of two quadratics with no rational root is rejected
    with pytest.raises(InvalidPolynomial):
        IntegerPolynomial([2, 0, 3, 0, 1])  # (x^2+1)(x^2+2)


def test_real_roots():
    assert real_root_count(IntegerPolynomial([-2, 0, 0, 1])) == 1
    assert real_root_count(IntegerPolynomial([1, -3, 0, 1])) == 3
    assert real_root_count(IntegerPolynomial([1, 0, 1])) == 0

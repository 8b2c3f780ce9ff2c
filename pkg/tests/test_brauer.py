from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from totaro.brauer import (
    BrauerClassK,
    BrauerClassQ,
    admits_unitary_involution,
    corestrict,
    find_quaternion_symbol,
    opposite,
    quaternion_class,
    restrict_to_quadratic,
    schur_index,
    search_splitting_polynomial,
    splits_over,
    tensor,
)
from totaro.errors import BaseMismatch, InvalidClass, SearchExhausted
from totaro.places import INF, IntegerPolynomial, Place, QuadraticField, squarefree_part

H = Fraction(1, 2)
K_I = QuadraticField(-1)
X = IntegerPolynomial([0, 1])

small = st.integers(-30, 30).filter(lambda n: n != 0)


@st.composite
def q_classes(draw):
    """Random classes over Q: random invariants at a few primes, then balanced."""
    primes = draw(st.lists(st.sampled_from([2, 3, 5, 7, 11, 13]), unique=True, max_size=3))
    den = draw(st.sampled_from([2, 3, 5, 6]))
    inv = {Place(p): Fraction(draw(st.integers(0, den - 1)), den) for p in primes}
    if draw(st.booleans()):
        inv[INF] = H
    total = sum(inv.values(), Fraction(0))
    inv[Place(17)] = -total
    return BrauerClassQ(inv)


@st.composite
def k_classes(draw):
    d = draw(st.sampled_from([-1, -2, -3, 2, 5, -7]))
    K = QuadraticField(d)
    cls = BrauerClassK(K)
    inv = {}
    for p in draw(st.lists(st.sampled_from([2, 3, 5, 7, 11, 13, 17, 29]), unique=True, max_size=3)):
        for w in (cls.place(p, 1), cls.place(p, 2)) if K.decomposition(p) == "split" else (cls.place(p),):
            inv[w] = Fraction(draw(st.integers(0, 5)), 6)
    total = sum(inv.values(), Fraction(0))
    # balance at a place of local degree one if possible, else at an inert place
    anchor = next(p for p in (37, 41, 43, 53, 61, 73) if K.decomposition(p) == "split")
    w = cls.place(anchor, 1)
    inv[w] = inv.get(w, Fraction(0)) - total
    return BrauerClassK(K, inv)


def test_quaternion_class_examples():
    assert quaternion_class(1, 1).is_zero()
    assert quaternion_class(-1, -1) == BrauerClassQ({2: H, "inf": H})
    assert quaternion_class(-1, 3) == BrauerClassQ({2: H, 3: H})


def test_tensor_examples():
    a = BrauerClassQ({2: H, "inf": H})
    assert tensor(BrauerClassQ(), a) == a
    assert tensor(a, BrauerClassQ({2: H, 3: H})) == BrauerClassQ({3: H, "inf": H})
    assert tensor(a, opposite(a)).is_zero()


def test_tensor_base_mismatch():
    with pytest.raises(BaseMismatch):
        tensor(BrauerClassQ(), BrauerClassK(K_I))
    with pytest.raises(BaseMismatch):
        tensor(BrauerClassK(QuadraticField(5)), BrauerClassK(K_I))


def test_schur_index_examples():
    assert schur_index(BrauerClassQ()) == 1
    assert schur_index(BrauerClassQ({2: H, "inf": H})) == 2
    assert schur_index(BrauerClassK(K_I, {(5, 1): Fraction(1, 3), (5, 2): Fraction(2, 3)})) == 3


def test_construction_invariants():
    with pytest.raises(InvalidClass):
        BrauerClassQ({2: H})
    with pytest.raises(InvalidClass):
        BrauerClassQ({"inf": Fraction(1, 3), 2: Fraction(2, 3)})
    with pytest.raises(InvalidClass):
        BrauerClassK(K_I, {("inf",): H, (3,): H})  # complex place
    with pytest.raises(InvalidClass):
        BrauerClassK(K_I, {(5,): H, (3,): H})  # 5 splits, needs a slot


def test_restrict_examples():
    assert restrict_to_quadratic(BrauerClassQ(), K_I).is_zero()
    assert restrict_to_quadratic(BrauerClassQ({2: H, "inf": H}), K_I).is_zero()
    r = restrict_to_quadratic(BrauerClassQ({5: H, "inf": H}), K_I)
    assert r == BrauerClassK(K_I, {(5, 1): H, (5, 2): H})


def test_corestrict_examples():
    assert corestrict(BrauerClassK(K_I)).is_zero()
    assert corestrict(BrauerClassK(K_I, {(5, 1): Fraction(1, 3), (5, 2): Fraction(2, 3)})).is_zero()
    c = BrauerClassK(K_I, {(5, 1): Fraction(1, 3), (5, 2): Fraction(1, 3), (3,): Fraction(1, 3)})
    assert corestrict(c)[Place(5)] == Fraction(2, 3)


def test_unitary_involution_examples():
    assert admits_unitary_involution(BrauerClassK(K_I))
    assert admits_unitary_involution(BrauerClassK(K_I, {(5, 1): Fraction(1, 3), (5, 2): Fraction(2, 3)}))
    # invariant 1/2 above the inert prime 7, balanced above the split prime 5
    beta = BrauerClassK(K_I, {(7,): H, (5, 1): H})
    assert corestrict(beta)[Place(7)] == H
    assert not admits_unitary_involution(beta)


def test_splits_over_examples():
    assert splits_over(BrauerClassQ(), IntegerPolynomial([-2, 0, 0, 1]))
    assert splits_over(quaternion_class(-1, -3), IntegerPolynomial([1, 0, 1]))
    D = BrauerClassK(K_I, {(5, 1): Fraction(1, 3), (5, 2): Fraction(2, 3)})
    assert splits_over(D, IntegerPolynomial([-1, 1, 0, 1]))
    assert not splits_over(D, IntegerPolynomial([1, 0, 1]))


def test_splits_over_real_place():
    # (-1,-1) is ramified at infinity; a real quadratic field never splits it
    assert not splits_over(quaternion_class(-1, -1), IntegerPolynomial([-7, 0, 1]))


def test_find_quaternion_symbol_examples():
    assert find_quaternion_symbol(BrauerClassQ()) == (1, 1)
    assert find_quaternion_symbol(BrauerClassQ({2: H, "inf": H})) == (-1, -1)
    assert find_quaternion_symbol(BrauerClassQ({3: H, "inf": H})) == (-1, -3)


def test_find_quaternion_symbol_bound():
    with pytest.raises(SearchExhausted):
        find_quaternion_symbol(BrauerClassQ({97: H, "inf": H}), bound=5)
    with pytest.raises(InvalidClass):
        find_quaternion_symbol(BrauerClassQ({3: Fraction(1, 3), 5: Fraction(2, 3)}))


def test_cubic_search_example():
    cls = BrauerClassQ({5: Fraction(1, 3), 7: Fraction(2, 3)})
    f = search_splitting_polynomial(cls, 3)
    assert f == IntegerPolynomial([-1, 1, 0, 1])
    with pytest.raises(SearchExhausted):
        search_splitting_polynomial(cls, 1)


@given(q_classes())
def test_sum_zero_and_inverse(alpha):
    assert sum((x for _, x in alpha.items()), Fraction(0)) % 1 == 0
    assert schur_index(tensor(alpha, opposite(alpha))) == 1


@given(q_classes(), st.sampled_from([-1, -2, -3, 2, 3, 5, 6, -15]))
def test_cores_of_restriction_doubles(alpha, d):
    K = QuadraticField(d)
    assert corestrict(restrict_to_quadratic(alpha, K)) == tensor(alpha, alpha)


@given(q_classes())
def test_degree_one_splits_only_zero(alpha):
    assert splits_over(alpha, X) == alpha.is_zero()


@given(k_classes())
def test_k_class_degree_one(beta):
    assert splits_over(beta, X) == beta.is_zero()


@given(small, small)
def test_quaternion_split_by_own_subfield(a, b):
    m = squarefree_part(a)
    if m == 1:
        return
    assert splits_over(quaternion_class(a, b), IntegerPolynomial([-m, 0, 1]))


@settings(max_examples=40, deadline=None)
@given(st.integers(-12, 12).filter(bool), st.integers(-12, 12).filter(bool))
def test_symbol_round_trip(a, b):
    alpha = quaternion_class(a, b)
    assert quaternion_class(*find_quaternion_symbol(alpha)) == alpha

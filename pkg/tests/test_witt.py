import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import small_isotropic_vector
from totaro.engine import swap_check
from totaro.errors import Degenerate, EvenDegree, NonInvertibleEntry, RankMismatch
from totaro.places import INF, Place, QuadraticField
from totaro.witt import (
    HermitianForm,
    QuadraticForm,
    SimpleExtension,
    diagonalize,
    hermitian_similar,
    hyperbolic,
    invariants,
    is_hyperbolic,
    is_isotropic,
    isometric,
    odd_degree_descent,
    projection_formula_check,
    trace_form,
    transfer,
    transfer_gram,
    transfer_stepwise,
    witt_equivalent,
)

K_I = QuadraticField(-1)
entry = st.sampled_from([1, -1, 2, -2, 3, -3, 5, -5, 6, -7, 10])
forms = st.lists(entry, min_size=1, max_size=4).map(lambda e: QuadraticForm(tuple(e)))


def F(*e):
    return QuadraticForm(tuple(e))


def test_diagonalize_examples():
    assert diagonalize([[1, 0], [0, 1]]) == F(1, 1)
    hyp = diagonalize([[0, 1], [1, 0]])
    assert isometric(hyp, F(1, -1))
    with pytest.raises(Degenerate):
        diagonalize([[1, 0], [0, 0]])


def test_invariants_examples():
    inv = invariants(F())
    assert (inv.dim, inv.disc, inv.hasse_minus, inv.signature) == (0, 1, frozenset(), 0)
    inv = invariants(F(1, -1))
    assert (inv.dim, inv.disc, inv.hasse_minus, inv.signature) == (2, -1, frozenset(), 0)
    assert invariants(F(2, 2)) == invariants(F(1, 1))
    assert invariants(F(-1, -1)).hasse_minus == {INF, Place(2)}


def test_hyperbolic_and_witt():
    assert is_hyperbolic(hyperbolic(2))
    assert is_hyperbolic(F(3, -3, 5, -5))
    assert not is_hyperbolic(F(1, 1, -1, -1, 1))
    assert witt_equivalent(F(1, 2, -2), F(1))
    assert not witt_equivalent(F(1), F(2))


def test_isotropic_examples():
    assert is_isotropic(F(1, -1))
    assert not is_isotropic(F(1, 1))
    assert is_isotropic(F(1, 1, 1, -3))
    # 7 n^2 is never a sum of three squares, so this one is anisotropic at 2
    assert not is_isotropic(F(1, 1, 1, -7))
    assert small_isotropic_vector((1, 1, 1, -7), 12) is None
    assert is_isotropic(F(1, 1, 1, 1, -7))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3, 5, -5, 7]), min_size=2, max_size=4))
def test_isotropic_against_search(entries):
    found = small_isotropic_vector(tuple(entries), 6)
    if found is not None:
        assert is_isotropic(QuadraticForm(tuple(entries)))
    if not is_isotropic(QuadraticForm(tuple(entries))):
        assert found is None


@given(forms, st.data())
def test_congruence_invariance(q, data):
    n = q.dim
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    while True:
        g = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        try:
            gram = q.gram()
            new = [[sum(g[a][i] * gram[a][b] * g[b][j] for a in range(n) for b in range(n)) for j in range(n)] for i in range(n)]
            assert invariants(diagonalize(new)) == invariants(q)
            return
        except Degenerate:
            continue


def test_trace_form_examples():
    assert trace_form(HermitianForm(K_I, (1,))) == F(1, 1)
    assert trace_form(HermitianForm(QuadraticField(5), (3,))) == F(3, -15)
    assert isometric(trace_form(HermitianForm(K_I, (1, 1, -1))), F(1, 1, 1, 1, -1, -1))


def test_hermitian_similar_examples():
    h = HermitianForm(K_I, (1, 1, 3))
    assert hermitian_similar(h, h.scale(3)) == (True, 3)
    assert hermitian_similar(h, h.scale(2)) == (True, 1)  # 2 is a norm from Q(i)
    assert hermitian_similar(HermitianForm(K_I, (1, 1, 1)), HermitianForm(K_I, (1, 1, 2))) == (True, 1)
    assert hermitian_similar(HermitianForm(K_I, (1, 1, 1)), HermitianForm(K_I, (1, 1, -1))) == (False, None)
    with pytest.raises(RankMismatch):
        hermitian_similar(HermitianForm(K_I, (1,)), HermitianForm(K_I, (1, 1, 1)))


def test_transfer_examples():
    assert transfer(SimpleExtension([0, 1]), [5]) == F(5)
    ext = SimpleExtension([-2, 0, 0, 1])
    one = ext.top.coerce(1)
    assert transfer_gram(ext, one) == [[1, 0, 0], [0, 0, 2], [0, 2, 0]]
    assert witt_equivalent(transfer(ext, [1]), F(1))
    assert witt_equivalent(transfer(ext, [ext.lam]), F(2))
    assert ext.norm(ext.lam) == 2
    with pytest.raises(NonInvertibleEntry):
        transfer(ext, [0])


def test_projection_examples():
    assert projection_formula_check(SimpleExtension([0, 1]), F(1, 3), 1) == (True, True)
    ext = SimpleExtension([-2, 0, 0, 1])
    assert projection_formula_check(ext, F(1), ext.lam) == (True, True)


@settings(max_examples=25, deadline=None)
@given(forms, st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_projection_cubic(q, coeffs):
    ext = SimpleExtension([-1, 1, 0, 1])
    mu = ext.element(coeffs)
    if mu.is_zero():
        return
    assert projection_formula_check(ext, q, mu) == (True, True)


@settings(max_examples=20, deadline=None)
@given(st.lists(st.tuples(*[st.integers(-2, 2)] * 3), min_size=1, max_size=2),
       st.lists(st.tuples(*[st.integers(-2, 2)] * 3), min_size=1, max_size=2))
def test_transfer_additive(e1, e2):
    ext = SimpleExtension([-2, 0, 0, 1])
    e1 = [ext.element(c) for c in e1]
    e2 = [ext.element(c) for c in e2]
    if any(x.is_zero() for x in e1 + e2):
        return
    assert witt_equivalent(transfer(ext, e1 + e2), transfer(ext, e1) + transfer(ext, e2))


def test_transfer_of_one_is_one():
    for f in ([-2, 0, 0, 1], [-1, 1, 0, 1], [-1, -1, 0, 0, 0, 1], [3, 0, 1, 0, 0, 0, 0, 1]):
        ext = SimpleExtension(f)
        assert witt_equivalent(transfer(ext, [1]), F(1))


def test_tower_consistency():
    ext = SimpleExtension([-2, 0, 0, 1], tower=[[-3, 0, 0, 1]])
    assert ext.degree == 9
    for mu in ([1], [ext.lam], [ext.lam + ext.generator(1)], [1, ext.generator(1) * 2 + 1]):
        assert witt_equivalent(transfer(ext, mu), transfer_stepwise(ext, mu))
    assert witt_equivalent(transfer(ext, [1]), F(1))


def test_odd_degree_descent_examples():
    ext = SimpleExtension([-2, 0, 0, 1])
    h = HermitianForm(K_I, (1, 1, 1))
    assert odd_degree_descent(h, h, SimpleExtension([-1, 1, 0, 1]), 1) == 1
    assert odd_degree_descent(h, HermitianForm(K_I, (2, 2, 2)), ext, 1) == 1
    assert odd_degree_descent(h, HermitianForm(K_I, (1, 1, -1)), ext, 1) is None
    assert odd_degree_descent(h, HermitianForm(K_I, (1, 1, -1)), ext, ext.lam) is None
    assert odd_degree_descent(h, h.scale(2), ext, ext.lam) == 2


def test_even_degree_rejected():
    with pytest.raises(EvenDegree):
        SimpleExtension([1, 0, 1])
    with pytest.raises(EvenDegree):
        SimpleExtension([-2, 0, 0, 1], tower=[[-3, 0, 1]])


@given(st.lists(st.sampled_from([1, -1, 2, 3, -5, Fraction(1, 2)]), min_size=1, max_size=4),
       st.sampled_from([-1, -2, -3, 2, 5, 7]))
def test_swap_lemma(entries, d):
    h = HermitianForm(QuadraticField(d), tuple(entries))
    assert swap_check(h).hyperbolic

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bcjack.laurent import LaurentPoly, NonExactDivision, arith
from bcjack.rootdata import WeylElement


def P(n, terms):
    return LaurentPoly(n, terms)


def u(i, n=1):
    return LaurentPoly.variable(n, i)


def inv(i, n=1):
    e = [0] * n
    e[i] = -1
    return LaurentPoly.monomial(e)


def polys(n, max_terms=5, span=3):
    exps = st.tuples(*[st.integers(-span, span)] * n)
    coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: LaurentPoly(n, d))


def weyl_elements(n):
    return st.tuples(st.permutations(range(n)), st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n)).map(
        lambda t: WeylElement(tuple(t[0]), tuple(t[1]))
    )


def test_difference_of_squares():
    assert (u(0) + inv(0)) * (u(0) - inv(0)) == P(1, {(2,): 1, (-2,): -1})


def test_expansion_two_variables():
    f = (u(0, 2) + 1) * (u(1, 2) + 1)
    assert f == P(2, {(1, 1): 1, (1, 0): 1, (0, 1): 1, (0, 0): 1})


def test_add_zero():
    f = P(2, {(1, -1): 3, (0, 2): Fraction(1, 2)})
    assert f + LaurentPoly.zero(2) == f


def test_exact_division_examples():
    assert (u(0) ** 2 - 1).exact_div(u(0) - 1) == u(0) + 1
    f = P(2, {(1, -1): 3, (0, 2): Fraction(1, 2), (-3, 0): 1})
    assert f.exact_div(f) == LaurentPoly.constant(2)
    with pytest.raises(NonExactDivision):
        (u(0) ** 2 + 1).exact_div(u(0) - 1)


def test_division_by_zero_polynomial():
    with pytest.raises(ZeroDivisionError):
        u(0).exact_div(LaurentPoly.zero(1))


def test_directional_derivative():
    assert P(2, {(2, 0): 1}).directional_derivative((1, -1)) == P(2, {(2, 0): 2})
    assert LaurentPoly.constant(2, 7).directional_derivative((1, 0)).is_zero()
    f = P(1, {(2,): 1, (-2,): 1})
    assert f.directional_derivative((1,)) == P(1, {(2,): 2, (-2,): -2})


def test_weyl_action_examples():
    swap = WeylElement.transposition(2, 0, 1)
    assert P(2, {(2, 1): 1}).weyl_act(swap) == P(2, {(1, 2): 1})
    flip = WeylElement.flip(1, 0)
    assert (u(0) + inv(0)).weyl_act(flip) == u(0) + inv(0)
    assert (u(0) - inv(0)).weyl_act(flip) == -(u(0) - inv(0))


def test_evaluate():
    assert (u(0) + inv(0)).evaluate([2]) == 2.5
    assert LaurentPoly.constant(3, 3).evaluate([0.5, 7, -2]) == 3
    assert (u(0, 2) * u(1, 2)).evaluate([2, 3]) == 6


def test_constant_term():
    assert (u(0) + 2 + inv(0)).constant_term() == 2
    assert u(0).constant_term() == 0
    assert LaurentPoly.zero(1).constant_term() == 0


def test_mismatched_variable_counts():
    with pytest.raises(ValueError):
        u(0, 1) + u(0, 2)


def test_json_round_trip():
    f = P(2, {(1, -1): Fraction(-3, 7), (0, 2): Fraction(1, 2)})
    assert LaurentPoly.from_json(f.to_json()) == f


def test_arith_dispatch():
    f, g = u(0, 2) + 1, u(1, 2) - 3
    assert arith(f, g, "add") == f + g
    assert arith(f, g, "sub") == f - g
    assert arith(f, g, "mul") == f * g


@settings(max_examples=60, deadline=None)
@given(polys(2), polys(2), polys(2))
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == LaurentPoly.zero(2)


@settings(max_examples=60, deadline=None)
@given(polys(2), polys(2, max_terms=3))
def test_exact_division_round_trip(f, g):
    if g.is_zero():
        return
    assert arith(f, g, "mul").exact_div(g) == f


@settings(max_examples=40, deadline=None)
@given(polys(3), weyl_elements(3), weyl_elements(3))
def test_weyl_action_is_group_action(f, w1, w2):
    assert f.weyl_act(w1).weyl_act(w2) == f.weyl_act(w2.compose(w1))


@settings(max_examples=40, deadline=None)
@given(polys(2), st.tuples(st.floats(0.3, 2.0), st.floats(0.3, 2.0)))
def test_evaluation_is_a_ring_homomorphism(f, pt):
    g = f * f + f
    expect = f.evaluate(pt) ** 2 + f.evaluate(pt)
    assert g.evaluate(pt) == pytest.approx(expect, rel=1e-9, abs=1e-9)

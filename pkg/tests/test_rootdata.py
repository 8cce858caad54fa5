import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bcjack.laurent import LaurentPoly
from bcjack.rootdata import (
    MultiplicityVector,
    WeylElement,
    chi_character,
    delta_poly,
    dominance_le,
    half_multiplicities,
    lower_cone,
    orbit,
    orbit_sum,
    partitions_in_box,
    positive_roots,
    rho_vector,
    rho_vector_from_roots,
    weyl_generators,
    weyl_group,
)

F = Fraction


def dominant(n, top=4):
    return st.lists(st.integers(0, top), min_size=n, max_size=n).map(lambda v: tuple(sorted(v, reverse=True)))


def test_half_multiplicities():
    assert tuple(half_multiplicities(1, 1)) == (0, 1, F(1, 2))
    assert tuple(half_multiplicities(3, 2)) == (1, 1, F(1, 2))
    with pytest.raises(ValueError):
        half_multiplicities(2, 3)


def test_positive_root_counts():
    for n in range(1, 5):
        tags = [t for _, t in positive_roots(n)]
        assert tags.count("short") == n
        assert tags.count("long") == n
        assert tags.count("medium") == n * (n - 1)


def test_rho_examples():
    assert rho_vector(MultiplicityVector.of(1, 1, F(1, 2)), 2) == (2, 1)
    assert rho_vector(MultiplicityVector.of(0, 0, 0), 3) == (0, 0, 0)
    assert rho_vector(MultiplicityVector.of(0, 1, F(1, 2)), 1) == (F(1, 2),)


@settings(max_examples=40, deadline=None)
@given(
    st.fractions(-3, 3, max_denominator=5),
    st.fractions(-3, 3, max_denominator=5),
    st.fractions(-3, 3, max_denominator=5),
    st.integers(1, 5),
)
def test_rho_closed_form_matches_root_sum(a, b, c, n):
    p = MultiplicityVector(a, b, c)
    assert rho_vector(p, n) == rho_vector_from_roots(p, n)


def test_dominance_examples():
    assert dominance_le((1, 1), (2, 0))
    assert not dominance_le((2, 0), (1, 1))
    assert dominance_le((3, 1), (3, 1))


def test_lower_cone_examples():
    assert set(lower_cone((1, 1))) == {(1, 1), (1, 0), (0, 0)}
    assert lower_cone((0, 0, 0)) == [(0, 0, 0)]
    assert set(lower_cone((2,))) == {(2,), (1,), (0,)}


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3).flatmap(dominant))
def test_lower_cone_is_a_linear_extension(mu):
    cone = lower_cone(mu)
    assert cone[0] == mu
    assert all(dominance_le(nu, mu) for nu in cone)
    brute = [nu for nu in itertools.product(range(mu[0] + 1), repeat=len(mu))
             if list(nu) == sorted(nu, reverse=True) and dominance_le(nu, mu)]
    assert set(cone) == set(brute)
    for i, a in enumerate(cone):
        for b in cone[i + 1:]:
            assert not (dominance_le(a, b) and a != b)


def test_orbit_sum_examples():
    assert orbit_sum((1, 0)) == LaurentPoly(2, {(2, 0): 1, (-2, 0): 1, (0, 2): 1, (0, -2): 1})
    assert orbit_sum((0, 0)) == LaurentPoly.constant(2)
    assert orbit_sum((1, 1)) == LaurentPoly(2, {(2, 2): 1, (2, -2): 1, (-2, 2): 1, (-2, -2): 1})


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3).flatmap(dominant))
def test_orbit_sum_is_invariant(lam):
    m = orbit_sum(lam)
    for w in weyl_generators(len(lam)):
        assert m.weyl_act(w) == m
    assert len(m) == len(orbit(lam))


def test_weyl_group_order():
    for n in range(1, 4):
        assert len(set(weyl_group(n))) == 2**n * [1, 1, 2, 6][n]


def test_delta_examples():
    d = delta_poly(MultiplicityVector.of(1, 0, 0), 2)
    expect = LaurentPoly(2, {(1, 1): 1, (1, -1): -1, (-1, 1): -1, (-1, -1): 1}).scale(F(1, 4))
    assert d == expect
    assert delta_poly(MultiplicityVector.of(0, 0, 0), 3) == LaurentPoly.constant(3)
    assert delta_poly(MultiplicityVector.of(0, 0, 1), 1) == LaurentPoly(1, {(2,): F(1, 2), (-2,): F(-1, 2)})


def test_delta_rejects_fractional_exponents():
    with pytest.raises(ValueError):
        delta_poly(MultiplicityVector.of(F(1, 2), 0, 0), 1)


def test_character_examples():
    k = MultiplicityVector.of(1, 1, 1)
    assert chi_character(WeylElement.flip(2, 0), k) == 1
    assert chi_character(WeylElement.transposition(2, 0, 1), k) == -1
    assert chi_character(WeylElement.identity(3), k) == 1


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(1, 3), st.data())
def test_delta_transforms_by_character(k1, k2, k3, n, data):
    kappa = MultiplicityVector.of(k1, k2, k3)
    d = delta_poly(kappa, n)
    w = data.draw(st.sampled_from(list(weyl_group(n))))
    assert d.weyl_act(w) == d.scale(chi_character(w, kappa))


def test_partitions_in_box_cone_order():
    box = partitions_in_box(2, 3)
    assert box == [(3, 0), (2, 1), (2, 0), (1, 1), (1, 0), (0, 0)]

import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bcjack.ho_operator import apply_T
from bcjack.jack import (
    EigenvalueCollision,
    JackPolynomial,
    inner_product_quadrature,
    jack,
    quadrature_rule,
    quadrature_weight,
    spherical_psi,
)
from bcjack.laurent import LaurentPoly
from bcjack.rootdata import MultiplicityVector, delta_poly, dominance_le, orbit_sum
from bcjack.varkappa import VarkappaParams, kappa_of

F = Fraction
R = MultiplicityVector.of(1, 1, F(1, 2))

positive = st.fractions(min_value=F(1, 5), max_value=4, max_denominator=5)
mults = st.builds(MultiplicityVector, st.fractions(0, 4, max_denominator=5), positive, positive)


def dominant(n, top=3):
    return st.lists(st.integers(0, top), min_size=n, max_size=n).map(lambda v: tuple(sorted(v, reverse=True)))


def test_rank_one_hand_value():
    J = jack((1,), R)
    assert J.coeffs == {(1,): 1, (0,): F(2, 3)}
    assert J.eigenvalue == 12
    assert J.to_laurent() == orbit_sum((1,)) + LaurentPoly.constant(1, F(2, 3))


def test_trivial_weight():
    J = jack((0, 0), R)
    assert J.to_laurent() == LaurentPoly.constant(2)
    assert J.eigenvalue == 0


def test_short_multiplicity_zero_gives_orbit_sum():
    J = jack((1,), MultiplicityVector.of(0, 1, F(3, 2)))
    assert J.to_laurent() == orbit_sum((1,))


@pytest.mark.parametrize("r1,r3", [(1, F(1, 2)), (F(2, 3), F(5, 4)), (3, 1)])
def test_decoupled_variables_factorize(r1, r3):
    # r2 = 0 splits T into two rank-one operators, so Jack polynomials are products
    r = MultiplicityVector.of(r1, 0, r3)
    c = F(8) * r1 / (4 + 4 * r1 + 8 * r3)
    one = LaurentPoly.constant(2)
    assert jack((1, 0), r).to_laurent() == orbit_sum((1, 0)) + one.scale(2 * c)
    assert jack((1, 1), r).to_laurent() == orbit_sum((1, 1)) + orbit_sum((1, 0)).scale(c) + one.scale(c * c)


@settings(max_examples=25, deadline=None)
@given(mults, st.integers(1, 3).flatmap(dominant))
def test_eigen_relation(r, mu):
    J = jack(mu, r)
    L = J.to_laurent()
    assert J.coeff(mu) == 1
    assert all(dominance_le(nu, mu) for nu in J.coeffs)
    assert apply_T(L, r) == L.scale(J.eigenvalue)


def test_collision_reported():
    # rho_r = (0, -1): (1,1) + rho_r and rho_r have the same length
    with pytest.raises(EigenvalueCollision):
        jack((1, 1), MultiplicityVector.of(-2, 1, 0))
    assert jack((1, 0), MultiplicityVector.of(0, 0, 0)).to_laurent() == orbit_sum((1, 0))


def test_json_round_trip():
    J = jack((2, 1), R)
    K = JackPolynomial.from_json_obj(json.loads(J.to_json()))
    assert K.coeffs == J.coeffs and K.eigenvalue == J.eigenvalue and K.mu == J.mu
    obj = J.to_json_obj()
    assert obj["schema"] == "bcjack/1"
    assert obj["coeffs"][0] == {"nu": [2, 1], "c": "1"}


def test_spherical_psi_examples():
    p = VarkappaParams.from_list(2, 2, (0, 0, 1, 0))
    kappa = kappa_of(p)
    assert spherical_psi((0, 0), p) == delta_poly(kappa, 2)
    q = VarkappaParams.from_list(2, 2, (0, 0, 0, 0))
    assert spherical_psi((1, 0), q) == jack((1, 0), q.s).to_laurent()
    with pytest.raises(ValueError):
        spherical_psi((0, 0), VarkappaParams.from_list(2, 2, (1, 0, 0, 0)))


def test_quadrature_raw_integral():
    r = MultiplicityVector.of(0, 0, F(1, 2))
    one = LaurentPoly.constant(1)
    assert inner_product_quadrature(one, one, r, 400) == pytest.approx(2, rel=1e-12)


def test_quadrature_rules_integrate_weight():
    y, w = quadrature_rule(64)
    assert np.sum(w) == pytest.approx(np.pi, rel=1e-14)
    assert np.sum(w * np.abs(np.sin(2 * y))) == pytest.approx(2, rel=1e-13)
    y, w = quadrature_rule(64, "trapezoid")
    assert np.sum(w) == pytest.approx(np.pi)
    with pytest.raises(ValueError):
        quadrature_rule(64, "simpson")


def test_rank_one_orthogonality_fine_grid():
    J1 = jack((1,), R).to_laurent()
    J0 = jack((0,), R).to_laurent()
    assert abs(inner_product_quadrature(J1, J0, R, 4000)) < 1e-8


def test_two_variable_orthogonality_small():
    r = MultiplicityVector.of(1, 1, F(1, 2))
    polys = [jack(mu, r).to_laurent() for mu in [(1, 0), (1, 1), (2, 0)]]
    for i in range(3):
        for j in range(i + 1, 3):
            ip = inner_product_quadrature(polys[i], polys[j], r, 120)
            norm = np.sqrt(inner_product_quadrature(polys[i], polys[i], r, 120)
                           * inner_product_quadrature(polys[j], polys[j], r, 120))
            assert abs(ip) / norm < 1e-10


def test_weight_is_symmetric():
    r = MultiplicityVector.of(1, 2, F(1, 2))
    y = [np.array([0.3, 2.1]), np.array([1.2, 0.7])]
    a = quadrature_weight(y, r)
    b = quadrature_weight([y[1], y[0]], r)
    c = quadrature_weight([np.pi - y[0], y[1]], r)
    assert np.allclose(a, b) and np.allclose(a, c)

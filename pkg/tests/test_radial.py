from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bcjack.jack import jack
from bcjack.lr import small_varkappa_grid
from bcjack.radial import (
    SingularPoint,
    c2_eigenvalue,
    casimir_eigenvalue,
    casimir_leading_coefficient,
    casimir_on_spherical,
    chamber_points,
    cm_apply_fd,
    constant_C,
    degenerate_casimir,
    delta_numeric,
    end_to_end_check,
    form_equivalence_check,
    gl_rho,
    laplacian_fd,
    potential_u,
    radial_c2_conjugated,
    radial_c2_explicit,
)
from bcjack.rootdata import MultiplicityVector, inner, partitions_in_box
from bcjack.varkappa import VarkappaParams

F = Fraction
R = MultiplicityVector.of(1, 1, F(1, 2))


def V(m, n, vk):
    return VarkappaParams.from_list(m, n, vk)


def test_potential_free_case():
    for x in (0.3, 1.1, 2.5):
        assert potential_u([x], MultiplicityVector.of(0, 5, 1)) == 0


def test_potential_long_root_only():
    for x in (0.3, 1.1):
        assert potential_u([x], MultiplicityVector.of(0, 0, F(1, 2))) == pytest.approx(-1 / np.sinh(2 * x) ** 2)


def test_potential_rank_two():
    # r2 = 1 kills the medium roots; short roots get r1 (r1 + 2 r3 - 1) = 1
    x1, x2 = 1.3, 0.4
    expect = sum(1 / np.sinh(x) ** 2 - 1 / np.sinh(2 * x) ** 2 for x in (x1, x2))
    assert potential_u([x1, x2], R) == pytest.approx(expect, rel=1e-14)
    r = MultiplicityVector.of(0, 2, 1)
    medium = 2 * 2 * (1 / np.sinh(x1 - x2) ** 2 + 1 / np.sinh(x1 + x2) ** 2)
    assert potential_u([x1, x2], r) == pytest.approx(medium, rel=1e-14)


def test_singular_point():
    with pytest.raises(SingularPoint):
        potential_u([0.5, 0.5], R)
    with pytest.raises(SingularPoint):
        delta_numeric([0.0], R)


def test_constant_examples():
    assert constant_C(V(1, 1, (0, 0, 0, 0))) == -1
    assert constant_C(V(2, 1, (0, 0, 0, 0))) == -4
    for n in (1, 2, 3):
        rho = gl_rho(2 * n)
        for vk in [(0, 0, 0, 0), (1, -1, 2, 1), (-1, 1, 0, 0)]:
            assert constant_C(V(n, n, vk)) == -2 * inner(rho, rho)


def test_plane_wave():
    c = np.array([0.7, -0.3])
    f = lambda y: np.exp(2 * c @ y)
    x = np.array([1.2, 0.4])
    val = cm_apply_fd(f, x, MultiplicityVector.of(0, 0, 0))
    assert val == pytest.approx(4 * (c @ c) * f(x), rel=1e-6)


def test_quadratic_laplacian():
    assert laplacian_fd(lambda y: y[0] ** 2, np.array([0.8, 0.3]), 1e-4) == pytest.approx(2, rel=1e-6)


def test_gauge_constant_at_trivial_weight():
    f = lambda y: delta_numeric(y, R)
    for x in (0.4, 0.9, 1.7):
        assert cm_apply_fd(f, [x], R, order=4) == pytest.approx(4 * f(np.array([x])), rel=1e-7)


def test_rank_one_first_jack():
    J = jack((1,), R).to_laurent()
    f = lambda y: delta_numeric(y, R) * J.evaluate_exp(y)
    for x in (0.4, 0.9, 1.7):
        assert cm_apply_fd(f, [x], R, order=4) == pytest.approx(16 * f(np.array([x])), rel=1e-7)


def test_explicit_operator_on_constants():
    p = V(1, 1, (0, 0, 0, 0))
    for x in (0.4, 1.1):
        assert abs(radial_c2_explicit(lambda y: np.ones(()), [x], p)) < 1e-6


def test_explicit_and_conjugated_forms_agree():
    f = lambda y: np.cosh(y[0]) * (2 + np.sin(y[-1]))
    for p in [V(2, 2, (1, 0, 1, 1)), V(3, 2, (0, 0, 1, 0)), V(3, 1, (2, 1, 2, 0))]:
        assert form_equivalence_check(p, f, points=10, seed=3) < 1e-8
        x = chamber_points(p.n, 1, seed=0)[0]
        a = radial_c2_explicit(f, x, p, order=4)
        b = radial_c2_conjugated(f, x, p, order=4)
        assert a == pytest.approx(b, rel=1e-8)


def test_chamber_points_stay_off_walls():
    pts = chamber_points(3, 50, seed=1)
    assert np.all(pts[:, -1] >= 0.3)
    assert np.all(np.diff(pts, axis=1) <= -0.3)


def test_end_to_end_small():
    res = end_to_end_check((1, 0), V(2, 2, (0, 0, 1, 0)), points=5)
    assert res["max_rel_err"] < 1e-5
    assert res["points"] == 5


def test_c2_examples():
    p = V(1, 1, (0, 0, 0, 0))
    assert c2_eigenvalue((0,), p) == 0
    assert c2_eigenvalue((1,), p) == 4
    assert casimir_eigenvalue((1, -1), 2) == 4
    assert casimir_eigenvalue((1, 0), 2) == 2
    for order in (1, 2, 3, 5):
        assert casimir_eigenvalue((0, 0, 0), order) == 0


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)])
def test_c2_matches_casimir_of_tau_image(m, n):
    for p in small_varkappa_grid(m, n)[::4]:
        for mu in partitions_in_box(n, 3):
            assert c2_eigenvalue(mu, p) == casimir_on_spherical(mu, p, 2)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=6))
def test_harish_chandra_order_two(lam):
    lam = sorted(lam, reverse=True)
    rho = gl_rho(len(lam))
    assert casimir_eigenvalue(lam, 2) == inner(lam, [a + 2 * b for a, b in zip(lam, rho)])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_degenerate_casimirs(n):
    for p in small_varkappa_grid(n, n):
        if p.k1 + p.k2:
            continue
        for mu in partitions_in_box(n, 2):
            for j in (1, 2, 3):
                assert casimir_on_spherical(mu, p, 2 * j) == degenerate_casimir(mu, p, 2 * j)
                assert casimir_on_spherical(mu, p, 2 * j + 1) == 0


def test_degenerate_form_needs_degenerate_parameters():
    with pytest.raises(ValueError):
        degenerate_casimir((0,), V(2, 1, (0, 0, 0, 0)), 2)


def test_leading_coefficients():
    p = V(3, 2, (1, 1, 2, 0))
    for j in (1, 2):
        top, _ = casimir_leading_coefficient((2, 1), p, 2 * j)
        assert top == 2 * (2 ** (2 * j) + 1)
        otop, osub = casimir_leading_coefficient((2, 1), p, 2 * j + 1)
        assert otop == 0
        assert osub == (2 * j + 1) * 2 * (2 ** (2 * j) + 1)

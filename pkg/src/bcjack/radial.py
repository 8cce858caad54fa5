"""Numeric checks of the radial part of the Casimir: the BC_n Calogero-Moser
operator, its explicit coordinate form, and Harish-Chandra eigenvalues."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .jack import jack
from .rootdata import MultiplicityVector, inner, positive_roots, rho_vector
from .varkappa import VarkappaParams, check_restrk, kappa_of, tau

SmoothFunction = Callable[[np.ndarray], float]

# Finite differences at h = 1e-4 lose about eps / h^2 to rounding; extended
# precision keeps that well below the comparison tolerances.
REAL = np.longdouble

# squared lengths of short, medium and long roots
_ROOT_NORM = {"short": 1, "medium": 2, "long": 4}


class SingularPoint(ValueError):
    pass


@dataclass(frozen=True)
class RadialParams:
    p: VarkappaParams

    @property
    def kappa(self) -> MultiplicityVector:
        return kappa_of(self.p)

    @property
    def s(self) -> MultiplicityVector:
        return self.p.s

    @property
    def r(self) -> MultiplicityVector:
        return self.kappa + self.s

    @property
    def rho_r(self) -> tuple[Fraction, ...]:
        return rho_vector(self.r, self.p.n)

    @property
    def C(self) -> Fraction:
        return constant_C(self.p)


def _point(x) -> np.ndarray:
    return np.asarray(x, dtype=REAL)


def _root_values(x: Sequence[float], n: int):
    x = _point(x)
    if x.shape != (n,):
        raise ValueError(f"expected a point with {n} coordinates")
    for root, tag in positive_roots(n):
        a = np.dot(np.asarray(root, dtype=REAL), x)
        if a == 0:
            raise SingularPoint(f"root {root} vanishes at {tuple(x)}")
        yield root, tag, a


def potential_u(x: Sequence[float], r: MultiplicityVector) -> float:
    """``sum_a r_a (r_a + 2 r_2a - 1) (a, a) / sinh^2 a(x)``, with ``r_2a = 0`` unless ``2a`` is a root."""
    r1, r2, r3 = (REAL(v.numerator) / REAL(v.denominator) for v in r)
    coef = {
        "short": r1 * (r1 + 2 * r3 - 1),
        "medium": r2 * (r2 - 1),
        "long": r3 * (r3 - 1),
    }
    total = REAL(0)
    for _, tag, a in _root_values(x, len(x)):
        c = coef[tag]
        if c:
            total += c * _ROOT_NORM[tag] / np.sinh(a) ** 2
    return total


def delta_numeric(x: Sequence[float], p: MultiplicityVector) -> float:
    """``prod_a sinh(a(x))^p_a`` at a point of the open positive chamber."""
    total = REAL(1)
    for _, tag, a in _root_values(x, len(x)):
        e = p.for_tag(tag)
        if e:
            if a <= 0:
                raise SingularPoint("real powers of sinh need the positive chamber")
            total *= np.sinh(a) ** (REAL(e.numerator) / REAL(e.denominator))
    return total


def constant_C(p: VarkappaParams) -> Fraction:
    m, n = p.m, p.n
    N, d = m + n, m - n
    return (
        Fraction(N - N**3, 6)
        + Fraction(d**3 - d, 6)
        + (p.k1 + p.k2) ** 2 * n
        + 2 * d * p.k1**2
    )


def gl_rho(N: int) -> tuple[Fraction, ...]:
    """``(N-1, N-3, ..., 1-N) / 2``."""
    return tuple(Fraction(N + 1, 2) - j for j in range(1, N + 1))


# central-difference weights for (first, second) derivatives
_STENCILS = {
    2: ({1: 1 / 2}, {0: -2.0, 1: 1.0}),
    4: ({1: 2 / 3, 2: -1 / 12}, {0: -5 / 2, 1: 4 / 3, 2: -1 / 12}),
}


def _stencil(order: int):
    try:
        return _STENCILS[order]
    except KeyError:
        raise ValueError(f"stencil order must be 2 or 4, got {order}") from None


def laplacian_fd(f: SmoothFunction, x: Sequence[float], h: float, order: int = 2) -> float:
    """Sum of central second differences; truncation error ``O(h^order)``."""
    _, second = _stencil(order)
    x, h = _point(x), REAL(h)
    f0 = f(x)
    total = REAL(0)
    for i in range(len(x)):
        acc = second[0] * f0
        for k, w in second.items():
            if k:
                e = np.zeros_like(x)
                e[i] = k * h
                acc += w * (f(x + e) + f(x - e))
        total += acc
    return total / h**2


def gradient_fd(f: SmoothFunction, x: Sequence[float], h: float, order: int = 2) -> np.ndarray:
    first, _ = _stencil(order)
    x, h = _point(x), REAL(h)
    out = np.empty(len(x), dtype=REAL)
    for i in range(len(x)):
        acc = REAL(0)
        for k, w in first.items():
            e = np.zeros_like(x)
            e[i] = k * h
            acc += w * (f(x + e) - f(x - e))
        out[i] = acc / h
    return out


def cm_apply_fd(
    f: SmoothFunction, x: Sequence[float], r: MultiplicityVector, h: float = 1e-4, order: int = 2
) -> float:
    """``(Laplacian - u_r) f`` at ``x`` by central differences."""
    return laplacian_fd(f, x, h, order) - potential_u(x, r) * f(_point(x))


def radial_c2_explicit(
    f: SmoothFunction, x: Sequence[float], p: VarkappaParams, h: float = 1e-4, order: int = 2
) -> float:
    """``2 R_C2 f`` from the coordinate expression of the radial part:
    first-order coth terms, inverse sinh^2 / cosh^2 potentials, and a constant."""
    x = _point(x)
    n, m = p.n, p.m
    if x.shape != (n,):
        raise ValueError(f"expected a point with {n} coordinates")
    list(_root_values(x, n))  # singularity check
    lap = laplacian_fd(f, x, h, order)
    grad = gradient_fd(f, x, h, order)
    f0 = f(x)
    first = REAL(0)
    for i in range(n):
        c = 2 * (m - n) / np.tanh(x[i]) + 2 / np.tanh(2 * x[i])
        for j in range(n):
            if j != i:
                c += 2 / np.tanh(x[i] - x[j]) + 2 / np.tanh(x[i] + x[j])
        first += c * grad[i]
    pot = REAL(0)
    for i in range(n):
        for j in range(i + 1, n):
            pot -= 2 * p.kv * (p.kv + 1) * (1 / np.sinh(x[i] + x[j]) ** 2 + 1 / np.sinh(x[i] - x[j]) ** 2)
    a = p.kt1 - p.k1
    for i in range(n):
        pot += (p.k2 - p.kt1) ** 2 / np.cosh(x[i]) ** 2
        pot -= a * (a + 2 * (m - n)) / np.sinh(x[i]) ** 2
    const = (p.k1 + p.k2) ** 2 * n + 2 * (m - n) * p.k1**2
    return lap + first + (pot + const) * f0


def radial_c2_conjugated(
    f: SmoothFunction, x: Sequence[float], p: VarkappaParams, h: float = 1e-4, order: int = 2
) -> float:
    """``delta_s^-1 (Laplacian - u_r + C) delta_s f`` by central differences."""
    s = p.s
    r = kappa_of(p) + s

    def g(y):
        return delta_numeric(y, s) * f(y)

    x = _point(x)
    C = constant_C(p)
    val = cm_apply_fd(g, x, r, h, order) + REAL(C.numerator) / REAL(C.denominator) * g(x)
    return val / delta_numeric(x, s)


def c2_eigenvalue(mu: Sequence[int], p: VarkappaParams) -> Fraction:
    """Eigenvalue ``2 (mu + rho_r)^2 + C / 2`` of ``R_C2`` on ``Psi_mu``."""
    rho = rho_vector(kappa_of(p) + p.s, p.n)
    v = [a + b for a, b in zip(mu, rho)]
    return 2 * inner(v, v) + constant_C(p) / 2


def casimir_eigenvalue(lam: Sequence, order: int) -> Fraction:
    """``sum_j (lam_j + rho_j)^order - rho_j^order`` for GL(len(lam))."""
    if order < 1:
        raise ValueError("order must be positive")
    rho = gl_rho(len(lam))
    return sum(((Fraction(a) + b) ** order - b**order for a, b in zip(lam, rho)), Fraction(0))


def casimir_on_spherical(mu: Sequence[int], p: VarkappaParams, order: int) -> Fraction:
    """Eigenvalue of ``C_order`` on ``L_lam`` with ``lam = tau(mu + rho_kappa)``."""
    rho = p.rho_kappa()
    return casimir_eigenvalue(tau([a + b for a, b in zip(mu, rho)], p), order)


def degenerate_casimir(mu: Sequence[int], p: VarkappaParams, order: int) -> Fraction:
    """Closed form at ``m == n`` and ``k1 + k2 == 0``:
    ``2 sum (mu + rho_r)_i^order - (rho_s)_i^order`` for even order, ``0`` for odd."""
    if p.m != p.n or p.k1 + p.k2 != 0:
        raise ValueError("closed form needs m == n and k1 + k2 == 0")
    if order % 2:
        return Fraction(0)
    rho_r = rho_vector(kappa_of(p) + p.s, p.n)
    rho_s = rho_vector(p.s, p.n)
    return 2 * sum(
        ((a + b) ** order - c**order for a, b, c in zip(mu, rho_r, rho_s)), Fraction(0)
    )


def casimir_leading_coefficient(mu0: Sequence[int], p: VarkappaParams, order: int) -> tuple[Fraction, Fraction]:
    """Top two coefficients of ``t -> casimir_on_spherical(t mu0, p, order)``.

    The map is a polynomial of degree ``order`` in ``t``; coefficients come
    from exact forward differences.  Returns ``(coef of t^order, coef of t^(order-1))``.
    """
    values = [casimir_on_spherical([t * a for a in mu0], p, order) for t in range(order + 1)]
    diffs = [values]
    while len(diffs[-1]) > 1:
        prev = diffs[-1]
        diffs.append([b - a for a, b in zip(prev, prev[1:])])
    top = diffs[order][0] / math.factorial(order)
    # remove the top term and repeat for degree order-1
    rest = [v - top * t**order for t, v in enumerate(values)]
    d = rest[:order]
    for _ in range(order - 1):
        d = [b - a for a, b in zip(d, d[1:])]
    return top, d[0] / math.factorial(order - 1)


def chamber_points(n: int, count: int, seed: int, gap: float = 0.3, spread: float = 0.8) -> np.ndarray:
    """Points ``x_1 > ... > x_n > 0`` with every ``x_i - x_{i+1}`` and ``x_n`` in ``[gap, gap + spread]``;
    all root values are then at least ``gap``."""
    rng = np.random.default_rng(seed)
    steps = gap + spread * rng.random((count, n))
    return np.cumsum(steps[:, ::-1], axis=1)[:, ::-1]


def rel_err(a, b) -> float:
    scale = max(abs(a), abs(b))
    return float(abs(a - b) / scale) if scale else 0.0


def form_equivalence_check(
    p: VarkappaParams, f: SmoothFunction, points: int = 100, seed: int = 0, h: float = 1e-4, order: int = 4
) -> float:
    """Largest relative gap between the explicit and conjugated forms."""
    worst = 0.0
    for x in chamber_points(p.n, points, seed):
        a = radial_c2_explicit(f, x, p, h, order)
        b = radial_c2_conjugated(f, x, p, h, order)
        worst = max(worst, rel_err(a, b))
    return worst


def end_to_end_check(
    mu: Sequence[int], p: VarkappaParams, points: int = 20, seed: int = 0, h: float = 1e-4, order: int = 2
) -> dict:
    """Compare ``(Laplacian - u_r)(delta_r J_mu)`` with ``4 (mu + rho_r)^2 delta_r J_mu``."""
    if not check_restrk(kappa_of(p)):
        raise ValueError("kappa violates k3 >= k1 + k3 >= 0")
    r = kappa_of(p) + p.s
    J = jack(mu, r).to_laurent()
    rho = rho_vector(r, p.n)
    v = [a + b for a, b in zip(mu, rho)]
    ev = 4 * inner(v, v)
    expected = REAL(ev.numerator) / REAL(ev.denominator)

    def f(y):
        return delta_numeric(y, r) * J.evaluate_exp(y)

    errs = []
    for x in chamber_points(p.n, points, seed):
        errs.append(rel_err(cm_apply_fd(f, x, r, h, order), expected * f(x)))
    return {"max_rel_err": max(errs), "points": points, "eigenvalue": str(4 * inner(v, v))}

"""BC_n Jack polynomials by the triangular recursion."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .ho_operator import SCHEMA, T_on_orbit_sum, eigenvalue_tilde
from .laurent import LaurentPoly
from .rootdata import MultiplicityVector, Weight, delta_poly, lower_cone, orbit_sum
from .varkappa import VarkappaParams, check_restrk, kappa_of

__all__ = [
    "EigenvalueCollision",
    "JackPolynomial",
    "eigenvalue_tilde",
    "jack",
    "spherical_psi",
    "inner_product_quadrature",
]


class EigenvalueCollision(ArithmeticError):
    """``Et(nu) == Et(mu)`` for some ``nu < mu``: the recursion has no unique solution."""

    def __init__(self, mu: Weight, nu: Weight, value: Fraction):
        self.mu, self.nu, self.value = mu, nu, value
        super().__init__(f"eigenvalue {value} of {mu} is shared by {nu}")


@dataclass(frozen=True)
class JackPolynomial:
    mu: Weight
    r: MultiplicityVector
    coeffs: dict  # nu -> Fraction, cone order, zeros dropped
    eigenvalue: Fraction

    @property
    def n(self) -> int:
        return len(self.mu)

    def to_laurent(self) -> LaurentPoly:
        out = LaurentPoly.zero(self.n)
        for nu, c in self.coeffs.items():
            out = out + orbit_sum(nu).scale(c)
        return out

    def coeff(self, nu: Sequence[int]) -> Fraction:
        return self.coeffs.get(tuple(nu), Fraction(0))

    def to_json_obj(self) -> dict:
        return {
            "schema": SCHEMA,
            "n": self.n,
            "r": self.r.to_json_obj(),
            "mu": list(self.mu),
            "coeffs": [{"nu": list(nu), "c": str(c)} for nu, c in self.coeffs.items()],
            "eigenvalue": str(self.eigenvalue),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "JackPolynomial":
        coeffs = {tuple(t["nu"]): Fraction(t["c"]) for t in obj["coeffs"]}
        return cls(
            tuple(obj["mu"]),
            MultiplicityVector.of(*obj["r"]),
            coeffs,
            Fraction(obj["eigenvalue"]),
        )


def jack(mu: Sequence[int], r: MultiplicityVector) -> JackPolynomial:
    """The monic eigenfunction ``J_mu = m_mu + sum_{nu < mu} c_nu m_nu`` of ``T``."""
    mu = tuple(int(a) for a in mu)
    cone = lower_cone(mu)
    top = eigenvalue_tilde(mu, r)
    # pending[nu] accumulates sum_kappa c_kappa a_{kappa nu} over processed kappa
    pending: dict[Weight, Fraction] = {}
    coeffs: dict[Weight, Fraction] = {}
    for nu in cone:
        if nu == mu:
            c = Fraction(1)
        else:
            e = eigenvalue_tilde(nu, r)
            if e == top:
                raise EigenvalueCollision(mu, nu, top)
            c = pending.pop(nu, Fraction(0)) / (top - e)
        if not c:
            continue
        coeffs[nu] = c
        for lam, a in T_on_orbit_sum(nu, r).items():
            if lam != nu:
                pending[lam] = pending.get(lam, Fraction(0)) + c * a
    return JackPolynomial(mu, r, coeffs, top)


def spherical_psi(mu: Sequence[int], p: VarkappaParams) -> LaurentPoly:
    """Torus restriction ``delta_kappa * J^(kappa+s)_mu`` of the normalized spherical function."""
    kappa = kappa_of(p)
    if not check_restrk(kappa):
        raise ValueError(f"kappa = {kappa} violates k3 >= k1 + k3 >= 0")
    if any(k < 0 for k in kappa):
        raise ValueError(f"kappa = {kappa} has a negative entry; delta_kappa is not a Laurent polynomial")
    if len(mu) != p.n:
        raise ValueError(f"mu must have {p.n} entries")
    return delta_poly(kappa, p.n) * jack(mu, p.r).to_laurent()


def quadrature_weight(y: Sequence[np.ndarray], r: MultiplicityVector) -> np.ndarray:
    """``prod |sin y_i|^(2r1) |sin 2y_i|^(2r3) prod_{i<j} |sin(y_i-y_j) sin(y_i+y_j)|^(2r2)``."""
    r1, r2, r3 = (float(v) for v in r)
    w = np.ones(np.broadcast(*y).shape)
    for i, yi in enumerate(y):
        if r1:
            w = w * np.abs(np.sin(yi)) ** (2 * r1)
        if r3:
            w = w * np.abs(np.sin(2 * yi)) ** (2 * r3)
        if r2:
            for yj in y[i + 1 :]:
                w = w * np.abs(np.sin(yi - yj) * np.sin(yi + yj)) ** (2 * r2)
    return w


def quadrature_rule(grid: int, rule: str = "gauss") -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on ``[0, pi]`` with ``grid`` nodes.

    ``"trapezoid"`` is the equispaced periodic rule.  ``"gauss"`` places
    Gauss-Legendre panels on ``[0, pi/2]`` and ``[pi/2, pi]``, the kinks of
    ``|sin 2y|``, so the weight is smooth on every panel.
    """
    if int(grid) != grid or grid < 2:
        raise ValueError(f"grid must be an integer >= 2, got {grid}")
    grid = int(grid)
    if rule == "trapezoid":
        h = np.pi / grid
        return np.arange(grid) * h, np.full(grid, h)
    if rule != "gauss":
        raise ValueError(f"unknown quadrature rule {rule!r}")
    nodes, weights = [], []
    for lo, k in ((0.0, grid // 2), (np.pi / 2, grid - grid // 2)):
        t, w = np.polynomial.legendre.leggauss(k)
        nodes.append(lo + (t + 1) * np.pi / 4)
        weights.append(w * np.pi / 4)
    return np.concatenate(nodes), np.concatenate(weights)


def inner_product_quadrature(
    f: LaurentPoly, g: LaurentPoly, r: MultiplicityVector, grid: int, rule: str = "gauss"
) -> float:
    """Tensor-product approximation of ``int_{[0,pi]^n} weight(y) f(e^{iy}) conj(g(e^{iy})) dy``
    with ``grid`` nodes per axis (see :func:`quadrature_rule`)."""
    if f.n != g.n:
        raise ValueError("polynomials in different numbers of variables")
    r1, r2, r3 = r
    if r1 < 0 or r2 < 0 or r3 <= 0:
        raise ValueError(f"need r1, r2 >= 0 and r3 > 0, got {r}")
    n = f.n
    nodes, weights = quadrature_rule(grid, rule)
    total = 0.0
    # one slab per value of the first coordinate keeps memory at grid^(n-1)
    rest = np.meshgrid(*([nodes] * (n - 1)), indexing="ij") if n > 1 else []
    rest_w = np.ones(rest[0].shape) if rest else np.asarray(1.0)
    for w_ in np.meshgrid(*([weights] * (n - 1)), indexing="ij") if n > 1 else []:
        rest_w = rest_w * w_
    for y0, w0 in zip(nodes, weights):
        y = [np.full(rest[0].shape, y0) if rest else np.asarray(y0)] + list(rest)
        w = quadrature_weight(y, r) * rest_w * w0
        iy = [1j * yi for yi in y]
        fv = f.evaluate_exp(iy)
        gv = fv if g is f else g.evaluate_exp(iy)
        total += float(np.sum(w * np.real(fv * np.conj(gv))))
    return total

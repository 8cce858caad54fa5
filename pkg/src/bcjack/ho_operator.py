"""The conjugated Sutherland operator on W-invariant Laurent polynomials.

``T = Laplacian + sum over positive roots a of 2 r_a coth(a(x)) d_a``

This is the Heckman-Opdam operator with the additive constant ``4 (rho_r, rho_r)``
removed, so ``T 1 = 0`` and ``T m_mu = Et(mu) m_mu + lower terms`` with
``Et(mu) = 4 [(mu + rho_r, mu + rho_r) - (rho_r, rho_r)]``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .laurent import LaurentPoly, NonExactDivision
from .rootdata import (
    MultiplicityVector,
    Weight,
    dominance_le,
    inner,
    lower_cone,
    orbit,
    orbit_sum,
    positive_roots,
    rho_vector,
    to_dominant,
    weyl_generators,
)

SCHEMA = "bcjack/1"


class NotInvariant(ValueError):
    """Input is not a W-invariant Laurent polynomial in even exponents."""


class TriangularityError(AssertionError):
    pass


def eigenvalue_tilde(mu: Sequence[int], r: MultiplicityVector) -> Fraction:
    """``4 [(mu + rho_r)^2 - rho_r^2]``: the eigenvalue of ``T`` on ``J_mu``."""
    rho = rho_vector(r, len(mu))
    shifted = [a + b for a, b in zip(mu, rho)]
    return 4 * (inner(shifted, shifted) - inner(rho, rho))


def check_invariant(f: LaurentPoly) -> None:
    for e in f.terms:
        if any(k % 2 for k in e):
            raise NotInvariant(f"odd exponent {e}")
    for w in weyl_generators(f.n):
        if f.weyl_act(w) != f:
            raise NotInvariant(f"not invariant under {w}")


def _binomial(root: Sequence[int], sign: int) -> LaurentPoly:
    """``u^(2 root) + sign``."""
    n = len(root)
    return LaurentPoly(n, {tuple(2 * a for a in root): 1, (0,) * n: sign})


def apply_T(
    f: LaurentPoly, r: MultiplicityVector, *, check: bool = True, common_denominator: bool = False
) -> LaurentPoly:
    """Apply ``T`` exactly.

    ``coth(a) = (u^(2a) + 1) / (u^(2a) - 1)``.  By default each root term is
    divided by its own binomial; for an invariant input ``d_a f`` is
    anti-invariant under the reflection in ``a`` and the division is exact.
    With ``common_denominator=True`` the whole first-order part is put over the
    product of all binomials and divided once.
    """
    if check:
        check_invariant(f)
    n = f.n
    out = f.laplacian()
    terms = [(root, r.for_tag(tag)) for root, tag in positive_roots(n)]
    terms = [(root, c) for root, c in terms if c]
    if not terms or not f:
        return out
    if not common_denominator:
        for root, c in terms:
            df = f.directional_derivative(root)
            if not df:
                continue
            try:
                q = df.exact_div(_binomial(root, -1))
            except NonExactDivision as exc:
                raise NonExactDivision(exc.remainder, f"d_{root} f not divisible by u^(2a)-1") from exc
            out = out + (q * _binomial(root, 1)).scale(2 * c)
        return out
    minus = [_binomial(root, -1) for root, _ in terms]
    denom = LaurentPoly.constant(n, 1)
    for b in minus:
        denom = denom * b
    numer = LaurentPoly.zero(n)
    for k, (root, c) in enumerate(terms):
        others = LaurentPoly.constant(n, 1)
        for j, b in enumerate(minus):
            if j != k:
                others = others * b
        numer = numer + (f.directional_derivative(root) * _binomial(root, 1) * others).scale(2 * c)
    return out + numer.exact_div(denom)


def apply_T_series(
    f: LaurentPoly, r: MultiplicityVector, support_bound: Sequence[int] | None = None
) -> LaurentPoly:
    """Apply ``T`` by expanding ``coth(a) = 1 + 2 sum_k u^(-2 k a)``.

    The expansion is valid on the positive chamber.  Terms are generated until
    they leave the box ``|e_i| <= B``; every exponent inside the box then has all
    of its contributions, and the exact result is supported inside the box.
    ``B`` is twice the largest entry of ``support_bound`` or, by default, the
    largest absolute exponent of ``f``.
    """
    n = f.n
    if support_bound is not None:
        bound = 2 * max((abs(a) for a in support_bound), default=0)
    else:
        bound = max((abs(k) for e in f.terms for k in e), default=0)
    acc: dict[tuple[int, ...], Fraction] = dict(f.laplacian().terms)
    for root, tag in positive_roots(n):
        c = r.for_tag(tag)
        if not c:
            continue
        step = tuple(2 * a for a in root)
        for e0, v in f.directional_derivative(root).terms.items():
            w = 2 * c * v
            acc[e0] = acc.get(e0, 0) + w
            e = tuple(a - s for a, s in zip(e0, step))
            while all(-bound <= k <= bound for k in e):
                acc[e] = acc.get(e, 0) + 2 * w
                e = tuple(a - s for a, s in zip(e, step))
    return LaurentPoly(n, acc)


def orbit_decompose(f: LaurentPoly) -> dict[Weight, Fraction]:
    """Coefficients ``c`` with ``f = sum c[lam] m_lam``."""
    groups: dict[Weight, dict] = {}
    for e, c in f.terms.items():
        if any(k % 2 for k in e):
            raise NotInvariant(f"odd exponent {e}")
        lam = to_dominant(tuple(k // 2 for k in e))
        groups.setdefault(lam, {})[tuple(k // 2 for k in e)] = c
    out: dict[Weight, Fraction] = {}
    for lam in sorted(groups, key=lambda w: (-sum(w), tuple(-a for a in w))):
        members = groups[lam]
        coeffs = set(members.values())
        if len(coeffs) != 1 or set(members) != set(orbit(lam)):
            raise NotInvariant(f"coefficients on the orbit of {lam} are not constant")
        out[lam] = coeffs.pop()
    return out


def from_orbit_coeffs(coeffs: dict[Weight, Fraction], n: int) -> LaurentPoly:
    out = LaurentPoly.zero(n)
    for lam, c in coeffs.items():
        out = out + orbit_sum(lam).scale(c)
    return out


@lru_cache(maxsize=4096)
def _T_orbit(lam: Weight, r: MultiplicityVector) -> tuple[tuple[Weight, Fraction], ...]:
    return tuple(orbit_decompose(apply_T(orbit_sum(lam), r, check=False)).items())


def T_on_orbit_sum(lam: Sequence[int], r: MultiplicityVector) -> dict[Weight, Fraction]:
    """Orbit-sum expansion of ``T m_lam`` (cached)."""
    return dict(_T_orbit(tuple(lam), r))


@dataclass
class OperatorMatrix:
    mu: Weight
    params: MultiplicityVector
    cone: list[Weight]
    diag: dict[Weight, Fraction]
    offdiag: dict[tuple[Weight, Weight], Fraction] = field(default_factory=dict)

    def row(self, kappa: Weight) -> dict[Weight, Fraction]:
        out = {kappa: self.diag[kappa]}
        for (k, nu), a in self.offdiag.items():
            if k == kappa:
                out[nu] = a
        return out

    def to_json_obj(self) -> dict:
        index = {w: i for i, w in enumerate(self.cone)}
        triplets = sorted(
            ([index[k], index[nu], str(a)] for (k, nu), a in self.offdiag.items()),
            key=lambda t: (t[0], t[1]),
        )
        return {
            "schema": SCHEMA,
            "n": len(self.mu),
            "r": self.params.to_json_obj(),
            "mu": list(self.mu),
            "cone": [list(w) for w in self.cone],
            "diag": [str(self.diag[w]) for w in self.cone],
            "offdiag": triplets,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


def operator_row(kappa: Weight, r: MultiplicityVector) -> tuple[Fraction, dict[Weight, Fraction]]:
    """Diagonal entry and strictly-lower entries of ``T m_kappa``; checks triangularity."""
    coeffs = T_on_orbit_sum(kappa, r)
    expected = eigenvalue_tilde(kappa, r)
    diag = coeffs.pop(kappa, Fraction(0))
    if diag != expected:
        raise TriangularityError(f"diagonal at {kappa} is {diag}, expected {expected}")
    for nu in coeffs:
        if not dominance_le(nu, kappa):
            raise TriangularityError(f"T m_{kappa} has a component along m_{nu}")
    return diag, coeffs


def operator_matrix(mu: Sequence[int], r: MultiplicityVector, jobs: int = 1) -> OperatorMatrix:
    mu = tuple(int(a) for a in mu)
    cone = lower_cone(mu)
    if jobs > 1 and len(cone) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(operator_row, cone, [r] * len(cone)))
    else:
        rows = [operator_row(k, r) for k in cone]
    diag, off = {}, {}
    for kappa, (d, lower) in zip(cone, rows):
        diag[kappa] = d
        for nu, a in lower.items():
            off[(kappa, nu)] = a
    return OperatorMatrix(mu, r, cone, diag, off)

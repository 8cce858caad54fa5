"""Property batteries shared by the CLI and the acceptance tests.

Every ``check_*`` function returns a report dict with ``name``, ``pass``,
``checked`` and up to ``MAX_DUMP`` counterexamples in ``failures``.
"""

from __future__ import annotations

import math
import random
import time
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .ho_operator import apply_T, apply_T_series, eigenvalue_tilde, operator_matrix
from .jack import inner_product_quadrature, jack, spherical_psi
from .lr import (
    count_chains,
    gl_weights_in_box,
    gl_weights_of_size,
    is_spherical_closed,
    levi_weights,
    lr_coefficient_shifted,
    membership_P,
    membership_P_lr,
    tableau_row_counts_observed,
    tableau_row_counts_predicted,
    small_varkappa_grid,
    spherical_mult,
    tau_preimage,
)
from .radial import (
    casimir_eigenvalue,
    casimir_leading_coefficient,
    casimir_on_spherical,
    degenerate_casimir,
    end_to_end_check,
    form_equivalence_check,
    gl_rho,
)
from .rootdata import (
    MultiplicityVector,
    chi_character,
    delta_poly,
    half_multiplicities,
    inner,
    lower_cone,
    orbit_sum,
    partitions_in_box,
    weyl_generators,
)
from .varkappa import VarkappaParams

MAX_DUMP = 10


class Report:
    def __init__(self, name: str):
        self.name = name
        self.checked = 0
        self.failures: list = []
        self.extra: dict = {}
        self._t0 = time.perf_counter()

    def check(self, ok: bool, detail) -> None:
        self.checked += 1
        if not ok:
            if len(self.failures) < MAX_DUMP:
                self.failures.append(detail)
            self.extra["failed"] = self.extra.get("failed", 0) + 1

    def done(self) -> dict:
        out = {
            "name": self.name,
            "pass": not self.extra.get("failed"),
            "checked": self.checked,
            "failures": self.failures,
            "seconds": round(time.perf_counter() - self._t0, 3),
        }
        out.update({k: v for k, v in self.extra.items() if k != "failed"})
        out["failed"] = self.extra.get("failed", 0)
        return out


def random_multiplicities(count: int = 5, seed: int = 2024) -> list[MultiplicityVector]:
    """Random rational ``r`` with ``rho_r`` strictly dominant (``r2 > 0`` and ``r1/2 + r3 > 0``)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        r1 = Fraction(rng.randint(0, 12), rng.randint(1, 7))
        r2 = Fraction(rng.randint(1, 12), rng.randint(1, 7))
        r3 = Fraction(rng.randint(1, 12), rng.randint(1, 7))
        out.append(MultiplicityVector(r1, r2, r3))
    return out


# operator / Jack


def check_dual_path(rs: Sequence[MultiplicityVector], top: Sequence[int] = (3, 2, 1)) -> dict:
    rep = Report("apply_T == apply_T_series")
    for r in rs:
        for nu in lower_cone(top):
            f = orbit_sum(nu)
            rep.check(apply_T(f, r) == apply_T_series(f, r), {"r": str(r), "nu": list(nu)})
    return rep.done()


def check_triangularity(rs: Sequence[MultiplicityVector], max_size: int = 5, max_n: int = 3) -> dict:
    rep = Report("triangularity and diagonal")
    for r in rs:
        for n in range(1, max_n + 1):
            for mu in partitions_in_box(n, max_size):
                try:
                    M = operator_matrix(mu, r)
                except AssertionError as exc:
                    rep.check(False, {"r": str(r), "mu": list(mu), "error": str(exc)})
                    continue
                ok = all(
                    M.diag[nu] == eigenvalue_tilde(nu, r) for nu in M.cone
                ) and all(
                    k != nu and nu in M.cone and k in M.cone and _dominated(nu, k)
                    for (k, nu) in M.offdiag
                )
                rep.check(ok, {"r": str(r), "mu": list(mu)})
    return rep.done()


def _dominated(nu, mu) -> bool:
    s = t = 0
    for a, b in zip(nu, mu):
        s, t = s + a, t + b
        if s > t:
            return False
    return True


def check_eigen_relation(rs: Sequence[MultiplicityVector], max_size: int = 5, max_n: int = 3) -> dict:
    rep = Report("apply_T(J) == Et * J")
    for r in rs:
        for n in range(1, max_n + 1):
            for mu in partitions_in_box(n, max_size):
                J = jack(mu, r)
                L = J.to_laurent()
                ok = J.coeff(mu) == 1 and apply_T(L, r) == L.scale(J.eigenvalue)
                rep.check(ok, {"r": str(r), "mu": list(mu)})
    return rep.done()


def check_orthogonality(
    rs: Sequence[MultiplicityVector], n: int = 2, max_size: int = 3, grid: int = 400,
    tol: float = 1e-6, rule: str = "gauss",
) -> dict:
    rep = Report("quadrature orthogonality")
    worst = 0.0
    for r in rs:
        weights = partitions_in_box(n, max_size)
        polys = {mu: jack(mu, r).to_laurent() for mu in weights}
        norms = {mu: inner_product_quadrature(polys[mu], polys[mu], r, grid, rule) for mu in weights}
        for i, a in enumerate(weights):
            for b in weights[i + 1 :]:
                ip = inner_product_quadrature(polys[a], polys[b], r, grid, rule)
                v = abs(ip) / math.sqrt(norms[a] * norms[b])
                worst = max(worst, v)
                rep.check(v < tol, {"r": str(r), "mu": list(a), "nu": list(b), "value": v})
    rep.extra["max_normalized"] = worst
    return rep.done()


# radial


def default_test_function(x) -> float:
    return np.cosh(3 * x[0]) * np.cosh(2 * x[-1]) * (1.5 + np.cos(x[0] * x[-1]))


def check_form_equivalence(
    params: Iterable[VarkappaParams], points: int = 100, h: float = 1e-4, tol: float = 1e-6,
    f: Callable = default_test_function, seed: int = 7,
) -> dict:
    rep = Report("explicit vs conjugated radial operator")
    worst = 0.0
    for p in params:
        e = form_equivalence_check(p, f, points=points, seed=seed, h=h)
        worst = max(worst, e)
        rep.check(e <= tol, {"m": p.m, "n": p.n, "varkappa": list(p.varkappa), "max_rel_err": e})
    rep.extra["max_rel_err"] = worst
    return rep.done()


def check_end_to_end(
    instances: Iterable[VarkappaParams], mus: Sequence[Sequence[int]], points: int = 20,
    h: float = 1e-4, tol: float = 1e-5, seed: int = 11,
) -> dict:
    rep = Report("(Laplacian - u_r)(delta_r J) == 4 (mu + rho_r)^2 delta_r J")
    worst = 0.0
    for p in instances:
        for mu in mus:
            res = end_to_end_check(mu, p, points=points, seed=seed, h=h)
            worst = max(worst, res["max_rel_err"])
            rep.check(res["max_rel_err"] <= tol, {"m": p.m, "varkappa": list(p.varkappa), "mu": list(mu), **res})
    rep.extra["max_rel_err"] = worst
    return rep.done()


# LR


def _family(max_total: int):
    for m in range(1, max_total):
        for n in range(1, m + 1):
            if m + n <= max_total:
                yield m, n


def family_weights(length: int, lo: int, hi: int, max_shifted: int | None) -> list[tuple[int, ...]]:
    """Entries in ``[lo, hi]``, together with every weight of size at most ``max_shifted`` after
    shifting by ``-lo``; sorted for reproducible reports."""
    out = set(gl_weights_in_box(length, lo, hi))
    if max_shifted is not None:
        out.update(gl_weights_of_size(length, lo, max_shifted))
    return sorted(out, reverse=True)


def check_levi_character_membership(
    max_total: int = 5, lo: int = -2, hi: int = 4, krange=(-1, 2), max_shifted: int | None = 12
) -> dict:
    rep = Report("P^(k1,k2) closed form vs LR (and tableau labeling)")
    labelled = 0
    for m, n in _family(max_total):
        lams = family_weights(m + n, lo, hi, max_shifted)
        for k1 in range(krange[0], krange[1] + 1):
            for k2 in range(krange[0], krange[1] + 1):
                for lam in lams:
                    c = membership_P_lr(lam, k1, k2, m, n)
                    closed = membership_P(lam, k1, k2, m, n)
                    detail = {"lambda": list(lam), "k1": k1, "k2": k2, "m": m, "n": n, "c": c}
                    rep.check(closed == (c >= 1) and c <= 1, detail)
                    if c == 1:
                        labelled += 1
                        rep.check(
                            tableau_row_counts_observed(lam, k1, k2, m, n) == tableau_row_counts_predicted(lam, k1, k2, m, n),
                            {**detail, "labeling": True},
                        )
    rep.extra["labelings_checked"] = labelled
    return rep.done()


def check_sphericality(max_total: int = 5, lo: int = -2, hi: int = 4, max_shifted: int | None = 12) -> dict:
    """Closed form vs brute force for sphericality, and the tau-image description."""
    rep = Report("spherical closed form vs LR, and tau image")
    spherical = 0
    for m, n in _family(max_total):
        lams = family_weights(m + n, lo, hi, max_shifted)
        for p in small_varkappa_grid(m, n):
            for lam in lams:
                in_p = membership_P(lam, p.k1, p.k2, m, n)
                mult = spherical_mult(lam, p)
                closed = is_spherical_closed(lam, p)
                image = tau_preimage(lam, p) is not None
                spherical += closed
                ok = closed == (in_p and mult >= 1) and (not in_p or mult <= 1) and image == closed
                rep.check(ok, {"lambda": list(lam), "m": m, "n": n, "varkappa": list(p.varkappa),
                               "mult": mult, "closed": closed, "tau_image": image})
    rep.extra["spherical_found"] = spherical
    return rep.done()


def check_isotypic_uniqueness(max_m: int = 5) -> dict:
    rep = Report("one-dimensional isotypic subspace by interlacing")
    for m in range(1, max_m + 1):
        for n in range(1, m + 1):
            for p in small_varkappa_grid(m, n):
                w, _ = levi_weights(p)
                detail = {"m": m, "n": n, "varkappa": list(p.varkappa)}
                rep.check(count_chains(w, n, (p.k1,) * (m - n)) == 1, {**detail, "route": "to GL(m-n)"})
                rep.check(count_chains(w, m - n, (p.kt1,) * n) == 1, {**detail, "route": "to GL(n)"})
                if m > n:
                    # only nu = kt1 1^n pairs with k1 1^(m-n) under GL(n) x GL(m-n)
                    partners = [
                        nu for nu in gl_weights_in_box(n, min(w), max(w))
                        if lr_coefficient_shifted(w, nu, (p.k1,) * (m - n))
                    ]
                    ok = partners == [(p.kt1,) * n] and lr_coefficient_shifted(w, partners[0], (p.k1,) * (m - n)) == 1
                    rep.check(ok, {**detail, "partners": [list(v) for v in partners]})
    return rep.done()


# Weyl group and Casimirs

WEYL_KAPPAS = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (2, 1, 1)]


def check_weyl_equivariance(kappas=WEYL_KAPPAS, max_n: int = 3) -> dict:
    rep = Report("delta_kappa character and half-period sign")
    for k in kappas:
        kappa = MultiplicityVector(*k)
        for n in range(1, max_n + 1):
            d = delta_poly(kappa, n)
            for w in weyl_generators(n):
                rep.check(d.weyl_act(w) == d.scale(chi_character(w, kappa)),
                          {"kappa": list(k), "n": n, "w": [list(w.perm), list(w.signs)]})
            for j in range(n):
                rep.check(d.substitute_sign(j) == d.scale((-1) ** k[0]),
                          {"kappa": list(k), "n": n, "half_period": j})
    return rep.done()


def check_spherical_equivariance(max_n: int = 3) -> dict:
    """``delta_kappa J`` for admissible nonnegative kappa transforms by the same character."""
    rep = Report("spherical function character")
    for n in range(1, max_n + 1):
        for vk in [(0, 0, 1, 0), (0, 0, 1, 1), (1, 1, 3, 2), (0, 0, 2, 1)]:
            p = VarkappaParams.from_list(n, n, vk)
            for mu in partitions_in_box(n, 2):
                f = spherical_psi(mu, p)
                for w in weyl_generators(n):
                    rep.check(f.weyl_act(w) == f.scale(chi_character(w, p.kappa)),
                              {"n": n, "varkappa": list(vk), "mu": list(mu)})
                for j in range(n):
                    rep.check(f.substitute_sign(j) == f.scale((-1) ** int(p.kappa.p1)),
                              {"n": n, "varkappa": list(vk), "mu": list(mu), "half_period": j})
    return rep.done()


def check_casimir(samples: int = 200, seed: int = 5, max_j: int = 3, max_n: int = 3) -> dict:
    rep = Report("Casimir eigenvalue identities")
    rng = random.Random(seed)
    for _ in range(samples):
        N = rng.randint(1, 6)
        lam = sorted((rng.randint(-6, 6) for _ in range(N)), reverse=True)
        rho = gl_rho(N)
        two_rho = [2 * a for a in rho]
        rep.check(casimir_eigenvalue(lam, 2) == inner(lam, [a + b for a, b in zip(lam, two_rho)]),
                  {"lambda": lam, "identity": "order 2"})
    for n in range(1, max_n + 1):
        for p in small_varkappa_grid(n, n):
            if p.k1 + p.k2:
                continue
            for mu in partitions_in_box(n, 3):
                for j in range(1, max_j + 1):
                    even = casimir_on_spherical(mu, p, 2 * j)
                    odd = casimir_on_spherical(mu, p, 2 * j + 1)
                    detail = {"n": n, "varkappa": list(p.varkappa), "mu": list(mu), "j": j}
                    rep.check(even == degenerate_casimir(mu, p, 2 * j), {**detail, "order": 2 * j})
                    rep.check(odd == 0, {**detail, "order": 2 * j + 1})
    # general case: leading coefficients in mu -> t mu
    for m in range(1, max_n + 2):
        for n in range(1, min(m, max_n) + 1):
            for p in small_varkappa_grid(m, n)[::7]:
                for mu0 in partitions_in_box(n, 2)[:-1]:
                    for j in range(1, max_j + 1):
                        power = sum(Fraction(a) ** (2 * j) for a in mu0)
                        top, _ = casimir_leading_coefficient(mu0, p, 2 * j)
                        otop, osub = casimir_leading_coefficient(mu0, p, 2 * j + 1)
                        detail = {"m": m, "n": n, "varkappa": list(p.varkappa), "mu0": list(mu0), "j": j}
                        rep.check(top == 2 * power, {**detail, "kind": "even leading"})
                        rep.check(otop == 0 and osub == (2 * j + 1) * (p.k1 + p.k2) * power,
                                  {**detail, "kind": "odd leading"})
    return rep.done()


# suites

ACCEPT_VARKAPPAS = [(0, 0, 0, 0), (0, 0, 1, 0), (1, 0, 1, 1), (1, -1, 2, 0), (2, 1, 2, 1), (1, 1, 3, 2)]
END_TO_END = [(2, (0, 0, 1, 0)), (3, (1, 0, 1, 1)), (4, (1, 1, 3, 2))]
END_TO_END_MUS = [(1, 0), (1, 1), (2, 1)]


def form_equivalence_params() -> list[VarkappaParams]:
    return [VarkappaParams.from_list(2 + d, 2, vk) for d in (0, 1, 2) for vk in ACCEPT_VARKAPPAS]


def end_to_end_params() -> list[VarkappaParams]:
    return [VarkappaParams.from_list(m, 2, vk) for m, vk in END_TO_END]


def ortho_params() -> list[MultiplicityVector]:
    return [half_multiplicities(2 + d, 2) for d in (0, 1)]


SUITES: dict[str, list[Callable[[], dict]]] = {
    "operator": [
        lambda: check_dual_path(random_multiplicities()),
        lambda: check_triangularity(random_multiplicities()),
        lambda: check_eigen_relation(random_multiplicities()),
    ],
    "lr": [check_levi_character_membership, check_sphericality, check_isotypic_uniqueness],
    "radial": [
        lambda: check_form_equivalence(form_equivalence_params()),
        lambda: check_end_to_end(end_to_end_params(), END_TO_END_MUS),
        check_casimir,
        check_weyl_equivariance,
        check_spherical_equivariance,
    ],
    "ortho": [lambda: check_orthogonality(ortho_params())],
}


def _run_one(suite: str, index: int) -> dict:
    return SUITES[suite][index]()


def run_battery(suite: str = "all", jobs: int = 1) -> dict:
    """Run one suite or all of them; reports come back in a fixed order."""
    names = list(SUITES) if suite == "all" else [suite]
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
    tasks = [(name, i) for name in names for i in range(len(SUITES[name]))]
    if jobs > 1 and len(tasks) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_run_one, *zip(*tasks)))
    else:
        reports = [_run_one(name, i) for name, i in tasks]
    out = {name: [] for name in names}
    for (name, _), rep in zip(tasks, reports):
        out[name].append(rep)
    return {
        "suite": suite,
        "pass": all(r["pass"] for r in reports),
        "reports": out,
    }

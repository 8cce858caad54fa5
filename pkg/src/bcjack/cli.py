"""Command-line front end: ``bcjack <command> ...``.

Exit status 0 on success, 1 on a computation error or a failed check,
2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cache
from .battery import SUITES, check_orthogonality, run_battery
from .ho_operator import SCHEMA, NotInvariant, TriangularityError, operator_matrix
from .jack import EigenvalueCollision, JackPolynomial, jack
from .laurent import NonExactDivision
from .lr import branch_to_levi, is_spherical_closed, lr_coefficient, lr_coefficient_shifted, membership_P, spherical_mult
from .radial import end_to_end_check
from .rootdata import MultiplicityVector, is_dominant
from .varkappa import VarkappaParams, check_restrk, kappa_of


class InvalidInput(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip() != ""] if text.strip() else []
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _multiplicity(text: str) -> MultiplicityVector:
    try:
        return MultiplicityVector.parse(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise argparse.ArgumentTypeError(f"expected three rationals like 1,1,1/2, got {text!r}") from None


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--jobs", type=_positive_int, default=os.cpu_count() or 1,
                        help="worker processes (default: logical cores)")

    parser = _Parser(prog="bcjack", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("jack", parents=[common], help="Jack polynomial J_mu")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--r", type=_multiplicity, required=True)
    p.add_argument("--mu", type=_int_list, required=True)
    p.add_argument("--no-cache", action="store_true")

    p = sub.add_parser("operator-matrix", parents=[common], help="orbit-sum matrix of T on the cone below mu")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--r", type=_multiplicity, required=True)
    p.add_argument("--mu", type=_int_list, required=True)
    p.add_argument("--no-cache", action="store_true")

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient c^lambda_{mu nu}")
    p.add_argument("--lambda", dest="lam", type=_int_list, required=True)
    p.add_argument("--mu", type=_int_list, required=True)
    p.add_argument("--nu", type=_int_list, required=True)

    p = sub.add_parser("branch", parents=[common], help="restriction GL(m+n) -> GL(m) x GL(n)")
    p.add_argument("--lambda", dest="lam", type=_int_list, required=True)
    p.add_argument("--m", type=_positive_int, required=True)
    p.add_argument("--n", type=_positive_int, required=True)

    def varkappa_args(p):
        p.add_argument("--m", type=_positive_int, required=True)
        p.add_argument("--n", type=_positive_int, required=True)
        p.add_argument("--varkappa", type=_int_list, required=True, help="k1,k2,kt1,kv")

    p = sub.add_parser("spherical", parents=[common], help="sphericality of L_lambda")
    varkappa_args(p)
    p.add_argument("--lambda", dest="lam", type=_int_list, required=True)

    p = sub.add_parser("radial-check", parents=[common], help="finite-difference eigen-check of delta_r J_mu")
    varkappa_args(p)
    p.add_argument("--mu", type=_int_list, required=True)
    p.add_argument("--points", type=_positive_int, default=20)
    p.add_argument("--h", type=float, default=1e-4)
    p.add_argument("--tol", type=float, default=1e-5)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("ortho-check", parents=[common], help="quadrature orthogonality of Jack polynomials")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--r", type=_multiplicity, required=True)
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--grid", type=_positive_int, default=400)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--rule", choices=("gauss", "trapezoid"), default="gauss")

    p = sub.add_parser("battery", parents=[common], help="run property batteries")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    return parser


def _weight(mu, n: int) -> tuple[int, ...]:
    mu = tuple(mu) + (0,) * (n - len(mu))
    if len(mu) != n or not is_dominant(mu):
        raise InvalidInput(f"mu must be a dominant weight with {n} entries, got {mu}")
    return mu


def _varkappa(args) -> VarkappaParams:
    try:
        return VarkappaParams.from_list(args.m, args.n, args.varkappa)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None


def _jack_obj(mu, r: MultiplicityVector, use_cache: bool) -> dict:
    params = {"n": len(mu), "r": r.to_json_obj(), "mu": list(mu)}
    return cache.cached("jack", params, lambda: jack(mu, r).to_json_obj(), use_cache)


def cmd_jack(args) -> tuple[dict, int]:
    mu = _weight(args.mu, args.n)
    return _jack_obj(mu, args.r, not args.no_cache), 0


def cmd_operator_matrix(args) -> tuple[dict, int]:
    mu = _weight(args.mu, args.n)
    params = {"n": args.n, "r": args.r.to_json_obj(), "mu": list(mu)}
    obj = cache.cached(
        "operator-matrix", params, lambda: operator_matrix(mu, args.r, jobs=args.jobs).to_json_obj(),
        not args.no_cache,
    )
    return obj, 0


def cmd_lr(args) -> tuple[dict, int]:
    lam, mu, nu = args.lam, args.mu, args.nu
    if any(a < 0 for a in (*lam, *mu, *nu)):
        if len(lam) != len(mu) + len(nu):
            raise InvalidInput("weights with negative entries need len(lambda) == len(mu) + len(nu)")
        c = lr_coefficient_shifted(lam, mu, nu)
    else:
        c = lr_coefficient(lam, mu, nu)
    return {"schema": SCHEMA, "lambda": lam, "mu": mu, "nu": nu, "c": c}, 0


def cmd_branch(args) -> tuple[dict, int]:
    terms = branch_to_levi(args.lam, args.m, args.n)
    return {
        "schema": SCHEMA,
        "lambda": args.lam,
        "m": args.m,
        "n": args.n,
        "terms": [{"zeta": list(z), "tau": list(t), "mult": c} for z, t, c in terms],
    }, 0


def cmd_spherical(args) -> tuple[dict, int]:
    p = _varkappa(args)
    if not check_restrk(kappa_of(p)):
        raise InvalidInput(f"kappa = {kappa_of(p)} violates k3 >= k1 + k3 >= 0")
    lam = args.lam
    if len(lam) != p.m + p.n:
        raise InvalidInput(f"lambda needs {p.m + p.n} entries")
    return {
        "schema": SCHEMA,
        "lambda": lam,
        "closed_form": is_spherical_closed(lam, p),
        "multiplicity": spherical_mult(lam, p),
        "in_P": membership_P(lam, p.k1, p.k2, p.m, p.n),
    }, 0


def cmd_radial_check(args) -> tuple[dict, int]:
    p = _varkappa(args)
    if not check_restrk(kappa_of(p)):
        raise InvalidInput(f"kappa = {kappa_of(p)} violates k3 >= k1 + k3 >= 0")
    mu = _weight(args.mu, p.n)
    res = end_to_end_check(mu, p, points=args.points, seed=args.seed, h=args.h)
    ok = res["max_rel_err"] <= args.tol
    return {"schema": SCHEMA, **res, "tol": args.tol, "pass": ok}, 0 if ok else 1


def cmd_ortho_check(args) -> tuple[dict, int]:
    rep = check_orthogonality([args.r], n=args.n, max_size=args.max_size, grid=args.grid,
                              tol=args.tol, rule=args.rule)
    out = {"schema": SCHEMA, "max_normalized": rep["max_normalized"], "pairs": rep["checked"],
           "pass": rep["pass"], "failures": rep["failures"]}
    return out, 0 if rep["pass"] else 1


def cmd_battery(args) -> tuple[dict, int]:
    res = run_battery(args.suite, jobs=args.jobs)
    return {"schema": SCHEMA, **res}, 0 if res["pass"] else 1


COMMANDS = {
    "jack": cmd_jack,
    "operator-matrix": cmd_operator_matrix,
    "lr": cmd_lr,
    "branch": cmd_branch,
    "spherical": cmd_spherical,
    "radial-check": cmd_radial_check,
    "ortho-check": cmd_ortho_check,
    "battery": cmd_battery,
}


def _text(command: str, obj: dict) -> str:
    if command == "jack":
        J = JackPolynomial.from_json_obj(obj)
        terms = " + ".join(f"{c} m_{tuple(nu)}" for nu, c in J.coeffs.items())
        return f"J_{J.mu} = {terms}\neigenvalue {J.eigenvalue}"
    if command == "battery":
        lines = []
        for name, reps in obj["reports"].items():
            for r in reps:
                lines.append(f"[{'PASS' if r['pass'] else 'FAIL'}] {name}: {r['name']} ({r['checked']} checks)")
        lines.append("all passed" if obj["pass"] else "FAILURES")
        return "\n".join(lines)
    return "\n".join(f"{k}: {json.dumps(v)}" for k, v in obj.items() if k != "schema")


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        obj, status = COMMANDS[args.command](args)
    except (InvalidInput, NotInvariant) as exc:
        print(f"bcjack: invalid input: {exc}", file=sys.stderr)
        return 2
    except (EigenvalueCollision, NonExactDivision, TriangularityError, ArithmeticError) as exc:
        print(f"bcjack: computation error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"bcjack: invalid input: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")
    else:
        sys.stdout.write(_text(args.command, obj) + "\n")
    return status


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

"""BC_n root data: roots, multiplicities, rho vectors, the hyperoctahedral Weyl
group, dominance order, orbit sums and generalized Weyl denominators."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .laurent import LaurentPoly

Weight = tuple[int, ...]

SHORT, MEDIUM, LONG = "short", "medium", "long"


def parse_rational(text) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, float):
        raise TypeError("rationals must be given exactly, not as floats")
    return Fraction(str(text).strip())


@dataclass(frozen=True)
class MultiplicityVector:
    """Values on the short, medium and long root orbits."""

    p1: Fraction
    p2: Fraction
    p3: Fraction

    def __post_init__(self):
        for name in ("p1", "p2", "p3"):
            object.__setattr__(self, name, parse_rational(getattr(self, name)))

    @classmethod
    def of(cls, *values) -> "MultiplicityVector":
        if len(values) == 1 and not isinstance(values[0], (int, Fraction, str)):
            values = tuple(values[0])
        if len(values) != 3:
            raise ValueError("a multiplicity vector has three entries")
        return cls(*values)

    @classmethod
    def parse(cls, text: str) -> "MultiplicityVector":
        return cls.of(*[s for s in text.split(",")])

    def __iter__(self):
        return iter((self.p1, self.p2, self.p3))

    def __add__(self, other: "MultiplicityVector") -> "MultiplicityVector":
        return MultiplicityVector(self.p1 + other.p1, self.p2 + other.p2, self.p3 + other.p3)

    def for_tag(self, tag: str) -> Fraction:
        return {SHORT: self.p1, MEDIUM: self.p2, LONG: self.p3}[tag]

    def is_integral(self) -> bool:
        return all(p.denominator == 1 for p in self)

    def to_json_obj(self) -> list[str]:
        return [str(p) for p in self]

    def __str__(self) -> str:
        return ",".join(str(p) for p in self)


@dataclass(frozen=True)
class BCRootSystem:
    n: int

    @property
    def positive_roots(self) -> list[tuple[Weight, str]]:
        return positive_roots(self.n)


@lru_cache(maxsize=None)
def _positive_roots(n: int) -> tuple[tuple[Weight, str], ...]:
    roots = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        roots.append((tuple(e), SHORT))
    for i, j in itertools.combinations(range(n), 2):
        for sgn in (-1, 1):
            e = [0] * n
            e[i], e[j] = 1, sgn
            roots.append((tuple(e), MEDIUM))
    for i in range(n):
        e = [0] * n
        e[i] = 2
        roots.append((tuple(e), LONG))
    return tuple(roots)


def positive_roots(n: int) -> list[tuple[Weight, str]]:
    """Short ``e_i``, medium ``e_i -+ e_j`` (i<j) and long ``2 e_i`` positive roots."""
    return list(_positive_roots(n))


def half_multiplicities(m: int, n: int) -> MultiplicityVector:
    """Half root multiplicities of the pair GL(m+n) / GL(m) x GL(n)."""
    if n < 1 or m < n:
        raise ValueError(f"need m >= n >= 1, got m={m}, n={n}")
    return MultiplicityVector(Fraction(m - n), Fraction(1), Fraction(1, 2))


def rho_vector(p: MultiplicityVector, n: int) -> tuple[Fraction, ...]:
    """Half the multiplicity-weighted sum of positive roots (closed form)."""
    return tuple(p.p1 / 2 + p.p3 + p.p2 * (n - 1 - i) for i in range(n))


def rho_vector_from_roots(p: MultiplicityVector, n: int) -> tuple[Fraction, ...]:
    acc = [Fraction(0)] * n
    for root, tag in positive_roots(n):
        c = p.for_tag(tag)
        for i, a in enumerate(root):
            acc[i] += c * a
    return tuple(a / 2 for a in acc)


def inner(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def is_dominant(w: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(w, w[1:])) and (len(w) == 0 or w[-1] >= 0)


def _require_dominant(w: Sequence[int]) -> None:
    if not is_dominant(w):
        raise ValueError(f"{tuple(w)} is not a dominant BC weight")


def dominance_le(nu: Sequence[int], mu: Sequence[int]) -> bool:
    """``nu <= mu`` iff every partial sum of ``nu`` is at most that of ``mu``.

    Short roots are positive, so no equality of totals is required.
    """
    _require_dominant(nu)
    _require_dominant(mu)
    if len(nu) != len(mu):
        raise ValueError("weights of different rank")
    s = t = 0
    for a, b in zip(nu, mu):
        s += a
        t += b
        if s > t:
            return False
    return True


def _cone_key(w: Weight):
    return (-sum(w), tuple(-a for a in w))


@lru_cache(maxsize=None)
def _lower_cone(mu: Weight) -> tuple[Weight, ...]:
    n = len(mu)
    bounds = list(itertools.accumulate(mu))
    out = []

    def rec(prefix: list[int], total: int, cap: int):
        i = len(prefix)
        if i == n:
            out.append(tuple(prefix))
            return
        for a in range(min(cap, bounds[i] - total), -1, -1):
            prefix.append(a)
            rec(prefix, total + a, a)
            prefix.pop()

    rec([], 0, mu[0] if n else 0)
    out.sort(key=_cone_key)
    return tuple(out)


def lower_cone(mu: Sequence[int]) -> list[Weight]:
    """All dominant ``nu <= mu``, each listed after every larger element."""
    mu = tuple(int(a) for a in mu)
    _require_dominant(mu)
    return list(_lower_cone(mu))


@dataclass(frozen=True)
class WeylElement:
    """Signed permutation: coordinate ``i`` goes to ``perm[i]`` with sign ``signs[i]``."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"invalid permutation {self.perm}")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"invalid signs {self.signs}")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        return cls(tuple(range(n)), (1,) * n)

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "WeylElement":
        p = list(range(n))
        p[i], p[j] = p[j], p[i]
        return cls(tuple(p), (1,) * n)

    @classmethod
    def flip(cls, n: int, i: int) -> "WeylElement":
        s = [1] * n
        s[i] = -1
        return cls(tuple(range(n)), tuple(s))

    def act(self, v: Sequence) -> tuple:
        out = [0] * self.n
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] = s * v[i]
        return tuple(out)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """``self o other``: act by ``other`` first."""
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        signs = tuple(self.signs[other.perm[i]] * other.signs[i] for i in range(self.n))
        return WeylElement(perm, signs)

    def perm_sign(self) -> int:
        sign, seen = 1, [False] * self.n
        for i in range(self.n):
            if seen[i]:
                continue
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = self.perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def det(self) -> int:
        d = self.perm_sign()
        for s in self.signs:
            d *= s
        return d


def weyl_generators(n: int) -> list[WeylElement]:
    gens = [WeylElement.transposition(n, i, i + 1) for i in range(n - 1)]
    gens += [WeylElement.flip(n, i) for i in range(n)]
    return gens


def weyl_group(n: int) -> Iterator[WeylElement]:
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            yield WeylElement(perm, signs)


def orbit(weight: Sequence[int]) -> list[Weight]:
    """Distinct signed permutations of ``weight``, sorted."""
    w = tuple(weight)
    pts = set()
    for perm in set(itertools.permutations(w)):
        nz = [i for i, a in enumerate(perm) if a]
        for signs in itertools.product((1, -1), repeat=len(nz)):
            v = list(perm)
            for i, s in zip(nz, signs):
                v[i] *= s
            pts.add(tuple(v))
    return sorted(pts)


@lru_cache(maxsize=4096)
def _orbit_sum(lam: Weight) -> LaurentPoly:
    n = len(lam)
    return LaurentPoly(n, {tuple(2 * a for a in v): 1 for v in orbit(lam)})


def orbit_sum(lam: Sequence[int]) -> LaurentPoly:
    """``m_lam = sum over the W-orbit of lam of u^(2 nu)``."""
    lam = tuple(int(a) for a in lam)
    _require_dominant(lam)
    return _orbit_sum(lam)


def sinh_poly(root: Sequence[int]) -> LaurentPoly:
    """``sinh(alpha(x)) = (u^alpha - u^-alpha) / 2``."""
    root = tuple(root)
    return LaurentPoly(
        len(root),
        {root: Fraction(1, 2), tuple(-a for a in root): Fraction(-1, 2)},
    )


@lru_cache(maxsize=256)
def _delta_poly(kappa: MultiplicityVector, n: int) -> LaurentPoly:
    result = LaurentPoly.constant(n, 1)
    for root, tag in positive_roots(n):
        k = int(kappa.for_tag(tag))
        if k:
            result = result * sinh_poly(root) ** k
    return result


def delta_poly(kappa: MultiplicityVector, n: int) -> LaurentPoly:
    """Product over positive roots of ``sinh(alpha)^kappa_alpha`` as a Laurent polynomial."""
    if not kappa.is_integral() or any(k < 0 for k in kappa):
        raise ValueError(f"delta exponents must be nonnegative integers, got {kappa}")
    return _delta_poly(kappa, n)


def chi_character(w: WeylElement, kappa: MultiplicityVector) -> int:
    """``chi0^(k1+k3) * chi1^(k1+k2+k3)`` with chi0 = det, chi1 = permutation sign."""
    if not kappa.is_integral():
        raise ValueError("the character needs integral kappa")
    k1, k2, k3 = (int(k) for k in kappa)
    chi0, chi1 = w.det(), w.perm_sign()
    return chi0 ** ((k1 + k3) % 2) * chi1 ** ((k1 + k2 + k3) % 2)


def to_dominant(v: Sequence[int]) -> Weight:
    return tuple(sorted((abs(a) for a in v), reverse=True))


def partitions_in_box(n: int, max_size: int) -> list[Weight]:
    """Dominant BC weights of rank ``n`` with ``|mu| <= max_size``, in cone order."""
    out = []

    def rec(prefix, total, cap):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for a in range(min(cap, max_size - total), -1, -1):
            rec(prefix + [a], total + a, a)

    rec([], 0, max_size)
    out.sort(key=_cone_key)
    return out

"""Twisting parameters for the pair GL(m+n) / GL(m) x GL(n)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .rootdata import MultiplicityVector, half_multiplicities, rho_vector


@dataclass(frozen=True)
class VarkappaParams:
    """``varkappa = (k1, k2, kt1, kv)`` together with the sizes ``m >= n >= 1``."""

    m: int
    n: int
    k1: int
    k2: int
    kt1: int
    kv: int

    def __post_init__(self):
        for name in ("m", "n", "k1", "k2", "kt1", "kv"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v:
                raise ValueError(f"{name} must be an integer, got {v!r}")
            object.__setattr__(self, name, int(v))
        if self.n < 1 or self.m < self.n:
            raise ValueError(f"need m >= n >= 1, got m={self.m}, n={self.n}")

    @classmethod
    def from_list(cls, m: int, n: int, varkappa: Sequence[int]) -> "VarkappaParams":
        if len(varkappa) != 4:
            raise ValueError("varkappa has four entries k1,k2,kt1,kv")
        return cls(m, n, *varkappa)

    @property
    def varkappa(self) -> tuple[int, int, int, int]:
        return (self.k1, self.k2, self.kt1, self.kv)

    @property
    def kappa(self) -> MultiplicityVector:
        return kappa_of(self)

    @property
    def s(self) -> MultiplicityVector:
        return half_multiplicities(self.m, self.n)

    @property
    def r(self) -> MultiplicityVector:
        return self.kappa + self.s

    @property
    def hat(self) -> Fraction:
        return Fraction(self.k1 + self.k2, 2)

    def rho_kappa(self) -> tuple[Fraction, ...]:
        return rho_vector(self.kappa, self.n)

    def rho_r(self) -> tuple[Fraction, ...]:
        return rho_vector(self.r, self.n)


def kappa_of(p: VarkappaParams) -> MultiplicityVector:
    return MultiplicityVector(p.k2 - p.k1, p.kv, p.kt1 - p.k2)


def check_restrk(kappa: MultiplicityVector) -> bool:
    """``k3 >= k1 + k3 >= 0``."""
    k1, _, k3 = kappa
    return k3 >= k1 + k3 >= 0


def tau(nu: Sequence, p: VarkappaParams) -> tuple[int, ...]:
    """``(nu_1 + h, ..., nu_n + h, k1 x (m-n), h - nu_n, ..., h - nu_1)`` with ``h = (k1+k2)/2``."""
    if len(nu) != p.n:
        raise ValueError(f"expected {p.n} entries, got {len(nu)}")
    h = p.hat
    vals = [Fraction(a) + h for a in nu] + [Fraction(p.k1)] * (p.m - p.n)
    vals += [h - Fraction(a) for a in reversed(nu)]
    if any(v.denominator != 1 for v in vals):
        raise ValueError(f"tau{tuple(nu)} is not integral")
    return tuple(int(v) for v in vals)

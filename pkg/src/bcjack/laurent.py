"""Exact multivariate Laurent polynomials over the rationals.

Variables are ``u_i = exp(x_i)``; a polynomial is a finite map from integer
exponent vectors to nonzero :class:`fractions.Fraction` coefficients.
"""

from __future__ import annotations

import heapq
import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

Exponent = tuple[int, ...]


class NonExactDivision(ArithmeticError):
    """Raised by :meth:`LaurentPoly.exact_div` when the divisor does not divide."""

    def __init__(self, remainder: "LaurentPoly", message: str = "") -> None:
        self.remainder = remainder
        super().__init__(message or f"nonzero remainder with {len(remainder)} terms")


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(c)


class LaurentPoly:
    """Immutable Laurent polynomial in ``n`` variables.

    Equality is structural: two polynomials are equal iff they have the same
    variable count and the same nonzero terms.
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exponent, object] | None = None) -> None:
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        clean: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(k) for k in e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {n}")
            c = _as_fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                if not clean[e]:
                    del clean[e]
        self.n = n
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict[Exponent, Fraction]) -> "LaurentPoly":
        # terms must already be clean: tuples of length n, nonzero Fractions
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    # construction helpers
    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c=1) -> "LaurentPoly":
        c = _as_fraction(c)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def monomial(cls, exponent: Sequence[int], c=1) -> "LaurentPoly":
        e = tuple(int(k) for k in exponent)
        c = _as_fraction(c)
        return cls._raw(len(e), {e: c} if c else {})

    @classmethod
    def variable(cls, n: int, i: int) -> "LaurentPoly":
        e = [0] * n
        e[i] = 1
        return cls.monomial(e)

    # container protocol
    @property
    def terms(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in canonical (lexicographic exponent) order."""
        return sorted(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(self.n, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self.n}, {self.to_str()})"

    def to_str(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self.items()):
            mono = "*".join(
                f"u{i + 1}" if k == 1 else f"u{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # ring operations
    def _check(self, other: "LaurentPoly") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(self.n, other)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v += c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return LaurentPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def scale(self, c) -> "LaurentPoly":
        c = _as_fraction(c)
        if not c:
            return LaurentPoly.zero(self.n)
        return LaurentPoly._raw(self.n, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check(other)
        out: dict[Exponent, Fraction] = {}
        get = out.get
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.n, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are not Laurent polynomials in general")
        result = LaurentPoly.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exponent: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial ``u^exponent``."""
        d = tuple(exponent)
        return LaurentPoly._raw(
            self.n, {tuple(a + b for a, b in zip(e, d)): c for e, c in self._terms.items()}
        )

    def degree_bounds(self) -> tuple[Exponent, Exponent]:
        """Componentwise (min, max) exponents; undefined for zero."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree bounds")
        keys = list(self._terms)
        lo = tuple(min(e[i] for e in keys) for i in range(self.n))
        hi = tuple(max(e[i] for e in keys) for i in range(self.n))
        return lo, hi

    def exact_div(self, g: "LaurentPoly") -> "LaurentPoly":
        """Return ``q`` with ``self == q * g``; raise :class:`NonExactDivision` otherwise.

        Division runs against lexicographic order.  Every term of a true quotient
        lies in the box between the componentwise degree bounds of ``self`` and
        ``g``, so the first quotient term outside that box proves a remainder.
        """
        self._check(g)
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return LaurentPoly.zero(self.n)
        n = self.n
        lead_g = max(g._terms)
        lead_c = g._terms[lead_g]
        g_items = list(g._terms.items())
        flo, fhi = self.degree_bounds()
        glo, ghi = g.degree_bounds()
        qlo = tuple(a - b for a, b in zip(flo, glo))
        qhi = tuple(a - b for a, b in zip(fhi, ghi))

        rem = dict(self._terms)
        heap = [tuple(-k for k in e) for e in rem]
        heapq.heapify(heap)
        quot: dict[Exponent, Fraction] = {}
        while rem:
            key = heapq.heappop(heap)
            e = tuple(-k for k in key)
            c = rem.get(e)
            if c is None:
                continue
            qe = tuple(a - b for a, b in zip(e, lead_g))
            if any(not (lo <= k <= hi) for lo, k, hi in zip(qlo, qe, qhi)):
                raise NonExactDivision(LaurentPoly._raw(n, rem))
            qc = c / lead_c
            quot[qe] = qc
            for ge, gc in g_items:
                te = tuple(a + b for a, b in zip(qe, ge))
                v = rem.get(te)
                if v is None:
                    rem[te] = -qc * gc
                    heapq.heappush(heap, tuple(-k for k in te))
                else:
                    v -= qc * gc
                    if v:
                        rem[te] = v
                    else:
                        del rem[te]
        return LaurentPoly._raw(n, quot)

    # calculus and symmetry
    def directional_derivative(self, direction: Sequence[int]) -> "LaurentPoly":
        """Derivative along ``direction`` in the x-coordinates: ``u^e -> (e . d) u^e``."""
        d = tuple(direction)
        if len(d) != self.n:
            raise ValueError("direction has wrong length")
        out = {}
        for e, c in self._terms.items():
            k = sum(a * b for a, b in zip(e, d))
            if k:
                out[e] = c * k
        return LaurentPoly._raw(self.n, out)

    def laplacian(self) -> "LaurentPoly":
        out = {}
        for e, c in self._terms.items():
            k = sum(a * a for a in e)
            if k:
                out[e] = c * k
        return LaurentPoly._raw(self.n, out)

    def map_exponents(self, fn) -> "LaurentPoly":
        """Apply an injective map to every exponent vector."""
        return LaurentPoly._raw(self.n, {tuple(fn(e)): c for e, c in self._terms.items()})

    def weyl_act(self, w) -> "LaurentPoly":
        """Act by a signed permutation (anything with an ``act`` method on vectors)."""
        if w.n != self.n:
            raise ValueError("Weyl element acts on a different rank")
        return self.map_exponents(w.act)

    def substitute_sign(self, j: int) -> "LaurentPoly":
        """Substitute ``u_j -> -u_j``."""
        return LaurentPoly._raw(
            self.n, {e: (-c if e[j] % 2 else c) for e, c in self._terms.items()}
        )

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.n, Fraction(0))

    def evaluate(self, point):
        """Evaluate at ``u = point``.

        ``point`` is a sequence of ``n`` nonzero numbers, or of ``n`` numpy arrays
        broadcast against each other.  Terms are summed in canonical order.
        """
        if len(point) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(point)}")
        coords = [np.asarray(p) for p in point]
        for p in coords:
            if np.any(p == 0):
                raise ZeroDivisionError("Laurent polynomial evaluated at a zero coordinate")
        total = 0
        for e, c in self.items():
            term = float(c)
            for p, k in zip(coords, e):
                if k:
                    term = term * p ** k if k > 0 else term / p ** (-k)
            total = total + term
        if np.ndim(total) == 0:
            return complex(total) if np.iscomplexobj(total) else float(total)
        return total

    def evaluate_exp(self, x):
        """Evaluate at ``u_i = exp(x_i)``; ``x`` may be complex and/or array valued."""
        xs = [np.asarray(xi) for xi in x]
        if len(xs) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(xs)}")
        total = 0
        for e, c in self.items():
            phase = sum(k * xi for k, xi in zip(e, xs) if k)
            total = total + float(c) * np.exp(phase)
        return total

    # serialization
    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"e": list(e), "c": str(c)} for e, c in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "LaurentPoly":
        n = int(obj["n"])
        terms: dict[Exponent, Fraction] = {}
        for t in obj["terms"]:
            e = tuple(int(k) for k in t["e"])
            if e in terms:
                raise ValueError(f"duplicate exponent {e}")
            terms[e] = Fraction(t["c"])
        return cls(n, terms)

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        return cls.from_json_obj(json.loads(text))


def arith(f: LaurentPoly, g, op: str) -> LaurentPoly:
    """Dispatch ``add``/``sub``/``mul``/``scale`` by name."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "scale":
        return f.scale(g)
    raise ValueError(f"unknown operation {op!r}")


def poly_sum(polys: Iterable[LaurentPoly], n: int) -> LaurentPoly:
    out: dict[Exponent, Fraction] = {}
    for p in polys:
        for e, c in p._terms.items():
            out[e] = out.get(e, 0) + c
    return LaurentPoly._raw(n, {e: c for e, c in out.items() if c})

"""Littlewood-Richardson coefficients, GL branching, and the closed-form
sphericality criteria for GL(m+n) / GL(m) x GL(n)."""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .rootdata import is_dominant
from .varkappa import VarkappaParams, check_restrk, kappa_of, tau

Partition = tuple[int, ...]


def normalize_partition(parts: Sequence[int]) -> Partition:
    p = [int(a) for a in parts]
    if any(a < 0 for a in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"{tuple(parts)} is not a partition")
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def is_gl_dominant(w: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(w, w[1:]))


def _require_gl_dominant(w: Sequence[int]) -> None:
    if not is_gl_dominant(w):
        raise ValueError(f"{tuple(w)} is not weakly decreasing")


def is_lattice_word(word) -> bool:
    """Every prefix has at least as many ``i`` as ``i+1``.  Accepts ints or a digit string."""
    counts: dict[int, int] = {}
    for s in word:
        s = int(s)
        counts[s] = counts.get(s, 0) + 1
        if s > 1 and counts[s] > counts.get(s - 1, 0):
            return False
    return True


class SkewShape:
    def __init__(self, outer: Sequence[int], inner: Sequence[int]):
        self.outer = normalize_partition(outer)
        self.inner = normalize_partition(inner)
        if len(self.inner) > len(self.outer) or any(
            b > a for a, b in zip(self.outer, self.inner)
        ):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    def inner_at(self, i: int) -> int:
        return self.inner[i] if i < len(self.inner) else 0

    def rows(self) -> list[range]:
        return [range(self.inner_at(i), a) for i, a in enumerate(self.outer)]

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)


def lr_tableaux(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> Iterator[list[list[int]]]:
    """LR tableaux of shape ``lam / mu`` and content ``nu``.

    Yields row-indexed fillings (``filling[i][k]`` is the label of cell
    ``(i, mu_i + k)``).  Cells are filled in reading order, right to left and
    top to bottom, so the lattice condition is checked on every prefix.
    """
    lam, mu, nu = (normalize_partition(p) for p in (lam, mu, nu))
    if sum(lam) != sum(mu) + sum(nu) or len(mu) > len(lam) or any(
        b > a for a, b in zip(lam, mu)
    ):
        return
    shape = SkewShape(lam, mu)
    cells = [(i, j) for i, row in enumerate(shape.rows()) for j in reversed(row)]
    label: dict[tuple[int, int], int] = {}
    counts = [0] * (len(nu) + 1)

    def rec(k: int):
        if k == len(cells):
            yield [[label[(i, j)] for j in row] for i, row in enumerate(shape.rows())]
            return
        i, j = cells[k]
        hi = min(len(nu), i + 1)
        if (i, j + 1) in label:
            hi = min(hi, label[(i, j + 1)])
        lo = 1
        if (i - 1, j) in label:
            lo = label[(i - 1, j)] + 1
        for x in range(lo, hi + 1):
            if counts[x] >= nu[x - 1]:
                continue
            if x > 1 and counts[x] + 1 > counts[x - 1]:
                continue
            counts[x] += 1
            label[(i, j)] = x
            yield from rec(k + 1)
            del label[(i, j)]
            counts[x] -= 1

    yield from rec(0)


@lru_cache(maxsize=100_000)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    return sum(1 for _ in lr_tableaux(lam, mu, nu))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """``c^lam_{mu nu}`` by exhaustive tableau count; 0 on size or containment failure."""
    return _lr(*(normalize_partition(p) for p in (lam, mu, nu)))


def shift_to_partitions(*weights: Sequence[int]) -> tuple[int, list[tuple[int, ...]]]:
    """Smallest ``l >= 0`` making every entry nonnegative, and the shifted weights."""
    low = min((a for w in weights for a in w), default=0)
    ell = max(0, -low)
    return ell, [tuple(a + ell for a in w) for w in weights]


def lr_coefficient_shifted(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """GL(m+n) -> GL(m) x GL(n) multiplicity of ``L_mu x L_nu`` in ``L_lam``.

    All three weights are shifted by the same ``l * 1`` so that they become
    partitions with at most ``m+n``, ``m`` and ``n`` parts.
    """
    if len(lam) != len(mu) + len(nu):
        raise ValueError(f"lengths {len(lam)} != {len(mu)} + {len(nu)}")
    for w in (lam, mu, nu):
        _require_gl_dominant(w)
    _, (a, b, c) = shift_to_partitions(lam, mu, nu)
    return lr_coefficient(a, b, c)


def weyl_dimension(lam: Sequence[int]) -> int:
    """Dimension of the GL(len(lam)) irreducible with highest weight ``lam``."""
    _require_gl_dominant(lam)
    num = den = 1
    for i, j in itertools.combinations(range(len(lam)), 2):
        num *= lam[i] - lam[j] + j - i
        den *= j - i
    return num // den


def _bounded_dominant(lo: Sequence[int], hi: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing vectors with ``lo[i] <= v[i] <= hi[i]``."""
    k = len(lo)

    def rec(prefix, cap):
        i = len(prefix)
        if i == k:
            yield tuple(prefix)
            return
        for a in range(min(hi[i], cap), lo[i] - 1, -1):
            yield from rec(prefix + [a], a)

    yield from rec([], hi[0] if k else 0)


def branch_to_levi(lam: Sequence[int], m: int, n: int) -> list[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """``L_lam`` restricted to GL(m) x GL(n): triples ``(zeta, tau, mult)`` with ``mult > 0``."""
    lam = tuple(int(a) for a in lam)
    if len(lam) != m + n:
        raise ValueError(f"expected {m + n} entries")
    _require_gl_dominant(lam)
    out = []
    total = sum(lam)
    for zeta in _bounded_dominant(lam[n:], lam[:m]):
        for t in _bounded_dominant(lam[m:], lam[:n]):
            if sum(zeta) + sum(t) != total:
                continue
            c = lr_coefficient_shifted(lam, zeta, t)
            if c:
                out.append((zeta, t, c))
    return out


def interlace_branch(lam: Sequence[int]) -> list[tuple[int, ...]]:
    """GL(m) -> GL(m-1): all ``mu`` with ``lam_1 >= mu_1 >= lam_2 >= ... >= mu_{m-1} >= lam_m``."""
    lam = tuple(int(a) for a in lam)
    if len(lam) < 2:
        raise ValueError("need m >= 2")
    _require_gl_dominant(lam)
    ranges = [range(lam[i + 1], lam[i] + 1) for i in range(len(lam) - 1)]
    return [tuple(v) for v in itertools.product(*ranges)]


def count_chains(start: Sequence[int], steps: int, target: Sequence[int]) -> int:
    """Number of interlacing chains from ``start`` down ``steps`` ranks ending at ``target``;
    the multiplicity of ``L_target`` in the restriction to the smaller GL."""
    layer = {tuple(start): 1}
    for _ in range(steps):
        nxt: dict[tuple[int, ...], int] = {}
        for w, c in layer.items():
            if len(w) == 1:
                nxt[()] = nxt.get((), 0) + c
                continue
            for v in interlace_branch(w):
                nxt[v] = nxt.get(v, 0) + c
        layer = nxt
    return layer.get(tuple(target), 0)


# closed-form criteria


def membership_P(lam: Sequence[int], k1: int, k2: int, m: int, n: int) -> bool:
    """``L_lam`` contains ``det^k1 x det^k2`` of GL(m) x GL(n) (closed form).

    Pair sums ``k1 + k2``, middle block ``k1``, ``lam_n >= k1``, and
    ``lam_{m+1} <= k1``.  The last condition follows from the others unless
    ``m == n`` and ``k2 > k1``.
    """
    lam = tuple(lam)
    if len(lam) != m + n:
        raise ValueError(f"expected {m + n} entries")
    _require_gl_dominant(lam)
    pairs = all(lam[j] + lam[m + n - 1 - j] == k1 + k2 for j in range(n))
    middle = all(a == k1 for a in lam[n:m])
    return pairs and middle and lam[n - 1] >= k1 and lam[m] <= k1


def membership_P_lr(lam: Sequence[int], k1: int, k2: int, m: int, n: int) -> int:
    """The same multiplicity by tableau count."""
    return lr_coefficient_shifted(lam, (k1,) * m, (k2,) * n)


def tableau_row_counts_predicted(lam: Sequence[int], k1: int, k2: int, m: int, n: int) -> dict[tuple[int, int], int]:
    """Predicted number of ``i`` in row ``m+j`` of the unique tableau for
    ``c^lam_{k1 1^m, k2 1^n}``: ``lam'_{i-j} - lam'_{i-j+1}`` with ``lam'_0 = k1+k2+2l``
    in the shifted coordinates, zero for ``i < j``."""
    ell, (shifted,) = shift_to_partitions(tuple(lam) + (k1, k2))
    lam_s = shifted[: m + n]
    ext = (k1 + k2 + 2 * ell,) + lam_s
    out = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            out[(i, j)] = ext[i - j] - ext[i - j + 1] if i >= j else 0
    return out


def tableau_row_counts_observed(lam: Sequence[int], k1: int, k2: int, m: int, n: int) -> dict[tuple[int, int], int] | None:
    """Layer counts of the tableau for ``c^lam_{k1 1^m, k2 1^n}``, or None unless it is unique."""
    _, (a, b, c) = shift_to_partitions(lam, (k1,) * m, (k2,) * n)
    tabs = list(itertools.islice(lr_tableaux(a, b, c), 2))
    if len(tabs) != 1:
        return None
    rows = tabs[0]
    out = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            row = rows[m + j - 1] if m + j - 1 < len(rows) else []
            out[(i, j)] = sum(1 for x in row if x == i)
    return out


def levi_weights(p: VarkappaParams) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Highest weights ``(w, v)`` of the K-type ``U_varkappa`` on GL(m) and GL(n).

    ``w = (kt1 x n, k1 x (m-n))`` and ``v = c 1^n + kv (n-1, -1, ..., -1)`` with
    ``c = k1 + k2 - kt1``; the second factor has the ``1^n`` component ``c`` and
    ``kv`` copies of the adjoint-like highest weight ``(n-1, -1, ..., -1)``.
    """
    w = (p.kt1,) * p.n + (p.k1,) * (p.m - p.n)
    c = p.k1 + p.k2 - p.kt1
    v = tuple(c + p.kv * (p.n - 1 if i == 0 else -1) for i in range(p.n))
    return w, v


def spherical_mult(lam: Sequence[int], p: VarkappaParams) -> int:
    """Multiplicity of ``U_varkappa`` in ``L_lam`` restricted to GL(m) x GL(n), by tableau count."""
    lam = tuple(lam)
    if len(lam) != p.m + p.n:
        raise ValueError(f"expected {p.m + p.n} entries")
    w, v = levi_weights(p)
    if not is_gl_dominant(v):
        raise ValueError(f"U_varkappa needs kv >= 0, got {p.kv}")
    return lr_coefficient_shifted(lam, w, v)


def is_spherical_closed(lam: Sequence[int], p: VarkappaParams) -> bool:
    """Pair sums ``k1+k2``, middle block ``k1``, ``lam_n >= kt1`` and ``lam_i - lam_{i+1} >= kv`` (i < n)."""
    lam = tuple(lam)
    m, n = p.m, p.n
    if len(lam) != m + n:
        raise ValueError(f"expected {m + n} entries")
    _require_gl_dominant(lam)
    pairs = all(lam[j] + lam[m + n - 1 - j] == p.k1 + p.k2 for j in range(n))
    middle = all(a == p.k1 for a in lam[n:m])
    gaps = all(lam[i] - lam[i + 1] >= p.kv for i in range(n - 1))
    return pairs and middle and lam[n - 1] >= p.kt1 and gaps


def tau_preimage(lam: Sequence[int], p: VarkappaParams) -> tuple[int, ...] | None:
    """The ``mu`` in P_+^BC with ``tau(mu + rho_kappa) == lam``, if any."""
    rho = p.rho_kappa()
    mu = [Fraction(lam[i]) - p.hat - rho[i] for i in range(p.n)]
    if any(a.denominator != 1 for a in mu):
        return None
    mu = tuple(int(a) for a in mu)
    if not is_dominant(mu):
        return None
    return mu if tau([a + b for a, b in zip(mu, rho)], p) == tuple(lam) else None


def spherical_weights(p: VarkappaParams, max_size: int) -> list[tuple[int, ...]]:
    """``tau(mu + rho_kappa)`` for dominant ``mu`` with ``|mu| <= max_size``."""
    from .rootdata import partitions_in_box

    if not check_restrk(kappa_of(p)):
        raise ValueError("kappa violates k3 >= k1 + k3 >= 0")
    rho = p.rho_kappa()
    return [tau([a + b for a, b in zip(mu, rho)], p) for mu in partitions_in_box(p.n, max_size)]


def small_varkappa_grid(m: int, n: int, lo: int = -1, hi: int = 2) -> list[VarkappaParams]:
    """All integer ``varkappa`` in ``[lo, hi]^4`` with ``kv >= 0`` satisfying the restriction on kappa."""
    out = []
    for vk in itertools.product(range(lo, hi + 1), repeat=4):
        if vk[3] < 0:
            continue
        p = VarkappaParams.from_list(m, n, vk)
        if check_restrk(kappa_of(p)):
            out.append(p)
    return out


def gl_weights_in_box(length: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    return list(_bounded_dominant([lo] * length, [hi] * length))


def gl_weights_of_size(length: int, lo: int, max_size: int) -> list[tuple[int, ...]]:
    """Weakly decreasing ``lam`` with entries ``>= lo`` and ``sum(lam_i - lo) <= max_size``."""
    return [w for w in _bounded_dominant([lo] * length, [lo + max_size] * length)
            if sum(a - lo for a in w) <= max_size]

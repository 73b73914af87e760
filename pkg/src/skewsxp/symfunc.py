"""Exact symmetric-function arithmetic in the Schur and monomial bases, and a
brute-force oracle for s_tau (s_{lam/mu} o p_r).

The oracle never touches ribbons, quotients or lattice words.  It works with
dominant monomial coefficients (the coefficient of x^beta for a partition
beta), which determine a homogeneous symmetric function, and converts back to
the Schur basis by unitriangular elimination against Kostka numbers.
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import DegreeMismatch, NotUnitriangularConsistent
from .partitions import Partition, SkewShape, as_partition, is_partition, pad, partitions


class SchurExpansion(Mapping):
    """Sparse integer combination of Schur functions, keyed by partition.

    Zero coefficients are dropped; iteration is in reverse-lexicographic
    order of the index partitions.
    """

    def __init__(self, terms: Mapping | Sequence = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, int] = {}
        for lam, c in items:
            lam = as_partition(lam)
            acc[lam] = acc.get(lam, 0) + int(c)
        self._terms = {lam: acc[lam] for lam in sorted(acc, reverse=True) if acc[lam]}
        sizes = {sum(lam) for lam in self._terms}
        if len(sizes) > 1:
            raise DegreeMismatch(f"inhomogeneous expansion with degrees {sorted(sizes)}")

    def __getitem__(self, lam) -> int:
        return self._terms[as_partition(lam)]

    def get(self, lam, default=0):
        return self._terms.get(as_partition(lam), default)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    @property
    def degree(self) -> int | None:
        return sum(next(iter(self._terms))) if self._terms else None

    def __add__(self, other: Mapping) -> SchurExpansion:
        return SchurExpansion(list(self.items()) + list(other.items()))

    def __neg__(self) -> SchurExpansion:
        return SchurExpansion({k: -v for k, v in self.items()})

    def __sub__(self, other: Mapping) -> SchurExpansion:
        return self + (-SchurExpansion(other))

    def scale(self, c: int) -> SchurExpansion:
        return SchurExpansion({k: c * v for k, v in self.items()})

    def to_json(self) -> dict[str, int]:
        return {"[" + ",".join(map(str, lam)) + "]": c for lam, c in self._terms.items()}

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*s{list(lam)}" for lam, c in self._terms.items()).replace("+ -", "- ")


def schur(lam: Sequence[int]) -> SchurExpansion:
    return SchurExpansion({as_partition(lam): 1})


# Kostka numbers by peeling horizontal strips off the outer shape.

@lru_cache(maxsize=None)
def _strips_off(outer: Partition, inner: Partition, m: int) -> tuple[Partition, ...]:
    """Partitions rho with inner <= rho and outer/rho a horizontal strip of size m."""
    n = len(outer)
    inner_p = inner + (0,) * (n - len(inner))
    out = []
    rho = [0] * n

    def rec(i: int, left: int):
        if i == n:
            if left == 0:
                k = n
                while k and not rho[k - 1]:
                    k -= 1
                out.append(tuple(rho[:k]))
            return
        below = outer[i + 1] if i + 1 < n else 0
        lo = max(below, inner_p[i], outer[i] - left)
        for x in range(outer[i], lo - 1, -1):
            rho[i] = x
            rec(i + 1, left - (outer[i] - x))

    rec(0, m)
    return tuple(out)


@lru_cache(maxsize=None)
def _kostka(outer: Partition, inner: Partition, alpha: Partition) -> int:
    if not alpha:
        return 1 if outer == inner else 0
    rest = alpha[:-1]
    return sum(_kostka(rho, inner, rest) for rho in _strips_off(outer, inner, alpha[-1]))


def kostka(shape: SkewShape | Sequence[int], alpha: Sequence[int]) -> int:
    """|SSYT(shape, alpha)| for any composition ``alpha``.

    Uses the symmetry of skew Schur functions to key the cache on the sorted
    content.
    """
    if not isinstance(shape, SkewShape):
        shape = SkewShape(as_partition(shape), ())
    if any(x < 0 for x in alpha) or sum(alpha) != shape.size:
        return 0
    key = tuple(sorted((x for x in alpha if x), reverse=True))
    return _kostka(shape.outer, shape.inner, key)


# Monomial <-> Schur.

def schur_to_dominant(e: Mapping) -> dict[Partition, int]:
    """Coefficient of x^mu for every partition mu of the degree."""
    e = SchurExpansion(e)
    if e.degree is None:
        return {}
    out = {}
    for mu in partitions(e.degree):
        c = sum(coeff * kostka(lam, mu) for lam, coeff in e.items())
        if c:
            out[mu] = c
    return out


def _dominated(mu: Partition, lam: Partition) -> bool:
    a = b = 0
    for i in range(len(mu)):
        a += mu[i]
        b += lam[i] if i < len(lam) else 0
        if a > b:
            return False
    return True


def dominant_to_schur(v: Mapping) -> SchurExpansion:
    """Invert :func:`schur_to_dominant`.

    Keys may be arbitrary exponent vectors; non-partition keys must agree with
    their sorted rearrangement, as they would for a symmetric function.
    """
    dominant: dict[Partition, int] = {}
    sizes = set()
    for key, c in v.items():
        key = tuple(key)
        sizes.add(sum(key))
        lam = as_partition(sorted(key, reverse=True))
        if is_partition(key):
            dominant[lam] = dominant.get(lam, 0) + c
    for key, c in v.items():
        key = tuple(key)
        if not is_partition(key):
            lam = as_partition(sorted(key, reverse=True))
            if dominant.get(lam, 0) != c:
                raise NotUnitriangularConsistent(f"coefficient of x^{key} is {c} but x^{lam} has {dominant.get(lam, 0)}")
    if len(sizes) > 1:
        raise NotUnitriangularConsistent(f"mixed degrees {sorted(sizes)}")
    if not sizes:
        return SchurExpansion()
    d = sizes.pop()
    residual = {mu: dominant.get(mu, 0) for mu in partitions(d)}
    order = list(partitions(d))  # reverse lexicographic: a linear extension of dominance, top first
    out = {}
    for idx, lam in enumerate(order):
        c = residual[lam]
        if not c:
            continue
        out[lam] = c
        for mu in order[idx:]:
            if not _dominated(mu, lam):
                continue
            k = kostka(lam, mu)
            if k:
                residual[mu] -= c * k
    if any(residual.values()):
        raise NotUnitriangularConsistent("nonzero residue after elimination")
    return SchurExpansion(out)


def skew_schur(s: SkewShape) -> SchurExpansion:
    """Schur expansion of s_{outer/inner} from skew Kostka numbers."""
    return dominant_to_schur({mu: kostka(s, mu) for mu in partitions(s.size)})


def inner_product(e1: Mapping, e2: Mapping) -> int:
    e1, e2 = SchurExpansion(e1), SchurExpansion(e2)
    if e1.degree is not None and e2.degree is not None and e1.degree != e2.degree:
        raise DegreeMismatch(f"degrees {e1.degree} and {e2.degree}")
    return sum(c * e2.get(lam) for lam, c in e1.items())


def _bounded_splits(nu: Sequence[int], total: int, step: int = 1) -> Iterator[tuple[int, ...]]:
    """Exponent vectors gamma with 0 <= gamma <= nu, entries divisible by
    ``step`` and summing to ``total``."""
    n = len(nu)
    room = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        room[i] = room[i + 1] + nu[i] - nu[i] % step
    gamma = [0] * n

    def rec(i: int, left: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            if left == 0:
                yield tuple(gamma)
            return
        lo = max(0, left - room[i + 1])
        lo += (-lo) % step
        for x in range(lo, min(nu[i], left) + 1, step):
            gamma[i] = x
            yield from rec(i + 1, left - x)
        gamma[i] = 0

    if total % step == 0:
        yield from rec(0, total)


def _monomial_coefficient(e: SchurExpansion, beta: Sequence[int]) -> int:
    return sum(c * kostka(lam, beta) for lam, c in e.items())


def schur_product(*factors: Mapping) -> SchurExpansion:
    """Product by convolution of monomial coefficients."""
    result = SchurExpansion({(): 1})
    for f in factors:
        f = SchurExpansion(f)
        if not f:
            return SchurExpansion()
        d1, d2 = result.degree, f.degree
        v = {}
        for nu in partitions(d1 + d2):
            total = 0
            for gamma in _bounded_splits(nu, d2):
                beta = tuple(x - y for x, y in zip(nu, gamma))
                a = _monomial_coefficient(result, beta)
                if a:
                    total += a * _monomial_coefficient(f, gamma)
            if total:
                v[nu] = total
        result = dominant_to_schur(v)
    return result


def plethysm_monomial_coefficient(s: SkewShape, r: int, gamma: Sequence[int]) -> int:
    """[x^gamma] (s_{lam/mu} o p_r): substitute x_i -> x_i^r."""
    if any(x % r for x in gamma):
        return 0
    return kostka(s, [x // r for x in gamma])


def oracle_product_plethysm(tau: Sequence[int], s: SkewShape, r: int) -> SchurExpansion:
    """s_tau * (s_{lam/mu} o p_r) by brute-force monomial convolution."""
    tau = as_partition(tau)
    d = sum(tau) + r * s.size
    v = {}
    for nu in partitions(d):
        total = 0
        for gamma in _bounded_splits(nu, r * s.size, r):
            beta = [x - y for x, y in zip(nu, gamma)]
            a = kostka(tau, beta)
            if a:
                total += a * plethysm_monomial_coefficient(s, r, gamma)
        if total:
            v[nu] = total
    return dominant_to_schur(v)

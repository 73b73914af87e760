"""s_tau (s_{lam/mu} o p_r) in the Schur basis.

Two independent routes are provided.  :func:`sxp_expand` runs the signed
pipeline: Jacobi-Trudi over Sym_l, ribbon tableaux for each term, the quotient
bijection to multitableaux, then cancellation by the involution ``G`` with the
superstandard tableau u(mu) appended.  :func:`sxp_direct` sums
``sgn_r * lr_coefficient`` over skew multipartitions.  They must agree.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .abacus import canonical_beads, r_quotient, sgn_r, star
from .coplactic import G, is_latticed, lr_coefficient
from .partitions import (
    Partition,
    SignedPermutation,
    SkewMultiShape,
    SkewShape,
    as_partition,
    dot_action,
    enumerate_permutations,
    pad,
    partitions,
    partitions_containing,
    skew,
)
from .ribbon import RibbonTableau, enumerate_ribbon_tableaux, ribbon_tableaux_from, ribbon_to_multitableau
from .symfunc import SchurExpansion
from .tableaux import append, append_tableau, superstandard


@dataclass(frozen=True)
class JacobiTrudiTerm:
    g: SignedPermutation
    alpha: tuple[int, ...]  # g . lam - mu


def jacobi_trudi_terms(s: SkewShape) -> tuple[list[JacobiTrudiTerm], int]:
    """Surviving terms of the Jacobi-Trudi expansion of s_{lam/mu} and the
    number dropped because ``g . lam - mu`` has a negative entry."""
    length = len(s.outer)
    mu = pad(s.inner, length)
    kept = []
    dropped = 0
    for g in enumerate_permutations(length):
        alpha = tuple(a - b for a, b in zip(dot_action(g, s.outer), mu))
        if any(x < 0 for x in alpha):
            dropped += 1
        else:
            kept.append(JacobiTrudiTerm(g, alpha))
    return kept, dropped


@dataclass
class ShapeTally:
    """What happens to the summands contributing to one output shape nu."""

    nu: Partition
    sign: int  # sgn_r(nu / tau)
    per_term: dict[tuple[int, ...], int] = field(default_factory=dict)  # g (one-line) -> ribbon tableaux
    summands: int = 0
    cancelled: int = 0
    survivors: int = 0
    signed_total: int = 0

    @property
    def coefficient(self) -> int:
        return self.sign * self.survivors

    def to_json(self) -> dict:
        return {
            "nu": list(self.nu),
            "sign": self.sign,
            "per_term": {"".join(map(str, g)): c for g, c in sorted(self.per_term.items())},
            "summands": self.summands,
            "cancelled": self.cancelled,
            "survivors": self.survivors,
            "coefficient": self.coefficient,
        }


class PipelineError(AssertionError):
    """The involution failed to pair summands as it must."""


def _cancel(tallies: dict[Partition, ShapeTally], items: list[tuple[JacobiTrudiTerm, RibbonTableau]],
            lam: Partition, mu: Partition, r: int, tau: Partition) -> None:
    """Group summands by output shape, apply G to each and count fixed points.

    Every non-fixed summand must map to another summand of the opposite sign
    in the same group; this is checked, not assumed.
    """
    groups: dict[Partition, list[tuple[JacobiTrudiTerm, RibbonTableau]]] = defaultdict(list)
    for term, T in items:
        groups[T.shape.outer].append((term, T))
    u = superstandard(mu)
    for nu, members in groups.items():
        tally = tallies.get(nu)
        if tally is None:
            tally = tallies[nu] = ShapeTally(nu, sgn_r(SkewShape(nu, tau), r))
        images = {}
        for term, T in members:
            t = append_tableau(ribbon_to_multitableau(T), mu)
            images[t] = term.g.sign
            tally.per_term[term.g.images] = tally.per_term.get(term.g.images, 0) + 1
            tally.summands += 1
            tally.signed_total += term.g.sign * tally.sign
        for t, sign in images.items():
            image = G(t, lam)
            if image == t:
                if sign != 1 or not is_latticed(t):
                    raise PipelineError(f"fixed point {t} is not a latticed identity-term summand")
                tally.survivors += 1
                continue
            if image[-1] != u or images.get(image) != -sign or G(image, lam) != t:
                raise PipelineError(f"G does not pair {t} with a summand of opposite sign")
            tally.cancelled += 1
        if tally.signed_total != tally.coefficient:
            raise PipelineError(f"signed count {tally.signed_total} != survivors at {nu}")


def _summands(tau: Partition, s: SkewShape, r: int, nu: Partition | None) -> tuple[list[JacobiTrudiTerm], int, list]:
    terms, dropped = jacobi_trudi_terms(s)
    items = []
    for term in terms:
        if nu is None:
            tableaux = ribbon_tableaux_from(tau, term.alpha, r)
        else:
            tableaux = enumerate_ribbon_tableaux(skew(nu, tau), term.alpha, r)
        items.extend((term, T) for T in tableaux)
    return terms, dropped, items


def _run(tau: Sequence[int], s: SkewShape, r: int, nu: Sequence[int] | None = None):
    tau = as_partition(tau)
    nu = None if nu is None else as_partition(nu)
    lam, mu = s.outer, pad(s.inner, len(s.outer))
    terms, dropped, items = _summands(tau, s, r, nu)
    tallies: dict[Partition, ShapeTally] = {}
    _cancel(tallies, items, lam, mu, r, tau)
    return terms, dropped, tallies


def sxp_expand(tau: Sequence[int], s: SkewShape, r: int) -> SchurExpansion:
    """s_tau (s_{lam/mu} o p_r) by the signed ribbon-tableau pipeline."""
    _, _, tallies = _run(tau, s, r)
    return SchurExpansion({nu: t.coefficient for nu, t in tallies.items()})


def sxp_coefficient(tau: Sequence[int], s: SkewShape, r: int, nu: Sequence[int]) -> int:
    """A single coefficient, restricting every stage to the outer shape ``nu``."""
    _, _, tallies = _run(tau, s, r, nu)
    tally = tallies.get(as_partition(nu))
    return tally.coefficient if tally else 0


@dataclass
class PipelineTrace:
    tau: Partition
    shape: SkewShape
    r: int
    terms: list[JacobiTrudiTerm]
    dropped: int
    shapes: dict[Partition, ShapeTally]

    def to_json(self) -> dict:
        return {
            "tau": list(self.tau),
            "skew": [list(self.shape.outer), list(self.shape.inner)],
            "r": self.r,
            "jacobi_trudi": {
                "terms": len(self.terms) + self.dropped,
                "kept": [{"g": list(t.g.images), "sign": t.g.sign, "alpha": list(t.alpha)} for t in self.terms],
                "dropped": self.dropped,
            },
            "shapes": [self.shapes[nu].to_json() for nu in sorted(self.shapes, reverse=True)],
        }


def pipeline_trace(tau: Sequence[int], s: SkewShape, r: int, nu: Sequence[int] | None = None) -> PipelineTrace:
    """Per-stage counts, optionally restricted to one output shape."""
    terms, dropped, tallies = _run(tau, s, r, nu)
    return PipelineTrace(as_partition(tau), s, r, terms, dropped, tallies)


# The closed formula: iterate skew multipartitions directly.

def skew_multipartitions(tau: Sequence[int], n: int, r: int) -> Iterator[SkewMultiShape]:
    """All ``nu/tau`` in quotient form: r-tuples nu(i)/tau(i) of total size n,
    where tau(i) runs over the r-quotient of ``tau``."""
    tau = as_partition(tau)
    inner = r_quotient(tau, r, canonical_beads(len(tau), r))
    for sizes in _compositions(n, r):
        choices = [
            [SkewShape(o, t) for o in partitions_containing(t, sum(t) + k)]
            for t, k in zip(inner, sizes)
        ]
        yield from itertools.product(*choices)


def _compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def sxp_direct(tau: Sequence[int], s: SkewShape, r: int) -> SchurExpansion:
    """sum over nu/tau of sgn_r * c^lam_{(nu/tau : mu)} s_nu."""
    tau = as_partition(tau)
    out = {}
    for q in skew_multipartitions(tau, s.size, r):
        c = lr_coefficient(s.outer, append(q, s.inner))
        if c:
            nu = star(q, tau, r)
            out[nu] = sgn_r(SkewShape(nu, tau), r) * c
    return SchurExpansion(out)


def sxp_classic(lam: Sequence[int], r: int) -> SchurExpansion:
    """s_lam o p_r: sum over r-multipartitions nu of n of sgn_r(nu*) c^lam_nu s_{nu*}."""
    lam = as_partition(lam)
    n = sum(lam)
    out = {}
    for sizes in _compositions(n, r):
        for comps in itertools.product(*(list(partitions(k)) for k in sizes)):
            q = tuple(SkewShape(c, ()) for c in comps)
            c = lr_coefficient(lam, q)
            if c:
                nu = star(q, (), r)
                out[nu] = sgn_r(SkewShape(nu, ()), r) * c
    return SchurExpansion(out)


# The case r = 1.

def product_r1(tau: Sequence[int], s: SkewShape) -> SchurExpansion:
    """s_tau s_{lam/mu} = sum_nu c^lam_{(nu/tau, mu)} s_nu."""
    tau = as_partition(tau)
    out = {}
    for nu in partitions_containing(tau, sum(tau) + s.size):
        c = lr_coefficient(s.outer, (SkewShape(nu, tau), SkewShape(s.inner, ())))
        if c:
            out[nu] = c
    return SchurExpansion(out)


def skew_expand(s: SkewShape) -> SchurExpansion:
    """s_{nu/tau} = sum_lam c^nu_{(lam, tau)} s_lam."""
    out = {}
    for lam in partitions(s.size):
        c = lr_coefficient(s.outer, (SkewShape(lam, ()), SkewShape(s.inner, ())))
        if c:
            out[lam] = c
    return SchurExpansion(out)


def skew_inner_product(s1: SkewShape, s2: SkewShape) -> int:
    """<s_{nu/tau}, s_{lam/mu}> as c^lam_{(nu/tau, mu)}."""
    if s1.size != s2.size:
        return 0
    return lr_coefficient(s2.outer, (s1, SkewShape(s2.inner, ())))

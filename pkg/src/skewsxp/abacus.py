"""r-runner abaci: quotients, cores, the star construction and r-signs.

A partition ``p`` with ``b`` beads occupies positions ``p_i + b - i`` for
``i = 1..b``.  Position ``beta`` lies on runner ``beta % r`` at level
``beta // r``.  The public quotient functions use the smallest bead count that
is a multiple of ``r`` and at least the number of parts; any other multiple of
``r`` gives the same answer, while a bead count ``b = r*k + s`` shifts the
quotient cyclically ``s`` places to the right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BadBeadCount, IllegalMove, NotComponentwiseSkew, QuotientMismatch
from .partitions import Partition, SkewMultiShape, SkewShape, as_partition, contains, pad, skew


@dataclass(frozen=True)
class Abacus:
    runners: int
    beads: frozenset[int]

    @property
    def bead_count(self) -> int:
        return len(self.beads)

    def runner(self, i: int) -> list[int]:
        """Occupied levels of runner ``i``, lowest level first."""
        return sorted(beta // self.runners for beta in self.beads if beta % self.runners == i)

    def move(self, beta: int, steps: int = 1) -> Abacus:
        """Slide the bead at ``beta`` down ``steps`` levels of its runner."""
        target = beta + steps * self.runners
        if beta not in self.beads or target in self.beads:
            raise IllegalMove(f"cannot move bead {beta} to {target}")
        return Abacus(self.runners, (self.beads - {beta}) | {target})

    def render(self) -> str:
        """ASCII picture, one line per level, ``o`` for a bead and ``-`` for a gap."""
        top = max(self.beads, default=-1) // self.runners
        lines = []
        for level in range(top + 1):
            lines.append(" ".join("o" if level * self.runners + i in self.beads else "-" for i in range(self.runners)))
        return "\n".join(lines)


def canonical_beads(length: int, r: int) -> int:
    """Smallest multiple of ``r`` that is at least ``length``."""
    return -(-length // r) * r


def abacus_from_partition(p: Sequence[int], r: int, beads: int | None = None, *, strict: bool = True) -> Abacus:
    """Encode ``p`` on ``r`` runners.

    ``strict`` enforces the convention that the bead count is a multiple of
    ``r``; pass ``strict=False`` to build the shifted abaci used when studying
    how the quotient depends on that choice.
    """
    p = as_partition(p)
    if r < 1:
        raise ValueError("r must be positive")
    if beads is None:
        beads = canonical_beads(len(p), r)
    if beads < len(p):
        raise BadBeadCount(f"{beads} beads cannot hold {len(p)} parts")
    if strict and beads % r:
        raise BadBeadCount(f"bead count {beads} is not a multiple of {r}")
    q = pad(p, beads)
    return Abacus(r, frozenset(q[i] + beads - 1 - i for i in range(beads)))


def partition_from_abacus(a: Abacus) -> Partition:
    positions = sorted(a.beads, reverse=True)
    b = len(positions)
    return as_partition(positions[i] - (b - 1 - i) for i in range(b))


def _one_runner_partition(levels: Sequence[int]) -> Partition:
    """Partition encoded by the given levels on a single runner."""
    desc = sorted(levels, reverse=True)
    c = len(desc)
    return as_partition(desc[j] - (c - 1 - j) for j in range(c))


def runner_levels(p: Partition, r: int, beads: int | None = None) -> list[list[int]]:
    """Per-runner occupied levels (ascending)."""
    a = abacus_from_partition(p, r, beads, strict=beads is None)
    return [a.runner(i) for i in range(r)]


def partition_from_levels(levels: Sequence[Sequence[int]], r: int) -> Partition:
    positions = [lev * r + i for i, runner in enumerate(levels) for lev in runner]
    return partition_from_abacus(Abacus(r, frozenset(positions)))


def r_quotient(p: Sequence[int], r: int, beads: int | None = None) -> tuple[Partition, ...]:
    p = as_partition(p)
    a = abacus_from_partition(p, r, beads, strict=False)
    return tuple(_one_runner_partition(a.runner(i)) for i in range(r))


def r_core(p: Sequence[int], r: int) -> Partition:
    p = as_partition(p)
    a = abacus_from_partition(p, r)
    levels = [list(range(len(a.runner(i)))) for i in range(r)]
    return partition_from_levels(levels, r)


def r_weight(p: Sequence[int], r: int) -> int:
    """Number of r-border strips removed to reach the core."""
    return sum(sum(q) for q in r_quotient(p, r))


def _shared_beads(s: SkewShape, r: int) -> int:
    return canonical_beads(max(len(s.outer), len(s.inner)), r)


def skew_quotient(s: SkewShape, r: int, beads: int | None = None) -> SkewMultiShape:
    if beads is None:
        beads = _shared_beads(s, r)
    outer = r_quotient(s.outer, r, beads)
    inner = r_quotient(s.inner, r, beads)
    out = []
    for i, (o, n) in enumerate(zip(outer, inner)):
        if not contains(o, n):
            raise NotComponentwiseSkew(f"runner {i}: {n} is not contained in {o}")
        out.append(SkewShape(o, n))
    return tuple(out)


def star(q: Sequence[SkewShape], tau: Sequence[int], r: int) -> Partition:
    """The partition ``nu`` with ``nu/tau`` of r-quotient ``q``."""
    tau = as_partition(tau)
    if len(q) != r:
        raise QuotientMismatch(f"expected {r} components, got {len(q)}")
    beads = canonical_beads(len(tau), r)
    tq = r_quotient(tau, r, beads)
    if tuple(c.inner for c in q) != tq:
        raise QuotientMismatch(f"inner components {[c.inner for c in q]} differ from the {r}-quotient {list(tq)} of {tau}")
    # each runner must carry at least as many beads as its component has parts
    counts = [len(lev) for lev in runner_levels(tau, r, beads)]
    extra = max([0] + [len(c.outer) - counts[i] for i, c in enumerate(q)])
    counts = [c + extra for c in counts]
    levels = []
    for i, c in enumerate(q):
        parts = pad(c.outer, counts[i])
        levels.append([parts[j] + counts[i] - 1 - j for j in range(counts[i])])
    return partition_from_levels(levels, r)


def _matched_moves(s: SkewShape, r: int) -> list[tuple[int, int]] | None:
    """Pair each bead of the inner abacus with its destination in the outer one.

    Beads on a runner keep their relative order.  Returns ``None`` when the
    runners disagree in bead count or a bead would have to move up, i.e. when
    ``s`` is not r-decomposable.
    """
    beads = _shared_beads(s, r)
    a = abacus_from_partition(s.inner, r, beads)
    b = abacus_from_partition(s.outer, r, beads)
    moves = []
    for i in range(r):
        src, dst = a.runner(i), b.runner(i)
        if len(src) != len(dst):
            return None
        for x, y in zip(src, dst):
            if y < x:
                return None
            moves.append((x * r + i, y * r + i))
    return moves


def is_r_decomposable(s: SkewShape, r: int) -> bool:
    return _matched_moves(s, r) is not None


def sgn_r(s: SkewShape, r: int) -> int:
    """The r-sign of ``s``: 0 unless decomposable, else +-1.

    Each single-step move changes the sign by the number of beads jumped over,
    so the total is the parity of the permutation relating source order to
    destination order.
    """
    moves = _matched_moves(s, r)
    if moves is None:
        return 0
    moves.sort()
    dest = [y for _, y in moves]
    inversions = sum(1 for i in range(len(dest)) for j in range(i + 1, len(dest)) if dest[i] > dest[j])
    return -1 if inversions % 2 else 1


def strip_row_number(a: Abacus, beta: int) -> int:
    """Row number of the r-border strip added by moving the bead at ``beta`` one step down."""
    if beta not in a.beads or beta + a.runners in a.beads:
        raise IllegalMove(f"no single-step move from position {beta}")
    return 1 + sum(1 for x in a.beads if x > beta + a.runners)


def quotient_to_json(q: Sequence[SkewShape]) -> list:
    return [list(c.outer) if not c.inner else [list(c.outer), list(c.inner)] for c in q]


def quotient_from_json(data: Sequence) -> SkewMultiShape:
    out = []
    for c in data:
        if c and isinstance(c[0], list):
            out.append(skew(c[0], c[1] if len(c) > 1 else ()))
        else:
            out.append(skew(c))
    return tuple(out)

"""Border strips, horizontal r-ribbon strips and r-ribbon tableaux.

A ribbon tableau is stored as its chain of partitions; the decomposition of
each labelled horizontal strip into r-border strips is unique and recomputed
on demand from the abacus.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .abacus import (
    Abacus,
    canonical_beads,
    partition_from_levels,
    r_quotient,
    runner_levels,
    sgn_r,
    skew_quotient,
    star,
    strip_row_number,
)
from .errors import NotAStrip, NotComponentwiseSkew
from .partitions import Composition, Partition, SkewShape, as_partition, contains, is_proper, pad, skew
from .symfunc import SchurExpansion
from .tableaux import MultiTableau, SkewTableau, content

Box = tuple[int, int]


# Border strips, box level.

def strip_boxes(outer: Partition, inner: Partition) -> list[Box]:
    return SkewShape(outer, inner).boxes()


def is_border_strip(outer: Partition, inner: Partition) -> bool:
    """Nonempty, edge-connected and free of 2x2 blocks."""
    boxes = set(strip_boxes(outer, inner))
    if not boxes:
        return False
    if any({(a, b + 1), (a + 1, b), (a + 1, b + 1)} <= boxes for a, b in boxes):
        return False
    start = next(iter(boxes))
    seen = {start}
    pending = [start]
    while pending:
        a, b = pending.pop()
        for nb in ((a + 1, b), (a - 1, b), (a, b + 1), (a, b - 1)):
            if nb in boxes and nb not in seen:
                seen.add(nb)
                pending.append(nb)
    return len(seen) == len(boxes)


def height(boxes: Iterable[Box]) -> int:
    return len({a for a, _ in boxes}) - 1


def row_number(boxes: Iterable[Box]) -> int:
    """Least (1-indexed) row met."""
    return min(a for a, _ in boxes) + 1


def column_number(boxes) -> int:
    """Least (1-indexed) column met.  Accepts a box collection or a SkewShape."""
    if isinstance(boxes, SkewShape):
        boxes = boxes.boxes()
    return min(b for _, b in boxes) + 1


def removable_rim_hooks(p: Partition, r: int) -> Iterator[Partition]:
    """Partitions obtained from ``p`` by removing an r-rim hook (hook-length rule)."""
    conj = [sum(1 for x in p if x > j) for j in range(p[0] if p else 0)]
    for i, row in enumerate(p):
        for j in range(row):
            leg = conj[j] - i - 1
            if row - j + leg == r:
                q = list(p)
                for k in range(i, i + leg):
                    q[k] = p[k + 1] - 1
                q[i + leg] = j
                yield as_partition(q)


def border_strip_decompositions(s: SkewShape, r: int) -> Iterator[tuple[Partition, ...]]:
    """Every chain ``inner = s0 < s1 < ... = outer`` of r-border strips,
    found by peeling rim hooks off the outer shape.  Independent of abaci."""

    def rec(p: Partition) -> Iterator[tuple[Partition, ...]]:
        if p == s.inner:
            yield (p,)
            return
        for q in removable_rim_hooks(p, r):
            if contains(q, s.inner):
                assert is_border_strip(p, q)
                for chain in rec(q):
                    yield chain + (p,)

    if s.size % r == 0:
        yield from rec(s.outer)


# Horizontal r-ribbon strips.

@dataclass(frozen=True)
class RibbonStrip:
    shape: SkewShape
    r: int
    chain: tuple[Partition, ...]
    row_numbers: tuple[int, ...]

    def strips(self) -> list[list[Box]]:
        return [strip_boxes(b, a) for a, b in zip(self.chain, self.chain[1:])]


def is_horizontal_strip(s: SkewShape, r: int) -> bool:
    """Every quotient component has at most one box in each column."""
    if s.size % r:
        return False
    try:
        q = skew_quotient(s, r)
    except NotComponentwiseSkew:
        return False
    if sgn_r(s, r) == 0:
        return False
    return all(all(c.outer[j + 1] <= c.inner[j] if j < len(c.inner) else c.outer[j + 1] == 0
                   for j in range(len(c.outer) - 1)) for c in q)


def _strip_moves(s: SkewShape, r: int, beads: int | None = None) -> list[int] | None:
    """Single-step bead moves (by start position) turning ``s.inner`` into
    ``s.outer`` with no bead passing the original position of the next bead
    on its runner; ``None`` if impossible."""
    if beads is None:
        beads = canonical_beads(max(len(s.outer), len(s.inner)), r)
    src = runner_levels(s.inner, r, beads)
    dst = runner_levels(s.outer, r, beads)
    moves = []
    for i in range(r):
        if len(src[i]) != len(dst[i]):
            return None
        for j, (x, y) in enumerate(zip(src[i], dst[i])):
            nxt = src[i][j + 1] if j + 1 < len(src[i]) else None
            if y < x or (nxt is not None and y >= nxt):
                return None
            moves.extend(lev * r + i for lev in range(x, y))
    return sorted(moves)


def is_horizontal_strip_by_beads(s: SkewShape, r: int) -> bool:
    return s.size % r == 0 and _strip_moves(s, r) is not None


def strip_chain(s: SkewShape, r: int) -> RibbonStrip:
    moves = _strip_moves(s, r) if s.size % r == 0 else None
    if moves is None:
        raise NotAStrip(f"{s} is not a horizontal {r}-ribbon strip")
    beads = canonical_beads(max(len(s.outer), len(s.inner)), r)
    a = Abacus(r, frozenset(x + beads - 1 - i for i, x in enumerate(pad(s.inner, beads))))
    chain = [s.inner]
    rows = []
    for beta in moves:
        rows.append(strip_row_number(a, beta))
        a = a.move(beta)
        chain.append(_decode(a))
    return RibbonStrip(s, r, tuple(chain), tuple(rows))


def _decode(a: Abacus) -> Partition:
    positions = sorted(a.beads, reverse=True)
    return as_partition(positions[i] - (len(positions) - 1 - i) for i in range(len(positions)))


def horizontal_chains_boxwise(s: SkewShape, r: int) -> list[tuple[Partition, ...]]:
    """Chains of r-border strips with weakly decreasing row numbers (box-level search)."""
    out = []
    for chain in border_strip_decompositions(s, r):
        rows = [row_number(strip_boxes(b, a)) for a, b in zip(chain, chain[1:])]
        if all(rows[i] >= rows[i + 1] for i in range(len(rows) - 1)):
            out.append(chain)
    return out


# Ribbon tableaux.

@dataclass(frozen=True)
class RibbonTableau:
    shape: SkewShape
    r: int
    weight: Composition
    chain: tuple[Partition, ...]  # rho(0) = inner, ..., rho(l) = outer

    @cached_property
    def ribbons(self) -> tuple[RibbonStrip, ...]:
        return tuple(strip_chain(SkewShape(b, a), self.r) for a, b in zip(self.chain, self.chain[1:]))

    def border_strips(self) -> list[tuple[int, int, list[Box]]]:
        """``(label, row number, boxes)`` for every r-border strip."""
        out = []
        for label, rib in enumerate(self.ribbons, start=1):
            for rn, boxes in zip(rib.row_numbers, rib.strips()):
                out.append((label, rn, boxes))
        return out

    def labelling(self) -> dict[Box, tuple[int, int]]:
        """Box -> (label, strip index)."""
        out = {}
        for idx, (label, _, boxes) in enumerate(self.border_strips()):
            for box in boxes:
                out[box] = (label, idx)
        return out


def _horizontal_additions(levels: list[list[int]], size: int, bound: list[list[int]] | None) -> Iterator[list[list[int]]]:
    """Ways to add a horizontal strip of ``size`` r-border strips: each bead
    slides down, never reaching the original level of the bead above it."""
    slots = []
    for i, runner in enumerate(levels):
        for j, x in enumerate(runner):
            cap = runner[j + 1] - 1 if j + 1 < len(runner) else x + size
            if bound is not None:
                cap = min(cap, bound[i][j])
            if cap > x:
                slots.append((i, j, cap - x))
    new = [list(runner) for runner in levels]

    def rec(k: int, left: int) -> Iterator[list[list[int]]]:
        if left == 0:
            yield [list(runner) for runner in new]
            return
        if k == len(slots):
            return
        i, j, room = slots[k]
        base = levels[i][j]
        for d in range(0, min(room, left) + 1):
            new[i][j] = base + d
            yield from rec(k + 1, left - d)
        new[i][j] = base

    yield from rec(0, size)


def _ribbon_chains(tau: Partition, alpha: Sequence[int], r: int, nu: Partition | None) -> Iterator[tuple[Partition, ...]]:
    n = sum(alpha)
    if nu is None:
        beads = canonical_beads(len(tau) + r * n, r)
        bound = None
    else:
        beads = canonical_beads(max(len(nu), len(tau)), r)
        bound = runner_levels(nu, r, beads)
    start = runner_levels(tau, r, beads)
    if bound is not None and any(len(x) != len(y) for x, y in zip(start, bound)):
        return

    def rec(j: int, levels: list[list[int]], chain: tuple[Partition, ...]) -> Iterator[tuple[Partition, ...]]:
        if j == len(alpha):
            if bound is None or levels == bound:
                yield chain
            return
        for nxt in _horizontal_additions(levels, alpha[j], bound):
            yield from rec(j + 1, nxt, chain + (partition_from_levels(nxt, r),))

    yield from rec(0, start, (tau,))


def enumerate_ribbon_tableaux(s: SkewShape, alpha: Sequence[int], r: int) -> Iterator[RibbonTableau]:
    alpha = tuple(alpha)
    if not is_proper(alpha) or s.size != r * sum(alpha):
        return
    for chain in _ribbon_chains(s.inner, alpha, r, s.outer):
        yield RibbonTableau(s, r, alpha, chain)


def ribbon_tableaux_from(tau: Sequence[int], alpha: Sequence[int], r: int) -> Iterator[RibbonTableau]:
    """All r-ribbon tableaux of weight ``alpha`` over ``tau``, any outer shape."""
    tau = as_partition(tau)
    alpha = tuple(alpha)
    if not is_proper(alpha):
        return
    for chain in _ribbon_chains(tau, alpha, r, None):
        yield RibbonTableau(SkewShape(chain[-1], tau), r, alpha, chain)


def count_ribbon_tableaux(s: SkewShape, alpha: Sequence[int], r: int) -> int:
    return sum(1 for _ in enumerate_ribbon_tableaux(s, alpha, r))


def plethystic_mn(tau: Sequence[int], alpha: Sequence[int], r: int) -> SchurExpansion:
    """Schur expansion of s_tau (h_alpha o p_r) by signed ribbon-tableau counts."""
    tau = as_partition(tau)
    counts: dict[Partition, int] = defaultdict(int)
    for T in ribbon_tableaux_from(tau, alpha, r):
        counts[T.shape.outer] += 1
    return SchurExpansion({nu: c * sgn_r(SkewShape(nu, tau), r) for nu, c in counts.items()})


# The quotient bijection.

def _part(p: Partition, a: int) -> int:
    return p[a] if a < len(p) else 0


def ribbon_to_multitableau(T: RibbonTableau) -> MultiTableau:
    beads = canonical_beads(max(len(T.shape.outer), len(T.shape.inner)), T.r)
    q = skew_quotient(T.shape, T.r, beads)
    quotients = [r_quotient(rho, T.r, beads) for rho in T.chain]
    comps = []
    for i, c in enumerate(q):
        rows = []
        for a, (lo, hi) in enumerate(c.row_bounds()):
            row = []
            for b in range(lo, hi):
                label = next(j for j in range(1, len(quotients)) if b < _part(quotients[j][i], a))
                row.append(label)
            rows.append(tuple(row))
        comps.append(SkewTableau(c, tuple(rows)))
    return tuple(comps)


def multitableau_to_ribbon(t: Sequence[SkewTableau], tau: Sequence[int], r: int, length: int | None = None) -> RibbonTableau:
    tau = as_partition(tau)
    weight = content(t, length)
    chain = []
    for j in range(len(weight) + 1):
        q = []
        for c in t:
            inner = pad(c.shape.inner, len(c.shape.outer))
            grown = [inner[a] + sum(1 for x in row if x <= j) for a, row in enumerate(c.rows)]
            q.append(SkewShape(as_partition(grown), c.shape.inner))
        chain.append(star(q, tau, r))
    return RibbonTableau(SkewShape(chain[-1], tau), r, weight, tuple(chain))


# Column words and row-number tableaux.

def column_word(T: RibbonTableau) -> tuple[int, ...]:
    """Scan columns left to right, each bottom to top, recording a strip's
    label the first time one of its boxes is seen."""
    lab = T.labelling()
    seen = set()
    out = []
    for b in sorted({b for _, b in lab}):
        for a in sorted((a for a, bb in lab if bb == b), reverse=True):
            label, idx = lab[(a, b)]
            if idx not in seen:
                seen.add(idx)
                out.append(label)
    return tuple(out)


@dataclass(frozen=True)
class RowNumberTableau:
    rows: tuple[tuple[int, ...], ...]  # rows 1, 2, ...; empty rows kept

    def word(self) -> tuple[int, ...]:
        return tuple(x for row in reversed(self.rows) for x in row)

    def content(self) -> Composition:
        top = max(self.word(), default=0)
        w = self.word()
        return tuple(w.count(i) for i in range(1, top + 1))

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, row)) if row else "." for row in self.rows)


def row_number_tableau(T: RibbonTableau) -> RowNumberTableau:
    rows: dict[int, list[int]] = defaultdict(list)
    for label, rn, _ in T.border_strips():
        rows[rn].append(label)
    top = max(rows, default=0)
    return RowNumberTableau(tuple(tuple(sorted(rows.get(a, ()))) for a in range(1, top + 1)))


def inversion_sort_subword(T: RibbonTableau, k: int) -> tuple[int, ...]:
    """Block-sort the {k, k+1}-subword of the column word.

    Strips are taken in column-word order; at each inversion (a k followed
    by a k+1 of larger row number) the block reaching the last later strip
    of larger row number is sorted into decreasing order.  Without
    inversions this is exactly the {k, k+1}-subword of the row-number word.
    With inversions it can differ: for r = 2 and the chain (), (4,2), (4,4)
    it gives 1211 where the row-number word has 2111.  It never creates a
    k-unpaired k+1.
    """
    strips = [(column_number(boxes), -rn, label, rn) for label, rn, boxes in T.border_strips() if label in (k, k + 1)]
    strips.sort()
    labels = [s[2] for s in strips]
    rows = [s[3] for s in strips]
    out = list(labels)
    j = 0
    while j < len(labels) - 1:
        if labels[j] == k and labels[j + 1] == k + 1 and rows[j] < rows[j + 1]:
            s = max(t for t in range(j, len(labels)) if rows[j] < rows[t]) - j
            out[j:j + s + 1] = sorted(out[j:j + s + 1], reverse=True)
            j += s + 1
        else:
            j += 1
    return tuple(out)


def render_ascii(T: RibbonTableau) -> str:
    """Young diagram with labels; ``|`` and ``-`` mark border-strip boundaries."""
    lab = T.labelling()
    nrows = len(T.shape.outer)
    ncols = T.shape.outer[0] if T.shape.outer else 0
    grid = [[" "] * (3 * ncols + 1) for _ in range(2 * nrows + 1)]

    def strip(a, b):
        return lab.get((a, b), (None, None))[1] if (a, b) in lab else None

    for a in range(nrows):
        for b in range(ncols):
            if (a, b) in lab:
                grid[2 * a + 1][3 * b + 1] = str(lab[(a, b)][0])
            elif b < T.shape.outer[a]:
                grid[2 * a + 1][3 * b + 1] = "."
    for a in range(nrows + 1):
        for b in range(ncols + 1):
            if b < ncols and strip(a - 1, b) != strip(a, b):
                grid[2 * a][3 * b + 1] = "-"
                grid[2 * a][3 * b + 2] = "-"
            if a < nrows and strip(a, b - 1) != strip(a, b):
                grid[2 * a + 1][3 * b] = "|"
    return "\n".join("".join(row).rstrip() for row in grid)


def render_svg(T: RibbonTableau, cell: int = 30) -> str:
    lab = T.labelling()
    nrows = len(T.shape.outer)
    ncols = T.shape.outer[0] if T.shape.outer else 0
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{ncols * cell + 4}" height="{nrows * cell + 4}">']
    for (a, b), (label, _) in sorted(lab.items()):
        x, y = b * cell + 2, a * cell + 2
        parts.append(f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" fill="none" stroke="#999" stroke-width="1"/>')
        parts.append(f'<text x="{x + cell // 2}" y="{y + cell // 2 + 5}" text-anchor="middle" font-size="{cell // 2}">{label}</text>')

    def strip(a, b):
        return lab[(a, b)][1] if (a, b) in lab else None

    for a in range(nrows + 1):
        for b in range(ncols + 1):
            if b < ncols and strip(a - 1, b) != strip(a, b):
                parts.append(f'<line x1="{b * cell + 2}" y1="{a * cell + 2}" x2="{(b + 1) * cell + 2}" y2="{a * cell + 2}" stroke="black" stroke-width="3"/>')
            if a < nrows and strip(a, b - 1) != strip(a, b):
                parts.append(f'<line x1="{b * cell + 2}" y1="{a * cell + 2}" x2="{b * cell + 2}" y2="{(a + 1) * cell + 2}" stroke="black" stroke-width="3"/>')
    parts.append("</svg>")
    return "\n".join(parts)

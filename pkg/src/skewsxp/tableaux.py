"""Skew tableaux, multitableaux and their enumeration.

A multitableau is a plain tuple of :class:`SkewTableau`.  Its word is the
concatenation of the component words, each read row by row from the highest
numbered (bottom) row upwards, left to right.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from .errors import ShapeMismatch
from .partitions import Composition, Partition, SkewMultiShape, SkewShape, as_partition, is_proper, pad, skew

Word = tuple[int, ...]


@dataclass(frozen=True)
class SkewTableau:
    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]  # one tuple per row of shape.outer, boxes left to right

    def __post_init__(self):
        bounds = self.shape.row_bounds()
        if len(self.rows) != len(bounds) or any(len(row) != hi - lo for row, (lo, hi) in zip(self.rows, bounds)):
            raise ShapeMismatch(f"rows {self.rows} do not fill {self.shape}")
        if any(x < 1 for row in self.rows for x in row):
            raise ValueError("tableau entries must be positive")

    @classmethod
    def from_rows(cls, shape: SkewShape, rows: Iterable[Iterable[int]]) -> SkewTableau:
        rows = tuple(tuple(r) for r in rows)
        rows = rows + ((),) * (len(shape.outer) - len(rows))
        return cls(shape, rows)

    def entry(self, a: int, b: int) -> int:
        lo, _ = self.shape.row_bounds()[a]
        return self.rows[a][b - lo]

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        for a, (lo, hi) in enumerate(self.shape.row_bounds()):
            for b in range(lo, hi):
                yield (a, b), self.rows[a][b - lo]

    @property
    def size(self) -> int:
        return self.shape.size

    def word(self) -> Word:
        return tuple(x for row in reversed(self.rows) for x in row)

    def is_row_standard(self) -> bool:
        return all(row[i] <= row[i + 1] for row in self.rows for i in range(len(row) - 1))

    def is_semistandard(self) -> bool:
        if not self.is_row_standard():
            return False
        cells = dict(self.items())
        return all(cells[(a + 1, b)] > x for (a, b), x in cells.items() if (a + 1, b) in cells)

    def to_json(self) -> list[list[int | None]]:
        """Rows with ``None`` for the boxes of the inner shape."""
        inner = pad(self.shape.inner, len(self.shape.outer))
        return [[None] * inner[a] + list(row) for a, row in enumerate(self.rows)]

    @classmethod
    def from_json(cls, rows: Sequence[Sequence[int | None]]) -> SkewTableau:
        rows = list(rows)
        while rows and not rows[-1]:
            rows.pop()
        outer = as_partition(len(r) for r in rows)
        inner = as_partition(sum(1 for x in r if x is None) for r in rows)
        shape = skew(outer, inner)
        return cls(shape, tuple(tuple(x for x in r if x is not None) for r in rows))

    def __str__(self) -> str:
        return "\n".join(" ".join("." if x is None else str(x) for x in row) for row in self.to_json())


MultiTableau = tuple[SkewTableau, ...]
TableauLike = Union[SkewTableau, Sequence[SkewTableau]]


def _components(t: TableauLike) -> Sequence[SkewTableau]:
    return (t,) if isinstance(t, SkewTableau) else t


def word(t: TableauLike) -> Word:
    return tuple(x for c in _components(t) for x in c.word())


def content(t: TableauLike, length: int | None = None) -> Composition:
    """Multiplicities of 1, 2, ...; padded to ``length`` when given."""
    counts = Counter(word(t))
    top = max(counts, default=0)
    if length is not None:
        if top > length:
            raise ValueError(f"entry {top} exceeds content length {length}")
        top = length
    return tuple(counts.get(i, 0) for i in range(1, top + 1))


def shape_of(t: TableauLike) -> SkewMultiShape:
    return tuple(c.shape for c in _components(t))


def superstandard(mu: Sequence[int]) -> SkewTableau:
    """u(mu): every entry of row j equals j."""
    mu = as_partition(mu)
    return SkewTableau(skew(mu), tuple((j + 1,) * m for j, m in enumerate(mu)))


def append(q: SkewMultiShape, mu: Sequence[int]) -> SkewMultiShape:
    """``q : mu``, the multishape with the straight shape ``mu`` appended."""
    return tuple(q) + (skew(mu),)


def append_tableau(t: Sequence[SkewTableau], mu: Sequence[int]) -> MultiTableau:
    return tuple(t) + (superstandard(mu),)


# Reading order and T(w) reconstruction.

def reading_boxes(q: Sequence[SkewShape]) -> list[tuple[int, int, int]]:
    """Boxes ``(component, row, column)`` in reading order."""
    out = []
    for ci, s in enumerate(q):
        bounds = s.row_bounds()
        for a in range(len(bounds) - 1, -1, -1):
            lo, hi = bounds[a]
            out.extend((ci, a, b) for b in range(lo, hi))
    return out


def from_word(q: Sequence[SkewShape], w: Sequence[int]) -> MultiTableau:
    """T(w): fill the boxes of ``q`` in reading order with the letters of ``w``."""
    boxes = reading_boxes(q)
    if len(boxes) != len(w):
        raise ShapeMismatch(f"word of length {len(w)} does not fit a multishape of size {len(boxes)}")
    rows = [[[] for _ in s.outer] for s in q]
    for (ci, a, _), x in zip(boxes, w):
        rows[ci][a].append(x)
    return tuple(SkewTableau(s, tuple(tuple(r) for r in rs)) for s, rs in zip(q, rows))


class _Grid:
    """Precomputed neighbour indices for filling a multishape box by box."""

    def __init__(self, q: Sequence[SkewShape], order: list[tuple[int, int, int]]):
        index = {box: i for i, box in enumerate(order)}
        self.q = tuple(q)
        self.order = order
        self.left = [index.get((c, a, b - 1), -1) for c, a, b in order]
        self.right = [index.get((c, a, b + 1), -1) for c, a, b in order]
        self.above = [index.get((c, a - 1, b), -1) for c, a, b in order]
        self.below = [index.get((c, a + 1, b), -1) for c, a, b in order]


def _fill(q: Sequence[SkewShape], alpha: Sequence[int], semistandard: bool) -> Iterator[list[int]]:
    """Fillings in reading order; letters tried in increasing order so the
    output is lexicographic in the word."""
    order = reading_boxes(q)
    grid = _Grid(q, order)
    remaining = list(alpha)
    top = len(alpha)
    n = len(order)
    filled = [0] * n

    def rec(i: int) -> Iterator[list[int]]:
        if i == n:
            yield filled
            return
        lo = filled[grid.left[i]] if grid.left[i] >= 0 else 1
        hi = top
        if semistandard and grid.below[i] >= 0:
            hi = min(hi, filled[grid.below[i]] - 1)
        for x in range(lo, hi + 1):
            if remaining[x - 1]:
                remaining[x - 1] -= 1
                filled[i] = x
                yield from rec(i + 1)
                remaining[x - 1] += 1

    if sum(alpha) == n and is_proper(alpha):
        yield from rec(0)


def enumerate_multitableaux(q: Sequence[SkewShape], alpha: Sequence[int], semistandard: bool = True) -> Iterator[MultiTableau]:
    """All multitableaux of shape ``q`` and total content ``alpha``.

    Empty when ``alpha`` has a negative entry or the wrong size.
    """
    q = tuple(q)
    for w in _fill(q, alpha, semistandard):
        yield from_word(q, w)


def enumerate_ssyt(shape: SkewShape, alpha: Sequence[int]) -> Iterator[SkewTableau]:
    for t in enumerate_multitableaux((shape,), alpha):
        yield t[0]


def enumerate_rsyt(shape: SkewShape, alpha: Sequence[int]) -> Iterator[SkewTableau]:
    """Row-standard fillings of ``shape`` with content ``alpha``."""
    for t in enumerate_multitableaux((shape,), alpha, semistandard=False):
        yield t[0]


def shape_content_involution(t: SkewTableau, beta: Sequence[int] = ()) -> SkewTableau:
    """S(t): a ``k`` in row ``a`` of S(t) for every ``a`` in row ``k`` of ``t``.

    ``t`` is a row-standard tableau of shape ``lam/mu`` viewed as an element of
    RSYT(lam/mu, alpha/beta) with ``alpha = beta + cont(t)``; the result has
    shape ``alpha/beta`` and content ``lam - mu``.
    """
    if not t.is_row_standard():
        raise ShapeMismatch("the shape-content map needs a row-standard tableau")
    beta = as_partition(beta)
    c = content(t)
    length = max(len(c), len(beta))
    alpha = tuple(x + y for x, y in zip(pad(c, length), pad(beta, length)))
    try:
        target = skew(alpha, beta)
    except ValueError as exc:
        raise ShapeMismatch(f"beta + cont(t) = {alpha} is not a skew shape over {beta}") from exc
    rows: list[list[int]] = [[] for _ in target.outer]
    for k, row in enumerate(t.rows, start=1):
        for a in row:
            rows[a - 1].append(k)
    return SkewTableau(target, tuple(tuple(sorted(r)) for r in rows))


def multitableau_to_json(t: Sequence[SkewTableau]) -> list:
    return [c.to_json() for c in t]


def multitableau_from_json(data: Sequence) -> MultiTableau:
    """Accept either one tableau (list of rows) or a list of tableaux."""
    nested = any(isinstance(x, list) for row in data for x in row)
    if nested:
        return tuple(SkewTableau.from_json(c) for c in data)
    return (SkewTableau.from_json(data),)

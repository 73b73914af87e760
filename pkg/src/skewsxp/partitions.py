"""Partitions, compositions, skew shapes and the dot action of Sym_l.

Partitions are plain tuples of positive integers in weakly decreasing order
(``()`` is the empty partition).  Compositions are tuples of integers that keep
their length and zeros; entries may go negative during dot-action arithmetic.
"""

from __future__ import annotations

import itertools
import json
import re
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import LengthMismatch, NotNested, SizeMismatch

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalise a part sequence; trailing zeros are dropped."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{p} is not weakly decreasing")
    return p


def is_partition(seq: Sequence[int]) -> bool:
    return all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1)) and all(x >= 0 for x in seq)


def is_proper(a: Sequence[int]) -> bool:
    """A composition is proper when no entry is negative."""
    return all(x >= 0 for x in a)


def pad(p: Sequence[int], length: int) -> tuple[int, ...]:
    if len(p) > length:
        raise LengthMismatch(f"{tuple(p)} has more than {length} entries")
    return tuple(p) + (0,) * (length - len(p))


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(i <= o for i, o in zip(inner, outer))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse-lexicographic order, largest first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partitions_up_to(n: int) -> Iterator[Partition]:
    for m in range(n + 1):
        yield from partitions(m)


def partitions_containing(inner: Partition, n: int) -> Iterator[Partition]:
    """Partitions of ``n`` that contain ``inner`` (reverse-lexicographic)."""
    k = n - sum(inner)
    if k < 0:
        return
    for nu in partitions(n):
        if contains(nu, inner):
            yield nu


def subpartitions(outer: Partition) -> Iterator[Partition]:
    """All partitions contained in ``outer``."""

    def rec(i: int, cap: int) -> Iterator[Partition]:
        if i == len(outer):
            yield ()
            return
        for x in range(min(cap, outer[i]), -1, -1):
            if x == 0:
                yield ()
            else:
                for rest in rec(i + 1, x):
                    yield (x,) + rest

    yield from rec(0, outer[0] if outer else 0)


def dominance_leq(p: Partition, q: Partition) -> bool:
    """True iff every partial sum of ``p`` is at most the matching one of ``q``."""
    if sum(p) != sum(q):
        raise SizeMismatch(f"|{p}| != |{q}|")
    length = max(len(p), len(q))
    return all(a <= b for a, b in zip(itertools.accumulate(pad(p, length)), itertools.accumulate(pad(q, length))))


class SkewShape(NamedTuple):
    outer: Partition
    inner: Partition

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def is_straight(self) -> bool:
        return not self.inner

    def row_bounds(self) -> list[tuple[int, int]]:
        """``(start, stop)`` column range of each row of ``outer``, 0-indexed."""
        inner = pad(self.inner, len(self.outer))
        return [(inner[a], self.outer[a]) for a in range(len(self.outer))]

    def boxes(self) -> list[tuple[int, int]]:
        """Boxes as 0-indexed ``(row, column)`` pairs in row-major order."""
        return [(a, b) for a, (lo, hi) in enumerate(self.row_bounds()) for b in range(lo, hi)]

    def conjugate(self) -> SkewShape:
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def __str__(self) -> str:
        if not self.inner:
            return format_partition(self.outer)
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"


SkewMultiShape = tuple[SkewShape, ...]


def skew(outer: Iterable[int], inner: Iterable[int] = ()) -> SkewShape:
    outer, inner = as_partition(outer), as_partition(inner)
    if not contains(outer, inner):
        raise NotNested(f"{inner} is not contained in {outer}")
    return SkewShape(outer, inner)


def multishape(*components) -> SkewMultiShape:
    """Build a multishape; each component is a SkewShape, a partition, or an
    ``(outer, inner)`` pair."""
    out = []
    for c in components:
        if isinstance(c, SkewShape):
            out.append(c)
        elif c and isinstance(c[0], (tuple, list)):
            out.append(skew(c[0], c[1]))
        else:
            out.append(skew(c))
    return tuple(out)


def multishape_size(q: Sequence[SkewShape]) -> int:
    return sum(s.size for s in q)


class SignedPermutation(NamedTuple):
    images: tuple[int, ...]  # one-line notation on 1..l
    sign: int

    @classmethod
    def from_images(cls, images: Sequence[int]) -> SignedPermutation:
        images = tuple(images)
        inversions = sum(1 for i, j in itertools.combinations(range(len(images)), 2) if images[i] > images[j])
        return cls(images, -1 if inversions % 2 else 1)

    @classmethod
    def identity(cls, length: int) -> SignedPermutation:
        return cls(tuple(range(1, length + 1)), 1)

    @classmethod
    def transposition(cls, k: int, length: int) -> SignedPermutation:
        """The adjacent transposition (k, k+1), k 1-indexed."""
        images = list(range(1, length + 1))
        images[k - 1], images[k] = images[k], images[k - 1]
        return cls(tuple(images), -1)

    def compose(self, other: SignedPermutation) -> SignedPermutation:
        """``self`` after ``other``."""
        if len(self.images) != len(other.images):
            raise LengthMismatch("permutations of different degree")
        return SignedPermutation(tuple(self.images[i - 1] for i in other.images), self.sign * other.sign)

    @property
    def is_identity(self) -> bool:
        return all(x == i + 1 for i, x in enumerate(self.images))


def enumerate_permutations(length: int) -> Iterator[SignedPermutation]:
    """All of Sym_l, lexicographic by one-line notation."""
    for images in itertools.permutations(range(1, length + 1)):
        yield SignedPermutation.from_images(images)


def place_permute(g: SignedPermutation, v: Sequence[int]) -> tuple[int, ...]:
    """Place permutation: the entry in position i moves to position g(i)."""
    out = [0] * len(v)
    for i, x in enumerate(v):
        out[g.images[i] - 1] = x
    return tuple(out)


def dot_action(g: SignedPermutation, a: Sequence[int]) -> Composition:
    """``g . a = g(a + rho) - rho`` with ``rho = (l-1, ..., 1, 0)``."""
    length = len(g.images)
    if len(a) != length:
        raise LengthMismatch(f"composition {tuple(a)} has length {len(a)}, permutation has degree {length}")
    rho = range(length - 1, -1, -1)
    shifted = place_permute(g, [x + s for x, s in zip(a, rho)])
    return tuple(x - s for x, s in zip(shifted, rho))


def straightening_permutation(a: Sequence[int]) -> tuple[SignedPermutation, Partition] | None:
    """Find ``(g, lam)`` with ``g . lam == a`` and ``lam`` a partition, if any.

    ``lam`` keeps the length of ``a`` (zeros included) so it can be fed back to
    :func:`dot_action`.
    """
    length = len(a)
    shifted = [x + length - 1 - i for i, x in enumerate(a)]
    if len(set(shifted)) != length or any(x < 0 for x in shifted):
        return None
    order = sorted(range(length), key=lambda i: -shifted[i])
    lam = tuple(shifted[i] - (length - 1 - j) for j, i in enumerate(order))
    if any(x < 0 for x in lam):
        return None
    # g sends position j of lam + rho to position order[j]
    g = SignedPermutation.from_images([i + 1 for i in order])
    return g, lam


# Literal syntax shared by the CLI and JSON reports: [6,5,5,5,2] and [6,5,5,5,2]/[3,2].

_LITERAL = re.compile(r"^\s*\[[\d,\s]*\]\s*$")


def parse_partition(text: str) -> Partition:
    if not _LITERAL.match(text):
        raise ValueError(f"bad partition literal {text!r}; expected e.g. [3,2]")
    return as_partition(json.loads(text))


def parse_skew(text: str) -> SkewShape:
    if "/" in text:
        outer, inner = text.split("/", 1)
        return skew(parse_partition(outer), parse_partition(inner))
    return skew(parse_partition(text))


def format_partition(p: Sequence[int]) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"

"""k-pairings on words, the coplactic operators E_k, F_k, S_k, latticed words,
the sign-reversing involution G and generalized Littlewood-Richardson
coefficients.

Positions are 0-indexed in code and 1-indexed in messages.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import NotInDomain, OperatorUndefined, SizeMismatch
from .partitions import Partition, SkewShape, as_partition, multishape_size, pad, straightening_permutation
from .tableaux import MultiTableau, SkewTableau, Word, _Grid, from_word, reading_boxes, shape_of, word


@dataclass(frozen=True)
class PairingAnalysis:
    k: int
    paired: tuple[tuple[int, int], ...]  # (position of k+1, position of the k it pairs with)
    unpaired_k: tuple[int, ...]
    unpaired_k1: tuple[int, ...]

    @property
    def c(self) -> int:
        return len(self.unpaired_k)

    @property
    def d(self) -> int:
        return len(self.unpaired_k1)

    @property
    def unpaired(self) -> tuple[int, ...]:
        return self.unpaired_k + self.unpaired_k1


def analyze_pairing(w: Sequence[int], k: int) -> PairingAnalysis:
    """Bracket-match ``k`` as ``)`` against ``k+1`` as ``(``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    stack: list[int] = []
    paired = []
    unpaired_k = []
    for i, x in enumerate(w):
        if x == k + 1:
            stack.append(i)
        elif x == k:
            if stack:
                paired.append((stack.pop(), i))
            else:
                unpaired_k.append(i)
    return PairingAnalysis(k, tuple(sorted(paired)), tuple(unpaired_k), tuple(stack))


def _rewrite(w: Sequence[int], a: PairingAnalysis, c_new: int) -> Word:
    out = list(w)
    for j, pos in enumerate(a.unpaired):
        out[pos] = a.k if j < c_new else a.k + 1
    return tuple(out)


def E(w: Sequence[int], k: int) -> Word:
    a = analyze_pairing(w, k)
    if not a.d:
        raise OperatorUndefined(f"E_{k} needs a {k}-unpaired {k + 1}")
    return _rewrite(w, a, a.c + 1)


def F(w: Sequence[int], k: int) -> Word:
    a = analyze_pairing(w, k)
    if not a.c:
        raise OperatorUndefined(f"F_{k} needs a {k}-unpaired {k}")
    return _rewrite(w, a, a.c - 1)


def S(w: Sequence[int], k: int) -> Word:
    a = analyze_pairing(w, k)
    return _rewrite(w, a, a.d)


def lift(op: Callable[[Sequence[int], int], Word], t: Sequence[SkewTableau], k: int) -> MultiTableau:
    """Apply a word operator to a multitableau through T(w)."""
    return from_word(shape_of(t), op(word(t), k))


def _as_word(t) -> Sequence[int]:
    if isinstance(t, SkewTableau):
        return t.word()
    if t and isinstance(t[0], SkewTableau):
        return word(t)
    return t


def is_latticed(t) -> bool:
    """No k-unpaired k+1 for any k.  Accepts a word, a tableau or a multitableau."""
    w = _as_word(t)
    top = max(w, default=0)
    return all(not analyze_pairing(w, k).d for k in range(1, top))


def rightmost_violation(w: Sequence[int]) -> tuple[int, int] | None:
    """``(k, position)`` of the rightmost entry that is a k-unpaired k+1, if any."""
    best = None
    for k in range(1, max(w, default=0)):
        a = analyze_pairing(w, k)
        if a.d and (best is None or a.unpaired_k1[-1] > best[1]):
            best = (k, a.unpaired_k1[-1])
    return best


def G_word(w: Sequence[int]) -> tuple[Word, int | None]:
    """The involution on words; returns the image and the acting k (None if fixed)."""
    v = rightmost_violation(w)
    if v is None:
        return tuple(w), None
    k = v[0]
    return S(E(w, k), k), k


def infer_lambda(alpha: Sequence[int]) -> Partition:
    found = straightening_permutation(alpha)
    if found is None:
        raise NotInDomain(f"content {tuple(alpha)} is not g.lambda for any partition lambda")
    return found[1]


def G(t: Sequence[SkewTableau], lam: Sequence[int] | None = None) -> MultiTableau:
    """Generalised Lascoux-Schutzenberger involution on a multitableau whose
    content is ``g . lam`` for some permutation ``g``."""
    return G_with_k(t, lam)[0]


def G_with_k(t: Sequence[SkewTableau], lam: Sequence[int] | None = None) -> tuple[MultiTableau, int | None]:
    w = word(t)
    length = len(lam) if lam is not None else max(w, default=0)
    if max(w, default=0) > length:
        raise NotInDomain(f"entry {max(w)} exceeds the length {length} of lambda")
    cont = tuple(w.count(i) for i in range(1, length + 1))
    inferred = infer_lambda(cont)
    if lam is not None and tuple(inferred) != pad(as_partition(lam), length):
        raise NotInDomain(f"content {cont} is not in the dot-orbit of {tuple(lam)}")
    image, k = G_word(w)
    return from_word(shape_of(t), image), k


# Littlewood-Richardson coefficients: latticed semistandard fillings, built in
# reverse reading order so the suffix condition can prune as we go.

def enumerate_latticed(q: Sequence[SkewShape], lam: Sequence[int]) -> Iterator[MultiTableau]:
    """Latticed semistandard multitableaux of shape ``q`` and content ``lam``."""
    q = tuple(q)
    lam = tuple(lam)
    order = reading_boxes(q)[::-1]
    grid = _Grid(q, order)
    n = len(order)
    if sum(lam) != n or any(x < 0 for x in lam):
        return
    top = len(lam)
    used = [0] * (top + 2)
    filled = [0] * n

    def rec(i: int) -> Iterator[list[int]]:
        if i == n:
            yield filled
            return
        # reversed order: the right neighbour and the box above are already filled
        hi = filled[grid.right[i]] if grid.right[i] >= 0 else top
        lo = filled[grid.above[i]] + 1 if grid.above[i] >= 0 else 1
        for x in range(lo, hi + 1):
            if used[x] < lam[x - 1] and (x == 1 or used[x] < used[x - 1]):
                used[x] += 1
                filled[i] = x
                yield from rec(i + 1)
                used[x] -= 1

    for f in rec(0):
        yield from_word(q, f[::-1])


def lr_coefficient(lam: Sequence[int], q: Sequence[SkewShape]) -> int:
    lam = as_partition(lam)
    if sum(lam) != multishape_size(q):
        raise SizeMismatch(f"|{lam}| != size of multishape {multishape_size(q)}")
    return sum(1 for _ in enumerate_latticed(q, lam))

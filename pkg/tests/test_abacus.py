import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewsxp.abacus import (
    Abacus,
    abacus_from_partition,
    canonical_beads,
    is_r_decomposable,
    partition_from_abacus,
    quotient_from_json,
    quotient_to_json,
    r_core,
    r_quotient,
    r_weight,
    sgn_r,
    skew_quotient,
    star,
    strip_row_number,
)
from skewsxp.errors import BadBeadCount, IllegalMove, NotComponentwiseSkew, QuotientMismatch
from skewsxp.partitions import SkewShape, partitions, partitions_up_to, skew, subpartitions
from skewsxp.ribbon import border_strip_decompositions, height, removable_rim_hooks, strip_boxes
from strategies import partitions_st
from worked import BIG, BIG_QUOTIENT


def core_by_rim_hooks(p, r):
    """Independent oracle: peel rim hooks (hook-length rule) until none remain."""
    while True:
        smaller = next(iter(removable_rim_hooks(p, r)), None)
        if smaller is None:
            return p
        p = smaller


def test_quotient_of_a_partition():
    assert r_quotient((6, 5, 2, 1), 3) == ((1,), (), (2, 1))


def test_skew_quotients():
    assert skew_quotient(skew((6, 5, 2, 1), (3, 2)), 3) == (skew((1,)), skew(()), skew((2, 1), (1,)))
    assert skew_quotient(BIG, 3) == BIG_QUOTIENT
    nu = (4, 2, 1)
    assert all(c.size == 0 for c in skew_quotient(skew(nu, nu), 3))


def test_skew_quotient_rejects_non_nested():
    found = False
    for nu in partitions(6):
        for tau in subpartitions(nu):
            try:
                skew_quotient(SkewShape(nu, tau), 2)
            except NotComponentwiseSkew:
                found = True
    assert found


def test_core_example_matches_rim_hook_oracle():
    assert r_core((6, 5, 2, 1), 3) == (1, 1)
    assert core_by_rim_hooks((6, 5, 2, 1), 3) == (1, 1)
    assert r_weight((6, 5, 2, 1), 3) == 4


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_core_agrees_with_rim_hook_oracle(r):
    for p in partitions_up_to(10):
        assert r_core(p, r) == core_by_rim_hooks(p, r)


def test_r_equals_one_degenerates():
    for p in partitions_up_to(7):
        assert r_quotient(p, 1) == (p,)
        assert r_core(p, 1) == ()
        for tau in subpartitions(p):
            assert sgn_r(SkewShape(p, tau), 1) == 1


@pytest.mark.parametrize("q,tau,expected", [
    ((skew((1,)), skew(()), skew((2, 1), (1,))), (3, 2), (6, 5, 2, 1)),
    ((skew((1,)), skew(()), skew((2, 1), (1,))), (3,), (6, 2, 2, 2)),
    ((skew((1,)), skew((2,)), skew((1,), (1,))), (3, 2), (4, 4, 4, 1, 1)),
])
def test_star_examples(q, tau, expected):
    assert star(q, tau, 3) == expected


def test_star_rejects_wrong_inner():
    with pytest.raises(QuotientMismatch):
        star((skew((1,)), skew((1,)), skew((1,))), (3, 2), 3)
    with pytest.raises(QuotientMismatch):
        star((skew((1,)),), (), 3)


def test_signs():
    assert sgn_r(BIG, 3) == 1
    assert sgn_r(skew((7, 4, 4, 4, 4, 1)), 4) == -1
    assert sgn_r(skew((3, 1), (3, 1)), 3) == 1
    assert [sgn_r(skew(nu), 2) for nu in [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]] == [1, -1, 1, -1, 1]
    assert sgn_r(skew((3, 3), (1,)), 2) == 0  # odd size
    assert sgn_r(skew((3, 3, 2), (1, 1)), 3) == 0


def test_strip_row_numbers_along_a_chain():
    chain = [(3, 2), (3, 2, 2, 1), (4, 4, 2, 1), (6, 5, 2, 1)]
    rows = []
    for x, y in zip(chain, chain[1:]):
        before, after = abacus_from_partition(x, 3, 6), abacus_from_partition(y, 3, 6)
        (beta,) = before.beads - after.beads
        assert after.beads - before.beads == {beta + 3}
        rows.append(strip_row_number(before, beta))
    assert rows == [3, 1, 1]


def test_row_number_of_the_last_bead_is_one():
    a = abacus_from_partition((4, 1), 2, 2)
    assert strip_row_number(a, max(a.beads)) == 1


def test_abacus_errors():
    a = abacus_from_partition((2, 1), 2)
    assert partition_from_abacus(a) == (2, 1)
    with pytest.raises(IllegalMove):
        a.move(0)
    with pytest.raises(BadBeadCount):
        abacus_from_partition((2, 1), 2, beads=3)
    with pytest.raises(BadBeadCount):
        abacus_from_partition((2, 1, 1), 2, beads=2)
    assert abacus_from_partition((2, 1), 2, beads=3, strict=False).bead_count == 3
    assert "o" in a.render()


def test_quotient_json_round_trip():
    q = skew_quotient(skew((6, 5, 2, 1), (3, 2)), 3)
    data = quotient_to_json(q)
    assert data == [[1], [], [[2, 1], [1]]]
    assert quotient_from_json(data) == q


# Exhaustive checks up to |nu| = 10 and r = 4.

@pytest.mark.parametrize("r", [2, 3, 4])
def test_quotient_stable_under_adding_r_beads(r):
    for p in partitions_up_to(10):
        b = canonical_beads(len(p), r)
        assert r_quotient(p, r, b) == r_quotient(p, r, b + r) == r_quotient(p, r, b + 2 * r)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_one_extra_bead_shifts_quotient_cyclically(r):
    for p in partitions_up_to(10):
        b = canonical_beads(len(p), r)
        q = r_quotient(p, r, b)
        assert r_quotient(p, r, b + 1) == q[-1:] + q[:-1]


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_size_law(r):
    for p in partitions_up_to(12):
        assert sum(p) == sum(r_core(p, r)) + r * r_weight(p, r)


@pytest.mark.parametrize("r", [2, 3])
def test_star_and_quotient_are_inverse(r):
    for nu in partitions_up_to(10):
        for tau in subpartitions(nu):
            s = SkewShape(nu, tau)
            if not is_r_decomposable(s, r):
                continue
            q = skew_quotient(s, r)
            assert star(q, tau, r) == nu
            assert skew_quotient(SkewShape(star(q, tau, r), tau), r) == q


@pytest.mark.parametrize("r", [2, 3, 4])
def test_sign_is_well_defined(r):
    """Every border-strip decomposition gives the same sign, and the sign is
    zero exactly when none exists."""
    for nu in partitions_up_to(10):
        for tau in subpartitions(nu):
            s = SkewShape(nu, tau)
            if s.size % r:
                assert sgn_r(s, r) == 0
                continue
            signs = set()
            for chain in border_strip_decompositions(s, r):
                e = sum(height(strip_boxes(b, a)) for a, b in zip(chain, chain[1:]))
                signs.add(-1 if e % 2 else 1)
            assert len(signs) <= 1
            assert sgn_r(s, r) == (signs.pop() if signs else 0)


@given(partitions_st(12), st.integers(1, 5))
def test_quotient_weight_matches_rim_hook_count(p, r):
    count = 0
    q = p
    while True:
        nxt = next(iter(removable_rim_hooks(q, r)), None)
        if nxt is None:
            break
        q = nxt
        count += 1
    assert count == r_weight(p, r)


def test_abacus_runner_levels():
    a = Abacus(3, frozenset({0, 1, 4, 5}))
    assert a.runner(1) == [0, 1]
    assert a.runner(2) == [1]

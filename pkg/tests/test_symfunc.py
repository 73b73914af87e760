import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewsxp.coplactic import lr_coefficient
from skewsxp.errors import DegreeMismatch, NotUnitriangularConsistent
from skewsxp.partitions import SkewShape, conjugate, partitions, partitions_up_to, skew, subpartitions
from skewsxp.symfunc import (
    SchurExpansion,
    dominant_to_schur,
    inner_product,
    kostka,
    oracle_product_plethysm,
    plethysm_monomial_coefficient,
    schur,
    schur_product,
    schur_to_dominant,
    skew_schur,
)
from strategies import partitions_st, skew_shapes_st


def hook_length_count(lam):
    n = sum(lam)
    lc = conjugate(lam)
    prod = 1
    for a, row in enumerate(lam):
        for b in range(row):
            prod *= row - b + lc[b] - a - 1
    return math.factorial(n) // prod


def test_expansion_arithmetic():
    e = schur((2,)) + schur((1, 1))
    assert e - schur((2,)) == schur((1, 1))
    assert (e - e) == SchurExpansion()
    assert e.scale(3)[(2,)] == 3
    assert (-e)[(1, 1)] == -1
    assert e.degree == 2 and SchurExpansion().degree is None
    assert e.to_json() == {"[2]": 1, "[1,1]": 1}
    assert str(SchurExpansion({(2,): 1, (1, 1): -1})) == "1*s[2] - 1*s[1, 1]"
    assert SchurExpansion([((3,), 1), ((3,), -1)]) == SchurExpansion()


def test_plethysms_of_degree_two():
    assert oracle_product_plethysm((), skew((2,)), 2) == SchurExpansion({(4,): 1, (3, 1): -1, (2, 2): 1})
    # p_2 p_2 = (s_2 - s_11)^2 minus s_2 o p_2, computed by hand
    assert oracle_product_plethysm((), skew((1, 1)), 2) == SchurExpansion({(2, 2): 1, (2, 1, 1): -1, (1, 1, 1, 1): 1})
    assert oracle_product_plethysm((), skew((1,)), 3) == SchurExpansion({(3,): 1, (2, 1): -1, (1, 1, 1): 1})


def test_worked_coefficients_from_the_oracle():
    e = oracle_product_plethysm((3, 2), skew((3, 3)), 3)
    assert e[(6, 5, 5, 5, 2)] == 1
    f = oracle_product_plethysm((3, 2), skew((4, 3), (1,)), 3)
    assert f[(6, 5, 5, 5, 2)] == 3


@pytest.mark.parametrize("n", range(1, 9))
def test_standard_tableaux_counts(n):
    counts = [kostka(lam, (1,) * n) for lam in partitions(n)]
    assert counts == [hook_length_count(lam) for lam in partitions(n)]
    assert sum(c * c for c in counts) == math.factorial(n)


def test_kostka_basics():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka(skew((2, 1), (1,)), (1, 1)) == 2
    assert kostka((2, 1), (3,)) == 0
    assert kostka((2, 1), (1, -1, 3)) == 0
    assert kostka((3, 1), (1, 0, 3)) == kostka((3, 1), (3, 1))


@pytest.mark.parametrize("d", range(0, 11))
def test_dominant_round_trip(d):
    for lam in partitions(d):
        assert dominant_to_schur(schur_to_dominant(schur(lam))) == schur(lam)
    mixed = SchurExpansion({lam: i - 3 for i, lam in enumerate(partitions(d))})
    assert dominant_to_schur(schur_to_dominant(mixed)) == mixed


def test_dominant_to_schur_accepts_permuted_keys():
    assert dominant_to_schur({(1, 1): 1, (2, 0): 1, (0, 2): 1}) == schur((2,))


def test_dominant_to_schur_errors():
    with pytest.raises(NotUnitriangularConsistent):
        dominant_to_schur({(2,): 1, (0, 2): 3})
    with pytest.raises(NotUnitriangularConsistent):
        dominant_to_schur({(2,): 1, (1,): 1})
    assert dominant_to_schur({}) == SchurExpansion()


def test_skew_schur_example():
    assert skew_schur(skew((4, 3), (1,))) == SchurExpansion({(4, 2): 1, (3, 3): 1})
    assert skew_schur(skew((2, 1), (1,))) == schur((2,)) + schur((1, 1))


def test_products():
    assert schur_product(schur((1,)), schur((1,))) == schur((2,)) + schur((1, 1))
    assert schur_product() == schur(())
    assert schur_product(schur((1,)), SchurExpansion()) == SchurExpansion()


def test_inner_product_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        inner_product(schur((1,)), schur((2,)))
    assert inner_product(schur((2,)) + schur((1, 1)), schur((2,))) == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_skew_schur_matches_latticed_fillings(n):
    for lam in partitions(n):
        for mu in subpartitions(lam):
            s = SkewShape(lam, mu)
            e = skew_schur(s)
            for nu in partitions(s.size):
                assert e.get(nu) == lr_coefficient(nu, (s,))


@settings(max_examples=40)
@given(partitions_st(4), partitions_st(4))
def test_products_match_latticed_fillings(a, b):
    prod = schur_product(schur(a), schur(b))
    for nu in partitions(sum(a) + sum(b)):
        assert prod.get(nu) == lr_coefficient(nu, (skew(a), skew(b)))


@settings(max_examples=30)
@given(partitions_st(3), partitions_st(4), st.data())
def test_skewing_is_adjoint_to_multiplication(tau, lam, data):
    nu = data.draw(st.sampled_from(list(partitions(sum(tau) + sum(lam)))))
    left = inner_product(schur_product(schur(tau), schur(lam)), schur(nu))
    right = skew_schur(SkewShape(nu, tau)).get(lam) if all(
        (tau[i] if i < len(tau) else 0) <= (nu[i] if i < len(nu) else 0) for i in range(len(tau))) else 0
    assert left == right


@settings(max_examples=30)
@given(skew_shapes_st(6))
def test_plethysm_by_p1_is_the_identity(s):
    assert oracle_product_plethysm((), s, 1) == skew_schur(s)


def test_plethysm_monomials_vanish_off_multiples():
    s = skew((2, 1))
    assert plethysm_monomial_coefficient(s, 2, (3, 3)) == 0
    assert plethysm_monomial_coefficient(s, 2, (4, 2)) == kostka(s, (2, 1))


@pytest.mark.parametrize("r", [2, 3])
def test_plethysm_with_one_box_matches_power_sum(r):
    """s_1 o p_r = p_r = sum over hooks of (-1)^leg s_hook."""
    expected = SchurExpansion({(r - k,) + (1,) * k: (-1) ** k for k in range(r)})
    assert oracle_product_plethysm((), skew((1,)), r) == expected


@pytest.mark.parametrize("r", [2, 3])
def test_plethysm_sums_to_power_sum_product(r):
    """sum_lam f_lam s_lam o p_r = p_r^n, with f_lam standard tableaux counts."""
    n = 3
    total = SchurExpansion()
    for lam in partitions(n):
        total = total + oracle_product_plethysm((), skew(lam), r).scale(kostka(lam, (1,) * n))
    p = oracle_product_plethysm((), skew((1,)), r)
    assert total == schur_product(p, p, p)


def test_degree_bookkeeping():
    for lam in partitions_up_to(4):
        e = oracle_product_plethysm((1,), skew(lam), 2)
        assert e.degree in (None, 1 + 2 * sum(lam))

import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from revmagic.codes import repunit
from revmagic.errors import DomainError, RangeError
from revmagic.revdiv import search_reverse_divisors
from revmagic.squares import (
    check_nonsquare_families,
    integer_sqrt,
    product_square_report,
    repdigit_sweep,
    repunit_gcd,
)


@pytest.mark.parametrize("n, root, square", [(1089, 33, True), (999, 31, False), (0, 0, True), (1, 1, True), (2, 1, False)])
def test_integer_sqrt_examples(n, root, square):
    rep = integer_sqrt(n)
    assert (rep.root, rep.is_square) == (root, square)


def test_integer_sqrt_negative():
    with pytest.raises(DomainError):
        integer_sqrt(-1)


@settings(max_examples=2000)
@given(st.integers(0, 10**60))
def test_integer_sqrt_bracket(n):
    rep = integer_sqrt(n)
    assert rep.lower <= n < rep.upper
    assert rep.root == math.isqrt(n)


@given(st.integers(0, 10**40))
def test_exact_squares_detected(r):
    assert integer_sqrt(r * r).is_square
    assert integer_sqrt(r * r).root == r


def test_nonsquare_families():
    assert check_nonsquare_families(200).ok
    assert (10**2 - 1) % 4 == 3
    assert not integer_sqrt(repunit(5)).is_square
    with pytest.raises(RangeError):
        check_nonsquare_families(1)


def test_repunit_gcd_examples():
    assert repunit_gcd(6, 4) == 11 == math.gcd(111111, 1111)
    assert repunit_gcd(7, 5) == 1
    assert repunit_gcd(9, 9) == repunit(9)


def test_repunit_gcd_grid():
    for m in range(1, 61):
        for n in range(1, m + 1):
            assert repunit_gcd(m, n) == repunit(math.gcd(m, n))


def test_product_examples():
    rep = product_square_report("revdiv-self", 1089)
    assert rep.ok and rep.data["root"] == 3267 == 33 * 99
    assert 1089 * 9801 == 10673289 == 3267**2
    assert product_square_report("repunit-pair", 3, 2).ok
    assert 111 * 11 == 1221
    assert product_square_report("revdiv-pair", 1089, 2178).ok
    assert product_square_report("power-pair", 5, 3).ok


def test_product_errors():
    with pytest.raises(DomainError):
        product_square_report("revdiv-pair", 1089, 1089)
    with pytest.raises(DomainError):
        product_square_report("revdiv-self", 1234)
    with pytest.raises(RangeError):
        product_square_report("repunit-pair", 2, 3)


def test_pair_sweeps():
    for m in range(3, 41):
        for n in range(2, m):
            assert product_square_report("repunit-pair", m, n).ok
            assert product_square_report("power-pair", m, n).ok


@pytest.fixture(scope="module")
def reverse_divisors():
    return [r.value for n in range(2, 10) for r in search_reverse_divisors(n)]


def test_distinct_reverse_divisor_products(reverse_divisors):
    assert len(reverse_divisors) == 16
    for a, b in itertools.combinations(reverse_divisors, 2):
        assert product_square_report("revdiv-pair", a, b).ok


def test_reverse_divisor_times_reverse(reverse_divisors):
    for d in reverse_divisors:
        assert product_square_report("revdiv-self", d).ok


def test_repdigits():
    assert repdigit_sweep(60).ok

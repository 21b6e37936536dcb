import itertools
from fractions import Fraction

import pytest
from sympy import primerange

from dicirculant.exceptions import InvalidPrimeError
from dicirculant.numth import (
    OrderMode,
    binomial,
    divisors,
    gcd,
    order_mod,
    primitive_root_2p,
    require_odd_prime,
    totient,
    unit_group,
)


@pytest.mark.parametrize(
    "n,expected", ((1, 1), (2, 1), (6, 2), (9, 6), (10, 4), (12, 4), (36, 12), (97, 96))
)
def test_totient(n, expected):
    assert totient(n) == expected


def test_totient_matches_coprime_count():
    for n in range(1, 200):
        assert totient(n) == sum(1 for x in range(1, n + 1) if gcd(x, n) == 1)


def test_totient_rejects_non_positive():
    with pytest.raises(ValueError):
        totient(0)


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    with pytest.raises(ValueError):
        divisors(-4)


def test_gcd_with_zero_is_the_other_argument():
    assert gcd(6, 0) == 6
    assert gcd(6, -1) == 1


def test_order_mod_modes():
    assert order_mod(3, 10) == 4
    assert order_mod(9, 10) == 2
    assert order_mod(4, 10, OrderMode.ADDITIVE) == 5
    assert order_mod(0, 10, OrderMode.ADDITIVE) == 1
    with pytest.raises(ValueError):
        order_mod(4, 10)


@pytest.mark.parametrize("p,root", ((3, 5), (5, 3), (7, 3), (11, 7), (13, 7)))
def test_primitive_root_2p(p, root):
    assert primitive_root_2p(p) == root
    assert order_mod(root, 2 * p) == p - 1


def test_primitive_root_rejects_two_unless_asked():
    with pytest.raises(InvalidPrimeError):
        primitive_root_2p(2)
    assert primitive_root_2p(2, allow_quaternion=True) == 3


@pytest.mark.parametrize("p", (1, 4, 9, 15))
def test_require_odd_prime_rejects_composites(p):
    with pytest.raises(InvalidPrimeError):
        require_odd_prime(p)


def test_invalid_prime_is_a_value_error():
    with pytest.raises(ValueError):
        require_odd_prime(2)


def test_binomial_vanishes_out_of_range():
    assert binomial(5, 2) == 10
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0
    assert binomial(6, Fraction(4, 2)) == 15
    assert binomial(6, Fraction(3, 2)) == 0


@pytest.mark.parametrize("p", (2, 3, 5, 7, 11, 13))
def test_unit_group(p):
    units = unit_group(p)
    assert list(units) == [x for x in range(1, 2 * p) if gcd(x, 2 * p) == 1]
    assert len(units) == units.order == totient(2 * p)
    for s in units:
        assert pow(units.generator, units.index_of(s), 2 * p) == s
    assert 2 not in units
    with pytest.raises(ValueError):
        units.index_of(2)


def test_totient_is_multiplicative():
    for m, n in itertools.product(range(1, 201), repeat=2):
        if gcd(m, n) == 1:
            assert totient(m * n) == totient(m) * totient(n)


def test_totients_of_divisors_sum_to_n():
    for n in range(1, 1001):
        assert sum(totient(d) for d in divisors(n)) == n


@pytest.mark.parametrize("p", [int(p) for p in primerange(3, 98)])
def test_primitive_root_powers_exhaust_units(p):
    root = primitive_root_2p(p)
    powers = [pow(root, i, 2 * p) for i in range(p - 1)]
    assert len(set(powers)) == p - 1
    assert sorted(powers) == [x for x in range(1, 2 * p) if gcd(x, 2 * p) == 1]


def test_binomial_pascal_rule_and_row_sums():
    for n in range(1, 65):
        for j in range(n + 1):
            assert binomial(n, j) == binomial(n - 1, j - 1) + binomial(n - 1, j)
        assert sum(binomial(n, j) for j in range(n + 1)) == 2**n

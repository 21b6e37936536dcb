"""
Exact number-theoretic primitives shared by every closed form: gcd, Euler's
totient, divisor lists, additive and multiplicative orders, the primitive root
of the unit group modulo ``2p`` and a binomial coefficient that vanishes
outside its range.

All integers are Python ints, so nothing here can overflow.
"""
import math
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Final, Union

from sympy import divisors as _sympy_divisors, factorint, isprime, n_order

from .exceptions import InvalidPrimeError

#: An index handed to :py:func:`binomial` by a closed form; ``k/d`` style
#: indices arrive as :py:class:`fractions.Fraction`
BinomialIndex = Union[int, Fraction]

#: Generator of ``Z_4^*``, only reachable through the quaternion branch
QUATERNION_UNIT_GENERATOR: Final[int] = 3


class OrderMode(str, Enum):
    ADDITIVE = "additive"
    MULTIPLICATIVE = "multiplicative"


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def totient(n: int) -> int:
    """
    Euler's totient via the product formula ``n * prod(1 - 1/q)`` over the
    distinct primes ``q`` dividing ``n``.

    Raises:
        ValueError: ``n`` is not positive
    """
    if n < 1:
        raise ValueError(f"totient is undefined for n={n}")
    result = n
    for prime in factorint(n):
        result = result // prime * (prime - 1)
    return result


def divisors(n: int) -> list[int]:
    """
    Return all positive divisors of ``n`` in increasing order.
    """
    if n < 1:
        raise ValueError(f"divisors are undefined for n={n}")
    return list(_sympy_divisors(n))


def order_mod(x: int, n: int, mode: OrderMode = OrderMode.MULTIPLICATIVE) -> int:
    """
    Return the least ``m >= 1`` with ``m*x = 0 (mod n)`` in additive mode, or
    ``x**m = 1 (mod n)`` in multiplicative mode.

    Raises:
        ValueError: multiplicative mode with ``gcd(x, n) != 1``
    """
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    if mode == OrderMode.ADDITIVE:
        return n // math.gcd(x % n, n)
    if math.gcd(x, n) != 1:
        raise ValueError(f"{x} is not a unit modulo {n}")
    if n == 1:
        return 1
    return int(n_order(x % n, n))


def require_prime(p: int) -> int:
    if not isprime(p):
        raise InvalidPrimeError(f"p={p} is not a prime")
    return p


def require_odd_prime(p: int) -> int:
    require_prime(p)
    if p == 2:
        raise InvalidPrimeError("p=2 is handled by the quaternion path, an odd prime is required")
    return p


def primitive_root_2p(p: int, *, allow_quaternion: bool = False) -> int:
    """
    Return the smallest generator of the cyclic group ``Z_{2p}^*``.

    Args:
        p: an odd prime
        allow_quaternion: answer ``3`` (the generator of ``Z_4^*``) for
            ``p == 2`` instead of rejecting it

    Raises:
        InvalidPrimeError: ``p`` is not an odd prime (and the quaternion
            branch was not requested)
    """
    if p == 2 and allow_quaternion:
        return QUATERNION_UNIT_GENERATOR
    require_odd_prime(p)
    modulus = 2 * p
    for candidate in range(1, modulus):
        if math.gcd(candidate, modulus) == 1 and order_mod(candidate, modulus) == p - 1:
            return candidate
    raise AssertionError(f"Z_{modulus}^* has no generator")  # pragma: no cover


def binomial(n: int, j: BinomialIndex) -> int:
    """
    Binomial coefficient that is ``0`` whenever ``j < 0``, ``j > n`` or ``j``
    is not an integer.
    """
    if isinstance(j, Fraction):
        if j.denominator != 1:
            return 0
        j = j.numerator
    if n < 0 or j < 0 or j > n:
        return 0
    return math.comb(n, j)


class UnitGroupMod2p:
    """
    The multiplicative group ``Z_{2p}^*`` together with a fixed generator.

    Every unit ``s`` is a power ``z**i_s`` of the generator; :py:meth:`index_of`
    returns that discrete logarithm ``i_s``.

    Args:
        p: a prime; ``p == 2`` yields ``Z_4^* = {1, 3}``
    """

    __slots__ = ("p", "modulus", "generator", "elements", "_index")

    def __init__(self, p: int) -> None:
        require_prime(p)
        self.p = p
        self.modulus = 2 * p
        self.generator = primitive_root_2p(p, allow_quaternion=True)
        powers = [pow(self.generator, i, self.modulus) for i in range(self.order)]
        self._index: dict[int, int] = {value: i for i, value in enumerate(powers)}
        self.elements: tuple[int, ...] = tuple(sorted(self._index))

    @property
    def order(self) -> int:
        return totient(self.modulus)

    def __contains__(self, s: object) -> bool:
        return isinstance(s, int) and s % self.modulus in self._index

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, s: int) -> int:
        try:
            return self._index[s % self.modulus]
        except KeyError:
            raise ValueError(f"{s} is not a unit modulo {self.modulus}") from None


@lru_cache(maxsize=None)
def unit_group(p: int) -> UnitGroupMod2p:
    return UnitGroupMod2p(p)

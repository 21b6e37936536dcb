"""
Exact counts of dicirculant digraphs: closed forms for the totals and the
generating function ``Q(x)`` for the out-degree split.

``Q(x)`` (the cycle index with ``x_k = 1 + x^k``) is the source of truth for
per-degree counts; the displayed expansion of its coefficients is kept as a
cross-check in :py:func:`outdegree_expansion`.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from sympy import QQ, Poly, Rational, Symbol

from .config import OracleBudget
from .cycles import CycleIndexPoly, cycle_index
from .exceptions import DegreeOutOfRangeError, InconsistentCountError, NonIntegralCountError
from .numth import binomial, divisors, gcd, require_odd_prime, require_prime, totient
from .oracle import enumerate_orbits
from .schema import Count, CountReport, DegreeCounts, GroupTag, OrbitSummary, Provenance

logger = logging.getLogger(__name__)

_X = Symbol("x")

#: Orbits of disconnected connection sets that leave ``<a>``, by size:
#: ``{b}`` (size 1), ``{b, a^p b}`` and ``{a^p, b}`` (size 2),
#: ``{a^p, b, a^p b}`` (size 3).  Every other disconnected set lies in ``<a>``.
DISCONNECTED_OUTSIDE_ROTATIONS = {1: 1, 2: 2, 3: 1}


class UniPoly:
    """
    Dense polynomial in one indeterminate with integer coefficients;
    ``coefficients[k]`` multiplies ``x^k``.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence[int]) -> None:
        self.coefficients: tuple[int, ...] = tuple(int(c) for c in coefficients)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __call__(self, value: int) -> int:
        result = 0
        for c in reversed(self.coefficients):
            result = result * value + c
        return result

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coefficients)})"


def _exact(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegralCountError(f"{what} evaluated to the non-integer {value}")
    return value.numerator


def _check_degree(p: int, k: int, top: int) -> None:
    if not 0 <= k <= top:
        raise DegreeOutOfRangeError(f"out-degree k={k} is outside 0..{top} for p={p}")


def evaluate_at_constant(poly: CycleIndexPoly, m: int) -> int:
    """
    Substitute ``x_k = m`` for every ``k``: the number of orbits of
    ``m``-colourings of the permuted points.

    Raises:
        NonIntegralCountError: the result is not an integer
    """
    return _exact(poly.evaluate(lambda k: m), f"cycle index at x_k={m}")


def substitute_one_plus_x(poly: CycleIndexPoly) -> UniPoly:
    """
    Substitute ``x_k = 1 + x^k``; the coefficient of ``x^k`` counts orbits of
    ``k``-subsets.

    Raises:
        NonIntegralCountError: a coefficient is negative or not an integer
    """
    total = Poly(0, _X, domain=QQ)
    for monomial, coefficient in poly.terms.items():
        term = Poly(Rational(coefficient.numerator, coefficient.denominator), _X, domain=QQ)
        for k, e in monomial:
            term *= Poly(1 + _X**k, _X, domain=QQ) ** e
        total += term

    coefficients = []
    for k, c in enumerate(reversed(total.all_coeffs())):
        if c.q != 1 or c < 0:
            raise NonIntegralCountError(f"coefficient of x^{k} is {c}")
        coefficients.append(int(c.p))
    return UniPoly(coefficients)


@lru_cache(maxsize=None)
def generating_function(p: int) -> UniPoly:
    """
    ``Q(x)`` for an odd prime ``p``.
    """
    q = substitute_one_plus_x(cycle_index(p))
    logger.debug("Q(x) for p=%d has degree %d", p, q.degree)
    return q


def count_total(p: int) -> int:
    """
    Number of dicirculant digraphs of order ``4p`` up to isomorphism.

    Raises:
        InvalidPrimeError: ``p`` is not an odd prime
        InconsistentCountError: the closed form disagrees with the cycle index
            evaluated at ``2``
    """
    require_odd_prime(p)
    q = p - 1
    value = Fraction(2 ** (2 * p - 1), p) * (3 - 2 ** (2 * p - 1) - 2 ** (p - 1))
    value += Fraction(4, q) * sum(totient(d) * 2 ** (4 * q // d) for d in divisors(q))
    value += Fraction(2, q) * sum(
        totient(d) * 2 ** (4 * q // d) for d in divisors(q) if d % 2 == 0
    )
    value += Fraction(2, q) * sum(totient(d) * 2 ** (3 * q // d) for d in divisors(q) if d % 2)
    total = _exact(value, f"total count for p={p}")

    from_index = evaluate_at_constant(cycle_index(p), 2)
    if total != from_index:
        raise InconsistentCountError(
            f"p={p}: closed form gives {total}, cycle index at 2 gives {from_index}"
        )
    return total


def count_circulant(p: int) -> int:
    """
    Number of circulant digraphs of order ``2p`` up to isomorphism, which is
    also the number of orbits of connection sets inside ``<a>``.
    """
    require_odd_prime(p)
    q = p - 1
    value = Fraction(1, q) * sum(totient(d) * 2 ** ((2 * p - 2) // d + 1) for d in divisors(q))
    return _exact(value, f"circulant count for p={p}")


def count_connected(p: int) -> int:
    """
    Number of connected dicirculant digraphs: everything except the
    circulant orbits and the four disconnected orbits that leave ``<a>``.
    """
    return count_total(p) - count_circulant(p) - sum(DISCONNECTED_OUTSIDE_ROTATIONS.values())


def count_by_outdegree(p: int, k: int) -> int:
    """
    Number of dicirculant digraphs of out-degree ``k``, read off ``Q(x)``.

    Raises:
        DegreeOutOfRangeError: ``k`` is outside ``0 .. 4p-1``
    """
    require_odd_prime(p)
    top = 4 * p - 1
    _check_degree(p, k, top)
    if k in (0, top):
        return 1
    return generating_function(p).coefficient(k)


def count_circulant_by_outdegree(p: int, k: int) -> int:
    """
    Number of circulant digraphs of order ``2p`` and out-degree ``k``.

    ``gcd(n, 0) == n``, so ``k = 0`` and ``k = 1`` go through the same sums.

    Raises:
        DegreeOutOfRangeError: ``k`` is outside ``0 .. 2p-1``
    """
    require_odd_prime(p)
    _check_degree(p, k, 2 * p - 1)
    q = p - 1
    value = Fraction(0)
    for shift in (0, 1):
        index = k - shift
        for d in divisors(gcd(q, index)):
            value += totient(d) * binomial(2 * q // d, Fraction(index, d))
    return _exact(value / q, f"circulant count for p={p}, k={k}")


def count_connected_by_outdegree(p: int, k: int) -> int:
    """
    Number of connected dicirculant digraphs of out-degree ``k``.

    Raises:
        DegreeOutOfRangeError: ``k`` is outside ``0 .. 4p-1``
    """
    require_odd_prime(p)
    _check_degree(p, k, 4 * p - 1)
    if k < 2:
        return 0
    if k >= 2 * p:
        return count_by_outdegree(p, k)
    # k = 2: the {b, a^p b} and {a^p, b} orbits; k = 3: the {a^p, b, a^p b} orbit
    outside = DISCONNECTED_OUTSIDE_ROTATIONS.get(k, 0)
    return count_by_outdegree(p, k) - count_circulant_by_outdegree(p, k) - outside


def outdegree_expansion(p: int, k: int, totient_weighted: bool = True) -> Fraction:
    """
    Evaluate the displayed binomial expansion of the out-degree count.

    Args:
        p: an odd prime
        k: an out-degree in ``0 .. 4p-1``
        totient_weighted: multiply the odd-``d`` product-of-binomials sums by
            ``Φ(d)``; ``False`` reproduces the printed reading, which differs
            once ``p - 1`` has an odd divisor ``d > 1`` with ``Φ(d) > 1``

    Returns:
        The exact value, which need not be an integer for the printed reading
    """
    require_odd_prime(p)
    _check_degree(p, k, 4 * p - 1)
    q = p - 1
    n = 2 * p - 1

    rotations = (
        sum(binomial(2, j) * binomial(n, k - p * j) for j in range(3))
        + binomial(n, k)
        + binomial(n, k - 2 * p)
        - binomial(4 * p - 1, k)
        - sum(binomial(p, j) * binomial(n, k - 2 * j) for j in range(p + 1))
    )
    value = Fraction(rotations, 2 * p)

    for i, (odd_weight, even_weight) in enumerate(zip((1, 3, 3, 1), (1, 2, 2, 1))):
        shift = k - i
        for d in divisors(gcd(q, shift)):
            phi = totient(d)
            step = Fraction(shift, d)
            if d % 2 == 0:
                value += Fraction(phi * even_weight, q) * binomial(4 * q // d, step)
                continue
            pairs = sum(
                binomial(2 * q // d, step - 2 * j) * binomial(q // d, j) for j in range(q // d + 1)
            )
            weight = phi if totient_weighted else 1
            value += Fraction(odd_weight * phi * binomial(4 * q // d, step) + weight * pairs, 2 * q)
    return value


def check_outdegree_expansion(p: int) -> dict[int, Fraction]:
    """
    Compare both readings of the displayed expansion with ``Q(x)``.

    Returns:
        ``{k: printed value}`` for every ``k`` where the printed reading
        deviates from the generating function

    Raises:
        InconsistentCountError: the ``Φ(d)``-weighted reading deviates
    """
    q = generating_function(p)
    deviations: dict[int, Fraction] = {}
    for k in range(4 * p):
        expected = q.coefficient(k)
        weighted = outdegree_expansion(p, k, totient_weighted=True)
        if weighted != expected:
            raise InconsistentCountError(
                f"p={p}, k={k}: expansion gives {weighted}, Q(x) gives {expected}"
            )
        printed = outdegree_expansion(p, k, totient_weighted=False)
        if printed != expected:
            deviations[k] = printed
    if deviations:
        logger.info(
            "p=%d: printed expansion deviates from Q(x) at k=%s",
            p,
            ",".join(str(k) for k in deviations),
        )
    return deviations


def _summary_report(summary: OrbitSummary) -> CountReport:
    connected = summary.connected_by_size or [0] * len(summary.by_size)
    return CountReport(
        p=summary.p,
        group_tag=summary.group_tag,
        total=Count(value=summary.total, provenance=Provenance.ORACLE),
        connected=Count(value=sum(connected), provenance=Provenance.ORACLE),
        per_degree=[
            DegreeCounts(
                k=k,
                total=Count(value=n, provenance=Provenance.ORACLE),
                connected=Count(value=connected[k], provenance=Provenance.ORACLE),
            )
            for k, n in enumerate(summary.by_size)
        ],
    )


def quaternion_counts(budget: Optional[OracleBudget] = None) -> CountReport:
    """
    Counts for ``p = 2`` by exhaustive sweep, under the alpha-family with the
    brute-forced full automorphism group reported alongside.
    """
    alpha = _summary_report(enumerate_orbits(2, GroupTag.ALPHA_FAMILY, budget))
    full = _summary_report(enumerate_orbits(2, GroupTag.FULL_AUT, budget))
    return alpha.copy(update={"full_aut": full})


def count_report(p: int, budget: Optional[OracleBudget] = None) -> CountReport:
    """
    Every count for one prime; ``p = 2`` is routed to
    :py:func:`quaternion_counts`.
    """
    require_prime(p)
    if p == 2:
        return quaternion_counts(budget)

    per_degree = []
    for k in range(4 * p):
        circulant = None
        if k < 2 * p:
            circulant = Count(
                value=count_circulant_by_outdegree(p, k), provenance=Provenance.CLOSED_FORM
            )
        per_degree.append(
            DegreeCounts(
                k=k,
                total=Count(
                    value=count_by_outdegree(p, k), provenance=Provenance.GENERATING_FUNCTION
                ),
                circulant=circulant,
                connected=Count(
                    value=count_connected_by_outdegree(p, k),
                    provenance=Provenance.GENERATING_FUNCTION,
                ),
            )
        )
    return CountReport(
        p=p,
        total=Count(value=count_total(p), provenance=Provenance.CLOSED_FORM),
        circulant=Count(value=count_circulant(p), provenance=Provenance.CLOSED_FORM),
        connected=Count(value=count_connected(p), provenance=Provenance.CLOSED_FORM),
        per_degree=per_degree,
    )

"""
Cycle types of the automorphism action on ``A = T_{4p} - {e}`` and the cycle
index built from them.

Two routes are kept apart on purpose: :py:func:`cycle_type_direct` walks the
permutation, :py:func:`cycle_type_closed_form` reads the case tables.  The
cycle index likewise exists as :py:func:`cycle_index` (closed-form cycle
types), :py:func:`cycle_index_direct` (walked cycle types) and
:py:func:`cycle_index_symbolic` (sympy expansion of the four-part formula).
"""
import logging
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from sympy import Poly, Rational, expand, symbols

from .exceptions import BudgetExceededError
from .group import (
    Automorphism,
    all_automorphisms,
    dicyclic_group,
    full_automorphisms_bruteforce,
    unit_difference_map,
)
from .numth import divisors, gcd, require_odd_prime, totient, unit_group
from .schema import GroupTag

logger = logging.getLogger(__name__)

#: Sparse monomial ``x_1^{e_1} x_2^{e_2} ...`` as sorted ``(k, e_k)`` pairs
#: with ``e_k > 0``
Monomial = tuple[tuple[int, int], ...]

#: Largest prime for which the automorphism family is walked one by one
DIRECT_MAX_PRIME = 31


class CycleType:
    """
    Cycle-length multiplicities ``{k: b_k}`` of a permutation; lengths with
    ``b_k == 0`` are not stored.
    """

    __slots__ = ("counts",)

    def __init__(self, counts: Mapping[int, int] | None = None) -> None:
        counts = counts or {}
        if any(value < 0 for value in counts.values()):
            raise ValueError("cycle multiplicities cannot be negative")
        self.counts: dict[int, int] = {k: v for k, v in sorted(counts.items()) if v}

    @classmethod
    def from_lengths(cls, lengths: Iterable[int]) -> "CycleType":
        return cls(Counter(lengths))

    def add(self, length: int, multiplicity: int) -> "CycleType":
        """
        Return a copy with ``multiplicity`` more cycles of ``length``.
        Contributions to the same length accumulate.
        """
        counts = dict(self.counts)
        counts[length] = counts.get(length, 0) + multiplicity
        return CycleType(counts)

    def __getitem__(self, length: int) -> int:
        return self.counts.get(length, 0)

    @property
    def points(self) -> int:
        return sum(k * b for k, b in self.counts.items())

    @property
    def monomial(self) -> Monomial:
        return tuple(self.counts.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycleType):
            return NotImplemented
        return self.counts == other.counts

    def __hash__(self) -> int:
        return hash(self.monomial)

    def __repr__(self) -> str:
        return f"CycleType({self.counts})"


def permutation_cycles(perm: Sequence[int]) -> list[list[int]]:
    """
    Standard cycle decomposition of a permutation of ``range(len(perm))``.
    """
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        current = start
        while not seen[current]:
            seen[current] = True
            cycle.append(current)
            current = perm[current]
        cycles.append(cycle)
    return cycles


def cycle_type_direct(action: Automorphism | Sequence[int], p: int) -> CycleType:
    """
    Walk the orbits of an automorphism on ``A``.

    Args:
        action: an ``alpha_{s,t}`` or a vertex permutation of all ``4p``
            elements fixing ``e``
        p: the prime of ``T_{4p}``
    """
    perm = dicyclic_group(p).permutation(action)
    return CycleType.from_lengths(len(cycle) for cycle in permutation_cycles(perm))


def cycle_type_closed_form(p: int, s: int, t: int) -> CycleType:
    """
    Cycle type of ``alpha_{s,t}`` from the case tables.

    With ``g = gcd(i_s, p - 1)`` where ``s = z^{i_s}``, ``o = (p - 1)/g`` is
    the multiplicative order of ``s``.

    Raises:
        InvalidPrimeError: ``p`` is not an odd prime
        ValueError: ``s`` is not a unit modulo ``2p``
    """
    require_odd_prime(p)
    units = unit_group(p)
    modulus = 2 * p
    if s not in units:
        raise ValueError(f"s={s} is not a unit modulo {modulus}")
    s, t = s % modulus, t % modulus

    if s == 1:
        if t == 0:
            return CycleType({1: 4 * p - 1})
        cycle_type = CycleType({1: 2 * p - 1})
        if t == p:
            return cycle_type.add(2, p)
        if t % 2 == 0:
            return cycle_type.add(p, 2)
        return cycle_type.add(2 * p, 1)

    g = gcd(units.index_of(s), p - 1)
    length = (p - 1) // g
    if t % 2 == 0:
        return CycleType({1: 3}).add(length, 4 * g)
    cycle_type = CycleType({1: 1, 2: 1})
    if length % 2 == 0:
        return cycle_type.add(length, 4 * g)
    return cycle_type.add(length, 2 * g).add(2 * length, g)


def conjugating_shift(p: int, s: int, t: int) -> int:
    """
    Return the unit ``x`` with ``x - s x = t`` (mod ``2p``).  The shift
    ``a^j b -> a^{j+x} b`` carries the cycles of ``alpha_{s,0}`` onto those of
    ``alpha_{s,t}`` (and of ``alpha_{s,1}`` onto ``alpha_{s,t+1}``).

    Raises:
        ValueError: ``s == 1`` or ``t`` is not a nonzero even residue
    """
    inverse = {value: x for x, value in unit_difference_map(p, s).items()}
    if s % (2 * p) == 1 or len(inverse) != p - 1:
        raise ValueError(f"x -> x - {s}x is not a bijection modulo {2 * p}")
    try:
        return inverse[t % (2 * p)]
    except KeyError:
        raise ValueError(f"t={t} is not a nonzero even residue modulo {2 * p}") from None


class CycleIndexPoly:
    """
    A cycle index: exact rational coefficients over sparse monomials in
    ``x_1 .. x_n``.

    Args:
        degree: ``n``, the number of permuted points; every monomial must have
            weighted degree ``sum(k * e_k) == n``
        terms: ``{monomial: coefficient}``; zero coefficients are dropped
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Monomial, Fraction]) -> None:
        self.degree = degree
        self.terms: dict[Monomial, Fraction] = {}
        for monomial, coefficient in terms.items():
            if sum(k * e for k, e in monomial) != degree:
                raise ValueError(f"monomial {monomial} does not have weighted degree {degree}")
            if coefficient:
                self.terms[monomial] = Fraction(coefficient)

    @classmethod
    def from_cycle_types(cls, degree: int, cycle_types: Iterable[CycleType]) -> "CycleIndexPoly":
        """
        Average the monomials of the given cycle types (one per group
        element).
        """
        counts = Counter(cycle_type.monomial for cycle_type in cycle_types)
        order = sum(counts.values())
        return cls(degree, {monomial: Fraction(n, order) for monomial, n in counts.items()})

    def __add__(self, other: "CycleIndexPoly") -> "CycleIndexPoly":
        if self.degree != other.degree:
            raise ValueError("cannot add cycle indices over different point sets")
        merged = dict(self.terms)
        for monomial, coefficient in other.terms.items():
            merged[monomial] = merged.get(monomial, Fraction(0)) + coefficient
        return CycleIndexPoly(self.degree, merged)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycleIndexPoly):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self.terms.get(monomial, Fraction(0))

    def coefficient_sum(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    def evaluate(self, value: Callable[[int], Fraction | int]) -> Fraction:
        """
        Substitute ``x_k = value(k)`` and return the exact result.
        """
        total = Fraction(0)
        for monomial, coefficient in self.terms.items():
            product = Fraction(coefficient)
            for k, e in monomial:
                product *= Fraction(value(k)) ** e
            total += product
        return total

    def is_valid(self) -> bool:
        return all(c > 0 for c in self.terms.values()) and self.coefficient_sum() == 1

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """
        Terms in canonical order: dense exponent vectors, descending.
        """

        def dense(monomial: Monomial) -> tuple[int, ...]:
            exponents = dict(monomial)
            return tuple(exponents.get(k, 0) for k in range(1, self.degree + 1))

        return sorted(self.terms.items(), key=lambda item: dense(item[0]), reverse=True)

    def render(self) -> str:
        """
        Canonical text form, one ``num/den*x_k^e*...`` term per line.
        """
        lines = []
        for monomial, coefficient in self.sorted_terms():
            factors = "*".join(f"x_{k}^{e}" for k, e in monomial)
            lines.append(f"{coefficient.numerator}/{coefficient.denominator}*{factors}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"CycleIndexPoly(degree={self.degree}, terms={len(self.terms)})"


@lru_cache(maxsize=None)
def cycle_index(p: int) -> CycleIndexPoly:
    """
    Cycle index of ``Aut(T_{4p})`` on ``A``, assembled from closed-form cycle
    types.

    Raises:
        InvalidPrimeError: ``p`` is not an odd prime
    """
    require_odd_prime(p)
    cycle_types = (cycle_type_closed_form(p, alpha.s, alpha.t) for alpha in all_automorphisms(p))
    poly = CycleIndexPoly.from_cycle_types(4 * p - 1, cycle_types)
    logger.debug("cycle index for p=%d has %d monomials", p, len(poly))
    return poly


def cycle_index_direct(p: int, group_tag: GroupTag = GroupTag.ALPHA_FAMILY) -> CycleIndexPoly:
    """
    Cycle index from walking every automorphism's cycles.

    Args:
        p: a prime
        group_tag: average over the alpha-family or, for small groups, the
            brute-forced full automorphism group

    Raises:
        BudgetExceededError: ``p`` is too large to walk the group
    """
    if p > DIRECT_MAX_PRIME:
        raise BudgetExceededError(f"direct cycle index is limited to p <= {DIRECT_MAX_PRIME}")
    actions: list[Automorphism] | list[tuple[int, ...]]
    if group_tag == GroupTag.FULL_AUT:
        actions = full_automorphisms_bruteforce(p)
    elif group_tag == GroupTag.ALPHA_FAMILY:
        actions = all_automorphisms(p)
    else:
        raise ValueError(f"{group_tag} does not act on T_{4 * p}")
    return CycleIndexPoly.from_cycle_types(
        4 * p - 1, (cycle_type_direct(action, p) for action in actions)
    )


def cycle_index_symbolic(p: int) -> CycleIndexPoly:
    """
    Expand the four-part closed formula for the cycle index with sympy.
    """
    require_odd_prime(p)
    n = 4 * p - 1
    xs = symbols(f"x_1:{n + 1}")

    def x(k: int):
        return xs[k - 1]

    q = p - 1
    odd = [d for d in divisors(q) if d % 2]
    even = [d for d in divisors(q) if d % 2 == 0]
    expr = Rational(1, 2 * p) * x(1) ** (2 * p - 1) * (
        x(p) ** 2 + x(2 * p) - x(1) ** (2 * p) - x(2) ** p
    )
    expr += Rational(1, 2 * q) * x(1) ** 3 * sum(
        totient(d) * x(d) ** (4 * q // d) for d in divisors(q)
    )
    expr += Rational(1, 2 * q) * x(1) * x(2) * sum(totient(d) * x(d) ** (4 * q // d) for d in even)
    expr += Rational(1, 2 * q) * x(1) * x(2) * sum(
        totient(d) * x(d) ** (2 * q // d) * x(2 * d) ** (q // d) for d in odd
    )

    terms: dict[Monomial, Fraction] = {}
    for exponents, coefficient in Poly(expand(expr), *xs).terms():
        monomial = tuple((k + 1, e) for k, e in enumerate(exponents) if e)
        terms[monomial] = Fraction(int(coefficient.p), int(coefficient.q))
    return CycleIndexPoly(n, terms)

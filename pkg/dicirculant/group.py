"""
The dicyclic group ``T_{4p} = <a, b | a^{2p} = 1, a^p = b^2, b^-1 a b = a^-1>``.

Elements are kept in the normal form ``a^i`` / ``a^j b``.  Vertices are
numbered ``e = a^0, a^1, ..., a^{2p-1}, b, a b, ..., a^{2p-1} b`` and a
connection set ``S`` of ``A = T_{4p} - {e}`` is an int bitmask whose bit ``i``
stands for vertex ``i + 1``.
"""
import logging
from functools import cached_property, lru_cache
from typing import Iterable, NamedTuple, Sequence

from .exceptions import BudgetExceededError
from .numth import require_odd_prime, require_prime, unit_group

logger = logging.getLogger(__name__)

#: A connection set as a bitmask over ``A``
ConnectionSet = int

#: An automorphism given by the images of all ``4p`` vertex indices
ElementPermutation = tuple[int, ...]

#: Largest group order the brute-force automorphism search accepts
BRUTEFORCE_MAX_ORDER = 16


class GroupElement(NamedTuple):
    #: ``1`` for the coset ``<a> b``, ``0`` for ``<a>``
    b_part: int
    #: exponent of ``a``, always reduced modulo ``2p``
    exponent: int

    def label(self) -> str:
        if self.b_part:
            return f"a^{self.exponent}.b"
        return f"a^{self.exponent}"


class Automorphism(NamedTuple):
    """
    The automorphism ``alpha_{s,t}``: ``a^i -> a^{s i}`` and
    ``a^j b -> a^{s j + t} b``.
    """

    s: int
    t: int


IDENTITY = GroupElement(0, 0)


class DicyclicGroup:
    """
    Concrete model of ``T_{4p}`` for a prime ``p``.

    Args:
        p: a prime; ``p == 2`` gives the quaternion group ``Q_8``
    """

    def __init__(self, p: int) -> None:
        self.p = require_prime(p)
        #: ``2p``, the order of ``a``
        self.half = 2 * p
        #: ``4p``
        self.order = 4 * p
        #: ``|A| = 4p - 1``, the number of bits in a connection set
        self.degree = self.order - 1

    def __repr__(self) -> str:
        return f"DicyclicGroup(p={self.p})"

    # Elements and indices

    @cached_property
    def elements(self) -> tuple[GroupElement, ...]:
        rotations = [GroupElement(0, i) for i in range(self.half)]
        reflections = [GroupElement(1, j) for j in range(self.half)]
        return tuple(rotations + reflections)

    def element(self, index: int) -> GroupElement:
        return self.elements[index]

    def index(self, g: GroupElement) -> int:
        return g.b_part * self.half + g.exponent

    def a(self, i: int = 1) -> GroupElement:
        return GroupElement(0, i % self.half)

    def ab(self, j: int = 0) -> GroupElement:
        return GroupElement(1, j % self.half)

    def mask_of(self, elements: Iterable[GroupElement]) -> ConnectionSet:
        mask = 0
        for g in elements:
            if g == IDENTITY:
                raise ValueError("the identity never belongs to a connection set")
            mask |= 1 << (self.index(g) - 1)
        return mask

    def elements_of(self, mask: ConnectionSet) -> list[GroupElement]:
        return [self.elements[bit + 1] for bit in range(self.degree) if mask >> bit & 1]

    @cached_property
    def rotation_mask(self) -> ConnectionSet:
        """
        Bitmask of ``A_1 = <a> - {e}``.
        """
        return (1 << (self.half - 1)) - 1

    # Arithmetic

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        n = self.half
        if not g.b_part and not h.b_part:
            return GroupElement(0, (g.exponent + h.exponent) % n)
        if not g.b_part:
            return GroupElement(1, (g.exponent + h.exponent) % n)
        if not h.b_part:
            return GroupElement(1, (g.exponent - h.exponent) % n)
        return GroupElement(0, (g.exponent - h.exponent + self.p) % n)

    def inverse(self, g: GroupElement) -> GroupElement:
        if g.b_part:
            return GroupElement(1, (g.exponent + self.p) % self.half)
        return GroupElement(0, -g.exponent % self.half)

    def power(self, g: GroupElement, n: int) -> GroupElement:
        result = IDENTITY
        for _ in range(n):
            result = self.mul(result, g)
        return result

    def element_order(self, g: GroupElement) -> int:
        n, current = 1, g
        while current != IDENTITY:
            current = self.mul(current, g)
            n += 1
        return n

    @cached_property
    def table(self) -> tuple[tuple[int, ...], ...]:
        """
        Cayley table over vertex indices: ``table[i][j]`` is the index of
        ``element(i) * element(j)``.
        """
        return tuple(
            tuple(self.index(self.mul(g, h)) for h in self.elements) for g in self.elements
        )

    # Subgroups and connectivity

    def closure(self, generators: Iterable[int]) -> frozenset[int]:
        """
        Return the vertex indices of the subgroup generated by the given
        vertex indices.
        """
        gens = list(set(generators))
        reached = {0}
        frontier = [0]
        while frontier:
            current = frontier.pop()
            for s in gens:
                product = self.table[s][current]
                if product not in reached:
                    reached.add(product)
                    frontier.append(product)
        return frozenset(reached)

    def generated_subgroup(self, S: ConnectionSet) -> list[GroupElement]:
        """
        Return the subgroup generated by ``S`` (always containing ``e``),
        sorted in vertex order.
        """
        indices = self.closure(bit + 1 for bit in range(self.degree) if S >> bit & 1)
        return [self.elements[i] for i in sorted(indices)]

    def is_connected(self, S: ConnectionSet) -> bool:
        return len(self.generated_subgroup(S)) == self.order

    @cached_property
    def subgroup_lattice(self) -> tuple[frozenset[int], ...]:
        """
        Every subgroup of ``T_{4p}`` as a set of vertex indices, found by
        joining cyclic subgroups until nothing new appears.
        """
        subgroups = {self.closure([i]) for i in range(self.order)}
        pending = list(subgroups)
        while pending:
            current = pending.pop()
            for other in list(subgroups):
                joined = self.closure(current | other)
                if joined not in subgroups:
                    subgroups.add(joined)
                    pending.append(joined)
        logger.debug("T_%d has %d subgroups", self.order, len(subgroups))
        return tuple(sorted(subgroups, key=lambda h: (len(h), sorted(h))))

    @cached_property
    def maximal_subgroup_masks(self) -> tuple[ConnectionSet, ...]:
        """
        ``A``-bitmasks of the maximal proper subgroups.  ``S`` generates the
        group iff it is contained in none of them.
        """
        proper = [h for h in self.subgroup_lattice if len(h) < self.order]
        maximal = [h for h in proper if not any(h < other for other in proper)]
        return tuple(sum(1 << (i - 1) for i in h if i) for h in maximal)

    # Automorphisms

    def apply_automorphism(self, alpha: Automorphism, g: GroupElement) -> GroupElement:
        if g.b_part:
            return GroupElement(1, (alpha.s * g.exponent + alpha.t) % self.half)
        return GroupElement(0, alpha.s * g.exponent % self.half)

    def vertex_permutation(self, alpha: Automorphism) -> ElementPermutation:
        return tuple(self.index(self.apply_automorphism(alpha, g)) for g in self.elements)

    def permutation(self, action: Automorphism | Sequence[int]) -> tuple[int, ...]:
        """
        Restrict an automorphism to ``A`` and return it as a permutation of
        the bit positions ``0 .. 4p-2``.
        """
        images = self.vertex_permutation(action) if isinstance(action, Automorphism) else action
        if len(images) != self.order or images[0] != 0:
            raise ValueError("an automorphism must permute all 4p elements and fix e")
        return tuple(images[v + 1] - 1 for v in range(self.degree))

    def apply_to_set(self, action: Automorphism | Sequence[int], S: ConnectionSet) -> ConnectionSet:
        perm = self.permutation(action)
        image = 0
        for bit in range(self.degree):
            if S >> bit & 1:
                image |= 1 << perm[bit]
        return image

    def is_automorphism(self, images: Sequence[int]) -> bool:
        if sorted(images) != list(range(self.order)):
            return False
        table = self.table
        return all(
            images[table[i][j]] == table[images[i]][images[j]]
            for i in range(self.order)
            for j in range(self.order)
        )


@lru_cache(maxsize=None)
def dicyclic_group(p: int) -> DicyclicGroup:
    return DicyclicGroup(p)


def all_automorphisms(p: int) -> list[Automorphism]:
    """
    Return the family ``alpha_{s,t}`` for ``s`` in ``Z_{2p}^*`` and ``t`` in
    ``Z_{2p}``.

    For odd ``p`` this is all of ``Aut(T_{4p})`` (``2p(p-1)`` members).  For
    ``p == 2`` it is the 8-member alpha-family, a proper subgroup of
    ``Aut(Q_8)``; see :py:func:`full_automorphisms_bruteforce`.
    """
    units = unit_group(p)
    return [Automorphism(s, t) for s in units for t in range(2 * p)]


def full_automorphisms_bruteforce(p: int) -> list[ElementPermutation]:
    """
    Find every automorphism of ``T_{4p}`` by backtracking over the images of
    the generators ``a`` and ``b``.

    Returns:
        Vertex permutations, sorted, each fixing ``e``

    Raises:
        BudgetExceededError: the group has more than 16 elements
    """
    group = dicyclic_group(p)
    if group.order > BRUTEFORCE_MAX_ORDER:
        raise BudgetExceededError(
            f"brute-force automorphism search is limited to order {BRUTEFORCE_MAX_ORDER}, "
            f"T_{group.order} is too large"
        )
    a_images = [x for x in group.elements if group.element_order(x) == group.half]
    found: set[ElementPermutation] = set()
    for x in a_images:
        x_inverse = group.inverse(x)
        x_p = group.power(x, p)
        for y in group.elements:
            if group.mul(y, y) != x_p:
                continue
            if group.mul(group.mul(group.inverse(y), x), y) != x_inverse:
                continue
            images = [0] * group.order
            for i in range(group.half):
                x_i = group.power(x, i)
                images[i] = group.index(x_i)
                images[group.half + i] = group.index(group.mul(x_i, y))
            if group.is_automorphism(images):
                found.add(tuple(images))
    logger.debug("brute force found %d automorphisms of T_%d", len(found), group.order)
    return sorted(found)


def unit_difference_map(p: int, s: int) -> dict[int, int]:
    """
    The map ``x -> (x - s x) mod 2p`` on ``Z_{2p}^*``, as ``{x: x - s x}``.

    For ``s != 1`` it is a bijection onto ``{2, 4, ..., 2p - 2}``.
    """
    require_odd_prime(p)
    modulus = 2 * p
    return {x: (x - s * x) % modulus for x in unit_group(p)}


def compose(first: Automorphism, second: Automorphism, p: int) -> Automorphism:
    """
    Return ``first o second`` (apply ``second``, then ``first``) as a member
    of the family.
    """
    modulus = 2 * p
    return Automorphism(first.s * second.s % modulus, (first.s * second.t + first.t) % modulus)


def disconnected_family(p: int) -> set[ConnectionSet]:
    """
    Masks of the connection sets outside ``<a>`` whose digraph is still
    disconnected: ``{a^j b}``, ``{a^j b, a^{p+j} b}``, ``{a^p, a^j b}`` and
    ``{a^p, a^j b, a^{p+j} b}``.
    """
    group = dicyclic_group(p)
    a_p = group.a(p)
    family: set[ConnectionSet] = set()
    for j in range(group.half):
        pair = [group.ab(j), group.ab(j + p)]
        for members in ([pair[0]], pair, [a_p, pair[0]], [a_p, *pair]):
            family.add(group.mask_of(members))
    return family


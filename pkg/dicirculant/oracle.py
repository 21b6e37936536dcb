"""
Independent ground truth: exhaustive orbit sweeps over every subset of the
permuted points, canonical representatives and the Cayley digraphs
themselves.

A subset is counted iff it is the least bitmask of its orbit, so a sweep
needs no memory of the orbits it has seen and any split of the bitmask range
into disjoint partitions merges by plain addition.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import networkx as nx
import numpy as np

from .config import OracleBudget
from .exceptions import BudgetExceededError
from .group import (
    ConnectionSet,
    all_automorphisms,
    dicyclic_group,
    full_automorphisms_bruteforce,
)
from .numth import require_odd_prime, require_prime, unit_group
from .schema import GroupTag, OrbitSummary

logger = logging.getLogger(__name__)

#: Largest prime the circulant sweep accepts
CIRCULANT_MAX_PRIME = 13

_BYTE_VALUES = np.arange(256, dtype=np.int64)
_POPCOUNT = np.array([bin(v).count("1") for v in range(256)], dtype=np.int64)


@dataclass
class _PartialSweep:
    by_size: list[int]
    connected_by_size: Optional[list[int]]
    representatives: dict[int, list[int]] = field(default_factory=dict)

    def merge(self, other: "_PartialSweep") -> "_PartialSweep":
        connected = None
        if self.connected_by_size is not None and other.connected_by_size is not None:
            connected = [a + b for a, b in zip(self.connected_by_size, other.connected_by_size)]
        representatives = {k: list(v) for k, v in self.representatives.items()}
        for k, masks in other.representatives.items():
            representatives.setdefault(k, []).extend(masks)
        return _PartialSweep(
            by_size=[a + b for a, b in zip(self.by_size, other.by_size)],
            connected_by_size=connected,
            representatives=representatives,
        )


@dataclass(frozen=True)
class _SweepTask:
    points: int
    #: ``tables[g][c][v]``: image under permutation ``g`` of the bits ``v``
    #: sitting in byte ``c`` of a mask
    tables: tuple[tuple[np.ndarray, ...], ...]
    lo: int
    hi: int
    block: int
    #: ``A``-masks of maximal subgroups; ``None`` skips connectivity
    maximal_masks: Optional[tuple[int, ...]]
    collect: bool = False
    collect_size: Optional[int] = None
    connected_only: bool = False


def _byte_tables(perm: Sequence[int]) -> tuple[np.ndarray, ...]:
    chunks = (len(perm) + 7) // 8
    tables = []
    for c in range(chunks):
        table = np.zeros(256, dtype=np.int64)
        for b in range(8):
            bit = 8 * c + b
            if bit < len(perm):
                table |= np.where(_BYTE_VALUES >> b & 1, np.int64(1) << perm[bit], 0)
        tables.append(table)
    return tuple(tables)


def _apply_tables(tables: tuple[np.ndarray, ...], masks: np.ndarray) -> np.ndarray:
    image = tables[0][masks & 255]
    for c in range(1, len(tables)):
        image |= tables[c][masks >> (8 * c) & 255]
    return image


def _popcount(masks: np.ndarray, points: int) -> np.ndarray:
    counts = _POPCOUNT[masks & 255]
    for c in range(1, (points + 7) // 8):
        counts += _POPCOUNT[masks >> (8 * c) & 255]
    return counts


def _sweep_range(task: _SweepTask) -> _PartialSweep:
    size_bins = task.points + 1
    by_size = np.zeros(size_bins, dtype=np.int64)
    connected_by_size = np.zeros(size_bins, dtype=np.int64)
    representatives: dict[int, list[int]] = {}
    full = (1 << task.points) - 1

    for start in range(task.lo, task.hi, task.block):
        candidates = np.arange(start, min(task.hi, start + task.block), dtype=np.int64)
        for tables in task.tables:
            candidates = candidates[_apply_tables(tables, candidates) >= candidates]
            if not candidates.size:
                break
        sizes = _popcount(candidates, task.points)
        by_size += np.bincount(sizes, minlength=size_bins)

        connected = None
        if task.maximal_masks is not None:
            connected = np.ones(candidates.size, dtype=bool)
            for subgroup in task.maximal_masks:
                connected &= (candidates & (full ^ subgroup)) != 0
            connected_by_size += np.bincount(sizes[connected], minlength=size_bins)

        if task.collect:
            keep = np.ones(candidates.size, dtype=bool)
            if task.collect_size is not None:
                keep &= sizes == task.collect_size
            if task.connected_only and connected is not None:
                keep &= connected
            for mask, size in zip(candidates[keep].tolist(), sizes[keep].tolist()):
                representatives.setdefault(size, []).append(mask)

    return _PartialSweep(
        by_size=by_size.tolist(),
        connected_by_size=connected_by_size.tolist() if task.maximal_masks is not None else None,
        representatives=representatives,
    )


def _partition(points: int, partitions: int) -> list[tuple[int, int]]:
    total = 1 << points
    partitions = max(1, min(partitions, total))
    edges = [total * i // partitions for i in range(partitions + 1)]
    return [(lo, hi) for lo, hi in zip(edges, edges[1:]) if lo < hi]


def _check_budget(p: int, points: int, group_order: int, budget: OracleBudget) -> None:
    if p > budget.max_prime:
        raise BudgetExceededError(f"orbit sweeps stop at p={budget.max_prime}, got p={p}")
    if not budget.admits(points, group_order):
        raise BudgetExceededError(
            f"sweeping 2^{points} subsets under {group_order} automorphisms exceeds "
            f"max_work={budget.max_work}; raise --budget to opt in"
        )


def _sweep(
    points: int,
    perms: Sequence[Sequence[int]],
    budget: OracleBudget,
    maximal_masks: Optional[tuple[int, ...]],
    collect: bool = False,
    collect_size: Optional[int] = None,
    connected_only: bool = False,
) -> _PartialSweep:
    identity = tuple(range(points))
    tables = tuple(_byte_tables(perm) for perm in perms if tuple(perm) != identity)
    tasks = [
        _SweepTask(
            points=points,
            tables=tables,
            lo=lo,
            hi=hi,
            block=1 << budget.block_bits,
            maximal_masks=maximal_masks,
            collect=collect,
            collect_size=collect_size,
            connected_only=connected_only,
        )
        for lo, hi in _partition(points, budget.partitions)
    ]
    logger.debug("sweeping 2^%d masks in %d partition(s)", points, len(tasks))
    if len(tasks) == 1:
        partials = [_sweep_range(tasks[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(tasks)) as pool:
            partials = list(pool.map(_sweep_range, tasks))
    result = partials[0]
    for partial in partials[1:]:
        result = result.merge(partial)
    return result


def group_permutations(p: int, group_tag: GroupTag) -> list[tuple[int, ...]]:
    """
    The chosen automorphism group of ``T_{4p}`` as permutations of the bit
    positions of ``A``.
    """
    group = dicyclic_group(p)
    group_tag = GroupTag(group_tag)
    if group_tag == GroupTag.ALPHA_FAMILY:
        return [group.permutation(alpha) for alpha in all_automorphisms(p)]
    if group_tag == GroupTag.FULL_AUT:
        return [group.permutation(images) for images in full_automorphisms_bruteforce(p)]
    raise ValueError(f"{group_tag} does not act on T_{4 * p}")


def circulant_permutations(p: int) -> list[tuple[int, ...]]:
    """
    Multiplication by each unit of ``Z_{2p}`` as a permutation of the bit
    positions of ``Z_{2p} - {0}`` (bit ``i`` is the residue ``i + 1``).
    """
    modulus = 2 * p
    return [
        tuple(s * residue % modulus - 1 for residue in range(1, modulus)) for s in unit_group(p)
    ]


def enumerate_orbits(
    p: int,
    group_tag: GroupTag = GroupTag.ALPHA_FAMILY,
    budget: Optional[OracleBudget] = None,
    *,
    collect: bool = False,
    collect_size: Optional[int] = None,
    connected_only: bool = False,
) -> OrbitSummary:
    """
    Count the orbits of all connection sets under an automorphism group,
    overall, by size and by size among connected digraphs.

    Args:
        p: a prime, at most 7
        group_tag: the alpha-family or (for ``4p <= 16``) the full group
        budget: sweep limits; defaults admit ``p <= 5``
        collect: also return the canonical representatives
        collect_size: only collect representatives of this size
        connected_only: only collect representatives of connected digraphs

    Raises:
        BudgetExceededError: the sweep is larger than ``budget`` allows
    """
    require_prime(p)
    group_tag = GroupTag(group_tag)
    budget = budget or OracleBudget()
    group = dicyclic_group(p)
    perms = group_permutations(p, group_tag)
    _check_budget(p, group.degree, len(perms), budget)
    partial = _sweep(
        group.degree,
        perms,
        budget,
        group.maximal_subgroup_masks,
        collect=collect,
        collect_size=collect_size,
        connected_only=connected_only,
    )
    logger.info(
        "p=%d %s: %d orbits, %d connected",
        p,
        group_tag.value,
        sum(partial.by_size),
        sum(partial.connected_by_size or []),
    )
    return OrbitSummary(
        p=p,
        group_tag=group_tag,
        group_order=len(perms),
        total=sum(partial.by_size),
        by_size=partial.by_size,
        connected_by_size=partial.connected_by_size,
        representatives=partial.representatives if collect else None,
    )


def enumerate_circulant_orbits(p: int, budget: Optional[OracleBudget] = None) -> OrbitSummary:
    """
    Orbits of subsets of ``Z_{2p} - {0}`` under multiplication by
    ``Z_{2p}^*``.

    Raises:
        BudgetExceededError: ``p > 13``
    """
    require_odd_prime(p)
    if p > CIRCULANT_MAX_PRIME:
        raise BudgetExceededError(f"circulant sweeps stop at p={CIRCULANT_MAX_PRIME}")
    budget = budget or OracleBudget()
    partial = _sweep(2 * p - 1, circulant_permutations(p), budget, None)
    return OrbitSummary(
        p=p,
        group_tag=GroupTag.CIRCULANT_UNITS,
        group_order=p - 1,
        total=sum(partial.by_size),
        by_size=partial.by_size,
    )


def representatives(
    p: int,
    k: Optional[int] = None,
    connected_only: bool = False,
    group_tag: GroupTag = GroupTag.ALPHA_FAMILY,
    budget: Optional[OracleBudget] = None,
) -> list[ConnectionSet]:
    """
    Canonical bitmask of every orbit with ``|S| == k`` (every size when ``k``
    is ``None``), in increasing order.
    """
    summary = enumerate_orbits(
        p,
        group_tag,
        budget,
        collect=True,
        collect_size=k,
        connected_only=connected_only,
    )
    found = summary.representatives or {}
    return sorted(mask for masks in found.values() for mask in masks)


def image_of(mask: ConnectionSet, perm: Sequence[int]) -> ConnectionSet:
    image = 0
    for bit, target in enumerate(perm):
        if mask >> bit & 1:
            image |= 1 << target
    return image


def orbit_of(mask: ConnectionSet, perms: Iterable[Sequence[int]]) -> set[ConnectionSet]:
    return {image_of(mask, perm) for perm in perms}


def canonical_form(mask: ConnectionSet, perms: Iterable[Sequence[int]]) -> ConnectionSet:
    return min(orbit_of(mask, perms))


def build_cayley_digraph(p: int, S: ConnectionSet) -> nx.DiGraph:
    """
    ``Cay(T_{4p}, S)``: one vertex per element in the fixed order (``e``
    first) and an arc ``g -> s g`` for every ``g`` and every ``s`` in ``S``.
    """
    group = dicyclic_group(p)
    generators = [bit + 1 for bit in range(group.degree) if S >> bit & 1]
    graph = nx.DiGraph(p=p, connection_set=S, out_degree=len(generators))
    for index, g in enumerate(group.elements):
        graph.add_node(index, label=g.label())
    for index in range(group.order):
        for s in generators:
            graph.add_edge(index, group.table[s][index])
    return graph


def digraph_arcs(graph: nx.DiGraph) -> list[tuple[int, int]]:
    return sorted(graph.edges())


def digraph_reachable_from_identity(graph: nx.DiGraph) -> set[int]:
    return nx.descendants(graph, 0) | {0}

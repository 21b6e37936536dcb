import random

import networkx as nx
import pytest

from dicirculant.config import OracleBudget
from dicirculant.counting import count_circulant, count_circulant_by_outdegree, count_total
from dicirculant.exceptions import BudgetExceededError
from dicirculant.group import dicyclic_group
from dicirculant.oracle import (
    build_cayley_digraph,
    canonical_form,
    circulant_permutations,
    digraph_arcs,
    digraph_reachable_from_identity,
    enumerate_circulant_orbits,
    enumerate_orbits,
    group_permutations,
    orbit_of,
    representatives,
)
from dicirculant.schema import GroupTag


def test_quaternion_orbits():
    summary = enumerate_orbits(2)
    assert summary.total == 36
    assert summary.connected_total == 26
    assert summary.group_order == 8
    assert tuple(summary.connected_by_size[2:]) == (2, 6, 8, 6, 3, 1)
    assert summary.by_size == [1, 3, 6, 8, 8, 6, 3, 1]


def test_quaternion_full_automorphism_orbits():
    alpha = enumerate_orbits(2)
    full = enumerate_orbits(2, GroupTag.FULL_AUT)
    assert full.group_order == 24
    assert full.total <= alpha.total
    assert full.connected_total <= alpha.connected_total


@pytest.mark.parametrize("p,total", ((3, 272), (5, 14256)))
def test_orbit_totals(p, total):
    summary = enumerate_orbits(p)
    assert summary.total == total == count_total(p)
    assert summary.by_size == summary.by_size[::-1]


def test_size_restricted_count():
    assert enumerate_orbits(3).by_size[2] == 12


def test_connected_counts_are_not_palindromic():
    summary = enumerate_orbits(3)
    assert summary.connected_by_size != summary.connected_by_size[::-1]


def test_sweep_is_independent_of_partitioning():
    baseline = enumerate_orbits(3)
    split = enumerate_orbits(3, budget=OracleBudget(partitions=3, block_bits=8))
    assert split == baseline


def test_collected_representatives_survive_partitioning():
    single = representatives(3, 3)
    split = representatives(3, 3, budget=OracleBudget(partitions=4, block_bits=8))
    assert single == split


def test_budget_is_enforced():
    with pytest.raises(BudgetExceededError):
        enumerate_orbits(3, budget=OracleBudget(max_work=1024))
    with pytest.raises(BudgetExceededError):
        enumerate_orbits(7)
    with pytest.raises(BudgetExceededError):
        enumerate_orbits(11, budget=OracleBudget(max_work=2**80))


@pytest.mark.parametrize("p,total,singletons", ((3, 20, 3), (5, 140, 3)))
def test_circulant_orbits(p, total, singletons):
    summary = enumerate_circulant_orbits(p)
    assert summary.total == total
    assert summary.by_size[1] == singletons
    assert summary.connected_by_size is None


@pytest.mark.parametrize("p", (7, 11, 13))
def test_circulant_sweep_matches_closed_forms(p):
    summary = enumerate_circulant_orbits(p)
    assert summary.by_size == [count_circulant_by_outdegree(p, k) for k in range(2 * p)]
    assert summary.total == count_circulant(p)


def test_circulant_permutations_multiply_residues():
    assert sorted(circulant_permutations(3)) == [(0, 1, 2, 3, 4), (4, 3, 2, 1, 0)]


def test_circulant_orbits_refuse_large_primes():
    with pytest.raises(BudgetExceededError):
        enumerate_circulant_orbits(17)


def test_quaternion_representatives(quaternion_representatives):
    group = dicyclic_group(2)
    assert representatives(2, 1) == [
        group.mask_of([group.a(1)]),
        group.mask_of([group.a(2)]),
        group.mask_of([group.ab(0)]),
    ]
    found = representatives(2)
    assert len(found) == 36
    perms = group_permutations(2, GroupTag.ALPHA_FAMILY)
    listed = {canonical_form(mask, perms) for mask in quaternion_representatives}
    assert listed == set(found)


def test_quaternion_disconnected_representatives(quaternion_disconnected):
    group = dicyclic_group(2)
    perms = group_permutations(2, GroupTag.ALPHA_FAMILY)
    connected = set(representatives(2, connected_only=True))
    disconnected = set(representatives(2)) - connected
    assert disconnected == {canonical_form(mask, perms) for mask in quaternion_disconnected}
    assert not any(group.is_connected(mask) for mask in disconnected)


def test_empty_representative():
    assert representatives(3, 0) == [0]


@pytest.mark.parametrize("p", (2, 3))
def test_representatives_are_orbit_minima(p):
    perms = group_permutations(p, GroupTag.ALPHA_FAMILY)
    for mask in representatives(p):
        assert mask == min(orbit_of(mask, perms))


def test_connected_representatives_of_size_two():
    assert len(representatives(3, 2, connected_only=True)) == 4


@pytest.mark.parametrize("p", (2, 3, 5))
def test_orbit_sizes_divide_group_order(p):
    rng = random.Random(p)
    perms = group_permutations(p, GroupTag.ALPHA_FAMILY)
    degree = dicyclic_group(p).degree
    for _ in range(1000):
        mask = rng.getrandbits(degree)
        assert len(perms) % len(orbit_of(mask, perms)) == 0


def test_empty_digraph():
    graph = build_cayley_digraph(3, 0)
    assert graph.number_of_nodes() == 12
    assert graph.number_of_edges() == 0


def test_quaternion_rotation_digraph_is_two_four_cycles():
    group = dicyclic_group(2)
    graph = build_cayley_digraph(2, group.mask_of([group.a(1)]))
    components = sorted(nx.weakly_connected_components(graph), key=min)
    assert [sorted(c) for c in components] == [[0, 1, 2, 3], [4, 5, 6, 7]]
    assert all(len(cycle) == 4 for cycle in nx.simple_cycles(graph))
    assert graph.nodes[5]["label"] == "a^1.b"


def test_arcs_are_left_multiplications():
    p = 3
    group = dicyclic_group(p)
    S = group.mask_of([group.a(2), group.ab(1)])
    graph = build_cayley_digraph(p, S)
    expected = sorted(
        (v, group.index(group.mul(s, group.element(v))))
        for v in range(group.order)
        for s in group.elements_of(S)
    )
    assert digraph_arcs(graph) == expected
    assert all(degree == 2 for _, degree in graph.out_degree())


@pytest.mark.parametrize("p", (2, 3))
def test_reachability_matches_generated_subgroup_exhaustively(p):
    group = dicyclic_group(p)
    for S in range(1 << group.degree):
        reached = digraph_reachable_from_identity(build_cayley_digraph(p, S))
        assert len(reached) == len(group.generated_subgroup(S))


def test_reachability_matches_generated_subgroup_sampled():
    group = dicyclic_group(5)
    rng = random.Random(5)
    for _ in range(300):
        S = rng.getrandbits(group.degree)
        reached = digraph_reachable_from_identity(build_cayley_digraph(5, S))
        assert len(reached) == len(group.generated_subgroup(S))


@pytest.mark.slow
def test_seven_sweep_reproduces_published_connected_total():
    budget = OracleBudget(max_work=2**34, partitions=4)
    summary = enumerate_orbits(7, budget=budget)
    assert summary.connected_total == 1616932

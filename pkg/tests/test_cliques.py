"""Exact search engine against brute force and networkx oracles."""

import random
from itertools import combinations

import networkx as nx
import pytest

from partint import (
    Partition,
    Relation,
    ResourceGuardError,
    SearchBudgetExceeded,
    SetFamilyInstance,
    build_graph,
    check_uniqueness,
    count_all,
    count_partitions,
    distinct_common_count,
    enumerate_all,
    enumerate_partitions,
    max_family,
    max_family_all_lengths,
    max_family_set_system,
    multiset_common_count,
    t_intersects,
)


def common_fn(relation):
    return multiset_common_count if relation == "multiset" else distinct_common_count


def oracle_max_clique(members, relation, t):
    """networkx maximum clique over the eligible induced subgraph."""
    common = common_fn(relation)
    eligible = [
        i for i, p in enumerate(members) if t == 0 or common(p.parts, p.parts) >= t
    ]
    graph = nx.Graph()
    graph.add_nodes_from(eligible)
    for i, j in combinations(eligible, 2):
        if t == 0 or common(members[i].parts, members[j].parts) >= t:
            graph.add_edge(i, j)
    best = 0
    best_sets = []
    for clique in nx.find_cliques(graph):
        if len(clique) > best:
            best, best_sets = len(clique), [sorted(clique)]
        elif len(clique) == best:
            best_sets.append(sorted(clique))
    return best, best_sets


class TestGraphConstruction:
    def test_adjacency_matches_pairwise_relation(self):
        rng = random.Random(61)
        for _ in range(25):
            n = rng.randint(4, 14)
            k = rng.randint(2, min(6, n))
            t = rng.randint(0, 3)
            relation = rng.choice(["multiset", "proper"])
            members = enumerate_partitions(n, k)
            graph = build_graph(members, relation, t)
            common = common_fn(relation)
            for u in range(len(members)):
                u_ok = t == 0 or common(members[u].parts, members[u].parts) >= t
                assert bool((graph.eligible >> u) & 1) == u_ok
                for v in range(len(members)):
                    bit = (graph.adjacency[u] >> v) & 1
                    if u == v:
                        assert bit == 0
                        continue
                    v_ok = t == 0 or common(members[v].parts, members[v].parts) >= t
                    edge = (
                        u_ok
                        and v_ok
                        and (t == 0 or common(members[u].parts, members[v].parts) >= t)
                    )
                    assert bit == int(edge), (n, k, t, relation, u, v)

    def test_level_zero_is_complete(self):
        members = enumerate_partitions(9, 3)
        graph = build_graph(members, Relation.MULTISET, 0)
        out = max_family(graph)
        assert out.max_size == len(members)

    def test_negative_level_rejected(self):
        with pytest.raises(ValueError):
            build_graph(enumerate_partitions(5, 2), "multiset", -1)

    def test_vertex_guard(self):
        with pytest.raises(ResourceGuardError):
            build_graph(enumerate_partitions(30, 6), "multiset", 1, max_vertices=10)

    def test_vertex_ids_maps_families(self):
        members = enumerate_partitions(10, 3)
        graph = build_graph(members, "multiset", 1)
        family = [Partition((1, 4, 5)), Partition((1, 1, 8))]
        assert graph.vertex_ids(family) == [0, 3]


class TestEngineAgainstOracles:
    def test_random_instances_match_networkx(self):
        rng = random.Random(67)
        for _ in range(30):
            n = rng.randint(5, 13)
            k = rng.randint(2, min(6, n))
            t = rng.randint(1, 3)
            relation = rng.choice(["multiset", "proper"])
            members = enumerate_partitions(n, k)
            graph = build_graph(members, relation, t)
            out = max_family(graph)
            expected, _ = oracle_max_clique(members, relation, t)
            assert out.max_size == expected, (n, k, t, relation)

    def test_mixed_lengths_match_networkx(self):
        for n in range(2, 11):
            members = enumerate_all(n)
            graph = build_graph(members, "multiset", 1)
            out = max_family(graph)
            expected, _ = oracle_max_clique(members, "multiset", 1)
            assert out.max_size == expected == count_all(n - 1)

    def test_deterministic_witness_is_lexicographic_minimum(self):
        for n, k in [(9, 3), (10, 3), (11, 4)]:
            members = enumerate_partitions(n, k)
            graph = build_graph(members, "multiset", 1)
            out = max_family(graph, deterministic=True)
            _, all_max = oracle_max_clique(members, "multiset", 1)
            assert out.witness == min(all_max)

    def test_witness_is_a_valid_family(self):
        rng = random.Random(71)
        for _ in range(20):
            n = rng.randint(6, 13)
            k = rng.randint(2, 5)
            members = enumerate_partitions(n, k)
            graph = build_graph(members, "multiset", 1)
            out = max_family(graph)
            fam = [members[v] for v in out.witness]
            assert len(fam) == out.max_size
            for a, b in combinations(fam, 2):
                assert t_intersects(a, b, 1)

    def test_repeat_runs_identical(self):
        members = enumerate_partitions(12, 4)
        graph = build_graph(members, "multiset", 1)
        first = max_family(graph)
        second = max_family(graph)
        assert first.max_size == second.max_size
        assert first.witness == second.witness


class TestKnownInstances:
    def test_star_is_maximum_at_10_3(self):
        members = enumerate_partitions(10, 3)
        graph = build_graph(members, "multiset", 1)
        star = [i for i, p in enumerate(members) if p.parts[0] == 1]
        out = max_family(graph, star=star)
        assert out.max_size == 4 == count_partitions(9, 2)
        assert out.star_is_maximum
        # lexicographically smallest maximum family is the star itself
        assert [members[v].parts for v in out.witness] == [
            (1, 1, 8),
            (1, 2, 7),
            (1, 3, 6),
            (1, 4, 5),
        ]

    def test_star_beaten_at_8_3(self):
        """The size-4 family over P(8, 3); brute force has the last word."""
        members = enumerate_partitions(8, 3)
        assert [p.parts for p in members] == [
            (1, 1, 6),
            (1, 2, 5),
            (1, 3, 4),
            (2, 2, 4),
            (2, 3, 3),
        ]
        graph = build_graph(members, "multiset", 1)
        star = [i for i, p in enumerate(members) if p.parts[0] == 1]
        assert len(star) == 3 == count_partitions(7, 2)
        out = max_family(graph, star=star)
        assert out.max_size == 4
        assert out.star_is_maximum is False
        assert [members[v].parts for v in out.witness] == [
            (1, 2, 5),
            (1, 3, 4),
            (2, 2, 4),
            (2, 3, 3),
        ]
        # independent exhaustive confirmation over all 2^5 subsets
        best = 0
        for r in range(1, len(members) + 1):
            for subset in combinations(members, r):
                if all(t_intersects(a, b, 1) for a, b in combinations(subset, 2)):
                    best = max(best, r)
        assert best == 4

    def test_lifted_families_beat_higher_level_stars(self):
        # prepending ones to the size-4 family transports it to level t
        for t, n, k in [(2, 9, 4), (3, 10, 5)]:
            members = enumerate_partitions(n, k)
            graph = build_graph(members, "multiset", t)
            star = [i for i, p in enumerate(members) if all(x == 1 for x in p.parts[:t])]
            out = max_family(graph, star=star)
            assert len(star) == 3 and out.max_size == 4, (n, k, t)
            lifted = [
                Partition((1,) * (t - 1) + base)
                for base in [(1, 2, 5), (1, 3, 4), (2, 2, 4), (2, 3, 3)]
            ]
            assert [members[v] for v in out.witness] == lifted

    def test_proper_relation_small_instances(self):
        # all vertices ineligible: the single partition of 3 into 3 parts
        # has one distinct part
        members = enumerate_partitions(3, 3)
        out = max_family(build_graph(members, "proper", 2), star=[])
        assert out.max_size == 0
        # level-2 proper star over P(9, 5) has p(9-3, 3) members
        members = enumerate_partitions(9, 5)
        graph = build_graph(members, "proper", 2)
        required = {1, 2}
        star = [i for i, p in enumerate(members) if required <= set(p.parts)]
        out = max_family(graph, star=star)
        assert len(star) == count_partitions(6, 3) == 3
        assert out.max_size == 3 and out.star_is_maximum

    def test_singleton_families_at_length_t_plus_one(self):
        for t in (2, 3):
            members = enumerate_partitions(12, t + 1)
            out = max_family(build_graph(members, "multiset", t))
            assert out.max_size == 1


class TestUniqueness:
    def cases(self):
        # (n, k, expected uniqueness of the star)
        return [(7, 3, False), (8, 4, True), (10, 3, False), (12, 5, True)]

    def test_verdicts_match_oracle(self):
        for n, k, expected in self.cases():
            members = enumerate_partitions(n, k)
            graph = build_graph(members, "multiset", 1)
            star = [i for i, p in enumerate(members) if p.parts[0] == 1]
            out = max_family(graph, star=star)
            assert out.star_is_maximum
            got = check_uniqueness(graph, star, out.max_size)
            assert got is expected, (n, k)
            # oracle: count distinct maximum cliques
            _, all_max = oracle_max_clique(members, "multiset", 1)
            assert (len(all_max) == 1) is expected

    def test_empty_maximum_is_unique(self):
        members = enumerate_partitions(3, 3)
        graph = build_graph(members, "proper", 2)
        assert check_uniqueness(graph, [], 0) is True

    def test_size_mismatch_rejected(self):
        members = enumerate_partitions(10, 3)
        graph = build_graph(members, "multiset", 1)
        with pytest.raises(ValueError):
            check_uniqueness(graph, [0, 1], 4)


class TestSeedValidationAndBudgets:
    def test_invalid_seed_family_rejected(self):
        members = enumerate_partitions(8, 3)
        graph = build_graph(members, "multiset", 1)
        # (1,1,6) and (2,2,4) share no part
        with pytest.raises(RuntimeError):
            max_family(graph, star=[0, 3])

    def test_node_budget_exhaustion_carries_bounds(self):
        members = enumerate_partitions(12, 4)
        graph = build_graph(members, "multiset", 1)
        star = [i for i, p in enumerate(members) if p.parts[0] == 1]
        with pytest.raises(SearchBudgetExceeded) as info:
            max_family(graph, star=star, node_budget=1)
        exc = info.value
        assert exc.lower_bound >= len(star)
        assert exc.upper_bound >= exc.lower_bound
        assert exc.nodes_explored >= 1
        assert len(exc.witness) == exc.lower_bound

    def test_all_lengths_entry_point(self):
        out = max_family_all_lengths(8, 1)
        assert out.max_size == count_all(7) == 15
        assert out.star_is_maximum


class TestSetSystems:
    def test_instance_validation(self):
        with pytest.raises(ValueError):
            SetFamilyInstance(4, 5, 1)
        with pytest.raises(ValueError):
            SetFamilyInstance(5, 3, 0)

    def test_star_size_and_threshold(self):
        inst = SetFamilyInstance(8, 3, 1)
        assert inst.star_size == 21
        assert inst.at_or_above_threshold
        assert not SetFamilyInstance(5, 3, 1).at_or_above_threshold

    def test_small_systems_match_networkx(self):
        for n, r, t in [(5, 2, 1), (5, 3, 1), (6, 3, 2), (7, 3, 1)]:
            out = max_family_set_system(SetFamilyInstance(n, r, t))
            members = list(combinations(range(1, n + 1), r))
            graph = nx.Graph()
            graph.add_nodes_from(range(len(members)))
            for i, j in combinations(range(len(members)), 2):
                if len(set(members[i]) & set(members[j])) >= t:
                    graph.add_edge(i, j)
            expected = max(len(c) for c in nx.find_cliques(graph))
            assert out.max_size == expected, (n, r, t)

    def test_trivially_intersecting_range_takes_everything(self):
        # any two 3-subsets of {1..5} share at least one element
        out = max_family_set_system(SetFamilyInstance(5, 3, 1))
        assert out.max_size == 10

    def test_witness_members_pairwise_intersect(self):
        out = max_family_set_system(SetFamilyInstance(8, 3, 1))
        assert out.max_size == 21
        members = list(combinations(range(1, 9), 3))
        fam = [set(members[v]) for v in out.witness]
        assert all(a & b for a, b in combinations(fam, 2))

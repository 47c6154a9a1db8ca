"""Exact maximum-family searches, including the case the star loses.

Three stories:
  1. P(10, 3) at t=1: the star is maximum but not uniquely so.
  2. P(8, 3) at t=1: a non-star family strictly beats the star. This
     is the smallest such case, and prepending ones to it produces a
     beating family at level t inside P(t+7, t+2) for every t >= 1.
  3. P(9, 5) at t=2 under the proper relation, where star and maximum
     agree.
"""

from partint import (
    Relation,
    build_graph,
    check_uniqueness,
    enumerate_partitions,
    fixed_set_family,
    max_family,
    star_t,
)


def run_instance(n: int, k: int, t: int, relation: Relation) -> None:
    members = enumerate_partitions(n, k)
    graph = build_graph(members, relation, t)
    # Under the multiset relation the star fixes t copies of the part 1;
    # under the proper relation it fixes the t distinct parts 1, ..., t.
    if relation is Relation.MULTISET:
        star = star_t(n, k, t)
    else:
        star = fixed_set_family(n, k, range(1, t + 1))
    star_ids = graph.vertex_ids(star)
    outcome = max_family(graph, star=star_ids)

    print(f"P({n}, {k}), t={t}, relation={relation.value}")
    print(f"  star size    : {len(star)}")
    print(f"  maximum size : {outcome.max_size}")
    print(f"  maximum family (lex-min witness):")
    for v in outcome.witness:
        marker = "*" if members[v] in star else " "
        print(f"    {marker} {members[v].parts}")
    if outcome.max_size == len(star):
        unique = check_uniqueness(graph, star_ids, outcome.max_size)
        print(f"  star is maximum; unique: {unique}")
    else:
        print(f"  the star is NOT maximum here")
    print("  (* = star member)")
    print()


if __name__ == "__main__":
    # The star {(1,1,8), (1,2,7), (1,3,6), (1,4,5)} attains the maximum
    # of 4, but so does at least one other family, for example
    # {(1,2,7), (2,2,6), (2,3,5), (2,4,4)} shifted around part 2.
    run_instance(10, 3, 1, Relation.MULTISET)

    #lex-min maximum family here is {(1,2,5), (1,3,4), (2,2,4), (2,3,3)}:
    # four partitions, pairwise sharing a part, with the star stuck at 3.
    run_instance(8, 3, 1, Relation.MULTISET)

    # The ones-prepended lift of the same family inside P(9, 4) at t=2.
    run_instance(9, 4, 2, Relation.MULTISET)

    # The proper relation on repeated parts behaves differently; here
    # the star is the exact maximum.
    run_instance(9, 5, 2, Relation.PROPER)

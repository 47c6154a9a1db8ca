"""Walk through partition enumeration and the counting table.

Shows the basic objects everything else is built on: partitions of n
into exactly k parts (sorted tuples), the p(n, k) table, and the
consistency identities that tie counting to enumeration.
"""

from partint import CountTable, count_all, count_partitions, enumerate_partitions


def show_family(n: int, k: int) -> None:
    parts = enumerate_partitions(n, k)
    print(f"P({n}, {k}) has {len(parts)} members:")
    for p in parts:
        print(f"  {p.parts}")
    print(f"count_partitions({n}, {k}) = {count_partitions(n, k)}")
    print()


def show_column_sums(n: int) -> None:
    by_k = [count_partitions(n, k) for k in range(1, n + 1)]
    print(f"p({n}, k) for k = 1..{n}: {by_k}")
    print(f"sum = {sum(by_k)}, count_all({n}) = {count_all(n)}")
    print()


if __name__ == "__main__":
    show_family(10, 3)
    show_family(8, 3)

    show_column_sums(10)
    show_column_sums(14)

    # One shared table can serve many queries without recomputation.
    table = CountTable()
    print("selected values from a shared counting table:")
    for n, k in [(30, 5), (50, 7), (100, 10)]:
        print(f"  p({n}, {k}) = {table.count(n, k)}")
    print(f"  p(100) = {table.count_all(100)}")

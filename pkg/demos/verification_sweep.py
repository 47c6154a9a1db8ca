"""A small verification sweep, rendered and cached.

Sweeps star-vs-maximum over a modest grid, prints the row table with
its summary, and shows the row cache making the second run free. The
grid deliberately includes (8, 3), the one cell on this grid where the
star is beaten, so the report shows how a counterexample is surfaced.
"""

import tempfile
from pathlib import Path

from partint import RowCache, RunConfig, summarize_rows, verify_strong_form
from partint.harness import rows_to_table


def run_sweep(cache_path: Path) -> None:
    config = RunConfig(n_max=10, cache_path=str(cache_path))
    rows = verify_strong_form(config)
    summary = summarize_rows(rows)
    print(rows_to_table(rows, summary))
    print()

    beaten = [r for r in rows if r.is_counterexample]
    for row in beaten:
        print(f"star beaten at (n={row.n}, k={row.k}, t={row.t}):")
        print(f"  star {row.star_size} < maximum {row.max_size}, digest {row.witness_digest}")
    print()


def show_cache(cache_path: Path) -> None:
    cache = RowCache(str(cache_path))
    print(f"cache now holds {cache.stats()['rows']} rows at {cache_path.name}")

    # A second identical sweep is answered entirely from the cache, so
    # the rows come back byte-for-byte identical without any search.
    config = RunConfig(n_max=10, cache_path=str(cache_path))
    rows = verify_strong_form(config)
    print(f"re-run summary: {summarize_rows(rows)}")


if __name__ == "__main__":
    with tempfile.TemporaryDirectory() as tmp:
        cache_path = Path(tmp) / "rows.ldjson"
        run_sweep(cache_path)
        show_cache(cache_path)

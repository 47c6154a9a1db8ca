"""Command-line interface for the exact-search library.

Subcommands: enumerate, count, max-family, verify, lemmas, ekr-check,
cache.  Reports go to stdout or --out in json, csv or table form; the
process exits nonzero when a sweep finds counterexamples or a suite
fails, so the harness can gate on the shell status.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .cliques import (
    DEFAULT_NODE_BUDGET,
    DEFAULT_TIME_BUDGET_SECS,
    Relation,
    SearchBudgetExceeded,
)
from .harness import (
    RowCache,
    RunConfig,
    cross_validate_ekr,
    render_rows,
    run_lemma_suites,
    solve_instance,
    suite_report_to_json,
    suite_report_to_table,
    summarize_ekr_rows,
    summarize_rows,
    verify_strong_form,
    verify_t_conjectures,
    verify_weak_form,
)
from .partitions import DEFAULT_MAX_VERTICES, count_all, count_partitions, enumerate_partitions


def _add_common_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES)
    parser.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET)
    parser.add_argument(
        "--time-budget-secs", type=float, default=DEFAULT_TIME_BUDGET_SECS
    )
    parser.add_argument(
        "--deterministic",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="canonical witnesses and zeroed timings (default on)",
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", choices=("json", "csv", "table"), default="table")
    parser.add_argument("--out", metavar="PATH", default=None)
    parser.add_argument("--cache", metavar="PATH", default=None)
    parser.add_argument("--fail-fast", action="store_true")


def _add_grid_options(parser: argparse.ArgumentParser) -> None:
    for name in ("n-min", "n-max", "k-min", "k-max", "t-min", "t-max"):
        parser.add_argument(f"--{name}", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partint",
        description="Exact maximum intersecting families of integer partitions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list P(n, k) in canonical order")
    p_enum.add_argument("n", type=int)
    p_enum.add_argument("k", type=int)
    _add_common_options(p_enum)

    p_count = sub.add_parser("count", help="p(n, k), or p(n) when k is omitted")
    p_count.add_argument("n", type=int)
    p_count.add_argument("k", type=int, nargs="?", default=None)
    _add_common_options(p_count)

    p_max = sub.add_parser(
        "max-family", help="certified maximum intersecting family for one instance"
    )
    p_max.add_argument("--n", type=int, required=True)
    p_max.add_argument("--k", type=int, default=None, help="omit to mix all lengths")
    p_max.add_argument("--t", type=int, default=1)
    p_max.add_argument(
        "--relation", choices=[r.value for r in Relation], default="multiset"
    )
    p_max.add_argument(
        "--uniqueness",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="also decide whether the star is the unique maximum (default on)",
    )
    _add_common_options(p_max)

    p_verify = sub.add_parser("verify", help="sweep a grid and report star vs maximum")
    p_verify.add_argument(
        "mode", choices=("strong", "weak", "t-multiset", "t-proper")
    )
    _add_grid_options(p_verify)
    _add_common_options(p_verify)

    p_lemmas = sub.add_parser("lemmas", help="run the construction suites")
    p_lemmas.add_argument("--trials", type=int, default=1000)
    _add_common_options(p_lemmas)

    p_ekr = sub.add_parser(
        "ekr-check", help="cross-validate the engine on set-system ground truth"
    )
    _add_grid_options(p_ekr)
    _add_common_options(p_ekr)

    p_cache = sub.add_parser("cache", help="inspect or clear a row cache")
    p_cache.add_argument("action", choices=("stats", "clear"))
    p_cache.add_argument("--cache", metavar="PATH", required=True)

    return parser


def _config_from_args(args: argparse.Namespace, **overrides) -> RunConfig:
    fields = dict(
        n_min=getattr(args, "n_min", None),
        n_max=getattr(args, "n_max", None),
        k_min=getattr(args, "k_min", None),
        k_max=getattr(args, "k_max", None),
        t_min=getattr(args, "t_min", None),
        t_max=getattr(args, "t_max", None),
        max_vertices=args.max_vertices,
        node_budget=args.node_budget,
        time_budget_secs=args.time_budget_secs,
        deterministic=args.deterministic,
        seed=args.seed,
        trials=getattr(args, "trials", 1000),
        fail_fast=args.fail_fast,
        cache_path=args.cache,
        out_path=args.out,
        fmt=args.format,
    )
    fields.update(overrides)
    return RunConfig(**fields)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_enumerate(args: argparse.Namespace) -> int:
    members = enumerate_partitions(args.n, args.k, max_vertices=args.max_vertices)
    if args.format == "json":
        payload = {
            "n": args.n,
            "k": args.k,
            "count": len(members),
            "partitions": [list(p.parts) for p in members],
        }
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        text = "parts\n" + "\n".join(" ".join(map(str, p.parts)) for p in members) + "\n"
    else:
        text = "\n".join(str(p) for p in members) + ("\n" if members else "")
    _emit(text, args.out)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    value = count_all(args.n) if args.k is None else count_partitions(args.n, args.k)
    if args.format == "json":
        text = json.dumps({"n": args.n, "k": args.k, "count": value}) + "\n"
    else:
        text = f"{value}\n"
    _emit(text, args.out)
    return 0


def _cmd_max_family(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    relation = Relation(args.relation)
    row = solve_instance(args.n, args.k, args.t, relation, config, None)
    if not args.uniqueness:
        row = type(row)(**{**asdict(row), "unique": "not_computed"})
    if args.format == "json":
        text = json.dumps(asdict(row), indent=2) + "\n"
    else:
        pairs = ", ".join(f"{key}={value}" for key, value in asdict(row).items())
        text = pairs + "\n"
    _emit(text, args.out)
    return 0 if not row.is_counterexample else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    runners = {
        "strong": (verify_strong_form, {}),
        "weak": (verify_weak_form, {}),
        "t-multiset": (verify_t_conjectures, {"relation": Relation.MULTISET}),
        "t-proper": (verify_t_conjectures, {"relation": Relation.PROPER}),
    }
    runner, overrides = runners[args.mode]
    config = _config_from_args(args, **overrides)
    rows = runner(config)
    summary = summarize_rows(rows)
    _emit(render_rows(config, rows, summary), config.out_path)
    return 0 if summary["refuted"] == 0 else 1


def _cmd_lemmas(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    report = run_lemma_suites(config)
    if config.fmt == "json":
        text = suite_report_to_json(config, report)
    else:
        text = suite_report_to_table(report)
    _emit(text, config.out_path)
    return 0 if report.all_passed else 1


def _cmd_ekr(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    rows = cross_validate_ekr(config)
    summary = summarize_ekr_rows(rows)
    _emit(render_rows(config, rows, summary), config.out_path)
    return 0 if summary["refuted"] == 0 else 1


def _cmd_cache(args: argparse.Namespace) -> int:
    cache = RowCache(args.cache)
    if args.action == "stats":
        sys.stdout.write(json.dumps(cache.stats(), indent=2) + "\n")
    else:
        cache.clear()
        sys.stdout.write(f"cleared {args.cache}\n")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "enumerate": _cmd_enumerate,
        "count": _cmd_count,
        "max-family": _cmd_max_family,
        "verify": _cmd_verify,
        "lemmas": _cmd_lemmas,
        "ekr-check": _cmd_ekr,
        "cache": _cmd_cache,
    }
    try:
        return handlers[args.command](args)
    except SearchBudgetExceeded as exc:
        sys.stderr.write(
            f"search budget exhausted: best bounds [{exc.lower_bound}, "
            f"{exc.upper_bound}] after {exc.nodes_explored} nodes\n"
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())

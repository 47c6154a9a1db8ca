"""End-to-end command-line behavior, including exit codes."""

import json

from partint.cli import main
from partint.harness import ROW_FIELDS


class TestCountAndEnumerate:
    def test_count_fixed_length(self, capsys):
        assert main(["count", "10", "3"]) == 0
        assert capsys.readouterr().out.strip() == "8"

    def test_count_all_lengths(self, capsys):
        assert main(["count", "5"]) == 0
        assert capsys.readouterr().out.strip() == "7"

    def test_count_json(self, capsys):
        assert main(["count", "9", "2", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"n": 9, "k": 2, "count": 4}

    def test_enumerate_table(self, capsys):
        assert main(["enumerate", "5", "2"]) == 0
        assert capsys.readouterr().out == "1+4\n2+3\n"

    def test_enumerate_json(self, capsys):
        assert main(["enumerate", "8", "3", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["count"] == 5
        assert payload["partitions"][0] == [1, 1, 6]

    def test_enumerate_csv(self, capsys):
        assert main(["enumerate", "5", "2", "--format", "csv"]) == 0
        assert capsys.readouterr().out == "parts\n1 4\n2 3\n"


class TestMaxFamily:
    def test_star_maximum_instance_exits_zero(self, capsys):
        code = main(["max-family", "--n", "10", "--k", "3", "--format", "json"])
        row = json.loads(capsys.readouterr().out)
        assert code == 0
        assert row["max_size"] == 4 and row["star_is_maximum"] is True
        assert row["unique"] == "no"

    def test_counterexample_instance_exits_one(self, capsys):
        code = main(["max-family", "--n", "8", "--k", "3", "--format", "json"])
        row = json.loads(capsys.readouterr().out)
        assert code == 1
        assert row["star_size"] == 3 and row["max_size"] == 4
        assert row["star_is_maximum"] is False

    def test_uniqueness_can_be_skipped(self, capsys):
        code = main(
            ["max-family", "--n", "10", "--k", "3", "--no-uniqueness", "--format", "json"]
        )
        row = json.loads(capsys.readouterr().out)
        assert code == 0
        assert row["unique"] == "not_computed"

    def test_mixed_lengths_when_k_omitted(self, capsys):
        code = main(["max-family", "--n", "9", "--format", "json"])
        row = json.loads(capsys.readouterr().out)
        assert code == 0
        assert row["k"] is None and row["max_size"] == 22

    def test_budget_exhaustion_reports_inconclusive_row(self, capsys):
        code = main(
            ["max-family", "--n", "12", "--k", "4", "--node-budget", "1", "--format", "json"]
        )
        row = json.loads(capsys.readouterr().out)
        assert code == 0
        assert row["star_is_maximum"] is None
        assert row["unique"] == "inconclusive"


class TestVerify:
    def test_strong_default_grid_reports_the_counterexample(self, tmp_path):
        out = tmp_path / "strong.json"
        code = main(["verify", "strong", "--format", "json", "--out", str(out)])
        payload = json.loads(out.read_text())
        assert code == 1
        assert payload["summary"] == {
            "instances": 231,
            "verified": 230,
            "refuted": 1,
            "inconclusive": 0,
        }
        refuted = [r for r in payload["rows"] if r["star_is_maximum"] is False]
        assert [(r["n"], r["k"]) for r in refuted] == [(8, 3)]

    def test_strong_below_eight_is_clean(self, tmp_path):
        out = tmp_path / "small.json"
        code = main(
            ["verify", "strong", "--n-max", "7", "--format", "json", "--out", str(out)]
        )
        payload = json.loads(out.read_text())
        assert code == 0
        assert payload["summary"]["refuted"] == 0

    def test_weak_sweep_clean(self, tmp_path):
        out = tmp_path / "weak.json"
        code = main(
            ["verify", "weak", "--n-max", "10", "--format", "json", "--out", str(out)]
        )
        payload = json.loads(out.read_text())
        assert code == 0
        assert payload["summary"]["refuted"] == 0

    def test_t_proper_sweep_clean(self, tmp_path):
        out = tmp_path / "proper.json"
        code = main(
            [
                "verify",
                "t-proper",
                "--t-min", "2", "--t-max", "2",
                "--k-max", "5",
                "--n-max", "12",
                "--format", "json",
                "--out", str(out),
            ]
        )
        payload = json.loads(out.read_text())
        assert code == 0
        assert payload["summary"]["refuted"] == 0
        assert all(r["relation"] == "proper" for r in payload["rows"])

    def test_t_multiset_sweep_finds_lifted_counterexample(self, tmp_path):
        out = tmp_path / "multiset.json"
        code = main(
            [
                "verify",
                "t-multiset",
                "--t-min", "2", "--t-max", "2",
                "--k-max", "5",
                "--n-max", "12",
                "--format", "json",
                "--out", str(out),
            ]
        )
        payload = json.loads(out.read_text())
        assert code == 1
        refuted = [r for r in payload["rows"] if r["star_is_maximum"] is False]
        assert [(r["n"], r["k"], r["t"]) for r in refuted] == [(9, 4, 2)]

    def test_csv_format_column_contract(self, tmp_path):
        out = tmp_path / "rows.csv"
        code = main(
            ["verify", "weak", "--n-max", "6", "--format", "csv", "--out", str(out)]
        )
        assert code == 0
        header = out.read_text().splitlines()[0]
        assert header == ",".join(ROW_FIELDS)

    def test_deterministic_reports_are_byte_identical(self, tmp_path):
        out = tmp_path / "report.json"
        argv = [
            "verify", "strong",
            "--n-max", "12",
            "--deterministic",
            "--format", "json",
            "--out", str(out),
        ]
        main(argv)
        first = out.read_bytes()
        main(argv)
        assert out.read_bytes() == first


class TestLemmasAndSetSystems:
    def test_lemma_suites_pass(self, capsys):
        code = main(["lemmas", "--trials", "40", "--format", "json"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0
        assert payload["summary"]["all_passed"] is True

    def test_lemma_table_output(self, capsys):
        code = main(["lemmas", "--trials", "10"])
        text = capsys.readouterr().out
        assert code == 0
        assert "all passed" in text

    def test_ekr_check_small_grid(self, tmp_path):
        out = tmp_path / "ekr.json"
        code = main(
            [
                "ekr-check",
                "--k-max", "3",
                "--n-max", "7",
                "--format", "json",
                "--out", str(out),
            ]
        )
        payload = json.loads(out.read_text())
        assert code == 0
        assert payload["summary"]["refuted"] == 0
        assert all(r["relation"] == "sets" for r in payload["rows"])


class TestCacheCommands:
    def test_stats_and_clear_round_trip(self, tmp_path, capsys):
        cache = tmp_path / "rows.jsonl"
        main(
            [
                "verify", "strong",
                "--n-max", "6",
                "--cache", str(cache),
                "--format", "csv",
                "--out", str(tmp_path / "ignore.csv"),
            ]
        )
        assert main(["cache", "stats", "--cache", str(cache)]) == 0
        stats = json.loads(capsys.readouterr().out)
        assert stats["rows"] > 0 and stats["stale"] == 0
        assert main(["cache", "clear", "--cache", str(cache)]) == 0
        capsys.readouterr()
        assert not cache.exists()

    def test_cached_rerun_gives_identical_report(self, tmp_path):
        cache = tmp_path / "rows.jsonl"
        out = tmp_path / "report.json"
        argv = [
            "verify", "strong",
            "--n-max", "10",
            "--cache", str(cache),
            "--format", "json",
            "--out", str(out),
        ]
        main(argv)
        first = out.read_bytes()
        main(argv)  # second run is served from the cache
        assert out.read_bytes() == first

"""Command-line interface: parsing, exit codes, determinism, cache handling."""

import json

import pytest

from skeinlab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestInvariant:
    def test_basic(self, capsys):
        code, out, _ = run_cli(
            capsys, "invariant", "--torus", "2", "3", "1", "--pairs", "[[[1],[1]]]", "--json"
        )
        assert code == 0
        doc = json.loads(out.strip().splitlines()[-1])
        assert doc["command"] == "invariant"
        assert doc["spec"]["m"] == 2 and doc["spec"]["n"] == 3

    def test_deterministic_output(self, capsys):
        args = ("invariant", "--torus", "1", "1", "2", "--pairs", "[[[2],[]],[[],[2]]]", "--json")
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2

    def test_bare_partition_means_positive_row(self, capsys):
        code, out, _ = run_cli(
            capsys, "invariant", "--unknot", "0", "--pairs", "[[1]]", "--json"
        )
        assert code == 0
        doc = json.loads(out.strip().splitlines()[-1])
        assert doc["labels"] == [[[1], []]]

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "out.json"
        code, _, _ = run_cli(
            capsys,
            "invariant", "--torus", "2", "3", "1", "--pairs", "[[[1],[]]]",
            "--output", str(path),
        )
        assert code == 0
        doc = json.loads(path.read_text())
        assert doc["command"] == "invariant"

    def test_usage_error_exit_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            run_cli(capsys, "invariant", "--pairs", "[[[1],[]]]")
        assert err.value.code == 2

    def test_wrong_pair_count_exit_2(self, capsys):
        with pytest.raises(SystemExit) as err:
            run_cli(capsys, "invariant", "--torus", "1", "1", "2", "--pairs", "[[[1],[]]]")
        assert err.value.code == 2


class TestBracketAndComposite:
    def test_bracket(self, capsys):
        code, out, _ = run_cli(
            capsys, "bracket", "--unknot", "2", "--pairs", "[[[1],[]]]", "--json"
        )
        assert code == 0
        doc = json.loads(out.strip().splitlines()[-1])
        # tau^2 s = t^2 (t - 1/t)/(q - 1/q)
        assert doc["value"]["num"] == [[0, 1, 1, 1, "-1"], [0, 1, 3, 1, "1"]]

    def test_composite(self, capsys):
        code, out, _ = run_cli(
            capsys, "composite", "--unknot", "0", "--labels", "[[1]]", "--json"
        )
        assert code == 0
        doc = json.loads(out.strip().splitlines()[-1])
        assert doc["value"]["num"] == [[0, 1, -1, 1, "-2"], [0, 1, 1, 1, "2"]]


class TestReformAndLmov:
    def test_reform_verdict_true(self, capsys):
        code, out, _ = run_cli(
            capsys, "reform", "--torus", "2", "3", "1", "--blackboard", "--p", "2", "--json"
        )
        assert code == 0
        doc = json.loads(out.strip().splitlines()[-1])
        assert doc["verdict"] is True

    def test_rhat(self, capsys):
        code, out, _ = run_cli(
            capsys, "reform", "--torus", "1", "1", "2", "--blackboard", "--p", "2",
            "--rhat", "--json",
        )
        assert code == 0

    def test_lmov(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "lmov", "--torus", "1", "1", "2", "--framing=-1,-1", "--B", "[[2],[1,1]]",
            "--json",
        )
        assert code == 0
        doc = json.loads(out.strip().splitlines()[-1])
        assert doc["verdict"] is True
        assert [0, 0, 6] in doc["N"]


class TestCongruenceAndRepro:
    def test_congruence_range(self, capsys):
        code, out, _ = run_cli(capsys, "congruence", "--p", "2", "--k", "0..1", "--json")
        assert code == 0
        doc = json.loads(out.strip().splitlines()[-1])
        assert doc["results"] == [[0, True, None], [1, True, None]]

    def test_repro_matrix(self, capsys):
        code, out, _ = run_cli(capsys, "repro", "example-3.1")
        assert code == 0
        assert "ok" in out

    def test_special(self, capsys):
        code, out, _ = run_cli(
            capsys, "special", "--torus", "2", "3", "1", "--pairs", "[[[1],[]]]", "--json"
        )
        assert code == 0
        doc = json.loads(out.strip().splitlines()[-1])
        assert doc["value"] == [[0, 1, -4, 1, "-1"], [0, 1, -2, 1, "2"]]


class TestSelftestAndCache:
    def test_selftest_single_suite(self, capsys):
        code, out, _ = run_cli(capsys, "selftest", "--suite", "partitions")
        assert code == 0
        assert "[pass] partitions:" in out

    def test_cache_info_and_clear(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("SKEINLAB_CACHE", str(tmp_path))
        import skeinlab.chars as chars

        monkeypatch.setattr(chars, "_default_table", None)
        code, out, _ = run_cli(capsys, "selftest", "--suite", "chars")
        assert code == 0
        assert list(tmp_path.glob("chars_v*.json"))
        code, out, _ = run_cli(capsys, "cache", "info")
        assert code == 0 and str(tmp_path) in out
        code, out, _ = run_cli(capsys, "cache", "clear")
        assert code == 0
        assert not list(tmp_path.glob("chars_v*.json"))

    def test_config_file(self, capsys, tmp_path, monkeypatch):
        import skeinlab.chars as chars

        monkeypatch.setattr(chars, "_default_table", None)
        monkeypatch.delenv("SKEINLAB_CACHE", raising=False)
        cfg = tmp_path / "skeinlab.cfg"
        cache_dir = tmp_path / "cache"
        cfg.write_text(f"# comment\ncache_dir={cache_dir}\n")
        code, out, _ = run_cli(
            capsys, "cache", "info", "--config", str(cfg)
        )
        assert code == 0 and str(cache_dir) in out

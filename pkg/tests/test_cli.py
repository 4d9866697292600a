"""Command-line behavior: output shapes, exit codes, determinism, config.

Everything runs in-process through main(argv) so capsys sees the streams;
one subprocess smoke test covers the python -m entry point.
"""

import json
import subprocess
import sys

import pytest

from gpgdiam.cli import CONJECTURE_CSV_HEADER, SWEEP_CSV_HEADER, main


class TestDiameterCommand:
    def test_verified_instance(self, capsys):
        assert main(["diameter", "12", "5", "--verify"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "d_circulant=3 d_gpg=4 ε=1 method=Special4p verified=true"
        assert lines[1] == "witness_circulant=(0,3)"

    def test_plain_line_has_no_verified_field(self, capsys):
        assert main(["diameter", "12", "5"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "d_circulant=3 d_gpg=4 ε=1 method=Special4p"

    def test_small_ring(self, capsys):
        assert main(["diameter", "5", "2"]) == 0
        assert "d_circulant=1 d_gpg=2 ε=1" in capsys.readouterr().out

    def test_rejects_skip_half_of_n(self, capsys):
        assert main(["diameter", "10", "5"]) == 1
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "error:" in captured.err


class TestSweepCommand:
    def test_csv_shape_and_pinned_row(self, capsys):
        assert main(["sweep", "5", "12", "--verify"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == SWEEP_CSV_HEADER
        assert len(lines) == 21  # header + 20 valid (n, s) pairs
        assert "12,5,2,2,3,4,1,Special4p,5,true" in lines
        assert all(line.endswith(",true") for line in lines[1:])
        keys = [tuple(int(f) for f in line.split(",")[:2]) for line in lines[1:]]
        assert keys == sorted(keys)

    def test_jsonl_field_order(self, capsys):
        assert main(["sweep", "12", "12", "--format", "jsonl"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 4  # no header in jsonl
        for line in lines:
            row = json.loads(line)
            assert list(row) == [
                "n",
                "s",
                "lambda",
                "gamma",
                "d_circulant",
                "d_gpg",
                "epsilon",
                "method",
                "upper_bound",
                "verified",
            ]
            assert row["verified"] is False

    def test_rejects_bad_range(self, capsys):
        assert main(["sweep", "4", "10"]) == 1
        assert "error:" in capsys.readouterr().err

    def test_missing_range_without_config_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["sweep"])
        assert exc.value.code == 1

    def test_unknown_format_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["sweep", "5", "8", "--format", "xml"])
        assert exc.value.code == 1

    def test_output_is_byte_deterministic(self, tmp_path, capsys):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for path in paths:
            assert main(["sweep", "5", "20", "--verify", "--output", str(path)]) == 0
        capsys.readouterr()
        first, second = (path.read_bytes() for path in paths)
        assert first == second
        assert b"\r" not in first
        assert first.endswith(b"\n")

    def test_parallel_output_matches_serial(self, tmp_path, capsys):
        serial = tmp_path / "serial.csv"
        parallel = tmp_path / "parallel.csv"
        assert main(["sweep", "5", "14", "--jobs", "1", "--output", str(serial)]) == 0
        assert main(["sweep", "5", "14", "--jobs", "2", "--output", str(parallel)]) == 0
        capsys.readouterr()
        assert serial.read_bytes() == parallel.read_bytes()


class TestVerifyCommand:
    def test_all_suites_pass(self, capsys):
        assert main(["verify", "10"]) == 0
        out = capsys.readouterr().out
        for suite in (
            "formula distance vs BFS",
            "chord-ride diameter vs BFS",
            "closed form vs BFS",
            "gap classifier vs BFS",
            "sandwich and upper bounds",
        ):
            assert suite in out
        assert "RESULT: all suites passed" in out

    def test_rejects_tiny_range(self, capsys):
        assert main(["verify", "7"]) == 1
        assert "error:" in capsys.readouterr().err


class TestConjectureCommand:
    def test_text_report(self, capsys):
        assert main(["conjecture", "12"]) == 0
        out = capsys.readouterr().out
        assert "(12,5)" in out
        assert "discrepancies: 0" in out

    def test_csv_report(self, capsys):
        assert main(["conjecture", "12", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == CONJECTURE_CSV_HEADER
        assert "12,5,1,1,predicted" in lines
        assert "5,2,1,2,small_ring_exception" in lines


class TestConfigFile:
    def test_supplies_sweep_defaults(self, tmp_path, capsys):
        config = tmp_path / "conf.json"
        config.write_text(json.dumps({"n_min": 5, "n_max": 6, "format": "jsonl"}))
        assert main(["sweep", "--config", str(config)]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert [json.loads(line)["n"] for line in lines] == [5, 6]

    def test_explicit_flags_win(self, tmp_path, capsys):
        config = tmp_path / "conf.json"
        config.write_text(json.dumps({"format": "jsonl", "n_max": 40}))
        assert main(["sweep", "5", "6", "--format", "csv", "--config", str(config)]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == SWEEP_CSV_HEADER
        assert len(lines) == 3

    def test_output_dir_prefixes_relative_output(self, tmp_path, capsys):
        config = tmp_path / "conf.json"
        config.write_text(
            json.dumps({"output_dir": str(tmp_path), "output": "rows.csv"})
        )
        assert main(["sweep", "5", "6", "--config", str(config)]) == 0
        assert "wrote 3 lines" in capsys.readouterr().err
        assert (tmp_path / "rows.csv").read_text().splitlines()[0] == SWEEP_CSV_HEADER

    def test_rejects_non_object_config(self, tmp_path, capsys):
        config = tmp_path / "conf.json"
        config.write_text("[1, 2]")
        assert main(["sweep", "5", "6", "--config", str(config)]) == 1
        assert "must hold a JSON object" in capsys.readouterr().err

    def test_missing_config_file(self, tmp_path, capsys):
        assert main(["sweep", "5", "6", "--config", str(tmp_path / "nope.json")]) == 1
        assert "error:" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gpgdiam.cli", "diameter", "12", "5"],
        capture_output=True,
        text=True,
        encoding="utf-8",
    )
    assert proc.returncode == 0
    assert "method=Special4p" in proc.stdout

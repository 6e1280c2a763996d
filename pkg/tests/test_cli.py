import json

import pytest

from rglat.cli import main

FINAL_SPEC = {
    "lattice": {"kind": "interval", "ambient": "2/1"},
    "cutset": {
        "type": "level",
        "grading": {"density": {"breakpoints": ["0/1", "1/1", "2/1"], "values": ["1/1", "2/1"]}},
        "value": "1/1",
    },
    "targets": [
        {"intervals": [["1/1", "2/1"]]},
        {"intervals": [["0/1", "1/1"]]},
        {"intervals": []},
    ],
}


def write_json(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


class TestVerify:
    def test_single_suite_passes(self, capsys):
        assert main(["verify", "--suite", "finite-counts"]) == 0
        out = capsys.readouterr().out
        assert "PASS finite-counts" in out
        assert "seed=7" in out

    def test_unknown_suite_is_an_input_error(self, capsys):
        assert main(["verify", "--suite", "nope"]) == 2

    def test_bad_grid_is_an_input_error(self):
        assert main(["verify", "--suite", "finite-counts", "--grid", "0/1"]) == 2

    def test_report_written_to_file(self, tmp_path, capsys):
        out = tmp_path / "report.csv"
        assert main(["verify", "--suite", "finite-counts", "--out", str(out)]) == 0
        text = out.read_text()
        assert text.startswith("# command=verify")
        assert "finite-counts,PASS" in text

    def test_sample_override_runs(self, capsys):
        assert main(["verify", "--suite", "balance", "--samples", "50", "--seed", "3"]) == 0


class TestRegrade:
    def test_interval_targets(self, tmp_path, capsys):
        spec = write_json(tmp_path / "spec.json", FINAL_SPEC)
        assert main(["regrade", spec]) == 0
        out = capsys.readouterr().out
        lines = out.splitlines()
        assert any(line.endswith("1/2") and '""1/1"", ""2/1""' in line for line in lines)
        assert any(line.endswith("0/1") and '""0/1"", ""1/1""' in line for line in lines)
        assert any(line.endswith("-1/1") for line in lines)

    def test_chief_sweep_strictly_increases(self, tmp_path, capsys):
        spec = write_json(tmp_path / "spec.json", {**FINAL_SPEC, "targets": []})
        assert main(["regrade", spec, "--grid", "1/8", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        sweep = [row for row in payload["rows"] if row[0] == "chief"]
        values = [row[4] for row in sweep]
        fractions = [tuple(map(int, v.split("/"))) for v in values]
        decimals = [a / b for a, b in fractions]
        assert decimals == sorted(decimals)
        assert decimals[0] == -1.0 and decimals[-1] == 1.0

    def test_target_on_cutset_gets_zero(self, tmp_path, capsys):
        spec = dict(FINAL_SPEC, targets=[{"intervals": [["0/1", "1/1"]]}])
        path = write_json(tmp_path / "spec.json", spec)
        assert main(["regrade", path]) == 0
        assert ",0/1\n" in capsys.readouterr().out

    def test_finite_lattice_spec(self, tmp_path, capsys):
        spec = {
            "lattice": {"kind": "boolean", "n": 4},
            "cutset": {"type": "level", "grading": "rank", "value": "2/1"},
            "targets": [[1, 3, 4], [2]],
        }
        path = write_json(tmp_path / "spec.json", spec)
        assert main(["regrade", path]) == 0
        out = capsys.readouterr().out
        assert "1/1" in out and "-1/1" in out

    def test_out_of_range_level_is_an_input_error(self, tmp_path, capsys):
        bad = dict(FINAL_SPEC, cutset={"type": "level", "grading": "lebesgue", "value": "9/1"})
        path = write_json(tmp_path / "spec.json", bad)
        assert main(["regrade", path]) == 2

    def test_corrupted_file_is_an_input_error(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        assert main(["regrade", str(path)]) == 2

    def test_missing_file_is_an_input_error(self, capsys):
        assert main(["regrade", "/nonexistent/spec.json"]) == 2


class TestCounterexample:
    def test_matches_and_is_deterministic(self, capsys):
        assert main(["counterexample"]) == 0
        first = capsys.readouterr().out
        assert main(["counterexample"]) == 0
        second = capsys.readouterr().out
        assert first == second
        assert "defect,,-1/2" in first
        assert "matches_expected: True" in first

    def test_json_format(self, capsys):
        assert main(["counterexample", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["matches_expected"] == "True"
        assert ["full", "", "1/1"] in payload["rows"]


class TestLimit:
    def test_distance_table(self, tmp_path, capsys):
        path = write_json(tmp_path / "target.json", {"intervals": [["0/1", "1/3"]]})
        assert main(["limit", path]) == 0
        out = capsys.readouterr().out
        assert "256,1/768,1/256" in out
        assert "coherence_boolean: pass" in out
        assert "isometry_boolean: pass" in out

    def test_dyadic_target_zero_tail(self, tmp_path, capsys):
        path = write_json(tmp_path / "target.json", {"intervals": [["1/4", "3/4"]]})
        assert main(["limit", path, "--levels", "4,8,16"]) == 0
        out = capsys.readouterr().out
        assert "4,0/1," in out
        assert "16,0/1,0/1" in out

    def test_non_divisible_levels_are_an_input_error(self, tmp_path, capsys):
        path = write_json(tmp_path / "target.json", {"intervals": [["0/1", "1/3"]]})
        assert main(["limit", path, "--levels", "2,3"]) == 2

    def test_target_outside_unit_interval_rejected(self, tmp_path, capsys):
        path = write_json(tmp_path / "target.json", {"intervals": [["0/1", "2/1"]]})
        assert main(["limit", path]) == 2


def test_argparse_usage_error_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["regrade"])  # missing the spec argument
    assert exc.value.code == 2

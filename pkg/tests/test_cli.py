import csv
import io
import json
import subprocess
import sys

import pytest

from minkdist.cli import main
from minkdist.reports import HYPOTHESIS_WARNING, IDENTITY_FAILED, OK, USAGE


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def test_distances_null_line_warns(capsys):
    code, out, err = run(capsys, "distances", "--family", "null_line", "--n", "5")
    report = json.loads(out)
    assert code == HYPOTHESIS_WARNING != IDENTITY_FAILED
    assert report["distinct"] == 1 and report["hypothesis_not_on_one_null_line"] is False
    assert "warning" in err


def test_distances_single_point(capsys, tmp_path):
    code, out, _ = run(capsys, "distances", "--input", write(tmp_path, "p.json", [["3", "1/2"]]))
    report = json.loads(out)
    assert code == OK and report["distinct"] == 1 and report["cauchy_schwarz"] is None


def test_distances_grid_reports_ratio(capsys):
    code, out, _ = run(capsys, "distances", "--family", "grid", "--n", "4")
    report = json.loads(out)
    assert code == OK and report["N"] == 16
    assert report["ratio_distinct_logN_over_N"] > 0
    assert report["cauchy_schwarz"]["cs_holds"]


def test_distances_csv(capsys):
    code, out, _ = run(capsys, "distances", "--family", "grid", "--n", "2", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == OK and rows[0]["distinct"] == "3"


def test_incidence_two_points(capsys, tmp_path):
    # the only intersection is the identity, met by l_aa and l_bb
    code, out, _ = run(capsys, "incidence", "--input", write(tmp_path, "p.json", [["0", "0"], ["1", "1"]]))
    report = json.loads(out)
    assert code == OK
    assert report["lines"] == 4 and report["Q"] == 4 and report["sum_n_star"] == 1
    [pt] = report["points"]
    assert pt["sigma"] == ["0", "0", "1"] and pt["incident"] == [0, 3]
    assert (pt["n"], pt["n_star"]) == (1, 1)


def test_incidence_grid(capsys):
    code, out, _ = run(capsys, "incidence", "--family", "grid", "--n", "3")
    report = json.loads(out)
    assert code == OK
    assert 4 * report["sum_n_star"] == report["Q"]
    assert report["checks"]["brute_force_quadruples_match"] is True


def test_incidence_null_line(capsys):
    code, out, _ = run(capsys, "incidence", "--family", "null_line", "--n", "4")
    report = json.loads(out)
    assert code == OK and report["sum_n_star"] == 0 and report["Q"] == 0


def test_incidence_cap(capsys):
    code, _, err = run(capsys, "incidence", "--family", "grid", "--n", "3", "--n-cap", "8")
    assert code == USAGE and "--n-cap" in err


def test_incidence_bucket_csv(capsys):
    code, out, _ = run(capsys, "incidence", "--family", "grid", "--n", "2", "--format", "csv")
    assert code == OK and out.splitlines()[0] == "k,size,sum_n,sum_n_star,size_ratio,n_star_ratio"


def test_sweep_grid(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "grid", "--sizes", "2..4")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == OK
    assert [int(r["N"]) for r in rows] == [4, 9, 16]
    assert all(r["identity_ok"] == "True" for r in rows)
    assert rows[0]["brute_force_ok"] == "True" and rows[2]["brute_force_ok"] == ""


def test_sweep_null_line(capsys):
    _, out, _ = run(capsys, "sweep", "--family", "null_line", "--sizes", "3,5")
    assert [r["Q"] for r in csv.DictReader(io.StringIO(out))] == ["0", "0"]


def test_sweep_empty_sizes(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "grid", "--sizes", "")
    assert code == OK and out.count("\n") == 1 and out.startswith("family,n,N,")


def test_sweep_set_family(capsys):
    _, out, _ = run(capsys, "sweep", "--family", "progression", "--sizes", "2,3")
    assert [r["set_size"] for r in csv.DictReader(io.StringIO(out))] == ["3", "7"]


def test_sumproduct(capsys):
    code, out, _ = run(capsys, "sumproduct", "--family", "progression", "--n", "8")
    report = json.loads(out)
    assert code == OK
    assert set(report["expanders"]) == {"++", "+-", "-+", "--"}
    assert len(report["multiplication_table"]) == 8
    assert report["multiplication_table"][-1]["size"] == 30


def test_sumproduct_direction_boundary(capsys, tmp_path):
    _, out, _ = run(capsys, "sumproduct", "--input", write(tmp_path, "a.json", ["0", "1"]))
    assert json.loads(out)["sets"]["A"]["direction_count"] == 4


def test_sumproduct_rejects_singleton(capsys, tmp_path):
    code, _, err = run(capsys, "sumproduct", "--input", write(tmp_path, "a.json", ["5"]))
    assert code == USAGE and "two elements" in err


def test_duplicate_points_rejected(capsys, tmp_path):
    code, _, err = run(capsys, "distances", "--input", write(tmp_path, "p.json", [["1", "2"], ["2/2", "2"]]))
    assert code == USAGE and "duplicate" in err


def test_decimal_literal_exact_but_json_float_rejected(capsys, tmp_path):
    code, out, _ = run(capsys, "distances", "--input", write(tmp_path, "p.json", [["0.5", "1"], ["1", "3/2"]]))
    assert code == OK and json.loads(out)["distinct"] == 2  # {0, 1/4}
    code, _, err = run(capsys, "distances", "--input", write(tmp_path, "f.json", [[0.5, 1], [1, 2]]))
    assert code == USAGE and "exactly" in err


def test_missing_input(capsys):
    assert run(capsys, "distances")[0] == USAGE
    assert run(capsys, "distances", "--input", "/nonexistent/p.json")[0] == USAGE
    assert run(capsys)[0] == USAGE


def test_config_replay_is_byte_identical(capsys, tmp_path):
    first = tmp_path / "first"
    assert run(capsys, "incidence", "--family", "random_rational", "--n", "7", "--seed", "3", "--out", str(first))[0] == OK
    cfg = json.loads((first / "config.json").read_text())
    assert cfg["command"] == "incidence" and cfg["seed"] == 3
    second = tmp_path / "second"
    cfg["out"] = str(second)
    replay = write(tmp_path, "replay.json", cfg)
    assert run(capsys, "--config", replay)[0] == OK
    assert (first / "report.json").read_bytes() == (second / "report.json").read_bytes()


def test_generate_round_trip(capsys, tmp_path):
    run(capsys, "generate", "--family", "perturbed_grid", "--n", "2", "--m", "3", "--seed", "4", "--out", str(tmp_path))
    pts = json.loads((tmp_path / "points.json").read_text())
    assert len(pts) == 6
    _, direct, _ = run(capsys, "distances", "--family", "perturbed_grid", "--n", "2", "--m", "3", "--seed", "4")
    _, loaded, _ = run(capsys, "distances", "--input", str(tmp_path / "points.json"))
    assert direct == loaded


def test_generate_set(capsys):
    code, out, _ = run(capsys, "generate", "--family", "progression", "--n", "3")
    assert code == OK and json.loads(out) == ["1", "2", "3"]


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "minkdist.cli", "distances", "--family", "grid", "--n", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == OK and json.loads(proc.stdout)["N"] == 4


@pytest.mark.parametrize("sizes, expected", [("2..4", [2, 3, 4]), ("2,5", [2, 5]), ("1..2,7", [1, 2, 7])])
def test_sizes_syntax(sizes, expected):
    from minkdist.cli import _parse_sizes

    assert _parse_sizes(sizes) == expected

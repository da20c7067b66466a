import json
import subprocess
import sys

import pytest

from ircode import published
from ircode.cli import distribution_from_record, main
from ircode.weights import weight_distribution


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dist_text(capsys, tmp_path):
    code, out, _ = run(capsys, "dist", "-p", "7", "-s", "1", "-m", "3", "-N", "6", "--format", "text",
                       "--cache-dir", str(tmp_path))
    assert code == 0
    assert out.strip() == "1+114x^45+114x^48+114x^54"


def test_dist_default_format(capsys, tmp_path):
    code, out, _ = run(capsys, "dist", "-p", "17", "-s", "1", "-m", "2", "-N", "12", "--cache-dir", str(tmp_path))
    assert (code, out.strip()) == (0, "1+48x^16+240x^24")


def test_dist_json_schema_and_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "dist", "-p", "3", "-m", "4", "-N", "8", "--format", "json", "--no-cache")
    assert code == 0
    record = json.loads(out)
    assert set(record) == {"p", "s", "m", "N", "q", "r", "n", "N2", "dimension", "entries", "method",
                           "classification"}
    assert record["r"] == "81" and record["n"] == "10"
    assert record["method"] == "closed"
    assert all(isinstance(e["weight"], str) and isinstance(e["frequency"], str) for e in record["entries"])
    assert json.loads(json.dumps(record)) == record
    assert distribution_from_record(record) == weight_distribution(3, 1, 4, 8)


def test_big_values_are_strings(capsys):
    code, out, _ = run(capsys, "dist", "-p", "13", "-m", "12", "-N", "12", "--method", "closed",
                       "--format", "json", "--no-cache")
    assert code == 0
    record = json.loads(out)
    assert record["entries"][0] == {"weight": "1792157710608", "frequency": "1941507093540"}


def test_cache_is_written_and_reused(capsys, tmp_path):
    args = ["dist", "-p", "7", "-m", "2", "-N", "6", "--cache-dir", str(tmp_path)]
    assert run(capsys, *args)[0] == 0
    path = tmp_path / "7_1_2_6_closed.json"
    assert path.exists()
    record = json.loads(path.read_text())
    record["classification"] = "from-cache"
    path.write_text(json.dumps(record))
    code, out, _ = run(capsys, *args, "--format", "json")
    assert json.loads(out)["classification"] == "from-cache"
    code, out, _ = run(capsys, *args, "--format", "json", "--no-cache")
    assert json.loads(out)["classification"] == "MaxWeights"


def test_corrupt_cache_is_recomputed(capsys, tmp_path):
    (tmp_path / "7_1_2_6_closed.json").write_text("{not json")
    code, out, _ = run(capsys, "dist", "-p", "7", "-m", "2", "-N", "6", "--cache-dir", str(tmp_path))
    assert (code, out.strip()) == (0, "1+24x^6+24x^8")


def test_no_cache_writes_nothing(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    run(capsys, "dist", "-p", "7", "-m", "2", "-N", "6", "--no-cache")
    assert not (tmp_path / "cache").exists()


def test_exit_codes(capsys):
    code, out, err = run(capsys, "dist", "-p", "2", "-s", "1", "-m", "4", "-N", "5", "--no-cache")
    assert code == 4 and out == "" and "DimensionMismatch" in err
    code, _, err = run(capsys, "dist", "-p", "4", "-m", "2", "-N", "3", "--no-cache")
    assert code == 2 and "NotPrime" in err
    code, _, err = run(capsys, "dist", "-p", "3", "-m", "2", "-N", "5", "--no-cache")
    assert code == 2 and "NotDividing" in err
    code, _, err = run(capsys, "dist", "-p", "3", "-m", "6", "-N", "13", "--method", "closed", "--no-cache")
    assert code == 3 and "UnsupportedOrder" in err
    code, _, err = run(capsys, "factor", "-p", "7", "-m", "2", "--N2", "3")
    assert code == 2 and "HypothesisViolated" in err
    with pytest.raises(SystemExit) as exc:
        main(["dist", "-p", "x"])
    assert exc.value.code == 2


def test_factor(capsys):
    code, out, _ = run(capsys, "factor", "-p", "11", "-s", "1", "-m", "2", "--N2", "2")
    assert (code, out.strip()) == (0, "[-11, 11]")
    code, out, _ = run(capsys, "factor", "-p", "11", "-m", "2", "--N2", "2", "--format", "json")
    assert json.loads(out)["roots"] == [{"xi": "-11", "multiplicity": 1}, {"xi": "11", "multiplicity": 1}]


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "-p", "13", "-s", "1", "-m", "4", "-N", "12")
    assert (code, out.strip()) == (0, "MaxWeights (N2=4, p≡1 mod 4)")


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "-p", "5", "-s", "2", "-m", "3", "-N", "12")
    assert code == 0
    assert out.startswith("PASS") and "5208" in out
    code, _, _ = run(capsys, "verify", "-p", "2", "-m", "4", "-N", "5")
    assert code == 4


def test_sweep(capsys, tmp_path):
    out_file = tmp_path / "sweep.json"
    code, out, _ = run(capsys, "sweep", "--max-r", "5000", "--p-max", "7", "--N-list", "2,3,4,6",
                       "--out", str(out_file), "--jobs", "2")
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("PASS=")
    assert "FAIL=0" in out
    payload = json.loads(out_file.read_text())
    assert payload["summary"]["FAIL"] == 0
    assert len(payload["reports"]) == sum(payload["summary"].values())


def test_reproduce(capsys):
    code, out, _ = run(capsys, "reproduce")
    lines = out.strip().splitlines()
    assert len(lines) == 29
    assert code == 0
    assert sum("known misprint" in line for line in lines) == 3


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ircode", "dist", "-p", "11", "-m", "2", "-N", "5", "--no-cache"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1+120x^22"


@pytest.mark.parametrize("key", sorted(set(published.PUBLISHED) - set(published.ERRATA)))
def test_text_rendering_matches_printed_enumerator(capsys, key):
    p, s, m, N = key
    code, out, _ = run(capsys, "dist", "-p", str(p), "-s", str(s), "-m", str(m), "-N", str(N),
                       "--method", "closed", "--no-cache")
    assert (code, out.strip()) == (0, published.PUBLISHED[key])

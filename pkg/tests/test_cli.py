import csv
import io
import json

import pytest

from totodd import cli, suites
from totodd.errors import TheoremViolation
from totodd.reports import conjecture_record


def run(argv, tmp_path):
    out = io.StringIO()
    code = cli.main(argv + ["--cache-dir", str(tmp_path / "cache")], out=out)
    return code, out.getvalue()


def test_build(tmp_path):
    code, text = run(["build", "E", "12", "2"], tmp_path)
    assert code == 0
    assert text.startswith(str(tmp_path / "cache" / "E_12_2.mat") + " 4x4 sha256:")
    assert "(cached)" not in text
    code, again = run(["build", "E", "12", "2"], tmp_path)
    assert again.split()[2] == text.split()[2] and again.rstrip().endswith("(cached)")


def test_build_C_is_cached_product(tmp_path):
    code, text = run(["build", "C", "15", "3"], tmp_path)
    assert code == 0 and " 10x10 " in text
    assert (tmp_path / "cache" / "C_15_3.mat").exists()


def test_build_bad_j(tmp_path, capsys):
    code, _ = run(["build", "Ej", "15", "3", "5"], tmp_path)
    assert code == 2
    assert "need 2 <= j <= r" in capsys.readouterr().err


def test_default_cache_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("TOTODD_CACHE", str(tmp_path / "envcache"))
    out = io.StringIO()
    assert cli.main(["build", "F", "9", "3"], out=out) == 0
    assert (tmp_path / "envcache" / "F_9_3.mat").exists()


@pytest.mark.parametrize("argv,expected", [
    (["rank", "C", "15", "3"], "rank 8, ker 2"),
    (["rank", "E", "12", "2"], "rank 3, ker 1"),
    (["rank", "E", "10", "3"], "rank 0, ker 0"),
])
def test_rank(tmp_path, argv, expected):
    code, text = run(argv, tmp_path)
    assert code == 0 and text.strip() == expected


def test_rank_json(tmp_path):
    code, text = run(["rank", "Ej", "15", "3", "2", "--format", "json"], tmp_path)
    data = json.loads(text)
    assert data["kind"] == "Ej" and data["j"] == 2 and data["rank"] + data["ker"] == 10


def test_kernel(tmp_path):
    code, text = run(["kernel", "E", "12", "2", "--side", "left"], tmp_path)
    lines = text.strip().split("\n")
    assert lines[0] == "left kernel, dimension 1"
    assert lines[1] in ("1 -3 3 -1", "-1 3 -3 1")
    code, text = run(["kernel", "C", "15", "3", "--format", "json"], tmp_path)
    data = json.loads(text)
    assert data["ambient"] == 10 and len(data["vectors"]) == 2


def test_verify_examples(tmp_path):
    out = tmp_path / "bs.json"
    code, text = run(["verify", "baumard-schneps", "--Nmax", "28", "--out", str(out)], tmp_path)
    assert code == 0
    records = json.loads(out.read_text())
    assert [r["N"] for r in records] == list(range(2, 29, 2))
    assert all(r["status"] == "pass" and r["kind"] == "theorem" for r in records)
    code, _ = run(["verify", "series-identity", "--out", str(tmp_path / "s.json")], tmp_path)
    assert code == 0


def test_verify_rank_vs_conjecture(tmp_path):
    out = tmp_path / "rc.json"
    code, text = run(["verify", "--suite", "rank-vs-conjecture", "--Nmax", "25", "--rmax", "4",
                      "--out", str(out)], tmp_path)
    assert code == 0
    records = json.loads(out.read_text())
    ranks = [r for r in records if r["check"] == "rank-vs-conjecture"]
    assert len(ranks) == 100 and all(r["status"] == "pass" for r in ranks)
    assert text.strip().endswith(str(out))


def test_verify_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["verify", "commute", "--Nmax", "15", "--rmax", "3", "--samples", "10", "--seed", "7"]
    assert run(argv + ["--out", str(a)], tmp_path)[0] == 0
    assert run(argv + ["--out", str(b)], tmp_path)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert "elapsed" not in a.read_text()
    assert all(r["seed"] == 7 for r in json.loads(a.read_text()))


def test_verify_default_report_path(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, text = run(["verify", "series-identity"], tmp_path)
    assert code == 0 and (tmp_path / "reports" / "verify-series-identity.json").exists()


def test_violation_gives_nonzero_exit(tmp_path, monkeypatch):
    def broken(bound, ybound):
        raise TheoremViolation("forced")

    monkeypatch.setattr(suites, "task_series_identity", broken)
    code, text = run(["verify", "series-identity", "--out", str(tmp_path / "v.json")], tmp_path)
    assert code == 1
    assert text.startswith("violation")
    (rec,) = json.loads((tmp_path / "v.json").read_text())
    assert rec["status"] == "violation" and rec["detail"] == "forced"


def test_findings_keep_zero_exit(tmp_path, monkeypatch):
    monkeypatch.setattr(suites, "task_series_identity",
                        lambda b, y: [conjecture_record("series-identity", False, expected=1, observed=0)])
    code, text = run(["verify", "series-identity", "--out", str(tmp_path / "f.json")], tmp_path)
    assert code == 0
    assert text.startswith("finding") and "0 pass, 1 finding, 0 violation" in text


def test_table_examples(tmp_path):
    code, text = run(["table", "--Nmax", "20", "--rmax", "3", "--format", "csv"], tmp_path)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["N", "r", "size", "rank", "dim_ker", "conjectured_rank", "status"]
    assert ["15", "3", "10", "8", "2", "8", "match"] in rows
    code, text = run(["table", "--Nmax", "12", "--rmax", "2", "--format", "json"], tmp_path)
    assert {"N": 12, "r": 2, "size": 4, "rank": 3, "dim_ker": 1, "conjectured_rank": 3,
            "status": "match"} in json.loads(text)


def test_table_empty_range_writes_header_only(tmp_path):
    out = tmp_path / "t.csv"
    code, _ = run(["table", "--Nmax", "0", "--out", str(out)], tmp_path)
    assert code == 0
    assert out.read_text() == "N,r,size,rank,dim_ker,conjectured_rank,status\n"


def test_series(tmp_path):
    code, text = run(["series", "S", "--bound", "24"], tmp_path)
    coeffs = [int(x) for x in text.split()]
    assert coeffs[12] == 1 and coeffs[24] == 2 and len(coeffs) == 25
    code, text = run(["series", "conj", "--r", "3", "--bound", "15", "--format", "json"], tmp_path)
    assert json.loads(text)["coeffs"][15] == 8


def test_bad_arguments_exit_nonzero(tmp_path):
    with pytest.raises(SystemExit) as exc:
        run(["verify", "nonsense"], tmp_path)
    assert exc.value.code == 2
    code, _ = run(["verify", "series-identity", "--Nmax", "-1"], tmp_path)
    assert code == 2

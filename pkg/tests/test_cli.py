from __future__ import annotations

import json

import pytest

from indpoly.classify import ScanSummary, TreeRecord, summarize
from indpoly.cli import main

P3 = "3\n0 1\n1 2\n"


@pytest.fixture
def p3_file(tmp_path):
    f = tmp_path / "p3.txt"
    f.write_text(P3)
    return f


def test_poly(p3_file, capsys):
    assert main(["poly", str(p3_file)]) == 0
    assert capsys.readouterr().out == "1 + 3x + x^2\n"


def test_poly_bad_file(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("4\n0 1\n1 2\n2 0\n")
    assert main(["poly", str(bad)]) == 2
    assert "malformed" in capsys.readouterr().err
    assert main(["poly", str(tmp_path / "missing.txt")]) == 2


def test_scan(capsys):
    assert main(["scan", "--n", "6"]) == 0
    assert capsys.readouterr().out == "6 6 1 1 1\n"


def test_scan_jobs_byte_identical(tmp_path, capsys):
    outs = []
    for k in (1, 2, 3):
        rec = tmp_path / f"r{k}.json"
        assert main(["scan", "--n", "13", "--jobs", str(k), "--records", str(rec)]) == 0
        outs.append((capsys.readouterr().out, rec.read_bytes()))
    assert outs[0] == outs[1] == outs[2]


def test_scan_all_records(tmp_path, capsys):
    rec = tmp_path / "all.json"
    assert main(["scan", "--n", "7", "--all-records", "--records", str(rec)]) == 0
    data = json.loads(rec.read_text())
    assert len(data["records"]) == 11 and data["summary"]["symmetric_trees"] == 0


def test_scan_env_jobs(monkeypatch, capsys):
    monkeypatch.setenv("INDPOLY_JOBS", "2")
    assert main(["scan", "--n", "9"]) == 0
    assert capsys.readouterr().out == "9 47 1 1 1\n"


def test_construct(tmp_path, capsys):
    out = tmp_path / "t.txt"
    assert main(["construct", "--vertices", "9", "--out", str(out)]) == 0
    assert main(["poly", str(out)]) == 0
    assert capsys.readouterr().out.strip() == "1 + 9x + 28x^2 + 40x^3 + 28x^4 + 9x^5 + x^6"
    assert main(["construct", "--degree", "4"]) == 0
    assert capsys.readouterr().out.startswith("6\n")


def test_construct_unrepresentable(capsys):
    assert main(["construct", "--vertices", "7"]) == 1
    assert "no tree with a symmetric independence polynomial" in capsys.readouterr().err
    assert main(["construct", "--degree", "3"]) == 1


def test_construct_needs_target():
    with pytest.raises(SystemExit):
        main(["construct"])


def test_orbits(tmp_path, capsys):
    f = tmp_path / "t.txt"
    main(["construct", "--vertices", "6", "--out", str(f)])
    capsys.readouterr()
    assert main(["orbits", str(f)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out == ["rep 0 size 2 d 4 A = 1 + 2y B = 1 + y bridge_ready true"]


def test_orbits_asymmetric(p3_file, tmp_path, capsys):
    p2 = tmp_path / "p2.txt"
    p2.write_text("2\n0 1\n")
    assert main(["orbits", str(p2)]) == 0
    assert "not symmetric" in capsys.readouterr().out


def test_catalogue_round_trip(tmp_path):
    out = tmp_path / "cat.json"
    assert main(["catalogue", "--max-n", "12", "--out", str(out)]) == 0
    cat = json.loads(out.read_text(encoding="utf-8"))
    assert cat["header"]["max_n"] == 12 and cat["header"]["min_n"] == 1
    by_n: dict[int, list[TreeRecord]] = {}
    for obj in cat["entries"]:
        rec = TreeRecord.from_json(obj)
        by_n.setdefault(rec.n, []).append(rec)
    for n, recs in by_n.items():
        assert [r.code for r in recs] == sorted(r.code for r in recs)
    for obj in cat["summary"]:
        s = ScanSummary.from_json(obj)
        assert summarize(s.n, s.total_trees, by_n.get(s.n, [])) == s
    assert [s["total_trees"] for s in cat["summary"]] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]


def test_verify_paper_fast(capsys):
    assert main(["verify-paper", "--max-n", "16"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)

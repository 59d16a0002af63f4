import io
import json
import subprocess
import sys

import pytest

from rainbowdc.cli import main
from rainbowdc.families import petersen
from rainbowdc.io import to_graph6


def run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, out=out)
    return code, out.getvalue()


def test_rd_petersen():
    assert run(["rd", "--family", "petersen"]) == (0, "4\n")


def test_rd_json_and_stdin(monkeypatch):
    code, out = run(["rd", "--format", "json"], stdin="# wheels\nFz`c?\nBw\n", monkeypatch=monkeypatch)
    assert code == 0
    lines = [json.loads(x) for x in out.splitlines()]
    assert [x["rd"] for x in lines] == [4, 2]


def test_rd_budget_exhausted():
    assert run(["rd", "--family", "petersen", "--max-nodes", "5"]) == (3, "[3, 4]\n")


def test_chi_and_lambda_plus():
    assert run(["chi", "--family", "wheel:6"]) == (0, "5\n")
    assert run(["lambda-plus", "--family", "petersen"]) == (0, "3\n")


def test_verify_c3_all_ones_fails(tmp_path):
    col = tmp_path / "c.json"
    col.write_text(json.dumps({"k": 1, "edges": [[0, 1, 1], [0, 2, 1], [1, 2, 1]]}))
    code, out = run(["verify", "--g6", "Bw", "--coloring", str(col)])
    assert code == 1
    assert json.loads(out) == {"valid": False, "kind": "coloring", "failing_pair": [0, 1]}


@pytest.mark.parametrize("method", ["vertex-removal", "three-halves", "min-bound"])
@pytest.mark.parametrize("family", ["petersen", "wheel:7", "grid:3,3", "complete_multipartite:1,2,3"])
def test_construct_then_verify(tmp_path, method, family):
    for flags in ([], ["--certificate"]):
        code, out = run(["construct", "--family", family, "--method", method, *flags])
        assert code == 0
        path = tmp_path / "col.json"
        path.write_text(out)
        code, out = run(["verify", "--family", family, "--coloring", str(path)])
        assert code == 0 and json.loads(out)["valid"] is True


def test_tampered_certificate_rejected(tmp_path):
    _, out = run(["construct", "--family", "wheel:5", "--method", "min-bound", "--certificate"])
    obj = json.loads(out)
    obj["cuts"][0]["side"] = obj["cuts"][0]["side"][:1] + [obj["cuts"][0]["pair"][1]]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(obj))
    code, out = run(["verify", "--family", "wheel:5", "--coloring", str(path)])
    assert code == 1 and json.loads(out)["kind"] == "certificate" and "reason" in json.loads(out)


def test_construct_dot():
    code, out = run(["construct", "--family", "petersen", "--method", "three-halves", "--format", "dot"])
    assert code == 0 and out.startswith("graph G {") and out.count("--") == 15


def test_scan_n6_corpus(tmp_path):
    dest = tmp_path / "scan.jsonl"
    code, out = run(["scan", "--corpus", "connected_n6", "--output", str(dest)])
    assert code == 0
    summary = json.loads(out)["summary"]
    assert summary["graphs"] == 112 and summary["violations"] == 0 and summary["unresolved"] == 0
    assert len(dest.read_text().splitlines()) == 113


def test_scan_witness_mode_with_workers():
    code, out = run(["scan", "--corpus", "connected_n5", "--mode", "witness", "--workers", "2"])
    assert code == 0
    assert json.loads(out.splitlines()[-1])["summary"]["violations"] == 0


def test_bounds_is_byte_deterministic():
    a = run(["bounds", "--family", "wheel:6"])
    b = run(["bounds", "--family", "wheel:6"])
    assert a == b and a[0] == 0
    obj = json.loads(a[1])
    assert obj["rd"] == 3 and obj["graph6"] == to_graph6(__import__("rainbowdc").generate("wheel", 6))


def test_ng_and_line():
    code, out = run(["ng", "--g6", "EJwG"])
    rec = json.loads(out)
    assert code == 0 and rec["extremal"] and rec["consistent"]
    code, out = run(["line", "--family", "star:4"])
    rec = json.loads(out)
    assert code == 0 and (rec["rd"], rec["rvd_line"]) == (1, 2) and rec["line_graph6"] == "Bw"


def test_family_command():
    assert run(["family", "petersen", "path:3"]) == (0, to_graph6(petersen()) + "\nBg\n")


def test_usage_errors(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["rd", "--family", "petersen", "--max-edges", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["rd", "--bogus"])
    assert exc.value.code == 2
    assert run(["rd", "--g6", "D?"])[0] == 2
    assert run(["rd", str(tmp_path / "missing.g6")])[0] == 2
    assert run(["rd", "--family", "wheel:2"])[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["verify", "--g6", "Bw", "--coloring", str(bad)])[0] == 2
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"k": 1, "edges": [[0, 1, 1]]}))
    assert run(["verify", "--g6", "Bw", "--coloring", str(wrong)])[0] == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "rainbowdc.cli", "rd", "--family", "wheel:8"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and res.stdout == "3\n"

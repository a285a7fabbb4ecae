import json
import subprocess
import sys

import pytest

from isolab.cli import main
from isolab.planar_map import load_json


@pytest.fixture(scope="module")
def hosts(tmp_path_factory):
    d = tmp_path_factory.mktemp("hosts")
    out = {}
    for name, args in {
        "deg7": ["--family", "triangulation_deg_k", "--k", "7", "--radius", "3"],
        "chain": ["--family", "nonnormal_chain", "--n-range", "-2..2"],
        "sq": ["--family", "square_lattice", "--n", "6"],
    }.items():
        path = d / f"{name}.json"
        assert main(["generate", *args, "--out", str(path)]) == 0
        out[name] = path
    return out


def _run(argv, capsys):
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_generate_roundtrip(hosts):
    m = load_json(hosts["deg7"])
    assert m.n_vertices == 85 and int(m.interior.sum()) == 29


def test_classify_json(hosts, capsys):
    code, out, _ = _run(["classify", "--host", str(hosts["chain"]), "--format", "json"], capsys)
    d = json.loads(out)
    assert code == 0 and d["proper"] and not d["normal"]


def test_curvature_csv(hosts, capsys):
    code, out, _ = _run(["curvature", "--host", str(hosts["chain"]), "--kind", "psi", "--format", "csv"], capsys)
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "carrier,id,label,value"
    assert any(",v_1^1,5/12" in line for line in lines)


def test_iso_json(hosts, capsys):
    code, out, _ = _run(["iso", "--host", str(hosts["deg7"]), "--kind", "j,kappa", "--cap", "6", "--format", "json"], capsys)
    rows = json.loads(out)
    assert code == 0 and [r["kind"] for r in rows] == ["j", "kappa"]
    assert all("/" in r["value"] for r in rows)


def test_partition_group(hosts, capsys):
    code, out, _ = _run(["partition", "--host", str(hosts["chain"]), "--group", "S_1"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["tree"]["is_tree"]


def test_hyperbolicity_sweep(capsys):
    code, out, _ = _run(["hyperbolicity", "--family", "cycle", "--sweep-param", "n", "--sweep", "8..9", "--format", "csv"], capsys)
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("radius,delta")
    assert [line.split(",")[1] for line in lines[1:]] == ["2", "2"]


def test_hyperbolicity_detour(hosts, capsys):
    code, out, _ = _run(["hyperbolicity", "--host", str(hosts["sq"]), "--mode", "detour", "--center", "14", "--t", "1..2", "--format", "json"], capsys)
    assert code == 0 and len(json.loads(out)) == 2


def test_dual_and_export(hosts, tmp_path, capsys):
    dpath = tmp_path / "dual.json"
    code, out, _ = _run(["dual", "--host", str(hosts["deg7"]), "--out", str(dpath)], capsys)
    assert code == 0 and json.loads(out)["faces"] == 85
    assert load_json(dpath).n_vertices == load_json(hosts["deg7"]).n_faces
    code, out, _ = _run(["export", "--host", str(hosts["sq"]), "--format", "svg", "--layout", "tutte"], capsys)
    assert code == 0 and out.startswith("<svg") and "Z" in out
    code, out, _ = _run(["export", "--host", str(hosts["sq"]), "--format", "dot"], capsys)
    assert out.startswith("graph G {")


def test_verify_subset(tmp_path, capsys):
    report = tmp_path / "r.json"
    code, out, _ = _run(["verify", "--suite", "paper", "--only", "1,4", "--json", str(report)], capsys)
    assert code == 0 and "[PASS]  1." in out
    assert all(r["passed"] for r in json.loads(report.read_text()))


def test_exit_codes(hosts, tmp_path, capsys):
    assert _run(["iso", "--host", str(hosts["deg7"]), "--bogus"], capsys)[0] == 2
    assert _run(["generate", "--family", "nope"], capsys)[0] == 2
    assert _run(["classify", "--host", str(tmp_path / "missing.json")], capsys)[0] == 3
    code, _, err = _run(["iso", "--host", str(hosts["deg7"]), "--cap", "99"], capsys)
    assert code == 1 and "CapExceeded" in err


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "isolab.cli", "--version"], capture_output=True, text=True)
    assert r.returncode == 0 and "isolab" in r.stdout

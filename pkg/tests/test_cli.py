import json
import subprocess
import sys

import pytest

from diclique.cli import main
from diclique.codec import load, parse_tournament
from diclique.construct import TT, C3, S, build


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_writes_trn(tmp_path, capsys):
    path = tmp_path / "s3.trn"
    code, out, _ = run_cli(capsys, "build", "S(3)", "-o", str(path))
    assert code == 0
    assert "n=7 arcs=21" in out
    assert load(str(path)) == build(S(3))


def test_build_prints_summary(capsys):
    code, out, _ = run_cli(capsys, "build", "TT(5)")
    assert code == 0 and "n=5 arcs=10" in out


def test_build_parse_error(capsys):
    code, _, err = run_cli(capsys, "build", "Delta(TT(1)")
    assert code == 1
    assert "offset" in err


def test_invariant_omega(tmp_path, capsys):
    path = tmp_path / "s3.trn"
    main(["build", "S(3)", "-o", str(path)])
    capsys.readouterr()
    code, out, _ = run_cli(capsys, "invariant", "omega", str(path))
    assert code == 0
    assert "omega = 2" in out


def test_invariant_json_schema(tmp_path, capsys):
    path = tmp_path / "p7.trn"
    main(["build", "Rot(7;1,2,4)", "-o", str(path)])
    capsys.readouterr()
    code, out, _ = run_cli(capsys, "invariant", "dom", str(path), "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["invariant"] == "dom" and doc["value"] == 3
    assert doc["status"] == "exact" and doc["schema_version"] == 1
    assert set(doc) >= {"value", "status", "certificate", "nodes", "elapsed_ms", "lo", "hi"}


def test_invariant_dichromatic_s4(tmp_path, capsys):
    path = tmp_path / "s4.trn"
    main(["build", "S(4)", "-o", str(path)])
    capsys.readouterr()
    code, out, _ = run_cli(capsys, "invariant", "dichromatic", str(path))
    assert code == 0 and "dichromatic = 4" in out


def test_invariant_bounds_exit_code(tmp_path, capsys):
    path = tmp_path / "s4.trn"
    main(["build", "S(4)", "-o", str(path)])
    capsys.readouterr()
    code, out, _ = run_cli(capsys, "invariant", "omega", str(path), "--time-limit", "0")
    assert code == 2
    assert "budget exhausted" in out


def test_invariant_needs_tournament(tmp_path, capsys):
    path = tmp_path / "d.dgr"
    path.write_text("2\n01\n00\n")
    code, _, err = run_cli(capsys, "invariant", "omega", str(path))
    assert code == 1 and "needs a tournament" in err
    code, out, _ = run_cli(capsys, "invariant", "alpha", str(path))
    assert code == 0 and "alpha = 1" in out


def test_invariant_missing_file(capsys):
    code, _, err = run_cli(capsys, "invariant", "omega", "nope.trn")
    assert code == 1


def test_order_goals(tmp_path, capsys):
    c3 = tmp_path / "c3.trn"
    main(["build", "C3", "-o", str(c3)])
    capsys.readouterr()
    code, out, _ = run_cli(capsys, "order", str(c3), "--goal", "omega")
    assert code == 0 and "value 2" in out
    tt4 = tmp_path / "tt4.trn"
    main(["build", "TT(4)", "-o", str(tt4)])
    capsys.readouterr()
    code, out, _ = run_cli(capsys, "order", str(tt4), "--goal", "forest")
    assert code == 0 and "backedges=0" in out
    tp6 = tmp_path / "tp6.trn"
    main(["build", "TP(6)", "-o", str(tp6)])
    capsys.readouterr()
    code, out, _ = run_cli(capsys, "order", str(tp6), "--goal", "matching")
    assert code == 0 and "max_degree=1" in out


def test_order_star_forest_and_dot(tmp_path, capsys):
    t = tmp_path / "h.trn"
    main(["build", "Delta(TT(1),TT(3),C3)", "-o", str(t)])
    capsys.readouterr()
    dot = tmp_path / "h.dot"
    code, out, _ = run_cli(capsys, "order", str(t), "--goal", "star-forest", "--emit-dot", str(dot))
    assert code == 0 and "ordering:" in out
    assert dot.read_text().startswith("graph")


def test_order_forest_none_on_paley(tmp_path, capsys):
    p7 = tmp_path / "p7.trn"
    main(["build", "Rot(7;1,2,4)", "-o", str(p7)])
    capsys.readouterr()
    code, out, _ = run_cli(capsys, "order", str(p7), "--goal", "forest")
    assert code == 0 and "NONE" in out


def test_order_bst(tmp_path, capsys):
    c3 = tmp_path / "c3.trn"
    main(["build", "C3", "-o", str(c3)])
    capsys.readouterr()
    code, out, _ = run_cli(capsys, "order", str(c3), "--goal", "bst")
    assert code == 0 and "best BST backedge clique 2 vs exact 2" in out


def test_search_enumerate(capsys):
    code, out, _ = run_cli(capsys, "search", "enumerate", "5")
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == 12
    for line in lines:
        n, bits = line.split(" ", 1)
        parse_tournament(f"{n}\n{bits.strip()}\n")


def test_search_critical(capsys):
    code, out, _ = run_cli(capsys, "search", "critical", "2", "6")
    assert code == 0
    assert "found 1 (complete)" in out
    assert "deletions=[1, 1, 1]" in out


def test_search_scan(tmp_path, capsys):
    csv = tmp_path / "scan.csv"
    code, out, _ = run_cli(
        capsys, "search", "scan", "dom<=omega && omega<=chi", "5", "--csv", str(csv)
    )
    assert code == 0
    assert "violations=0" in out
    assert csv.read_text().startswith("canonical_code,n,")


def test_search_scan_bad_predicate(capsys):
    code, _, err = run_cli(capsys, "search", "scan", "bogus_name > 1", "4")
    assert code == 1 and "unknown name" in err


def test_verify_filter_and_json(capsys):
    code, out, _ = run_cli(capsys, "verify-paper", "--filter", "tp-matching", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_passed"] is True
    assert [c["id"] for c in doc["claims"]] == ["tp-matching"]
    assert doc["schema_version"] == 1


def test_verify_text_output(capsys):
    code, out, _ = run_cli(capsys, "verify-paper", "--filter", "lemma3.8")
    assert code == 0
    assert "[PASS] lemma3.8" in out
    assert "1/1 claims passed" in out


def test_verify_unknown_filter(capsys):
    code, _, err = run_cli(capsys, "verify-paper", "--filter", "nonsense")
    assert code == 1


def test_verify_json_reruns_identically(capsys):
    code, first, _ = run_cli(capsys, "verify-paper", "--filter", "tp-matching", "--json")
    code, second, _ = run_cli(capsys, "verify-paper", "--filter", "tp-matching", "--json")
    assert first == second


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as err:
        main(["invariant", "wrong-name", "x.trn"])
    assert err.value.code == 1
    capsys.readouterr()


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "diclique.cli", "build", "TT(3)"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0 and "n=3 arcs=3" in out.stdout

import json
import subprocess
import sys

import pytest

from tamegl.dictcli import (AutomorphicDescriptor, MatchEntry, SpectralDescriptor, check_row,
                            dictionary_table, lookup, lookup_spectral, main, run_all,
                            verify_hom_table, verify_newform_sequences,
                            verify_support_disjointness, verify_wakimoto_equivariance)
from tamegl.fqbun import OrbitLabel, aut_order


def test_table_shape():
    rows = dictionary_table()
    assert len(rows) == 9
    assert str(lookup("Eis_1").spectral) == "O_Δ(2)"
    assert lookup("Wh").spectral.kind == "structure_sheaf"
    assert str(lookup_spectral("O_Loc(0,1,0)").automorphic) == "J_1*_1Wh"
    assert len({r.key for r in rows}) == 9


def test_entries_need_checks():
    with pytest.raises(ValueError):
        MatchEntry(SpectralDescriptor("structure_sheaf"), AutomorphicDescriptor("Wh"), ())
    MatchEntry(SpectralDescriptor("structure_sheaf"), AutomorphicDescriptor("Wh"), (),
               declarative=True)
    with pytest.raises(ValueError):
        SpectralDescriptor("nonsense")


@pytest.mark.parametrize("q", [2, 3, 5])
def test_every_row_check_passes(q):
    for row in dictionary_table():
        rep = check_row(row, q)
        assert rep.passed, rep.to_text()
        assert len(rep.checks) == len(row.checks)


def test_hom_table():
    rep = verify_hom_table(12)
    assert rep["n=-1"].got == 1 and rep["n=0"].got == 0 and rep["n=12"].ok
    assert rep.passed


def test_wakimoto_equivariance():
    assert verify_wakimoto_equivariance(10).passed
    with pytest.raises(ValueError):
        verify_wakimoto_equivariance(0)


def test_newform_sequences():
    rep = verify_newform_sequences(4, 8)
    assert rep.passed
    assert rep["Eis_0.label"].expected == ("c_0(S)", 6)
    assert rep["Eis_-1.label"].expected[0] == "c_1(∅)"
    assert aut_order(OrbitLabel.parse("c_0(S)"), 3) == 3 * 2


def test_support_disjointness():
    rep = verify_support_disjointness(4)
    assert rep.passed
    assert rep["wh_closure_contains_c_1(∅)"].ok
    # without restricting to the open set the closure reaches c_1(S)
    full = verify_support_disjointness(4, within=None)
    assert not full["disjoint.Eis_1"].ok


def test_dictionary_suite():
    assert run_all().passed


def test_cli_usage_errors(capsys):
    assert main(["verify", "fqbun", "--q", "7"]) == 2
    assert main(["verify", "nothing"]) == 2
    assert main(["verify", "hecke", "--cutoff", "0"]) == 2
    assert main([]) == 2


def test_cli_single_suite(tmp_path):
    out = tmp_path / "hecke.json"
    assert main(["verify", "hecke", "--format", "json", "--out", str(out)]) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["suite"] == "hecke"
    assert list(data["checks"][0]) == ["id", "status", "expected", "got", "details",
                                       "paper_anchor"]


def test_cli_all_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    code_a = main(["verify", "all", "--format", "json", "--out", str(a)])
    code_b = main(["verify", "all", "--format", "json", "--out", str(b), "--jobs", "3"])
    assert code_a == code_b == 1  # the two known failures listed below
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text(encoding="utf-8"))
    prefixes = [c["id"].split(".", 1)[0] for c in data["checks"]]
    assert list(dict.fromkeys(prefixes)) == ["spectral", "sl2rep", "hecke", "fqbun", "dictionary"]
    failing = [c["id"] for c in data["checks"] if c["status"] == "fail"]
    assert failing == ["spectral.linearization1.discrepancy_lower_left",
                       "fqbun.hecke.c_0(∅)->c_1(*).count"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tamegl", "verify", "sl2rep"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.startswith("[sl2rep] PASS")

import json
import subprocess
import sys

import pytest

import reference_data as P

from convring import matfile
from convring.cli import main
from convring.poly import PolyMatrix
from convring.ring import RMatrix


def write(path, modulus, entries, kind=None):
    if kind is None:
        kind = "poly" if isinstance(entries[0][0], list) else "const"
    doc = {"modulus": modulus, "kind": kind, "rows": len(entries), "cols": len(entries[0]),
           "entries": entries}
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


@pytest.fixture
def files(tmp_path):
    f = {}
    for name, m, entries in [("G", 6, P.G), ("G1", 2, P.G1), ("G2", 3, P.G2),
                             ("A", 6, P.A), ("B", 6, P.B), ("C", 6, P.C), ("D", 6, P.D),
                             ("K", 6, P.K6), ("L", 6, P.L6), ("M", 6, P.M6),
                             ("K1", 2, P.K1), ("L1", 2, P.L1), ("M1", 2, P.M1),
                             ("A1", 2, P.A1), ("C1", 2, P.C1),
                             ("OBS", 2, [[[1]], [[0, 1]]]),
                             ("u0", 6, [[[]], [[]]]), ("u", 6, [[[1]], [[0, 1]]]),
                             ("inputs", 6, [[1, 2], [0, 0]]),
                             ("Phi", 6, [[0, 0, 3, 2, 0, 2], [3, 2, 0, 2, 3, 0], [1, 3, 1, 3, 1, 1]])]:
        f[name] = write(tmp_path / f"{name}.mat", m, entries)
    return f


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    report = json.loads(out) if out.strip() else None
    return code, report, err


def checks_pass(report):
    return all(c["passed"] for c in report["checks"])


# --- subcommands -----------------------------------------------------------------

def test_ring(capsys):
    code, rep, _ = run(capsys, "ring", 6)
    assert code == 0
    assert rep["outputs"]["primes"] == [2, 3] and rep["outputs"]["idempotents"] == [3, 4]
    assert checks_pass(rep)


def test_ring_not_squarefree(capsys):
    code, rep, err = run(capsys, "ring", 12)
    assert code == 1
    assert rep["error"]["type"] == "NotSquarefree"
    assert "NotSquarefree" in err


def test_validate(capsys, files):
    code, rep, _ = run(capsys, "validate", files["G"])
    assert code == 0
    out = rep["outputs"]
    assert (out["n"], out["k"], out["delta"]) == (3, 2, 3)
    assert out["observable"] is False
    assert out["column_degrees"] == [[2, 1], [2, 1]]
    assert checks_pass(rep)


def test_minors(capsys, files):
    code, rep, _ = run(capsys, "minors", files["G"], 2)
    assert code == 0
    assert {tuple(f) for f in rep["outputs"]["minors"]} == P.G_MINORS
    assert rep["outputs"]["component_gcds"] == {"2": [1, 0, 1], "3": [1, 2, 1]}
    code, rep, _ = run(capsys, "minors", files["Phi"], 3)
    assert rep["outputs"] == {"ideal": "<1>", "annihilator": "<0>"}


def test_minors_size_out_of_range(capsys, files):
    code, rep, _ = run(capsys, "minors", files["G"], 3)
    assert code == 1 and rep["error"]["type"] == "SizeOutOfRange"


def test_rank(capsys, files):
    code, rep, _ = run(capsys, "rank", files["Phi"])
    assert rep["outputs"]["determinantal_rank"] == 3
    code, rep, _ = run(capsys, "rank", files["G"])
    assert rep["outputs"]["rank"] == 2


def test_for(capsys, files, tmp_path):
    out = tmp_path / "out"
    code, rep, _ = run(capsys, "--out-dir", out, "for", files["G"])
    assert code == 0
    assert rep["outputs"]["delta"] == 3
    assert checks_pass(rep) and len(rep["checks"]) == 4
    for name in "KLM":
        assert matfile.to_document(matfile.load(out / f"{name}.mat")) == rep["outputs"][name]


def test_iso(capsys, files, tmp_path):
    code, rep, _ = run(capsys, "--out-dir", tmp_path, "iso", files["K"], files["L"], files["M"])
    assert code == 0
    assert rep["outputs"]["A"]["entries"] == P.A
    assert rep["outputs"]["B"]["entries"] == P.B
    assert rep["outputs"]["permutation"] == [0, 1, 2]
    assert checks_pass(rep)
    assert matfile.load(tmp_path / "C.mat").tolist() == P.C


def test_iso_rejects_non_minimal(capsys, files, tmp_path):
    z = write(tmp_path / "z.mat", 2, [[0] * 3] * 4)
    code, rep, _ = run(capsys, "iso", z, z, z)
    assert code == 1 and rep["error"]["type"] == "NotMinimal"


def test_canon(capsys, files):
    code, rep, _ = run(capsys, "canon", files["A"], files["B"], files["C"], files["D"])
    assert code == 0
    assert rep["outputs"]["K"]["entries"] == [[5, 0, 0], [0, 5, 0], [0, 0, 5], [0, 0, 0]]
    assert rep["outputs"]["L"]["entries"] == P.L6
    assert checks_pass(rep)


def test_reach(capsys, files):
    code, rep, _ = run(capsys, "reach", files["A"], files["B"])
    assert code == 0
    assert rep["outputs"]["reachable"] is True
    assert rep["outputs"]["U_3(Phi)"] == "<1>"


def test_observe(capsys, files):
    code, rep, _ = run(capsys, "observe-sys", files["A1"], files["C1"])
    assert code == 0 and rep["outputs"]["observable"] is False
    assert rep["outputs"]["component_ranks"] == [1]
    code, rep, _ = run(capsys, "observe-code", files["G"])
    assert rep["outputs"]["observable"] is False
    assert rep["outputs"]["component_minor_gcds"] == {"2": [1, 0, 1], "3": [1, 2, 1]}


def test_syndrome(capsys, files):
    code, rep, _ = run(capsys, "syndrome", files["OBS"])
    assert code == 0 and checks_pass(rep)
    assert rep["outputs"]["H"]["entries"] == [[[0, 1], [1]]]
    code, rep, _ = run(capsys, "syndrome", files["G"])
    assert code == 1 and rep["error"]["type"] == "NotObservable"


def test_kernel(capsys, files):
    code, rep, _ = run(capsys, "kernel", files["K1"], files["L1"], files["M1"])
    assert code == 0 and checks_pass(rep)
    assert (rep["outputs"]["n"], rep["outputs"]["k"], rep["outputs"]["delta"]) == (3, 2, 3)


def test_encode(capsys, files):
    code, rep, _ = run(capsys, "encode", files["G"], files["u0"])
    assert code == 0
    assert rep["outputs"]["v"]["entries"] == [[[]], [[]], [[]]]
    code, rep, _ = run(capsys, "encode", files["G"], files["u"])
    assert code == 0 and checks_pass(rep)


def test_encode_wrong_message_shape(capsys, files, tmp_path):
    short = write(tmp_path / "short.mat", 6, [[[1]]])
    code, rep, err = run(capsys, "encode", files["G"], short)
    assert code == 2 and rep is None and "usage error" in err


def test_simulate(capsys, files):
    code, rep, _ = run(capsys, "simulate", files["A"], files["B"], files["C"], files["D"], files["inputs"])
    assert code == 0
    assert rep["outputs"]["states"][1] == [0, 1, 1]
    assert rep["outputs"]["outputs"] == [[0], [0]]
    assert rep["outputs"]["returned"] is False


def test_equal(capsys, files, tmp_path):
    swapped = write(tmp_path / "sw.mat", 6, [row[::-1] for row in P.G])
    code, rep, _ = run(capsys, "equal", files["G"], swapped)
    assert rep["outputs"]["equal"] is True
    other = write(tmp_path / "o.mat", 6, [[[0, 1], []], [[], [0, 1]], [[1], [1]]])
    code, rep, _ = run(capsys, "equal", files["G"], other)
    assert rep["outputs"]["equal"] is False


def test_equal_ring_mismatch(capsys, files):
    code, rep, _ = run(capsys, "equal", files["G1"], files["G2"])
    assert code == 1 and rep["error"]["type"] == "RingMismatch"


# --- paper-example ------------------------------------------------------------

def test_worked_example(capsys):
    code, rep, _ = run(capsys, "paper-example")
    assert code == 0
    assert len(rep["checks"]) == rep["outputs"]["stages_passed"] >= 10
    assert checks_pass(rep)
    names = [c["name"] for c in rep["checks"]]
    assert "glued system" in names and "encoder recovery" in names
    assert {c["mode"] for c in rep["checks"]} >= {"exact", "code"}


def test_worked_example_component(capsys):
    code, rep, _ = run(capsys, "paper-example", "--component", 1)
    assert code == 0 and checks_pass(rep)
    assert rep["outputs"]["field"] == 2
    assert all("F_3" not in c["name"] for c in rep["checks"])
    assert any("F_2" in c["name"] for c in rep["checks"])


def test_worked_example_corrupted(capsys):
    code, rep, err = run(capsys, "paper-example", "--corrupt-b")
    assert code == 1
    assert rep["error"]["type"] == "StageMismatch"
    assert rep["checks"][-1]["name"] == "glued system" and not rep["checks"][-1]["passed"]
    assert "glued system" in err


def test_worked_example_bad_component(capsys):
    code, rep, _ = run(capsys, "paper-example", "--component", 3)
    assert code == 2 and rep is None


# --- exit codes, files, determinism ---------------------------------------------------

def test_usage_errors(capsys, tmp_path):
    assert main(["nope"]) == 2
    assert main(["rank", str(tmp_path / "missing.mat")]) == 2
    bad = tmp_path / "bad.mat"
    bad.write_text('{"modulus": 6, "kind": "const", "rows": 2, "cols": 2, "entries": [[1, 2]]}')
    assert main(["rank", str(bad)]) == 2
    bad.write_text("not json")
    assert main(["rank", str(bad)]) == 2
    capsys.readouterr()


def test_entries_reduced_on_load(tmp_path):
    A = matfile.load(write(tmp_path / "a.mat", 6, [[7, -1], [12, 3]]))
    assert A.tolist() == [[1, 5], [0, 3]]
    G = matfile.load(write(tmp_path / "g.mat", 6, [[[6, 7, 0]]]))
    assert G.to_coeffs() == [[[0, 1]]]


@pytest.mark.parametrize("argv", [["paper-example"], ["for", "G"], ["iso", "K", "L", "M"], ["minors", "G", "2"]])
def test_reports_are_byte_identical(capsys, files, argv):
    args = [files.get(a, a) for a in argv]
    main(args)
    first = capsys.readouterr().out
    main(args)
    assert capsys.readouterr().out == first


def test_written_matrices_round_trip(capsys, files, tmp_path):
    out = tmp_path / "written"
    main(["--out-dir", str(out), "validate", files["G"]])
    main(["--out-dir", str(out), "reach", files["A"], files["B"]])
    capsys.readouterr()
    written = sorted(out.glob("*.mat"))
    assert [p.name for p in written] == ["G_2.mat", "G_3.mat", "Phi.mat"]
    for path in written:
        A = matfile.load(path)
        assert isinstance(A, (RMatrix, PolyMatrix))
        assert matfile.loads(matfile.dumps(A)) == A
        assert matfile.dumps(A) == path.read_text()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "convring.cli", "ring", "30"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["outputs"]["idempotents"] == [15, 10, 6]

import hashlib
import shutil
import subprocess
import sys

import pytest

from planar_dicolor.cli import FLAG_LINE, RunReport, main
from planar_dicolor.configs import format_catalog, shipped_catalog
from planar_dicolor.digraph import Digraph, uniform_lists, validate_coloring
from planar_dicolor.gen import GenSpec, dicycle, golden, random_plane_graph, random_planar_digraph
from planar_dicolor.pdg import format_pdg, parse_coloring, read_pdg


@pytest.fixture
def write(tmp_path):
    def _write(name, obj):
        path = tmp_path / name
        path.write_text(obj if isinstance(obj, str) else format_pdg(obj))
        return str(path)

    return _write


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, RunReport.from_text(out), err


# report format -------------------------------------------------------------------


def test_report_roundtrip():
    r = RunReport("planar-dicolor digirth x.pdg", [("x.pdg", "ab" * 32)], "5", {"k": 1}, ["5", "c 0 1"])
    again = RunReport.from_text(r.to_text())
    assert again == r


def test_report_carries_input_digest(capsys, write):
    path = write("c5.pdg", dicycle(5))
    code, report, _ = run(capsys, "digirth", path)
    digest = hashlib.sha256(open(path, "rb").read()).hexdigest()
    assert report.inputs == [(path, digest)]
    assert report.command.startswith("planar-dicolor digirth")


# digirth ------------------------------------------------------------------------


def test_digirth(capsys, write):
    assert run(capsys, "digirth", write("c5.pdg", dicycle(5)))[1].payload == ["5"]
    cube = golden("cube")
    acyclic = Digraph.from_embedding(cube, cube.edges())
    code, report, _ = run(capsys, "digirth", write("a.pdg", acyclic))
    assert code == 0 and report.payload == ["infinity"]


def test_corrupt_file_is_input_error(capsys, write):
    code, _, err = run(capsys, "digirth", write("bad.pdg", "pdg 1\nv 0 1\n"))
    assert code == 2 and "error" in err
    assert run(capsys, "digirth", "/nonexistent/file.pdg")[0] == 2


def test_digirth_needs_orientation(capsys, write):
    code, _, err = run(capsys, "digirth", write("cube.pdg", golden("cube")))
    assert code == 2 and "orientation" in err


# solve ----------------------------------------------------------------------------


def _witness(report, D):
    return parse_coloring([x for x in report.payload if x.startswith("c ")], D)


@pytest.mark.parametrize("flags", [[], ["--reduce"], ["--brute"], ["--seed", "3"]])
def test_solve_generated_instance(capsys, write, flags):
    D = random_planar_digraph(GenSpec(n=14, min_degree=4, digirth_min=5, seed=7))
    code, report, _ = run(capsys, "solve", write("g.pdg", D), *flags)
    assert code == 0 and report.outcome == "colored"
    assert validate_coloring(D, uniform_lists(D), _witness(report, D)).ok


def test_solve_single_color_lists_unsat(capsys, write, tmp_path):
    lists = tmp_path / "one.lists"
    lists.write_text("".join(f"l {v} 1\n" for v in range(5)))
    code, report, _ = run(capsys, "solve", write("c5.pdg", dicycle(5)), "--lists", lists)
    assert code == 1 and report.outcome == "unsatisfiable"
    assert report.inputs[1][0] == str(lists)


def test_solve_budget_exhausted(capsys, write):
    code, report, _ = run(capsys, "solve", write("c200.pdg", dicycle(200)), "--budget", "10")
    assert code == 3 and report.outcome == "budget-exhausted"
    assert not any(x.startswith("c ") for x in report.payload)


def test_solve_unknown_vertex_in_lists(capsys, write, tmp_path):
    lists = tmp_path / "bad.lists"
    lists.write_text("l 99 1 2\n")
    assert run(capsys, "solve", write("c5.pdg", dicycle(5)), "--lists", lists)[0] == 2


def test_brute_cap_from_environment(capsys, write, monkeypatch):
    monkeypatch.setenv("DICOLOR_BRUTE_CAP", "4")
    code, _, err = run(capsys, "solve", write("c5.pdg", dicycle(5)), "--brute")
    assert code == 5 and "cap" in err
    monkeypatch.setenv("DICOLOR_BRUTE_CAP", "lots")
    assert run(capsys, "solve", write("c5.pdg", dicycle(5)), "--brute")[0] == 2


def test_solve_payload_is_reproducible(capsys, write):
    path = write("g.pdg", random_planar_digraph(GenSpec(n=16, min_degree=4, digirth_min=5, seed=1)))
    first = run(capsys, "solve", path, "--seed", "2")[1]
    second = run(capsys, "solve", path, "--seed", "2")[1]
    assert first.payload == second.payload and first.inputs == second.inputs


# discharge ---------------------------------------------------------------------------


def test_discharge_octahedron(capsys, write, tmp_path):
    ledger = tmp_path / "octa.ledger"
    code, report, _ = run(capsys, "discharge", write("o.pdg", golden("octahedron")), "--ledger", ledger)
    assert code == 0
    negative = next(x for x in report.payload if x.startswith("negative")).split()[1:]
    assert len(negative) == 8 and all(x.startswith("f") for x in negative)
    assert "conservation true" in report.payload
    assert "catalog-matches Q3" in report.payload
    assert FLAG_LINE not in report.payload
    assert ledger.read_text() == ""  # no rule fires on a 4-regular triangulation


def test_discharge_dodecahedron(capsys, write):
    code, report, _ = run(capsys, "discharge", write("d.pdg", golden("dodecahedron")))
    negative = next(x for x in report.payload if x.startswith("negative")).split()[1:]
    assert code == 0 and len(negative) == 20 and all(x.startswith("v") for x in negative)
    assert "catalog-matches" in report.payload
    assert FLAG_LINE not in report.payload  # minimum degree 3


def test_discharge_flags_unexplained_negatives(capsys, write):
    emb = random_plane_graph(GenSpec(n=14, min_degree=4, seed=7))
    code, report, _ = run(capsys, "discharge", write("g.pdg", emb))
    assert code == 0 and FLAG_LINE in report.payload
    assert "catalog-matches" in report.payload


def test_discharge_ledger_lines_are_fractions(capsys, write, tmp_path):
    ledger = tmp_path / "g.ledger"
    emb = random_plane_graph(GenSpec(n=30, min_degree=3, seed=4))
    run(capsys, "discharge", write("g.pdg", emb), "--ledger", ledger)
    lines = [x for x in ledger.read_text().splitlines() if not x.startswith("#")]
    assert lines and all("/" in x.split()[-1] for x in lines)


def test_discharge_disconnected_input(capsys, write):
    text = "pdg 1\nv 0 1\nv 1 0\nv 2 3\nv 3 2\n"
    assert run(capsys, "discharge", write("two.pdg", text))[0] == 2


# match --------------------------------------------------------------------------------


def test_match_counts(capsys, write):
    code, report, _ = run(capsys, "match", write("o.pdg", golden("octahedron")))
    assert code == 0
    q3 = next(x for x in report.payload if x.startswith("match Q3 ")).split()
    assert q3[2] == "24" and "->" in q3[3]
    code, report, _ = run(capsys, "match", write("i.pdg", golden("icosahedron")))
    assert code == 0
    assert "match Q3 0 -" in report.payload
    assert next(x for x in report.payload if x.startswith("match Q4 ")).split()[2] == "60"


def test_match_none_and_explicit_catalog(capsys, write, tmp_path):
    cat = tmp_path / "c.cfg"
    cat.write_text(format_catalog(shipped_catalog()))
    code, report, _ = run(capsys, "match", write("c.pdg", golden("cube")), cat)
    assert code == 1 and report.outcome == "none" and len(report.inputs) == 2


def test_match_bad_catalog(capsys, write, tmp_path):
    cat = tmp_path / "bad.cfg"
    cat.write_text("cfg 2\n")
    assert run(capsys, "match", write("c.pdg", golden("cube")), cat)[0] == 2


# gen ----------------------------------------------------------------------------------


def test_gen_then_digirth(capsys, tmp_path):
    out = tmp_path / "g.pdg"
    code, report, _ = run(capsys, "gen", "--n", 12, "--digirth", 5, "--seed", 7, "--out", out)
    assert code == 0 and "seed 7" in report.payload
    digest = hashlib.sha256(out.read_bytes()).hexdigest()
    assert f"out {out} sha256:{digest}" in report.payload
    g = run(capsys, "digirth", out)[1].payload[0]
    assert g == "infinity" or int(g) >= 5


def test_gen_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.pdg", tmp_path / "b.pdg"
    flags = ["--n", 18, "--min-degree", 4, "--digirth", 5, "--seed", 11]
    code_a, report_a, _ = run(capsys, "gen", *flags, "--out", a)
    code_b, report_b, _ = run(capsys, "gen", *flags, "--out", b)
    assert code_a == code_b == 0 and a.read_bytes() == b.read_bytes()


def test_gen_impossible_spec(capsys, tmp_path):
    code, _, err = run(capsys, "gen", "--n", 3, "--min-degree", 4, "--out", tmp_path / "x.pdg")
    assert code == 4 and "generation failed" in err


def test_gen_spec_file_and_undirected(capsys, tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text('{"n": 14, "min_degree": 4, "seed": 2, "digirth_min": "infinity"}')
    out = tmp_path / "g.pdg"
    code, report, _ = run(capsys, "gen", "--spec-file", spec, "--out", out)
    assert code == 0 and run(capsys, "digirth", out)[1].payload == ["infinity"]
    plain = tmp_path / "p.pdg"
    assert run(capsys, "gen", "--n", 10, "--digirth", "none", "--out", plain)[0] == 0
    assert read_pdg(plain)[1] is None


def test_gen_bad_input(capsys, tmp_path):
    out = tmp_path / "x.pdg"
    bad_json, bad_key = tmp_path / "bad.json", tmp_path / "key.json"
    bad_json.write_text("{not json")
    bad_key.write_text('{"n": 10, "colour": 3}')
    assert run(capsys, "gen", "--n", 10, "--digirth", "six", "--out", out)[0] == 2
    assert run(capsys, "gen", "--spec-file", bad_json, "--out", out)[0] == 2
    assert run(capsys, "gen", "--spec-file", bad_key, "--out", out)[0] == 2
    assert run(capsys, "gen", "--out", out)[0] == 2


# acyclic -------------------------------------------------------------------------------


def test_acyclic_dicycle(capsys, write):
    code, report, _ = run(capsys, "acyclic", write("c5.pdg", dicycle(5)))
    assert code == 0
    assert report.payload[:3] == ["size 4", "ratio 4/5", "bound 3 holds"]


def test_acyclic_on_acyclic_digraph(capsys, write):
    cube = golden("cube")
    code, report, _ = run(capsys, "acyclic", write("a.pdg", Digraph.from_embedding(cube, cube.edges())))
    assert report.payload[0] == "size 8"


def test_acyclic_cap(capsys, write, monkeypatch):
    path = write("c30.pdg", dicycle(30))
    assert run(capsys, "acyclic", path, "--cap", 20)[0] == 5
    monkeypatch.setenv("DICOLOR_ACYCLIC_CAP", "40")
    assert run(capsys, "acyclic", path)[1].payload[0] == "size 29"


def test_unknown_subcommand_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["paint"])
    assert exc.value.code == 2


def test_console_script(tmp_path):
    path = tmp_path / "c5.pdg"
    path.write_text(format_pdg(dicycle(5)))
    exe = shutil.which("planar-dicolor")
    cmd = [exe] if exe else [sys.executable, "-m", "planar_dicolor"]
    done = subprocess.run(cmd + ["digirth", str(path)], capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout.splitlines()[-1] == "5"
    done = subprocess.run([sys.executable, "-m", "planar_dicolor", "digirth", str(path)], capture_output=True, text=True)
    assert done.returncode == 0

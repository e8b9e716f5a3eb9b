import subprocess
import sys

import pytest

from xmgraph.bundle import loads
from xmgraph.cli import main, run_command

from conftest import DATA, GOLDEN

LSYM2 = str(DATA / "lsym2.xmg")


def run(*argv):
    return run_command([str(a) for a in argv])


@pytest.mark.parametrize("name", ["ex-2-3", "yoneda-x2", "ex-4-1", "ex-4-2", "ex-4-3"])
def test_examples_match_golden(name):
    status, out = run("example", name)
    assert status == 0
    assert out == (GOLDEN / f"{name}.txt").read_text(encoding="utf-8")


def test_example_4_3_counts():
    _, out = run("example", "ex-4-3")
    assert "vertices: 2\n" in out and "arcs: 64\n" in out
    assert "fixed loops: 16 " in out
    assert "unfixed-loop orbits: 8\n" in out
    assert "cross-edge orbits: 16\n" in out


def test_adjunction_check_reports_passes():
    status, out = run("adjunction-check", "--trials", 12, "--seed", 7)
    assert status == 0
    assert out.strip().startswith("12/12 bijection passes")
    assert run("adjunction-check", "--trials", 12, "--seed", 7) == (status, out)


@pytest.mark.parametrize("kind", ["hyper", "power", "rpower"])
def test_adjunction_check_nerve_kinds(kind):
    status, out = run("adjunction-check", "--trials", 5, "--seed", 1, "--kind", kind)
    assert status == 0 and out.startswith("5/5")


def test_obstruction_report():
    status, out = run("obstruction", "--case", "power-graph")
    assert status == 0
    assert "sigma: i = [t,s]" in out
    orbit = next(l for l in out.splitlines() if l.startswith("orbit:"))
    assert orbit.count("(") == 2
    assert out.rstrip().endswith("verified: true")


def test_validate_and_homs():
    status, out = run("validate", LSYM2)
    assert status == 0 and "graph L: ok" in out
    status, out = run("homs", LSYM2, "A", "L")
    assert status == 0 and out.startswith("2 morphisms A -> L")
    status, out = run("homs", LSYM2, "L", "V", "--count")
    assert out == "0 morphisms L -> V\n"


def test_constructions_emit_bundles():
    for argv, name, size in (
        (("product", LSYM2, "A", "A"), "P", (4, 4)),
        (("coproduct", LSYM2, "L", "L"), "C", (2, 4)),
        (("exponential", LSYM2, "L", "A"), "GH", (1, 4)),
    ):
        status, out = run(*argv)
        assert status == 0
        b = loads(out.split("\n", 1)[1])
        assert b[name].size() == size
    status, out = run("coequalizer", DATA / "oriented-x2.xmg", "s", "t")
    assert loads(out.split("\n", 1)[1])["CO"].size() == (1, 1)
    status, out = run("equalizer", DATA / "oriented-x2.xmg", "s", "t")
    assert loads(out.split("\n", 1)[1])["EQ"].size() == (0, 0)


def test_curry_uncurry_round_trip(tmp_path):
    from xmgraph.bundle import Bundle, load_bundle, save_bundle
    from xmgraph.graph import enumerate_homs
    from xmgraph.limits import product

    b = load_bundle(LSYM2)
    P, _ = product(b["A"], b["A"])
    src = Bundle(b.theory)
    for n in "LAV":
        src.add(n, b[n])
    src.add("AxA", P)
    for i, h in enumerate(enumerate_homs(P, b["L"])):
        src.add(f"h{i}", h, "AxA", "L")
    path = tmp_path / "in.xmg"
    save_bundle(src, path)
    for name in (n for n in src.ends):
        status, out = run("curry", path, name, "A", "A")
        assert status == 0
        k = loads(out)
        mid = Bundle(b.theory)
        for n in "LA":
            mid.add(n, b[n])
        mid.add("GH", k["GH"])
        mid.add("k", k["curried"], "A", "GH")
        mpath = tmp_path / "mid.xmg"
        save_bundle(mid, mpath)
        status, out = run("uncurry", mpath, "k", "L", "A")
        assert status == 0
        assert loads(out)["uncurried"].key() == src[name].key()


def test_nerve_realize_fixed_point():
    status, out = run("nerve", DATA / "hypergraphs.xmg", "edge2", "--flavor", "hyper")
    assert status == 0 and loads(out.split("\n", 1)[1])["N"].n_arcs == 2
    status, out = run("realize", LSYM2, "A", "--flavor", "hyper")
    assert status == 0 and "edge" in out
    status, out = run("fixed-point", DATA / "hypergraphs.xmg", "edge3", "--x", 2)
    assert status == 0 and "fixed point: no" in out
    status, out = run("fixed-point", DATA / "hypergraphs.xmg", "single", "--x", 2)
    assert "fixed point: yes" in out


def test_export_dot(tmp_path):
    status, out = run("export-dot", DATA / "ex-2-3.xmg", "G")
    assert status == 0 and 'label="2"' in out
    target = tmp_path / "g.dot"
    assert run("export-dot", DATA / "ex-2-3.xmg", "G", "--out", target)[0] == 0
    assert target.read_text() == out
    status, _ = run("export-dot", DATA / "ex-2-3.xmg", "G", "--out", tmp_path / "no" / "g.dot")
    assert status == 1


def test_exit_codes(tmp_path, monkeypatch):
    assert run("frobnicate")[0] == 1
    assert run("homs", LSYM2, "A", "Nope")[0] == 1
    assert run("homs", tmp_path / "missing.xmg", "A", "L")[0] == 1
    assert run("export-dot", DATA / "oriented-x2.xmg", "A")[0] == 2
    bad = tmp_path / "bad.xmg"
    bad.write_text("xmgraph-bundle 1\ntheory symmetric 2\ngraph L\n  vertices v\n  arcs 0\n  inc 0 v w\n")
    status, out = run("validate", bad)
    assert status == 2 and "line" in out
    broken = tmp_path / "broken.xmg"
    broken.write_text((DATA / "lsym2.xmg").read_text().replace(
        "act a_id a_id a_[t,s]", "act a_id a_id a_id"))
    status, out = run("validate", broken)
    assert status == 2 and "graph A" in out
    monkeypatch.setenv("XMGRAPH_BUDGET", "2")
    assert run("homs", DATA / "lrefl2.xmg", "L", "L")[0] == 3


def test_main_writes_streams(capsys):
    assert main(["example", "ex-4-2"]) == 0
    assert "01~10" in capsys.readouterr().out
    assert main(["example", "nope"]) == 1
    assert "usage" in capsys.readouterr().err
    assert main(["--version"]) == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "xmgraph", "obstruction", "--case", "k-uniform"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "verified: true" in proc.stdout

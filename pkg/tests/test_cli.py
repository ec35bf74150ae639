import json
import subprocess
import sys
from fractions import Fraction

from crnet.classify import check_violation
from crnet.cli import main
from crnet.cones import ConeWitness
from crnet.egraph import EGraph, is_weakly_reversible
from crnet.massaction import VectorField, fields_equal, generate_field
from crnet.parser import parse, to_egraph

from conftest import NETWORKS, load


def path(name):
    return str(NETWORKS / f"{name}.crn")


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def fr(v):
    return tuple(Fraction(x) for x in v)


def test_classify_ex1(capsys):
    code, rep = run_json(capsys, "classify", path("ex1"))
    assert code == 0
    assert rep["schema_version"] == "1" and rep["command"] == "classify"
    assert len(rep["inputs"][0]["sha256"]) == 64
    flags = rep["result"]["flags"]
    assert flags["weakly_reversible"] is False
    assert flags["strongly_endotactic"] is True
    assert flags["extremally_weakly_reversible"] is True
    assert flags["source_only"] is False
    assert flags["consistent"] is True


def test_classify_ex3(capsys):
    code, rep = run_json(capsys, "classify", path("ex3"))
    flags = rep["result"]["flags"]
    assert (flags["endotactic"], flags["strongly_endotactic"], flags["source_only"]) == (True, False, True)


def test_classify_expect(capsys):
    assert run(capsys, "classify", path("ex3"), "--expect", "endotactic=true")[0] == 0
    code, out, _ = run(capsys, "classify", path("ex1"), "--expect", "weakly-reversible=true")
    assert code == 1 and "MISMATCH weakly_reversible" in out
    assert run(capsys, "classify", path("ex1"), "--expect", "bogus=true")[0] == 2


def test_classify_empty_file(capsys, tmp_path):
    empty = tmp_path / "empty.crn"
    empty.write_text("")
    code, _, err = run(capsys, "classify", empty)
    assert code == 2 and "no reactions" in err


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.crn"
    bad.write_text("X1 + -> X2\n")
    code, _, err = run(capsys, "classify", bad)
    assert code == 2 and "line 1" in err
    assert run(capsys, "classify", tmp_path / "missing.crn")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_classification_witnesses_recheck(capsys):
    code, rep = run_json(capsys, "classify", path("system2"))
    G, _ = load("system2")
    wit = rep["result"]["witnesses"]
    for key, strong in (("endotactic", False), ("strongly_endotactic", True)):
        w = wit[key]
        edge = G.reactions().index((fr(w["edge"]["source"]), fr(w["edge"]["target"])))
        assert check_violation(G, fr(w["w"]), edge, strong)
    c = wit["consistent"]
    cw = ConeWitness(c["kind"], c["alternative"], fr(c["lambdas"]) if "lambdas" in c else None,
                     fr(c["direction"]) if "direction" in c else None)
    assert cw.check((0, 0), list(G.reaction_vectors))


def test_compare_includes(capsys):
    code, rep = run_json(capsys, "compare", path("system1"), path("system2"), "--includes")
    assert code == 0 and rep["result"]["holds"]
    # each recorded lambda reproduces the relint point from the second network's generators
    for w in rep["result"]["witnesses"]:
        lam = fr(w["relint_witness"]["lambdas"])
        gens = [fr(g) for g in w["generators_b"]]
        point = tuple(sum(l * g[i] for l, g in zip(lam, gens)) for i in range(2))
        assert point == fr(w["relint_point"])
    code, rep = run_json(capsys, "compare", path("x_to_2x"), path("2x_to_x"), "--includes")
    assert code == 1 and rep["result"]["failing_reason"] == "SourceNotCovered"


def test_compare_capacity(capsys):
    code, rep = run_json(capsys, "compare", path("gbig"), path("gsmall"), "--capacity")
    assert code == 0 and rep["result"]["holds"]
    terms = {fr(t["exponent"]): fr(t["coefficient"]) for t in rep["result"]["shared_field"]}
    assert terms
    code, _ = run_json(capsys, "compare", path("x_to_2x"), path("2x_to_x"), "--capacity")
    assert code == 1


def test_realize_source_only(capsys, tmp_path):
    out = tmp_path / "ex12.crn"
    code, _, _ = run(capsys, "realize", path("ex1"), "--source-only", "--out", out)
    assert code == 0
    G, _ = to_egraph(parse(out.read_text()))
    assert set(G.reactions()) == set(load("ex12")[0].reactions())


def test_realize_wr_eliminate(capsys):
    code, out, _ = run(capsys, "realize", path("chain"), "--wr-eliminate", "--rates", "a=1,c=1,c=1,b=1")
    assert code == 0
    G, K = to_egraph(parse(out))
    assert dict(zip(G.reactions(), K)) == {((0,), (2,)): Fraction(1, 2), ((2,), (0,)): Fraction(1, 2)}


def test_realize_ewr2d(capsys):
    code, rep = run_json(capsys, "realize", path("ex1"), "--ewr2d")
    assert code == 1
    assert rep["result"]["error"] == "InteriorSourcePresent"
    code, rep = run_json(capsys, "realize", path("triangle"), "--ewr2d")
    assert code == 0
    assert all(rep["result"]["postconditions"].values())


def test_realize_missing_rates(capsys):
    assert run(capsys, "realize", path("ex1"), "--wr-eliminate")[0] == 2


def test_odes(capsys):
    code, out, _ = run(capsys, "odes", path("system1"))
    assert code == 0
    assert out.splitlines() == ["dx1/dt = -x1 + x2", "dx2/dt = x1 - x2"]
    assert run(capsys, "odes", path("dimer_exchange"))[1] == "dx/dt = 1 - x^2\n"
    assert run(capsys, "odes", path("dimer_exchange"), "--rates", "2,2")[1] == "dx/dt = 4 - 4*x^2\n"
    assert run(capsys, "odes", path("ex1"))[0] == 2
    latex = run(capsys, "odes", path("system1"), "--latex")[1]
    assert latex.startswith("\\frac{dx_{1}}{dt} = -x_{1} + x_{2}")


def test_odes_json_field(capsys):
    code, rep = run_json(capsys, "odes", path("system1"))
    f = VectorField.from_terms(2, {fr(t["exponent"]): fr(t["coefficient"]) for t in rep["result"]["field"]})
    assert fields_equal(f, generate_field(*load("system1")))


def test_random(capsys):
    a = run(capsys, "random", "--dim", 2, "--sources", 4, "--seed", 7)
    b = run(capsys, "random", "--dim", 2, "--sources", 4, "--seed", 7)
    assert a == b and a[0] == 0
    G, _ = to_egraph(parse(a[1]))
    assert isinstance(G, EGraph)
    code, out, _ = run(capsys, "random", "--dim", 2, "--require", "weakly-reversible", "--seed", 1)
    assert code == 0 and is_weakly_reversible(to_egraph(parse(out))[0])
    assert run(capsys, "random", "--dim", 1, "--sources", 100000)[0] == 1


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "crnet", "classify", path("system1")], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "endotactic: true" in proc.stdout

import json
from fractions import Fraction

import pytest

from mcgraphs.cli import main
from mcgraphs.designs import parse_design
from mcgraphs.hypergraph import build_hr, format_hypergraph


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def report(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_plane(capsys, tmp_path):
    path = tmp_path / "ag3.txt"
    data = report(capsys, "plane", "--q", 3, "-o", path)
    assert data == {"q": 3, "points": 9, "lines": 12, "parallel_classes": 4, "verified": True}
    blocks, classes = parse_design(path.read_text())
    assert len(blocks) == 12 and len(classes) == 4


def test_plane_rejects_non_prime_power(capsys):
    code, _, err = run(capsys, "plane", "--q", 6)
    assert code == 2 and "error" in err
    assert run(capsys, "plane", "--q", 11)[0] == 2
    assert report(capsys, "plane", "--q", 11, "--cap", 11)["lines"] == 132


def test_hr(capsys):
    data = report(capsys, "hr", "--r", 4)
    assert data["n"] == 12 and data["rank"] == 4
    assert data["proportional_rank"] == "1/3"
    assert data["delta_star"] == 10


def test_perturb(capsys, tmp_path):
    path = tmp_path / "h3.txt"
    path.write_text(format_hypergraph(build_hr(3)))
    data = report(capsys, "perturb", "--input", path)
    assert data["perturbable"] is True
    assert data["certificate"]["kind"] == "perturbation"
    assert data["farkas"]["kind"] == "farkas"
    weights = [Fraction(x) for x in data["perturbed_weights"]]
    assert len(weights) == 6 and sum(weights) == 1


def test_perturb_weights_file(capsys, tmp_path):
    host = tmp_path / "h3.txt"
    host.write_text(format_hypergraph(build_hr(3)))
    w = tmp_path / "w.txt"
    w.write_text("1/6 1/6 1/6 1/6 1/6 1/6\n")
    data = report(capsys, "perturb", "--input", host, "--weights", w, "--eps", "1/100")
    assert data["perturbable"] is True
    w.write_text("1/2 1/2\n")
    assert run(capsys, "perturb", "--input", host, "--weights", w)[0] == 2
    w.write_text("a b c d e f\n")
    assert run(capsys, "perturb", "--input", host, "--weights", w)[0] == 2
    assert run(capsys, "perturb", "--input", tmp_path / "missing.txt")[0] == 2


def test_perturb_eps_too_large(capsys, tmp_path):
    host = tmp_path / "h3.txt"
    host.write_text(format_hypergraph(build_hr(3)))
    assert run(capsys, "perturb", "--input", host, "--eps", "10")[0] == 2


def test_construct_and_analyze_agree(capsys, tmp_path):
    path = tmp_path / "g.txt"
    built = report(capsys, "construct", "--r", 3, "--c", 1, "--n", 18, "-o", path)
    assert built["delta"] == 13 and built["max_component"] == 8
    assert report(capsys, "analyze", "--input", path) == built


def test_construct_below_floor(capsys):
    code, _, err = run(capsys, "construct", "--r", 3, "--c", 1, "--n", 12)
    assert code == 2 and "n < r(r-1)" in err


def test_gys_text_format(capsys):
    code, out, _ = run(capsys, "gys", "--r", 3, "--n", 18, "--format", "text")
    assert code == 0
    assert "delta: 13" in out and "max_component: 6" in out


def test_oracle(capsys, tmp_path):
    assert report(capsys, "oracle", "--colors", 3, "--complete", 4)["mc"] == 2
    assert run(capsys, "oracle", "--colors", 3, "--complete", 9, "--cap", 100)[0] == 2
    assert run(capsys, "oracle", "--colors", 3)[0] == 2
    path = tmp_path / "k3.txt"
    path.write_text("G 3 1\n0 0 1\n0 1 2\n0 0 2\n")
    assert report(capsys, "oracle", "--colors", 2, "--input", path)["mc"] == 3


def test_bounds(capsys):
    data = report(capsys, "bounds", "--r", 7, "--n", 35)
    assert data["furedi_lower"] == "6/1" and data["furedi_upper"] == 7


def test_rbibd(capsys, tmp_path):
    data = report(capsys, "rbibd", "--k", 3, "--t", 1, "--n", 45, "-o", tmp_path / "g.txt")
    assert data["v"] == 15 and data["num_colors"] == 7
    assert data["audit"]["max_component"] == 9
    assert data["audit"]["delta"] == 44
    assert report(capsys, "rbibd", "--k", 5, "--t", 1)["design_available"] is False


def test_search(capsys):
    data = report(capsys, "search-s", "--r", 3)
    assert data["total_candidates"] == 84 and data["orbit_count"] == 1
    assert run(capsys, "search-s", "--r", 7)[0] == 2


def test_malformed_graph_file(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("X 1 2\n")
    assert run(capsys, "analyze", "--input", path)[0] == 2


def test_missing_argument_exits():
    with pytest.raises(SystemExit):
        main(["construct", "--r", "3"])

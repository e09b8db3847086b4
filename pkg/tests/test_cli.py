import json
import subprocess
import sys

import pytest

from qgkit.cli import EXIT_ENGINE, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main
from qgkit.corpus import BUILTIN, DIM8, write_corpus
from qgkit.ringfile import RingFileError, parse_ring_text


@pytest.fixture
def dim8_file(tmp_path):
    p = tmp_path / "dim8.ring"
    p.write_text("# Gorenstein, length 8\n" + DIM8 + "sequence s: x, y, z\n")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_exact_sequence(capsys, dim8_file):
    code, out, _ = run(capsys, "check", "exact-sequence", "x,y,z", "--ring", dim8_file)
    rep = json.loads(out)
    assert code == EXIT_OK and rep["verdict"] == "yes"
    assert set(rep) == {"command", "verdict", "evidence", "certification", "paper_case"}
    # a "no" verdict is still a successful run
    code, out, _ = run(capsys, "check", "exact-sequence", "y,x,z", "--ring", dim8_file)
    assert code == EXIT_OK and json.loads(out)["verdict"] == "no"


def test_named_sequence_and_inline_ring(capsys, dim8_file):
    code, out, _ = run(capsys, "check", "exact-sequence", "@s", "--ring", dim8_file)
    assert code == EXIT_OK and json.loads(out)["verdict"] == "yes"
    code, out, _ = run(capsys, "check", "gorenstein", "--vars", "x,y", "--relations", "x^2, x*y")
    assert code == EXIT_OK and json.loads(out)["verdict"] == "no"


def test_other_commands(capsys, dim8_file):
    code, out, _ = run(capsys, "koszul", "homology", "x,y,z", "--ring", dim8_file)
    assert code == EXIT_OK
    code, out, _ = run(capsys, "resolve", "--module", "x", "--ring", dim8_file, "--length", "4")
    assert code == EXIT_OK and json.loads(out)["evidence"]["betti"][:5] == [1, 1, 1, 1, 1]
    code, out, _ = run(capsys, "poincare", "--module", "k", "--ring", dim8_file, "--length", "4")
    assert json.loads(out)["evidence"]["coefficients"] == [1, 3, 6, 10, 15]
    code, out, _ = run(capsys, "ext", "--module", "y", "--ring", dim8_file, "--cutoff", "3")
    assert code == EXIT_OK
    code, out, _ = run(capsys, "trivial-extension", "--vars", "x,y", "--relations", "x^2,x*y,y^2")
    assert code == EXIT_OK and json.loads(out)["verdict"] == "yes"
    code, out, _ = run(capsys, "define", "--ring", dim8_file, "--text")
    assert code == EXIT_OK and out.startswith("define:")


def test_pfaffian_command(capsys):
    code, out, _ = run(capsys, "pfaffian-ideal", "--vars", "x,y,z")
    ev = json.loads(out)["evidence"]
    assert code == EXIT_OK and ev["minimal_generators"] == 5 and ev["socle_dim"] == 1


def test_usage_errors(capsys, dim8_file):
    assert run(capsys, "check", "nonsense", "--ring", dim8_file)[0] == EXIT_USAGE
    assert run(capsys, "check", "gorenstein")[0] == EXIT_USAGE
    assert run(capsys)[0] == EXIT_USAGE


def test_engine_errors(capsys, tmp_path):
    bad = tmp_path / "bad.ring"
    bad.write_text("field: 101\nvars: x, y\nrelations: x^2, x*(y\n")
    code, _, err = run(capsys, "define", "--ring", str(bad))
    assert code == EXIT_ENGINE and "line 3" in err
    code, _, err = run(capsys, "define", "--vars", "x", "--relations", "x - x^2")
    assert code == EXIT_ENGINE and "inhomogeneous presentation rejected" in err


def test_ring_file_error_positions():
    with pytest.raises(RingFileError) as e:
        parse_ring_text("vars: x, y\nrelations: x^2, y^2 +\n")
    assert e.value.line == 2 and e.value.column > 1
    with pytest.raises(RingFileError) as e:
        parse_ring_text("vars: x\n  colour: red\n")
    assert (e.value.line, e.value.column) == (2, 3)


def test_output_is_byte_deterministic(tmp_path, dim8_file):
    cmd = [sys.executable, "-m", "qgkit.cli", "check", "quasi-gorenstein", "x", "--ring", dim8_file]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["verdict"] == "yes"


def test_corpus_builtin_and_files(capsys, tmp_path):
    code, out, _ = run(capsys, "corpus", "run")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["evidence"]["total"] == len(BUILTIN) and not rep["evidence"]["failed"]

    flipped = [dict(c) for c in BUILTIN[:2]]
    flipped[0]["expect"] = "no"
    path = tmp_path / "flipped.json"
    write_corpus(path, flipped)
    code, out, err = run(capsys, "corpus", "run", str(path))
    assert code == EXIT_MISMATCH and flipped[0]["id"] in err

    empty = tmp_path / "empty.json"
    empty.write_text("")
    code, out, err = run(capsys, "corpus", "run", str(empty))
    assert code == EXIT_OK and "empty corpus" in err


def test_corpus_parallel_matches_serial(capsys):
    _, a, _ = run(capsys, "corpus", "run", "--jobs", "1")
    _, b, _ = run(capsys, "corpus", "run", "--jobs", "2")
    assert a == b


def test_ring_routing():
    from qgkit.artin import FiniteLocalAlgebra
    from qgkit.graded import GradedQuotientRing
    from qgkit.ringfile import ring_from_text

    A = ring_from_text(DIM8)
    assert isinstance(A, FiniteLocalAlgebra) and A.dim == 8
    S = ring_from_text("vars: x, y\n")
    assert isinstance(S, GradedQuotientRing) and S.krull_dim == 2 and not S.ideal.generators
    N = ring_from_text("vars: x, y\nrelations: x*y\n")
    assert isinstance(N, GradedQuotientRing) and N.krull_dim == 1


def test_koszul_homology_presentations(capsys):
    code, out, _ = run(capsys, "koszul", "homology", "x^2,x*y", "--vars", "x,y")
    H = json.loads(out)["evidence"]["homology"]
    assert code == EXIT_OK
    assert H["0"]["annihilator"] == ["x^2", "x*y"]
    assert H["1"]["generators"] == ["(y, -x)"] and H["1"]["annihilator"] == ["x"]
    assert H["2"]["zero"]


def test_text_and_json_verdicts_agree(capsys, dim8_file):
    for args in (["check", "exact-sequence", "y,x,z"], ["check", "gorenstein"], ["check", "top-bottom", "x,y,z"]):
        _, out, _ = run(capsys, *args, "--ring", dim8_file)
        _, text, _ = run(capsys, *args, "--ring", dim8_file, "--text")
        assert text.splitlines()[0].split(": ", 1)[1].startswith(json.loads(out)["verdict"] + " (")

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmlab import artinian
from cmlab.algebra.parse import ParseError
from cmlab.algebra.polyring import PolyRing
from cmlab.cli import main
from cmlab.lab import windows
from cmlab.lab.windows import TheoremVerdict
from cmlab.session import ModuleSpec, RingSpec, SessionFile, format_session, load_session, parse_session

EX39 = """\
# dual numbers
ring R
  char 32003
  vars x
  ideal x^2
end
"""

PLANE = """\
ring R
  vars x y
  ideal x^2
end
module M over R
  gendeg 0 0
  relations
    x, y;
    0, x
end
module F over R
  gendeg 0 1
end
"""

COMPUTATION_KEYS = {"command", "ring", "modules", "result", "seed", "char", "elapsed_ms"}


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, text in (("ex39.cm", EX39), ("plane.cm", PLANE)):
        path = tmp_path / name
        path.write_text(text)
        out[name] = str(path)
    out["out"] = str(tmp_path / "out.jsonl")
    return out


def records(path):
    with open(path) as fh:
        return [json.loads(line) for line in fh]


# -- session format -------------------------------------------------------------------------------
S = PolyRing(["x", "y", "z"])


@st.composite
def poly_text(draw):
    d = draw(st.integers(1, 3))
    monos = S.monomials_of_degree(d)
    picks = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=3, unique=True))
    coeffs = draw(st.lists(st.integers(1, 50), min_size=len(picks), max_size=len(picks)))
    return S.format(dict(zip(picks, coeffs)))


@st.composite
def session_files(draw):
    ring = RingSpec("R", ("x", "y", "z"), tuple(draw(st.lists(poly_text(), max_size=3))),
                    draw(st.sampled_from([2, 3, 32003])))
    modules = []
    for i in range(draw(st.integers(0, 2))):
        rank = draw(st.integers(1, 3))
        gendeg = tuple(draw(st.lists(st.integers(-2, 3), min_size=rank, max_size=rank)))
        rows = draw(st.lists(st.lists(st.one_of(st.just("0"), poly_text()), min_size=rank, max_size=rank)
                             .map(tuple), max_size=3))
        modules.append(ModuleSpec("M%d" % i, "R", gendeg, tuple(rows)))
    options = draw(st.dictionaries(st.sampled_from(["seed", "jmax", "nmax", "bound"]), st.integers(0, 99)))
    return SessionFile(ring, modules, options)


@given(session_files())
@settings(max_examples=60)
def test_session_round_trip(spec):
    assert parse_session(format_session(spec)) == spec


def test_session_modules():
    s = load_session(PLANE)
    assert set(s.modules) == {"k", "R", "M", "F"}
    assert s.module("F").num_generators == 2 and s.module("F").rank == 2
    assert s.module("M").num_generators == 2
    with pytest.raises(KeyError):
        s.module("Q")


@pytest.mark.parametrize("text,line", [
    ("ring R\n  vars x\n  colour red\nend\n", 3),
    ("ring R\n  vars x\nend\nmodule M over T\n  gendeg 0\nend\n", 4),
    ("ring R\n  vars x\nend\nmodule M over R\n  gendeg 0\n  relations\n    x + 1\nend\n", 7),
    ("ring R\n  vars x y\nend\nmodule M over R\n  gendeg 0 1\n  relations\n    x, x\nend\n", 7),
    ("ring R\n  vars x\n  ideal x^2 +\nend\n", None),
    ("ring R\n  vars x\n", 2),
    ("options\n  seed 1\nend\n", 1),
])
def test_session_errors(text, line):
    with pytest.raises(ParseError) as err:
        load_session(text)
    if line is not None:
        assert err.value.line == line


# -- commands -------------------------------------------------------------------------------------
def test_invariants_of_dual_numbers(files, capsys):
    assert main(["invariants", files["ex39.cm"], "--module", "R", "--out", files["out"]]) == 0
    text = capsys.readouterr().out
    assert "e = 2" in text and "mu = 1" in text and "type = 1" in text
    (rec,) = records(files["out"])
    assert set(rec) == COMPUTATION_KEYS and rec["result"]["e"] == 2


def test_classify(files, capsys):
    assert main(["classify", "--file", files["ex39.cm"]]) == 0
    text = capsys.readouterr().out
    lines = {line.split(":")[0].strip(): line.split(":")[1].strip() for line in text.splitlines()[1:]}
    assert (lines["hypersurface"], lines["e"], lines["Gorenstein"], lines["regular"]) == ("yes", "2", "yes", "no")


@pytest.mark.parametrize("argv", [
    ["resolve", "--module", "M"], ["betti", "--module", "k", "--nmax", "4"], ["bass", "--module", "R", "--nmax", "3"],
    ["tor", "--M", "k", "--N", "M", "--nmax", "3"], ["ext", "--M", "M", "--N", "R", "--nmax", "3"],
    ["invariants"],
])
def test_computation_commands(files, argv):
    assert main(argv + ["--file", files["plane.cm"], "--out", files["out"], "--seed", "4"]) == 0
    recs = records(files["out"])
    assert recs and all(set(r) == COMPUTATION_KEYS and r["seed"] == 4 for r in recs)


def test_agree_command(files):
    assert main(["agree", files["ex39.cm"], "--module", "k", "--out", files["out"]]) == 0
    (rec,) = records(files["out"])
    assert rec["result"]["agree"] and rec["consistent"]


def test_check_example(files, capsys):
    argv = ["check", "--id", "P32.1", "--file", files["ex39.cm"], "--M", "k", "--N", "k", "--j", "0"]
    assert main(argv + ["--out", files["out"]]) == 0
    assert "window not satisfied" in capsys.readouterr().out
    (rec,) = records(files["out"])
    assert tuple(sorted(rec)) == tuple(sorted(TheoremVerdict.RECORD_KEYS))
    assert (rec["window_lo"], rec["window_hi"], rec["vanished"], rec["consistent"]) == (1, 1, False, True)


def test_check_scans_j_by_default(files):
    assert main(["check", "--id", "T37.1", files["ex39.cm"], "--M", "k", "--N", "R", "--out", files["out"]]) == 0
    assert [r["j"] for r in records(files["out"])] == list(range(7))


def test_witness_command(files, tmp_path):
    regular = tmp_path / "reg.cm"
    regular.write_text("ring R\n  vars x y\nend\n")
    assert main(["witness", "--id", "C43", str(regular), "--out", files["out"]]) == 0
    recs = records(files["out"])
    assert recs and all(r["consistent"] for r in recs)
    assert main(["witness", "--id", "C43", files["ex39.cm"]]) == 1


@pytest.mark.parametrize("argv", [
    [], ["frobnicate"], ["invariants"], ["check", "--id", "T99", "--M", "k"],
    ["check", "--id", "T37.1", "--M", "k"], ["invariants", "--module", "Q"],
    ["check", "--id", "T37.3", "--M", "k", "--N", "R", "--j", "0"],
])
def test_usage_errors(files, argv):
    if argv and argv[0] in ("check", "invariants") and len(argv) > 1:
        argv = argv + ["--file", files["plane.cm"]]
    assert main(argv) == 1


def test_missing_file_and_parse_error(tmp_path):
    assert main(["classify", str(tmp_path / "nope.cm")]) == 1
    bad = tmp_path / "bad.cm"
    bad.write_text("ring R\n  vars x\n  ideal x +\nend\n")
    assert main(["classify", str(bad)]) == 1


def test_resource_limit_exit_code(files, monkeypatch):
    # Registers the variable with monkeypatch so the value main() writes is undone afterwards.
    monkeypatch.setenv("CMLAB_MAX_PAIRS", "100000")
    assert main(["resolve", "--module", "k", "--nmax", "6", "--max-pairs", "1", "--file", files["plane.cm"]]) == 3


def test_explore_q52_command(files):
    assert main(["explore-q52", "--trials", "5", "--bound", "4", "--out", files["out"]]) == 0
    (rec,) = records(files["out"])
    assert rec["trials_run"] == 5 and rec["consistent"]
    assert main(["explore-q52", "--trials", "0", "--out", files["out"]]) == 0
    assert records(files["out"])[0]["verdict"] == "empty report"


# -- exit code 2 iff an inconsistent record ---------------------------------------------------------
def test_exit_two_on_failed_verification(files, monkeypatch):
    text, _ = windows.CONCLUSIONS["pd N"]
    monkeypatch.setitem(windows.CONCLUSIONS, "pd N", (text, lambda case: False))
    argv = ["check", "--id", "T37.1", "--file", files["plane.cm"], "--M", "k", "--N", "R", "--j", "1"]
    assert main(argv + ["--out", files["out"]]) == 2
    assert [r["consistent"] for r in records(files["out"])] == [False]


def test_exit_two_on_engine_disagreement(files, monkeypatch):
    real = artinian.fd_betti
    monkeypatch.setattr(artinian, "fd_betti", lambda A, M, n: [b + 1 for b in real(A, M, n)])
    assert main(["agree", files["ex39.cm"], "--module", "k", "--out", files["out"]]) == 2
    assert records(files["out"])[0]["consistent"] is False


def test_corpus_command(files, capsys):
    assert main(["corpus", "--out", files["out"]]) == 0
    recs = records(files["out"])
    assert all(set(r) == set(TheoremVerdict.RECORD_KEYS) for r in recs)
    assert all(r["consistent"] for r in recs)
    assert "all consistent" in capsys.readouterr().out

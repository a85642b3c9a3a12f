import io
import json
import subprocess
import sys

import pytest

from gfgcanon import fixtures
from gfgcanon.automaton import canonical_renumber
from gfgcanon.cli import main
from gfgcanon.hoa import parse_hoa, write_hoa
from gfgcanon.iso import isomorphic
from gfgcanon.semantics import language_equiv


@pytest.fixture
def run(monkeypatch, capsys):
    def go(*argv, stdin=""):
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
        code = main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err

    return go


def normal_form(text):
    return write_hoa(canonical_renumber(parse_hoa(text)).with_name(""))


def test_fig2_pipeline_reproduces_fig7(run):
    _, fig2, _ = run("fixtures", "fig2")
    code, small, _ = run("minimize", stdin=fig2)
    assert code == 0
    code, canon, _ = run("canonize", "--mode", "max", stdin=small)
    assert code == 0
    _, fig7, _ = run("fixtures", "fig7")
    assert normal_form(canon) == normal_form(fig7)


def test_random_single_state_minimizes_to_one_state(run):
    code, text, _ = run("random", "--states", "1", "--letters", "2", "--seed", "7")
    assert code == 0
    code, out, _ = run("minimize", stdin=text)
    assert code == 0 and parse_hoa(out).num_states == 1


def test_random_is_deterministic_in_seed(run):
    args = ("random", "--states", "4", "--letters", "3", "--density", "0.4", "--seed", "12")
    assert run(*args)[1] == run(*args)[1]


def test_random_requires_seed(run):
    assert run("random", "--states", "2", "--letters", "2")[0] == 2


def test_iso_exit_codes(run):
    assert run("iso", "fig5c1", "fig5c2")[0] == 1
    assert run("iso", "--safe-only", "fig5c1", "fig5c2")[0] == 0
    code, out, _ = run("iso", "--json", "fig4", "fig4")
    assert code == 0 and json.loads(out)["respects_alpha"]


def test_fixtures_listing_and_unknown_name(run):
    code, out, _ = run("fixtures")
    assert code == 0 and out.split() == list(fixtures.NAMES)
    assert run("fixtures", "fig3")[0] == 2


def test_bad_input_is_an_error(run):
    code, _, err = run("minimize", stdin="HOA: v1\nStates: two\n")
    assert code == 2 and "error" in err
    assert run("minimize", stdin="")[0] == 2
    assert run("minimize", "no-such-file")[0] == 2
    assert run("no-such-command")[0] == 2


def test_file_input_and_output(run, tmp_path):
    src = tmp_path / "in.hoa"
    dst = tmp_path / "out.hoa"
    src.write_text(fixtures.fixture_text("fig2"))
    assert run("minimize", str(src), "-o", str(dst))[0] == 0
    assert parse_hoa(dst.read_text()).num_states == 2


def test_minimize_trace(run):
    code, _, err = run("minimize", "--trace", "fig2")
    assert code == 0
    assert json.loads(err)["frontier"] == [[0, 1]]


def test_canonize_homogeneous_without_minimizing(run):
    code, out, _ = run("canonize", "--mode", "homogeneous", "--no-minimize", "fig5c1")
    assert code == 0
    assert isomorphic(parse_hoa(out), fixtures.load("fig4"))


def test_non_nice_input_is_an_error(run):
    code, _, err = run("canonize", "--mode", "homogeneous", "--no-minimize", "fig7")
    assert code == 2 and "alpha-homogeneous" in err


def test_validate_and_safe_components(run):
    assert run("validate", "fig2") == (0, "valid\n", "")
    code, out, _ = run("safe-components", "--json", "fig2")
    assert code == 0 and sorted(map(sorted, json.loads(out)["components"])) == [[0, 1], [2]]


def test_relations_and_equiv(run):
    code, out, _ = run("relations", "--json", "fig4")
    assert code == 0 and set(json.loads(out)) >= {"equiv", "strongly_equiv", "subsafe"}
    assert run("equiv", "fig6d1", "fig6d2")[0] == 0
    assert run("equiv", "fig5c1", "fig4")[0] == 0
    assert run("equiv", "fig6d1", "fig4")[0] == 2


def test_oracles(run):
    assert run("verify-gfg", "fig4")[0] == 0
    code, out, _ = run("dbp", "fig4")
    assert code == 0
    assert language_equiv(parse_hoa(out), fixtures.load("fig4"))
    assert run("dbp", "--bound", "3", "fig7")[0] == 2
    assert run("lasso-equiv", "fig6d1", "fig6d2")[0] == 0
    code, out, _ = run("search-min-tdcw", "--max-states", "2", "fig2")
    assert code == 0 and parse_hoa(out).num_states == 2
    assert run("search-min-tdcw", "--max-states", "1", "fig2")[0] == 1
    assert run("search-min-tdcw", "--max-states", "0", "fig2")[0] == 2


def test_dot(run):
    code, out, _ = run("dot", "fig4")
    assert code == 0 and out.startswith("digraph")


def test_console_script_pipes():
    fig2 = subprocess.run(
        [sys.executable, "-m", "gfgcanon", "fixtures", "fig2"], capture_output=True, text=True, check=True
    ).stdout
    res = subprocess.run([sys.executable, "-m", "gfgcanon", "minimize"], input=fig2, capture_output=True, text=True)
    assert res.returncode == 0 and parse_hoa(res.stdout).num_states == 2

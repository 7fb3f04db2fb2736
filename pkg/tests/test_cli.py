"""Command line interface: spec files, reports, quotients, lattices, suite."""

import numpy as np
import pytest

from ringbench.cli import (
    build_claims, least_ideal, load_ring, main, parse_ring_text,
    resolve_gens, serialize_ring,
)
from ringbench.core import InputError
from ringbench.construct import catalog
from ringbench.ideals import quotient


# -- spec files ---------------------------------------------------------------

def test_parse_ring_text_minimal():
    r = parse_ring_text("""
        # two-dimensional: scalars plus a square-zero line
        name tiny
        shape 2 2
        one 1 0
        mul 0 0 -> 1 0
        mul 0 1 -> 0 1
        mul 1 0 -> 0 1
    """)
    assert r.size == 4
    assert r.name == "tiny"
    assert r.mul((0, 1), (0, 1)) == (0, 0)


def test_parse_reduces_coefficients():
    r = parse_ring_text("shape 3\none 4\nmul 0 0 -> -2\n")
    assert r.one == (1,)
    assert r.mul((2,), (2,)) == (1,)


@pytest.mark.parametrize("text,fragment", [
    ("one 1\n", "missing `shape`"),
    ("shape 2\n", "missing `one`"),
    ("shape 2\none 1\nmul 0 0 => 1\n", "line 3"),
    ("shape 2\none 1 1\n", "line 2"),
    ("shape 2\none 1\nmul 0 5 -> 1\n", "out of range"),
    ("shape 2\none 1\nmul 0 0 -> 1 1\n", "line 3"),
    ("shape 1 2\none 0 1\n", "moduli >= 2"),
    ("shape 2\none x\n", "integers"),
    ("flavor 2\n", "unknown directive"),
])
def test_parse_errors_carry_line_numbers(text, fragment):
    with pytest.raises(InputError) as err:
        parse_ring_text(text)
    assert fragment in str(err.value)


def test_parse_rejects_broken_axioms():
    # 1*1 = 0 breaks the identity law
    with pytest.raises(InputError) as err:
        parse_ring_text("shape 2\none 1\nmul 0 0 -> 0\n")
    assert "axioms" in str(err.value)


def test_serialize_round_trips_catalog():
    for name in ("z2q8", "ex52", "ex51(3)", "t2z2", "z6"):
        r = catalog(name)
        r2 = parse_ring_text(serialize_ring(r))
        assert r2.shape.moduli == r.shape.moduli
        assert np.array_equal(r2.tensor, r.tensor)
        assert r2.one == r.one


def test_serialize_handles_quotients():
    r = catalog("ex52")
    q = quotient(r, least_ideal(r))
    r2 = parse_ring_text(serialize_ring(q))
    assert r2.size == 64


def test_load_ring_from_file(tmp_path):
    path = tmp_path / "tiny.ring"
    path.write_text(serialize_ring(catalog("z6")))
    r = load_ring(str(path))
    assert r.size == 6
    with pytest.raises(InputError):
        load_ring(str(tmp_path / "absent.ring"))


# -- generator resolution -------------------------------------------------------

def test_resolve_gens_keywords():
    r = catalog("z2q8")
    assert resolve_gens(r, "group-sum").size == 2
    assert resolve_gens(r, "0") == (r.zero,)
    jet = catalog("ex52")
    least = resolve_gens(jet, "least")
    assert sorted(least.elements)[1] == (0, 0, 0, 0, 0, 0, 1)


def test_resolve_gens_vectors():
    r = catalog("ex52")
    ideal = resolve_gens(r, "0,0,0,0,0,0,1")
    assert ideal.size == 2
    two = resolve_gens(r, "0,0,0,0,1,0,0;0,0,0,0,0,0,1")
    assert two.size == 4
    with pytest.raises(InputError):
        resolve_gens(r, "1,2")
    with pytest.raises(InputError):
        resolve_gens(r, "banana")
    with pytest.raises(InputError):
        resolve_gens(r, ";")


def test_resolve_gens_group_sum_needs_group_algebra():
    with pytest.raises(Exception):
        resolve_gens(catalog("t2z2"), "group-sum")


# -- commands -----------------------------------------------------------------

def test_report_command(capsys):
    assert main(["report", "t2z2"]) == 0
    out = capsys.readouterr().out
    assert "size=8" in out
    assert "centrally_essential=false;witness=e22" in out


def test_report_unknown_ring(capsys):
    assert main(["report", "nosuch"]) == 2
    assert "available" in capsys.readouterr().err


def test_report_bad_file(tmp_path, capsys):
    path = tmp_path / "bad.ring"
    path.write_text("shape 2\none 1\nmul 0 0 => 1\n")
    assert main(["report", str(path)]) == 2
    assert "line 3" in capsys.readouterr().err


def test_report_pretty(capsys):
    assert main(["report", "z6", "--pretty"]) == 0
    out = capsys.readouterr().out
    assert "size" in out and "=" not in out.splitlines()[0]


def test_report_strict_limits(capsys):
    assert main(["--max-elements", "4", "report", "z6"]) == 0
    out = capsys.readouterr().out
    assert "skipped;limit=max_elements" in out
    assert main(["--max-elements", "4", "--strict", "report", "z6"]) == 3


def test_quotient_report(capsys):
    assert main(["quotient", "z2q8", "--gens", "group-sum", "report"]) == 0
    out = capsys.readouterr().out
    assert "size=128" in out
    assert "centrally_essential=false;witness=a2+a3+a2b+a3b" in out


def test_quotient_by_zero_matches_base_report(capsys):
    main(["report", "ex51(3)"])
    base = capsys.readouterr().out
    main(["quotient", "ex51(3)", "--gens", "0", "report"])
    assert capsys.readouterr().out == base


def test_quotient_export_parses_back(capsys):
    assert main(["quotient", "ex52", "--gens", "least", "export"]) == 0
    text = capsys.readouterr().out
    r = parse_ring_text(text)
    assert r.size == 64


def test_quotient_bad_gens(capsys):
    assert main(["quotient", "ex52", "--gens", "1,2", "report"]) == 2


def test_lattice_command(tmp_path, capsys):
    assert main(["lattice", "z4"]) == 0
    out = capsys.readouterr().out
    assert out.count("label") == 3 and out.count("->") == 2
    path = tmp_path / "lat.dot"
    assert main(["lattice", "ex52", "--kind", "right",
                 "--dot", str(path)]) == 0
    assert "digraph" in path.read_text()


def test_lattice_respects_limits(capsys):
    assert main(["--max-ideals", "2", "lattice", "ex52"]) == 3
    assert "max_ideals" in capsys.readouterr().err


# -- claim suite ----------------------------------------------------------------

def test_suite_list(capsys):
    assert main(["paper-suite", "--list"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == len(build_claims()) >= 12
    assert len({ln.split()[0] for ln in lines}) == len(lines)


def test_suite_runs_and_reports_refutations(capsys):
    code = main(["paper-suite"])
    out = capsys.readouterr().out
    assert code == 1
    assert out.count(" PASS") + out.count(" REFUTED") == len(build_claims())
    assert "0 fail" in out
    assert "2 refuted" in out
    for needle in (
            "quotient by {0, b22} is not centrally essential",
            "counterexample coset a2+a3+a2b+a3b",
            "af = 2a+a3 confirmed as counterexample",
            "regulars = units everywhere",
    ):
        assert needle in out


def test_suite_output_is_byte_identical(capsys):
    main(["paper-suite"])
    first = capsys.readouterr().out
    main(["paper-suite"])
    assert capsys.readouterr().out == first

"""Tests for the command-line interface: golden outputs and exit codes."""

from __future__ import annotations

import json

import pytest

from stardeck import (
    PartialDesign,
    Star,
    complete,
    design_from_doc,
    dumps_design,
    gen_uncompletable,
)
from stardeck.cli import main


@pytest.fixture()
def one_star_file(tmp_path):
    d = PartialDesign(6, 3, (Star(0, frozenset({1, 2, 3})),))
    path = tmp_path / "one.json"
    path.write_text(dumps_design(d))
    return str(path)


@pytest.fixture()
def blocked_file(tmp_path):
    path = tmp_path / "blocked.json"
    path.write_text(dumps_design(gen_uncompletable(6, 3)))
    return str(path)


# ------------------------------------------------------------------- threshold


def test_threshold_reports_admissible_order(capsys):
    assert main(["threshold", "9", "3"]) == 0
    assert capsys.readouterr().out == (
        "n=9 k=3\nadmissible: yes\ndesign-exists: yes\nu: 3\n"
    )


def test_threshold_reports_inadmissible_order(capsys):
    assert main(["threshold", "8", "3"]) == 0
    assert capsys.readouterr().out == (
        "n=8 k=3\nadmissible: no\ndesign-exists: no\nu: 3\n"
    )


def test_threshold_k2(capsys):
    assert main(["threshold", "4", "2"]) == 0
    assert "u: 1" in capsys.readouterr().out


def test_threshold_rejects_malformed_arguments(capsys):
    assert main(["threshold", "x", "3"]) == 2
    assert main(["threshold", "9"]) == 2
    capsys.readouterr()


# -------------------------------------------------------------------- complete


def test_complete_success_prints_design(capsys, one_star_file):
    assert main(["complete", one_star_file]) == 0
    out, err = capsys.readouterr()
    full = design_from_doc(json.loads(out))
    assert full.validate() == []
    assert full.leftover().edge_count == 0
    assert Star(0, frozenset({1, 2, 3})) in full.stars
    assert err.startswith("completed: ")


def test_complete_success_json_mode(capsys, one_star_file):
    assert main(["complete", one_star_file, "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["outcome"] == "completed"
    assert doc["trace"][0] == "validated"
    assert design_from_doc(doc["design"]).leftover().edge_count == 0


def test_complete_blocked_design(capsys, blocked_file):
    assert main(["complete", blocked_file]) == 1
    out = capsys.readouterr().out
    assert out == (
        "impossible: blocked-edge\n"
        "blocked edge {0,1} with leftover degrees 2,2\n"
    )


def test_complete_blocked_design_json(capsys, blocked_file):
    assert main(["complete", blocked_file, "--json"]) == 1
    doc = json.loads(capsys.readouterr().out)
    assert doc["outcome"] == "impossible"
    assert doc["reason"] == "blocked-edge"
    assert doc["certificate"] == {"blocked_edge": [0, 1], "degrees": [2, 2]}


def test_complete_invalid_design_file(capsys, tmp_path):
    path = tmp_path / "invalid.json"
    path.write_text('{"n":6,"k":3,"stars":[{"center":0,"leaves":[1,2]}]}')
    assert main(["complete", str(path)]) == 2
    err = capsys.readouterr().err
    assert "star 0: has 2 leaves, expected 3" in err


def test_complete_unparseable_file(capsys, tmp_path):
    path = tmp_path / "garbage.json"
    path.write_text("{nope")
    assert main(["complete", str(path)]) == 2
    assert "not valid JSON" in capsys.readouterr().err


def test_complete_missing_file(capsys, tmp_path):
    assert main(["complete", str(tmp_path / "nosuch.json")]) == 2
    assert "cannot read" in capsys.readouterr().err


# ---------------------------------------------------------------------- verify


def test_verify_partial_design(capsys, one_star_file):
    assert main(["verify", one_star_file]) == 0
    assert capsys.readouterr().out == (
        "valid partial design: n=6 k=3 stars=1\n"
        "covered-edges: 3 leftover-edges: 12\n"
        "full-design: no\n"
    )


def test_verify_full_design(capsys, tmp_path):
    full = complete(PartialDesign(6, 3)).design
    path = tmp_path / "full.json"
    path.write_text(dumps_design(full))
    assert main(["verify", str(path)]) == 0
    out = capsys.readouterr().out
    assert "full-design: yes" in out
    assert "leftover-edges: 0" in out


def test_verify_invalid_design(capsys, tmp_path):
    path = tmp_path / "invalid.json"
    path.write_text('{"n":6,"k":3,"stars":[{"center":0,"leaves":[1,2]}]}')
    assert main(["verify", str(path)]) == 1
    out = capsys.readouterr().out
    assert out.startswith("invalid: 1 violation(s)\n")
    assert "star 0: has 2 leaves, expected 3" in out


# ------------------------------------------------------------- gen subcommands


def test_gen_uncompletable_golden(capsys):
    assert main(["gen-uncompletable", "6", "3"]) == 0
    assert capsys.readouterr().out == (
        '{"certificate":{"blocked_edge":[0,1],"degrees":[2,2]},'
        '"k":3,"n":6,"stars":[{"center":0,"leaves":[2,3,4]},'
        '{"center":1,"leaves":[2,3,4]}]}\n'
    )


def test_gen_uncompletable_output_feeds_complete(capsys, tmp_path):
    assert main(["gen-uncompletable", "9", "3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    path = tmp_path / "gen.json"
    path.write_text(json.dumps(doc))
    assert main(["complete", str(path)]) == 1
    capsys.readouterr()


def test_gen_uncompletable_rejects_inadmissible(capsys):
    assert main(["gen-uncompletable", "8", "3"]) == 2
    assert "not admissible" in capsys.readouterr().err


def test_gen_random_is_deterministic(capsys):
    assert main(["gen-random", "9", "3", "2", "42"]) == 0
    first = capsys.readouterr().out
    assert first == (
        '{"k":3,"n":9,"stars":[{"center":1,"leaves":[0,3,6]},'
        '{"center":3,"leaves":[0,2,8]}]}\n'
    )
    assert main(["gen-random", "9", "3", "2", "42"]) == 0
    assert capsys.readouterr().out == first


def test_gen_random_reports_stuck_generation(capsys):
    assert main(["gen-random", "4", "3", "3", "0"]) == 1
    assert "cannot place star" in capsys.readouterr().err


# ---------------------------------------------------------------------- oracle


def test_oracle_yes(capsys, one_star_file):
    assert main(["oracle", one_star_file]) == 0
    assert capsys.readouterr().out == "yes\n"


def test_oracle_no(capsys, blocked_file):
    assert main(["oracle", blocked_file]) == 1
    assert capsys.readouterr().out == "no\n"


def test_oracle_unknown_on_tiny_budget(capsys, one_star_file):
    assert main(["oracle", one_star_file, "--budget", "1"]) == 1
    assert capsys.readouterr().out == "unknown\n"


# ------------------------------------------------------------------ precentral


def test_precentral_golden(capsys, one_star_file):
    assert main(["precentral", one_star_file]) == 0
    assert capsys.readouterr().out == (
        "n=6 k=3 leftover-edges=12\n"
        "minimal: 0 1 1 0 1 1\n"
        "minimal-pstar: -1/3 1/3 1/3 -2/3 1/6 1/6\n"
        "flaw: none\n"
    )


def test_precentral_shows_repair_and_residual_flaw(capsys, blocked_file):
    # the blocked leftover is outside the repair guarantee: the single
    # repair is shown along with the advisory residual flaw
    assert main(["precentral", blocked_file]) == 0
    assert capsys.readouterr().out == (
        "n=6 k=3 leftover-edges=9\n"
        "minimal: 0 0 1 1 0 1\n"
        "minimal-pstar: -1/3 -1/3 1/2 1/2 -1/2 1/6\n"
        "flaw: edge 0-1\n"
        "suitable: 0 1 0 1 0 1\n"
        "suitable-pstar: -1/3 2/3 -1/2 1/2 -1/2 1/6\n"
        "residual-flaw: vertex 1\n"
    )


# -------------------------------------------------------------------- selftest


def test_selftest_small_run(capsys):
    assert main(["selftest", "--trials", "5", "--seed", "3"]) == 0
    out = capsys.readouterr().out
    assert out.endswith("selftest: OK\n")


def test_selftest_zero_trials_vacuous_pass(capsys):
    assert main(["selftest", "--trials", "0", "--seed", "0"]) == 0
    out = capsys.readouterr().out
    assert "warning: trials=0 makes the randomized suites vacuous" in out
    assert "selftest: OK" in out


# ------------------------------------------------------------------- top level


def test_no_arguments_is_usage_error(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_unknown_subcommand_is_usage_error(capsys):
    assert main(["frobnicate"]) == 2
    capsys.readouterr()

import json
from fractions import Fraction

import pytest

from twistk.catalog import base_to_document, get_base
from twistk.cli import dumps, execute, loads, main, render_text
from twistk.fgab import Z, AbelianGroup, cyclic

ONE_PER_COMMAND = [
    ["bundle-cohomology", "--base", "S6", "--e", "6", "--json"],
    ["twisted", "--base", "S2xS4", "--e", "4", "--h", "10", "--json"],
    ["tdual", "--base", "M8", "--n", "4", "--e", "5", "--h", "7", "--json"],
    ["chern-verify", "--k", "2", "--N", "14", "--json"],
]


def test_bundle_cohomology_document():
    code, doc, err = execute(["bundle-cohomology", "--base", "S6", "--e", "6"])
    assert (code, err) == (0, None)
    degrees = {r["degree"]: r["group"] for r in doc["results"]["degrees"]}
    assert len(degrees) == 12
    assert degrees[0] == Z and degrees[6] == cyclic(6) and degrees[11] == Z
    assert doc["inputs"] == {"base": "S6", "n": 3, "e": 6, "h": 0}


def test_twisted_document():
    code, doc, _ = execute(["twisted", "--base", "S2xS4", "--e", "4", "--h", "10"])
    res = doc["results"]
    assert code == 0 and res["agree"] is True
    assert res["twisted_cohomology"]["even"] == AbelianGroup(2, (4,))
    assert res["twisted_k"]["K1"] == AbelianGroup(2, (10,))


def test_twisted_torsion_base_gives_notice():
    code, doc, _ = execute(["twisted", "--base", "T6Z2", "--e", "2", "--h", "4"])
    assert code == 0 and doc["results"]["twisted_k"] is None
    assert "torsion" in doc["results"]["notice"]


def test_untwisted_k_reported_for_zero_flux():
    _, doc, _ = execute(["twisted", "--base", "S6", "--e", "6", "--h", "0"])
    assert doc["results"]["untwisted_k"] == {"Keven": AbelianGroup(1, (6,)), "Kodd": Z}


def test_tdual_document():
    code, doc, _ = execute(["tdual", "--base", "M8", "--n", "4", "--e", "5", "--h", "7"])
    assert code == 0
    assert doc["results"]["dual"] == {"e": 7, "h": 5}
    assert doc["results"]["ok"]


def test_chern_verify_document():
    code, doc, _ = execute(["chern-verify", "--k", "2", "--N", "14"])
    res = doc["results"]
    assert code == 0 and res["d_squared_zero"]
    assert res["closure_sign"] == -1 and not res["sign_agrees"]
    assert res["odd_coefficients"][2] == Fraction(1, 6)
    assert res["odd_coefficients_are_inverse_factorials"]
    assert res["lambda_weighted_first_failure"] == 1


@pytest.mark.parametrize("argv", ONE_PER_COMMAND, ids=lambda a: a[0])
def test_json_round_trip(argv, capsys):
    assert main(argv) == 0
    printed = capsys.readouterr().out
    _, doc, _ = execute(argv)
    assert loads(printed) == doc
    assert loads(dumps(doc)) == doc


@pytest.mark.parametrize("argv, code, needle", [
    (["bundle-cohomology", "--base", "S6", "--e", "5"], 2, "Euler number must be even for n=3"),
    (["tdual", "--base", "S6", "--e", "6", "--h", "9"], 2, "dual"),
    (["bundle-cohomology", "--base", "K3", "--e", "2"], 3, "unknown base"),
    (["tdual", "--base", "T6Z2", "--e", "2", "--h", "4"], 3, "torsion"),
    (["chern-verify", "--k", "1", "--N", "3"], 4, "N=3"),
    (["bundle-cohomology", "--base", "S6", "--n", "4", "--e", "2"], 4, "does not match"),
    (["twisted", "--base", "S6", "--e", "2"], 4, "usage"),
    (["bundle-cohomology", "--base", "S6", "--e", "two"], 4, "usage"),
    ([], 4, "usage"),
])
def test_exit_codes(argv, code, needle, capsys):
    assert main(argv) == code
    assert needle in capsys.readouterr().err


def test_text_rendering(capsys):
    assert main(["twisted", "--base", "S2xS4", "--e", "4", "--h", "10"]) == 0
    out = capsys.readouterr().out
    assert "Z^2 + Z_4" in out and "agree: true" in out
    _, doc, _ = execute(["chern-verify", "--k", "2"])
    assert "DISAGREES" in render_text(doc)
    _, doc, _ = execute(["bundle-cohomology", "--base", "S6", "--e", "6"])
    assert render_text(doc).splitlines()[1].split() == ["degree", "group", "rank", "torsion"]


def test_base_file(tmp_path):
    path = tmp_path / "base.json"
    path.write_text(json.dumps(base_to_document(get_base("CP3"))))
    code, doc, _ = execute(["bundle-cohomology", "--base-file", str(path), "--e", "2"])
    assert code == 0 and doc["inputs"]["base"] == "CP3"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"name": "x", "dim": 6, "groups": [{"degree": 0, "rank": 1, "torsion": []}]}))
    assert execute(["bundle-cohomology", "--base-file", str(bad), "--e", "2"])[0] == 3
    garbage = tmp_path / "garbage.json"
    garbage.write_text("{not json")
    assert execute(["bundle-cohomology", "--base-file", str(garbage), "--e", "2"])[0] in (3, 4)


def test_batch(tmp_path, capsys):
    path = tmp_path / "jobs.json"
    path.write_text(json.dumps([a[:-1] for a in ONE_PER_COMMAND]))
    assert main(["batch", str(path), "--workers", "3"]) == 0
    out = loads(capsys.readouterr().out)
    assert [r["exit"] for r in out] == [0, 0, 0, 0]
    assert out[0]["document"] == execute(ONE_PER_COMMAND[0][:-1])[1]


def test_batch_reports_first_failure(tmp_path, capsys):
    path = tmp_path / "jobs.json"
    path.write_text(json.dumps([["bundle-cohomology", "--base", "S6", "--e", "5"],
                                ["chern-verify", "--k", "1"]]))
    assert main(["batch", str(path)]) == 2
    path.write_text(json.dumps({"not": "a list"}))
    assert main(["batch", str(path)]) == 4
    capsys.readouterr()

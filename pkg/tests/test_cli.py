import json

import pytest

from fourfold.cli import Report, main, run


def ok(argv):
    code, out = run(argv)
    assert code == 0, out
    return out


def as_json(argv):
    return json.loads(ok(argv + ["--format", "json"]))


def test_catalog_listing():
    names = [e["name"] for e in json.loads(ok(["catalog", "--format", "json"]))["catalog"]]
    assert names == ["sextic", "ci", "fano", "dv", "cicy41", "cicy130", "cicy133"]


def test_derive_fano():
    doc = as_json(["derive", "--pair", "fano"])
    assert doc["gram"] == [[45, 18], [18, 27]]
    assert doc["linear"] == [171, 9]
    assert doc["decent"] is True
    assert doc["minimum"] == {"vertex": ["5/2", "-3/2"], "value": "-207"}
    assert doc["results"]["lawrence"] == {"scale": 24057, "shift": "207"}


def test_derive_text():
    out = ok(["derive", "--pair", "cicy130"])
    assert "decent:   no" in out
    assert "16*x1*x2 + 48*x1*x3" in out


def test_count_sextic():
    doc = as_json(["count", "--pair", "sextic", "--max-invariant", "0"])
    assert doc["results"]["count"]["kind"] == "finite"
    assert doc["results"]["count"]["count"] == 16


def test_count_thresholds():
    chi = as_json(["count", "--pair", "fano", "--max-chi", "3"])
    direct = as_json(["count", "--pair", "fano", "--max-invariant", "18"])
    assert chi["results"]["count"] == direct["results"]["count"]


def test_dv_plane_not_representable():
    doc = as_json(["count", "--pair", "dv", "--chi", "1", "--k2", "9", "--representable"])
    assert doc["results"]["constraint"]["value"] == 6
    assert doc["results"]["representable"]["representable"] is False


def test_non_decent_counts():
    doc = as_json(["count", "--pair", "cicy133", "--chi", "8", "--k2", "0", "--domain", "n3", "--method", "hyperbola"])
    count = doc["results"]["count"]
    assert count["kind"] == "infinite"
    assert [f["text"] for f in count["families"]] == ["(t, 3, 0), t >= 0", "(0, 3, t), t >= 0"]
    doc = as_json(["count", "--pair", "cicy133", "--max-invariant", "-64", "--min-invariant", "-64",
                   "--domain", "n3", "--method", "hyperbola"])
    assert doc["results"]["count"]["points"] == [[1, 2, 3], [2, 0, 4], [3, 2, 1], [4, 0, 2]]
    doc = as_json(["count", "--pair", "cicy130", "--chi", "1", "--k2", "9", "--domain", "n3", "--method", "bounded-box"])
    assert doc["results"]["count"]["count"] == 0


def test_representable_41():
    doc = as_json(["representable", "--pair", "cicy41", "--lo", "2", "--hi", "6"])
    assert doc["results"]["representable"] == {
        "representable": False, "certificate": {"method": "modular", "modulus": 30}}


def test_eval_and_bound():
    assert as_json(["eval", "--pair", "dv", "--x", "1,0"])["results"]["value"] == -72
    assert as_json(["eval", "--pair", "fano", "--x=-1,2"])["results"]["value"] == 234
    doc = as_json(["bound", "--pair", "sextic", "--s", "0"])
    assert doc["results"]["closed_form_bound"] == 16.0
    assert doc["results"]["exact_count"] == 16
    assert doc["results"]["certified"] is False


@pytest.mark.parametrize("argv,kind", [
    (["derive", "--pair", "ci", "--degrees", "2,2"], "NotCalabiYau"),
    (["bound", "--pair", "cicy130", "--s", "0"], "UnsupportedDimension"),
    (["count", "--pair", "cicy133", "--chi", "0", "--k2", "0", "--domain", "n3", "--method", "bounded-box"],
     "ShapeMismatch"),
    (["count", "--pair", "cicy130", "--max-invariant", "6", "--domain", "n3", "--method", "bounded-box"],
     "Undecidable"),
])
def test_domain_errors(argv, kind):
    code, out = run(argv)
    assert code == 1
    assert kind in out


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["derive"],
    ["derive", "--pair", "nope"],
    ["derive", "--pair", "ci"],
    ["count", "--pair", "fano"],
    ["count", "--pair", "fano", "--max-chi", "1", "--max-invariant", "3"],
    ["count", "--pair", "fano", "--chi", "1"],
    ["count", "--pair", "cicy130", "--max-invariant", "6"],
    ["eval", "--pair", "fano", "--x", "a,b"],
    ["derive", "--pair-file", "/nonexistent/pair.json"],
])
def test_usage_errors(argv):
    code, _ = run(argv)
    assert code == 2


def test_pair_file(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({
        "name": "ci34",
        "ambient": {"kind": "projective", "params": [6]},
        "construction": {"type": "complete_intersection", "degrees": [3, 4]},
    }))
    doc = as_json(["derive", "--pair-file", str(path)])
    assert doc["pair"] == "ci34" and doc["gram"] == [[12]] and doc["linear"] == [108]
    path.write_text('{"name": "x", "ambient": {"kind": "projective", "params": [6]}, '
                    '"construction": {"type": "complete_intersection", "degrees": [2, 2]}}')
    code, out = run(["derive", "--pair-file", str(path)])
    assert code == 1 and "NotCalabiYau" in out


@pytest.mark.parametrize("argv", [
    ["derive", "--pair", "dv"],
    ["count", "--pair", "fano", "--max-invariant", "30"],
    ["count", "--pair", "cicy133", "--chi", "8", "--k2", "0", "--domain", "n3", "--method", "hyperbola"],
])
def test_report_round_trip_and_determinism(argv):
    first = ok(argv + ["--format", "json"])
    second = ok(argv + ["--format", "json"])
    assert first == second
    report = Report.from_json(json.loads(first))
    assert Report.from_json(json.loads(report.dumps())) == report
    assert report.dumps() == first


def test_large_integers_serialized_as_strings():
    r = Report("big", "P^5", ["z^2"], [[2 ** 70]], [-(2 ** 64)], True, {}, results={"n": 2 ** 63, "m": 2 ** 63 - 1})
    doc = r.to_json()
    assert doc["gram"] == [[str(2 ** 70)]] and doc["linear"] == [str(-(2 ** 64))]
    assert doc["results"] == {"n": str(2 ** 63), "m": 2 ** 63 - 1}
    assert Report.from_json(json.loads(json.dumps(doc))) == r


def test_main_exit_codes(capsys):
    assert main(["derive", "--pair", "sextic"]) == 0
    assert "6*x1^2 - 90*x1" in capsys.readouterr().out
    assert main(["derive", "--pair", "ci", "--degrees", "2,2"]) == 1
    assert "NotCalabiYau" in capsys.readouterr().err


def test_help_is_not_an_error():
    code, out = run(["--help"])
    assert code == 0 and "derive" in out


def test_help_printed_once(capsys):
    assert main(["--help"]) == 0
    assert capsys.readouterr().out.count("usage:") == 1

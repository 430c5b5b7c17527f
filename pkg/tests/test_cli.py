"""Command dispatch, document parsing, exit codes and report stability."""

import json

import pytest

from mxt import are_isomorphic, catalog, mask_of
from mxt.cli import main, parse_matroid, to_document
from mxt.errors import ParseError

K4_DOC = {"type": "graphic",
          "edges": [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]]}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, (json.loads(out) if out.strip() else None)


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.json"
    p.write_text(json.dumps(K4_DOC))
    return str(p)


# ------------------------------------------------------------- documents

def test_parse_uniform():
    m = parse_matroid({"type": "uniform", "r": 2, "n": 4})
    assert (m.n, m.full_rank) == (4, 2)


def test_parse_graphic_k4():
    m = parse_matroid(K4_DOC)
    assert len(m.bases()) == 16


def test_parse_two_sum_document():
    doc = {"type": "two_sum",
           "left": {"type": "uniform", "r": 2, "n": 4}, "pl": 0,
           "right": {"type": "uniform", "r": 2, "n": 4}, "pr": 0}
    m = parse_matroid(doc)
    assert (m.n, m.full_rank, len(m.bases())) == (6, 3, 18)


def test_parse_nested_constructions():
    doc = {"type": "series_ext",
           "of": {"type": "parallel_ext",
                  "of": {"type": "uniform", "r": 1, "n": 2}, "e": 0},
           "e": 1}
    m = parse_matroid(doc)
    assert m.n == 4


def test_parse_errors_carry_paths():
    with pytest.raises(ParseError) as err:
        parse_matroid({"type": "uniform", "r": 2})
    assert "n" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_matroid({"type": "direct_sum",
                       "parts": [{"type": "uniform", "r": "x", "n": 2}]})
    assert "parts[0]" in str(err.value)
    with pytest.raises(ParseError):
        parse_matroid({"type": "mystery"})


def test_parse_validates_explicit_bases():
    from mxt.errors import ValidationError

    with pytest.raises(ValidationError):
        parse_matroid({"type": "bases", "n": 4, "bases": [[0, 1], [2, 3]]})


def test_document_roundtrip_types():
    for name in ("U(2,4)", "MK4", "W3", "U24+2U24", "wheel(4)"):
        m = catalog(name)
        again = parse_matroid(to_document(m))
        assert are_isomorphic(m, again) is not None, name


# -------------------------------------------------------------- commands

def test_rank_command(capsys, k4_file):
    code, report = run_json(capsys, "rank", "--input", k4_file,
                            "--subset", "0,1,3")
    assert code == 0
    assert report["payload"] == {"corank": 3, "n": 6, "rank": 2,
                                 "subset": [0, 1, 3]}
    assert report["input_digest"].startswith("sha256:")


def test_rank_defaults_to_full_set(capsys, k4_file):
    code, report = run_json(capsys, "rank", "--input", k4_file)
    assert code == 0 and report["payload"]["rank"] == 3


def test_dual_command_emits_document(capsys, k4_file):
    code, report = run_json(capsys, "dual", "--input", k4_file)
    assert code == 0
    payload = report["payload"]
    assert payload["rank"] == 3 and payload["base_count"] == 16
    again = parse_matroid(payload["document"])
    assert again.full_rank == 3


def test_connectivity_command(capsys, k4_file):
    code, report = run_json(capsys, "connectivity", "--input", k4_file)
    assert code == 0
    payload = report["payload"]
    assert payload["is_2connected"] is True
    assert payload["components"] == [[0, 1, 2, 3, 4, 5]]
    assert payload["separation"] is None


def test_locked_command(capsys, k4_file):
    code, report = run_json(capsys, "locked", "--input", k4_file)
    assert code == 0
    payload = report["payload"]
    assert payload["count"] == 4 and not payload["truncated"]
    assert [c["subset"] for c in payload["certificates"]] == [
        [0, 1, 3], [0, 2, 4], [1, 2, 5], [3, 4, 5]]


def test_k_locked_command(capsys, k4_file):
    code, report = run_json(capsys, "k-locked", "--input", k4_file, "--k", "0")
    assert code == 0
    payload = report["payload"]
    assert payload["answer"] is True and payload["threshold"] == 6


def test_facets_command(capsys, k4_file):
    code, report = run_json(capsys, "facets", "--input", k4_file)
    assert code == 0
    payload = report["payload"]
    assert payload["kind_counts"] == {"locked": 4, "nonneg": 6, "upper": 6}
    assert len(payload["equalities"]) == 1


def test_verify_facets_command(capsys, k4_file):
    code, report = run_json(capsys, "verify-facets", "--input", k4_file)
    assert code == 0
    payload = report["payload"]
    assert payload == {
        "facet_description_matches_hull": True,
        "facet_count": 16,
        "hull_facet_count": 16,
        "locked_supports_locked": True,
        "minimal": True,
        "ok": True,
    }


def test_separate_command(capsys, k4_file, tmp_path):
    point = tmp_path / "point.json"
    point.write_text(json.dumps(["5/6", "5/6", "1/6", "5/6", "1/6", "1/6"]))
    code, report = run_json(capsys, "separate", "--input", k4_file,
                            "--point", str(point))
    assert code == 0
    payload = report["payload"]
    assert payload["member"] is False
    assert payload["violation"]["kind"] == "locked"
    assert payload["violation"]["support"] == [0, 1, 3]

    member = tmp_path / "member.json"
    member.write_text(json.dumps(["1", "1", "1", "0", "0", "0"]))
    code, report = run_json(capsys, "separate", "--input", k4_file,
                            "--point", str(member))
    assert code == 0 and report["payload"]["member"] is True


def test_mwbp_command(capsys, tmp_path):
    mfile = tmp_path / "u24.json"
    mfile.write_text(json.dumps({"type": "uniform", "r": 2, "n": 4}))
    wfile = tmp_path / "w.json"
    wfile.write_text(json.dumps(["3", "2", "1", "0"]))
    code, report = run_json(capsys, "mwbp", "--input", str(mfile),
                            "--weights", str(wfile), "--certify")
    assert code == 0
    payload = report["payload"]
    assert payload["basis"] == [0, 1] and payload["value"] == "5"
    assert payload["certified"] is True


def test_is_uniform_command(capsys, tmp_path, k4_file):
    code, report = run_json(capsys, "is-uniform", "--input", k4_file)
    assert code == 0
    assert report["payload"] == {"path": "locked-oracle", "uniform": False}

    mfile = tmp_path / "dsum.json"
    mfile.write_text(json.dumps({
        "type": "direct_sum",
        "parts": [{"type": "uniform", "r": 1, "n": 2},
                  {"type": "uniform", "r": 1, "n": 2}]}))
    code, report = run_json(capsys, "is-uniform", "--input", str(mfile))
    assert code == 0
    assert report["payload"] == {"path": "definitional", "uniform": False}


def test_has_minor_command(capsys, tmp_path):
    w3 = tmp_path / "w3.json"
    w3.write_text(json.dumps({"type": "catalog", "name": "W3"}))
    target = tmp_path / "u24.json"
    target.write_text(json.dumps({"type": "uniform", "r": 2, "n": 4}))
    code, report = run_json(capsys, "has-minor", "--input", str(w3),
                            "--target", str(target))
    assert code == 0 and report["payload"]["has_minor"] is True


def test_catalog_command_roundtrip(capsys):
    code, report = run_json(capsys, "catalog", "--name", "P6", "--emit")
    assert code == 0
    payload = report["payload"]
    assert payload["base_count"] == 19
    again = parse_matroid(payload["document"])
    assert are_isomorphic(catalog("P6"), again) is not None


# ------------------------------------------------------------ exit codes

def test_invalid_document_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"type": "uniform", "r": 5}))
    code, _ = run(capsys, "rank", "--input", str(bad))
    assert code == 2


def test_missing_file_exits_2(capsys):
    code, _ = run(capsys, "rank", "--input", "/nonexistent/path.json")
    assert code == 2


def test_cap_exceeded_exits_3(capsys, k4_file):
    code, _ = run(capsys, "locked", "--input", k4_file, "--cap", "3")
    assert code == 3


def test_unknown_command_exits_2(capsys):
    code = main(["frobnicate"])
    assert code == 2


# ----------------------------------------------------------- stability

def test_payload_bytes_are_stable(capsys, k4_file):
    _, first = run(capsys, "locked", "--input", k4_file)
    _, second = run(capsys, "locked", "--input", k4_file)
    p1 = json.dumps(json.loads(first)["payload"], sort_keys=True)
    p2 = json.dumps(json.loads(second)["payload"], sort_keys=True)
    assert p1 == p2


def test_text_format_renders(capsys, k4_file):
    code, out = run(capsys, "rank", "--input", k4_file, "--format", "text")
    assert code == 0
    assert out.startswith("# mxt rank")

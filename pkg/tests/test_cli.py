import json
import subprocess
import sys

import pytest

from topodyn import fixtures
from topodyn.cli import main
from topodyn.deciders import PROPERTY_NAMES, classify
from topodyn.fixtures import Fixture
from topodyn.io import (
    DocumentError,
    dumps_system,
    loads_system,
    read_atlas_csv,
    read_atlas_jsonl,
    to_document,
    with_names,
)
from topodyn.verify import all_passed, verify_paper
from topodyn.zoo import enumerate_systems


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def fixture_file(tmp_path, build, name="sys.json"):
    return write(tmp_path, name, to_document(build()))


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# --- documents ----------------------------------------------------------------

def test_round_trip_small_universe():
    for n in (1, 2, 3):
        for s in enumerate_systems(n):
            named = with_names(s)
            back = loads_system(dumps_system(named))
            assert back == named
            assert back.topology.opens == s.topology.opens and back.map == s.map


@pytest.mark.parametrize("doc", [
    "not json",
    json.dumps([1, 2]),
    json.dumps({"points": ["a"], "opens": []}),
    json.dumps({"points": ["a", "a"], "opens": [], "map": {"a": "a"}}),
    json.dumps({"points": ["a", "b"], "opens": [["z"]], "map": {"a": "a", "b": "a"}}),
    json.dumps({"points": ["a", "b"], "opens": [], "map": {"a": "a"}}),
    json.dumps({"points": ["a", "b"], "opens": [], "map": {"a": "q", "b": "a"}}),
])
def test_malformed_documents(doc):
    with pytest.raises(DocumentError):
        loads_system(doc)


# --- validate -----------------------------------------------------------------

def test_validate_example_space(tmp_path, capsys):
    path = write(tmp_path, "s.json", {"points": ["a", "b", "c"],
                                      "opens": [[], ["a", "b"], ["a", "b", "c"]],
                                      "map": {"a": "a", "b": "b", "c": "c"}})
    code, out, _ = run(["validate", path], capsys)
    assert code == 0 and "notice" not in out
    assert "{} {a,b} {a,b,c}" in out


def test_validate_inserts_whole_space(tmp_path, capsys):
    path = fixture_file(tmp_path, fixtures.example_a1)
    code, out, _ = run(["validate", path], capsys)
    assert code == 0 and out.startswith("notice")


def test_validate_reports_union_failure(tmp_path, capsys):
    path = write(tmp_path, "s.json", {"points": ["a", "b", "c"], "opens": [["a"], ["b"]],
                                      "map": {"a": "a", "b": "b", "c": "c"}})
    code, _, err = run(["validate", path], capsys)
    assert code == 2
    assert "NotUnionClosed" in err and "{a}" in err and "{b}" in err


def test_validate_missing_file(tmp_path, capsys):
    code, _, _ = run(["validate", str(tmp_path / "nope.json")], capsys)
    assert code == 2


# --- classify -----------------------------------------------------------------

def test_classify_json(tmp_path, capsys):
    code, out, _ = run(["classify", fixture_file(tmp_path, fixtures.example_a1), "--format", "json"],
                       capsys)
    props = json.loads(out)["properties"]
    assert code == 0
    assert list(props) == list(PROPERTY_NAMES)
    assert props["strongly_top_transitive"] and not props["mixing"]


def test_classify_csv(tmp_path, capsys):
    code, out, _ = run(["classify", fixture_file(tmp_path, fixtures.example_a3), "--format", "csv"],
                       capsys)
    rows = dict(line.split(",") for line in out.strip().splitlines()[1:])
    assert rows["mixing"] == "1" and rows["supermixing"] == "0"


def test_classify_text(tmp_path, capsys):
    path = fixture_file(tmp_path, fixtures.supermixing_not_hypertransitive)
    code, out, _ = run(["classify", path], capsys)
    lines = {line.split()[0]: line.split()[1] for line in out.splitlines()}
    assert lines["continuous"] == "yes" and lines["supermixing"] == "yes"
    assert lines["hypertransitive"] == "no"


# --- jmix ---------------------------------------------------------------------

def test_jmix_point(tmp_path, capsys):
    path = fixture_file(tmp_path, fixtures.hypertransitive_not_mixing)
    assert run(["jmix", path, "--point", "a"], capsys)[1].strip() == "{}"
    path = fixture_file(tmp_path, fixtures.example_a4, "a4.json")
    assert run(["jmix", path, "--point", "b"], capsys)[1].strip() == "{a,b,c}"


def test_jmix_single_point(tmp_path, capsys):
    path = write(tmp_path, "one.json", {"points": ["p"], "opens": [], "map": {"p": "p"}})
    assert run(["jmix", path, "--point", "p"], capsys)[1].strip() == "{p}"


def test_jmix_all(tmp_path, capsys):
    path = fixture_file(tmp_path, fixtures.example_a4)
    code, out, _ = run(["jmix", path, "--all"], capsys)
    assert out.splitlines() == ["J(a) = {a,b,c}", "J(b) = {a,b,c}", "J(c) = {a,b,c}",
                                "J(X) = {a,b,c}"]


def test_jmix_unknown_point(tmp_path, capsys):
    path = fixture_file(tmp_path, fixtures.example_a4)
    assert run(["jmix", path, "--point", "z"], capsys)[0] == 2


# --- enumerate ----------------------------------------------------------------

@pytest.mark.parametrize("n,rows", [(2, 16), (3, 783)])
def test_enumerate_rows(tmp_path, capsys, n, rows):
    out = tmp_path / "atlas.csv"
    code, _, err = run(["enumerate", "--points", str(n), "--out", str(out)], capsys)
    assert code == 0
    with open(out, encoding="utf-8") as fh:
        assert len(read_atlas_csv(fh)) == rows


def test_enumerate_dedup(tmp_path, capsys):
    out = tmp_path / "atlas.csv"
    code, _, err = run(["enumerate", "--points", "3", "--dedup", "--out", str(out)], capsys)
    with open(out, encoding="utf-8") as fh:
        rows = read_atlas_csv(fh)
    assert code == 0 and len(rows) < 783
    assert sum(r["class_size"] for r in rows) == 783
    assert f"{len(rows)} classes from 783 systems" in err


def test_csv_and_jsonl_agree(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "a.jsonl"
    run(["enumerate", "--points", "3", "--out", str(a)], capsys)
    run(["enumerate", "--points", "3", "--format", "jsonl", "--out", str(b)], capsys)
    with open(a, encoding="utf-8") as fa, open(b, encoding="utf-8") as fb:
        assert read_atlas_csv(fa) == read_atlas_jsonl(fb)


def test_atlas_bits_match_classify(tmp_path, capsys):
    a = tmp_path / "a.csv"
    run(["enumerate", "--points", "2", "--out", str(a)], capsys)
    with open(a, encoding="utf-8") as fh:
        rows = read_atlas_csv(fh)
    for row, s in zip(rows, enumerate_systems(2)):
        assert tuple(row[name] for name in PROPERTY_NAMES) == classify(s).bits()


# --- search -------------------------------------------------------------------

def test_search_found(capsys):
    code, out, _ = run(["search", "--points", "3", "--require", "mixing",
                        "--forbid", "strongly-topologically-transitive", "--limit", "3"], capsys)
    docs = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(docs) == 3
    for d in docs:
        p = classify(loads_system(json.dumps(d)))
        assert p.mixing and not p.strongly_top_transitive


def test_search_none(capsys):
    code, out, _ = run(["search", "--points", "3", "--require", "hypermixing",
                        "--filter", "nontrivial-topology"], capsys)
    assert code == 1 and out == ""


def test_search_bad_property(capsys):
    assert run(["search", "--points", "3", "--require", "chaos"], capsys)[0] == 2
    assert run(["search", "--points", "3", "--require", "mixing", "--forbid", "mixing"],
               capsys)[0] == 2


# --- verify-paper -------------------------------------------------------------

def test_verify_paper_small(capsys):
    code, out, _ = run(["verify-paper", "--max-points", "2", "--sweep-points", "3",
                        "--samples", "0"], capsys)
    assert code == 0
    assert out.strip().endswith("ALL PASS")
    assert "SKIPPED example B" in out


def test_tampered_fixture_fails():
    broken = Fixture("A1", "tampered", fixtures.example_a1, {"mixing": True})
    lines = verify_paper(1, 1, 0, fixtures=(broken,))
    assert not all_passed(lines)
    assert lines[0].status == "FAIL"
    assert "mixing: expected True, got False" in lines[0].detail


def test_verify_paper_flags_non_t1_claims(capsys):
    code, out, _ = run(["verify-paper", "--max-points", "1", "--sweep-points", "1",
                        "--samples", "300", "--sample-points", "4"], capsys)
    assert code == 1
    failing = [line for line in out.splitlines() if line.startswith("FAIL")]
    assert {line.split()[1] for line in failing} == {
        "hypercyclic-no-isolated-transitive", "hypercyclic-no-isolated-hc-dense"}


def test_module_entry_point(tmp_path):
    path = fixture_file(tmp_path, fixtures.example_a3)
    res = subprocess.run([sys.executable, "-m", "topodyn", "classify", path, "--format", "csv"],
                         capture_output=True, text=True, check=True)
    assert "mixing,1" in res.stdout


def test_output_is_deterministic(capsys):
    argv = ["search", "--points", "3", "--require", "supermixing", "--dedup"]
    assert run(argv, capsys) == run(argv, capsys)

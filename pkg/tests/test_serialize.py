"""JSON round trips, CSV, and b-file emission."""
from __future__ import annotations

import csv
import io
import json

from permniven.digits import DigitMultiset
from permniven.families import catalog, instantiate, template
from permniven.orbits import make_record
from permniven.repdigits import ConjectureConstraints, verify_conjecture_grid
from permniven.search import SearchConfig, census, search
from permniven.serialize import (
    bfile_text,
    census_to_obj,
    family_instances_to_obj,
    grid_report_to_obj,
    records_to_csv,
    report_from_json,
    report_to_json,
)


def test_report_round_trip_both_proof_kinds():
    for k in (2, 5):
        report = search(SearchConfig(k=k))
        text = report_to_json(report)
        back = report_from_json(text)
        assert back == report
        assert report_to_json(back) == text  # stable bytes


def test_report_json_excludes_elapsed():
    report = search(SearchConfig(k=3))
    obj = json.loads(report_to_json(report))
    assert set(obj) == {
        "k", "records", "stage1_count", "stage2_count", "multisets_scanned"
    }
    assert "elapsed" not in report_to_json(report)


def test_round_trip_of_exhaustive_and_failure_proofs():
    # search emits criterion proofs; exercise the other shapes directly
    from permniven.orbits import FailureWitness
    from permniven.search import SearchReport
    from permniven.serialize import _proof_from_obj, _proof_to_obj

    rec = make_record(DigitMultiset.from_string("2448"), prefer_brute=True)
    report = SearchReport(
        k=4, records=(rec,), stage1_count=1, stage2_count=0, multisets_scanned=1
    )
    assert report_from_json(report_to_json(report)) == report

    witness = FailureWitness(permutation="13", residue=1)
    assert _proof_from_obj(_proof_to_obj(witness)) == witness


def test_csv_emission_parses_back():
    report = search(SearchConfig(k=4))
    rows = list(csv.reader(io.StringIO(records_to_csv(report.records))))
    assert rows[0] == ["canonical", "k", "digit_sum", "orbit_size", "compressed"]
    assert len(rows) == len(report.records) + 1
    for row, rec in zip(rows[1:], report.records):
        assert row[0] == rec.canonical
        assert int(row[2]) == rec.digit_sum
        assert int(row[3]) == rec.orbit_size


def test_bfile_lines():
    assert bfile_text([10, 12, 18]) == "1 10\n2 12\n3 18\n"
    assert bfile_text([]) == ""
    assert bfile_text([18, 10, 12]).splitlines()[0] == "1 10"  # sorts


def test_family_instances_to_obj_uses_block_notation():
    objs = family_instances_to_obj([instantiate(template("ka"), 12)])
    assert objs[0]["template"] == "ka"
    assert objs[0]["k"] == 12
    assert objs[0]["members"][0] == "10_(11)"
    objs = family_instances_to_obj(catalog(2))
    assert [o["template"] for o in objs] == ["N21", "N22"]


def test_grid_report_to_obj():
    report = verify_conjecture_grid(ConjectureConstraints(n=3, alpha=1))
    obj = grid_report_to_obj(report)
    assert obj["all_ok"] is True
    assert obj["bounds"]["n"] == 3
    assert len(obj["entries"]) == len(report.entries)
    assert {"exponents", "modulus_bits", "exact", "expected"} == set(
        obj["entries"][0]
    )
    json.dumps(obj)  # fully serializable


def test_census_to_obj():
    result = census(999)
    obj = census_to_obj(result, 999)
    assert obj["pinn_count"] == 114
    assert obj["max_value"] == 999
    assert sum(obj["digit_sum_histogram"].values()) == 114
    json.dumps(obj)

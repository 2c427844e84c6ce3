from __future__ import annotations

import copy
import json

import pytest

from matlift import verify
from matlift.matroid import EnumerationBoundError


def test_certificates_replay_and_tampering_is_detected():
    report = verify.verify_recognition_table()
    assert report.passed
    assert verify.replay_report(report) == []
    embeddings = verify.verify_minor_embeddings()
    cert = next(c for c in embeddings.evidence if c["kind"] == "minor" and c["contracted"])
    assert verify.replay(cert)
    bad = copy.deepcopy(cert)
    bad["deleted"], bad["contracted"] = bad["contracted"], bad["deleted"]
    assert not verify.replay(bad)
    bad = copy.deepcopy(report.evidence[0])
    bad["value"] = not bad["value"]
    assert not verify.replay(bad)


def test_reports_are_json_and_machine_lines():
    report = verify.verify_eulerian_facts()
    data = json.loads(verify.reports_json([report]))
    assert data[0]["target"] == "lemma:eulerian"
    assert report.machine_line() == "lemma:eulerian\tpass\t2"


def test_sufficiency_is_deterministic_across_jobs():
    one = verify.verify_theorem_C2(max_edges=5, jobs=1)
    two = verify.verify_theorem_C2(max_edges=5, jobs=2)
    assert one.evidence == two.evidence and one.status == two.status
    assert verify.replay_report(one) == []


def test_max_edges_limit():
    with pytest.raises(EnumerationBoundError):
        verify.verify_C1(max_edges=11)


def test_run_dispatch_and_unknown_id():
    reports = verify.run("lemma:eulerian")
    assert [r.target for r in reports] == ["lemma:eulerian"]
    with pytest.raises(KeyError):
        verify.run("lemma:nope")


def test_structure_k2_reports_clauses():
    report = verify.verify_theorem_structure(2)
    assert report.passed
    assert all(c["clause"] in {"i", "ii", "iii"} for c in report.evidence if "clause" in c)
    with pytest.raises(ValueError):
        verify.verify_theorem_structure(4)

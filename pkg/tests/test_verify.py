import json

import pytest

from hilbcomp.verify import run_battery


@pytest.fixture(scope="module")
def report():
    return run_battery(n_min=3, n_max=3, seed=2)


def test_battery_passes_and_is_large_enough(report):
    assert report.summary["fail"] == 0
    assert report.summary["total"] >= 25
    assert report.exit_code() == 0


def test_check_ids_are_unique_and_ordered(report):
    ids = [c.id for c in report.checks]
    assert len(ids) == len(set(ids))


def test_rank3_checks_skip_below_their_range(report):
    skipped = {c.id for c in report.checks if c.status == "skipped"}
    assert "cone.chambers.wn.n3" in skipped


def test_json_shape(report):
    payload = report.to_json()
    assert payload["schema"] == 1
    assert payload["summary"]["pass"] + payload["summary"]["skipped"] == payload["summary"]["total"]
    assert all(set(c) >= {"id", "description", "expected", "computed", "status"}
               for c in payload["checks"])
    assert all("runtime_ms" not in c for c in payload["checks"])
    timed = report.to_json(timings=True)
    assert all("runtime_ms" in c for c in timed["checks"])
    json.dumps(payload)  # serializable


def test_text_rendering(report):
    text = report.to_text()
    assert "passed" in text.splitlines()[-1]
    assert any(line.startswith("PASS") for line in text.splitlines())


def test_fault_injection_reports_failure():
    faulted = run_battery(n_min=3, n_max=3, seed=2, faults=["lattice.pairing_hn"])
    assert faulted.exit_code() == 1
    bad = [c for c in faulted.checks if c.status == "fail"]
    assert [c.id for c in bad] == ["lattice.relations.hn"]


def test_range_validation():
    with pytest.raises(ValueError):
        run_battery(n_min=2, n_max=3)
    with pytest.raises(ValueError):
        run_battery(n_min=4, n_max=3)
    with pytest.raises(ValueError):
        run_battery(n_min=3, n_max=9)


def test_failures_are_recorded_not_raised():
    # even a crashing check must come back as data
    report = run_battery(n_min=3, n_max=3, seed=2, faults=["lattice.pairing_wn"])
    assert report.summary["fail"] >= 1
    assert report.exit_code() == 1

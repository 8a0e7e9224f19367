import json
from concurrent.futures import ThreadPoolExecutor

import pytest

from app.cli.main import main
from app.core.ecff import ec_scalar_mul
from app.core.engine import DerivationEngine
from app.core.models import FamilyReport, NumericCheck
from app.core.use_case import QuartetUseCase
from app.storages.quartet_storage import QuartetStorage
from app.system.exceptions import UsageError, VerificationError
from app.utils.logger import DerivationLogger

MISMATCH = NumericCheck(p=2, q=1, values=(1, 2, 3, 4), left_sum=17, right_sum=337, equal=False, degenerate=False)


@pytest.fixture
def engine():
    return DerivationEngine(max_n=3, logger=DerivationLogger(quiet=True))


@pytest.fixture
def failing_cross_check(monkeypatch):
    def cross_check_family(quartet, samples):
        return FamilyReport(checks=(MISMATCH,), failures=(MISMATCH,))

    monkeypatch.setattr("app.core.engine.cross_check_family", cross_check_family)


def test_multiples_match_scalar_multiplication(engine):
    assert engine.multiple(3) == ec_scalar_mul(engine.curve, 3, engine.base)
    assert set(engine._multiples) == {1, 2, 3}


def test_derive_logs_every_stage(engine):
    trace = engine.logger.spawn("derive 2")
    quartet = engine.derive(2, trace=trace)
    assert quartet.degree == 21
    data = trace.get_log_data()
    assert data["command"] == "derive 2"
    stages = {event["stage"] for event in data["events"]}
    assert {"GroupLaw", "Birational", "Substitution", "Normalize", "Verify"} <= stages
    assert {"quartet_2", "cross_check_2"} <= set(data["metrics"]["timings_ms"])
    assert data["metrics"]["degree"] == 21
    assert data["metrics"]["samples"] == 9


def test_derive_falls_back_to_the_engine_logger(engine):
    engine.derive(1)
    stages = {event["stage"] for event in engine.logger.get_log_data()["events"]}
    assert {"Curve", "Normalize", "Verify"} <= stages


def test_derive_respects_max_n(engine):
    with pytest.raises(UsageError):
        engine.derive(4)
    with pytest.raises(UsageError):
        engine.derive(0)


def test_cross_check(engine):
    report = engine.cross_check(engine.derive(2), bound=4)
    assert report.passed
    assert len(report.checks) == 5


def test_failed_cross_check_rejects_the_derivation(engine, failing_cross_check):
    with pytest.raises(VerificationError, match=r"\(p, q\) = \(2, 1\)"):
        engine.derive(2)


def test_failed_cross_check_exits_with_one(capsys, failing_cross_check):
    code = main(["derive", "--n", "2", "--format", "json", "--quiet"])
    document = json.loads(capsys.readouterr().out)
    assert code == 1
    assert document["status"] == "failure"
    assert document["error"]["code"] == VerificationError.code


def test_torsion_rejects_bad_bound(engine):
    with pytest.raises(UsageError):
        engine.torsion(0)


def test_use_case_caches_quartets(engine):
    storage = QuartetStorage()
    use_case = QuartetUseCase(engine, storage)
    first = use_case.derive(2)
    assert storage.get(2) is first
    _, check = use_case.evaluate(2, 2, 1)
    assert check.equal

    trace = engine.logger.spawn("derive 2")
    assert use_case.derive(2, trace=trace) is first
    messages = [event["message"] for event in trace.get_log_data()["events"]]
    assert any("loaded from cache" in message for message in messages)


def test_concurrent_commands_share_one_derivation(engine):
    use_case = QuartetUseCase(engine, QuartetStorage())
    requests = [3, 2, 3, 1]
    traces = [engine.logger.spawn(f"derive {n}") for n in requests]
    with ThreadPoolExecutor(max_workers=len(requests)) as pool:
        quartets = list(pool.map(use_case.derive, requests, traces))

    assert [q.degree for q in quartets[:3]] == [39, 21, 39]
    assert quartets[3].trivial
    assert quartets[0] is quartets[2]
    assert set(engine._multiples) == {1, 2, 3}
    for n, trace in zip(requests, traces):
        data = trace.get_log_data()
        assert data["command"] == f"derive {n}"
        assert all(event["stage"] != "Curve" for event in data["events"])
    # exactly one of the two n = 3 commands ran the pipeline
    normalized = [
        any(event["stage"] == "Normalize" for event in traces[i].get_log_data()["events"])
        for i in (0, 2)
    ]
    assert sorted(normalized) == [False, True]


def test_spawned_traces_are_independent():
    parent = DerivationLogger(quiet=True)
    parent.log("System", "parent event")
    child = parent.spawn("torsion")
    child.log("GroupLaw", "child event")
    assert child.quiet and not child.persist
    assert [event["message"] for event in parent.get_log_data()["events"]] == ["parent event"]
    assert [event["message"] for event in child.get_log_data()["events"]] == ["child event"]


def test_storage():
    storage = QuartetStorage()
    assert storage.get(2) is None
    storage.save(2, "quartet")
    assert storage.get(2) == "quartet"


def test_trace_log_is_persisted(tmp_path):
    trace = DerivationLogger(log_dir=str(tmp_path), persist=True, quiet=True)
    trace.reset(command="derive 1")
    trace.log_metric("degree", 21)
    trace.log("Verify", "identity holds", {"n": 1})
    saved = json.loads(trace.log_file.read_text(encoding="utf-8"))
    assert saved["command"] == "derive 1"
    assert saved["events"][0]["stage"] == "Verify"
    assert saved["metrics"]["degree"] == 21

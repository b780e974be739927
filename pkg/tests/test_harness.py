import pytest

from flagcx import checks
from flagcx.corpus import Corpus
from flagcx.harness import LedgerError, read_ledger, rerun_report, run_suite
from flagcx.report import FAIL, CheckReport


def test_empty_corpus(tmp_path):
    s = run_suite([], "all", ledger=tmp_path / "x.jsonl")
    assert s.instances == 0 and s.ok and not s.counts
    assert (tmp_path / "x.jsonl").read_text() == ""


def test_deterministic_and_parallel(tmp_path):
    c = Corpus.graphs(5)
    run_suite(c, "all", (2,), ledger=tmp_path / "a", timestamps=False)
    run_suite(c, "all", (2,), ledger=tmp_path / "b", timestamps=False, workers=2)
    assert (tmp_path / "a").read_bytes() == (tmp_path / "b").read_bytes()


def test_timestamps_only_difference(tmp_path):
    c = Corpus.graphs(3)
    run_suite(c, "ZYKOV", ledger=tmp_path / "a")
    run_suite(c, "ZYKOV", ledger=tmp_path / "b", timestamps=False)
    strip = lambda p: [dict(vars(r), timestamp=None) for r in read_ledger(p)]  # noqa: E731
    assert strip(tmp_path / "a") == strip(tmp_path / "b")
    assert all(r.timestamp for r in read_ledger(tmp_path / "a"))


def test_resume_after_torn_write(tmp_path):
    c = Corpus.balanced(12, seed=5)
    full, part = tmp_path / "full", tmp_path / "part"
    s_full = run_suite(c, "all", (2, 3), ledger=full, timestamps=False)
    run_suite(c, "all", (2, 3), ledger=part, timestamps=False, limit=6)
    text = part.read_text()
    part.write_text(text[: len(text) - 25])
    s = run_suite(c, "all", (2, 3), ledger=part, timestamps=False, resume=True)
    assert part.read_bytes() == full.read_bytes()
    assert s.to_dict() == s_full.to_dict()


def test_resume_rejects_foreign_ledger(tmp_path):
    run_suite(Corpus.graphs(3), "ZYKOV", ledger=tmp_path / "l", timestamps=False)
    with pytest.raises(ValueError):
        run_suite(Corpus.balanced(3), "ZYKOV", ledger=tmp_path / "l", resume=True)


def test_ledger_io_error(tmp_path):
    with pytest.raises(LedgerError) as err:
        run_suite(Corpus.graphs(2), "ZYKOV", ledger=tmp_path / "missing" / "l.jsonl")
    assert err.value.cursor == 0


def test_fail_fast(monkeypatch):
    def broken(inst, p=2, **_):
        return CheckReport("BROKEN", inst.descriptor, FAIL, {"lhs": 1, "rhs": 0}, p)

    monkeypatch.setitem(checks.ALL_CHECKS, "BROKEN", broken)
    s = run_suite(Corpus.graphs(3), ["BROKEN"], fail_fast=True)
    assert s.instances == 1 and s.stopped_early and not s.ok
    assert s.failures[0].instance == "@"


def test_reports_reproduce(tmp_path):
    run_suite(Corpus.graphs(4), "all", (2, 3), ledger=tmp_path / "l", timestamps=False)
    for r in read_ledger(tmp_path / "l")[::7]:
        assert rerun_report(r) == r


def test_summary_shape():
    s = run_suite(Corpus.graphs(4), "THM_1_5")
    d = s.to_dict()
    assert d["instances"] == 18
    assert set(d["equality"]["THM_1_5"]) == {"@", "A?", "A_", "B?", "Bw", "C?", "C]", "C~"}

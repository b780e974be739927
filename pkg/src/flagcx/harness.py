"""Run checks over a corpus, persisting one JSON report per line.

Reports are written in corpus order, instance by instance, so a ledger is a
prefix of the full run at every moment and ``resume`` only has to drop a
trailing partial instance.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from functools import partial
from itertools import groupby
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .checks import Instance, resolve_checks, run_check
from .corpus import Corpus
from .report import CERTIFICATE, EQUALITY, FAIL, VERDICTS, CheckReport

log = logging.getLogger(__name__)


class LedgerError(IOError):
    """Ledger I/O failed; ``cursor`` is the first instance index not on disk."""

    def __init__(self, msg: str, cursor: int):
        super().__init__(f"{msg} (resume from instance {cursor})")
        self.cursor = cursor


def run_instance(desc: str, checks: Sequence[str], fields: Sequence[int], opts: dict) -> list[CheckReport]:
    inst = Instance.from_descriptor(desc)
    return [run_check(name, inst, p, **opts) for p in fields for name in checks]


@dataclass
class Summary:
    counts: dict = field(default_factory=lambda: defaultdict(Counter))
    failures: list = field(default_factory=list)
    certificates: list = field(default_factory=list)
    equality: dict = field(default_factory=lambda: defaultdict(list))
    instances: int = 0
    stopped_early: bool = False

    def add(self, reports: Iterable[CheckReport]) -> None:
        self.instances += 1
        for r in reports:
            self.counts[r.check][r.verdict] += 1
            if r.verdict == FAIL:
                self.failures.append(r)
            elif r.verdict == CERTIFICATE:
                self.certificates.append(r)
            elif r.verdict == EQUALITY and r.instance not in self.equality[r.check]:
                self.equality[r.check].append(r.instance)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "instances": self.instances,
            "counts": {c: {v: n for v, n in sorted(cnt.items())} for c, cnt in self.counts.items()},
            "failures": [r.to_json() for r in self.failures],
            "certificates": [r.to_json() for r in self.certificates],
            "equality": dict(self.equality),
            "stopped_early": self.stopped_early,
        }

    def rows(self) -> list[list]:
        header = ["check"] + list(VERDICTS)
        return [header] + [[c] + [cnt.get(v, 0) for v in VERDICTS] for c, cnt in self.counts.items()]


def read_ledger(path) -> list[CheckReport]:
    with open(path) as fh:
        return [CheckReport.from_json(line) for line in fh if line.strip()]


def _complete_prefix(path: Path, per_instance: int, descs: Sequence[str]) -> tuple[list[str], int]:
    """Lines of the fully written instances at the head of the ledger, and how many there are."""
    lines = path.read_text().splitlines(keepends=True)
    parsed = []
    for line in lines:
        if not line.endswith("\n"):
            break  # torn write
        try:
            parsed.append((line, CheckReport.from_json(line)))
        except ValueError:
            break
    kept, cursor = [], 0
    for idx, group in groupby(parsed, key=lambda lr: lr[1].index):
        group = list(group)
        if idx != cursor or len(group) != per_instance:
            break
        if cursor >= len(descs) or any(r.instance != descs[cursor] for _, r in group):
            raise ValueError(f"ledger {path} does not match the corpus at instance {cursor}")
        kept += [line for line, _ in group]
        cursor += 1
    return kept, cursor


def run_suite(
    corpus: Corpus | Sequence[str],
    checks: str | Sequence[str] = "all",
    fields: Sequence[int] = (2,),
    ledger: Optional[str | Path] = None,
    resume: bool = False,
    workers: int = 1,
    timestamps: bool = True,
    fail_fast: bool = False,
    limit: Optional[int] = None,
    opts: Optional[dict] = None,
) -> Summary:
    """Run ``checks`` over every instance for every prime in ``fields``.

    Deterministic for a fixed corpus and configuration (modulo timestamps).
    ``limit`` stops after that many instances in total, which is how an
    interrupted run is simulated.
    """
    names = resolve_checks(checks)
    fields = list(fields)
    opts = dict(opts or {})
    descs = corpus.descriptors() if isinstance(corpus, Corpus) else list(corpus)
    summary = Summary()
    start = 0
    fh = None
    if ledger is not None:
        path = Path(ledger)
        if resume and path.exists():
            kept, start = _complete_prefix(path, len(names) * len(fields), descs)
            for _, group in groupby((CheckReport.from_json(x) for x in kept), key=lambda r: r.index):
                summary.add(group)
            path.write_text("".join(kept))
            log.info("resuming %s at instance %d of %d", path, start, len(descs))
        elif path.exists():
            path.unlink()
        try:
            fh = open(path, "a")
        except OSError as err:
            raise LedgerError(f"cannot open ledger {path}: {err}", start) from err

    stop = len(descs) if limit is None else min(len(descs), limit)
    todo = descs[start:stop]
    work = partial(run_instance, checks=names, fields=fields, opts=opts)
    pool = ProcessPoolExecutor(workers) if workers > 1 and len(todo) > 1 else None
    results = pool.map(work, todo, chunksize=max(1, len(todo) // (8 * workers))) if pool else map(work, todo)
    try:
        for index, reports in enumerate(results, start):
            stamp = datetime.now(timezone.utc).isoformat(timespec="seconds") if timestamps else None
            for r in reports:
                r.index, r.timestamp = index, stamp
            if fh is not None:
                try:
                    fh.write("".join(r.to_json() + "\n" for r in reports))
                    fh.flush()
                except OSError as err:
                    raise LedgerError(f"write to ledger failed: {err}", index) from err
            summary.add(reports)
            if fail_fast and any(r.verdict == FAIL for r in reports):
                summary.stopped_early = True
                break
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
        if fh is not None:
            fh.close()
    if start + len(todo) < len(descs) and limit is not None:
        summary.stopped_early = True
    return summary


def rerun_report(report: CheckReport) -> CheckReport:
    """Recompute a persisted report from its descriptor."""
    inst = Instance.from_descriptor(report.instance)
    fresh = run_check(report.check, inst, report.p or 2)
    fresh.index, fresh.timestamp = report.index, report.timestamp
    return fresh

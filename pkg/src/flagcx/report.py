"""The persisted record of one check on one instance."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Optional

PASS = "pass"
FAIL = "fail"
EQUALITY = "equality"
SKIPPED = "skipped"
CERTIFICATE = "certificate"

VERDICTS = (PASS, FAIL, EQUALITY, SKIPPED, CERTIFICATE)


@dataclass
class CheckReport:
    check: str
    instance: str
    verdict: str
    witness: dict = field(default_factory=dict)
    p: Optional[int] = None
    index: Optional[int] = None
    timestamp: Optional[str] = None

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @property
    def ok(self) -> bool:
        return self.verdict != FAIL

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "CheckReport":
        data: dict[str, Any] = json.loads(line)
        return cls(**data)


def verdict(ok: bool, tight: bool = False) -> str:
    if not ok:
        return FAIL
    return EQUALITY if tight else PASS

"""Verification reports: structured, deterministic records of suite runs."""

import json
from dataclasses import dataclass, field

from . import __version__

SCHEMA = "lieembed.verification-report/1"
STATUSES = ("pass", "fail", "error")


@dataclass
class Check:
    name: str
    status: str
    residual: str = "0"
    convention: dict = None
    detail: str = ""
    duration: float = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown check status {self.status!r}")

    def to_dict(self, timings=False):
        out = {"name": self.name, "status": self.status, "residual": self.residual}
        if self.convention:
            out["convention"] = {k: str(v) for k, v in self.convention.items()}
        if self.detail:
            out["detail"] = self.detail
        if timings and self.duration is not None:
            out["duration"] = round(self.duration, 6)
        return out


@dataclass
class VerificationReport:
    """Outcome of a suite: named checks plus free-form findings.

    Checks decide the exit code. Findings record measured facts that are
    not pass/fail statements (a detected convention, a measured open
    question, a polynomial size).
    """

    suite: str
    config: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    findings: dict = field(default_factory=dict)
    engine_version: str = __version__

    def add(self, name, ok, residual="0", convention=None, detail="", duration=None):
        status = "pass" if ok else "fail"
        chk = Check(name, status, str(residual), convention, detail, duration)
        self.checks.append(chk)
        return chk

    def add_error(self, name, message, duration=None):
        chk = Check(name, "error", "n/a", None, message, duration)
        self.checks.append(chk)
        return chk

    def note(self, key, value):
        self.findings[key] = value

    def extend(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.residual,
                                     c.convention, c.detail, c.duration))
        for k, v in other.findings.items():
            self.findings[prefix + k] = v

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def passed(self):
        return all(c.status == "pass" for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if c.status != "pass"]

    @property
    def exit_code(self):
        return 0 if self.passed else 1

    def to_dict(self, timings=False):
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "engine_version": self.engine_version,
            "config": {k: _plain(v) for k, v in self.config.items()},
            "checks": [c.to_dict(timings) for c in sorted(self.checks, key=lambda c: c.name)],
            "findings": {k: _plain(v) for k, v in self.findings.items()},
            "summary": {
                "total": len(self.checks),
                "passed": sum(c.status == "pass" for c in self.checks),
                "failed": sum(c.status == "fail" for c in self.checks),
                "errors": sum(c.status == "error" for c in self.checks),
            },
        }

    def to_text(self, timings=False):
        return json.dumps(self.to_dict(timings), indent=2, sort_keys=True) + "\n"

    def summary_lines(self):
        lines = []
        for c in sorted(self.checks, key=lambda c: c.name):
            lines.append(f"{c.status.upper():5} {c.name}  residual={c.residual}")
        return lines


def _plain(v):
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return str(v)

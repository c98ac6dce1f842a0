"""Pass/fail verdicts with witnesses, shared by every axiom checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, List, Optional

__all__ = ["Check", "Report", "AxiomError", "first", "jsonable"]


def jsonable(x: Any) -> Any:
    """Convert witnesses (tuples, Fractions, dicts with tuple keys) to JSON values."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    if isinstance(x, (list, tuple)):
        return [jsonable(y) for y in x]
    if isinstance(x, dict):
        return {_key(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


def _key(k) -> str:
    if isinstance(k, str):
        return k
    if isinstance(k, tuple):
        return ",".join(str(jsonable(y)) for y in k)
    return str(jsonable(k))


def first(failures: Iterable[Any]) -> Any:
    """The first element of ``failures`` or ``None``."""
    for w in failures:
        return w
    return None


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = jsonable(self.witness)
        if self.detail:
            d["detail"] = self.detail
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Check":
        return cls(d["name"], d["passed"], d.get("witness"), d.get("detail", ""))


@dataclass
class Report:
    """Ordered list of named checks about one subject."""

    subject: str
    checks: List[Check] = field(default_factory=list)

    def record(self, name: str, witness: Any = None, detail: str = "") -> bool:
        """Record ``name`` as passed iff ``witness`` is ``None``."""
        ok = witness is None
        self.checks.append(Check(name, ok, witness, detail))
        return ok

    def note(self, name: str, passed: bool, detail: str = "", witness: Any = None) -> bool:
        self.checks.append(Check(name, bool(passed), witness, detail))
        return bool(passed)

    def extend(self, other: "Report", prefix: Optional[str] = None) -> "Report":
        for c in other.checks:
            name = f"{prefix}.{c.name}" if prefix else c.name
            self.checks.append(Check(name, c.passed, c.witness, c.detail))
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"subject": self.subject, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(d["subject"], [Check.from_dict(c) for c in d["checks"]])

    def text(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            extra = f"  witness={jsonable(c.witness)}" if c.witness is not None else ""
            if c.detail:
                extra += f"  ({c.detail})"
            lines.append(f"  [{mark}] {c.name}{extra}")
        return "\n".join(lines)

    def require(self, exc=None):
        """Raise :class:`AxiomError` (or ``exc``) carrying this report if any check failed."""
        if not self.passed:
            bad = self.failures()[0]
            raise (exc or AxiomError)(f"{self.subject}: {bad.name} fails, witness {jsonable(bad.witness)}",
                                      report=self)
        return self


class AxiomError(ValueError):
    """An algebraic law fails; ``report`` names the law and its witness."""

    def __init__(self, message, report: Optional[Report] = None, witness=None):
        super().__init__(message)
        self.report = report
        if witness is None and report is not None and report.failures():
            witness = report.failures()[0].witness
        self.witness = witness

"""Pass/fail record shared by every verification routine."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def _jsonable(value: Any) -> Any:
    # Fractions go out as "p/q" strings; ints stay ints (json keeps them exact).
    if isinstance(value, Fraction):
        return str(value)
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


@dataclass
class IdentityReport:
    """Outcome of checking one identity over a parameter range.

    ``passed`` is true exactly when ``counterexample`` is None. ``cases`` counts
    the individual equalities that were evaluated before stopping.
    """

    identity: str
    params: dict[str, Any] = field(default_factory=dict)
    counterexample: dict[str, Any] | None = None
    cases: int = 0
    value: Any = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict[str, Any]:
        out = {
            "identity": self.identity,
            "params": _jsonable(self.params),
            "pass": self.passed,
            "counterexample": _jsonable(self.counterexample),
            "cases": self.cases,
        }
        if self.value is not None:
            out["value"] = _jsonable(self.value)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = ", ".join(f"{k}={_jsonable(v)}" for k, v in self.params.items())
        line = f"{status} {self.identity} ({params}) cases={self.cases}"
        if self.counterexample is not None:
            detail = " ".join(f"{k}={_jsonable(v)}" for k, v in self.counterexample.items())
            line += f" counterexample: {detail}"
        return line


def merge(identity: str, reports, params: dict[str, Any] | None = None) -> IdentityReport:
    """Fold sub-reports into one, keeping the first counterexample."""
    total = IdentityReport(identity, dict(params or {}))
    for rep in reports:
        total.cases += rep.cases
        if not rep.passed:
            total.counterexample = {"check": rep.identity, **rep.params, **rep.counterexample}
            break
    return total

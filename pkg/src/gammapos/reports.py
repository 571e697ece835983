"""Verification report objects shared by the verifying modules."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of one identity verification.

    ``lhs``/``rhs`` carry canonical text renderings of the two sides (or of
    the first mismatching pieces), ``gamma_vector`` the expansion
    coefficients when one was computed, and ``detail`` any extra structured
    findings.
    """

    identity: str
    parameters: dict = field(default_factory=dict)
    status: str = "pass"
    lhs: str | None = None
    rhs: str | None = None
    gamma_vector: list[str] | None = None
    detail: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "parameters": self.parameters,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }
        if self.gamma_vector is not None:
            out["gamma_vector"] = self.gamma_vector
        if self.detail is not None:
            out["detail"] = self.detail
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def one_line(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        return f"{'PASS' if self.passed else 'FAIL'}  {self.identity}  {params}".rstrip()


def combine(identity: str, parameters: dict, checks: dict[str, bool],
            **extra) -> Report:
    """Aggregate named sub-checks into one report."""
    status = "pass" if all(checks.values()) else "fail"
    detail = dict(extra.pop("detail", {}) or {})
    detail["checks"] = {name: bool(ok) for name, ok in checks.items()}
    return Report(identity=identity, parameters=parameters, status=status,
                  detail=detail, **extra)

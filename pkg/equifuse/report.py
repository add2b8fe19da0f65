"""
Check results and the report that collects them.

A check passes when its residual is strictly below the tolerance and, for
checks that recover integers, the recovered integer matches the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace


def _param_key(parameters: dict) -> tuple:
    return tuple((key, str(value)) for key, value in sorted(parameters.items()))


@dataclass(frozen=True)
class CheckResult:
    name: str
    parameters: dict
    max_residual: float
    passed: bool
    integer_match: bool | None = None
    detail: str | None = None

    @classmethod
    def of(
        cls,
        name: str,
        parameters: dict | None,
        residual: float,
        eps: float,
        integer_match: bool | None = None,
        detail: str | None = None,
    ) -> CheckResult:
        residual = float(residual)
        passed = residual < eps and integer_match is not False
        return cls(
            name=name,
            parameters=dict(parameters or {}),
            max_residual=residual,
            passed=passed,
            integer_match=integer_match,
            detail=detail,
        )

    @property
    def sort_key(self) -> tuple:
        return (self.name, _param_key(self.parameters))

    def to_dict(self) -> dict:
        data = {
            "name": self.name,
            "parameters": dict(self.parameters),
            "max_residual": self.max_residual,
            "passed": self.passed,
        }
        if self.integer_match is not None:
            data["integer_match"] = self.integer_match
        if self.detail is not None:
            data["detail"] = self.detail
        return data


@dataclass
class VerificationReport:
    tolerance: float
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> CheckResult:
        self.checks.append(result)
        return result

    def extend(self, other: VerificationReport):
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def max_residual(self) -> float:
        return max((check.max_residual for check in self.checks), default=0.0)

    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def merged(self, name: str, parameters: dict | None = None) -> CheckResult:
        """Condense every result of this report into a single named result"""
        integer_flags = [
            check.integer_match
            for check in self.checks
            if check.integer_match is not None
        ]
        details = sorted({check.detail for check in self.checks if check.detail})
        result = CheckResult.of(
            name,
            parameters,
            self.max_residual,
            self.tolerance,
            integer_match=all(integer_flags) if integer_flags else None,
            detail="; ".join(details) or None,
        )
        # a condensed result fails whenever one of its parts failed
        if not self.passed:
            result = replace(result, passed=False)
        return result

    def sorted(self) -> VerificationReport:
        return VerificationReport(
            tolerance=self.tolerance,
            checks=sorted(self.checks, key=lambda check: check.sort_key),
        )

    def to_dict(self) -> dict:
        return {
            "tolerance": self.tolerance,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }

    def __len__(self):
        return len(self.checks)

    def __iter__(self):
        return iter(self.checks)

"""
app/services/shared/operation_results.py

Shared lightweight result objects for scenario orchestration.

PURPOSE
-------
Scenario runners report a list of named checks plus JSON artifacts. The CLI
encodes a ScenarioResult through `app.interchange` and exits 1 when any
assertion failed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping


@dataclass(frozen=True)
class Assertion:
    """
    One checked claim.

    FIELDS
    ------
    description:
        Human-readable statement of what is checked.
    expected / actual:
        JSON-safe values (numbers, strings, lists) describing the comparison.
    passed:
        Outcome of the check.
    """

    description: str
    expected: Any
    actual: Any
    passed: bool


@dataclass(frozen=True)
class ScenarioResult:
    """
    Report of one scenario: its assertions plus named JSON artifacts.
    """

    name: str
    assertions: tuple[Assertion, ...]
    artifacts: Mapping[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.assertions)

    @property
    def failures(self) -> tuple[Assertion, ...]:
        return tuple(a for a in self.assertions if not a.passed)


class AssertionLog:
    """
    Mutable collector used while a scenario runs; frozen into a ScenarioResult
    by `result()`.
    """

    def __init__(self, name: str) -> None:
        self.name = name
        self.assertions: list[Assertion] = []
        self.artifacts: dict[str, Any] = {}

    def check(self, description: str, expected: Any, actual: Any, passed: bool) -> bool:
        self.assertions.append(Assertion(description, expected, actual, bool(passed)))
        return bool(passed)

    def close_to(self, description: str, expected: float, actual: float, atol: float) -> bool:
        return self.check(description, expected, actual, abs(float(actual) - float(expected)) <= atol)

    def at_most(self, description: str, bound: float, actual: float) -> bool:
        return self.check(description, f"<= {bound:g}", actual, float(actual) <= bound)

    def at_least(self, description: str, bound: float, actual: float) -> bool:
        return self.check(description, f">= {bound:g}", actual, float(actual) >= bound)

    def artifact(self, name: str, value: Any) -> None:
        self.artifacts[name] = value

    def result(self) -> ScenarioResult:
        return ScenarioResult(name=self.name, assertions=tuple(self.assertions), artifacts=dict(self.artifacts))

"""
app/scenarios/runner.py

Shared start/finish plumbing for scenario functions.
"""

from __future__ import annotations

import logging

from ..reports.instrumentation import ScenarioInstrumentation, log_event
from ..services.shared.operation_results import AssertionLog, ScenarioResult


def start(name: str) -> tuple[AssertionLog, ScenarioInstrumentation]:
    return AssertionLog(name), ScenarioInstrumentation(scenario_name=name)


def finish(log: AssertionLog, instrumentation: ScenarioInstrumentation) -> ScenarioResult:
    """
    Freeze the log, report each failed assertion and emit the timing summary.
    """
    result = log.result()
    for failure in result.failures:
        log_event(
            "SCENARIO_ASSERTION_FAILED",
            {
                "trace_id": instrumentation.trace_id,
                "scenario": result.name,
                "description": failure.description,
                "expected": failure.expected,
                "actual": failure.actual,
            },
            level=logging.WARNING,
        )
    instrumentation.finish(passed=result.passed, assertions=len(result.assertions))
    return result

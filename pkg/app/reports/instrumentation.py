"""
app/reports/instrumentation.py

Structured event logging and timing instrumentation for engine runs.

PURPOSE
-------
A. log_event(event, payload, level)
   The single logging entry point. Emits `EVENT_NAME {payload}` through
   `current_app.logger` inside an application context, and through
   `logging.getLogger("app")` (the same named logger) outside one.

B. timed_event(event, **payload)
   Wraps a service call and logs `event` with `elapsed_ms` plus whatever the
   block adds to the yielded dict.

C. ScenarioInstrumentation
   Per-run collector used by `app.scenarios.runner`. Stages are consecutive
   (starting one closes the previous one); details time sub-steps inside a
   stage.

IMPORTANT BOUNDARY
------------------
Timings go to the log only. They never enter a ScenarioResult, and nothing
here catches exceptions.
"""

from __future__ import annotations

import logging
import time
import uuid
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Iterator

from flask import current_app, has_app_context

LOGGER_NAME = "app"


def _elapsed_ms(since: float) -> float:
    return round((time.perf_counter() - since) * 1000.0, 2)


def engine_logger() -> logging.Logger:
    return current_app.logger if has_app_context() else logging.getLogger(LOGGER_NAME)


def log_event(event: str, payload: dict[str, Any] | None = None, level: int = logging.INFO) -> None:
    """
    Emit one structured log line.

    EXAMPLES
    --------
    log_event("KS_SEARCH_FINISHED", {"status": "UNSAT", "nodes": 812})
    """
    engine_logger().log(level, "%s %s", event, payload or {})


@contextmanager
def timed_event(event: str, **payload: Any) -> Iterator[dict[str, Any]]:
    """
    EXAMPLES
    --------
    with timed_event("KS_SEARCH_FINISHED", directions=57) as extra:
        result = search()
        extra["status"] = result.status
    """
    extra: dict[str, Any] = {}
    since = time.perf_counter()
    try:
        yield extra
    finally:
        log_event(event, {**payload, **extra, "elapsed_ms": _elapsed_ms(since)})


@dataclass
class ScenarioInstrumentation:
    """
    Timing collector for one scenario run.

    trace_id groups every log line of the run; `stages` and `details` keep
    (name, ms) pairs in the order they were measured.
    """

    scenario_name: str
    trace_id: str = field(default_factory=lambda: uuid.uuid4().hex[:12])
    opened_at: float = field(default_factory=time.perf_counter)
    stages: list[tuple[str, float]] = field(default_factory=list)
    details: list[tuple[str, float]] = field(default_factory=list)
    _current: tuple[str, float] | None = None

    def _tagged(self, **payload: Any) -> dict[str, Any]:
        return {"trace_id": self.trace_id, "scenario": self.scenario_name, **payload}

    def _close_stage(self) -> None:
        if self._current is None:
            return
        name, since = self._current
        self.stages.append((name, _elapsed_ms(since)))
        self._current = None

    def start_stage(self, name: str) -> None:
        self._close_stage()
        self._current = (str(name), time.perf_counter())

    @contextmanager
    def timed_detail(self, name: str, **payload: Any) -> Iterator[None]:
        """
        with instrumentation.timed_detail("propagator", sites=256):
            u = evolution_unitary(spec, t)
        """
        since = time.perf_counter()
        try:
            yield
        finally:
            elapsed = _elapsed_ms(since)
            self.details.append((str(name), elapsed))
            log_event("SCENARIO_TIMING_DETAIL", self._tagged(detail=str(name), detail_ms=elapsed, **payload))

    def finish(self, **payload: Any) -> float:
        """
        Close the open stage and log SCENARIO_TIMING_SUMMARY. Returns the total in ms.
        """
        self._close_stage()
        total = _elapsed_ms(self.opened_at)
        log_event(
            "SCENARIO_TIMING_SUMMARY",
            self._tagged(total_ms=total, stages_ms=dict(self.stages), details_ms=dict(self.details), **payload),
        )
        return total

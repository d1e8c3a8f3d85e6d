"""
app/commands/common.py

Shared plumbing for the click command groups.

PUBLIC API
----------
- tol_option / seed_option / out_option   reusable click options
- apply_seed(seed)                        --seed -> SEED setting
- read_json(path)                         JSON file -> Python data
- emit(payload, out)                      canonical JSON to stdout or a file
- engine_command                          error and exit-code mapping

EXIT CODES
----------
0   success
1   a verification or scenario assertion failed (the command returned False)
2   click usage error, or a QSigmaError raised from the input; the error
    payload is written to stderr as canonical JSON
"""

from __future__ import annotations

import functools
import json
import logging
from pathlib import Path
from typing import Any, Callable

import click
from flask import current_app

from ..interchange import dumps_canonical
from ..models import Tolerance
from ..reports.instrumentation import log_event
from ..services.shared.errors import BadShapeError, QSigmaError

USAGE_EXIT = 2
FAILURE_EXIT = 1


def _to_tolerance(ctx: click.Context, param: click.Parameter, value: float | None) -> Tolerance | None:
    if value is None:
        return None
    try:
        return Tolerance(value)
    except ValueError as exc:
        raise click.BadParameter(str(exc), ctx=ctx, param=param) from exc


def tol_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--tol",
        type=float,
        default=None,
        callback=_to_tolerance,
        help="Absolute tolerance eps (defaults to the TOLERANCE setting).",
    )(func)


def apply_seed(seed: int | None) -> None:
    """
    Override the SEED setting for this invocation. Needs an app context.
    """
    if seed is not None:
        current_app.config["SEED"] = seed


def seed_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--seed",
        type=int,
        default=None,
        help="Seed for randomized inputs (overrides the SEED setting).",
    )(func)


def out_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--out",
        type=click.Path(dir_okay=False, writable=True, path_type=Path),
        default=None,
        help="Write the JSON report here instead of stdout.",
    )(func)


def input_path(*names: str, required: bool = True, help: str | None = None) -> Callable[..., Any]:
    return click.option(
        *names,
        type=click.Path(exists=True, dir_okay=False, path_type=Path),
        required=required,
        help=help,
    )


def read_json(path: Path) -> Any:
    """
    RAISES
    ------
    BadShapeError
        When the file is not valid JSON.
    """
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise BadShapeError(f"{path} is not valid JSON: {exc.msg}", path=str(path), line=exc.lineno) from exc


def emit(payload: Any, out: Path | None = None) -> None:
    text = dumps_canonical(payload)
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text, encoding="utf-8")


def engine_command(func: Callable[..., Any]) -> Callable[..., Any]:
    """
    Map engine errors to exit code 2 and a False return value to exit code 1.
    """

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        ctx = click.get_current_context()
        try:
            outcome = func(*args, **kwargs)
        except QSigmaError as exc:
            payload = exc.to_payload()
            payload["command"] = ctx.command_path
            log_event("CLI_USAGE_ERROR", payload, level=logging.WARNING)
            click.echo(dumps_canonical(payload), err=True, nl=False)
            ctx.exit(USAGE_EXIT)
        if outcome is False:
            ctx.exit(FAILURE_EXIT)

    return wrapper

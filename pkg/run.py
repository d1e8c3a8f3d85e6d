"""
Entry point for the qsigma command line.

Usage (from project root):

    flask --app run.py scenario epr
    flask --app run.py reck decompose --random 4 --seed 7

or:

    python run.py ks --embed

"""

from __future__ import annotations

import sys
from typing import Sequence

import click
from flask.cli import FlaskGroup

from app import create_app

# Application object picked up by `flask --app run.py`.
app = create_app()


def cli_main(argv: Sequence[str] | None = None) -> int:
    """
    Run one CLI invocation and return its exit code.
    """
    group = FlaskGroup(create_app=create_app, add_default_commands=False, load_dotenv=True)
    args = list(argv) if argv is not None else sys.argv[1:]
    try:
        code = group.main(args=args, prog_name="qsigma", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        return 1
    return code if isinstance(code, int) else 0


if __name__ == "__main__":
    sys.exit(cli_main())

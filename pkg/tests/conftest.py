"""Shared helpers: CLI runner and backend parametrization."""

from __future__ import annotations

import contextlib
import io
import json

import pytest

from thue1728 import cli

BACKENDS = ("numba", "numpy", "exact")


def run_cli(args: list[str]) -> tuple[int, str]:
    """Run the CLI in-process; returns (exit code, stdout)."""
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(args)
    return code, buf.getvalue()


def run_cli_json(args: list[str]) -> tuple[int, dict]:
    code, out = run_cli(args + ["--output", "json"])
    return code, (json.loads(out) if out.strip() else {})


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param

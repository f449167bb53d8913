"""Cyclically branched covers of punctured spheres."""

import json

from ._core import (
    CycovError,
    admissible,
    enumerate,
    genus,
    genus_oracle,
    normalize,
    run_cli,
    validate,
    wronski,
)

__all__ = [
    "CycovError",
    "admissible",
    "cli_json",
    "enumerate",
    "genus",
    "genus_oracle",
    "normalize",
    "run_cli",
    "validate",
    "wronski",
]


def cli_json(*args):
    """Run a CLI command and return its parsed JSON envelope."""
    code, out, err = run_cli([str(a) for a in args])
    if code != 0:
        raise CycovError(err.strip() or f"exit code {code}")
    return json.loads(out)

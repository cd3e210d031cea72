"""Python access to the quintics verification toolkit.

The heavy lifting happens in the compiled ``_core`` module; this layer turns reports into
plain dictionaries.
"""

from __future__ import annotations

import json
import os
from typing import Iterable, Mapping, Sequence

from . import _core
from ._core import (
    LatticeError,
    admissible_moduli,
    all_suites,
    hesse_group,
    is_admissible,
    lattice_product,
    supported_primes,
)

__version__ = _core.__version__

__all__ = [
    "LatticeError",
    "admissible_moduli",
    "all_suites",
    "exit_code",
    "hesse_group",
    "is_admissible",
    "lattice_product",
    "render_markdown",
    "run",
    "scan_curve",
    "supported_primes",
]


def _cache_dir(cache_dir: str | os.PathLike | None) -> str:
    if cache_dir is not None:
        return os.fspath(cache_dir)
    return os.environ.get(_core.CACHE_DIR_ENV, "")


def run(
    suites: Iterable[str] = ("all",),
    primes: Sequence[int] = (31, 61),
    a_values: Mapping[int, Sequence[int]] | None = None,
    seed: int = 42,
    symbolic_a: bool = True,
    cache_dir: str | os.PathLike | None = None,
    lattice_dir: str | os.PathLike = "",
    witness_bound: int = 2000,
    jobs: int = 1,
) -> dict:
    """Run the selected suites and return the report as a dictionary."""
    text = _core.run_json(
        list(suites),
        list(primes),
        {int(p): list(v) for p, v in (a_values or {}).items()},
        seed,
        symbolic_a,
        _cache_dir(cache_dir),
        os.fspath(lattice_dir),
        witness_bound,
        jobs,
    )
    return json.loads(text)


def render_markdown(report: Mapping) -> str:
    return _core.render_markdown_json(json.dumps(report))


def exit_code(report: Mapping, strict: bool = False) -> int:
    statuses = {c["status"] for c in report["claims"]}
    if "fail" in statuses or (strict and "soft-fail" in statuses):
        return 1
    return 0


def scan_curve(p: int, a: int, cache_dir: str | os.PathLike | None = None) -> list[tuple[int, ...]]:
    """Points of E(F_p) as normalized 5-tuples."""
    return [tuple(x) for x in _core.scan_curve(p, a, _cache_dir(cache_dir))]

"""Exact computations with nilpotent commuting pairs in parabolic subalgebras of gl_n."""

from __future__ import annotations

import json
from typing import Any, Sequence

from ._core import normalize_ideal as _normalize_ideal
from ._core import run

__all__ = ["NilcommError", "run", "report", "components", "ideal", "ideal_to_pair", "verify"]


class NilcommError(RuntimeError):
    def __init__(self, code: int, message: str):
        super().__init__(message.strip() or f"nilcomm exited with code {code}")
        self.code = code


def report(args: Sequence[str], *, check: bool = True) -> dict[str, Any]:
    """Run a subcommand with --json and return the decoded report."""
    code, out, err = run([*args, "--json"])
    if code != 0 and (check or not out):
        raise NilcommError(code, err)
    return json.loads(out)


def components(algebra: str, n: int, *, field: str = "q") -> list[dict[str, Any]]:
    return report(["components", "--algebra", algebra, "--n", str(n), "--field", field])["results"]["components"]


def ideal(text: str, *, field: str = "q", order: str = "graded") -> dict[str, Any]:
    return json.loads(_normalize_ideal(text, field, order))


def ideal_to_pair(fine: str, coarse: str | None = None, *, field: str = "q", roundtrip: bool = True) -> dict[str, Any]:
    args = ["ideal2pair", "--fine", fine, "--field", field]
    if coarse is not None:
        args += ["--coarse", coarse]
    if roundtrip:
        args.append("--roundtrip")
    return report(args)["results"]


def verify(suite: str = "all", *, n_max: int | None = None, samples: int | None = None, seed: int | None = None) -> dict[str, Any]:
    args = ["verify", "--suite", suite]
    if n_max is not None:
        args += ["--n-max", str(n_max)]
    if samples is not None:
        args += ["--samples", str(samples)]
    if seed is not None:
        args += ["--seed", str(seed)]
    return report(args, check=False)

"""Star groupoids x * y = t x + u y over modular, neutrosophic and interval carriers."""

from __future__ import annotations

import json
from typing import Any, Iterable, Optional

from ._core import (
    BudgetExceeded,
    DomainError,
    GglError,
    Groupoid,
    ParseError,
    ShapeError,
    cli,
    count,
    demo,
    demo_names,
)
from . import _core

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "GglError",
    "Groupoid",
    "ParseError",
    "ShapeError",
    "check",
    "cli",
    "count",
    "demo",
    "demo_names",
    "is_simple",
    "smarandache",
    "structure",
    "verify",
]


def check(g: Groupoid, identity: str, mode: str = "auto") -> Any:
    """Verdict dict for one identity, or a list for composite ones such as 'alternative'."""
    verdicts = json.loads(g._check_json(identity, mode))
    return verdicts[0] if len(verdicts) == 1 else verdicts


def structure(g: Groupoid, max_order: int = 4096) -> dict:
    """Subgroupoids, ideals and Smarandache status as a dict."""
    return json.loads(g._structure_json(max_order))


def is_simple(g: Groupoid, max_order: int = 4096) -> dict:
    return json.loads(g._simple_json(max_order))


def smarandache(g: Groupoid, identity: Optional[str] = None) -> dict:
    return json.loads(g._smarandache_json(identity))


def verify(
    only: Optional[Iterable[str]] = None,
    range: Optional[str] = None,
    seed: int = 42,
    timing: bool = False,
) -> dict:
    """Run the theorem suite; the report carries an 'asserted_ok' flag."""
    ids = list(only) if only is not None else None
    return json.loads(_core._verify_json(ids, range, seed, timing))

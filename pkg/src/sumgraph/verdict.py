from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def jsonable(x: Any) -> Any:
    """Render values for JSON: Fractions become "p/q" strings."""
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {k: jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(jsonable(v) for v in x)
    return x


@dataclass(frozen=True)
class Verdict:
    """One checked inequality ``lhs >= rhs``.

    ``branch`` names the side of the min{} that decided the verdict: the cap
    side ("complete" / "p") when the left side reached the cap, otherwise the
    smaller side. ``holds`` is False for BORDERLINE results (see details).
    """

    name: str
    lhs: Any
    rhs: Any
    branch: str
    holds: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "lhs": jsonable(self.lhs),
            "rhs": jsonable(self.rhs),
            "branch": self.branch,
            "holds": self.holds,
            "details": jsonable(self.details),
        }

"""Size guards for operations with doubly exponential worst cases.

Any operation whose output ground set would exceed the point guard, or whose
topology would exceed the open-set guard, fails fast with SizeLimitExceeded
instead of hanging.  The open-set guard can be overridden by the environment
variable TOPOLAB_LIMIT_OPENS; explicit ``set_limits`` calls (e.g. from CLI
flags) take precedence over the environment.
"""

from __future__ import annotations

import os

from .errors import SizeLimitExceeded

DEFAULT_MAX_POINTS = 1 << 20
DEFAULT_MAX_OPENS = 1 << 24

_explicit_points: int | None = None
_explicit_opens: int | None = None


def set_limits(points: int | None = None, opens: int | None = None) -> None:
    """Install explicit guards (None leaves a guard unchanged)."""
    global _explicit_points, _explicit_opens
    if points is not None:
        _explicit_points = points
    if opens is not None:
        _explicit_opens = opens


def reset_limits() -> None:
    global _explicit_points, _explicit_opens
    _explicit_points = None
    _explicit_opens = None


def max_points() -> int:
    return _explicit_points if _explicit_points is not None else DEFAULT_MAX_POINTS


def max_opens() -> int:
    if _explicit_opens is not None:
        return _explicit_opens
    env = os.environ.get("TOPOLAB_LIMIT_OPENS")
    if env:
        return int(env)
    return DEFAULT_MAX_OPENS


def guard_points(count: int, what: str = "ground set") -> None:
    if count > max_points():
        raise SizeLimitExceeded(
            f"{what} would have {count} points, over the limit {max_points()}"
        )


def guard_opens(count: int, what: str = "topology") -> None:
    if count > max_opens():
        raise SizeLimitExceeded(
            f"{what} would have more than {max_opens()} open sets"
        )

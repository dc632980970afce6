"""Runtime configuration: the enumeration bound on the level N.

The bound is read from the ``LEVELCUBICS_ENUM_BOUND`` environment variable
(default 60) unless overridden in-process with :func:`set_enumeration_bound`
or the :func:`enumeration_bound_override` context manager.
"""
import os
from contextlib import contextmanager

ENV_VAR = "LEVELCUBICS_ENUM_BOUND"
DEFAULT_BOUND = 60

_override = None


class EnumerationBoundError(ValueError):
    """Raised when a brute-force computation is requested above the bound."""

    def __init__(self, level, bound):
        super().__init__(f"level {level} exceeds the enumeration bound {bound}")
        self.level = level
        self.bound = bound


def enumeration_bound() -> int:
    if _override is not None:
        return _override
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw == "":
        return DEFAULT_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 2:
        raise ValueError(f"{ENV_VAR} must be at least 2, got {value}")
    return value


def set_enumeration_bound(value):
    """Set (or with ``None`` clear) the in-process bound override."""
    global _override
    if value is not None and value < 2:
        raise ValueError("enumeration bound must be at least 2")
    _override = value


@contextmanager
def enumeration_bound_override(value):
    global _override
    saved = _override
    set_enumeration_bound(value)
    try:
        yield
    finally:
        _override = saved


def check_bound(level):
    bound = enumeration_bound()
    if level > bound:
        raise EnumerationBoundError(level, bound)

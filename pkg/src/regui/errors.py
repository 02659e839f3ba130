"""Exception types raised by the layout engine.

Everything derives from ReguiError so callers (and the CLI) can catch
engine failures with one except clause.
"""

from __future__ import annotations


class ReguiError(Exception):
    """Base class for all engine errors."""


class DegenerateWindow(ReguiError):
    """A window dimension is zero or negative; no aspect ratio exists."""


class SpecSyntaxError(ReguiError):
    """The spec document is not well-formed (unparseable text)."""


class SchemaError(ReguiError):
    """A spec field is missing or has the wrong type.

    ``path`` points at the offending field, e.g.
    ``blocks[0].placements.classic.rect[2]``.
    """

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class InvalidBreakpoints(ReguiError):
    """Breakpoint pair is unusable (b1 <= 0 or b2 < b1)."""


class NonPositiveRatio(ReguiError):
    """An aspect ratio <= 0 was passed to the classifier."""


class UnclassifiableRatio(ReguiError):
    """No class interval contains the ratio (the rule list has a gap)."""


class SpecInvalid(ReguiError):
    """Resolution hit a defect that validation would have reported."""


class RejectedEvent(ReguiError):
    """The controller refused an event; its state is unchanged."""

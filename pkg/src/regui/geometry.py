"""Value types and pure arithmetic for normalized and pixel rectangles.

Coordinates use a bottom-left origin with y growing upward, so placement
vectors written for MATLAB-style normalized units can be used verbatim.
Renderers that want a top-left origin convert at their boundary with
``y_top = 1 - y - h`` (or the pixel equivalent).

All values stay real-valued; rounding to integer pixels is the renderer's
concern, which keeps scaling exactly linear.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DegenerateWindow


@dataclass(frozen=True, slots=True)
class NormRect:
    """Rectangle in normalized [0, 1] window coordinates.

    ``x``/``w`` are fractions of the window width, ``y``/``h`` fractions of
    the window height. Bounds are deliberately not enforced here: malformed
    specs must parse so the validator can diagnose them.
    """

    x: float
    y: float
    w: float
    h: float

    def __post_init__(self):
        for name in ("x", "y", "w", "h"):
            object.__setattr__(self, name, float(getattr(self, name)))

    def as_list(self) -> list[float]:
        return [self.x, self.y, self.w, self.h]


@dataclass(frozen=True, slots=True)
class PixelRect:
    """Rectangle in device pixels (real-valued, never rounded)."""

    x: float
    y: float
    w: float
    h: float

    def __post_init__(self):
        for name in ("x", "y", "w", "h"):
            object.__setattr__(self, name, float(getattr(self, name)))

    def as_list(self) -> list[float]:
        return [self.x, self.y, self.w, self.h]


@dataclass(frozen=True, slots=True)
class WindowState:
    """Window size in pixels plus its cached width-to-height ratio."""

    width: float
    height: float
    aspect_ratio: float = field(init=False)

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise DegenerateWindow(
                f"window {self.width}x{self.height} has a non-positive dimension"
            )
        object.__setattr__(self, "width", float(self.width))
        object.__setattr__(self, "height", float(self.height))
        object.__setattr__(self, "aspect_ratio", self.width / self.height)


def aspect_ratio(width: float, height: float) -> WindowState:
    """Build a WindowState with R = width / height.

    Raises DegenerateWindow when either dimension is <= 0.
    """
    return WindowState(width, height)


def scale_to_window(r: NormRect, w: WindowState) -> PixelRect:
    """Map a normalized rectangle onto a window, componentwise."""
    return PixelRect(r.x * w.width, r.y * w.height, r.w * w.width, r.h * w.height)


def mirror_x(r: NormRect) -> NormRect:
    """Reflect a rectangle across the window's vertical center line.

    Involutive; y, w and h are untouched.
    """
    return NormRect(1.0 - r.x - r.w, r.y, r.w, r.h)


def intersects(a: NormRect, b: NormRect) -> bool:
    """True iff the open interiors overlap; shared edges do not count."""
    return (
        max(a.x, b.x) < min(a.x + a.w, b.x + b.w)
        and max(a.y, b.y) < min(a.y + a.h, b.y + b.h)
    )

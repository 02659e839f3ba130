"""Stateful resize-event protocol: reflow vs rescale vs anchor change.

The guard works on the classified layout class: an event produces a
``reflow`` exactly when the active class changed (or no layout exists
yet), a ``rescale`` when only the pixel dimensions changed, and ``none``
when nothing changed. Window moves can flip the screen anchor, which
re-resolves mirrored blocks without touching the class.

A controller state is an immutable value; process_event returns the next
state. One logical producer must deliver events in order; distinct states
are fully independent.

Trace files are JSON lines, one event per line:

    {"kind": "resize", "w": 800, "h": 600}
    {"kind": "move", "x": 0, "y": 0, "screen_w": 1920, "screen_h": 1080}
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any, Iterable, Iterator

from .classify import ClassId, classify
from .errors import RejectedEvent
from .geometry import WindowState
from .resolve import ResolvedLayout, layout_to_doc, resolve
from .spec import LayoutSpec


@dataclass(frozen=True, slots=True)
class ResizeEvent:
    width: float
    height: float


@dataclass(frozen=True, slots=True)
class MoveEvent:
    x: float
    y: float
    screen_width: float
    screen_height: float


UiEvent = ResizeEvent | MoveEvent


@dataclass(frozen=True, slots=True)
class UpdateAction:
    """What the renderer must do for one event.

    kind is one of reflow | rescale | anchor_change | none | rejected;
    layout is present for the first three, reason only for rejected.
    """

    kind: str
    layout: ResolvedLayout | None = None
    reason: str | None = None


@dataclass(frozen=True, slots=True)
class ControllerState:
    spec: LayoutSpec
    last_window: WindowState | None = None
    last_class: ClassId | None = None
    last_anchor: str = "none"


def initial_state(spec: LayoutSpec) -> ControllerState:
    return ControllerState(spec=spec)


def screen_anchor(window_x: float, window_w: float, screen_width: float) -> str:
    """Which horizontal third of the screen holds the window's center.

    The middle band keeps small moves from toggling mirroring back and
    forth. screen_width must be positive.
    """
    if screen_width <= 0:
        raise ValueError(f"screen_width must be positive, got {screen_width!r}")
    center = window_x + window_w / 2.0
    if center < screen_width / 3.0:
        return "left"
    if center > 2.0 * screen_width / 3.0:
        return "right"
    return "center"


def process_event(state: ControllerState, ev: UiEvent) -> tuple[ControllerState, UpdateAction]:
    """Advance the controller by one event.

    Raises RejectedEvent (leaving the state unchanged) for resize events
    with non-positive dimensions and move events on a degenerate screen.
    """
    if isinstance(ev, ResizeEvent):
        if ev.width <= 0 or ev.height <= 0:
            raise RejectedEvent(
                f"degenerate window {ev.width}x{ev.height}: dimensions must be positive"
            )
        window = WindowState(ev.width, ev.height)
        new_class = classify(window.aspect_ratio, state.spec.classes)
        next_state = replace(state, last_window=window, last_class=new_class)
        if state.last_class is None or new_class.name != state.last_class.name:
            layout = resolve(state.spec, window, state.last_anchor)
            return next_state, UpdateAction("reflow", layout)
        if (window.width, window.height) != (state.last_window.width, state.last_window.height):
            layout = resolve(state.spec, window, state.last_anchor)
            return next_state, UpdateAction("rescale", layout)
        return next_state, UpdateAction("none")

    if isinstance(ev, MoveEvent):
        if ev.screen_width <= 0 or ev.screen_height <= 0:
            raise RejectedEvent(
                f"degenerate screen {ev.screen_width}x{ev.screen_height}:"
                " dimensions must be positive"
            )
        if state.last_window is None:
            # No window size yet, so no center to anchor by and nothing to lay out.
            return state, UpdateAction("none")
        anchor = screen_anchor(ev.x, state.last_window.width, ev.screen_width)
        if anchor == state.last_anchor:
            return state, UpdateAction("none")
        next_state = replace(state, last_anchor=anchor)
        layout = resolve(state.spec, state.last_window, anchor)
        return next_state, UpdateAction("anchor_change", layout)

    raise RejectedEvent(f"unknown event type {type(ev).__name__}")


def replay_events(spec: LayoutSpec, events: Iterable[UiEvent]) -> Iterator[UpdateAction]:
    """Fold process_event over a trace, yielding one action per event.

    Rejected events become actions tagged ``rejected``; the fold continues
    with the state unchanged.
    """
    state = initial_state(spec)
    for ev in events:
        try:
            state, action = process_event(state, ev)
        except RejectedEvent as exc:
            action = UpdateAction("rejected", reason=str(exc))
        yield action


def replay_trace(spec: LayoutSpec, events: Iterable[UiEvent]) -> list[UpdateAction]:
    return list(replay_events(spec, events))


# --- trace (de)serialization ---------------------------------------------------


def parse_event(obj: dict[str, Any]) -> UiEvent:
    """Decode one trace line object into an event.

    Raises RejectedEvent for records that do not name a known event shape.
    """
    kind = obj.get("kind")
    try:
        if kind == "resize":
            return ResizeEvent(float(obj["w"]), float(obj["h"]))
        if kind == "move":
            return MoveEvent(
                float(obj["x"]),
                float(obj["y"]),
                float(obj["screen_w"]),
                float(obj["screen_h"]),
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise RejectedEvent(f"malformed {kind} event: {exc}") from exc
    raise RejectedEvent(f"unknown event kind {kind!r}")


def event_to_obj(ev: UiEvent) -> dict[str, Any]:
    if isinstance(ev, ResizeEvent):
        return {"kind": "resize", "w": ev.width, "h": ev.height}
    return {
        "kind": "move",
        "x": ev.x,
        "y": ev.y,
        "screen_w": ev.screen_width,
        "screen_h": ev.screen_height,
    }


def action_to_doc(action: UpdateAction) -> dict[str, Any]:
    """One trace-output line: {"action": ..., "class": ..., "layout": {...}}."""
    if action.kind == "rejected":
        return {"action": "rejected", "reason": action.reason}
    if action.layout is None:
        return {"action": action.kind}
    return {
        "action": action.kind,
        "class": action.layout.class_id.name,
        "layout": layout_to_doc(action.layout),
    }

"""regui: aspect-ratio-driven responsive layout engine.

Classify a window by its width-to-height ratio against declared breakpoint
intervals, resolve per-class normalized placements into pixel geometry,
and drive a resize-event protocol that tells reflows (class changed) apart
from plain rescales (same class, new size).
"""

from .classify import ClassId, PartitionIssue, classify, validate_partition
from .controller import (
    ControllerState,
    MoveEvent,
    ResizeEvent,
    UiEvent,
    UpdateAction,
    action_to_doc,
    event_to_obj,
    initial_state,
    parse_event,
    process_event,
    replay_events,
    replay_trace,
    screen_anchor,
)
from .errors import (
    DegenerateWindow,
    InvalidBreakpoints,
    NonPositiveRatio,
    RejectedEvent,
    ReguiError,
    SchemaError,
    SpecInvalid,
    SpecSyntaxError,
    UnclassifiableRatio,
)
from .geometry import (
    NormRect,
    PixelRect,
    WindowState,
    aspect_ratio,
    intersects,
    mirror_x,
    scale_to_window,
)
from .resolve import ResolvedBlock, ResolvedLayout, layout_to_doc, resolve, resolve_font
from .spec import (
    Block,
    ClassRule,
    LayoutSpec,
    Placement,
    parse_spec,
    serialize_spec,
    three_class_rules,
)
from .svg import render_svg
from .validate import Diagnostic, diagnostic_to_doc, has_errors, validate_spec

__version__ = "0.1.0"

__all__ = [
    "Block",
    "ClassId",
    "ClassRule",
    "ControllerState",
    "DegenerateWindow",
    "Diagnostic",
    "InvalidBreakpoints",
    "LayoutSpec",
    "MoveEvent",
    "NonPositiveRatio",
    "NormRect",
    "PartitionIssue",
    "PixelRect",
    "Placement",
    "RejectedEvent",
    "ReguiError",
    "ResizeEvent",
    "ResolvedBlock",
    "ResolvedLayout",
    "SchemaError",
    "SpecInvalid",
    "SpecSyntaxError",
    "UiEvent",
    "UnclassifiableRatio",
    "UpdateAction",
    "WindowState",
    "action_to_doc",
    "aspect_ratio",
    "classify",
    "diagnostic_to_doc",
    "event_to_obj",
    "has_errors",
    "initial_state",
    "intersects",
    "layout_to_doc",
    "mirror_x",
    "parse_event",
    "parse_spec",
    "process_event",
    "render_svg",
    "replay_events",
    "replay_trace",
    "resolve",
    "resolve_font",
    "scale_to_window",
    "screen_anchor",
    "serialize_spec",
    "three_class_rules",
    "validate_partition",
    "validate_spec",
]

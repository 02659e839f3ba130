"""Compute the full pixel layout for one window state.

The resolver is a pure function: classify the window's aspect ratio, then
map every block's placement for that class into pixels. Blocks without a
placement in the active class are still emitted (hidden, zero rect) so
renderers can animate show/hide without diffing block sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .classify import ClassId, classify
from .errors import SpecInvalid
from .geometry import NormRect, PixelRect, WindowState, mirror_x, scale_to_window
from .spec import LayoutSpec

_ZERO_RECT = PixelRect(0.0, 0.0, 0.0, 0.0)


@dataclass(frozen=True, slots=True)
class ResolvedBlock:
    block_id: str
    rect: PixelRect
    visible: bool
    class_name: str
    font_px: float | None = None
    style: dict[str, str] | None = None


@dataclass(frozen=True, slots=True)
class ResolvedLayout:
    window: WindowState
    class_id: ClassId
    blocks: tuple[ResolvedBlock, ...]


def resolve_font(norm_font: float, block_rect: PixelRect) -> float:
    """Pixel font size for a font declared as a fraction of block height.

    Deriving from the block's own height (not the window's) makes text
    scale with its block automatically.
    """
    return norm_font * block_rect.h


def resolve(spec: LayoutSpec, window: WindowState, anchor: str = "none") -> ResolvedLayout:
    """Resolve every block of ``spec`` against ``window``.

    ``anchor`` is the window's horizontal screen position (none/left/right);
    a placement is mirrored only when its mirror_on_anchor equals the given
    anchor, and anchor "none" disables mirroring entirely.

    Raises SpecInvalid when a placement references an undeclared class
    (validation was skipped), and propagates classifier errors.
    """
    declared = set(spec.class_names())
    active = classify(window.aspect_ratio, spec.classes)
    blocks: list[ResolvedBlock] = []
    for block in spec.blocks:
        for cls in block.placements:
            if cls not in declared:
                raise SpecInvalid(
                    f"block {block.id!r} has a placement for undeclared class {cls!r}"
                )
        placement = block.placements.get(active.name)
        if placement is None:
            blocks.append(ResolvedBlock(block.id, _ZERO_RECT, False, active.name))
            continue
        norm: NormRect = placement.rect
        if anchor != "none" and placement.mirror_on_anchor == anchor:
            norm = mirror_x(norm)
        rect = scale_to_window(norm, window)
        blocks.append(
            ResolvedBlock(
                block_id=block.id,
                rect=rect,
                visible=placement.visible,
                class_name=active.name,
                font_px=resolve_font(placement.font, rect) if placement.font is not None else None,
                style=dict(placement.style) if placement.style is not None else None,
            )
        )
    return ResolvedLayout(window=window, class_id=active, blocks=tuple(blocks))


def layout_to_doc(layout: ResolvedLayout) -> dict[str, Any]:
    """Canonical document form: {window:{w,h,r}, class, blocks:[...]}."""
    blocks = []
    for b in layout.blocks:
        obj: dict[str, Any] = {
            "id": b.block_id,
            "rect": b.rect.as_list(),
            "visible": b.visible,
        }
        if b.font_px is not None:
            obj["font_px"] = b.font_px
        if b.style is not None:
            obj["style"] = dict(b.style)
        blocks.append(obj)
    return {
        "window": {
            "w": layout.window.width,
            "h": layout.window.height,
            "r": layout.window.aspect_ratio,
        },
        "class": layout.class_id.name,
        "blocks": blocks,
    }

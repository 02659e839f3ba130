"""Render a resolved layout as an SVG document.

The viewBox spans the window in pixels; the engine's bottom-left origin is
converted to SVG's top-left here (y_top = window_h - y - h). Hidden blocks
are not rendered at all, keeping the output readable as a golden file.
"""

from __future__ import annotations

from xml.sax.saxutils import quoteattr

from .resolve import ResolvedLayout


def _num(value: float) -> str:
    # Same shortest-round-trip text as the JSON encoder, so goldens agree.
    return repr(value)


def render_svg(layout: ResolvedLayout) -> str:
    w = layout.window.width
    h = layout.window.height
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg"'
        f' viewBox="0 0 {_num(w)} {_num(h)}"'
        f' width={quoteattr(_num(w))} height={quoteattr(_num(h))}>'
    ]
    for block in layout.blocks:
        if not block.visible:
            continue
        y_top = h - block.rect.y - block.rect.h
        lines.append(
            f'  <rect id={quoteattr(block.block_id)}'
            f' x="{_num(block.rect.x)}" y="{_num(y_top)}"'
            f' width="{_num(block.rect.w)}" height="{_num(block.rect.h)}"'
            ' fill="none" stroke="#000"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

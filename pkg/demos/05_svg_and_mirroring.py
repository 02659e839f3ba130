"""
SVG export and anchor mirroring
===============================

The SVG exporter is the one place the engine's bottom-left origin is
converted for a top-left consumer. Anchor mirroring demonstrates the
left/right block swap: blocks that opt in via mirror_on_anchor flip across
the window's vertical center line when the window sits at that screen edge.
"""

from pathlib import Path

from regui import WindowState, parse_spec, render_svg, resolve

ROOT = Path(__file__).resolve().parents[1]
spec = parse_spec((ROOT / "fixtures" / "teachlcge.regui.json").read_text())
window = WindowState(1024, 768)

plain = resolve(spec, window)                    # no anchor: nothing mirrors
mirrored = resolve(spec, window, anchor="right")  # content blocks swap sides

print("panel0 (the function panel, normally on the left):")
print("  anchor none :", [round(v, 2) for v in next(
    b for b in plain.blocks if b.block_id == "panel0").rect.as_list()])
print("  anchor right:", [round(v, 2) for v in next(
    b for b in mirrored.blocks if b.block_id == "panel0").rect.as_list()])

# title/grsurf/white never opted in, so the top bar stays put either way.
title_plain = next(b for b in plain.blocks if b.block_id == "title").rect
title_mirrored = next(b for b in mirrored.blocks if b.block_id == "title").rect
print("title unchanged:", title_plain == title_mirrored)

for name, layout in (("layout_plain.svg", plain), ("layout_mirrored.svg", mirrored)):
    out = Path(__file__).with_name(name)
    out.write_text(render_svg(layout))
    print(f"wrote {out}")

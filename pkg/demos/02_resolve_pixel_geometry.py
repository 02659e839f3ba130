"""
Resolving normalized placements into pixels
===========================================

The bundled TeachLCGE spec places each block with a normalized
[x, y, w, h] vector per class. Resolving multiplies those fractions by the
window size; nothing else happens, which is why zooming the window scales
the whole layout proportionally.
"""

from pathlib import Path

from regui import WindowState, parse_spec, resolve

ROOT = Path(__file__).resolve().parents[1]
spec = parse_spec((ROOT / "fixtures" / "teachlcge.regui.json").read_text())

# The same spec, three very different windows.
windows = {"classic": (1024, 768), "portrait": (600, 1000), "landscape": (1600, 800)}

for label, (w, h) in windows.items():
    layout = resolve(spec, WindowState(w, h))
    print(f"\n{w}x{h}  (R = {w / h:.3f})  ->  class {layout.class_id.name!r}")
    for block in layout.blocks:
        if not block.visible:
            print(f"  {block.block_id:<12} hidden in this class")
            continue
        x, y, bw, bh = block.rect.as_list()
        font = f"  font {block.font_px:.1f}px" if block.font_px is not None else ""
        print(f"  {block.block_id:<12} x={x:7.1f} y={y:7.1f} w={bw:7.1f} h={bh:7.1f}{font}")

# Optional: draw the three layouts side by side. matplotlib is only needed
# for this part.
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.patches import Rectangle
except ImportError:
    print("\nmatplotlib not available; skipping the rendered figure")
else:
    fig, axes = plt.subplots(1, 3, figsize=(15, 5))
    for ax, (label, (w, h)) in zip(axes, windows.items()):
        layout = resolve(spec, WindowState(w, h))
        for block in layout.blocks:
            if not block.visible:
                continue
            r = block.rect
            ax.add_patch(Rectangle((r.x, r.y), r.w, r.h, fill=False, edgecolor="tab:blue"))
            ax.text(r.x + r.w / 2, r.y + r.h / 2, block.block_id,
                    ha="center", va="center", fontsize=7)
        ax.set_xlim(0, w)
        ax.set_ylim(0, h)  # engine y is bottom-up, same as matplotlib's default
        ax.set_aspect("equal")
        ax.set_title(f"{label}  {w}x{h}")
    out = Path(__file__).with_name("layouts.png")
    fig.savefig(out, dpi=110, bbox_inches="tight")
    print(f"\nwrote {out}")

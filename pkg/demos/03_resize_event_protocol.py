"""
The resize-event protocol: reflow vs rescale
============================================

A renderer feeding window events through the controller gets told, per
event, whether anything must change and how much: a reflow rearranges
blocks (the ratio crossed a breakpoint), a rescale only stretches pixel
geometry, and identical dimensions need no work at all.
"""

from pathlib import Path

from regui import MoveEvent, ResizeEvent, initial_state, parse_spec, process_event

ROOT = Path(__file__).resolve().parents[1]
spec = parse_spec((ROOT / "fixtures" / "teachlcge.regui.json").read_text())

# A user drags the window narrower and narrower, then drops it at the left
# edge of a 1920-wide screen.
events = [
    ResizeEvent(1024, 768),   # first event: initial layout
    ResizeEvent(1000, 768),   # still classic: rescale
    ResizeEvent(900, 768),    # still classic: rescale
    ResizeEvent(560, 768),    # R = 0.729 < 0.75: portrait reflow
    ResizeEvent(560, 768),    # same size again: nothing to do
    MoveEvent(0, 0, 1920, 1080),     # window center enters the left third
    MoveEvent(1500, 0, 1920, 1080),  # ...and then the right third
]

state = initial_state(spec)
print(f"{'event':<34} {'action':<14} class")
for ev in events:
    state, action = process_event(state, ev)
    if isinstance(ev, ResizeEvent):
        desc = f"resize {ev.width:.0f}x{ev.height:.0f} (R={ev.width / ev.height:.3f})"
    else:
        desc = f"move to x={ev.x:.0f}"
    cls = action.layout.class_id.name if action.layout else "-"
    print(f"{desc:<34} {action.kind:<14} {cls}")

# The guard means a renderer can skip all repositioning logic on rescale
# actions and only rebuild widget arrangements on reflow.
print("\nfinal anchor:", state.last_anchor)
panel0 = next(b for b in action.layout.blocks if b.block_id == "panel0")
print("panel0 with the window anchored right:", [round(v, 1) for v in panel0.rect.as_list()])

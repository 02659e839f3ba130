"""
Spec validation and linting
===========================

Parsing only checks structure. Semantic problems -- interval gaps,
out-of-bounds rects, dangling class references -- come from the validator,
as ordered diagnostics with stable codes.
"""

import json
from pathlib import Path

from regui import parse_spec, validate_spec

ROOT = Path(__file__).resolve().parents[1]
fixture_text = (ROOT / "fixtures" / "teachlcge.regui.json").read_text()

# The bundled spec is clean: no errors. It does carry warnings -- the
# original title-bar elements genuinely overlap (layered labels over a
# backdrop), which is exactly why overlap is a warning and not an error --
# plus one info note for the block that only exists in two classes.
for d in validate_spec(parse_spec(fixture_text)):
    print(f"{d.severity:<8} {d.code:<18} {d.subject:<28} {d.message}")

# Now break the spec three ways and watch the validator name each defect.
doc = json.loads(fixture_text)
doc["classes"][1]["lo_inclusive"] = False          # 0.75 no longer covered: gap
doc["blocks"][0]["placements"]["classic"]["rect"] = [0.9, 0.9, 0.38, 0.175]  # leaves the window
doc["blocks"][1]["placements"]["ultrawide"] = {"rect": [0, 0, 1, 1]}         # undeclared class

print("\nafter corrupting the document:")
for d in validate_spec(parse_spec(json.dumps(doc))):
    if d.severity == "error":
        print(f"{d.severity:<8} {d.code:<18} {d.subject:<28} {d.message}")

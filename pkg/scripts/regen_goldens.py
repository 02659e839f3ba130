#!/usr/bin/env python3
"""Rewrite every checked-in golden file from the current engine output.

Run from anywhere inside the checkout:

    python scripts/regen_goldens.py

Inspect the diff before committing; goldens changing without an intended
behavior change means the engine drifted.
"""

from regui.goldens import write_goldens

if __name__ == "__main__":
    for path in write_goldens():
        print(f"wrote {path}")

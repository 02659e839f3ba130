"""Canonical JSON text forms shared by the CLI and the golden files.

Two encodings only: a pretty document (resolve output, diagnostics) and a
compact single line (classify output, trace action streams). Both are
byte-stable for equal inputs, which is what golden tests pin down.
"""

from __future__ import annotations

import json
from typing import Any


def dumps_doc(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def dumps_line(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False) + "\n"

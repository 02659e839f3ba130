"""Layout spec data model and its JSON file format.

A spec document is a UTF-8 JSON object:

    {
      "name": "...",
      "notes": "...",                      # optional free text, ignored by the engine
      "classes": [
        {"name": "classic", "lo": 0.75, "lo_inclusive": true,
         "hi": 1.5, "hi_inclusive": true},                    # "hi" may be "inf"
        ...
      ],
      "blocks": [
        {"id": "panel0", "label": "Function",
         "placements": {
           "classic": {"rect": [0.01, 0.75, 0.38, 0.175],
                       "visible": true,                        # optional, default true
                       "font": 0.5,                            # optional, fraction of block height
                       "style": {"fill": "#fff"},              # optional, opaque strings
                       "mirror_on_anchor": "right"}            # optional: none | left | right
         }},
        ...
      ]
    }

A block may omit the placement for a class; that means "hidden in that
class". Parsing checks structure only (types, required fields); semantic
rules such as interval coverage or rect bounds live in the validator.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

from .errors import InvalidBreakpoints, SchemaError, SpecSyntaxError
from .geometry import NormRect

ANCHOR_VALUES = ("none", "left", "right")


@dataclass(frozen=True, slots=True)
class ClassRule:
    """A named aspect-ratio interval with explicit endpoint inclusivity."""

    name: str
    lo: float
    lo_inclusive: bool
    hi: float  # math.inf for an unbounded interval
    hi_inclusive: bool

    def contains(self, ratio: float) -> bool:
        above = ratio > self.lo or (self.lo_inclusive and ratio == self.lo)
        below = ratio < self.hi or (self.hi_inclusive and ratio == self.hi)
        return above and below

    def is_empty(self) -> bool:
        """True when no ratio can satisfy the interval."""
        if self.lo > self.hi:
            return True
        return self.lo == self.hi and not (self.lo_inclusive and self.hi_inclusive)

    def describe(self) -> str:
        left = "[" if self.lo_inclusive else "("
        right = "]" if self.hi_inclusive else ")"
        hi = "inf" if math.isinf(self.hi) else repr(self.hi)
        return f"{left}{self.lo!r}, {hi}{right}"


@dataclass(frozen=True, slots=True)
class Placement:
    """Where (and how) one block appears in one layout class."""

    rect: NormRect
    visible: bool = True
    font: float | None = None  # fraction of the block's own pixel height, (0, 1]
    style: dict[str, str] | None = None  # opaque; passed through unmodified
    mirror_on_anchor: str = "none"


@dataclass(frozen=True, slots=True)
class Block:
    """A logical block: one id, one placement per layout class it appears in."""

    id: str
    placements: dict[str, Placement]
    label: str | None = None


@dataclass(frozen=True, slots=True)
class LayoutSpec:
    name: str
    classes: tuple[ClassRule, ...]
    blocks: tuple[Block, ...]
    notes: str | None = None

    def class_names(self) -> tuple[str, ...]:
        return tuple(rule.name for rule in self.classes)


def three_class_rules(b1: float, b2: float) -> tuple[ClassRule, ClassRule, ClassRule]:
    """The two-breakpoint scheme: both breakpoints belong to the middle class.

    Returns portrait (0, b1), classic [b1, b2], landscape (b2, inf). With
    b1 == b2 the middle class degenerates to a single point, which is legal.

    Raises InvalidBreakpoints when b1 <= 0 or b2 < b1.
    """
    if b1 <= 0 or b2 < b1:
        raise InvalidBreakpoints(f"need 0 < b1 <= b2, got b1={b1!r}, b2={b2!r}")
    return (
        ClassRule("portrait", 0.0, False, float(b1), False),
        ClassRule("classic", float(b1), True, float(b2), True),
        ClassRule("landscape", float(b2), False, math.inf, False),
    )


# --- parsing -----------------------------------------------------------------


def _expect_object(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        raise SchemaError(path, f"expected an object, got {type(value).__name__}")
    return value


def _expect_string(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise SchemaError(path, f"expected a string, got {type(value).__name__}")
    return value


def _expect_bool(value: Any, path: str) -> bool:
    if not isinstance(value, bool):
        raise SchemaError(path, f"expected a boolean, got {type(value).__name__}")
    return value


def _expect_number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(path, f"expected a number, got {type(value).__name__}")
    return float(value)


def _expect_array(value: Any, path: str) -> list:
    if not isinstance(value, list):
        raise SchemaError(path, f"expected an array, got {type(value).__name__}")
    return value


def _reject_unknown(obj: dict, allowed: tuple[str, ...], path: str) -> None:
    for key in obj:
        if key not in allowed:
            raise SchemaError(f"{path}.{key}" if path else key, "unknown field")


def _parse_class(obj: Any, path: str) -> ClassRule:
    obj = _expect_object(obj, path)
    _reject_unknown(obj, ("name", "lo", "lo_inclusive", "hi", "hi_inclusive"), path)
    for key in ("name", "lo", "lo_inclusive", "hi", "hi_inclusive"):
        if key not in obj:
            raise SchemaError(f"{path}.{key}", "missing required field")
    hi_raw = obj["hi"]
    if hi_raw == "inf":
        hi = math.inf
    else:
        hi = _expect_number(hi_raw, f"{path}.hi")
    return ClassRule(
        name=_expect_string(obj["name"], f"{path}.name"),
        lo=_expect_number(obj["lo"], f"{path}.lo"),
        lo_inclusive=_expect_bool(obj["lo_inclusive"], f"{path}.lo_inclusive"),
        hi=hi,
        hi_inclusive=_expect_bool(obj["hi_inclusive"], f"{path}.hi_inclusive"),
    )


def _parse_rect(value: Any, path: str) -> NormRect:
    arr = _expect_array(value, path)
    if len(arr) != 4:
        raise SchemaError(path, f"expected [x, y, w, h], got {len(arr)} elements")
    x, y, w, h = (_expect_number(arr[i], f"{path}[{i}]") for i in range(4))
    return NormRect(x, y, w, h)


def _parse_style(value: Any, path: str) -> dict[str, str]:
    obj = _expect_object(value, path)
    return {key: _expect_string(val, f"{path}.{key}") for key, val in obj.items()}


def _parse_placement(obj: Any, path: str) -> Placement:
    obj = _expect_object(obj, path)
    _reject_unknown(obj, ("rect", "visible", "font", "style", "mirror_on_anchor"), path)
    if "rect" not in obj:
        raise SchemaError(f"{path}.rect", "missing required field")
    mirror = "none"
    if "mirror_on_anchor" in obj:
        mirror = _expect_string(obj["mirror_on_anchor"], f"{path}.mirror_on_anchor")
        if mirror not in ANCHOR_VALUES:
            raise SchemaError(
                f"{path}.mirror_on_anchor",
                f"expected one of {ANCHOR_VALUES}, got {mirror!r}",
            )
    return Placement(
        rect=_parse_rect(obj["rect"], f"{path}.rect"),
        visible=_expect_bool(obj["visible"], f"{path}.visible") if "visible" in obj else True,
        font=_expect_number(obj["font"], f"{path}.font") if "font" in obj else None,
        style=_parse_style(obj["style"], f"{path}.style") if "style" in obj else None,
        mirror_on_anchor=mirror,
    )


def _parse_block(obj: Any, path: str) -> Block:
    obj = _expect_object(obj, path)
    _reject_unknown(obj, ("id", "label", "placements"), path)
    for key in ("id", "placements"):
        if key not in obj:
            raise SchemaError(f"{path}.{key}", "missing required field")
    placements_obj = _expect_object(obj["placements"], f"{path}.placements")
    placements = {
        cls: _parse_placement(p, f"{path}.placements.{cls}")
        for cls, p in placements_obj.items()
    }
    return Block(
        id=_expect_string(obj["id"], f"{path}.id"),
        placements=placements,
        label=_expect_string(obj["label"], f"{path}.label") if "label" in obj else None,
    )


def parse_spec(text: str) -> LayoutSpec:
    """Parse a spec document.

    Raises SpecSyntaxError for unparseable text and SchemaError (with a
    field path) for structural problems. Semantic validation is a separate
    step; see validate.validate_spec.
    """
    try:
        root = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecSyntaxError(
            f"malformed document: {exc.msg} (line {exc.lineno}, column {exc.colno})"
        ) from exc
    root = _expect_object(root, "(root)")
    _reject_unknown(root, ("name", "notes", "classes", "blocks"), "")
    missing = [key for key in ("name", "classes", "blocks") if key not in root]
    if missing:
        raise SchemaError("(root)", f"missing required fields: {', '.join(missing)}")
    classes = tuple(
        _parse_class(c, f"classes[{i}]")
        for i, c in enumerate(_expect_array(root["classes"], "classes"))
    )
    blocks = tuple(
        _parse_block(b, f"blocks[{i}]")
        for i, b in enumerate(_expect_array(root["blocks"], "blocks"))
    )
    return LayoutSpec(
        name=_expect_string(root["name"], "name"),
        classes=classes,
        blocks=blocks,
        notes=_expect_string(root["notes"], "notes") if "notes" in root else None,
    )


# --- serialization -----------------------------------------------------------


def _class_to_obj(rule: ClassRule) -> dict:
    return {
        "name": rule.name,
        "lo": rule.lo,
        "lo_inclusive": rule.lo_inclusive,
        "hi": "inf" if math.isinf(rule.hi) else rule.hi,
        "hi_inclusive": rule.hi_inclusive,
    }


def _placement_to_obj(p: Placement) -> dict:
    obj: dict[str, Any] = {"rect": p.rect.as_list()}
    if not p.visible:
        obj["visible"] = False
    if p.font is not None:
        obj["font"] = p.font
    if p.style is not None:
        obj["style"] = dict(p.style)  # key order preserved
    if p.mirror_on_anchor != "none":
        obj["mirror_on_anchor"] = p.mirror_on_anchor
    return obj


def _block_to_obj(block: Block) -> dict:
    obj: dict[str, Any] = {"id": block.id}
    if block.label is not None:
        obj["label"] = block.label
    obj["placements"] = {
        cls: _placement_to_obj(p) for cls, p in block.placements.items()
    }
    return obj


def serialize_spec(spec: LayoutSpec) -> str:
    """Render a spec back to document text.

    Round-trips: parse_spec(serialize_spec(s)) == s, and the serialized
    form is byte-stable (optional fields at default value are omitted,
    key order of style maps is preserved).
    """
    root: dict[str, Any] = {"name": spec.name}
    if spec.notes is not None:
        root["notes"] = spec.notes
    root["classes"] = [_class_to_obj(rule) for rule in spec.classes]
    root["blocks"] = [_block_to_obj(block) for block in spec.blocks]
    return json.dumps(root, ensure_ascii=False, indent=2) + "\n"

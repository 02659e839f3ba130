"""Semantic validation and linting of layout specs.

Diagnostic codes (the closed set):

    error   PARTITION_GAP       some ratio in (0, inf) matches no class
    error   PARTITION_OVERLAP   some ratio matches more than one class
    error   INVALID_INTERVAL    a class interval is empty or has a negative bound
    error   DUPLICATE_CLASS     two classes share a name
    error   DUPLICATE_BLOCK     two blocks share an id
    error   DANGLING_CLASS      a placement references an undeclared class
    error   RECT_OUT_OF_BOUNDS  a placement rect leaves the unit square
    error   INVALID_FONT        a font fraction outside (0, 1]
    warning BLOCK_OVERLAP       two visible blocks overlap within one class
    info    HIDDEN_IN_CLASS     a block has no placement for some class

A spec with no error-severity diagnostics is valid: resolution can never
fail on it for any positive ratio. Overlap is only a warning because
intentional layering (a background panel under controls) is legitimate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .classify import validate_partition
from .geometry import intersects
from .spec import LayoutSpec

_SEVERITY_RANK = {"error": 0, "warning": 1, "info": 2}


@dataclass(frozen=True, slots=True)
class Diagnostic:
    severity: str  # error | warning | info
    code: str
    message: str
    subject: str  # block id and/or class name, e.g. "white@classic"


def diagnostic_to_doc(diag: Diagnostic) -> dict[str, Any]:
    return {
        "severity": diag.severity,
        "code": diag.code,
        "message": diag.message,
        "subject": diag.subject,
    }


def has_errors(diagnostics: list[Diagnostic]) -> bool:
    return any(d.severity == "error" for d in diagnostics)


def validate_spec(spec: LayoutSpec) -> list[Diagnostic]:
    """Run every semantic check; diagnostics come back sorted by
    (severity, code, subject) so output is order-stable."""
    diags: list[Diagnostic] = []
    declared = spec.class_names()

    seen_classes: set[str] = set()
    for rule in spec.classes:
        if rule.name in seen_classes:
            diags.append(
                Diagnostic("error", "DUPLICATE_CLASS",
                           f"class name {rule.name!r} declared more than once", rule.name)
            )
        seen_classes.add(rule.name)

    for issue in validate_partition(spec.classes):
        code = {"gap": "PARTITION_GAP", "overlap": "PARTITION_OVERLAP",
                "invalid": "INVALID_INTERVAL"}[issue.kind]
        diags.append(Diagnostic("error", code, issue.detail, "+".join(issue.classes)))

    seen_blocks: set[str] = set()
    for block in spec.blocks:
        if block.id in seen_blocks:
            diags.append(
                Diagnostic("error", "DUPLICATE_BLOCK",
                           f"block id {block.id!r} declared more than once", block.id)
            )
        seen_blocks.add(block.id)

        for cls, placement in block.placements.items():
            subject = f"{block.id}@{cls}"
            if cls not in declared:
                diags.append(
                    Diagnostic("error", "DANGLING_CLASS",
                               f"block {block.id!r} places into undeclared class {cls!r}",
                               subject)
                )
            r = placement.rect
            if r.x < 0 or r.y < 0 or r.w < 0 or r.h < 0 or r.x + r.w > 1 or r.y + r.h > 1:
                diags.append(
                    Diagnostic("error", "RECT_OUT_OF_BOUNDS",
                               f"rect {r.as_list()} leaves the unit square", subject)
                )
            if placement.font is not None and not 0 < placement.font <= 1:
                diags.append(
                    Diagnostic("error", "INVALID_FONT",
                               f"font fraction {placement.font!r} outside (0, 1]", subject)
                )

        for cls in declared:
            if cls not in block.placements:
                diags.append(
                    Diagnostic("info", "HIDDEN_IN_CLASS",
                               f"block {block.id!r} has no placement for class {cls!r}"
                               " and is hidden there",
                               f"{block.id}@{cls}")
                )

    for cls in declared:
        present = [
            (block.id, block.placements[cls])
            for block in spec.blocks
            if cls in block.placements and block.placements[cls].visible
        ]
        for i, (id_a, a) in enumerate(present):
            for id_b, b in present[i + 1 :]:
                if intersects(a.rect, b.rect):
                    first, second = sorted((id_a, id_b))
                    diags.append(
                        Diagnostic("warning", "BLOCK_OVERLAP",
                                   f"blocks {first!r} and {second!r} overlap in class {cls!r}",
                                   f"{first}+{second}@{cls}")
                    )

    diags.sort(key=lambda d: (_SEVERITY_RANK[d.severity], d.code, d.subject, d.message))
    return diags

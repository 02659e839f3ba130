"""Map a window's aspect ratio to exactly one layout class.

Boundary comparisons are exact floating-point comparisons, no epsilon: a
ratio sitting exactly on a breakpoint classifies per the declared endpoint
inclusivity. That keeps classification deterministic and testable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import NonPositiveRatio, UnclassifiableRatio
from .spec import ClassRule


@dataclass(frozen=True, slots=True)
class ClassId:
    """The selected class: position in the rule list plus its stable name."""

    index: int
    name: str


@dataclass(frozen=True, slots=True)
class PartitionIssue:
    """One defect found in a class-rule list: a gap, an overlap, or an
    interval that cannot hold any ratio."""

    kind: str  # "gap" | "overlap" | "invalid"
    lo: float
    hi: float
    classes: tuple[str, ...]
    detail: str


def classify(ratio: float, classes: Sequence[ClassRule]) -> ClassId:
    """Return the class whose interval contains ``ratio``.

    Intended for validated rule lists, where the match is unique. On an
    unvalidated list with overlaps the first match in list order wins.

    Raises NonPositiveRatio for ratio <= 0 and UnclassifiableRatio when no
    interval contains the ratio (only reachable when validation was skipped).
    """
    if ratio <= 0:
        raise NonPositiveRatio(f"aspect ratio must be positive, got {ratio!r}")
    for index, rule in enumerate(classes):
        if rule.contains(ratio):
            return ClassId(index, rule.name)
    raise UnclassifiableRatio(f"no class interval contains ratio {ratio!r}")


def validate_partition(classes: Sequence[ClassRule]) -> list[PartitionIssue]:
    """Check that the intervals partition (0, inf): no gaps, no overlaps.

    Returns an empty list when the partition is sound; otherwise one issue
    per defect, each naming the offending boundary values. Empty intervals
    are reported as ``invalid`` and excluded from the coverage scan.
    """
    issues: list[PartitionIssue] = []

    usable: list[ClassRule] = []
    for rule in classes:
        if rule.lo < 0:
            issues.append(
                PartitionIssue(
                    "invalid",
                    rule.lo,
                    rule.hi,
                    (rule.name,),
                    f"class {rule.name!r} has negative lower bound {rule.lo!r}",
                )
            )
        if rule.is_empty():
            issues.append(
                PartitionIssue(
                    "invalid",
                    rule.lo,
                    rule.hi,
                    (rule.name,),
                    f"class {rule.name!r} interval {rule.describe()} is empty",
                )
            )
        else:
            usable.append(rule)

    # Overlaps: all pairs, honoring inclusivity at shared endpoints.
    for i, a in enumerate(usable):
        for b in usable[i + 1 :]:
            region = _intersection(a, b)
            if region is not None:
                lo, hi = region
                where = f"at {lo!r}" if lo == hi else f"over ({lo!r}, {hi!r})"
                issues.append(
                    PartitionIssue(
                        "overlap",
                        lo,
                        hi,
                        (a.name, b.name),
                        f"classes {a.name!r} and {b.name!r} overlap {where}",
                    )
                )

    # Gaps: sweep the merged coverage upward from zero.
    ordered = sorted(usable, key=lambda r: (r.lo, not r.lo_inclusive))
    end = 0.0  # covered up to here...
    end_closed = True  # ...including the endpoint itself (0 is outside the domain)
    for rule in ordered:
        lo = max(rule.lo, 0.0)
        lo_open = not rule.lo_inclusive or rule.lo < 0  # clipped start is open at 0, fine
        if lo > end:
            issues.append(_gap(end, lo))
        elif lo == end and lo_open and not end_closed:
            issues.append(_gap(end, end))
        if rule.hi > end or (rule.hi == end and rule.hi_inclusive and not end_closed):
            end = rule.hi
            end_closed = rule.hi_inclusive
    if not math.isinf(end):
        issues.append(_gap(end, math.inf))
    return issues


def _gap(lo: float, hi: float) -> PartitionIssue:
    if lo == hi:
        detail = f"no class contains ratio {lo!r}"
    elif math.isinf(hi):
        detail = f"no class covers ratios above {lo!r}"
    else:
        detail = f"no class covers ratios between {lo!r} and {hi!r}"
    return PartitionIssue("gap", lo, hi, (), detail)


def _intersection(a: ClassRule, b: ClassRule) -> tuple[float, float] | None:
    """The region claimed by both rules, or None. A point region has lo == hi."""
    lo = max(a.lo, b.lo)
    hi = min(a.hi, b.hi)
    if lo > hi:
        return None
    if lo < hi:
        # A positive-length region; clip at zero since ratios are positive.
        if hi <= 0:
            return None
        return (max(lo, 0.0), hi)
    point = lo
    if point <= 0:
        return None
    if a.contains(point) and b.contains(point):
        return (point, point)
    return None

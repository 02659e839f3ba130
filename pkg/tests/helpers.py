"""Shared random generators and independent oracles for property tests.

The oracles here deliberately re-derive results with plain arithmetic and
linear scans, independent of the engine's code paths, so they stay valid
checks even if the engine changes internally.
"""

from __future__ import annotations

import math
import random

from regui.geometry import NormRect
from regui.spec import Block, ClassRule, LayoutSpec, Placement


def interval_contains(lo, lo_inc, hi, hi_inc, r) -> bool:
    """Membership check written from scratch (oracle for ClassRule.contains)."""
    if r < lo:
        return False
    if r == lo and not lo_inc:
        return False
    if r > hi:
        return False
    if r == hi and not hi_inc:
        return False
    return True


def oracle_matches(rules: list[ClassRule], r: float) -> list[str]:
    """Names of every rule containing r, by linear scan."""
    return [
        rule.name
        for rule in rules
        if interval_contains(rule.lo, rule.lo_inclusive, rule.hi, rule.hi_inclusive, r)
    ]


def rects_interiors_overlap(a: NormRect, b: NormRect) -> bool:
    """Brute-force open-interior intersection (oracle for geometry.intersects)."""
    x_overlap = a.x < b.x + b.w and b.x < a.x + a.w and a.w > 0 and b.w > 0
    y_overlap = a.y < b.y + b.h and b.y < a.y + a.h and a.h > 0 and b.h > 0
    return x_overlap and y_overlap


def random_partition(rng: random.Random, max_classes: int = 6) -> list[ClassRule]:
    """A valid partition of (0, inf) with random cuts, inclusivity, and the
    occasional degenerate point class."""
    n_cuts = rng.randint(0, max_classes - 1)
    cuts = sorted(set(round(rng.uniform(0.05, 10.0), 4) for _ in range(n_cuts)))
    rules: list[ClassRule] = []
    lo, lo_inc = 0.0, False
    for cut in cuts:
        mode = rng.choice(("left_owns", "right_owns", "point"))
        if mode == "point":
            rules.append(ClassRule(f"c{len(rules)}", lo, lo_inc, cut, False))
            rules.append(ClassRule(f"c{len(rules)}", cut, True, cut, True))
            lo, lo_inc = cut, False
        else:
            owns = mode == "left_owns"
            rules.append(ClassRule(f"c{len(rules)}", lo, lo_inc, cut, owns))
            lo, lo_inc = cut, not owns
    rules.append(ClassRule(f"c{len(rules)}", lo, lo_inc, math.inf, False))
    if rng.random() < 0.5:
        rng.shuffle(rules)
    return rules


def partition_boundaries(rules: list[ClassRule]) -> list[float]:
    values = set()
    for rule in rules:
        if rule.lo > 0:
            values.add(rule.lo)
        if not math.isinf(rule.hi):
            values.add(rule.hi)
    return sorted(values)


def random_ratio(rng: random.Random) -> float:
    # Log-uniform over roughly (1e-3, 1e3); covers narrow and wide windows.
    return math.exp(rng.uniform(math.log(1e-3), math.log(1e3)))


def random_rect(rng: random.Random) -> NormRect:
    x = rng.uniform(0.0, 0.9)
    y = rng.uniform(0.0, 0.9)
    return NormRect(x, y, rng.uniform(0.0, 1.0 - x), rng.uniform(0.0, 1.0 - y))


def random_spec(rng: random.Random, max_blocks: int = 10) -> LayoutSpec:
    """A structurally valid spec with random three-class breakpoints and
    random (in-bounds) block placements; some placements are omitted or
    invisible, some carry fonts, styles, and mirror flags."""
    from regui.spec import three_class_rules

    b1 = rng.uniform(0.3, 1.2)
    classes = three_class_rules(b1, b1 + rng.uniform(0.0, 1.5))
    blocks = []
    for i in range(rng.randint(1, max_blocks)):
        placements = {}
        for rule in classes:
            if rng.random() < 0.15:
                continue  # hidden in this class
            placements[rule.name] = Placement(
                rect=random_rect(rng),
                visible=rng.random() < 0.9,
                font=round(rng.uniform(0.05, 1.0), 3) if rng.random() < 0.5 else None,
                style={"tone": "dark"} if rng.random() < 0.3 else None,
                mirror_on_anchor=rng.choice(("none", "none", "left", "right")),
            )
        blocks.append(Block(f"b{i}", placements))
    return LayoutSpec("random", classes, tuple(blocks))

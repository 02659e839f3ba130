"""
Breakpoints and layout classes
==============================

A layout class is an aspect-ratio interval. Two breakpoints split the
positive ratios into portrait / classic / landscape, and both breakpoints
belong to the middle class.
"""

from regui import classify, three_class_rules, validate_partition

rules = three_class_rules(0.75, 1.5)
for rule in rules:
    print(f"{rule.name:<10} {rule.describe()}")

# The three intervals cover every positive ratio exactly once; an empty
# issue list means no gaps and no overlaps.
print("\npartition issues:", validate_partition(rules))

# Sweep a window from tall to wide and watch the class flip at the
# breakpoints. Note 0.75 and 1.5 themselves classify as classic: the
# boundary belongs to the middle interval.
print(f"\n{'ratio':>8}  class")
for ratio in (0.4, 0.6, 0.75, 1.0, 1.33, 1.5, 1.6, 2.4):
    print(f"{ratio:>8}  {classify(ratio, rules).name}")

# Ratios just off a breakpoint fall outside the middle class again.
for ratio in (0.75 - 1e-12, 1.5 + 1e-12):
    print(f"{ratio!r:>25} -> {classify(ratio, rules).name}")

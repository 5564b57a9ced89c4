#!/usr/bin/env python3
# Run the whole claims catalog and summarize it.
#
# Every catalog entry is an exact value or bound for the hull number of a
# complementary prism; the suite regenerates the instances, re-solves them,
# and verdicts each row. Equivalent to `prismhull verify`, plus a summary.

from collections import Counter

from prismhull import default_suite, format_report
from prismhull.verify import failures

checks = default_suite()
print(format_report(checks), end="")
print()

counts = Counter(c.theorem_id for c in checks)
bad = failures(checks)
print(f"{len(checks)} checks over {len(counts)} catalog entries")
for tid in sorted(counts):
    print(f"  {tid:6s} {counts[tid]:3d} instances")
print("failures:", len(bad))
for c in bad:
    print("  ", c.line())

# Bound rows carry their slack; a bound that is never tight would show up
# here as a suspiciously large minimum.
slacks = [c.slack for c in checks if c.slack is not None and "<=" in c.expected]
print("bound rows:", len(slacks), "min slack:", min(slacks), "max slack:", max(slacks))

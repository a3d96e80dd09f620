"""
Census of small delta-matroids
==============================

Enumerate every nonempty family on up to three elements, split the
delta-matroids into binary and non-binary, and look for slide sequences
that break the axiom.  Pass ``4`` on the command line for the full run
(a few seconds).
"""

import sys

from deltamat import apply_sequence, verify_theorem
from deltamat.census import summary_table

n = int(sys.argv[1]) if len(sys.argv) > 1 else 3
report = verify_theorem(n)
print(summary_table(report.summaries))
print("passed:", report.passed, "longest shortest escape:", report.max_depth)

# a few non-binary systems and the slide that breaks them
for r in report.witnesses[:5]:
    replay = apply_sequence(r.system, r.escape.sequence)
    print(r.system, "->", r.escape, "| replay breaks axiom:", not replay.is_dm)

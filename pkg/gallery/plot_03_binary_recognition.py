"""
Recognising binary delta-matroids
=================================

Two independent deciders: a search over symmetric matrices and twists,
and a search for an excluded minor.  Both hand back certificates.
"""

from deltamat import S1, S3, S5, is_binary_by_excluded_minors, is_binary_by_search, twist, subset
from deltamat import FIGURE1_FAMILY

for name, s in [("F", FIGURE1_FAMILY), ("S1", S1), ("S3*{2}", twist(S3, subset(2))), ("S5", S5)]:
    a = is_binary_by_search(s)
    b = is_binary_by_excluded_minors(s)
    print(f"--- {name}: {s}")
    print("search:", a.describe())
    print("minors:", b.describe())
    print("agree:", a.is_binary == b.is_binary, "replay:", a.replay(s) and b.replay(s))

"""
Set systems and the exchange axiom
==================================

Build a few set systems, test them, and read off a violation.
"""

from deltamat import S1, find_violation, is_delta_matroid, make_set_system, subset

# members can be given as label tuples
s = make_set_system(3, [(), (1, 2), (1, 3), (2, 3), (1, 2, 3)])
print(s, is_delta_matroid(s))
print(s == S1)

# drop {1,3}: the pair ({1,2,3}, {}) with x = 2 now has no partner
t = make_set_system(3, [(), (1, 2), (2, 3), (1, 2, 3)])
v = find_violation(t)
print(t, "->", v)

# subsets are plain int masks, element i is bit i-1
print(subset(1, 3), subset(1, 3) in s)

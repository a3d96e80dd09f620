"""
Slides commute with minors and twists
=====================================

Check the slide/deletion, slide/contraction and slide/twist identities on
every set system with three elements, then on a random sample with five.
"""

import time

from deltamat import verify_commutation_laws

for n, samples in [(3, None), (5, 500)]:
    t0 = time.perf_counter()
    r = verify_commutation_laws(n, samples=samples, seed=1)
    dt = time.perf_counter() - t0
    print(f"n={n}: {r.systems} systems, {r.total_checks} checks, "
          f"{len(r.failures)} failures in {dt:.2f} s")
    for name, count in sorted(r.checks.items()):
        print(f"    {name:17s} {count}")

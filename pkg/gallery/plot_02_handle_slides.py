"""
Handle slides on a matrix delta-matroid
=======================================

Compute D(A) for a small symmetric matrix and slide its handles around.
"""

import numpy as np

from deltamat import SymmetricBinaryMatrix, apply_sequence, handle_slide, is_delta_matroid, matroid_of_matrix
from deltamat.transforms import slide_toggles
from deltamat.setsystem import format_subset

A = np.array([[0, 1, 0, 0],
              [1, 0, 1, 1],
              [0, 1, 0, 1],
              [0, 1, 1, 0]])
F = matroid_of_matrix(SymmetricBinaryMatrix.from_array(A))
print("D(A) =", F)

for a, b in [(1, 2), (2, 1), (2, 3), (3, 2)]:
    toggled = ", ".join(format_subset(x) for x in slide_toggles(F, a, b)) or "nothing"
    out = handle_slide(F, a, b)
    print(f"F_{a}{b} = {out}  (toggles {toggled}; delta-matroid: {is_delta_matroid(out)})")

# sequences apply left to right
w = apply_sequence(F, [(1, 2), (2, 3)])
print(w, w.result)

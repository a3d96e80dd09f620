"""Named set systems and matrices used throughout the package."""

from __future__ import annotations

from .setsystem import SetSystem, make_set_system

S1 = make_set_system(3, [(), (1, 2), (1, 3), (2, 3), (1, 2, 3)])
S2 = make_set_system(3, [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3)])
S3 = make_set_system(3, [(), (2,), (3,), (1, 2), (1, 3), (1, 2, 3)])
S4 = make_set_system(4, [(), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
S5 = make_set_system(4, [(), (1, 2), (1, 4), (2, 3), (3, 4), (1, 2, 3, 4)])

# the five minimal non-binary delta-matroids, each up to twisting
EXCLUDED: dict[str, SetSystem] = {"S1": S1, "S2": S2, "S3": S3, "S4": S4, "S5": S5}

# adjacency matrix of the 4-vertex graph with edges 12, 23, 24, 34
FIGURE1_MATRIX = (
    (0, 1, 0, 0),
    (1, 0, 1, 1),
    (0, 1, 0, 1),
    (0, 1, 1, 0),
)

FIGURE1_FAMILY = make_set_system(4, [(), (1, 2), (2, 3), (2, 4), (3, 4), (1, 2, 3, 4)])

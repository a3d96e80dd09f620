"""Symmetric GF(2) matrices, their delta-matroids, and binary recognition.

Two deciders are provided and are meant to be checked against each other:

* :func:`is_binary_by_search` enumerates every symmetric binary matrix of the
  right size and looks for ``D(A)`` among the twists of the input.
* :func:`is_binary_by_excluded_minors` looks for a minor isomorphic to a twist
  of one of the five minimal non-binary delta-matroids.

Only twists by feasible sets need to be tried in the search: ``D(A)`` always
contains the empty set, so ``D(A) * S`` always contains ``S``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .catalog import EXCLUDED
from .isomorphism import Relabeling, apply_relabeling, are_isomorphic, canonical_form
from .setsystem import (
    DeltaMatroidError,
    GroundSetTooLarge,
    MAX_GROUND,
    OutOfRange,
    SetSystem,
    SubsetMask,
    format_subset,
)
from .transforms import MinorStep, apply_minor_steps, describe_steps, minors, twist

SEARCH_MAX = 5


class NotSymmetric(DeltaMatroidError):
    pass


@dataclass(frozen=True)
class SymmetricBinaryMatrix:
    """Symmetric ``n x n`` matrix over GF(2), stored as bit-packed rows.

    Bit ``j`` of ``rows[i]`` is the entry in row ``i``, column ``j`` (0-based).
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_GROUND or len(self.rows) != self.n:
            raise OutOfRange(f"matrix dimension must be 1..{MAX_GROUND} and match the rows")
        for i, r in enumerate(self.rows):
            if r < 0 or r >> self.n:
                raise OutOfRange(f"row {i + 1} has entries beyond column {self.n}")
            for j in range(self.n):
                if (r >> j & 1) != (self.rows[j] >> i & 1):
                    raise NotSymmetric(f"entry ({i + 1},{j + 1}) differs from ({j + 1},{i + 1})")

    @classmethod
    def from_array(cls, a: Sequence[Sequence[int]] | np.ndarray) -> "SymmetricBinaryMatrix":
        arr = np.asarray(a, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise OutOfRange(f"expected a square matrix, got shape {arr.shape}")
        if not np.isin(arr, (0, 1)).all():
            raise OutOfRange("entries must be 0 or 1")
        rows = tuple(int((arr[i] << np.arange(arr.shape[1])).sum()) for i in range(arr.shape[0]))
        return cls(arr.shape[0], rows)

    @classmethod
    def from_code(cls, n: int, code: int) -> "SymmetricBinaryMatrix":
        """Inverse of :attr:`code`."""
        rows = [0] * n
        k = 0
        for i in range(n):
            for j in range(i, n):
                if code >> k & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k += 1
        return cls(n, tuple(rows))

    @property
    def code(self) -> int:
        """Upper triangle (diagonal included) read row by row as bits, low bit first."""
        out = 0
        k = 0
        for i in range(self.n):
            for j in range(i, self.n):
                out |= (self.rows[i] >> j & 1) << k
                k += 1
        return out

    def to_array(self) -> np.ndarray:
        return np.array([[r >> j & 1 for j in range(self.n)] for r in self.rows], dtype=np.uint8)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(r >> j & 1) for j in range(self.n)) for r in self.rows)


def _invertible(rows: Sequence[int], w: SubsetMask) -> bool:
    # eliminate the principal submatrix on w; pivot on the lowest column first
    pending = [rows[i] & w for i in range(len(rows)) if w >> i & 1]
    col = w
    while col:
        c = col & -col
        col ^= c
        for k, r in enumerate(pending):
            if r & c:
                pivot = pending.pop(k)
                break
        else:
            return False
        pending = [r ^ pivot if r & c else r for r in pending]
    return True


def gf2_invertible(m: SymmetricBinaryMatrix, w: SubsetMask) -> bool:
    """Whether the principal submatrix on ``w`` is invertible; the empty one is."""
    if w < 0 or w >> m.n:
        raise OutOfRange(f"{format_subset(w)} exceeds a {m.n}x{m.n} matrix")
    return _invertible(m.rows, w)


def matroid_of_matrix(m: SymmetricBinaryMatrix) -> SetSystem:
    """``D(A)``: every ``W`` whose principal submatrix is invertible."""
    family = 0
    for w in range(1 << m.n):
        if _invertible(m.rows, w):
            family |= 1 << w
    return SetSystem(m.n, family)


@lru_cache(maxsize=None)
def binary_table(n: int) -> dict[int, int]:
    """Family bitmap of ``D(A)`` -> smallest code of a matrix ``A`` producing it."""
    if n > SEARCH_MAX:
        raise GroundSetTooLarge(f"matrix search limited to n <= {SEARCH_MAX}")
    table: dict[int, int] = {}
    for code in range(1 << (n * (n + 1) // 2)):
        fam = matroid_of_matrix(SymmetricBinaryMatrix.from_code(n, code)).family
        table.setdefault(fam, code)
    return table


@dataclass(frozen=True)
class BinaryVerdict:
    """Outcome of a binary-representability test with a replayable certificate.

    Positive: ``twist(matroid_of_matrix(matrix), twist_set)`` is the input.
    Negative: the minor reached by ``minor_steps``, twisted by ``minor_twist``
    and relabeled by ``relabeling``, is exactly ``EXCLUDED[excluded]``.
    """

    is_binary: bool
    matrix: SymmetricBinaryMatrix | None = None
    twist_set: SubsetMask | None = None
    minor_steps: tuple[MinorStep, ...] | None = None
    minor_twist: SubsetMask | None = None
    relabeling: Relabeling | None = None
    excluded: str | None = None

    @property
    def has_certificate(self) -> bool:
        return self.matrix is not None if self.is_binary else self.excluded is not None

    def replay(self, s: SetSystem) -> bool:
        """Re-validate the certificate against ``s``.

        Verdicts reached by exhaustion (binary via excluded minors, non-binary
        via the matrix search) carry nothing to replay and return True.
        """
        if not self.has_certificate:
            return True
        if self.is_binary:
            return twist(matroid_of_matrix(self.matrix), self.twist_set).family == s.family
        minor = apply_minor_steps(s, self.minor_steps)
        image = apply_relabeling(twist(minor, self.minor_twist), self.relabeling)
        return image == EXCLUDED[self.excluded]

    def describe(self) -> str:
        if self.is_binary and self.matrix is not None:
            return f"binary: D(A) * {format_subset(self.twist_set)} with A =\n{self.matrix}"
        if self.is_binary:
            return "binary: no minor is isomorphic to a twist of S1..S5"
        if self.excluded is None:
            return "not binary: no symmetric matrix and twist reproduce the family"
        return (
            f"not binary: minor {describe_steps(self.minor_steps)}, twisted by "
            f"{format_subset(self.minor_twist)}, relabeled by {self.relabeling}, is {self.excluded}"
        )


def is_binary_by_search(s: SetSystem) -> BinaryVerdict:
    """Search all symmetric matrices for ``A`` and a set ``S`` with ``D(A) * S == s``.

    Twist sets are tried in ascending mask order and the first hit is
    returned; ``D(A)`` determines ``A``, so the matrix is then unique.
    """
    table = binary_table(s.n)
    for f in s:
        code = table.get(twist(s, f).family)
        if code is not None:
            return BinaryVerdict(True, SymmetricBinaryMatrix.from_code(s.n, code), f)
    return BinaryVerdict(False)


@lru_cache(maxsize=None)
def _excluded_canonicals(n: int) -> frozenset[int]:
    out = set()
    for sx in EXCLUDED.values():
        if sx.n == n:
            for a in range(1 << n):
                out.add(canonical_form(twist(sx, a)).family)
    return frozenset(out)


def _witness(minor: SetSystem) -> tuple[SubsetMask, Relabeling, str]:
    # prefer a labeled match, then fall back to the least relabeling
    for a in range(1 << minor.n):
        t = twist(minor, a)
        for name, sx in EXCLUDED.items():
            if t == sx:
                return a, tuple(range(1, minor.n + 1)), name
    for a in range(1 << minor.n):
        t = twist(minor, a)
        for name, sx in EXCLUDED.items():
            p = are_isomorphic(t, sx)
            if p is not None:
                return a, p, name
    raise AssertionError("canonical forms matched but no relabeling was found")


def is_binary_by_excluded_minors(s: SetSystem) -> BinaryVerdict:
    """Binary iff no minor is isomorphic to a twist of S1..S5 (delta-matroid input)."""
    for minor, steps in minors(s):
        if minor.n not in (3, 4):
            continue
        if canonical_form(minor).family in _excluded_canonicals(minor.n):
            a, p, name = _witness(minor)
            return BinaryVerdict(False, minor_steps=steps, minor_twist=a, relabeling=p, excluded=name)
    return BinaryVerdict(True)

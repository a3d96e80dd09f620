"""Relabelings, isomorphism tests and canonical forms for set systems."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence

import numpy as np

from .setsystem import GroundSetTooLarge, SetSystem, SizeMismatch

# p[i - 1] is the image of element i
Relabeling = tuple[int, ...]

CANONICAL_MAX = 8


@lru_cache(maxsize=4096)
def _mask_table(p: Relabeling) -> tuple[int, ...]:
    n = len(p)
    table = [0] * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        table[m] = table[m ^ low] | (1 << (p[low.bit_length() - 1] - 1))
    return tuple(table)


def _check_perm(p: Sequence[int], n: int) -> Relabeling:
    p = tuple(p)
    if len(p) != n or sorted(p) != list(range(1, n + 1)):
        raise SizeMismatch(f"{p} is not a permutation of 1..{n}")
    return p


def apply_relabeling(s: SetSystem, p: Sequence[int]) -> SetSystem:
    """Image of ``s`` when element ``i`` is renamed ``p[i - 1]``."""
    table = _mask_table(_check_perm(p, s.n))
    family = 0
    for m in s:
        family |= 1 << table[m]
    return SetSystem(s.n, family)


def invert(p: Sequence[int]) -> Relabeling:
    inv = [0] * len(p)
    for i, j in enumerate(p, 1):
        inv[j - 1] = i
    return tuple(inv)


def _occurrences(s: SetSystem) -> list[int]:
    counts = [0] * s.n
    for m in s:
        for i in range(s.n):
            counts[i] += m >> i & 1
    return counts


def _size_profile(s: SetSystem) -> list[int]:
    return sorted(bin(m).count("1") for m in s)


def _compatible_perms(c1: list[int], c2: list[int]) -> Iterator[Relabeling]:
    # lexicographic permutations sending each element to one with the same occurrence count
    n = len(c1)
    used = [False] * n
    p = [0] * n

    def rec(i: int) -> Iterator[Relabeling]:
        if i == n:
            yield tuple(p)
            return
        for j in range(n):
            if not used[j] and c2[j] == c1[i]:
                used[j] = True
                p[i] = j + 1
                yield from rec(i + 1)
                used[j] = False

    return rec(0)


def are_isomorphic(s1: SetSystem, s2: SetSystem) -> Relabeling | None:
    """Lexicographically least relabeling taking ``s1`` onto ``s2``, if any."""
    if s1.n != s2.n or len(s1) != len(s2) or _size_profile(s1) != _size_profile(s2):
        return None
    c1, c2 = _occurrences(s1), _occurrences(s2)
    if sorted(c1) != sorted(c2):
        return None
    for p in _compatible_perms(c1, c2):
        if apply_relabeling(s1, p).family == s2.family:
            return p
    return None


def are_isomorphic_brute(s1: SetSystem, s2: SetSystem) -> Relabeling | None:
    """Unpruned reference: scan every permutation in lexicographic order."""
    if s1.n != s2.n:
        return None
    for p in permutations(range(1, s1.n + 1)):
        if apply_relabeling(s1, p).family == s2.family:
            return p
    return None


@lru_cache(maxsize=None)
def _perm_images(n: int) -> np.ndarray:
    """``images[k, m]``: mask ``m`` relabeled by the k-th permutation of ``1..n``."""
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    masks = np.arange(1 << n, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(n)) & 1  # (2^n, n)
    return (bits[None, :, :] << perms[:, None, :]).sum(axis=2)


@lru_cache(maxsize=1 << 16)
def _canonical_family(n: int, family: int) -> int:
    images = _perm_images(n)
    present = np.array([family >> m & 1 for m in range(1 << n)], dtype=bool)
    rows = np.zeros(images.shape, dtype=bool)
    rows[np.arange(images.shape[0])[:, None], images] = present[None, :]
    # smallest integer bitmap = lexicographically smallest row read from the top mask down;
    # lexsort treats its last key as primary
    best = np.lexsort(rows.T)[0]
    return sum(1 << int(m) for m in np.flatnonzero(rows[best]))


def canonical_form(s: SetSystem) -> SetSystem:
    """Relabeling of ``s`` whose family bitmap is the smallest integer."""
    if s.n > CANONICAL_MAX:
        raise GroundSetTooLarge(f"canonical form limited to n <= {CANONICAL_MAX}")
    return SetSystem(s.n, _canonical_family(s.n, s.family))

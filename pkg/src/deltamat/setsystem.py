"""Set systems over small ground sets and the symmetric exchange axiom.

A subset of the ground set ``{1, ..., n}`` is a plain ``int`` bit mask: bit
``i - 1`` is set when element ``i`` is a member.  A family of subsets is again
an ``int``, used as a bitmap over all ``2**n`` masks: bit ``m`` is set when the
subset with mask ``m`` is feasible.  Both encodings make symmetric difference
an XOR and keep every value hashable and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

MAX_GROUND = 16

SubsetMask = int


class DeltaMatroidError(ValueError):
    """Base class for domain errors raised by this package."""


class EmptyFamily(DeltaMatroidError):
    pass


class OutOfRange(DeltaMatroidError):
    pass


class SameElement(DeltaMatroidError):
    pass


class WouldBeEmpty(DeltaMatroidError):
    pass


class GroundSetTooLarge(DeltaMatroidError):
    pass


class SizeMismatch(DeltaMatroidError):
    pass


def subset(*elements: int) -> SubsetMask:
    """Mask of the given 1-based elements. ``subset()`` is the empty set."""
    m = 0
    for e in elements:
        if e < 1:
            raise OutOfRange(f"element {e} is not a positive label")
        m |= 1 << (e - 1)
    return m


def elements(m: SubsetMask) -> tuple[int, ...]:
    """1-based members of a mask, ascending."""
    out = []
    i = 1
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


def format_subset(m: SubsetMask) -> str:
    return "{" + ",".join(map(str, elements(m))) + "}"


def _bits(m: int) -> Iterator[int]:
    # 0-based positions of set bits, ascending
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_GROUND:
        raise OutOfRange(f"ground-set size {n} outside 1..{MAX_GROUND}")


@dataclass(frozen=True)
class SetSystem:
    """A ground set ``{1..n}`` with a nonempty family of feasible subsets.

    ``family`` is the membership bitmap over all ``2**n`` subset masks.
    """

    n: int
    family: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        if self.family == 0:
            raise EmptyFamily("a set system needs at least one feasible set")
        if self.family < 0 or self.family >> (1 << self.n):
            raise OutOfRange(f"family mentions subsets outside a ground set of size {self.n}")

    @property
    def ground(self) -> SubsetMask:
        return (1 << self.n) - 1

    def members(self) -> tuple[SubsetMask, ...]:
        """Feasible sets in ascending mask order."""
        return tuple(_bits(self.family))

    def __iter__(self) -> Iterator[SubsetMask]:
        return _bits(self.family)

    def __len__(self) -> int:
        return bin(self.family).count("1")

    def __contains__(self, m: SubsetMask) -> bool:
        return m >= 0 and bool(self.family >> m & 1)

    def __str__(self) -> str:
        return "{" + ", ".join(format_subset(m) for m in self) + "}"


class AxiomViolation(NamedTuple):
    """Feasible ``f1``, ``f2`` and ``x`` in their symmetric difference with no rescuing ``y``.

    ``x`` is a 1-based element label.
    """

    f1: SubsetMask
    f2: SubsetMask
    x: int

    def __str__(self) -> str:
        return f"F1={format_subset(self.f1)} F2={format_subset(self.f2)} x={self.x}"


def make_set_system(n: int, members: Iterable[SubsetMask | Iterable[int]]) -> SetSystem:
    """Build a set system from masks or from iterables of 1-based labels.

    Duplicates collapse.

    >>> s1 = make_set_system(3, [(), (1, 2), (1, 3), (2, 3), (1, 2, 3)])
    >>> len(s1)
    5
    """
    _check_n(n)
    family = 0
    for m in members:
        if not isinstance(m, int):
            m = subset(*m)
        if m < 0 or m >> n:
            raise OutOfRange(f"subset {format_subset(m)} exceeds ground set of size {n}")
        family |= 1 << m
    if family == 0:
        raise EmptyFamily("a set system needs at least one feasible set")
    return SetSystem(n, family)


def find_violation(s: SetSystem) -> AxiomViolation | None:
    """Least ``(f1, f2, x)`` breaking the symmetric exchange axiom, or ``None``.

    The rescuing element ``y`` ranges over ``f1 ^ f2`` and may equal ``x``.
    Triples are ordered by ``f1`` mask, then ``f2`` mask, then ``x``.
    """
    fam = s.family
    members = s.members()
    for f1 in members:
        for f2 in members:
            d = f1 ^ f2
            for xb in _bits(d):
                g = f1 ^ (1 << xb)
                for yb in _bits(d):
                    if fam >> (g ^ ((1 << yb) if yb != xb else 0)) & 1:
                        break
                else:
                    return AxiomViolation(f1, f2, xb + 1)
    return None


def is_delta_matroid(s: SetSystem) -> bool:
    return find_violation(s) is None


def violation_holds(s: SetSystem, v: AxiomViolation) -> bool:
    """Replay a violation against ``s``: every stated condition must hold."""
    d = v.f1 ^ v.f2
    x = 1 << (v.x - 1)
    if v.f1 not in s or v.f2 not in s or not d & x:
        return False
    return all((v.f1 ^ x ^ (y if y != x else 0)) not in s
               for y in (1 << b for b in _bits(d)))


def family_equal(s1: SetSystem, s2: SetSystem) -> bool:
    return s1.n == s2.n and s1.family == s2.family

"""Twists, handle slides and minors of set systems.

All operations act on the family bitmap directly.  A twist by a single
element ``e`` swaps the halves of every block of ``2**e`` positions; a handle
slide ``a`` over ``b`` moves the feasible sets that contain ``b`` and omit
``a`` onto their images with ``b`` replaced by ``a`` and XORs them in.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .setsystem import (
    OutOfRange,
    SameElement,
    SetSystem,
    SubsetMask,
    WouldBeEmpty,
    format_subset,
    is_delta_matroid,
)


@lru_cache(maxsize=None)
def _with_element(n: int, e: int) -> int:
    """Bitmap of the positions (subset masks) that contain 0-based element ``e``."""
    block = ((1 << (1 << e)) - 1) << (1 << e)
    step = 1 << (e + 1)
    out = 0
    for start in range(0, 1 << n, step):
        out |= block << start
    return out



def _check_element(s: SetSystem, e: int) -> None:
    if not 1 <= e <= s.n:
        raise OutOfRange(f"element {e} not in ground set 1..{s.n}")


def _twist_family(n: int, family: int, a_set: SubsetMask) -> int:
    e = 0
    while a_set:
        if a_set & 1:
            w = 1 << e
            hi = _with_element(n, e)
            family = ((family & hi) >> w) | ((family & ~hi) << w)
        a_set >>= 1
        e += 1
    return family


def twist(s: SetSystem, a_set: SubsetMask) -> SetSystem:
    """``s`` twisted by ``a_set``: every feasible ``X`` becomes ``X ^ a_set``."""
    if a_set < 0 or a_set >> s.n:
        raise OutOfRange(f"twist set {format_subset(a_set)} exceeds ground set of size {s.n}")
    return SetSystem(s.n, _twist_family(s.n, s.family, a_set))


def dual(s: SetSystem) -> SetSystem:
    return twist(s, s.ground)


def _slide_family(n: int, family: int, a: int, b: int) -> int:
    # a, b are 0-based
    sel = family & _with_element(n, b) & ~_with_element(n, a)
    shift = (1 << a) - (1 << b)
    toggled = sel << shift if shift > 0 else sel >> -shift
    return family ^ toggled


def handle_slide(s: SetSystem, a: int, b: int) -> SetSystem:
    """Slide ``a`` over ``b``: toggle ``X+a`` for every feasible ``X+b`` with ``X`` avoiding both."""
    if a == b:
        raise SameElement(f"cannot slide {a} over itself")
    _check_element(s, a)
    _check_element(s, b)
    return SetSystem(s.n, _slide_family(s.n, s.family, a - 1, b - 1))


def slide_toggles(s: SetSystem, a: int, b: int) -> tuple[SubsetMask, ...]:
    """The subsets toggled by ``handle_slide(s, a, b)``, straight from the definition."""
    am, bm = 1 << (a - 1), 1 << (b - 1)
    return tuple((x ^ bm) | am for x in s if x & bm and not x & am)


def _compress(n: int, family: int, e: int) -> int:
    # keep positions lacking 0-based element e, renumbered onto n - 1 elements
    width = 1 << e
    run = (1 << width) - 1
    out = 0
    for j in range(1 << (n - 1 - e)):
        out |= ((family >> (j * 2 * width)) & run) << (j * width)
    return out


def delete(s: SetSystem, e: int) -> SetSystem:
    """Feasible sets avoiding ``e``; labels above ``e`` shift down by one."""
    _check_element(s, e)
    if s.n == 1:
        raise WouldBeEmpty("deleting the only element leaves an empty ground set")
    kept = s.family & ~_with_element(s.n, e - 1)
    if not kept:
        raise WouldBeEmpty(f"every feasible set contains {e}")
    return SetSystem(s.n - 1, _compress(s.n, kept, e - 1))


def contract(s: SetSystem, e: int) -> SetSystem:
    """Feasible sets containing ``e``, with ``e`` removed; labels above ``e`` shift down."""
    _check_element(s, e)
    if s.n == 1:
        raise WouldBeEmpty("contracting the only element leaves an empty ground set")
    kept = s.family & _with_element(s.n, e - 1)
    if not kept:
        raise WouldBeEmpty(f"no feasible set contains {e}")
    return SetSystem(s.n - 1, _compress(s.n, kept >> (1 << (e - 1)), e - 1))


class MinorStep(NamedTuple):
    op: str  # "delete" or "contract"
    element: int  # label in the ORIGINAL ground set

    def __str__(self) -> str:
        return f"{'-' if self.op == 'delete' else '/'}{self.element}"


def apply_minor_steps(s: SetSystem, steps: Iterable[MinorStep]) -> SetSystem:
    """Replay a minor description whose labels refer to ``s``'s ground set."""
    labels = list(range(1, s.n + 1))
    for step in steps:
        e = labels.index(step.element) + 1
        s = delete(s, e) if step.op == "delete" else contract(s, e)
        labels.pop(e - 1)
    return s


def minors(s: SetSystem) -> list[tuple[SetSystem, tuple[MinorStep, ...]]]:
    """Every distinct minor of ``s`` with one witnessing step sequence.

    Breadth first, deletions before contractions, elements ascending, so
    ``s`` itself comes first and each witness is as short as possible.
    Minors are identified by their relabeled family; ground sets never
    shrink below one element.
    """
    seen = {(s.n, s.family)}
    out = [(s, ())]
    queue = deque([(s, (), tuple(range(1, s.n + 1)))])
    while queue:
        cur, steps, labels = queue.popleft()
        if cur.n == 1:
            continue
        for op, fn in (("delete", delete), ("contract", contract)):
            for e in range(1, cur.n + 1):
                try:
                    m = fn(cur, e)
                except WouldBeEmpty:
                    continue
                key = (m.n, m.family)
                if key in seen:
                    continue
                seen.add(key)
                nsteps = steps + (MinorStep(op, labels[e - 1]),)
                out.append((m, nsteps))
                queue.append((m, nsteps, labels[: e - 1] + labels[e:]))
    return out


class SlideInstruction(NamedTuple):
    a: int
    b: int

    def __str__(self) -> str:
        return f"{self.a},{self.b}"


@dataclass(frozen=True)
class SlideWitness:
    sequence: tuple[SlideInstruction, ...]
    result: SetSystem
    is_dm: bool

    def __str__(self) -> str:
        return ";".join(map(str, self.sequence)) or "(empty)"


def apply_sequence(
    s: SetSystem, seq: Sequence[SlideInstruction | tuple[int, int]]
) -> SlideWitness:
    """Fold :func:`handle_slide` over ``seq`` and record the final axiom verdict."""
    seq = tuple(SlideInstruction(*ins) for ins in seq)
    cur = s
    for a, b in seq:
        cur = handle_slide(cur, a, b)
    return SlideWitness(seq, cur, is_delta_matroid(cur))


def all_instructions(n: int) -> list[SlideInstruction]:
    """Every ordered pair ``(a, b)`` with ``a != b``, lexicographic."""
    return [SlideInstruction(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]


def describe_steps(steps: Sequence[MinorStep]) -> str:
    return " ".join(map(str, steps)) or "(itself)"


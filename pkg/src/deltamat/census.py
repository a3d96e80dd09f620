"""Exhaustive census of set systems on small ground sets.

Every nonempty family on ``n <= 4`` elements is classified by the exchange
axiom, delta-matroids by binary representability, and each delta-matroid
gets a bounded search for a slide sequence whose result breaks the axiom.
Verification runs on labeled systems; canonical forms are used for
reporting only.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Iterator

from .gf2 import binary_table, is_binary_by_search
from .isomorphism import canonical_form
from .setsystem import GroundSetTooLarge, SetSystem, find_violation, format_subset
from .transforms import (
    SlideInstruction,
    SlideWitness,
    _slide_family,
    _twist_family,
    _with_element,
    _compress,
    all_instructions,
    apply_sequence,
)

CENSUS_MAX = 4
ESCAPE_DEPTH = 2


@lru_cache(maxsize=None)
def dm_table(n: int) -> bytes:
    """``dm_table(n)[f]`` is 1 when family bitmap ``f`` satisfies the axiom (index 0 unused)."""
    if n > CENSUS_MAX:
        raise GroundSetTooLarge(f"census limited to n <= {CENSUS_MAX}")
    out = bytearray(1 << (1 << n))
    for f in range(1, len(out)):
        out[f] = find_violation(SetSystem(n, f)) is None
    return bytes(out)


@lru_cache(maxsize=None)
def _binary_families(n: int) -> frozenset[int]:
    # every D(A) * S, from the matrix table
    out = set()
    for fam in binary_table(n):
        for a in range(1 << n):
            out.add(_twist_family(n, fam, a))
    return frozenset(out)


def find_escape(s: SetSystem, depth: int = ESCAPE_DEPTH) -> SlideWitness | None:
    """Shortest slide sequence (up to ``depth``) taking ``s`` outside the axiom.

    Sequences of equal length are tried in lexicographic order.
    """
    table = dm_table(s.n) if s.n <= CENSUS_MAX else None
    instructions = all_instructions(s.n)
    for k in range(1, depth + 1):
        for seq in product(instructions, repeat=k):
            fam = s.family
            for a, b in seq:
                fam = _slide_family(s.n, fam, a - 1, b - 1)
            if table is not None:
                if not table[fam]:
                    return SlideWitness(tuple(seq), SetSystem(s.n, fam), False)
            elif find_violation(SetSystem(s.n, fam)) is not None:
                return SlideWitness(tuple(seq), SetSystem(s.n, fam), False)
    return None


@dataclass(frozen=True)
class CensusRecord:
    """Classification of one labeled set system."""

    system: SetSystem
    is_dm: bool
    is_binary: bool | None = None
    escape: SlideWitness | None = None

    @property
    def canonical(self) -> SetSystem:
        return canonical_form(self.system)

    def consistent(self) -> bool:
        if self.escape is not None:
            if not (self.is_dm and self.is_binary is False and not self.escape.is_dm):
                return False
        if self.is_binary and self.escape is not None:
            return False
        return (self.is_binary is None) == (not self.is_dm)

    def to_line(self) -> str:
        """One tab-separated line: n, feasible sets, dm flag, binary flag, escape."""
        sets = " ".join(format_subset(m) for m in self.system)
        binary = "-" if self.is_binary is None else str(int(self.is_binary))
        escape = "-" if self.escape is None else str(self.escape)
        return f"{self.system.n}\t{sets}\t{int(self.is_dm)}\t{binary}\t{escape}"


def classify(s: SetSystem, depth: int = ESCAPE_DEPTH) -> CensusRecord:
    table = dm_table(s.n) if s.n <= CENSUS_MAX else None
    is_dm = bool(table[s.family]) if table is not None else find_violation(s) is None
    if not is_dm:
        return CensusRecord(s, False)
    binary = is_binary_by_search(s).is_binary
    return CensusRecord(s, True, binary, find_escape(s, depth))


def _classify_range(args: tuple[int, int, int, int]) -> list[CensusRecord]:
    n, lo, hi, depth = args
    return [classify(SetSystem(n, f), depth) for f in range(lo, hi)]


def enumerate_delta_matroids(
    n: int, depth: int = ESCAPE_DEPTH, workers: int = 1
) -> Iterator[CensusRecord]:
    """Classify every nonempty family on ``n`` elements, in family-bitmap order.

    With ``workers > 1`` disjoint bitmap ranges go to separate processes;
    results are merged back in order, so output does not depend on the
    worker count.
    """
    if not 1 <= n <= CENSUS_MAX:
        raise GroundSetTooLarge(f"census limited to 1 <= n <= {CENSUS_MAX}")
    total = 1 << (1 << n)
    if workers <= 1:
        for f in range(1, total):
            yield classify(SetSystem(n, f), depth)
        return
    step = max(1, total // (workers * 8))
    chunks = [(n, lo, min(lo + step, total), depth) for lo in range(1, total, step)]
    with ProcessPoolExecutor(workers) as pool:
        for part in pool.map(_classify_range, chunks):
            yield from part


@dataclass
class CensusSummary:
    n: int
    families: int = 0
    delta_matroids: int = 0
    binary: int = 0
    nonbinary: int = 0
    escape_depths: dict[int, int] = field(default_factory=dict)
    binary_classes: int = 0
    nonbinary_classes: int = 0


def summarize(n: int, records: Iterable[CensusRecord]) -> CensusSummary:
    out = CensusSummary(n)
    classes: dict[bool, set[int]] = {True: set(), False: set()}
    for r in records:
        out.families += 1
        if not r.is_dm:
            continue
        out.delta_matroids += 1
        if r.is_binary:
            out.binary += 1
        else:
            out.nonbinary += 1
        if r.escape is not None:
            k = len(r.escape.sequence)
            out.escape_depths[k] = out.escape_depths.get(k, 0) + 1
        classes[bool(r.is_binary)].add(r.canonical.family)
    out.binary_classes = len(classes[True])
    out.nonbinary_classes = len(classes[False])
    return out


def summary_table(summaries: Iterable[CensusSummary]) -> str:
    """Markdown table of census counts, one row per ground-set size."""
    lines = [
        "| n | families | delta-matroids | binary | non-binary | escapes depth 1 | escapes depth 2 "
        "| binary classes | non-binary classes |",
        "|---|---|---|---|---|---|---|---|---|",
    ]
    for s in summaries:
        lines.append(
            f"| {s.n} | {s.families} | {s.delta_matroids} | {s.binary} | {s.nonbinary} "
            f"| {s.escape_depths.get(1, 0)} | {s.escape_depths.get(2, 0)} "
            f"| {s.binary_classes} | {s.nonbinary_classes} |"
        )
    return "\n".join(lines)


@dataclass
class ClosureReport:
    n: int
    systems: int = 0
    slides: int = 0
    counterexamples: list[tuple[SetSystem, SlideInstruction, SetSystem]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def verify_binary_closure(n: int) -> ClosureReport:
    """Slide every binary delta-matroid on ``n`` elements every possible way."""
    if not 1 <= n <= CENSUS_MAX:
        raise GroundSetTooLarge(f"closure check limited to 1 <= n <= {CENSUS_MAX}")
    binary = _binary_families(n)
    dm = dm_table(n)
    report = ClosureReport(n)
    for fam in sorted(binary):
        report.systems += 1
        for ins in all_instructions(n):
            report.slides += 1
            out = _slide_family(n, fam, ins.a - 1, ins.b - 1)
            if not (dm[out] and is_binary_by_search(SetSystem(n, out)).is_binary):
                report.counterexamples.append((SetSystem(n, fam), ins, SetSystem(n, out)))
    return report


@dataclass
class TheoremReport:
    """Partition of the census at each size into binary / non-binary with witnesses."""

    n: int
    summaries: list[CensusSummary] = field(default_factory=list)
    witnesses: list[CensusRecord] = field(default_factory=list)
    stuck_nonbinary: list[SetSystem] = field(default_factory=list)
    escaping_binary: list[CensusRecord] = field(default_factory=list)
    inconsistent: list[CensusRecord] = field(default_factory=list)
    max_depth: int = 0

    @property
    def passed(self) -> bool:
        return not (self.stuck_nonbinary or self.escaping_binary or self.inconsistent)


def verify_theorem(
    n: int, workers: int = 1, on_record: Callable[[CensusRecord], None] | None = None
) -> TheoremReport:
    """Every non-binary delta-matroid on ``<= n`` elements escapes within two slides;
    no binary one does.

    ``on_record`` sees every census record, e.g. to persist the census.
    """
    report = TheoremReport(n)
    for k in range(1, n + 1):
        records = []
        for r in enumerate_delta_matroids(k, workers=workers):
            records.append(r)
            if on_record is not None:
                on_record(r)
            if not r.is_dm:
                continue
            if not r.consistent():
                report.inconsistent.append(r)
            if r.is_binary:
                if r.escape is not None:
                    report.escaping_binary.append(r)
                continue
            if r.escape is None:
                report.stuck_nonbinary.append(r.system)
                continue
            replay = apply_sequence(r.system, r.escape.sequence)
            if replay.is_dm or replay.result != r.escape.result:
                report.inconsistent.append(r)
            report.witnesses.append(r)
            report.max_depth = max(report.max_depth, len(r.escape.sequence))
        report.summaries.append(summarize(k, records))
    return report


@dataclass
class CommutationReport:
    n: int
    systems: int = 0
    checks: dict[str, int] = field(default_factory=dict)
    failures: list[tuple[str, SetSystem, tuple]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def total_checks(self) -> int:
        return sum(self.checks.values())


def _minor_family(n: int, fam: int, e0: int, contract: bool) -> int:
    # 0 stands for "undefined" (empty result)
    hi = _with_element(n, e0)
    kept = fam & hi if contract else fam & ~hi
    if not kept:
        return 0
    if contract:
        kept >>= 1 << e0
    return _compress(n, kept, e0)


def check_commutation(n: int, fam: int, report: CommutationReport) -> None:
    """Run every slide/minor and slide/twist identity on one family."""
    report.systems += 1
    checks = report.checks
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            slid = _slide_family(n, fam, a, b)
            if n > 1:
                for e in range(n):
                    if e in (a, b):
                        continue
                    a2, b2 = a - (a > e), b - (b > e)
                    for name, con in (("slide-delete", False), ("slide-contract", True)):
                        lhs = _minor_family(n, slid, e, con)
                        rhs = _minor_family(n, fam, e, con)
                        if rhs:
                            rhs = _slide_family(n - 1, rhs, a2, b2)
                        checks[name] = checks.get(name, 0) + 1
                        if lhs != rhs:
                            report.failures.append((name, SetSystem(n, fam), (a + 1, b + 1, e + 1)))
            ab = (1 << a) | (1 << b)
            rest = ((1 << n) - 1) ^ ab
            for sub in _submasks(rest):
                # A avoids a and b: (s*A)_ab == s_ab*A
                lhs = _slide_family(n, _twist_family(n, fam, sub), a, b)
                rhs = _twist_family(n, slid, sub)
                checks["twist-avoiding"] = checks.get("twist-avoiding", 0) + 1
                if lhs != rhs:
                    report.failures.append(("twist-avoiding", SetSystem(n, fam), (a + 1, b + 1, sub)))
                # A contains a and b: (s*A)_ba == s_ab*A
                big = sub | ab
                lhs = _slide_family(n, _twist_family(n, fam, big), b, a)
                rhs = _twist_family(n, slid, big)
                checks["twist-containing"] = checks.get("twist-containing", 0) + 1
                if lhs != rhs:
                    report.failures.append(("twist-containing", SetSystem(n, fam), (a + 1, b + 1, big)))


def _submasks(m: int) -> Iterator[int]:
    sub = m
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & m


def verify_commutation_laws(n: int, samples: int | None = None, seed: int = 0) -> CommutationReport:
    """Slide/minor and slide/twist identities over all (or ``samples`` random) families.

    Exhaustive when ``samples`` is None, which is only allowed for ``n <= 4``.
    """
    report = CommutationReport(n)
    if samples is None:
        if n > CENSUS_MAX:
            raise GroundSetTooLarge(f"exhaustive check limited to n <= {CENSUS_MAX}")
        families: Iterable[int] = range(1, 1 << (1 << n))
    else:
        rng = random.Random(seed)
        top = 1 << (1 << n)
        families = (rng.randrange(1, top) for _ in range(samples))
    for fam in families:
        check_commutation(n, fam, report)
    return report


def direct_sum(s1: SetSystem, s2: SetSystem) -> SetSystem:
    """Disjoint union of ground sets; feasible sets are unions of one from each side."""
    family = 0
    for x in s1:
        for y in s2:
            family |= 1 << (x | (y << s1.n))
    return SetSystem(s1.n + s2.n, family)


def _random_dm(k: int, rng: random.Random) -> SetSystem:
    table = dm_table(k)
    while True:
        f = rng.randrange(1, len(table))
        if table[f]:
            return SetSystem(k, f)


def sample_delta_matroids(n: int, count: int, seed: int = 0) -> list[SetSystem]:
    """Random delta-matroids on ``n`` elements from a mix of constructions.

    Round robin over: ``D(A) * S`` for random ``A`` and ``S``; relabeled and
    twisted direct sums of census delta-matroids; small random families that
    happen to satisfy the axiom; and single slides of earlier samples that
    stay delta-matroids.  The mix is meant to cover binary and non-binary
    systems, not to be uniform.
    """
    from .gf2 import SymmetricBinaryMatrix, matroid_of_matrix
    from .isomorphism import apply_relabeling

    rng = random.Random(seed)
    out: list[SetSystem] = []
    kind = 0
    while len(out) < count:
        kind = (kind + 1) % 4
        if kind == 0:
            a = SymmetricBinaryMatrix.from_code(n, rng.randrange(1 << (n * (n + 1) // 2)))
            s = SetSystem(n, _twist_family(n, matroid_of_matrix(a).family, rng.randrange(1 << n)))
        elif kind == 1:
            k = rng.randint(max(1, n - CENSUS_MAX), min(CENSUS_MAX, n - 1))
            s = direct_sum(_random_dm(k, rng), _random_dm(n - k, rng))
            p = list(range(1, n + 1))
            rng.shuffle(p)
            s = apply_relabeling(s, p)
            s = SetSystem(n, _twist_family(n, s.family, rng.randrange(1 << n)))
        elif kind == 2:
            members = rng.sample(range(1 << n), rng.randint(1, 4))
            s = SetSystem(n, sum(1 << m for m in members))
            if find_violation(s) is not None:
                continue
        else:
            if not out:
                continue
            base = rng.choice(out)
            a, b = rng.sample(range(n), 2)
            s = SetSystem(n, _slide_family(n, base.family, a, b))
            if find_violation(s) is not None:
                continue
        out.append(s)
    return out

"""Plain-text and JSON forms of set systems and matrices.

A set system document is a header line ``ground <n>`` followed by one
feasible set per line, written as a brace-delimited, comma-separated,
strictly increasing list of 1-based labels (``{}`` is the empty set)::

    ground 3
    {}
    {1,2}
    {1,3}

A matrix document is ``n`` lines of ``n`` whitespace-separated bits.
Blank lines are ignored in both formats.
"""

from __future__ import annotations

import re
from typing import Any

from .gf2 import SymmetricBinaryMatrix
from .setsystem import (
    MAX_GROUND,
    DeltaMatroidError,
    EmptyFamily,
    OutOfRange,
    SetSystem,
    elements,
    format_subset,
    make_set_system,
    subset,
)


class ParseError(DeltaMatroidError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_HEADER = re.compile(r"ground[ \t]+(\d+)[ \t]*$")
_SET = re.compile(r"\{[ \t]*(\d+(?:[ \t]*,[ \t]*\d+)*)?[ \t]*\}[ \t]*$")


def parse_system(text: str) -> SetSystem:
    n = None
    family = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        indent = len(raw) - len(raw.lstrip())
        line = raw.strip()
        if n is None:
            m = _HEADER.match(line)
            if not m:
                raise ParseError("expected header 'ground <n>'", lineno, indent + 1)
            n = int(m.group(1))
            if not 1 <= n <= MAX_GROUND:
                raise OutOfRange(f"line {lineno}: ground-set size {n} outside 1..{MAX_GROUND}")
            continue
        m = _SET.match(line)
        if not m:
            raise ParseError("expected a set such as {} or {1,3}", lineno, indent + 1)
        tokens = list(re.finditer(r"\d+", line))
        labels = [int(t.group()) for t in tokens]
        for k in range(1, len(labels)):
            if labels[k] <= labels[k - 1]:
                raise ParseError(
                    f"labels must increase strictly ({labels[k - 1]} then {labels[k]})",
                    lineno, indent + tokens[k].start() + 1,
                )
        for e in labels:
            if not 1 <= e <= n:
                raise OutOfRange(f"line {lineno}: element {e} outside ground set 1..{n}")
        family |= 1 << subset(*labels)
    if n is None:
        raise ParseError("missing header 'ground <n>'", 1)
    if family == 0:
        raise EmptyFamily("document lists no feasible sets")
    return SetSystem(n, family)


def format_system(s: SetSystem) -> str:
    """Canonical document: feasible sets in ascending mask order."""
    return "\n".join([f"ground {s.n}"] + [format_subset(m) for m in s]) + "\n"


def parse_matrix(text: str) -> SymmetricBinaryMatrix:
    rows: list[list[int]] = []
    linenos: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        row = []
        for tok in re.finditer(r"\S+", raw):
            if tok.group() not in ("0", "1"):
                raise ParseError(f"entry {tok.group()!r} is not 0 or 1", lineno, tok.start() + 1)
            row.append(int(tok.group()))
        rows.append(row)
        linenos.append(lineno)
    if not rows:
        raise ParseError("empty matrix", 1)
    n = len(rows)
    if n > MAX_GROUND:
        raise OutOfRange(f"matrix dimension {n} exceeds {MAX_GROUND}")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ParseError(f"row has {len(row)} entries, expected {n}", linenos[i])
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ParseError(f"matrix is not symmetric at ({i + 1},{j + 1})", linenos[i])
    return SymmetricBinaryMatrix.from_array(rows)


def format_matrix(m: SymmetricBinaryMatrix) -> str:
    return str(m) + "\n"


def system_to_json(s: SetSystem) -> dict[str, Any]:
    return {"ground": s.n, "family": [list(elements(m)) for m in s]}


def system_from_json(d: dict[str, Any]) -> SetSystem:
    return make_set_system(int(d["ground"]), [tuple(x) for x in d["family"]])

"""Command-line front end.

Exit codes: 0 for success or a positive verdict, 1 for a negative verdict
(``check``, ``seq``, ``binary``, ``iso``) or a domain error, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import census, golden
from .gf2 import BinaryVerdict, is_binary_by_excluded_minors, is_binary_by_search, matroid_of_matrix
from .isomorphism import are_isomorphic
from .setsystem import DeltaMatroidError, SetSystem, elements, find_violation
from .textio import format_system, parse_matrix, parse_system, system_to_json
from .transforms import apply_sequence, contract, delete, dual, handle_slide, twist


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _load(path: str) -> SetSystem:
    return parse_system(_read(path))


def _parse_set(text: str, n: int) -> int:
    s = parse_system(f"ground {n}\n{text.strip()}\n")
    return s.members()[0]


def _parse_sequence(text: str) -> list[tuple[int, int]]:
    seq = []
    for part in filter(None, (p.strip() for p in text.split(";"))):
        try:
            a, b = (int(x) for x in part.split(","))
        except ValueError:
            raise UsageError(f"bad slide instruction {part!r}; expected 'a,b'") from None
        seq.append((a, b))
    return seq


def _verdict_json(v: BinaryVerdict) -> dict[str, Any]:
    return {
        "is_binary": v.is_binary,
        "matrix": None if v.matrix is None else v.matrix.to_array().tolist(),
        "twist_set": None if v.twist_set is None else list(elements(v.twist_set)),
        "minor_steps": None if v.minor_steps is None else [[st.op, st.element] for st in v.minor_steps],
        "minor_twist": None if v.minor_twist is None else list(elements(v.minor_twist)),
        "relabeling": None if v.relabeling is None else list(v.relabeling),
        "excluded": v.excluded,
    }


class Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, text: str, data: Any) -> None:
        if self.as_json:
            print(json.dumps(data, indent=2))
        else:
            print(text, end="" if text.endswith("\n") else "\n")


def cmd_check(args, out: Output) -> int:
    s = _load(args.file)
    v = find_violation(s)
    data = {
        "is_delta_matroid": v is None,
        "violation": None if v is None else {
            "f1": list(elements(v.f1)), "f2": list(elements(v.f2)), "x": v.x,
        },
    }
    out.emit("delta-matroid" if v is None else f"not a delta-matroid: {v}", data)
    return 0 if v is None else 1


def _emit_system(s: SetSystem, out: Output) -> int:
    out.emit(format_system(s), system_to_json(s))
    return 0


def cmd_slide(args, out: Output) -> int:
    return _emit_system(handle_slide(_load(args.file), args.a, args.b), out)


def cmd_twist(args, out: Output) -> int:
    s = _load(args.file)
    return _emit_system(twist(s, _parse_set(args.A, s.n)), out)


def cmd_dual(args, out: Output) -> int:
    return _emit_system(dual(_load(args.file)), out)


def cmd_delete(args, out: Output) -> int:
    return _emit_system(delete(_load(args.file), args.e), out)


def cmd_contract(args, out: Output) -> int:
    return _emit_system(contract(_load(args.file), args.e), out)


def cmd_seq(args, out: Output) -> int:
    w = apply_sequence(_load(args.file), _parse_sequence(args.sequence))
    verdict = "delta-matroid" if w.is_dm else "not a delta-matroid"
    data = {
        "sequence": [list(ins) for ins in w.sequence],
        "result": system_to_json(w.result),
        "is_delta_matroid": w.is_dm,
    }
    out.emit(format_system(w.result) + verdict + "\n", data)
    return 0 if w.is_dm else 1


def cmd_binary(args, out: Output) -> int:
    s = _load(args.file)
    v = find_violation(s)
    if v is not None:
        raise DeltaMatroidError(f"input is not a delta-matroid: {v}")
    verdicts = {}
    if args.method in ("search", "both"):
        verdicts["search"] = is_binary_by_search(s)
    if args.method in ("minor", "both"):
        verdicts["minor"] = is_binary_by_excluded_minors(s)
    answers = {v.is_binary for v in verdicts.values()}
    agree = len(answers) == 1
    text = "\n".join(f"[{name}] {v.describe()}" for name, v in verdicts.items())
    if not agree:
        text += "\nmethods DISAGREE"
    data = {name: _verdict_json(v) for name, v in verdicts.items()}
    data["agree"] = agree
    out.emit(text, data)
    if not agree:
        return 1
    return 0 if answers.pop() else 1


def cmd_iso(args, out: Output) -> int:
    p = are_isomorphic(_load(args.file1), _load(args.file2))
    out.emit("none" if p is None else " ".join(map(str, p)), {"relabeling": None if p is None else list(p)})
    return 0 if p is not None else 1


def cmd_matrix(args, out: Output) -> int:
    return _emit_system(matroid_of_matrix(parse_matrix(_read(args.file))), out)


def cmd_replicate(args, out: Output) -> int:
    outdir = Path(args.out) if args.out else None
    if outdir is not None:
        outdir.mkdir(parents=True, exist_ok=True)

    gold = golden.run_golden_suite()
    lines: list[str] = []
    theorem = census.verify_theorem(
        args.n, workers=args.workers, on_record=lambda r: lines.append(r.to_line())
    )
    closures = [census.verify_binary_closure(k) for k in range(1, args.n + 1)]
    table = census.summary_table(theorem.summaries)

    text = [
        gold.text(),
        "",
        f"theorem (n <= {args.n}): {'PASS' if theorem.passed else 'FAIL'}; "
        f"{len(theorem.witnesses)} non-binary delta-matroids escape, "
        f"longest shortest escape {theorem.max_depth}; "
        f"stuck non-binary {len(theorem.stuck_nonbinary)}, escaping binary {len(theorem.escaping_binary)}",
    ]
    for c in closures:
        text.append(
            f"binary closure n={c.n}: {'PASS' if c.passed else 'FAIL'} "
            f"({c.systems} systems, {c.slides} slides, {len(c.counterexamples)} counterexamples)"
        )
    text += ["", table]
    if outdir is not None:
        (outdir / "golden.txt").write_text(gold.text() + "\n")
        (outdir / "census.tsv").write_text("n\tfamily\tdm\tbinary\tescape\n" + "\n".join(lines) + "\n")
        (outdir / "summary.md").write_text(table + "\n")
        (outdir / "report.txt").write_text("\n".join(text) + "\n")
    passed = gold.passed and theorem.passed and all(c.passed for c in closures)
    data = {
        "passed": passed,
        "golden": {"passed": gold.passed, "cases": len(gold.results), "annotated": len(gold.flagged)},
        "theorem": {
            "passed": theorem.passed,
            "nonbinary_escaping": len(theorem.witnesses),
            "max_depth": theorem.max_depth,
            "stuck_nonbinary": len(theorem.stuck_nonbinary),
            "escaping_binary": len(theorem.escaping_binary),
        },
        "closure": [{"n": c.n, "passed": c.passed, "slides": c.slides} for c in closures],
        "summary": [vars(s) for s in theorem.summaries],
    }
    out.emit("\n".join(text), data)
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="deltamat", description="Delta-matroids on small ground sets.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    # lets --json also follow the subcommand without overriding an earlier one
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="test the symmetric exchange axiom", parents=[common])
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("slide", help="handle slide a over b", parents=[common])
    c.add_argument("file")
    c.add_argument("a", type=int)
    c.add_argument("b", type=int)
    c.set_defaults(func=cmd_slide)

    c = sub.add_parser("twist", help="twist by a subset", parents=[common])
    c.add_argument("file")
    c.add_argument("-A", required=True, help='subset such as "{1,3}"')
    c.set_defaults(func=cmd_twist)

    c = sub.add_parser("dual", help="twist by the whole ground set", parents=[common])
    c.add_argument("file")
    c.set_defaults(func=cmd_dual)

    for name, fn in (("delete", cmd_delete), ("contract", cmd_contract)):
        c = sub.add_parser(name, help=f"{name} one element", parents=[common])
        c.add_argument("file")
        c.add_argument("e", type=int)
        c.set_defaults(func=fn)

    c = sub.add_parser("seq", help='apply slides "a1,b1;a2,b2;..."', parents=[common])
    c.add_argument("file")
    c.add_argument("sequence")
    c.set_defaults(func=cmd_seq)

    c = sub.add_parser("binary", help="decide binary representability", parents=[common])
    c.add_argument("file")
    c.add_argument("--method", choices=("search", "minor", "both"), default="search")
    c.set_defaults(func=cmd_binary)

    c = sub.add_parser("iso", help="find a relabeling between two systems", parents=[common])
    c.add_argument("file1")
    c.add_argument("file2")
    c.set_defaults(func=cmd_iso)

    c = sub.add_parser("matrix", help="D(A) of a symmetric 0/1 matrix", parents=[common])
    c.add_argument("file")
    c.set_defaults(func=cmd_matrix)

    c = sub.add_parser("replicate", help="golden cases, census and theorem check", parents=[common])
    c.add_argument("--n", type=int, default=4, choices=range(1, census.CENSUS_MAX + 1))
    c.add_argument("--out", help="directory for report files")
    c.add_argument("--workers", type=int, default=1)
    c.set_defaults(func=cmd_replicate)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, Output(args.json))
    except UsageError as exc:
        print(f"deltamat: {exc}", file=sys.stderr)
        return 2
    except DeltaMatroidError as exc:
        print(f"deltamat: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

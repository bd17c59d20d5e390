"""Command line: classify, audit, tables-dump, batch."""
from __future__ import annotations

import argparse
import json
import os
import sys

from .cubic import UnsupportedExtension
from .invariants import InconsistencyError
from .parser import ParseError
from .poly import DegreeError, ShapeError
from .report import classify_text, consistent, render
from .tables import IncompleteTable, NotBType, TableInconsistency, table_text

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_B = 2
EXIT_EXTENSION = 3
EXIT_INTERNAL = 4

_ERRORS = (
    ((ParseError, DegreeError, ShapeError), EXIT_INPUT, "input"),
    ((NotBType,), EXIT_NOT_B, "not_b_type"),
    ((UnsupportedExtension,), EXIT_EXTENSION, "unsupported_extension"),
    ((IncompleteTable, TableInconsistency, InconsistencyError), EXIT_INTERNAL, "internal"),
)


def error_code(exc: BaseException):
    for kinds, code, label in _ERRORS:
        if isinstance(exc, kinds):
            return code, label
    return None


def _read_input(arg: str) -> str:
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
        return " ".join(lines)
    return arg


def run_one(text: str, verify: bool = False, seed: int = 0):
    """(exit code, report or error record)."""
    try:
        rep = classify_text(text, verify=verify, seed=seed)
    except Exception as exc:
        hit = error_code(exc)
        if hit is None:
            raise
        code, label = hit
        return code, {"input": text, "error": {"kind": label, "type": type(exc).__name__,
                                                "message": str(exc), "exit_code": code}}
    return (EXIT_OK if consistent(rep) else EXIT_INTERNAL), rep


def cmd_classify(args) -> int:
    text = _read_input(args.poly)
    code, rep = run_one(text, verify=args.verify, seed=args.seed)
    if args.json:
        print(json.dumps(rep, indent=2))
    elif "error" in rep:
        print(f"error ({rep['error']['kind']}): {rep['error']['message']}", file=sys.stderr)
    else:
        print(render(rep))
    return code


def cmd_audit(args) -> int:
    from .verify import audit_rows

    lines = audit_rows(seed=args.seed)
    if args.json:
        print(json.dumps({"seed": args.seed, "rows": [ln.to_json() for ln in lines]}, indent=2))
    else:
        for ln in lines:
            print(ln.line())
            for x in ln.findings:
                print(f"      finding: {x}")
        npass = sum(ln.passed for ln in lines)
        print(f"{npass}/{len(lines)} rows pass")
    return EXIT_OK if all(ln.passed for ln in lines) else EXIT_INTERNAL


def cmd_tables_dump(args) -> int:
    sys.stdout.write(table_text())
    return EXIT_OK


def cmd_batch(args) -> int:
    worst = EXIT_OK
    with open(args.file, encoding="utf-8") as fh:
        for raw in fh:
            text = raw.strip()
            if not text or text.startswith("#"):
                continue
            code, rep = run_one(text, verify=args.verify, seed=args.seed)
            worst = max(worst, code)
            print(json.dumps(rep, sort_keys=True))
    return worst


class _Parser(argparse.ArgumentParser):
    # usage errors share exit code 1 with malformed input; 2 means NotBType
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cubicinf",
                description="Singularities at infinity of cubic polynomials C^3 -> C.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify one polynomial (text or file)")
    c.add_argument("poly", help="polynomial in x0, x1, x2, or a file holding one")
    c.add_argument("--json", action="store_true")
    c.add_argument("--verify", action="store_true", help="cross-check with the germ oracle")
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_classify)

    a = sub.add_parser("audit", help="check one representative per table row")
    a.add_argument("--json", action="store_true")
    a.add_argument("--seed", type=int, default=0)
    a.set_defaults(func=cmd_audit)

    d = sub.add_parser("tables-dump", help="print the embedded table data")
    d.set_defaults(func=cmd_tables_dump)

    b = sub.add_parser("batch", help="one polynomial per line in, one JSON record per line out")
    b.add_argument("file")
    b.add_argument("--verify", action="store_true")
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=cmd_batch)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

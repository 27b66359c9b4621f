"""Command-line entry point: ``unemploykit run`` and ``unemploykit list``.

Exit codes: 0 on success, 1 for unreadable or invalid input (including
parameters a model rejects), 2 when a model fails on valid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
import tempfile
from pathlib import Path

from ._exact import fmt_number
from .errors import ModelError, ParameterError
from .scenario import Scenario, ScenarioError, Table, bundled_dir, evaluate, load_scenario

EXIT_OK, EXIT_INVALID, EXIT_MODEL = 0, 1, 2


def _cell(value) -> str:
    if hasattr(value, "value") and not isinstance(value, (int, float)):
        value = value.value  # enums
    return fmt_number(value)


def render_csv(table: Table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_cell(row.get(c)) for c in table.columns])
    return buf.getvalue()


def render_text(table: Table) -> str:
    cells = [list(table.columns)] + [[_cell(row.get(c)) for c in table.columns] for row in table.rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(table.columns))]
    lines = ["  ".join(v.rjust(w) for v, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"


def render(table: Table, fmt: str) -> str:
    return render_csv(table) if fmt == "csv" else render_text(table)


def write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _bundled_files() -> list[Path]:
    return sorted(Path(str(p)) for p in bundled_dir().iterdir() if p.name.endswith(".json"))


def catalog(extra_dirs=()) -> list[Scenario]:
    """Bundled scenarios plus any ``*.json`` found in ``extra_dirs``.

    Raises :class:`ScenarioError` naming the first file that fails to load.
    """
    files = _bundled_files()
    for d in extra_dirs:
        d = Path(d)
        if not d.is_dir():
            raise ScenarioError(f"{d}: not a directory")
        files += sorted(d.glob("*.json"))
    return [load_scenario(f) for f in files]


def resolve(ref: str) -> Path:
    """A path on disk, or the name or file stem of a bundled scenario."""
    path = Path(ref)
    if path.exists():
        return path
    for f in _bundled_files():
        if ref in (f.stem, f.name):
            return f
        try:
            if load_scenario(f).name == ref:
                return f
        except ScenarioError:
            continue
    return path  # let the loader report it missing


def _render_all(scenario: Scenario, fmt: str) -> list[tuple[object, str]]:
    return [(out, render(table, fmt)) for out, table in evaluate(scenario)]


def _destination(scenario: Scenario, out, out_dir: Path | None, fmt: str) -> Path | None:
    if out.path:
        return (out_dir or Path.cwd()) / out.path
    if out_dir is not None:
        ext = "csv" if fmt == "csv" else "txt"
        return out_dir / f"{scenario.name}_{out.table}.{ext}"
    return None


def run_one(ref: str, out_dir: Path | None, fmt: str, seedless: bool, stdout) -> int:
    try:
        scenario = load_scenario(resolve(ref))
        rendered = _render_all(scenario, fmt)
        if seedless and _render_all(scenario, fmt) != rendered:
            print(f"{ref}: output differs between two identical runs", file=sys.stderr)
            return EXIT_MODEL
    except ModelError as exc:
        print(f"{ref}: model error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MODEL
    except ScenarioError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INVALID
    except (ParameterError, TypeError, KeyError) as exc:
        print(f"{ref}: invalid parameters: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID

    printed = 0
    for out, text in rendered:
        dest = _destination(scenario, out, out_dir, fmt)
        if dest is None:
            if printed:
                stdout.write("\n")
            stdout.write(text)
            printed += 1
        else:
            write_atomic(dest, text)
    return EXIT_OK


def cmd_run(args, stdout) -> int:
    out_dir = Path(args.out) if args.out else None
    return max(run_one(ref, out_dir, args.format, args.seedless, stdout) for ref in args.scenarios)


def cmd_list(args, stdout) -> int:
    try:
        scenarios = catalog(args.scenario_dir or ())
    except ScenarioError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INVALID
    width = max(len(s.name) for s in scenarios)
    for s in scenarios:
        stdout.write(f"{s.name.ljust(width)}  {s.kind:<14}  {s.source.name}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unemploykit", description="Run bundled or user scenarios.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="evaluate one or more scenario files")
    run.add_argument("scenarios", nargs="+", metavar="SCENARIO",
                     help="path to a scenario JSON file, or the name of a bundled scenario")
    run.add_argument("--out", metavar="DIR", help="directory for output files (default: paths relative to cwd; "
                     "tables without a path go to DIR/<name>_<table>.csv)")
    run.add_argument("--format", choices=("csv", "table"), default="csv")
    run.add_argument("--seedless", action="store_true",
                     help="evaluate twice and fail unless the output bytes match")
    run.set_defaults(func=cmd_run)

    lst = sub.add_parser("list", help="show the scenario catalogue")
    lst.add_argument("--scenario-dir", action="append", metavar="DIR",
                     help="also list scenarios found in DIR (repeatable)")
    lst.set_defaults(func=cmd_list)
    return parser


def main(argv=None, stdout=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args, stdout or sys.stdout)


if __name__ == "__main__":
    sys.exit(main())

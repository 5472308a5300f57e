"""Command-line front end: run scenario files and emit reports.

    cyclocal run FILE [FILE ...]      run the given scenario files
    cyclocal verify-all DIR           run every *.scn file in a directory

Common flags: --format text|json, --seed N (overrides scenario seeds),
--max-degree N (degree bound for the seeded random tasks, default 8).
Exit status is 0 exactly when every task of every scenario passes.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ScenarioParseError
from .runner import emit_reports, run_scenario
from .scenario import parse_scenario


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for the random-instance tasks")
    parser.add_argument("--max-degree", type=int, default=8,
                        help="degree bound for random test polynomials")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="cyclocal",
        description="Verify prime-order automorphism scenarios on localized polynomial rings")
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run one or more scenario files")
    run_p.add_argument("files", nargs="+", type=Path)
    _add_common(run_p)

    all_p = sub.add_parser("verify-all", help="run every *.scn scenario in a directory")
    all_p.add_argument("directory", type=Path)
    _add_common(all_p)

    args = parser.parse_args(argv)

    if args.command == "run":
        files = args.files
    else:
        if not args.directory.is_dir():
            print(f"error: {args.directory} is not a directory", file=sys.stderr)
            return 2
        files = sorted(args.directory.glob("*.scn"))
        if not files:
            print(f"error: no *.scn files in {args.directory}", file=sys.stderr)
            return 2

    reports = []
    for path in files:
        try:
            sc = parse_scenario(path)
        except (ScenarioParseError, OSError) as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            return 2
        reports.append(run_scenario(sc, seed=args.seed, max_degree=args.max_degree))

    print(emit_reports(reports, args.format))
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``matlift classify|split|minor|quotients|verify``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .catalog import catalog_names, cycle_matroid, load_graph, named
from .construct import COLOOP, elementary_quotients, split
from .matroid import BinaryMatroid, FormatError, MatroidError, dumps_matroid, is_eulerian, loads_matroid
from .recognition import has_minor, is_cographic, is_graphic
from . import verify


class UsageError(Exception):
    pass


def resolve(arg: str) -> BinaryMatroid:
    """A catalog name, a matroid file, or a graph file (read as its cycle matroid)."""
    if arg in catalog_names():
        return named(arg)
    path = Path(arg)
    if not path.is_file():
        raise UsageError(f"{arg!r} is neither a catalog name nor a readable file")
    text = path.read_text()
    try:
        return loads_matroid(text)
    except FormatError as matroid_error:
        try:
            return cycle_matroid(load_graph(text))
        except (FormatError, MatroidError):
            raise UsageError(f"{arg}: {matroid_error}") from None


def _verdict(result) -> str:
    if result:
        return "yes"
    return f"no ({result.excluded} minor)"


def cmd_classify(args) -> int:
    M = resolve(args.matroid)
    print(f"rank: {M.rank}")
    print(f"|E|: {M.size}")
    print(f"graphic: {_verdict(is_graphic(M))}")
    print(f"cographic: {_verdict(is_cographic(M))}")
    print(f"Eulerian: {'yes' if is_eulerian(M) else 'no'}")
    return 0


def cmd_split(args) -> int:
    M = resolve(args.matroid)
    S = [s for s in args.set.split(",") if s]
    M_S = split(M, S)
    sys.stdout.write(dumps_matroid(M_S, "split"))
    print(f"graphic: {_verdict(is_graphic(M_S))}")
    return 0


def cmd_minor(args) -> int:
    M, T = resolve(args.matroid), resolve(args.target)
    witness = has_minor(M, T)
    if witness is None:
        print("no minor")
        return 1
    print("delete: " + ",".join(e for e in M.labels if e in witness.deleted))
    print("contract: " + ",".join(e for e in M.labels if e in witness.contracted))
    return 0


def cmd_quotients(args) -> int:
    M = resolve(args.matroid)
    for record in elementary_quotients(M, dedupe_isomorphic=args.dedupe):
        if args.graphic_only and not record.is_graphic:
            continue
        column = COLOOP if record.extension_column == COLOOP else "".join(map(str, record.extension_column))
        kind = "graphic" if record.is_graphic else "non-graphic"
        match = record.catalog_match or "-"
        print(f"{column}\trank {record.quotient.rank}\t{kind}\t{match}")
    return 0


def cmd_verify(args) -> int:
    reports = verify.run(args.statement, max_edges=args.max_edges, jobs=args.jobs)
    for report in reports:
        print(report.text())
    print()
    for report in reports:
        print(report.machine_line())
    if args.json:
        Path(args.json).write_text(verify.reports_json(reports))
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matlift", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="rank, size, graphic/cographic/Eulerian verdicts")
    p.add_argument("matroid")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("split", help="print the splitting M_S and whether it is graphic")
    p.add_argument("matroid")
    p.add_argument("--set", required=True, help="comma-separated element labels")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("minor", help="search for a minor isomorphic to TARGET")
    p.add_argument("matroid")
    p.add_argument("--target", required=True)
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("quotients", help="list elementary quotients")
    p.add_argument("matroid")
    p.add_argument("--graphic-only", action="store_true")
    p.add_argument("--dedupe", action="store_true")
    p.set_defaults(func=cmd_quotients)

    p = sub.add_parser("verify", help="run a statement check, or all of them")
    p.add_argument("statement", choices=sorted(verify.STATEMENTS) + ["all"], metavar="statement-id|all")
    p.add_argument("--max-edges", type=int, default=verify.DEFAULT_MAX_EDGES)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", help="also write the full reports with certificates to this file")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (UsageError, FormatError, MatroidError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

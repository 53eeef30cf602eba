"""Command-line interface.

Exit codes: 0 success, 1 nothing found or a failed claim, 2 malformed input.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys

from .deciders import PROPERTY_NAMES, classify, jmix, jmix_of_set
from .io import (
    DocumentError,
    atlas_row,
    dumps_system,
    format_set,
    load_system,
    names_of,
    profile_csv,
    profile_document,
    profile_text,
    to_document,
    with_names,
    write_atlas_csv,
    write_atlas_jsonl,
)
from .topology import NotIntersectionClosed, NotUnionClosed, TopologyError
from .verify import all_passed, verify_paper
from .zoo import CapExceeded, SearchQuery, UnsatisfiableQuery, key_string, search

EXIT_OK, EXIT_FAIL, EXIT_BAD_INPUT = 0, 1, 2


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _split(values: list[str] | None) -> list[str]:
    out = []
    for v in values or []:
        out.extend(p for p in v.split(",") if p.strip())
    return out


def _raw_document(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _describe_topology_error(exc: TopologyError, points: list[str]) -> str:
    if isinstance(exc, (NotUnionClosed, NotIntersectionClosed)):
        u, v = exc.pair
        su = format_set([p for i, p in enumerate(points) if u >> i & 1])
        sv = format_set([p for i, p in enumerate(points) if v >> i & 1])
        kind = "NotUnionClosed" if isinstance(exc, NotUnionClosed) else "NotIntersectionClosed"
        op = "union" if kind == "NotUnionClosed" else "intersection"
        return f"{kind}: the {op} of {su} and {sv} is not open"
    return f"{type(exc).__name__}: {exc}"


def _load(path: str):
    """Parse a system file, returning (system, None) or (None, message)."""
    try:
        return load_system(path), None
    except OSError as exc:
        return None, f"cannot read {path}: {exc}"
    except DocumentError as exc:
        return None, f"malformed document: {exc}"
    except TopologyError as exc:
        try:
            points = _raw_document(path)["points"]
        except Exception:
            points = []
        return None, _describe_topology_error(exc, points)


def cmd_validate(args) -> int:
    sysm, problem = _load(args.path)
    if sysm is None:
        _err(problem)
        return EXIT_BAD_INPUT
    t = sysm.topology
    raw = _raw_document(args.path)
    given = {frozenset(u) for u in raw["opens"]}
    if frozenset() not in given or frozenset(raw["points"]) not in given:
        print("notice: empty set and/or whole space added to opens")
    print("valid topology")
    print("opens: " + " ".join(format_set(names_of(t, u)) for u in t.opens))
    print(dumps_system(sysm))
    return EXIT_OK


def cmd_classify(args) -> int:
    sysm, problem = _load(args.path)
    if sysm is None:
        _err(problem)
        return EXIT_BAD_INPUT
    p = classify(sysm)
    if args.format == "json":
        print(json.dumps(profile_document(sysm, p), indent=2))
    elif args.format == "csv":
        sys.stdout.write(profile_csv(sysm, p))
    else:
        print(profile_text(sysm, p))
    return EXIT_OK


def cmd_jmix(args) -> int:
    sysm, problem = _load(args.path)
    if sysm is None:
        _err(problem)
        return EXIT_BAD_INPUT
    names = list(sysm.topology.point_names)
    if args.all:
        for x, name in enumerate(names):
            print(f"J({name}) = {format_set(names_of(sysm, jmix(sysm, x)))}")
        print(f"J(X) = {format_set(names_of(sysm, jmix_of_set(sysm, sysm.topology.full)))}")
        return EXIT_OK
    if args.point is None:
        _err("give --point NAME or --all")
        return EXIT_BAD_INPUT
    if args.point not in names:
        _err(f"unknown point {args.point!r}")
        return EXIT_BAD_INPUT
    print(format_set(names_of(sysm, jmix(sysm, names.index(args.point)))))
    return EXIT_OK


def _query(args, dedup: bool, limit=None) -> SearchQuery:
    return SearchQuery(
        args.points,
        require=frozenset(_split(getattr(args, "require", None))),
        forbid=frozenset(_split(getattr(args, "forbid", None))),
        filters=frozenset(_split(getattr(args, "filter", None))),
        limit=limit,
        dedup=dedup,
    )


def cmd_enumerate(args) -> int:
    try:
        records = search(_query(args, args.dedup))
    except CapExceeded as exc:
        _err(str(exc))
        return EXIT_BAD_INPUT
    rows = (atlas_row(i, with_names(r.system), r.profile, key_string(r.ensure_key()),
                      r.class_size)
            for i, r in enumerate(records))
    writer = write_atlas_csv if args.format == "csv" else write_atlas_jsonl
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            writer(rows, fh)
    else:
        writer(rows, sys.stdout)
    total = sum(r.class_size for r in records)
    if args.dedup:
        _err(f"{len(records)} classes from {total} systems")
    else:
        _err(f"{len(records)} systems")
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        records = search(_query(args, args.dedup, args.limit))
    except (UnsatisfiableQuery, CapExceeded, ValueError) as exc:
        _err(str(exc))
        return EXIT_BAD_INPUT
    if not records:
        _err("no system found")
        return EXIT_FAIL
    for r in records:
        print(json.dumps(to_document(with_names(r.system))))
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    points = tuple(int(p) for p in _split([args.sample_points]))
    lines = verify_paper(args.max_points, args.sweep_points, args.samples, points, args.seed)
    for line in lines:
        print(line.render())
    ok = all_passed(lines)
    failed = sum(line.status == "FAIL" for line in lines)
    print(f"{'ALL PASS' if ok else f'{failed} FAILED'}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topodyn",
        description="Decide transitivity and mixing properties of self-maps on finite spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a system file's topology")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", help="decide every property of a system")
    p.add_argument("path")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("jmix", help="J^mix limit sets")
    p.add_argument("path")
    p.add_argument("--point")
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_jmix)

    p = sub.add_parser("enumerate", help="atlas of every system on n points")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--dedup", action="store_true", help="one row per relabeling class")
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("search", help="find systems with given properties")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--require", action="append", help="comma-separated property names")
    p.add_argument("--forbid", action="append")
    p.add_argument("--filter", action="append",
                   help="continuous, no-isolated-points, hausdorff, nontrivial-topology")
    p.add_argument("--limit", type=int)
    p.add_argument("--dedup", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-paper", help="check fixtures, sweep and claim suite")
    p.add_argument("--max-points", type=int, default=3,
                   help="exhaustive universe size for the claim suite")
    p.add_argument("--sweep-points", type=int, default=4,
                   help="largest n in the no-hypermixing sweep")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--sample-points", default="4,5")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    with contextlib.suppress(BrokenPipeError):
        return args.func(args)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

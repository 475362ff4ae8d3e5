"""Command-line front end: verify, search, tables, curve, fsck."""

from __future__ import annotations

import argparse
import datetime
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .curves import Curve, SingularCurveError, find_points, torsion
from .records import (RecordSink, read_checkpoint, read_lines, record_key_of_dict, verify_dict,
                      write_checkpoint)
from .search import Checkpoint, PartitionRange, SearchBounds, Sweep, UnknownStrategy, worker_count
from .shapes import Shape, candidate, classify
from .tables import TABLE_IDS, check_table
from .transforms import ALIASES, InvalidParameters, NamedTransform, curve_of, param_of_point, verify_square

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

VERIFY_ARITY = {
    Shape.TRAPEZIUM: (("x", "y", "z"), ("x", "y", "z", "v")),
    Shape.RHOMBUS: (("x", "z", "w"),),
    Shape.PARALLELOGRAM: (("x", "y", "z", "w"),),
    Shape.KITE: (("x", "y", "z", "w"),),
    Shape.GENERAL: (("x", "y", "z", "w", "u", "v"),),
    Shape.CYCLIC: (("x", "y", "z", "w", "u", "v"),),
}


class UsageError(Exception):
    pass


def fmt(q) -> str:
    if q is None:
        return "-"
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fmt_point(P) -> str:
    return "O" if P is None else f"({fmt(P[0])}, {fmt(P[1])})"


def parse_rationals(text: str) -> list:
    try:
        return [Fraction(s.strip()) for s in text.split(",") if s.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse {text!r}: {exc}")


def parse_ints(text: str) -> list:
    vals = parse_rationals(text)
    if any(v.denominator != 1 for v in vals):
        raise UsageError(f"expected integers, got {text!r}")
    return [int(v) for v in vals]


# --- verify ----------------------------------------------------------------------

def render_report(c, rep) -> str:
    lines = [f"shape: {c.base.kind.value}  h = {fmt(c.h)}  geometry: {c.base.geometry_status}"]
    for name, t, ok in rep.conditions:
        lines.append(f"  {name} = {fmt(t):>12}  {name}^2 + h^2 {'square' if ok else 'not square'}")
    verdict = "PERFECT" if rep.perfect else "not perfect"
    lines.append(f"{rep.square_count}/{rep.required_count} squares; {verdict}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    shape = Shape(args.shape)
    sides = parse_rationals(args.sides)
    h = parse_rationals(args.h)
    if len(h) != 1:
        raise UsageError("--h takes one value")
    names = next((n for n in VERIFY_ARITY[shape] if len(n) == len(sides)), None)
    if names is None:
        want = " or ".join(str(len(n)) for n in VERIFY_ARITY[shape])
        raise UsageError(f"{shape.value} needs {want} lengths ({', '.join(VERIFY_ARITY[shape][0])}), "
                         f"got {len(sides)}")
    if any(s <= 0 for s in sides) or h[0] <= 0:
        raise UsageError("lengths and h must be positive")
    c = candidate(shape, dict(zip(names, sides)), h[0])
    rep = classify(c)
    print(render_report(c, rep))
    return EXIT_OK if rep.perfect else EXIT_FAIL


# --- search ----------------------------------------------------------------------

def bounds_from_args(args) -> SearchBounds:
    return SearchBounds(param_height_max=args.height_max, point_numerator_bound=args.point_bound,
                        point_denominator_bound=args.denominator_bound, L=args.L,
                        min_square_count=args.min_squares, scale_cap=args.scale_cap,
                        max_generators=args.max_generators, distinct=args.distinct)


def _step_range(r: PartitionRange) -> list:
    return r.sweep().collect(r.start, r.stop)


def cmd_search(args) -> int:
    try:
        bounds = bounds_from_args(args)
        sweep = Sweep(args.shape, args.strategy, bounds)
    except (ValueError, UnknownStrategy) as exc:
        raise UsageError(str(exc))
    output = args.output or f"{sweep.shape.value}-{sweep.strategy.lower()}.ndjson"
    ckpath = args.checkpoint or output + ".ckpt"
    every = max(1, args.checkpoint_every)
    seen = set()
    if args.resume:
        if not os.path.exists(ckpath):
            raise UsageError(f"no checkpoint at {ckpath}")
        ck, ck_output = read_checkpoint(ckpath)
        if ck.strategy != sweep.id or ck.bounds != bounds:
            raise UsageError("checkpoint strategy or bounds differ from the command line; refusing to resume")
        if ck_output and os.path.abspath(ck_output) != os.path.abspath(output):
            raise UsageError("checkpoint belongs to a different output file")
        # records written after the last checkpoint are dropped and regenerated
        kept = read_lines(output)[:ck.emitted_count]
        with open(output, "w") as fh:
            fh.writelines(line + "\n" for line in kept)
        for line in kept:
            seen.add(record_key_of_dict(json.loads(line)))
        cursor, emitted = ck.cursor, ck.emitted_count
    else:
        open(output, "w").close()
        cursor, emitted = 0, 0
    sink = RecordSink(output, bounds)
    n = len(sweep)
    parts = args.parts if args.parts else worker_count()
    limit = n if args.stop_after is None else min(n, cursor + args.stop_after)
    pool = ProcessPoolExecutor(max_workers=parts) if parts > 1 else None
    steps_since = 0
    try:
        while cursor < limit:
            width = min(parts, limit - cursor)
            ranges = [PartitionRange(sweep.shape.value, sweep.strategy, bounds, i, i + 1)
                      for i in range(cursor, cursor + width)]
            chunks = list(pool.map(_step_range, ranges)) if pool else [_step_range(r) for r in ranges]
            for recs in chunks:
                fresh = []
                for r in recs:
                    key = r.key()
                    if key not in seen:
                        seen.add(key)
                        fresh.append(r)
                emitted += sink.write(fresh)
            cursor += width
            steps_since += width
            if steps_since >= every or cursor == limit:
                write_checkpoint(ckpath, Checkpoint(sweep.id, bounds, cursor, emitted), output)
                steps_since = 0
    finally:
        if pool:
            pool.shutdown()
    perfect = sum(json.loads(line)["perfect"] for line in read_lines(output))
    state = "complete" if cursor >= n else f"stopped at cursor {cursor}"
    stamp = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
    print(f"summary: strategy={sweep.id} items={cursor}/{n} records={emitted} perfect={perfect} "
          f"{state} output={output} at {stamp}")
    return EXIT_OK if emitted else EXIT_FAIL


# --- tables ----------------------------------------------------------------------

def cmd_tables(args) -> int:
    try:
        checks = check_table(args.table)
    except KeyError as exc:
        raise UsageError(str(exc.args[0]))
    passed = 0
    for c in checks:
        passed += c.ok
        print(f"{'PASS' if c.ok else 'FAIL'}  {c.label}" + (f"  [{c.detail}]" if c.detail else ""))
    print(f"{passed}/{len(checks)} PASS")
    return EXIT_OK if passed == len(checks) else EXIT_FAIL


# --- curve -----------------------------------------------------------------------

def cmd_curve(args) -> int:
    t = None
    if args.transform:
        tid = ALIASES.get(args.transform.lower(), args.transform.upper())
        params = tuple(parse_ints(args.params)) if args.params else ()
        try:
            t = NamedTransform(tid, params)
            C = curve_of(t)
        except InvalidParameters as exc:
            raise UsageError(str(exc))
        except SingularCurveError as exc:
            print(f"singular curve: {exc}")
            return EXIT_FAIL
        except KeyError:
            raise UsageError(f"unknown transform {args.transform!r}")
    elif args.raw:
        co = parse_rationals(args.raw)
        if len(co) == 4:
            if co[0] != 1:
                raise UsageError("raw coefficients are 1,a2,a4,a6 with leading 1")
            co = co[1:]
        if len(co) != 3:
            raise UsageError("--raw takes 1,a2,a4,a6 or a2,a4,a6")
        try:
            C = Curve(*co)
        except SingularCurveError as exc:
            print(f"singular curve: {exc}")
            return EXIT_FAIL
    else:
        raise UsageError("give --transform or --raw")
    print(f"curve: {C}")
    if args.action == "torsion":
        info = torsion(C)
        print(f"torsion: {info.structure} ({len(info)} points)")
        for P, k in info.points:
            print(f"  {fmt_point(P)}  order {k}")
        return EXIT_OK
    pts = find_points(C, args.point_bound, args.denominator_bound)
    if args.action == "points":
        for P in pts:
            print(f"  {fmt_point(P)}")
        print(f"{len(pts)} points with |U| <= {args.point_bound}, denominator <= {args.denominator_bound}^2")
        return EXIT_OK if pts else EXIT_FAIL
    if t is None:
        raise UsageError("--action map needs --transform")
    mapped = 0
    for P in pts:
        q = param_of_point(t, P)
        if q is None:
            print(f"  {fmt_point(P)} -> pole")
            continue
        mapped += 1
        print(f"  {fmt_point(P)} -> {fmt(q)}  square={verify_square(t, q)}")
    return EXIT_OK if mapped else EXIT_FAIL


# --- fsck ------------------------------------------------------------------------

def cmd_fsck(args) -> int:
    bad = total = 0
    for lineno, line in enumerate(read_lines(args.path), 1):
        total += 1
        try:
            problems = verify_dict(json.loads(line))
        except json.JSONDecodeError as exc:
            problems = [f"bad JSON: {exc}"]
        if problems:
            bad += 1
            print(f"line {lineno}: " + "; ".join(problems))
    print(f"fsck: {total} records, {bad} bad")
    return EXIT_OK if bad == 0 else EXIT_FAIL


# --- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="prismforge", description=__doc__)
    p.add_argument("--version", action="version", version=f"prismforge {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    shapes = [s.value for s in Shape]

    v = sub.add_parser("verify", help="classify one candidate prism")
    v.add_argument("--shape", required=True, choices=shapes)
    v.add_argument("--sides", required=True, help="comma-separated lengths in x,y,z,w,u,v order")
    v.add_argument("--h", required=True)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="run a bounded sweep, appending records")
    s.add_argument("--shape", required=True, choices=shapes)
    s.add_argument("--strategy", default=None)
    s.add_argument("--height-max", type=int, required=True)
    s.add_argument("--point-bound", type=int, default=SearchBounds.point_numerator_bound)
    s.add_argument("--denominator-bound", type=int, default=SearchBounds.point_denominator_bound)
    s.add_argument("--L", type=int, default=SearchBounds.L)
    s.add_argument("--min-squares", type=int, default=None)
    s.add_argument("--scale-cap", type=int, default=SearchBounds.scale_cap)
    s.add_argument("--max-generators", type=int, default=SearchBounds.max_generators)
    s.add_argument("--distinct", action="store_true")
    s.add_argument("--output", default=None)
    s.add_argument("--checkpoint", default=None)
    s.add_argument("--checkpoint-every", type=int, default=1)
    s.add_argument("--resume", action="store_true")
    s.add_argument("--parts", type=int, default=None)
    s.add_argument("--stop-after", type=int, default=None, help="process at most N cursor items")
    s.set_defaults(func=cmd_search)

    t = sub.add_parser("tables", help="re-verify a stored table")
    t.add_argument("table", help="one of " + ", ".join(TABLE_IDS))
    t.set_defaults(func=cmd_tables)

    c = sub.add_parser("curve", help="inspect a curve")
    c.add_argument("--transform")
    c.add_argument("--params", "--xy", "--pq", "--ij", "--mn", "--bc", dest="params")
    c.add_argument("--raw")
    c.add_argument("--action", choices=("torsion", "points", "map"), default="points")
    c.add_argument("--point-bound", type=int, default=1000)
    c.add_argument("--denominator-bound", type=int, default=2)
    c.set_defaults(func=cmd_curve)

    f = sub.add_parser("fsck", help="re-verify every record in a file")
    f.add_argument("path")
    f.set_defaults(func=cmd_fsck)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

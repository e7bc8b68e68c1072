"""Command-line entry point.

Exit codes: 0 success, 1 a verification reported a mismatch, 2 bad usage
(argparse), 3 a precondition failed, 4 the search size guard refused.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from pathlib import Path
from typing import Optional, TextIO

from . import bounds
from .constructions import KINDS, construct
from .family import format_family, parse_family
from .params import FIELDS, REQUIRED, ParamSet, PreconditionError, SizeGuardError, Theorem
from .properties import (
    clique_witness,
    cross_intersecting_witness,
    is_star_subfamily,
    t_intersecting_witness,
    trace_profile,
    trace_witness,
)
from .replay import induction_replay
from .search import SEARCHABLE, ConstraintSpec, max_candidates, max_constrained_sum, max_cross_sum
from .shifting import shift_family, shift_to_canonical, shift_violation

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_PRECONDITION, EXIT_GUARD = 0, 1, 2, 3, 4

CSV_COLUMNS = ("theorem", "n", "k", "t", "s", "l", "m", "bound", "search_max", "match", "nodes", "seconds")


def parse_range(text: str) -> list[int]:
    """'4..6' -> [4, 5, 6]; '0,2,5..6' -> [0, 2, 5, 6]."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def _param_flags(p: argparse.ArgumentParser, kind=int) -> None:
    for name in FIELDS:
        p.add_argument(f"--{name}", type=kind, default=None)


def _given(args, names=FIELDS) -> dict:
    return {x: getattr(args, x) for x in names if getattr(args, x) is not None}


def _dump(obj, out: TextIO) -> None:
    out.write(json.dumps(obj, ensure_ascii=False) + "\n")


def _read_family(path: str):
    return parse_family(Path(path).read_text(encoding="utf-8"))


def _write_family(fam, dest: Optional[str], out: TextIO) -> None:
    text = format_family(fam)
    if dest:
        Path(dest).write_text(text, encoding="utf-8")
    else:
        out.write(text)


# -- subcommands -------------------------------------------------------------


def cmd_bound(args, out: TextIO) -> int:
    bv = bounds.evaluate(args.formula, **_given(args))
    out.write(f"{bv.value}\n")
    _dump(bv.to_dict(), out)
    return EXIT_OK


def cmd_construct(args, out: TextIO) -> int:
    params = _given(args, FIELDS + ("x", "r"))
    fam = construct(args.kind, **params)
    _write_family(fam, args.out, out)
    return EXIT_OK


def cmd_check(args, out: TextIO) -> int:
    F = _read_family(args.file)
    records = []
    if args.t_intersecting is not None:
        w = t_intersecting_witness(F, args.t_intersecting)
        records.append({"predicate": f"t_intersecting(t={args.t_intersecting})", "holds": w is None,
                        "witness": list(w) if w else []})
    if args.cross_with:
        G = _read_family(args.cross_with)
        w = cross_intersecting_witness(F, G)
        records.append({"predicate": "cross_intersecting", "holds": w is None, "witness": list(w) if w else []})
    if args.clique is not None:
        w = clique_witness(F, args.clique)
        records.append({"predicate": f"contains_clique(m={args.clique})", "holds": w is None,
                        "witness": [w] if w else []})
    if args.trace is not None:
        value = trace_profile(F, args.trace)
        need = args.trace_at_least if args.trace_at_least is not None else value
        w = trace_witness(F, args.trace, need)
        records.append({"predicate": f"trace(m={args.trace}, at_least={need})", "holds": w is None,
                        "value": value, "witness": [w] if w else []})
    defaults = not records and not args.star and not args.shifted
    if args.star or defaults:
        x = is_star_subfamily(F)
        records.append({"predicate": "star", "holds": x is not None, "witness": [] if x is None else [x]})
    if args.shifted or defaults:
        v = shift_violation(F)
        records.append({"predicate": "shifted", "holds": v is None, "witness": list(v) if v else []})
    for r in records:
        _dump(r, out)
    return EXIT_OK


def cmd_shift(args, out: TextIO) -> int:
    F = _read_family(args.file)
    if (args.i is None) != (args.j is None):
        raise PreconditionError("--i and --j must be given together")
    if args.i is None:
        res = shift_to_canonical(F)
    else:
        try:
            res = shift_family(F, args.i, args.j)
        except ValueError as e:
            raise PreconditionError(str(e)) from None
    _write_family(res, args.out, out)
    return EXIT_OK


def cmd_search(args, out: TextIO) -> int:
    values = _given(args)
    if args.theorem == "cross":
        if not {"n", "k", "l"} <= values.keys():
            raise PreconditionError("cross search needs --n, --k and --l")
        rep = max_cross_sum(values["n"], values["k"], values["l"], not args.allow_empty, oracle=args.oracle)
    else:
        spec = ConstraintSpec.of(args.theorem, **values)
        rep = max_constrained_sum(spec, oracle=args.oracle, shifted_only=args.shifted_only)
    _dump(rep.to_dict(), out)
    return EXIT_OK


def cmd_replay(args, out: TextIO) -> int:
    F = _read_family(args.f)
    G = _read_family(args.g)
    values = _given(args)
    values.setdefault("n", F.universe_n)
    report = induction_replay(F, G, ParamSet(args.theorem, **values))
    _dump(report.to_dict(), out)
    if not report.hypotheses_ok:
        return EXIT_PRECONDITION
    return EXIT_OK if report.ok else EXIT_MISMATCH


def grid_cell(theorem: str, values: dict, guard: int, oracle: bool = False) -> dict:
    """Run one verify-grid cell; returns a CSV row as a dict."""
    row = {c: "" for c in CSV_COLUMNS}
    row.update({"theorem": theorem, **{k: str(v) for k, v in values.items()}})
    spec = ConstraintSpec.of(theorem, **values)
    row["bound"] = str(bounds.evaluate(theorem, **values).value)
    if spec.candidate_count > guard:
        row["match"] = "skipped"
        return row
    t0 = time.perf_counter()
    rep = max_constrained_sum(spec, oracle=oracle, limit=guard)
    row["seconds"] = f"{time.perf_counter() - t0:.4f}"
    row["search_max"] = "" if rep.max_sum is None else str(rep.max_sum)
    row["match"] = "true" if row["search_max"] == row["bound"] else "false"
    row["nodes"] = str(rep.nodes_explored)
    return row


def grid_cells(theorem: str, ranges: dict[str, list[int]]) -> list[dict]:
    """Valid parameter cells in grid order (first field varies slowest)."""
    tid = Theorem(theorem)
    names = [x for x in FIELDS if x in REQUIRED[tid]]
    missing = [x for x in names if x not in ranges]
    if missing:
        raise PreconditionError(f"verify-grid {theorem}: missing range(s) for {', '.join(missing)}")
    extra = sorted(set(ranges) - set(names))
    if extra:
        raise PreconditionError(f"verify-grid {theorem}: unused range(s) {', '.join(extra)}")
    cells = []
    for combo in product(*(ranges[x] for x in names)):
        values = dict(zip(names, combo, strict=True))
        try:
            ParamSet(tid, **values)
        except PreconditionError:
            continue
        cells.append(values)
    return cells


def run_grid(theorem: str, ranges: dict[str, list[int]], jobs: int = 1, oracle: bool = False) -> list[dict]:
    guard = max_candidates()
    cells = grid_cells(theorem, ranges)
    if jobs <= 1:
        return [grid_cell(theorem, c, guard, oracle) for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(grid_cell, [theorem] * len(cells), cells, [guard] * len(cells), [oracle] * len(cells)))


def format_grid(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def cmd_verify_grid(args, out: TextIO) -> int:
    if args.theorem not in [t.value for t in SEARCHABLE]:
        raise PreconditionError(f"verify-grid needs a searchable theorem, got {args.theorem!r}")
    ranges = {x: parse_range(getattr(args, x)) for x in FIELDS if getattr(args, x) is not None}
    rows = run_grid(args.theorem, ranges, args.jobs, args.oracle)
    text = format_grid(rows)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    skipped = sum(r["match"] == "skipped" for r in rows)
    if skipped:
        print(f"verify-grid: {skipped} cell(s) skipped by the size guard", file=sys.stderr)
    return EXIT_OK if all(r["match"] in ("true", "skipped") for r in rows) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="crossint", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="evaluate a closed-form bound exactly")
    p.add_argument("--formula", required=True, choices=[t.value for t in Theorem])
    _param_flags(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("construct", help="build a named family")
    p.add_argument("--kind", required=True, choices=KINDS)
    _param_flags(p)
    p.add_argument("--x", type=int, default=None, help="star centre")
    p.add_argument("--r", type=int, default=None, help="lex segment length")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="test properties of a family file")
    p.add_argument("--file", required=True)
    p.add_argument("--t-intersecting", type=int, default=None)
    p.add_argument("--cross-with", default=None, metavar="FILE")
    p.add_argument("--clique", type=int, default=None, metavar="M")
    p.add_argument("--trace", type=int, default=None, metavar="M")
    p.add_argument("--trace-at-least", type=int, default=None)
    p.add_argument("--star", action="store_true")
    p.add_argument("--shifted", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("shift", help="apply s_{i,j}, or shift to the canonical fixed point")
    p.add_argument("--file", required=True)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--j", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("search", help="exact maximum of |F|+|G| for one instance")
    p.add_argument("--theorem", required=True, choices=[t.value for t in SEARCHABLE] + ["cross"])
    _param_flags(p)
    p.add_argument("--oracle", action="store_true", help="plain 2^c enumeration instead of branch and bound")
    p.add_argument("--shifted-only", action="store_true")
    p.add_argument("--allow-empty", action="store_true", help="cross search: allow empty families")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("replay", help="check the inductive step on a concrete pair")
    p.add_argument("--theorem", required=True, choices=["frankl_i", "conjecture", "main2", "main6"])
    p.add_argument("--f", required=True, metavar="FILE")
    p.add_argument("--g", required=True, metavar="FILE")
    _param_flags(p)
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("verify-grid", help="compare search maxima with the bound over a grid (CSV)")
    p.add_argument("--theorem", required=True, choices=[t.value for t in SEARCHABLE])
    _param_flags(p, kind=str)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify_grid)
    return ap


def main(argv: Optional[list[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except PreconditionError as e:
        print(f"precondition failed: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except SizeGuardError as e:
        print(f"size guard: {e}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


run_cli = main

if __name__ == "__main__":
    raise SystemExit(main())

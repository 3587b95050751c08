"""Command-line front end.

Subcommands (long-form flags only):

    compute FILE [--json]          invariant report per code block
    batch DIR --out DIR [--jobs N] JSON report per catalog entry + summary
    check-moves FILE [--steps N] [--seed S] [--trials T]
                                   random-walk invariance harness
    skein FILE [--crossing X]      skein identity report(s), JSON
    family --j N                   print the 2N-crossing sharpness code
    bound FILE [--odd-conjecture]  crossing-number lower bound
    catalog-summary DIR            print the summary table for a catalog

Exit status: 0 on success, 1 on validation errors in the input, 2 on
internal failures (including an invariance violation found by
check-moves, which would be a library bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import (
    evaluate_catalog,
    full_report,
    generate_family,
    load_catalog,
    odd_conjecture_experiment,
    summary_table,
)
from .codes import CodeError, KnotoidCode, MultiKnotoidCode, read_code_blocks, serialize
from .moves import iter_walk
from .planar import NonRealizableError, build_planar_map
from .skein import verify_skein
from .skew import casson_pm


def _load_knotoids(path: str) -> list[tuple[str, KnotoidCode]]:
    text = Path(path).read_text()
    out = []
    for i, (name, code) in enumerate(read_code_blocks(text)):
        if isinstance(code, MultiKnotoidCode):
            raise CodeError(f"{path}: block {i} is a multi-knotoid; a knotoid code is required")
        out.append((name or Path(path).stem, code))
    if not out:
        raise CodeError(f"{path}: no code blocks found")
    return out


def _render_report_text(report) -> str:
    d = report.to_json_dict()
    lines = [f"name: {d['name']}", f"crossings: {d['diagram_crossings']}"]
    lines.append(f"C+: {d['c_plus']}")
    lines.append(f"C-: {d['c_minus']}")
    lines.append(f"CH+: {d['ch_plus']}")
    lines.append(f"CH-: {d['ch_minus']}")
    lines.append(f"norm sum: {d['norm_sum']}")
    lines.append(f"crossing-number bound: {d['crossing_lower_bound']}")
    lines.append(f"properness: {d['properness']}")
    return "\n".join(lines)


def cmd_compute(args: argparse.Namespace) -> int:
    reports = [full_report(code, name) for name, code in _load_knotoids(args.file)]
    if args.json:
        payload = [r.to_json_dict() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2))
    else:
        print("\n\n".join(_render_report_text(r) for r in reports))
    return 0


def cmd_batch(args: argparse.Namespace) -> int:
    reports = evaluate_catalog(args.directory, args.out, max_workers=args.jobs)
    print(f"wrote {len(reports)} report(s) to {args.out}")
    return 0


def cmd_check_moves(args: argparse.Namespace) -> int:
    for name, code in _load_knotoids(args.file):
        try:
            build_planar_map(code)
        except NonRealizableError as exc:
            raise CodeError(f"{name}: move checking requires a realizable code") from exc
        base = full_report(code, name)
        base_row = (base.c_plus, base.c_minus, base.ch_plus, base.ch_minus)
        for trial in range(args.trials):
            seed = args.seed + trial
            transcript = []
            for move, current in iter_walk(code, args.steps, seed):
                transcript.append((move, serialize(current)))
                row = full_report(current, name)
                if (row.c_plus, row.c_minus, row.ch_plus, row.ch_minus) != base_row:
                    print(f"FAIL {name}: invariants changed (seed {seed})")
                    for i, (m, text) in enumerate(transcript):
                        print(f"  step {i}: {m.kind} gaps={m.gaps} positions={m.positions} "
                              f"labels={m.labels} -> {text}")
                    return 2
        print(f"OK {name}: {args.trials} walk(s) x {args.steps} step(s), "
              f"invariants stable (C+={base.c_plus} C-={base.c_minus} "
              f"CH+={base.ch_plus} CH-={base.ch_minus})")
    return 0


def cmd_skein(args: argparse.Namespace) -> int:
    results = []
    for _name, code in _load_knotoids(args.file):
        if args.crossing is not None:
            if args.crossing not in code.signs:
                raise CodeError(f"no crossing {args.crossing!r} in code")
            results.append(verify_skein(code, args.crossing).as_dict())
        else:
            results.extend(verify_skein(code, lab).as_dict() for lab in code.labels)
    print(json.dumps(results[0] if len(results) == 1 else results, indent=2))
    return 0


def cmd_family(args: argparse.Namespace) -> int:
    if args.j < 1:
        raise CodeError("--j must be >= 1")
    print(serialize(generate_family(args.j)))
    return 0


def cmd_bound(args: argparse.Namespace) -> int:
    for name, code in _load_knotoids(args.file):
        report = full_report(code, name)
        if report.crossing_lower_bound is None:
            raise CodeError(f"{name}: the bound needs a realizable code (this one is virtual)")
        print(report.crossing_lower_bound)
        if args.odd_conjecture:
            sides = odd_conjecture_experiment(report)
            print(f"odd-conjecture lhs={sides['lhs']} rhs={sides['rhs']}")
    return 0


def cmd_catalog_summary(args: argparse.Namespace) -> int:
    reports = [full_report(code, name) for name, code in load_catalog(args.directory)]
    print(summary_table(reports))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotoid-casson",
        description="Exact Casson-type invariants of knotoids from signed Gauss codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="invariant report for the codes in a file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("batch", help="evaluate a catalog directory, one JSON per entry")
    p.add_argument("directory")
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("check-moves", help="random-walk invariance harness")
    p.add_argument("file")
    p.add_argument("--steps", type=int, default=30)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.set_defaults(func=cmd_check_moves)

    p = sub.add_parser("skein", help="skein identity report (JSON)")
    p.add_argument("file")
    p.add_argument("--crossing", default=None)
    p.set_defaults(func=cmd_skein)

    p = sub.add_parser("family", help="print a sharpness family code")
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("bound", help="crossing-number lower bound of a code")
    p.add_argument("file")
    p.add_argument("--odd-conjecture", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("catalog-summary", help="print the summary table for a catalog")
    p.add_argument("directory")
    p.set_defaults(func=cmd_catalog_summary)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CodeError, NonRealizableError, FileNotFoundError, NotADirectoryError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - internal failure path
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()

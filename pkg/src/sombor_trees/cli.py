"""Command-line front end.

Subcommands: verify (run the exhaustive check over a range of orders),
compute (invariants of a tree from an edge-list file), construct (write the
extremal tree), table (CSV of all cells), enumerate (stream a family to
stdout).  Exit codes: 0 success, 1 verification found a violation, 2 usage
or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .enumeration import DEFAULT_ORDER_CAP, TreeFamilyQuery, enumerate_family
from .errors import SomborTreesError
from .extremal import ExtremalParams, classify, construct_t_star
from .invariants import independence_number, sombor_index
from .tree import canonical_code, format_edge_list, parse_edge_list
from .verify import DEFAULT_VERIFY_CAP, render_text, to_csv, verify


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="sombor-trees",
        description="Maximum Sombor index over trees with a fixed independence number.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="brute-force check of the closed form over a range of orders")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1, help="worker processes (cells are independent)")
    p.add_argument("--csv", type=Path, default=None, help="also write the table as CSV")
    p.add_argument("--cap", type=int, default=DEFAULT_VERIFY_CAP,
                   help=f"raise the order cap beyond {DEFAULT_VERIFY_CAP} (slow)")

    p = sub.add_parser("compute", help="invariants of a tree read from an edge-list file")
    p.add_argument("--input", type=Path, required=True)

    p = sub.add_parser("construct", help="write the extremal tree for (n, alpha)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--output", type=Path, required=True)

    p = sub.add_parser("table", help="CSV of every feasible cell up to n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--output", type=Path, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_VERIFY_CAP)

    p = sub.add_parser("enumerate", help="stream the trees of one order, optionally alpha-filtered")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, default=None)
    return ap


def _cmd_verify(args) -> int:
    if args.cap > DEFAULT_VERIFY_CAP:
        print(
            f"warning: cap raised to {args.cap}; family sizes grow quickly",
            file=sys.stderr,
        )
    report = verify(args.n_min, args.n_max, jobs=args.jobs, cap=args.cap)
    sys.stdout.write(render_text(report))
    if args.csv is not None:
        args.csv.write_text(to_csv(report), encoding="utf-8")
    return 0 if report.overall else 1


def _cmd_compute(args) -> int:
    t = parse_edge_list(args.input.read_text(encoding="utf-8"))
    so = sombor_index(t)
    alpha = independence_number(t)
    label = classify(t)
    print(f"SO={so:.9f} alpha={alpha} class={label.value}")
    print(f"code={canonical_code(t)}")
    return 0


def _cmd_construct(args) -> int:
    ExtremalParams(args.n, args.alpha)  # friendly range error before any work
    t = construct_t_star(args.n, args.alpha)
    args.output.write_text(format_edge_list(t), encoding="utf-8")
    return 0


def _cmd_table(args) -> int:
    report = verify(2, args.n_max, cap=args.cap)
    args.output.write_text(to_csv(report), encoding="utf-8")
    print(f"wrote {len(report.records)} rows to {args.output}", file=sys.stderr)
    return 0 if report.overall else 1


def _cmd_enumerate(args) -> int:
    query = TreeFamilyQuery(order=args.n, alpha_filter=args.alpha)
    first = True
    count = 0
    for t in enumerate_family(query, cap=DEFAULT_ORDER_CAP):
        if not first:
            sys.stdout.write("\n")
        sys.stdout.write(format_edge_list(t))
        first = False
        count += 1
    if count == 0:
        print("family empty", file=sys.stderr)
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "compute": _cmd_compute,
    "construct": _cmd_construct,
    "table": _cmd_table,
    "enumerate": _cmd_enumerate,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SomborTreesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())

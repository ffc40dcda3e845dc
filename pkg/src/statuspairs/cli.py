"""Command-line entry point.

Exit codes: 0 success / verified, 1 checked and found false, 2 usage or
input error.  Summaries go to stderr, machine-readable payloads to stdout
or ``--out``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from statuspairs.constructions import ConstructionError, annotation, build_pair
from statuspairs.enumerate import FAMILIES, EnumerationBoundError, census, default_workers
from statuspairs.formats import read_graph, to_edge_list, to_graph6
from statuspairs.graph import GraphError
from statuspairs.injectivity import (
    CriterionError,
    brute_force_verdict,
    four_window_check,
    verdict_for_order,
)
from statuspairs.search import UNIVERSES, run_search, verify_pair

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


def parse_range(text: str) -> tuple[int, int]:
    """``"lo..hi"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = (int(t) for t in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _annotation_text(ann: dict) -> str:
    lines = [f"# T_{ann['n']} / U_{ann['n']}  k={ann['k']}  parity={ann['parity']}",
             "# tree_label status  unicyclic_label status"]
    for row in ann["tree"]:
        j = int(ann["correspondence"][row["label"]][1:])
        other = ann["unicyclic"][j - 1]
        lines.append(f"{row['label']} {row['status']}  {other['label']} {other['status']}")
    return "\n".join(lines) + "\n"


def cmd_construct(args: argparse.Namespace) -> int:
    pair = build_pair(args.n)
    ann = annotation(pair)
    fmt = args.format
    if fmt == "json":
        payload = {
            "tree": {"graph6": to_graph6(pair.tree), "edges": pair.tree.edges()},
            "unicyclic": {"graph6": to_graph6(pair.unicyclic), "edges": pair.unicyclic.edges()},
            "annotation": ann,
        }
        outputs = {"json": json.dumps(payload, indent=2) + "\n"}
    elif fmt == "graph6":
        outputs = {
            "tree.g6": to_graph6(pair.tree) + "\n",
            "unicyclic.g6": to_graph6(pair.unicyclic) + "\n",
            "annotation.json": json.dumps(ann) + "\n",
        }
    else:
        outputs = {
            "tree.txt": to_edge_list(pair.tree),
            "unicyclic.txt": to_edge_list(pair.unicyclic),
            "annotation.txt": _annotation_text(ann),
        }
    if args.out:
        for suffix, text in outputs.items():
            Path(f"{args.out}.{suffix}").write_text(text)
    else:
        sys.stdout.write("\n".join(outputs.values()) if fmt == "edge-list" else "".join(outputs.values()))
    _err(f"T_{pair.n} and U_{pair.n}: equal status sequences, minimum status {ann['base_status']}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    tree, other = read_graph(args.file_a), read_graph(args.file_b)
    report = verify_pair(tree, other)
    print(report.to_json())
    _err(f"verified={report.verified} (other is {report.other_class})")
    return EXIT_OK if report.verified else EXIT_FALSE


def cmd_injective(args: argparse.Namespace) -> int:
    lo, hi = args.n
    if lo < 19:
        raise ConstructionError(f"injectivity criteria need n >= 19 (got {lo})")
    orders = [n for n in range(lo, hi + 1)
              if not (args.odd_only and n % 2 == 0) and not (args.even_only and n % 2)]
    verdicts = [verdict_for_order(n) for n in orders]
    mismatches = []
    if args.cross_check:
        for v in verdicts:
            brute = brute_force_verdict(v.n)
            if brute.injective != v.injective:
                mismatches.append(v.n)
    if args.format == "json":
        for v in verdicts:
            print(json.dumps(v.to_dict()))
    else:
        print(f"{'n':>5} {'k':>4} {'parity':<6} {'injective':<9} {'criterion':<22} witness")
        for v in verdicts:
            wit = "-" if v.witness is None else f"x{v.witness[0]}~x{v.witness[1]}"
            print(f"{v.n:>5} {v.k:>4} {v.parity:<6} {str(v.injective).lower():<9} {v.criterion_path:<22} {wit}")
    if mismatches:
        _err(f"criterion disagrees with brute force at n = {mismatches}")
        return EXIT_FALSE
    bad = [v.n for v in verdicts if not v.injective]
    _err(f"{len(verdicts)} orders checked, {len(bad)} not status injective"
         + (", criteria agree with brute force" if args.cross_check else ""))
    return EXIT_FALSE if bad else EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    workers = args.workers or default_workers()
    start = time.perf_counter()
    result = run_search(args.n, args.universe, workers=workers, allow_order_10=args.allow_order_10)
    elapsed = time.perf_counter() - start
    lines = "".join(r.to_json() + "\n" for r in result.reports)
    if args.out:
        Path(args.out).write_text(lines)
    else:
        sys.stdout.write(lines)
    for family, count in result.census.items():
        _err(f"{family} {args.n} {count}")
    _err(f"pairs {len(result.reports)}  elapsed {elapsed:.2f}s  workers {workers}")
    return EXIT_OK


def cmd_window(args: argparse.Namespace) -> int:
    lo, hi = args.k
    ok, failing = four_window_check(lo, hi)
    if ok:
        _err(f"every window of four consecutive k in {lo}..{hi} has an injective even order")
        return EXIT_OK
    print(f"first failing window: k = {failing}..{failing + 3}")
    return EXIT_FALSE


def cmd_census(args: argparse.Namespace) -> int:
    lo, hi = args.n
    workers = args.workers or default_workers()
    for n in range(lo, hi + 1):
        print(f"{args.family} {n} {census(args.family, n, workers, args.allow_order_10)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="statuspairs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit T_n and U_n with status annotations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("graph6", "edge-list", "json"), default="graph6")
    p.add_argument("--out", help="file prefix; writes PREFIX.<part> files instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check two graph files share a status sequence (tree vs non-tree)")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("injective", help="status-injectivity verdicts for T_n")
    p.add_argument("--n", type=parse_range, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--odd-only", action="store_true")
    group.add_argument("--even-only", action="store_true")
    p.add_argument("--cross-check", action="store_true", help="also decide each order by BFS")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_injective)

    p = sub.add_parser("search", help="exhaustive tree / non-tree pair search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--universe", choices=UNIVERSES, default="all-nontree")
    p.add_argument("--workers", type=positive_int, default=None)
    p.add_argument("--out")
    p.add_argument("--allow-order-10", action="store_true", help="permit full connected search at n=10 (slow)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("window", help="four-consecutive-even-orders check over a k range")
    p.add_argument("--k", type=parse_range, required=True)
    p.set_defaults(func=cmd_window)

    p = sub.add_parser("census", help="count graphs per family and order")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=parse_range, required=True)
    p.add_argument("--workers", type=positive_int, default=None)
    p.add_argument("--allow-order-10", action="store_true")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ConstructionError, EnumerationBoundError, CriterionError, OSError) as exc:
        _err(f"error: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: index, enumerate, family, transform, verify, lemmas. Exit status
is 0 on success, 1 on a domain error and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import os
import sys
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Sequence

from . import enumeration, families, lemmas, transforms, verify
from .errors import TreeError
from .graph import format_edge_list, format_edge_lists, read_edge_list
from .indices import Kind, edge_type_histogram, index_value, parse_kind

_NINE = Decimal("0.000000001")


def fmt(x: float) -> str:
    """Fixed 9 decimals, round-half-even on the exact binary value."""
    return format(Decimal(x).quantize(_NINE, rounding=ROUND_HALF_EVEN), "f")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _pair(text: str) -> tuple[int, int]:
    vals = _int_list(text)
    if len(vals) != 2:
        raise argparse.ArgumentTypeError(f"expected U,V, got {text!r}")
    return vals[0], vals[1]


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    common.add_argument("--format", choices=("csv", "text"), default="csv")
    common.add_argument("--seed", type=int, default=0, help="reserved; all commands are deterministic")

    parser = argparse.ArgumentParser(prog="abstree", description="ABS index of trees: indices, enumeration, verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", parents=[common], help="evaluate a degree-based index of a tree")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p.add_argument("--kind", choices=[k.value for k in Kind], default="abs")
    p.add_argument("--alpha", type=float)

    p = sub.add_parser("enumerate", parents=[common], help="list or count non-isomorphic trees")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--chemical", action="store_true", help="only trees with maximum degree <= 4")
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("family", parents=[common], help="emit a named tree family as edge lists")
    p.add_argument("--family", choices=[f.value for f in families.FamilyKind], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--legs", type=_int_list)

    p = sub.add_parser("transform", parents=[common], help="apply a tree transformation")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p.add_argument("--op", choices=("contract", "split", "3reg"), required=True)
    p.add_argument("--edge", type=_pair, metavar="U,V")
    p.add_argument("--vertex", type=int)
    p.add_argument("--left", type=_int_list, metavar="CSV-INTS", help="neighbors kept by the first half of a split")

    p = sub.add_parser("verify", parents=[common], help="brute-force the minimum ABS bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, help="default: every k in 3..floor((n+2)/3)")
    p.add_argument("--chemical", action="store_true")
    p.add_argument("--tolerance", type=float, default=verify.DEFAULT_TOLERANCE)
    p.add_argument("--threads", type=_positive, default=os.cpu_count() or 1)

    p = sub.add_parser("lemmas", parents=[common], help="instance checks of the auxiliary inequalities")
    p.add_argument("--lemma", choices=lemmas.LEMMAS, required=True)
    p.add_argument("--n", type=int, default=12, help="check all trees with 3..N vertices")
    return parser


def _csv(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _cmd_index(args, parser) -> str:
    if (args.kind == Kind.GENERAL_SUM_CONNECTIVITY.value) != (args.alpha is not None):
        parser.error("--alpha is required with --kind gensumconn and not allowed otherwise")
    kind = parse_kind(args.kind, args.alpha)
    tree = read_edge_list(args.infile)
    value = index_value(edge_type_histogram(tree), kind).value
    if args.format == "text":
        return f"{kind.name} = {fmt(value)}\n"
    return _csv([("kind", "value"), (kind.name, fmt(value))])


def _cmd_enumerate(args, parser) -> str:
    if args.chemical and args.k is None:
        trees = (t for t in enumeration.free_trees(args.n) if t.max_degree() <= verify.CHEMICAL_MAX_DEGREE)
    elif args.chemical:
        trees = enumeration.chemical_trees(args.n, args.k)
    elif args.k is not None:
        trees = enumeration.trees_with_k_leaves(args.n, args.k)
    else:
        trees = enumeration.free_trees(args.n)
    if args.count_only:
        return f"{sum(1 for _ in trees)}\n"
    return format_edge_lists(trees)


def _cmd_family(args, parser) -> str:
    if args.family == "spider" and not args.legs:
        parser.error("--legs is required with --family spider")
    desc = families.FamilyDescriptor(args.family, n=args.n, k=args.k, legs=tuple(args.legs or ()))
    return format_edge_lists(desc.build())


def _cmd_transform(args, parser) -> str:
    tree = read_edge_list(args.infile)
    if args.op == "contract":
        if args.edge is None:
            parser.error("--edge is required with --op contract")
        out = transforms.contract_edge(tree, args.edge)
    elif args.vertex is None:
        parser.error(f"--vertex is required with --op {args.op}")
    elif args.op == "split":
        if args.left is None:
            parser.error("--left is required with --op split")
        if not 0 <= args.vertex < tree.n:
            raise TreeError(f"vertex {args.vertex} not in tree")
        right = tree.neighbors(args.vertex) - set(args.left)
        out = transforms.split_vertex(tree, transforms.SplitSpec(args.vertex, args.left, right))
    else:
        if not 0 <= args.vertex < tree.n:
            raise TreeError(f"vertex {args.vertex} not in tree")
        out = transforms.replace_with_3regular(tree, args.vertex)
    return format_edge_list(out)


def _cmd_verify(args, parser) -> str:
    ks = [args.k] if args.k is not None else list(families.tstar_range(args.n))
    if not ks:
        raise TreeError(f"no k satisfies 3 <= k <= floor((n+2)/3) for n={args.n}")
    reports = [
        verify.verify_theorem(args.n, k, chemical=args.chemical, tolerance=args.tolerance, workers=args.threads)
        for k in ks
    ]
    if args.format == "text":
        lines = []
        for r in reports:
            cls = "chemical trees" if r.chemical else "trees"
            lines.append(
                f"n={r.n} k={r.k} ({cls}, {r.class_size} classes): formula {fmt(r.formula_value)}, "
                f"brute force {fmt(r.bruteforce_min)}, {len(r.argmin_codes)} minimizer(s), "
                f"{len(r.tstar_codes)} extremal-family member(s): {r.verdict} ({r.reason})"
            )
        return "\n".join(lines) + "\n"
    rows = [("n", "k", "formula", "bruteforce", "verdict")]
    rows += [(r.n, r.k, fmt(r.formula_value), fmt(r.bruteforce_min), r.verdict) for r in reports]
    return _csv(rows)


def _cmd_lemmas(args, parser) -> str:
    records = lemmas.lemma_suite(args.lemma, range(3, args.n + 1))
    if args.format == "text":
        failed = [r for r in records if not r.passed]
        lines = [f"lemma {args.lemma}: {len(records)} instance(s), {len(failed)} failure(s)"]
        lines += [f"FAIL {r.instance}: lhs={fmt(r.lhs)} rhs={fmt(r.rhs)}" for r in failed]
        return "\n".join(lines) + "\n"
    rows = [("lemma", "instance", "lhs", "rhs", "outcome")]
    rows += [(r.lemma, r.instance, fmt(r.lhs), fmt(r.rhs), r.outcome) for r in records]
    return _csv(rows)


_COMMANDS = {
    "index": _cmd_index,
    "enumerate": _cmd_enumerate,
    "family": _cmd_family,
    "transform": _cmd_transform,
    "verify": _cmd_verify,
    "lemmas": _cmd_lemmas,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
            text = _COMMANDS[args.command](args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except (TreeError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())

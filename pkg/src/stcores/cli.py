"""Command-line front end.

    stcores list 3 5
    stcores stats 5 6 --format json
    stcores verify armstrong --max-sum 14
    stcores bijection 3 5 --partition 4,2,1,1
    stcores render young 5,3,3,2
    stcores render hasse 5 6

Exit status: 0 on success (all checks equal), 1 on a failed check or an
exceeded enumeration cap, 2 on bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import OrderedDict
from fractions import Fraction

from . import verify as suites
from .anderson import core_size_of_ideal, ideal_to_partition, partition_to_ideal
from .errors import CapExceeded, CoreError
from .ideal_enum import DEFAULT_CAP, default_workers, enumerate_ideals, is_order_ideal
from .partition import Partition, PartitionError, hook_lengths
from .render import render_hasse, render_young
from .report import Report
from .semigroup_poset import OrderIdeal, build_gap_poset
from .statistics import CoreStats, CoreTally, core_statistics

FORMATS = ("ascii", "json", "csv")
TARGETS = ("armstrong", "catalan", "identities", "decomposition", "delta", "s4", "lemma-st", "bijection")


class UsageError(Exception):
    pass


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _common() -> argparse.ArgumentParser:
    # SUPPRESS defaults so the flags work before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS,
                        help="worker processes (default: $STCORES_THREADS or 1)")
    common.add_argument("--cap", type=_positive, default=argparse.SUPPRESS,
                        help=f"maximum number of ideals to enumerate (default {DEFAULT_CAP})")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="stcores", parents=[common],
                                     description="Exact enumeration of simultaneous (s,t)-cores.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (("list", "list every (s,t)-core"), ("stats", "count, total, max and average size")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("s", type=int)
        p.add_argument("t", type=int)

    p = sub.add_parser("verify", parents=[common], help="run an exact verification sweep")
    p.add_argument("target", choices=TARGETS)
    p.add_argument("--max-sum", type=int, default=None, help="armstrong/lemma-st/bijection: bound on s+t")
    p.add_argument("--pair", type=int, nargs=2, metavar=("S", "T"), help="armstrong: a single pair")
    p.add_argument("--max-s", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--brute-max", type=int, default=None, help="largest index checked by enumeration")
    p.add_argument("--verbose", "-v", action="store_true", help="ascii: print every comparison")

    p = sub.add_parser("bijection", parents=[common], help="apply Anderson's bijection")
    p.add_argument("s", type=int)
    p.add_argument("t", type=int)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--ideal", help='comma-separated gaps, "-" for the empty ideal')
    group.add_argument("--partition", help='comma-separated parts, "-" for the empty partition')

    p = sub.add_parser("render", parents=[common], help="ASCII drawings")
    rsub = p.add_subparsers(dest="what", required=True)
    y = rsub.add_parser("young", parents=[common], help="Young diagram with hook lengths")
    y.add_argument("partition")
    y.add_argument("--boxes", action="store_true")
    h = rsub.add_parser("hasse", parents=[common], help="Hasse diagram of P_(s,t)")
    h.add_argument("s", type=int)
    h.add_argument("t", type=int)
    return parser


# -- formatting helpers ------------------------------------------------------


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2)


def _csv(rows, header) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=";", lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _table(rows, header) -> str:
    widths = [max(len(str(r[k])) for r in [header, *rows]) for k in range(len(header))]
    return "\n".join(
        "  ".join(str(cell).ljust(w) for cell, w in zip(row, widths)).rstrip() for row in [header, *rows]
    )


def _fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_ideal(text: str, s: int, t: int) -> OrderIdeal:
    poset = build_gap_poset(s, t)
    text = text.strip()
    try:
        elems = [] if text in ("", "-") else [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed ideal {text!r}") from None
    if len(set(elems)) != len(elems):
        raise UsageError(f"repeated element in ideal {text!r}")
    if not is_order_ideal(poset, elems):
        raise UsageError(f"{{{text}}} is not an order ideal of P_({poset.s},{poset.t})")
    return OrderIdeal(poset.s, poset.t, tuple(sorted(elems)))


# -- subcommands -------------------------------------------------------------


def cmd_list(s, t, fmt="ascii", workers=1, cap=DEFAULT_CAP) -> str:
    poset = build_gap_poset(s, t)
    tally = CoreTally(poset.s, poset.t)
    rows = []
    for ideal in enumerate_ideals(poset, cap, workers):
        tally.add(ideal.elements)
        rows.append((ideal, ideal_to_partition(ideal)))
    stats = CoreStats(tally.s, tally.t, tally.count, tally.sum_sizes, tally.max_size)
    if fmt == "json":
        return _dumps({
            "s": str(stats.s),
            "t": str(stats.t),
            "cores": [
                {"ideal": [str(a) for a in ideal.descending()], "partition": str(p), "size": str(p.size)}
                for ideal, p in rows
            ],
            "stats": stats.to_json(),
        })
    body = [(str(ideal), str(p), str(p.size)) for ideal, p in rows]
    if fmt == "csv":
        return _csv(body, ("ideal", "partition", "size"))
    footer = (f"({stats.s},{stats.t})-cores: count {stats.count}  sum {stats.sum_sizes}  "
              f"max {stats.max_size}  average {_fraction(stats.average)}")
    return _table(body, ("ideal", "partition", "size")) + "\n" + footer


def cmd_stats(s, t, fmt="ascii", workers=1, cap=DEFAULT_CAP) -> str:
    stats = core_statistics(s, t, workers=workers, cap=cap)
    if fmt == "json":
        return _dumps(stats.to_json())
    rows = [
        ("s", stats.s), ("t", stats.t), ("count", stats.count), ("sum_sizes", stats.sum_sizes),
        ("max_size", stats.max_size), ("average", _fraction(stats.average)),
    ]
    if fmt == "csv":
        return _csv(rows, ("key", "value"))
    return "\n".join(f"{k:<10} {v}" for k, v in rows)


def run_target(target: str, args, workers: int, cap: int) -> Report:
    if target == "armstrong":
        pairs = [tuple(args.pair)] if args.pair else list(suites.coprime_pairs(args.max_sum or 14))
        return suites.armstrong_checks(pairs, workers=workers, cap=cap)
    if target == "catalan":
        return suites.catalan_checks(args.max_s or 12, cap=cap)
    if target == "identities":
        max_s = args.max_s or 300
        brute = 10 if args.brute_max is None else args.brute_max
        return suites.identity_checks(max_s, brute_max=min(brute, max_s), cap=cap)
    if target == "decomposition":
        return suites.decomposition_checks(args.max_s or 10, cap=cap)
    if target == "delta":
        return suites.delta_checks(args.max_n or 6, cap=cap)
    if target == "s4":
        brute = 4 if args.brute_max is None else args.brute_max
        return suites.s4_checks(args.max_n or 200, brute_max=brute)
    if target == "lemma-st":
        return suites.lemma_checks(args.max_sum or 12, cap=cap)
    if target == "bijection":
        return suites.bijection_checks(args.max_sum or 14, cap=cap)
    raise UsageError(f"unknown target {target}")  # pragma: no cover


def format_report(report: Report, fmt="ascii", verbose=False) -> str:
    if fmt == "json":
        return "\n".join(json.dumps(c.to_json()) for c in report)
    rows = [(c.claim, ";".join(f"{k}={v}" for k, v in c.params.items()), str(c.lhs), str(c.rhs), c.equal)
            for c in report]
    if fmt == "csv":
        return _csv(rows, ("claim", "params", "lhs", "rhs", "equal"))
    summary = OrderedDict()
    for c in report:
        done, passed = summary.get(c.claim, (0, 0))
        summary[c.claim] = (done + 1, passed + c.equal)
    lines = []
    if verbose:
        lines.append(_table([(("PASS" if c.equal else "FAIL"), c.label(), str(c.lhs), str(c.rhs)) for c in report],
                            ("", "check", "lhs", "rhs")))
        lines.append("")
    lines.append(_table([(k, n, p, "PASS" if n == p else "FAIL") for k, (n, p) in summary.items()],
                        ("claim", "checks", "equal", "status")))
    failures = report.failures
    if failures:
        first = failures[0]
        lines.append(f"first counterexample: {first.label()}")
        lines.append(f"  lhs = {first.lhs}")
        lines.append(f"  rhs = {first.rhs}")
    else:
        lines.append(f"all {len(report)} comparisons exact")
    return "\n".join(lines)


def cmd_bijection(s, t, ideal=None, partition=None, fmt="ascii") -> str:
    if ideal is not None:
        I = _parse_ideal(ideal, s, t)
        p = ideal_to_partition(I)
    else:
        p = Partition.parse(partition)
        I = partition_to_ideal(p, s, t)
    if fmt == "json":
        return _dumps({"s": str(I.s), "t": str(I.t), "ideal": [str(a) for a in I.descending()],
                       "partition": str(p), "size": str(core_size_of_ideal(I))})
    if fmt == "csv":
        return _csv([(str(I), str(p), str(p.size))], ("ideal", "partition", "size"))
    return f"ideal {{{str(I) if I.elements else ''}}} <-> partition ({str(p) if p.parts else ''}) size {p.size}"


def cmd_render_young(text, fmt="ascii", boxes=False) -> str:
    p = Partition.parse(text)
    if fmt == "json":
        return _dumps({"partition": str(p), "size": str(p.size),
                       "hooks": [[str(h) for h in row] for row in hook_lengths(p)]})
    if fmt == "csv":
        raise UsageError("render supports ascii and json only")
    return render_young(p, boxes=boxes)


def cmd_render_hasse(s, t, fmt="ascii") -> str:
    poset = build_gap_poset(s, t)
    if fmt == "json":
        return _dumps(poset.to_json())
    if fmt == "csv":
        raise UsageError("render supports ascii and json only")
    return render_hasse(poset)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "ascii")
    workers = getattr(args, "threads", None) or default_workers()
    cap = getattr(args, "cap", DEFAULT_CAP)
    status = 0
    try:
        if args.command == "list":
            out = cmd_list(args.s, args.t, fmt, workers, cap)
        elif args.command == "stats":
            out = cmd_stats(args.s, args.t, fmt, workers, cap)
        elif args.command == "verify":
            report = run_target(args.target, args, workers, cap)
            out = format_report(report, fmt, args.verbose)
            status = 0 if report.ok else 1
        elif args.command == "bijection":
            out = cmd_bijection(args.s, args.t, args.ideal, args.partition, fmt)
        elif args.what == "young":
            out = cmd_render_young(args.partition, fmt, args.boxes)
        else:
            out = cmd_render_hasse(args.s, args.t, fmt)
    except CapExceeded as exc:
        print(f"stcores: {exc}", file=sys.stderr)
        return 1
    except (CoreError, PartitionError, UsageError, ValueError) as exc:
        print(f"stcores: {exc}", file=sys.stderr)
        return 2
    if out:
        print(out)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

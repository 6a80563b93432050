"""Command-line front end: compute cores and quotients, run verification sweeps.

Exit codes: 0 success/verified, 1 counterexample found or a reconstruct
self-check failure, 2 usage or validation error.  Verify reports default to
JSON (one document per line); compute and enumerate default to plain text.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import blocks
from .bar_partitions import (
    bar_quotient,
    from_bar_core_and_quotient,
    parse_bar_partition,
)
from .enumeration import bar_partitions_of, cores_of, partitions_of
from .partitions import (
    ell_core,
    ell_quotient,
    ell_weight,
    from_core_and_quotient,
    parse_partition,
)

THEOREM1_DEFAULTS = {"n_max": 24, "level_max": 10}
THEOREM2_DEFAULTS = {"n_max": 28, "levels": (3, 5, 7, 9)}
COROLLARY1_DEFAULTS = {"s": 5, "t": 3}
COROLLARY2_DEFAULTS = {"s": 7, "t": 3}


def _add_format(p: argparse.ArgumentParser, default: str) -> None:
    p.add_argument("--format", choices=["plain", "json"], default=default)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corekit",
        description="Partition cores, quotients, bar analogues, and exhaustive verifiers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("core", help="ell-core and ell-weight of a partition")
    p.add_argument("partition", help="literal like 4,2,1; '-' is empty")
    p.add_argument("--ell", type=int, required=True)
    _add_format(p, "plain")

    p = sub.add_parser("quotient", help="ell-quotient, core, and weight")
    p.add_argument("partition")
    p.add_argument("--ell", type=int, required=True)
    _add_format(p, "plain")

    p = sub.add_parser("barcore", help="bar-core at an odd level")
    p.add_argument("partition", help="strictly decreasing literal like 5,3,2")
    p.add_argument("--ell", type=int, required=True)
    _add_format(p, "plain")

    p = sub.add_parser("barquotient", help="bar-quotient at an odd level")
    p.add_argument("partition")
    p.add_argument("--ell", type=int, required=True)
    _add_format(p, "plain")

    p = sub.add_parser("reconstruct", help="rebuild a partition from core and quotient")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--core", required=True)
    p.add_argument(
        "--component", action="append", default=[], metavar="LITERAL",
        help="quotient component, repeat in order",
    )
    p.add_argument("--bar", action="store_true", help="bar reconstruction (odd ell)")
    p.add_argument("--component0", metavar="LITERAL", help="bar component0 (with --bar)")
    _add_format(p, "plain")

    p = sub.add_parser("verify", help="run an exhaustive verification sweep")
    p.add_argument("target", choices=["theorem1", "theorem2", "corollary1", "corollary2"])
    p.add_argument("--nmax", type=int, help="theorems: largest n (24 / 28)")
    p.add_argument("--smax", type=int, default=THEOREM1_DEFAULTS["level_max"],
                   help="theorem1: s sweeps 2..SMAX")
    p.add_argument("--tmax", type=int, default=THEOREM1_DEFAULTS["level_max"],
                   help="theorem1: t sweeps 2..TMAX")
    p.add_argument("--levels", help="comma list of levels overriding smax/tmax")
    p.add_argument("--s", type=int, help="corollaries: block level (5 / 7)")
    p.add_argument("--t", type=int, help="corollaries: core level (3)")
    p.add_argument("--amax", type=int, default=2, help="corollaries: largest a")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker count")
    p.add_argument("--fail-fast", action="store_true",
                   help="stop at the first counterexample (sequential)")
    _add_format(p, "json")

    p = sub.add_parser("enumerate", help="list partitions, bar-partitions, or cores")
    p.add_argument("kind", choices=["partitions", "barpartitions", "cores"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, help="core level (kind=cores)")
    p.add_argument("--count", action="store_true", help="print only the count")
    _add_format(p, "plain")

    return parser


def _level(ell: int) -> int:
    if ell < 1:
        raise ValueError(f"--ell must be >= 1, got {ell}")
    return ell


def _parse_levels(text: str) -> list[int]:
    try:
        values = [int(token) for token in text.split(",")]
    except ValueError:
        raise ValueError(f"bad --levels list {text!r}") from None
    if not values:
        raise ValueError("--levels must be nonempty")
    return values


def _emit(doc: dict, plain_lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc))
    else:
        for line in plain_lines:
            print(line)


def _cmd_core(args) -> int:
    p = parse_partition(args.partition)
    ell = _level(args.ell)
    core = ell_core(p, ell)
    weight = ell_weight(p, ell)
    _emit(
        {"input": str(p), "ell": ell, "core": str(core), "weight": weight},
        [str(core), f"weight {weight}"],
        args.format,
    )
    return 0


def _cmd_quotient(args) -> int:
    p = parse_partition(args.partition)
    ell = _level(args.ell)
    core = ell_core(p, ell)
    components = ell_quotient(p, ell)
    weight = ell_weight(p, ell)
    _emit(
        {
            "input": str(p),
            "ell": ell,
            "core": str(core),
            "components": [str(c) for c in components],
            "weight": weight,
        },
        [" | ".join(str(c) for c in components), f"core {core}", f"weight {weight}"],
        args.format,
    )
    return 0


def _cmd_barcore(args) -> int:
    bp = parse_bar_partition(args.partition)
    q = bar_quotient(bp, _level(args.ell))
    _emit(
        {"input": str(bp), "ell": q.ell, "core": str(q.core), "weight": q.weight},
        [str(q.core), f"weight {q.weight}"],
        args.format,
    )
    return 0


def _cmd_barquotient(args) -> int:
    bp = parse_bar_partition(args.partition)
    q = bar_quotient(bp, _level(args.ell))
    rendered = [str(q.component0), *(str(c) for c in q.components)]
    _emit(
        {
            "input": str(bp),
            "ell": q.ell,
            "core": str(q.core),
            "component0": str(q.component0),
            "components": [str(c) for c in q.components],
            "weight": q.weight,
        },
        [" | ".join(rendered), f"core {q.core}", f"weight {q.weight}"],
        args.format,
    )
    return 0


def _cmd_reconstruct(args) -> int:
    ell = _level(args.ell)
    components = [parse_partition(c) for c in args.component]
    if args.bar:
        core = parse_bar_partition(args.core)
        component0 = parse_bar_partition(args.component0 or "-")
        result = from_bar_core_and_quotient(core, component0, components, ell)
        q = bar_quotient(result, ell)
        ok = (
            q.core == core
            and q.component0 == component0
            and q.components == tuple(components)
        )
        doc = {
            "ell": ell,
            "core": str(core),
            "component0": str(component0),
            "components": [str(c) for c in components],
            "partition": str(result),
        }
    else:
        if args.component0 is not None:
            raise ValueError("--component0 requires --bar")
        core = parse_partition(args.core)
        result = from_core_and_quotient(core, components, ell)
        ok = ell_core(result, ell) == core and ell_quotient(result, ell) == tuple(components)
        doc = {
            "ell": ell,
            "core": str(core),
            "components": [str(c) for c in components],
            "partition": str(result),
        }
    if not ok:
        print("error: reconstruct round-trip self-check failed", file=sys.stderr)
        return 1
    _emit(doc, [str(result)], args.format)
    return 0


def _report_lines(report: blocks.VerificationReport) -> list[str]:
    doc = report.to_document()
    lines = [
        f"verdict {doc['verdict']}",
        f"checked {doc['checked']}",
        f"counterexamples {len(doc['counterexamples'])}",
    ]
    lines.extend(
        "counterexample n={n} partition={partition} s={s} t={t}".format(**w)
        for w in doc["counterexamples"]
    )
    lines.append(f"elapsed_seconds {doc['elapsed_seconds']}")
    return lines


def _cmd_verify(args) -> int:
    if args.jobs < 1:
        raise ValueError(f"--jobs must be >= 1, got {args.jobs}")
    common = {"jobs": args.jobs, "fail_fast": args.fail_fast}
    if args.target == "theorem1":
        n_max = args.nmax if args.nmax is not None else THEOREM1_DEFAULTS["n_max"]
        if args.levels:
            s_values = t_values = _parse_levels(args.levels)
        else:
            s_values = list(range(2, args.smax + 1))
            t_values = list(range(2, args.tmax + 1))
        report = blocks.verify_core_theorem(n_max, s_values, t_values, **common)
    elif args.target == "theorem2":
        n_max = args.nmax if args.nmax is not None else THEOREM2_DEFAULTS["n_max"]
        levels = _parse_levels(args.levels) if args.levels else list(THEOREM2_DEFAULTS["levels"])
        report = blocks.verify_bar_theorem(n_max, levels, levels, **common)
    elif args.target == "corollary1":
        s = args.s if args.s is not None else COROLLARY1_DEFAULTS["s"]
        t = args.t if args.t is not None else COROLLARY1_DEFAULTS["t"]
        report = blocks.verify_corollary(s, t, args.amax, **common)
    else:
        s = args.s if args.s is not None else COROLLARY2_DEFAULTS["s"]
        t = args.t if args.t is not None else COROLLARY2_DEFAULTS["t"]
        report = blocks.verify_bar_corollary(s, t, args.amax, **common)
    if args.format == "json":
        print(json.dumps(report.to_document()))
    else:
        for line in _report_lines(report):
            print(line)
    return 0 if report.verdict == "verified" else 1


def _cmd_enumerate(args) -> int:
    if args.n < 0:
        raise ValueError(f"--n must be nonnegative, got {args.n}")
    doc: dict = {"kind": args.kind, "n": args.n}
    if args.kind == "cores":
        if args.t is None:
            raise ValueError("enumerate cores requires --t")
        if args.t < 1:
            raise ValueError(f"--t must be >= 1, got {args.t}")
        doc["t"] = args.t
        items = list(cores_of(args.n, args.t))
    elif args.kind == "partitions":
        items = list(partitions_of(args.n))
    else:
        items = list(bar_partitions_of(args.n))
    if args.count:
        doc["count"] = len(items)
        _emit(doc, [str(len(items))], args.format)
    else:
        doc["items"] = [str(p) for p in items]
        _emit(doc, [str(p) for p in items], args.format)
    return 0


_HANDLERS = {
    "core": _cmd_core,
    "quotient": _cmd_quotient,
    "barcore": _cmd_barcore,
    "barquotient": _cmd_barquotient,
    "reconstruct": _cmd_reconstruct,
    "verify": _cmd_verify,
    "enumerate": _cmd_enumerate,
}


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())

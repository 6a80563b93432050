"""Acceptance gate: the ten contract criteria, one test per criterion.

Each test prints one ACCEPTANCE line (PASS or FAIL) before asserting, so a
plain pytest run documents the verdicts.  All tolerances are exact equality
except the stated runtime targets, which are asserted as measured wall time.
"""

import json
import re
import subprocess
import time

import oracles
from corekit import (
    bar_core,
    bar_lengths,
    bar_partitions_of,
    bar_quotient,
    bar_weight,
    bars,
    divisible_hooks,
    ell_core,
    ell_quotient,
    ell_weight,
    from_bar_core_and_quotient,
    from_core_and_quotient,
    hook_lengths,
    is_bar_core,
    is_ell_core,
    partitions_of,
    remove_bar,
    verify_bar_corollary,
    verify_bar_quotient_bijection,
    verify_bar_theorem,
    verify_core_theorem,
    verify_corollary,
    verify_quotient_bijection,
)


def _report(num: int, label: str, ok: bool, detail: str = "") -> None:
    line = f"ACCEPTANCE {num:02d} {label}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line, flush=True)
    assert ok, line


def test_criterion_01_core_theorem_sweep():
    serial = verify_core_theorem(24, range(2, 11), range(2, 11))
    parallel = verify_core_theorem(24, range(2, 11), range(2, 11), jobs=8)
    grid = {(s, t) for s in serial.scope["s_values"] for t in serial.scope["t_values"]}
    ok = (
        serial.verdict == "verified"
        and serial.counterexamples == []
        and parallel.counterexamples == []
        and parallel.checked == serial.checked
        and {(4, 6), (6, 9), (4, 10), (6, 8)} <= grid
        and serial.elapsed < 300.0
        and parallel.elapsed < 60.0
    )
    _report(
        1,
        "s-core of t-core is a t-core, n<=24, s,t in 2..10",
        ok,
        f"checked={serial.checked}, counterexamples={len(serial.counterexamples)}, "
        f"serial {serial.elapsed:.1f}s, 8 workers {parallel.elapsed:.1f}s",
    )


def test_criterion_02_bar_theorem_sweep():
    levels = (3, 5, 7, 9)
    report = verify_bar_theorem(28, levels, levels)
    grid = {(s, t) for s in levels for t in levels}
    ok = (
        report.verdict == "verified"
        and report.counterexamples == []
        and {(9, 3), (3, 9)} <= grid
        and report.elapsed < 120.0
    )
    _report(
        2,
        "bar s-core of bar t-core is a bar t-core, n<=28, odd s,t in 3..9",
        ok,
        f"checked={report.checked}, counterexamples={len(report.counterexamples)}, "
        f"{report.elapsed:.1f}s",
    )


def test_criterion_03_principal_block_corollary():
    start = time.perf_counter()
    checked = 0
    failures = []
    for s in range(2, 10):
        for t in range(1, s):
            report = verify_corollary(s, t, 2)
            checked += report.checked
            if report.verdict != "verified":
                failures.append((s, t, report.counterexamples))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 120.0
    _report(
        3,
        "principal s-block of n=as+r (s>r>=t) has no t-core, s<=9",
        ok,
        f"checked={checked} across {sum(s - 1 for s in range(2, 10))} (s,t) pairs, "
        f"{elapsed:.1f}s" + (f", failures={failures}" if failures else ""),
    )


def test_criterion_04_bar_corollary():
    checked = 0
    failures = []
    pairs = [(s, t) for s in (3, 5, 7, 9) for t in (1, 3, 5, 7) if t < s]
    for s, t in pairs:
        report = verify_bar_corollary(s, t, 2)
        checked += report.checked
        if report.verdict != "verified":
            failures.append((s, t, report.counterexamples))
    ok = not failures
    _report(
        4,
        "bar analogue of the principal-block corollary, odd s,t",
        ok,
        f"checked={checked} across {len(pairs)} (s,t) pairs"
        + (f", failures={failures}" if failures else ""),
    )


def test_criterion_05_reconstruction_bijection():
    bad = None
    for ell in range(1, 7):
        for n in range(16):
            seen = {}
            for p in partitions_of(n):
                core = ell_core(p, ell)
                quotient = ell_quotient(p, ell)
                if from_core_and_quotient(core, quotient, ell) != p:
                    bad = ("roundtrip", p.parts, ell)
                    break
                key = (core.parts, tuple(c.parts for c in quotient))
                if key in seen:
                    bad = ("collision", p.parts, seen[key], ell)
                    break
                seen[key] = p.parts
    _report(
        5,
        "core+quotient reconstructs the partition, injectively, n<=15, l<=6",
        bad is None,
        "exact equality" if bad is None else f"failure={bad}",
    )


def test_criterion_06_weight_identities():
    bad = None
    for n in range(25):
        for p in partitions_of(n):
            for ell in range(2, 11):
                core = ell_core(p, ell)
                w = ell_weight(p, ell)
                hooks_div = sum(1 for h in hook_lengths(p) if h % ell == 0)
                if p.size != core.size + ell * w or w != hooks_div or not is_ell_core(core, ell):
                    bad = (p.parts, ell)
                    break
    for n in range(29):
        for bp in bar_partitions_of(n):
            for ell in (3, 5, 7, 9):
                core = bar_core(bp, ell)
                w = bar_weight(bp, ell)
                bars_div = sum(1 for d in bar_lengths(bp) if d % ell == 0)
                if bp.size != core.size + ell * w or w != bars_div or not is_bar_core(core, ell):
                    bad = ("bar", bp.parts, ell)
                    break
    _report(
        6,
        "|partition| = |core| + level * weight, both theories, full sweep ranges",
        bad is None,
        "exact" if bad is None else f"failure={bad}",
    )


def test_criterion_07_bijection_checks():
    bad = None
    for n in range(15):
        for p in partitions_of(n):
            for g in range(1, 7):
                if not verify_quotient_bijection(p, g):
                    bad = (p.parts, g)
        for bp in bar_partitions_of(n):
            for g in (1, 3, 5, 7):
                if not verify_bar_quotient_bijection(bp, g):
                    bad = ("bar", bp.parts, g)
    _report(
        7,
        "multiset + removal-compatibility bijections, n<=14",
        bad is None,
        "exact" if bad is None else f"failure={bad}",
    )


def test_criterion_08_order_independence():
    bad = None
    for ell in range(1, 6):
        cache = {}

        def children(p, ell=ell):
            return [reduced for _, reduced in divisible_hooks(p, ell)]

        for n in range(13):
            for p in partitions_of(n):
                ends = oracles.removal_endpoints(p, children, cache)
                if ends != frozenset([ell_core(p, ell)]):
                    bad = (p.parts, ell, sorted(e.parts for e in ends))
    for ell in (1, 3, 5, 7):
        cache = {}

        def bar_children(bp, ell=ell):
            return [remove_bar(bp, b) for b in bars(bp) if b.length % ell == 0]

        for n in range(15):
            for bp in bar_partitions_of(n):
                ends = oracles.removal_endpoints(bp, bar_children, cache)
                if ends != frozenset([bar_core(bp, ell)]):
                    bad = ("bar", bp.parts, ell, sorted(e.parts for e in ends))
    _report(
        8,
        "every maximal removal sequence reaches the core, n<=12 / bar n<=14",
        bad is None,
        "exact" if bad is None else f"failure={bad}",
    )


def test_criterion_09_generator_counts():
    p_oracle = oracles.partition_counts(40)
    q_oracle = oracles.odd_part_partition_counts(40)
    p_counts = [sum(1 for _ in partitions_of(n)) for n in range(41)]
    q_counts = [sum(1 for _ in bar_partitions_of(n)) for n in range(41)]
    bars_ok = all(
        len(bars(bp)) == bp.size for n in range(21) for bp in bar_partitions_of(n)
    )
    ok = p_counts == p_oracle and q_counts == q_oracle and bars_ok and p_counts[10] == 42
    _report(
        9,
        "p(n), q(n) match recurrence oracles n<=40; |bars|=n for n<=20",
        ok,
        f"p(10)={p_counts[10]}, p(40)={p_counts[40]}, q(40)={q_counts[40]}",
    )


# criterion 10: documented CLI invocations, byte for byte

CLI_GOLDEN = [
    (["core", "3,1", "--ell", "2"], "-\nweight 2\n"),
    (["core", "4,2,1", "--ell", "3"], "1\nweight 2\n"),
    (["core", "-", "--ell", "5"], "-\nweight 0\n"),
    (["barcore", "3,2,1", "--ell", "3"], "-\nweight 2\n"),
    (["barcore", "3,2,1", "--ell", "5"], "1\nweight 1\n"),
    (
        ["reconstruct", "--ell", "2", "--core", "-", "--component", "2", "--component", "-"],
        "3,1\n",
    ),
    (["enumerate", "cores", "--n", "6", "--t", "2"], "3,2,1\n"),
    (["enumerate", "partitions", "--n", "4", "--count"], "5\n"),
    (["enumerate", "cores", "--n", "4", "--t", "2", "--count"], "0\n"),
]


def _corekit(argv):
    return subprocess.run(["corekit", *argv], capture_output=True, text=True)


def _normalize(text: str) -> str:
    # wall time is the one nondeterministic report field
    return re.sub(r'"elapsed_seconds": [0-9.]+', '"elapsed_seconds": X', text)


def test_criterion_10_cli_golden():
    problems = []
    for argv, expected in CLI_GOLDEN:
        proc = _corekit(argv)
        if proc.returncode != 0 or proc.stdout != expected:
            problems.append((argv, proc.returncode, proc.stdout))

    for argv in (
        ["verify", "theorem2", "--nmax", "28", "--levels", "3,5,7,9"],
        ["verify", "corollary1", "--s", "5", "--t", "3", "--amax", "2"],
    ):
        proc = _corekit(argv)
        if proc.returncode != 0 or json.loads(proc.stdout)["verdict"] != "verified":
            problems.append((argv, proc.returncode, proc.stdout))

    theorem1 = ["verify", "theorem1", "--nmax", "24", "--smax", "10", "--tmax", "10"]
    one = _corekit(theorem1 + ["--jobs", "1"])
    eight = _corekit(theorem1 + ["--jobs", "8"])
    rerun = _corekit(theorem1 + ["--jobs", "1"])
    if one.returncode != 0 or json.loads(one.stdout)["verdict"] != "verified":
        problems.append((theorem1, one.returncode, one.stdout))
    if _normalize(one.stdout) != _normalize(eight.stdout):
        problems.append(("jobs 1 vs 8 outputs differ", one.stdout, eight.stdout))
    if _normalize(one.stdout) != _normalize(rerun.stdout):
        problems.append(("reruns differ", one.stdout, rerun.stdout))

    bad_exit = _corekit(["barcore", "3,2,1", "--ell", "4"])
    if bad_exit.returncode != 2:
        problems.append((["barcore", "--ell", "4"], bad_exit.returncode, bad_exit.stderr))

    _report(
        10,
        "documented CLI invocations byte-identical, exit codes, jobs 1 == jobs 8",
        not problems,
        f"{len(CLI_GOLDEN) + 6} invocations checked"
        + (f", problems={problems!r}" if problems else ""),
    )

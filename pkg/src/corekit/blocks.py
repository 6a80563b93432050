"""Block identifiers, principal blocks, and the exhaustive verifiers.

Two facts get machine-checked here over desk-scale ranges: the s-core of a
t-core is again a t-core, and its bar analogue for odd levels.  The two
corollaries (the principal s-block of n = a*s + r with s > r >= t contains
no t-core, and the bar version) are verified independently rather than
derived from the theorem sweeps, as a cross-check.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import partial
from typing import Iterable

from .bar_partitions import (
    BarPartition,
    bar_core,
    bar_lengths,
    bar_quotient,
    bars,
    is_bar_core,
    remove_bar,
)
from .enumeration import bar_partitions_of, cores_of, run_sweep
from .partitions import (
    Partition,
    divisible_hooks,
    ell_core,
    ell_quotient,
    hook_lengths,
    hooks,
    is_ell_core,
    remove_hook,
)


@dataclass(frozen=True)
class BlockId:
    """Label of an ell-block: the partitions of n sharing one ell-core."""

    level: int
    core: Partition
    n: int

    def __post_init__(self):
        if not is_ell_core(self.core, self.level):
            raise ValueError(f"{self.core} is not a {self.level}-core")
        gap = self.n - self.core.size
        if gap < 0 or gap % self.level:
            raise ValueError(f"n={self.n} unreachable from core of size {self.core.size}")


@dataclass(frozen=True)
class BarBlockId:
    """Label of an ell-bar-block, for odd ell."""

    level: int
    core: BarPartition
    n: int

    def __post_init__(self):
        if not is_bar_core(self.core, self.level):
            raise ValueError(f"{self.core} is not a bar-core at level {self.level}")
        gap = self.n - self.core.size
        if gap < 0 or gap % self.level:
            raise ValueError(f"n={self.n} unreachable from core of size {self.core.size}")


@dataclass
class VerificationReport:
    """Outcome of one exhaustive sweep.

    counterexamples holds rendered witnesses ({"n", "partition", "s", "t"}),
    sorted; it is empty exactly when the verdict is "verified".
    """

    scope: dict
    checked: int
    counterexamples: list[dict]
    elapsed: float

    @property
    def verdict(self) -> str:
        return "refuted" if self.counterexamples else "verified"

    def to_document(self) -> dict:
        return {
            "scope": self.scope,
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "elapsed_seconds": round(self.elapsed, 3),
            "verdict": self.verdict,
        }


def block_id(p: Partition, ell: int) -> BlockId:
    """The ell-block containing p; equal ids mean equal ell-cores and sizes."""
    return BlockId(ell, ell_core(p, ell), p.size)


def bar_block_id(bp: BarPartition, ell: int) -> BarBlockId:
    """The bar analogue of block_id, for odd ell."""
    return BarBlockId(ell, bar_core(bp, ell), bp.size)


def principal_core(n: int, s: int) -> Partition:
    """s-core of the single-row partition (n): one row of n mod s nodes."""
    if n < 0 or s < 1:
        raise ValueError(f"need n >= 0 and s >= 1, got n={n}, s={s}")
    r = n % s
    return Partition((r,)) if r else Partition()


def principal_bar_core(n: int, s: int) -> BarPartition:
    """Bar-core of (n) at odd level s; again a single row of n mod s nodes."""
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if s < 1 or s % 2 == 0:
        raise ValueError(f"need odd s >= 1, got {s}")
    r = n % s
    return BarPartition((r,)) if r else BarPartition()


def in_principal_block(p: Partition, s: int) -> bool:
    """True iff p lies in the s-block of (n), n = |p|."""
    return ell_core(p, s) == principal_core(p.size, s)


def in_principal_bar_block(bp: BarPartition, s: int) -> bool:
    """True iff bp lies in the bar s-block of (n), n = |bp|."""
    return bar_core(bp, s) == principal_bar_core(bp.size, s)


# Sweep workers live at module level with bounds bound via functools.partial,
# so that process pools can pickle them.


def _core_theorem_cell(s_values: tuple[int, ...], n: int, t: int) -> tuple[int, list]:
    checked = 0
    found = []
    for lam in cores_of(n, t):
        for s in s_values:
            checked += 1
            if not is_ell_core(ell_core(lam, s), t):
                found.append((n, lam.parts, s, t))
    return checked, found


def _bar_theorem_cell(s_values: tuple[int, ...], n: int, t: int) -> tuple[int, list]:
    checked = 0
    found = []
    for lam in bar_partitions_of(n):
        if not is_bar_core(lam, t):
            continue
        for s in s_values:
            checked += 1
            if not is_bar_core(bar_core(lam, s), t):
                found.append((n, lam.parts, s, t))
    return checked, found


def _corollary_cell(s: int, n: int, t: int) -> tuple[int, list]:
    checked = 0
    found = []
    for lam in cores_of(n, t):
        checked += 1
        if in_principal_block(lam, s):
            found.append((n, lam.parts, s, t))
    return checked, found


def _bar_corollary_cell(s: int, n: int, t: int) -> tuple[int, list]:
    checked = 0
    found = []
    for lam in bar_partitions_of(n):
        if not is_bar_core(lam, t):
            continue
        checked += 1
        if in_principal_bar_block(lam, s):
            found.append((n, lam.parts, s, t))
    return checked, found


def _witness(item: tuple) -> dict:
    n, parts, s, t = item
    return {"n": n, "partition": str(Partition(parts)), "s": s, "t": t}


def _bar_witness(item: tuple) -> dict:
    n, parts, s, t = item
    return {"n": n, "partition": str(BarPartition(parts)), "s": s, "t": t}


def _checked_levels(values: Iterable[int], name: str, odd: bool = False) -> tuple[int, ...]:
    out = tuple(sorted(set(values)))
    if not out:
        raise ValueError(f"{name} must be nonempty")
    for v in out:
        if v < 1:
            raise ValueError(f"{name} entries must be >= 1, got {v}")
        if odd and v % 2 == 0:
            raise ValueError(f"{name} entries must be odd, got {v}")
    return out


def verify_core_theorem(
    n_max: int,
    s_values: Iterable[int],
    t_values: Iterable[int],
    jobs: int = 1,
    fail_fast: bool = False,
) -> VerificationReport:
    """Check that gamma_s of every t-core of every n <= n_max is a t-core."""
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    s_values = _checked_levels(s_values, "s_values")
    t_values = _checked_levels(t_values, "t_values")
    start = time.perf_counter()
    checked, found = run_sweep(
        range(n_max + 1), t_values, partial(_core_theorem_cell, s_values), jobs, fail_fast
    )
    elapsed = time.perf_counter() - start
    scope = {"n_max": n_max, "s_values": list(s_values), "t_values": list(t_values)}
    return VerificationReport(scope, checked, [_witness(w) for w in found], elapsed)


def verify_bar_theorem(
    n_max: int,
    s_values: Iterable[int],
    t_values: Iterable[int],
    jobs: int = 1,
    fail_fast: bool = False,
) -> VerificationReport:
    """Bar analogue of verify_core_theorem; all levels must be odd."""
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    s_values = _checked_levels(s_values, "s_values", odd=True)
    t_values = _checked_levels(t_values, "t_values", odd=True)
    start = time.perf_counter()
    checked, found = run_sweep(
        range(n_max + 1), t_values, partial(_bar_theorem_cell, s_values), jobs, fail_fast
    )
    elapsed = time.perf_counter() - start
    scope = {"n_max": n_max, "s_values": list(s_values), "t_values": list(t_values)}
    return VerificationReport(scope, checked, [_bar_witness(w) for w in found], elapsed)


def _corollary_scope(s: int, t: int, a_max: int) -> list[dict]:
    return [
        {"n": a * s + r, "r": r, "a": a}
        for a in range(a_max + 1)
        for r in range(t, s)
    ]


def verify_corollary(
    s: int, t: int, a_max: int = 2, jobs: int = 1, fail_fast: bool = False
) -> VerificationReport:
    """No t-core of n = a*s + r (s > r >= t, a <= a_max) lies in the principal s-block."""
    if not s > t >= 1:
        raise ValueError(f"need s > t >= 1, got s={s}, t={t}")
    if a_max < 0:
        raise ValueError(f"a_max must be nonnegative, got {a_max}")
    cases = _corollary_scope(s, t, a_max)
    start = time.perf_counter()
    checked, found = run_sweep(
        [c["n"] for c in cases], (t,), partial(_corollary_cell, s), jobs, fail_fast
    )
    elapsed = time.perf_counter() - start
    scope = {"s": s, "t": t, "a_max": a_max, "cases": cases}
    return VerificationReport(scope, checked, [_witness(w) for w in found], elapsed)


def verify_bar_corollary(
    s: int, t: int, a_max: int = 2, jobs: int = 1, fail_fast: bool = False
) -> VerificationReport:
    """Bar analogue of verify_corollary; s and t must be odd."""
    if s % 2 == 0 or t % 2 == 0:
        raise ValueError(f"need odd s and t, got s={s}, t={t}")
    if not s > t >= 1:
        raise ValueError(f"need s > t >= 1, got s={s}, t={t}")
    if a_max < 0:
        raise ValueError(f"a_max must be nonnegative, got {a_max}")
    cases = _corollary_scope(s, t, a_max)
    start = time.perf_counter()
    checked, found = run_sweep(
        [c["n"] for c in cases], (t,), partial(_bar_corollary_cell, s), jobs, fail_fast
    )
    elapsed = time.perf_counter() - start
    scope = {"s": s, "t": t, "a_max": a_max, "cases": cases}
    return VerificationReport(scope, checked, [_bar_witness(w) for w in found], elapsed)


def verify_quotient_bijection(p: Partition, g: int) -> bool:
    """Check the hook bijection between (g)-hooks of p and hooks of its quotient.

    Two conditions: the multiset of (g)-hook lengths of p equals g times the
    multiset of all hook lengths across quotient components, and every single
    (g)-hook removal changes exactly one component by exactly one hook of the
    scaled length, leaving the g-core fixed.
    """
    components = ell_quotient(p, g)
    lengths = sorted(h for h in hook_lengths(p) if h % g == 0)
    image = sorted(g * h for c in components for h in hook_lengths(c))
    if lengths != image:
        return False
    core = ell_core(p, g)
    for hook, reduced in divisible_hooks(p, g):
        if ell_core(reduced, g) != core:
            return False
        after = ell_quotient(reduced, g)
        changed = [i for i in range(g) if after[i] != components[i]]
        if len(changed) != 1:
            return False
        i = changed[0]
        k = hook.length // g
        if not any(
            h.length == k and remove_hook(components[i], h) == after[i]
            for h in hooks(components[i])
        ):
            return False
    return True


def verify_bar_quotient_bijection(bp: BarPartition, ell: int) -> bool:
    """Bar version: (ell)-bars of bp match bars of component0 plus hooks of the rest."""
    q = bar_quotient(bp, ell)
    lengths = sorted(d for d in bar_lengths(bp) if d % ell == 0)
    image = sorted(
        [ell * d for d in bar_lengths(q.component0)]
        + [ell * h for c in q.components for h in hook_lengths(c)]
    )
    if lengths != image:
        return False
    for bar in bars(bp):
        if bar.length % ell:
            continue
        reduced = remove_bar(bp, bar)
        q2 = bar_quotient(reduced, ell)
        if q2.core != q.core:
            return False
        before = [q.component0, *q.components]
        after = [q2.component0, *q2.components]
        changed = [i for i in range(len(before)) if after[i] != before[i]]
        if len(changed) != 1:
            return False
        i = changed[0]
        k = bar.length // ell
        if i == 0:
            if not any(
                b.length == k and remove_bar(q.component0, b) == q2.component0
                for b in bars(q.component0)
            ):
                return False
        else:
            if not any(
                h.length == k and remove_hook(before[i], h) == after[i]
                for h in hooks(before[i])
            ):
                return False
    return True

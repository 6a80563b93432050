"""Deterministic generators for partitions and cores, plus the sweep driver.

Both generators emit descending lexicographic order, so reruns produce
byte-identical streams and counterexample indices are stable.  Parallelism
happens only through SweepPlan shards: the (n, level) grid is dealt out
round-robin, each shard runs in its own process, and the merged report does
not depend on the number of workers.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Callable, Iterable, Iterator

from .bar_partitions import BarPartition
from .partitions import Partition, is_ell_core

# A worker maps one (n, level) cell to (instances checked, witness tuples).
Worker = Callable[[int, int], "tuple[int, list]"]


def _parts_desc(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _parts_desc(n - first, first):
            yield (first,) + rest


def _strict_desc(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _strict_desc(n - first, first - 1):
            yield (first,) + rest


def partitions_of(n: int) -> Iterator[Partition]:
    """Every partition of n exactly once, descending lexicographic; p(n) items."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    for parts in _parts_desc(n, n):
        yield Partition(parts)


def bar_partitions_of(n: int) -> Iterator[BarPartition]:
    """Every distinct-part partition of n, descending lexicographic; q(n) items."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    for parts in _strict_desc(n, n):
        yield BarPartition(parts)


def cores_of(n: int, t: int) -> Iterator[Partition]:
    """The t-cores of n, filtered from partitions_of(n)."""
    return (p for p in partitions_of(n) if is_ell_core(p, t))


@dataclass(frozen=True)
class SweepPlan:
    """One worker's slice of an (n, level) verification grid."""

    n_values: tuple[int, ...]
    levels: tuple[int, ...]
    shard_count: int = 1
    shard_index: int = 0

    def __post_init__(self):
        if self.shard_count < 1:
            raise ValueError(f"shard_count must be >= 1, got {self.shard_count}")
        if not 0 <= self.shard_index < self.shard_count:
            raise ValueError(
                f"shard_index must be in [0, {self.shard_count}), got {self.shard_index}"
            )


def shard(plan: SweepPlan) -> list[tuple[int, int]]:
    """Work items (n, level) owned by one shard; shards tile the grid exactly."""
    grid = [(n, level) for n in plan.n_values for level in plan.levels]
    return grid[plan.shard_index :: plan.shard_count]


def _run_shard(worker: Worker, plan: SweepPlan) -> tuple[int, list]:
    checked = 0
    found: list = []
    for n, level in shard(plan):
        count, witnesses = worker(n, level)
        checked += count
        found.extend(witnesses)
    return checked, found


def run_sweep(
    n_values: Iterable[int],
    levels: Iterable[int],
    worker: Worker,
    jobs: int = 1,
    fail_fast: bool = False,
) -> tuple[int, list]:
    """Drive a worker over the (n, level) grid and merge the results.

    Returns (total checked, sorted witness list).  With jobs > 1 the shards
    run in separate processes, so the worker must be picklable; merging sums
    the counts and sorts the witnesses, which makes the outcome independent
    of the worker count.  fail_fast forces a sequential scan that stops after
    the first cell producing a witness.
    """
    n_values = tuple(n_values)
    levels = tuple(levels)
    if jobs <= 1 or fail_fast:
        checked = 0
        found: list = []
        for n, level in shard(SweepPlan(n_values, levels)):
            count, witnesses = worker(n, level)
            checked += count
            found.extend(witnesses)
            if fail_fast and found:
                break
        return checked, sorted(found)
    plans = [SweepPlan(n_values, levels, jobs, k) for k in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(partial(_run_shard, worker), plans))
    checked = sum(count for count, _ in results)
    found = sorted(w for _, witnesses in results for w in witnesses)
    return checked, found

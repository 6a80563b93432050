"""Bar-partitions: partitions into distinct parts, with bars in place of hooks.

A bar is removed from a part either by shortening it within its row or by
deleting two rows whose parts sum to the bar length.  The number of bars of
a bar-partition always equals its size, mirroring hooks of an ordinary
partition.  For bar-cores and bar-quotients the level must be odd.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .partitions import Partition

WITHIN_ROW = "within-row"
TWO_ROW = "two-row"


class BarPartition:
    """Distinct positive integer parts, stored in decreasing order.

    Input order is free; construction sorts.  Repeated or nonpositive parts
    are rejected.
    """

    __slots__ = ("parts", "size")

    def __init__(self, parts: Iterable[int] = ()):
        seq = tuple(sorted((int(p) for p in parts), reverse=True))
        for a, b in zip(seq, seq[1:]):
            if a == b:
                raise ValueError(f"parts must be distinct, got {a} twice")
        if seq and seq[-1] <= 0:
            raise ValueError(f"parts must be positive, got {seq[-1]}")
        self.parts = seq
        self.size = sum(seq)

    def __eq__(self, other) -> bool:
        return isinstance(other, BarPartition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(("bar", self.parts))

    def __lt__(self, other: "BarPartition") -> bool:
        return self.parts < other.parts

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __repr__(self) -> str:
        return f"BarPartition({self.parts!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "-"


def parse_bar_partition(text: str) -> BarPartition:
    """Parse ``7,4,2,1`` (strictly decreasing) or ``-`` for empty."""
    text = text.strip()
    if text == "-":
        return BarPartition()
    if not text:
        raise ValueError("empty bar-partition literal; use '-'")
    parts = []
    for token in text.split(","):
        try:
            value = int(token)
        except ValueError:
            raise ValueError(f"bad bar-partition literal entry {token!r}") from None
        if value <= 0:
            raise ValueError(f"bar-partition entries must be positive, got {value}")
        parts.append(value)
    bp = BarPartition(parts)
    if bp.parts != tuple(parts):
        raise ValueError(f"bar-partition literal must be strictly decreasing: {text!r}")
    return bp


@dataclass(frozen=True)
class Bar:
    """A removable bar.

    Within-row bars shorten row ``row`` by ``length`` (the shortened value
    must not collide with another part; length equal to the part deletes the
    row).  Two-row bars delete rows ``row`` and ``row2`` whose parts sum to
    ``length``; ``row2`` is None for within-row bars.
    """

    kind: str
    row: int
    row2: int | None
    length: int


@dataclass(frozen=True)
class BarQuotientDecomposition:
    """Bar-core plus quotient at one odd level.

    component0 collects the parts divisible by the level, scaled down; the
    remaining components pair up the residue classes i and ell - i and are
    ordinary partitions.  Sizes of all components sum to the weight.
    """

    ell: int
    core: BarPartition
    component0: BarPartition
    components: tuple[Partition, ...]
    weight: int


def _check_bar_level(ell: int) -> None:
    if not isinstance(ell, int) or ell < 1:
        raise ValueError(f"level must be an integer >= 1, got {ell!r}")
    if ell % 2 == 0:
        raise ValueError(f"bar operations need an odd level, got {ell}")


def bars(bp: BarPartition) -> list[Bar]:
    """All bars, row-major, descending length within each row."""
    parts = bp.parts
    have = set(parts)
    out = []
    for i, a in enumerate(parts, start=1):
        for j in range(i + 1, len(parts) + 1):
            out.append(Bar(TWO_ROW, i, j, a + parts[j - 1]))
        for d in range(a, 0, -1):
            if a - d not in have:
                out.append(Bar(WITHIN_ROW, i, None, d))
    return out


def bar_lengths(bp: BarPartition) -> list[int]:
    """Bar lengths only, in the same order as bars()."""
    parts = bp.parts
    have = set(parts)
    out = []
    for i, a in enumerate(parts):
        out.extend(a + b for b in parts[i + 1 :])
        out.extend(d for d in range(a, 0, -1) if a - d not in have)
    return out


def remove_bar(bp: BarPartition, bar: Bar) -> BarPartition:
    """Remove one bar, validating that it belongs to bp."""
    parts = bp.parts
    if not 1 <= bar.row <= len(parts):
        raise ValueError(f"{bar} is not a bar of {bp}")
    a = parts[bar.row - 1]
    if bar.kind == WITHIN_ROW:
        if bar.row2 is not None or not 1 <= bar.length <= a or a - bar.length in parts:
            raise ValueError(f"{bar} is not a bar of {bp}")
        rest = [q for r, q in enumerate(parts, start=1) if r != bar.row]
        if a > bar.length:
            rest.append(a - bar.length)
        return BarPartition(rest)
    if bar.kind == TWO_ROW:
        if bar.row2 is None or not bar.row < bar.row2 <= len(parts):
            raise ValueError(f"{bar} is not a bar of {bp}")
        if bar.length != a + parts[bar.row2 - 1]:
            raise ValueError(f"{bar} is not a bar of {bp}")
        return BarPartition(
            q for r, q in enumerate(parts, start=1) if r not in (bar.row, bar.row2)
        )
    raise ValueError(f"unknown bar kind {bar.kind!r}")


def bar_core(bp: BarPartition, ell: int) -> BarPartition:
    """Remove bars of length divisible by ell until none remain.

    The result does not depend on the removal order; for determinism we
    always take the longest removable bar, breaking ties by smallest row.
    """
    _check_bar_level(ell)
    current = bp
    while True:
        candidates = [b for b in bars(current) if b.length % ell == 0]
        if not candidates:
            return current
        best = min(candidates, key=lambda b: (-b.length, b.row))
        current = remove_bar(current, best)


def bar_weight(bp: BarPartition, ell: int) -> int:
    """Number of divisible bars removed on the way to the bar-core."""
    _check_bar_level(ell)
    return (bp.size - bar_core(bp, ell).size) // ell


def is_bar_core(bp: BarPartition, ell: int) -> bool:
    """True iff no bar length of bp is divisible by ell."""
    _check_bar_level(ell)
    return all(d % ell for d in bar_lengths(bp))


def _pair_component(parts: tuple[int, ...], ell: int, i: int) -> Partition:
    # Maya encoding of the residue pair (i, ell - i): position k >= 0 is
    # occupied when ell*k + i is a part, position -k-1 is empty when
    # ell*k + (ell - i) is a part.  Decoded part of an occupied position is
    # the number of empty positions below it.
    have = set(parts)
    top = max(parts) // ell + 1 if parts else 0
    occupied = []
    for k in range(top, -1, -1):
        if ell * k + i in have:
            occupied.append(k)
    for k in range(top + 1):
        if ell * k + (ell - i) not in have:
            occupied.append(-k - 1)
    # below -(top+1) every position is occupied, so empties are countable
    empties_below = 0
    gaps = {}
    pos_set = set(occupied)
    for p in range(-top - 1, top + 1):
        if p in pos_set:
            gaps[p] = empties_below
        else:
            empties_below += 1
    return Partition(gaps[p] for p in sorted(pos_set, reverse=True) if gaps[p] > 0)


def bar_quotient(bp: BarPartition, ell: int) -> BarQuotientDecomposition:
    """Split bp into its bar-core and quotient components at odd level ell."""
    _check_bar_level(ell)
    core = bar_core(bp, ell)
    component0 = BarPartition(a // ell for a in bp.parts if a % ell == 0)
    components = tuple(
        _pair_component(bp.parts, ell, i) for i in range(1, (ell + 1) // 2)
    )
    return BarQuotientDecomposition(
        ell, core, component0, components, (bp.size - core.size) // ell
    )


def from_bar_core_and_quotient(
    core: BarPartition,
    component0: BarPartition,
    components: Iterable[Partition],
    ell: int,
) -> BarPartition:
    """Rebuild the unique bar-partition with the given bar-core and quotient.

    The core fixes a charge for each residue pair; component k redistributes
    the beads of that charged Maya configuration, and occupied positions read
    back as parts congruent to k or ell - k.
    """
    _check_bar_level(ell)
    components = tuple(components)
    if len(components) != (ell - 1) // 2:
        raise ValueError(f"expected {(ell - 1) // 2} pair components, got {len(components)}")
    if not is_bar_core(core, ell):
        raise ValueError(f"{core} is not a bar-core at level {ell}")
    parts = [ell * a for a in component0.parts]
    for i, mu in enumerate(components, start=1):
        charge = sum(1 for a in core.parts if a % ell == i) - sum(
            1 for a in core.parts if a % ell == ell - i
        )
        k = len(mu.parts)
        floor = charge - k - 1  # positions <= floor are all occupied
        occupied = {charge - j + mu.parts[j - 1] for j in range(1, k + 1)}
        for p in occupied:
            if p >= 0:
                parts.append(ell * p + i)
        for p in range(min(floor + 1, 0), 0):
            if p not in occupied:
                parts.append(ell * (-p - 1) + (ell - i))
        for p in range(0, floor + 1):
            parts.append(ell * p + i)
    parts.sort(reverse=True)
    return BarPartition(parts)

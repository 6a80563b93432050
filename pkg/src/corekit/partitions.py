"""Integer partitions with hooks, beta-sets, cores and quotients.

Everything here is built on one encoding: a partition with at most m rows
becomes the m-element beta-set {parts[i] + m - i} (first-column hook lengths
padded with a staircase).  Removing a hook of length h is moving one bead
down h positions; grouping beads by residue mod ell splits the beta-set into
ell runners, which is what makes cores and quotients cheap to compute.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class Partition:
    """A non-increasing sequence of positive integers.

    Trailing zeros are stripped on construction; the empty partition is
    ``Partition()``.  Instances are immutable by convention and hashable.
    """

    __slots__ = ("parts", "size")

    def __init__(self, parts: Iterable[int] = ()):
        seq = tuple(int(p) for p in parts)
        for a, b in zip(seq, seq[1:]):
            if b > a:
                raise ValueError(f"parts must be non-increasing, got {a} before {b}")
        if seq and seq[-1] < 0:
            raise ValueError("parts must be nonnegative")
        end = len(seq)
        while end and seq[end - 1] == 0:
            end -= 1
        self.parts = seq[:end]
        self.size = sum(self.parts)

    def conjugate(self) -> "Partition":
        """Transpose of the diagram: column lengths become row lengths."""
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for a in self.parts:
            for j in range(a):
                cols[j] += 1
        return Partition(cols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __lt__(self, other: "Partition") -> bool:
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
        return f"Partition({self.parts!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "-"


def parse_partition(text: str) -> Partition:
    """Parse the literal format: ``4,2,1`` or ``-`` for the empty partition."""
    text = text.strip()
    if text == "-":
        return Partition()
    if not text:
        raise ValueError("empty partition literal; use '-'")
    parts = []
    for token in text.split(","):
        try:
            value = int(token)
        except ValueError:
            raise ValueError(f"bad partition literal entry {token!r}") from None
        if value <= 0:
            raise ValueError(f"partition literal entries must be positive, got {value}")
        parts.append(value)
    return Partition(parts)


@dataclass(frozen=True)
class Hook:
    """The hook of one node: the node, its arm to the right, its leg below."""

    row: int
    col: int
    arm: int
    leg: int
    length: int


@dataclass(frozen=True)
class BetaSet:
    """A set of bead positions on the abacus, stored in decreasing order."""

    beads: tuple[int, ...]
    bead_count: int

    def __post_init__(self):
        beads = tuple(sorted(self.beads, reverse=True))
        if len(set(beads)) != len(beads):
            raise ValueError("beads must be distinct")
        if beads and beads[-1] < 0:
            raise ValueError("beads must be nonnegative")
        if len(beads) != self.bead_count:
            raise ValueError(f"expected {self.bead_count} beads, got {len(beads)}")
        object.__setattr__(self, "beads", beads)


@dataclass(frozen=True)
class QuotientDecomposition:
    """Core plus quotient components at one level; sizes sum to the weight."""

    ell: int
    core: Partition
    components: tuple[Partition, ...]
    weight: int


def _check_level(ell: int) -> None:
    if not isinstance(ell, int) or ell < 1:
        raise ValueError(f"level must be an integer >= 1, got {ell!r}")


def _beta(parts: tuple[int, ...], m: int) -> list[int]:
    # parts[i] + m - 1 - i for the first len(parts) rows, then the staircase.
    n = len(parts)
    return [parts[i] + m - 1 - i for i in range(n)] + list(range(m - 1 - n, -1, -1))


def _decode_beads(beads: Iterable[int], m: int) -> Partition:
    ordered = sorted(beads, reverse=True)
    return Partition(b - (m - 1 - i) for i, b in enumerate(ordered))


def _normalized_bead_count(rows: int, ell: int) -> int:
    return ((rows + ell - 1) // ell) * ell


def _hook_lengths(parts: tuple[int, ...]) -> list[int]:
    if not parts:
        return []
    cols = [0] * (parts[0] + 1)
    for a in parts:
        for j in range(1, a + 1):
            cols[j] += 1
    out = []
    for i, a in enumerate(parts, start=1):
        out.extend(a - j + cols[j] - i + 1 for j in range(1, a + 1))
    return out


def _core_parts(parts: tuple[int, ...], ell: int) -> tuple[int, ...]:
    # Push every bead as far down its runner as it will go.
    m = _normalized_bead_count(len(parts), ell)
    counts = [0] * ell
    for b in _beta(parts, m):
        counts[b % ell] += 1
    beads = [r + ell * k for r in range(ell) for k in range(counts[r])]
    beads.sort(reverse=True)
    out = []
    for i, b in enumerate(beads):
        p = b - (m - 1 - i)
        if p == 0:
            break
        out.append(p)
    return tuple(out)


def beta_set(p: Partition, m: int) -> BetaSet:
    """Encode p on an abacus with exactly m beads; requires m >= len(p)."""
    if m < len(p.parts):
        raise ValueError(f"need at least {len(p.parts)} beads, got {m}")
    return BetaSet(tuple(_beta(p.parts, m)), m)


def partition_of_beta(beta: BetaSet) -> Partition:
    """Decode a beta-set back to the partition it encodes."""
    return _decode_beads(beta.beads, beta.bead_count)


def hooks(p: Partition) -> list[Hook]:
    """All hooks of p, one per node, in row-major order."""
    if not p.parts:
        return []
    cols = [0] * (p.parts[0] + 1)
    for a in p.parts:
        for j in range(1, a + 1):
            cols[j] += 1
    out = []
    for i, a in enumerate(p.parts, start=1):
        for j in range(1, a + 1):
            arm = a - j
            leg = cols[j] - i
            out.append(Hook(i, j, arm, leg, arm + leg + 1))
    return out


def hook_lengths(p: Partition) -> list[int]:
    """Hook lengths only, row-major; cheaper than building Hook objects."""
    return _hook_lengths(p.parts)


def remove_hook(p: Partition, h: Hook) -> Partition:
    """Remove one hook: the bead for its row slides down by the hook length."""
    parts = p.parts
    if not (1 <= h.row <= len(parts) and 1 <= h.col <= parts[h.row - 1]):
        raise ValueError(f"{h} is not a node of {p}")
    arm = parts[h.row - 1] - h.col
    leg = sum(1 for a in parts[h.row:] if a >= h.col)
    if (h.arm, h.leg, h.length) != (arm, leg, arm + leg + 1):
        raise ValueError(f"{h} is not a hook of {p}")
    m = len(parts)
    beads = set(_beta(parts, m))
    b = parts[h.row - 1] + m - h.row
    c = b - h.length
    assert c >= 0 and c not in beads
    beads.remove(b)
    beads.add(c)
    return _decode_beads(beads, m)


def ell_core(p: Partition, ell: int) -> Partition:
    """The partition left once every hook of length divisible by ell is gone."""
    _check_level(ell)
    return Partition(_core_parts(p.parts, ell))


def ell_quotient(p: Partition, ell: int) -> tuple[Partition, ...]:
    """Split the beta-set into ell runners; component i is runner i decoded.

    The bead count is normalized to the smallest multiple of ell that covers
    all rows, which fixes the component order; any larger multiple decodes to
    the same tuple.
    """
    _check_level(ell)
    m = _normalized_bead_count(len(p.parts), ell)
    runners: list[list[int]] = [[] for _ in range(ell)]
    for b in _beta(p.parts, m):
        runners[b % ell].append(b // ell)
    return tuple(_decode_beads(r, len(r)) for r in runners)


def ell_weight(p: Partition, ell: int) -> int:
    """Number of hooks of length divisible by ell."""
    _check_level(ell)
    return (p.size - sum(_core_parts(p.parts, ell))) // ell


def is_ell_core(p: Partition, ell: int) -> bool:
    """True iff no hook length of p is divisible by ell."""
    _check_level(ell)
    for h in _hook_lengths(p.parts):
        if h % ell == 0:
            return False
    return True


def divisible_hooks(p: Partition, ell: int) -> list[tuple[Hook, Partition]]:
    """Every hook with ell dividing its length, with the partition it leaves."""
    _check_level(ell)
    return [(h, remove_hook(p, h)) for h in hooks(p) if h.length % ell == 0]


def from_core_and_quotient(
    core: Partition, components: Iterable[Partition], ell: int
) -> Partition:
    """Rebuild the unique partition with the given core and quotient.

    Inverts ell_quotient: each runner of the core's beta-set is the pushed-down
    configuration {0..c_r-1}, and gets replaced by the beta-set of its
    component.  The bead count grows in steps of ell until every runner is
    large enough to hold its component.
    """
    _check_level(ell)
    components = tuple(components)
    if len(components) != ell:
        raise ValueError(f"expected {ell} components, got {len(components)}")
    if not is_ell_core(core, ell):
        raise ValueError(f"{core} is not a {ell}-core")
    m = _normalized_bead_count(len(core.parts), ell)
    while True:
        counts = [0] * ell
        for b in _beta(core.parts, m):
            counts[b % ell] += 1
        if all(counts[r] >= len(components[r].parts) for r in range(ell)):
            break
        m += ell
    beads = []
    for r in range(ell):
        beads.extend(r + ell * k for k in _beta(components[r].parts, counts[r]))
    return _decode_beads(beads, m)


def decompose(p: Partition, ell: int) -> QuotientDecomposition:
    """Bundle core, quotient components and weight at one level."""
    _check_level(ell)
    core = ell_core(p, ell)
    components = ell_quotient(p, ell)
    return QuotientDecomposition(ell, core, components, (p.size - core.size) // ell)

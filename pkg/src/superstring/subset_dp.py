"""Clean-overlap table and bitmask subset superstring tables.

``overlap(w, v)`` is the largest t such that the length-t suffix of string w
equals the length-t prefix of string v.  Because no input may contain
another, t is strictly below both lengths for w != v; the diagonal is set to
the string's own length by convention and never read by the tables below.

``dp_right[mask][j]`` is the length of the shortest string containing every
input named by ``mask`` exactly, arranged as a chain glued at maximal clean
overlaps, with string j the rightmost link.  ``dp_left`` mirrors it with j
the leftmost link.  Masks are iterated in increasing order so every submask
is ready when needed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .counters import Counters
from .instance import Instance
from .mismatches import MismatchTable

INFINITY = float("inf")


@dataclass
class OverlapTable:
    values: list[list[int]]

    def get(self, w: int, v: int) -> int:
        return self.values[w][v]


@dataclass
class SubsetTable:
    """Dense 2^n x n grids; entries for j outside mask stay None."""

    dp_right: list[list[int | None]]
    dp_left: list[list[int | None]]


def max_clean_overlap(left: str, right: str) -> int:
    """Largest t with left's length-t suffix equal to right's length-t prefix."""
    for t in range(min(len(left), len(right)) - 1, 0, -1):
        if left[-t:] == right[:t]:
            return t
    return 0


def _overlap_via_mismatch_lists(table: MismatchTable, lengths, w: int, v: int) -> int:
    # An empty mismatch list for base v / slider w at shift t-1 certifies that
    # w's length-t suffix overlays v's length-t prefix cleanly.
    for t in range(min(lengths[w], lengths[v]) - 1, 0, -1):
        if table.count(v, w, t - 1) == 0:
            return t
    return 0


def build_overlap_table(
    instance: Instance, table: MismatchTable | None = None, counters: Counters | None = None
) -> OverlapTable:
    """Maximal clean overlap for every ordered pair, |s_w| on the diagonal.

    Overlaps are defined by direct suffix/prefix equality.  When a mismatch
    table is supplied, the alignment-list route is evaluated as well and any
    disagreement raises, as the two are different readings of one quantity.
    """
    strings = instance.strings
    n = instance.n
    lengths = [len(s) for s in strings]
    values = [[0] * n for _ in range(n)]
    for w in range(n):
        for v in range(n):
            if w == v:
                values[w][v] = lengths[w]
                continue
            t = max_clean_overlap(strings[w], strings[v])
            if table is not None:
                alt = _overlap_via_mismatch_lists(table, lengths, w, v)
                if alt != t:
                    raise RuntimeError(
                        f"overlap table routes disagree for pair ({w}, {v}): {t} vs {alt}"
                    )
            values[w][v] = t
    return OverlapTable(values)


def build_dp_right(
    instance: Instance, overlap: OverlapTable, counters: Counters | None = None
) -> list[list[int | None]]:
    """Fill dp_right for all non-empty masks and all members."""
    n = instance.n
    lengths = [len(s) for s in instance.strings]
    dp: list[list[int | None]] = [[None] * n for _ in range(1 << n)]
    work = 0
    for j in range(n):
        dp[1 << j][j] = lengths[j]
    for mask in range(1, 1 << n):
        for j in range(n):
            if not mask & (1 << j) or mask == 1 << j:
                continue
            rest = mask ^ (1 << j)
            best = INFINITY
            for p in range(n):
                if not rest & (1 << p):
                    continue
                work += 1
                value = dp[rest][p] + lengths[j] - overlap.get(p, j)
                if value < best:
                    best = value
            dp[mask][j] = best
    if counters is not None:
        counters.dp_right += work
    return dp


def build_dp_left(
    instance: Instance, overlap: OverlapTable, counters: Counters | None = None
) -> list[list[int | None]]:
    """Mirror of :func:`build_dp_right`, extending chains on the left."""
    n = instance.n
    lengths = [len(s) for s in instance.strings]
    dp: list[list[int | None]] = [[None] * n for _ in range(1 << n)]
    work = 0
    for j in range(n):
        dp[1 << j][j] = lengths[j]
    for mask in range(1, 1 << n):
        for j in range(n):
            if not mask & (1 << j) or mask == 1 << j:
                continue
            rest = mask ^ (1 << j)
            best = INFINITY
            for p in range(n):
                if not rest & (1 << p):
                    continue
                work += 1
                value = dp[rest][p] + lengths[j] - overlap.get(j, p)
                if value < best:
                    best = value
            dp[mask][j] = best
    if counters is not None:
        counters.dp_left += work
    return dp


def build_subset_table(
    instance: Instance, overlap: OverlapTable, counters: Counters | None = None
) -> SubsetTable:
    return SubsetTable(
        dp_right=build_dp_right(instance, overlap, counters),
        dp_left=build_dp_left(instance, overlap, counters),
    )

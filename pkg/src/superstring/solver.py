"""Composition of the precomputed tables into an optimal answer.

The search space is organised around which string carries the mismatches,
which exact strings flank it, and which exact strings vanish into its span:

  (a) a single string is its own answer;
  (b) the mistake string is the overall first or last string: one pair core
      plus one subset chain covering everything else;
  (c) the mistake string sits between two exact anchors l and r: the strings
      outside the core are bipartitioned into a left chain ending in l and a
      right chain starting in r, glued to the core through l and r;
  (d) additionally, any subset of the remaining exact strings may be
      *absorbed*: placed strictly inside the mistake string's span, where
      they cost budget instead of length.  Each anchored shape above has an
      absorbed variant, including the extreme one where every exact string
      sits inside the mistake string.

Terms of shape (d) are required for exactness.  An absorbed string is fully
covered by the mistake string's occurrence, which carries mismatches, so the
no-substring guarantee of the inputs says nothing about it; anchor-only
compositions miss exactly those arrangements.

The all-exact chain (the classical shortest superstring of the whole set) is
always feasible and seeds the minimisation.

Candidates are compared as tuples
``(length, kind, m, l, r, interior_mask, partition_mask)`` in lexicographic
order; window scans are pruned once they can no longer strictly improve on
the incumbent, so among equal-length optima the earliest shape in that
order wins.  Both rules are fixed, so the reported answer, witness and
offsets do not depend on evaluation order or on the number of worker
threads.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .cores import CoreTable, build_core_table, placement_mismatches
from .counters import Counters
from .instance import Instance, InvalidInstanceError, validate
from .mismatches import MismatchTable, build_mismatch_table
from .subset_dp import OverlapTable, SubsetTable, build_overlap_table, build_subset_table

# candidate kinds, in tie-break order; *_ABS variants absorb interior strings
_BASELINE = 0
_EDGE_LEFT = 1  # mistake string last: anchor l, chain on the left
_EDGE_RIGHT = 2  # mistake string first: anchor r, chain on the right
_TRIPLE = 3
_EDGE_LEFT_ABS = 4
_EDGE_RIGHT_ABS = 5
_TRIPLE_ABS = 6
_ENCLOSED = 7  # no anchors: every exact string inside the mistake string


class ReconstructionError(RuntimeError):
    """A reconstructed witness failed verification; signals a solver bug."""


@dataclass
class Solution:
    """Optimal length plus, when reconstruction is requested, a witness.

    ``offsets[i]`` is the start of string i inside the witness;
    ``mismatch_positions`` are the witness positions where the mistake string
    disagrees.  For the all-exact baseline arrangement no string carries a
    mismatch and ``mistake_index`` is reported as 0 with an empty position
    list.
    """

    length: int
    mistake_index: int
    witness: str | None = None
    offsets: list[int] | None = None
    mismatch_positions: list[int] | None = None
    counters: Counters | None = None


@dataclass
class _Tables:
    mismatch: MismatchTable
    cores: CoreTable
    overlap: OverlapTable
    subsets: SubsetTable


def _submasks(mask: int):
    """All submasks of mask, descending, including mask itself and 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _bits(mask: int, n: int) -> list[int]:
    return [i for i in range(n) if mask & (1 << i)]


def _base_window_mismatches(table, m, l, r, len_l, len_m, len_r, length, start) -> int:
    """Mismatches of m against the anchors for one window placement."""
    if l >= 0 and r >= 0:
        return placement_mismatches(table, l, m, r, len_l, len_m, len_r, length, start)
    if l >= 0:
        return table.count(l, m, start + len_m - 1)
    if r >= 0:
        end_in_r = start + len_m - 1 - (length - len_r)
        return table.count(r, m, end_in_r) if end_in_r >= 0 else 0
    return 0


def _place_interiors(m_str, cover, interiors, strings, budget, counters):
    """Offsets (in mistake-string coordinates) embedding `interiors` strictly inside.

    `cover` holds the consensus character for every already-covered position
    of the mistake string's span (None = uncovered).  A placement must agree
    with covered positions; disagreements on fresh positions spend budget.
    Returns the first assignment found, scanning strings in the given order
    and offsets ascending, or None.
    """
    if not interiors:
        return {}
    e = interiors[0]
    s = strings[e]
    for offset in range(1, len(m_str) - len(s)):
        counters.window_scan += 1
        fresh = []
        cost = 0
        ok = True
        for t, ch in enumerate(s):
            seen = cover[offset + t]
            if seen is not None:
                if seen != ch:
                    ok = False
                    break
            else:
                fresh.append(offset + t)
                if ch != m_str[offset + t]:
                    cost += 1
                    if cost > budget:
                        ok = False
                        break
        if not ok:
            continue
        for p in fresh:
            cover[p] = s[p - offset]
        rest = _place_interiors(m_str, cover, interiors[1:], strings, budget - cost, counters)
        if rest is not None:
            rest[e] = offset
            return rest
        for p in fresh:
            cover[p] = None
    return None


def _scan_window(instance, table, m, l, r, interiors, max_length, counters):
    """Minimal window placing m with the given anchors and absorbed strings.

    Returns (length, m_start, {interior: offset}) for the first feasible
    placement under ascending (length, start) order, or None when nothing
    beats `max_length` (exclusive).
    """
    strings = instance.strings
    k = instance.k
    len_m = len(strings[m])
    if any(len(strings[e]) > len_m - 2 for e in interiors):
        return None
    len_l = len(strings[l]) if l >= 0 else 0
    len_r = len(strings[r]) if r >= 0 else 0

    if l >= 0 and r >= 0:
        lengths = range(max(len_l, len_r), len_l + len_m + len_r + 1)
    elif l >= 0:
        lengths = range(max(len_l, len_m), len_l + len_m + 1)
    elif r >= 0:
        lengths = range(max(len_m, len_r), len_m + len_r + 1)
    else:
        lengths = range(len_m, len_m + 1)

    for length in lengths:
        if length >= max_length:
            return None
        if l >= 0 and r >= 0 and length < len_l + len_r and table.count(l, r, length - 1) != 0:
            continue
        for start in range(length - len_m + 1):
            counters.window_scan += 1
            base = _base_window_mismatches(
                table, m, l, r, len_l, len_m, len_r, length, start
            )
            if base > k:
                continue
            if not interiors:
                return length, start, {}
            cover: list[str | None] = [None] * len_m
            for t in range(len_m):
                at = start + t
                if l >= 0 and at < len_l:
                    cover[t] = strings[l][at]
                elif r >= 0 and at >= length - len_r:
                    cover[t] = strings[r][at - (length - len_r)]
            placed = _place_interiors(
                strings[m], cover, interiors, strings, k - base, counters
            )
            if placed is not None:
                return length, start, placed
    return None


def _min_glue(dp_right, dp_left, outside, l, r, counters):
    """Cheapest left/right chain split of `outside` around anchors l and r."""
    best = None
    best_sub = 0
    for sub in _submasks(outside):
        counters.window_scan += 1
        value = dp_right[sub | (1 << l)][l] + dp_left[(outside ^ sub) | (1 << r)][r]
        if best is None or value < best or (value == best and sub < best_sub):
            best = value
            best_sub = sub
    return best, best_sub


def _candidates_for_m(instance, tables, m, baseline_value, counters):
    """Best candidate tuple with string m carrying the mismatches.

    Anchored terms come first, then absorbed variants in ascending
    (kind, l, r, interior-mask) order; a later candidate is kept only when
    strictly shorter, which together with the fixed ordering makes the
    result independent of evaluation order.
    """
    n = instance.n
    k = instance.k
    strings = instance.strings
    lengths = [len(s) for s in strings]
    full = (1 << n) - 1
    rest_mask = full ^ (1 << m)
    dp_right = tables.subsets.dp_right
    dp_left = tables.subsets.dp_left
    cores = tables.cores
    best = (baseline_value, _BASELINE, -1, -1, -1, -1, -1)

    for l in range(n):
        if l == m:
            continue
        counters.composition += 1
        length = dp_right[rest_mask][l] + cores.pair_left[l, m].length - lengths[l]
        cand = (length, _EDGE_LEFT, m, l, -1, 0, 0)
        if cand < best:
            best = cand

    for r in range(n):
        if r == m:
            continue
        counters.composition += 1
        length = cores.pair_right[m, r].length - lengths[r] + dp_left[rest_mask][r]
        cand = (length, _EDGE_RIGHT, m, -1, r, 0, 0)
        if cand < best:
            best = cand

    if n >= 3:
        for l in range(n):
            if l == m:
                continue
            for r in range(n):
                if r == m or r == l:
                    continue
                core_len = cores.triple[l, m, r].length
                outside = rest_mask ^ (1 << l) ^ (1 << r)
                glue = core_len - lengths[l] - lengths[r]
                for sub in _submasks(outside):
                    counters.composition += 1
                    length = (
                        dp_right[sub | (1 << l)][l]
                        + glue
                        + dp_left[(outside ^ sub) | (1 << r)][r]
                    )
                    cand = (length, _TRIPLE, m, l, r, 0, sub)
                    if cand < best:
                        best = cand

    # absorbed variants: only worth scanning when at least one other string
    # is short enough to vanish inside m, i.e. strictly shorter than |m| - 1
    if not any(lengths[e] <= lengths[m] - 2 for e in range(n) if e != m):
        return best

    for l in range(n):
        if l == m:
            continue
        chain = rest_mask ^ (1 << l)
        for interior_mask in _submasks(chain):
            if interior_mask == 0:
                continue
            interiors = _bits(interior_mask, n)
            cutoff = best[0] - dp_right[rest_mask ^ interior_mask][l] + lengths[l]
            found = _scan_window(instance, tables.mismatch, m, l, -1, interiors, cutoff, counters)
            if found is not None:
                length = dp_right[rest_mask ^ interior_mask][l] + found[0] - lengths[l]
                cand = (length, _EDGE_LEFT_ABS, m, l, -1, interior_mask, 0)
                if cand < best:
                    best = cand

    for r in range(n):
        if r == m:
            continue
        chain = rest_mask ^ (1 << r)
        for interior_mask in _submasks(chain):
            if interior_mask == 0:
                continue
            interiors = _bits(interior_mask, n)
            cutoff = best[0] - dp_left[rest_mask ^ interior_mask][r] + lengths[r]
            found = _scan_window(instance, tables.mismatch, m, -1, r, interiors, cutoff, counters)
            if found is not None:
                length = found[0] - lengths[r] + dp_left[rest_mask ^ interior_mask][r]
                cand = (length, _EDGE_RIGHT_ABS, m, -1, r, interior_mask, 0)
                if cand < best:
                    best = cand

    if n >= 4:
        for l in range(n):
            if l == m:
                continue
            for r in range(n):
                if r == m or r == l:
                    continue
                around = rest_mask ^ (1 << l) ^ (1 << r)
                for interior_mask in _submasks(around):
                    if interior_mask == 0:
                        continue
                    interiors = _bits(interior_mask, n)
                    outside = around ^ interior_mask
                    glue, glue_sub = _min_glue(dp_right, dp_left, outside, l, r, counters)
                    cutoff = best[0] - glue + lengths[l] + lengths[r]
                    found = _scan_window(
                        instance, tables.mismatch, m, l, r, interiors, cutoff, counters
                    )
                    if found is not None:
                        length = glue + found[0] - lengths[l] - lengths[r]
                        cand = (length, _TRIPLE_ABS, m, l, r, interior_mask, glue_sub)
                        if cand < best:
                            best = cand

    found = _scan_window(
        instance, tables.mismatch, m, -1, -1, _bits(rest_mask, n), best[0], counters
    )
    if found is not None:
        cand = (found[0], _ENCLOSED, m, -1, -1, rest_mask, 0)
        if cand < best:
            best = cand

    return best


def _solve_tables(instance: Instance, counters: Counters) -> _Tables:
    mismatch = build_mismatch_table(instance, counters)
    cores = build_core_table(instance, mismatch, counters)
    overlap = build_overlap_table(instance, mismatch)
    subsets = build_subset_table(instance, overlap, counters)
    return _Tables(mismatch=mismatch, cores=cores, overlap=overlap, subsets=subsets)


def solve(
    instance: Instance,
    *,
    reconstruct: bool = False,
    threads: int = 1,
) -> Solution:
    """Minimal containing-string length for the instance, optionally with witness.

    ``threads`` parallelises the per-mistake-string scans; results are
    identical for any thread count.
    """
    report = validate(instance)
    if not report.ok:
        raise InvalidInstanceError(report)

    counters = Counters()
    n = instance.n
    if n == 1:
        only = instance.strings[0]
        return Solution(
            length=len(only),
            mistake_index=0,
            witness=only if reconstruct else None,
            offsets=[0] if reconstruct else None,
            mismatch_positions=[] if reconstruct else None,
            counters=counters,
        )

    tables = _solve_tables(instance, counters)
    full = (1 << n) - 1
    dp_right = tables.subsets.dp_right

    baseline_j = min(range(n), key=lambda j: (dp_right[full][j], j))
    counters.composition += n
    baseline_value = dp_right[full][baseline_j]
    best = (baseline_value, _BASELINE, -1, -1, -1, -1, -1)

    if threads <= 1:
        for m in range(n):
            cand = _candidates_for_m(instance, tables, m, baseline_value, counters)
            if cand < best:
                best = cand
    else:
        def worker(m: int):
            local = Counters()
            return _candidates_for_m(instance, tables, m, baseline_value, local), local

        with ThreadPoolExecutor(max_workers=threads) as pool:
            for cand, local in pool.map(worker, range(n)):
                counters.merge(local)
                if cand < best:
                    best = cand

    kind = best[1]
    mistake_index = 0 if kind == _BASELINE else best[2]
    solution = Solution(length=best[0], mistake_index=mistake_index, counters=counters)
    if reconstruct:
        witness, offsets = _assemble(instance, tables, best, baseline_j)
        solution.witness = witness
        solution.offsets = offsets
        mistake = instance.strings[mistake_index]
        at = offsets[mistake_index]
        solution.mismatch_positions = [
            at + t for t in range(len(mistake)) if witness[at + t] != mistake[t]
        ]
        problems = verify_solution(instance, solution)
        if problems:
            raise ReconstructionError(f"reconstruction mismatch: {problems}")
    return solution


def _chain_right(instance, tables, mask: int, last: int) -> list[tuple[int, int]]:
    """(index, start) pairs for the optimal chain over mask ending in `last`."""
    dp = tables.subsets.dp_right
    overlap = tables.overlap
    lengths = [len(s) for s in instance.strings]
    order = [last]
    cur = last
    while mask != 1 << cur:
        rest = mask ^ (1 << cur)
        prev = min(
            p
            for p in range(instance.n)
            if rest & (1 << p)
            and dp[rest][p] + lengths[cur] - overlap.get(p, cur) == dp[mask][cur]
        )
        order.append(prev)
        mask = rest
        cur = prev
    order.reverse()
    placed = []
    at = 0
    for pos, idx in enumerate(order):
        if pos:
            at = placed[-1][1] + lengths[order[pos - 1]] - overlap.get(order[pos - 1], idx)
        placed.append((idx, at))
    return placed


def _chain_left(instance, tables, mask: int, first: int) -> list[tuple[int, int]]:
    """(index, start) pairs for the optimal chain over mask starting in `first`."""
    dp = tables.subsets.dp_left
    overlap = tables.overlap
    lengths = [len(s) for s in instance.strings]
    placed = [(first, 0)]
    cur = first
    while mask != 1 << cur:
        rest = mask ^ (1 << cur)
        nxt = min(
            p
            for p in range(instance.n)
            if rest & (1 << p)
            and dp[rest][p] + lengths[cur] - overlap.get(cur, p) == dp[mask][cur]
        )
        placed.append((nxt, placed[-1][1] + lengths[cur] - overlap.get(cur, nxt)))
        mask = rest
        cur = nxt
    return placed


def _assemble(instance, tables, best, baseline_j) -> tuple[str, list[int]]:
    """Lay every string at its offset and render the witness characters."""
    length, kind, m, l, r, interior_mask, sub = best
    n = instance.n
    strings = instance.strings
    lengths = [len(s) for s in strings]
    full = (1 << n) - 1
    rest_mask = full ^ (1 << m) if kind != _BASELINE else 0
    interiors = _bits(interior_mask, n) if interior_mask > 0 else []

    def rescan(anchor_l, anchor_r):
        found = _scan_window(
            instance, tables.mismatch, m, anchor_l, anchor_r, interiors, length + 1, Counters()
        )
        assert found is not None, "winning window vanished on reconstruction"
        return found

    if kind == _BASELINE:
        placed = _chain_right(instance, tables, full, baseline_j)
    elif kind in (_EDGE_LEFT, _EDGE_LEFT_ABS):
        chain_mask = rest_mask ^ interior_mask
        placed = _chain_right(instance, tables, chain_mask, l)
        chain_len = tables.subsets.dp_right[chain_mask][l]
        window_start = chain_len - lengths[l]
        if kind == _EDGE_LEFT:
            core = tables.cores.pair_left[l, m]
            m_start, inner = core.m_start, {}
        else:
            _, m_start, inner = rescan(l, -1)
        placed.append((m, window_start + m_start))
        placed.extend((e, window_start + m_start + off) for e, off in sorted(inner.items()))
    elif kind in (_EDGE_RIGHT, _EDGE_RIGHT_ABS):
        chain_mask = rest_mask ^ interior_mask
        if kind == _EDGE_RIGHT:
            core = tables.cores.pair_right[m, r]
            window_len, m_start, inner = core.length, core.m_start, {}
        else:
            window_len, m_start, inner = rescan(-1, r)
        placed = [(m, m_start)]
        placed.extend((e, m_start + off) for e, off in sorted(inner.items()))
        shift = window_len - lengths[r]
        placed.extend((idx, shift + at) for idx, at in _chain_left(instance, tables, chain_mask, r))
    elif kind in (_TRIPLE, _TRIPLE_ABS):
        outside = rest_mask ^ (1 << l) ^ (1 << r) ^ interior_mask
        if kind == _TRIPLE:
            core = tables.cores.triple[l, m, r]
            window_len, m_start, inner = core.length, core.m_start, {}
        else:
            window_len, m_start, inner = rescan(l, r)
        left_mask = sub | (1 << l)
        right_mask = (outside ^ sub) | (1 << r)
        placed = _chain_right(instance, tables, left_mask, l)
        window_start = tables.subsets.dp_right[left_mask][l] - lengths[l]
        placed.append((m, window_start + m_start))
        placed.extend((e, window_start + m_start + off) for e, off in sorted(inner.items()))
        shift = window_start + window_len - lengths[r]
        placed.extend((idx, shift + at) for idx, at in _chain_left(instance, tables, right_mask, r))
    else:  # _ENCLOSED
        _, m_start, inner = rescan(-1, -1)
        placed = [(m, 0)]
        placed.extend((e, off) for e, off in sorted(inner.items()))

    offsets = [0] * n
    for idx, at in placed:
        offsets[idx] = at

    mistake_index = m if kind != _BASELINE else 0
    chars: list[str | None] = [None] * length
    for idx, at in placed:
        if idx == mistake_index and kind != _BASELINE:
            continue
        for t, ch in enumerate(strings[idx]):
            chars[at + t] = ch
    # positions seen only by the mistake string take its characters; positions
    # seen by nothing take the smallest symbol of the instance's alphabet
    mistake = strings[mistake_index]
    at = offsets[mistake_index]
    for t in range(len(mistake)):
        if chars[at + t] is None:
            chars[at + t] = mistake[t]
    fill = min(min(s) for s in strings)
    witness = "".join(ch if ch is not None else fill for ch in chars)
    return witness, offsets


def verify_solution(instance: Instance, solution: Solution) -> list[str]:
    """Check a witness against the problem contract; empty list means valid."""
    if solution.witness is None:
        raise ValueError("solution has no witness to verify")
    problems = []
    witness = solution.witness
    if len(witness) != solution.length:
        problems.append(
            f"length mismatch: witness has {len(witness)} characters, reported {solution.length}"
        )
    offsets = solution.offsets or []
    if len(offsets) != instance.n:
        problems.append(f"offsets cover {len(offsets)} strings, expected {instance.n}")
        return problems
    for i, s in enumerate(instance.strings):
        at = offsets[i]
        if at < 0 or at + len(s) > len(witness):
            problems.append(f"not a superstring: string {i} does not fit at offset {at}")
            continue
        window = witness[at : at + len(s)]
        if i == solution.mistake_index:
            misses = [at + t for t in range(len(s)) if window[t] != s[t]]
            if len(misses) > instance.k:
                problems.append(
                    f"budget exceeded: string {i} misses {len(misses)} > k={instance.k}"
                )
            if solution.mismatch_positions is not None and misses != solution.mismatch_positions:
                problems.append(
                    f"mismatch positions disagree: recorded {solution.mismatch_positions}, "
                    f"actual {misses}"
                )
        elif window != s:
            problems.append(f"not a superstring: string {i} does not match at offset {at}")
    return problems

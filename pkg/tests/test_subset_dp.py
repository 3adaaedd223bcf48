from hypothesis import given, settings, strategies as st

from superstring import (
    brute_force_scs,
    build_dp_left,
    build_dp_right,
    build_mismatch_table,
    build_overlap_table,
    make_instance,
    max_clean_overlap,
)
from conftest import random_valid_instance, substring_free


def test_overlap_examples():
    inst = make_instance(["ab", "ba", "cd"], 0)
    table = build_overlap_table(inst, build_mismatch_table(inst))
    assert table.get(0, 1) == 1
    assert table.get(0, 2) == 0
    assert table.get(0, 0) == 2  # diagonal convention, never read by the DP


def test_max_clean_overlap_direct():
    assert max_clean_overlap("ab", "ba") == 1
    assert max_clean_overlap("ab", "cd") == 0
    assert max_clean_overlap("abab", "baba") == 3


@given(st.lists(st.text(alphabet="ab", min_size=1, max_size=6), min_size=2, max_size=4))
def test_overlap_strict_bound_on_valid_instances(strings):
    if not substring_free(strings):
        return
    inst = make_instance(strings, 0)
    table = build_overlap_table(inst, build_mismatch_table(inst))
    for w in range(inst.n):
        for v in range(inst.n):
            if w == v:
                continue
            t = table.get(w, v)
            assert 0 <= t < min(len(strings[w]), len(strings[v]))
            # maximality: the tables's overlap matches, nothing longer does
            assert strings[w][len(strings[w]) - t :] == strings[v][:t]
            for longer in range(t + 1, min(len(strings[w]), len(strings[v]))):
                assert strings[w][-longer:] != strings[v][:longer]


def test_dp_examples():
    inst = make_instance(["ab", "bc"], 0)
    overlap = build_overlap_table(inst)
    dp_right = build_dp_right(inst, overlap)
    dp_left = build_dp_left(inst, overlap)
    assert dp_right[0b01][0] == 2  # singleton base case
    assert dp_right[0b10][1] == 2
    assert dp_right[0b11][1] == 3  # "abc" with bc rightmost
    assert dp_right[0b11][0] == 4  # bc before ab, no overlap
    assert dp_left[0b11][0] == 3
    assert dp_left[0b11][1] == 4


def seeded_instances(base, count, **kwargs):
    return [random_valid_instance(base + t, **kwargs) for t in range(count)]


def test_recurrence_holds_everywhere():
    for inst in seeded_instances(4200, 10, n_choices=(2, 3, 4, 5)):
        overlap = build_overlap_table(inst)
        dp_right = build_dp_right(inst, overlap)
        lengths = [len(s) for s in inst.strings]
        for mask in range(1, 1 << inst.n):
            for j in range(inst.n):
                if not mask & (1 << j):
                    assert dp_right[mask][j] is None
                    continue
                if mask == 1 << j:
                    assert dp_right[mask][j] == lengths[j]
                    continue
                rest = mask ^ (1 << j)
                expected = min(
                    dp_right[rest][p] + lengths[j] - overlap.get(p, j)
                    for p in range(inst.n)
                    if rest & (1 << p)
                )
                assert dp_right[mask][j] == expected


def test_extension_upper_bound():
    for inst in seeded_instances(4300, 10, n_choices=(3, 4)):
        overlap = build_overlap_table(inst)
        dp_right = build_dp_right(inst, overlap)
        lengths = [len(s) for s in inst.strings]
        for mask in range(1, 1 << inst.n):
            for j in range(inst.n):
                if mask & (1 << j):
                    continue
                bigger = mask | (1 << j)
                for p in range(inst.n):
                    if mask & (1 << p):
                        assert dp_right[bigger][j] <= dp_right[mask][p] + lengths[j]


def test_reversal_duality():
    for inst in seeded_instances(4400, 15, n_choices=(2, 3, 4, 5)):
        reversed_inst = make_instance([s[::-1] for s in inst.strings], inst.k)
        dp_left = build_dp_left(inst, build_overlap_table(inst))
        dp_right_rev = build_dp_right(reversed_inst, build_overlap_table(reversed_inst))
        assert dp_left == dp_right_rev


def test_full_mask_equals_permutation_oracle():
    for inst in seeded_instances(4500, 15, n_choices=(2, 3, 4, 5, 6)):
        overlap = build_overlap_table(inst)
        dp_right = build_dp_right(inst, overlap)
        full = (1 << inst.n) - 1
        best = min(dp_right[full][j] for j in range(inst.n))
        assert best == brute_force_scs(inst)


@settings(max_examples=30)
@given(st.lists(st.text(alphabet="ab", min_size=1, max_size=5), min_size=2, max_size=4))
def test_dp_bounds(strings):
    if not substring_free(strings):
        return
    inst = make_instance(strings, 0)
    overlap = build_overlap_table(inst)
    dp_right = build_dp_right(inst, overlap)
    lengths = [len(s) for s in strings]
    for mask in range(1, 1 << inst.n):
        members = [i for i in range(inst.n) if mask & (1 << i)]
        for j in members:
            value = dp_right[mask][j]
            assert max(lengths[i] for i in members) <= value <= sum(lengths[i] for i in members)

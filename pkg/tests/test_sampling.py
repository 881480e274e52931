import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import stats

from algoprob.machines import TmClass
from algoprob.sampling import (
    RandomTapeSpec,
    SamplePlan,
    SplitMix64,
    random_tape,
    sample_indices,
    sample_range,
)

TM22 = TmClass(2, 2)
TM32 = TmClass(3, 2)


def test_splitmix_reference_stream():
    # First outputs for seed 0 of the published SplitMix64 reference code.
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_exhaustive_sample():
    got = sample_indices(SamplePlan(TM22, 4096, 1))
    assert [m.index for m in got] == list(range(4096))


def test_deterministic_and_sorted():
    a = sample_indices(SamplePlan(TM32, 5000, 42))
    assert a == sample_indices(SamplePlan(TM32, 5000, 42))
    idx = [m.index for m in a]
    assert idx == sorted(set(idx)) and len(idx) == 5000


def test_overlap_between_seeds():
    a = set(sample_range(2985984, 5000, 1))
    b = set(sample_range(2985984, 5000, 2))
    expected = 5000 * 5000 / 2985984
    assert expected / 5 <= len(a & b) <= expected * 5


@given(st.integers(1, 300), st.integers(0, 2**64 - 1), st.data())
def test_without_replacement(n, seed, data):
    size = data.draw(st.integers(0, n))
    s = sample_range(n, size, seed)
    assert len(s) == len(set(s)) == size
    assert all(0 <= x < n for x in s)


def test_size_limits():
    with pytest.raises(ValueError):
        SamplePlan(TM22, 4097, 0)
    with pytest.raises(ValueError):
        SamplePlan(TM22, 0, 0)


def test_uniformity_smoke():
    rng = SplitMix64(2024)
    n = 2985984
    bins = [0] * 64
    for _ in range(100_000):
        bins[rng.below(n) * 64 // n] += 1
    assert stats.chisquare(bins).pvalue > 1e-6


def test_sample_members_are_uniform():
    # Each value of a small space should be picked about size/n of the time.
    hits = [0] * 20
    for seed in range(4000):
        for x in sample_range(20, 5, seed):
            hits[x] += 1
    assert stats.chisquare(hits).pvalue > 1e-6


def test_random_tape_window_and_determinism():
    t = random_tape(RandomTapeSpec(3, 99, 7))
    assert sorted(t.cells) == list(range(-3, 4))
    assert t[4] == 0 and t[-4] == 0
    assert t == random_tape(RandomTapeSpec(3, 99, 7))


def test_random_tapes_differ_between_machines():
    for i in range(1000):
        a = random_tape(RandomTapeSpec(100, 5, i))
        b = random_tape(RandomTapeSpec(100, 5, i + 1000))
        assert a.cells != b.cells


def test_random_tape_bits_are_fair():
    t = random_tape(RandomTapeSpec(20000, 3, 0))
    ones = sum(t.cells.values())
    assert stats.binomtest(ones, len(t.cells)).pvalue > 1e-6

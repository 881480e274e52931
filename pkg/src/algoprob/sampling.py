"""Seeded sampling of machine spaces and per-machine random input tapes.

All randomness comes from SplitMix64 (Steele, Lea & Flood 2014), written out
here so that streams are identical on every platform and Python version:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)            (all arithmetic mod 2**64)

Bounded draws use rejection on the top of the 64-bit range, so they are
exactly uniform. Samples without replacement use Robert Floyd's algorithm,
which needs ``size`` draws regardless of the space size.

The random tape for machine ``i`` under master seed ``b`` is seeded with
``mix64(b ^ mix64(i))``; bit ``j`` of the window ``[-T, T]`` (left to right)
is the low bit of the ``j``-th generator output.
"""
from __future__ import annotations

from dataclasses import dataclass

from .machines import MachineIndex, Tape, TmClass, tm_space_size

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 finalizer."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)``."""
        if not 0 < n <= 1 << 64:
            raise ValueError(f"bound {n} outside (0, 2**64]")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            x = self.next()
            if x < limit:
                return x % n


def sample_range(n: int, size: int, seed: int) -> list[int]:
    """``size`` distinct integers from ``range(n)``, sorted ascending."""
    if size < 0 or size > n:
        raise ValueError(f"cannot draw {size} distinct values from {n}")
    rng = SplitMix64(seed)
    chosen: set[int] = set()
    for j in range(n - size, n):
        t = rng.below(j + 1)
        chosen.add(j if t in chosen else t)
    return sorted(chosen)


@dataclass(frozen=True)
class SamplePlan:
    tm_class: TmClass
    size: int
    seed: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("sample size must be positive")
        if self.size > tm_space_size(self.tm_class):
            raise ValueError(
                f"sample size {self.size} exceeds the {tm_space_size(self.tm_class)} machines of {self.tm_class}"
            )


def sample_indices(plan: SamplePlan) -> list[MachineIndex]:
    n = tm_space_size(plan.tm_class)
    return [MachineIndex(plan.tm_class, i) for i in sample_range(n, plan.size, plan.seed)]


@dataclass(frozen=True)
class RandomTapeSpec:
    steps: int
    seed_base: int
    machine_index: int

    @property
    def window(self) -> tuple[int, int]:
        return -self.steps, self.steps


def machine_seed(seed_base: int, machine_index: int) -> int:
    return mix64((seed_base & MASK64) ^ mix64(machine_index))


def random_tape(spec: RandomTapeSpec) -> Tape:
    rng = SplitMix64(machine_seed(spec.seed_base, spec.machine_index))
    lo, hi = spec.window
    return Tape(0, {pos: rng.next() & 1 for pos in range(lo, hi + 1)})

"""Small Turing machines: enumeration, decoding and fixed-budget simulation.

A machine of class ``TmClass(states, symbols)`` is a total transition map
``(state, read) -> (next_state, write, move)`` with ``move`` in ``{+1, -1}``.
There is no halting state, so the class has ``(2*s*k) ** (s*k)`` members.

Machine numbering
-----------------
An index is written in base ``2*s*k`` with exactly ``s*k`` digits. The most
significant digit belongs to key ``(1, 0)``, then keys follow in
lexicographic order (state major, read symbol minor). A digit ``v`` decodes
as::

    move         = +1 if v % 2 == 0 else -1
    write        = (v // 2) % k
    next_state   = (v // 2) // k + 1

Simulation starts in state 1 with the head at position 0 and performs exactly
``steps`` transitions. The output is the final tape over every cell the head
occupied at times ``0..steps`` inclusive.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

MAX_STATES = 4
# Rule spaces beyond this are not enumerable in any reasonable sense; refuse
# rather than hand back a number nobody can index into.
MAX_SPACE_SIZE = 2**63 - 1


@dataclass(frozen=True)
class TmClass:
    states: int
    symbols: int = 2

    def __post_init__(self):
        if self.states < 1:
            raise ValueError(f"states must be >= 1, got {self.states}")
        if self.symbols < 2:
            raise ValueError(f"symbols must be >= 2, got {self.symbols}")

    @property
    def keys(self) -> list[tuple[int, int]]:
        return [(q, a) for q in range(1, self.states + 1) for a in range(self.symbols)]

    @property
    def radix(self) -> int:
        return 2 * self.states * self.symbols

    def __str__(self):
        return f"TM({self.states},{self.symbols})"


def tm_space_size(cls: TmClass) -> int:
    """Number of machines in ``cls``: ``(2sk)^(sk)``.

    Raises
    ------
    OverflowError
        If the class exceeds the supported state count or the size does not
        fit a signed 64-bit index.
    """
    if cls.states > MAX_STATES:
        raise OverflowError(f"{cls} has more than {MAX_STATES} states; unsupported")
    n = cls.radix ** (cls.states * cls.symbols)
    if n > MAX_SPACE_SIZE:
        raise OverflowError(f"space size of {cls} ({n}) exceeds a 64-bit index")
    return n


@dataclass(frozen=True)
class MachineIndex:
    tm_class: TmClass
    index: int

    def __post_init__(self):
        if not 0 <= self.index < tm_space_size(self.tm_class):
            raise ValueError(f"index {self.index} out of range for {self.tm_class}")


Action = tuple[int, int, int]  # (next_state, write, move)


@dataclass(frozen=True)
class TransitionTable:
    """A complete transition map, entries ordered as ``tm_class.keys``."""

    tm_class: TmClass
    entries: tuple[Action, ...]

    def __post_init__(self):
        cls = self.tm_class
        if len(self.entries) != cls.states * cls.symbols:
            raise ValueError(
                f"{cls} needs {cls.states * cls.symbols} entries, got {len(self.entries)}"
            )
        for q, w, mv in self.entries:
            if not 1 <= q <= cls.states:
                raise ValueError(f"target state {q} outside 1..{cls.states}")
            if not 0 <= w < cls.symbols:
                raise ValueError(f"write symbol {w} outside alphabet")
            if mv not in (1, -1):
                raise ValueError(f"move must be +1 or -1, got {mv}")

    @classmethod
    def from_mapping(cls, tm_class: TmClass, mapping: Mapping[tuple[int, int], Action]):
        return cls(tm_class, tuple(tuple(mapping[key]) for key in tm_class.keys))

    def __getitem__(self, key: tuple[int, int]) -> Action:
        q, a = key
        if not (1 <= q <= self.tm_class.states and 0 <= a < self.tm_class.symbols):
            raise KeyError(key)
        return self.entries[(q - 1) * self.tm_class.symbols + a]

    def items(self) -> Iterator[tuple[tuple[int, int], Action]]:
        return zip(self.tm_class.keys, self.entries)

    def to_text(self) -> str:
        """Canonical text form, one ``state,read -> state',write,move`` per line."""
        lines = []
        for (q, a), (q2, w, mv) in self.items():
            lines.append(f"{q},{a} -> {q2},{w},{'+1' if mv > 0 else '-1'}")
        return "\n".join(lines)


def decode_machine(m: MachineIndex) -> TransitionTable:
    cls = m.tm_class
    k = cls.symbols
    digits = []
    rest = m.index
    for _ in range(cls.states * k):
        rest, v = divmod(rest, cls.radix)
        digits.append(v)
    digits.reverse()
    entries = []
    for v in digits:
        r = v // 2
        entries.append((r // k + 1, r % k, 1 if v % 2 == 0 else -1))
    return TransitionTable(cls, tuple(entries))


def encode_machine(t: TransitionTable) -> MachineIndex:
    cls = t.tm_class
    k = cls.symbols
    index = 0
    for q, w, mv in t.entries:
        v = 2 * ((q - 1) * k + w) + (0 if mv > 0 else 1)
        index = index * cls.radix + v
    return MachineIndex(cls, index)


def mirror_machine(t: TransitionTable) -> TransitionTable:
    """Same table with every head move negated."""
    return TransitionTable(t.tm_class, tuple((q, w, -mv) for q, w, mv in t.entries))


@dataclass(frozen=True)
class Tape:
    """Two-way infinite tape: a background symbol plus finitely many overrides."""

    background: int = 0
    cells: Mapping[int, int] = field(default_factory=dict)

    def __getitem__(self, pos: int) -> int:
        return self.cells.get(pos, self.background)


BLANK = Tape()


@dataclass(frozen=True)
class SimResult:
    machine: MachineIndex
    steps_run: int
    leftmost_visited: int
    rightmost_visited: int
    output: str


def simulate(t: TransitionTable, tape: Tape = BLANK, steps: int = 0) -> SimResult:
    if steps < 0:
        raise ValueError("steps must be non-negative")
    k = t.tm_class.symbols
    if k > 10:
        raise ValueError("output rendering supports at most 10 symbols")
    # The head never leaves [-steps, steps]; a flat list with offset suffices.
    off = steps
    cells = [tape.background] * (2 * steps + 1)
    for pos, sym in tape.cells.items():
        if -steps <= pos <= steps:
            cells[pos + off] = sym
    flat = t.entries
    state = 1
    head = off
    lo = hi = off
    for _ in range(steps):
        q, w, mv = flat[(state - 1) * k + cells[head]]
        cells[head] = w
        head += mv
        state = q
        if head < lo:
            lo = head
        elif head > hi:
            hi = head
    output = "".join(map(str, cells[lo : hi + 1]))
    return SimResult(encode_machine(t), steps, lo - off, hi - off, output)

"""One-dimensional binary cellular automata grown from a single 1.

``CaClass(left, right)`` reads ``left`` cells to the left of ``p``, the cell
itself and ``right`` cells to the right. Rule numbers follow the Wolfram
convention: the new value for neighborhood ``n`` (read as a base-2 integer,
leftmost cell most significant) is bit ``n`` of the rule number.

A single 1 at position 0 can only influence positions ``[-right*r, left*r]``
after ``r`` steps. Cells outside that light cone are held at background 0;
this matters only for rules that map the all-zero neighborhood to 1 (odd rule
numbers), which would otherwise flip the whole background.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

MAX_WIDTH = 5


@dataclass(frozen=True)
class CaClass:
    left: int
    right: int

    def __post_init__(self):
        if self.left < 0 or self.right < 0:
            raise ValueError("neighbor counts must be non-negative")

    @property
    def width(self) -> int:
        return self.left + self.right + 1

    @property
    def margin(self) -> int:
        # Updating the cone edge reads up to `left` (`right`) cells beyond it.
        return max(1, self.left, self.right)

    def __str__(self):
        return f"CA({self.left},{self.right})"


ECA = CaClass(1, 1)


def ca_space_size(cls: CaClass) -> int:
    if cls.width > MAX_WIDTH:
        raise ValueError(f"{cls} has neighborhood width {cls.width} > {MAX_WIDTH}")
    return 2 ** (2**cls.width)


@dataclass(frozen=True)
class CaRule:
    ca_class: CaClass
    number: int

    def __post_init__(self):
        if not 0 <= self.number < ca_space_size(self.ca_class):
            raise ValueError(f"rule {self.number} out of range for {self.ca_class}")

    def lookup(self, neighborhood: int) -> int:
        return (self.number >> neighborhood) & 1

    @cached_property
    def table(self) -> np.ndarray:
        n = 2**self.ca_class.width
        return np.array([(self.number >> i) & 1 for i in range(n)], dtype=np.uint8)


@dataclass(frozen=True, eq=False)
class SpaceTimeGrid:
    """Evolution rows ``0..steps`` stored on one fixed-width array.

    Column ``j`` is position ``j - origin``; every row covers the final row's
    light cone plus ``rule.ca_class.margin`` background cells on each side.
    """

    rule: CaRule
    steps: int
    cells: np.ndarray
    origin: int

    def cone(self, r: int) -> tuple[int, int]:
        cls = self.rule.ca_class
        return -cls.right * r, cls.left * r

    @property
    def rows(self) -> list[str]:
        return ["".join("01"[v] for v in row) for row in self.cells]

    def to_text(self) -> str:
        return "\n".join(self.rows)


def evolve(rule: CaRule, steps: int) -> SpaceTimeGrid:
    if steps < 0:
        raise ValueError("steps must be non-negative")
    cls = rule.ca_class
    t, c = cls.left, cls.right
    m = cls.margin
    origin = c * steps + m
    width = (t + c) * steps + 1 + 2 * m
    cells = np.zeros((steps + 1, width), dtype=np.uint8)
    cells[0, origin] = 1
    table = rule.table
    w = cls.width
    for r in range(steps):
        prev = cells[r]
        # Light cone of row r+1 in array coordinates.
        a = origin - c * (r + 1)
        b = origin + t * (r + 1)
        code = np.zeros(b - a + 1, dtype=np.intp)
        for j in range(w):
            # Window cell j sits at offset j - t from p.
            lo = a + j - t
            code = (code << 1) | prev[lo : lo + b - a + 1]
        cells[r + 1, a : b + 1] = table[code]
    return SpaceTimeGrid(rule, steps, cells, origin)


def light_cone_rows(grid: SpaceTimeGrid) -> list[str]:
    return ["".join("01"[v] for v in row) for row in light_cone_arrays(grid)]


def light_cone_arrays(grid: SpaceTimeGrid) -> list[np.ndarray]:
    out = []
    for r in range(grid.steps + 1):
        a, b = grid.cone(r)
        out.append(grid.cells[r, grid.origin + a : grid.origin + b + 1])
    return out


def reflect_rule(rule: CaRule) -> CaRule:
    """Rule whose evolution is the mirror image of ``rule``'s.

    Only defined for symmetric neighborhoods; reflecting CA(2,1) would land
    in CA(1,2).
    """
    cls = rule.ca_class
    if cls.left != cls.right:
        raise ValueError(f"{cls} is not mirror-symmetric")
    w = cls.width
    number = 0
    for n in range(2**w):
        rev = int(format(n, f"0{w}b")[::-1], 2)
        number |= rule.lookup(rev) << n
    return CaRule(cls, number)

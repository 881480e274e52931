"""Slow, obviously-correct reference implementations used only by the tests.

Nothing here imports the code under test except plain data types.
"""
from __future__ import annotations

import math
from collections import Counter
from itertools import combinations


def naive_decode(index: int, states: int, symbols: int) -> dict:
    """Digit decoding written straight from the numbering rule."""
    radix = 2 * states * symbols
    keys = [(q, a) for q in range(1, states + 1) for a in range(symbols)]
    digits = []
    for _ in keys:
        digits.insert(0, index % radix)
        index //= radix
    table = {}
    for key, v in zip(keys, digits):
        move = 1 if v % 2 == 0 else -1
        r = v // 2
        table[key] = (r // symbols + 1, r % symbols, move)
    return table


def naive_run(table: dict, steps: int, tape: dict | None = None, background: int = 0) -> str:
    """Dict-tape simulation; visited set tracked explicitly."""
    tape = dict(tape or {})
    state, head = 1, 0
    visited = {0}
    for _ in range(steps):
        sym = tape.get(head, background)
        state2, write, move = table[(state, sym)]
        tape[head] = write
        head += move
        state = state2
        visited.add(head)
    lo, hi = min(visited), max(visited)
    return "".join(str(tape.get(p, background)) for p in range(lo, hi + 1))


def naive_windows(s: str, k: int) -> Counter:
    """Quadratic scan: compare every start position against every word."""
    out = Counter()
    words = [format(i, f"0{k}b") for i in range(2**k)]
    for i in range(len(s)):
        for w in words:
            if s[i : i + k] == w and len(s[i : i + k]) == k:
                out[w] += 1
    return out


def naive_kendall_tau_b(x, y) -> float:
    conc = disc = tie_x = tie_y = 0
    n = len(x)
    for i, j in combinations(range(n), 2):
        dx = x[i] - x[j]
        dy = y[i] - y[j]
        if dx == 0 and dy == 0:
            continue
        if dx == 0:
            tie_x += 1
        elif dy == 0:
            tie_y += 1
        elif (dx > 0) == (dy > 0):
            conc += 1
        else:
            disc += 1
    denom = math.sqrt((conc + disc + tie_x) * (conc + disc + tie_y))
    return (conc - disc) / denom


def naive_inversions(seq) -> int:
    return sum(1 for i, j in combinations(range(len(seq)), 2) if seq[i] > seq[j])


def brute_orbit_count(n: int) -> int:
    seen = set()
    orbits = 0
    for i in range(2**n):
        w = format(i, f"0{n}b")
        if w in seen:
            continue
        orbits += 1
        c = w.translate(str.maketrans("01", "10"))
        seen.update({w, w[::-1], c, c[::-1]})
    return orbits


def naive_ca(rule: int, steps: int, left: int = 1, right: int = 1, pad: int | None = None) -> list[list[int]]:
    """Wide-array evolution with a genuinely evolving background.

    Returns full rows over ``[-pad, pad]``; ``pad`` defaults to comfortably
    more than the light cone so the array edges never matter.
    """
    if pad is None:
        pad = (left + right + 2) * (steps + 2)
    width = 2 * pad + 1
    row = [0] * width
    row[pad] = 1
    rows = [row]
    for _ in range(steps):
        new = []
        for p in range(width):
            n = 0
            for q in range(p - left, p + right + 1):
                n = 2 * n + (row[q] if 0 <= q < width else row[0])
            new.append((rule >> n) & 1)
        row = new
        rows.append(row)
    return rows

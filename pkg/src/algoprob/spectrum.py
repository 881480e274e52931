"""Length-k word counts, empirical probability ``m_e`` and complexity ``K_e``.

Words are 0/1 strings. A :class:`Distribution` is a total table over all
``2**k`` words, stored as a tuple indexed by the word's integer value. The
experimental complexity of a word is ``K_e(s) = -log2 m_e(s)``; words never
produced have no defined ``K_e`` and sort after every produced word.
"""
from __future__ import annotations

import csv
import io
import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence

import numpy as np

MAX_K = 16


class CountMode(str, Enum):
    OCCURRENCE = "occurrence"
    DISTINCT = "distinct"


def check_k(k: int) -> int:
    if not 1 <= k <= MAX_K:
        raise ValueError(f"word length must be in 1..{MAX_K}, got {k}")
    return k


def word(code: int, k: int) -> str:
    return format(code, f"0{k}b")


def all_words(k: int) -> list[str]:
    return [word(i, k) for i in range(2**k)]


def as_bits(output: str | Sequence[int] | np.ndarray) -> np.ndarray:
    if isinstance(output, str):
        return np.frombuffer(output.encode("ascii"), dtype=np.uint8) - ord("0")
    return np.asarray(output, dtype=np.uint8)


def window_codes(bits: np.ndarray, k: int) -> np.ndarray:
    """Integer value of every stride-1 window of length ``k``."""
    n = len(bits) - k + 1
    if n <= 0:
        return np.empty(0, dtype=np.int64)
    codes = np.zeros(n, dtype=np.int64)
    for j in range(k):
        codes = (codes << 1) | bits[j : j + n]
    return codes


def accumulate(counts: np.ndarray, output, k: int, mode: CountMode = CountMode.OCCURRENCE):
    """Add the windows of one output into ``counts`` (length ``2**k``) in place."""
    codes = window_codes(as_bits(output), k)
    if mode is CountMode.DISTINCT:
        codes = np.unique(codes)
    counts += np.bincount(codes, minlength=len(counts))


def count_windows(output, k: int, mode: CountMode = CountMode.OCCURRENCE) -> Counter:
    """Word-count delta contributed by a single output string.

    >>> dict(count_windows("00011", 3))
    {'000': 1, '001': 1, '011': 1}
    """
    check_k(k)
    mode = CountMode(mode)
    codes = window_codes(as_bits(output), k)
    if mode is CountMode.DISTINCT:
        codes = np.unique(codes)
    return Counter(word(int(c), k) for c in codes)


@dataclass(frozen=True)
class Distribution:
    k: int
    counts: tuple[int, ...]
    source_label: str = ""

    def __post_init__(self):
        check_k(self.k)
        if len(self.counts) != 2**self.k:
            raise ValueError(f"need {2**self.k} counts for k={self.k}, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be non-negative")

    @classmethod
    def empty(cls, k: int, source_label: str = "") -> "Distribution":
        return cls(k, (0,) * 2**check_k(k), source_label)

    @classmethod
    def from_array(cls, k: int, counts: np.ndarray, source_label: str = "") -> "Distribution":
        return cls(k, tuple(int(c) for c in counts), source_label)

    @classmethod
    def from_mapping(cls, k: int, counts: Mapping[str, int], source_label: str = "") -> "Distribution":
        table = [0] * 2**check_k(k)
        for w, c in counts.items():
            if len(w) != k:
                raise ValueError(f"word {w!r} does not have length {k}")
            table[int(w, 2)] += c
        return cls(k, tuple(table), source_label)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def count(self, s: str) -> int:
        if len(s) != self.k:
            raise ValueError(f"word {s!r} does not have length {self.k}")
        return self.counts[int(s, 2)]

    def as_dict(self) -> dict[str, int]:
        return {word(i, self.k): c for i, c in enumerate(self.counts)}

    def m_e(self, s: str) -> float:
        total = self.total
        if total == 0:
            raise ValueError("m_e undefined for an empty distribution")
        return self.count(s) / total

    def array(self) -> np.ndarray:
        return np.array(self.counts, dtype=np.int64)


def build_distribution(
    outputs: Iterable, k: int, mode: CountMode = CountMode.OCCURRENCE, source_label: str = ""
) -> Distribution:
    check_k(k)
    mode = CountMode(mode)
    counts = np.zeros(2**k, dtype=np.int64)
    for out in outputs:
        accumulate(counts, out, k, mode)
    return Distribution.from_array(k, counts, source_label)


def merge(a: Distribution, b: Distribution) -> Distribution:
    if a.k != b.k:
        raise ValueError(f"cannot merge word lengths {a.k} and {b.k}")
    label = a.source_label if a.source_label == b.source_label else ""
    return Distribution(a.k, tuple(x + y for x, y in zip(a.counts, b.counts)), label)


def complexity(count: int, total: int) -> float | None:
    if total <= 0:
        raise ValueError("K_e undefined for an empty distribution")
    if count == 0:
        return None
    return math.log2(total / count)


def k_e(d: Distribution, s: str) -> float | None:
    """``-log2 m_e(s)`` in bits, or ``None`` when ``s`` was never produced."""
    return complexity(d.count(s), d.total)


@dataclass(frozen=True)
class RankEntry:
    word: str
    count: int
    m_e: float | None
    K_e: float | None
    rank: int


def rank_counts(counts: Mapping[str, int]) -> list[RankEntry]:
    """Rank by count descending, ties broken by the key's lexicographic order."""
    total = sum(counts.values())
    order = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    out = []
    for r, (w, c) in enumerate(order, start=1):
        m = c / total if total else None
        out.append(RankEntry(w, c, m, complexity(c, total) if total else None, r))
    return out


def rank(d: Distribution) -> list[RankEntry]:
    return rank_counts(d.as_dict())


def ranks_by_word(d: Distribution) -> dict[str, int]:
    return {e.word: e.rank for e in rank(d)}


def fmt_real(x: float | None) -> str:
    return "" if x is None else f"{x:.10g}"


def to_csv(d: Distribution, header_comment: str | None = None) -> str:
    """Distribution table ``word,count,m_e,K_e,rank``, rows in rank order.

    ``header_comment`` (a single line) is written first, prefixed with ``#``.
    """
    buf = io.StringIO()
    if header_comment is not None:
        buf.write(f"# {header_comment}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["word", "count", "m_e", "K_e", "rank"])
    for e in rank(d):
        w.writerow([e.word, e.count, fmt_real(e.m_e), fmt_real(e.K_e), e.rank])
    return buf.getvalue()


def read_csv(text: str, source_label: str = "") -> Distribution:
    rows = csv.DictReader(line for line in io.StringIO(text) if not line.startswith("#"))
    counts = {row["word"]: int(row["count"]) for row in rows}
    if not counts:
        raise ValueError("distribution CSV has no rows")
    k = len(next(iter(counts)))
    if len(counts) != 2**k:
        raise ValueError(f"expected {2**k} rows for k={k}, found {len(counts)}")
    return Distribution.from_mapping(k, counts, source_label)

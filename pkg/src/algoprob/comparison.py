"""Agreement between two word distributions.

Both metrics run over all ``2**k`` words, zero-count words included (they tie
at the bottom). Spearman's rho uses average ranks for ties; Kendall's tau is
the tie-corrected tau-b, computed with Knight's O(n log n) method. Crossings
count word pairs whose strict ranks (see :func:`spectrum.rank`) are ordered
oppositely on the two sides, i.e. the line crossings in a rank-pairing plot.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .spectrum import Distribution, all_words, ranks_by_word
from .symmetry import group_distribution


def _check(a: Distribution, b: Distribution):
    if a.k != b.k:
        raise ValueError(f"word lengths differ: {a.k} vs {b.k}")
    if a.total == 0 or b.total == 0:
        raise ValueError("cannot compare an empty distribution")


def average_ranks(values: Sequence[float]) -> np.ndarray:
    """1-based ranks, ascending, ties sharing the mean of their positions."""
    x = np.asarray(values, dtype=float)
    order = np.argsort(x, kind="mergesort")
    ranks = np.empty(len(x))
    i = 0
    while i < len(x):
        j = i
        while j + 1 < len(x) and x[order[j + 1]] == x[order[i]]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2 + 1
        i = j + 1
    return ranks


def spearman(a: Distribution, b: Distribution) -> float:
    """Rank correlation of the two count tables; NaN if either is constant."""
    _check(a, b)
    ra = average_ranks(a.counts)
    rb = average_ranks(b.counts)
    da = ra - ra.mean()
    db = rb - rb.mean()
    denom = math.sqrt(float(da @ da) * float(db @ db))
    if denom == 0:
        return math.nan
    return float(da @ db) / denom


def count_inversions(seq: Sequence[float]) -> int:
    """Pairs ``i < j`` with ``seq[i] > seq[j]`` (bottom-up merge sort)."""
    items = list(seq)
    n = len(items)
    inv = 0
    width = 1
    buf = items[:]
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, out = lo, mid, lo
            while i < mid and j < hi:
                if items[j] < items[i]:
                    buf[out] = items[j]
                    inv += mid - i
                    j += 1
                else:
                    buf[out] = items[i]
                    i += 1
                out += 1
            buf[out:hi] = items[i:mid] if i < mid else items[j:hi]
        items, buf = buf, items
        width *= 2
    return inv


def _tied_pairs(values) -> int:
    _, counts = np.unique(np.asarray(values), return_counts=True, axis=0)
    return int((counts * (counts - 1) // 2).sum())


def kendall(a: Distribution, b: Distribution) -> float:
    """Kendall's tau-b; NaN if either table is constant."""
    _check(a, b)
    x = list(a.counts)
    y = list(b.counts)
    n = len(x)
    n0 = n * (n - 1) // 2
    order = sorted(range(n), key=lambda i: (x[i], y[i]))
    discordant = count_inversions([y[i] for i in order])
    ties_x = _tied_pairs(x)
    ties_y = _tied_pairs(y)
    ties_xy = _tied_pairs(np.column_stack([x, y]))
    concordant = n0 - ties_x - ties_y + ties_xy - discordant
    denom = math.sqrt((n0 - ties_x) * (n0 - ties_y))
    if denom == 0:
        return math.nan
    return (concordant - discordant) / denom


@dataclass(frozen=True)
class PairingLine:
    word: str
    rank_left: int
    rank_right: int


@dataclass(frozen=True)
class ComparisonReport:
    spearman_rho: float
    kendall_tau: float
    top_group_match: bool
    pairing: list[PairingLine] = field(default_factory=list)
    crossings: int = 0

    def to_json(self) -> str:
        doc = asdict(self)
        for key in ("spearman_rho", "kendall_tau"):
            if math.isnan(doc[key]):
                doc[key] = None
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ComparisonReport":
        doc = json.loads(text)
        return cls(
            spearman_rho=math.nan if doc["spearman_rho"] is None else float(doc["spearman_rho"]),
            kendall_tau=math.nan if doc["kendall_tau"] is None else float(doc["kendall_tau"]),
            top_group_match=bool(doc["top_group_match"]),
            pairing=[PairingLine(**p) for p in doc["pairing"]],
            crossings=int(doc["crossings"]),
        )


def crossings(a: Distribution, b: Distribution) -> int:
    _check(a, b)
    ra, rb = ranks_by_word(a), ranks_by_word(b)
    by_left = sorted(all_words(a.k), key=ra.__getitem__)
    return count_inversions([rb[w] for w in by_left])


def pairing_report(a: Distribution, b: Distribution) -> ComparisonReport:
    _check(a, b)
    ra, rb = ranks_by_word(a), ranks_by_word(b)
    lines = sorted((PairingLine(w, ra[w], rb[w]) for w in all_words(a.k)), key=lambda p: p.rank_left)
    return ComparisonReport(
        spearman_rho=spearman(a, b),
        kendall_tau=kendall(a, b),
        top_group_match=group_distribution(a).top_class() == group_distribution(b).top_class(),
        pairing=lines,
        crossings=count_inversions([p.rank_right for p in lines]),
    )

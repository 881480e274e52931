"""Reversal / complementation symmetry classes of binary words.

The four operations {identity, reversal, complementation, both} form a
Klein four-group acting on words of length n. Every orbit has 1, 2 or 4
members (1 cannot happen for binary words since complementation has no fixed
points). The number of orbits follows from Burnside's lemma:

    (2**n + 2**ceil(n/2) + 0 + [n even] * 2**(n/2)) / 4

reversal fixing the palindromes and reversal-complementation the
anti-palindromes.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .spectrum import Distribution, RankEntry, all_words, check_k, fmt_real, rank_counts

_FLIP = str.maketrans("01", "10")


class SymmetryOp(Enum):
    IDENTITY = "identity"
    REVERSAL = "reversal"
    COMPLEMENTATION = "complementation"
    REVERSAL_COMPLEMENTATION = "reversal_complementation"

    def __call__(self, s: str) -> str:
        return apply(self, s)

    def compose(self, other: "SymmetryOp") -> "SymmetryOp":
        """``self`` after ``other``."""
        rev = (self in _REVERSING) != (other in _REVERSING)
        comp = (self in _COMPLEMENTING) != (other in _COMPLEMENTING)
        return _BY_FLAGS[rev, comp]


_REVERSING = {SymmetryOp.REVERSAL, SymmetryOp.REVERSAL_COMPLEMENTATION}
_COMPLEMENTING = {SymmetryOp.COMPLEMENTATION, SymmetryOp.REVERSAL_COMPLEMENTATION}
_BY_FLAGS = {
    (False, False): SymmetryOp.IDENTITY,
    (True, False): SymmetryOp.REVERSAL,
    (False, True): SymmetryOp.COMPLEMENTATION,
    (True, True): SymmetryOp.REVERSAL_COMPLEMENTATION,
}


def apply(op: SymmetryOp, s: str) -> str:
    if op in _REVERSING:
        s = s[::-1]
    if op in _COMPLEMENTING:
        s = s.translate(_FLIP)
    return s


def orbit(s: str) -> frozenset[str]:
    return frozenset(apply(op, s) for op in SymmetryOp)


def canonical(s: str) -> str:
    return min(orbit(s))


@dataclass(frozen=True)
class SymmetryClass:
    representative: str
    members: tuple[str, ...]

    def __contains__(self, s: str) -> bool:
        return s in self.members


def class_count(n: int) -> int:
    check_k(n)
    fix_rc = 2 ** (n // 2) if n % 2 == 0 else 0
    return (2**n + 2 ** ((n + 1) // 2) + fix_rc) // 4


@lru_cache(maxsize=None)
def classes(n: int) -> tuple[SymmetryClass, ...]:
    check_k(n)
    seen: dict[str, SymmetryClass] = {}
    for w in all_words(n):
        rep = canonical(w)
        if rep not in seen:
            seen[rep] = SymmetryClass(rep, tuple(sorted(orbit(w))))
    return tuple(seen[rep] for rep in sorted(seen))


@dataclass(frozen=True)
class GroupedDistribution:
    """Counts summed over symmetry classes; keys are class representatives."""

    k: int
    counts: dict[str, int]
    source_label: str = ""

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def members(self, rep: str) -> tuple[str, ...]:
        return _class_index(self.k)[rep].members

    def ranked(self) -> list[RankEntry]:
        return rank_counts(self.counts)

    def top_class(self) -> str:
        return self.ranked()[0].word

    def member_spread(self, d: Distribution) -> dict[str, int]:
        """Max minus min member count per class; 0 when a class's words agree."""
        return {
            rep: max(d.count(w) for w in self.members(rep)) - min(d.count(w) for w in self.members(rep))
            for rep in self.counts
        }


@lru_cache(maxsize=None)
def _class_index(n: int) -> dict[str, SymmetryClass]:
    return {c.representative: c for c in classes(n)}


def group_distribution(d: Distribution) -> GroupedDistribution:
    counts = {c.representative: sum(d.count(w) for w in c.members) for c in classes(d.k)}
    return GroupedDistribution(d.k, counts, d.source_label)


def classes_to_csv(g: GroupedDistribution, header_comment: str | None = None) -> str:
    buf = io.StringIO()
    if header_comment is not None:
        buf.write(f"# {header_comment}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["representative", "members", "count", "m_e", "K_e", "rank"])
    for e in g.ranked():
        w.writerow([e.word, "|".join(g.members(e.word)), e.count, fmt_real(e.m_e), fmt_real(e.K_e), e.rank])
    return buf.getvalue()

"""Empirical algorithmic probability of short binary strings.

Runs every (or a seeded sample of) small Turing machine or 1-D cellular
automaton, counts the length-k words in their outputs and reads off
``m_e(s)`` and ``K_e(s) = -log2 m_e(s)``.
"""
from .automata import ECA, CaClass, CaRule, ca_space_size, evolve, light_cone_rows, reflect_rule
from .comparison import ComparisonReport, kendall, pairing_report, spearman
from .ingestion import BitSource, file_distribution, ingest_bits
from .machines import (
    MachineIndex,
    SimResult,
    Tape,
    TmClass,
    TransitionTable,
    decode_machine,
    encode_machine,
    mirror_machine,
    simulate,
    tm_space_size,
)
from .sampling import RandomTapeSpec, SamplePlan, random_tape, sample_indices
from .spectrum import CountMode, Distribution, build_distribution, count_windows, k_e, merge, rank
from .symmetry import SymmetryClass, SymmetryOp, apply, canonical, class_count, classes, group_distribution

__version__ = "0.1.0"

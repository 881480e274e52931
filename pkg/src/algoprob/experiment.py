"""End-to-end experiments: run a machine class, persist its distributions."""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from datetime import datetime, timezone
from pathlib import Path
from typing import Sequence

import numpy as np

from .automata import CaClass, CaRule, ca_space_size, evolve, light_cone_arrays
from .machines import BLANK, MachineIndex, TmClass, decode_machine, simulate, tm_space_size
from .sampling import RandomTapeSpec, random_tape, sample_range
from .spectrum import CountMode, Distribution, accumulate, check_k, merge, read_csv, to_csv
from .symmetry import class_count, classes_to_csv, group_distribution

DEFAULT_CAP = 2**24

# Fields that place or schedule a run without changing its data; kept out of
# the data-file headers so identical experiments give identical bytes.
_PLACEMENT_FIELDS = ("out", "threads")


class ConfigError(ValueError):
    pass


@dataclass
class ExperimentConfig:
    system: str = "tm"
    states: int = 2
    symbols: int = 2
    left: int = 1
    right: int = 1
    steps: int = 100
    k: int = 4
    input_mode: str = "regular"
    counting_mode: str = "occurrence"
    sample: int | None = None
    seed: int = 0
    out: str = "results"
    threads: int | None = None
    exhaustive_cap: int = DEFAULT_CAP

    @classmethod
    def from_dict(cls, doc: dict) -> "ExperimentConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(doc) - known
        if unknown:
            raise ConfigError(f"unknown config fields: {sorted(unknown)}")
        return cls(**doc)

    def validate(self) -> "ExperimentConfig":
        if self.system not in ("tm", "ca"):
            raise ConfigError(f"system must be 'tm' or 'ca', got {self.system!r}")
        if self.input_mode not in ("regular", "random"):
            raise ConfigError(f"input_mode must be 'regular' or 'random', got {self.input_mode!r}")
        try:
            CountMode(self.counting_mode)
            check_k(self.k)
            space = self.space_size()
        except (ValueError, OverflowError) as exc:
            raise ConfigError(str(exc)) from exc
        if self.system == "tm" and self.symbols != 2:
            raise ConfigError("experiments need binary machines (symbols=2) to produce binary words")
        if self.system == "ca" and self.input_mode != "regular":
            raise ConfigError("cellular automata always start from a single 1; use input_mode=regular")
        if self.steps < 0:
            raise ConfigError("steps must be non-negative")
        if self.sample is None:
            if space > self.exhaustive_cap:
                raise ConfigError(
                    f"space of {space} exceeds the exhaustive cap {self.exhaustive_cap}; give a sample size"
                )
        elif not 1 <= self.sample <= space:
            raise ConfigError(f"sample size must be in 1..{space}, got {self.sample}")
        if self.threads is not None and self.threads < 1:
            raise ConfigError("threads must be positive")
        return self

    @property
    def tm_class(self) -> TmClass:
        return TmClass(self.states, self.symbols)

    @property
    def ca_class(self) -> CaClass:
        return CaClass(self.left, self.right)

    def space_size(self) -> int:
        if self.system == "tm":
            return tm_space_size(self.tm_class)
        return ca_space_size(self.ca_class)

    def label(self) -> str:
        cls = self.tm_class if self.system == "tm" else self.ca_class
        how = "exhaustive" if self.sample is None else f"sample={self.sample} seed={self.seed}"
        inp = f" input={self.input_mode}" if self.system == "tm" else ""
        return f"{cls} steps={self.steps}{inp} {how}"

    def data_header(self) -> dict:
        doc = asdict(self)
        for key in _PLACEMENT_FIELDS:
            doc.pop(key)
        return doc


def machine_numbers(cfg: ExperimentConfig) -> list[int]:
    n = cfg.space_size()
    if cfg.sample is None:
        return list(range(n))
    return sample_range(n, cfg.sample, cfg.seed)


def tm_counts(
    tm_class: TmClass,
    indices: Sequence[int],
    steps: int,
    k: int,
    mode: CountMode = CountMode.OCCURRENCE,
    input_mode: str = "regular",
    seed: int = 0,
) -> np.ndarray:
    mode = CountMode(mode)
    counts = np.zeros(2**k, dtype=np.int64)
    for i in indices:
        table = decode_machine(MachineIndex(tm_class, i))
        tape = BLANK if input_mode == "regular" else random_tape(RandomTapeSpec(steps, seed, i))
        accumulate(counts, simulate(table, tape, steps).output, k, mode)
    return counts


def ca_counts(
    ca_class: CaClass, rules: Sequence[int], steps: int, k: int, mode: CountMode = CountMode.OCCURRENCE
) -> np.ndarray:
    """Window counts over every light-cone row of every rule, rows taken separately."""
    mode = CountMode(mode)
    counts = np.zeros(2**k, dtype=np.int64)
    for n in rules:
        for row in light_cone_arrays(evolve(CaRule(ca_class, n), steps)):
            accumulate(counts, row, k, mode)
    return counts


def _shard_counts(cfg: ExperimentConfig, shard: Sequence[int]) -> np.ndarray:
    if cfg.system == "tm":
        return tm_counts(cfg.tm_class, shard, cfg.steps, cfg.k, cfg.counting_mode, cfg.input_mode, cfg.seed)
    return ca_counts(cfg.ca_class, shard, cfg.steps, cfg.k, cfg.counting_mode)


def shards(items: Sequence[int], n: int) -> list[Sequence[int]]:
    size = -(-len(items) // n) if items else 1
    return [items[i : i + size] for i in range(0, len(items), size)]


def compute_distribution(cfg: ExperimentConfig, indices: Sequence[int] | None = None) -> Distribution:
    cfg.validate()
    if indices is None:
        indices = machine_numbers(cfg)
    threads = cfg.threads or os.cpu_count() or 1
    label = cfg.label()
    if threads == 1 or len(indices) < 2 * threads:
        return Distribution.from_array(cfg.k, _shard_counts(cfg, indices), label)
    parts = shards(indices, threads)
    result = Distribution.empty(cfg.k, label)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for counts in pool.map(_shard_counts, [cfg] * len(parts), parts):
            result = merge(result, Distribution.from_array(cfg.k, counts, label))
    return result


@dataclass
class ResultSet:
    directory: Path
    distribution: Distribution
    manifest: dict


DIST_FILE = "distribution.csv"
CLASS_FILE = "classes.csv"
MANIFEST_FILE = "manifest.json"


def write_result_set(out: Path, d: Distribution, header: dict, manifest: dict) -> ResultSet:
    out.mkdir(parents=True, exist_ok=True)
    comment = json.dumps(header, sort_keys=True)
    (out / DIST_FILE).write_text(to_csv(d, comment))
    (out / CLASS_FILE).write_text(classes_to_csv(group_distribution(d), comment))
    (out / MANIFEST_FILE).write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return ResultSet(out, d, manifest)


def run_experiment(cfg: ExperimentConfig) -> ResultSet:
    cfg.validate()
    started = datetime.now(timezone.utc)
    t0 = time.perf_counter()
    indices = machine_numbers(cfg)
    d = compute_distribution(cfg, indices)
    wall = time.perf_counter() - t0
    header = {"config": cfg.data_header(), "source_label": d.source_label}
    manifest = {
        "config": asdict(cfg),
        "source_label": d.source_label,
        "machines": len(indices),
        "space_size": cfg.space_size(),
        "total": d.total,
        "rows": {"distribution": 2**cfg.k, "classes": class_count(cfg.k)},
        "started_at": started.isoformat(),
        "wall_time_s": round(wall, 3),
    }
    return write_result_set(Path(cfg.out), d, header, manifest)


def load_distribution(path: str | Path) -> Distribution:
    """Read a result directory (or a distribution CSV directly)."""
    path = Path(path)
    if path.is_dir():
        path = path / DIST_FILE
    text = path.read_text()
    label = str(path)
    first = text.split("\n", 1)[0]
    if first.startswith("#"):
        try:
            label = json.loads(first[1:]).get("source_label", label)
        except json.JSONDecodeError:
            pass
    return read_csv(text, label)

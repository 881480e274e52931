"""Command-line entry point: ``algoprob {spaces,run,classes,compare,ingest}``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .automata import ECA, CaClass, ca_space_size
from .comparison import pairing_report
from .experiment import (
    ConfigError,
    ExperimentConfig,
    load_distribution,
    run_experiment,
    write_result_set,
)
from .ingestion import BitSource, IngestError, ingest_bits
from .machines import TmClass, tm_space_size
from .plot import pairing_svg
from .spectrum import build_distribution, check_k
from .symmetry import class_count, classes

# Flag name -> ExperimentConfig field.
_RUN_FLAGS = {
    "system": "system",
    "states": "states",
    "symbols": "symbols",
    "left": "left",
    "right": "right",
    "steps": "steps",
    "k": "k",
    "input": "input_mode",
    "mode": "counting_mode",
    "sample": "sample",
    "seed": "seed",
    "threads": "threads",
    "out": "out",
    "cap": "exhaustive_cap",
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="algoprob", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spaces", help="print rule-space sizes")
    sp.add_argument("--states", type=int)
    sp.add_argument("--symbols", type=int, default=2)
    sp.add_argument("--left", type=int)
    sp.add_argument("--right", type=int)

    rp = sub.add_parser("run", help="run an experiment and write its result set")
    rp.add_argument("--config", type=Path, help="JSON file with ExperimentConfig fields; flags override it")
    rp.add_argument("--system", choices=["tm", "ca"])
    rp.add_argument("--states", type=int)
    rp.add_argument("--symbols", type=int)
    rp.add_argument("--left", type=int)
    rp.add_argument("--right", type=int)
    rp.add_argument("--steps", type=int)
    rp.add_argument("--k", type=int)
    rp.add_argument("--input", choices=["regular", "random"])
    rp.add_argument("--mode", choices=["occurrence", "distinct"])
    rp.add_argument("--sample", type=int, metavar="N")
    rp.add_argument("--seed", type=int, metavar="S")
    rp.add_argument("--threads", type=int, metavar="T")
    rp.add_argument("--cap", type=int, help="largest space run exhaustively")
    rp.add_argument("--out", metavar="DIR")

    cp = sub.add_parser("classes", help="print the symmetry classes of length-k words")
    cp.add_argument("--k", type=int, required=True)

    mp = sub.add_parser("compare", help="compare two result sets")
    mp.add_argument("left", type=Path)
    mp.add_argument("right", type=Path)
    mp.add_argument("--out", type=Path, default=Path("comparison"))

    ip = sub.add_parser("ingest", help="word distribution of a binary file ('-' for stdin)")
    ip.add_argument("source")
    ip.add_argument("--k", type=int, default=4)
    ip.add_argument("--out", type=Path, default=Path("ingested"))
    return p


def _spaces(args) -> None:
    if args.states is not None:
        cls = TmClass(args.states, args.symbols)
        print(f"{cls}\t{tm_space_size(cls)}")
    if args.left is not None or args.right is not None:
        cls = CaClass(args.left or 0, args.right or 0)
        print(f"{cls}\t{ca_space_size(cls)}")
    if args.states is None and args.left is None and args.right is None:
        for cls in (TmClass(2, 2), TmClass(3, 2)):
            print(f"{cls}\t{tm_space_size(cls)}")
        for cls in (ECA, CaClass(2, 1)):
            print(f"{cls}\t{ca_space_size(cls)}")


def config_from_args(args) -> ExperimentConfig:
    doc = {}
    if args.config is not None:
        doc.update(json.loads(args.config.read_text()))
    for flag, name in _RUN_FLAGS.items():
        value = getattr(args, flag)
        if value is not None:
            doc[name] = value
    return ExperimentConfig.from_dict(doc).validate()


def _run(args) -> None:
    cfg = config_from_args(args)
    res = run_experiment(cfg)
    print(f"{res.manifest['source_label']}: {res.manifest['machines']} machines, "
          f"total {res.distribution.total} -> {res.directory}")


def _classes(args) -> None:
    k = check_k(args.k)
    print(f"# {class_count(k)} classes of length-{k} words")
    for c in classes(k):
        print(f"{c.representative}\t{'|'.join(c.members)}")


def _compare(args) -> None:
    a = load_distribution(args.left)
    b = load_distribution(args.right)
    if a.k != b.k:
        raise ConfigError(f"word lengths differ: {a.k} vs {b.k}")
    report = pairing_report(a, b)
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "comparison.json").write_text(report.to_json())
    (args.out / "pairing.svg").write_text(pairing_svg(report, a.source_label, b.source_label))
    print(f"rho={report.spearman_rho:.6f} tau={report.kendall_tau:.6f} "
          f"crossings={report.crossings} top_group_match={report.top_group_match}")


def _ingest(args) -> None:
    src = BitSource(args.source)
    bits = ingest_bits(src)
    d = build_distribution([bits], check_k(args.k), source_label=f"file:{src.origin}")
    header = {"config": {"source": args.source, "k": args.k, "counting_mode": "occurrence"},
              "source_label": d.source_label}
    manifest = dict(header, total=d.total, length_bits=len(bits))
    write_result_set(args.out, d, header, manifest)
    print(f"{d.source_label}: total {d.total} -> {args.out}")


COMMANDS = {"spaces": _spaces, "run": _run, "classes": _classes, "compare": _compare, "ingest": _ingest}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        COMMANDS[args.command](args)
    except (ConfigError, IngestError, ValueError, OverflowError) as exc:
        print(f"algoprob: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Turn arbitrary binary files into word distributions.

Bytes expand most-significant bit first and the whole file is read as one
bit string, so windows run across byte boundaries.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path

from .spectrum import CountMode, Distribution, build_distribution

STDIN = "-"


class IngestError(OSError):
    pass


@dataclass(frozen=True)
class BitSource:
    origin: str

    def read_bytes(self) -> bytes:
        try:
            if self.origin == STDIN:
                return sys.stdin.buffer.read()
            return Path(self.origin).read_bytes()
        except OSError as exc:
            raise IngestError(f"cannot read bit source {self.origin!r}: {exc}") from exc


def bytes_to_bits(data: bytes) -> str:
    return "".join(format(b, "08b") for b in data)


def ingest_bits(source: BitSource) -> str:
    return bytes_to_bits(source.read_bytes())


def file_distribution(source: BitSource, k: int) -> Distribution:
    bits = ingest_bits(source)
    return build_distribution([bits], k, CountMode.OCCURRENCE, source_label=f"file:{source.origin}")

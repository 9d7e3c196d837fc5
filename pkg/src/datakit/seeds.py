"""Deterministic random-stream derivation.

Every stochastic stage draws from its own stream, derived by hashing a
(master seed, item index, stage label) triple into a counter-based
generator key. No global RNG state exists anywhere in the toolkit, so
per-item results do not depend on processing order or worker count.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, replace

import numpy as np

_U64 = 2 ** 64


@dataclass(frozen=True)
class SeedSpec:
    """Identifies one random stream: (master_seed, item_index, stage_label)."""

    master_seed: int
    item_index: int = 0
    stage_label: str = ""

    def __post_init__(self):
        if not 0 <= self.master_seed < _U64:
            raise ValueError("master_seed must be an unsigned 64-bit integer")
        if not 0 <= self.item_index < _U64:
            raise ValueError("item_index must be an unsigned 64-bit integer")
        if len(self.stage_label) > 64:
            raise ValueError("stage_label must be a short string (<= 64 chars)")

    def for_stage(self, label: str) -> "SeedSpec":
        """Sub-stream for a named stage, appended to the current label."""
        new = f"{self.stage_label}/{label}" if self.stage_label else label
        return replace(self, stage_label=new)


def derive_stream(seed: SeedSpec) -> np.random.Generator:
    """Pure function from a SeedSpec to an independent random stream.

    The triple is hashed with SHA-256 and the first 128 bits key a Philox
    counter-based generator, so distinct triples give statistically
    independent streams regardless of how many draws each one makes.
    """
    msg = f"{seed.master_seed}\x1f{seed.item_index}\x1f{seed.stage_label}"
    digest = hashlib.sha256(msg.encode("utf-8")).digest()
    key = int.from_bytes(digest[:16], "little")
    return np.random.Generator(np.random.Philox(key=key))

"""Named, splittable random streams.

Every random consumer derives its generator from (seed, *tags) so results
are reproducible and independent of execution order or worker count.
"""
from __future__ import annotations

import zlib

import numpy as np


def _tag_int(tag) -> int:
    if isinstance(tag, (int, np.integer)):
        return int(tag) & 0xFFFFFFFF
    return zlib.crc32(str(tag).encode("utf-8"))


def seedseq(seed: int, *tags) -> np.random.SeedSequence:
    return np.random.SeedSequence([int(seed)] + [_tag_int(t) for t in tags])


def substream(seed: int, *tags) -> np.random.Generator:
    """Generator on the stream named by ``tags`` under the root ``seed``."""
    return np.random.default_rng(seedseq(seed, *tags))


def derive_seed(seed: int, *tags) -> int:
    """A 32-bit child seed, stable under the same naming scheme."""
    return int(seedseq(seed, *tags).generate_state(1)[0])

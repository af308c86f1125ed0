"""Reproducible Gaussian draws from counter-based uniform streams.

Every Monte Carlo replicate owns a stream identified by ``(master, stream)``.
Streams are realized with the Philox counter-based generator keyed on that
pair, and normals are produced by applying the inverse normal CDF to the
uniform output.  The draw at a given (master, stream, index) is therefore a
pure function of those three integers: replicates can be generated in any
order, on any number of workers, and reproduce bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

_U64 = np.uint64
_MASK64 = (1 << 64) - 1

# smallest uniform fed to the inverse CDF; keeps ndtri finite
_U_FLOOR = 2.0 ** -53


@dataclass(frozen=True)
class RngSeed:
    """Master seed plus a stream index (usually the replicate number)."""

    master: int
    stream: int = 0

    def __post_init__(self):
        if not (0 <= self.master <= _MASK64):
            raise ValueError("master seed must fit in 64 bits")
        if not (0 <= self.stream <= _MASK64):
            raise ValueError("stream index must fit in 64 bits")

    def with_stream(self, stream: int) -> "RngSeed":
        return RngSeed(self.master, stream)

    def generator(self) -> np.random.Generator:
        key = np.array([self.master, self.stream], dtype=_U64)
        return np.random.Generator(np.random.Philox(key=key))


def uniforms(seed: RngSeed, shape) -> np.ndarray:
    """Uniform [0,1) draws; position in the stream is the draw index."""
    return seed.generator().random(np.prod(shape, dtype=int)).reshape(shape)


def standard_normals(seed: RngSeed, shape) -> np.ndarray:
    """Standard normal draws via the inverse CDF, row-major draw order."""
    u = uniforms(seed, shape)
    return ndtri(np.maximum(u, _U_FLOOR))

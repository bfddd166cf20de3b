"""Random host graphs and the edge-probability regime derived from a pattern.

Sampling uses the Philox counter-based bit generator (``numpy.random.Philox``,
4x64 with 10 rounds) keyed directly by the seed, with one uniform draw per
vertex pair in lexicographic order.  The stream is specified exactly so the
same seed reproduces the same graph edge-for-edge anywhere.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graphs import Graph
from .patterns import PatternStats


def philox_generator(seed: int) -> np.random.Generator:
    """The package-wide PRNG: Philox4x64-10 keyed by ``seed``."""
    return np.random.Generator(np.random.Philox(key=seed & (2**64 - 1)))


def derive_seed(*parts) -> int:
    """Stable 64-bit seed derived from a tuple of labels and numbers."""
    text = "\x1f".join(repr(p) for p in parts)
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")


def sample_gnp(n: int, p: float, seed: int) -> Graph:
    """Sample a binomial random graph on ``n`` vertices with edge probability ``p``."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if p == 0.0 or not pairs:
        return Graph.empty(n)
    if p == 1.0:
        return Graph.complete(n)
    draws = philox_generator(seed).random(len(pairs))
    keep = draws < p
    return Graph(n, frozenset(e for e, k in zip(pairs, keep) if k))


def threshold_probability(n: int, C: float, pattern: PatternStats) -> float:
    """``min(1, C * n**(-1/max(m2, 1)))`` with the exponent compared exactly."""
    exponent = Fraction(1) / pattern.m2_or_one
    return min(1.0, C * float(n) ** (-float(exponent)))


@dataclass(frozen=True)
class ExperimentConfig:
    """One extraction run's knobs, with the derived edge probability."""

    n: int
    C: float
    epsilon: float
    seed: int
    p: float

    def __post_init__(self) -> None:
        if not 0.0 < self.epsilon < 1.0:
            raise ValueError("epsilon must lie in (0, 1)")
        if self.C <= 0:
            raise ValueError("threshold constant C must be positive")
        if not 0.0 < self.p <= 1.0:
            raise ValueError("derived probability must lie in (0, 1]")

    @classmethod
    def for_pattern(
        cls, n: int, C: float, epsilon: float, seed: int, pattern: PatternStats
    ) -> "ExperimentConfig":
        return cls(n=n, C=C, epsilon=epsilon, seed=seed, p=threshold_probability(n, C, pattern))

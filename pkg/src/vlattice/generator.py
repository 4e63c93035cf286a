"""Seeded random instances for tests and sweeps.

The stream is SplitMix64, fully pinned so that golden values are portable.
Integers in a range ``[lo, hi]`` are drawn as ``lo + (u64 % (hi - lo + 1))``;
every draw consumes exactly one 64-bit output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import Functional
from .pl import PLFunction
from .ratlinalg import Subspace, canonicalize, rank

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(state: int) -> tuple[int, int]:
    """One SplitMix64 step: returns ``(output, next_state)``."""
    state = (state + GOLDEN_GAMMA) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31), state


@dataclass(frozen=True)
class Seed:
    state: int

    def __post_init__(self):
        if not 0 <= self.state <= MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")

    def next(self) -> tuple[int, "Seed"]:
        out, state = splitmix64(self.state)
        return out, Seed(state)


class Stream:
    """Mutable convenience wrapper that threads a :class:`Seed` through draws."""

    def __init__(self, seed):
        self.seed = seed if isinstance(seed, Seed) else Seed(int(seed) & MASK64)

    def u64(self) -> int:
        out, self.seed = self.seed.next()
        return out

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] (modulo reduction)."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.u64() % (hi - lo + 1)

    def choice(self, items):
        return items[self.randint(0, len(items) - 1)]


def default_labels(n: int) -> tuple:
    """Labels "1".."n", matching the CLI's string labels."""
    return tuple(str(i) for i in range(1, n + 1))


def _stream(seed) -> Stream:
    return seed if isinstance(seed, Stream) else Stream(seed)


def random_subspace(seed, n: int, d: int, labels=None) -> Subspace:
    """A d-dimensional subspace of Q^n spanned by vectors with entries in -3..3.

    Vectors are drawn one at a time; a vector dependent on the earlier ones is
    discarded and redrawn.
    """
    if not 0 <= d <= n:
        raise ValueError(f"need 0 <= d <= n, got d={d}, n={n}")
    if n > 8:
        raise ValueError("ambient dimension is limited to 8")
    rs = _stream(seed)
    rows: list[list[Fraction]] = []
    while len(rows) < d:
        v = [Fraction(rs.randint(-3, 3)) for _ in range(n)]
        if rank(rows + [v], n) > len(rows):
            rows.append(v)
    return canonicalize(rows, labels or default_labels(n))


def random_sublattice(seed, n: int, labels=None) -> Subspace:
    """Span of disjoint positive vectors on a random partition of a random label subset.

    Each label draws a value in 0..n: 0 puts it in the kernel, k >= 1 in block k.
    Generators have entries in 1..4 on their block.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rs = _stream(seed)
    block = [rs.randint(0, n) for _ in range(n)]
    gens = []
    for k in range(1, n + 1):
        members = [i for i in range(n) if block[i] == k]
        if members:
            gens.append([Fraction(rs.randint(1, 4)) if i in members else Fraction(0) for i in range(n)])
    return canonicalize(gens, labels or default_labels(n))


def random_functional(seed, n: int, labels=None) -> Functional:
    rs = _stream(seed)
    return Functional(tuple(labels or default_labels(n)), tuple(Fraction(rs.randint(-3, 3)) for _ in range(n)))


def random_vector(seed, n: int, lo: int = -3, hi: int = 3) -> list[Fraction]:
    rs = _stream(seed)
    return [Fraction(rs.randint(lo, hi)) for _ in range(n)]


def random_pl(seed, k: int) -> PLFunction:
    """Values in -2..2 at the k + 2 equally spaced points j/(k+1), then canonicalised."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    rs = _stream(seed)
    xs = [Fraction(j, k + 1) for j in range(k + 2)]
    return PLFunction.make(xs, [Fraction(rs.randint(-2, 2)) for _ in xs])

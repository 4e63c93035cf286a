"""Brute-force sublattice generation, used as ground truth for the engine.

Each round replaces S by the span of S together with b+ (positive part) and
b_i v b_j, b_i ^ b_j for the vectors of the RREF basis of S. The loop stops
after a round that leaves the dimension unchanged.

Why the fixed point is a sublattice: an RREF basis vector b has a 1 at its own
pivot and 0 at the other pivots. b+ agrees with b at all pivots, so b+ in S
forces b+ = b, i.e. b >= 0. Likewise b_i v b_j has 1, 1 at pivots i, j and 0
elsewhere among pivots, so b_i v b_j in S forces b_i v b_j = b_i + b_j, i.e.
b_i ^ b_j = 0. A fixed point is therefore spanned by pairwise disjoint
positive vectors, which span a sublattice. Each changing round raises the
dimension, so there are at most |labels| + 1 rounds.
"""

from __future__ import annotations

from typing import Sequence

from .ratlinalg import Subspace, canonicalize


def _round_candidates(basis: Sequence[Sequence]) -> list[tuple]:
    out = []
    for i, b in enumerate(basis):
        out.append(tuple(max(v, 0) for v in b))
        for c in basis[i + 1:]:
            out.append(tuple(max(u, v) for u, v in zip(b, c)))
            out.append(tuple(min(u, v) for u, v in zip(b, c)))
    return out


def lattice_generated_subspace(generators: Sequence[Sequence], labels=None) -> Subspace:
    """The smallest sublattice of Q^labels containing ``generators``.

    ``labels`` may be omitted when the generators are LatticeVectors.
    """
    generators = list(generators)
    if labels is None:
        if not generators or not hasattr(generators[0], "labels"):
            raise ValueError("labels are required for plain or empty generator lists")
        labels = generators[0].labels
    S = canonicalize(generators, labels)
    for _ in range(len(S.labels) + 1):
        T = canonicalize(list(S.basis) + _round_candidates(S.basis), S.labels)
        if T.dim == S.dim:
            return S
        S = T
    raise AssertionError("oracle did not stabilise")  # unreachable: dim is bounded by |labels|


def oracle_is_sublattice(Y: Subspace) -> bool:
    return lattice_generated_subspace(Y.basis, Y.labels).dim == Y.dim

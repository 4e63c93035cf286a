"""Sublattices of Q^Omega through two-point constraints.

The closed sublattice generated by Y is cut out by the functionals
delta_s - alpha*delta_t (alpha >= 0) vanishing on it, and each such functional
can be read off from the image of Y in Q^{s,t}. Everything else here (clans,
disjoint positive bases, codimension-one factorisations) is derived from that
constraint family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import NotASublatticeError
from .lattice import LatticeVector
from .ratlinalg import (
    Subspace,
    canonicalize,
    full_space,
    intersect,
    pre_annihilator,
    rank,
)

VANISH = "vanish"
PROP = "prop"


@dataclass(frozen=True)
class Constraint:
    """Either f(s) = 0 (``kind="vanish"``) or f(s) = alpha*f(t) with alpha > 0 (``kind="prop"``).

    For proportionality constraints ``s`` comes before ``t`` in label order.
    Use :meth:`vanish` and :meth:`prop`; the latter folds alpha = 0 into a
    vanishing constraint, since then t plays no role.
    """

    kind: str
    s: object
    t: object = None
    alpha: Optional[Fraction] = None

    @classmethod
    def vanish(cls, s) -> "Constraint":
        return cls(VANISH, s)

    @classmethod
    def prop(cls, s, t, alpha) -> "Constraint":
        alpha = Fraction(alpha)
        if alpha < 0:
            raise ValueError("alpha must be nonnegative")
        if alpha == 0:
            return cls.vanish(s)
        if s == t:
            raise ValueError("a proportionality constraint needs two distinct labels")
        return cls(PROP, s, t, alpha)

    def oriented(self, labels) -> "Constraint":
        """Same kernel, with s before t in ``labels``."""
        if self.kind == PROP and labels.index(self.s) > labels.index(self.t):
            return Constraint(PROP, self.t, self.s, 1 / self.alpha)
        return self

    def functional(self, labels) -> tuple:
        """Coefficients of delta_s - alpha*delta_t over ``labels``."""
        c = [Fraction(0)] * len(labels)
        c[labels.index(self.s)] = Fraction(1)
        if self.kind == PROP:
            c[labels.index(self.t)] = -self.alpha
        return tuple(c)

    def sort_key(self, labels) -> tuple:
        if self.kind == VANISH:
            return (0, labels.index(self.s), -1)
        return (1, labels.index(self.s), labels.index(self.t))

    def __str__(self):
        if self.kind == VANISH:
            return f"f({self.s}) = 0"
        return f"f({self.s}) = {self.alpha}*f({self.t})"


@dataclass(frozen=True)
class ConstraintSet:
    """Deduplicated constraints sorted by (kind, s, t); vanishing constraints first."""

    labels: tuple
    constraints: tuple

    @classmethod
    def build(cls, labels, constraints) -> "ConstraintSet":
        labels = tuple(labels)
        unique = {c.oriented(labels) for c in constraints}
        return cls(labels, tuple(sorted(unique, key=lambda c: c.sort_key(labels))))

    def __iter__(self):
        return iter(self.constraints)

    def __len__(self):
        return len(self.constraints)

    def functionals(self) -> list[tuple]:
        return [c.functional(self.labels) for c in self.constraints]

    def subspace(self) -> Subspace:
        """M_⊥, the common kernel of the constraints."""
        return pre_annihilator(self.functionals(), self.labels)


@dataclass(frozen=True)
class ClanDecomposition:
    """kernel (A_0), clans (A_gamma) and one positive generator per clan.

    Each generator is supported exactly on its clan and equals 1 at the first
    label of the clan.
    """

    labels: tuple
    kernel: tuple
    clans: tuple
    generators: tuple

    def span(self) -> Subspace:
        return canonicalize(self.generators, self.labels)


def pair_image(Y: Subspace, s, t) -> Subspace:
    """{(y_s, y_t) : y in Y} as a subspace of Q^{s,t}."""
    if s == t:
        raise ValueError("pair_image needs two distinct labels")
    i, j = Y.index(s), Y.index(t)
    return canonicalize([(r[i], r[j]) for r in Y.basis], (s, t))


def pair_sublattice_closure(V: Subspace) -> Subspace:
    """Smallest sublattice of Q^2 containing V.

    Only a line through a point with coordinates of opposite signs is not
    already a sublattice; its positive part then fills the plane.
    """
    if V.ambient_dim != 2:
        raise ValueError(f"expected a subspace of Q^2, got ambient dimension {V.ambient_dim}")
    if V.dim == 1:
        a, b = V.basis[0]
        if a * b < 0:
            return full_space(V.labels, V.dual)
    return V


def _pair_constraints(W: Subspace) -> list[Constraint]:
    s, t = W.labels
    if W.dim == 0:
        return [Constraint.vanish(s), Constraint.vanish(t)]
    if W.dim == 2:
        return []
    a, b = W.basis[0]
    if a == 0:
        return [Constraint.vanish(s)]
    if b == 0:
        return [Constraint.vanish(t)]
    return [Constraint.prop(s, t, a / b)]


def constraint_set(Y: Subspace) -> ConstraintSet:
    """All constraints of the closed sublattice generated by Y."""
    labels = Y.labels
    found = []
    if len(labels) == 1:
        if Y.is_zero():
            found.append(Constraint.vanish(labels[0]))
    for s, t in combinations(labels, 2):
        found.extend(_pair_constraints(pair_sublattice_closure(pair_image(Y, s, t))))
    return ConstraintSet.build(labels, found)


def sublattice_closure(Y: Subspace) -> Subspace:
    return constraint_set(Y).subspace()


def is_sublattice(Y: Subspace) -> bool:
    return sublattice_closure(Y) == Y


def witness_pair(Y: Subspace, closure: Subspace):
    """A pair of labels showing that Y (with sublattice closure ``closure``) is not a sublattice."""
    # a pair whose image is a line through a point with mixed signs is the clearest witness
    for s, t in combinations(Y.labels, 2):
        V = pair_image(Y, s, t)
        if V.dim == 1 and V.basis[0][0] * V.basis[0][1] < 0:
            return (s, t)
    # otherwise two labels of different clans of the closure: its pair image is all of Q^2
    for s, t in combinations(Y.labels, 2):
        if pair_sublattice_closure(pair_image(closure, s, t)).is_full():
            return (s, t)
    return None


def _require_sublattice(Y: Subspace) -> Subspace:
    closure = sublattice_closure(Y)
    if closure != Y:
        pair = witness_pair(Y, closure)
        raise NotASublatticeError(
            f"not a sublattice (closure has dimension {closure.dim} > {Y.dim}); witness pair {pair}",
            pair=pair,
        )
    return closure


def clan_decomposition(Y: Subspace, require_sublattice: bool = False) -> ClanDecomposition:
    """Kernel, clans and generators of Y (of its closure when Y is not a sublattice).

    Two labels share a clan when the corresponding basis columns are positive
    multiples of each other.
    """
    Z = _require_sublattice(Y) if require_sublattice else sublattice_closure(Y)
    labels = Z.labels
    cols = {l: Z.column(l) for l in labels}
    kernel = tuple(l for l in labels if not any(cols[l]))
    clans: list[list] = []
    for l in labels:
        if l in kernel:
            continue
        for clan in clans:
            if _positively_proportional(cols[clan[0]], cols[l]):
                clan.append(l)
                break
        else:
            clans.append([l])
    generators = []
    for clan in clans:
        outside = [l for l in labels if l not in clan]
        piece = intersect(Z, pre_annihilator([_delta(labels, l) for l in outside], labels))
        (g,) = piece.basis  # one-dimensional by the clan structure
        g0 = g[labels.index(clan[0])]
        generators.append(LatticeVector(labels, tuple(v / g0 for v in g)))
    return ClanDecomposition(labels, kernel, tuple(tuple(c) for c in clans), tuple(generators))


def _delta(labels, label) -> tuple:
    return tuple(Fraction(int(l == label)) for l in labels)


def _positively_proportional(u, v) -> bool:
    k = next(i for i, a in enumerate(u) if a != 0)
    if v[k] == 0:
        return False
    c = v[k] / u[k]
    return c > 0 and all(b == c * a for a, b in zip(u, v))


def disjoint_positive_basis(Y: Subspace) -> list[LatticeVector]:
    return list(clan_decomposition(Y, require_sublattice=True).generators)


def factor_into_codim1(Y: Subspace) -> list[Constraint]:
    """codim(Y) independent constraints whose kernels intersect in Y.

    Picked greedily in constraint-set order, keeping a constraint only when it
    raises the rank of the chosen functionals.
    """
    _require_sublattice(Y)
    cs = constraint_set(Y)
    chosen, rows = [], []
    for c in cs:
        row = c.functional(cs.labels)
        if rank(rows + [row], len(cs.labels)) > len(rows):
            chosen.append(c)
            rows.append(row)
        if len(rows) == Y.codim:
            break
    return chosen


def unit_vector_census(Y: Subspace) -> int:
    """How many standard unit vectors lie in the sublattice Y (its singleton clans)."""
    dec = clan_decomposition(Y, require_sublattice=True)
    return sum(1 for c in dec.clans if len(c) == 1)


def unit_vector_bounds(n: int, m: int) -> tuple[int, int]:
    """Range guaranteed for the census of a codim-m sublattice of Q^n."""
    return max(n - 2 * m, 0), n - m


def kernel_labels(Y: Subspace) -> tuple:
    return tuple(l for l in Y.labels if not any(Y.column(l)))


__all__ = [
    "Constraint",
    "ConstraintSet",
    "ClanDecomposition",
    "pair_image",
    "pair_sublattice_closure",
    "constraint_set",
    "sublattice_closure",
    "is_sublattice",
    "clan_decomposition",
    "disjoint_positive_basis",
    "factor_into_codim1",
    "unit_vector_census",
    "unit_vector_bounds",
    "kernel_labels",
    "witness_pair",
]

"""Ideals of Q^Omega.

Every ideal here is a zero-set ideal J_F = {x : x_i = 0 for i in F}; it is
described by F alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import DegenerateError, UnknownLabelError
from .lattice import FiniteVectorLattice, Functional
from .ratlinalg import Subspace, canonicalize, member
from .sublattice import clan_decomposition, kernel_labels


@dataclass(frozen=True)
class IdealDescriptor:
    labels: tuple
    zero_set: tuple  # in label order

    @property
    def subspace(self) -> Subspace:
        keep = [l for l in self.labels if l not in self.zero_set]
        return canonicalize([_unit(self.labels, l) for l in keep], self.labels)

    @property
    def codim(self) -> int:
        return len(self.zero_set)

    @property
    def dim(self) -> int:
        return len(self.labels) - len(self.zero_set)

    def contains(self, other: "IdealDescriptor") -> bool:
        """Whether ``other`` ⊆ self (i.e. self's zero set is part of other's)."""
        return set(self.zero_set) <= set(other.zero_set)


def _unit(labels, label) -> tuple:
    return tuple(Fraction(int(l == label)) for l in labels)


def zero_set_ideal(labels, F: Iterable) -> IdealDescriptor:
    labels = tuple(labels)
    F = set(F)
    unknown = F - set(labels)
    if unknown:
        raise UnknownLabelError(f"unknown labels {sorted(map(str, unknown))}")
    return IdealDescriptor(labels, tuple(l for l in labels if l in F))


def is_ideal(Y: Subspace) -> Optional[IdealDescriptor]:
    """The zero-set description of Y, or None when Y is not an ideal."""
    F = kernel_labels(Y)
    if Y.dim != Y.ambient_dim - len(F):
        return None
    if not all(member(Y, _unit(Y.labels, l)) for l in Y.labels if l not in F):
        return None
    return IdealDescriptor(Y.labels, F)


def largest_ideal_in(Y: Subspace) -> IdealDescriptor:
    """The largest ideal inside the sublattice Y: the span of its singleton clans.

    Its codimension is at most twice the codimension of Y.
    """
    dec = clan_decomposition(Y, require_sublattice=True)
    singles = {c[0] for c in dec.clans if len(c) == 1}
    return zero_set_ideal(Y.labels, [l for l in Y.labels if l not in singles])


def quotient_by_ideal(J: IdealDescriptor) -> tuple[FiniteVectorLattice, list[tuple]]:
    """X/J_F realised as Q^F, with the restriction map as a |F| x |Omega| matrix."""
    if not J.zero_set:
        raise DegenerateError("quotient by the whole space would have no coordinates")
    Q = [_unit(J.labels, l) for l in J.zero_set]
    return FiniteVectorLattice(J.zero_set), Q


def apply_quotient(Q: list[tuple], x) -> tuple:
    return tuple(sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in Q)


def ideal_chain(J: IdealDescriptor) -> list[IdealDescriptor]:
    """J = J_1 ⊊ ... ⊊ X, dropping the last remaining zero-set label at each step."""
    chain = [J]
    F = list(J.zero_set)
    while F:
        F.pop()
        chain.append(IdealDescriptor(J.labels, tuple(F)))
    return chain


def codim1_ideal_decomposition(J: IdealDescriptor) -> tuple:
    """The labels t with J = ∩ ker delta_t; the family of such kernels is unique."""
    return J.zero_set


def codim1_ideals_containing(J: IdealDescriptor) -> list[IdealDescriptor]:
    """All codimension-one ideals ker delta_t of Q^Omega that contain J, by subspace inclusion."""
    basis = J.subspace.basis
    return [
        IdealDescriptor(J.labels, (l,))
        for i, l in enumerate(J.labels)
        if all(row[i] == 0 for row in basis)
    ]


def null_ideal(phi: Functional) -> IdealDescriptor:
    """N_phi = {x : phi(|x|) = 0} for a positive functional phi."""
    if not phi.is_positive():
        raise ValueError("the null ideal needs a positive functional")
    return IdealDescriptor(phi.labels, phi.support())

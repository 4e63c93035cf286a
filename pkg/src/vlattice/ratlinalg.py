"""Exact linear algebra over Q with canonical (RREF) subspaces.

Every subspace of Q^Omega (or of its dual) is stored by its reduced row
echelon basis, so two subspaces over the same labels are equal exactly when
their basis matrices are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Iterable, Sequence

from .errors import (
    DegenerateError,
    DimensionMismatchError,
    LabelMismatchError,
    UnknownLabelError,
)
from .rational import as_rational


def rref(rows: Iterable[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of ``rows``; zero rows are dropped.

    Returns the nonzero rows and their pivot columns (strictly increasing).
    """
    m = [[as_rational(v) for v in r] for r in rows]
    for r in m:
        if len(r) != ncols:
            raise DimensionMismatchError(f"row of length {len(r)} in a {ncols}-column matrix")
    pivots = []
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[top], m[piv] = m[piv], m[top]
        p = m[top][col]
        if p != 1:
            m[top] = [v / p for v in m[top]]
        for i in range(len(m)):
            if i != top and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[top])]
        pivots.append(col)
        top += 1
        if top == len(m):
            break
    return m[:top], pivots


def rank(rows: Iterable[Sequence], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Iterable[Sequence], ncols: int) -> list[list[Fraction]]:
    """A basis of {x : r.x = 0 for every row r}, one vector per free column."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    out = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, p in zip(red, pivots):
            x[p] = -r[f]
        out.append(x)
    return out


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^labels (``dual=False``) or of its dual space.

    ``basis`` is in reduced row echelon form with no zero rows; build values
    with :func:`canonicalize` rather than by hand.
    """

    labels: tuple
    basis: tuple
    dual: bool = False

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return len(self.labels)

    @property
    def codim(self) -> int:
        return len(self.labels) - len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == len(self.labels)

    def index(self, label) -> int:
        return _label_index(self.labels, label)

    def column(self, label) -> tuple:
        i = self.index(label)
        return tuple(row[i] for row in self.basis)

    def __contains__(self, x) -> bool:
        return member(self, x)

    def __repr__(self):
        kind = "dual" if self.dual else "primal"
        rows = [[str(v) for v in r] for r in self.basis]
        return f"Subspace({kind}, labels={list(self.labels)}, basis={rows})"


def _label_index(labels, label) -> int:
    try:
        return labels.index(label)
    except ValueError:
        raise UnknownLabelError(f"unknown label {label!r}") from None


def _check_labels(labels) -> tuple:
    labels = tuple(labels)
    if not labels:
        raise DegenerateError("the label set must be nonempty")
    if len(set(labels)) != len(labels):
        raise DegenerateError(f"duplicate labels in {list(labels)}")
    return labels


def _same_ambient(Y: Subspace, Z: Subspace) -> None:
    if Y.labels != Z.labels:
        raise LabelMismatchError(f"label mismatch: {list(Y.labels)} vs {list(Z.labels)}")
    if Y.dual != Z.dual:
        raise LabelMismatchError("cannot combine a primal subspace with a dual one")


def canonicalize(spanning: Iterable[Sequence], labels, dual: bool = False) -> Subspace:
    """The canonical Subspace spanned by ``spanning`` (an iterable of vectors)."""
    labels = _check_labels(labels)
    rows, _ = rref(spanning, len(labels))
    return Subspace(labels, tuple(tuple(r) for r in rows), dual)


def zero_space(labels, dual: bool = False) -> Subspace:
    return Subspace(_check_labels(labels), (), dual)


def full_space(labels, dual: bool = False) -> Subspace:
    labels = _check_labels(labels)
    n = len(labels)
    basis = tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))
    return Subspace(labels, basis, dual)


def member(Y: Subspace, x: Sequence) -> bool:
    x = [as_rational(v) for v in x]
    if len(x) != Y.ambient_dim:
        raise DimensionMismatchError(f"vector of length {len(x)} in a {Y.ambient_dim}-dimensional space")
    # reduce x against the RREF rows; x is in Y iff nothing is left
    for row in Y.basis:
        p = next(i for i, v in enumerate(row) if v != 0)
        if x[p] != 0:
            f = x[p]
            x = [a - f * b for a, b in zip(x, row)]
    return not any(x)


def is_subspace_of(Y: Subspace, Z: Subspace) -> bool:
    _same_ambient(Y, Z)
    return all(member(Z, row) for row in Y.basis)


def subspace_sum(Y: Subspace, Z: Subspace) -> Subspace:
    _same_ambient(Y, Z)
    return canonicalize(Y.basis + Z.basis, Y.labels, Y.dual)


def intersect(Y: Subspace, Z: Subspace) -> Subspace:
    """Y ∩ Z from the solutions of a.Y = b.Z (no duality involved)."""
    _same_ambient(Y, Z)
    if Y.is_zero() or Z.is_zero():
        return zero_space(Y.labels, Y.dual)
    dy = Y.dim
    # columns of the coefficient matrix are the rows of Y and of -Z
    cols = list(Y.basis) + [[-v for v in r] for r in Z.basis]
    system = [[c[i] for c in cols] for i in range(Y.ambient_dim)]
    sols = nullspace(system, len(cols))
    vecs = [[dot(s[:dy], [r[i] for r in Y.basis]) for i in range(Y.ambient_dim)] for s in sols]
    return canonicalize(vecs, Y.labels, Y.dual)


def codimension(Y: Subspace) -> int:
    return Y.codim


def annihilator(Y: Subspace) -> Subspace:
    """Y^⊥ in the dual (or, for a dual subspace, its pre-annihilator)."""
    return canonicalize(nullspace(Y.basis, Y.ambient_dim), Y.labels, not Y.dual)


def pre_annihilator(functionals: Iterable[Sequence], labels) -> Subspace:
    """B_⊥: the common kernel of the given functionals (all of Q^labels for an empty B)."""
    labels = _check_labels(labels)
    return canonicalize(nullspace(list(functionals), len(labels)), labels, False)


def in_column_span(matrix: Sequence[Sequence], target: Sequence) -> bool:
    """Whether ``matrix @ y = target`` is solvable (``matrix`` is k x d, possibly d = 0)."""
    k = len(target)
    if k == 0:
        return True
    d = len(matrix[0]) if matrix else 0
    if d == 0:
        return not any(target)
    cols = [[matrix[i][j] for i in range(k)] for j in range(d)]
    return rank(cols, k) == rank(cols + [list(target)], k)


def span_n_perp(F: Subspace, A: Sequence[Sequence], n: int) -> list[Subspace]:
    """Span_n(A) ∩ F^⊥ as the (finite) union of subspaces span(choice) ∩ F^⊥.

    Choices are n-element multisets of A. The union itself is usually not a subspace.
    """
    F_perp = annihilator(F)
    pieces = []
    for choice in combinations_with_replacement(range(len(A)), n):
        S = canonicalize([A[i] for i in choice], F.labels, dual=True)
        pieces.append(intersect(S, F_perp))
    return pieces


def interpolation_equivalence(F: Subspace, A: Sequence[Sequence], n: int, x: Sequence) -> tuple[bool, bool]:
    """Evaluate both sides of the n-point interpolation criterion.

    First: x is killed by every functional of Span_n(A) that vanishes on F.
    Second: for every choice phi_1..phi_n from A some y in F has
    phi_i(y) = phi_i(x) for all i. The two answers always coincide.
    """
    if F.dual:
        raise LabelMismatchError("F must be a primal subspace")
    if n < 1:
        raise ValueError("n must be at least 1")
    x = [as_rational(v) for v in x]
    A = [[as_rational(v) for v in phi] for phi in A]
    for v in [x, *A]:
        if len(v) != F.ambient_dim:
            raise DimensionMismatchError(f"length {len(v)} does not match {F.ambient_dim} labels")
    annihilated = all(
        dot(psi, x) == 0 for piece in span_n_perp(F, A, n) for psi in piece.basis
    )
    interpolable = True
    for choice in product(range(len(A)), repeat=n):
        phis = [A[i] for i in choice]
        image_of_F = [[dot(phi, y) for y in F.basis] for phi in phis]
        if not in_column_span(image_of_F, [dot(phi, x) for phi in phis]):
            interpolable = False
            break
    return annihilated, interpolable

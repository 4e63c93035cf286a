"""Order-theoretic classification of linear functionals on Q^Omega.

On Q^Omega the real-valued lattice homomorphisms are c*delta_t with c >= 0,
and phi+ / phi- are the coordinatewise positive and negative parts, so every
flag below is a statement about signs and supports of the coefficients.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

from .generator import Stream
from .lattice import Functional, LatticeVector
from .ratlinalg import Subspace, full_space, member, pre_annihilator


class DegenerateFunctionalWarning(UserWarning):
    """The zero functional was given where a nonzero one was expected."""


@dataclass(frozen=True)
class FunctionalClassification:
    is_positive: bool
    is_negative: bool
    is_lattice_homomorphism: bool
    is_diff_of_two_homomorphisms: bool
    is_disjointness_preserving: bool
    support_size: int
    homomorphism_parts: Optional[tuple] = None  # (phi+, phi-) when phi is a difference of homomorphisms


def _part(phi: Functional, sign: int) -> Functional:
    return phi._new(sign * a if sign * a > 0 else Fraction(0) for a in phi.coords)


def classify(phi: Functional) -> FunctionalClassification:
    plus, minus = _part(phi, 1), _part(phi, -1)
    support = len(phi.support())
    positive = phi.is_positive()
    diff = len(plus.support()) <= 1 and len(minus.support()) <= 1
    return FunctionalClassification(
        is_positive=positive,
        is_negative=all(a <= 0 for a in phi.coords),
        is_lattice_homomorphism=positive and support <= 1,
        is_diff_of_two_homomorphisms=diff,
        is_disjointness_preserving=support <= 1,
        support_size=support,
        homomorphism_parts=(plus, minus) if diff else None,
    )


def kernel_subspace(phi: Functional) -> Subspace:
    """ker phi; warns (and returns the whole space) for phi = 0."""
    if phi.is_zero():
        warnings.warn("kernel of the zero functional is the whole space", DegenerateFunctionalWarning, stacklevel=2)
        return full_space(phi.labels)
    return pre_annihilator([phi.coords], phi.labels)


@dataclass(frozen=True)
class FullnessViolation:
    """0 <= z <= upper with 0 and upper in ker phi but z outside it.

    ``upper = alpha*x + beta*y`` where x, y are positive unit-type vectors on
    which phi is positive and negative respectively, and z = alpha*x.
    """

    s: object
    t: object
    x: LatticeVector
    y: LatticeVector
    alpha: Fraction
    beta: Fraction
    z: LatticeVector
    upper: LatticeVector

    def verify(self, phi: Functional) -> bool:
        zero = self.z * 0
        return (
            phi(self.upper) == 0
            and phi(zero) == 0
            and zero <= self.z <= self.upper
            and phi(self.z) != 0
            and self.alpha + self.beta == 1
            and self.alpha > 0 < self.beta
        )


def is_full_codim1(phi: Functional) -> tuple[bool, Optional[FullnessViolation]]:
    """ker phi is full iff phi is positive or negative; otherwise return a violation."""
    if phi.is_zero():
        raise ValueError("fullness of a codimension-one kernel needs a nonzero functional")
    cls = classify(phi)
    if cls.is_positive or cls.is_negative:
        return True, None
    labels = phi.labels
    i = next(k for k, a in enumerate(phi.coords) if a > 0)
    j = next(k for k, a in enumerate(phi.coords) if a < 0)
    ps, pt = phi.coords[i], phi.coords[j]
    x = _unit(labels, i)
    y = _unit(labels, j) * (ps / -pt)  # phi(y) = -phi(x)
    # alpha*phi(x) + beta*phi(y) = 0 with alpha + beta = 1
    alpha = phi(y) / (phi(y) - phi(x))
    beta = 1 - alpha
    return False, FullnessViolation(labels[i], labels[j], x, y, alpha, beta, x * alpha, x * alpha + y * beta)


def _unit(labels, k) -> LatticeVector:
    return LatticeVector(labels, tuple(Fraction(int(m == k)) for m in range(len(labels))))


def max_disjoint_nonvanishing(phi: Functional) -> int:
    """Largest pairwise-disjoint family on which phi never vanishes (= size of the support)."""
    return len(phi.support())


def falsify_fullness(Y: Subspace, seed: int = 0, trials: int = 200, coeff_range: int = 2, max_corners: int = 6):
    """Best-effort search for a violation of fullness of Y.

    Draws pairs u, v in Y with small integer coordinates in the basis; when
    u <= v, checks corners of the box [u, v] (a convex box lies in a subspace
    iff its corners do). Returns ``(u, v, z)`` with z in [u, v] outside Y, or
    None when nothing was found. None is not a proof of fullness.
    """
    rng = Stream(seed)
    n = Y.ambient_dim
    if Y.dim == 0:
        return None

    def draw():
        cs = [rng.randint(-coeff_range, coeff_range) for _ in Y.basis]
        return [sum((c * r[k] for c, r in zip(cs, Y.basis)), Fraction(0)) for k in range(n)]

    for _ in range(trials):
        u, v = draw(), draw()
        if not all(a <= b for a, b in zip(u, v)):
            u, v = [min(a, b) for a, b in zip(u, v)], [max(a, b) for a, b in zip(u, v)]
            if not (member(Y, u) and member(Y, v)):
                continue
        free = [k for k in range(n) if u[k] < v[k]][:max_corners]
        for pick in product((0, 1), repeat=len(free)):
            z = list(u)
            for k, p in zip(free, pick):
                if p:
                    z[k] = v[k]
            if not member(Y, z):
                return tuple(u), tuple(v), tuple(z)
    return None

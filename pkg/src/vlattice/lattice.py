"""The finite-dimensional vector lattice Q^Omega.

Vectors and functionals are dense over the (small) label set. Order is
coordinatewise: ``x <= y`` compares every coordinate, so it is a partial order
and ``not x <= y`` does not mean ``y < x``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DegenerateError, LabelMismatchError, UnknownLabelError
from .rational import as_rational
from .ratlinalg import _check_labels


@functools.total_ordering
class _Infinite:
    """The norm of a vector outside the principal ideal; larger than every rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("vlattice.Infinite")

    def __repr__(self):
        return "Infinite"

    def __str__(self):
        return "inf"


Infinite = _Infinite()


class _Dense:
    """Shared storage and arithmetic for vectors and functionals."""

    __slots__ = ()
    labels: tuple
    coords: tuple

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, label) -> Fraction:
        try:
            return self.coords[self.labels.index(label)]
        except ValueError:
            raise UnknownLabelError(f"unknown label {label!r}") from None

    def _other(self, other) -> tuple:
        if not isinstance(other, _Dense):
            return NotImplemented
        if other.labels != self.labels:
            raise LabelMismatchError(f"label mismatch: {list(self.labels)} vs {list(other.labels)}")
        return other.coords

    def _new(self, coords):
        return type(self)(self.labels, tuple(coords))

    def __add__(self, other):
        oc = self._other(other)
        if oc is NotImplemented:
            return oc
        return self._new(a + b for a, b in zip(self.coords, oc))

    def __sub__(self, other):
        oc = self._other(other)
        if oc is NotImplemented:
            return oc
        return self._new(a - b for a, b in zip(self.coords, oc))

    def __neg__(self):
        return self._new(-a for a in self.coords)

    def __mul__(self, c):
        if isinstance(c, _Dense):
            return NotImplemented
        c = as_rational(c)
        return self._new(c * a for a in self.coords)

    __rmul__ = __mul__

    def __le__(self, other):
        oc = self._other(other)
        if oc is NotImplemented:
            return oc
        return all(a <= b for a, b in zip(self.coords, oc))

    def __ge__(self, other):
        oc = self._other(other)
        if oc is NotImplemented:
            return oc
        return all(a >= b for a, b in zip(self.coords, oc))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_positive(self) -> bool:
        """All coordinates >= 0 (zero counts as positive)."""
        return all(a >= 0 for a in self.coords)

    def support(self) -> tuple:
        return tuple(l for l, a in zip(self.labels, self.coords) if a != 0)

    def as_dict(self) -> dict:
        return dict(zip(self.labels, self.coords))

    def __repr__(self):
        body = ", ".join(str(a) for a in self.coords)
        return f"{type(self).__name__}({body})"


@dataclass(frozen=True, repr=False, eq=True)
class LatticeVector(_Dense):
    labels: tuple
    coords: tuple


@dataclass(frozen=True, repr=False, eq=True)
class Functional(_Dense):
    labels: tuple
    coords: tuple

    def __call__(self, x) -> Fraction:
        xc = self._other(x) if isinstance(x, _Dense) else tuple(as_rational(v) for v in x)
        if len(xc) != len(self.coords):
            raise LabelMismatchError("functional and vector have different lengths")
        return sum((a * b for a, b in zip(self.coords, xc)), Fraction(0))


@dataclass(frozen=True)
class FiniteVectorLattice:
    """Q^labels with coordinatewise order; labels are kept in the given order."""

    labels: tuple

    def __init__(self, labels: Iterable):
        object.__setattr__(self, "labels", _check_labels(labels))

    def __len__(self):
        return len(self.labels)

    def index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabelError(f"unknown label {label!r}") from None

    def _coords(self, values) -> tuple:
        if isinstance(values, Mapping):
            unknown = set(values) - set(self.labels)
            if unknown:
                raise UnknownLabelError(f"unknown labels {sorted(map(str, unknown))}")
            return tuple(as_rational(values.get(l, 0)) for l in self.labels)
        coords = tuple(as_rational(v) for v in values)
        if len(coords) != len(self.labels):
            raise LabelMismatchError(f"{len(coords)} values for {len(self.labels)} labels")
        return coords

    def vector(self, values) -> LatticeVector:
        """A vector from a sequence in label order or a sparse ``{label: value}`` mapping."""
        return LatticeVector(self.labels, self._coords(values))

    def functional(self, values) -> Functional:
        return Functional(self.labels, self._coords(values))

    def zero(self) -> LatticeVector:
        return LatticeVector(self.labels, (Fraction(0),) * len(self.labels))

    def one(self) -> LatticeVector:
        return LatticeVector(self.labels, (Fraction(1),) * len(self.labels))

    def unit(self, label) -> LatticeVector:
        i = self.index(label)
        return LatticeVector(self.labels, tuple(Fraction(int(j == i)) for j in range(len(self.labels))))

    def delta(self, label) -> Functional:
        """Point evaluation at ``label``."""
        return Functional(self.labels, self.unit(label).coords)


def _pair(x: _Dense, y: _Dense) -> None:
    if x.labels != y.labels:
        raise LabelMismatchError(f"label mismatch: {list(x.labels)} vs {list(y.labels)}")


def join(x: LatticeVector, y: LatticeVector) -> LatticeVector:
    _pair(x, y)
    return x._new(max(a, b) for a, b in zip(x.coords, y.coords))


def meet(x: LatticeVector, y: LatticeVector) -> LatticeVector:
    _pair(x, y)
    return x._new(min(a, b) for a, b in zip(x.coords, y.coords))


def lattice_abs(x: LatticeVector) -> LatticeVector:
    return x._new(abs(a) for a in x.coords)


def pos_part(x: LatticeVector) -> LatticeVector:
    return x._new(a if a > 0 else Fraction(0) for a in x.coords)


def neg_part(x: LatticeVector) -> LatticeVector:
    return x._new(-a if a < 0 else Fraction(0) for a in x.coords)


def is_disjoint(x: LatticeVector, y: LatticeVector) -> bool:
    _pair(x, y)
    return all(a == 0 or b == 0 for a, b in zip(x.coords, y.coords))


def coordinate_projection(x: LatticeVector, subset: Iterable) -> LatticeVector:
    """Agree with x on ``subset`` and vanish elsewhere."""
    keep = set(subset)
    unknown = keep - set(x.labels)
    if unknown:
        raise UnknownLabelError(f"unknown labels {sorted(map(str, unknown))}")
    return x._new(a if l in keep else Fraction(0) for l, a in zip(x.labels, x.coords))


def e_norm(x: LatticeVector, e: LatticeVector):
    """inf{lam > 0 : |x| <= lam*e}; :data:`Infinite` when x is outside the ideal generated by e."""
    _pair(x, e)
    if not e.is_positive():
        raise ValueError("e must be positive")
    best = Fraction(0)
    for a, w in zip(x.coords, e.coords):
        if w == 0:
            if a != 0:
                return Infinite
        else:
            best = max(best, abs(a) / w)
    return best


def _label_key(label):
    # integer labels (sequence indices) numerically, anything else by its string form
    if isinstance(label, int):
        return (0, label, "")
    return (1, 0, str(label))


def restrict_to_support_union(sparse: Sequence[Mapping]) -> tuple[FiniteVectorLattice, list[LatticeVector]]:
    """Densify finitely supported vectors on the union of their supports.

    Labels of the induced lattice are sorted, so the result does not depend on
    dict ordering. Zero entries do not count as support.
    """
    if not sparse:
        raise DegenerateError("no vectors given")
    cleaned = [{k: as_rational(v) for k, v in s.items() if as_rational(v) != 0} for s in sparse]
    labels = sorted(set().union(*cleaned), key=_label_key)
    if not labels:
        raise DegenerateError("the union of supports is empty")
    X = FiniteVectorLattice(labels)
    return X, [X.vector(s) for s in cleaned]

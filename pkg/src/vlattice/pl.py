"""Exact piecewise-affine functions on [0, 1].

A :class:`PLFunction` is given by its breakpoints (from 0 to 1) and values
there, with linear interpolation in between. The representation is kept
canonical: interior breakpoints that lie on the line through their
neighbours are removed, so equality of values is equality of functions.

Inside this lattice, J = {f : f vanishes on some [0, r], r > 0} is an ideal
of codimension 2 that is not uniformly closed: f0(t) = t is not in J, but
w_n = (f0 - 1/n)+ is in J and ||f0 - w_n||_1 = 1/n.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattice import Infinite
from .rational import as_rational

ZERO, ONE = Fraction(0), Fraction(1)


@dataclass(frozen=True)
class PLFunction:
    breakpoints: tuple
    values: tuple

    @classmethod
    def make(cls, breakpoints: Sequence, values: Sequence) -> "PLFunction":
        xs = [as_rational(b) for b in breakpoints]
        ys = [as_rational(v) for v in values]
        if len(xs) != len(ys) or len(xs) < 2:
            raise ValueError("need at least two breakpoints and one value per breakpoint")
        if xs[0] != 0 or xs[-1] != 1:
            raise ValueError("breakpoints must start at 0 and end at 1")
        if any(a >= b for a, b in zip(xs, xs[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        return cls(*_merge_collinear(xs, ys))

    def __call__(self, t) -> Fraction:
        return pl_eval(self, t)

    def __repr__(self):
        pts = ", ".join(f"({x}, {y})" for x, y in zip(self.breakpoints, self.values))
        return f"PLFunction[{pts}]"


def _merge_collinear(xs, ys):
    out_x, out_y = [xs[0]], [ys[0]]
    for i in range(1, len(xs)):
        if len(out_x) >= 2:
            x0, y0, x1, y1 = out_x[-2], out_y[-2], out_x[-1], out_y[-1]
            if (y1 - y0) * (xs[i] - x1) == (ys[i] - y1) * (x1 - x0):
                out_x.pop()
                out_y.pop()
        out_x.append(xs[i])
        out_y.append(ys[i])
    return tuple(out_x), tuple(out_y)


def constant(c) -> PLFunction:
    c = as_rational(c)
    return PLFunction((ZERO, ONE), (c, c))


def identity() -> PLFunction:
    """f0(t) = t."""
    return PLFunction((ZERO, ONE), (ZERO, ONE))


def pl_eval(f: PLFunction, t) -> Fraction:
    t = as_rational(t)
    if not 0 <= t <= 1:
        raise ValueError(f"t = {t} is outside [0, 1]")
    xs, ys = f.breakpoints, f.values
    i = max(bisect_left(xs, t), 1)
    if xs[i] == t:
        return ys[i]
    x0, x1 = xs[i - 1], xs[i]
    return ys[i - 1] + (ys[i] - ys[i - 1]) * (t - x0) / (x1 - x0)


def _refine(*fs: PLFunction) -> list[Fraction]:
    return sorted(set().union(*(f.breakpoints for f in fs)))


def _with_crossings(xs: list, d) -> list:
    """Add the zeros of the affine pieces of d (sampled at xs) strictly inside each interval."""
    out = [xs[0]]
    for a, b in zip(xs, xs[1:]):
        da, db = d(a), d(b)
        if da * db < 0:
            out.append(a + (b - a) * da / (da - db))
        out.append(b)
    return out


def pl_linear(a, f: PLFunction, b, g: PLFunction) -> PLFunction:
    """a*f + b*g."""
    a, b = as_rational(a), as_rational(b)
    xs = _refine(f, g)
    return PLFunction.make(xs, [a * pl_eval(f, x) + b * pl_eval(g, x) for x in xs])


def _pointwise(f: PLFunction, g: PLFunction, op) -> PLFunction:
    xs = _with_crossings(_refine(f, g), lambda t: pl_eval(f, t) - pl_eval(g, t))
    return PLFunction.make(xs, [op(pl_eval(f, x), pl_eval(g, x)) for x in xs])


def pl_join(f: PLFunction, g: PLFunction) -> PLFunction:
    return _pointwise(f, g, max)


def pl_meet(f: PLFunction, g: PLFunction) -> PLFunction:
    return _pointwise(f, g, min)


def pl_abs(f: PLFunction) -> PLFunction:
    return pl_join(f, pl_linear(-1, f, 0, f))


def pl_pos_part(f: PLFunction) -> PLFunction:
    return pl_join(f, constant(0))


def pl_le(f: PLFunction, g: PLFunction) -> bool:
    """f <= g everywhere (checking the common breakpoints suffices)."""
    return all(pl_eval(f, x) <= pl_eval(g, x) for x in _refine(f, g))


def pl_e_norm(f: PLFunction, e: PLFunction):
    """inf{lam > 0 : |f| <= lam*e}, or :data:`Infinite`.

    After refining by the zeros of f, |f| and e are affine on every interval,
    and the ratio of two affine functions is monotone where the denominator is
    positive, so the supremum sits at a breakpoint. Where e vanishes at a
    breakpoint, f must vanish there too: then the ratio near that point is
    constant and equals its value at the other end of the interval.
    """
    if any(v < 0 for v in e.values):
        raise ValueError("e must be positive")
    xs = _with_crossings(_refine(f, e), lambda t: pl_eval(f, t))
    best = Fraction(0)
    for x in xs:
        fx, ex = abs(pl_eval(f, x)), pl_eval(e, x)
        if ex == 0:
            if fx != 0:
                return Infinite
        else:
            best = max(best, fx / ex)
    return best


def vanishes_near_zero(f: PLFunction) -> bool:
    """Membership in J: f is identically 0 on its first segment [0, b1]."""
    return f.values[0] == 0 and f.values[1] == 0


def vanishes_at_zero(f: PLFunction) -> bool:
    """Membership in the intermediate ideal {f : f(0) = 0}."""
    return f.values[0] == 0


def right_slope_at_zero(f: PLFunction) -> Fraction:
    return (f.values[1] - f.values[0]) / (f.breakpoints[1] - f.breakpoints[0])


def residue_at_zero(f: PLFunction) -> tuple[Fraction, Fraction, PLFunction]:
    """(c, d, g) with f = c*1 + d*f0 + g and g in J."""
    c, d = f.values[0], right_slope_at_zero(f)
    g = pl_linear(1, f, -1, pl_linear(c, constant(1), d, identity()))
    return c, d, g


def counterexample_witness(n: int) -> PLFunction:
    """w_n = (f0 - 1/n)+, an element of J within 1/n of f0 in the 1-norm."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return pl_pos_part(pl_linear(1, identity(), -Fraction(1, n), constant(1)))

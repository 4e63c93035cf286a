"""JSON encoding of package values and the report builders used by the CLI.

Rationals are strings ("-3/7", "2"); labels are strings; key order is left
to ``json.dumps(sort_keys=True)`` in :func:`dumps`.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .functionals import classify, is_full_codim1, kernel_subspace, max_disjoint_nonvanishing
from .ideals import IdealDescriptor, is_ideal, largest_ideal_in, quotient_by_ideal
from .lattice import Infinite
from .pl import (
    PLFunction,
    constant,
    counterexample_witness,
    identity,
    pl_e_norm,
    pl_linear,
    vanishes_at_zero,
    vanishes_near_zero,
)
from .rational import format_rational, parse_rational
from .ratlinalg import Subspace, full_space
from .sublattice import (
    Constraint,
    clan_decomposition,
    constraint_set,
    factor_into_codim1,
    is_sublattice,
    sublattice_closure,
    unit_vector_bounds,
    unit_vector_census,
    witness_pair,
)


class MalformedInput(ValueError):
    """Input that is not shaped like the expected JSON document."""


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def rat(q) -> str:
    if q is Infinite:
        return "inf"
    return format_rational(q)


def label(l) -> str:
    return str(l)


def vector_json(v) -> dict:
    return {label(l): rat(a) for l, a in zip(v.labels, v.coords)}


def matrix_json(rows) -> list:
    return [[rat(a) for a in r] for r in rows]


def subspace_json(Y: Subspace) -> dict:
    return {
        "labels": [label(l) for l in Y.labels],
        "basis": matrix_json(Y.basis),
        "dim": Y.dim,
        "codim": Y.codim,
    }


def constraint_json(c: Constraint) -> dict:
    if c.kind == "vanish":
        return {"kind": "vanish", "s": label(c.s)}
    return {"kind": "prop", "s": label(c.s), "t": label(c.t), "alpha": rat(c.alpha)}


def ideal_json(J: IdealDescriptor) -> dict:
    return {"zero_set": [label(l) for l in J.zero_set]}


def pl_json(f: PLFunction) -> dict:
    return {"breakpoints": [rat(x) for x in f.breakpoints], "values": [rat(y) for y in f.values]}


# -- parsing -----------------------------------------------------------------

def _entry(value) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise MalformedInput(f"matrix entries must be integers or 'p/q' strings, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    try:
        return parse_rational(value)
    except (ValueError, ZeroDivisionError):
        raise MalformedInput(f"malformed rational {value!r}") from None


def _labels(raw) -> list[str]:
    if not isinstance(raw, list) or not all(isinstance(l, str) for l in raw):
        raise MalformedInput('"labels" must be a list of strings')
    return raw


def parse_subspace_input(doc) -> tuple[list[str], list[list[Fraction]]]:
    """``{"labels": [...], "basis": [[...], ...]}`` -> labels and rows (not yet validated for shape)."""
    if not isinstance(doc, dict) or "labels" not in doc or "basis" not in doc:
        raise MalformedInput('expected an object with "labels" and "basis"')
    labels = _labels(doc["labels"])
    basis = doc["basis"]
    if not isinstance(basis, list) or not all(isinstance(r, list) for r in basis):
        raise MalformedInput('"basis" must be a list of rows')
    return labels, [[_entry(v) for v in r] for r in basis]


def parse_functional_input(doc) -> tuple[list[str], list[Fraction]]:
    """``{label: value, ...}`` (labels in document order) or ``{"labels": [...], "coefficients": [...]}``."""
    if not isinstance(doc, dict):
        raise MalformedInput("expected a JSON object")
    if "labels" in doc and "coefficients" in doc:
        coeffs = doc["coefficients"]
        if not isinstance(coeffs, list):
            raise MalformedInput('"coefficients" must be a list')
        return _labels(doc["labels"]), [_entry(v) for v in coeffs]
    return list(doc), [_entry(v) for v in doc.values()]


# -- reports -----------------------------------------------------------------

def analyze_report(Y: Subspace) -> dict:
    """Everything the engine knows about Y; structural fields describe the closure when Y is not a sublattice."""
    closure = sublattice_closure(Y)
    sub = closure == Y
    ideal = is_ideal(Y)
    dec = clan_decomposition(closure, require_sublattice=True)
    J = largest_ideal_in(closure)
    m = closure.codim
    count = unit_vector_census(closure)
    lo, hi = unit_vector_bounds(closure.ambient_dim, m)
    if J.zero_set:
        qlat, qmap = quotient_by_ideal(J)
        quotient = {"labels": [label(l) for l in qlat.labels], "map": matrix_json(qmap)}
    else:
        quotient = None
    return {
        "input": subspace_json(Y),
        "is_sublattice": sub,
        "is_ideal": ideal_json(ideal) if ideal is not None else None,
        "analyzed": "input" if sub else "closure",
        "closure": subspace_json(closure),
        "witness_pair": None if sub else [label(l) for l in witness_pair(Y, closure)],
        "constraint_set": [constraint_json(c) for c in constraint_set(Y)],
        "clan_decomposition": {
            "kernel": [label(l) for l in dec.kernel],
            "clans": [[label(l) for l in c] for c in dec.clans],
            "generators": [vector_json(g) for g in dec.generators],
        },
        "disjoint_positive_basis": [vector_json(g) for g in dec.generators],
        "codim1_factorization": [constraint_json(c) for c in factor_into_codim1(closure)],
        "largest_ideal": {
            **ideal_json(J),
            "codim": J.codim,
            "sublattice_codim": m,
            "bound": 2 * m,
            "within_bound": J.codim <= 2 * m,
        },
        "unit_vector_census": {
            "count": count,
            "lower": lo,
            "upper": hi,
            "within_bounds": lo <= count <= hi,
        },
        "quotient": quotient,
    }


def classify_report(phi) -> dict:
    cls = classify(phi)
    degenerate = phi.is_zero()
    K = full_space(phi.labels) if degenerate else kernel_subspace(phi)
    kernel_sub = is_sublattice(K)
    kernel_ideal = is_ideal(K)
    if degenerate:
        fullness = None
    else:
        full, witness = is_full_codim1(phi)
        fullness = {"full": full, "witness": None}
        if witness is not None:
            fullness["witness"] = {
                "s": label(witness.s),
                "t": label(witness.t),
                "x": vector_json(witness.x),
                "y": vector_json(witness.y),
                "alpha": rat(witness.alpha),
                "beta": rat(witness.beta),
                "z": vector_json(witness.z),
                "upper": vector_json(witness.upper),
                "verified": witness.verify(phi),
            }
    lattice_hom_up_to_sign = cls.is_lattice_homomorphism or classify(-phi).is_lattice_homomorphism
    parts = None
    if cls.homomorphism_parts is not None:
        plus, minus = cls.homomorphism_parts
        parts = {"plus": vector_json(plus), "minus": vector_json(minus)}
    return {
        "functional": vector_json(phi),
        "degenerate": degenerate,
        "classification": {
            "is_positive": cls.is_positive,
            "is_negative": cls.is_negative,
            "is_lattice_homomorphism": cls.is_lattice_homomorphism,
            "is_diff_of_two_homomorphisms": cls.is_diff_of_two_homomorphisms,
            "is_disjointness_preserving": cls.is_disjointness_preserving,
            "support_size": cls.support_size,
            "homomorphism_parts": parts,
        },
        "kernel": subspace_json(K),
        "kernel_is_sublattice": kernel_sub,
        "kernel_ideal": ideal_json(kernel_ideal) if kernel_ideal is not None else None,
        "fullness": fullness,
        "max_disjoint_nonvanishing": max_disjoint_nonvanishing(phi),
        "cross_check": {
            "sublattice_iff_diff_of_homomorphisms": kernel_sub == cls.is_diff_of_two_homomorphisms,
            "ideal_iff_homomorphism_up_to_sign": (kernel_ideal is not None) == (lattice_hom_up_to_sign or degenerate),
            "disjoint_bound": max_disjoint_nonvanishing(phi) <= 2 or not kernel_sub,
        },
    }


def pl_demo_report(n: int) -> dict:
    f0 = identity()
    w = counterexample_witness(n)
    norm = pl_e_norm(pl_linear(1, f0, -1, w), constant(1))
    return {
        "n": n,
        "f0": pl_json(f0),
        "witness": pl_json(w),
        "witness_in_J": vanishes_near_zero(w),
        "witness_in_Y": vanishes_at_zero(w),
        "f0_in_J": vanishes_near_zero(f0),
        "f0_in_Y": vanishes_at_zero(f0),
        "norm_f0_minus_witness": rat(norm),
        "certificate": norm == Fraction(1, n),
    }


__all__ = [
    "MalformedInput",
    "analyze_report",
    "classify_report",
    "pl_demo_report",
    "dumps",
    "parse_subspace_input",
    "parse_functional_input",
]

from __future__ import annotations

import warnings
from itertools import product

import pytest

from vlattice import full_space, is_sublattice
from vlattice.functionals import (
    DegenerateFunctionalWarning,
    classify,
    falsify_fullness,
    is_full_codim1,
    kernel_subspace,
    max_disjoint_nonvanishing,
)
from vlattice.generator import Stream, random_functional, random_sublattice
from vlattice.ideals import is_ideal
from vlattice.lattice import FiniteVectorLattice
from vlattice.ratlinalg import member

from conftest import L2, Q, span


def phi(*coeffs):
    return FiniteVectorLattice(tuple(range(1, len(coeffs) + 1))).functional(coeffs)


def test_classify_examples():
    c = classify(phi(1, 1))
    assert c.is_positive and not c.is_lattice_homomorphism and not c.is_diff_of_two_homomorphisms
    assert c.support_size == 2
    c = classify(phi(1, -2))
    assert c.is_diff_of_two_homomorphisms and not c.is_positive
    plus, minus = c.homomorphism_parts
    assert list(plus.coords) == [1, 0] and list(minus.coords) == [0, 2]
    c = classify(phi(3, 0, 0))
    assert c.is_lattice_homomorphism and c.is_disjointness_preserving
    assert is_ideal(kernel_subspace(phi(3, 0, 0))).zero_set == (1,)


def test_degenerate_cases_count_as_differences():
    for coeffs in [(0, 0), (2, 0), (0, -1)]:
        assert classify(phi(*coeffs)).is_diff_of_two_homomorphisms


def test_kernel_examples():
    assert kernel_subspace(phi(1, -1)) == span((1, 1))
    assert kernel_subspace(phi(0, 1, 0)) == span((1, 0, 0), (0, 0, 1))
    K = kernel_subspace(phi(1, 2, 3))
    assert K.codim == 1
    assert [list(r) for r in K.basis] == [[1, 0, Q("-1/3")], [0, 1, Q("-2/3")]]


def test_kernel_of_zero_warns():
    with pytest.warns(DegenerateFunctionalWarning):
        K = kernel_subspace(phi(0, 0))
    assert K == full_space(L2)


def test_fullness_examples():
    assert is_full_codim1(phi(1, 1)) == (True, None)
    assert is_full_codim1(phi(-2, -3)) == (True, None)
    full, w = is_full_codim1(phi(1, -1))
    assert not full and w.verify(phi(1, -1))
    assert (w.alpha, w.beta) == (Q("1/2"), Q("1/2"))
    assert list(w.z.coords) == [Q("1/2"), 0]
    assert list(w.upper.coords) == [Q("1/2"), Q("1/2")]
    with pytest.raises(ValueError):
        is_full_codim1(phi(0, 0))


def test_max_disjoint_examples():
    assert max_disjoint_nonvanishing(phi(1, -1, 1)) == 3
    assert not is_sublattice(kernel_subspace(phi(1, -1, 1)))
    assert max_disjoint_nonvanishing(phi(1, -2)) == 2
    assert max_disjoint_nonvanishing(phi(0, 0)) == 0


def _check_correspondences(f):
    c = classify(f)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateFunctionalWarning)
        K = kernel_subspace(f)
    assert is_sublattice(K) == c.is_diff_of_two_homomorphisms
    hom_up_to_sign = c.is_lattice_homomorphism or classify(-f).is_lattice_homomorphism
    assert (is_ideal(K) is not None) == (hom_up_to_sign or f.is_zero())
    if max_disjoint_nonvanishing(f) >= 3:
        assert not is_sublattice(K)
    if not f.is_zero():
        full, w = is_full_codim1(f)
        assert full == (c.is_positive or c.is_negative)
        if not full:
            assert w.verify(f)
            assert member(K, w.upper.coords) and not member(K, w.z.coords)


def test_correspondences_exhaustive():
    for n in range(1, 5):
        for coeffs in product(range(-2, 3), repeat=n):
            _check_correspondences(phi(*coeffs))


def test_correspondences_random():
    rs = Stream(1000)
    for _ in range(1000):
        _check_correspondences(random_functional(rs, rs.randint(1, 6)))


def test_falsifier_finds_violation_for_mixed_sign_kernel():
    hit = falsify_fullness(kernel_subspace(phi(1, -1)), seed=1)
    assert hit is not None
    u, v, z = hit
    K = kernel_subspace(phi(1, -1))
    assert member(K, u) and member(K, v) and not member(K, z)
    assert all(a <= b <= c for a, b, c in zip(u, z, v))


def test_falsifier_silent_on_full_subspaces():
    assert falsify_fullness(kernel_subspace(phi(1, 1, 2)), seed=3) is None
    rs = Stream(12)
    for _ in range(30):
        # ideals are full
        Y = random_sublattice(rs, rs.randint(1, 5))
        J = is_ideal(Y)
        if J is not None:
            assert falsify_fullness(Y, seed=rs.u64(), trials=50) is None

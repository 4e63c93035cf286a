from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import pytest

from vlattice import (
    Constraint,
    NotASublatticeError,
    canonicalize,
    clan_decomposition,
    constraint_set,
    disjoint_positive_basis,
    factor_into_codim1,
    full_space,
    intersect,
    is_disjoint,
    is_sublattice,
    lattice_generated_subspace,
    pair_image,
    pair_sublattice_closure,
    pre_annihilator,
    sublattice_closure,
    unit_vector_census,
    zero_space,
)
from vlattice.generator import Stream, random_subspace, random_sublattice, random_vector
from vlattice.lattice import LatticeVector, join
from vlattice.ratlinalg import is_subspace_of, member, subspace_sum
from vlattice.sublattice import unit_vector_bounds

from conftest import L2, L3, L4, Q, rows, span


# -- pair image / pair closure ------------------------------------------------------

def test_pair_image_examples():
    assert pair_image(span((1, 2, 3)), 1, 2) == canonicalize([(1, 2)], (1, 2))
    assert pair_image(full_space(L3), 1, 3).is_full()
    assert pair_image(span((0, 0, 1)), 1, 2).is_zero()


def test_pair_image_rejects_same_label():
    with pytest.raises(ValueError):
        pair_image(span((1, 2, 3)), 2, 2)


def test_pair_closure_examples():
    assert pair_sublattice_closure(span((1, 2))) == span((1, 2))
    assert pair_sublattice_closure(span((1, -1))) == full_space(L2)
    assert pair_sublattice_closure(zero_space(L2)) == zero_space(L2)
    assert pair_sublattice_closure(span((0, 1))) == span((0, 1))


def test_pair_closure_matches_oracle_on_all_small_lines():
    for a in range(-3, 4):
        for b in range(-3, 4):
            V = canonicalize([(a, b)], L2)
            assert pair_sublattice_closure(V) == lattice_generated_subspace(V.basis, L2)


def test_pair_closure_needs_q2():
    with pytest.raises(ValueError):
        pair_sublattice_closure(span((1, 2, 3)))


# -- constraint set -----------------------------------------------------------------

def test_constraint_set_f1_equals_2f0():
    cs = constraint_set(canonicalize([(1, 2)], ("a", "b")))
    assert cs.constraints == (Constraint.prop("a", "b", Q("1/2")),)


def test_constraint_set_full_space_is_empty():
    assert len(constraint_set(full_space(L4))) == 0


def test_constraint_set_line_in_q3():
    cs = constraint_set(span((1, 1, 0)))
    assert cs.constraints == (Constraint.vanish(3), Constraint.prop(1, 2, 1))


def test_constraint_set_single_label():
    assert constraint_set(full_space(("x",))).constraints == ()
    assert constraint_set(zero_space(("x",))).constraints == (Constraint.vanish("x"),)


def test_constraint_normalisation():
    assert Constraint.prop(1, 2, 0) == Constraint.vanish(1)
    assert Constraint.prop(2, 1, 4).oriented(L2) == Constraint.prop(1, 2, Q("1/4"))
    with pytest.raises(ValueError):
        Constraint.prop(1, 2, -1)


def test_constraints_vanish_on_closure_and_cut_it_out():
    rs = Stream(8)
    for _ in range(200):
        n = rs.randint(1, 6)
        Y = random_subspace(rs, n, rs.randint(0, n))
        cs = constraint_set(Y)
        Z = sublattice_closure(Y)
        for c in cs:
            assert all(sum(a * b for a, b in zip(c.functional(Y.labels), z)) == 0 for z in Z.basis)
            if c.kind == "prop":
                assert Y.labels.index(c.s) < Y.labels.index(c.t) and c.alpha > 0
        keys = [c.sort_key(Y.labels) for c in cs]
        assert keys == sorted(keys) and len(set(keys)) == len(keys)


# -- closure ---------------------------------------------------------------------------

def test_closure_examples():
    assert sublattice_closure(span((1, -1))) == full_space(L2)
    Y = span((1, 1, 0), (0, 0, 1))
    assert sublattice_closure(Y) == Y
    assert sublattice_closure(zero_space(L3)) == zero_space(L3)


def test_closure_single_label_is_identity():
    for Y in (full_space(("x",)), zero_space(("x",))):
        assert sublattice_closure(Y) == Y


def test_closure_is_a_closure_operator():
    rs = Stream(21)
    for _ in range(200):
        n = rs.randint(1, 6)
        Z = random_subspace(rs, n, rs.randint(0, n))
        Y = canonicalize(Z.basis[: rs.randint(0, Z.dim)], Z.labels)  # Y ⊆ Z
        cY, cZ = sublattice_closure(Y), sublattice_closure(Z)
        assert is_subspace_of(Y, cY)
        assert sublattice_closure(cY) == cY
        assert is_subspace_of(cY, cZ)


def test_closure_equals_oracle_random():
    rs = Stream(1234)
    for _ in range(300):
        n = rs.randint(1, 6)
        Y = random_subspace(rs, n, rs.randint(0, n))
        assert sublattice_closure(Y) == lattice_generated_subspace(Y.basis, Y.labels)


def test_closure_is_closed_under_joins_of_random_members():
    # independent of both the engine's and the oracle's reasoning
    rs = Stream(4)
    for _ in range(100):
        n = rs.randint(2, 5)
        Z = sublattice_closure(random_subspace(rs, n, rs.randint(1, n)))
        for _ in range(5):
            cs = [random_vector(rs, Z.dim) for _ in range(2)]
            x, y = (
                LatticeVector(Z.labels, tuple(sum((c * r[k] for c, r in zip(cc, Z.basis)), Fraction(0)) for k in range(n)))
                for cc in cs
            )
            assert member(Z, join(x, y))


# -- is_sublattice --------------------------------------------------------------------------

@pytest.mark.parametrize(
    "Y, expected",
    [
        (span((1, 2, 0), (0, 0, 3)), True),
        (span((1, -1)), False),
        (full_space(L3), True),
        (span((1, 1, 0), (0, 1, 1)), False),
    ],
)
def test_is_sublattice(Y, expected):
    assert is_sublattice(Y) is expected


def test_intersection_of_sublattices_is_sublattice():
    rs = Stream(31)
    for _ in range(200):
        n = rs.randint(1, 7)
        Y, Z = random_sublattice(rs, n), random_sublattice(rs, n)
        assert is_sublattice(intersect(Y, Z))


# -- clans --------------------------------------------------------------------------------

def test_clans_two_blocks():
    dec = clan_decomposition(span((1, 2, 0), (0, 0, 3)))
    assert dec.kernel == ()
    assert dec.clans == ((1, 2), (3,))
    assert [list(g) for g in dec.generators] == [[1, 2, 0], [0, 0, 1]]


def test_clans_axis():
    dec = clan_decomposition(span((0, 1)))
    assert dec.kernel == (1,) and dec.clans == ((2,),)
    assert list(dec.generators[0]) == [0, 1]


def test_clans_zero():
    dec = clan_decomposition(zero_space(L2))
    assert dec.kernel == (1, 2) and dec.clans == () and dec.generators == ()


def test_clans_of_non_sublattice_describe_closure():
    dec = clan_decomposition(span((1, -1)))
    assert dec.clans == ((1,), (2,))


def test_require_sublattice_raises_with_witness():
    with pytest.raises(NotASublatticeError) as info:
        clan_decomposition(span((1, -1)), require_sublattice=True)
    assert info.value.pair == (1, 2)
    with pytest.raises(NotASublatticeError) as info:
        clan_decomposition(span((1, 1, 0), (0, 1, 1)), require_sublattice=True)
    s, t = info.value.pair
    assert pair_sublattice_closure(pair_image(span((1, 1, 0), (0, 1, 1)), s, t)).is_full()


def _check_clan_invariants(Y):
    dec = clan_decomposition(Y, require_sublattice=True)
    parts = [set(dec.kernel)] + [set(c) for c in dec.clans]
    assert set().union(*parts) == set(Y.labels)
    assert sum(len(p) for p in parts) == len(Y.labels)
    for g, clan in zip(dec.generators, dec.clans):
        assert g.is_positive() and set(g.support()) == set(clan)
        assert g[clan[0]] == 1
    for a, b in combinations(dec.generators, 2):
        assert is_disjoint(a, b)
    assert dec.span() == Y
    assert len(dec.clans) == Y.dim
    assert Y.codim == len(dec.kernel) + sum(len(c) - 1 for c in dec.clans)


def test_clan_invariants_random_sublattices():
    rs = Stream(77)
    for _ in range(500):
        _check_clan_invariants(random_sublattice(rs, rs.randint(1, 8)))


# -- disjoint positive basis -------------------------------------------------------------------

def test_disjoint_positive_basis_examples():
    assert [list(v) for v in disjoint_positive_basis(span((1, 1, 0), (0, 0, 1)))] == [[1, 1, 0], [0, 0, 1]]
    assert [list(v) for v in disjoint_positive_basis(full_space(L2))] == [[1, 0], [0, 1]]
    assert [list(v) for v in disjoint_positive_basis(span((2, 4)))] == [[1, 2]]


def test_disjoint_positive_basis_needs_sublattice():
    with pytest.raises(NotASublatticeError):
        disjoint_positive_basis(span((1, -1)))


# -- codim-1 factorisation ---------------------------------------------------------------------

def test_factor_single_constraint():
    Y = pre_annihilator([(1, -1, 0)], L3)
    assert factor_into_codim1(Y) == [Constraint.prop(1, 2, 1)]


def test_factor_diagonal_in_q3():
    Y = span((1, 1, 1))
    factors = factor_into_codim1(Y)
    # constraint order is (1,2), (1,3), (2,3); the first two are independent
    assert factors == [Constraint.prop(1, 2, 1), Constraint.prop(1, 3, 1)]
    assert pre_annihilator([c.functional(L3) for c in factors], L3) == Y


def test_factor_full_space():
    assert factor_into_codim1(full_space(L3)) == []


def test_factor_random_sublattices():
    rs = Stream(55)
    for _ in range(300):
        Y = random_sublattice(rs, rs.randint(1, 7))
        factors = factor_into_codim1(Y)
        assert len(factors) == Y.codim
        kernels = [pre_annihilator([c.functional(Y.labels)], Y.labels) for c in factors]
        assert all(is_sublattice(K) and K.codim == 1 for K in kernels)
        meet_all = full_space(Y.labels)
        for K in kernels:
            meet_all = intersect(meet_all, K)
        assert meet_all == Y


# -- unit-vector census --------------------------------------------------------------------------

def test_census_examples():
    Y = span((1, 1, 0, 0), (0, 0, 1, 0))
    assert unit_vector_census(Y) == 1 and unit_vector_bounds(4, Y.codim) == (0, 2)
    assert unit_vector_census(full_space(L3)) == 3
    Y = span((1, 1))
    assert unit_vector_census(Y) == 0 and unit_vector_bounds(2, 1) == (0, 1)


def test_census_counts_unit_vectors_directly():
    rs = Stream(2)
    for _ in range(200):
        n = rs.randint(1, 8)
        Y = random_sublattice(rs, n)
        units = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
        count = sum(member(Y, e) for e in units)
        assert unit_vector_census(Y) == count
        lo, hi = unit_vector_bounds(n, Y.codim)
        assert lo <= count <= hi


# -- disjoint families --------------------------------------------------------------------------

def _disjoint_family_outside(Y, rs, size):
    """Try to build ``size`` disjoint nonzero vectors outside Y on random disjoint blocks."""
    labels = list(Y.labels)
    order = sorted(labels, key=lambda _: rs.u64())
    if size > len(order):
        return None
    cuts = sorted(rs.randint(1, len(order) - 1) for _ in range(size - 1)) if size > 1 else []
    blocks, start = [], 0
    for c in cuts + [len(order)]:
        if c <= start:
            return None
        blocks.append(order[start:c])
        start = c
    family = []
    for block in blocks:
        v = [Fraction(0)] * len(labels)
        for l in block:
            v[labels.index(l)] = Fraction(rs.choice([-2, -1, 1, 2, 3]))
        if member(Y, v):
            return None
        family.append(v)
    return family


def test_random_disjoint_families_respect_2m_bound():
    rs = Stream(606)
    for _ in range(300):
        Y = random_sublattice(rs, rs.randint(1, 6))
        m = Y.codim
        for _ in range(20):
            fam = _disjoint_family_outside(Y, rs, 2 * m + 1)
            assert fam is None

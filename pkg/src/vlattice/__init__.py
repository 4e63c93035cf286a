"""Exact computations with sublattices and ideals of vector lattices.

The finite lattices are Q^Omega over a finite label set; the piecewise-affine
lattice on [0, 1] lives in :mod:`vlattice.pl`.
"""

from .errors import (
    DegenerateError,
    DimensionMismatchError,
    LabelMismatchError,
    LatticeError,
    NotASublatticeError,
    UnknownLabelError,
)
from .functionals import (
    FullnessViolation,
    FunctionalClassification,
    classify,
    falsify_fullness,
    is_full_codim1,
    kernel_subspace,
    max_disjoint_nonvanishing,
)
from .ideals import (
    IdealDescriptor,
    codim1_ideal_decomposition,
    ideal_chain,
    is_ideal,
    largest_ideal_in,
    null_ideal,
    quotient_by_ideal,
    zero_set_ideal,
)
from .lattice import (
    FiniteVectorLattice,
    Functional,
    Infinite,
    LatticeVector,
    coordinate_projection,
    e_norm,
    is_disjoint,
    join,
    lattice_abs,
    meet,
    neg_part,
    pos_part,
    restrict_to_support_union,
)
from .oracle import lattice_generated_subspace, oracle_is_sublattice
from .ratlinalg import (
    Subspace,
    annihilator,
    canonicalize,
    codimension,
    full_space,
    interpolation_equivalence,
    intersect,
    member,
    pre_annihilator,
    subspace_sum,
    zero_space,
)
from .sublattice import (
    ClanDecomposition,
    Constraint,
    ConstraintSet,
    clan_decomposition,
    constraint_set,
    disjoint_positive_basis,
    factor_into_codim1,
    is_sublattice,
    pair_image,
    pair_sublattice_closure,
    sublattice_closure,
    unit_vector_census,
)

__version__ = "0.1.0"

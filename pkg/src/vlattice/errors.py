"""Exception types shared across the package."""


class LatticeError(ValueError):
    """Base class for semantic errors (bad labels, wrong shapes, broken preconditions)."""


class DimensionMismatchError(LatticeError):
    pass


class LabelMismatchError(LatticeError):
    pass


class UnknownLabelError(LatticeError, KeyError):
    def __str__(self):
        return ValueError.__str__(self)


class NotASublatticeError(LatticeError):
    """Raised when an operation needs a sublattice and gets something else.

    ``pair`` is a pair of labels on which the subspace has to be enlarged to
    all of Q^2 by the lattice operations (None when no such pair is known).
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class DegenerateError(LatticeError):
    """Raised for degenerate inputs the package refuses (empty label sets, zero quotients)."""

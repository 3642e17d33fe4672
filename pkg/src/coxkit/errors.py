"""Domain exceptions shared across the package."""


class CoxkitError(Exception):
    """Base class for all errors raised by this package."""


class SingularMatrix(CoxkitError):
    """A square matrix with zero determinant was passed where an inverse is needed."""


class NotUnimodular(CoxkitError):
    """A basis change matrix does not have determinant +-1."""


class DegenerateLattice(CoxkitError):
    """An intersection pairing is singular (or otherwise malformed)."""


class NonIntegralChi(CoxkitError):
    """The Riemann-Roch formula produced a non-integer; the lattice data is inconsistent."""


class NonIntegralSolution(CoxkitError):
    """An exact linear solve has a unique solution, but it is not integral."""


class UnderdeterminedSystem(CoxkitError):
    """A linear system that should pin down a unique class fails to do so."""


class NotEffective(CoxkitError):
    """A divisor class lies outside the effective cone it was required to be in."""


class NoTermination(CoxkitError):
    """An iteration cap was hit; the input data is malformed."""


class UnboundedSlice(CoxkitError):
    """A degree slice polytope is unbounded (0 is in the convex hull of the columns)."""


class NotSurjective(CoxkitError):
    """A degree matrix does not map onto the grading lattice."""


class MultiplierBoundExceeded(CoxkitError):
    """No multiplier up to the configured cap clears the vertex denominators."""


class FixtureError(CoxkitError):
    """A fixture file is malformed or internally inconsistent."""

"""Exact polyhedral, lattice and multigraded-ring computations for Cox
rings of singular cubic surfaces, with machine-checked fixture suites for
the E6 and D4 cases."""

from .cones import (
    Cone,
    Certificate,
    ConeSlicePolytope,
    SeparationWitness,
    intersect,
    lattice_points,
    membership_certificate,
    zero_in_convex_hull,
)
from .errors import (
    CoxkitError,
    DegenerateLattice,
    FixtureError,
    MultiplierBoundExceeded,
    NoTermination,
    NonIntegralChi,
    NonIntegralSolution,
    NotEffective,
    NotSurjective,
    NotUnimodular,
    SingularMatrix,
    UnboundedSlice,
    UnderdeterminedSystem,
)
from .linalg import (
    LatticeVector,
    QMatrix,
    determinant,
    invert,
    kernel_basis,
    lattices_equal,
    rank_of_rows,
    row_hnf,
    smith_normal_form,
)
from .pipeline import (
    FixtureBundle,
    VerificationReport,
    hilbert_sweep,
    load_bundle,
    verify,
    verify_d4,
    verify_e6,
)
from .rings import (
    GradedRing,
    Polynomial,
    degree_of_monomial,
    divides_all,
    hilbert_hypersurface,
    is_homogeneous,
    monomials_of_degree,
    substitute,
)
from .surfaces import (
    IntersectionLattice,
    SurfaceModel,
    anticanonical_solve,
    decompose_fixed_moving,
    euler_characteristic,
    in_nef_monoid,
    nef_cone,
    pair,
    regrade,
)
from .toric import CharacterData, PolarizedModel

__version__ = "0.1.0"

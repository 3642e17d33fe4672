"""Picard lattices of surfaces: intersection pairing, Euler characteristics,
anticanonical classes, nef cones, and fixed/moving decompositions.

The Euler characteristic formula hardcodes chi(O) = 1; every fixture surface
is rational. Nef duality is computed against the intersection pairing, so
the nef cone's facet normals are the gram images of the effective
generators.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .cones import Cone, ConeSlicePolytope, lattice_points
from .errors import (
    DegenerateLattice,
    FixtureError,
    NoTermination,
    NonIntegralChi,
    NonIntegralSolution,
    NotEffective,
    NotUnimodular,
    UnderdeterminedSystem,
)
from .linalg import LatticeVector, QMatrix, determinant, invert, solve_square

__all__ = [
    "IntersectionLattice",
    "SurfaceModel",
    "pair",
    "euler_characteristic",
    "anticanonical_solve",
    "nef_cone",
    "decompose_fixed_moving",
    "regrade",
    "in_nef_monoid",
]


class IntersectionLattice:
    """A based free abelian group with a symmetric nondegenerate pairing."""

    def __init__(
        self,
        basis_labels: Sequence[str],
        gram: QMatrix,
        canonical_class: LatticeVector | None = None,
    ):
        if not gram.is_integer:
            raise DegenerateLattice("intersection pairing must be integral")
        if not gram.is_symmetric:
            bad = next(
                (i, j)
                for i in range(gram.rows)
                for j in range(gram.cols)
                if gram.entry(i, j) != gram.entry(j, i)
            )
            raise DegenerateLattice(f"pairing is not symmetric at {bad}")
        if len(basis_labels) != gram.rows:
            raise DegenerateLattice("label count must match the rank")
        if determinant(gram) == 0:
            raise DegenerateLattice("pairing is singular")
        if canonical_class is not None and len(canonical_class) != gram.rows:
            raise DegenerateLattice("canonical class has wrong length")
        self.basis_labels = tuple(basis_labels)
        self.gram = gram
        self.canonical_class = canonical_class

    @property
    def rank(self) -> int:
        return self.gram.rows

    @property
    def is_unimodular(self) -> bool:
        return abs(determinant(self.gram)) == 1

    def with_canonical_class(self, k: LatticeVector) -> "IntersectionLattice":
        return IntersectionLattice(self.basis_labels, self.gram, k)

    def to_json(self) -> dict:
        out = {
            "schema": 1,
            "basis_labels": list(self.basis_labels),
            "gram": self.gram.to_json(),
        }
        if self.canonical_class is not None:
            out["canonical_class"] = self.canonical_class.to_json()
        return out


def pair(
    lattice: IntersectionLattice,
    d1: LatticeVector | Sequence[int],
    d2: LatticeVector | Sequence[int],
) -> int:
    """Intersection number d1 . d2 in basis coordinates."""
    gd2 = lattice.gram.mul_vector([int(x) for x in d2])
    value = sum(Fraction(int(a)) * b for a, b in zip(d1, gd2))
    assert value.denominator == 1
    return int(value)


def euler_characteristic(
    lattice: IntersectionLattice, d: LatticeVector | Sequence[int]
) -> int:
    """chi(O(d)) = 1 + (d.d - d.K)/2 on a rational surface."""
    if lattice.canonical_class is None:
        raise ValueError("lattice has no canonical class")
    self_int = pair(lattice, d, d)
    dk = pair(lattice, d, lattice.canonical_class)
    num = self_int - dk
    if num % 2 != 0:
        raise NonIntegralChi(
            f"(d.d - d.K) = {num} is odd; lattice and canonical class are inconsistent"
        )
    return 1 + num // 2


def anticanonical_solve(
    lattice: IntersectionLattice,
    curve_conditions: Sequence[tuple[LatticeVector | Sequence[int], int]],
) -> LatticeVector:
    """The unique class K with K . C_i = c_i for the given adjunction data."""
    n = lattice.rank
    if len(curve_conditions) != n:
        raise UnderdeterminedSystem(
            f"need exactly {n} conditions, got {len(curve_conditions)}"
        )
    rows = []
    rhs = []
    for curve, value in curve_conditions:
        rows.append(list(lattice.gram.mul_vector([int(x) for x in curve])))
        rhs.append(int(value))
    m = QMatrix(rows)
    if determinant(m) == 0:
        raise UnderdeterminedSystem("conditions do not determine a unique class")
    sol = solve_square(m, rhs)
    if any(x.denominator != 1 for x in sol):
        raise NonIntegralSolution("solution is not an integral class")
    return LatticeVector(int(x) for x in sol)


class SurfaceModel:
    """A Picard lattice together with named effective generators and the
    negative curves used by the decomposition loop."""

    def __init__(
        self,
        lattice: IntersectionLattice,
        effective_generators: Sequence[tuple[str, LatticeVector]],
        negative_curves: Sequence[str],
        genus: Mapping[str, int] | None = None,
    ):
        self.lattice = lattice
        self.effective_generators = tuple(
            (n, v if isinstance(v, LatticeVector) else LatticeVector(v))
            for n, v in effective_generators
        )
        names = {n for n, _v in self.effective_generators}
        for n in negative_curves:
            if n not in names:
                raise FixtureError(f"negative curve {n!r} is not an effective generator")
        gens = dict(self.effective_generators)
        for n in negative_curves:
            if pair(lattice, gens[n], gens[n]) >= 0:
                raise FixtureError(f"curve {n!r} has nonnegative self-intersection")
        self.negative_curves = tuple(negative_curves)
        self.genus = dict(genus or {n: 0 for n in negative_curves})
        self._effective_cone: Cone | None = None
        self._nef: Cone | None = None

    def generator(self, name: str) -> LatticeVector:
        for n, v in self.effective_generators:
            if n == name:
                return v
        raise KeyError(name)

    def effective_cone(self) -> Cone:
        if self._effective_cone is None:
            self._effective_cone = Cone.from_rays(
                self.lattice.rank, [v.entries for _n, v in self.effective_generators]
            )
        return self._effective_cone

    @property
    def nef_generators(self) -> tuple[LatticeVector, ...]:
        return nef_cone(self).rays

    def to_json(self) -> dict:
        out = self.lattice.to_json()
        out["effective_generators"] = {
            n: v.to_json() for n, v in self.effective_generators
        }
        out["negative_curves"] = list(self.negative_curves)
        return out


def surface_from_json(data: Mapping) -> SurfaceModel:
    """Read a surface fixture: {basis_labels, gram, canonical_class?,
    effective_generators, negative_curves}."""
    try:
        gram = QMatrix.from_json(data["gram"])
        kc = data.get("canonical_class")
        lattice = IntersectionLattice(
            data["basis_labels"],
            gram,
            LatticeVector(int(x) for x in kc) if kc is not None else None,
        )
        gens = [
            (name, LatticeVector(int(x) for x in vec))
            for name, vec in data["effective_generators"].items()
        ]
        return SurfaceModel(lattice, gens, data.get("negative_curves", []))
    except (KeyError, TypeError) as exc:
        raise FixtureError(f"malformed surface fixture: {exc}") from exc


def nef_cone(surface: SurfaceModel) -> Cone:
    """Dual of the effective cone under the intersection pairing.

    Facet normals are the gram images of the effective generators; the
    extreme rays come back as primitive classes.
    """
    lattice = surface.lattice
    ineqs = [
        [int(x) for x in lattice.gram.mul_vector(list(v))]
        for _n, v in surface.effective_generators
    ]
    return Cone.from_inequalities(lattice.rank, ineqs)


def decompose_fixed_moving(
    surface: SurfaceModel,
    d: LatticeVector | Sequence[int],
    scan_order: Sequence[str] | None = None,
    max_rounds: int = 10000,
) -> tuple[LatticeVector, dict[str, int]]:
    """Split an effective class into a nef moving part plus negative curves.

    Repeatedly finds the first negative curve C (in scan order) with
    current . C < 0, moves ceil((-current.C)/(-C.C)) copies of C into the
    fixed part, and stops when no negative curve pairs negatively. The
    result is checked to be nef against every effective generator.
    """
    lattice = surface.lattice
    dv = LatticeVector(int(x) for x in d)
    if not surface.effective_cone().contains(dv):
        raise NotEffective(f"{dv!r} is outside the effective cone")
    order = tuple(scan_order) if scan_order is not None else surface.negative_curves
    if set(order) != set(surface.negative_curves):
        raise ValueError("scan order must cover exactly the negative curves")
    gens = dict(surface.effective_generators)
    fixed = {name: 0 for name in surface.negative_curves}
    current = dv
    for _ in range(max_rounds):
        violated = None
        for name in order:
            if pair(lattice, current, gens[name]) < 0:
                violated = name
                break
        if violated is None:
            break
        c = gens[violated]
        deficit = -pair(lattice, current, c)
        self_int = -pair(lattice, c, c)
        k = -((-deficit) // self_int)  # ceil(deficit / self_int)
        fixed[violated] += k
        current = current - k * c
    else:
        raise NoTermination("fixed/moving loop exceeded the iteration cap")
    for name, g in surface.effective_generators:
        if pair(lattice, current, g) < 0:
            raise NoTermination(
                f"moving part pairs negatively with {name}; input is malformed"
            )
    return current, {n: k for n, k in fixed.items() if k}


def in_nef_monoid(surface: SurfaceModel, d: LatticeVector | Sequence[int]) -> bool:
    """Whether d is a nonnegative *integer* combination of the nef cone rays."""
    rays = nef_cone(surface).rays
    chi = QMatrix.from_columns([list(r) for r in rays])
    pts = lattice_points(ConeSlicePolytope(chi, [int(x) for x in d]))
    return bool(pts)


def regrade(
    lattice: IntersectionLattice, basis_change: QMatrix, new_labels: Sequence[str] | None = None
) -> IntersectionLattice:
    """Transport the pairing and canonical class through a unimodular basis
    change whose columns are the new basis in old coordinates."""
    if not basis_change.is_integer:
        raise NotUnimodular("basis change must be integral")
    det = determinant(basis_change)
    if abs(det) != 1:
        raise NotUnimodular(f"basis change has determinant {det}")
    gram2 = basis_change.transpose() @ lattice.gram @ basis_change
    kc = None
    if lattice.canonical_class is not None:
        inv = invert(basis_change)
        coords = inv.mul_vector(list(lattice.canonical_class))
        kc = LatticeVector(int(x) for x in coords)
    labels = tuple(new_labels) if new_labels is not None else lattice.basis_labels
    return IntersectionLattice(labels, gram2, kc)

"""Torus actions on affine space via degree matrices: one-skeletons,
effective-cone images, moving cones, projectivity, and polarized model fans.

The one-skeleton vectors are the columns of a dependence-relation matrix for
the degree columns; the kernel basis is taken in Hermite normal form, so the
vectors are canonical up to that basis choice and tests compare lattices
rather than vector lists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .cones import Cone, intersect, zero_in_convex_hull
from .errors import (
    FixtureError,
    MultiplierBoundExceeded,
    NotEffective,
    NotSurjective,
    UnboundedSlice,
)
from .linalg import (
    LatticeVector,
    QMatrix,
    kernel_basis,
    rank_of_rows,
    smith_normal_form,
    solve_square,
)

__all__ = ["CharacterData", "PolarizedModel", "character_data_from_json"]


class CharacterData:
    """A faithful torus action on affine space, given by named degree columns."""

    def __init__(self, grading_rank: int, columns: Sequence[tuple[str, LatticeVector]]):
        self.grading_rank = grading_rank
        self.columns = tuple(
            (n, v if isinstance(v, LatticeVector) else LatticeVector(v))
            for n, v in columns
        )
        for _n, v in self.columns:
            if len(v) != grading_rank:
                raise ValueError("column rank mismatch")
        self.chi = QMatrix.from_columns([list(v) for _n, v in self.columns])
        self._check_surjective()
        self._skeleton: tuple[LatticeVector, ...] | None = None

    def _check_surjective(self) -> None:
        if self.chi.rows == 0:
            return
        _u, d, _v = smith_normal_form(self.chi)
        diag = [int(d.entry(i, i)) for i in range(min(d.rows, d.cols))]
        if len(diag) < self.grading_rank or any(
            x != 1 for x in diag[: self.grading_rank]
        ):
            raise NotSurjective("degree matrix does not map onto the grading lattice")

    @property
    def variable_count(self) -> int:
        return len(self.columns)

    @property
    def column_names(self) -> tuple[str, ...]:
        return tuple(n for n, _v in self.columns)

    def column_vectors(self) -> list[tuple[int, ...]]:
        return [v.entries for _n, v in self.columns]

    def one_skeleton(self) -> tuple[LatticeVector, ...]:
        """Columns of the HNF dependence-relation matrix among the degrees."""
        if self._skeleton is None:
            rows = kernel_basis(self.chi)
            n = len(rows)
            self._skeleton = tuple(
                LatticeVector(tuple(rows[i][j] for i in range(n)))
                for j in range(self.variable_count)
            )
        return self._skeleton

    def skeleton_violations(self) -> list[str]:
        """Zero skeleton vectors or positive-multiple pairs, if any.

        Violations are reported rather than raised: such inputs are legal,
        they just void the moving-cone interior guarantees.
        """
        out = []
        skel = self.one_skeleton()
        names = self.column_names
        for name, v in zip(names, skel):
            if v.is_zero:
                out.append(f"skeleton vector for {name} is zero")
        for (i, a), (j, b) in itertools.combinations(enumerate(skel), 2):
            if a.is_zero or b.is_zero:
                continue
            if a.primitive() == b.primitive():
                out.append(
                    f"skeleton vectors for {names[i]} and {names[j]} are positive multiples"
                )
        return out

    def effective_image(self) -> Cone:
        """Cone spanned by the degree columns in the grading lattice."""
        return Cone.from_rays(self.grading_rank, self.column_vectors())

    def moving_cone(self) -> Cone:
        """Intersection over i of the cones omitting column i."""
        cols = self.column_vectors()
        subcones = [
            Cone.from_rays(self.grading_rank, cols[:i] + cols[i + 1 :])
            for i in range(len(cols))
        ]
        return intersect(subcones)

    def is_projective(self) -> bool:
        """Whether 0 avoids the convex hull of the degree columns."""
        return not zero_in_convex_hull(self.column_vectors())

    def model_fan(
        self,
        nu: LatticeVector | Sequence[int],
        multiplier: int | None = None,
        max_multiplier: int = 60,
    ) -> "PolarizedModel":
        """Rays of the fan of the polarized quotient model for linearization nu.

        Works with the slice polytope in exponent space: its facets correspond
        to coordinate hyperplanes, and a facet at coordinate i contributes the
        i-th one-skeleton vector. The model is marked simplicial when the
        polytope has full dimension and every vertex lies on exactly that many
        coordinate hyperplanes (off the GIT walls).
        """
        nu = LatticeVector(int(x) for x in nu)
        cols = self.column_vectors()
        n_amb = len(cols)
        r = self.grading_rank
        n = n_amb - r
        if zero_in_convex_hull(cols):
            raise UnboundedSlice("0 is in the convex hull of the degree columns")
        if not self.effective_image().contains(nu):
            raise NotEffective(f"{nu!r} is outside the effective cone")

        vertices = _slice_vertices(cols, nu.entries, r)
        assert vertices, "a bounded nonempty slice must have a vertex"
        if multiplier is None:
            d0 = 1
            for v in vertices:
                for x in v:
                    d0 = d0 * x.denominator // _gcd(d0, x.denominator)
            if d0 > max_multiplier:
                raise MultiplierBoundExceeded(
                    f"smallest integral multiplier {d0} exceeds the cap {max_multiplier}"
                )
        else:
            d0 = int(multiplier)
            if d0 < 1:
                raise ValueError("multiplier must be positive")
            for v in vertices:
                for x in v:
                    if (x * d0).denominator != 1:
                        raise ValueError(
                            f"multiplier {d0} does not clear the vertex denominators"
                        )
        scaled = [tuple(x * d0 for x in v) for v in vertices]

        dim_p = _affine_rank(scaled)
        facet_coords = []
        for i in range(n_amb):
            on_wall = [v for v in scaled if v[i] == 0]
            if on_wall and _affine_rank(on_wall) == dim_p - 1:
                facet_coords.append(i)
        skeleton = self.one_skeleton()
        rays = []
        seen = set()
        for i in facet_coords:
            v = skeleton[i].primitive()
            if not v.is_zero and v.entries not in seen:
                seen.add(v.entries)
                rays.append(v)
        simplicial = dim_p == n and all(
            sum(1 for x in v if x == 0) == dim_p for v in scaled
        )
        return PolarizedModel(
            data=self,
            nu=nu,
            fan_rays=tuple(rays),
            simplicial=simplicial,
            multiplier=d0,
            polytope_dim=dim_p,
        )

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "grading_rank": self.grading_rank,
            "columns": [{"name": n, "degree": v.to_json()} for n, v in self.columns],
        }


@dataclass(frozen=True)
class PolarizedModel:
    """Fan rays of a polarized quotient model; simplicial=False reports a
    degenerate (wall) linearization."""

    data: CharacterData
    nu: LatticeVector
    fan_rays: tuple[LatticeVector, ...]
    simplicial: bool
    multiplier: int
    polytope_dim: int

    @property
    def degenerate(self) -> bool:
        return not self.simplicial


def _slice_vertices(
    cols: Sequence[tuple[int, ...]], target: Sequence[int], r: int
) -> list[tuple[Fraction, ...]]:
    """Vertices of {a >= 0 : sum a_j col_j = target}.

    Every vertex has linearly independent support, so it appears as the
    unique solution over some full-rank column subset of size r.
    """
    n = len(cols)
    out: set[tuple[Fraction, ...]] = set()
    for subset in itertools.combinations(range(n), min(r, n)):
        rows = [[cols[j][i] for j in subset] for i in range(len(target))]
        if rank_of_rows(rows) < len(subset):
            continue
        square_rows: list[list[int]] = []
        kept: list[int] = []
        for i, row in enumerate(rows):
            if rank_of_rows(square_rows + [row]) > len(square_rows):
                square_rows.append(row)
                kept.append(i)
                if len(kept) == len(subset):
                    break
        sol = solve_square(QMatrix(square_rows), [target[i] for i in kept])
        # check remaining coordinates and nonnegativity
        ok = all(x >= 0 for x in sol)
        if ok:
            for i in range(len(target)):
                acc = sum(
                    (Fraction(cols[j][i]) * sol[k] for k, j in enumerate(subset)),
                    Fraction(0),
                )
                if acc != target[i]:
                    ok = False
                    break
        if ok:
            full = [Fraction(0)] * n
            for k, j in enumerate(subset):
                full[j] = sol[k]
            out.add(tuple(full))
    return sorted(out)


def _affine_rank(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine hull of exact rational points."""
    if not points:
        return -1
    base = points[0]
    rows = []
    for p in points[1:]:
        diff = [x - y for x, y in zip(p, base)]
        denom = 1
        for f in diff:
            denom = denom * f.denominator // _gcd(denom, f.denominator)
        rows.append([int(f * denom) for f in diff])
    return rank_of_rows(rows) if rows else 0


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def character_data_from_json(data: Mapping) -> CharacterData:
    """Read a character fixture: {grading_rank, columns: [{name, degree}]}."""
    try:
        return CharacterData(
            int(data["grading_rank"]),
            [
                (c["name"], LatticeVector(int(x) for x in c["degree"]))
                for c in data["columns"]
            ],
        )
    except (KeyError, TypeError) as exc:
        raise FixtureError(f"malformed character fixture: {exc}") from exc

"""Rational polyhedral cones with exact double description.

A cone is stored as four canonical components

    rays        extreme generators modulo the lineality space
    lineality   HNF basis of the lineality lattice
    facets      facet normals modulo the orthogonal complement of the span
    equations   HNF basis of the lattice cutting out the span

so that ``C = cone(rays) + span(lineality) = {x : equations . x = 0,
facets . x >= 0}``. Rays and facets are primitive, projected into the
appropriate subspace, and sorted; duality just swaps (rays, lineality) with
(facets, equations), which makes ``dual`` an exact involution.

Representation conversion is Motzkin's double description with exact
integer arithmetic and the combinatorial adjacency test on true zero sets.
Membership certificates run through an independent exact LP, so the facet
test and the certificate test cross-validate each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import lp
from .errors import UnboundedSlice
from .linalg import LatticeVector, QMatrix, invert, rank_of_rows, row_hnf

__all__ = [
    "Cone",
    "Certificate",
    "SeparationWitness",
    "ConeSlicePolytope",
    "intersect",
    "membership_certificate",
    "zero_in_convex_hull",
    "lattice_points",
]


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _primitive(v: Sequence[int]) -> tuple[int, ...]:
    return LatticeVector(v).primitive().entries


def _insert_constraint(
    lin: list[tuple[int, ...]],
    rays: list[tuple[int, ...]],
    processed: list[tuple[int, ...]],
    vec: tuple[int, ...],
    equality: bool,
) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """One double-description step: intersect span(lin)+cone(rays) with
    {x : vec . x >= 0} (or = 0 when ``equality``)."""
    pairing = [_dot(vec, l) for l in lin]
    idx = next((i for i, d in enumerate(pairing) if d != 0), None)
    if idx is not None:
        w = lin[idx]
        d = pairing[idx]
        if d < 0:
            w = tuple(-x for x in w)
            d = -d
        new_lin = []
        for i, l in enumerate(lin):
            if i == idx:
                continue
            c = _dot(vec, l)
            new_lin.append(_primitive(tuple(d * a - c * b for a, b in zip(l, w))))
        new_rays = []
        for r in rays:
            c = _dot(vec, r)
            new_rays.append(_primitive(tuple(d * a - c * b for a, b in zip(r, w))))
        if not equality:
            new_rays.append(w)
        return new_lin, new_rays

    # vec vanishes on the lineality space: split the pointed part.
    values = [_dot(vec, r) for r in rays]
    pos = [i for i, s in enumerate(values) if s > 0]
    zero = [i for i, s in enumerate(values) if s == 0]
    neg = [i for i, s in enumerate(values) if s < 0]
    if not equality and not neg:
        return lin, rays
    if equality and not pos and not neg:
        return lin, rays

    # True zero sets against all previously processed inequalities; required
    # for the combinatorial adjacency criterion.
    zsets = [
        sum(1 << p for p, a in enumerate(processed) if _dot(a, r) == 0)
        for r in rays
    ]
    combos: list[tuple[int, ...]] = []
    for i in pos:
        for j in neg:
            common = zsets[i] & zsets[j]
            adjacent = True
            for k in range(len(rays)):
                if k != i and k != j and (common & zsets[k]) == common:
                    adjacent = False
                    break
            if adjacent:
                si, sj = values[i], values[j]
                combos.append(
                    _primitive(tuple(si * b - sj * a for a, b in zip(rays[i], rays[j])))
                )
    survivors = zero if equality else pos + zero
    seen: set[tuple[int, ...]] = set()
    new_rays = []
    for r in [rays[i] for i in survivors] + combos:
        if r not in seen:
            seen.add(r)
            new_rays.append(r)
    return lin, new_rays


def _dd(
    rank: int,
    equalities: Iterable[Sequence[int]],
    inequalities: Iterable[Sequence[int]],
) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Extreme rays and lineality basis of {x : eq . x = 0, ineq . x >= 0}."""
    lin = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    rays: list[tuple[int, ...]] = []
    processed: list[tuple[int, ...]] = []
    for e in equalities:
        e = tuple(int(x) for x in e)
        if any(e):
            lin, rays = _insert_constraint(lin, rays, processed, e, equality=True)
    for a in inequalities:
        a = tuple(int(x) for x in a)
        if not any(a):
            continue
        lin, rays = _insert_constraint(lin, rays, processed, a, equality=False)
        processed.append(a)
    return rays, lin


def _project_off(
    vectors: Iterable[Sequence[int]], basis: Sequence[LatticeVector]
) -> tuple[LatticeVector, ...]:
    """Orthogonally project vectors off span(basis), primitivize, dedupe, sort."""
    vecs = [tuple(int(x) for x in v) for v in vectors]
    if basis:
        b = QMatrix([list(v) for v in basis])
        gram_inv = invert(b @ b.transpose())
        projected = []
        for v in vecs:
            coeffs = gram_inv.mul_vector(b.mul_vector(v))
            frac = [
                Fraction(x) - sum((c * b.entry(k, i) for k, c in enumerate(coeffs)), Fraction(0))
                for i, x in enumerate(v)
            ]
            denom = 1
            for f in frac:
                denom = denom * f.denominator // _gcd(denom, f.denominator)
            projected.append(tuple(int(f * denom) for f in frac))
        vecs = projected
    out = sorted({_primitive(v) for v in vecs if any(v)})
    return tuple(LatticeVector(v) for v in out)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class Cone:
    """A rational polyhedral cone in canonical double description form."""

    __slots__ = ("_rank", "_rays", "_lineality", "_facets", "_equations")

    def __init__(self, rank, rays, lineality, facets, equations):
        # Trusted constructor: fields must already be canonical. Build cones
        # with from_rays / from_inequalities.
        object.__setattr__(self, "_rank", rank)
        object.__setattr__(self, "_rays", tuple(rays))
        object.__setattr__(self, "_lineality", tuple(lineality))
        object.__setattr__(self, "_facets", tuple(facets))
        object.__setattr__(self, "_equations", tuple(equations))

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Cone is immutable")

    @classmethod
    def from_rays(cls, rank: int, vectors: Iterable[Sequence[int]]) -> "Cone":
        """The cone generated by integer vectors.

        Deduplicates, drops non-extreme generators, and computes facet
        normals by double description. Generators containing opposite
        directions contribute to the lineality space instead of the ray list.
        """
        gens: list[tuple[int, ...]] = []
        seen: set[tuple[int, ...]] = set()
        for v in vectors:
            t = _primitive(tuple(int(x) for x in v))
            if any(t) and t not in seen:
                seen.add(t)
                gens.append(t)
        dual_rays, dual_lin = _dd(rank, [], gens)
        equations = row_hnf(dual_lin)
        facets = _project_off(dual_rays, equations)
        ray_raw, lin_raw = _dd(rank, [v.entries for v in equations], [f.entries for f in facets])
        lineality = row_hnf(lin_raw)
        rays = _project_off(ray_raw, lineality)
        return cls(rank, rays, lineality, facets, equations)

    @classmethod
    def from_inequalities(
        cls,
        rank: int,
        inequalities: Iterable[Sequence[int]],
        equations: Iterable[Sequence[int]] = (),
    ) -> "Cone":
        """The cone {x : equations . x = 0, inequalities . x >= 0}."""
        ineqs: list[tuple[int, ...]] = []
        seen: set[tuple[int, ...]] = set()
        for v in inequalities:
            t = _primitive(tuple(int(x) for x in v))
            if any(t) and t not in seen:
                seen.add(t)
                ineqs.append(t)
        eqs = [tuple(int(x) for x in e) for e in equations]
        ray_raw, lin_raw = _dd(rank, eqs, ineqs)
        lineality = row_hnf(lin_raw)
        rays = _project_off(ray_raw, lineality)
        dual_rays, dual_lin = _dd(
            rank, [v.entries for v in lineality], [r.entries for r in rays]
        )
        eq_out = row_hnf(dual_lin)
        facets = _project_off(dual_rays, eq_out)
        return cls(rank, rays, lineality, facets, eq_out)

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def rays(self) -> tuple[LatticeVector, ...]:
        return self._rays

    @property
    def lineality(self) -> tuple[LatticeVector, ...]:
        return self._lineality

    @property
    def facets(self) -> tuple[LatticeVector, ...]:
        return self._facets

    @property
    def equations(self) -> tuple[LatticeVector, ...]:
        return self._equations

    @property
    def dim(self) -> int:
        return self._rank - len(self._equations)

    @property
    def is_pointed(self) -> bool:
        return not self._lineality

    @property
    def is_full_dimensional(self) -> bool:
        return not self._equations

    @property
    def simplicial(self) -> bool:
        return self.is_pointed and rank_of_rows(
            [r.entries for r in self._rays]
        ) == len(self._rays)

    @property
    def is_zero(self) -> bool:
        return not self._rays and not self._lineality

    def __eq__(self, other) -> bool:
        if isinstance(other, Cone):
            return (
                self._rank == other._rank
                and self._rays == other._rays
                and self._lineality == other._lineality
                and self._facets == other._facets
                and self._equations == other._equations
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._rank, self._rays, self._lineality))

    def __repr__(self) -> str:
        return (
            f"Cone(rank={self._rank}, rays={len(self._rays)}, "
            f"lineality={len(self._lineality)}, facets={len(self._facets)})"
        )

    def dual(self) -> "Cone":
        """The dual cone under the standard dot product (exact involution)."""
        return Cone(
            self._rank,
            rays=self._facets,
            lineality=self._equations,
            facets=self._rays,
            equations=self._lineality,
        )

    def contains(self, v: LatticeVector | Sequence[int], strict: bool = False) -> bool:
        """Membership by facet/equation pairing; strict means interior of a
        full-dimensional cone."""
        vv = tuple(int(x) for x in v)
        if strict and self._equations:
            return False
        if any(_dot(e.entries, vv) != 0 for e in self._equations):
            return False
        if strict:
            return all(_dot(f.entries, vv) > 0 for f in self._facets)
        return all(_dot(f.entries, vv) >= 0 for f in self._facets)

    def to_json(self) -> dict:
        out = {
            "schema": 1,
            "rank": self._rank,
            "rays": [list(r.entries) for r in self._rays],
            "facets": [list(f.entries) for f in self._facets],
        }
        if self._lineality:
            out["lineality"] = [list(l.entries) for l in self._lineality]
        if self._equations:
            out["equations"] = [list(e.entries) for e in self._equations]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Cone":
        """Rebuild from serialized form; the generator data is authoritative."""
        rank = int(data["rank"])
        gens = [tuple(int(x) for x in r) for r in data.get("rays", [])]
        for l in data.get("lineality", []):
            t = tuple(int(x) for x in l)
            gens.append(t)
            gens.append(tuple(-x for x in t))
        return cls.from_rays(rank, gens)


def intersect(cones: Sequence[Cone]) -> Cone:
    """Intersection via facet-form concatenation and ray re-extraction."""
    cones = list(cones)
    if not cones:
        raise ValueError("intersect needs at least one cone")
    rank = cones[0].rank
    if any(c.rank != rank for c in cones):
        raise ValueError("ambient rank mismatch")
    ineqs = [f.entries for c in cones for f in c.facets]
    eqs = [e.entries for c in cones for e in c.equations]
    return Cone.from_inequalities(rank, ineqs, eqs)


@dataclass(frozen=True)
class Certificate:
    """Exact nonnegative combination expressing a vector inside a cone."""

    ray_coefficients: tuple[Fraction, ...]
    lineality_coefficients: tuple[Fraction, ...]

    def expand(self, cone: Cone) -> tuple[Fraction, ...]:
        n = cone.rank
        acc = [Fraction(0)] * n
        for c, r in zip(self.ray_coefficients, cone.rays):
            for i in range(n):
                acc[i] += c * r[i]
        for c, l in zip(self.lineality_coefficients, cone.lineality):
            for i in range(n):
                acc[i] += c * l[i]
        return tuple(acc)


@dataclass(frozen=True)
class SeparationWitness:
    """A functional nonnegative on the cone and negative on the query vector."""

    normal: LatticeVector


def membership_certificate(
    cone: Cone, v: LatticeVector | Sequence[int]
) -> Certificate | SeparationWitness:
    """Either exact coefficients writing v over the rays, or a separating normal.

    The decision is made by an exact LP over the generators, independently of
    the facet representation; the returned witness is then drawn from the
    canonical facet/equation lists.
    """
    vv = [int(x) for x in v]
    rays = [r.entries for r in cone.rays]
    lins = [l.entries for l in cone.lineality]
    columns = rays + lins + [tuple(-x for x in l) for l in lins]
    rows = [[col[i] for col in columns] for i in range(cone.rank)]
    x, _y = lp.solve_feasibility(rows, vv)
    if x is not None:
        nr = len(rays)
        nl = len(lins)
        ray_c = tuple(x[:nr])
        lin_c = tuple(x[nr + i] - x[nr + nl + i] for i in range(nl))
        cert = Certificate(ray_c, lin_c)
        if cert.expand(cone) != tuple(Fraction(t) for t in vv):
            raise AssertionError("certificate does not reproduce the vector")
        return cert
    for e in cone.equations:
        p = e.dot(vv)
        if p != 0:
            return SeparationWitness(e if p < 0 else -e)
    for f in cone.facets:
        if f.dot(vv) < 0:
            return SeparationWitness(f)
    raise AssertionError("LP found v infeasible but no canonical constraint is violated")


def zero_in_convex_hull(vectors: Sequence[Sequence[int]]) -> bool:
    """Exact feasibility of sum(c_i v_i) = 0, sum(c_i) = 1, c_i >= 0."""
    vecs = [tuple(int(x) for x in v) for v in vectors]
    if not vecs:
        raise ValueError("empty vector list")
    d = len(vecs[0])
    rows = [[v[i] for v in vecs] for i in range(d)]
    rows.append([1] * len(vecs))
    x, _y = lp.solve_feasibility(rows, [0] * d + [1])
    return x is not None


def _orthant(n: int) -> Cone:
    units = tuple(
        LatticeVector(tuple(1 if j == i else 0 for j in range(n))) for i in range(n)
    )
    return Cone(n, rays=units, lineality=(), facets=units, equations=())


class _SliceEnumerator:
    """Backtracking enumeration of nonnegative integer solutions of
    chi . a = target, with exact bound propagation.

    Bounds come from the facet functionals of the column cone plus one
    strictly positive functional (from an exact LP), which also guarantees
    termination. Raises UnboundedSlice when 0 lies in the convex hull of the
    column set, in which case any nonempty slice would be unbounded.

    The search branches on the heaviest columns first; once the remaining
    columns are linearly independent the tail is a unique exact linear solve
    instead of a search, which keeps the node count close to the number of
    solutions.
    """

    def __init__(self, columns: Sequence[tuple[int, ...]]):
        self.columns = [tuple(int(x) for x in c) for c in columns]
        if not self.columns:
            raise ValueError("no columns")
        if zero_in_convex_hull(self.columns):
            raise UnboundedSlice(
                "0 is in the convex hull of the degree columns; slices are unbounded"
            )
        d = len(self.columns[0])
        image = Cone.from_rays(d, self.columns)
        funcs: list[tuple[int, ...]] = [f.entries for f in image.facets]
        for e in image.equations:
            funcs.append(e.entries)
            funcs.append(tuple(-x for x in e.entries))
        phi = lp.positive_functional(self.columns)
        assert phi is not None  # guaranteed: 0 outside the hull
        funcs.append(tuple(phi))
        self.funcs = funcs
        # Branch on heavy columns first, forced light columns last.
        n = len(self.columns)
        self.order = sorted(range(n), key=lambda j: (-_dot(phi, self.columns[j]), j))
        ordered = [self.columns[j] for j in self.order]
        self.pairings = [[_dot(f, c) for c in ordered] for f in funcs]
        # Longest linearly independent suffix of the ordered columns.
        split = n
        tail: list[tuple[int, ...]] = []
        while split > 0:
            cand = [ordered[split - 1]] + tail
            if rank_of_rows(cand) != len(cand):
                break
            tail = cand
            split -= 1
        self.split = split
        self._tail_rows: list[int] = []
        self._tail_num: list[list[int]] = []
        self._tail_den = 1
        if tail:
            m = len(tail)
            rows: list[int] = []
            chosen: list[list[int]] = []
            for i in range(d):
                row = [tail[j][i] for j in range(m)]
                if rank_of_rows(chosen + [row]) > len(rows):
                    chosen.append(row)
                    rows.append(i)
                    if len(rows) == m:
                        break
            inv = invert(QMatrix(chosen))
            den = 1
            for i in range(m):
                for j in range(m):
                    q = inv.entry(i, j).denominator
                    den = den * q // _gcd(den, q)
            self._tail_rows = rows
            self._tail_num = [
                [int(inv.entry(i, j) * den) for j in range(m)] for i in range(m)
            ]
            self._tail_den = den
        self._tail = tail

    def _solve_tail(self, t: tuple[int, ...]) -> tuple[int, ...] | None:
        """Unique nonnegative integer solution over the independent suffix.

        Integer-only: the precomputed inverse is stored as num/den."""
        tail = self._tail
        if not tail:
            return () if not any(t) else None
        den = self._tail_den
        sub = [t[i] for i in self._tail_rows]
        out = []
        for num_row in self._tail_num:
            s = sum(a * b for a, b in zip(num_row, sub))
            if s < 0 or s % den != 0:
                return None
            out.append(s // den)
        for i in range(len(t)):  # verify the non-pivot coordinates too
            if sum(tail[j][i] * out[j] for j in range(len(tail))) != t[i]:
                return None
        return tuple(out)

    def enumerate(self, target: Sequence[int]) -> list[tuple[int, ...]]:
        n = len(self.columns)
        order = self.order
        ordered = [self.columns[j] for j in order]
        funcs = self.funcs
        pairings = self.pairings
        split = self.split
        sols: list[tuple[int, ...]] = []
        prefix = [0] * n

        def rec(k: int, t: tuple[int, ...]) -> None:
            # Residuals stay feasible for every functional by the parent's
            # bound computation, so no entry prune is needed below the root.
            if k == split:
                got = self._solve_tail(t)
                if got is not None:
                    sol = [0] * n
                    for pos in range(split):
                        sol[order[pos]] = prefix[pos]
                    for pos, a in enumerate(got):
                        sol[order[split + pos]] = a
                    sols.append(tuple(sol))
                return
            ub = None
            for fi in range(len(funcs)):
                ft = _dot(funcs[fi], t)
                if ft < 0:
                    return
                fc = pairings[fi][k]
                if fc > 0:
                    b = ft // fc
                    if ub is None or b < ub:
                        ub = b
            assert ub is not None
            col = ordered[k]
            cur = t
            for a in range(ub + 1):
                prefix[k] = a
                rec(k + 1, cur)
                cur = tuple(x - y for x, y in zip(cur, col))
            prefix[k] = 0

        rec(0, tuple(int(x) for x in target))
        sols.sort()
        return sols


class ConeSlicePolytope:
    """The polytope of nonnegative solutions of chi . a = target."""

    def __init__(
        self,
        chi: QMatrix,
        target: LatticeVector | Sequence[int],
        cone: Cone | None = None,
    ):
        if not chi.is_integer:
            raise ValueError("degree matrix must be integral")
        self.chi = chi
        self.target = LatticeVector(int(x) for x in target)
        if len(self.target) != chi.rows:
            raise ValueError("target length must match the grading rank")
        self.cone = cone if cone is not None else _orthant(chi.cols)
        self._enumerator: _SliceEnumerator | None = None

    def _get_enumerator(self) -> _SliceEnumerator:
        if self._enumerator is None:
            cols = [
                tuple(int(x) for x in self.chi.column(j)) for j in range(self.chi.cols)
            ]
            self._enumerator = _SliceEnumerator(cols)
        return self._enumerator


def lattice_points(p: ConeSlicePolytope) -> list[LatticeVector]:
    """All nonnegative integer solutions of chi . a = target, sorted."""
    return [LatticeVector(s) for s in p._get_enumerator().enumerate(p.target.entries)]

"""Polynomial rings graded by a lattice, with homogeneous relations.

Monomials are exponent vectors over a fixed variable list; coefficients are
exact rationals. Degree-slice enumeration delegates to the cone engine, so
the monomial count of a graded piece and the Riemann-Roch value computed in
`surfaces` are genuinely independent code paths.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .cones import _SliceEnumerator
from .errors import FixtureError
from .linalg import LatticeVector, QMatrix

__all__ = [
    "Polynomial",
    "GradedRing",
    "degree_of_monomial",
    "is_homogeneous",
    "monomials_of_degree",
    "hilbert_hypersurface",
    "substitute",
    "divides_all",
]


class Polynomial:
    """A multivariate polynomial over the rationals.

    Terms are kept sorted by exponent vector with no zero coefficients, so
    equal polynomials compare equal structurally.
    """

    __slots__ = ("_nvars", "_terms")

    def __init__(self, nvars: int, terms: Iterable[tuple[Sequence[int], object]] = ()):
        acc: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in terms:
            e = tuple(int(x) for x in exps)
            if len(e) != nvars:
                raise ValueError("exponent length mismatch")
            if any(x < 0 for x in e):
                raise ValueError("negative exponent")
            c = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
            c = acc.get(e, Fraction(0)) + c
            if c == 0:
                acc.pop(e, None)
            else:
                acc[e] = c
        object.__setattr__(self, "_nvars", nvars)
        object.__setattr__(self, "_terms", tuple(sorted(acc.items())))

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c) -> "Polynomial":
        return cls(nvars, [((0,) * nvars, c)])

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "Polynomial":
        return cls(len(exps), [(exps, coeff)])

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, [(exps, 1)])

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> tuple[tuple[tuple[int, ...], Fraction], ...]:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._nvars == other._nvars and self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._nvars, self._terms))

    def __repr__(self) -> str:
        if self.is_zero:
            return "Polynomial(0)"
        bits = []
        for exps, c in self._terms:
            mono = "*".join(
                f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(exps) if e
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "Polynomial(" + " + ".join(bits) + ")"

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return Polynomial(self._nvars, list(self._terms) + list(other._terms))

    def __neg__(self) -> "Polynomial":
        return Polynomial(self._nvars, [(e, -c) for e, c in self._terms])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(self._nvars, [(e, c * other) for e, c in self._terms])
        self._check(other)
        acc: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return Polynomial(self._nvars, acc.items())

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self._nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def _check(self, other: "Polynomial") -> None:
        if self._nvars != other._nvars:
            raise ValueError("variable count mismatch")

    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": str(c), "exponents": list(e)} for e, c in self._terms
            ]
        }

    @classmethod
    def from_json(cls, nvars: int, data: Mapping) -> "Polynomial":
        return cls(
            nvars,
            [(t["exponents"], Fraction(t["coeff"])) for t in data["terms"]],
        )


def substitute(p: Polynomial, images: Sequence[Polynomial]) -> Polynomial:
    """Exact expansion of p with variable i replaced by images[i].

    All images must share a variable count; the result lives over that
    count. A ring homomorphism: products and sums are preserved.
    """
    if len(images) != p.nvars:
        raise ValueError("every variable needs an image")
    if images:
        target_n = images[0].nvars
        if any(im.nvars != target_n for im in images):
            raise ValueError("images must share one variable set")
    else:
        target_n = 0
    out = Polynomial.zero(target_n)
    for exps, coeff in p.terms:
        term = Polynomial.constant(target_n, coeff)
        for i, e in enumerate(exps):
            if e:
                term = term * images[i] ** e
        out = out + term
    return out


class GradedRing:
    """Finitely many variables with multidegrees in a lattice, plus
    homogeneous relations."""

    def __init__(
        self,
        variables: Sequence[tuple[str, LatticeVector]],
        relations: Sequence[Polynomial] = (),
    ):
        names = [n for n, _d in variables]
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        degs = [d if isinstance(d, LatticeVector) else LatticeVector(d) for _n, d in variables]
        if degs:
            r = len(degs[0])
            if any(len(d) != r for d in degs):
                raise ValueError("degree rank mismatch")
        self._variables = tuple(zip(names, degs))
        rels = []
        rel_degs = []
        for p in relations:
            if p.nvars != len(names):
                raise ValueError("relation variable count mismatch")
            deg = is_homogeneous(self, p)
            if deg is None:
                raise ValueError("relations must be homogeneous")
            rels.append(p)
            rel_degs.append(deg)
        self._relations = tuple(rels)
        self._relation_degrees = tuple(rel_degs)
        self._enumerator: _SliceEnumerator | None = None

    @property
    def variables(self) -> tuple[tuple[str, LatticeVector], ...]:
        return self._variables

    @property
    def variable_names(self) -> tuple[str, ...]:
        return tuple(n for n, _d in self._variables)

    @property
    def relations(self) -> tuple[Polynomial, ...]:
        return self._relations

    @property
    def relation_degrees(self) -> tuple[LatticeVector, ...]:
        return self._relation_degrees

    @property
    def nvars(self) -> int:
        return len(self._variables)

    @property
    def grading_rank(self) -> int:
        return len(self._variables[0][1]) if self._variables else 0

    def degree_matrix(self) -> QMatrix:
        return QMatrix.from_columns([list(d) for _n, d in self._variables])

    def variable_index(self, name: str) -> int:
        for i, (n, _d) in enumerate(self._variables):
            if n == name:
                return i
        raise KeyError(name)

    def _get_enumerator(self) -> _SliceEnumerator:
        if self._enumerator is None:
            self._enumerator = _SliceEnumerator(
                [tuple(d) for _n, d in self._variables]
            )
        return self._enumerator

    def monomial_name(self, exps: Sequence[int]) -> str:
        bits = []
        for (name, _d), e in zip(self._variables, exps):
            if e == 1:
                bits.append(name)
            elif e > 1:
                bits.append(f"{name}^{e}")
        return "*".join(bits) if bits else "1"


def degree_of_monomial(ring: GradedRing, exponents: Sequence[int]) -> LatticeVector:
    """Sum of variable multidegrees weighted by the exponent vector."""
    exps = [int(x) for x in exponents]
    if len(exps) != ring.nvars:
        raise ValueError("exponent length mismatch")
    acc = [0] * ring.grading_rank
    for e, (_n, d) in zip(exps, ring.variables):
        if e:
            for i, x in enumerate(d):
                acc[i] += e * x
    return LatticeVector(acc)


def is_homogeneous(ring: GradedRing, p: Polynomial) -> LatticeVector | None:
    """The common multidegree of the terms, or None when degrees differ.

    The zero polynomial counts as homogeneous of degree zero.
    """
    if p.nvars != ring.nvars:
        raise ValueError("variable count mismatch")
    if p.is_zero:
        return LatticeVector([0] * ring.grading_rank)
    degs = {degree_of_monomial(ring, e) for e, _c in p.terms}
    if len(degs) == 1:
        return next(iter(degs))
    return None


def monomials_of_degree(
    ring: GradedRing, target: LatticeVector | Sequence[int]
) -> list[tuple[int, ...]]:
    """All exponent vectors of multidegree ``target``, in lexicographic order."""
    t = tuple(int(x) for x in target)
    if len(t) != ring.grading_rank:
        raise ValueError("target rank mismatch")
    return ring._get_enumerator().enumerate(t)


def hilbert_hypersurface(
    ring: GradedRing,
    target: LatticeVector | Sequence[int],
    relation_degree: LatticeVector | Sequence[int] | None = None,
) -> int:
    """Dimension of the graded piece of the one-relation quotient ring.

    Counts monomials of degree ``target`` minus monomials of degree
    ``target - relation_degree``; valid when the relation is a
    nonzerodivisor (true for the irreducible fixture relations).
    """
    if len(ring.relations) != 1:
        raise ValueError("ring must carry exactly one relation")
    rel = ring.relation_degrees[0]
    if relation_degree is not None:
        given = LatticeVector(int(x) for x in relation_degree)
        if given != rel:
            raise ValueError("relation degree does not match the ring relation")
    t = tuple(int(x) for x in target)
    shifted = tuple(a - b for a, b in zip(t, rel))
    count = len(monomials_of_degree(ring, t))
    return count - len(monomials_of_degree(ring, shifted))


def divides_all(
    ring: GradedRing, variable: str | int, target: LatticeVector | Sequence[int]
) -> bool:
    """Whether the variable divides every monomial of the given degree.

    True exactly when the variable's divisor is a fixed component of that
    degree; false when the degree has no monomials at all.
    """
    idx = variable if isinstance(variable, int) else ring.variable_index(variable)
    monos = monomials_of_degree(ring, target)
    if not monos:
        return False
    return all(m[idx] > 0 for m in monos)


def ring_from_json(data: Mapping) -> GradedRing:
    """Read a ring fixture: {variables: [{name, degree}], relations: [...]}."""
    try:
        variables = [
            (v["name"], LatticeVector(int(x) for x in v["degree"]))
            for v in data["variables"]
        ]
        nvars = len(variables)
        relations = [Polynomial.from_json(nvars, r) for r in data.get("relations", [])]
    except (KeyError, TypeError) as exc:
        raise FixtureError(f"malformed ring fixture: {exc}") from exc
    return GradedRing(variables, relations)

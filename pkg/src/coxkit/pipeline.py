"""End-to-end verification of the shipped surface bundles.

A bundle couples a surface (Picard lattice plus effective generators), the
graded coordinate ring of its universal torsor embedding, the matching
character data for the torus action, and a table of expected identities.
``verify_e6`` / ``verify_d4`` run every identity through the library and
emit an exhaustive, deterministic report; nothing is skipped silently and
no check raises (errors mark the check failed with a note).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Mapping, Sequence

from . import rings as rings_mod
from .cones import Cone, Certificate, membership_certificate
from .errors import CoxkitError, FixtureError
from .linalg import LatticeVector, QMatrix, invert, lattices_equal, smith_normal_form
from .rings import GradedRing, Polynomial, hilbert_hypersurface, is_homogeneous, substitute
from .surfaces import (
    SurfaceModel,
    anticanonical_solve,
    euler_characteristic,
    nef_cone,
    pair,
    surface_from_json,
)
from .toric import CharacterData, character_data_from_json

__all__ = [
    "CheckResult",
    "VerificationReport",
    "FixtureBundle",
    "load_bundle",
    "verify_e6",
    "verify_d4",
    "verify",
    "hilbert_sweep",
]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    computed: str
    expected: str
    note: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "FAIL"


@dataclass(frozen=True)
class VerificationReport:
    title: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed_checks(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_text(self) -> str:
        lines = [f"verification report: {self.title}"]
        for c in self.checks:
            lines.append(f"[{c.status}] {c.name}")
            if not c.passed:
                lines.append(f"       computed: {c.computed}")
                lines.append(f"       expected: {c.expected}")
            if c.note:
                lines.append(f"       note: {c.note}")
        good = sum(1 for c in self.checks if c.passed)
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"result: {verdict} ({good}/{len(self.checks)} checks)")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "title": self.title,
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "computed": c.computed,
                    "expected": c.expected,
                    "note": c.note,
                }
                for c in self.checks
            ],
        }


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(int(x)) for x in v) + ")"


def _fmt_vecs(vs) -> str:
    return "{" + "; ".join(_fmt_vec(v) for v in sorted(tuple(x) for x in vs)) + "}"


class FixtureBundle:
    """Raw bundle data with lazily constructed library objects."""

    def __init__(self, raw: Mapping):
        self.raw = raw
        self.name = raw.get("name", "bundle")
        self._surface: SurfaceModel | None = None
        self._ring: GradedRing | None = None
        self._base_ring: GradedRing | None = None
        self._characters: CharacterData | None = None

    @property
    def identities(self) -> Mapping:
        return self.raw["identities"]

    def surface(self) -> SurfaceModel:
        if self._surface is None:
            self._surface = surface_from_json(self.raw["surface"])
        return self._surface

    def ring(self) -> GradedRing:
        """The graded ring including its relations."""
        if self._ring is None:
            self._ring = rings_mod.ring_from_json(self.raw["ring"])
        return self._ring

    def base_ring(self) -> GradedRing:
        """The same variables with no relations; usable even when a corrupted
        relation would fail the homogeneity invariant."""
        if self._base_ring is None:
            data = dict(self.raw["ring"])
            data = {**data, "relations": []}
            self._base_ring = rings_mod.ring_from_json(data)
        return self._base_ring

    def relation_polynomials(self) -> list[Polynomial]:
        nvars = len(self.raw["ring"]["variables"])
        return [
            Polynomial.from_json(nvars, r)
            for r in self.raw["ring"].get("relations", [])
        ]

    def characters(self) -> CharacterData:
        if self._characters is None:
            self._characters = character_data_from_json(self.raw["characters"])
        return self._characters


def load_bundle(source: str | Mapping) -> FixtureBundle:
    """Load a bundle from a packaged name ('e6', 'd4'), a path, or raw data."""
    if isinstance(source, Mapping):
        return FixtureBundle(source)
    if source in ("e6", "d4"):
        text = resources.files("coxkit.fixtures").joinpath(f"{source}.json").read_text()
        return FixtureBundle(json.loads(text))
    with open(source) as fh:
        return FixtureBundle(json.load(fh))


class _Runner:
    def __init__(self, identities: Mapping):
        self.checks: list[CheckResult] = []
        self.keys = set(identities.keys())
        self.consumed: set[str] = set()

    def run(
        self,
        name: str,
        fn: Callable[[], tuple[bool, str, str, str]],
        consumes: Sequence[str] = (),
    ) -> None:
        self.consumed.update(consumes)
        try:
            passed, computed, expected, note = fn()
        except Exception as exc:  # error-free reporting: failures, not raises
            passed, computed, expected, note = (
                False,
                f"error: {type(exc).__name__}: {exc}",
                "a computed value",
                "",
            )
        self.checks.append(CheckResult(name, passed, computed, expected, note))

    def finish(self, title: str) -> VerificationReport:
        missing = sorted(self.keys - self.consumed)
        extra = sorted(self.consumed - self.keys)
        ok = not missing and not extra
        self.checks.append(
            CheckResult(
                "identities-exhausted",
                ok,
                f"unconsumed={missing} unknown={extra}",
                "every fixture identity backs exactly one check",
            )
        )
        return VerificationReport(title, tuple(self.checks))


def _class_of(identities: Mapping, table: str, name: str) -> LatticeVector:
    return LatticeVector(int(x) for x in identities[table][name])


def _sweep_counts(
    ring: GradedRing, surface: SurfaceModel, thetas: Sequence[tuple[int, ...]]
) -> list[tuple[tuple[int, ...], int, int]]:
    """(theta, quotient dimension, Euler characteristic) per degree, memoized."""
    rel = ring.relation_degrees[0]
    memo: dict[tuple[int, ...], int] = {}

    def count(t: tuple[int, ...]) -> int:
        if t not in memo:
            memo[t] = len(rings_mod.monomials_of_degree(ring, t))
        return memo[t]

    out = []
    for theta in thetas:
        shifted = tuple(a - b for a, b in zip(theta, rel))
        hil = count(theta) - count(shifted)
        chi = euler_characteristic(surface.lattice, theta)
        out.append((theta, hil, chi))
    return out


def hilbert_sweep(
    bundle: FixtureBundle, degrees: Sequence[Sequence[int]]
) -> VerificationReport:
    """Check quotient dimension = Euler characteristic over a degree list."""
    runner = _Runner({})
    ring = bundle.ring()
    surface = bundle.surface()
    rows = _sweep_counts(ring, surface, [tuple(int(x) for x in d) for d in degrees])
    bad = [(t, h, c) for t, h, c in rows if h != c]
    for t, h, c in bad:
        runner.checks.append(
            CheckResult(
                f"hilbert-chi {_fmt_vec(t)}",
                False,
                f"dimension {h}",
                f"chi {c}",
            )
        )
    runner.checks.append(
        CheckResult(
            "hilbert-chi-sweep",
            not bad,
            f"{len(rows) - len(bad)}/{len(rows)} degrees agree",
            f"{len(rows)}/{len(rows)} degrees agree",
        )
    )
    return VerificationReport(f"{bundle.name} hilbert sweep", tuple(runner.checks))


def _check_gram(bundle: FixtureBundle) -> tuple[bool, str, str, str]:
    surface = bundle.surface()
    lat = surface.lattice
    from .linalg import determinant

    det = determinant(lat.gram)
    ok = lat.gram.is_symmetric and abs(det) == 1
    return (
        ok,
        f"symmetric={lat.gram.is_symmetric} det={det}",
        "symmetric=True |det|=1",
        "",
    )


def _check_ring_characters(bundle: FixtureBundle) -> tuple[bool, str, str, str]:
    ring = bundle.base_ring()
    chars = bundle.characters()
    ring_cols = [(n, d.entries) for n, d in ring.variables]
    char_cols = [(n, v.entries) for n, v in chars.columns]
    return (
        ring_cols == char_cols,
        f"{len(ring_cols)} ring variables",
        "ring variable degrees equal character columns",
        "",
    )


def _check_parametrization(identities: Mapping) -> tuple[bool, str, str, str]:
    data = identities["parametrization"]
    nv = len(data["variables"])
    np_ = len(data["parameters"])
    p = Polynomial.from_json(nv, data["polynomial"])
    images = [Polynomial.from_json(np_, data["images"][v]) for v in data["variables"]]
    out = substitute(p, images)
    return (
        out.is_zero,
        "zero polynomial" if out.is_zero else f"{len(out.terms)} residual terms",
        "zero polynomial",
        "the parametrization lands on the surface",
    )


def _check_notes(identities: Mapping) -> tuple[bool, str, str, str]:
    notes = identities["notes"]
    joined = " | ".join(f"{k}: {v}" for k, v in sorted(notes.items()))
    return True, f"{len(notes)} documentation notes", "recorded, not computed", joined


def _nef_class_table(identities: Mapping, key: str) -> dict[str, LatticeVector]:
    return {
        name: LatticeVector(int(x) for x in vec)
        for name, vec in identities[key].items()
    }


def verify_e6(
    source: str | Mapping | FixtureBundle, sweep_bound: int | None = None
) -> VerificationReport:
    """Run every identity of the E6 bundle; see the module docstring."""
    bundle = source if isinstance(source, FixtureBundle) else load_bundle(source)
    ids = bundle.identities
    if sweep_bound is None:
        sweep_bound = int(ids.get("hilbert_sweep", {}).get("max_coefficient", 2))
    r = _Runner(ids)

    r.run("ring-matches-characters", lambda: _check_ring_characters(bundle))
    r.run("gram-consistency", lambda: _check_gram(bundle))

    def inverse_gram():
        lat = bundle.surface().lattice
        expected = QMatrix.from_json(ids["expected_inverse_gram"])
        got = invert(lat.gram)
        diffs = [
            (i, j)
            for i in range(got.rows)
            for j in range(got.cols)
            if got.entry(i, j) != expected.entry(i, j)
        ]
        nefs = _nef_class_table(ids, "nef_rays")
        p = QMatrix.from_columns([list(v) for v in nefs.values()])
        pairing_in_nef_basis = p.transpose() @ lat.gram @ p
        agree = not diffs and pairing_in_nef_basis == expected
        note = f"first differing entries: {diffs[:3]}" if diffs else ""
        return (
            agree,
            "inverse equals the expected pairing table" if agree else f"{len(diffs)} entries differ",
            "exact entrywise equality",
            note,
        )

    r.run("inverse-gram", inverse_gram, consumes=["expected_inverse_gram", "nef_rays"])

    def nef_rays():
        got = nef_cone(bundle.surface())
        expected = {v.entries for v in _nef_class_table(ids, "nef_rays").values()}
        have = {v.entries for v in got.rays}
        return (
            have == expected and got.simplicial,
            f"{len(have)} rays, simplicial={got.simplicial}",
            f"{len(expected)} named rays, simplicial=True",
            "" if have == expected else f"diff={_fmt_vecs(have ^ expected)}",
        )

    r.run("nef-cone-rays", nef_rays, consumes=["nef_rays"])

    def anticanonical():
        surface = bundle.surface()
        lat = surface.lattice
        conds = []
        for row in ids["adjunction_curves"]:
            c = LatticeVector(int(x) for x in row["class"])
            conds.append((c, 2 * int(row["genus"]) - 2 - pair(lat, c, c)))
        k = anticanonical_solve(lat, conds)
        minus_k = LatticeVector(int(x) for x in ids["anticanonical_class"])
        ok = k == -minus_k and lat.canonical_class == k
        return (
            ok,
            f"K = {_fmt_vec(k)}",
            f"K = -{_fmt_vec(minus_k)}",
            "adjunction values derived from genus 0 and self-intersections",
        )

    r.run(
        "anticanonical",
        anticanonical,
        consumes=["adjunction_curves", "anticanonical_class"],
    )

    def chi_table():
        lat = bundle.surface().lattice
        nefs = _nef_class_table(ids, "nef_rays")
        rows = {n: euler_characteristic(lat, nefs[n]) for n in ids["chi_table"]}
        want = {n: int(v) for n, v in ids["chi_table"].items()}
        return (
            rows == want,
            str(rows),
            str(want),
            "",
        )

    r.run("chi-table", chi_table, consumes=["chi_table", "nef_rays"])

    def section_monomials():
        ring = bundle.base_ring()
        nefs = _nef_class_table(ids, "nef_rays")
        bad = []
        for name, rows in ids["section_monomials"].items():
            got = rings_mod.monomials_of_degree(ring, nefs[name])
            want = sorted(tuple(int(x) for x in row) for row in rows)
            if got != want:
                bad.append(name)
        counts = {
            n: len(ids["section_monomials"][n]) for n in ids["section_monomials"]
        }
        return (
            not bad,
            "all monomial lists match" if not bad else f"mismatch at {bad}",
            f"counts {counts}",
            "",
        )

    r.run("section-monomials", section_monomials, consumes=["section_monomials", "nef_rays"])

    def hilbert_table():
        ring = bundle.ring()
        nefs = _nef_class_table(ids, "nef_rays")
        rows = {
            n: hilbert_hypersurface(ring, nefs[n]) for n in ids["hilbert_table"]
        }
        want = {n: int(v) for n, v in ids["hilbert_table"].items()}
        return rows == want, str(rows), str(want), "one relation in the sextic degree"

    r.run("hilbert-table", hilbert_table, consumes=["hilbert_table", "nef_rays"])

    def relation_homogeneity():
        ring = bundle.base_ring()
        rels = bundle.relation_polynomials()
        if len(rels) != 1:
            return False, f"{len(rels)} relations", "exactly one relation", ""
        deg = is_homogeneous(ring, rels[0])
        want = _class_of(ids, "nef_rays", ids["relation_degree"])
        if deg is None:
            degs = sorted(
                {rings_mod.degree_of_monomial(ring, e).entries for e, _c in rels[0].terms}
            )
            return (
                False,
                f"inhomogeneous, term degrees {degs}",
                f"homogeneous of degree {_fmt_vec(want)}",
                "",
            )
        return (
            deg == want,
            f"degree {_fmt_vec(deg)}",
            f"degree {_fmt_vec(want)} ({ids['relation_degree']})",
            "",
        )

    r.run(
        "relation-homogeneity",
        relation_homogeneity,
        consumes=["relation_degree", "nef_rays"],
    )

    def cubic_restriction():
        data = ids["cubic_sections"]
        ring = bundle.base_ring()
        rels = bundle.relation_polynomials()
        cubic = Polynomial.from_json(len(data["variables"]), data["polynomial"])
        images = [
            Polynomial.monomial([int(x) for x in data["sections"][v]])
            for v in data["variables"]
        ]
        pulled = substitute(cubic, images)
        if pulled.is_zero or len(rels) != 1:
            return False, "degenerate pullback", "cubic pulls back to the relation", ""
        common = [
            min(e[i] for e, _c in pulled.terms) for i in range(ring.nvars)
        ]
        stripped = Polynomial(
            ring.nvars,
            [
                (tuple(a - b for a, b in zip(e, common)), c)
                for e, c in pulled.terms
            ],
        )
        ok = stripped == rels[0]
        return (
            ok,
            "pullback = monomial * relation" if ok else "pullback differs from the relation",
            "exact equality after stripping the common monomial factor",
            f"common factor exponents {tuple(common)}",
        )

    r.run("cubic-restriction", cubic_restriction, consumes=["cubic_sections"])

    r.run(
        "parametrization-vanishes",
        lambda: _check_parametrization(ids),
        consumes=["parametrization"],
    )

    def one_skeleton():
        chars = bundle.characters()
        from .linalg import kernel_basis

        kernel_rows = [k.entries for k in kernel_basis(chars.chi)]
        paper_rows = [tuple(int(x) for x in row) for row in ids["one_skeleton_rows"]]
        same_lattice = lattices_equal(kernel_rows, paper_rows)
        dependences = all(
            all(x == 0 for x in chars.chi.mul_vector(list(row))) for row in paper_rows
        )
        violations = chars.skeleton_violations()
        ok = same_lattice and dependences and not violations
        return (
            ok,
            f"lattice_equal={same_lattice} rows_are_dependences={dependences} violations={violations}",
            "kernel lattice equals the listed row lattice; rows are dependence relations",
            "",
        )

    r.run("one-skeleton", one_skeleton, consumes=["one_skeleton_rows"])

    def moving_cone():
        chars = bundle.characters()
        nefs = _nef_class_table(ids, "nef_rays")
        expected = {nefs[n].entries for n in ids["moving_cone_rays"]}
        got = {v.entries for v in chars.moving_cone().rays}
        return (
            got == expected,
            f"{len(got)} rays",
            f"rays named {list(ids['moving_cone_rays'])}",
            "" if got == expected else f"diff={_fmt_vecs(got ^ expected)}",
        )

    r.run("moving-cone", moving_cone, consumes=["moving_cone_rays", "nef_rays"])

    def projectivity():
        got = bundle.characters().is_projective()
        want = bool(ids["projective"])
        return got == want, str(got), str(want), "0 avoids the convex hull of the degrees"

    r.run("projectivity", projectivity, consumes=["projective"])

    def toric_anticanonical():
        chars = bundle.characters()
        total = [0] * chars.grading_rank
        for _n, v in chars.columns:
            total = [a + b for a, b in zip(total, v)]
        nefs = _nef_class_table(ids, "nef_rays")
        want = [0] * chars.grading_rank
        for n in ids["toric_anticanonical_sum"]:
            want = [a + b for a, b in zip(want, nefs[n])]
        return (
            total == want,
            _fmt_vec(total),
            f"{' + '.join(ids['toric_anticanonical_sum'])} = {_fmt_vec(want)}",
            "sum of all torus-invariant divisor classes",
        )

    r.run(
        "toric-anticanonical-sum",
        toric_anticanonical,
        consumes=["toric_anticanonical_sum", "nef_rays"],
    )

    def sweep():
        ring = bundle.ring()
        surface = bundle.surface()
        nefs = _nef_class_table(ids, "nef_rays")
        gens = [nefs[n].entries for n in ids["hilbert_sweep"]["generators"]]
        bound = sweep_bound
        thetas = []
        for coeffs in itertools.product(range(bound + 1), repeat=len(gens)):
            thetas.append(
                tuple(
                    sum(c * g[i] for c, g in zip(coeffs, gens))
                    for i in range(len(gens[0]))
                )
            )
        thetas = sorted(set(thetas))
        rows = _sweep_counts(ring, surface, thetas)
        bad = [(t, h, c) for t, h, c in rows if h != c]
        return (
            not bad,
            f"{len(rows) - len(bad)}/{len(rows)} degrees agree",
            f"{len(rows)}/{len(rows)} degrees agree (coefficients 0..{bound})",
            "" if not bad else f"first mismatch {bad[0]}",
        )

    r.run("hilbert-chi-sweep", sweep, consumes=["hilbert_sweep", "nef_rays"])

    r.run("documentation-notes", lambda: _check_notes(ids), consumes=["notes"])
    return r.finish(f"e6 (sweep bound {sweep_bound})")


def verify_d4(
    source: str | Mapping | FixtureBundle, sweep_total: int | None = None
) -> VerificationReport:
    """Run every identity of the D4 bundle; see the module docstring."""
    bundle = source if isinstance(source, FixtureBundle) else load_bundle(source)
    ids = bundle.identities
    if sweep_total is None:
        sweep_total = int(ids.get("hilbert_sweep", {}).get("max_total", 3))
    r = _Runner(ids)

    r.run("ring-matches-characters", lambda: _check_ring_characters(bundle))
    r.run("gram-consistency", lambda: _check_gram(bundle))

    def unimodularity():
        lat = bundle.surface().lattice
        _u, d, _v = smith_normal_form(lat.gram)
        diag = [int(d.entry(i, i)) for i in range(d.rows)]
        ok = all(x == 1 for x in diag) and bool(ids["unimodular"])
        return (
            ok,
            f"smith diagonal {diag}",
            "all invariant factors 1 (unimodular)",
            "",
        )

    r.run("snf-unimodularity", unimodularity, consumes=["unimodular"])

    def anticanonical():
        surface = bundle.surface()
        lat = surface.lattice
        conds = []
        for row in ids["adjunction_curves"]:
            c = LatticeVector(int(x) for x in row["class"])
            conds.append((c, 2 * int(row["genus"]) - 2 - pair(lat, c, c)))
        k = anticanonical_solve(lat, conds)
        minus_k = LatticeVector(int(x) for x in ids["anticanonical_class"])
        total = LatticeVector([0] * lat.rank)
        for name in ids["anticanonical_sum"]:
            total = total + surface.generator(name)
        ok = k == -minus_k and total == minus_k and lat.canonical_class == k
        return (
            ok,
            f"K = {_fmt_vec(k)}, line sum = {_fmt_vec(total)}",
            f"-K = {_fmt_vec(minus_k)} = {' + '.join(ids['anticanonical_sum'])}",
            "",
        )

    r.run(
        "anticanonical",
        anticanonical,
        consumes=["adjunction_curves", "anticanonical_class", "anticanonical_sum"],
    )

    def effective_extremality():
        surface = bundle.surface()
        cone = surface.effective_cone()
        want = {v.entries for _n, v in surface.effective_generators}
        got = {v.entries for v in cone.rays}
        count = int(ids["effective_ray_count"])
        ok = got == want and len(got) == count and not cone.simplicial
        return (
            ok,
            f"{len(got)} extreme rays, simplicial={cone.simplicial}",
            f"{count} extreme rays (every generator extreme), non-simplicial",
            "",
        )

    r.run("effective-cone", effective_extremality, consumes=["effective_ray_count"])

    def dual_rays():
        got = {v.entries for v in nef_cone(bundle.surface()).rays}
        table = _nef_class_table(ids, "dual_cone_rays")
        want = {v.entries for v in table.values()}
        return (
            got == want,
            f"{len(got)} rays",
            f"{len(want)} named dual generators",
            "" if got == want else f"diff={_fmt_vecs(got ^ want)}",
        )

    r.run("dual-cone-rays", dual_rays, consumes=["dual_cone_rays"])

    def certificate_table():
        surface = bundle.surface()
        cone = surface.effective_cone()
        table = _nef_class_table(ids, "dual_cone_rays")
        bad = []
        for name, vec in table.items():
            stated = ids["certificates"][name]
            acc = LatticeVector([0] * surface.lattice.rank)
            for gen_name, coeff in stated.items():
                acc = acc + int(coeff) * surface.generator(gen_name)
            if acc != vec:
                bad.append(f"{name}: stated row sums to {_fmt_vec(acc)}")
                continue
            got = membership_certificate(cone, vec)
            if not isinstance(got, Certificate):
                bad.append(f"{name}: membership certificate refused")
        return (
            not bad,
            "all table rows verified" if not bad else "; ".join(bad[:3]),
            f"{len(table)} stated nonnegative combinations reproduce the rays, "
            "and the LP certifies membership",
            "",
        )

    r.run("certificate-table", certificate_table, consumes=["certificates", "dual_cone_rays"])

    def relation_homogeneity():
        ring = bundle.base_ring()
        rels = bundle.relation_polynomials()
        if len(rels) != 1:
            return False, f"{len(rels)} relations", "exactly one relation", ""
        deg = is_homogeneous(ring, rels[0])
        want = _class_of(ids, "dual_cone_rays", ids["relation_degree"])
        if deg is None:
            degs = sorted(
                {rings_mod.degree_of_monomial(ring, e).entries for e, _c in rels[0].terms}
            )
            return (
                False,
                f"inhomogeneous, term degrees {degs}",
                f"homogeneous of degree {_fmt_vec(want)}",
                "",
            )
        return (
            deg == want,
            f"degree {_fmt_vec(deg)}",
            f"degree {_fmt_vec(want)} ({ids['relation_degree']})",
            "all four terms have the hyperplane degree",
        )

    r.run(
        "relation-homogeneity",
        relation_homogeneity,
        consumes=["relation_degree", "dual_cone_rays"],
    )

    def chart_identification():
        rels = bundle.relation_polynomials()
        if len(rels) != 1:
            return False, f"{len(rels)} relations", "exactly one relation", ""
        images = {
            tuple(int(x) for x in row["exponents"]): row["image"]
            for row in ids["chart_images"]
        }
        nparams = len(ids["parametrization"]["parameters"])
        acc = Polynomial.zero(nparams)
        missing = []
        for exps, coeff in rels[0].terms:
            if exps not in images:
                missing.append(exps)
                continue
            acc = acc + coeff * Polynomial.from_json(nparams, images[exps])
        ok = not missing and acc.is_zero
        return (
            ok,
            "term images sum to zero" if ok else f"missing={missing} residual terms={len(acc.terms)}",
            "the relation is the stated dependence among the hyperplane sections",
            "",
        )

    r.run("chart-identification", chart_identification, consumes=["chart_images", "parametrization"])

    r.run(
        "parametrization-vanishes",
        lambda: _check_parametrization(ids),
        consumes=["parametrization"],
    )

    def projectivity():
        got = bundle.characters().is_projective()
        want = bool(ids["projective"])
        return got == want, str(got), str(want), "0 avoids the convex hull of the degrees"

    r.run("projectivity", projectivity, consumes=["projective"])

    def column_sum():
        chars = bundle.characters()
        total = [0] * chars.grading_rank
        for _n, v in chars.columns:
            total = [a + b for a, b in zip(total, v)]
        want = [int(x) for x in ids["column_sum"]]
        rel_deg = _class_of(ids, "dual_cone_rays", ids["relation_degree"])
        minus_k = LatticeVector(int(x) for x in ids["anticanonical_class"])
        book = [a + b for a, b in zip(rel_deg, minus_k)]
        ok = total == want and book == want
        return (
            ok,
            _fmt_vec(total),
            f"{_fmt_vec(want)} (= relation degree + anticanonical class)",
            "sum of all torus-invariant divisor classes",
        )

    r.run(
        "column-sum",
        column_sum,
        consumes=["column_sum", "dual_cone_rays", "relation_degree", "anticanonical_class"],
    )

    def sweep():
        ring = bundle.ring()
        surface = bundle.surface()
        table = _nef_class_table(ids, "dual_cone_rays")
        gens = [v.entries for v in table.values()]
        rank = surface.lattice.rank
        thetas = {(0,) * rank}
        for size in range(1, sweep_total + 1):
            for combo in itertools.combinations_with_replacement(range(len(gens)), size):
                thetas.add(
                    tuple(
                        sum(gens[i][k] for i in combo) for k in range(rank)
                    )
                )
        rows = _sweep_counts(ring, surface, sorted(thetas))
        bad = [(t, h, c) for t, h, c in rows if h != c]
        return (
            not bad,
            f"{len(rows) - len(bad)}/{len(rows)} degrees agree",
            f"{len(rows)}/{len(rows)} degrees agree (coefficient sum <= {sweep_total})",
            "" if not bad else f"first mismatch {bad[0]}",
        )

    r.run("hilbert-chi-sweep", sweep, consumes=["hilbert_sweep", "dual_cone_rays"])

    r.run("documentation-notes", lambda: _check_notes(ids), consumes=["notes"])
    return r.finish(f"d4 (sweep total {sweep_total})")


def verify(name: str, source: str | Mapping | FixtureBundle | None = None, **kw) -> VerificationReport:
    """Dispatch to the named verifier, defaulting to the shipped fixture."""
    if name == "e6":
        return verify_e6(source if source is not None else "e6", **kw)
    if name == "d4":
        return verify_d4(source if source is not None else "d4", **kw)
    raise CoxkitError(f"unknown bundle {name!r}")

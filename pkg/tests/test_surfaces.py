import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxkit.errors import (
    DegenerateLattice,
    NonIntegralChi,
    NotEffective,
    NotUnimodular,
    UnderdeterminedSystem,
)
from coxkit.linalg import LatticeVector, QMatrix
from coxkit.surfaces import (
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
from oracles import random_unimodular

A = {
    "A1": (0, 1, 1, 2, 2, 2, 2),
    "A2": (1, 1, 2, 3, 3, 3, 3),
    "A3": (1, 2, 2, 4, 4, 4, 4),
    "Al": (2, 3, 4, 3, 4, 5, 6),
    "A4": (2, 3, 4, 4, 4, 5, 6),
    "A5": (2, 3, 4, 5, 5, 5, 6),
    "A6": (2, 3, 4, 6, 6, 6, 6),
}
A_ORDER = ["A1", "A2", "A3", "Al", "A4", "A5", "A6"]


@pytest.fixture(scope="module")
def e6_surface():
    from coxkit.pipeline import load_bundle

    return load_bundle("e6").surface()


@pytest.fixture(scope="module")
def d4_surface():
    from coxkit.pipeline import load_bundle

    return load_bundle("d4").surface()


class TestPair:
    def test_e6_values(self, e6_surface):
        lat = e6_surface.lattice
        assert pair(lat, A["A1"], A["A1"]) == 0
        assert pair(lat, A["Al"], A["Al"]) == 3
        f1 = (1, 0, 0, 0, 0, 0, 0)
        ell = (0, 0, 0, 1, 0, 0, 0)
        assert pair(lat, f1, f1) == -2
        assert pair(lat, ell, ell) == -1
        assert pair(lat, A["A1"], (0,) * 7) == 0

    def test_duality_of_bases(self, e6_surface):
        lat = e6_surface.lattice
        units = [tuple(1 if j == i else 0 for j in range(7)) for i in range(7)]
        for i, name in enumerate(A_ORDER):
            for j, u in enumerate(units):
                assert pair(lat, A[name], u) == (1 if i == j else 0)


class TestEulerCharacteristic:
    def test_e6_table(self, e6_surface):
        lat = e6_surface.lattice
        expected = {"A1": 2, "A2": 3, "A3": 4, "Al": 4, "A4": 5, "A5": 6, "A6": 7}
        for name, chi in expected.items():
            assert euler_characteristic(lat, A[name]) == chi

    def test_structure_sheaf(self, e6_surface):
        assert euler_characteristic(e6_surface.lattice, (0,) * 7) == 1

    def test_double_anticanonical(self, e6_surface):
        assert euler_characteristic(
            e6_surface.lattice, tuple(2 * x for x in A["Al"])
        ) == 10

    def test_non_integral_chi_detected(self):
        # odd pairing parity: d.d - d.K odd
        lat = IntersectionLattice(
            ["a"], QMatrix([[1]]), canonical_class=LatticeVector([0])
        )
        with pytest.raises(NonIntegralChi):
            euler_characteristic(lat, (1,))

    def test_anticanonical_translate_is_linear(self, e6_surface):
        # chi(d) - chi(d + K) = -d.K exactly
        lat = e6_surface.lattice
        k = lat.canonical_class
        rng = random.Random(11)
        for _ in range(50):
            coeffs = [rng.randint(0, 3) for _ in range(7)]
            d = LatticeVector(
                tuple(
                    sum(c * A[n][i] for c, n in zip(coeffs, A_ORDER))
                    for i in range(7)
                )
            )
            assert euler_characteristic(lat, d) - euler_characteristic(lat, d + k) == -pair(
                lat, d, k
            )


class TestAnticanonicalSolve:
    def test_e6(self, e6_surface):
        lat = e6_surface.lattice
        units = [tuple(1 if j == i else 0 for j in range(7)) for i in range(7)]
        conds = [(units[i], 0) for i in range(7)]
        conds[3] = (units[3], -1)  # the line
        k = anticanonical_solve(lat, conds)
        assert k.entries == tuple(-x for x in A["Al"])

    def test_d4(self, d4_surface):
        lat = d4_surface.lattice
        units = [tuple(1 if j == i else 0 for j in range(7)) for i in range(7)]
        conds = [(units[0], -3)]
        conds += [(units[i], 0) for i in (1, 2, 3)]
        conds += [(units[i], -1) for i in (4, 5, 6)]
        k = anticanonical_solve(lat, conds)
        assert k.entries == (-3, 1, 1, 1, 2, 2, 2)
        minus_k = -k
        lsum = [0] * 7
        for name in ("l1", "l2", "l3"):
            lsum = [a + b for a, b in zip(lsum, d4_surface.generator(name))]
        assert list(minus_k.entries) == lsum

    def test_rank_one(self):
        lat = IntersectionLattice(["e"], QMatrix([[-1]]))
        k = anticanonical_solve(lat, [((1,), 1)])
        assert k.entries == (-1,)

    def test_wrong_condition_count(self, e6_surface):
        with pytest.raises(UnderdeterminedSystem):
            anticanonical_solve(e6_surface.lattice, [((1, 0, 0, 0, 0, 0, 0), 0)])

    def test_degenerate_conditions(self, e6_surface):
        same = ((1, 0, 0, 0, 0, 0, 0), 0)
        with pytest.raises(UnderdeterminedSystem):
            anticanonical_solve(e6_surface.lattice, [same] * 7)


class TestNefCone:
    def test_e6_rays_are_the_dual_basis(self, e6_surface):
        cone = nef_cone(e6_surface)
        assert sorted(r.entries for r in cone.rays) == sorted(A.values())
        assert cone.simplicial

    def test_d4_sixteen_rays(self, d4_surface):
        cone = nef_cone(d4_surface)
        assert len(cone.rays) == 16
        assert not cone.simplicial

    def test_identity_pairing_orthant(self):
        lat = IntersectionLattice(["x", "y"], QMatrix.identity(2))
        surf = SurfaceModel(
            lat,
            [("x", LatticeVector([1, 0])), ("y", LatticeVector([0, 1]))],
            negative_curves=[],
        )
        cone = nef_cone(surf)
        assert sorted(r.entries for r in cone.rays) == [(0, 1), (1, 0)]

    def test_duality_both_directions(self, e6_surface, d4_surface):
        for surf in (e6_surface, d4_surface):
            cone = nef_cone(surf)
            for _n, g in surf.effective_generators:
                for r in cone.rays:
                    assert pair(surf.lattice, g, r) >= 0


class TestDecomposeFixedMoving:
    def test_negative_curve_forced_into_fixed_part(self, e6_surface):
        d = LatticeVector(A["A1"]) + e6_surface.generator("F1")
        moving, fixed = decompose_fixed_moving(e6_surface, d)
        assert moving.entries == A["A1"]
        assert fixed == {"F1": 1}

    def test_nef_input_has_no_fixed_part(self, e6_surface):
        moving, fixed = decompose_fixed_moving(e6_surface, A["Al"])
        assert moving.entries == A["Al"] and fixed == {}

    def test_line_multiples(self, e6_surface):
        d = LatticeVector(tuple(2 * x for x in A["Al"])) + 3 * e6_surface.generator("ell")
        moving, fixed = decompose_fixed_moving(e6_surface, d)
        assert moving.entries == tuple(2 * x for x in A["A4"])
        assert fixed == {"ell": 1}
        assert in_nef_monoid(e6_surface, moving)

    def test_not_effective_rejected(self, e6_surface):
        with pytest.raises(NotEffective):
            decompose_fixed_moving(e6_surface, (-1, 0, 0, 0, 0, 0, 0))

    def test_scan_order_independence(self, e6_surface, d4_surface):
        rng = random.Random(23)
        cases = [
            (e6_surface, LatticeVector(A["A1"]) + e6_surface.generator("F1")),
            (
                e6_surface,
                LatticeVector(tuple(2 * x for x in A["Al"]))
                + 3 * e6_surface.generator("ell"),
            ),
            (
                e6_surface,
                LatticeVector(A["A6"])
                + 2 * e6_surface.generator("F2")
                + e6_surface.generator("ell"),
            ),
            (
                d4_surface,
                LatticeVector((1, 0, 0, 0, 0, 0, 0)) + 2 * d4_surface.generator("m1"),
            ),
        ]
        for surf, d in cases:
            base = decompose_fixed_moving(surf, d)
            for _ in range(50):
                order = list(surf.negative_curves)
                rng.shuffle(order)
                assert decompose_fixed_moving(surf, d, scan_order=order) == base

    def test_decomposition_reassembles(self, e6_surface):
        rng = random.Random(3)
        gens = dict(e6_surface.effective_generators)
        for _ in range(25):
            d = LatticeVector((0,) * 7)
            for name in gens:
                d = d + rng.randint(0, 3) * gens[name]
            moving, fixed = decompose_fixed_moving(e6_surface, d)
            total = moving
            for name, k in fixed.items():
                total = total + k * gens[name]
            assert total == d
            for name, g in e6_surface.effective_generators:
                assert pair(e6_surface.lattice, moving, g) >= 0


class TestRegrade:
    def test_identity(self, e6_surface):
        lat = e6_surface.lattice
        out = regrade(lat, QMatrix.identity(7))
        assert out.gram == lat.gram and out.canonical_class == lat.canonical_class

    def test_e6_to_nef_basis(self, e6_surface):
        lat = e6_surface.lattice
        p = QMatrix.from_columns([list(A[n]) for n in A_ORDER])
        out = regrade(lat, p, new_labels=A_ORDER)
        expected = QMatrix([list(A[n]) for n in A_ORDER])  # symmetric table
        assert out.gram == expected
        assert out.canonical_class.entries == (0, 0, 0, -1, 0, 0, 0)

    def test_permutation_keeps_determinant(self, e6_surface):
        from coxkit.linalg import determinant

        lat = e6_surface.lattice
        perm = [[0] * 7 for _ in range(7)]
        order = [1, 0, 2, 3, 4, 5, 6]
        for i, j in enumerate(order):
            perm[j][i] = 1
        out = regrade(lat, QMatrix(perm))
        assert determinant(out.gram) == determinant(lat.gram)

    def test_non_unimodular_rejected(self, e6_surface):
        with pytest.raises(NotUnimodular):
            regrade(e6_surface.lattice, QMatrix.identity(7).scaled(2))

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=10_000))
    def test_pairings_and_chi_invariant(self, e6_surface, seed):
        rng = random.Random(seed)
        lat = e6_surface.lattice
        p = QMatrix(random_unimodular(rng, 7))
        out = regrade(lat, p)
        from coxkit.linalg import invert

        pinv = invert(p)
        for name in ("A1", "Al", "A6"):
            old = LatticeVector(A[name])
            new = LatticeVector(int(x) for x in pinv.mul_vector(list(old)))
            assert euler_characteristic(out, new) == euler_characteristic(lat, old)
            assert pair(out, new, new) == pair(lat, old, old)


class TestConstructionGuards:
    def test_singular_gram_rejected(self):
        with pytest.raises(DegenerateLattice):
            IntersectionLattice(["a", "b"], QMatrix([[1, 1], [1, 1]]))

    def test_asymmetric_gram_rejected(self):
        with pytest.raises(DegenerateLattice):
            IntersectionLattice(["a", "b"], QMatrix([[0, 1], [2, 0]]))

    def test_nonnegative_curve_rejected(self):
        lat = IntersectionLattice(["a"], QMatrix([[1]]))
        with pytest.raises(Exception):
            SurfaceModel(lat, [("a", LatticeVector([1]))], negative_curves=["a"])


def test_nef_monoid_membership(e6_surface):
    assert in_nef_monoid(e6_surface, A["Al"])
    assert in_nef_monoid(
        e6_surface, tuple(a + b for a, b in zip(A["A1"], A["A6"]))
    )
    assert not in_nef_monoid(e6_surface, e6_surface.generator("F1"))

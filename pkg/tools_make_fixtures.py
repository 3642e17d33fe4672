"""One-off generator for the shipped fixture bundles (run once, not shipped)."""

import json

E6_GRAM = [
    [-2, 0, 1, 0, 0, 0, 0],
    [0, -2, 0, 0, 0, 0, 1],
    [1, 0, -2, 0, 0, 0, 1],
    [0, 0, 0, -1, 1, 0, 0],
    [0, 0, 0, 1, -2, 1, 0],
    [0, 0, 0, 0, 1, -2, 1],
    [0, 1, 1, 0, 0, 1, -2],
]
E6_INVERSE = [
    [0, 1, 1, 2, 2, 2, 2],
    [1, 1, 2, 3, 3, 3, 3],
    [1, 2, 2, 4, 4, 4, 4],
    [2, 3, 4, 3, 4, 5, 6],
    [2, 3, 4, 4, 4, 5, 6],
    [2, 3, 4, 5, 5, 5, 6],
    [2, 3, 4, 6, 6, 6, 6],
]
E6_LABELS = ["F1", "F2", "F3", "ell", "F4", "F5", "F6"]
A = {
    "A1": [0, 1, 1, 2, 2, 2, 2],
    "A2": [1, 1, 2, 3, 3, 3, 3],
    "A3": [1, 2, 2, 4, 4, 4, 4],
    "Al": [2, 3, 4, 3, 4, 5, 6],
    "A4": [2, 3, 4, 4, 4, 5, 6],
    "A5": [2, 3, 4, 5, 5, 5, 6],
    "A6": [2, 3, 4, 6, 6, 6, 6],
}
A_ORDER = ["A1", "A2", "A3", "Al", "A4", "A5", "A6"]


def unit(i, n=7):
    return [1 if j == i else 0 for j in range(n)]


def sub(a, b):
    return [x - y for x, y in zip(a, b)]


def smul(c, a):
    return [c * x for x in a]


def poly(terms):
    return {"terms": [{"coeff": str(c), "exponents": list(e)} for e, c in terms]}


def mono(xi_part, tau_part):
    """Exponent row over (xi1,xi2,xi3,xil,xi4,xi5,xi6,tau1,tau2,taul)."""
    return list(xi_part) + list(tau_part)


def e6_bundle():
    alpha = {k: A[k] for k in A}  # xi-exponents of the distinguished sections
    variables = [
        {"name": "xi1", "degree": unit(0)},
        {"name": "xi2", "degree": unit(1)},
        {"name": "xi3", "degree": unit(2)},
        {"name": "xil", "degree": unit(3)},
        {"name": "xi4", "degree": unit(4)},
        {"name": "xi5", "degree": unit(5)},
        {"name": "xi6", "degree": unit(6)},
        {"name": "tau1", "degree": A["A1"]},
        {"name": "tau2", "degree": A["A2"]},
        {"name": "taul", "degree": A["Al"]},
    ]
    relation = poly(
        [
            (mono([0, 0, 0, 3, 2, 1, 0], [0, 0, 1]), 1),  # taul xil^3 xi4^2 xi5
            (mono([0, 1, 0, 0, 0, 0, 0], [0, 2, 0]), 1),  # tau2^2 xi2
            (mono([2, 0, 1, 0, 0, 0, 0], [3, 0, 0]), 1),  # tau1^3 xi1^2 xi3
        ]
    )

    # Section monomial lists per nef generator, from the displayed bases.
    def sect(name, pieces):
        rows = []
        for tau, shift in pieces:
            xi = alpha[name]
            for s in shift:
                xi = sub(xi, alpha[s])
            assert all(x >= 0 for x in xi), (name, shift, xi)
            rows.append(mono(xi, tau))
        return sorted(rows)

    section_monomials = {
        "A1": sect("A1", [([0, 0, 0], []), ([1, 0, 0], ["A1"])]),
        "A2": sect(
            "A2", [([0, 0, 0], []), ([1, 0, 0], ["A1"]), ([0, 1, 0], ["A2"])]
        ),
        "Al": sect(
            "Al",
            [
                ([0, 0, 0], []),
                ([1, 0, 0], ["A1"]),
                ([0, 1, 0], ["A2"]),
                ([0, 0, 1], ["Al"]),
            ],
        ),
        "A3": sect(
            "A3",
            [
                ([0, 0, 0], []),
                ([1, 0, 0], ["A1"]),
                ([0, 1, 0], ["A2"]),
                ([2, 0, 0], ["A1", "A1"]),
            ],
        ),
        "A4": sect(
            "A4",
            [
                ([0, 0, 0], []),
                ([1, 0, 0], ["A1"]),
                ([0, 1, 0], ["A2"]),
                ([0, 0, 1], ["Al"]),
                ([2, 0, 0], ["A1", "A1"]),
            ],
        ),
        "A5": sect(
            "A5",
            [
                ([0, 0, 0], []),
                ([1, 0, 0], ["A1"]),
                ([0, 1, 0], ["A2"]),
                ([0, 0, 1], ["Al"]),
                ([2, 0, 0], ["A1", "A1"]),
                ([1, 1, 0], ["A1", "A2"]),
            ],
        ),
        "A6": sect(
            "A6",
            [
                ([0, 0, 0], []),
                ([1, 0, 0], ["A1"]),
                ([0, 1, 0], ["A2"]),
                ([0, 0, 1], ["Al"]),
                ([2, 0, 0], ["A1", "A1"]),
                ([1, 1, 0], ["A1", "A2"]),
                ([0, 2, 0], ["A2", "A2"]),
                ([3, 0, 0], ["A1", "A1", "A1"]),
            ],
        ),
    }

    # Cubic in coordinates (w, x, y, z): x y^2 + y w^2 + z^3.
    cubic = poly([([0, 1, 2, 0], 1), ([2, 0, 1, 0], 1), ([0, 0, 0, 3], 1)])
    cubic_sections = {
        "w": mono(sub(alpha["Al"], alpha["A2"]), [0, 1, 0]),
        "x": mono([0] * 7, [0, 0, 1]),
        "y": mono(alpha["Al"], [0, 0, 0]),
        "z": mono(sub(alpha["Al"], alpha["A1"]), [1, 0, 0]),
    }
    parametrization = {
        "variables": ["w", "x", "y", "z"],
        "parameters": ["a", "b", "c"],
        "polynomial": cubic,
        "images": {
            "w": poly([([2, 0, 1], 1)]),
            "x": poly([([1, 0, 2], -1), ([0, 3, 0], -1)]),
            "y": poly([([3, 0, 0], 1)]),
            "z": poly([([2, 1, 0], 1)]),
        },
    }

    identities = {
        "expected_inverse_gram": [[str(x) for x in row] for row in E6_INVERSE],
        "nef_rays": dict(A),
        "adjunction_curves": [
            {"name": n, "class": unit(i), "genus": 0} for i, n in enumerate(E6_LABELS)
        ],
        "anticanonical_class": A["Al"],
        "chi_table": {"A1": 2, "A2": 3, "A3": 4, "Al": 4, "A4": 5, "A5": 6, "A6": 7},
        "hilbert_table": {
            "A1": 2,
            "A2": 3,
            "Al": 4,
            "A3": 4,
            "A4": 5,
            "A5": 6,
            "A6": 7,
        },
        "section_monomials": section_monomials,
        "relation_degree": "A6",
        "cubic_sections": {
            "variables": ["w", "x", "y", "z"],
            "polynomial": cubic,
            "sections": cubic_sections,
        },
        "parametrization": parametrization,
        "one_skeleton_rows": [
            A["A1"] + [-1, 0, 0],
            A["A2"] + [0, -1, 0],
            A["Al"] + [0, 0, -1],
        ],
        "moving_cone_rays": A_ORDER,
        "projective": True,
        "toric_anticanonical_sum": ["Al", "A6"],
        "hilbert_sweep": {"generators": A_ORDER, "max_coefficient": 2},
        "notes": {
            "degree_two_anticanonical_sections": (
                "The displayed spanning list for the degree-2 anticanonical piece "
                "has nine monomials (w2,wx,wy,x2,xy,xz,y2,yz,z2) while the "
                "dimension is chi = 10 (wz is independent and lies in the A5 "
                "piece); checks assert only the dimension."
            ),
            "projective_model_singularities": (
                "The stated singularity types of the images of the A3..A6 "
                "morphisms (quadric with a node; quartic with D5; quintic with "
                "A4; sextic with A1+A2) are recorded but not machine-verified."
            ),
        },
    }

    return {
        "schema": 1,
        "name": "e6",
        "surface": {
            "schema": 1,
            "basis_labels": E6_LABELS,
            "gram": [[str(x) for x in row] for row in E6_GRAM],
            "canonical_class": smul(-1, A["Al"]),
            "effective_generators": {n: unit(i) for i, n in enumerate(E6_LABELS)},
            "negative_curves": E6_LABELS,
        },
        "ring": {
            "schema": 1,
            "lattice_ref": "e6-surface",
            "variables": variables,
            "relations": [relation],
        },
        "characters": {
            "schema": 1,
            "grading_rank": 7,
            "columns": [{"name": v["name"], "degree": v["degree"]} for v in variables],
        },
        "identities": identities,
    }


D4_GRAM = [
    [1, 0, 0, 0, 0, 0, 0],
    [0, -2, 0, 0, 1, 0, 0],
    [0, 0, -2, 0, 0, 1, 0],
    [0, 0, 0, -2, 0, 0, 1],
    [0, 1, 0, 0, -1, 0, 0],
    [0, 0, 1, 0, 0, -1, 0],
    [0, 0, 0, 1, 0, 0, -1],
]
D4_LABELS = ["L", "E1", "E2", "E3", "m1", "m2", "m3"]


def d4_bundle():
    L = unit(0)
    E = {i: unit(i) for i in (1, 2, 3)}
    m = {i: unit(i + 3) for i in (1, 2, 3)}
    ell = {i: sub(sub(L, E[i]), smul(2, m[i])) for i in (1, 2, 3)}
    E0 = [1, -1, -1, -1, -1, -1, -1]
    gens = {"E0": E0}
    for i in (1, 2, 3):
        gens[f"E{i}"] = E[i]
    for i in (1, 2, 3):
        gens[f"m{i}"] = m[i]
    for i in (1, 2, 3):
        gens[f"l{i}"] = ell[i]

    def add(*vs):
        out = [0] * 7
        for v in vs:
            out = [a + b for a, b in zip(out, v)]
        return out

    dual_rays = {"L": L}
    certificates = {"L": {"l1": 1, "E1": 1, "m1": 2}}
    for i in (1, 2, 3):
        name = f"L-E{i}-m{i}"
        dual_rays[name] = sub(sub(L, E[i]), m[i])
        certificates[name] = {f"l{i}": 1, f"m{i}": 1}
    for i in (1, 2, 3):
        name = f"2L-E{i}-2m{i}"
        dual_rays[name] = sub(sub(smul(2, L), E[i]), smul(2, m[i]))
        certificates[name] = {f"l{i}": 2, f"E{i}": 1, f"m{i}": 2}
    for i, j in [(1, 2), (1, 3), (2, 3)]:
        name = f"2L-E{i}-E{j}-2m{i}-2m{j}"
        dual_rays[name] = add(smul(2, L), smul(-1, E[i]), smul(-1, E[j]), smul(-2, m[i]), smul(-2, m[j]))
        certificates[name] = {f"l{i}": 1, f"l{j}": 1}
    for i, j in [(1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2)]:
        name = f"2L-E{i}-E{j}-m{i}-2m{j}"
        dual_rays[name] = add(smul(2, L), smul(-1, E[i]), smul(-1, E[j]), smul(-1, m[i]), smul(-2, m[j]))
        certificates[name] = {f"l{i}": 1, f"l{j}": 1, f"m{i}": 1}

    variables = [{"name": "eta0", "degree": E0}]
    for i in (1, 2, 3):
        variables.append({"name": f"eta{i}", "degree": E[i]})
    for i in (1, 2, 3):
        variables.append({"name": f"mu{i}", "degree": m[i]})
    for i in (1, 2, 3):
        variables.append({"name": f"la{i}", "degree": ell[i]})

    # variable order: eta0 eta1 eta2 eta3 mu1 mu2 mu3 la1 la2 la3
    def expo(**kw):
        names = ["eta0", "eta1", "eta2", "eta3", "mu1", "mu2", "mu3", "la1", "la2", "la3"]
        return [kw.get(n, 0) for n in names]

    rel_terms = [
        (expo(eta1=1, mu1=2, la1=1), 1),
        (expo(eta2=1, mu2=2, la2=1), 1),
        (expo(eta3=1, mu3=2, la3=1), 1),
        (expo(eta0=1, eta1=1, eta2=1, eta3=1, mu1=1, mu2=1, mu3=1), -1),
    ]
    relation = poly(rel_terms)
    chart_images = [
        {"exponents": expo(eta1=1, mu1=2, la1=1), "image": poly([([1, 0, 0], 1)])},
        {"exponents": expo(eta2=1, mu2=2, la2=1), "image": poly([([0, 1, 0], 1)])},
        {"exponents": expo(eta3=1, mu3=2, la3=1), "image": poly([([0, 0, 1], 1)])},
        {
            "exponents": expo(eta0=1, eta1=1, eta2=1, eta3=1, mu1=1, mu2=1, mu3=1),
            "image": poly([([1, 0, 0], 1), ([0, 1, 0], 1), ([0, 0, 1], 1)]),
        },
    ]

    # Cubic in coordinates (x1, x2, x3, w): w (x1+x2+x3)^2 - x1 x2 x3.
    cubic_terms = []
    prods = {(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1, (1, 1, 0): 2, (1, 0, 1): 2, (0, 1, 1): 2}
    for (a, b, c), coeff in prods.items():
        cubic_terms.append(([a, b, c, 1], coeff))
    cubic_terms.append(([1, 1, 1, 0], -1))
    cubic = poly(cubic_terms)
    s = [([1, 0, 0], 1), ([0, 1, 0], 1), ([0, 0, 1], 1)]

    def times_s2(base):  # base * (u1+u2+u3)^2 expanded
        out = {}
        for (e, c) in [(x[0], x[1]) for x in s]:
            for (f, d) in [(x[0], x[1]) for x in s]:
                key = tuple(a + b + g for a, b, g in zip(e, f, base))
                out[key] = out.get(key, 0) + c * d
        return [(list(k), v) for k, v in sorted(out.items())]

    parametrization = {
        "variables": ["x1", "x2", "x3", "w"],
        "parameters": ["u1", "u2", "u3"],
        "polynomial": cubic,
        "images": {
            "x1": poly(times_s2([1, 0, 0])),
            "x2": poly(times_s2([0, 1, 0])),
            "x3": poly(times_s2([0, 0, 1])),
            "w": poly([([1, 1, 1], 1)]),
        },
    }

    identities = {
        "unimodular": True,
        "adjunction_curves": [
            {"name": "L", "class": L, "genus": 0},
            {"name": "E1", "class": E[1], "genus": 0},
            {"name": "E2", "class": E[2], "genus": 0},
            {"name": "E3", "class": E[3], "genus": 0},
            {"name": "m1", "class": m[1], "genus": 0},
            {"name": "m2", "class": m[2], "genus": 0},
            {"name": "m3", "class": m[3], "genus": 0},
        ],
        "anticanonical_class": add(smul(3, L), smul(-1, add(E[1], E[2], E[3])), smul(-2, add(m[1], m[2], m[3]))),
        "anticanonical_sum": ["l1", "l2", "l3"],
        "effective_ray_count": 10,
        "dual_cone_rays": dual_rays,
        "certificates": certificates,
        "relation_degree": "L",
        "chart_images": chart_images,
        "parametrization": parametrization,
        "projective": True,
        "column_sum": add(L, ell[1], ell[2], ell[3]),
        "hilbert_sweep": {"max_total": 3},
        "notes": {
            "nonsplit_form": (
                "Over a cubic extension K/k the surface has nonsplit forms "
                "w Tr_{K/k}(Y)^2 = N_{K/k}(Y); with U, V, W in K assigned to "
                "the degree-E1, degree-m1 and degree-l1 coordinates the torsor "
                "relation becomes Tr_{K/k}(U V^2 W) = eta0 N_{K/k}(U V). "
                "Recorded only; no computation over number fields."
            )
        },
    }

    return {
        "schema": 1,
        "name": "d4",
        "surface": {
            "schema": 1,
            "basis_labels": D4_LABELS,
            "gram": [[str(x) for x in row] for row in D4_GRAM],
            "canonical_class": smul(-1, identities["anticanonical_class"]),
            "effective_generators": gens,
            "negative_curves": list(gens),
        },
        "ring": {
            "schema": 1,
            "lattice_ref": "d4-surface",
            "variables": variables,
            "relations": [relation],
        },
        "characters": {
            "schema": 1,
            "grading_rank": 7,
            "columns": [{"name": v["name"], "degree": v["degree"]} for v in variables],
        },
        "identities": identities,
    }


if __name__ == "__main__":
    for name, bundle in [("e6", e6_bundle()), ("d4", d4_bundle())]:
        path = f"src/coxkit/fixtures/{name}.json"
        with open(path, "w") as fh:
            json.dump(bundle, fh, indent=1)
            fh.write("\n")
        print("wrote", path)

"""Command-line front end.

Vectors on the command line are comma-separated integers; rows are
separated by semicolons. Anything bigger than rank 4 is better served by a
fixture file. Exit codes: 0 success (and all-pass verification), 1
computation failure, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import pipeline
from .cones import Cone, intersect, lattice_points, membership_certificate
from .cones import Certificate, ConeSlicePolytope
from .errors import CoxkitError
from .linalg import LatticeVector, QMatrix
from .rings import hilbert_hypersurface, is_homogeneous, monomials_of_degree, substitute
from .rings import Polynomial
from .surfaces import (
    anticanonical_solve,
    decompose_fixed_moving,
    euler_characteristic,
    nef_cone,
    pair,
)

__all__ = ["main", "entry"]


def _parse_vector(text: str) -> LatticeVector:
    return LatticeVector(int(x) for x in text.split(","))


def _parse_rows(text: str) -> list[LatticeVector]:
    return [_parse_vector(row) for row in text.split(";") if row.strip()]


def _print_table(rows, out) -> None:
    if not rows:
        print("  (none)", file=out)
        return
    width = max(len(str(x)) for r in rows for x in r)
    for r in rows:
        print("  " + " ".join(str(x).rjust(width) for x in r), file=out)


def _emit_cone(cone: Cone, fmt: str, out) -> None:
    if fmt == "json":
        json.dump(cone.to_json(), out, indent=1)
        out.write("\n")
        return
    print(f"rank {cone.rank}, dim {cone.dim}", file=out)
    print("rays:", file=out)
    _print_table([r.entries for r in cone.rays], out)
    if cone.lineality:
        print("lineality:", file=out)
        _print_table([l.entries for l in cone.lineality], out)
    print("facets:", file=out)
    _print_table([f.entries for f in cone.facets], out)
    if cone.equations:
        print("equations:", file=out)
        _print_table([e.entries for e in cone.equations], out)


def _load_surface(path: str):
    bundle = pipeline.load_bundle(path)
    raw = bundle.raw
    if "surface" in raw:
        return bundle.surface(), bundle
    from .surfaces import surface_from_json

    return surface_from_json(raw), bundle


def _load_ring(path: str):
    bundle = pipeline.load_bundle(path)
    raw = bundle.raw
    if "ring" in raw:
        return bundle.ring()
    from .rings import ring_from_json

    return ring_from_json(raw)


def _load_characters(path: str):
    bundle = pipeline.load_bundle(path)
    raw = bundle.raw
    if "characters" in raw:
        return bundle.characters()
    from .toric import character_data_from_json

    return character_data_from_json(raw)


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="coxkit",
        description="Exact cone, lattice and graded-ring computations "
        "for Cox rings of cubic surfaces.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=["text", "json"], default="text", help="output format"
        )

    cone = sub.add_parser("cone", help="polyhedral cone operations")
    cone_sub = cone.add_subparsers(dest="subcommand", required=True)

    p = cone_sub.add_parser("dual", help="dual cone under the standard dot product")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--rays", required=True, help='generators, e.g. "1,0;0,1"')
    add_format(p)

    p = cone_sub.add_parser("intersect", help="intersection of generated cones")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument(
        "--rays", action="append", required=True, help="one generator list per cone"
    )
    add_format(p)

    p = cone_sub.add_parser("contains", help="membership via facet pairings")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--rays", required=True)
    p.add_argument("--vector", required=True)
    p.add_argument("--strict", action="store_true", help="interior membership")

    p = cone_sub.add_parser("certify", help="nonnegative combination or separating normal")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--rays", required=True)
    p.add_argument("--vector", required=True)
    add_format(p)

    surf = sub.add_parser("surface", help="Picard lattice operations")
    surf_sub = surf.add_subparsers(dest="subcommand", required=True)

    p = surf_sub.add_parser("nef", help="nef cone rays under the intersection pairing")
    p.add_argument("--fixture", required=True)
    add_format(p)

    p = surf_sub.add_parser("chi", help="Euler characteristic of a divisor class")
    p.add_argument("--fixture", required=True)
    p.add_argument("--degree", required=True)

    p = surf_sub.add_parser("anticanonical", help="solve for the canonical class")
    p.add_argument("--fixture", required=True)

    p = surf_sub.add_parser("decompose", help="fixed/moving decomposition")
    p.add_argument("--fixture", required=True)
    p.add_argument("--degree", required=True)

    ring = sub.add_parser("ring", help="multigraded ring operations")
    ring_sub = ring.add_subparsers(dest="subcommand", required=True)

    p = ring_sub.add_parser("monomials", help="monomials of a multidegree")
    p.add_argument("--fixture", required=True)
    p.add_argument("--degree", required=True)
    add_format(p)

    p = ring_sub.add_parser("hilbert", help="dimension of a quotient graded piece")
    p.add_argument("--fixture", required=True)
    p.add_argument("--degree", required=True)

    p = ring_sub.add_parser("homogeneous", help="degrees of the fixture relations")
    p.add_argument("--fixture", required=True)

    p = ring_sub.add_parser(
        "substitute", help="run the fixture parametrization substitution"
    )
    p.add_argument("--fixture", required=True)

    toric = sub.add_parser("toric", help="torus action / quotient model operations")
    toric_sub = toric.add_subparsers(dest="subcommand", required=True)

    for name, help_text in [
        ("skeleton", "one-skeleton vectors of the quotient fan"),
        ("moving-cone", "intersection of the column-deleted cones"),
        ("projective", "projectivity of the quotient"),
    ]:
        p = toric_sub.add_parser(name, help=help_text)
        p.add_argument("--fixture", required=True)
        if name != "projective":
            add_format(p)

    p = toric_sub.add_parser("fan", help="fan rays of a polarized quotient model")
    p.add_argument("--fixture", required=True)
    p.add_argument("--nu", required=True, help="linearization class")
    p.add_argument("--multiplier", type=int, default=None)
    add_format(p)

    ver = sub.add_parser("verify", help="run a fixture verification report")
    ver.add_argument("bundle", choices=["e6", "d4"])
    ver.add_argument("--fixture", default=None, help="override the shipped fixture")
    ver.add_argument("--sweep-bound", type=int, default=None)
    ver.add_argument("--report", choices=["text", "json"], default="text")

    return top


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "cone":
            return _run_cone(args, out)
        if args.command == "surface":
            return _run_surface(args, out)
        if args.command == "ring":
            return _run_ring(args, out)
        if args.command == "toric":
            return _run_toric(args, out)
        if args.command == "verify":
            return _run_verify(args, out)
        raise AssertionError(args.command)
    except CoxkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _run_cone(args, out) -> int:
    if args.subcommand == "dual":
        cone = Cone.from_rays(args.rank, [v.entries for v in _parse_rows(args.rays)])
        _emit_cone(cone.dual(), args.format, out)
        return 0
    if args.subcommand == "intersect":
        cones = [
            Cone.from_rays(args.rank, [v.entries for v in _parse_rows(group)])
            for group in args.rays
        ]
        _emit_cone(intersect(cones), args.format, out)
        return 0
    if args.subcommand == "contains":
        cone = Cone.from_rays(args.rank, [v.entries for v in _parse_rows(args.rays)])
        inside = cone.contains(_parse_vector(args.vector), strict=args.strict)
        print("true" if inside else "false", file=out)
        return 0
    if args.subcommand == "certify":
        cone = Cone.from_rays(args.rank, [v.entries for v in _parse_rows(args.rays)])
        got = membership_certificate(cone, _parse_vector(args.vector))
        if isinstance(got, Certificate):
            if args.format == "json":
                json.dump(
                    {
                        "member": True,
                        "ray_coefficients": [str(c) for c in got.ray_coefficients],
                        "lineality_coefficients": [
                            str(c) for c in got.lineality_coefficients
                        ],
                    },
                    out,
                    indent=1,
                )
                out.write("\n")
            else:
                print("member", file=out)
                for coeff, ray in zip(got.ray_coefficients, cone.rays):
                    if coeff:
                        print(f"  {coeff} * {list(ray.entries)}", file=out)
        else:
            if args.format == "json":
                json.dump(
                    {"member": False, "separating_normal": got.normal.to_json()},
                    out,
                    indent=1,
                )
                out.write("\n")
            else:
                print(f"not a member; separating normal {list(got.normal.entries)}", file=out)
        return 0
    raise AssertionError(args.subcommand)


def _run_surface(args, out) -> int:
    surface, _bundle = _load_surface(args.fixture)
    if args.subcommand == "nef":
        _emit_cone(nef_cone(surface), args.format, out)
        return 0
    if args.subcommand == "chi":
        print(euler_characteristic(surface.lattice, _parse_vector(args.degree)), file=out)
        return 0
    if args.subcommand == "anticanonical":
        lat = surface.lattice
        conds = []
        for name in surface.negative_curves:
            c = surface.generator(name)
            g = surface.genus.get(name, 0)
            conds.append((c, 2 * g - 2 - pair(lat, c, c)))
        if len(conds) != lat.rank and lat.canonical_class is not None:
            print(list(lat.canonical_class.entries), file=out)
            return 0
        k = anticanonical_solve(lat, conds)
        print(list(k.entries), file=out)
        return 0
    if args.subcommand == "decompose":
        moving, fixed = decompose_fixed_moving(surface, _parse_vector(args.degree))
        print(f"moving: {list(moving.entries)}", file=out)
        print(f"fixed: {fixed}", file=out)
        return 0
    raise AssertionError(args.subcommand)


def _run_ring(args, out) -> int:
    ring = _load_ring(args.fixture)
    if args.subcommand == "monomials":
        monos = monomials_of_degree(ring, _parse_vector(args.degree))
        if args.format == "json":
            json.dump({"monomials": [list(m) for m in monos]}, out, indent=1)
            out.write("\n")
        else:
            for m in monos:
                print(f"  {' '.join(str(x) for x in m)}  {ring.monomial_name(m)}", file=out)
            print(f"{len(monos)} monomials", file=out)
        return 0
    if args.subcommand == "hilbert":
        print(hilbert_hypersurface(ring, _parse_vector(args.degree)), file=out)
        return 0
    if args.subcommand == "homogeneous":
        for i, rel in enumerate(ring.relations):
            deg = is_homogeneous(ring, rel)
            print(f"relation {i}: degree {list(deg.entries)}", file=out)
        if not ring.relations:
            print("no relations", file=out)
        return 0
    if args.subcommand == "substitute":
        bundle = pipeline.load_bundle(args.fixture)
        data = bundle.identities["parametrization"]
        nv = len(data["variables"])
        np_ = len(data["parameters"])
        p = Polynomial.from_json(nv, data["polynomial"])
        images = [Polynomial.from_json(np_, data["images"][v]) for v in data["variables"]]
        result = substitute(p, images)
        print("0" if result.is_zero else repr(result), file=out)
        return 0
    raise AssertionError(args.subcommand)


def _run_toric(args, out) -> int:
    chars = _load_characters(args.fixture)
    if args.subcommand == "skeleton":
        vecs = [list(v.entries) for v in chars.one_skeleton()]
        if args.format == "json":
            json.dump({"one_skeleton": vecs}, out, indent=1)
            out.write("\n")
        else:
            _print_table(vecs, out)
        violations = chars.skeleton_violations()
        for v in violations:
            print(f"warning: {v}", file=sys.stderr)
        return 0
    if args.subcommand == "moving-cone":
        _emit_cone(chars.moving_cone(), args.format, out)
        return 0
    if args.subcommand == "projective":
        print("true" if chars.is_projective() else "false", file=out)
        return 0
    if args.subcommand == "fan":
        model = chars.model_fan(_parse_vector(args.nu), multiplier=args.multiplier)
        if args.format == "json":
            json.dump(
                {
                    "fan_rays": [list(r.entries) for r in model.fan_rays],
                    "simplicial": model.simplicial,
                    "multiplier": model.multiplier,
                    "polytope_dim": model.polytope_dim,
                },
                out,
                indent=1,
            )
            out.write("\n")
        else:
            print(
                f"multiplier {model.multiplier}, polytope dim {model.polytope_dim}, "
                f"simplicial {model.simplicial}",
                file=out,
            )
            _print_table([r.entries for r in model.fan_rays], out)
        return 0
    raise AssertionError(args.subcommand)


def _run_verify(args, out) -> int:
    kwargs = {}
    if args.sweep_bound is not None:
        if args.bundle == "e6":
            kwargs["sweep_bound"] = args.sweep_bound
        else:
            kwargs["sweep_total"] = args.sweep_bound
    source = args.fixture if args.fixture is not None else args.bundle
    report = pipeline.verify(args.bundle, source, **kwargs)
    if args.report == "json":
        json.dump(report.to_json(), out, indent=1)
        out.write("\n")
    else:
        print(report.to_text(), file=out)
    return 0 if report.passed else 1


def entry() -> None:  # console script hook
    sys.exit(main())


if __name__ == "__main__":
    entry()

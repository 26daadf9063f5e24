"""Command-line surface tying the decision procedures, oracles, and cone
computations together.

Exit codes: 0 success (or "intersecting"), 1 negative verdict, 2 usage or
parse error, 3 capacity exceeded, 4 internal consistency failure between two
decision paths.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

from . import __version__
from .augment import augment, cross_check, lift_family
from .brute import count_stable_points, estimate_p_membership
from .cone import facet_data, generate_system, orbit_reduce, sigma_restriction, with_rays
from .core import Quiver, edim, quiver_automorphisms
from .documents import (
    family_document,
    family_shorthand,
    parse_quiver_document,
    quiver_document,
    read_family_argument,
)
from .errors import CapacityError, ParseError, QuiverHornError
from .ext_oracle import DEFAULT_PRIME, generic_ext, generic_hom, oracle_is_intersecting
from .horn import (
    HornQuery,
    belkale_member,
    enumerate_intersecting,
    enumerate_schofield,
    find_witness,
    horn_member,
    schofield_member,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
EXIT_INCONSISTENT = 4


def _default_seed() -> int:
    env = os.environ.get("QUIVERHORN_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"QUIVERHORN_SEED must be an integer, got {env!r}") from None
    return 0


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


def _emit(report: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "structured":
        json.dump(report, out, indent=2)
        out.write("\n")
        return
    def lines(prefix, value):
        if isinstance(value, dict):
            for k, v in value.items():
                yield from lines(f"{prefix}.{k}" if prefix else str(k), v)
        elif isinstance(value, (list, tuple)) and any(isinstance(v, (dict, list, tuple)) for v in value):
            for i, v in enumerate(value):
                yield from lines(f"{prefix}[{i}]", v)
        elif isinstance(value, (list, tuple)):
            yield f"{prefix}: {' '.join(str(v) for v in value)}"
        else:
            yield f"{prefix}: {value}"

    for key, value in report.items():
        for line in lines(key, value):
            out.write(line + "\n")


def _report(command: str, inputs: dict, params: dict, results: dict, warnings=(), started=None) -> dict:
    rep = {
        "command": command,
        "version": __version__,
        "inputs": inputs,
        "parameters": params,
        "results": results,
    }
    if warnings:
        rep["warnings"] = list(warnings)
    rep["timing_ms"] = round((time.perf_counter() - started) * 1000.0, 3) if started else 0.0
    return rep


def _read_quiver(path: str, dims_arg: str | None):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    q, dims = parse_quiver_document(text)
    if dims_arg:
        vals = [int(x) for x in dims_arg.split(",")]
        if len(vals) != len(q.vertices):
            raise ParseError(f"--dims has {len(vals)} entries, quiver has {len(q.vertices)} vertices")
        dims = dict(zip(q.vertices, vals))
    return q, dims, _digest(text)


def _family_strings(q, fams, dims):
    if dims and all(dims[v] <= 9 for v in q.vertices):
        return [family_shorthand(f, q.vertices) for f in fams]
    return [{v: list(f[v]) for v in q.vertices} for f in fams]


def _restricted(arg: str | None, q: Quiver) -> tuple[int, ...]:
    if not arg:
        return ()
    if arg == "all":
        return tuple(range(len(q.arrows)))
    return tuple(int(x) for x in arg.split(","))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_check(args) -> int:
    started = time.perf_counter()
    q, dims, qdig = _read_quiver(args.quiver, args.dims)
    j, k = read_family_argument(args.family, q, dims)
    if k is None:
        raise ParseError("check needs a K component (family document with 'K' or a shorthand)")
    query = HornQuery(q, j, k, _restricted(args.restrict_arrows, q))
    verdict = horn_member(query)
    results = {
        "intersecting": verdict,
        "edim": edim(q, k, j),
    }
    if not verdict:
        wit = find_witness(query)
        results["witness"] = family_shorthand(wit, q.vertices) if all(
            e <= 9 for v in q.vertices for e in j[v]
        ) else {v: list(wit[v]) for v in q.vertices}
    if args.oracle == "ext":
        results["oracle_ext_intersecting"] = oracle_is_intersecting(
            q, k, j, trials=args.trials, seed=args.seed, prime=args.prime, threads=args.threads
        )
    elif args.oracle == "brute":
        rep = count_stable_points(q, k, j, field_q=args.field_q, trials=args.trials, seed=args.seed)
        results["oracle_brute_counts"] = list(rep.counts)
        results["oracle_brute_min"] = rep.minimum
    _emit(
        _report("check", {"quiver": qdig, "family": _digest(str(args.family))},
                {"seed": args.seed, "trials": args.trials, "oracle": args.oracle}, results, started=started),
        args.format,
    )
    return EXIT_OK if verdict else EXIT_NEGATIVE


def _cmd_enumerate(args) -> int:
    started = time.perf_counter()
    q, dims, qdig = _read_quiver(args.quiver, args.dims)
    if dims is None:
        raise ParseError("enumerate needs dims (on the quiver document or via --dims)")
    j = {v: tuple(range(1, dims[v] + 1)) for v in q.vertices}
    fams = enumerate_intersecting(q, j, edim_zero_only=args.edim_zero, up_to_symmetry=args.up_to_symmetry)
    vecs = enumerate_schofield(q, dims, up_to_symmetry=args.up_to_symmetry)
    results = {
        "count": len(fams),
        "families": _family_strings(q, fams, dims),
        "schofield_count": len(vecs),
        "schofield_vectors": [[a[v] for v in q.vertices] for a in vecs],
    }
    _emit(_report("enumerate", {"quiver": qdig},
                  {"dims": [dims[v] for v in q.vertices], "edim_zero": args.edim_zero,
                   "up_to_symmetry": args.up_to_symmetry}, results, started=started), args.format)
    return EXIT_OK


def _cmd_schofield(args) -> int:
    started = time.perf_counter()
    q, dims, qdig = _read_quiver(args.quiver, args.dims)
    if dims is None:
        raise ParseError("schofield needs dims (on the quiver document or via --dims)")
    params = {"dims": [dims[v] for v in q.vertices]}
    if args.alpha:
        vals = [int(x) for x in args.alpha.split(",")]
        if len(vals) != len(q.vertices):
            raise ParseError(f"--alpha has {len(vals)} entries, quiver has {len(q.vertices)} vertices")
        alpha = dict(zip(q.vertices, vals))
        verdict = schofield_member(q, alpha, dims)
        _emit(_report("schofield", {"quiver": qdig}, params | {"alpha": vals},
                      {"schofield": verdict}, started=started), args.format)
        return EXIT_OK if verdict else EXIT_NEGATIVE
    vecs = enumerate_schofield(q, dims, up_to_symmetry=args.up_to_symmetry)
    _emit(_report("schofield", {"quiver": qdig}, params | {"up_to_symmetry": args.up_to_symmetry},
                  {"count": len(vecs), "vectors": [[a[v] for v in q.vertices] for a in vecs]},
                  started=started), args.format)
    return EXIT_OK


def _cmd_belkale(args) -> int:
    started = time.perf_counter()
    parts = args.K.split(";")
    subsets = [tuple(int(c) for c in part.strip()) for part in parts]
    verdict = belkale_member(args.s, args.r, args.n, subsets)
    _emit(_report("belkale", {"K": args.K}, {"s": args.s, "r": args.r, "n": args.n},
                  {"intersecting": verdict}, started=started), args.format)
    return EXIT_OK if verdict else EXIT_NEGATIVE


def _cmd_cone(args) -> int:
    started = time.perf_counter()
    q, dims, qdig = _read_quiver(args.quiver, args.dims)
    if dims is None:
        raise ParseError("cone needs dims (on the quiver document or via --dims)")
    desc = generate_system(q, dims)
    results: dict = {
        "coordinates": [f"{v}({i})" for v, i in desc.coords],
        "num_equalities": len(desc.equalities),
        "num_inequalities": len(desc.inequalities),
    }
    warnings = desc.warnings
    if args.rays or args.facets:
        desc = with_rays(desc)
        results["num_rays"] = len(desc.rays)
        if args.rays:
            results["rays"] = [list(r) for r in desc.rays]
    if args.facets:
        facets = facet_data(desc)
        results["num_facets"] = len(facets)
        results["facets"] = [list(f.row) for f in facets]
        if args.up_to_symmetry:
            autos = [a for a in quiver_automorphisms(q) if a.apply_to_vector(dims) == dims]
            orbits = orbit_reduce([f.row for f in facets], autos, desc.coords)
            results["facet_orbits"] = [{"row": list(r), "orbit_size": s} for r, s in orbits]
    if args.sigma:
        sig = sigma_restriction(q, dims, up_to_symmetry=args.up_to_symmetry)
        results["sigma"] = {
            "coordinates": [v for v, _ in sig.coords],
            "equality": list(sig.equalities[0]) if sig.equalities else [],
            "inequalities": [list(r) for r in sig.inequalities],
        }
        warnings = warnings + sig.warnings
    _emit(_report("cone", {"quiver": qdig},
                  {"dims": [dims[v] for v in q.vertices], "rays": args.rays,
                   "facets": args.facets, "sigma": args.sigma,
                   "up_to_symmetry": args.up_to_symmetry},
                  results, warnings=warnings, started=started), args.format)
    return EXIT_OK


def _cmd_augment(args) -> int:
    started = time.perf_counter()
    q, dims, qdig = _read_quiver(args.quiver, args.dims)
    j, k = read_family_argument(args.family, q, dims)
    if k is None:
        raise ParseError("augment needs a K component")
    aug = augment(q, {v: len(j[v]) for v in q.vertices})
    alpha = lift_family(k, j)
    via_extension = cross_check(q, k, j)
    direct = horn_member(HornQuery(q, j, k))
    results = {
        "augmented_quiver": quiver_document(aug.quiver, aug.dims),
        "alpha": {v: alpha[v] for v in aug.quiver.vertices},
        "intersecting_via_extension": via_extension,
        "intersecting_direct": direct,
        "consistent": via_extension == direct,
    }
    _emit(_report("augment", {"quiver": qdig, "family": _digest(str(args.family))}, {},
                  results, started=started), args.format)
    if via_extension != direct:
        return EXIT_INCONSISTENT
    return EXIT_OK


def _cmd_oracle_ext(args) -> int:
    started = time.perf_counter()
    q, dims, qdig = _read_quiver(args.quiver, args.dims)
    j, k = read_family_argument(args.family, q, dims)
    if k is None:
        raise ParseError("oracle-ext needs a K component")
    from .core import quotient_profile, sub_profile

    f, g = sub_profile(k, j), quotient_profile(k, j)
    dv = {v: len(k[v]) for v in q.vertices}
    dw = {v: len(j[v]) - len(k[v]) for v in q.vertices}
    ext = generic_ext(q, f, g, dv, dw, trials=args.trials, seed=args.seed,
                      prime=args.prime, threads=args.threads)
    hom = generic_hom(q, f, g, dv, dw, trials=args.trials, seed=args.seed,
                      prime=args.prime, threads=args.threads)
    results = {"ext": ext, "hom": hom, "euler": hom - ext, "intersecting": ext == 0}
    _emit(_report("oracle-ext", {"quiver": qdig, "family": _digest(str(args.family))},
                  {"trials": args.trials, "seed": args.seed, "prime": args.prime}, results,
                  started=started), args.format)
    return EXIT_OK if ext == 0 else EXIT_NEGATIVE


def _cmd_oracle_brute(args) -> int:
    started = time.perf_counter()
    q, dims, qdig = _read_quiver(args.quiver, args.dims)
    j, k = read_family_argument(args.family, q, dims)
    if k is None:
        raise ParseError("oracle-brute needs a K component")
    rep = count_stable_points(q, k, j, field_q=args.field_q, trials=args.trials, seed=args.seed)
    flag = estimate_p_membership(q, k, j, field_q=args.field_q, trials=args.trials, seed=args.seed)
    results = {
        "counts": list(rep.counts),
        "mode": rep.mode,
        "min": rep.minimum,
        "single_point_estimate": flag,
    }
    _emit(_report("oracle-brute", {"quiver": qdig, "family": _digest(str(args.family))},
                  {"field_q": args.field_q, "trials": args.trials, "seed": args.seed}, results,
                  started=started), args.format)
    return EXIT_OK


def _cmd_symmetry(args) -> int:
    started = time.perf_counter()
    q, dims, qdig = _read_quiver(args.quiver, args.dims)
    autos = quiver_automorphisms(q)
    results = {
        "order": len(autos),
        "automorphisms": [{v: a(v) for v in q.vertices} for a in autos],
    }
    _emit(_report("symmetry", {"quiver": qdig}, {}, results, started=started), args.format)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverhorn",
        description="Intersection tests for quiver Schubert positions, with oracles and weight cones.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, quiver=True, family=False, seedable=False, brute=False):
        if quiver:
            p.add_argument("quiver", help="path to a quiver JSON document")
            p.add_argument("--dims", help="comma-separated dims overriding the document")
        if family:
            p.add_argument("family", help="family JSON document or K shorthand like '2;23;12'")
        if seedable:
            p.add_argument("--trials", type=int, default=5)
            p.add_argument("--seed", type=int, default=None)
            p.add_argument("--prime", type=int, default=DEFAULT_PRIME)
            p.add_argument("--threads", type=int, default=1)
        if brute:
            p.add_argument("--field-q", dest="field_q", type=int, default=11)
        p.add_argument("--format", choices=("text", "structured"), default="text")

    p = sub.add_parser("check", help="decide whether K is intersecting inside J")
    common(p, family=True, seedable=True, brute=True)
    p.add_argument("--restrict-arrows", help="comma-separated arrow indices, or 'all'")
    p.add_argument("--oracle", choices=("none", "ext", "brute"), default="none")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("enumerate", help="list all intersecting subfamilies of the standard ambient")
    common(p)
    p.add_argument("--edim-zero", action="store_true")
    p.add_argument("--up-to-symmetry", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("schofield", help="test or enumerate generic subdimension vectors")
    common(p)
    p.add_argument("--alpha", help="comma-separated subdimension vector to test")
    p.add_argument("--up-to-symmetry", action="store_true")
    p.set_defaults(func=_cmd_schofield)

    p = sub.add_parser("belkale", help="intersection test for Grassmannian Schubert classes")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--K", required=True, help="s+1 digit strings separated by ';'")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=_cmd_belkale)

    p = sub.add_parser("cone", help="weight-cone system, extreme rays, facets")
    common(p)
    p.add_argument("--rays", action="store_true")
    p.add_argument("--facets", action="store_true")
    p.add_argument("--sigma", action="store_true")
    p.add_argument("--up-to-symmetry", action="store_true")
    p.set_defaults(func=_cmd_cone)

    p = sub.add_parser("augment", help="chain-extended quiver and the cross-check decision path")
    common(p, family=True)
    p.set_defaults(func=_cmd_augment)

    p = sub.add_parser("oracle-ext", help="randomized prime-field intersection oracle")
    common(p, family=True, seedable=True)
    p.set_defaults(func=_cmd_oracle_ext)

    p = sub.add_parser("oracle-brute", help="exhaustive small-field stable-family counts")
    common(p, family=True, brute=True)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=_cmd_oracle_brute)

    p = sub.add_parser("symmetry", help="list the quiver's automorphisms")
    common(p)
    p.set_defaults(func=_cmd_symmetry)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    if getattr(args, "seed", None) is None and hasattr(args, "seed"):
        try:
            args.seed = _default_seed()
        except ParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except QuiverHornError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

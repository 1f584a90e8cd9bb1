"""Command-line front end: moment polynomials, bounds, sampling, path
dumps, and a self-verification suite.

Identical invocations produce byte-identical output; Monte Carlo results
are pinned by the seed and moment reports carry no timing fields.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as bounds_mod
from . import inclusion_exclusion as ie
from . import montecarlo as mc
from . import oracle as oracle_mod
from . import reference
from .graph import Graph, SOLID_NAMES, distance_classes, load_graph_file, make_solid
from .paths import enumerate_paths, enumerate_pair_events
from .polynomial import IntPolynomial

ORACLE_LONG_EDGE_GATE = 20  # above this, `oracle` demands an explicit --long


def _add_graph_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--solid", choices=SOLID_NAMES, help="one of the five solids")
    group.add_argument("--graph-file", help="path to an 'N M' edge-list file")


def _add_grid_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--p", action="append", type=float, default=None,
        help="edge probability; repeatable",
    )
    parser.add_argument(
        "--p-grid", nargs=3, type=float, metavar=("START", "STOP", "STEP"),
        help="inclusive probability grid",
    )


def _resolve_graph(args) -> Graph:
    if args.solid:
        return make_solid(args.solid)
    return load_graph_file(args.graph_file)


def _resolve_grid(args, default=None) -> list[float]:
    if args.p is not None and args.p_grid is not None:
        raise ValueError("use either --p or --p-grid, not both")
    if args.p is not None:
        values = list(args.p)
    elif args.p_grid is not None:
        start, stop, step = args.p_grid
        if step <= 0:
            raise ValueError("--p-grid step must be positive")
        values = []
        k = 0
        while True:
            v = start + k * step
            if v > stop + 1e-12:
                break
            values.append(round(v, 12))
            k += 1
    elif default is not None:
        values = default
    else:
        values = []
    for v in values:
        if not 0.0 <= v <= 1.0:
            raise ValueError(f"grid value {v} outside [0, 1]")
    return values


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _default_grid() -> list[float]:
    return [round(0.05 * k, 2) for k in range(1, 20)]


def _moment_text(report: ie.MomentReport, grid: list[float]) -> str:
    lines = [
        f"graph: {report.graph_name}",
        f"moment: {report.moment}",
        f"kind: {report.kind}",
        f"cutoff: {report.cutoff if report.cutoff is not None else 'none'}",
        f"coeffs: ({', '.join(str(c) for c in report.poly.coeffs)})",
        f"subsets_visited: {report.subsets_visited}",
    ]
    for cls in report.per_class:
        lines.append(
            f"class s={cls.s}: N_s={cls.n_s} K_s={cls.k_s} "
            f"coeffs=({', '.join(str(c) for c in cls.poly.coeffs)})"
        )
    for p in grid:
        lines.append(f"p={p!r}: {report.poly.eval(p)!r}")
    return "\n".join(lines) + "\n"


def cmd_moments(args) -> int:
    g = _resolve_graph(args)
    grid = _resolve_grid(args)
    if args.moment == 1:
        report = ie.first_moment(
            g, cutoff=args.cutoff, threads=args.threads,
            check_homogeneity=not args.skip_homogeneity_check,
        )
    else:
        if args.cutoff is not None:
            raise ValueError("--cutoff applies to the first moment only")
        report = ie.second_moment(g, threads=args.threads)
    if args.format == "json":
        payload = report.to_json_dict()
        if grid:
            payload["grid"] = [
                {"p": p, "value": report.poly.eval(p)} for p in grid
            ]
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        _emit(_moment_text(report, grid), args.output)
    return 0


def cmd_oracle(args) -> int:
    g = _resolve_graph(args)
    if g.n_edges > ORACLE_LONG_EDGE_GATE and not args.long:
        raise ValueError(
            f"{g.name} has {g.n_edges} edges (2^{g.n_edges} configurations); "
            "pass --long to run the exhaustive enumeration"
        )
    tally = oracle_mod.exhaustive_tally(g, source=args.source, threads=args.threads)
    if args.tally_out:
        with open(args.tally_out, "w", encoding="ascii") as fh:
            fh.write(oracle_mod.tally_to_csv(tally))
    poly = oracle_mod.tally_to_moment_polynomial(tally, args.moment)
    grid = _resolve_grid(args)
    if args.format == "json":
        payload = {
            "solid": g.name,
            "moment": args.moment,
            "kind": "exact",
            "source": args.source,
            **poly.to_json_dict(),
        }
        if grid:
            payload["grid"] = [{"p": p, "value": poly.eval(p)} for p in grid]
        _emit(json.dumps(payload, indent=2) + "\n", args.output)
    else:
        lines = [
            f"graph: {g.name}",
            f"moment: {args.moment}",
            "kind: exact",
            f"coeffs: ({', '.join(str(c) for c in poly.coeffs)})",
        ]
        lines.extend(f"p={p!r}: {poly.eval(p)!r}" for p in grid)
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_bounds(args) -> int:
    g = _resolve_graph(args)
    inputs0 = bounds_mod.bound_inputs_for_graph(g, 0.0)
    degree, n = inputs0.degree, inputs0.n_vertices
    grid = _resolve_grid(args, default=_default_grid())
    exact1 = exact2 = None
    if g.n_edges <= ORACLE_LONG_EDGE_GATE or args.long:
        tally = oracle_mod.exhaustive_tally(g, threads=args.threads)
        exact1 = oracle_mod.tally_to_moment_polynomial(tally, 1)
        exact2 = oracle_mod.tally_to_moment_polynomial(tally, 2)
    rows = [
        "p,e_s_branching,e_s2_branching,e_s_plarge,e_s2_plarge,"
        "e_s_exact,e_s2_exact,e_s_branching_clamped,e_s2_branching_clamped"
    ]
    for p in grid:
        inputs = bounds_mod.BoundInputs(degree, n, p)
        b1 = bounds_mod.branching_first_moment_bound(inputs)
        b2 = bounds_mod.branching_second_moment_bound(inputs)
        l1 = bounds_mod.plarge_first_moment_bound(degree, n, p)
        l2 = bounds_mod.plarge_second_moment_bound(degree, n, p)
        e1 = f"{exact1.eval(p)!r}" if exact1 is not None else ""
        e2 = f"{exact2.eval(p)!r}" if exact2 is not None else ""
        c1 = bounds_mod.clamp_moment_bound(b1, n, 1)
        c2 = bounds_mod.clamp_moment_bound(b2, n, 2)
        rows.append(
            f"{p!r},{b1!r},{b2!r},{l1!r},{l2!r},{e1},{e2},{c1!r},{c2!r}"
        )
    _emit("\n".join(rows) + "\n", args.output)
    return 0


def cmd_simulate(args) -> int:
    g = _resolve_graph(args)
    grid = _resolve_grid(args)
    if not grid:
        raise ValueError("simulate needs --p or --p-grid")
    source = None if args.uniform_source else args.source
    rows = ["p,samples,mean_S,se_S,mean_S2,se_S2,seed"]
    for p in grid:
        cfg = mc.SimConfig(p=p, samples=args.samples, seed=args.seed, source=source)
        res = mc.sample_cluster_size(g, cfg)
        rows.append(
            f"{res.p!r},{res.samples},{res.mean_size!r},{res.se_size!r},"
            f"{res.mean_square!r},{res.se_square!r},{res.seed}"
        )
    _emit("\n".join(rows) + "\n", args.output)
    return 0


def cmd_paths(args) -> int:
    g = _resolve_graph(args)
    if (args.pair is None) == (args.from_distance is None):
        raise ValueError("give exactly one of --pair or --from-distance")
    if args.pair is not None:
        x, y = args.pair
    else:
        x = args.source
        classes = distance_classes(g, x)
        s = args.from_distance
        if not 1 <= s <= classes.radius:
            raise ValueError(
                f"distance {s} out of range 1..{classes.radius} from vertex {x}"
            )
        y = classes.classes[s][0]
    family = enumerate_paths(g, x, y, cutoff=args.cutoff)
    cutoff_text = args.cutoff if args.cutoff is not None else "none"
    lines = [f"{x} {y} {len(family)} {cutoff_text}"]
    for mask in family.paths:
        edge_ids = [str(e) for e in range(g.n_edges) if (mask >> e) & 1]
        lines.append(",".join(edge_ids))
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _verification_checks(long: bool, threads: int | None):
    """Yield (name, passed, detail) tuples for the verification table."""
    grid = [round(0.05 * k, 2) for k in range(1, 20)]

    for name, expected in reference.EXACT_FIRST_MOMENT_COEFFS.items():
        report = ie.first_moment(make_solid(name), threads=threads)
        yield (
            f"first moment exact: {name}",
            report.poly.coeffs == expected and report.kind == "exact",
            f"coeffs {report.poly.coeffs}",
        )
    for name, expected in reference.EXACT_SECOND_MOMENT_COEFFS.items():
        report = ie.second_moment(make_solid(name), threads=threads)
        yield (
            f"second moment exact: {name}",
            report.poly.coeffs == expected,
            f"coeffs {report.poly.coeffs}",
        )
    for name, expected in reference.LOWER_BOUND_FIRST_MOMENT_COEFFS.items():
        cutoff = reference.LOWER_BOUND_CUTOFFS[name]
        report = ie.first_moment(make_solid(name), cutoff=cutoff, threads=threads)
        yield (
            f"first moment lower bound: {name} (cutoff {cutoff})",
            report.poly.coeffs == expected and report.kind == "lower_bound",
            f"coeffs {report.poly.coeffs}",
        )

    for name, counts in reference.PATH_COUNTS_BY_DISTANCE.items():
        g = make_solid(name)
        classes = distance_classes(g, 0)
        got = tuple(
            len(enumerate_paths(g, 0, classes.classes[s][0]))
            for s in range(1, classes.radius + 1)
        )
        yield (f"path counts by distance: {name}", got == counts, f"{got}")

    tetra = make_solid("tetrahedron")
    pair = enumerate_pair_events(tetra, 0, 1, 2)
    yield (
        "tetrahedron minimal pair events",
        len(pair) == reference.TETRAHEDRON_PAIR_EVENTS,
        f"{len(pair)}",
    )

    for name in ("tetrahedron", "cube", "octahedron"):
        g = make_solid(name)
        got = oracle_mod.exhaustive_moment(g, 1, threads=threads)
        expected_poly = IntPolynomial(reference.EXACT_FIRST_MOMENT_COEFFS[name])
        yield (
            f"oracle matches engine, first moment: {name}",
            got == expected_poly,
            f"coeffs {got.coeffs}",
        )
    got = oracle_mod.exhaustive_moment(tetra, 2, threads=threads)
    yield (
        "oracle matches engine, second moment: tetrahedron",
        got.coeffs == reference.EXACT_SECOND_MOMENT_COEFFS["tetrahedron"],
        f"coeffs {got.coeffs}",
    )

    slack = 1e-9
    for name in ("tetrahedron", "cube", "octahedron"):
        g = make_solid(name)
        tally = oracle_mod.exhaustive_tally(g, threads=threads)
        es = oracle_mod.tally_to_moment_polynomial(tally, 1)
        es2 = oracle_mod.tally_to_moment_polynomial(tally, 2)
        degree, n = g.degree, g.n_vertices
        ok = True
        for p in grid:
            inputs = bounds_mod.BoundInputs(degree, n, p)
            if bounds_mod.branching_first_moment_bound(inputs) < es.eval(p) - slack:
                ok = False
            if bounds_mod.branching_second_moment_bound(inputs) < es2.eval(p) - slack:
                ok = False
            if bounds_mod.plarge_first_moment_bound(degree, n, p) < es.eval(p) - slack:
                ok = False
            if (
                bounds_mod.plarge_second_moment_bound(degree, n, p)
                < es2.eval(p) - slack
            ):
                ok = False
        yield (f"bounds dominate exact moments: {name}", ok, "grid 0.05..0.95")

    for name in SOLID_NAMES:
        g = make_solid(name)
        masks = mc.realization_masks(g, 0.5, 1000, seed=20260801)
        ok = all(
            mc.birth_process(g, int(mask), 0).total_particles
            == len(mc.open_cluster_vertices(g, int(mask), 0))
            for mask in masks
        )
        yield (f"growth process total equals cluster size: {name}", ok, "1000 draws")

    exact = {
        name: IntPolynomial(coeffs)
        for name, coeffs in reference.EXACT_FIRST_MOMENT_COEFFS.items()
    }
    exact.update(
        {
            name: IntPolynomial(coeffs)
            for name, coeffs in reference.EXHAUSTIVE_FIRST_MOMENT_COEFFS.items()
        }
    )
    for name in SOLID_NAMES:
        g = make_solid(name)
        ok = True
        detail = []
        for p in (0.2, 0.5, 0.8):
            res = mc.sample_cluster_size(
                g, mc.SimConfig(p=p, samples=20000, seed=20260802)
            )
            err = abs(res.mean_size - exact[name].eval(p))
            if err > 4 * max(res.se_size, 1e-12):
                ok = False
            detail.append(f"p={p}: err {err:.4f}")
        yield (f"Monte Carlo means track exact values: {name}", ok, "; ".join(detail))

    if long:
        for name in ("dodecahedron", "icosahedron"):
            g = make_solid(name)
            tally = oracle_mod.exhaustive_tally(g, threads=threads)
            es = oracle_mod.tally_to_moment_polynomial(tally, 1)
            es2 = oracle_mod.tally_to_moment_polynomial(tally, 2)
            frozen1 = reference.EXHAUSTIVE_FIRST_MOMENT_COEFFS[name]
            frozen2 = reference.EXHAUSTIVE_SECOND_MOMENT_COEFFS[name]
            lower = IntPolynomial(reference.LOWER_BOUND_FIRST_MOMENT_COEFFS[name])
            dominated = all(lower.eval(p) <= es.eval(p) + 1e-9 for p in grid)
            endpoints = (
                abs(lower.eval(0.0) - es.eval(0.0)) < 1e-12
                and abs(lower.eval(1.0) - es.eval(1.0)) < 1e-9
            )
            yield (
                f"exhaustive 2^30 enumeration: {name}",
                es.coeffs == frozen1 and es2.coeffs == frozen2 and dominated
                and endpoints,
                "matches frozen vectors; cutoff bound dominated",
            )


def cmd_verify(args) -> int:
    failures = 0
    for name, passed, detail in _verification_checks(args.long, args.threads):
        status = "PASS" if passed else "FAIL"
        if not passed:
            failures += 1
        print(f"[{status}] {name}: {detail}")
    total = "all checks passed" if failures == 0 else f"{failures} check(s) FAILED"
    print(total)
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="platperc",
        description=(
            "Exact cluster-size moment polynomials for bond percolation on "
            "finite regular graphs, with bounds, sampling, and an "
            "exhaustive oracle."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mom = sub.add_parser("moments", help="inclusion-exclusion moment polynomials")
    _add_graph_arguments(p_mom)
    _add_grid_arguments(p_mom)
    p_mom.add_argument("--moment", type=int, choices=(1, 2), default=1)
    p_mom.add_argument("--cutoff", type=int, default=None,
                       help="max path length (first moment only)")
    p_mom.add_argument("--skip-homogeneity-check", action="store_true")
    p_mom.add_argument("--format", choices=("text", "json"), default="text")
    p_mom.add_argument("--output", default=None)
    p_mom.add_argument("--threads", type=int, default=None)
    p_mom.set_defaults(func=cmd_moments)

    p_orc = sub.add_parser("oracle", help="exhaustive-enumeration moments")
    _add_graph_arguments(p_orc)
    _add_grid_arguments(p_orc)
    p_orc.add_argument("--moment", type=int, choices=(1, 2), default=1)
    p_orc.add_argument("--source", type=int, default=0)
    p_orc.add_argument("--long", action="store_true",
                       help="allow graphs beyond 2^20 configurations")
    p_orc.add_argument("--tally-out", default=None,
                       help="write the per-(j,s) tally as CSV")
    p_orc.add_argument("--format", choices=("text", "json"), default="text")
    p_orc.add_argument("--output", default=None)
    p_orc.add_argument("--threads", type=int, default=None)
    p_orc.set_defaults(func=cmd_oracle)

    p_bnd = sub.add_parser("bounds", help="closed-form moment bounds as CSV")
    _add_graph_arguments(p_bnd)
    _add_grid_arguments(p_bnd)
    p_bnd.add_argument("--long", action="store_true",
                       help="compute exact columns for 30-edge graphs")
    p_bnd.add_argument("--output", default=None)
    p_bnd.add_argument("--threads", type=int, default=None)
    p_bnd.set_defaults(func=cmd_bounds)

    p_sim = sub.add_parser("simulate", help="Monte Carlo cluster-size sampling")
    _add_graph_arguments(p_sim)
    _add_grid_arguments(p_sim)
    p_sim.add_argument("--samples", type=int, default=100000)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--source", type=int, default=0)
    p_sim.add_argument("--uniform-source", action="store_true",
                       help="redraw the source uniformly for every sample")
    p_sim.add_argument("--output", default=None)
    p_sim.set_defaults(func=cmd_simulate)

    p_pth = sub.add_parser("paths", help="dump self-avoiding paths")
    _add_graph_arguments(p_pth)
    p_pth.add_argument("--pair", nargs=2, type=int, metavar=("X", "Y"))
    p_pth.add_argument("--from-distance", type=int, default=None,
                       help="target = first vertex at this distance from --source")
    p_pth.add_argument("--source", type=int, default=0)
    p_pth.add_argument("--cutoff", type=int, default=None)
    p_pth.add_argument("--output", default=None)
    p_pth.set_defaults(func=cmd_paths)

    p_ver = sub.add_parser("verify", help="run the verification table")
    p_ver.add_argument("--long", action="store_true",
                       help="include the 2^30 exhaustive runs (minutes)")
    p_ver.add_argument("--threads", type=int, default=None)
    p_ver.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

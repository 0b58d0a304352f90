"""Command-line entry point.

Artifacts (design, hypergraph and graph files) go to ``--output``; the
report goes to stdout as JSON or as ``key: value`` text.  Exit status is 0
on success, 2 on bad input or a violated precondition, 1 when a
construction fails its own postcondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import blowup, colorgraph, designs, graphs, hypergraph, lp, search
from .errors import InvariantViolation, PreconditionError


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
    else:
        for key, value in report.items():
            print(f"{key}: {value}")


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)


def _props_json(H: hypergraph.Hypergraph) -> dict:
    p = hypergraph.properties(H)
    return {
        "n": H.n,
        "m": H.num_edges,
        "rank": p.rank,
        "proportional_rank": lp.fmt_rational(p.proportional_rank),
        "delta_star": p.delta_star,
        "num_color_classes": p.num_color_classes,
        "max_degree": p.max_degree,
    }


def cmd_plane(args) -> dict:
    plane = designs.affine_plane(args.q, args.cap)
    _write(args.output, designs.format_design(plane.lines, plane.parallel_classes))
    report = designs.verify_design(plane.lines, args.q**2, args.q, plane.parallel_classes)
    return {
        "q": plane.q,
        "points": args.q**2,
        "lines": len(plane.lines),
        "parallel_classes": len(plane.parallel_classes),
        "verified": report.ok,
    }


def cmd_hr(args) -> dict:
    H = hypergraph.build_hr(args.r, args.cap)
    _write(args.output, hypergraph.format_hypergraph(H))
    return _props_json(H)


def _load_weights(source: str, n: int) -> hypergraph.WeightAssignment:
    if source == "uniform":
        return hypergraph.WeightAssignment.uniform(n)
    try:
        values = [Fraction(x) for x in Path(source).read_text().split()]
    except (ValueError, ZeroDivisionError) as exc:
        raise PreconditionError(f"bad weights file: {exc}") from exc
    if len(values) != n:
        raise PreconditionError(f"weights file has {len(values)} values, need {n}")
    try:
        return hypergraph.WeightAssignment(tuple(values))
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc


def cmd_perturb(args) -> dict:
    H = hypergraph.parse_hypergraph(Path(args.input).read_text())
    w = _load_weights(args.weights, H.n)
    top = hypergraph.top_level(H, w)
    m, witness = lp.perfect_fractional_matching(top)
    out = {"top_level_edges": [list(e) for e in top.edges]}
    if m is not None:
        out["perturbable"] = False
        out["certificate"] = m.certificate()
    else:
        p = lp.perturbation_from_witness(top, witness)
        out["perturbable"] = True
        out["certificate"] = p.certificate()
        out["farkas"] = witness.certificate()
        if all(x > 0 for x in w.weights):
            new = lp.apply_perturbation(w, p, args.eps)
            out["perturbed_weights"] = [lp.fmt_rational(x) for x in new.weights]
    _write(args.output, json.dumps(out["certificate"], indent=2) + "\n")
    return out


def _audit(G: graphs.ColoredGraph) -> dict:
    return graphs.analyze(G).to_json()


def cmd_construct(args) -> dict:
    G = blowup.build_theorem_3_2_graph(args.r, args.c, args.n, args.cap, materialize=True)
    _write(args.output, graphs.format_graph(G))
    return _audit(G)


def cmd_gys(args) -> dict:
    G = blowup.gys_construction(args.r, args.n, args.cap)
    _write(args.output, graphs.format_graph(G))
    return _audit(G)


def cmd_analyze(args) -> dict:
    G = graphs.parse_graph(Path(args.input).read_text())
    return _audit(G)


def cmd_oracle(args) -> dict:
    if args.input:
        G = graphs.parse_graph(Path(args.input).read_text())
    elif args.complete is not None:
        G = colorgraph.complete_graph(args.complete)
    else:
        raise PreconditionError("oracle needs --complete N or --input FILE")
    cap = args.cap if args.cap is not None else colorgraph.DEFAULT_ORACLE_CAP
    return {"n": G.n, "colors": args.colors, "mc": colorgraph.mc_oracle(G, args.colors, cap)}


def cmd_bounds(args) -> dict:
    return colorgraph.known_bounds(args.r, args.n).to_json()


def cmd_rbibd(args) -> dict:
    params = designs.rbibd_coloring_params(args.k, args.t)
    out = {
        "k": args.k,
        "t": args.t,
        "v": params.v,
        "num_colors": params.num_colors,
        "component_bound_fraction": lp.fmt_rational(params.component_bound_fraction),
    }
    if (args.k, args.t) == (3, 1):
        design = designs.kirkman_15()
    elif args.t == 0 and designs.plane_exists_known(args.k):
        design = designs.affine_plane(args.k, args.cap).as_rbibd()
    else:
        out["design_available"] = False
        return out
    out["design_available"] = True
    if args.n is None:
        _write(args.output, designs.format_design(design.blocks, design.parallel_classes))
        return out
    G = colorgraph.fact_5_2_coloring(design, args.n)
    _write(args.output, graphs.format_graph(G))
    out["audit"] = _audit(G)
    return out


def cmd_search(args) -> dict:
    max_r = args.cap if args.cap is not None else search.DEFAULT_MAX_R
    return search.survey(args.r, max_r, workers=args.workers).to_json()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mcgraphs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *flags, cap_default=designs.DEFAULT_ORDER_CAP):
        p = sub.add_parser(name)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=["text", "json"], default="json")
        p.add_argument("--output", "-o")
        p.add_argument("--cap", type=int, default=cap_default)
        for flag in flags:
            # a trailing "?" marks an optional flag
            name = flag.rstrip("?")
            p.add_argument(f"--{name}", type=int, required=not flag.endswith("?"))
        return p

    add("plane", cmd_plane, "q")
    add("hr", cmd_hr, "r")
    p = add("perturb", cmd_perturb)
    p.add_argument("--input", required=True)
    p.add_argument("--weights", default="uniform")
    p.add_argument("--eps", type=_rational)
    add("construct", cmd_construct, "r", "c", "n")
    add("gys", cmd_gys, "r", "n")
    p = add("analyze", cmd_analyze)
    p.add_argument("--input", required=True)
    p = add("oracle", cmd_oracle, "colors", "complete?", cap_default=None)
    p.add_argument("--input")
    add("bounds", cmd_bounds, "r", "n")
    add("rbibd", cmd_rbibd, "k", "t", "n?")
    p = add("search-s", cmd_search, "r", cap_default=None)
    p.add_argument("--workers", type=int, default=1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"internal invariant failed: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())

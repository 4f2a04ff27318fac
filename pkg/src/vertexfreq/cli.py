"""Command-line interface.

One binary, subcommand per task, machine-stable output: numbers print with
12 significant digits, JSON objects sort their keys, and equal inputs give
byte-identical output.  Exit codes: 0 success, 1 domain error (bad graph
file, singular operator, ...), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import generators
from .fiedler import (
    HARNESS_FAMILIES,
    fiedler,
    lift_common_eigenvector,
    partition,
    planar_family_harness,
    verify_barren,
    zero_ball_scan,
)
from .graphs import (
    Graph,
    format_dot,
    format_edgelist,
    graph_from_json,
    graph_to_json,
    parse_edgelist,
)
from .operators import (
    FailureWitness,
    gft,
    semigroup_table,
    translate,
    translation_analysis,
)
from .spectral import eigendecompose

__all__ = ["main"]


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _json_ready(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(_fmt(float(obj)))
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(_fmt(obj.real)), float(_fmt(obj.imag))]
    if isinstance(obj, np.ndarray):
        return [_json_ready(v) for v in obj.tolist()]
    if isinstance(obj, dict):
        return {k: _json_ready(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_ready(v) for v in obj]
    return obj


def _print_json(obj) -> None:
    print(json.dumps(_json_ready(obj), sort_keys=True))


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _read_graph(path: str, fmt: str | None) -> Graph:
    text = _read_text(path)
    if fmt is None:
        fmt = "json" if path.endswith(".json") else "edgelist"
    if fmt == "json":
        return graph_from_json(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ValueError(f"unknown graph input format {fmt!r}")


def _read_signal(path: str) -> np.ndarray:
    values = []
    is_complex = False
    for raw in _read_text(path).splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "," in line:
            re_s, im_s = line.split(",", 1)
            values.append(complex(float(re_s), float(im_s)))
            is_complex = True
        else:
            values.append(float(line))
    if not values:
        raise ValueError("empty signal input")
    return np.array(values, dtype=complex if is_complex else float)


def _print_signal(arr: np.ndarray) -> None:
    if np.iscomplexobj(arr):
        for z in arr:
            print(f"{_fmt(z.real)},{_fmt(z.imag)}")
    else:
        for x in arr:
            print(_fmt(float(x)))


def _bool(b: bool) -> str:
    return "true" if b else "false"


# --- subcommand handlers ----------------------------------------------------


def _cmd_generate(args) -> int:
    family = args.family
    p = args.params
    builders = {
        "path": (1, lambda: generators.path(p[0])),
        "cycle": (1, lambda: generators.cycle(p[0])),
        "complete": (1, lambda: generators.complete(p[0])),
        "star": (1, lambda: generators.star(p[0])),
        "complete-bipartite": (2, lambda: generators.complete_bipartite(p[0], p[1])),
        "grid": (2, lambda: generators.grid(p[0], p[1])),
        "ladder": (2, lambda: generators.generalized_ladder(p[0], p[1])),
        "duplicated-middle-path": (2, lambda: generators.duplicated_middle_path(p[0], p[1])),
        "barren": (1, lambda: generators.barren(p[0])[0]),
    }
    if family not in builders:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(builders)}")
    arity, build = builders[family]
    if len(p) != arity:
        raise ValueError(f"{family} takes {arity} parameter(s), got {len(p)}")
    g = build()
    if args.format == "json":
        print(graph_to_json(g))
    elif args.format == "dot":
        sys.stdout.write(format_dot(g))
    else:
        sys.stdout.write(format_edgelist(g))
    return 0


def _cmd_spectrum(args) -> int:
    g = _read_graph(args.graph, args.format)
    basis = eigendecompose(g)
    if args.json:
        _print_json(
            {
                "eigenvalues": basis.eigenvalues,
                "vectors": [basis.vectors[:, k] for k in range(basis.n)],
            }
        )
    else:
        for lam in basis.eigenvalues:
            print(_fmt(float(lam)))
    return 0


def _cmd_gft(args) -> int:
    g = _read_graph(args.graph, args.format)
    basis = eigendecompose(g)
    coeffs = gft(basis, _read_signal(args.signal))
    if args.json:
        _print_json({"coefficients": coeffs})
    else:
        _print_signal(coeffs)
    return 0


def _cmd_translate(args) -> int:
    g = _read_graph(args.graph, args.format)
    basis = eigendecompose(g)
    out = translate(basis, args.vertex, _read_signal(args.signal))
    if args.json:
        _print_json({"signal": out})
    else:
        _print_signal(out)
    return 0


def _cmd_analyze_translation(args) -> int:
    g = _read_graph(args.graph, args.format)
    basis = eigendecompose(g)
    a = translation_analysis(basis, args.vertex, args.tol)
    if args.json:
        _print_json(
            {
                "vertex": a.vertex,
                "rank": a.rank,
                "invertible": a.invertible,
                "unitary": a.unitary,
                "vanishing": list(a.vanishing_indices),
                "tol": a.tol,
                "kappa": a.kappa,
            }
        )
    else:
        print(f"vertex={a.vertex}")
        print(f"rank={a.rank}")
        print(f"invertible={_bool(a.invertible)}")
        print(f"unitary={_bool(a.unitary)}")
        print(f"vanishing={list(a.vanishing_indices)}")
        print(f"tol={_fmt(a.tol)}")
        if a.kappa is not None:
            print(f"kappa={_fmt(a.kappa)}")
    return 0


def _cmd_semigroup(args) -> int:
    g = _read_graph(args.graph, args.format)
    basis = eigendecompose(g)
    result = semigroup_table(basis, args.tol if args.tol is not None else 1e-8)
    if isinstance(result, FailureWitness):
        if args.json:
            _print_json({"witness": {"i": result.pair[0], "j": result.pair[1], "product": result.product}})
        else:
            print(f"witness i={result.pair[0]} j={result.pair[1]}")
            _print_signal(result.product)
        return 0
    if args.json:
        _print_json({"table": result})
    else:
        for row in result:
            print(" ".join(str(int(v)) for v in row))
    return 0


def _cmd_fiedler(args) -> int:
    g = _read_graph(args.graph, args.format)
    basis = eigendecompose(g)
    vec, mult = fiedler(basis)
    if args.json:
        _print_json(
            {
                "algebraic_connectivity": basis.eigenvalues[1],
                "multiplicity": mult,
                "vector": vec,
            }
        )
    else:
        print(f"lambda1={_fmt(float(basis.eigenvalues[1]))}")
        print(f"multiplicity={mult}")
        _print_signal(vec)
    return 0


def _cmd_scan_zeros(args) -> int:
    g = _read_graph(args.graph, args.format)
    basis = eigendecompose(g)
    vec, mult = fiedler(basis)
    p = partition(vec, args.tol)
    report = zero_ball_scan(g, p)
    if args.json:
        _print_json(
            {
                "zero_set": list(report.zero_set),
                "multiplicity": mult,
                "contained_balls": [
                    {"center": c, "members": list(b)} for c, b in report.contained_balls
                ],
                "max_ball_size": report.max_ball_size,
            }
        )
    else:
        print(f"zero={list(report.zero_set)}")
        print(f"multiplicity={mult}")
        for center, members in report.contained_balls:
            print(f"ball center={center} size={len(members)} members={list(members)}")
        print(f"max_ball_size={report.max_ball_size}")
    return 0


def _cmd_verify_barren(args) -> int:
    report = verify_barren(args.n, args.tol if args.tol is not None else 1e-8)
    if args.json:
        _print_json(
            {
                "n": report.size_param,
                "spectrum_ok": report.spectrum_ok,
                "support_ok": report.support_ok,
                "zero_set_ok": report.zero_set_ok,
                "shape_ok": report.shape_ok,
                "passed": report.passed,
                "lambda1": report.lambda1,
                "y1": report.y1,
                "a": report.a,
                "b": report.b,
                "support": list(report.support),
                "eigenvalues": list(report.eigenvalues),
                "diagnostics": list(report.diagnostics),
            }
        )
    else:
        print(f"n={report.size_param}")
        print(f"spectrum_ok={_bool(report.spectrum_ok)}")
        print(f"support_ok={_bool(report.support_ok)}")
        print(f"zero_set_ok={_bool(report.zero_set_ok)}")
        print(f"shape_ok={_bool(report.shape_ok)}")
        print(f"passed={_bool(report.passed)}")
        print(f"lambda1={report.lambda1:.12f}")
        print(f"y1={report.y1:.12f}")
        print(f"a={report.a:.12f}")
        print(f"b={report.b:.12f}")
        for line in report.diagnostics:
            print(f"diagnostic: {line}")
    return 0 if report.passed else 1


def _cmd_lift(args) -> int:
    spec = json.loads(_read_text(args.spec))
    try:
        components = [
            (
                Graph(int(c["graph"]["n"]), tuple((int(u), int(v)) for u, v in c["graph"]["edges"])),
                float(c["eigenvalue"]),
                np.asarray(c["vector"], dtype=float),
            )
            for c in spec["components"]
        ]
        connecting = [((int(j), int(u)), (int(l), int(v))) for (j, u), (l, v) in spec["connecting_edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed lift spec: {exc}") from exc
    result = lift_common_eigenvector(components, connecting)
    union_basis = eigendecompose(result.graph)
    _print_json(
        {
            "n": result.graph.n,
            "eigenvalue": result.eigenvalue,
            "residual": result.residual,
            "vector": result.eigenvector,
            "second_eigenvalue": union_basis.eigenvalues[1],
        }
    )
    return 0


def _cmd_harness_planar(args) -> int:
    workers = int(os.environ.get("VERTEXFREQ_THREADS", "1"))
    report = planar_family_harness(args.family, tol=args.tol, max_workers=max(1, workers))
    if args.json:
        _print_json(
            {
                "family": report.family,
                "max_ball_size": report.max_ball_size,
                "bound_satisfied": report.bound_satisfied,
                "instances": [
                    {
                        "label": inst.label,
                        "n": inst.n,
                        "multiplicity": inst.fiedler_multiplicity,
                        "contained_balls": inst.contained_ball_count,
                        "max_ball_size": inst.max_ball_size,
                    }
                    for inst in report.instances
                ],
            }
        )
    else:
        for inst in report.instances:
            print(
                f"{inst.label} n={inst.n} balls={inst.contained_ball_count} "
                f"max={inst.max_ball_size} multiplicity={inst.fiedler_multiplicity}"
            )
        print(f"max_ball_size={report.max_ball_size}")
        print(f"bound_satisfied={_bool(report.bound_satisfied)}")
    return 0


# --- parser -----------------------------------------------------------------


def _add_graph_arg(sub, with_tol=False):
    sub.add_argument("graph", help="graph file (.edges or .json), or - for stdin")
    sub.add_argument("--format", choices=["edgelist", "json"], default=None, help="input format override")
    sub.add_argument("--json", action="store_true", help="emit JSON instead of text")
    if with_tol:
        sub.add_argument("--tol", type=float, default=None)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vertexfreq",
        description="Vertex-frequency analysis on finite undirected graphs",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("generate", help="emit a named graph family")
    p.add_argument("family")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--format", choices=["edgelist", "json", "dot"], default="edgelist")
    p.set_defaults(handler=_cmd_generate)

    p = subs.add_parser("spectrum", help="Laplacian eigenvalues (and vectors with --json)")
    _add_graph_arg(p)
    p.set_defaults(handler=_cmd_spectrum)

    p = subs.add_parser("gft", help="graph Fourier transform of a signal")
    _add_graph_arg(p)
    p.add_argument("signal", help="signal CSV file, one value per line (re,im for complex)")
    p.set_defaults(handler=_cmd_gft)

    p = subs.add_parser("translate", help="translate a signal to a vertex")
    _add_graph_arg(p)
    p.add_argument("signal")
    p.add_argument("--vertex", type=int, required=True)
    p.set_defaults(handler=_cmd_translate)

    p = subs.add_parser("analyze-translation", help="rank/invertibility of one translation operator")
    _add_graph_arg(p, with_tol=True)
    p.add_argument("--vertex", type=int, required=True)
    p.set_defaults(handler=_cmd_analyze_translation)

    p = subs.add_parser("semigroup", help="search for a translation composition table")
    _add_graph_arg(p, with_tol=True)
    p.set_defaults(handler=_cmd_semigroup)

    p = subs.add_parser("fiedler", help="second eigenvalue and eigenvector")
    _add_graph_arg(p)
    p.set_defaults(handler=_cmd_fiedler)

    p = subs.add_parser("scan-zeros", help="zero set of the Fiedler vector and its balls")
    _add_graph_arg(p, with_tol=True)
    p.set_defaults(handler=_cmd_scan_zeros)

    p = subs.add_parser("verify-barren", help="check a barren graph against its closed form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_verify_barren)

    p = subs.add_parser("lift", help="glue component eigenvectors along zero vertices")
    p.add_argument("--spec", required=True, help="JSON file: components + connecting_edges")
    p.set_defaults(handler=_cmd_lift)

    p = subs.add_parser("harness-planar", help="zero-set ball sweep over a graph family")
    p.add_argument("family", choices=list(HARNESS_FAMILIES))
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_harness_planar)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except Exception as exc:  # CLI boundary: one-line diagnostics, never a traceback
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

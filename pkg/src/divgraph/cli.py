"""Command-line interface.

Subcommands: `info` (degrees, genus, canonical divisor), `reduce` (unique
reduced representative), `dim` (linear-system dimensions and the
Riemann-Roch residual), `nset` (extremal empty-system divisors), and `fuzz`
(seeded invariant harness).  Exit codes: 0 success, 1 verification failure,
2 input error.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Optional, TextIO

from .files import (
    ParseError,
    format_divisor,
    format_rational,
    format_vector,
    parse_divisor,
    parse_graph,
)
from .fuzz import run_fuzz
from .generate import PROFILES
from .lattice import is_equivalent
from .linsys import (
    dimension_witness,
    extremal_empty_divisors,
    linear_system_dimension,
    riemann_roch_residual,
)
from .oracle import MAX_OFFBASE_VERTICES
from .reduction import is_reduced, linear_system_nonempty, reduce_divisor


def _load_graph(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_graph(handle.read())


def _load_divisor(path: str, n_vertices: int):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_divisor(handle.read(), n_vertices)


def cmd_info(args: argparse.Namespace, out: TextIO) -> int:
    graph = _load_graph(args.graph)
    print(f"vertices {graph.n_vertices}", file=out)
    for v in range(graph.n_vertices):
        print(f"degree v{v} {format_rational(graph.degree(v))}", file=out)
    print(f"genus {format_rational(graph.genus())}", file=out)
    print(f"canonical {format_divisor(graph.canonical_divisor())}", file=out)
    return 0


def cmd_reduce(args: argparse.Namespace, out: TextIO) -> int:
    graph = _load_graph(args.graph)
    divisor = _load_divisor(args.divisor, graph.n_vertices)
    result = reduce_divisor(graph, divisor)
    print(f"reduced {format_divisor(result.reduced)}", file=out)
    print(f"certificate {format_vector(result.certificate)}", file=out)
    print(f"burn-order {format_vector(result.burn_order)}", file=out)
    if args.self_check:
        if not is_reduced(graph, result.reduced):
            print("self-check: output is not reduced", file=out)
            return 1
        if is_equivalent(graph, result.reduced, divisor) is None:
            print("self-check: output is not equivalent to the input", file=out)
            return 1
        print("self-check: ok", file=out)
    return 0


def cmd_dim(args: argparse.Namespace, out: TextIO) -> int:
    graph = _load_graph(args.graph)
    divisor = _load_divisor(args.divisor, graph.n_vertices)
    dimension, witness = dimension_witness(graph, divisor)
    canonical = graph.canonical_divisor()
    dual = linear_system_dimension(graph, canonical - divisor)
    residual = riemann_roch_residual(graph, divisor)
    print(f"degree {format_rational(divisor.degree())}", file=out)
    print(f"dim {format_rational(dimension)}", file=out)
    print(f"dim-canonical-dual {format_rational(dual)}", file=out)
    print(f"rr-residual {format_rational(residual)}", file=out)
    print(f"witness {format_divisor(witness)}", file=out)
    return 0


def cmd_nset(args: argparse.Namespace, out: TextIO) -> int:
    graph = _load_graph(args.graph)
    elements = extremal_empty_divisors(graph)
    n = graph.n_vertices - 1
    print(f"count {len(elements)}", file=out)
    print(f"bound {math.factorial(n)}", file=out)
    genus = graph.genus()
    for elem in elements:
        if not is_reduced(graph, elem.divisor):
            print(f"verification failed: {format_divisor(elem.divisor)} not reduced", file=out)
            return 1
        if linear_system_nonempty(graph, elem.divisor):
            print(f"verification failed: {format_divisor(elem.divisor)} not empty", file=out)
            return 1
        if elem.divisor.degree() != genus - 1:
            print(f"verification failed: {format_divisor(elem.divisor)} has wrong degree", file=out)
            return 1
        print(
            f"element {format_divisor(elem.divisor)} witness {format_vector(elem.witness_order)}",
            file=out,
        )
    return 0


def cmd_fuzz(args: argparse.Namespace, out: TextIO) -> int:
    if args.count < 1:
        print("error: --count must be positive", file=sys.stderr)
        return 2
    if args.max_n < 1:
        print("error: --max-n must be positive", file=sys.stderr)
        return 2
    if args.profile == "int" and args.max_n > MAX_OFFBASE_VERTICES:
        print(
            f"error: profile int runs oracle differentials; --max-n must be"
            f" <= {MAX_OFFBASE_VERTICES}",
            file=sys.stderr,
        )
        return 2
    return run_fuzz(args.seed, args.count, args.profile, args.max_n, out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divgraph",
        description="Exact linear systems of divisors on edge-weighted graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", help="degrees, genus, canonical divisor")
    info.add_argument("--graph", required=True, help="graph file")
    info.set_defaults(func=cmd_info)

    reduce_p = sub.add_parser("reduce", help="unique reduced representative")
    reduce_p.add_argument("--graph", required=True, help="graph file")
    reduce_p.add_argument("--divisor", required=True, help="divisor file")
    reduce_p.add_argument(
        "--self-check", action="store_true", help="verify the output before exiting"
    )
    reduce_p.set_defaults(func=cmd_reduce)

    dim = sub.add_parser("dim", help="linear-system dimension and Riemann-Roch residual")
    dim.add_argument("--graph", required=True, help="graph file")
    dim.add_argument("--divisor", required=True, help="divisor file")
    dim.set_defaults(func=cmd_dim)

    nset = sub.add_parser("nset", help="extremal empty-system divisors")
    nset.add_argument("--graph", required=True, help="graph file")
    nset.set_defaults(func=cmd_nset)

    fuzz = sub.add_parser("fuzz", help="seeded invariant fuzzing")
    fuzz.add_argument("--seed", type=int, default=0, help="stream seed")
    fuzz.add_argument("--count", type=int, default=100, help="number of cases")
    fuzz.add_argument("--profile", choices=PROFILES, default="rational")
    fuzz.add_argument(
        "--max-n", type=int, default=4, help="largest number of non-base vertices"
    )
    fuzz.set_defaults(func=cmd_fuzz)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

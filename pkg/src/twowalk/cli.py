"""Command line interface. JSON goes to stdout, diagnostics to stderr.

Exit codes: 0 success, 1 verification failure, 2 bad input or usage,
3 graph not 2K2-free, 4 Hall failure (certificate emitted),
5 construction and fallback both failed, 6 size limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import analysis
from .analysis import TooLarge, find_2k2, maximum_cliques, toughness_exact
from .generators import (
    Exhausted,
    SplitMix64,
    fixed_graph,
    gen_co_chordal,
    gen_filtered_2tough,
    gen_split,
)
from .graph import Graph, ParseError, Walk, is_connected, read_graph, serialize_graph
from .pipeline import NoWalkFound, two_walk
from .tower import NotTwoK2Free, clique_tower
from .verify import verify_certificate, verify_two_walk

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_NOT_2K2_FREE = 3
EXIT_HALL = 4
EXIT_NO_WALK = 5
EXIT_TOO_LARGE = 6

FAMILIES = ("split", "co_chordal", "filtered_2tough")


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload) + "\n")


def _load(path: str) -> Graph | None:
    try:
        return read_graph(path)
    except (OSError, ParseError) as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return None


def cmd_check(args) -> int:
    g = _load(args.graph)
    if g is None:
        return EXIT_INPUT
    witness = find_2k2(g)
    cliques = maximum_cliques(g)
    _emit(
        {
            "n": g.n,
            "m": g.m,
            "two_k2_free": witness is None,
            "witness": list(witness) if witness else None,
            "omega": len(cliques[0]) if cliques else 0,
            "connected": is_connected(g),
        }
    )
    return EXIT_OK if witness is None else EXIT_NOT_2K2_FREE


def cmd_walk(args) -> int:
    g = _load(args.graph)
    if g is None:
        return EXIT_INPUT
    try:
        result = two_walk(g, fallback_limit=args.fallback_limit)
    except NotTwoK2Free as exc:
        _emit({"error": "not 2K2-free", "witness": list(exc.witness or ())})
        return EXIT_NOT_2K2_FREE
    except NoWalkFound as exc:
        _emit({"error": str(exc)})
        return EXIT_NO_WALK
    payload = result.to_json()
    if args.trace:
        payload["trace"] = result.trace.to_json()
    _emit(payload)
    return EXIT_OK if result.walk is not None else EXIT_HALL


def cmd_verify(args) -> int:
    g = _load(args.graph)
    if g is None:
        return EXIT_INPUT
    try:
        with open(args.walk, encoding="utf-8") as fh:
            doc = json.load(fh)
        walk = Walk([int(v) for v in doc["walk"]])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        print(f"error: {args.walk}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = verify_two_walk(g, walk)
    _emit(report.to_json())
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_toughness(args) -> int:
    g = _load(args.graph)
    if g is None:
        return EXIT_INPUT
    try:
        value = toughness_exact(g, limit_n=args.limit)
    except TooLarge as exc:
        _emit({"error": str(exc)})
        return EXIT_TOO_LARGE
    _emit({"n": g.n, "toughness": analysis.format_toughness(value)})
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = _load(args.graph)
    if g is None:
        return EXIT_INPUT
    witness = find_2k2(g)
    if witness is not None:
        print(f"error: induced 2K2 on {witness}", file=sys.stderr)
        return EXIT_NOT_2K2_FREE
    if g.m == 0:
        print("error: graph has no edges", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(clique_tower(g).serialize())
    return EXIT_OK


def cmd_gen(args) -> int:
    family = args.family
    if family == "split":
        g = gen_split(args.clique, args.indep, args.prob, args.seed, min_attach=args.min_attach)
        recipe = (
            f"family=split clique={args.clique} indep={args.indep} prob={args.prob} "
            f"min_attach={args.min_attach} seed={args.seed}"
        )
    elif family == "co_chordal":
        g = gen_co_chordal(args.n, args.prob, args.seed)
        recipe = f"family=co_chordal n={args.n} prob={args.prob} seed={args.seed}"
    elif family == "filtered_2tough":
        try:
            g = gen_filtered_2tough(args.n, args.seed, args.max_attempts)
        except Exhausted as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_NO_WALK
        recipe = f"family=filtered_2tough n={args.n} seed={args.seed} max_attempts={args.max_attempts}"
    else:
        try:
            g = fixed_graph(args.name)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        recipe = f"family=fixed name={args.name}"
    sys.stdout.write(serialize_graph(g, comment=f"gen {recipe}"))
    return EXIT_OK


def fuzz_instance(family: str, n: int, seed: int) -> Graph:
    rng = SplitMix64(seed)
    if family == "split":
        clique = max(1, n - rng.below(n // 2 + 1))
        return gen_split(clique, n - clique, rng.random(), rng.next_u64())
    if family == "co_chordal":
        return gen_co_chordal(n, rng.random(), rng.next_u64())
    if family == "filtered_2tough":
        return gen_filtered_2tough(n, rng.next_u64())
    raise ValueError(f"unknown family {family!r}")


def check_instance(g: Graph, oracle_limit: int = 16, fallback_limit: int = 14) -> tuple[list[str], dict]:
    """Run the pipeline and every cross-check on one graph; returns (problems, trace)."""
    problems: list[str] = []
    witness = find_2k2(g)
    if witness is not None:
        return [f"generator produced an induced 2K2 {witness}"], {}
    try:
        result = two_walk(g, fallback_limit=fallback_limit)
    except NoWalkFound as exc:
        return [str(exc)], {}
    tau = toughness_exact(g) if g.n <= oracle_limit else None
    if result.walk is not None:
        report = verify_two_walk(g, result.walk)
        problems += [f"walk: {c}: {d}" for c, d in report.violations]
        if result.path == "constructive":
            deg = result.trace.h.degrees()
            if result.walk.visit_counts != {v: deg[v] // 2 for v in range(g.n)}:
                problems.append("Euler circuit visit counts differ from degree/2")
    else:
        report = verify_certificate(g, result.certificate)
        problems += [f"certificate: {c}: {d}" for c, d in report.violations]
        if tau is not None and not tau < 2:
            problems.append(f"certificate emitted but toughness is {tau}")
    if tau is not None and tau >= 2 and (result.walk is None or result.path == "fallback"):
        problems.append("2-tough input did not take the constructive path")
    return problems, {"result": result.to_json(), "trace": result.trace.to_json()}


def _size_range(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError("expected a..b") from None
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError("expected 1 <= a <= b")
    return a, b


def cmd_fuzz(args) -> int:
    lo, hi = args.size_range
    summary = {"family": args.family, "count": args.count, "passed": 0, "failed": 0,
               "walks": 0, "certificates": 0, "failures": []}  # fmt: skip
    for i in range(args.count):
        seed = args.seed + i
        n = lo + i % (hi - lo + 1)
        try:
            g = fuzz_instance(args.family, n, seed)
        except Exhausted as exc:
            problems, trace, g = [str(exc)], {}, None
        else:
            problems, trace = check_instance(g)
        if problems:
            summary["failed"] += 1
            path = None
            if args.out:
                os.makedirs(args.out, exist_ok=True)
                path = os.path.join(args.out, f"{args.family}-{seed}.json")
                with open(path, "w", encoding="utf-8") as fh:
                    json.dump(
                        {
                            "seed": seed,
                            "n": n,
                            "problems": problems,
                            "graph": serialize_graph(g) if g else None,
                            **trace,
                        },
                        fh,
                        indent=2,
                    )
            summary["failures"].append({"seed": seed, "problems": problems, "file": path})
            print(f"instance seed={seed} failed: {problems}", file=sys.stderr)
        else:
            summary["passed"] += 1
            if "walk" in trace["result"]:
                summary["walks"] += 1
            else:
                summary["certificates"] += 1
    _emit(summary)
    return EXIT_OK if summary["failed"] == 0 else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twowalk", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="2K2-freeness, clique number, connectivity")
    p.add_argument("graph")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("walk", help="construct a 2-walk or a toughness certificate")
    p.add_argument("graph")
    p.add_argument("--trace", action="store_true", help="include tower, E', Gamma and H")
    p.add_argument("--fallback-limit", type=int, default=14)
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("verify", help="check a walk JSON against a graph")
    p.add_argument("graph")
    p.add_argument("walk")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("toughness", help="exact toughness by exhaustive search")
    p.add_argument("graph")
    p.add_argument("--limit", type=int, default=18)
    p.set_defaults(func=cmd_toughness)

    p = sub.add_parser("decompose", help="print the clique tower")
    p.add_argument("graph")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("gen", help="generate a graph in edge-list format")
    p.add_argument("--family", choices=(*FAMILIES, "fixed"), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--clique", type=int, default=5)
    p.add_argument("--indep", type=int, default=3)
    p.add_argument("--prob", type=float, default=0.5)
    p.add_argument("--min-attach", type=int, default=0)
    p.add_argument("--max-attempts", type=int, default=500)
    p.add_argument("--name", default="G1")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fuzz", help="generate instances and cross-check everything")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size-range", type=_size_range, default=(6, 12))
    p.add_argument("--out", help="directory for failing traces")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

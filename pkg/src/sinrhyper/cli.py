"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 size limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .hypergraph import Hypergraph, HypergraphError, TooLargeError, interference_degree
from .lemmas import run_all
from .realizability import RealizationSearchConfig, search_realization
from .wireless import NetworkError, WirelessNetwork, generate_hypergraph, unit_disk_graph

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _load_network(path: str) -> WirelessNetwork:
    return WirelessNetwork.from_json(_read(path))


def _load_hypergraph(path: str) -> Hypergraph:
    return Hypergraph.from_json(_read(path))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def fmt_decimal(x) -> str:
    return f"{float(x):.12g}"


def cmd_gen_hypergraph(args) -> int:
    net = _load_network(args.network)
    H = generate_hypergraph(net, args.max_size)
    _emit(H.to_json(), args.out)
    return EXIT_OK


def cmd_udg(args) -> int:
    net = _load_network(args.network)
    _emit(unit_disk_graph(net.stations).to_json(), args.out)
    return EXIT_OK


def cmd_sigma(args) -> int:
    H = _load_hypergraph(args.hypergraph)
    if H.n == 0:
        raise InputError("hypergraph has an empty ground set")
    sigma: Fraction = interference_degree(H)
    if args.json:
        _emit(json.dumps({"sigma": str(sigma), "decimal": fmt_decimal(sigma)}), args.out)
    else:
        _emit(f"{sigma}\t{fmt_decimal(sigma)}", args.out)
    return EXIT_OK


def cmd_realize(args) -> int:
    H = _load_hypergraph(args.hypergraph)
    cfg = RealizationSearchConfig(
        restarts=args.restarts,
        local_steps=args.steps,
        rng_seed=args.seed,
        margin=args.margin,
    )
    result = search_realization(H, cfg)
    report = result.to_dict()
    report["config"] = {"restarts": cfg.restarts, "local_steps": cfg.local_steps, "seed": cfg.rng_seed, "margin": cfg.margin}
    if not result.found:
        report["note"] = "no realization found; this is search evidence, not a proof of non-realizability"
    _emit(json.dumps(report), args.out)
    return EXIT_OK


def cmd_verify_lemmas(args) -> int:
    results = run_all(trials=args.trials, grid_points=args.grid, seed=args.seed)
    if args.json:
        payload = {
            "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
            "all_passed": all(r.passed for r in results),
        }
        _emit(json.dumps(payload), args.out)
    else:
        lines = [r.line() for r in results]
        lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
        _emit("\n".join(lines), args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _grid(text: str) -> int:
    v = int(text)
    if v < 3:
        raise argparse.ArgumentTypeError("grid must have at least 3 points")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sinrhyper", description="Interference hypergraphs of planar wireless networks.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen-hypergraph", help="minimal forbidden sets of a network as hypergraph JSON")
    g.add_argument("network")
    g.add_argument("--max-size", type=int, default=None, help="largest hyperedge size (default: all stations)")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen_hypergraph)

    s = sub.add_parser("sigma", help="exact interference degree of a hypergraph")
    s.add_argument("hypergraph")
    s.add_argument("--json", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_sigma)

    u = sub.add_parser("udg", help="unit disk graph of the network's stations")
    u.add_argument("network")
    u.add_argument("--out")
    u.set_defaults(func=cmd_udg)

    r = sub.add_parser("realize", help="search for a network realizing a hypergraph")
    r.add_argument("hypergraph")
    r.add_argument("--restarts", type=_positive, default=100)
    r.add_argument("--steps", type=int, default=RealizationSearchConfig.local_steps)
    r.add_argument("--margin", type=float, default=1e-6)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--out")
    r.set_defaults(func=cmd_realize)

    v = sub.add_parser("verify-lemmas", help="numerically check the lemmas behind K_{1,5} non-realizability")
    v.add_argument("--trials", type=_positive, default=2000)
    v.add_argument("--grid", type=_grid, default=1001)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", action="store_true")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify_lemmas)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InputError, HypergraphError, NetworkError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

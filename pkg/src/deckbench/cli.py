"""Command line entry points: params, recognize, reconstruct, verify."""
from __future__ import annotations

import argparse
import csv
import json
import sys

from .canon import Graph6ParseError, graph6_decode
from .deck import Deck, IllegitimateDeckError, build_deck
from .graph import Graph
from .params import dav_table, dv_table, pav_vector, pv_vector
from .recognize import recognize_H
from .reconstruct import HypothesisViolatedError, NotInScopeError, reconstruct_C1, reconstruct_C2
from .solver import CertificateError
from .sweeps import SUITES, run_suite


def _parse_graph(text: str) -> Graph:
    """Accept graph6 or an edge list like '5: 0-1, 1-2, 2-3'."""
    text = text.strip()
    if ":" in text:
        head, _, body = text.partition(":")
        n = int(head)
        edges = []
        for chunk in body.replace(",", " ").split():
            a, _, b = chunk.partition("-")
            edges.append((int(a), int(b)))
        return Graph.from_edges(n, edges)
    return graph6_decode(text)


def _load_deck(path: str) -> Deck:
    with open(path) as fh:
        return Deck.from_json(fh.read())


def _read_graph_arg(args) -> Graph:
    text = args.graph
    if text == "-":
        text = sys.stdin.read()
    return _parse_graph(text)


def cmd_params(args) -> int:
    try:
        g = _read_graph_arg(args)
    except (Graph6ParseError, ValueError) as exc:
        print(f"error: cannot parse graph: {exc}", file=sys.stderr)
        return 2
    if args.mode == "dv":
        print(dv_table(g).to_json())
    elif args.mode == "dav":
        print(dav_table(g).to_json())
    elif args.mode == "pv":
        print(json.dumps({"mode": "pv", "n": g.n, "values": pv_vector(g)}, indent=2))
    else:
        print(json.dumps({"mode": "pav", "n": g.n, "values": pav_vector(g)}, indent=2))
    return 0


def cmd_recognize(args) -> int:
    try:
        if args.deck:
            deck = _load_deck(args.deck)
        else:
            deck = build_deck(_parse_graph(args.graph))
    except (Graph6ParseError, IllegitimateDeckError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(recognize_H(deck).to_json())
    return 0


def cmd_reconstruct(args) -> int:
    try:
        deck = _load_deck(args.deck)
    except (IllegitimateDeckError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    runner = reconstruct_C1 if args.variant == "C1" else reconstruct_C2
    try:
        outcome = runner(deck)
    except NotInScopeError as exc:
        print(json.dumps({"status": "not_in_scope", "reason": exc.reason}, indent=2))
        return 1
    except HypothesisViolatedError:
        print(json.dumps({"status": "hypothesis_violated"}, indent=2))
        return 1
    except (CertificateError, IllegitimateDeckError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(outcome.to_json())
    return 0


def cmd_verify(args) -> int:
    lo, _, hi = args.n.partition("..")
    n_values = list(range(int(lo), int(hi or lo) + 1))
    results = run_suite(args.suite, n_values, seed=args.seed, budget=args.budget)
    rows = []
    for res in results:
        status = "ok" if res.ok else "FAIL"
        print(
            f"{res.suite}: {status} graphs={res.graphs_checked} checks={res.checks} "
            f"violations={len(res.violations)} witnesses={len(res.witnesses)}"
        )
        if res.notes:
            print(f"  notes: {json.dumps(res.notes, default=str)}")
        for item in res.violations:
            rows.append({"suite": res.suite, "kind": "violation", **item})
        for item in res.witnesses:
            rows.append({"suite": res.suite, "kind": "witness", **item})
    if args.witnesses and rows:
        fields = sorted({k for row in rows for k in row})
        with open(args.witnesses, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=fields)
            writer.writeheader()
            for row in rows:
                writer.writerow({k: str(v) for k, v in row.items()})
        print(f"wrote {len(rows)} rows to {args.witnesses}")
    return 0 if all(res.ok for res in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deckbench",
        description="Vertex-pair parameters, deck recognition, and reconstruction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="compute a parameter table for a graph")
    p.add_argument("graph", help="graph6 string or 'n: u-v, ...' edge list ('-' for stdin)")
    p.add_argument("--mode", choices=("dv", "dav", "pv", "pav"), default="dv")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("recognize", help="deck-only domination-number-2 recognition")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--deck", help="path to a deck JSON file")
    src.add_argument("--graph", help="graph to take the deck of first")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("reconstruct", help="rebuild a graph from its deck")
    p.add_argument("deck", help="path to a deck JSON file")
    p.add_argument("--variant", choices=("C1", "C2"), default="C1")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("verify", help="run verification sweeps")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--n", default="4..7", help="vertex count range, e.g. 4..8")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=0, help="sample count for n=9 suites")
    p.add_argument("--witnesses", help="CSV path for violation/witness rows")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

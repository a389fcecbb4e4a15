"""Command-line front end.

Exit codes:
    0  success / positive verdict (graphic, unique)
    1  negative verdict (not graphic, not unique)
    2  malformed input or usage error
    3  size cap exceeded
    4  NDL mismatch between two graphs
    5  inconsistent deck
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from . import io
from .errors import (
    GraphFormatError,
    InconsistentDeckError,
    NDLError,
    NDLMismatchError,
    NotGraphicError,
    SizeCapError,
)
from .graph import Graph
from .graphicality import graphicality_failures
from .oracle import enumerate_labeled_realizations
from .realization import realize_ndl, switch_sequence
from .reconstruction import deck_of, reconstruct
from .tableau import Tableau, canonicalize, is_feasible, ndl_of
from .uniqueness import is_ndl_unique_graph, is_ndl_unique_tableau, non_uniqueness_witness

EXIT_OK = 0
EXIT_NO = 1
EXIT_MALFORMED = 2
EXIT_CAP = 3
EXIT_MISMATCH = 4
EXIT_DECK = 5

_EXTENSIONS = {".g6": "g6", ".graph6": "g6", ".edges": "edges", ".txt": "edges", ".json": "json"}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from exc


def _sniff(path: str, text: str, fmt: str | None) -> str:
    if fmt:
        return fmt
    ext = Path(path).suffix.lower() if path != "-" else ""
    if ext in _EXTENSIONS:
        return _EXTENSIONS[ext]
    body = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not body:
        raise GraphFormatError(f"{path}: empty input")
    if body[0][0] in "[{":
        return "json"
    if body[0].split()[0] == "n":
        return "edges"
    return "g6"


def _load(path: str, fmt: str | None) -> Graph | Tableau:
    text = _read_text(path)
    kind = _sniff(path, text, fmt)
    if kind == "g6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"{path}: expected exactly one graph6 line")
        return io.read_graph6(lines[0])
    if kind == "edges":
        return io.read_edge_list(text)
    obj = io.loads_json(text)
    if isinstance(obj, list):
        return io.tableau_from_json(obj)
    return io.graph_from_json(obj)


def _load_graph(path: str, fmt: str | None) -> Graph:
    obj = _load(path, fmt)
    if not isinstance(obj, Graph):
        raise GraphFormatError(f"{path}: expected a graph, got a tableau")
    return obj


def _load_tableau(path: str) -> Tableau:
    return io.read_tableau_json(_read_text(path))


def _emit(data: Any) -> None:
    if isinstance(data, str):
        sys.stdout.write(data if data.endswith("\n") else data + "\n")
    else:
        sys.stdout.write(json.dumps(data) + "\n")


def cmd_ndl(args) -> int:
    g = _load_graph(args.graph, args.format)
    t = canonicalize(ndl_of(g)) if args.canonical else ndl_of(g)
    _emit(t.to_lists())
    return EXIT_OK


def cmd_check(args) -> int:
    t = _load_tableau(args.tableau)
    feasible = is_feasible(t)
    failures = graphicality_failures(t)
    _emit(f"feasible: {'yes' if feasible else 'no'}")
    _emit(f"graphic: {'yes' if not failures else 'no'}")
    if failures and feasible:
        _emit("failing: " + ", ".join(failures))
    return EXIT_OK if not failures else EXIT_NO


def cmd_realize(args) -> int:
    g = realize_ndl(_load_tableau(args.tableau))
    if args.output == "g6":
        _emit(io.write_graph6(g))
    elif args.output == "json":
        _emit(io.graph_to_json(g))
    else:
        _emit(f"# graph6: {io.write_graph6(g)}\n" + io.write_edge_list(g))
    return EXIT_OK


def cmd_unique(args) -> int:
    obj = _load(args.input, args.format)
    if isinstance(obj, Tableau):
        unique = is_ndl_unique_tableau(obj)
        g = realize_ndl(obj)
    else:
        g = obj
        unique = is_ndl_unique_graph(g)
    _emit("unique" if unique else "not unique")
    if args.witness and not unique:
        m = non_uniqueness_witness(g)
        if isinstance(obj, Tableau):
            _emit(f"# witness on realization {io.write_graph6(g)}")
        _emit({"a": m.a, "b": m.b, "c": m.c, "d": m.d})
    return EXIT_OK if unique else EXIT_NO


def cmd_switch_path(args) -> int:
    g = _load_graph(args.graph_a, args.format)
    h = _load_graph(args.graph_b, args.format)
    _emit(io.switch_path_to_json(switch_sequence(g, h)))
    return EXIT_OK


def cmd_deck(args) -> int:
    _emit(io.write_deck(deck_of(_load_graph(args.graph, args.format))))
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    r = reconstruct(io.read_deck(_read_text(args.deck)))
    _emit({"edges": r.edges, "degree_sequence": list(r.degrees), "ndl": r.ndl.to_lists()})
    return EXIT_OK


def cmd_count(args) -> int:
    t = _load_tableau(args.tableau)
    if t.n > args.max_n:
        raise SizeCapError(f"tableau has {t.n} rows, above --max-n {args.max_n}")
    _emit(str(len(enumerate_labeled_realizations(t))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ndl", description="Neighborhood degree list tools.")
    sub = p.add_subparsers(dest="command", required=True)
    fmt = dict(choices=["g6", "edges", "json"], default=None, help="override format sniffing")

    s = sub.add_parser("ndl", help="print the NDL of a graph as JSON")
    s.add_argument("graph")
    s.add_argument("--canonical", action="store_true")
    s.add_argument("--format", **fmt)
    s.set_defaults(func=cmd_ndl)

    s = sub.add_parser("check", help="feasibility and graphicality of a tableau")
    s.add_argument("tableau")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("realize", help="construct a realization of a tableau")
    s.add_argument("tableau")
    s.add_argument("--output", choices=["both", "g6", "edges", "json"], default="both")
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("unique", help="NDL-uniqueness of a tableau or graph")
    s.add_argument("input")
    s.add_argument("--witness", action="store_true")
    s.add_argument("--format", **fmt)
    s.set_defaults(func=cmd_unique)

    s = sub.add_parser("switch-path", help="N-switches turning graph A into graph B")
    s.add_argument("graph_a")
    s.add_argument("graph_b")
    s.add_argument("--format", **fmt)
    s.set_defaults(func=cmd_switch_path)

    s = sub.add_parser("deck", help="write the deck of a graph")
    s.add_argument("graph")
    s.add_argument("--format", **fmt)
    s.set_defaults(func=cmd_deck)

    s = sub.add_parser("reconstruct", help="edge count, degrees and NDL from a deck")
    s.add_argument("deck")
    s.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("count-realizations", help="brute-force count of labeled realizations")
    s.add_argument("tableau")
    s.add_argument("--max-n", type=int, default=6)
    s.set_defaults(func=cmd_count)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except NDLMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except InconsistentDeckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DECK
    except NotGraphicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO
    except NDLError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())

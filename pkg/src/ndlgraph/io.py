"""Text formats: edge lists, graph6, JSON graphs and tableaux, decks, switch paths.

Edge-list files start with a header line ``n <count>`` followed by one
whitespace-separated ``u v`` pair per line (0-based).  Blank lines and lines
starting with ``#`` are ignored.
"""

from __future__ import annotations

import json
from typing import Any, Iterable

from .errors import GraphFormatError, NDLError
from .graph import Graph, pair_order
from .realization import NSwitch, SwitchPath
from .reconstruction import Deck
from .tableau import Tableau

# edge lists ---------------------------------------------------------------


def write_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_edge_list(text: str, n: int | None = None) -> Graph:
    """Parse an edge list; ``n`` is required only when the header is absent."""
    header = None
    pairs = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if header is not None or pairs:
                raise GraphFormatError(f"line {lineno}: unexpected header {raw!r}")
            if len(parts) != 2 or not _is_int(parts[1]) or int(parts[1]) < 0:
                raise GraphFormatError(f"line {lineno}: malformed header {raw!r}")
            header = int(parts[1])
            continue
        if len(parts) != 2 or not all(_is_int(p) for p in parts):
            raise GraphFormatError(f"line {lineno}: malformed edge line {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u < 0 or v < 0:
            raise GraphFormatError(f"line {lineno}: negative vertex index")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        pairs.append((lineno, key))
    if header is None:
        if n is None:
            raise GraphFormatError("missing 'n <count>' header")
        header = n
    for lineno, (u, v) in pairs:
        if v >= header:
            raise GraphFormatError(f"line {lineno}: vertex {v} >= n={header}")
    return Graph(header, (p for _, p in pairs))


def _is_int(s: str) -> bool:
    return s.lstrip("-").isdigit()


# graph6 -------------------------------------------------------------------

_G6_MAX_N = 68719476735


def _encode_n(n: int) -> str:
    if n < 0 or n > _G6_MAX_N:
        raise GraphFormatError(f"graph6 cannot encode n={n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def write_graph6(g: Graph) -> str:
    """graph6 string (no header, no trailing newline)."""
    adj = g.adj
    pairs = pair_order(g.n)
    x = 0
    for u, v in pairs:
        x = (x << 1) | (adj[u] >> v & 1)
    pad = -len(pairs) % 6
    x <<= pad
    nbytes = (len(pairs) + pad) // 6
    body = "".join(chr(((x >> (6 * (nbytes - 1 - i))) & 63) + 63) for i in range(nbytes))
    return _encode_n(g.n) + body


def read_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphFormatError("empty graph6 string")
    vals = []
    for ch in s:
        o = ord(ch)
        if not 63 <= o <= 126:
            raise GraphFormatError(f"byte {ch!r} outside the graph6 range")
        vals.append(o - 63)
    if vals[0] != 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError("truncated graph6 size field")
        n = _join6(vals[2:8])
        rest = vals[8:]
        if n <= 258047:
            raise GraphFormatError("non-canonical graph6 size field")
    else:
        if len(vals) < 4:
            raise GraphFormatError("truncated graph6 size field")
        n = _join6(vals[1:4])
        rest = vals[4:]
        if n <= 62:
            raise GraphFormatError("non-canonical graph6 size field")
    pairs = pair_order(n)
    need = -(-len(pairs) // 6)
    if len(rest) != need:
        raise GraphFormatError(f"graph6 body has {len(rest)} bytes, expected {need} for n={n}")
    x = _join6(rest)
    pad = 6 * len(rest) - len(pairs)
    if x & ((1 << pad) - 1):
        raise GraphFormatError("non-zero graph6 padding bits")
    x >>= pad
    top = len(pairs) - 1
    return Graph(n, (p for k, p in enumerate(pairs) if x >> (top - k) & 1))


def _join6(vals: list[int]) -> int:
    n = 0
    for v in vals:
        n = (n << 6) | v
    return n


# JSON ---------------------------------------------------------------------


def graph_to_json(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": [[u, v] for u, v in g.sorted_edges()]}


def graph_from_json(obj: Any) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise GraphFormatError('JSON graph must be an object with "n" and "edges"')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphFormatError(f"bad vertex count {n!r}")
    edges = []
    seen = set()
    for e in obj["edges"]:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            raise GraphFormatError(f"bad edge {e!r}")
        u, v = e
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    try:
        return Graph(n, edges)
    except NDLError as exc:
        raise GraphFormatError(str(exc)) from exc


def write_graph_json(g: Graph) -> str:
    return json.dumps(graph_to_json(g))


def read_graph_json(text: str) -> Graph:
    return graph_from_json(loads_json(text))


def loads_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc


def tableau_from_json(obj: Any) -> Tableau:
    """Rows are sorted descending; row order is preserved."""
    if not isinstance(obj, list):
        raise GraphFormatError("a tableau must be a JSON array of arrays")
    for row in obj:
        if not isinstance(row, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in row
        ):
            raise GraphFormatError(f"bad tableau row {row!r}")
    return Tableau(obj)


def read_tableau_json(text: str) -> Tableau:
    return tableau_from_json(loads_json(text))


def write_tableau_json(t: Iterable[Iterable[int]]) -> str:
    return json.dumps([list(r) for r in t])


# decks and switch paths ---------------------------------------------------


def write_deck(deck: Deck) -> str:
    return "\n".join([str(deck.n)] + [write_graph6(c) for c in deck]) + "\n"


def read_deck(text: str) -> Deck:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not _is_int(lines[0]):
        raise GraphFormatError("deck file must start with the card count")
    n = int(lines[0])
    if len(lines) - 1 != n:
        raise GraphFormatError(f"deck header says {n} cards, found {len(lines) - 1}")
    return Deck(tuple(read_graph6(ln) for ln in lines[1:]))


def switch_path_to_json(path: SwitchPath) -> list[dict[str, int]]:
    return [{"a": m.a, "b": m.b, "c": m.c, "d": m.d} for m in path]


def switch_path_from_json(obj: Any) -> SwitchPath:
    if not isinstance(obj, list):
        raise GraphFormatError("a switch path must be a JSON array")
    moves = []
    for item in obj:
        try:
            moves.append(NSwitch(*(int(item[k]) for k in "abcd")))
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphFormatError(f"bad switch {item!r}") from exc
    return SwitchPath(tuple(moves))

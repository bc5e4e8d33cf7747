"""Plain-text edge-list format.

    # comment
    digraph 4        (or: graph 4)
    0 1              one edge per line, u -> v for digraphs
"""
from pathlib import Path

from impartial.graphs.core import Digraph, Graph, GraphError, UndirectedGraph

HEADERS = {"digraph": Digraph, "graph": UndirectedGraph}


class ParseError(GraphError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokens(raw: str) -> list[tuple[str, int]]:
    body = raw.split("#", 1)[0]
    out = []
    col = 0
    for tok in body.split():
        col = body.index(tok, col)
        out.append((tok, col + 1))
        col += len(tok)
    return out


def _int_token(tok: str, lineno: int, col: int, what: str) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise ParseError(f"expected {what}, got {tok!r}", lineno, col) from None
    if value < 0:
        raise ParseError(f"{what} must be non-negative, got {value}", lineno, col)
    return value


def _parse(text: str) -> tuple[Graph, int, int]:
    """The graph plus the line and column of its header."""
    kind = None
    header = (1, 1)
    n = 0
    edges: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        if kind is None:
            word, col = toks[0]
            if word not in HEADERS:
                raise ParseError(f"expected 'digraph <n>' or 'graph <n>', got {word!r}", lineno, col)
            if len(toks) != 2:
                raise ParseError("header takes exactly one vertex count", lineno, col)
            kind = HEADERS[word]
            header = (lineno, col)
            n = _int_token(toks[1][0], lineno, toks[1][1], "vertex count")
            continue
        if len(toks) != 2:
            raise ParseError(f"expected '<u> <v>', got {len(toks)} fields", lineno, toks[0][1])
        (su, cu), (sv, cv) = toks
        u = _int_token(su, lineno, cu, "vertex")
        v = _int_token(sv, lineno, cv, "vertex")
        for value, col in ((u, cu), (v, cv)):
            if value >= n:
                raise ParseError(f"vertex {value} out of range for {n} vertices", lineno, col)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno, cu)
        pair = (min(u, v), max(u, v))
        if pair in seen:
            first_line, _ = seen[pair]
            reason = "duplicate" if kind is UndirectedGraph or (u, v) in edges else "anti-parallel"
            raise ParseError(f"{reason} edge {u} {v} (first seen on line {first_line})", lineno, cu)
        seen[pair] = (lineno, cu)
        edges.append((u, v))
    if kind is None:
        raise ParseError("missing 'digraph <n>' or 'graph <n>' header", max(lineno, 1))
    return kind(n, tuple(edges)), *header


def parse_graph(text: str) -> Graph:
    return _parse(text)[0]


def format_graph(g: Graph) -> str:
    header = "digraph" if isinstance(g, Digraph) else "graph"
    lines = [f"{header} {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def decode(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        column = e.start - (data.rfind(b"\n", 0, e.start) + 1) + 1
        raise ParseError(f"invalid UTF-8 byte 0x{data[e.start]:02x}", line, column) from None


def load_graph(path: str | Path) -> Graph:
    return parse_graph(decode(Path(path).read_bytes()))


def parse_digraph(text: str) -> Digraph:
    g, line, column = _parse(text)
    if not isinstance(g, Digraph):
        raise ParseError("expected a digraph, got an undirected graph", line, column)
    return g

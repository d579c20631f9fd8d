"""Edge-list and graph6 ingestion."""

import networkx as nx

from src.rigidity.laman import SimpleGraph
from src.utils.errors import ParseError


def parse_edge_list(text: str) -> SimpleGraph:
    """Parse one edge per line: two nonnegative integers separated by whitespace.

    `#` starts a comment and blank lines are ignored.

    Raises:
        ParseError: malformed line, duplicate edge or self-loop, with its line number.
    """
    edges: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2 or not all(f.isascii() and f.isdigit() for f in fields):
            raise ParseError(f"expected two nonnegative integers, got {raw.strip()!r}", lineno)
        u, v = int(fields[0]), int(fields[1])
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        edge = (min(u, v), max(u, v))
        if edge in edges:
            raise ParseError(f"duplicate edge {u} {v} (first seen on line {edges[edge]})", lineno)
        edges[edge] = lineno
    if not edges:
        raise ParseError("no edges found")
    return SimpleGraph.from_edges(edges)


def parse_graph6(text: str) -> SimpleGraph:
    """Parse the first non-empty line as a graph6 string."""
    line = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise ParseError("empty graph6 input")
    try:
        graph = nx.from_graph6_bytes(line.encode("ascii"))
    except (ValueError, nx.NetworkXError, UnicodeEncodeError) as e:
        raise ParseError(f"invalid graph6 string: {e}", 1) from e
    return SimpleGraph.from_networkx(graph)


def format_edge_list(g: SimpleGraph, header: str | None = None) -> str:
    """Edge-list text that parse_edge_list reads back as g."""
    lines = [f"# {header}"] if header else []
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"

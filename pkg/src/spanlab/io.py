"""Parsing and emission of graph files and witness artifacts.

Two interchange formats are supported: a plain edge-list text format
(header ``n <count>``, one ``u v`` pair per line, ``#`` comments) and the
standard graph6 one-liner (short form, n <= 62).  Witness walks render to
DOT with the base graph as undirected edges and the two actors' moves as
red/blue numbered arrows.
"""

from __future__ import annotations

from .engine import TrackPair
from .errors import (
    BadCharError,
    EdgeListSyntaxError,
    InvalidTracksError,
    LengthMismatchError,
    TooLargeError,
)
from .graph import Graph


# -- edge-list format ---------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text; syntax errors carry the 1-based line number."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise EdgeListSyntaxError(lineno, f"expected 'n <count>', got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise EdgeListSyntaxError(lineno, f"bad vertex count {parts[1]!r}") from None
            continue
        if len(parts) != 2:
            raise EdgeListSyntaxError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListSyntaxError(lineno, f"bad vertex id in {line!r}") from None
        edges.append((u, v))
    if n is None:
        raise EdgeListSyntaxError(1, "missing 'n <count>' header")
    return Graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    """Edge-list text for ``g``; parsing it back reproduces the graph."""
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


# -- graph6 format ------------------------------------------------------------


def _bit_count(n: int) -> int:
    return n * (n - 1) // 2


def parse_graph6(line: str) -> Graph:
    """Decode a short-form graph6 line (n <= 62)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise BadCharError("empty graph6 line")
    first = ord(s[0])
    if first == 126:
        raise BadCharError("long-form graph6 (n > 62) is not supported")
    if not 63 <= first <= 125:
        raise BadCharError(f"bad size byte {s[0]!r}")
    n = first - 63

    body = s[1:]
    need = (_bit_count(n) + 5) // 6
    if len(body) != need:
        raise LengthMismatchError(
            f"graph6 body for n={n} needs {need} bytes, got {len(body)}"
        )
    bits: list[int] = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise BadCharError(f"bad data byte {ch!r}")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))

    m = _bit_count(n)
    if any(bits[m:]):
        raise LengthMismatchError("nonzero padding bits")
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` as a short-form graph6 line."""
    if g.n > 62:
        raise TooLargeError(f"graph6 short form caps at 62 vertices, got {g.n}")
    bits = [
        1 if g.has_edge(u, v) else 0 for v in range(1, g.n) for u in range(v)
    ]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = val << 1 | b
        chars.append(chr(63 + val))
    return "".join(chars)


# -- DOT witness rendering ------------------------------------------------------


def emit_witness_dot(g: Graph, tracks: TrackPair) -> str:
    """DOT text showing the base graph and both actors' moves.

    Base edges are drawn without direction; each actual move becomes one
    arrow (red for the first actor, blue for the second) labelled with its
    1-based step number, so stay-steps leave no arrow.
    """
    if len(tracks.f) != len(tracks.g) or not tracks.f:
        raise InvalidTracksError("tracks must be non-empty and of equal length")
    for w in tracks.f + tracks.g:
        if not (0 <= w < g.n):
            raise InvalidTracksError(f"vertex {w} outside 0..{g.n - 1}")

    lines = ["digraph witness {"]
    for v in range(g.n):
        if g.labels is not None:
            lines.append(f'  {v} [label="{g.label(v)}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -> {v} [dir=none];")
    for name, walk, color in (("f", tracks.f, "red"), ("g", tracks.g, "blue")):
        for i in range(len(walk) - 1):
            if walk[i] != walk[i + 1]:
                lines.append(
                    f'  {walk[i]} -> {walk[i + 1]} [color={color}, label="{name}{i + 1}"];'
                )
    lines.append("}")
    return "\n".join(lines) + "\n"

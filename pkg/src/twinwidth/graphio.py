"""Graph exchange formats: graph6, edge-list text, DOT export.

graph6 layout (short form, n <= 62): one header byte ``n + 63`` followed by
``ceil(n(n-1)/2 / 6)`` payload bytes.  Each payload byte encodes six bits as
``byte - 63``, most significant bit first; bit k of the stream is the
upper-triangle adjacency bit for the k-th pair in column-major order
(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...  Unused trailing bits are zero.
"""
from __future__ import annotations

from .trigraph import BLACK, RED, Trigraph, from_graph


class GraphFormatError(ValueError):
    """Malformed graph or certificate text."""


MAX_GRAPH6_N = 62


def pair_order(n: int) -> list[tuple[int, int]]:
    """Upper-triangle pairs in the column-major order used by graph6."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def parse_graph6(text: str) -> Trigraph:
    """Decode one graph6 string into a plain trigraph."""
    s = text.strip()
    if not s:
        raise GraphFormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"graph6 byte {ord(ch)} out of range 63..126")
    n = ord(s[0]) - 63
    if n == 0:
        raise GraphFormatError("graph6 vertex count 0 is not supported")
    npairs = n * (n - 1) // 2
    want = (npairs + 5) // 6
    payload = s[1:]
    if len(payload) != want:
        raise GraphFormatError(
            f"graph6 payload for n={n} must be {want} characters, got {len(payload)}"
        )
    bits = 0
    for ch in payload:
        bits = (bits << 6) | (ord(ch) - 63)
    total = 6 * want
    # trailing pad bits must not spill into the adjacency stream
    edges = []
    for k, (i, j) in enumerate(pair_order(n)):
        if bits >> (total - 1 - k) & 1:
            edges.append((i, j))
    return from_graph(n, edges)


def emit_graph6(g: Trigraph, canonical: bool = False) -> str:
    """Encode a plain trigraph; ``canonical`` relabels to canonical form first."""
    if not g.is_plain():
        raise GraphFormatError("graph6 cannot represent red edges")
    if canonical:
        from .enumeration import canonical_form, from_canonical_key

        g = from_canonical_key(canonical_form(g))
    n = g.n
    if n > MAX_GRAPH6_N:
        raise GraphFormatError(f"graph6 short form supports at most {MAX_GRAPH6_N} vertices")
    bits = 0
    for i, j in pair_order(n):
        bits = (bits << 1) | (g.black[i] >> j & 1)
    npairs = n * (n - 1) // 2
    pad = (-npairs) % 6
    bits <<= pad
    out = [chr(n + 63)]
    for k in range((npairs + pad) // 6 - 1, -1, -1):
        out.append(chr(((bits >> (6 * k)) & 0x3F) + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Trigraph:
    """Parse edge-list text: a ``n <count>`` header then one ``i j`` pair per line.

    ``#`` comment lines and blank lines are ignored.  Duplicate edges,
    self-loops and out-of-range indices are rejected.
    """
    n = None
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphFormatError(f"line {lineno}: expected header 'n <count>'")
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: vertex count {parts[1]!r} is not an integer") from None
            if n < 1:
                raise GraphFormatError(f"line {lineno}: vertex count must be at least 1")
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'i j' edge pair")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex index") from None
        if not (0 <= i < n and 0 <= j < n):
            raise GraphFormatError(f"line {lineno}: index out of range 0..{n - 1}")
        if i == j:
            raise GraphFormatError(f"line {lineno}: self-loop {i} {j}")
        key = (min(i, j), max(i, j))
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {i} {j}")
        seen.add(key)
        pairs.append((i, j))
    if n is None:
        raise GraphFormatError("missing 'n <count>' header line")
    return from_graph(n, pairs)


def emit_edge_list(g: Trigraph) -> str:
    """Inverse of parse_edge_list for plain graphs on singleton labels."""
    if not g.is_plain():
        raise GraphFormatError("edge-list text cannot represent red edges")
    if any(len(lab) != 1 for lab in g.labels):
        raise GraphFormatError("edge-list text requires uncontracted vertices")
    lines = [f"n {g.n}"]
    for u, v, _ in g.edges():
        lines.append(f"{u[0]} {v[0]}")
    return "\n".join(lines) + "\n"


def _dot_name(label: tuple[int, ...]) -> str:
    return '"' + "+".join(map(str, label)) + '"'


def emit_dot(g: Trigraph) -> str:
    """Render as an undirected DOT document.

    Black edges are plain; red edges carry ``color=red`` plus ``style=bold``
    so they survive monochrome rendering.
    """
    lines = ["graph {"]
    for label in g.labels:
        lines.append(f"  {_dot_name(label)};")
    for u, v, color in g.edges():
        if color == RED:
            lines.append(f"  {_dot_name(u)} -- {_dot_name(v)} [color=red, style=bold];")
        else:
            lines.append(f"  {_dot_name(u)} -- {_dot_name(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"

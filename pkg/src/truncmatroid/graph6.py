"""graph6 reading and writing for simple graphs with up to 62 vertices.

Vertices are ``0..n-1``.  Edges are labeled ``1..m`` in lexicographic order of
their ``(i, j)`` endpoint pairs with ``i < j``.
"""

from __future__ import annotations

from .errors import DomainError, Graph6Error
from .graph import LabeledGraph


def _pairs_in_bit_order(n):
    # graph6 stores the upper triangle column by column
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str) -> LabeledGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside the printable range 63..126", pos)
    data = [ord(ch) - 63 for ch in s]
    if data[0] == 63:
        raise Graph6Error("graphs with more than 62 vertices are not supported", 0)
    n, body = data[0], data[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {len(body)}", min(len(s), 1 + need))
    pairs = list(_pairs_in_bit_order(n))
    present = []
    for k, (i, j) in enumerate(pairs):
        if body[k // 6] >> (5 - k % 6) & 1:
            present.append((i, j))
    pad = len(pairs) % 6
    if pad and body[-1] & ((1 << (6 - pad)) - 1):
        raise Graph6Error("nonzero padding bits", len(s) - 1)
    present.sort()
    return LabeledGraph({k + 1: p for k, p in enumerate(present)}, range(n))


def write_graph6(G: LabeledGraph) -> str:
    if not G.is_simple:
        raise DomainError("graph6 encodes simple graphs only")
    if G.n > 62:
        raise DomainError("graph6 writer supports at most 62 vertices")
    index = {v: i for i, v in enumerate(G.vertices)}
    adj = {frozenset((index[u], index[v])) for u, v in G.incidence.values()}
    out = [G.n + 63]
    acc, nbits = 0, 0
    for i, j in _pairs_in_bit_order(G.n):
        acc = acc << 1 | (frozenset((i, j)) in adj)
        nbits += 1
        if nbits == 6:
            out.append(acc + 63)
            acc, nbits = 0, 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return "".join(map(chr, out))


def read_graph6_lines(text: str) -> list:
    """Parse a batch file: one graph6 string per non-blank line."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if line.strip():
            try:
                out.append(parse_graph6(line))
            except Graph6Error as exc:
                raise Graph6Error(f"line {lineno}: {exc.reason}", exc.offset) from None
    return out

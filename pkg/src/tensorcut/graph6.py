"""Bit-exact graph6 text codec.

Layout: the order n as one printable byte (n+63) for n <= 62, or '~' plus
three 6-bit groups for n <= 258047, or '~~' plus six groups beyond that;
then the upper-triangle adjacency bits in column order ((0,1), (0,2), (1,2),
(0,3), ...), packed 6 per byte, zero-padded, each group offset by 63.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graphs import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = ["~", chr((n >> 12) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    elif n <= 68719476735:
        out = ["~", "~"]
        out.extend(chr(((n >> shift) & 63) + 63) for shift in range(30, -1, -6))
    else:
        raise Graph6Error("graph too large for graph6")

    group = 0
    filled = 0
    for col in range(1, n):
        for row in range(col):
            group = (group << 1) | ((row, col) in g.edges)
            filled += 1
            if filled == 6:
                out.append(chr(group + 63))
                group = 0
                filled = 0
    if filled:
        group <<= 6 - filled
        out.append(chr(group + 63))
    return "".join(out)


def _decode_bytes(text: str) -> list[int]:
    vals = []
    for ch in text:
        b = ord(ch) - 63
        if not 0 <= b <= 63:
            raise Graph6Error(f"byte {ord(ch)} outside the printable graph6 range")
        vals.append(b)
    return vals


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):].strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = _decode_bytes(s)

    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise Graph6Error("truncated length header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        if len(vals) < 8:
            raise Graph6Error("truncated length header")
        n = 0
        for b in vals[2:8]:
            n = (n << 6) | b
        body = vals[8:]

    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"adjacency block has {len(body)} bytes, expected {expected} for n={n}"
        )

    edges = set()
    idx = 0
    pairs = ((row, col) for col in range(1, n) for row in range(col))
    for b in body:
        for shift in range(5, -1, -1):
            if idx < nbits:
                pair = next(pairs)
                if (b >> shift) & 1:
                    edges.add(pair)
            elif (b >> shift) & 1:
                raise Graph6Error("nonzero padding bits")
            idx += 1
    return Graph(n, edges)


def read_graph6(stream: TextIO | Iterable[str]) -> Iterator[Graph]:
    """Parse a one-graph-per-line stream, skipping blank lines."""
    for line in stream:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def load_graph6_file(path: str) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return list(read_graph6(fh))

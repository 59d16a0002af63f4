"""graph6 parsing and emission, and DOT rendering of colored graphs."""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable, Iterator, Optional, TextIO

from .graph import Graph, GraphError

if TYPE_CHECKING:
    from .coloring import EdgeColoring

PALETTE = (
    "red", "blue", "green3", "orange", "purple", "cyan3", "magenta", "gold3",
    "brown", "deeppink", "darkgreen", "navy", "olive", "teal", "gray40", "black",
)

_HEADER = b">>graph6<<"


class Graph6Error(GraphError):
    def __init__(self, msg: str, offset: int):
        super().__init__(f"{msg} (byte offset {offset})")
        self.offset = offset


def to_graph6(g: Graph) -> str:
    g.require_simple("graph6 encoding")
    if g.n > 62:
        raise GraphError("graph6 short form supports at most 62 vertices")
    present = set(g.edges)
    bits = [1 if (i, j) in present else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def from_graph6(data: str | bytes) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    base = 0
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
        base = len(_HEADER)
    if not data:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(data):
        if not 63 <= ch <= 126:
            raise Graph6Error(f"byte {ch!r} outside graph6 range 63..126", base + i)
    n = data[0] - 63
    if n > 62:
        raise Graph6Error("long-form vertex count not supported (n > 62)", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(data) - 1}", base)
    bits = []
    for ch in data[1:]:
        v = ch - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", base + len(data) - 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(sorted(edges)))


def read_graph6_stream(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield from_graph6(line)


def to_dot(g: Graph, coloring: Optional["EdgeColoring"] = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices():
        lines.append(f"  {v};")
    for u, v, i in g.edge_list():
        if coloring is None:
            lines.append(f"  {u} -- {v};")
        else:
            c = coloring.colors[i]
            lines.append(f'  {u} -- {v} [color="{PALETTE[(c - 1) % len(PALETTE)]}", label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_lines(stream: TextIO) -> list[str]:
    return [ln for ln in (x.strip() for x in stream) if ln and not ln.startswith("#")]


"""Plain-text poset/graph files and Graphviz export.

Poset files::

    # comments start with '#'
    poset 4
    2 > 0
    3 > 1

Any relations may be listed (the loader closes them transitively); the
writer emits cover relations only.  Graph files use ``graph <n>`` and
``u -- v`` lines.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Union

from .poset import Poset, SimpleGraph, cover_pairs, from_cover_relations


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


_POSET_HEADER = re.compile(r"^poset\s+(\d+)$")
_GRAPH_HEADER = re.compile(r"^graph\s+(\d+)$")
_ORDER_LINE = re.compile(r"^(\d+)\s*>\s*(\d+)$")
_EDGE_LINE = re.compile(r"^(\d+)\s*--\s*(\d+)$")


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield number, line


def parse(text: str) -> Union[Poset, SimpleGraph]:
    """Parse a poset or graph file.  Raises ParseError or CycleError."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty file")
    number, header = lines[0]
    header = " ".join(header.split())
    if m := _POSET_HEADER.match(header):
        n = int(m.group(1))
        pairs = set()
        for number, line in lines[1:]:
            rel = _ORDER_LINE.match(line)
            if not rel:
                raise ParseError(f"expected 'u > v', got {line!r}", number)
            u, v = int(rel.group(1)), int(rel.group(2))
            if not (u < n and v < n):
                raise ParseError(f"element out of range for n={n}", number)
            pairs.add((u, v))
        return from_cover_relations(n, sorted(pairs))
    if m := _GRAPH_HEADER.match(header):
        n = int(m.group(1))
        edges = set()
        for number, line in lines[1:]:
            edge = _EDGE_LINE.match(line)
            if not edge:
                raise ParseError(f"expected 'u -- v', got {line!r}", number)
            u, v = int(edge.group(1)), int(edge.group(2))
            if not (u < n and v < n):
                raise ParseError(f"vertex out of range for n={n}", number)
            if u == v:
                raise ParseError(f"self-loop at {u}", number)
            edges.add((min(u, v), max(u, v)))
        return SimpleGraph.from_edges(n, sorted(edges))
    raise ParseError(f"expected 'poset <n>' or 'graph <n>', got {header!r}", number)


def load(path: Union[str, Path]) -> Union[Poset, SimpleGraph]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse(text)


def dump_poset(P: Poset, comment: str = "") -> str:
    out = [f"# {line}" for line in comment.splitlines()]
    out.append(f"poset {P.n}")
    out += [f"{c.upper} > {c.lower}" for c in sorted(cover_pairs(P))]
    return "\n".join(out) + "\n"


def dump_graph(G: SimpleGraph, comment: str = "") -> str:
    out = [f"# {line}" for line in comment.splitlines()]
    out.append(f"graph {G.n}")
    out += [f"{u} -- {v}" for u, v in G.edges()]
    return "\n".join(out) + "\n"


def dump(obj: Union[Poset, SimpleGraph], comment: str = "") -> str:
    return dump_poset(obj, comment) if isinstance(obj, Poset) else dump_graph(obj, comment)


def levels(P: Poset) -> list[int]:
    """Length of the longest chain ending at each element, minus one."""
    level = [0] * P.n
    for p in sorted(range(P.n), key=lambda x: P.down[x].bit_count()):
        below = [level[q] + 1 for q in range(P.n) if P.down[p] >> q & 1]
        level[p] = max(below, default=0)
    return level


def to_dot(P: Poset, name: str = "hasse") -> str:
    """Hasse diagram in Graphviz DOT, edges lower -> upper, one rank per level."""
    level = levels(P)
    out = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for lvl in sorted(set(level)):
        members = " ".join(str(p) for p in range(P.n) if level[p] == lvl)
        out.append(f"  {{ rank=same; {members}; }}")
    for c in sorted(cover_pairs(P), key=lambda c: (c.lower, c.upper)):
        out.append(f"  {c.lower} -> {c.upper};")
    out.append("}")
    return "\n".join(out) + "\n"

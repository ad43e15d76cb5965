"""Finite posets on dense integer elements, with their derived graphs.

Relations are stored as full transitive closures in bitset rows (Python ints):
``up[p]`` has bit ``q`` set iff ``p < q`` and ``down[p]`` has bit ``q`` set iff
``q < p``.  Both objects are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple


class CycleError(ValueError):
    """The given relations contain a directed cycle, so they are not an order."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _transpose(rows: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(rows)
    for p, row in enumerate(rows):
        for q in bits(row):
            out[q] |= 1 << p
    return tuple(out)


class CoverPair(NamedTuple):
    upper: int
    lower: int


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on vertices ``0..n-1``; ``adj[v]`` is a bitmask."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency rows do not match vertex count")
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if row >> self.n:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge {v}--{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}--{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> SimpleGraph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> SimpleGraph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def induced(self, vertices: Iterable[int]) -> SimpleGraph:
        """Induced subgraph, relabelled to ``0..k-1`` in the given order."""
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        adj = []
        for v in vs:
            row = 0
            for u in bits(self.adj[v]):
                if u in index:
                    row |= 1 << index[u]
            adj.append(row)
        return SimpleGraph(len(vs), tuple(adj))

    def components(self) -> list[int]:
        """Connected components as bitmasks, ordered by smallest vertex."""
        seen = 0
        out = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(comp)
        return out

    def disjoint_union(self, other: SimpleGraph) -> SimpleGraph:
        shift = self.n
        return SimpleGraph(self.n + other.n, self.adj + tuple(row << shift for row in other.adj))


@dataclass(frozen=True)
class Poset:
    """A strict partial order on ``0..n-1``.

    Build one with :func:`from_cover_relations` or :meth:`from_up_rows`; the
    constructor trusts that ``up`` is already transitively closed.
    """

    n: int
    up: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "down", _transpose(self.up))

    @classmethod
    def from_up_rows(cls, up: Iterable[int]) -> Poset:
        """Validate closed relation rows and wrap them."""
        rows = tuple(up)
        n = len(rows)
        for p, row in enumerate(rows):
            if row >> p & 1:
                raise CycleError(f"element {p} is below itself")
            if row >> n:
                raise ValueError(f"element {p} relates to an element out of range")
            for q in bits(row):
                if rows[q] & ~row:
                    raise ValueError(f"relation rows are not transitive at {p} < {q}")
        return cls(n, rows)

    @classmethod
    def chain(cls, n: int) -> Poset:
        """Chain ``0 < 1 < ... < n-1``."""
        full = (1 << n) - 1
        return cls(n, tuple(full & ~((1 << (p + 1)) - 1) for p in range(n)))

    @classmethod
    def antichain(cls, n: int) -> Poset:
        return cls(n, (0,) * n)

    def less(self, p: int, q: int) -> bool:
        return bool(self.up[p] >> q & 1)

    def comparable(self, p: int, q: int) -> bool:
        return bool((self.up[p] | self.down[p]) >> q & 1)

    def comparable_mask(self, p: int) -> int:
        return self.up[p] | self.down[p]

    def relations(self) -> list[tuple[int, int]]:
        """All ``(p, q)`` with ``p < q``."""
        return [(p, q) for p in range(self.n) for q in bits(self.up[p])]

    def is_chain(self, elements: Iterable[int]) -> bool:
        es = list(elements)
        return all(self.comparable(p, q) for i, p in enumerate(es) for q in es[i + 1:])

    def is_antichain(self, elements: Iterable[int]) -> bool:
        es = list(elements)
        return not any(self.comparable(p, q) for i, p in enumerate(es) for q in es[i + 1:])

    def induced(self, elements: Iterable[int]) -> Poset:
        """Induced subposet, relabelled to ``0..k-1`` in the given order."""
        es = list(elements)
        index = {p: i for i, p in enumerate(es)}
        rows = []
        for p in es:
            row = 0
            for q in bits(self.up[p]):
                if q in index:
                    row |= 1 << index[q]
            rows.append(row)
        return Poset(len(es), tuple(rows))

    def relabel(self, perm: list[int]) -> Poset:
        """Poset in which element ``perm[p]`` plays the role of old element ``p``."""
        rows = [0] * self.n
        for p in range(self.n):
            row = 0
            for q in bits(self.up[p]):
                row |= 1 << perm[q]
            rows[perm[p]] = row
        return Poset(self.n, tuple(rows))

    def minimal_elements(self) -> list[int]:
        return [p for p in range(self.n) if not self.down[p]]

    def maximal_elements(self) -> list[int]:
        return [p for p in range(self.n) if not self.up[p]]


@dataclass(frozen=True)
class ChainFamily:
    """Disjoint chains, listed bottom to top, with all cross-chain pairs incomparable."""

    chains: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.chains)

    def elements(self) -> list[int]:
        return sorted(p for c in self.chains for p in c)

    def violations(self, P: Poset) -> list[str]:
        """Human-readable reasons the family is invalid in ``P`` (empty if valid)."""
        problems = []
        seen: dict[int, int] = {}
        for i, chain in enumerate(self.chains):
            for a, b in zip(chain, chain[1:]):
                if not P.less(a, b):
                    problems.append(f"chain {i}: not {a} < {b}")
            for p in chain:
                if not 0 <= p < P.n:
                    problems.append(f"chain {i}: element {p} out of range")
                elif p in seen:
                    problems.append(f"element {p} in chains {seen[p]} and {i}")
                else:
                    seen[p] = i
        for i, ci in enumerate(self.chains):
            for j in range(i + 1, len(self.chains)):
                for p in ci:
                    for q in self.chains[j]:
                        if 0 <= p < P.n and 0 <= q < P.n and P.comparable(p, q):
                            problems.append(f"chains {i} and {j}: {p} and {q} are comparable")
        return problems

    def is_valid(self, P: Poset) -> bool:
        return not self.violations(P)


def from_cover_relations(n: int, pairs: Iterable[tuple[int, int]]) -> Poset:
    """Close a set of ``(upper, lower)`` pairs transitively.

    Pairs need not be covers; any consistent relations are accepted.  Raises
    :class:`CycleError` if the pairs contain a directed cycle.
    """
    up = [0] * n
    for upper, lower in pairs:
        if not (0 <= upper < n and 0 <= lower < n):
            raise ValueError(f"pair ({upper}, {lower}) out of range for n={n}")
        if upper == lower:
            raise CycleError(f"element {upper} cannot be above itself")
        up[lower] |= 1 << upper
    # Warshall on bit rows
    for k in range(n):
        row_k = up[k]
        bit_k = 1 << k
        for p in range(n):
            if up[p] & bit_k:
                up[p] |= row_k
    for p in range(n):
        if up[p] >> p & 1:
            raise CycleError(f"relations contain a cycle through element {p}")
    return Poset(n, tuple(up))


def cover_pairs(P: Poset) -> list[CoverPair]:
    """Transitive reduction: ``(q, p)`` for every ``p < q`` with nothing strictly between."""
    out = []
    for p in range(P.n):
        above = P.up[p]
        # q covers p iff no r with p < r < q
        blocked = 0
        for r in bits(above):
            blocked |= P.up[r]
        for q in bits(above & ~blocked):
            out.append(CoverPair(q, p))
    out.sort(key=lambda c: (c.lower, c.upper))
    return out


def comparability_graph(P: Poset) -> SimpleGraph:
    return SimpleGraph(P.n, tuple(P.up[p] | P.down[p] for p in range(P.n)))


def cover_graph(P: Poset) -> SimpleGraph:
    return SimpleGraph.from_edges(P.n, cover_pairs(P))


def height(P: Poset) -> int:
    """Number of elements in a longest chain."""
    best = [0] * P.n
    # an element's rank only depends on elements below it, so sort by down-set size
    for p in sorted(range(P.n), key=lambda x: P.down[x].bit_count()):
        best[p] = 1 + max((best[q] for q in bits(P.down[p])), default=0)
    return max(best, default=0)


def longest_chain(P: Poset) -> list[int]:
    """A longest chain, bottom to top; ties go to smaller indices."""
    if P.n == 0:
        return []
    best = [0] * P.n
    prev = [-1] * P.n
    for p in sorted(range(P.n), key=lambda x: P.down[x].bit_count()):
        for q in bits(P.down[p]):
            if best[q] > best[p]:
                best[p], prev[p] = best[q], q
        best[p] += 1
    top = max(range(P.n), key=lambda x: (best[x], -x))
    chain = []
    while top != -1:
        chain.append(top)
        top = prev[top]
    return chain[::-1]


def _max_matching(n: int, succ: list[int]) -> int:
    """Maximum matching in the bipartite graph left p -> right q for q in succ[p]."""
    match_right = [-1] * n

    def augment(p: int, visited: list[bool]) -> bool:
        for q in bits(succ[p]):
            if visited[q]:
                continue
            visited[q] = True
            if match_right[q] == -1 or augment(match_right[q], visited):
                match_right[q] = p
                return True
        return False

    size = 0
    for p in range(n):
        if augment(p, [False] * n):
            size += 1
    return size


def width(P: Poset) -> int:
    """Size of a largest antichain, as ``n`` minus a maximum matching (Dilworth/König)."""
    return P.n - _max_matching(P.n, list(P.up))


def width_brute(P: Poset) -> int:
    """Largest antichain by exhaustive maximum independent set on the comparability graph."""
    comp = [P.up[p] | P.down[p] for p in range(P.n)]

    def grow(candidates: int) -> int:
        if not candidates:
            return 0
        v = candidates.bit_length() - 1
        rest = candidates & ~(1 << v)
        take = 1 + grow(rest & ~comp[v])
        if take > rest.bit_count():
            return take
        return max(take, grow(rest))

    return grow((1 << P.n) - 1)


def is_connected(P: Poset) -> bool:
    """Connectivity of the cover graph (equivalently of the comparability graph)."""
    return len(comparability_graph(P).components()) <= 1


def invert(P: Poset) -> Poset:
    return Poset(P.n, P.down)


def disjoint_union(P1: Poset, P2: Poset) -> Poset:
    shift = P1.n
    return Poset(P1.n + P2.n, P1.up + tuple(row << shift for row in P2.up))


def place_above(lower: Poset, upper: Poset) -> Poset:
    """Ordinal sum: every element of ``upper`` is above every element of ``lower``.

    Elements of ``lower`` keep their indices; ``upper`` is shifted by ``lower.n``.
    """
    shift = lower.n
    all_upper = ((1 << upper.n) - 1) << shift
    rows = tuple(row | all_upper for row in lower.up) + tuple(row << shift for row in upper.up)
    return Poset(lower.n + upper.n, rows)

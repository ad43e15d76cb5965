"""Exact ao: the largest vertex set inducing a disjoint union of cliques.

Equivalently, ``n`` minus a minimum cluster vertex deletion set.  The exact
solver branches on induced P3s (every induced P3 needs one of its three
vertices deleted) and prunes with a greedy packing of P3s that share no
deletable vertex.  :func:`ao_brute` is an independent subset-enumeration
oracle for small graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .poset import ChainFamily, Poset, SimpleGraph, bits, comparability_graph, height, width


class NodeLimitExceeded(RuntimeError):
    """The branch-and-bound search hit its node cap; no value is reported."""


class TooLarge(ValueError):
    """The instance exceeds the size guard of an exhaustive routine."""


@dataclass(frozen=True)
class SolverConfig:
    max_brute_n: int = 20
    node_limit: int = 10**8
    deterministic: bool = True
    memo_limit: int = 2_000_000

    def __post_init__(self):
        if self.max_brute_n > 24:
            raise ValueError("max_brute_n must be at most 24")


@dataclass(frozen=True)
class AoResult:
    value: int
    witness: frozenset[int]
    deletions: frozenset[int]
    nodes: int = field(default=0, compare=False)


def _p3_in(adj: tuple[int, ...], mask: int) -> Optional[tuple[int, int, int]]:
    """An induced P3 ``(u, v, w)`` centred at ``v`` inside ``mask``, or None."""
    for v in bits(mask):
        nv = adj[v] & mask
        for u in bits(nv):
            extra = nv & ~adj[u] & ~(1 << u)
            if extra:
                return u, v, (extra & -extra).bit_length() - 1
    return None


def _is_cluster_mask(adj: tuple[int, ...], mask: int) -> bool:
    for v in bits(mask):
        closed = (adj[v] & mask) | (1 << v)
        for u in bits(adj[v] & mask):
            if (adj[u] & mask) | (1 << u) != closed:
                return False
    return True


def is_cluster(G: SimpleGraph) -> Optional[tuple[int, int, int]]:
    """None if every component of ``G`` is a clique, else one induced P3 ``(u, v, w)``."""
    return _p3_in(G.adj, (1 << G.n) - 1)


def _components(adj: tuple[int, ...], mask: int) -> list[int]:
    out = []
    rest = mask
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= adj[u]
            frontier = nxt & mask & ~comp
            comp |= frontier
        out.append(comp)
        rest &= ~comp
    return out


class _Search:
    def __init__(self, adj: tuple[int, ...], cfg: SolverConfig):
        self.adj = adj
        self.cfg = cfg
        self.nodes = 0
        self.memo: dict[tuple[int, int], tuple[bool, int, int]] = {}

    def packing_bound(self, alive: int, keep: int) -> int:
        """Greedy count of induced P3s whose deletable vertices are pairwise disjoint."""
        count = 0
        pool = alive
        adj = self.adj
        while True:
            p3 = _p3_in(adj, pool)
            if p3 is None:
                return count
            touched = (1 << p3[0]) | (1 << p3[1]) | (1 << p3[2])
            if not touched & ~keep:
                # three undeletable vertices: infeasible
                return alive.bit_count() + 1
            count += 1
            pool &= ~(touched & ~keep)

    def greedy(self, alive: int) -> int:
        """Deletion set from repeatedly removing the highest-degree vertex of some P3."""
        adj = self.adj
        deleted = 0
        while True:
            p3 = _p3_in(adj, alive)
            if p3 is None:
                return deleted
            x = max(p3, key=lambda v: ((adj[v] & alive).bit_count(), -v))
            alive &= ~(1 << x)
            deleted |= 1 << x

    def solve(self, alive: int, keep: int, budget: int) -> Optional[tuple[int, int]]:
        """Optimal ``(cost, deleted)`` for ``G[alive]`` if its cost is below ``budget``.

        Vertices in ``keep`` may not be deleted.
        """
        if budget <= 0:
            return None
        self.nodes += 1
        if self.nodes > self.cfg.node_limit:
            raise NodeLimitExceeded(f"search exceeded {self.cfg.node_limit} nodes")
        keep &= alive
        key = (alive, keep)
        hit = self.memo.get(key)
        if hit is not None:
            exact, cost, deleted = hit
            if exact:
                return (cost, deleted) if cost < budget else None
            if cost >= budget:
                return None
        result = self._solve(alive, keep, budget)
        if len(self.memo) < self.cfg.memo_limit:
            if result is None:
                self.memo[key] = (False, budget, 0)
            else:
                self.memo[key] = (True, result[0], result[1])
        return result

    def _solve(self, alive: int, keep: int, budget: int) -> Optional[tuple[int, int]]:
        adj = self.adj
        p3 = _p3_in(adj, alive)
        if p3 is None:
            return 0, 0
        if self.packing_bound(alive, keep) >= budget:
            return None

        comps = [c for c in _components(adj, alive) if not _is_cluster_mask(adj, c)]
        if len(comps) > 1 or comps[0] != alive:
            return self._solve_components(comps, keep, budget)

        order = sorted(p3, key=lambda v: (-(adj[v] & alive).bit_count(), v))
        best: Optional[tuple[int, int]] = None
        limit = budget
        fixed = keep
        for x in order:
            bit = 1 << x
            if fixed & bit:
                continue
            sub = self.solve(alive & ~bit, fixed, limit - 1)
            if sub is not None:
                best = (sub[0] + 1, sub[1] | bit)
                limit = best[0]
            # later branches keep x
            fixed |= bit
        return best

    def _solve_components(self, comps: list[int], keep: int, budget: int) -> Optional[tuple[int, int]]:
        bounds = [self.packing_bound(c, keep & c) for c in comps]
        remaining = sum(bounds)
        if remaining >= budget:
            return None
        total = 0
        deleted = 0
        for comp, lb in zip(comps, bounds):
            remaining -= lb
            sub = self.solve(comp, keep & comp, budget - total - remaining)
            if sub is None:
                return None
            total += sub[0]
            deleted |= sub[1]
        return total, deleted


def ao_exact(G: SimpleGraph, cfg: SolverConfig = SolverConfig()) -> AoResult:
    """Exact ao with a witness, by P3 branch-and-bound.

    Raises :class:`NodeLimitExceeded` instead of returning an approximation.
    """
    full = (1 << G.n) - 1
    search = _Search(G.adj, cfg)
    incumbent = search.greedy(full)
    found = search.solve(full, 0, incumbent.bit_count())
    deleted = incumbent if found is None else found[1]
    witness = full & ~deleted
    if not _is_cluster_mask(G.adj, witness):
        raise AssertionError("solver produced an invalid witness")
    return AoResult(
        value=witness.bit_count(),
        witness=frozenset(bits(witness)),
        deletions=frozenset(bits(deleted)),
        nodes=search.nodes,
    )


def ao_brute(G: SimpleGraph, cfg: SolverConfig = SolverConfig()) -> int:
    """ao by trying vertex subsets from largest to smallest; the first cluster subset wins."""
    if G.n > cfg.max_brute_n:
        raise TooLarge(f"n={G.n} exceeds max_brute_n={cfg.max_brute_n}")
    for size in range(G.n, 0, -1):
        for subset in combinations(range(G.n), size):
            mask = 0
            for v in subset:
                mask |= 1 << v
            if _is_cluster_mask(G.adj, mask):
                return size
    return 0


def witness_chains(P: Poset, witness: frozenset[int]) -> ChainFamily:
    """Split a cluster witness of the comparability graph into chains, bottom to top."""
    G = comparability_graph(P)
    mask = 0
    for p in witness:
        mask |= 1 << p
    chains = []
    for comp in _components(G.adj, mask):
        chain = sorted(bits(comp), key=lambda p: (P.down[p] & comp).bit_count())
        chains.append(tuple(chain))
    return ChainFamily(tuple(chains))


def ao_poset(P: Poset, cfg: SolverConfig = SolverConfig()) -> tuple[AoResult, ChainFamily]:
    result = ao_exact(comparability_graph(P), cfg)
    family = witness_chains(P, result.witness)
    return result, family


def ceil_sqrt(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1


def ao_bounds(P: Poset) -> tuple[int, int]:
    """``max(width, height, ceil(sqrt(n))) <= ao(P) <= width * height``."""
    w, h = width(P), height(P)
    return max(w, h, ceil_sqrt(P.n)), w * h


def independence_number(G: SimpleGraph) -> int:
    """Exhaustive maximum independent set size."""

    def grow(cands: int) -> int:
        if not cands:
            return 0
        v = cands.bit_length() - 1
        rest = cands & ~(1 << v)
        take = 1 + grow(rest & ~G.adj[v])
        if take > rest.bit_count():
            return take
        return max(take, grow(rest))

    return grow((1 << G.n) - 1)


def clique_number(G: SimpleGraph) -> int:
    """Exhaustive maximum clique size."""
    full = (1 << G.n) - 1
    complement = SimpleGraph(G.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(G.adj)))
    return independence_number(complement)

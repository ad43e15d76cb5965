"""Structural predicates on posets, each returning a witness when it fails.

V- and N-shapes are defined on the full order relation; acyclicity is a
property of the cover graph.  All searches are lexicographic so witnesses are
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .poset import Poset, bits, cover_pairs


@dataclass(frozen=True)
class ShapeWitness:
    kind: Literal["V", "N", "CoverCycle"]
    elements: tuple[int, ...]

    def check(self, P: Poset) -> bool:
        """True iff the witness really exhibits its shape in ``P``."""
        e = self.elements
        if self.kind == "V":
            p1, p2, p3 = e
            return P.less(p1, p2) and P.less(p1, p3) and not P.comparable(p2, p3)
        if self.kind == "N":
            p1, p2, p3, p4 = e
            return (
                P.less(p3, p1) and P.less(p4, p1) and P.less(p4, p2)
                and not P.comparable(p1, p2)
                and not P.comparable(p2, p3)
                and not P.comparable(p3, p4)
            )
        covers = {frozenset(c) for c in cover_pairs(P)}
        if len(e) < 3 or len(set(e)) != len(e):
            return False
        return all(frozenset((e[i], e[(i + 1) % len(e)])) in covers for i in range(len(e)))


def find_cover_cycle(P: Poset) -> Optional[ShapeWitness]:
    """A cycle of the cover graph, or None if the cover graph is a forest."""
    nbrs = [0] * P.n
    for upper, lower in cover_pairs(P):
        nbrs[upper] |= 1 << lower
        nbrs[lower] |= 1 << upper
    parent = [-1] * P.n
    depth = [-1] * P.n
    for root in range(P.n):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in bits(nbrs[v]):
                if u == parent[v]:
                    continue
                if depth[u] < 0:
                    depth[u] = depth[v] + 1
                    parent[u] = v
                    stack.append(u)
                    continue
                # non-tree edge v--u closes a cycle through their common ancestor
                left, right = [v], [u]
                a, b = v, u
                while depth[a] > depth[b]:
                    a = parent[a]
                    left.append(a)
                while depth[b] > depth[a]:
                    b = parent[b]
                    right.append(b)
                while a != b:
                    a, b = parent[a], parent[b]
                    left.append(a)
                    right.append(b)
                cycle = left + right[-2::-1]
                return ShapeWitness("CoverCycle", tuple(cycle))
    return None


def is_acyclic(P: Poset) -> bool:
    return find_cover_cycle(P) is None


def find_v_shape(P: Poset) -> Optional[ShapeWitness]:
    """Lexicographically first ``(p1, p2, p3)`` with ``p1 < p2, p3`` and ``p2, p3`` incomparable."""
    for p1 in range(P.n):
        above = P.up[p1]
        for p2 in bits(above):
            rest = above & ~P.comparable_mask(p2) & ~(1 << p2)
            if rest:
                p3 = (rest & -rest).bit_length() - 1
                return ShapeWitness("V", (p1, p2, p3))
    return None


def is_v_free(P: Poset) -> bool:
    return find_v_shape(P) is None


def find_n_shape(P: Poset) -> Optional[ShapeWitness]:
    """Lexicographically first N-shape ``(p1, p2, p3, p4)``.

    The shape is ``p3, p4 < p1``, ``p4 < p2`` with ``p1 ~ p2``, ``p2 ~ p3`` and
    ``p3 ~ p4`` incomparable.
    """
    for p1 in range(P.n):
        below1 = P.down[p1]
        if below1.bit_count() < 2:
            continue
        for p2 in bits(~P.comparable_mask(p1) & ((1 << P.n) - 1) & ~(1 << p1)):
            # p3 below p1 but incomparable to p2
            p3_cands = below1 & ~P.comparable_mask(p2)
            if not p3_cands:
                continue
            # p4 below both
            common = below1 & P.down[p2]
            if not common:
                continue
            for p3 in bits(p3_cands):
                p4s = common & ~P.comparable_mask(p3) & ~(1 << p3)
                if p4s:
                    p4 = (p4s & -p4s).bit_length() - 1
                    return ShapeWitness("N", (p1, p2, p3, p4))
    return None


def is_n_free(P: Poset) -> bool:
    return find_n_shape(P) is None


def central_element(P: Poset) -> Optional[int]:
    """Smallest element comparable to every other element, if any."""
    everyone = (1 << P.n) - 1
    for p in range(P.n):
        if P.comparable_mask(p) | (1 << p) == everyone:
            return p
    return None

"""Generators for the extremal posets and example graphs, with checkable claims.

Every generator returns a :class:`ConstructionReport` (or a bare poset/graph
for the simple families) whose claims can be re-derived with
:meth:`ConstructionReport.verify`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Union

from . import extremal
from .poset import (
    ChainFamily,
    Poset,
    SimpleGraph,
    comparability_graph,
    disjoint_union,
    height,
    invert,
    is_connected,
    place_above,
)
from .solver import NodeLimitExceeded, SolverConfig, ao_exact
from .structure import central_element, is_acyclic, is_n_free, is_v_free


class OutOfSpecifiedRange(ValueError):
    """No construction is known for these parameters."""


@dataclass
class ConstructionReport:
    kind: str
    params: tuple[int, ...]
    obj: Union[Poset, SimpleGraph]
    claimed_size: int
    claimed_ao: int
    claimed_height: Optional[int] = None
    predicates: dict[str, bool] = field(default_factory=dict)
    conjectural: bool = False
    central: Optional[int] = None

    @property
    def poset(self) -> Poset:
        if not isinstance(self.obj, Poset):
            raise TypeError(f"{self.kind} builds a graph, not a poset")
        return self.obj

    def claims(self) -> dict[str, object]:
        out: dict[str, object] = {"size": self.claimed_size, "ao": self.claimed_ao}
        if self.claimed_height is not None:
            out["height"] = self.claimed_height
        out.update(self.predicates)
        return out

    def verify(self, cfg: SolverConfig = SolverConfig(), max_solver_n: int = 64) -> dict[str, tuple[object, object]]:
        """Recompute every claim; returns ``{name: (claimed, actual)}`` for mismatches.

        The ao claim is skipped (recorded as ``(claimed, None)``) when the
        instance is above ``max_solver_n`` or the solver hits its node limit.
        """
        bad: dict[str, tuple[object, object]] = {}
        obj = self.obj
        if obj.n != self.claimed_size:
            bad["size"] = (self.claimed_size, obj.n)
        if isinstance(obj, Poset):
            checks = {
                "v_free": is_v_free,
                "n_free": is_n_free,
                "acyclic": is_acyclic,
                "connected": is_connected,
            }
            for name, claimed in self.predicates.items():
                actual = checks[name](obj)
                if actual != claimed:
                    bad[name] = (claimed, actual)
            if self.claimed_height is not None and height(obj) != self.claimed_height:
                bad["height"] = (self.claimed_height, height(obj))
            if self.central is not None and central_element(obj) != self.central:
                bad["central"] = (self.central, central_element(obj))
            graph = comparability_graph(obj)
        else:
            graph = obj
        if graph.n <= max_solver_n:
            try:
                value = ao_exact(graph, cfg).value
            except NodeLimitExceeded:
                bad["ao"] = (self.claimed_ao, None)
            else:
                if value != self.claimed_ao:
                    bad["ao"] = (self.claimed_ao, value)
        else:
            bad["ao"] = (self.claimed_ao, None)
        return bad


def single() -> Poset:
    return Poset.chain(1)


def _lambda_poset(a: int) -> Poset:
    if a <= 0:
        return Poset.antichain(0)
    if a == 1:
        return single()
    f = (a + 1) // 2
    base = disjoint_union(_lambda_poset(f), _lambda_poset(a - f))
    return place_above(base, Poset.chain(a - f))


def lambda_extremal(a: int) -> ConstructionReport:
    """V-free poset of height ``a`` and ao ``a`` with the maximum number of elements.

    Built recursively: a chain of ``floor(a/2)`` elements on top of the
    disjoint union of the constructions for ``ceil(a/2)`` and ``floor(a/2)``.
    The top chain occupies the highest indices.
    """
    if a < 1:
        raise ValueError("a must be at least 1")
    P = _lambda_poset(a)
    return ConstructionReport(
        "lambda", (a,), P,
        claimed_size=extremal.lambda_closed(a),
        claimed_ao=a,
        claimed_height=a,
        predicates={"v_free": True, "n_free": True, "acyclic": True, "connected": True},
    )


def _split_power(a: int) -> int:
    return 1 << (extremal.ceil_log2(a) - 1)


def _lambda_h_poset(a: int, h: int, extended: bool) -> tuple[Poset, bool]:
    """Poset and whether it relies on the odd-``a`` extension."""
    if h >= a:
        return _lambda_poset(a), False
    if h <= 0:
        return Poset.antichain(0), False
    if 2 * h >= a:
        full = _lambda_poset(a)
        return full.induced(range(full.n - (a - h))), False
    if a % 2 == 0 and h == a // 2 - 1:
        if extremal.is_power_of_two(a):
            half, _ = _lambda_h_poset(a // 2, a // 2 - 1, extended)
            return disjoint_union(half, half), False
        power = _split_power(a)
        left, _ = _lambda_h_poset(power, h, extended)
        return disjoint_union(left, _lambda_poset(a - power)), False
    if extended and a % 2 == 1 and h == (a - 1) // 2:
        power = _split_power(a)
        left, _ = _lambda_h_poset(power, h, extended)
        return disjoint_union(left, _lambda_poset(a - power)), True
    raise OutOfSpecifiedRange(f"no construction for lam({a}, {h})")


def lambda_h_extremal(a: int, h: int, extended: bool = False) -> ConstructionReport:
    """V-free poset with ao ``a``, height at most ``h`` and ``lam(a, h)`` elements.

    Supported: ``h >= a/2`` (drop the top ``a - h`` elements of the
    unrestricted construction) and ``h = a/2 - 1`` for even ``a``.  With
    ``extended=True`` odd ``a`` at ``h = (a-1)/2`` is also built, as the
    disjoint union of the ``(2**alpha, h)`` and ``a - 2**alpha`` constructions;
    that report is marked conjectural.
    """
    if a < 1 or h < 0:
        raise ValueError("need a >= 1 and h >= 0")
    P, conjectural = _lambda_h_poset(a, h, extended)
    if conjectural:
        size = extremal.lambda_h_upper(a, h)
    else:
        size = extremal.lambda_h(a, h)
        assert size is not None
    h_eff = min(h, a)
    return ConstructionReport(
        "lambda-h", (a, h), P,
        claimed_size=size,
        claimed_ao=a if h_eff > 0 else 0,
        claimed_height=h_eff,
        predicates={"v_free": True, "n_free": True, "acyclic": True},
        conjectural=conjectural,
    )


def x_extremal(a: int) -> ConstructionReport:
    """Connected acyclic N-free poset with ao ``a`` and ``X(a)`` elements.

    A V-free lower part of height ``floor((a-1)/2)`` and an inverted V-free
    upper part of height ``ceil((a-1)/2)`` are joined through one central
    element.  Indices: lower part, then the central element, then the upper
    part.  Odd ``a`` uses the extended lower/upper parts and is flagged
    conjectural.
    """
    if a < 1:
        raise ValueError("a must be at least 1")
    if a == 1:
        return ConstructionReport(
            "x", (1,), single(), 1, 1, 1,
            {"v_free": True, "n_free": True, "acyclic": True, "connected": True},
            central=0,
        )
    lo, hi = (a - 1) // 2, a // 2
    lower, c1 = _lambda_h_poset(a, lo, extended=True)
    upper, c2 = _lambda_h_poset(a, hi, extended=True)
    P = place_above(place_above(lower, single()), invert(upper))
    return ConstructionReport(
        "x", (a,), P,
        claimed_size=extremal.x_closed(a),
        claimed_ao=a,
        claimed_height=a,
        predicates={"v_free": False, "n_free": True, "acyclic": True, "connected": True},
        conjectural=c1 or c2,
        central=lower.n,
    )


def boolean_lattice(m: int) -> Poset:
    """Subsets of ``{1..m}`` under strict inclusion; element ``s`` is the subset with bitmask ``s``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    n = 1 << m
    rows = []
    for s in range(n):
        row = 0
        # proper supersets of s
        free = (n - 1) & ~s
        sub = free
        while sub:
            row |= 1 << (s | sub)
            sub = (sub - 1) & free
        rows.append(row)
    return Poset(n, tuple(rows))


def boolean_witness(m: int) -> ChainFamily:
    """Two-element chains ``A < A + {m}`` over the ``floor((m-1)/2)``-subsets ``A`` of ``{1..m-1}``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    k = (m - 1) // 2
    top = 1 << (m - 1)
    chains = []
    for subset in combinations(range(m - 1), k):
        mask = sum(1 << i for i in subset)
        chains.append((mask, mask | top))
    return ChainFamily(tuple(chains))


def boolean_ao(m: int) -> int:
    """``2 * C(m-1, floor((m-1)/2))``."""
    return 2 * math.comb(m - 1, (m - 1) // 2)


def multipartite_parts(n: int) -> list[int]:
    """Part sizes, bottom to top, for ``ceil(sqrt n)`` parts of size at most ``ceil(sqrt n)``.

    ``floor(sqrt n)`` parts of size ``floor(sqrt n)`` plus one remainder part,
    unless the remainder would exceed ``ceil(sqrt n)``; then the full parts
    grow by one.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    r = math.isqrt(n)
    if n == r * r:
        return [r] * r
    size = r if n - r * r <= r + 1 else r + 1
    return [size] * r + [n - r * size]


def multipartite(n: int) -> Poset:
    """Ordinal sum of antichains with sizes from :func:`multipartite_parts`."""
    P = Poset.antichain(0)
    for size in multipartite_parts(n):
        P = place_above(P, Poset.antichain(size))
    return P


def grid_cliques(k: int) -> SimpleGraph:
    """``k`` disjoint cliques of size ``k``."""
    G = SimpleGraph.empty(0)
    for _ in range(k):
        G = G.disjoint_union(SimpleGraph.complete(k))
    return G


def c5_join_component() -> SimpleGraph:
    """A 5-cycle joined to an independent pair: vertices 0-4 on the cycle, 5 and 6 the pair."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(c, p) for c in range(5) for p in (5, 6)]
    return SimpleGraph.from_edges(7, edges)


def planar_c5_join(copies: int) -> SimpleGraph:
    G = SimpleGraph.empty(0)
    for _ in range(copies):
        G = G.disjoint_union(c5_join_component())
    return G


def report_for(kind: str, params: list[int]) -> ConstructionReport:
    """Uniform entry point used by the command line generator."""
    def need(count: int) -> None:
        if len(params) != count:
            raise ValueError(f"{kind} takes {count} parameter(s), got {len(params)}")

    if kind == "lambda":
        need(1)
        return lambda_extremal(params[0])
    if kind == "lambda-h":
        need(2)
        return lambda_h_extremal(params[0], params[1])
    if kind == "x":
        need(1)
        return x_extremal(params[0])
    if kind == "boolean":
        need(1)
        m = params[0]
        P = boolean_lattice(m)
        # the closed formula undercounts at m = 2, where a maximal chain beats it
        claimed = max(boolean_ao(m), m + 1) if m >= 1 else 1
        return ConstructionReport(
            "boolean", (m,), P, 1 << m, claimed, m + 1,
            {"acyclic": m <= 1, "connected": True},
        )
    if kind == "multipartite":
        need(1)
        n = params[0]
        P = multipartite(n)
        parts = multipartite_parts(n)
        c = math.isqrt(n) + (0 if math.isqrt(n) ** 2 == n else 1)
        return ConstructionReport(
            "multipartite", (n,), P, n, c, len(parts),
            {"connected": len(parts) > 1 or n <= 1},
        )
    if kind == "grid":
        need(1)
        k = params[0]
        return ConstructionReport("grid", (k,), grid_cliques(k), k * k, k * k)
    if kind == "planar-c5":
        need(1)
        c = params[0]
        return ConstructionReport("planar-c5", (c,), planar_c5_join(c), 7 * c, 3 * c)
    raise ValueError(f"unknown construction kind {kind!r}")

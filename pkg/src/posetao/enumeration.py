"""Exhaustive isomorph-free generation of small posets and the oracles built on it.

Every poset on ``n`` elements arises from one on ``n - 1`` elements by adding a
new maximal element above some down-closed set, so classes are grown one
element at a time and deduplicated by a canonical key.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from . import extremal
from .poset import Poset, bits, comparability_graph, height, is_connected, width
from .solver import SolverConfig, TooLarge, ao_brute
from .structure import is_acyclic, is_n_free, is_v_free

MAX_N = 7


def _canonical_order(P: Poset) -> tuple[int, tuple[int, ...]]:
    """Lexicographically least encoding over all element orders, and one order attaining it.

    Position ``k`` contributes the pairs ``(less(x_k, x_j), less(x_j, x_k))``
    for ``j < k``, so a prefix of the order fixes a prefix of the encoding and
    the minimum can be found level by level, keeping every tied prefix.
    """
    n = P.n
    up = P.up
    states: list[tuple[tuple[int, ...], int]] = [((), 0)]
    code = 0
    for k in range(n):
        best = None
        nxt: list[tuple[tuple[int, ...], int]] = []
        for seq, used in states:
            for e in range(n):
                if used >> e & 1:
                    continue
                row = up[e]
                chunk = 0
                for s in seq:
                    chunk = (chunk << 2) | ((row >> s & 1) << 1) | (up[s] >> e & 1)
                if best is None or chunk < best:
                    best = chunk
                    nxt = [(seq + (e,), used | (1 << e))]
                elif chunk == best:
                    nxt.append((seq + (e,), used | (1 << e)))
        code = (code << (2 * k)) | (best or 0)
        states = nxt
    return code, states[0][0]


def canonical_key(P: Poset) -> bytes:
    """Isomorphism-invariant encoding of the order relation."""
    code, _ = _canonical_order(P)
    nbits = P.n * (P.n - 1)
    return bytes([P.n]) + code.to_bytes((nbits + 7) // 8, "big")


def canonical_form(P: Poset) -> Poset:
    """The relabelling of ``P`` whose encoding is the canonical key."""
    _, order = _canonical_order(P)
    perm = [0] * P.n
    for position, element in enumerate(order):
        perm[element] = position
    return P.relabel(perm)


def down_sets(P: Poset) -> Iterator[int]:
    """All down-closed subsets of ``P`` as bitmasks."""
    for mask in range(1 << P.n):
        if all(P.down[p] & ~mask == 0 for p in bits(mask)):
            yield mask


def add_maximal(P: Poset, below: int) -> Poset:
    """Extend ``P`` with a new element ``P.n`` above exactly the down-set ``below``."""
    new = 1 << P.n
    rows = tuple(row | new if below >> p & 1 else row for p, row in enumerate(P.up))
    return Poset(P.n + 1, rows + (0,))


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Poset, ...]:
    if n == 0:
        return (Poset.antichain(0),)
    found: dict[bytes, Poset] = {}
    for P in _classes(n - 1):
        for ideal in down_sets(P):
            Q = add_maximal(P, ideal)
            key = canonical_key(Q)
            if key not in found:
                found[key] = canonical_form(Q)
    return tuple(found[k] for k in sorted(found))


def _guard(n: int) -> None:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_N:
        raise TooLarge(f"enumeration is limited to n <= {MAX_N}, got {n}")


def enumerate_posets(n: int) -> Iterator[Poset]:
    """One representative per isomorphism class of ``n``-element posets, in key order."""
    _guard(n)
    yield from _classes(n)


def enumerate_acyclic(n: int) -> Iterator[Poset]:
    """Classes whose cover graph is a forest."""
    return (P for P in enumerate_posets(n) if is_acyclic(P))


@dataclass(frozen=True)
class PosetRecord:
    key: bytes
    poset: Poset
    ao: int
    height: int
    width: int
    acyclic: bool
    v_free: bool
    n_free: bool
    connected: bool

    def csv_row(self) -> list[str]:
        flag = lambda b: "1" if b else "0"  # noqa: E731
        return [
            self.key.hex(), str(self.ao), str(self.height), str(self.width),
            flag(self.acyclic), flag(self.v_free), flag(self.n_free), flag(self.connected),
        ]


CSV_COLUMNS = ["canonical_key_hex", "ao", "height", "width", "acyclic", "v_free", "n_free", "connected"]


def poset_ao(P: Poset) -> int:
    return ao_brute(comparability_graph(P), SolverConfig())


@lru_cache(maxsize=None)
def records(n: int) -> tuple[PosetRecord, ...]:
    """Per-class invariants for every ``n``-element poset (cached)."""
    _guard(n)
    out = []
    for P in _classes(n):
        out.append(PosetRecord(
            canonical_key(P), P, poset_ao(P), height(P), width(P),
            is_acyclic(P), is_v_free(P), is_n_free(P), is_connected(P),
        ))
    return tuple(out)


def min_ao(family: Iterable[Poset]) -> tuple[Optional[int], Optional[Poset]]:
    """Minimum ao over ``family`` with the first minimiser in stream order."""
    best: Optional[int] = None
    witness: Optional[Poset] = None
    for P in family:
        value = poset_ao(P)
        if best is None or value < best:
            best, witness = value, P
    return best, witness


def verify_connected_nfree_attainment(n: int) -> bool:
    """True iff some connected N-free acyclic poset attains the minimum ao over all acyclic ones."""
    acyclic = [r for r in records(n) if r.acyclic]
    overall = min(r.ao for r in acyclic)
    special = [r.ao for r in acyclic if r.connected and r.n_free]
    return bool(special) and min(special) == overall


def oracle_lambda_h(a: int, h: int, n_cap: int = MAX_N) -> Optional[int]:
    """Largest V-free poset with ao ``a`` and height at most ``h`` among those with at most ``n_cap`` elements.

    None if no such poset exists within the cap.  The answer equals the true
    value whenever :func:`oracle_trusted` holds.
    """
    _guard(n_cap)
    if a == 0 or h == 0:
        # only the empty poset has height 0
        return 0
    best = None
    for size in range(1, n_cap + 1):
        for r in records(size):
            if r.v_free and r.ao == a and r.height <= h:
                best = size
                break
    return best


def oracle_trusted(a: int, h: int, n_cap: int = MAX_N) -> bool:
    """The proven bound ``lam(a) - (a - h)`` lies within the enumerated sizes."""
    return extremal.lambda_h_upper(a, h) <= n_cap


def confirmed_lambda_h(n_cap: int = MAX_N, a_max: int = 8) -> dict[tuple[int, int], int]:
    """Oracle values of ``lam(a, h)`` for every pair the enumeration settles."""
    out = {}
    for a in range(1, a_max + 1):
        for h in range(0, a + 1):
            if oracle_trusted(a, h, n_cap):
                value = oracle_lambda_h(a, h, n_cap)
                if value is not None:
                    out[(a, h)] = value
    return out

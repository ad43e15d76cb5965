"""Extremal sizes of V-free and of acyclic N-free posets with a given ao.

``lam(a)`` is the largest V-free poset with ao = a, ``lam(a, h)`` the same with
height at most h, and ``X(a)`` the largest acyclic N-free poset with ao = a.
Closed forms come from the binary expansion of ``a``; the recurrences are
evaluated independently so the two can be checked against each other.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from typing import Mapping, Optional

import numpy as np

A_MAX = 1 << 20


class Unspecified(LookupError):
    """A value the known results do not determine (and no oracle confirmed)."""


def _check_a(a: int) -> None:
    if not 0 <= a <= A_MAX:
        raise ValueError(f"a must lie in [0, {A_MAX}], got {a}")


def binary_exponents(a: int) -> list[int]:
    """Exponents ``i_0 < i_1 < ...`` with ``a = sum 2**i_k``."""
    return [i for i in range(a.bit_length()) if a >> i & 1]


def is_power_of_two(a: int) -> bool:
    return a > 0 and a & (a - 1) == 0


def log2_gap(a: int) -> int:
    """``ceil(log2 a) - floor(log2 a)``: 0 for powers of two, else 1."""
    return 0 if is_power_of_two(a) else 1


def ceil_log2(a: int) -> int:
    return (a - 1).bit_length()


def lambda_closed(a: int) -> int:
    """Closed form ``sum (2t - 2k + i_k) 2**(i_k - 1)`` over the binary expansion of ``a``."""
    _check_a(a)
    if a == 0:
        return 0
    exps = binary_exponents(a)
    t = len(exps)
    # doubled to stay integral when i_0 = 0
    twice = sum((2 * t - 2 * k + i) << i for k, i in enumerate(exps))
    return twice // 2


def lambda_rec(a: int) -> int:
    """``lam(a) = max{lam(f) + lam(a-f) + a-f : a/2 <= f < a}`` by dynamic programming."""
    _check_a(a)
    return _lambda_table(a)[a]


_table: list[int] = [0, 1]
_table_lock = threading.Lock()


def _lambda_table(n: int) -> list[int]:
    """Recurrence values for ``0..n``, extended on demand (idempotent under concurrent readers)."""
    with _table_lock:
        if len(_table) <= n:
            values = np.array(_table + [0] * (n + 1 - len(_table)), dtype=np.int64)
            for a in range(len(_table), n + 1):
                f = np.arange((a + 1) // 2, a)
                values[a] = int((values[f] + values[a - f] + (a - f)).max())
            _table[:] = values.tolist()
        return _table


def lambda_split_values(a: int) -> dict[int, int]:
    """Value of the recurrence term for every admissible split ``f``."""
    table = _lambda_table(a)
    return {f: table[f] + table[a - f] + a - f for f in range((a + 1) // 2, a)}


@dataclass
class ArgmaxReport:
    a: int
    best: int
    values: dict[int, int]
    half_split: int
    power_split: Optional[int]
    strict_for_power_of_two: Optional[bool]
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def lambda_argmax_properties(a: int) -> ArgmaxReport:
    """Check which splits attain the recurrence maximum for ``a >= 2``.

    Verified claims: the split ``ceil(a/2)`` is optimal, the split
    ``2**(ceil(log2 a) - 1)`` is optimal, and for a power of two every
    ``a/2 < f < a`` is strictly worse.  Raises AssertionError naming the
    failing claim and split.
    """
    if a < 2:
        raise ValueError("splits exist only for a >= 2")
    values = lambda_split_values(a)
    best = max(values.values())
    half = (a + 1) // 2
    power = 1 << (ceil_log2(a) - 1)
    report = ArgmaxReport(a, best, values, half, power, None)
    if values[half] != best:
        report.failures.append(f"a={a}: f=ceil(a/2)={half} gives {values[half]} < {best}")
    if values.get(power) != best:
        report.failures.append(f"a={a}: f=2^(ceil(log2 a)-1)={power} gives {values.get(power)} < {best}")
    if is_power_of_two(a):
        weak = [f for f, v in values.items() if f > a // 2 and v >= best]
        report.strict_for_power_of_two = not weak
        for f in weak:
            report.failures.append(f"a={a}: f={f} attains {values[f]}, expected strictly below {best}")
    if report.failures:
        raise AssertionError("; ".join(report.failures))
    return report


def lambda_h(a: int, h: int) -> Optional[int]:
    """``lam(a, h)`` where the known results determine it, else None.

    Covered cases: ``h >= a`` (no height constraint), ``a/2 <= h``
    (``lam(a) - (a - h)``), ``h = a/2 - 1`` for even ``a``, and ``h = 0``
    (the empty poset).
    """
    _check_a(a)
    if h < 0:
        raise ValueError("h must be non-negative")
    if h >= a:
        return lambda_closed(a)
    if h == 0:
        return 0
    if 2 * h >= a:
        return lambda_closed(a) - (a - h)
    if a % 2 == 0 and h == a // 2 - 1:
        extra = 2 if is_power_of_two(a) else 1
        return lambda_closed(a) - a // 2 - extra
    return None


def lambda_h_upper(a: int, h: int) -> int:
    """The general upper bound ``lam(a, h) <= lam(a) - (a - h)`` for ``h <= a``."""
    return lambda_closed(a) - max(a - h, 0)


def x_closed(a: int) -> int:
    """``X(a)`` from the binary expansion; ``X(1) = 1``.

    Both closed forms are evaluated and must agree.
    """
    _check_a(a)
    if a < 1:
        raise ValueError("X(a) is defined for a >= 1")
    if a == 1:
        return 1
    exps = binary_exponents(a)
    t = len(exps)
    by_sum = sum((2 * (t - k) + i - 1) << i for k, i in enumerate(exps)) - 1 + log2_gap(a)
    by_lambda = x_from_lambda(a)
    if by_sum != by_lambda:
        raise AssertionError(f"X({a}): expansion sum {by_sum} != 2*lam(a)-a-1+gap {by_lambda}")
    return by_sum


def x_from_lambda(a: int) -> int:
    """``2 lam(a) - a - 1 + ceil(log2 a) - floor(log2 a)`` for ``a >= 2``."""
    return 2 * lambda_closed(a) - a - 1 + log2_gap(a)


def x_via_max(a: int, confirmed: Optional[Mapping[tuple[int, int], int]] = None) -> int:
    """``lam(a, floor((a-1)/2)) + lam(a, ceil((a-1)/2)) + 1``.

    ``confirmed`` supplies oracle-verified ``lam(a, h)`` values for arguments
    where :func:`lambda_h` returns None.  Raises :class:`Unspecified` if a
    needed value is still missing (odd ``a`` outside the oracle's reach).
    """
    if a < 2:
        raise ValueError("x_via_max needs a >= 2")
    lo, hi = (a - 1) // 2, a // 2
    parts = []
    for h in (lo, hi):
        v = lambda_h(a, h)
        if v is None and confirmed is not None:
            v = confirmed.get((a, h))
        if v is None:
            raise Unspecified(f"lam({a}, {h}) is not determined")
        parts.append(v)
    return parts[0] + parts[1] + 1


@dataclass(frozen=True)
class AoTnBounds:
    n: int
    k: int
    lo: int
    hi: int
    predicted: int
    exact: bool

    @property
    def consistent(self) -> bool:
        return self.lo <= self.predicted <= self.hi


def predicted_ao_tn(n: int) -> int:
    """Smallest ``a`` with ``X(a) >= n``."""
    if n < 1:
        raise ValueError("n must be positive")
    a = 1
    while x_closed(a) < n:
        a += 1
    return a


def ao_tn_bounds(n: int) -> AoTnBounds:
    """Bracket ``2**(k-1) < ao(T_n) <= 2**k`` for the k with ``k 2**(k-1) - 1 < n <= (k+1) 2**k - 1``.

    ``predicted`` is flagged exact only when it is a power of two; otherwise
    it is conjectural.
    """
    if n < 1:
        raise ValueError("n must be positive")
    k = 1
    while not (k * (1 << (k - 1)) - 1 < n <= (k + 1) * (1 << k) - 1):
        k += 1
    predicted = predicted_ao_tn(n)
    return AoTnBounds(n, k, (1 << (k - 1)) + 1, 1 << k, predicted, is_power_of_two(predicted))


def asymptotic_check(n: int) -> float:
    """``predicted(n) * log2(n) / n``; tends to 1."""
    return predicted_ao_tn(n) * math.log2(n) / n


@dataclass
class ExtremalTable:
    """Memoized extremal values with where each ``lam(a, h)`` came from."""

    lam: dict[int, int] = field(default_factory=dict)
    lam_h: dict[tuple[int, int], tuple[int, str]] = field(default_factory=dict)
    x: dict[int, int] = field(default_factory=dict)

    @classmethod
    def build(cls, a_max: int, oracle: Optional[Mapping[tuple[int, int], int]] = None) -> ExtremalTable:
        table = cls()
        rec = _lambda_table(a_max)
        for a in range(0, a_max + 1):
            table.lam[a] = lambda_closed(a)
            if rec[a] != table.lam[a]:
                raise AssertionError(f"lam({a}): closed form {table.lam[a]} != recurrence {rec[a]}")
            if a >= 1:
                table.x[a] = x_closed(a)
            for h in range(0, a + 1):
                v = lambda_h(a, h)
                if v is not None:
                    table.lam_h[(a, h)] = (v, "closed-form")
                elif oracle is not None and (a, h) in oracle:
                    table.lam_h[(a, h)] = (oracle[(a, h)], "oracle")
        return table

    def check(self) -> list[str]:
        """Invariant violations (empty when the table is sound)."""
        problems = []
        ordered = sorted(a for a in self.lam if a >= 1)
        for a, b in zip(ordered, ordered[1:]):
            if not self.lam[b] > self.lam[a]:
                problems.append(f"lam not increasing at {a}->{b}")
        xs = sorted(self.x)
        for a, b in zip(xs, xs[1:]):
            if not self.x[b] > self.x[a]:
                problems.append(f"X not increasing at {a}->{b}")
        for (a, h), (v, _) in self.lam_h.items():
            if h <= a and v > self.lam[a] - (a - h):
                problems.append(f"lam({a},{h})={v} exceeds lam(a)-(a-h)")
        return problems

"""Both sides of the pentagonal and Zagier-type identities, built twice.

One route is series algebra (:mod:`qfranklin.series`); the other enumerates
distinct-part partitions and sums a signed weight over them
(:func:`signed_partition_sum`).  Compare the results with
:func:`qfranklin.series.first_mismatch`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .partitions import (
    Partition,
    classify_franklin,
    franklin_map,
    iter_distinct,
    partition_stats,
)
from .series import (
    INF,
    QSeries,
    XQSeries,
    lambert_series,
    pentagonal_numbers,
    pochhammer_q,
    pochhammer_q_family,
    qs_mul,
    xq_diff_x,
    xq_eval_x1,
    xq_sub_x_to_qx,
)

__all__ = [
    "WeightSelector",
    "SForm",
    "signed_partition_sum",
    "weighted_pentagonal_series",
    "zagier_lhs",
    "zagier_rhs",
    "nsum_lhs",
    "x_identity_rhs",
    "s_series",
    "recurrence_residual",
    "diff_bridge",
    "CensusRow",
    "pentagonal_census",
    "OrbitPair",
    "orbit_pairs",
    "CancellationReport",
    "cancellation_check",
]


class WeightSelector(enum.Enum):
    """Per-partition weight in the signed sum over distinct-part partitions."""

    UNIT = "unit"               # 1
    LARGEST_PART = "largest"    # m
    NUM_PARTS = "nparts"        # n
    SUM_MN = "sum_mn"           # m + n
    X_POWER_MN = "x_power_mn"   # x^(m+n)


def signed_partition_sum(order: int, w: WeightSelector):
    """``sum (-1)^n * w(lam) * q^N`` over distinct-part partitions with ``N <= order``.

    Returns a :class:`QSeries`, or for ``X_POWER_MN`` an :class:`XQSeries`
    with ``xorder = order + 1`` (the largest ``m + n`` at weight N is N + 1,
    from the one-part partition).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if w is WeightSelector.X_POWER_MN:
        rows = [[0] * (order + 2) for _ in range(order + 1)]
        for N in range(order + 1):
            row = rows[N]
            for parts in iter_distinct(N):
                n = len(parts)
                m = parts[0] if parts else 0
                row[m + n] += -1 if n & 1 else 1
        return XQSeries(rows, order, order + 1)

    cs = [0] * (order + 1)
    for N in range(order + 1):
        total = 0
        for parts in iter_distinct(N):
            n = len(parts)
            m = parts[0] if parts else 0
            if w is WeightSelector.UNIT:
                v = 1
            elif w is WeightSelector.LARGEST_PART:
                v = m
            elif w is WeightSelector.NUM_PARTS:
                v = n
            else:
                v = m + n
            total += -v if n & 1 else v
        cs[N] = total
    return QSeries(cs, order)


def weighted_pentagonal_series(order: int) -> QSeries:
    """``sum_{r>=1} (-1)^r [(3r-1) q^(r(3r-1)/2) + 3r q^(r(3r+1)/2)]``."""
    cs = [0] * (order + 1)
    for r, e1, e2 in pentagonal_numbers(order):
        sign = -1 if r & 1 else 1
        cs[e1] += sign * (3 * r - 1)
        if e2 <= order:
            cs[e2] += sign * 3 * r
    return QSeries(cs, order)


def zagier_lhs(order: int) -> QSeries:
    """``sum_{n>=0} [(q)_oo - (q)_n]`` truncated at ``q^order``.

    ``(q)_n`` agrees with ``(q)_oo`` through ``q^n``, so terms with
    ``n >= order`` vanish and the sum is finite.
    """
    fam = pochhammer_q_family(order)
    full = fam[-1]
    acc = [0] * (order + 1)
    for n in range(order):
        for i, (u, v) in enumerate(zip(full.coeffs, fam[n].coeffs)):
            acc[i] += u - v
    return QSeries(acc, order)


def zagier_rhs(order: int) -> QSeries:
    """``(q)_oo * sum_k q^k/(1-q^k)`` plus the weighted pentagonal series."""
    prod = qs_mul(pochhammer_q(INF, order), lambert_series(order))
    return prod + weighted_pentagonal_series(order)


def nsum_lhs(order: int) -> QSeries:
    """``-(q)_oo * sum_k q^k/(1-q^k)``."""
    return -qs_mul(pochhammer_q(INF, order), lambert_series(order))


def x_identity_rhs(qorder: int, xorder: int) -> XQSeries:
    """``1 + sum_{r>=1} (-1)^r [x^(3r-1) q^(r(3r-1)/2) + x^(3r) q^(r(3r+1)/2)]``."""
    terms = [(0, 0, 1)]
    r = 1
    while r * (3 * r - 1) // 2 <= qorder and 3 * r - 1 <= xorder:
        sign = -1 if r & 1 else 1
        terms.append((3 * r - 1, r * (3 * r - 1) // 2, sign))
        terms.append((3 * r, r * (3 * r + 1) // 2, sign))
        r += 1
    return XQSeries.from_terms(terms, qorder, xorder)


class SForm(enum.Enum):
    DIRECT = "direct"           # sum_r (x)_{r+1} x^r
    TELESCOPED = "telescoped"   # 1 + sum_m x^m [(xq)_m - (xq)_{m-1}]
    PRODUCT = "product"         # (1 - x) sum_m (xq)_m x^m


def s_series(qorder: int, xorder: int, form: SForm = SForm.DIRECT) -> XQSeries:
    """The series ``S(x) = sum_{r>=0} (x)_{r+1} x^r`` in one of three forms.

    Every summand indexed by r (or m) has x-degree at least r, so the sums
    stop at ``xorder``.
    """
    acc = XQSeries.zero(qorder, xorder)
    if form is SForm.DIRECT:
        poch = XQSeries.one(qorder, xorder)
        for r in range(xorder + 1):
            poch = poch.times_one_minus_monomial(1, r)  # now (x)_{r+1}
            acc = acc + _shift_x(poch, r)
        return acc

    if form is SForm.TELESCOPED:
        acc = XQSeries.one(qorder, xorder)
        prev = XQSeries.one(qorder, xorder)
        for m in range(1, xorder + 1):
            cur = prev.times_one_minus_monomial(1, m)
            acc = acc + _shift_x(cur - prev, m)
            prev = cur
        return acc

    if form is SForm.PRODUCT:
        poch = XQSeries.one(qorder, xorder)
        for m in range(xorder + 1):
            if m:
                poch = poch.times_one_minus_monomial(1, m)
            acc = acc + _shift_x(poch, m)
        return acc.times_one_minus_monomial(1, 0)

    raise ValueError(f"unknown form {form!r}")


def _shift_x(s: XQSeries, k: int) -> XQSeries:
    X = s.xorder
    pad = [0] * min(k, X + 1)
    return XQSeries._raw([(pad + list(r))[: X + 1] for r in s.rows], X)


def _shift(s: XQSeries, xk: int, qk: int) -> XQSeries:
    # multiply by x^xk q^qk
    X = s.xorder
    zero = [0] * (X + 1)
    rows = [zero] * min(qk, s.qorder + 1) + [list(r) for r in s.rows]
    return _shift_x(XQSeries._raw(rows[: s.qorder + 1], X), xk)


def recurrence_residual(qorder: int, xorder: int, q_power: int = 2) -> XQSeries:
    """``S(x) - [1 - q x^2 - q^q_power x^3 S(qx)]`` on the full window.

    With the default ``q_power=2`` this is identically zero.  ``S(qx)`` at
    ``x^a q^c`` only needs ``S`` at ``x^a q^(c-a)``, so every representable
    coefficient of the residual is exact.
    """
    S = s_series(qorder, xorder, SForm.DIRECT)
    rhs = XQSeries.one(qorder, xorder) - XQSeries.monomial(2, 1, 1, qorder, xorder)
    rhs = rhs - _shift(xq_sub_x_to_qx(S), 3, q_power)
    return S - rhs


def diff_bridge(order: int) -> QSeries:
    """``d/dx`` of the ``x^(m+n)`` signed sum, evaluated at ``x = 1``.

    Yields the ``(m+n)``-weighted signed sum.  ``xorder = order + 1`` bounds
    ``m + n`` exactly, so the x = 1 evaluation is not a truncation artifact.
    """
    return xq_eval_x1(xq_diff_x(signed_partition_sum(order, WeightSelector.X_POWER_MN)))


@dataclass(frozen=True)
class CensusRow:
    weight: int
    signed_count: int            # d_e - d_o from enumeration
    predicted: int               # (-1)^r at pentagonal weights, else 0
    witness: Optional[Partition]  # the exceptional partition, if any
    exceptional_count: int

    @property
    def ok(self) -> bool:
        return self.signed_count == self.predicted


def _pentagonal_index(weight: int) -> Optional[int]:
    if weight == 0:
        return 0
    for r, e1, e2 in pentagonal_numbers(weight):
        if weight in (e1, e2):
            return r
    return None


def pentagonal_census(max_weight: int) -> List[CensusRow]:
    """For each weight, the signed distinct-part count next to its closed form."""
    rows = []
    for W in range(max_weight + 1):
        signed, witness, nexc = 0, None, 0
        for parts in iter_distinct(W):
            lam = Partition(parts)
            signed += -1 if len(parts) & 1 else 1
            if classify_franklin(lam).is_exceptional:
                witness = lam
                nexc += 1
        r = _pentagonal_index(W)
        predicted = 0 if r is None else (-1) ** r
        rows.append(CensusRow(W, signed, predicted, witness, nexc))
    return rows


@dataclass(frozen=True)
class OrbitPair:
    first: Partition
    second: Partition


def orbit_pairs(weight: int) -> Tuple[List[OrbitPair], List[Partition]]:
    """Split the distinct-part partitions of ``weight`` into Franklin orbits.

    Returns the two-element orbits (first member earlier in canonical order)
    and the exceptional fixed points.
    """
    pairs, exceptional = [], []
    seen = set()
    for parts in iter_distinct(weight):
        if parts in seen:
            continue
        lam = Partition(parts)
        if classify_franklin(lam).is_exceptional:
            exceptional.append(lam)
            continue
        image = franklin_map(lam)
        seen.add(image.parts)
        pairs.append(OrbitPair(lam, image))
    return pairs, exceptional


@dataclass(frozen=True)
class CancellationReport:
    weight: int
    pair_sums: Tuple[int, ...]   # (-1)^n (m+n) summed over each orbit pair
    exceptional_total: int
    total: int

    @property
    def ok(self) -> bool:
        return not any(self.pair_sums) and self.total == self.exceptional_total


def _mn_term(lam: Partition) -> int:
    st = partition_stats(lam)
    return (-1) ** st.n * (st.m + st.n)


def cancellation_check(weight: int) -> CancellationReport:
    """Sum ``(-1)^n (m+n)`` pair by pair so the cancellation is explicit."""
    pairs, exceptional = orbit_pairs(weight)
    pair_sums = tuple(_mn_term(p.first) + _mn_term(p.second) for p in pairs)
    exc = sum(_mn_term(lam) for lam in exceptional)
    total = sum(_mn_term(Partition(p)) for p in iter_distinct(weight))
    return CancellationReport(weight, pair_sums, exc, total)


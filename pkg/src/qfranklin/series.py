"""Truncated formal power series with exact integer coefficients.

Two containers live here:

* :class:`QSeries` -- a univariate series in ``q`` known exactly through
  ``q**order``.
* :class:`XQSeries` -- a bivariate series in ``x`` and ``q`` with bigraded
  truncation: ``x**a * q**b`` is representable iff ``a <= xorder`` and
  ``b <= qorder``.

Coefficients are Python ints, so nothing ever overflows or rounds.  Both
types are immutable; every operation returns a new value whose order is the
minimum of its inputs' orders.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

__all__ = [
    "INF",
    "QSeries",
    "XQSeries",
    "qs_add",
    "qs_sub",
    "qs_mul",
    "pochhammer_q",
    "pochhammer_q_family",
    "lambert_series",
    "pentagonal_numbers",
    "pentagonal_series",
    "xq_pochhammer",
    "xq_diff_x",
    "xq_eval_x1",
    "xq_sub_x_to_qx",
    "first_mismatch",
]

INF = math.inf

Count = Union[int, float]


def _check_order(order: int, name: str = "order") -> int:
    if isinstance(order, bool) or not isinstance(order, int) or order < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {order!r}")
    return order


class QSeries:
    """Univariate series ``sum c[i] q**i`` exact through ``q**order``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int], order: Optional[int] = None):
        cs = [int(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("cannot infer order from an empty coefficient list")
            order = len(cs) - 1
        _check_order(order)
        if len(cs) > order + 1:
            del cs[order + 1:]
        else:
            cs.extend([0] * (order + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: Sequence[int]) -> "QSeries":
        # trusted constructor: coeffs already has the right length
        self = object.__new__(cls)
        self._coeffs = tuple(coeffs)
        return self

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls._raw([0] * (_check_order(order) + 1))

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls.monomial(0, 1, order)

    @classmethod
    def monomial(cls, exponent: int, coeff: int, order: int) -> "QSeries":
        """``coeff * q**exponent``; vanishes if ``exponent > order``."""
        cs = [0] * (_check_order(order) + 1)
        if exponent < 0:
            raise ValueError("negative exponent")
        if exponent <= order:
            cs[exponent] = coeff
        return cls._raw(cs)

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, int]], order: int) -> "QSeries":
        """Build from ``(exponent, coeff)`` pairs, dropping those past ``order``."""
        cs = [0] * (_check_order(order) + 1)
        for e, c in terms:
            if e <= order:
                cs[e] += c
        return cls._raw(cs)

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, i: int) -> int:
        if i < 0 or i > self.order:
            raise IndexError(f"q^{i} is outside the exact window 0..{self.order}")
        return self._coeffs[i]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"QSeries({list(self._coeffs)!r})"

    def __str__(self) -> str:
        from .formatting import format_qseries

        return format_qseries(self)

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def valuation(self) -> Optional[int]:
        """Lowest exponent with a nonzero coefficient, ``None`` for zero."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return None

    def truncate(self, order: int) -> "QSeries":
        if _check_order(order) > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return QSeries._raw(self._coeffs[: order + 1])

    def __neg__(self) -> "QSeries":
        return QSeries._raw([-c for c in self._coeffs])

    def __add__(self, other):
        if isinstance(other, int):
            other = QSeries.monomial(0, other, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        return qs_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = QSeries.monomial(0, other, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        return qs_sub(self, other)

    def __rsub__(self, other):
        if isinstance(other, int):
            return qs_sub(QSeries.monomial(0, other, self.order), self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries._raw([c * other for c in self._coeffs])
        if not isinstance(other, QSeries):
            return NotImplemented
        return qs_mul(self, other)

    __rmul__ = __mul__

    def times_one_minus_qk(self, k: int, coeff: int = 1) -> "QSeries":
        """Multiply by ``1 - coeff*q**k`` in a single O(order) pass."""
        cs = list(self._coeffs)
        for i in range(len(cs) - 1, k - 1, -1):
            cs[i] -= coeff * cs[i - k]
        return QSeries._raw(cs)


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    n = min(a.order, b.order) + 1
    return QSeries._raw([x + y for x, y in zip(a.coeffs[:n], b.coeffs[:n])])


def qs_sub(a: QSeries, b: QSeries) -> QSeries:
    n = min(a.order, b.order) + 1
    return QSeries._raw([x - y for x, y in zip(a.coeffs[:n], b.coeffs[:n])])


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product truncated to ``min(a.order, b.order)``."""
    order = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = [0] * (order + 1)
    # loop over the sparser factor; (q)_oo and friends are mostly zeros
    if sum(1 for c in ac[: order + 1] if c) > sum(1 for c in bc[: order + 1] if c):
        ac, bc = bc, ac
    for i in range(order + 1):
        c = ac[i]
        if not c:
            continue
        for j in range(order + 1 - i):
            d = bc[j]
            if d:
                out[i + j] += c * d
    return QSeries._raw(out)


def pochhammer_q(n: Count, order: int) -> QSeries:
    """``(q)_n = prod_{k=1}^{n} (1 - q**k)`` truncated at ``q**order``.

    ``n`` may be ``INF``; factors with ``k > order`` are the identity modulo
    ``q**(order+1)``, so the infinite product stops at ``k = order``.
    """
    _check_order(order)
    if n == INF:
        last = order
    else:
        last = _check_order(n, "n")
        last = min(last, order)
    s = QSeries.one(order)
    for k in range(1, last + 1):
        s = s.times_one_minus_qk(k)
    return s


def pochhammer_q_family(order: int) -> list:
    """``[(q)_0, (q)_1, ..., (q)_order]``, each derived from its predecessor.

    ``(q)_order`` already equals ``(q)_oo`` modulo ``q**(order+1)``.
    """
    fam = [QSeries.one(_check_order(order))]
    for k in range(1, order + 1):
        fam.append(fam[-1].times_one_minus_qk(k))
    return fam


def lambert_series(order: int) -> QSeries:
    """``sum_{k>=1} q**k / (1 - q**k)``; the ``q**N`` coefficient counts divisors of N."""
    cs = [0] * (_check_order(order) + 1)
    for k in range(1, order + 1):
        # q^k/(1-q^k) = q^k + q^2k + ...
        for e in range(k, order + 1, k):
            cs[e] += 1
    return QSeries._raw(cs)


def pentagonal_numbers(limit: int) -> Iterator[Tuple[int, int, int]]:
    """Yield ``(r, r(3r-1)/2, r(3r+1)/2)`` for r = 1, 2, ... while ``r(3r-1)/2 <= limit``."""
    r = 1
    while r * (3 * r - 1) // 2 <= limit:
        yield r, r * (3 * r - 1) // 2, r * (3 * r + 1) // 2
        r += 1


def pentagonal_series(order: int) -> QSeries:
    """``1 + sum_{r>=1} (-1)**r (q**(r(3r-1)/2) + q**(r(3r+1)/2))``, truncated."""
    cs = [0] * (_check_order(order) + 1)
    cs[0] = 1
    for r, e1, e2 in pentagonal_numbers(order):
        sign = -1 if r % 2 else 1
        cs[e1] += sign
        if e2 <= order:
            cs[e2] += sign
    return QSeries._raw(cs)


class XQSeries:
    """Bivariate series; ``rows[b][a]`` is the coefficient of ``x**a q**b``."""

    __slots__ = ("_rows", "_xorder")

    def __init__(self, rows: Iterable[Iterable[int]], qorder: Optional[int] = None,
                 xorder: Optional[int] = None):
        rs = [[int(c) for c in row] for row in rows]
        if qorder is None:
            if not rs:
                raise ValueError("cannot infer qorder from empty rows")
            qorder = len(rs) - 1
        if xorder is None:
            if not rs or not any(rs):
                raise ValueError("cannot infer xorder from empty rows")
            xorder = max(len(r) for r in rs) - 1
        _check_order(qorder, "qorder")
        _check_order(xorder, "xorder")
        del rs[qorder + 1:]
        rs.extend([] for _ in range(qorder + 1 - len(rs)))
        for r in rs:
            del r[xorder + 1:]
            r.extend([0] * (xorder + 1 - len(r)))
        self._rows = tuple(tuple(r) for r in rs)
        self._xorder = xorder

    @classmethod
    def _raw(cls, rows: Sequence[Sequence[int]], xorder: int) -> "XQSeries":
        self = object.__new__(cls)
        self._rows = tuple(tuple(r) for r in rows)
        self._xorder = xorder
        return self

    @classmethod
    def zero(cls, qorder: int, xorder: int) -> "XQSeries":
        _check_order(qorder, "qorder")
        _check_order(xorder, "xorder")
        return cls._raw([[0] * (xorder + 1) for _ in range(qorder + 1)], xorder)

    @classmethod
    def one(cls, qorder: int, xorder: int) -> "XQSeries":
        return cls.monomial(0, 0, 1, qorder, xorder)

    @classmethod
    def monomial(cls, xexp: int, qexp: int, coeff: int, qorder: int,
                 xorder: int) -> "XQSeries":
        """``coeff * x**xexp * q**qexp``, zero if outside the window."""
        if xexp < 0 or qexp < 0:
            raise ValueError("negative exponent")
        return cls.from_terms([(xexp, qexp, coeff)], qorder, xorder)

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, int, int]], qorder: int,
                   xorder: int) -> "XQSeries":
        """Build from ``(xexp, qexp, coeff)`` triples, dropping unrepresentable ones."""
        _check_order(qorder, "qorder")
        _check_order(xorder, "xorder")
        rows = [[0] * (xorder + 1) for _ in range(qorder + 1)]
        for a, b, c in terms:
            if a <= xorder and b <= qorder:
                rows[b][a] += c
        return cls._raw(rows, xorder)

    @classmethod
    def from_qseries(cls, s: QSeries, xorder: int) -> "XQSeries":
        _check_order(xorder, "xorder")
        pad = [0] * xorder
        return cls._raw([[c] + pad for c in s.coeffs], xorder)

    @property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        return self._rows

    @property
    def qorder(self) -> int:
        return len(self._rows) - 1

    @property
    def xorder(self) -> int:
        return self._xorder

    def coeff(self, xexp: int, qexp: int) -> int:
        if not (0 <= xexp <= self._xorder and 0 <= qexp <= self.qorder):
            raise IndexError(f"x^{xexp} q^{qexp} is outside the exact window")
        return self._rows[qexp][xexp]

    def terms(self) -> Iterator[Tuple[int, int, int]]:
        """Nonzero ``(xexp, qexp, coeff)`` triples ordered by ``(qexp, xexp)``."""
        for b, row in enumerate(self._rows):
            for a, c in enumerate(row):
                if c:
                    yield a, b, c

    def __eq__(self, other: object) -> bool:
        if isinstance(other, XQSeries):
            return self._xorder == other._xorder and self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._xorder, self._rows))

    def __repr__(self) -> str:
        return (f"XQSeries(qorder={self.qorder}, xorder={self._xorder}, "
                f"terms={list(self.terms())!r})")

    def __str__(self) -> str:
        from .formatting import format_xqseries

        return format_xqseries(self)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._rows)

    def valuation(self) -> Optional[int]:
        """Minimum total degree ``a + b`` over nonzero monomials."""
        best = None
        for a, b, _ in self.terms():
            if best is None or a + b < best:
                best = a + b
        return best

    def truncate(self, qorder: int, xorder: int) -> "XQSeries":
        if qorder > self.qorder or xorder > self._xorder:
            raise ValueError("truncation cannot raise the order")
        _check_order(qorder, "qorder")
        _check_order(xorder, "xorder")
        return XQSeries._raw([r[: xorder + 1] for r in self._rows[: qorder + 1]], xorder)

    def _common(self, other: "XQSeries") -> Tuple[int, int]:
        return min(self.qorder, other.qorder), min(self._xorder, other._xorder)

    def __neg__(self) -> "XQSeries":
        return XQSeries._raw([[-c for c in r] for r in self._rows], self._xorder)

    def _coerce(self, other):
        if isinstance(other, int):
            return XQSeries.monomial(0, 0, other, self.qorder, self._xorder)
        if isinstance(other, XQSeries):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        Q, X = self._common(other)
        return XQSeries._raw(
            [[u + v for u, v in zip(r1[: X + 1], r2[: X + 1])]
             for r1, r2 in zip(self._rows[: Q + 1], other._rows[: Q + 1])], X)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        Q, X = self._common(other)
        return XQSeries._raw(
            [[u - v for u, v in zip(r1[: X + 1], r2[: X + 1])]
             for r1, r2 in zip(self._rows[: Q + 1], other._rows[: Q + 1])], X)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return XQSeries._raw([[c * other for c in r] for r in self._rows], self._xorder)
        if not isinstance(other, XQSeries):
            return NotImplemented
        Q, X = self._common(other)
        t1 = [t for t in self.terms() if t[0] <= X and t[1] <= Q]
        t2 = [t for t in other.terms() if t[0] <= X and t[1] <= Q]
        if len(t1) > len(t2):
            t1, t2 = t2, t1
        out = [[0] * (X + 1) for _ in range(Q + 1)]
        for a1, b1, c1 in t1:
            for a2, b2, c2 in t2:
                a, b = a1 + a2, b1 + b2
                if a <= X and b <= Q:
                    out[b][a] += c1 * c2
        return XQSeries._raw(out, X)

    __rmul__ = __mul__

    def times_one_minus_monomial(self, xexp: int, qexp: int, coeff: int = 1) -> "XQSeries":
        """Multiply by ``1 - coeff * x**xexp * q**qexp`` in one pass."""
        if xexp == 0 and qexp == 0:
            return self * (1 - coeff)
        X = self._xorder
        out = [list(r) for r in self._rows]
        if xexp > X or qexp > self.qorder:
            return XQSeries._raw(out, X)
        # walk high-to-low so each source cell is read before it is updated
        for b in range(self.qorder, qexp - 1, -1):
            src, dst = out[b - qexp], out[b]
            for a in range(X, xexp - 1, -1):
                c = src[a - xexp]
                if c:
                    dst[a] -= coeff * c
        return XQSeries._raw(out, X)

    def inverse(self) -> "XQSeries":
        """Multiplicative inverse; the constant term must be +1 or -1."""
        u = self._rows[0][0]
        if u not in (1, -1):
            raise ZeroDivisionError(
                f"constant term {u} is not a unit; inverse would leave the integers")
        Q, X = self.qorder, self._xorder
        tail = [t for t in self.terms() if (t[0], t[1]) != (0, 0)]
        inv = [[0] * (X + 1) for _ in range(Q + 1)]
        for b in range(Q + 1):
            for a in range(X + 1):
                acc = 1 if (a, b) == (0, 0) else 0
                for i, j, c in tail:
                    if i <= a and j <= b:
                        acc -= c * inv[b - j][a - i]
                inv[b][a] = u * acc
        return XQSeries._raw(inv, X)

    def to_qseries(self) -> QSeries:
        """The ``x**0`` column as a univariate series."""
        return QSeries._raw([r[0] for r in self._rows])


def xq_pochhammer(shift: int, count: int, qorder: int, xorder: int) -> XQSeries:
    """``prod_{j=shift}^{shift+count-1} (1 - x q**j)`` with bigraded truncation.

    ``(x)_{r+1}`` is ``shift=0, count=r+1``; ``(xq)_m`` is ``shift=1, count=m``.
    """
    _check_order(shift, "shift")
    _check_order(count, "count")
    s = XQSeries.one(qorder, xorder)
    for j in range(shift, shift + count):
        if j > qorder:
            break
        s = s.times_one_minus_monomial(1, j)
    return s


def xq_diff_x(s: XQSeries) -> XQSeries:
    """Formal ``d/dx``: ``x**a q**b -> a x**(a-1) q**b``, xorder drops by one.

    A series with ``xorder == 0`` differentiates to the zero series with
    ``xorder == 0``.
    """
    if s.xorder == 0:
        return XQSeries.zero(s.qorder, 0)
    return XQSeries._raw([[a * r[a] for a in range(1, len(r))] for r in s.rows],
                         s.xorder - 1)


def xq_eval_x1(s: XQSeries) -> QSeries:
    """Specialise ``x = 1`` by summing each row.

    Only meaningful when the true series has x-degree at most ``s.xorder`` in
    every row; otherwise the result reflects the truncation, not the series.
    """
    return QSeries._raw([sum(r) for r in s.rows])


def xq_sub_x_to_qx(s: XQSeries) -> XQSeries:
    """Substitute ``x -> q x``: ``x**a q**b -> x**a q**(a+b)``."""
    Q, X = s.qorder, s.xorder
    out = [[0] * (X + 1) for _ in range(Q + 1)]
    for b, row in enumerate(s.rows):
        for a, c in enumerate(row):
            if c and a + b <= Q:
                out[a + b][a] = c
    return XQSeries._raw(out, X)


def first_mismatch(lhs, rhs) -> Optional[Tuple[int, int, int, int]]:
    """First differing monomial as ``(xexp, qexp, lhs_coeff, rhs_coeff)``.

    Works on two :class:`QSeries` (xexp is always 0) or two
    :class:`XQSeries`, over the common window, scanning by lowest q-exponent
    then lowest x-exponent.  Returns ``None`` when they agree.
    """
    if isinstance(lhs, QSeries) and isinstance(rhs, QSeries):
        for b, (u, v) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
            if u != v:
                return 0, b, u, v
        return None
    if isinstance(lhs, QSeries):
        lhs = XQSeries.from_qseries(lhs, 0)
    if isinstance(rhs, QSeries):
        rhs = XQSeries.from_qseries(rhs, 0)
    X = min(lhs.xorder, rhs.xorder)
    for b, (r1, r2) in enumerate(zip(lhs.rows, rhs.rows)):
        for a in range(X + 1):
            if r1[a] != r2[a]:
                return a, b, r1[a], r2[a]
    return None

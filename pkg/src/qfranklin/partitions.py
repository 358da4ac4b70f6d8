"""Partitions into distinct parts and Franklin's sign-reversing map.

A partition is stored largest part first, ``lam.parts[0] > lam.parts[1] > ...``.
For a nonempty partition we track

* ``N`` -- the weight (sum of parts),
* ``n`` -- the number of parts,
* ``m`` -- the largest part (0 for the empty partition),
* ``a`` -- the smallest part,
* ``b`` -- the length of the initial staircase run, i.e. the largest ``b``
  with ``parts[b-1] == parts[0] + 1 - b``.

Franklin's map moves the smallest part against that run.  It is undefined on
the empty partition and on the two staircase families
``(2r-1, ..., r)`` and ``(2r, ..., r+1)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

__all__ = [
    "Partition",
    "PartitionStats",
    "FranklinKind",
    "FranklinClass",
    "EmptyPartitionError",
    "ExceptionalPartitionError",
    "enumerate_distinct",
    "iter_distinct",
    "partition_stats",
    "classify_franklin",
    "franklin_map",
    "staircase",
]


class EmptyPartitionError(ValueError):
    """a or b requested for the empty partition."""


class ExceptionalPartitionError(ValueError):
    def __init__(self, partition: "Partition", cls: "FranklinClass"):
        super().__init__(f"Franklin's map is undefined on {partition}: {cls}")
        self.partition = partition
        self.franklin_class = cls


@dataclass(frozen=True, order=False)
class Partition:
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if isinstance(p, bool) or not isinstance(p, int) or p <= 0:
                raise ValueError(f"parts must be positive integers: {parts}")
            if i and parts[i - 1] <= p:
                raise ValueError(f"parts must be strictly decreasing: {parts}")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"

    @property
    def weight(self) -> int:
        return sum(self.parts)


class PartitionStats:
    """Statistics ``N, n, m, a, b`` of a partition.

    ``a`` and ``b`` raise :class:`EmptyPartitionError` for the empty partition.
    """

    __slots__ = ("N", "n", "m", "_a", "_b")

    def __init__(self, N: int, n: int, m: int, a: Optional[int], b: Optional[int]):
        self.N, self.n, self.m = N, n, m
        self._a, self._b = a, b

    @property
    def a(self) -> int:
        if self._a is None:
            raise EmptyPartitionError("the empty partition has no smallest part")
        return self._a

    @property
    def b(self) -> int:
        if self._b is None:
            raise EmptyPartitionError("the empty partition has no staircase run")
        return self._b

    def __eq__(self, other):
        if not isinstance(other, PartitionStats):
            return NotImplemented
        return (self.N, self.n, self.m, self._a, self._b) == (
            other.N, other.n, other.m, other._a, other._b)

    def __repr__(self) -> str:
        return (f"PartitionStats(N={self.N}, n={self.n}, m={self.m}, "
                f"a={self._a}, b={self._b})")


def _run_length(parts: Tuple[int, ...]) -> int:
    b = 1
    while b < len(parts) and parts[b] == parts[0] - b:
        b += 1
    return b


def partition_stats(lam: Partition) -> PartitionStats:
    parts = lam.parts
    if not parts:
        return PartitionStats(0, 0, 0, None, None)
    return PartitionStats(sum(parts), len(parts), parts[0], parts[-1], _run_length(parts))


class FranklinKind(enum.Enum):
    REGULAR = "regular"
    EXCEPTIONAL_EMPTY = "exceptional-empty"
    EXCEPTIONAL_FIRST = "exceptional-first"
    EXCEPTIONAL_SECOND = "exceptional-second"


@dataclass(frozen=True)
class FranklinClass:
    """Regular, or an exceptional partition tagged with its pentagonal index ``r``.

    ``EXCEPTIONAL_FIRST`` with index r is ``(2r-1, ..., r)`` of weight
    ``r(3r-1)/2``; ``EXCEPTIONAL_SECOND`` is ``(2r, ..., r+1)`` of weight
    ``r(3r+1)/2``.  The empty partition has ``r = None``.
    """

    kind: FranklinKind
    r: Optional[int] = None

    @property
    def is_exceptional(self) -> bool:
        return self.kind is not FranklinKind.REGULAR

    def __str__(self) -> str:
        return self.kind.value if self.r is None else f"{self.kind.value}(r={self.r})"


REGULAR = FranklinClass(FranklinKind.REGULAR)
EXCEPTIONAL_EMPTY = FranklinClass(FranklinKind.EXCEPTIONAL_EMPTY)


def classify_franklin(lam: Partition) -> FranklinClass:
    parts = lam.parts
    if not parts:
        return EXCEPTIONAL_EMPTY
    n, a, b = len(parts), parts[-1], _run_length(parts)
    if n == b:
        if a == b:
            return FranklinClass(FranklinKind.EXCEPTIONAL_FIRST, n)
        if a == b + 1:
            return FranklinClass(FranklinKind.EXCEPTIONAL_SECOND, n)
    return REGULAR


def franklin_map(lam: Partition) -> Partition:
    """Apply Franklin's map to a regular partition.

    If ``a <= b`` the smallest part is removed and 1 is added to each of the
    ``a`` largest remaining parts; otherwise 1 is taken from each of the
    ``b`` largest parts and a new smallest part ``b`` is appended.
    """
    cls = classify_franklin(lam)
    if cls.is_exceptional:
        raise ExceptionalPartitionError(lam, cls)
    parts = list(lam.parts)
    a, b = parts[-1], _run_length(lam.parts)
    if a <= b:
        parts.pop()
        for i in range(a):
            parts[i] += 1
    else:
        for i in range(b):
            parts[i] -= 1
        parts.append(b)
    return Partition(tuple(parts))


def staircase(cls: FranklinClass) -> Partition:
    """The explicit partition of an exceptional class."""
    if cls.kind is FranklinKind.EXCEPTIONAL_EMPTY:
        return Partition(())
    if cls.kind is FranklinKind.EXCEPTIONAL_FIRST:
        return Partition(tuple(range(2 * cls.r - 1, cls.r - 1, -1)))
    if cls.kind is FranklinKind.EXCEPTIONAL_SECOND:
        return Partition(tuple(range(2 * cls.r, cls.r, -1)))
    raise ValueError("regular partitions have no staircase form")


def _distinct(weight: int, cap: int, prefix: List[int]) -> Iterator[Tuple[int, ...]]:
    if weight == 0:
        yield tuple(prefix)
        return
    # parts below p sum to at most p(p-1)/2, so need p + p(p-1)/2 >= weight
    for p in range(min(weight, cap), 0, -1):
        if p * (p + 1) // 2 < weight:
            break
        prefix.append(p)
        yield from _distinct(weight - p, p - 1, prefix)
        prefix.pop()


def iter_distinct(weight: int) -> Iterator[Tuple[int, ...]]:
    """Part tuples of every distinct-part partition of ``weight``, canonical order."""
    if weight < 0:
        raise ValueError("weight must be nonnegative")
    return _distinct(weight, weight, [])


def enumerate_distinct(weight: int) -> List[Partition]:
    """All partitions of ``weight`` into distinct parts.

    Ordered lexicographically decreasing on the part sequence, so
    ``enumerate_distinct(6)`` is ``(6), (5,1), (4,2), (3,2,1)``.
    """
    return [Partition(p) for p in iter_distinct(weight)]

import pytest
from hypothesis import given, strategies as st

from qfranklin.partitions import (
    EmptyPartitionError,
    ExceptionalPartitionError,
    FranklinClass,
    FranklinKind,
    Partition,
    classify_franklin,
    enumerate_distinct,
    franklin_map,
    iter_distinct,
    partition_stats,
    staircase,
)

from oracles import distinct_partitions_bruteforce

P = lambda *parts: Partition(parts)


class TestPartition:
    def test_rejects_non_decreasing(self):
        with pytest.raises(ValueError):
            P(2, 2)
        with pytest.raises(ValueError):
            P(1, 3)
        with pytest.raises(ValueError):
            P(3, 0)

    def test_empty_is_valid(self):
        assert P().weight == 0


class TestEnumeration:
    def test_weight_zero(self):
        assert enumerate_distinct(0) == [P()]

    def test_weight_three(self):
        assert enumerate_distinct(3) == [P(3), P(2, 1)]

    def test_weight_six_order(self):
        assert enumerate_distinct(6) == [P(6), P(5, 1), P(4, 2), P(3, 2, 1)]

    def test_count_ten(self):
        assert len(distinct_partitions_bruteforce(10)) == 10
        assert len(enumerate_distinct(10)) == 10

    @pytest.mark.parametrize("W", range(0, 21))
    def test_matches_subset_oracle(self, W):
        got = list(iter_distinct(W))
        assert sorted(got) == sorted(distinct_partitions_bruteforce(W))
        assert len(set(got)) == len(got)
        assert got == sorted(got, reverse=True)

    def test_negative_weight(self):
        with pytest.raises(ValueError):
            enumerate_distinct(-1)


class TestStats:
    def test_run_of_three(self):
        st_ = partition_stats(P(7, 6, 5, 2))
        assert (st_.N, st_.n, st_.m, st_.a, st_.b) == (20, 4, 7, 2, 3)

    def test_run_of_one(self):
        st_ = partition_stats(P(5, 3))
        assert (st_.N, st_.n, st_.m, st_.a, st_.b) == (8, 2, 5, 3, 1)

    def test_empty(self):
        st_ = partition_stats(P())
        assert (st_.N, st_.n, st_.m) == (0, 0, 0)
        with pytest.raises(EmptyPartitionError):
            st_.a
        with pytest.raises(EmptyPartitionError):
            st_.b


class TestClassify:
    def test_r1(self):
        assert classify_franklin(P(1)) == FranklinClass(FranklinKind.EXCEPTIONAL_FIRST, 1)
        assert classify_franklin(P(2)) == FranklinClass(FranklinKind.EXCEPTIONAL_SECOND, 1)

    def test_r2_first(self):
        assert classify_franklin(P(3, 2)) == FranklinClass(FranklinKind.EXCEPTIONAL_FIRST, 2)

    def test_regular(self):
        assert classify_franklin(P(2, 1)).kind is FranklinKind.REGULAR

    def test_empty(self):
        assert classify_franklin(P()).kind is FranklinKind.EXCEPTIONAL_EMPTY

    @pytest.mark.parametrize("r", range(1, 8))
    def test_staircases(self, r):
        first = FranklinClass(FranklinKind.EXCEPTIONAL_FIRST, r)
        second = FranklinClass(FranklinKind.EXCEPTIONAL_SECOND, r)
        lam1, lam2 = staircase(first), staircase(second)
        assert classify_franklin(lam1) == first and classify_franklin(lam2) == second
        s1, s2 = partition_stats(lam1), partition_stats(lam2)
        assert (s1.N, s1.m, s1.n) == (r * (3 * r - 1) // 2, 2 * r - 1, r)
        assert (s2.N, s2.m, s2.n) == (r * (3 * r + 1) // 2, 2 * r, r)


class TestFranklinMap:
    def test_remove_smallest(self):
        assert franklin_map(P(2, 1)) == P(3)

    def test_append_run(self):
        assert franklin_map(P(5, 3)) == P(4, 3, 1)

    def test_inverse_pair(self):
        assert franklin_map(P(4, 3, 1)) == P(5, 3)

    def test_exceptional_raises(self):
        with pytest.raises(ExceptionalPartitionError) as info:
            franklin_map(P(3, 2))
        assert info.value.franklin_class.kind is FranklinKind.EXCEPTIONAL_FIRST
        with pytest.raises(ExceptionalPartitionError):
            franklin_map(P())


def _regular(max_weight):
    for W in range(max_weight + 1):
        for lam in enumerate_distinct(W):
            if not classify_franklin(lam).is_exceptional:
                yield lam


def test_involution_properties_to_45():
    count = 0
    for lam in _regular(45):
        img = franklin_map(lam)
        s0, s1 = partition_stats(lam), partition_stats(img)
        assert not classify_franklin(img).is_exceptional
        assert franklin_map(img) == lam
        assert s1.N == s0.N
        assert abs(s1.n - s0.n) == 1
        assert s1.m + s1.n == s0.m + s0.n
        assert abs(s1.m - s0.m) == 1
        assert all(x > y for x, y in zip(img.parts, img.parts[1:]))
        count += 1
    assert count > 0


def test_exceptional_census_to_60():
    pentagonal = {}
    r = 1
    while r * (3 * r - 1) // 2 <= 60:
        pentagonal[r * (3 * r - 1) // 2] = (r, FranklinKind.EXCEPTIONAL_FIRST)
        pentagonal[r * (3 * r + 1) // 2] = (r, FranklinKind.EXCEPTIONAL_SECOND)
        r += 1
    for W in range(1, 61):
        exc = [lam for lam in enumerate_distinct(W) if classify_franklin(lam).is_exceptional]
        signed = sum((-1) ** len(lam) for lam in enumerate_distinct(W))
        if W in pentagonal:
            r, kind = pentagonal[W]
            assert len(exc) == 1
            assert classify_franklin(exc[0]) == FranklinClass(kind, r)
            assert len(exc[0]) == r
            assert signed == (-1) ** r
        else:
            assert exc == []
            assert signed == 0


@given(st.sets(st.integers(1, 40), min_size=1, max_size=9))
def test_map_on_random_partitions(parts):
    lam = Partition(tuple(sorted(parts, reverse=True)))
    if classify_franklin(lam).is_exceptional:
        return
    img = franklin_map(lam)
    assert img.weight == lam.weight
    assert franklin_map(img) == lam

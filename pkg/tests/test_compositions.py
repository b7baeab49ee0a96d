from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ribbonpoly.compositions import (
    CapExceeded,
    count_by_enumeration,
    count_odd,
    count_residue,
    enumerate_compositions,
    indicator,
)


@pytest.mark.parametrize("kind,q,expected", [
    ("parity", 4, 0), ("parity", 7, 1),
    ("mod3", 2, 1), ("mod3", 3, 0), ("mod3", 5, 1),
    ("mod4", 3, 1), ("mod4", 7, 1), ("mod4", 4, 0),
])
def test_indicator(kind, q, expected):
    assert indicator(kind, q) == expected


def test_indicator_rejects():
    with pytest.raises(ValueError):
        indicator("mod5", 1)
    with pytest.raises(ValueError):
        indicator("parity", -1)


def test_enumerate_small():
    assert enumerate_compositions(3, 2) == [(1, 2), (2, 1)]
    assert enumerate_compositions(2, 3) == []
    assert enumerate_compositions(0, 0) == [()]
    with pytest.raises(CapExceeded):
        enumerate_compositions(26, 2)


@pytest.mark.parametrize("n", range(1, 19))
def test_enumeration_size(n):
    for P in range(1, n + 1):
        comps = enumerate_compositions(n, P)
        assert len(comps) == comb(n - 1, P - 1)
        assert comps == sorted(comps)
        assert all(sum(c) == n and min(c) >= 1 for c in comps)


def test_count_odd_examples():
    # oracle values from direct enumeration: (1,3),(3,1) and (1,4),(4,1),(2,3),(3,2)
    assert count_by_enumeration(4, 2, 2) == 2
    assert count_odd(4, 2, 2) == 2
    assert count_odd(4, 2, 1) == 0
    assert count_by_enumeration(5, 2, 1) == 4
    assert count_odd(5, 2, 1) == 4


def test_count_residue_examples():
    assert count_by_enumeration(5, 2, 1, 3, 2) == 2
    assert count_residue(5, 2, 1, 3, 2) == 2
    assert count_by_enumeration(2, 1, 1, 3, 2) == 1
    assert count_residue(2, 1, 1, 3, 2) == 1


def test_count_residue_domain():
    with pytest.raises(ValueError):
        count_residue(5, 2, 1, 3, 3)
    with pytest.raises(ValueError):
        count_residue(5, 2, 1, 1, 0)


def test_count_odd_against_oracle():
    for n in range(0, 16):
        for P in range(0, n + 1):
            for I in range(0, P + 1):
                assert count_odd(n, P, I) == count_by_enumeration(n, P, I), (n, P, I)


def test_odd_counts_sum_to_binomial():
    for n in range(1, 31):
        for P in range(1, n + 1):
            assert sum(count_odd(n, P, I) for I in range(P + 1)) == comb(n - 1, P - 1)


def test_residue_counts_sum_to_binomial():
    for D in range(2, 6):
        for d in range(1, D):
            for n in range(1, 21):
                for P in range(1, n + 1):
                    total = sum(count_residue(n, P, I, D, d) for I in range(P + 1))
                    assert total == comb(n - 1, P - 1), (n, P, D, d)


@given(st.integers(0, 40), st.integers(0, 12), st.integers(0, 12))
def test_residue_reduces_to_odd(n, P, I):
    assert count_residue(n, P, I, 2, 1) == count_odd(n, P, I)


def test_big_counts_are_exact():
    # beyond 64-bit range
    assert count_odd(200, 60, 20) > 2**64
    assert count_odd(200, 60, 20) == comb(109, 59) * comb(60, 20)

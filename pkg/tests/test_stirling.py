import itertools
import math
from fractions import Fraction as F

import pytest

from invseries import ConsistencyError, UsageError
from invseries.powerseries import Series, named_series
from invseries.stirling import (
    StirlingTable,
    egf_shift_identity,
    egf_triangle_entry,
    egf_triangle_shift,
    stirling_all_routes,
    stirling_partition_formula,
    stirling_recurrence,
    stirling_shift,
    stirling_via_gf,
    surjection_partition_sum,
    surjection_sum,
)


def brute_set_partitions(n, k):
    """Count surjections onto k labelled blocks, divided by k!."""
    return sum(1 for f in itertools.product(range(k), repeat=n) if len(set(f)) == k) // math.factorial(k)


def brute_cycles(n, k):
    count = 0
    for perm in itertools.permutations(range(n)):
        seen, cycles = set(), 0
        for i in range(n):
            if i not in seen:
                cycles += 1
                while i not in seen:
                    seen.add(i)
                    i = perm[i]
        count += cycles == k
    return count


@pytest.mark.parametrize("n", range(1, 7))
def test_recurrence_against_brute_force(n):
    for k in range(1, n + 1):
        assert stirling_recurrence(2, n, k) == brute_set_partitions(n, k)
        assert stirling_recurrence(1, n, k) == brute_cycles(n, k)


def test_recurrence_frozen_values():
    assert stirling_recurrence("second", 4, 2) == 7
    assert stirling_recurrence("first_unsigned", 4, 2) == 11
    assert stirling_recurrence(2, 9, 9) == stirling_recurrence(1, 9, 9) == 1
    assert stirling_recurrence(2, 5, 0) == 0
    assert stirling_recurrence(2, 0, 0) == 1
    with pytest.raises(UsageError):
        stirling_recurrence(2, 3, 4)
    with pytest.raises(UsageError):
        stirling_recurrence(3, 3, 1)


def test_first_kind_matches_falling_factorial_expansion():
    # x(x-1)...(x-n+1) = sum (-1)^(n-k) s(n,k) x^k
    for n in range(1, 10):
        poly = [1]
        for j in range(n):
            # multiply by (x - j)
            poly = [(-j) * a + (poly[i - 1] if i else 0) for i, a in enumerate(poly + [0])]
        for k in range(n + 1):
            assert poly[k] == (-1) ** (n - k) * stirling_recurrence(1, n, k)


def test_table_invariants():
    t = StirlingTable(2)
    t.extend_to(12)
    for n, row in enumerate(t.rows):
        assert len(row) == n + 1
        assert row[n] == 1
        assert n == 0 or row[0] == 0
        assert all(v >= 0 for v in row)


def test_gf_examples():
    assert stirling_via_gf(2, 5, 2) == 15
    assert stirling_via_gf(1, 3, 1) == 2
    assert stirling_via_gf(1, 6, 6) == stirling_via_gf(2, 6, 6) == 1


def test_partition_formula_examples():
    for m in range(1, 10):
        assert stirling_partition_formula(2, 1, m) == math.comb(m + 1, 2)
    assert stirling_partition_formula(2, 1, 4) == 10 == stirling_recurrence(2, 5, 4)
    assert stirling_partition_formula(2, 3, 2) == 15
    assert stirling_partition_formula(1, 2, 2) == 11


def test_shift_examples():
    assert stirling_shift(2, 3, 2) == 25 == stirling_recurrence(2, 5, 3)
    assert stirling_shift(1, 1, 1) == 1
    assert stirling_shift(2, 2, 3) == 15


@pytest.mark.parametrize("kind", [1, 2])
def test_four_routes_agree(kind):
    for n in range(1, 15):
        for k in range(1, n + 1):
            routes = stirling_all_routes(kind, n, k)
            assert len(set(routes.values())) == 1, routes
            assert ("shift" in routes) == (k < n)


def test_integrality_is_enforced(monkeypatch):
    import invseries.stirling as st

    monkeypatch.setattr(st.math, "factorial", lambda k: 7 if k == 0 else math.prod(range(1, k + 1)))
    with pytest.raises(ConsistencyError):
        stirling_partition_formula(2, 1, 1)


@pytest.mark.parametrize("m", range(1, 31))
def test_closed_forms_n_plus_3(m):
    assert stirling_recurrence(2, m + 3, m) == math.comb(m + 1, 2) * math.comb(m + 3, 4)
    assert stirling_recurrence(1, m + 3, m) == math.comb(m + 3, 2) * math.comb(m + 3, 4)


class TestEgfTriangle:
    def test_lah(self):
        a = named_series("geom", 12)
        assert egf_triangle_entry(a, 3, 2) == 6
        for n in range(1, 7):
            for m in range(1, n + 1):
                lah = F(math.factorial(n), math.factorial(m)) * math.comb(n - 1, m - 1)
                assert egf_triangle_entry(a, n, m) == lah

    def test_shift_identity_lah(self):
        a = named_series("geom", 24)
        for n in range(1, 13):
            for k in range(1, 13):
                assert egf_triangle_shift(a, n, k) == egf_shift_identity(a, n, k)

    def test_exp_minus_1_gives_second_kind(self):
        a = named_series("exp_minus_1", 10)
        for n in range(1, 11):
            for m in range(1, n + 1):
                assert egf_triangle_entry(a, n, m) == stirling_recurrence(2, n, m)

    def test_log1p_gives_signed_first_kind(self):
        a = named_series("log1p", 10)
        for n in range(1, 11):
            for m in range(1, n + 1):
                assert egf_triangle_entry(a, n, m) == (-1) ** (n - m) * stirling_recurrence(1, n, m)

    def test_identity_base(self):
        x = Series.x(6)
        for n in range(1, 7):
            for m in range(1, 7):
                assert egf_triangle_entry(x, n, m) == (n == m)

    def test_order_too_small(self):
        with pytest.raises(UsageError):
            egf_triangle_shift(named_series("geom", 4), 3, 2)
        with pytest.raises(UsageError):
            egf_triangle_entry(Series([0, 2, 1]), 2, 1)


def test_surjections():
    assert surjection_sum(2, 1) == 6
    assert surjection_sum(3, 1) == 36
    for n in range(1, 8):
        assert surjection_sum(1, n) == 1
    for m in range(1, 9):
        for n in range(1, 9):
            want = math.factorial(m) * stirling_recurrence(2, n + m, m)
            assert surjection_sum(m, n) == want == surjection_partition_sum(m, n)

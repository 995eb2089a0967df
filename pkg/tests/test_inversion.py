import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from invseries import ConsistencyError, DomainError, UsageError
from invseries.inversion import (
    Sequence,
    binomial_kernel,
    build_kernel,
    inverse_pair_transform,
    involution_k,
    orthogonality_sums,
    pair_coeffs_to_series,
    self_inverse_complete,
    sequence_from_json,
    sequence_to_json,
    series_to_pair_coeffs,
    theorem41_coefficient,
    transform_apply,
)
from invseries.powerseries import Series, named_series, series_compose, series_reverse_full

from .conftest import nonzero_q, small_q

T_VALUES = [F(1), F(2), F(1, 2), F(-1, 3)]


class TestKernel:
    def test_binomial_t1(self):
        k = build_kernel(named_series("binomial_t", 5, 1), 6, "forward")
        assert k[2, 1] == 1
        assert k[3, 1] == 0
        for n in range(1, 7):
            for m in range(1, n + 1):
                assert k[n, m] == math.comb(m, n - m)

    def test_exponential_closed_forms(self):
        N = 8
        f = named_series("exp", N - 1)
        fwd, inv = build_kernel(f, N, "fwd"), build_kernel(f, N, "inv")
        for n in range(1, N + 1):
            for m in range(1, n + 1):
                assert fwd[n, m] == F(m ** (n - m), math.factorial(n - m))
                assert inv[n, m] == F((-n) ** (n - m), math.factorial(n - m))

    @pytest.mark.parametrize("f", [Series([3, 1, 2]), Series([F(-1, 2), 0, 5])])
    def test_diagonal(self, f):
        N = 3
        c0 = f[0]
        fwd, inv = build_kernel(f, N, "forward"), build_kernel(f, N, "inverse")
        for n in range(1, N + 1):
            assert fwd[n, n] == c0**n
            assert inv[n, n] == c0 ** (-n)
            assert fwd[1, 2] == 0

    @pytest.mark.parametrize("t", T_VALUES)
    @pytest.mark.parametrize("direction", ["forward", "inverse"])
    def test_closed_form_binomial_matches_series(self, t, direction):
        N = 10
        by_series = build_kernel(named_series("binomial_t", N - 1, t), N, direction)
        assert binomial_kernel(t, N, direction).rows == by_series.rows

    def test_errors(self):
        with pytest.raises(DomainError):
            build_kernel(Series([0, 1, 1]), 3, "forward")
        with pytest.raises(UsageError):
            build_kernel(Series([1, 1]), 4, "forward")
        with pytest.raises(UsageError):
            build_kernel(Series([1, 1]), 2, "sideways")


class TestTransform:
    def test_t_zero_scales_by_n(self):
        b = Sequence(1, [1, 2, 3])
        fwd = binomial_kernel(0, 3, "forward")
        assert transform_apply(fwd, b).values == (1, 4, 9)
        assert transform_apply(binomial_kernel(0, 3, "inverse"), Sequence(1, [1, 4, 9])) == b

    def test_unit_sequence_under_t1(self):
        b = Sequence(1, [1, 0, 0, 0, 0])
        a = transform_apply(binomial_kernel(1, 5, "forward"), b)
        assert a.values == (1, 2, 0, 0, 0)

    def test_exponential_rescaled_pair(self):
        # a_n = sum binom(n,m) m^(n-m) b_m  <=>  b_n = sum binom(n-1,m-1) (-n)^(n-m) a_m
        N = 7
        f = named_series("exp", N - 1)
        fwd, inv = build_kernel(f, N, "fwd"), build_kernel(f, N, "inv")
        b = [F(1), F(1), F(-2), F(1, 3), F(5), F(0), F(7, 2)]
        # kernel-level sequences: A_n = a_n/(n-1)!, B_n = b_n/n!
        B = Sequence(1, [b[n - 1] / math.factorial(n) for n in range(1, N + 1)])
        A = transform_apply(fwd, B)
        a = [A[n] * math.factorial(n - 1) for n in range(1, N + 1)]
        direct = [
            sum(math.comb(n, m) * m ** (n - m) * b[m - 1] for m in range(1, n + 1)) for n in range(1, N + 1)
        ]
        assert a == direct
        assert a[:2] == [1, 3]
        back = [
            sum(math.comb(n - 1, m - 1) * (-n) ** (n - m) * a[m - 1] for m in range(1, n + 1))
            for n in range(1, N + 1)
        ]
        assert back == b
        B_again = transform_apply(inv, A)
        assert [B_again[n] * math.factorial(n) for n in range(1, N + 1)] == b

    def test_length_is_min(self):
        k = binomial_kernel(1, 3, "forward")
        assert len(transform_apply(k, Sequence(1, [1, 1, 1, 1, 1]))) == 3
        assert len(transform_apply(k, Sequence(1, [1, 1]))) == 2

    def test_offset_mismatch(self):
        with pytest.raises(UsageError):
            transform_apply(binomial_kernel(1, 3, "forward"), Sequence(0, [1, 2, 3]))

    @settings(max_examples=25)
    @given(
        st.sampled_from(
            [named_series("binomial_t", 11, t) for t in T_VALUES]
            + [named_series("exp", 11), Series([1, 1, 1], 11), Series([2, 1], 11)]
        ),
        st.lists(small_q, min_size=12, max_size=12),
    )
    def test_round_trip(self, f, values):
        N = 12
        fwd, inv = build_kernel(f, N, "forward"), build_kernel(f, N, "inverse")
        s = Sequence(1, values)
        assert transform_apply(inv, transform_apply(fwd, s)) == s
        assert transform_apply(fwd, transform_apply(inv, s)) == s

    def test_json(self):
        s = Sequence(1, [1, F(-2, 3)])
        assert sequence_to_json(s) == {"offset": 1, "values": ["1", "-2/3"]}
        assert sequence_from_json({"offset": 1, "values": ["1", "-2/3"]}) == s
        with pytest.raises(UsageError):
            sequence_from_json({"offset": 2, "values": []})
        with pytest.raises(UsageError):
            sequence_from_json({"offset": 0, "values": ["1.5"]})


class TestInvolution:
    def test_k1(self):
        s = Sequence(0, [0, 0, 1])
        t = involution_k(1, s)
        assert t.values == (1, -2, 1)
        assert involution_k(1, t) == s

    def test_k2(self):
        s = Sequence(0, [0, 0, 1])
        t = involution_k(2, s)
        assert t.values == (1, 0, -1)
        assert involution_k(2, t) == s

    def test_zero(self):
        assert involution_k(3, Sequence(0, [0] * 7)) == Sequence(0, [0] * 7)

    def test_off_support_rejected(self):
        with pytest.raises(DomainError, match="multiples of k"):
            involution_k(2, Sequence(0, [0, 1, 0]))
        with pytest.raises(UsageError):
            involution_k(1, Sequence(1, [1]))

    @settings(max_examples=30)
    @given(st.integers(1, 3), st.lists(small_q, min_size=0, max_size=30))
    def test_double_application(self, k, values):
        vals = [v if i % k == 0 else F(0) for i, v in enumerate(values)]
        s = Sequence(0, vals)
        assert involution_k(k, involution_k(k, s)) == s


class TestOrthogonality:
    def test_examples(self):
        assert orthogonality_sums(named_series("binomial_t", 2, 1), 1, 2) == (0, 0)
        assert orthogonality_sums(named_series("exp", 2), 1, 2) == (0, 0)

    @pytest.mark.parametrize("n", [1, 4, 9])
    def test_diagonal(self, n):
        f = Series([3, 1, -2], max(n, 2))
        assert orthogonality_sums(f, n, n) == (F(1, n), F(n))

    @settings(max_examples=20)
    @given(st.lists(small_q, min_size=8, max_size=8), nonzero_q, st.data())
    def test_vanish_below_diagonal(self, tail, c0, data):
        f = Series([c0] + tail)
        n = data.draw(st.integers(2, 8))
        k = data.draw(st.integers(1, n - 1))
        assert orthogonality_sums(f, k, n) == (0, 0)


class TestReversionPowerFormula:
    def test_examples(self):
        assert theorem41_coefficient(named_series("geom", 3), 1, 1) == -1
        assert theorem41_coefficient(named_series("catalan_beta", 4), 1, 2) == 5
        assert theorem41_coefficient(named_series("sin", 5), 1, 4) == F(3, 40)

    @settings(max_examples=20)
    @given(st.lists(small_q, min_size=6, max_size=6), nonzero_q, st.integers(1, 4), st.integers(1, 3))
    def test_matches_full_reversion(self, tail, b0, m, n):
        beta = Series([0, b0] + tail)
        inv = series_reverse_full(beta.truncate(m + n))
        power = Series.one(m + n)
        for _ in range(m):
            power = power * inv
        assert theorem41_coefficient(beta, m, n) == power[m + n]

    def test_errors(self):
        with pytest.raises(DomainError):
            theorem41_coefficient(Series([0, 0, 1, 1]), 1, 1)
        with pytest.raises(UsageError):
            theorem41_coefficient(named_series("sin", 3), 1, 3)


class TestInversePair:
    def test_self_inverse_function(self):
        assert inverse_pair_transform([1, -1, 1, -1], 4) == [1, -1, 1, -1]

    def test_minus_x(self):
        assert inverse_pair_transform([0, 0, 0], 3) == [0, 0, 0]

    def test_minus_x_plus_x_squared(self):
        # hand reversion of -x + x^2: beta = -x + x^2 - 2x^3 + 5x^4
        beta = inverse_pair_transform([1, 0, 0, 0], 4)
        assert beta == [1, -2, 5, -14]
        rev = series_reverse_full(Series([0, -1, 1], 5))
        assert series_to_pair_coeffs(rev) == beta

    def test_boundary_conversion(self):
        s = pair_coeffs_to_series([F(1, 2), 3])
        assert s == Series([0, -1, F(1, 2), 3])
        assert series_to_pair_coeffs(s) == [F(1, 2), 3]
        with pytest.raises(DomainError):
            series_to_pair_coeffs(Series([0, 1, 1]))

    @settings(max_examples=25)
    @given(st.lists(small_q, min_size=1, max_size=10))
    def test_involutive_and_matches_reversion(self, coeffs):
        N = len(coeffs)
        once = inverse_pair_transform(coeffs, N)
        assert inverse_pair_transform(once, N) == coeffs
        rev = series_reverse_full(pair_coeffs_to_series(coeffs))
        assert series_to_pair_coeffs(rev) == once


def eq43(a1, a3, a5, a7):
    return [
        -(a1**2),
        2 * a1**4 - 3 * a1 * a3,
        -13 * a1**6 - 4 * a1 * a5 - 2 * a3**2 + 18 * a1**3 * a3,
        145 * a1**8 - 221 * a1**5 * a3 + 50 * a1**2 * a3**2 + 35 * a1**3 * a5 - 5 * a3 * a5 - 5 * a1 * a7,
    ]


class TestSelfInverse:
    def test_low_order_closed_forms(self):
        a, b = F(2, 3), F(-5, 7)
        c = self_inverse_complete([a, b], 4).coeffs
        assert c[1] == -(a**2)
        assert c[3] == 2 * a**4 - 3 * a * b

    def test_zero(self):
        assert self_inverse_complete([0, 0, 0], 6).coeffs == (0,) * 6

    def test_minus_x_over_one_plus_x(self):
        done = self_inverse_complete([1, 1], 4)
        assert done.coeffs == (1, -1, 1, -1)
        assert str(done) == "1,-1,1,-1"

    def test_mobius(self):
        # rx/(tx - r) = -x - c x^2 - c^2 x^3 - ...,  c = t/r
        c = F(3, 4)
        full = [-(c**j) for j in range(1, 10)]
        assert list(self_inverse_complete(full[::2], 9).coeffs) == full

    def test_wrong_length(self):
        with pytest.raises(UsageError):
            self_inverse_complete([1], 4)

    @settings(max_examples=25)
    @given(st.lists(small_q, min_size=4, max_size=5))
    def test_composes_to_identity_and_matches_closed_forms(self, odd):
        N = 2 * len(odd)
        done = self_inverse_complete(odd, N)
        alpha = done.to_series()
        assert series_compose(alpha, alpha) == Series.x(N + 1)
        c = done.coeffs
        assert [c[1], c[3], c[5], c[7]] == eq43(*odd[:4])

    def test_guard_catches_bad_pair_sum(self, monkeypatch):
        import invseries.inversion as inv

        real = inv._pair_sum
        monkeypatch.setattr(inv, "_pair_sum", lambda a, n, skip_top=False: real(a, n, skip_top) + (n == 3))
        with pytest.raises(ConsistencyError):
            self_inverse_complete([1, 1], 4)

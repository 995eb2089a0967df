"""Sequence inversion pairs and reversion-coefficient formulas.

Kernels
    For ``f = c0 + c1 x + ...`` with ``c0 != 0`` the pair

        a_n = n   * sum_{m<=n} [x^(n-m)] f^m    * b_m
        b_n = 1/n * sum_{m<=n} [x^(n-m)] f^(-n) * a_m

    are mutually inverse.  :func:`build_kernel` materializes either
    triangle and :func:`transform_apply` runs it over a sequence.

Series in "pair" indexing
    :func:`inverse_pair_transform` and :func:`self_inverse_complete` take
    ``alpha(x) = -x + a1 x^2 + a2 x^3 + ...`` as the list ``(a1, a2, ...)``;
    ``aj`` multiplies ``x^(j+1)``.  :func:`pair_coeffs_to_series` and
    :func:`series_to_pair_coeffs` convert at the boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Sequence as Seq

from ._arith import RationalLike, binom, format_rational, parse_rational
from .errors import ConsistencyError, DomainError, UsageError
from .partitions import enumerate_multiplicity_vectors
from .powerseries import Series, named_series, series_pow

__all__ = [
    "Sequence",
    "TransformKernel",
    "SelfInverseSeries",
    "build_kernel",
    "binomial_kernel",
    "transform_apply",
    "involution_k",
    "orthogonality_sums",
    "theorem41_coefficient",
    "inverse_pair_transform",
    "self_inverse_complete",
    "pair_coeffs_to_series",
    "series_to_pair_coeffs",
    "sequence_to_json",
    "sequence_from_json",
]

Direction = Literal["forward", "inverse"]


@dataclass(frozen=True)
class Sequence:
    """Finite sequence whose first value sits at index ``offset`` (0 or 1)."""

    offset: int
    values: tuple[Fraction, ...]

    def __init__(self, offset: int, values: Iterable[RationalLike]):
        if offset not in (0, 1):
            raise UsageError(f"offset must be 0 or 1, got {offset}")
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "values", tuple(Fraction(v) for v in values))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> Fraction:
        """Term at index ``n`` (not list position)."""
        return self.values[n - self.offset]


@dataclass(frozen=True)
class TransformKernel:
    """Lower-triangular K[n][m], 1 <= m <= n <= size; ``rows[n-1][m-1]`` holds K[n][m]."""

    size: int
    direction: Direction
    rows: tuple[tuple[Fraction, ...], ...]
    descriptor: str = ""

    def __getitem__(self, nm: tuple[int, int]) -> Fraction:
        n, m = nm
        if not 1 <= n <= self.size or m < 1:
            raise IndexError(nm)
        if m > n:
            return Fraction(0)
        return self.rows[n - 1][m - 1]


def _check_direction(direction: str) -> Direction:
    aliases = {"forward": "forward", "fwd": "forward", "inverse": "inverse", "inv": "inverse"}
    try:
        return aliases[direction]  # type: ignore[return-value]
    except KeyError:
        raise UsageError(f"direction must be forward/fwd or inverse/inv, got {direction!r}") from None


def build_kernel(f: Series, N: int, direction: str, descriptor: str = "") -> TransformKernel:
    """Kernel of size ``N`` for ``f``: forward [x^(n-m)] f^m, inverse [x^(n-m)] f^(-n).

    Only integer powers of ``f`` are taken, so any nonzero rational ``c0``
    works; a rational-``t`` binomial kernel comes from passing
    ``named_series("binomial_t", N - 1, t)`` which has ``c0 = 1``.
    """
    direction = _check_direction(direction)
    if N < 1:
        raise UsageError("kernel size must be >= 1")
    if f.coeffs[0] == 0:
        raise DomainError("kernel needs f(0) != 0")
    if f.order < N - 1:
        raise UsageError(f"series order {f.order} < N - 1 = {N - 1}")
    f = f.truncate(N - 1)
    rows: list[list[Fraction]] = [[Fraction(0)] * n for n in range(1, N + 1)]
    if direction == "forward":
        for m in range(1, N + 1):
            p = series_pow(f, m).coeffs
            for n in range(m, N + 1):
                rows[n - 1][m - 1] = p[n - m]
    else:
        for n in range(1, N + 1):
            p = series_pow(f.truncate(n - 1), -n).coeffs
            for m in range(1, n + 1):
                rows[n - 1][m - 1] = p[n - m]
    return TransformKernel(N, direction, tuple(tuple(r) for r in rows), descriptor)


def binomial_kernel(t: RationalLike, N: int, direction: str) -> TransformKernel:
    """The f = (1+x)^t kernel from its closed-form entries.

    forward K[n][m] = binom(m t, n - m); inverse K[n][m] = binom(-n t, n - m).
    """
    direction = _check_direction(direction)
    t = parse_rational(t)
    if direction == "forward":
        rows = [tuple(binom(m * t, n - m) for m in range(1, n + 1)) for n in range(1, N + 1)]
    else:
        rows = [tuple(binom(-n * t, n - m) for m in range(1, n + 1)) for n in range(1, N + 1)]
    return TransformKernel(N, direction, tuple(rows), f"binomial t={format_rational(t)}")


def transform_apply(kernel: TransformKernel, s: Sequence) -> Sequence:
    """Apply one direction of the pair; output length is min(kernel.size, len(s))."""
    if s.offset != 1:
        raise UsageError("transforms act on sequences indexed from 1")
    L = min(kernel.size, len(s))
    v = s.values
    out = []
    for n in range(1, L + 1):
        row = kernel.rows[n - 1]
        acc = sum((row[m - 1] * v[m - 1] for m in range(1, n + 1)), Fraction(0))
        out.append(acc * n if kernel.direction == "forward" else acc / n)
    return Sequence(1, out)


def _involution_coefficient(k: int, n: int, m: int) -> Fraction:
    if n % k:
        return Fraction(0)
    q = n // k
    return (-1) ** q * binom(Fraction(m, k), q)


def involution_k(k: int, s: Sequence) -> Sequence:
    """t_n = sum_m c_k(n, m) s_m with c_k(n, m) = (-1)^(n/k) binom(m/k, n/k) when k | n.

    Defined only for sequences supported on multiples of ``k``; elsewhere the
    sum over m would not terminate.  Applying it twice is the identity.
    """
    if k < 1:
        raise UsageError("k must be a positive integer")
    if s.offset != 0:
        raise UsageError("the involution acts on sequences indexed from 0")
    bad = [m for m, v in enumerate(s.values) if v and m % k]
    if bad:
        raise DomainError(
            f"sequence has nonzero terms at indices {bad[:5]} not divisible by k={k}; "
            "the transform is only a finite sum on sequences supported on multiples of k"
        )
    L = len(s)
    support = [(m, v) for m, v in enumerate(s.values) if v]
    out = []
    for n in range(L):
        if n % k:
            out.append(Fraction(0))
            continue
        out.append(sum((_involution_coefficient(k, n, m) * v for m, v in support), Fraction(0)))
    return Sequence(0, out)


def orthogonality_sums(f: Series, k: int, n: int) -> tuple[Fraction, Fraction]:
    """The two sums over m = k..n

        sum 1/m [x^(n-m)] f^m [x^(m-k)] f^(-m)
        sum m   [x^(m-k)] f^k [x^(n-m)] f^(-n)

    Both vanish for k < n and equal (1/n, n) at k = n.
    """
    if f.coeffs[0] == 0:
        raise DomainError("needs f(0) != 0")
    if not 1 <= k <= n <= f.order:
        raise UsageError(f"need 1 <= k <= n <= {f.order}, got k={k}, n={n}")
    g = f.truncate(n - k)
    fk = series_pow(g, k).coeffs
    f_neg_n = series_pow(g, -n).coeffs
    first = Fraction(0)
    second = Fraction(0)
    for m in range(k, n + 1):
        first += Fraction(1, m) * series_pow(g, m).coeffs[n - m] * series_pow(g, -m).coeffs[m - k]
        second += m * fk[m - k] * f_neg_n[n - m]
    return first, second


def theorem41_coefficient(beta: Series, m: int, n: int) -> Fraction:
    """[x^(m+n)] alpha(x)^m where alpha is the compositional inverse of beta.

    Writes beta(x) = x * (b0 + b1 x + b2 x^2 + ...) and sums, over
    multiplicity vectors of n with weight w,

        m/(n+m)! * (n+m-1+w)!/(k1!...kn!) * (-1)^w * b0^(-n-m-w) * b1^k1 ... bn^kn
    """
    if m < 1 or n < 1:
        raise UsageError("m and n must be positive")
    if beta.order < n + 1:
        raise UsageError(f"series order {beta.order} < n + 1 = {n + 1}")
    if beta.coeffs[0] != 0:
        raise DomainError("beta must vanish at 0")
    b = beta.coeffs[1:]
    b0 = b[0]
    if b0 == 0:
        raise DomainError("beta'(0) must be nonzero")
    total = Fraction(0)
    for mv in enumerate_multiplicity_vectors(n):
        w = mv.weight
        term = Fraction(math.factorial(n + m - 1 + w))
        for i, c in mv.items():
            term *= b[i] ** c / math.factorial(c)
        if not term:
            continue
        term *= b0 ** (-n - m - w)
        total += -term if w % 2 else term
    return total * m / math.factorial(n + m)


def _pair_sum(coeffs: Seq[Fraction], n: int, skip_top: bool = False) -> Fraction:
    """sum over vectors of n of (w+n)!/(k1!...kn!) * a1^k1 ... an^kn.

    With ``skip_top`` the vector using the part n (kn = 1) is left out, so
    only a1..a(n-1) are read.
    """
    total = Fraction(0)
    for mv in enumerate_multiplicity_vectors(n):
        if skip_top and mv.k[n - 1]:
            continue
        term = Fraction(math.factorial(mv.weight + n))
        for i, c in mv.items():
            a = coeffs[i - 1]
            if not a:
                term = Fraction(0)
                break
            term *= a**c / math.factorial(c)
        total += term
    return total


def inverse_pair_transform(alpha_coeffs: Seq[RationalLike], N: int) -> list[Fraction]:
    """Coefficients (b1..bN) of the inverse of alpha(x) = -x + a1 x^2 + ... + aN x^(N+1).

    b_n = (-1)^(n+1)/(n+1)! * sum (w+n)!/(k1!...kn!) a1^k1 ... an^kn.
    The map is its own inverse.
    """
    if len(alpha_coeffs) < N:
        raise UsageError(f"need {N} coefficients, got {len(alpha_coeffs)}")
    a = [Fraction(c) for c in alpha_coeffs[:N]]
    return [
        (-1) ** (n + 1) * _pair_sum(a, n) / math.factorial(n + 1) for n in range(1, N + 1)
    ]


def pair_coeffs_to_series(coeffs: Seq[RationalLike]) -> Series:
    """(a1..aN) -> the order-(N+1) series -x + a1 x^2 + ... + aN x^(N+1)."""
    return Series([0, -1, *coeffs])


def series_to_pair_coeffs(alpha: Series) -> list[Fraction]:
    if alpha.order < 1 or alpha.coeffs[0] != 0 or alpha.coeffs[1] != -1:
        raise DomainError("series must start -x + ...")
    return list(alpha.coeffs[2:])


@dataclass(frozen=True)
class SelfInverseSeries:
    """alpha(x) = -x + a1 x^2 + ... + aN x^(N+1) with alpha(alpha(x)) = x mod x^(N+2)."""

    order: int
    coeffs: tuple[Fraction, ...]

    def to_series(self) -> Series:
        return pair_coeffs_to_series(self.coeffs)

    def __str__(self) -> str:
        return ",".join(format_rational(c) for c in self.coeffs)


def self_inverse_complete(odd_coeffs: Seq[RationalLike], N: int) -> SelfInverseSeries:
    """Fill in a2, a4, ... of a self-inverse series from a1, a3, ... .

    With T_n the pair sum over vectors of n that avoid the part n, a
    self-inverse series has T_n = 0 for odd n and T_n = -2 (n+1)! a_n for
    even n.  Solving in increasing n is well-defined because T_n reads only
    a1..a(n-1).  The odd-n conditions are re-checked as a guard.
    """
    if N < 0:
        raise UsageError("order must be non-negative")
    need = (N + 1) // 2
    if len(odd_coeffs) != need:
        raise UsageError(f"order {N} needs exactly {need} odd-index coefficients, got {len(odd_coeffs)}")
    a = [Fraction(0)] * N
    for i, c in enumerate(odd_coeffs):
        a[2 * i] = Fraction(c)
    for n in range(1, N + 1):
        t = _pair_sum(a, n, skip_top=True)
        if n % 2:
            if t:
                raise ConsistencyError(f"odd-index condition fails at n={n}: sum = {format_rational(t)}")
        else:
            a[n - 1] = -t / (2 * math.factorial(n + 1))
    return SelfInverseSeries(N, tuple(a))


def sequence_to_json(s: Sequence) -> dict:
    return {"offset": s.offset, "values": [format_rational(v) for v in s.values]}


def sequence_from_json(data: dict) -> Sequence:
    if not isinstance(data, dict) or "values" not in data or "offset" not in data:
        raise UsageError('sequence JSON needs "offset" and "values"')
    if not isinstance(data["values"], list):
        raise UsageError('"values" must be a list')
    if data["offset"] not in (0, 1) or isinstance(data["offset"], bool):
        raise UsageError(f"offset must be 0 or 1, got {data['offset']!r}")
    return Sequence(data["offset"], [parse_rational(v) for v in data["values"]])

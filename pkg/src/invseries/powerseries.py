"""Exact truncated formal power series over the rationals.

A :class:`Series` of order ``N`` stands for ``c0 + c1*x + ... + cN*x**N``
known modulo ``x**(N+1)``.  Binary operations insist on equal orders; use
:meth:`Series.truncate` or :meth:`Series.pad` to line operands up.

:class:`PolyT` is a polynomial in a formal parameter ``t`` and is what
:func:`coeff_pow_poly_t` returns for ``[x^m] f(x)^t``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

from ._arith import RationalLike, binom, format_rational, parse_rational
from .errors import DomainError, UsageError
from .partitions import enumerate_multiplicity_vectors

__all__ = [
    "Series",
    "PolyT",
    "series_add",
    "series_mul",
    "series_pow",
    "series_compose",
    "series_reverse_lagrange",
    "series_reverse_full",
    "coeff_pow_poly_t",
    "named_series",
    "NAMED_SERIES",
    "series_to_json",
    "series_from_json",
]


@dataclass(frozen=True)
class Series:
    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise UsageError(f"order must be >= 0, got {order}")
            if len(cs) > order + 1:
                raise UsageError(
                    f"{len(cs)} coefficients do not fit in order {order}; truncate explicitly"
                )
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        if not cs:
            raise UsageError("a series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> Series:
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> Series:
        if order < 1:
            raise UsageError("the series x needs order >= 1")
        return cls([0, 1], order)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise UsageError(f"cannot truncate order {self.order} up to {order}; use pad")
        return Series(self.coeffs[: order + 1])

    def pad(self, order: int) -> Series:
        """Extend with zero coefficients (treating the series as a polynomial)."""
        return Series(self.coeffs, order)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for the zero series."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def shift_down(self, k: int = 1) -> Series:
        """Divide by x**k; the low coefficients must vanish.  Order drops by k."""
        if any(self.coeffs[:k]):
            raise DomainError(f"series is not divisible by x^{k}")
        if k > self.order:
            raise UsageError(f"cannot divide an order-{self.order} series by x^{k}")
        return Series(self.coeffs[k:])

    def scale(self, c: RationalLike) -> Series:
        c = Fraction(c)
        return Series(c * a for a in self.coeffs)

    def __add__(self, other: Series) -> Series:
        return series_add(self, other)

    def __sub__(self, other: Series) -> Series:
        return series_add(self, -other)

    def __neg__(self) -> Series:
        return self.scale(-1)

    def __mul__(self, other: Series | RationalLike) -> Series:
        if isinstance(other, Series):
            return series_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, e: RationalLike) -> Series:
        return series_pow(self, e)

    def __call__(self, g: Series) -> Series:
        return series_compose(self, g)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(format_rational(c) + (f"*{mono}" if mono else ""))
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(x^{self.order + 1})"


def _check_orders(f: Series, g: Series) -> int:
    if f.order != g.order:
        raise UsageError(f"order mismatch: {f.order} != {g.order}")
    return f.order


def series_add(f: Series, g: Series) -> Series:
    _check_orders(f, g)
    return Series(a + b for a, b in zip(f.coeffs, g.coeffs))


def series_mul(f: Series, g: Series) -> Series:
    """Cauchy product truncated to the common order."""
    n = _check_orders(f, g)
    fc, gc = f.coeffs, g.coeffs
    out = [Fraction(0)] * (n + 1)
    for i, a in enumerate(fc):
        if not a:
            continue
        for j in range(n + 1 - i):
            b = gc[j]
            if b:
                out[i + j] += a * b
    return Series(out)


def _pow_unit(g: Sequence[Fraction], e: Fraction, n: int) -> list[Fraction]:
    """Coefficients 0..n of g**e for g[0] != 0.

    From h' g = e g' h:  k g0 h_k = sum_{j=1..k} (e*j - (k - j)) g_j h_{k-j}.
    """
    g0 = g[0]
    if e.denominator == 1:
        h0 = g0 ** e.numerator
    elif g0 == 1:
        h0 = Fraction(1)
    else:
        raise DomainError("non-integer exponent requires constant term 1")
    h = [h0]
    for k in range(1, n + 1):
        acc = Fraction(0)
        for j in range(1, min(k, len(g) - 1) + 1):
            gj = g[j]
            if gj:
                acc += (e * j - (k - j)) * gj * h[k - j]
        h.append(acc / (k * g0))
    return h


def series_pow(f: Series, e: RationalLike) -> Series:
    """``f ** e`` modulo ``x**(N+1)`` for rational ``e``.

    Integer exponents are allowed for any ``f`` (negative ones need a
    nonzero constant term); non-integer exponents need ``f(0) == 1``.
    """
    e = Fraction(e)
    n = f.order
    if e == 0:
        return Series.one(n)
    if e.denominator != 1 and f.coeffs[0] != 1:
        raise DomainError(
            f"rational exponent {format_rational(e)} needs constant term 1, got {format_rational(f.coeffs[0])}"
        )
    v = f.valuation()
    if v is None:
        if e < 0:
            raise DomainError("negative power of the zero series")
        return Series.zero(n)
    if v > 0:
        if e < 0:
            raise DomainError("negative exponent needs a nonzero constant term")
        # f = x^v g  =>  f^e = x^(v e) g^e
        lead = v * e.numerator
        if lead > n:
            return Series.zero(n)
        h = _pow_unit(f.coeffs[v:], e, n - lead)
        return Series([0] * lead + h)
    return Series(_pow_unit(f.coeffs, e, n))


def series_compose(f: Series, g: Series) -> Series:
    """``f(g(x))`` by Horner's rule; requires ``g(0) == 0``."""
    n = _check_orders(f, g)
    if g.coeffs[0] != 0:
        raise DomainError("composition f(g(x)) needs g(0) == 0")
    acc = Series([f.coeffs[n]], n)
    for c in reversed(f.coeffs[:n]):
        acc = series_mul(acc, g)
        acc = Series((c + acc.coeffs[0],) + acc.coeffs[1:])
    return acc


def _require_reversible(alpha: Series) -> None:
    if alpha.order < 1:
        raise UsageError("reversion needs order >= 1")
    if alpha.coeffs[0] != 0:
        raise DomainError("not reversible: constant term must be 0")
    if alpha.coeffs[1] == 0:
        raise DomainError("not reversible: linear coefficient is 0")


def series_reverse_lagrange(alpha: Series, n: int, k: int) -> Fraction:
    """``[x^n] (alpha^{-1}(x))^k`` by Lagrange inversion.

    Uses ``(k/n) [x^(n-k)] (alpha(x)/x)^(-n)``; returns 0 when ``k > n``.
    """
    _require_reversible(alpha)
    if n < 1 or k < 1:
        raise UsageError("n and k must be positive")
    if k > n:
        return Fraction(0)
    if n > alpha.order:
        raise UsageError(f"n = {n} exceeds series order {alpha.order}")
    quotient = Series(alpha.coeffs[1 : n - k + 2])  # alpha/x to order n-k
    # constant term alpha_1 != 0, so the integer power is exact
    return Fraction(k, n) * series_pow(quotient, -n).coeffs[n - k]


def series_reverse_full(alpha: Series) -> Series:
    """Compositional inverse modulo ``x**(N+1)``, solved degree by degree.

    Keeps a table ``pw[j][i] = [x^i] g^j`` so each new coefficient of ``g``
    is determined from lower ones; independent of Lagrange inversion.
    """
    _require_reversible(alpha)
    N = alpha.order
    a = alpha.coeffs
    a1 = a[1]
    g = [Fraction(0)] * (N + 1)
    g[1] = 1 / a1
    # pw[j][i] for 1 <= j <= i <= N
    pw: list[list[Fraction]] = [[Fraction(0)] * (N + 1) for _ in range(N + 1)]
    pw[1][1] = g[1]
    for i in range(2, N + 1):
        acc = Fraction(0)
        for j in range(2, i + 1):
            # [x^i] g^j = sum_{s=1}^{i-j+1} g_s [x^{i-s}] g^{j-1}
            prev = pw[j - 1]
            c = Fraction(0)
            for s in range(1, i - j + 2):
                if g[s] and prev[i - s]:
                    c += g[s] * prev[i - s]
            pw[j][i] = c
            if a[j]:
                acc += a[j] * c
        g[i] = -acc / a1
        pw[1][i] = g[i]
    return Series(g)


@dataclass(frozen=True)
class PolyT:
    """Polynomial in ``t`` with rational coefficients, ``coeffs[j]`` at ``t**j``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def const(cls, c: RationalLike) -> PolyT:
        return cls([c])

    @classmethod
    def t(cls) -> PolyT:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, t: RationalLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def _lift(self, other: PolyT | RationalLike) -> PolyT:
        return other if isinstance(other, PolyT) else PolyT.const(other)

    def __add__(self, other: PolyT | RationalLike) -> PolyT:
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return PolyT(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> PolyT:
        return PolyT(-c for c in self.coeffs)

    def __sub__(self, other: PolyT | RationalLike) -> PolyT:
        return self + (-self._lift(other))

    def __rsub__(self, other: RationalLike) -> PolyT:
        return self._lift(other) - self

    def __mul__(self, other: PolyT | RationalLike) -> PolyT:
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return PolyT()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyT(out)

    __rmul__ = __mul__

    def __truediv__(self, c: RationalLike) -> PolyT:
        c = Fraction(c)
        return PolyT(a / c for a in self.coeffs)

    def binom(self, j: int) -> PolyT:
        """binom(p(t), j) = p(p-1)...(p-j+1)/j! as a polynomial in t."""
        if j < 0:
            return PolyT()
        out = PolyT.const(1)
        for i in range(j):
            out = out * (self - i)
        return out / math.factorial(j)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            mono = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(format_rational(c) + (f"*{mono}" if mono else ""))
        return " + ".join(terms).replace("+ -", "- ")


def coeff_pow_poly_t(f: Series, m: int) -> PolyT:
    """``[x^m] f(x)^t`` as a polynomial in ``t`` (degree at most ``m``).

    Sums t(t-1)...(t-w+1)/(k1!...km!) * a1^k1...am^km over all multiplicity
    vectors of ``m``, where ``w = k1 + ... + km``.
    """
    if f.coeffs[0] != 1:
        raise DomainError("[x^m] f^t needs constant term 1")
    if m < 0 or m > f.order:
        raise UsageError(f"m = {m} outside 0..{f.order}")
    a = f.coeffs
    # falling[w] = t(t-1)...(t-w+1), built one factor at a time
    falling = [PolyT.const(1)]
    t = PolyT.t()
    for w in range(1, m + 1):
        falling.append(falling[-1] * (t - (w - 1)))
    by_weight = [Fraction(0)] * (m + 1)
    for mv in enumerate_multiplicity_vectors(m):
        term = Fraction(1)
        for i, k in enumerate(mv.k, start=1):
            if k:
                term *= a[i] ** k / math.factorial(k)
        by_weight[mv.weight] += term
    out = PolyT()
    for w, c in enumerate(by_weight):
        if c:
            out = out + falling[w] * c
    return out


def _named_exp(N: int, p: Fraction | None) -> list[Fraction]:
    return [Fraction(1, math.factorial(i)) for i in range(N + 1)]


def _named_exp_minus_1(N: int, p: Fraction | None) -> list[Fraction]:
    return [Fraction(0)] + [Fraction(1, math.factorial(i)) for i in range(1, N + 1)]


def _named_log1p(N: int, p: Fraction | None) -> list[Fraction]:
    return [Fraction(0)] + [Fraction((-1) ** (i + 1), i) for i in range(1, N + 1)]


def _named_sin(N: int, p: Fraction | None) -> list[Fraction]:
    out = [Fraction(0)] * (N + 1)
    for i in range(1, N + 1, 2):
        out[i] = Fraction((-1) ** ((i - 1) // 2), math.factorial(i))
    return out


def _named_arcsin(N: int, p: Fraction | None) -> list[Fraction]:
    # (2n-1)!!/((2n+1)(2n)!!) = binom(2n, n) / (4^n (2n+1))
    out = [Fraction(0)] * (N + 1)
    for i in range(1, N + 1, 2):
        n = (i - 1) // 2
        out[i] = Fraction(math.comb(2 * n, n), 4**n * (2 * n + 1))
    return out


def _named_geom(N: int, p: Fraction | None) -> list[Fraction]:
    return [Fraction(0)] + [Fraction(1)] * N


def _named_catalan_beta(N: int, p: Fraction | None) -> list[Fraction]:
    # x/(1+x)^2 = sum_{n>=0} (-1)^n (n+1) x^{n+1}
    return [Fraction(0)] + [Fraction((-1) ** (i - 1) * i) for i in range(1, N + 1)]


def _named_binomial_t(N: int, p: Fraction | None) -> list[Fraction]:
    if p is None:
        raise UsageError("binomial_t needs the parameter t")
    return [binom(p, i) for i in range(N + 1)]


def _named_identity(N: int, p: Fraction | None) -> list[Fraction]:
    return [Fraction(0), Fraction(1)] + [Fraction(0)] * (N - 1)


NAMED_SERIES = {
    "exp": _named_exp,
    "exp_minus_1": _named_exp_minus_1,
    "log1p": _named_log1p,
    "sin": _named_sin,
    "arcsin": _named_arcsin,
    "geom": _named_geom,
    "catalan_beta": _named_catalan_beta,
    "binomial_t": _named_binomial_t,
    "identity": _named_identity,
}


def named_series(name: str, N: int, params: RationalLike | None = None) -> Series:
    """Truncated expansion of a catalogued function.

    ``exp`` is e^x, ``geom`` is x/(1-x), ``catalan_beta`` is x/(1+x)^2,
    ``binomial_t`` is (1+x)^t with ``params = t``.
    """
    try:
        build = NAMED_SERIES[name]
    except KeyError:
        raise UsageError(
            f"unknown series {name!r}; choose from {', '.join(sorted(NAMED_SERIES))}"
        ) from None
    if N < 0 or (name == "identity" and N < 1):
        raise UsageError(f"invalid order {N} for {name}")
    p = None if params is None else parse_rational(params)
    return Series(build(N, p))


def series_to_json(f: Series) -> dict[str, Any]:
    return {"order": f.order, "coeffs": [format_rational(c) for c in f.coeffs]}


def series_from_json(data: dict[str, Any] | str) -> Series:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict) or "order" not in data or "coeffs" not in data:
        raise UsageError('series JSON needs "order" and "coeffs"')
    order, coeffs = data["order"], data["coeffs"]
    if not isinstance(order, int) or isinstance(order, bool) or order < 0:
        raise UsageError(f"bad order: {order!r}")
    if not isinstance(coeffs, list) or len(coeffs) != order + 1:
        raise UsageError(f"expected {order + 1} coefficients")
    return Series([parse_rational(c) for c in coeffs])

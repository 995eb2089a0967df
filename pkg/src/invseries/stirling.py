"""Stirling numbers of both kinds by several independent routes.

``kind`` is 1 for the unsigned first kind s(n, k) (permutations of n with k
cycles) and 2 for the second kind S(n, k) (set partitions of n into k
blocks).  The strings ``"first_unsigned"`` and ``"second"`` are accepted too.

Routes:

* :func:`stirling_recurrence` -- the triangular recurrences; the oracle.
* :func:`stirling_via_gf` -- coefficient extraction from (e^x - 1)^m / m!
  or (log(1+x))^m / m!.
* :func:`stirling_partition_formula` -- a closed sum over multiplicity
  vectors, computing the entry (n+m, m).
* :func:`stirling_shift` -- (n+k, n) from the entries (k+r, r), r <= k.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction

from ._arith import as_integer, binom
from .errors import UsageError
from .partitions import enumerate_multiplicity_vectors
from .powerseries import Series, named_series, series_pow

__all__ = [
    "StirlingTable",
    "normalize_kind",
    "stirling_recurrence",
    "stirling_via_gf",
    "stirling_partition_formula",
    "stirling_shift",
    "stirling_all_routes",
    "egf_triangle_entry",
    "egf_shift_identity",
    "egf_triangle_shift",
    "surjection_sum",
    "surjection_partition_sum",
    "signed_first_kind",
]

_KIND_ALIASES = {
    1: 1,
    "1": 1,
    "first": 1,
    "first_unsigned": 1,
    2: 2,
    "2": 2,
    "second": 2,
}


def normalize_kind(kind) -> int:
    try:
        return _KIND_ALIASES[kind]
    except (KeyError, TypeError):
        raise UsageError(f"unknown Stirling kind {kind!r}; use 1/first_unsigned or 2/second") from None


@dataclass
class StirlingTable:
    """Triangular table grown on demand; rows are immutable once appended."""

    kind: int
    rows: list[tuple[int, ...]] = field(default_factory=lambda: [(1,)])
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1

    def extend_to(self, n: int) -> None:
        if n <= self.max_n:
            return
        with self._lock:
            rows = self.rows
            while len(rows) <= n:
                i = len(rows)  # building row i from row i-1
                prev = rows[-1]
                row = [0] * (i + 1)
                row[i] = 1
                for k in range(1, i):
                    mult = k if self.kind == 2 else i - 1
                    row[k] = prev[k - 1] + mult * prev[k]
                rows.append(tuple(row))

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        self.extend_to(n)
        return self.rows[n][k]


_TABLES = {1: StirlingTable(1), 2: StirlingTable(2)}


def stirling_recurrence(kind, n: int, k: int) -> int:
    """S(n,k) = S(n-1,k-1) + k S(n-1,k);  s(n,k) = s(n-1,k-1) + (n-1) s(n-1,k)."""
    kind = normalize_kind(kind)
    if not 0 <= k <= n:
        raise UsageError(f"need 0 <= k <= n, got n={n}, k={k}")
    return _TABLES[kind][n, k]


def signed_first_kind(n: int, k: int) -> int:
    return (-1) ** (n - k) * stirling_recurrence(1, n, k)


def stirling_via_gf(kind, n: int, m: int) -> int:
    """n! [x^n] base(x)^m / m!, base = e^x - 1 (kind 2) or log(1+x) (kind 1)."""
    kind = normalize_kind(kind)
    if not 0 <= m <= n:
        raise UsageError(f"need 0 <= m <= n, got n={n}, m={m}")
    base = named_series("exp_minus_1" if kind == 2 else "log1p", max(n, 1))
    c = series_pow(base, m).coeffs[n] * Fraction(math.factorial(n), math.factorial(m))
    if kind == 1:
        c *= (-1) ** (n - m)
    return as_integer(c, f"gf route for kind {kind} ({n},{m})")


def stirling_partition_formula(kind, n: int, m: int) -> int:
    """The entry (n+m, m) as a signed sum over multiplicity vectors of n.

    ((-1)^n / (m-1)!) * sum (-1)^w (w+n+m-1)! / prod(d_i^{k_i} k_i!)
    with d_i = i+1 for the second kind and d_i = (i+1)! for the first.
    ``n = 0`` uses the empty vector and gives 1.
    """
    kind = normalize_kind(kind)
    if n < 0 or m < 1:
        raise UsageError(f"need n >= 0 and m >= 1, got n={n}, m={m}")
    total = Fraction(0)
    for mv in enumerate_multiplicity_vectors(n):
        w = mv.weight
        den = 1
        for i, c in mv.items():
            d = i + 1 if kind == 2 else math.factorial(i + 1)
            den *= d**c * math.factorial(c)
        term = Fraction(math.factorial(w + n + m - 1), den)
        total += -term if w % 2 else term
    total = total * (-1) ** n / math.factorial(m - 1)
    return as_integer(total, f"partition formula for kind {kind} ({n}+{m},{m})")


def stirling_shift(kind, n: int, k: int) -> int:
    """The entry (n+k, n) = sum_{r=1..k} binom(k-n, k-r) binom(k+n, k+r) * entry(k+r, r).

    The entries on the right are read from the recurrence table.
    """
    kind = normalize_kind(kind)
    if n < 1 or k < 1:
        raise UsageError(f"need n, k >= 1, got n={n}, k={k}")
    total = Fraction(0)
    for r in range(1, k + 1):
        total += binom(k - n, k - r) * math.comb(k + n, k + r) * stirling_recurrence(kind, k + r, r)
    return as_integer(total, f"shift identity for kind {kind} ({n}+{k},{n})")


def stirling_all_routes(kind, n: int, k: int) -> dict[str, int]:
    """Every route that applies to (n, k), keyed by route name, in a fixed order.

    The partition and shift routes need k >= 1; the shift route also needs k < n.
    """
    kind = normalize_kind(kind)
    out = {
        "recurrence": stirling_recurrence(kind, n, k),
        "gf": stirling_via_gf(kind, n, k),
    }
    if k >= 1:
        out["partition"] = stirling_partition_formula(kind, n - k, k)
    if 1 <= k < n:
        out["shift"] = stirling_shift(kind, k, n - k)
    return out


def _require_egf_base(a: Series) -> None:
    if a.order < 1 or a.coeffs[0] != 0 or a.coeffs[1] != 1:
        raise UsageError("EGF triangle base needs a(0) = 0 and a'(0) = 1")


def egf_triangle_entry(a: Series, n: int, m: int) -> Fraction:
    """a(n, m) defined by a(x)^m / m! = sum_n a(n, m) x^n / n!."""
    _require_egf_base(a)
    if n > a.order:
        raise UsageError(f"n = {n} exceeds series order {a.order}")
    if m < 0 or n < 0:
        raise UsageError("n and m must be non-negative")
    if m > n:
        return Fraction(0)
    base = a.truncate(n) if n >= 1 else a
    return series_pow(base, m).coeffs[n] * Fraction(math.factorial(n), math.factorial(m))


def egf_shift_identity(a: Series, n: int, k: int) -> Fraction:
    """Right-hand side sum_{r=1..k} binom(k-n, k-r) binom(k+n, k+r) a(k+r, r)."""
    _require_egf_base(a)
    if n < 1 or k < 1:
        raise UsageError("n and k must be positive")
    if 2 * k > a.order:
        raise UsageError(f"order {a.order} too small for k = {k}")
    return sum(
        (binom(k - n, k - r) * math.comb(k + n, k + r) * egf_triangle_entry(a, k + r, r)
         for r in range(1, k + 1)),
        Fraction(0),
    )


def egf_triangle_shift(a: Series, n: int, k: int) -> Fraction:
    """a(n+k, n) read directly from a(x)^n; compare with :func:`egf_shift_identity`."""
    if a.order < n + k:
        raise UsageError(f"order {a.order} < n + k = {n + k}")
    return egf_triangle_entry(a, n + k, n)


def surjection_sum(m: int, n: int) -> int:
    """sum_{r=0..m} binom(m, r) (-1)^(m-r) r^(m+n), which counts surjections."""
    if m < 1 or n < 0:
        raise UsageError("need m >= 1 and n >= 0")
    return sum(math.comb(m, r) * (-1) ** (m - r) * r ** (m + n) for r in range(m + 1))


def surjection_partition_sum(m: int, n: int) -> Fraction:
    """m * sum (-1)^(w+n) (w+n+m-1)! / prod((i+1)^{k_i} k_i!) over vectors of n."""
    total = Fraction(0)
    for mv in enumerate_multiplicity_vectors(n):
        w = mv.weight
        den = 1
        for i, c in mv.items():
            den *= (i + 1) ** c * math.factorial(c)
        total += (-1) ** (w + n) * Fraction(math.factorial(w + n + m - 1), den)
    return m * total

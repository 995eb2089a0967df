"""Exact verification harness.

Each ``check_*`` / ``verify_*`` function evaluates both sides of one
identity from the library primitives and returns :class:`CheckResult`
objects.  :func:`run_suite` sweeps them all over a seeded parameter set;
failures are reported, never raised.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator

from . import inversion, partitions, powerseries, stirling
from ._arith import binom, format_rational
from .powerseries import PolyT, Series

__all__ = [
    "CheckResult",
    "SuiteReport",
    "IDENTITY_IDS",
    "verify_theorem21",
    "verify_cor21",
    "verify_corollaries_4x",
    "run_suite",
]

IDENTITY_IDS = (
    "thm2.1",
    "cor2.1",
    "thm2.2",
    "thm2.3",
    "thm3.1",
    "thm3.2-roundtrip",
    "thm3.3-roundtrip",
    "thm3.4",
    "cor3.1",
    "thm4.1-lagrange",
    "cor4.1",
    "cor4.2",
    "cor4.3",
    "thm4.2",
    "cor4.4",
    "eq4.1",
    "thm4.3",
    "thm4.4",
    "eq4.2",
    "eq4.3",
)

# invariants that belong to the primitives rather than a numbered identity
EXTRA_IDS = (
    "series-ring",
    "series-pow",
    "series-poly-t",
    "lemma3.2",
    "partition-count",
    "stirling-gf",
    "egf-stirling",
)


def _render(v: Any) -> str:
    if isinstance(v, (Fraction, int)):
        return format_rational(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_render(x) for x in v) + "]"
    return str(v)


@dataclass(frozen=True)
class CheckResult:
    identity_id: str
    parameters: dict[str, str]
    lhs: str
    rhs: str
    passed: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "identity_id": self.identity_id,
            "parameters": self.parameters,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
        }


def _result(identity_id: str, params: dict[str, Any], lhs: Any, rhs: Any) -> CheckResult:
    return CheckResult(
        identity_id,
        {k: _render(v) for k, v in params.items()},
        _render(lhs),
        _render(rhs),
        lhs == rhs,
    )


def _guarded(identity_id: str, params: dict[str, Any], thunk: Callable[[], tuple[Any, Any]]) -> CheckResult:
    """Evaluate (lhs, rhs); an exception counts as a failed check."""
    try:
        lhs, rhs = thunk()
    except Exception as exc:  # the harness reports, it does not raise
        return CheckResult(
            identity_id,
            {k: _render(v) for k, v in params.items()},
            f"error: {type(exc).__name__}: {exc}",
            "",
            False,
        )
    return _result(identity_id, params, lhs, rhs)


@dataclass
class SuiteReport:
    results: list[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.results)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    @property
    def identity_ids(self) -> list[str]:
        seen: dict[str, None] = {}
        for r in self.results:
            seen.setdefault(r.identity_id, None)
        return list(seen)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def summary(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for r in self.results:
            row = out.setdefault(r.identity_id, {"total": 0, "pass": 0, "fail": 0})
            row["total"] += 1
            row["pass" if r.passed else "fail"] += 1
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "counts": {"total": self.total, "pass": self.passed, "fail": self.failed},
            "elapsed_seconds": round(self.elapsed, 3),
            "identity_ids": self.identity_ids,
            "results": [r.to_dict() for r in self.results],
        }


# -- powers of series, EGF triangles, Stirling routes ------------------------


def verify_theorem21(f: Series, m: int) -> CheckResult:
    """[x^m] f^t == sum_{r=1..m} binom(m-t, m-r) binom(t, r) [x^m] f^r, as polynomials in t."""

    def sides():
        lhs = powerseries.coeff_pow_poly_t(f, m)
        t = PolyT.t()
        base = f.truncate(m)
        rhs = PolyT()
        for r in range(1, m + 1):
            c = powerseries.series_pow(base, r).coeffs[m]
            if c:
                rhs = rhs + (m - t).binom(m - r) * t.binom(r) * c
        # sampled cross-check against direct integer powers
        for r in range(m + 1):
            if lhs(r) != powerseries.series_pow(base, r).coeffs[m]:
                return lhs, f"sampled mismatch at t={r}"
        return lhs, rhs

    return _guarded("thm2.1", {"f": f, "m": m}, sides)


def verify_cor21(m: int, a: Fraction | int) -> CheckResult:
    """sum_{r=1..m} binom(m+a, m-r) (-1)^(m-r) binom(a+r-1, r) r^m == a^m."""
    a = Fraction(a)
    lhs = sum(
        (binom(m + a, m - r) * (-1) ** (m - r) * binom(a + r - 1, r) * r**m for r in range(1, m + 1)),
        Fraction(0),
    )
    return _result("cor2.1", {"m": m, "a": a}, lhs, a**m)


def check_thm22_lah(n: int, k: int) -> CheckResult:
    def sides():
        a = powerseries.named_series("geom", max(n + k, 2 * k))
        return stirling.egf_triangle_shift(a, n, k), stirling.egf_shift_identity(a, n, k)

    return _guarded("thm2.2", {"base": "x/(1-x)", "n": n, "k": k}, sides)


def check_thm23(kind: int, n: int, k: int) -> CheckResult:
    return _guarded(
        "thm2.3",
        {"kind": kind, "n": n, "k": k},
        lambda: (stirling.stirling_shift(kind, n, k), stirling.stirling_recurrence(kind, n + k, n)),
    )


def check_stirling_gf(kind: int, n: int, m: int) -> CheckResult:
    return _guarded(
        "stirling-gf",
        {"kind": kind, "n": n, "m": m},
        lambda: (stirling.stirling_via_gf(kind, n, m), stirling.stirling_recurrence(kind, n, m)),
    )


def check_egf_stirling(kind: int, n: int, m: int) -> CheckResult:
    def sides():
        name = "exp_minus_1" if kind == 2 else "log1p"
        a = powerseries.named_series(name, max(n, 1))
        want = stirling.stirling_recurrence(kind, n, m)
        if kind == 1:
            want *= (-1) ** (n - m)
        return stirling.egf_triangle_entry(a, n, m), Fraction(want)

    return _guarded("egf-stirling", {"kind": kind, "n": n, "m": m}, sides)


# -- sequence transforms ---------------------------------------------------


def check_thm31(k: int, s: inversion.Sequence) -> CheckResult:
    return _guarded(
        "thm3.1",
        {"k": k, "len": len(s)},
        lambda: (inversion.involution_k(k, inversion.involution_k(k, s)).values, s.values),
    )


def check_roundtrip(
    identity_id: str,
    label: str,
    fwd: inversion.TransformKernel,
    inv: inversion.TransformKernel,
    s: inversion.Sequence,
) -> list[CheckResult]:
    """inverse(forward(s)) == s and forward(inverse(s)) == s."""
    out = []
    for name, first, second in (("inv.fwd", fwd, inv), ("fwd.inv", inv, fwd)):
        out.append(
            _guarded(
                identity_id,
                {"f": label, "order": name, "len": len(s)},
                lambda first=first, second=second: (
                    inversion.transform_apply(second, inversion.transform_apply(first, s)).values,
                    s.values,
                ),
            )
        )
    return out


def check_thm34(label: str, f: Series, k: int, n: int) -> CheckResult:
    want = (Fraction(0), Fraction(0)) if k < n else (Fraction(1, n), Fraction(n))
    return _guarded(
        "thm3.4", {"f": label, "k": k, "n": n}, lambda: (inversion.orthogonality_sums(f, k, n), want)
    )


def check_cor31(t: Fraction, k: int, n: int) -> CheckResult:
    """Closed-form binomial sums; independent of the series machinery."""
    first = sum((Fraction(1, m) * binom(m * t, n - m) * binom(-m * t, m - k) for m in range(k, n + 1)), Fraction(0))
    second = sum((m * binom(k * t, m - k) * binom(-n * t, n - m) for m in range(k, n + 1)), Fraction(0))
    want = (Fraction(0), Fraction(0)) if k < n else (Fraction(1, n), Fraction(n))
    return _result("cor3.1", {"t": t, "k": k, "n": n}, (first, second), want)


def check_lemma32(label: str, alpha: Series) -> list[CheckResult]:
    out = []
    inv = powerseries.series_reverse_full(alpha)
    N = alpha.order
    out.append(
        _guarded("lemma3.2", {"alpha": label, "check": "compose"},
                 lambda: (powerseries.series_compose(alpha, inv), Series.x(N)))
    )
    powers = [Series.one(N)]
    for _ in range(N):
        powers.append(powerseries.series_mul(powers[-1], inv))
    for n in range(1, N + 1):
        for k in range(1, n + 1):
            out.append(
                _guarded(
                    "lemma3.2",
                    {"alpha": label, "n": n, "k": k},
                    lambda n=n, k=k: (powerseries.series_reverse_lagrange(alpha, n, k), powers[k].coeffs[n]),
                )
            )
    return out


# -- reversion coefficients and partition sums -----------------------------


def check_thm41(label: str, beta: Series, m: int, n: int) -> CheckResult:
    def sides():
        via_formula = inversion.theorem41_coefficient(beta, m, n)
        via_lagrange = powerseries.series_reverse_lagrange(beta, m + n, m)
        rev = powerseries.series_reverse_full(beta.truncate(m + n))
        via_full = powerseries.series_pow(rev, m).coeffs[m + n]
        return (via_formula, via_lagrange), (via_full, via_full)

    return _guarded("thm4.1-lagrange", {"beta": label, "m": m, "n": n}, sides)


def _partition_terms(n: int) -> Iterator[tuple[int, tuple[tuple[int, int], ...], int]]:
    for mv in partitions.enumerate_multiplicity_vectors(n):
        fact = 1
        for _, c in mv.items():
            fact *= math.factorial(c)
        yield mv.weight, tuple(mv.items()), fact


def _cor41(n: int, m: int) -> CheckResult:
    lhs = Fraction(0)
    for w, _, fact in _partition_terms(n):
        lhs += (-1) ** w * Fraction(math.factorial(w + m + n - 1), math.factorial(m + n - 1) * fact)
    return _result("cor4.1", {"n": n, "m": m}, lhs, (-1) ** n * math.comb(m + n, m))


def _cor42(n: int) -> CheckResult:
    lhs = Fraction(0)
    for w, items, fact in _partition_terms(n):
        weight = 1
        for i, c in items:
            weight *= (i + 1) ** c
        lhs += (-1) ** w * Fraction(math.factorial(w + n) * weight, fact)
    catalan = Fraction(math.comb(2 * n + 2, n + 1), n + 2)
    return _result("cor4.2", {"n": n}, lhs, (-1) ** n * math.factorial(n + 1) * catalan)


def _double_factorial(k: int) -> int:
    return math.prod(range(k, 0, -2)) if k > 0 else 1


def _cor43(n: int) -> CheckResult:
    lhs = Fraction(0)
    for w, items, fact in _partition_terms(n):
        den = fact
        for i, c in items:
            den *= math.factorial(2 * i + 1) ** c
        lhs += (-1) ** (w + n) * Fraction(math.factorial(w + 2 * n), den)
    return _result("cor4.3", {"n": n}, lhs, _double_factorial(2 * n - 1) ** 2)


def _cor44(m: int, n: int) -> CheckResult:
    def sides():
        s = stirling.surjection_sum(m, n)
        return (s, s), (stirling.surjection_partition_sum(m, n),
                        math.factorial(m) * stirling.stirling_recurrence(2, n + m, m))

    return _guarded("cor4.4", {"m": m, "n": n}, sides)


def verify_corollaries_4x(n: int, m: int) -> list[CheckResult]:
    """Four partition-sum identities at (n, m); the cor4.2 and cor4.3 checks depend only on n."""
    return [_cor41(n, m), _cor42(n), _cor43(n), _cor44(m, n)]


def check_thm42(kind: int, n: int, m: int) -> CheckResult:
    return _guarded(
        "thm4.2",
        {"kind": kind, "n": n, "m": m},
        lambda: (stirling.stirling_partition_formula(kind, n, m), stirling.stirling_recurrence(kind, n + m, m)),
    )


def check_eq41(kind: int, m: int) -> CheckResult:
    if kind == 2:
        closed = math.comb(m + 1, 2) * math.comb(m + 3, 4)
    else:
        closed = math.comb(m + 3, 2) * math.comb(m + 3, 4)
    return _guarded("eq4.1", {"kind": kind, "m": m}, lambda: (stirling.stirling_recurrence(kind, m + 3, m), closed))


def check_thm43(coeffs: list[Fraction]) -> list[CheckResult]:
    N = len(coeffs)

    def involutive():
        once = inversion.inverse_pair_transform(coeffs, N)
        return inversion.inverse_pair_transform(once, N), list(coeffs)

    def matches_reversion():
        beta = inversion.inverse_pair_transform(coeffs, N)
        rev = powerseries.series_reverse_full(inversion.pair_coeffs_to_series(coeffs))
        return beta, inversion.series_to_pair_coeffs(rev)

    return [
        _guarded("thm4.3", {"alpha": coeffs, "check": "involutive"}, involutive),
        _guarded("thm4.3", {"alpha": coeffs, "check": "reversion"}, matches_reversion),
    ]


def check_thm44(odd: list[Fraction], N: int) -> CheckResult:
    def sides():
        alpha = inversion.self_inverse_complete(odd, N).to_series()
        return powerseries.series_compose(alpha, alpha), Series.x(N + 1)

    return _guarded("thm4.4", {"odd": odd, "N": N}, sides)


def check_eq42(label: str, coeffs: list[Fraction]) -> list[CheckResult]:
    """For a self-inverse series given in pair indexing, check the partition-sum conditions."""
    out = []
    for n in range(1, len(coeffs) + 1):
        lhs = inversion._pair_sum(coeffs, n, skip_top=True)
        rhs = Fraction(0) if n % 2 else -2 * math.factorial(n + 1) * coeffs[n - 1]
        out.append(_result("eq4.2", {"alpha": label, "n": n}, lhs, rhs))
    return out


def eq43_even_coefficients(a1, a3, a5, a7) -> list[Fraction]:
    """alpha_2, alpha_4, alpha_6, alpha_8 from the published closed forms."""
    return [
        -(a1**2),
        2 * a1**4 - 3 * a1 * a3,
        -13 * a1**6 - 4 * a1 * a5 - 2 * a3**2 + 18 * a1**3 * a3,
        145 * a1**8 - 221 * a1**5 * a3 + 50 * a1**2 * a3**2 + 35 * a1**3 * a5 - 5 * a3 * a5 - 5 * a1 * a7,
    ]


def check_eq43(odd: list[Fraction]) -> CheckResult:
    a1, a3, a5, a7 = (list(odd) + [Fraction(0)] * 4)[:4]

    def sides():
        done = inversion.self_inverse_complete([a1, a3, a5, a7], 8).coeffs
        return [done[1], done[3], done[5], done[7]], eq43_even_coefficients(a1, a3, a5, a7)

    return _guarded("eq4.3", {"a1": a1, "a3": a3, "a5": a5, "a7": a7}, sides)


# -- primitives --------------------------------------------------------------


def _rand_q(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if q or not nonzero:
            return q


def _rand_series(rng: random.Random, N: int, c0: Fraction | None = None) -> Series:
    cs = [_rand_q(rng) for _ in range(N + 1)]
    if c0 is not None:
        cs[0] = c0
    return Series(cs)


def check_series_ring(f: Series, g: Series, h: Series) -> list[CheckResult]:
    mul, add = powerseries.series_mul, powerseries.series_add
    p = {"order": f.order}
    return [
        _result("series-ring", {**p, "law": "mul-assoc"}, mul(mul(f, g), h), mul(f, mul(g, h))),
        _result("series-ring", {**p, "law": "mul-comm"}, mul(f, g), mul(g, f)),
        _result("series-ring", {**p, "law": "add-assoc"}, add(add(f, g), h), add(f, add(g, h))),
        _result("series-ring", {**p, "law": "distrib"}, mul(f, add(g, h)), add(mul(f, g), mul(f, h))),
    ]


def check_series_pow(f: Series, a: Fraction, b: Fraction) -> list[CheckResult]:
    pw = powerseries.series_pow
    return [
        _guarded("series-pow", {"f": f, "a": a, "b": b},
                 lambda: (powerseries.series_mul(pw(f, a), pw(f, b)), pw(f, a + b))),
        _guarded("series-pow", {"f": f, "law": "sqrt-squared"},
                 lambda: (pw(pw(f, Fraction(1, 2)), 2), f)),
    ]


def check_poly_t(f: Series, m: int) -> CheckResult:
    def sides():
        p = powerseries.coeff_pow_poly_t(f, m)
        base = f.truncate(m)
        return [p(r) for r in range(m + 1)], [powerseries.series_pow(base, r).coeffs[m] for r in range(m + 1)]

    return _guarded("series-poly-t", {"f": f, "m": m}, sides)


def check_partition_count(n: int) -> CheckResult:
    def sides():
        vecs = list(partitions.enumerate_multiplicity_vectors(n))
        ok = all(sum(i * c for i, c in enumerate(v.k, start=1)) == n for v in vecs)
        distinct = len({v.k for v in vecs})
        return (len(vecs), distinct, ok), (partitions.partition_count(n), partitions.partition_count(n), True)

    return _guarded("partition-count", {"n": n}, sides)


# -- suite -------------------------------------------------------------------

_T_VALUES = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-1, 3))
_COR21_A = (Fraction(1), Fraction(2), Fraction(1, 2), Fraction(-3, 7))
_BETAS = ("geom", "catalan_beta", "sin", "exp_minus_1", "log1p")


def kernel_test_set(N: int) -> list[tuple[str, Series]]:
    """The f's used for round trips and orthogonality, each at order N-1 or more."""
    order = max(N - 1, 1)
    out = [(f"(1+x)^{format_rational(t)}", powerseries.named_series("binomial_t", order, t)) for t in _T_VALUES]
    out.append(("exp", powerseries.named_series("exp", order)))
    out.append(("1+x+x^2", Series([1, 1, 1], order)))
    out.append(("2+x", Series([2, 1], order)))
    return out


def _checks(max_n: int, rng: random.Random) -> Iterator[Callable[[], Iterable[CheckResult]]]:
    """Yield thunks in a fixed order; random draws happen at yield time so order is deterministic."""
    n_top = max_n

    # primitives
    for _ in range(3):
        fs = [_rand_series(rng, n_top) for _ in range(3)]
        yield lambda fs=fs: check_series_ring(*fs)
    for _ in range(3):
        f = _rand_series(rng, n_top, Fraction(1))
        a, b = _rand_q(rng), _rand_q(rng)
        yield lambda f=f, a=a, b=b: check_series_pow(f, a, b)
    for n in range(0, 2 * n_top + 1):
        yield lambda n=n: [check_partition_count(n)]
    lemma_alphas = [(name, powerseries.named_series(name, n_top)) for name in _BETAS]
    for i in range(2):
        alpha = _rand_series(rng, n_top, Fraction(0))
        cs = list(alpha.coeffs)
        cs[1] = _rand_q(rng, nonzero=True)
        lemma_alphas.append((f"random{i}", Series(cs)))
    for label, alpha in lemma_alphas:
        yield lambda label=label, alpha=alpha: check_lemma32(label, alpha)

    # section 2
    exp = powerseries.named_series("exp", n_top)
    thm21_fs = [("exp", exp), ("1+x", Series([1, 1], n_top))]
    for i in range(3):
        thm21_fs.append((f"random{i}", _rand_series(rng, n_top, Fraction(1))))
    for _, f in thm21_fs:
        for m in range(1, n_top + 1):
            yield lambda f=f, m=m: [verify_theorem21(f, m), check_poly_t(f, m)]
    for a in _COR21_A:
        for m in range(1, n_top + 1):
            yield lambda m=m, a=a: [verify_cor21(m, a)]
    for n in range(1, n_top + 1):
        for k in range(1, n_top + 1):
            yield lambda n=n, k=k: [check_thm22_lah(n, k)]
    for kind in (1, 2):
        for N in range(1, n_top + 1):
            for m in range(1, N + 1):
                yield lambda kind=kind, N=N, m=m: [
                    check_stirling_gf(kind, N, m),
                    check_egf_stirling(kind, N, m),
                    check_thm42(kind, N - m, m),
                ] + ([check_thm23(kind, m, N - m)] if m < N else [])

    # section 3
    for k in (1, 2, 3):
        L = 3 * n_top
        vals = [_rand_q(rng) if i % k == 0 else Fraction(0) for i in range(L)]
        s = inversion.Sequence(0, vals)
        yield lambda k=k, s=s: [check_thm31(k, s)]
    L = 3 * n_top
    fs = kernel_test_set(L)
    for label, f in fs[len(_T_VALUES):]:
        s = inversion.Sequence(1, [_rand_q(rng) for _ in range(L)])
        yield lambda label=label, f=f, s=s: check_roundtrip(
            "thm3.2-roundtrip", label,
            inversion.build_kernel(f, L, "forward"), inversion.build_kernel(f, L, "inverse"), s,
        )
    for t in _T_VALUES:
        s = inversion.Sequence(1, [_rand_q(rng) for _ in range(L)])
        yield lambda t=t, s=s: check_roundtrip(
            "thm3.3-roundtrip", f"(1+x)^{format_rational(t)}",
            inversion.binomial_kernel(t, L, "forward"), inversion.binomial_kernel(t, L, "inverse"), s,
        )
        yield lambda t=t: [
            _result(
                "thm3.3-roundtrip",
                {"t": t, "check": f"closed-form {d} kernel"},
                inversion.binomial_kernel(t, L, d).rows,
                inversion.build_kernel(powerseries.named_series("binomial_t", L - 1, t), L, d).rows,
            )
            for d in ("forward", "inverse")
        ]
    for label, f in kernel_test_set(n_top + 1):
        for n in range(1, n_top + 1):
            for k in range(1, n + 1):
                yield lambda label=label, f=f, k=k, n=n: [check_thm34(label, f, k, n)]
    for t in _T_VALUES:
        for n in range(1, n_top + 1):
            for k in range(1, n + 1):
                yield lambda t=t, k=k, n=n: [check_cor31(t, k, n)]

    # section 4
    for name in _BETAS:
        beta = powerseries.named_series(name, n_top)
        for m in range(1, n_top):
            for n in range(1, n_top - m + 1):
                yield lambda name=name, beta=beta, m=m, n=n: [check_thm41(name, beta, m, n)]
    for n in range(1, n_top + 1):
        for m in range(1, n_top + 1):
            yield lambda n=n, m=m: verify_corollaries_4x(n, m)
    for kind in (1, 2):
        for m in range(1, 3 * n_top + 1):
            yield lambda kind=kind, m=m: [check_eq41(kind, m)]
    for N in range(1, n_top + 1):
        coeffs = [_rand_q(rng) for _ in range(N)]
        yield lambda coeffs=coeffs: check_thm43(coeffs)
    for N in range(1, n_top + 1):
        odd = [_rand_q(rng) for _ in range((N + 1) // 2)]
        yield lambda odd=odd, N=N: [check_thm44(odd, N)]
        yield lambda odd=odd, N=N: check_eq42(
            f"completed{N}", list(inversion.self_inverse_complete(odd, N).coeffs)
        )
    for _ in range(2):
        c = _rand_q(rng, nonzero=True)
        # rx/(tx - r) = -x - c x^2 - c^2 x^3 - ... with c = t/r
        coeffs = [-(c**j) for j in range(1, n_top + 1)]
        yield lambda c=c, coeffs=coeffs: check_eq42(f"mobius c={format_rational(c)}", coeffs)
    for _ in range(3):
        odd = [_rand_q(rng) for _ in range(4)]
        yield lambda odd=odd: [check_eq43(odd)]


def run_suite(max_n: int = 8, seed: int = 42, only: Iterable[str] | None = None) -> SuiteReport:
    """Run every check at sizes up to ``max_n`` with a seeded RNG.

    ``only`` restricts the report to the given identity ids; the RNG stream
    is consumed identically either way so filtered runs see the same data.
    """
    if max_n < 4:
        raise ValueError("max_n must be >= 4")
    keep = set(only) if only else None
    rng = random.Random(seed)
    start = time.perf_counter()
    report = SuiteReport()
    for thunk in _checks(max_n, rng):
        for result in thunk():
            if keep is None or result.identity_id in keep:
                report.results.append(result)
    report.elapsed = time.perf_counter() - start
    return report

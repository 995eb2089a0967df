"""Multiplicity vectors: solutions of k1 + 2*k2 + ... + n*kn = n."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class MultiplicityVector:
    """A partition of ``n`` stored by part multiplicities, ``k[i-1]`` = number of parts i."""

    n: int
    k: tuple[int, ...]

    def __post_init__(self):
        if len(self.k) != self.n:
            raise ValueError(f"expected {self.n} multiplicities, got {len(self.k)}")
        if sum(i * c for i, c in enumerate(self.k, start=1)) != self.n:
            raise ValueError(f"{self.k} is not a partition of {self.n}")

    @property
    def weight(self) -> int:
        """Number of parts, k1 + ... + kn."""
        return sum(self.k)

    def items(self) -> Iterator[tuple[int, int]]:
        """Yield (part, multiplicity) for the parts that occur."""
        for i, c in enumerate(self.k, start=1):
            if c:
                yield i, c

    def __str__(self) -> str:
        return ",".join(map(str, self.k))


def enumerate_multiplicity_vectors(n: int) -> Iterator[MultiplicityVector]:
    """Yield every multiplicity vector of ``n`` exactly once.

    Order: ascending lexicographic on the reversed tuple (kn, ..., k1), i.e.
    the multiplicity of the largest part varies slowest.  For n = 4::

        (4,0,0,0) (2,1,0,0) (0,2,0,0) (1,0,1,0) (0,0,0,1)

    ``n = 0`` yields the single empty vector.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        yield MultiplicityVector(0, ())
        return
    k = [0] * n

    def descend(part: int, remaining: int) -> Iterator[MultiplicityVector]:
        if part == 1:
            k[0] = remaining
            yield MultiplicityVector(n, tuple(k))
            return
        for c in range(remaining // part + 1):
            k[part - 1] = c
            yield from descend(part - 1, remaining - c * part)
        k[part - 1] = 0

    yield from descend(n, n)


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    p = [1] + [0] * n
    for i in range(1, n + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > i:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[i - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= i:
                total += sign * p[i - g2]
            j += 1
        p[i] = total
    return p[n]

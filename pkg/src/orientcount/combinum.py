"""Exact combinatorial number core.

All values are Python ints, which are arbitrary precision: every quantity
in this package is exact at any magnitude. Indices (n, k, m) are ordinary
machine-size non-negative integers; only the values grow big.
"""

from __future__ import annotations

import threading
from math import factorial

__all__ = ["StirlingTable", "stirling2", "factorial", "poly_bernoulli_neg"]


class StirlingTable:
    """Lazily grown triangle of Stirling numbers of the second kind.

    Row n holds S(n, 0) .. S(n, n), built from the recurrence
    S(n, k) = k*S(n-1, k) + S(n-1, k-1). Rows are appended monotonically
    and never evicted; the table is tiny compared to the integers it holds.

    Thread-safe: row growth happens under a lock, and a fully built row is
    appended in a single operation, so concurrent readers only ever see
    complete rows.
    """

    def __init__(self):
        self._rows = [[1]]  # S(0, 0) = 1
        self._lock = threading.Lock()

    @property
    def max_n(self) -> int:
        """Largest n currently stored."""
        return len(self._rows) - 1

    def value(self, n: int, k: int) -> int:
        """S(n, k), extending the table if needed. Out-of-range k gives 0."""
        if n < 0 or k < 0:
            raise ValueError("Stirling indices must be non-negative")
        if k > n:
            return 0
        if n >= len(self._rows):
            self._grow(n)
        return self._rows[n][k]

    def _grow(self, n: int) -> None:
        with self._lock:
            rows = self._rows
            while len(rows) <= n:
                prev = rows[-1]
                m = len(rows)
                row = [0] * (m + 1)
                for k in range(1, m):
                    row[k] = k * prev[k] + prev[k - 1]
                row[m] = 1
                rows.append(row)


_SHARED_TABLE = StirlingTable()


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k non-empty blocks, S(n, k)."""
    return _SHARED_TABLE.value(n, k)


def poly_bernoulli_neg(n: int, m: int) -> int:
    """Negative-order poly-Bernoulli number B_n^(-m).

    Computed by the closed form
        sum_{j=0}^{min(n,m)} (j!)^2 * S(n+1, j+1) * S(m+1, j+1),
    which also makes the symmetry B_n^(-m) = B_m^(-n) visible directly.
    """
    if n < 0 or m < 0:
        raise ValueError("poly-Bernoulli indices must be non-negative")
    return sum(
        factorial(j) ** 2 * stirling2(n + 1, j + 1) * stirling2(m + 1, j + 1)
        for j in range(min(n, m) + 1)
    )

"""Exact integer combinatorics: partitions, p(n), rank and crank statistics.

Everything here is computed with Python integers, so tables stay exact at
any size (p(n) overflows 64 bits near n = 400).  These tables are the ground
truth against which all numerical modules are validated.

Conventions at the edge:
  * the empty sequence is the unique partition of 0; it has no rank or crank
  * the rank table stores N(0,0) = 1 (the generating-function constant term)
  * the crank table at n = 1 comes from the combinatorial definition
    (crank(1) = -1); this disagrees with the Andrews-Garvan generating
    function at n = 1, which is a known quirk we document rather than patch
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CapExceededError

ENUMERATION_CAP = 70
SERIES_CAP = 1000

_pmem = [1]


def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal-number recurrence (memoized)."""
    if n < 0:
        raise ValueError("partition_count requires n >= 0")
    while len(_pmem) <= n:
        target = len(_pmem)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > target:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * _pmem[target - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= target:
                total += sign * _pmem[target - g2]
            k += 1
        _pmem.append(total)
    return _pmem[n]


def partition_counts_up_to(n_max: int) -> list[int]:
    """[p(0), ..., p(n_max)]."""
    partition_count(n_max)
    return _pmem[: n_max + 1]


def _descending_partitions(n, max_part):
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _descending_partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int, cap: int = ENUMERATION_CAP) -> list[tuple[int, ...]]:
    """All partitions of n, each a non-increasing tuple, in lexicographically
    decreasing order: 4; 3+1; 2+2; 2+1+1; 1+1+1+1."""
    if n < 0:
        raise ValueError("no partitions of negative integers")
    if n > cap:
        raise CapExceededError(
            f"enumeration too large: n={n} exceeds cap {cap}"
        )
    return list(_descending_partitions(n, n))


def rank_of(parts) -> int:
    """Dyson rank: largest part minus number of parts."""
    parts = tuple(parts)
    if not parts:
        raise ValueError("rank undefined for empty partition")
    return parts[0] - len(parts)


def crank_of(parts) -> int:
    """Andrews-Garvan crank.

    With o = number of ones and mu = number of parts strictly larger than o:
    the largest part when o = 0, otherwise mu - o.
    """
    parts = tuple(parts)
    if not parts:
        raise ValueError("crank undefined for empty partition")
    ones = sum(1 for p in parts if p == 1)
    if ones == 0:
        return parts[0]
    mu = sum(1 for p in parts if p > ones)
    return mu - ones


@dataclass
class StatTable:
    """Exact counts indexed as rows[n][m]; zero entries are not stored."""

    n_max: int
    rows: list[dict[int, int]]
    statistic: str = "rank"

    def count(self, m: int, n: int) -> int:
        if not 0 <= n <= self.n_max:
            raise CapExceededError(f"n={n} outside table range 0..{self.n_max}")
        return self.rows[n].get(m, 0)

    def row(self, n: int) -> dict[int, int]:
        if not 0 <= n <= self.n_max:
            raise CapExceededError(f"n={n} outside table range 0..{self.n_max}")
        return dict(self.rows[n])

    def row_sum(self, n: int) -> int:
        return sum(self.rows[n].values())

    def write_csv(self, stream) -> None:
        """CSV schema: header n,m,count; rows sorted by (n, m)."""
        stream.write("n,m,count\n")
        for n in range(self.n_max + 1):
            for m in sorted(self.rows[n]):
                stream.write(f"{n},{m},{self.rows[n][m]}\n")


class RankTable(StatTable):
    pass


class CrankTable(StatTable):
    pass


def _series_f_coefficients(m: int, n_max: int):
    """Sparse q-expansion of the zeta^m coefficient of
    (1 - zeta) * sum_k (-1)^k q^{(3k^2+k)/2} / (1 - zeta q^k).

    The bilateral sum is split into the k = 0 term plus two one-sided sums
    (k > 0 carries non-negative zeta powers after geometric expansion, k < 0
    carries non-positive ones), so positive and negative m are extracted by
    genuinely distinct branches.  Yields (exponent, coefficient) pairs.
    """
    if m == 0:
        yield 0, 1
        k = 1
        while True:
            g = k * (3 * k + 1) // 2
            if g > n_max:
                return
            sign = -1 if k % 2 else 1
            # j = 0 term of both the k > 0 and k < 0 geometric expansions
            yield g, 2 * sign
            k += 1
    elif m > 0:
        # k > 0 branch: (1 - zeta) sum_j zeta^j q^{kj}; zeta^m appears at
        # j = m (+) and j = m - 1 (-)
        k = 1
        while True:
            g = k * (3 * k + 1) // 2
            if g + k * (m - 1) > n_max:
                return
            sign = -1 if k % 2 else 1
            if g + k * m <= n_max:
                yield g + k * m, sign
            yield g + k * (m - 1), -sign
            k += 1
    else:
        # k < 0 branch, rewritten with k -> -k:
        # (1 - zeta^{-1}) sum_j zeta^{-j} q^{kj}; zeta^m appears at
        # j = -m (+) and j = -m - 1 (-)
        a = -m
        k = 1
        while True:
            g = k * (3 * k + 1) // 2
            if g + k * (a - 1) > n_max:
                return
            sign = -1 if k % 2 else 1
            if g + k * a <= n_max:
                yield g + k * a, sign
            yield g + k * (a - 1), -sign
            k += 1


def rank_counts_series(m: int, n_max: int, cap: int = SERIES_CAP) -> list[int]:
    """[N(m,0), ..., N(m,n_max)] by coefficient extraction, O(n_max^{3/2})."""
    if n_max > cap:
        raise CapExceededError(f"series table too large: n_max={n_max} > cap {cap}")
    p = partition_counts_up_to(n_max)
    out = [0] * (n_max + 1)
    for e, c in _series_f_coefficients(m, n_max):
        for n in range(e, n_max + 1):
            out[n] += c * p[n - e]
    return out


def rank_table(n_max: int, method: str = "enumeration") -> RankTable:
    """Exact table of N(m,n) for 0 <= n <= n_max.

    method="enumeration" tallies rank_of over all partitions (n_max <= 70);
    method="series" extracts coefficients of the rank generating function
    (n_max <= 1000).  The two agree integer-for-integer on common range.
    """
    if method == "enumeration":
        if n_max > ENUMERATION_CAP:
            raise CapExceededError(
                f"enumeration too large: n_max={n_max} exceeds cap {ENUMERATION_CAP}"
            )
        rows: list[dict[int, int]] = [{0: 1}]
        for n in range(1, n_max + 1):
            row: dict[int, int] = {}
            for parts in _descending_partitions(n, n):
                r = rank_of(parts)
                row[r] = row.get(r, 0) + 1
            rows.append(row)
        return RankTable(n_max, rows)
    if method == "series":
        if n_max > SERIES_CAP:
            raise CapExceededError(
                f"series table too large: n_max={n_max} exceeds cap {SERIES_CAP}"
            )
        rows = [dict() for _ in range(n_max + 1)]
        for m in range(-n_max, n_max + 1):
            col = rank_counts_series(m, n_max)
            for n, c in enumerate(col):
                if c:
                    rows[n][m] = c
        return RankTable(n_max, rows)
    raise ValueError(f"unknown rank table method: {method!r}")


def crank_table(n_max: int) -> CrankTable:
    """Exact table of M(m,n) by enumeration and crank_of (n_max <= 70)."""
    if n_max > ENUMERATION_CAP:
        raise CapExceededError(
            f"enumeration too large: n_max={n_max} exceeds cap {ENUMERATION_CAP}"
        )
    rows: list[dict[int, int]] = [{0: 1}]
    for n in range(1, n_max + 1):
        row: dict[int, int] = {}
        for parts in _descending_partitions(n, n):
            c = crank_of(parts)
            row[c] = row.get(c, 0) + 1
        rows.append(row)
    return CrankTable(n_max, rows, statistic="crank")


def dyson_class_sizes(n: int, modulus: int, table: RankTable | None = None) -> dict[int, int]:
    """Sizes of the rank-residue classes mod `modulus` among partitions of n."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if table is not None:
        row = table.row(n)
    elif n <= ENUMERATION_CAP:
        row = rank_table(n, method="enumeration").row(n)
    else:
        row = {m: c for m in range(-n, n + 1)
               if (c := rank_counts_series(m, n)[n])}
    sizes = {r: 0 for r in range(modulus)}
    for m, c in row.items():
        sizes[m % modulus] += c
    return sizes

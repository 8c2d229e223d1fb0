"""Exact truncated Poincare series over Python integers.

A :class:`PoincareSeries` holds coefficients ``c[0..trunc]`` where ``c[i]``
is a rank in homological degree ``i``.  Everything here is exact; nothing is
ever converted to floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

__all__ = [
    "PoincareSeries",
    "PartitionTable",
    "make_series",
    "add",
    "mul",
    "substitute_power",
    "sym_square",
    "macdonald_sp",
    "gaussian_binomial",
    "projective_series",
    "em_series",
    "even_em_product",
    "partition_count",
    "partition_table",
]


@dataclass(frozen=True)
class PoincareSeries:
    coeffs: tuple[int, ...]
    trunc: int

    def __post_init__(self):
        if self.trunc < 0:
            raise ValueError(f"truncation must be >= 0, got {self.trunc}")
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError("coeffs must have length trunc + 1")

    def __getitem__(self, degree: int) -> int:
        if degree < 0 or degree > self.trunc:
            raise IndexError(f"degree {degree} outside 0..{self.trunc}")
        return self.coeffs[degree]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: PoincareSeries) -> PoincareSeries:
        return add(self, other)

    def __mul__(self, other: PoincareSeries) -> PoincareSeries:
        return mul(self, other)

    def truncate(self, trunc: int) -> PoincareSeries:
        """Drop every coefficient above ``trunc`` (which may not exceed the current one)."""
        if trunc > self.trunc:
            raise ValueError(f"cannot extend truncation {self.trunc} to {trunc}")
        return PoincareSeries(self.coeffs[: trunc + 1], trunc)

    def is_evenly_graded(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def even_part(self) -> list[int]:
        """Coefficients at degrees 0, 2, 4, ... up to the truncation."""
        return list(self.coeffs[0::2])

    def total(self) -> int:
        return sum(self.coeffs)

    def euler_characteristic(self) -> int:
        return sum(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def __repr__(self):
        return f"PoincareSeries({list(self.coeffs)}, trunc={self.trunc})"


def make_series(coeffs: Iterable[int], trunc: int) -> PoincareSeries:
    """Build a series, zero-padding ``coeffs`` up to degree ``trunc``."""
    if trunc < 0:
        raise ValueError(f"truncation must be >= 0, got {trunc}")
    values = [int(c) for c in coeffs]
    if len(values) > trunc + 1:
        raise ValueError(f"{len(values)} coefficients do not fit in truncation {trunc}")
    values.extend([0] * (trunc + 1 - len(values)))
    return PoincareSeries(tuple(values), trunc)


def _common_trunc(f: PoincareSeries, g: PoincareSeries) -> int:
    return min(f.trunc, g.trunc)


def add(f: PoincareSeries, g: PoincareSeries) -> PoincareSeries:
    n = _common_trunc(f, g)
    return PoincareSeries(tuple(f.coeffs[i] + g.coeffs[i] for i in range(n + 1)), n)


def _convolve(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, ai in enumerate(a[: n + 1]):
        if ai == 0:
            continue
        for j in range(min(len(b), n + 1 - i)):
            if b[j]:
                out[i + j] += ai * b[j]
    return out


def mul(f: PoincareSeries, g: PoincareSeries) -> PoincareSeries:
    """Cauchy product truncated at the smaller truncation of the two inputs."""
    n = _common_trunc(f, g)
    return PoincareSeries(tuple(_convolve(f.coeffs, g.coeffs, n)), n)


def substitute_power(f: PoincareSeries, m: int) -> PoincareSeries:
    """Return f(t**m) at the same truncation."""
    if m < 1:
        raise ValueError(f"power must be >= 1, got {m}")
    out = [0] * (f.trunc + 1)
    for i in range(0, f.trunc // m + 1):
        out[i * m] = f.coeffs[i]
    return PoincareSeries(tuple(out), f.trunc)


def sym_square(f: PoincareSeries) -> PoincareSeries:
    """Betti series of SP^2 for an evenly graded space: (f(t)^2 + f(t^2)) / 2."""
    if not f.is_evenly_graded():
        raise ValueError("sym_square needs an evenly graded series")
    if not f.is_nonnegative():
        raise ValueError("sym_square needs nonnegative coefficients")
    square = mul(f, f)
    dilated = substitute_power(f, 2)
    out = []
    for a, b in zip(square.coeffs, dilated.coeffs):
        total = a + b
        # Both terms have the same parity for ranks of an even space.
        assert total % 2 == 0
        out.append(total // 2)
    return PoincareSeries(tuple(out), f.trunc)


def macdonald_sp(f: PoincareSeries, d: int, trunc: int | None = None) -> PoincareSeries:
    """Betti series of the d-th symmetric product of a space with Betti series ``f``.

    Takes the coefficient of y**d in

        prod_j (1 + y t^j)^{b_j}  (j odd)  /  prod_j (1 - y t^j)^{b_j}  (j even)

    expanding each degree's factor group in turn, truncated at y**d and
    t**trunc.  ``trunc`` defaults to (and may not exceed) ``f.trunc``.
    """
    if d < 0:
        raise ValueError(f"symmetric power must be >= 0, got {d}")
    if not f.is_nonnegative():
        raise ValueError("macdonald_sp needs nonnegative coefficients")
    n = f.trunc if trunc is None else trunc
    if n < 0 or n > f.trunc:
        raise ValueError(f"truncation {n} must lie in 0..{f.trunc}")

    # grid[r][k]: coefficient of y^r t^k
    grid = [[0] * (n + 1) for _ in range(d + 1)]
    grid[0][0] = 1
    for j in range(n + 1):
        b = f.coeffs[j]
        if b == 0:
            continue
        if j % 2:
            factor = [comb(b, r) for r in range(d + 1)]
        else:
            factor = [comb(b + r - 1, r) for r in range(d + 1)]
        new = [[0] * (n + 1) for _ in range(d + 1)]
        for r, row in enumerate(grid):
            for k, c in enumerate(row):
                if c == 0:
                    continue
                for s in range(d - r + 1):
                    deg = k + s * j
                    if deg > n:
                        break
                    if factor[s]:
                        new[r + s][deg] += c * factor[s]
        grid = new
    return PoincareSeries(tuple(grid[d]), n)


def gaussian_binomial(m: int, k: int, trunc: int) -> PoincareSeries:
    """Betti series of the Grassmannian of k-planes in C^m, i.e. [m choose k]_q at q = t^2.

    Built from the q-Pascal rule row by row, so only additions and shifts
    are involved.
    """
    if m < 0 or k < 0 or k > m:
        raise ValueError(f"need 0 <= k <= m, got m={m}, k={k}")
    if trunc < 0:
        raise ValueError(f"truncation must be >= 0, got {trunc}")
    # Work in the q variable up to q^(trunc // 2).
    top = trunc // 2
    one = [1] + [0] * top
    row = [one]  # row m' holds [m' choose j]_q for j = 0..min(m', k)
    for mm in range(1, m + 1):
        nxt = []
        for j in range(0, min(mm, k) + 1):
            if j == 0 or j == mm:
                nxt.append(one)
                continue
            left = row[j - 1]
            right = row[j] if j < len(row) else [0] * (top + 1)
            # [mm, j] = [mm-1, j-1] + q^j [mm-1, j]
            coeffs = list(left)
            for e in range(top + 1 - j):
                coeffs[e + j] += right[e]
            nxt.append(coeffs)
        row = nxt
    q_coeffs = row[k]
    out = [0] * (trunc + 1)
    for e, c in enumerate(q_coeffs):
        out[2 * e] = c
    return PoincareSeries(tuple(out), trunc)


def projective_series(m: int, trunc: int) -> PoincareSeries:
    """1 + t^2 + ... + t^(2m), truncated."""
    if m < 0:
        raise ValueError(f"projective dimension must be >= 0, got {m}")
    out = [0] * (trunc + 1)
    for i in range(min(m, trunc // 2) + 1):
        out[2 * i] = 1
    return PoincareSeries(tuple(out), trunc)


def em_series(n: int, trunc: int) -> PoincareSeries:
    """Rational Betti series 1/(1 - t^n) of K(Z, n) for even n.

    Odd n is refused; its rational homology is an exterior algebra and is not
    modelled here.
    """
    if n < 2 or n % 2:
        raise ValueError(f"K(Z, n) is only supported for even n >= 2, got {n}")
    out = [0] * (trunc + 1)
    for i in range(0, trunc + 1, n):
        out[i] = 1
    return PoincareSeries(tuple(out), trunc)


def even_em_product(trunc: int) -> PoincareSeries:
    """Product of K(Z, 2i) over all 2i <= trunc; the same series as BU."""
    if trunc < 0:
        raise ValueError(f"truncation must be >= 0, got {trunc}")
    acc = make_series([1], trunc)
    for n in range(2, trunc + 1, 2):
        acc = mul(acc, em_series(n, trunc))
    return acc


@dataclass(frozen=True)
class PartitionTable:
    values: tuple[int, ...]
    limit: int

    def __getitem__(self, m: int) -> int:
        return self.values[m]


def partition_table(limit: int) -> PartitionTable:
    """p(0..limit) via Euler's pentagonal-number recurrence."""
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    p = [1] + [0] * limit
    for m in range(1, limit + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            j += 1
        p[m] = total
    return PartitionTable(tuple(p), limit)


def partition_count(m: int) -> int:
    if m < 0:
        raise ValueError(f"partition argument must be >= 0, got {m}")
    return partition_table(m)[m]

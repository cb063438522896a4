"""Closed-form integer powers of the loop-chain adjacency matrix.

Every power ``A^r`` (``r`` any integer) is block diagonal with the same 2x2
block in each slot:

    [[F_{r-1}, F_r],
     [F_r,     F_{r+1}]]

With negafibonacci indices this one block covers negative exponents too.
:func:`power_block_binet` evaluates the separate positive/negative entry
formulas written in terms of ``alpha`` and ``beta`` so the two can be checked
against each other.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exactnum import QuadRat, ZERO, alpha, as_integer, beta, quad_pow
from .exmatrix import ExactMatrix
from .fib import fib_pair


@dataclass(frozen=True)
class PowerBlock:
    r: int
    e11: int
    e12: int
    e21: int
    e22: int

    def as_rows(self) -> list[list[int]]:
        return [[self.e11, self.e12], [self.e21, self.e22]]

    def det(self) -> int:
        return self.e11 * self.e22 - self.e12 * self.e21

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based position within the block."""
        return self.as_rows()[i - 1][j - 1]


def power_block(r: int) -> PowerBlock:
    f_r, f_next = fib_pair(r)
    return PowerBlock(r, f_next - f_r, f_r, f_r, f_next)


def power_block_binet(r: int) -> PowerBlock:
    """Block entries from the alpha/beta expressions, evaluated in Q(sqrt 5).

    For ``r > 0``:
        e11 = (-b a^r + a b^r) / (a - b)      e12 = (a^r - b^r) / (a - b)
        e21 = (-b a^(r+1) + a b^(r+1)) / (a - b)
        e22 = (a^(r+1) - b^(r+1)) / (a - b)
    For ``r = -m < 0`` (powers of ``-a``, ``-b``):
        e11 = ((-b)^(m+1) - (-a)^(m+1)) / (a - b)
        e22 = (-b (-a)^m + a (-b)^m) / (a - b)
        e12 = (-b (-a)^(m+1) + a (-b)^(m+1)) / (a - b)
        e21 = ((-b)^m - (-a)^m) / (a - b)
    ``r = 0`` is the identity.
    """
    if r == 0:
        return PowerBlock(0, 1, 0, 0, 1)
    a, b = alpha(), beta()
    s = (a - b).inverse()

    def p(x: QuadRat, e: int) -> QuadRat:
        return quad_pow(x, e)

    if r > 0:
        e11 = (-b * p(a, r) + a * p(b, r)) * s
        e12 = (p(a, r) - p(b, r)) * s
        e21 = (-b * p(a, r + 1) + a * p(b, r + 1)) * s
        e22 = (p(a, r + 1) - p(b, r + 1)) * s
    else:
        m = -r
        na, nb = -a, -b
        e11 = (p(nb, m + 1) - p(na, m + 1)) * s
        e22 = (-b * p(na, m) + a * p(nb, m)) * s
        e12 = (-b * p(na, m + 1) + a * p(nb, m + 1)) * s
        e21 = (p(nb, m) - p(na, m)) * s
    return PowerBlock(r, *(as_integer(x) for x in (e11, e12, e21, e22)))


def _check_k(k: int):
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")


def matrix_power_closed(k: int, r: int) -> ExactMatrix:
    _check_k(k)
    blk = power_block(r)
    q11, q12, q22 = (QuadRat(x) if x else ZERO for x in (blk.e11, blk.e12, blk.e22))
    n = 2 * k
    entries = [ZERO] * (n * n)
    for top in range(0, n, 2):
        base = top * n + top
        entries[base] = q11
        entries[base + 1] = q12
        entries[base + n] = q12
        entries[base + n + 1] = q22
    return ExactMatrix._wrap(n, n, tuple(entries))


def det_closed(k: int) -> int:
    _check_k(k)
    return -1 if k % 2 else 1


def entry_closed(k: int, i: int, j: int, r: int) -> int:
    """Entry ``(i, j)`` (1-based) of ``A^r`` without building the matrix."""
    _check_k(k)
    n = 2 * k
    for idx in (i, j):
        if not 1 <= idx <= n:
            raise IndexError(f"index {idx} out of range 1..{n}")
    if (i + 1) // 2 != (j + 1) // 2:
        return 0
    return power_block(r).entry(2 - i % 2, 2 - j % 2)

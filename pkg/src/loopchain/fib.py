"""Fibonacci numbers for every signed index.

``F_0 = 0``, ``F_1 = 1`` and ``F_{n+2} = F_{n+1} + F_n`` for all integers
``n``; running the recurrence backwards gives ``F_{-n} = (-1)**(n+1) * F_n``.
"""
from __future__ import annotations

from .exactnum import QuadRat, alpha, beta, quad_pow


def _fib_pair(n: int) -> tuple[int, int]:
    """Return ``(F_n, F_{n+1})`` for ``n >= 0`` by fast doubling."""
    a, b = 0, 1
    for bit in bin(n)[2:]:
        # (F_m, F_{m+1}) -> (F_2m, F_2m+1)
        c = a * ((b << 1) - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fib_pair(n: int) -> tuple[int, int]:
    """Return ``(F_n, F_{n+1})`` for any integer ``n``."""
    if n >= 0:
        return _fib_pair(n)
    # F_{n+1} = F_{-(m-1)} with m = -n
    m = -n
    fm, fm1 = _fib_pair(m)
    f_n = fm if m & 1 else -fm
    f_prev = fm1 - fm  # F_{m-1}
    f_n1 = -f_prev if m & 1 else f_prev
    return f_n, f_n1


def fib(n: int) -> int:
    """Exact ``F_n`` in O(log |n|) big-integer multiplications."""
    if n >= 0:
        return _fib_pair(n)[0]
    f = _fib_pair(-n)[0]
    return f if n & 1 else -f


def fib_naive(n: int) -> int:
    """Walk the recurrence one step at a time (forwards or backwards).

    Linear time; kept as a structurally independent check on :func:`fib`.
    """
    a, b = 0, 1  # F_i, F_{i+1} at i = 0
    if n >= 0:
        for _ in range(n):
            a, b = b, a + b
        return a
    for _ in range(-n):
        a, b = b - a, a
    return a


def binet_exact(n: int) -> QuadRat:
    """``(alpha**n - beta**n) / (alpha - beta)`` evaluated in Q(sqrt 5)."""
    a, b = alpha(), beta()
    return (quad_pow(a, n) - quad_pow(b, n)) / (a - b)

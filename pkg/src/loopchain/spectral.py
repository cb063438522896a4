"""Exact eigen-decomposition ``A = T J T^-1`` of the loop-chain adjacency matrix.

``J = diag(alpha, ..., alpha, beta, ..., beta)`` (k copies each).  Columns of
``T`` are laid out in reversed block order: the eigenvector for column ``c``
(and for column ``k + c``) lives in block ``k - c + 1``, i.e. rows
``2(k-c)+1`` and ``2(k-c)+2`` (1-based).

``T^-1`` is assembled from the 2x2 block inverse

    [[1, 1], [alpha, beta]]^-1 = 1/(alpha - beta) * [[-beta, 1], [alpha, -1]]

rather than read off a printed layout.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exactnum import ONE, ZERO, QuadRat, alpha, beta
from .exmatrix import ExactMatrix, diag_pow, mat_mul
from .graphfam import build_adjacency


def _check_k(k: int):
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")


def _block_row(k: int, c: int) -> int:
    """0-based first row of the block holding eigenvector column ``c`` (1-based)."""
    return 2 * (k - c)


def eigenvalues(k: int) -> list[QuadRat]:
    _check_k(k)
    return [alpha()] * k + [beta()] * k


def jordan_form(k: int) -> ExactMatrix:
    return ExactMatrix.diagonal(eigenvalues(k))


def transform_matrix(k: int) -> ExactMatrix:
    _check_k(k)
    n = 2 * k
    a, b = alpha(), beta()
    entries = [ZERO] * (n * n)
    for c in range(1, k + 1):
        top = _block_row(k, c)
        entries[top * n + (c - 1)] = ONE
        entries[(top + 1) * n + (c - 1)] = a
        entries[top * n + (k + c - 1)] = ONE
        entries[(top + 1) * n + (k + c - 1)] = b
    return ExactMatrix._wrap(n, n, tuple(entries))


def transform_inverse(k: int) -> ExactMatrix:
    _check_k(k)
    n = 2 * k
    a, b = alpha(), beta()
    s = (a - b).inverse()
    neg_b, pos_a, pos_one, neg_one = -b * s, a * s, s, -s
    entries = [ZERO] * (n * n)
    for c in range(1, k + 1):
        col = _block_row(k, c)
        alpha_row, beta_row = c - 1, k + c - 1
        entries[alpha_row * n + col] = neg_b
        entries[alpha_row * n + col + 1] = pos_one
        entries[beta_row * n + col] = pos_a
        entries[beta_row * n + col + 1] = neg_one
    return ExactMatrix._wrap(n, n, tuple(entries))


@dataclass(frozen=True)
class JordanDecomposition:
    j: ExactMatrix
    t: ExactMatrix
    t_inv: ExactMatrix

    @classmethod
    def of(cls, k: int) -> "JordanDecomposition":
        return cls(jordan_form(k), transform_matrix(k), transform_inverse(k))

    def power(self, r: int) -> ExactMatrix:
        """``T J^r T^-1``."""
        return mat_mul(mat_mul(self.t, diag_pow(self.j, r)), self.t_inv)


def spectral_power(k: int, r: int) -> ExactMatrix:
    return JordanDecomposition.of(k).power(r)


def eigenvector_residuals(k: int) -> list[ExactMatrix]:
    """``A T_c - lambda_c T_c`` for every column ``c``; all zero when T is right."""
    a = build_adjacency(k)
    t = transform_matrix(k)
    lams = eigenvalues(k)
    out = []
    for c in range(2 * k):
        col = ExactMatrix(2 * k, 1, t.column(c))
        out.append(mat_mul(a, col) - col.scale(lams[c]))
    return out


def verify_similarity(k: int) -> bool:
    d = JordanDecomposition.of(k)
    n = 2 * k
    if mat_mul(d.t, d.t_inv) != ExactMatrix.identity(n):
        return False
    return mat_mul(mat_mul(d.t, d.j), d.t_inv) == build_adjacency(k)

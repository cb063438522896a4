"""Dense exact matrices over Q(sqrt 5).

This is the general-purpose kernel: it knows nothing about the block
structure of the loop-chain adjacency matrices, which is what lets it act
as an independent check on the closed forms in :mod:`loopchain.closedpower`.

Indices on :class:`ExactMatrix` are 0-based (``m[i, j]``).
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from operator import mul
from typing import Iterable, Sequence

from .exactnum import ONE, ZERO, QuadRat, Scalar, quad_pow


class DimensionError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


class ExactMatrix:
    """Immutable dense row-major matrix of :class:`QuadRat` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Scalar]):
        if rows < 1 or cols < 1:
            raise DimensionError(f"matrix dimensions must be positive, got {rows}x{cols}")
        entries = tuple(QuadRat.coerce(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionError(
                f"expected {rows * cols} entries for {rows}x{cols}, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def _wrap(cls, rows: int, cols: int, entries: tuple) -> "ExactMatrix":
        # trusted constructor: entries already a tuple of QuadRat
        m = object.__new__(cls)
        m.rows, m.cols, m.entries = rows, cols, entries
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]]) -> "ExactMatrix":
        if not rows or not rows[0]:
            raise DimensionError("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), width, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        entries = [ZERO] * (n * n)
        for i in range(n):
            entries[i * n + i] = ONE
        return cls._wrap(n, n, tuple(entries))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls._wrap(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> "ExactMatrix":
        n = len(values)
        entries = [ZERO] * (n * n)
        for i, v in enumerate(values):
            entries[i * n + i] = QuadRat.coerce(v)
        return cls._wrap(n, n, tuple(entries))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> QuadRat:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {index} out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[list[QuadRat]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_int_rows(self) -> list[list[int]]:
        """Entries as Python ints; raises if any entry is not an integer."""
        out = []
        for r in self.to_rows():
            row = []
            for x in r:
                if not x.is_integer():
                    raise ValueError(f"entry {x} is not an integer")
                row.append(x.rat.numerator)
            out.append(row)
        return out

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix._wrap(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.transpose()

    def is_rational(self) -> bool:
        return all(not e.irr for e in self.entries)

    def trace(self) -> QuadRat:
        self._require_square("trace")
        return sum((self.entries[i * self.cols + i] for i in range(self.rows)), ZERO)

    def nonzero_count(self) -> int:
        return sum(1 for e in self.entries if e)

    def _require_square(self, what: str):
        if not self.is_square:
            raise DimensionError(f"{what} needs a square matrix, got {self.rows}x{self.cols}")

    # -- elementwise ---------------------------------------------------

    def _zip(self, other: "ExactMatrix", op) -> "ExactMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError(
                f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )
        return ExactMatrix._wrap(
            self.rows, self.cols, tuple(op(a, b) for a, b in zip(self.entries, other.entries))
        )

    def __add__(self, other):
        return self._zip(other, QuadRat.__add__)

    def __sub__(self, other):
        return self._zip(other, QuadRat.__sub__)

    def scale(self, c: Scalar) -> "ExactMatrix":
        c = QuadRat.coerce(c)
        return ExactMatrix._wrap(self.rows, self.cols, tuple(c * e for e in self.entries))

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"

    def __str__(self):
        cells = [[str(x) for x in r] for r in self.to_rows()]
        width = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


# -- multiplication -----------------------------------------------------------
#
# Q(sqrt 5) products split into four rational products; each rational matrix
# is scaled to integers over a common denominator so the inner loop is plain
# int arithmetic.


def _scaled_part(m: ExactMatrix, attr: str):
    vals = [getattr(e, attr) for e in m.entries]
    if not any(vals):
        return None
    den = lcm(*(v.denominator for v in vals))
    if den == 1:
        nums = [v.numerator for v in vals]
    else:
        nums = [v.numerator * (den // v.denominator) for v in vals]
    return den, nums


def _int_product(left, right, n: int, m: int, p: int):
    """Integer (n x m) @ (m x p) on flat row-major lists; returns flat list."""
    lrows = [left[i * m:(i + 1) * m] for i in range(n)]
    rcols = [right[j::p] for j in range(p)]
    return [sum(map(mul, r, c)) for r in lrows for c in rcols]


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    n, m, p = a.rows, a.cols, b.cols
    ar, ai = _scaled_part(a, "rat"), _scaled_part(a, "irr")
    br, bi = _scaled_part(b, "rat"), _scaled_part(b, "irr")

    # each term: (coefficient, denominator, flat integer product)
    rat_terms, irr_terms = [], []
    if ar and br:
        rat_terms.append((1, ar[0] * br[0], _int_product(ar[1], br[1], n, m, p)))
    if ai and bi:
        rat_terms.append((5, ai[0] * bi[0], _int_product(ai[1], bi[1], n, m, p)))
    if ar and bi:
        irr_terms.append((1, ar[0] * bi[0], _int_product(ar[1], bi[1], n, m, p)))
    if ai and br:
        irr_terms.append((1, ai[0] * br[0], _int_product(ai[1], br[1], n, m, p)))

    rat = _combine(rat_terms, n * p)
    irr = _combine(irr_terms, n * p)
    return ExactMatrix._wrap(n, p, tuple(_entry(x, y) for x, y in zip(rat, irr)))


def _combine(terms, size: int) -> list[Fraction]:
    if not terms:
        return [Fraction(0)] * size
    den = lcm(*(d for _, d, _ in terms))
    acc = [0] * size
    for coef, d, vals in terms:
        f = coef * (den // d)
        if f == 1:
            acc = [x + y for x, y in zip(acc, vals)]
        else:
            acc = [x + f * y for x, y in zip(acc, vals)]
    if den == 1:
        return [Fraction(x) for x in acc]
    return [Fraction(x, den) for x in acc]


def _entry(rat: Fraction, irr: Fraction) -> QuadRat:
    if not rat and not irr:
        return ZERO
    return QuadRat._make(rat, irr)


# -- powers, elimination ----------------------------------------------------


def mat_pow(a: ExactMatrix, r: int) -> ExactMatrix:
    """``a**r`` by binary exponentiation; negative ``r`` goes through the inverse."""
    a._require_square("mat_pow")
    if r < 0:
        a = mat_inverse(a)
        r = -r
    result = ExactMatrix.identity(a.rows)
    first = True
    while r:
        if r & 1:
            result = a if first else mat_mul(result, a)
            first = False
        r >>= 1
        if r:
            a = mat_mul(a, a)
    return result


def _eliminate(a: ExactMatrix, with_inverse: bool):
    """Gauss-Jordan with first-nonzero pivoting.

    Returns ``(det, inverse)``; ``inverse`` is None when not requested or
    when the matrix is singular (then ``det`` is zero).
    """
    a._require_square("elimination")
    n = a.rows
    work = [list(r) for r in a.to_rows()]
    inv = ExactMatrix.identity(n).to_rows() if with_inverse else None
    det = ONE
    for col in range(n):
        pivot = next((i for i in range(col, n) if work[i][col]), None)
        if pivot is None:
            return ZERO, None
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            if inv is not None:
                inv[col], inv[pivot] = inv[pivot], inv[col]
            det = -det
        p = work[col][col]
        det = det * p
        p_inv = p.inverse()
        work[col] = [x * p_inv for x in work[col]]
        if inv is not None:
            inv[col] = [x * p_inv for x in inv[col]]
        targets = range(n) if with_inverse else range(col + 1, n)
        for i in targets:
            if i == col:
                continue
            f = work[i][col]
            if not f:
                continue
            work[i] = [x - f * y for x, y in zip(work[i], work[col])]
            if inv is not None:
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[col])]
    if inv is None:
        return det, None
    return det, ExactMatrix._wrap(n, n, tuple(x for r in inv for x in r))


def mat_inverse(a: ExactMatrix) -> ExactMatrix:
    _, inv = _eliminate(a, with_inverse=True)
    if inv is None:
        raise SingularMatrixError("matrix is singular")
    return inv


def mat_det(a: ExactMatrix) -> QuadRat:
    return _eliminate(a, with_inverse=False)[0]


# -- polynomials ----------------------------------------------------------------


class IntPolynomial:
    """Polynomial with exact rational coefficients, constant term first.

    Trailing zeros are stripped, so the zero polynomial has no coefficients.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable):
        cs = [Fraction(c) for c in coefficients]
        while cs and not cs[-1]:
            cs.pop()
        self.coefficients = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coefficients or not other.coefficients:
            return IntPolynomial(())
        out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(out)

    def __pow__(self, e: int) -> "IntPolynomial":
        return poly_pow(self, e)

    def __call__(self, x: Scalar) -> QuadRat:
        acc = ZERO
        x = QuadRat.coerce(x)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def int_coefficients(self) -> list[int]:
        out = []
        for c in self.coefficients:
            if c.denominator != 1:
                raise ValueError(f"coefficient {c} is not an integer")
            out.append(c.numerator)
        return out

    def __repr__(self):
        return f"IntPolynomial({[str(c) for c in self.coefficients]})"

    def __str__(self):
        if not self.coefficients:
            return "0"
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coefficients[d]
            if not c:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "x" if d == 1 else f"x^{d}"
                body = var if mag == 1 else f"{mag}*{var}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_pow(p: IntPolynomial, e: int) -> IntPolynomial:
    if e < 0:
        raise ValueError("polynomial exponent must be non-negative")
    result = IntPolynomial((1,))
    for _ in range(e):
        result = result * p
    return result


def char_poly(a: ExactMatrix) -> IntPolynomial:
    """``det(xI - a)`` via the Faddeev-LeVerrier recurrence.

    ``M_0 = 0``, ``c_n = 1``; ``M_k = a M_{k-1} + c_{n-k+1} I`` and
    ``c_{n-k} = -tr(a M_k) / k``.
    """
    a._require_square("char_poly")
    if not a.is_rational():
        raise ValueError("char_poly expects a rational matrix")
    n = a.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    ident = ExactMatrix.identity(n)
    m = ExactMatrix.zeros(n)
    for k in range(1, n + 1):
        m = mat_mul(a, m) + ident.scale(coeffs[n - k + 1])
        am = mat_mul(a, m)
        coeffs[n - k] = -am.trace().rat / k
    return IntPolynomial(coeffs)


def diag_pow(d: ExactMatrix, r: int) -> ExactMatrix:
    """Power of a diagonal matrix, entrywise on the diagonal."""
    d._require_square("diag_pow")
    return ExactMatrix.diagonal([quad_pow(d[i, i], r) for i in range(d.rows)])

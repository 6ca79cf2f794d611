"""Exact rationals and univariate polynomials in ``q`` over Q.

Rationals are plain :class:`fractions.Fraction` values, collapsed to ``int``
whenever the denominator is 1 so that the common all-integer case stays on
Python's fast integer path.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]

__all__ = [
    "Rational",
    "QPolynomial",
    "as_rational",
    "format_rational",
    "parse_rational",
    "poly_arith",
    "poly_eval",
    "solve_left",
    "inverse",
    "determinant",
    "ZERO",
    "ONE",
    "Q",
]


def as_rational(x) -> Rational:
    """Canonical rational: ``int`` when integral, else a reduced ``Fraction``."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_rational(text: str) -> Rational:
    return as_rational(Fraction(text.strip()))


def format_rational(x: Rational):
    """JSON form: integers stay integers, other rationals become ``"num/den"``."""
    x = as_rational(x)
    if isinstance(x, int):
        return x
    return f"{x.numerator}/{x.denominator}"


class QPolynomial:
    """Immutable polynomial in ``q`` with rational coefficients.

    ``coeffs[k]`` is the coefficient of ``q**k``; trailing zeros are trimmed so
    structurally equal objects are equal polynomials. The zero polynomial has
    an empty coefficient tuple.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: list) -> "QPolynomial":
        # coeffs already canonical rationals; only trimming left to do
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> "QPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "QPolynomial":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _coerce(self, other) -> "QPolynomial":
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QPolynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = as_rational(out[k] + c)
        return QPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return QPolynomial._raw([as_rational(c) for c in out])

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, q0) -> Rational:
        return poly_eval(self, q0)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("QPolynomial", self.coeffs))
        return self._hash

    def to_json(self) -> list:
        return [format_rational(c) for c in self.coeffs]

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if k == 0:
                body = str(mag)
            else:
                qpart = "q" if k == 1 else f"q^{k}"
                body = qpart if mag == 1 else f"{mag}*{qpart}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


ZERO = QPolynomial()
ONE = QPolynomial((1,))
Q = QPolynomial((0, 1))


def poly_arith(op: str, a: QPolynomial, b: QPolynomial) -> QPolynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_eval(a: QPolynomial, q0) -> Rational:
    """Horner evaluation; ``poly_eval(a, 0)`` is the constant term."""
    q0 = as_rational(q0)
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * q0 + c
    return as_rational(acc)


def _gauss(rows: list[list], rhs: list[list] | None = None):
    # In-place Gauss-Jordan over Q. Returns (rank, sign, pivot columns).
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    sign = 1
    r = 0
    pivots = []
    for c in range(n_cols):
        piv = next((k for k in range(r, n_rows) if rows[k][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            if rhs is not None:
                rhs[r], rhs[piv] = rhs[piv], rhs[r]
            sign = -sign
        inv = Fraction(1) / rows[r][c]
        for k in range(n_rows):
            if k != r and rows[k][c] != 0:
                f = rows[k][c] * inv
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
                if rhs is not None:
                    rhs[k] = [x - f * y for x, y in zip(rhs[k], rhs[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return r, sign, pivots


def determinant(matrix: Sequence[Sequence]) -> Rational:
    """Exact determinant of a square rational matrix."""
    n = len(matrix)
    if n == 0:
        return 1
    rows = [[Fraction(x) for x in row] for row in matrix]
    if any(len(row) != n for row in rows):
        raise ValueError("matrix is not square")
    # eliminate below the diagonal only, tracking the product of pivots
    det = Fraction(1)
    for c in range(n):
        piv = next((k for k in range(c, n) if rows[k][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        inv = 1 / rows[c][c]
        for k in range(c + 1, n):
            if rows[k][c] != 0:
                f = rows[k][c] * inv
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[c])]
    return as_rational(det)


def solve_left(matrix: Sequence[Sequence], vector: Sequence) -> list[Rational]:
    """Solve ``x @ matrix == vector`` for a square invertible rational matrix."""
    n = len(matrix)
    # transpose so the unknowns index columns: matrix^T x^T = vector^T
    rows = [[Fraction(matrix[r][c]) for r in range(n)] for c in range(n)]
    rhs = [[Fraction(v)] for v in vector]
    rank, _, _ = _gauss(rows, rhs)
    if rank < n:
        raise ZeroDivisionError("matrix is singular")
    return [as_rational(rhs[k][0] / rows[k][k]) for k in range(n)]


def inverse(matrix: Sequence[Sequence]) -> list[list[Rational]]:
    """Exact inverse of a square invertible rational matrix."""
    n = len(matrix)
    rows = [[Fraction(x) for x in row] for row in matrix]
    rhs = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    rank, _, _ = _gauss(rows, rhs)
    if rank < n:
        raise ZeroDivisionError("matrix is singular")
    return [[as_rational(x / rows[k][k]) for x in rhs[k]] for k in range(n)]

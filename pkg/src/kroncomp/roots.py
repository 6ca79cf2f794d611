"""Kronecker root lattice: dimension vectors, Euler form, Schur roots and orders."""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "DimVector",
    "SchurRoot",
    "PositiveRoot",
    "Prep",
    "Prei",
    "DELTA",
    "Iso",
    "euler_form",
    "hom_ext_generic",
    "schur_compare",
    "root_compare",
    "parse_root",
    "parse_dim",
]


@dataclass(frozen=True)
class DimVector:
    """Dimension vector ``(a_i, a_j)``: source vertex ``i``, sink vertex ``j``."""

    i: int
    j: int

    def __post_init__(self):
        if self.i < 0 or self.j < 0:
            raise ValueError(f"negative dimension vector ({self.i}, {self.j})")

    def __add__(self, other: "DimVector") -> "DimVector":
        return DimVector(self.i + other.i, self.j + other.j)

    def __sub__(self, other: "DimVector") -> "DimVector":
        return DimVector(self.i - other.i, self.j - other.j)

    def __mul__(self, k: int) -> "DimVector":
        return DimVector(k * self.i, k * self.j)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.i
        yield self.j

    def fits_in(self, other: "DimVector") -> bool:
        """Componentwise ``self <= other``."""
        return self.i <= other.i and self.j <= other.j

    def total(self) -> int:
        return self.i + self.j

    def __str__(self):
        return f"[{self.i},{self.j}]"


ZERO_DIM = DimVector(0, 0)


def euler_form(a: DimVector, b: DimVector) -> int:
    return a.i * b.i + a.j * b.j - 2 * a.i * b.j


@dataclass(frozen=True)
class SchurRoot:
    """``P(m)``, ``delta`` or ``I(n)``; ``kind`` is one of ``"P"``, ``"delta"``, ``"I"``."""

    kind: str
    index: int = 0

    def __post_init__(self):
        if self.kind not in ("P", "delta", "I"):
            raise ValueError(f"unknown Schur root kind {self.kind!r}")
        if self.index < 0 or (self.kind == "delta" and self.index != 0):
            raise ValueError(f"bad index for {self.kind}: {self.index}")

    @property
    def dim(self) -> DimVector:
        if self.kind == "P":
            return DimVector(self.index, self.index + 1)
        if self.kind == "I":
            return DimVector(self.index + 1, self.index)
        return DimVector(1, 1)

    def sort_key(self):
        if self.kind == "P":
            return (0, self.index)
        if self.kind == "delta":
            return (1, 0)
        return (2, -self.index)

    def __lt__(self, other: "SchurRoot"):
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "SchurRoot"):
        return self.sort_key() <= other.sort_key()

    def __str__(self):
        return "delta" if self.kind == "delta" else f"{self.kind}({self.index})"

    __repr__ = __str__


def Prep(m: int) -> SchurRoot:
    return SchurRoot("P", m)


def Prei(n: int) -> SchurRoot:
    return SchurRoot("I", n)


DELTA = SchurRoot("delta")


@dataclass(frozen=True)
class PositiveRoot:
    """``P(m)``, ``I(n)`` or the imaginary root ``s*delta`` (``kind == "iso"``)."""

    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in ("P", "iso", "I"):
            raise ValueError(f"unknown positive root kind {self.kind!r}")
        if self.index < (1 if self.kind == "iso" else 0):
            raise ValueError(f"bad index for {self.kind}: {self.index}")

    @property
    def dim(self) -> DimVector:
        if self.kind == "P":
            return DimVector(self.index, self.index + 1)
        if self.kind == "I":
            return DimVector(self.index + 1, self.index)
        return DimVector(self.index, self.index)

    def sort_key(self):
        if self.kind == "P":
            return (0, self.index)
        if self.kind == "iso":
            return (1, -self.index)
        return (2, -self.index)

    def __lt__(self, other: "PositiveRoot"):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if self.kind == "iso":
            return "delta" if self.index == 1 else f"{self.index}*delta"
        return f"{self.kind}({self.index})"

    __repr__ = __str__


def Iso(s: int) -> PositiveRoot:
    return PositiveRoot("iso", s)


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def schur_compare(x: SchurRoot, y: SchurRoot) -> int:
    """-1, 0, 1 for P(m) < P(m+1) < delta < I(n+1) < I(n)."""
    return _cmp(x.sort_key(), y.sort_key())


def root_compare(x: PositiveRoot, y: PositiveRoot) -> int:
    """-1, 0, 1 for P(m) < P(m+1) < (s+1)delta < s*delta < I(n+1) < I(n)."""
    return _cmp(x.sort_key(), y.sort_key())


def hom_ext_generic(x: SchurRoot, y: SchurRoot) -> tuple[int, int]:
    """Generic ``(dim Hom, dim Ext^1)`` from a general ``x`` to a general ``y``.

    Two copies of ``delta`` are taken at distinct points of P^1, so
    ``hom_ext_generic(DELTA, DELTA) == (0, 0)``.
    """
    a, b = x.kind, y.kind
    m, n = x.index, y.index
    if a == "P" and b == "P":
        hom, ext = max(0, n - m + 1), max(0, m - n - 1)
    elif a == "I" and b == "I":
        hom, ext = max(0, m - n + 1), max(0, n - m - 1)
    elif a == "P" and b == "I":
        hom, ext = m + n, 0
    elif a == "I" and b == "P":
        hom, ext = 0, m + n + 2
    elif a == "P" and b == "delta":
        hom, ext = 1, 0
    elif a == "delta" and b == "P":
        hom, ext = 0, 1
    elif a == "delta" and b == "I":
        hom, ext = 1, 0
    elif a == "I" and b == "delta":
        hom, ext = 0, 1
    else:
        hom, ext = 0, 0
    assert hom - ext == euler_form(x.dim, y.dim)
    return hom, ext


_ROOT_RE = re.compile(r"^\s*(?:(P|I)\s*\(\s*(\d+)\s*\)|(?:(\d+)\s*\*\s*)?delta)\s*$")


def parse_root(text: str):
    """Parse ``"P(m)"``, ``"I(n)"``, ``"delta"`` or ``"s*delta"``.

    Returns a :class:`SchurRoot` except for ``s*delta`` with ``s >= 2``,
    which is only a :class:`PositiveRoot`.
    """
    match = _ROOT_RE.match(text)
    if not match:
        raise ValueError(f"cannot parse root literal {text!r}")
    kind, idx, mult = match.groups()
    if kind:
        return SchurRoot(kind, int(idx))
    s = int(mult) if mult else 1
    if s == 1:
        return DELTA
    return Iso(s)


_DIM_RE = re.compile(r"^\s*\[?\s*(\d+)\s*,\s*(\d+)\s*\]?\s*$")


def parse_dim(text: str) -> DimVector:
    match = _DIM_RE.match(text)
    if not match:
        raise ValueError(f"cannot parse dimension vector {text!r}")
    return DimVector(int(match.group(1)), int(match.group(2)))

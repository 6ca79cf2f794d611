"""Brute-force Hall algebra of Kronecker representations over F_2 and F_3.

A representation of dimension ``(a_i, a_j)`` is a pair of ``a_j x a_i``
matrices ``(A, B)``. Isomorphism classes are orbits of
``GL(a_i) x GL(a_j)`` acting by ``(A, B) -> (g A h, g B h)``; every class is
named by the smallest integer code in its orbit, and a full lookup table
``code -> canonical code`` is built once per dimension vector.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from ..algebra import I_, P_, R_, AlgebraElement, gen_str, word_grade
from ..exactq import Rational, as_rational, poly_eval
from ..roots import DimVector
from . import _kernels
from .ffield import check_prime, gl_matrices, nullspace_mod_p, subspaces

log = logging.getLogger(__name__)

__all__ = [
    "BudgetExceeded",
    "FFRep",
    "IsoClass",
    "HallElement",
    "DEFAULT_BUDGET",
    "enumerate_classes",
    "canonical_class",
    "class_from_id",
    "build_indec",
    "hom_space",
    "hom_dim",
    "hall_number",
    "hall_product",
    "simple",
    "realize",
    "realize_generator",
    "realize_word",
    "letters_product",
    "set_budget",
]

DEFAULT_BUDGET = {2: 2**18, 3: 3**12}


class BudgetExceeded(RuntimeError):
    """The representation space is larger than the configured enumeration budget."""


def _weights(p: int, nj: int, ni: int) -> np.ndarray:
    return p ** np.arange(2 * nj * ni, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class FFRep:
    p: int
    dim: DimVector
    A: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        A = np.asarray(self.A, dtype=np.int64).reshape(self.dim.j, self.dim.i) % self.p
        B = np.asarray(self.B, dtype=np.int64).reshape(self.dim.j, self.dim.i) % self.p
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    @property
    def code(self) -> int:
        w = _weights(self.p, self.dim.j, self.dim.i)
        return int(np.concatenate([self.A.ravel(), self.B.ravel()]) @ w)

    @classmethod
    def decode(cls, code: int, p: int, dim: DimVector) -> "FFRep":
        n = dim.i * dim.j
        digits = []
        for _ in range(2 * n):
            code, d = divmod(code, p)
            digits.append(d)
        arr = np.array(digits, dtype=np.int64)
        return cls(p, dim, arr[:n], arr[n:])

    def __add__(self, other: "FFRep") -> "FFRep":
        """Direct sum."""
        if self.p != other.p:
            raise ValueError("direct sum over different fields")
        dim = self.dim + other.dim
        A = np.zeros((dim.j, dim.i), dtype=np.int64)
        B = np.zeros_like(A)
        A[:self.dim.j, :self.dim.i] = self.A
        B[:self.dim.j, :self.dim.i] = self.B
        A[self.dim.j:, self.dim.i:] = other.A
        B[self.dim.j:, self.dim.i:] = other.B
        return FFRep(self.p, dim, A, B)

    def iso_class(self) -> "IsoClass":
        return canonical_class(self)

    def __eq__(self, other):
        return (isinstance(other, FFRep) and self.p == other.p and self.dim == other.dim
                and np.array_equal(self.A, other.A) and np.array_equal(self.B, other.B))

    def __repr__(self):
        return f"FFRep(p={self.p}, dim={self.dim}, A={self.A.tolist()}, B={self.B.tolist()})"


@dataclass(frozen=True, order=True)
class IsoClass:
    """An isomorphism class, named by the minimal code of its orbit."""

    p: int
    dim: DimVector
    code: int

    @property
    def rep(self) -> FFRep:
        return FFRep.decode(self.code, self.p, self.dim)

    @property
    def id(self) -> str:
        return f"{self.dim.i},{self.dim.j}:{self.code:x}"

    def __str__(self):
        return f"[{self.id}]"

    __repr__ = __str__


def class_from_id(text: str, p: int) -> IsoClass:
    """Inverse of :attr:`IsoClass.id`; the code must already be canonical."""
    try:
        dims, hexcode = text.split(":")
        ai, aj = (int(t) for t in dims.split(","))
        code = int(hexcode, 16)
    except ValueError:
        raise ValueError(f"bad class id {text!r}; expected 'a_i,a_j:hex'") from None
    dim = DimVector(ai, aj)
    table = _class_table(p, dim)
    if code >= len(table.canon) or table.canon[code] != code:
        raise ValueError(f"{text!r} is not a canonical class representative over F_{p}")
    return IsoClass(p, dim, code)


@dataclass
class _ClassTable:
    canon: np.ndarray
    classes: list


_BUDGET = dict(DEFAULT_BUDGET)


def set_budget(p: int, limit: int) -> None:
    _BUDGET[check_prime(p)] = int(limit)


def _check_budget(p: int, dim: DimVector, budget: Optional[int]):
    size = p ** (2 * dim.i * dim.j)
    limit = _BUDGET[p] if budget is None else budget
    if size > limit:
        raise BudgetExceeded(f"Rep({dim.i},{dim.j})(F_{p}) has {size} points, budget {limit}")


def _class_table(p: int, dim: DimVector) -> _ClassTable:
    # the budget applies on every lookup, not only when the table is first built
    _check_budget(check_prime(p), dim, None)
    return _build_class_table(p, dim)


@lru_cache(maxsize=None)
def _build_class_table(p: int, dim: DimVector) -> _ClassTable:
    ni, nj = dim.i, dim.j
    size = p ** (2 * ni * nj)
    canon = np.full(size, -1, dtype=np.int64)
    gi = gl_matrices(ni, p)
    gj = gl_matrices(nj, p)
    w = _weights(p, nj, ni)
    classes = []
    nxt = 0
    while nxt < size:
        if canon[nxt] >= 0:
            nxt += 1
            continue
        rep = FFRep.decode(nxt, p, dim)
        codes = _kernels.orbit_codes(rep.A, rep.B, gj, gi, p, w)
        canon[codes] = nxt
        classes.append(IsoClass(p, dim, nxt))
        nxt += 1
    log.debug("Rep%s over F_%d: %d classes", tuple(dim), p, len(classes))
    canon.setflags(write=False)
    return _ClassTable(canon, classes)


def enumerate_classes(alpha: DimVector, p: int, budget: Optional[int] = None) -> list[IsoClass]:
    """All isomorphism classes of representations of dimension ``alpha`` over F_p."""
    if budget is not None:
        _check_budget(check_prime(p), alpha, budget)
    return list(_class_table(p, alpha).classes)


def canonical_class(rep: FFRep) -> IsoClass:
    table = _class_table(rep.p, rep.dim)
    return IsoClass(rep.p, rep.dim, int(table.canon[rep.code]))


def build_indec(label: str, p: int) -> FFRep:
    """Matrix model of ``"P(m)"`` or ``"I(n)"``."""
    kind, idx = label[0], int(label[2:-1])
    if kind == "P":
        m = idx
        A = np.vstack([np.eye(m, dtype=np.int64), np.zeros((1, m), dtype=np.int64)])
        B = np.vstack([np.zeros((1, m), dtype=np.int64), np.eye(m, dtype=np.int64)])
        return FFRep(p, DimVector(m, m + 1), A, B)
    if kind == "I":
        n = idx
        A = np.hstack([np.eye(n, dtype=np.int64), np.zeros((n, 1), dtype=np.int64)])
        B = np.hstack([np.zeros((n, 1), dtype=np.int64), np.eye(n, dtype=np.int64)])
        return FFRep(p, DimVector(n + 1, n), A, B)
    raise ValueError(f"unknown indecomposable label {label!r}")


def hom_space(M: FFRep, N: FFRep) -> list[tuple[np.ndarray, np.ndarray]]:
    """Basis of Hom(M, N) as pairs ``(f_i, f_j)`` with ``N.A f_i = f_j M.A`` (same for B)."""
    if M.p != N.p:
        raise ValueError("representations over different fields")
    p = M.p
    mi, mj = M.dim.i, M.dim.j
    ni, nj = N.dim.i, N.dim.j
    n_fi, n_fj = ni * mi, nj * mj
    if n_fi + n_fj == 0:
        return []
    blocks = []
    for X, Y in ((M.A, N.A), (M.B, N.B)):
        # row-major vec: vec(Y f_i) = kron(Y, I) vec(f_i), vec(f_j X) = kron(I, X^T) vec(f_j)
        left = np.kron(Y, np.eye(mi, dtype=np.int64)).reshape(nj * mi, n_fi)
        right = np.kron(np.eye(nj, dtype=np.int64), X.T).reshape(nj * mi, n_fj)
        blocks.append(np.hstack([left, -right]))
    system = np.vstack(blocks) % p
    basis = nullspace_mod_p(system, p)
    return [(v[:n_fi].reshape(ni, mi), v[n_fi:].reshape(nj, mj)) for v in basis]


def hom_dim(M: FFRep, N: FFRep) -> int:
    return len(hom_space(M, N))


# -- submodule census and Hall numbers ---------------------------------------------

@lru_cache(maxsize=None)
def _census(X: IsoClass) -> dict:
    """``{(quotient_class, sub_class): count}`` over all submodules of ``X``."""
    p = X.p
    rep = X.rep
    A, B = rep.A, rep.B
    ni, nj = X.dim.i, X.dim.j
    counts: Counter = Counter()
    subs_j = subspaces(nj, p)
    for bi, pi, npi in subspaces(ni, p):
        au = (A @ bi.T) % p
        bu = (B @ bi.T) % p
        images = np.hstack([au, bu])
        a_rest = A[:, list(npi)]
        b_rest = B[:, list(npi)]
        for bj, pj, npj in subs_j:
            pj_l = list(pj)
            if images.shape[1] and np.any((images - bj.T @ images[pj_l, :]) % p):
                continue
            sub = FFRep(p, DimVector(len(pi), len(pj)), au[pj_l, :], bu[pj_l, :])
            npj_l = list(npj)
            qa = ((a_rest - bj.T @ a_rest[pj_l, :]) % p)[npj_l, :]
            qb = ((b_rest - bj.T @ b_rest[pj_l, :]) % p)[npj_l, :]
            quot = FFRep(p, DimVector(len(npi), len(npj)), qa, qb)
            counts[(canonical_class(quot), canonical_class(sub))] += 1
    by_dims: dict = defaultdict(dict)
    for (q, s), c in counts.items():
        by_dims[(q.dim, s.dim)][(q, s)] = c
    return dict(by_dims)


def hall_number(M: IsoClass, N: IsoClass, X: IsoClass) -> int:
    """``F^X_{MN}``: submodules ``Y <= X`` with ``Y ~ N`` and ``X/Y ~ M``."""
    if M.dim + N.dim != X.dim:
        raise ValueError(f"dimension mismatch: {M.dim} + {N.dim} != {X.dim}")
    if not (M.p == N.p == X.p):
        raise ValueError("classes over different fields")
    return _census(X).get((M.dim, N.dim), {}).get((M, N), 0)


class HallElement:
    """Finite rational combination of isomorphism classes of one dimension vector."""

    __slots__ = ("p", "dim", "terms")

    def __init__(self, p: int, dim: DimVector, terms: Optional[dict] = None):
        self.p = p
        self.dim = dim
        self.terms = {}
        for cls, c in (terms or {}).items():
            if cls.dim != dim or cls.p != p:
                raise ValueError(f"class {cls} does not live in dimension {dim} over F_{p}")
            c = as_rational(c)
            if c:
                self.terms[cls] = c

    @classmethod
    def basis(cls, X: IsoClass) -> "HallElement":
        return cls(X.p, X.dim, {X: 1})

    def _check(self, other: "HallElement"):
        if self.p != other.p or self.dim != other.dim:
            raise ValueError("Hall elements of different dimension or field")

    def __add__(self, other: "HallElement") -> "HallElement":
        self._check(other)
        terms = Counter(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return HallElement(self.p, self.dim, terms)

    def __neg__(self):
        return HallElement(self.p, self.dim, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HallElement":
        c = as_rational(c)
        return HallElement(self.p, self.dim, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HallElement):
            return hall_product(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, HallElement):
            return NotImplemented
        return self.p == other.p and self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, self.dim, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return sorted(self.terms.items())

    def to_json(self) -> dict:
        return {"p": self.p, "dim": [self.dim.i, self.dim.j],
                "terms": [{"class": k.id, "coeff": str(v)} for k, v in self.items()]}

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*{k}" for k, v in self.items())

    __repr__ = __str__


def hall_product(x: HallElement, y: HallElement) -> HallElement:
    """``[M][N] = sum_X F^X_{MN} [X]``, extended bilinearly."""
    if x.p != y.p:
        raise ValueError("Hall elements over different fields")
    dim = x.dim + y.dim
    out: dict = {}
    if not x.terms or not y.terms:
        return HallElement(x.p, dim)
    for X in enumerate_classes(dim, x.p):
        entries = _census(X).get((x.dim, y.dim))
        if not entries:
            continue
        total = 0
        for (M, N), count in entries.items():
            cm = x.terms.get(M)
            if cm is None:
                continue
            cn = y.terms.get(N)
            if cn is None:
                continue
            total += cm * cn * count
        if total:
            out[X] = total
    return HallElement(x.p, dim, out)


# -- realisation of the generic algebra ---------------------------------------------

def simple(letter: str, p: int) -> HallElement:
    """``[I(0)]`` for ``"i"`` and ``[P(0)]`` for ``"j"``."""
    label = {"i": "I(0)", "j": "P(0)"}[letter]
    return HallElement.basis(canonical_class(build_indec(label, p)))


@lru_cache(maxsize=None)
def realize_generator(g: tuple, p: int, split: Optional[tuple] = None) -> HallElement:
    """Image of a generator at ``q = p``.

    P(m) and I(n) go to their classes. R(s) is defined through the I-P
    relation as ``[I(n)][P(m)] - p^(m+n) [P(m)][I(n)]`` for the chosen split
    ``(m, n)`` with ``m + n + 1 = s``; by default ``(0, s - 1)``.
    """
    kind, k = g
    if kind == P_:
        return HallElement.basis(canonical_class(build_indec(f"P({k})", p)))
    if kind == I_:
        return HallElement.basis(canonical_class(build_indec(f"I({k})", p)))
    m, n = split if split is not None else (0, k - 1)
    if m < 0 or n < 0 or m + n + 1 != k:
        raise ValueError(f"bad split {split} for R({k})")
    Pm = realize_generator((P_, m), p)
    In = realize_generator((I_, n), p)
    return hall_product(In, Pm) - hall_product(Pm, In).scale(p ** (m + n))


@lru_cache(maxsize=None)
def realize_word(word: tuple, p: int) -> HallElement:
    """Product of realised generators (a tuple of ``(kind, index)`` pairs)."""
    if not word:
        return HallElement(p, DimVector(0, 0), {IsoClass(p, DimVector(0, 0), 0): 1})
    if len(word) == 1:
        return realize_generator(word[0], p)
    return hall_product(realize_word(word[:-1], p), realize_generator(word[-1], p))


def realize(x: AlgebraElement, p: int) -> HallElement:
    """Evaluate coefficients at ``q = p`` and map each PBW monomial to its Hall product."""
    _check_budget(check_prime(p), x.grade, None)
    if x.q is not None and x.q != p:
        raise ValueError(f"element specialised at q={x.q} cannot be realised over F_{p}")
    out = HallElement(p, x.grade)
    for word, c in x.terms.items():
        coeff = c if x.q is not None else poly_eval(c, p)
        if coeff:
            out = out + realize_word(word, p).scale(coeff)
    return out


def letters_product(word: str, p: int) -> HallElement:
    """Hall product of simples, one per letter of ``word``."""
    return _letters_product(word, p)


@lru_cache(maxsize=None)
def _letters_product(word: str, p: int) -> HallElement:
    if len(word) == 1:
        return simple(word, p)
    return hall_product(_letters_product(word[:-1], p), simple(word[-1], p))


def describe_word(word: Sequence[tuple]) -> str:
    return "".join(gen_str(g) for g in word)


def grade_of(word: Iterable[tuple]) -> DimVector:
    return word_grade(word)

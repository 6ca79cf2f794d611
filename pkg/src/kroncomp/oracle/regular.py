"""Regular Kronecker modules over F_p and the image of R(s) in the Hall algebra.

A class of dimension ``(s, s)`` is regular when it has no preprojective or
preinjective direct summand. For a regular pencil ``(A, B)`` some combination
``aA + bB`` is invertible (as long as fewer than ``p + 1`` points occur), and
the similarity type of ``T = (cA + dB)(aA + bB)^-1`` lists the points of P^1
(irreducible factors of the characteristic polynomial, with degree ``d_x``) and
the regular lengths attached to each one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ..algebra import R_
from ..roots import DimVector
from .ffield import check_prime, rank_mod_p
from ._kernels import rref_mod_p
from .hall import (FFRep, HallElement, IsoClass, build_indec, enumerate_classes, hom_space,
                   realize_generator)

__all__ = [
    "has_summand",
    "is_regular",
    "regular_blocks",
    "RegularClass",
    "classify_regular",
    "rs_formula",
    "verify_Rs_specialization",
    "regular_module",
]


def _compose_nonzero(gs, fs, p) -> bool:
    for g_i, g_j in gs:
        for f_i, f_j in fs:
            if np.any((g_i @ f_i) % p) or np.any((g_j @ f_j) % p):
                return True
    return False


def has_summand(X: FFRep, Y: FFRep) -> bool:
    """Whether the brick ``Y`` (End = k) is a direct summand of ``X``.

    ``Y`` splits off iff some ``g: X -> Y`` and ``f: Y -> X`` compose to a
    nonzero endomorphism of ``Y``, i.e. an isomorphism.
    """
    if not Y.dim.fits_in(X.dim):
        return False
    return _compose_nonzero(hom_space(X, Y), hom_space(Y, X), X.p)


def is_regular(X: FFRep) -> bool:
    p = X.p
    for m in range(0, X.dim.j):
        if has_summand(X, build_indec(f"P({m})", p)):
            return False
    for n in range(0, X.dim.i):
        if has_summand(X, build_indec(f"I({n})", p)):
            return False
    return True


# -- polynomials over F_p as coefficient tuples, lowest degree first ---------------

def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = (a[-1] * inv) % p
        for k, c in enumerate(b):
            a[shift + k] = (a[shift + k] - f * c) % p
        a = list(_poly_trim(a))
    return _poly_trim(a)


@lru_cache(maxsize=None)
def monic_irreducibles(degree: int, p: int) -> tuple:
    out = []
    for low in itertools.product(range(p), repeat=degree):
        f = tuple(low) + (1,)
        reducible = False
        for d in range(1, degree // 2 + 1):
            for g in monic_irreducibles(d, p):
                if not _poly_mod(f, g, p):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            out.append(f)
    return tuple(out)


def _poly_at_matrix(f, T, p):
    n = T.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    power = np.eye(n, dtype=np.int64)
    for c in f:
        out = (out + c * power) % p
        power = (power @ T) % p
    return out


def _inverse_mod_p(M, p):
    n = M.shape[0]
    R, piv = rref_mod_p(np.hstack([M, np.eye(n, dtype=np.int64)]), p)
    if len(piv) < n or list(piv) != list(range(n)):
        raise ZeroDivisionError("matrix not invertible mod p")
    return R[:, n:]


def regular_blocks(X: FFRep) -> tuple:
    """Tube data of a regular module: sorted ``((f, d_x, lengths), ...)``.

    ``f`` is the irreducible polynomial naming the point in the pencil
    coordinate chosen for ``X``, ``d_x = deg f`` and ``lengths`` the regular
    lengths of the summands at that point, largest first.
    """
    p = X.p
    s = X.dim.i
    if X.dim.i != X.dim.j:
        raise ValueError("regular modules have dimension (s, s)")
    if s == 0:
        return ()
    points = [(1, t) for t in range(p)] + [(0, 1)]
    for a, b in points:
        M = (a * X.A + b * X.B) % p
        if rank_mod_p(M, p) == s:
            break
    else:
        raise ValueError("every pencil combination is singular; field too small for this module")
    c, d = (0, 1) if a != 0 else (1, 0)
    T = ((c * X.A + d * X.B) @ _inverse_mod_p(M, p)) % p
    blocks = []
    for deg in range(1, s + 1):
        for f in monic_irreducibles(deg, p):
            F = _poly_at_matrix(f, T, p)
            ranks = [s]
            power = np.eye(s, dtype=np.int64)
            for _ in range(s // deg):
                power = (power @ F) % p
                ranks.append(rank_mod_p(power, p))
            if ranks[-1] == s:
                continue
            # at_least[k] = number of blocks of length >= k+1
            at_least = [(ranks[k] - ranks[k + 1]) // deg for k in range(len(ranks) - 1)]
            lengths = []
            for k, cnt in enumerate(at_least):
                nxt = at_least[k + 1] if k + 1 < len(at_least) else 0
                lengths += [k + 1] * (cnt - nxt)
            blocks.append((f, deg, tuple(sorted(lengths, reverse=True))))
    if sum(deg * sum(ls) for _, deg, ls in blocks) != s:
        raise AssertionError("elementary divisors do not account for the whole module")
    return tuple(sorted(blocks))


@dataclass(frozen=True)
class RegularClass:
    iso: IsoClass
    regular: bool
    blocks: tuple = ()

    @property
    def shape(self) -> tuple:
        """Sorted ``(degree, lengths)`` pairs: the data the R(s) formula sees."""
        return tuple(sorted((deg, ls) for _, deg, ls in self.blocks))


def classify_regular(s: int, p: int) -> list[RegularClass]:
    out = []
    for X in enumerate_classes(DimVector(s, s), check_prime(p)):
        rep = X.rep
        if is_regular(rep):
            out.append(RegularClass(X, True, regular_blocks(rep)))
        else:
            out.append(RegularClass(X, False))
    return out


def formula_coefficient(blocks: tuple, q: int):
    """Coefficient of a regular class in the image of R(s).

    Nonzero only when every point carries a single indecomposable ``R_{m x}``;
    then it is ``prod q^((m-1) d_x) (q^d_x - 1)/(q - 1)``.
    """
    coeff = Fraction(1)
    for _, deg, lengths in blocks:
        if len(lengths) != 1:
            return 0
        m = lengths[0]
        coeff *= Fraction(q ** ((m - 1) * deg) * (q ** deg - 1), q - 1)
    return coeff


def rs_formula(s: int, p: int) -> HallElement:
    """The closed-form image of R(s) at ``q = p``, assembled over regular classes."""
    terms = {}
    for rc in classify_regular(s, p):
        if rc.regular:
            c = formula_coefficient(rc.blocks, p)
            if c:
                terms[rc.iso] = c
    return HallElement(p, DimVector(s, s), terms)


def verify_Rs_specialization(s: int, p: int = 2) -> bool:
    return realize_generator((R_, s), p) == rs_formula(s, p)


def regular_module(p: int, lengths_at_points: dict) -> FFRep:
    """Direct sum of ``R_{m x}`` for degree-1 points ``x = [a : b]``.

    ``lengths_at_points`` maps ``(a, b)`` to a list of regular lengths. The
    module ``R_{m x}`` is ``A = a I + N``, ``B = b I + N'`` built from a Jordan
    block so that the pencil degenerates only at ``x``.
    """
    reps = []
    for (a, b), lengths in lengths_at_points.items():
        for m in lengths:
            J = np.eye(m, k=1, dtype=np.int64)
            eye = np.eye(m, dtype=np.int64)
            # x = [a : b] means b*A - a*B is nilpotent; pick the other coordinate invertible
            if a % p:
                A, B = a * eye, b * eye + J
            else:
                A, B = J, b * eye
            reps.append(FFRep(p, DimVector(m, m), A, B))
    out = reps[0]
    for r in reps[1:]:
        out = out + r
    return out

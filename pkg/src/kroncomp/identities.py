"""Identity checks for the composition algebra: the generic Serre relations and
the q=0 relations, derived elements and delta identities.

Every identity is checked by reducing both sides to PBW normal form. The first
failure is reported with both reduced sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .algebra import (I_, P_, R_, AlgebraElement, alpha_expand, alpha_monomials, generator_element,
                      pbw_monomials, specialize, word_element, q0_alpha_normal_form)
from .exactq import QPolynomial, as_rational, determinant, inverse, poly_eval
from .roots import DimVector

__all__ = [
    "Identity",
    "PresentationReport",
    "serre_relation",
    "verify_presentations",
    "d1_expansion_rhs",
    "basis_change",
    "q0_coordinates",
    "basis_lift_determinant",
    "monomiality_check",
]

Q0 = 0
EXCLUSION_NOTE = ("relations (1) and (2) are applied for a >= 1 only; at a = 0 they would "
                  "force P(m)^2 = q P(m)^2")


@dataclass
class Identity:
    name: str
    lhs: AlgebraElement
    rhs: AlgebraElement

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"identity": self.name, "ok": self.ok,
                "lhs": self.lhs.to_json(), "rhs": self.rhs.to_json()}


@dataclass
class PresentationReport:
    checked: list[str] = field(default_factory=list)
    failure: Optional[Identity] = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failure is None

    def to_json(self) -> dict:
        out = {"ok": self.ok, "checked": len(self.checked), "notes": list(self.notes)}
        if self.failure is not None:
            out["failure"] = self.failure.to_json()
        return out


# -- building blocks ----------------------------------------------------------------

def _w(word: str, q=Q0) -> AlgebraElement:
    return word_element(word, q)


def _d1(q=Q0) -> AlgebraElement:
    """``ij - ji``."""
    return _w("ij", q) - _w("ji", q)


def _delta(r: int, q=Q0) -> AlgebraElement:
    return _w("i" * r + "j" * r, q)


def _pow(x: AlgebraElement, k: int) -> Optional[AlgebraElement]:
    # None stands for the empty product
    return x ** k if k > 0 else None


def _prod(*factors) -> AlgebraElement:
    out = None
    for f in factors:
        if f is None:
            continue
        out = f if out is None else out * f
    return out


def _zero_like(x: AlgebraElement) -> AlgebraElement:
    return AlgebraElement.zero(x.grade, x.q)


def _gen(kind: int, k: int, q=Q0) -> AlgebraElement:
    return generator_element((kind, k), q)


def serre_relation(which: str = "i", c: Optional[QPolynomial] = None) -> AlgebraElement:
    """The quantum Serre element in ``i`` (``which="i"``) or ``j``, straightened at generic q.

    ``c`` replaces the coefficient ``q^2 + q + 1``, for checking that a wrong
    coefficient is detected.
    """
    q = QPolynomial.monomial(1)
    c = c if c is not None else q * q + q + 1
    if which == "i":
        words = ("iiij", "iiji", "ijii", "jiii")
    else:
        words = ("ijjj", "jijj", "jjij", "jjji")
    a, b, d, e = (word_element(w) for w in words)
    return a - b.scale(c) + d.scale(q * c) - e.scale(q ** 3)


def d1_expansion_rhs(m: int, start: int = 0, q=Q0) -> AlgebraElement:
    """``d1^m j - d1^(m-1) j d1 - sum_{r=start}^{m-2} d1^r j R(m-r)`` with ``d1 = delta_1``.

    The correct lower limit is ``start = 0``; ``start = 1`` gives the variant
    that drops the ``j R(m)`` term.
    """
    d1 = _delta(1, q)
    j = _w("j", q)
    out = _prod(_pow(d1, m), j) - _prod(_pow(d1, m - 1), j, d1)
    for r in range(start, m - 1):
        out = out - _prod(_pow(d1, r), j, _gen(R_, m - r, q))
    return out


# -- the suite ----------------------------------------------------------------------

def _identities(max_defining: int = 5, max_derived: int = 4, max_r: int = 3, max_expansion: int = 5,
                max_delta: int = 5):
    """Yield ``(name, thunk)`` pairs; each thunk returns ``(lhs, rhs)``."""
    yield "Serre relation in i", lambda: (serre_relation("i"), _zero_like(serre_relation("i")))
    yield "Serre relation in j", lambda: (serre_relation("j"), _zero_like(serre_relation("j")))

    # defining relations at q = 0
    for m in range(0, max_defining + 1):
        yield (f"i^{m}j^{m+1}i^{m+1}j^{m+2} = i^{2*m+1}j^{2*m+3}",
               lambda m=m: (_w("i" * m + "j" * (m + 1) + "i" * (m + 1) + "j" * (m + 2)),
                            _w("i" * (2 * m + 1) + "j" * (2 * m + 3))))
    for n in range(0, max_defining + 1):
        yield (f"i^{n+2}j^{n+1}i^{n+1}j^{n} = i^{2*n+3}j^{2*n+1}",
               lambda n=n: (_w("i" * (n + 2) + "j" * (n + 1) + "i" * (n + 1) + "j" * n),
                            _w("i" * (2 * n + 3) + "j" * (2 * n + 1))))
    for m in range(1, max_defining + 1):
        for n in range(m + 1, max_defining + 1):
            yield (f"delta_{m} delta_{n} = delta_{n} delta_{m}",
                   lambda m=m, n=n: (_delta(m) * _delta(n), _delta(n) * _delta(m)))

    # derived elements
    yield "R(1) = ij - ji", lambda: (_gen(R_, 1), _d1())
    for m in range(0, max_derived + 1):
        yield (f"P({m}) = (ij-ji)^{m} j", lambda m=m: (_gen(P_, m), _prod(_pow(_d1(), m), _w("j"))))
    for n in range(0, max_derived + 1):
        yield (f"I({n}) = i (ij-ji)^{n}", lambda n=n: (_gen(I_, n), _prod(_w("i"), _pow(_d1(), n))))
    for s in range(1, max_r + 1):
        yield (f"R({s+1}) = i (ij-ji)^{s} j",
               lambda s=s: (_gen(R_, s + 1), _prod(_w("i"), _pow(_d1(), s), _w("j"))))

    # delta_1 expansion of (ij - ji)^m j
    for m in range(1, max_expansion + 1):
        yield (f"(ij-ji)^{m} j expansion",
               lambda m=m: (_prod(_pow(_d1(), m), _w("j")), d1_expansion_rhs(m)))

    # reformulations of the type 1), 2) and 6) relations
    for m in range(0, max_expansion):
        yield (f"P({m+1})P({m}) = 0",
               lambda m=m: (_gen(P_, m + 1) * _gen(P_, m), _zero_like(_gen(P_, m + 1) * _gen(P_, m))))
        yield (f"d1^{m+1} j d1^{m} j = d1^{m} j d1^{m+1} j",
               lambda m=m: (_prod(_pow(_delta(1), m + 1), _w("j"), _pow(_delta(1), m), _w("j")),
                            _prod(_pow(_delta(1), m), _w("j"), _pow(_delta(1), m + 1), _w("j"))))
        yield (f"d1^{m} j d1^{m+1} j = d1^{2*m+1} j^2",
               lambda m=m: (_prod(_pow(_delta(1), m), _w("j"), _pow(_delta(1), m + 1), _w("j")),
                            _prod(_pow(_delta(1), 2 * m + 1), _w("jj"))))
        yield (f"i d1^{m} i d1^{m+1} = i d1^{m+1} i d1^{m}",
               lambda m=m: (_prod(_w("i"), _pow(_delta(1), m), _w("i"), _pow(_delta(1), m + 1)),
                            _prod(_w("i"), _pow(_delta(1), m + 1), _w("i"), _pow(_delta(1), m))))
    for s in range(1, max_delta + 1):
        yield (f"d1^{s} j = delta_{s} j",
               lambda s=s: (_prod(_pow(_delta(1), s), _w("j")), _delta(s) * _w("j")))
        yield (f"i delta_{s} j = delta_{s+1}",
               lambda s=s: (_prod(_w("i"), _delta(s), _w("j")), _delta(s + 1)))
        yield (f"delta_{s} delta_1 j = delta_{s+1} j",
               lambda s=s: (_prod(_delta(s), _delta(1), _w("j")), _delta(s + 1) * _w("j")))
        if s > 1:
            yield (f"R({s}) j = 0", lambda s=s: (_gen(R_, s) * _w("j"),
                                                 _zero_like(_gen(R_, s) * _w("j"))))
            yield (f"i R({s}) = 0", lambda s=s: (_w("i") * _gen(R_, s),
                                                 _zero_like(_w("i") * _gen(R_, s))))
            yield (f"delta_1 R({s}) = R({s}) delta_1",
                   lambda s=s: (_delta(1) * _gen(R_, s), _gen(R_, s) * _delta(1)))
        yield (f"R({s+1}) = delta_{s+1} - delta_{s} delta_1 - sum delta_(r+1) R(s-r)",
               lambda s=s: (_gen(R_, s + 1), _r_from_deltas(s)))


def _r_from_deltas(s: int, q=Q0) -> AlgebraElement:
    out = _delta(s + 1, q) - _delta(s, q) * _delta(1, q)
    for r in range(0, s - 1):
        out = out - _delta(r + 1, q) * _gen(R_, s - r, q)
    return out


def verify_presentations(**bounds) -> PresentationReport:
    """Run the identity suite; stop at the first failure."""
    report = PresentationReport(notes=[EXCLUSION_NOTE])
    for name, thunk in _identities(**bounds):
        lhs, rhs = thunk()
        ident = Identity(name, lhs, rhs)
        report.checked.append(name)
        if not ident.ok:
            report.failure = ident
            break
    return report


# -- the alpha basis against the PBW basis -------------------------------------------

def basis_change(grade: DimVector, q=None):
    """``(alpha_monomials, pbw_monomials, matrix)``: row ``k`` holds the PBW
    coordinates of the straightened word of the ``k``-th alpha monomial."""
    alphas = alpha_monomials(grade)
    pbws = pbw_monomials(grade)
    index = {m.word: c for c, m in enumerate(pbws)}
    zero = QPolynomial() if q is None else 0
    rows = []
    for a in alphas:
        row = [zero] * len(pbws)
        for w, c in alpha_expand(a, q).terms.items():
            row[index[w]] = c
        rows.append(row)
    return alphas, pbws, rows


def q0_coordinates(x: AlgebraElement) -> dict:
    """Coordinates of a q=0 element in the alpha basis of its grade.

    Solves ``c @ M = x`` for the q=0 basis-change matrix without assuming any
    triangular structure; the inverse is cached per grade.
    """
    if x.q != 0:
        raise ValueError("q0_coordinates expects an element specialised at q = 0")
    alphas, pbws, inv = _q0_inverse(x.grade)
    index = {m.word: k for k, m in enumerate(pbws)}
    sol = [0] * len(alphas)
    for w, c in x.terms.items():
        row = inv[index[w]]
        for k, v in enumerate(row):
            if v:
                sol[k] += c * v
    return {a: as_rational(c) for a, c in zip(alphas, sol) if c}


@lru_cache(maxsize=None)
def _q0_inverse(grade: DimVector):
    alphas, pbws, rows = basis_change(grade, q=0)
    return alphas, pbws, inverse(rows)


def basis_lift_determinant(grade: DimVector, at=0):
    """The generic alpha-to-PBW transition matrix of ``grade``, evaluated at ``q = at``,
    then its determinant.

    A nonzero value at any point shows the determinant is a nonzero polynomial,
    so the lifted alpha monomials are linearly independent over Q(q).
    """
    alphas, pbws, rows = basis_change(grade)
    if len(alphas) != len(pbws):
        raise AssertionError(f"grade {grade}: {len(alphas)} alpha monomials vs {len(pbws)} PBW")
    return determinant([[poly_eval(c, at) for c in row] for row in rows])


def monomiality_check(word: str) -> bool:
    """The alpha normal form of ``word`` is the q=0 straightening read in the alpha basis."""
    expected = q0_alpha_normal_form(word)
    return q0_coordinates(specialize(word_element(word), 0)) == {expected: 1}

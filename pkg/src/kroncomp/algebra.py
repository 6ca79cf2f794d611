"""The generic composition algebra of the Kronecker quiver and its q=0 specialisation.

Words in ``i`` and ``j`` are straightened into the PBW basis

    P(m_1)...P(m_a) R(s_1)...R(s_t) I(n_1)...I(n_b),
    m_1 <= ... <= m_a,  s_1 >= ... >= s_t,  n_1 >= ... >= n_b,

with coefficients in Q[q] (``i = I(0)``, ``j = P(0)``). A :class:`Straightener`
can also work at a fixed numeric ``q``; at ``q = 0`` most rule terms vanish and
long words become cheap.

Internally a generator is a pair ``(kind, index)`` with kind 0 = P, 1 = R,
2 = I, and a monomial is a tuple of generators.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

from ._rewrite import FuelExhausted, random_normalize, stack_normalize
from .exactq import ONE, QPolynomial, Rational, as_rational, poly_eval
from .roots import DimVector

__all__ = [
    "GenP",
    "GenR",
    "GenI",
    "PBWMonomial",
    "AlphaMonomial",
    "AlgebraElement",
    "Straightener",
    "FuelExhausted",
    "WordTooLong",
    "CycleDetected",
    "parse_word",
    "straighten_word",
    "multiply",
    "specialize",
    "q0_alpha_normal_form",
    "alpha_multiply",
    "alpha_expand",
    "alpha_word",
    "pbw_monomials",
    "alpha_monomials",
    "generator_element",
    "word_element",
    "relation_rhs",
    "default_engine",
    "verify_presentations",
]

P_, R_, I_ = 0, 1, 2
_KIND_NAME = {P_: "P", R_: "R", I_: "I"}

DEFAULT_MAX_WORD_LENGTH = 16
DEFAULT_FUEL = 10**6


class WordTooLong(ValueError):
    pass


class CycleDetected(RuntimeError):
    pass


def GenP(m: int) -> tuple:
    if m < 0:
        raise ValueError("P(m) needs m >= 0")
    return (P_, m)


def GenR(s: int) -> tuple:
    if s < 1:
        raise ValueError("R(s) needs s >= 1")
    return (R_, s)


def GenI(n: int) -> tuple:
    if n < 0:
        raise ValueError("I(n) needs n >= 0")
    return (I_, n)


LETTER = {"i": (I_, 0), "j": (P_, 0)}


def gen_grade(g: tuple) -> tuple[int, int]:
    kind, k = g
    if kind == P_:
        return (k, k + 1)
    if kind == R_:
        return (k, k)
    return (k + 1, k)


def word_grade(word: Iterable[tuple]) -> DimVector:
    a = b = 0
    for g in word:
        x, y = gen_grade(g)
        a += x
        b += y
    return DimVector(a, b)


def gen_str(g: tuple) -> str:
    return f"{_KIND_NAME[g[0]]}({g[1]})"


_TOKEN = re.compile(r"\s*([ij])(?:\^(\d+))?\s*")


def parse_word(text: str) -> str:
    """Expand ``"i^3 j i j^2"`` into ``"iiijijj"``; whitespace is ignored."""
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise ValueError(f"cannot parse word {text!r} at position {pos}")
        letter, exp = match.groups()
        k = int(exp) if exp is not None else 1
        if exp is not None and k < 1:
            raise ValueError("exponents must be positive")
        out.append(letter * k)
        pos = match.end()
    return "".join(out)


def _letters(word) -> list[tuple]:
    if isinstance(word, str):
        word = parse_word(word) if ("^" in word or " " in word) else word
        try:
            return [LETTER[c] for c in word]
        except KeyError as exc:
            raise ValueError(f"unknown letter {exc.args[0]!r} in word") from None
    return [LETTER[c] if isinstance(c, str) else tuple(c) for c in word]


# -- the straightening relations ----------------------------------------------------

def _q(k: int) -> QPolynomial:
    return QPolynomial.monomial(k)


def _pp_coeff(gap: int, r: int) -> QPolynomial:
    """Coefficient of ``P(m+r)P(m+gap-r)`` in ``P(m+gap)P(m)`` (and dually for I).

    ``q^(a+1) - q^(a-1)`` for ``2r != a``. The middle square ``P(m+a/2)^2`` gets
    that value divided by ``q + 1``, i.e. ``q^a - q^(a-1)``: the Hall number of
    the square is the same as for any other pair, but ``[P]^2 = (q+1)[P + P]``.
    """
    if 2 * r == gap:
        return _q(gap) - _q(gap - 1)
    return _q(gap + 1) - _q(gap - 1)


@lru_cache(maxsize=None)
def relation_rhs(x: tuple, y: tuple) -> Optional[tuple]:
    """Right-hand side for the adjacent pair ``x y`` or ``None`` if it is in PBW order.

    Returns a tuple of ``(coefficient, word)`` pairs with QPolynomial
    coefficients. The P-P and I-I relations are used only for a strictly
    positive index gap: at gap 0 the pair is already ordered.
    """
    kx, a = x
    ky, b = y
    out: list[tuple[QPolynomial, tuple]] = []
    if kx == P_ and ky == P_:
        if a <= b:
            return None
        m, gap = b, a - b
        out.append((_q(gap + 1), ((P_, m), (P_, m + gap))))
        for r in range(1, gap // 2 + 1):
            out.append((_pp_coeff(gap, r), ((P_, m + r), (P_, m + gap - r))))
    elif kx == I_ and ky == I_:
        if a >= b:
            return None
        n, gap = a, b - a
        out.append((_q(gap + 1), ((I_, n + gap), (I_, n))))
        for r in range(1, gap // 2 + 1):
            out.append((_pp_coeff(gap, r), ((I_, n + gap - r), (I_, n + r))))
    elif kx == I_ and ky == P_:
        n, m = a, b
        out.append((ONE, ((R_, m + n + 1),)))
        out.append((_q(m + n), ((P_, m), (I_, n))))
    elif kx == R_ and ky == P_:
        s, m = a, b
        out.append((_q(s), ((P_, m), (R_, s))))
        for r in range(1, s):
            out.append((_q(s + r) - _q(s + r - 2), ((P_, m + r), (R_, s - r))))
        out.append((_q(2 * s - 1) + _q(2 * s - 2), ((P_, m + s),)))
    elif kx == I_ and ky == R_:
        n, s = a, b
        out.append((_q(s), ((R_, s), (I_, n))))
        for r in range(1, s):
            out.append((_q(s + r) - _q(s + r - 2), ((R_, s - r), (I_, n + r))))
        out.append((_q(2 * s - 1) + _q(2 * s - 2), ((I_, n + s),)))
    elif kx == R_ and ky == R_:
        if a >= b:
            return None
        out.append((ONE, (y, x)))
    else:
        return None
    lhs = word_grade((x, y))
    for _, w in out:
        if word_grade(w) != lhs:
            raise AssertionError(f"relation for {gen_str(x)}{gen_str(y)} breaks the grading")
    return tuple(out)


def _is_bad(x: tuple, y: tuple) -> bool:
    kx, a = x
    ky, b = y
    if kx < ky:
        return False
    if kx > ky:
        return True
    if kx == P_:
        return a > b
    return a < b  # R and I sort non-increasing


def _bad_positions(word: tuple) -> list[int]:
    return [k for k in range(len(word) - 1) if _is_bad(word[k], word[k + 1])]


# -- monomials and elements ---------------------------------------------------------

@dataclass(frozen=True, order=True)
class PBWMonomial:
    """``P(p[0])...P(p[-1]) R(r[0])... I(i[0])...`` in PBW order."""

    p: tuple = ()
    r: tuple = ()
    i: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "r", tuple(self.r))
        object.__setattr__(self, "i", tuple(self.i))
        if list(self.p) != sorted(self.p) or list(self.r) != sorted(self.r, reverse=True) \
                or list(self.i) != sorted(self.i, reverse=True):
            raise ValueError(f"not a PBW monomial: {self.p} {self.r} {self.i}")
        if any(m < 0 for m in self.p) or any(s < 1 for s in self.r) or any(n < 0 for n in self.i):
            raise ValueError("index out of range in PBW monomial")

    @classmethod
    def from_word(cls, word: Sequence[tuple]) -> "PBWMonomial":
        p = tuple(k for kind, k in word if kind == P_)
        r = tuple(k for kind, k in word if kind == R_)
        i = tuple(k for kind, k in word if kind == I_)
        mono = cls(p, r, i)
        if mono.word != tuple(word):
            raise ValueError("word is not in PBW order")
        return mono

    @property
    def word(self) -> tuple:
        return tuple([(P_, m) for m in self.p] + [(R_, s) for s in self.r]
                     + [(I_, n) for n in self.i])

    @property
    def grade(self) -> DimVector:
        return word_grade(self.word)

    def __str__(self):
        if not (self.p or self.r or self.i):
            return "1"
        return "".join(gen_str(g) for g in self.word)

    def to_json(self) -> dict:
        return {"p": list(self.p), "r": list(self.r), "i": list(self.i)}


Coeff = Union[QPolynomial, Rational]


class AlgebraElement:
    """Homogeneous linear combination of PBW monomials.

    ``q`` is ``None`` for generic coefficients (QPolynomial) or the rational at
    which the element was specialised (coefficients are then rationals).
    """

    __slots__ = ("terms", "grade", "q")

    def __init__(self, terms: dict, grade: DimVector, q=None):
        self.grade = grade
        self.q = None if q is None else as_rational(q)
        self.terms = {w: c for w, c in terms.items() if c}
        for w in self.terms:
            if word_grade(w) != grade:
                raise ValueError(f"monomial {w} is not of grade {grade}")

    @classmethod
    def zero(cls, grade: DimVector, q=None) -> "AlgebraElement":
        return cls({}, grade, q)

    @classmethod
    def from_monomial(cls, mono: PBWMonomial, coeff=None, q=None) -> "AlgebraElement":
        if coeff is None:
            coeff = ONE if q is None else 1
        return cls({mono.word: coeff}, mono.grade, q)

    def _check_compatible(self, other: "AlgebraElement"):
        if self.q != other.q:
            raise ValueError("cannot combine elements specialised at different q")
        if self.grade != other.grade:
            raise ValueError(f"inhomogeneous sum: grades {self.grade} and {other.grade}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_compatible(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms[w] + c if w in terms else c
        return AlgebraElement(terms, self.grade, self.q)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement({w: -c for w, c in self.terms.items()}, self.grade, self.q)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        if self.q is not None and isinstance(c, QPolynomial):
            c = poly_eval(c, self.q)
        return AlgebraElement({w: c * v for w, v in self.terms.items()}, self.grade, self.q)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __pow__(self, n: int) -> "AlgebraElement":
        if n < 1:
            raise ValueError("powers start at 1 (no unit in a fixed grade)")
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if not self.terms and not other.terms:
            return self.q == other.q
        return self.q == other.q and self.grade == other.grade and self.terms == other.terms

    def __hash__(self):
        return hash((self.grade, self.q, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, mono: PBWMonomial):
        return self.terms.get(mono.word, 0 if self.q is not None else QPolynomial())

    def items(self) -> list[tuple[PBWMonomial, Coeff]]:
        pairs = [(PBWMonomial.from_word(w), c) for w, c in self.terms.items()]
        pairs.sort(key=lambda t: (list(t[0].p), list(t[0].r), list(t[0].i)))
        return pairs

    def to_json(self) -> dict:
        terms = []
        for mono, c in self.items():
            entry = mono.to_json()
            entry["coeff"] = c.to_json() if isinstance(c, QPolynomial) \
                else QPolynomial.constant(c).to_json()
            terms.append(entry)
        return {"grade": [self.grade.i, self.grade.j], "terms": terms}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.items():
            text = str(c)
            if text == "1":
                parts.append(f"[{mono}]")
            else:
                parts.append(f"({text})*[{mono}]")
        return " + ".join(parts)

    __repr__ = __str__


# -- the engine ---------------------------------------------------------------------

class Straightener:
    """Memoised rewriting of generator words into the PBW basis.

    ``q=None`` works over Q[q]; a rational ``q`` evaluates every relation
    coefficient first. ``strategy`` is ``"leftmost"`` (the deterministic
    default), ``"rightmost"``, or a :class:`random.Random` used to pick the
    reducible pair at each step. All strategies must agree; the tests check it.
    """

    def __init__(self, q=None, *, strategy="leftmost", fuel: int = DEFAULT_FUEL,
                 max_word_length: Optional[int] = DEFAULT_MAX_WORD_LENGTH):
        self.q = None if q is None else as_rational(q)
        self.strategy = strategy
        self.fuel = fuel
        self.max_word_length = max_word_length
        self._memo: dict[tuple, dict] = {}
        self._rules: dict[tuple, Optional[tuple]] = {}
        self._active: set[tuple] = set()
        self._budget = fuel
        self.hits = 0
        self.misses = 0
        self._one = ONE if self.q is None else 1

    # coefficient ring
    def _coeff(self, poly: QPolynomial):
        return poly if self.q is None else poly_eval(poly, self.q)

    def _rule(self, x, y):
        key = (x, y)
        try:
            return self._rules[key]
        except KeyError:
            pass
        rhs = relation_rhs(x, y)
        if rhs is not None:
            rhs = tuple((self._coeff(c), w) for c, w in rhs)
            rhs = tuple((c, w) for c, w in rhs if c)
        self._rules[key] = rhs
        return rhs

    def _pick(self, word: tuple) -> Optional[int]:
        if self.strategy == "leftmost":
            for k in range(len(word) - 1):
                if _is_bad(word[k], word[k + 1]):
                    return k
            return None
        bad = _bad_positions(word)
        if not bad:
            return None
        if self.strategy == "rightmost":
            return bad[-1]
        return self.strategy.choice(bad)

    def _reduce(self, word: tuple) -> dict:
        hit = self._memo.get(word)
        if hit is not None:
            self.hits += 1
            return hit
        self.misses += 1
        pos = self._pick(word)
        if pos is None:
            res = {word: self._one}
        else:
            if word in self._active:
                raise CycleDetected(f"rewriting cycles through {[gen_str(g) for g in word]}")
            self._budget -= 1
            if self._budget < 0:
                raise FuelExhausted(f"straightening exceeded {self.fuel} rule applications")
            self._active.add(word)
            try:
                res = {}
                head, tail = word[:pos], word[pos + 2:]
                for c, rep in self._rule(word[pos], word[pos + 1]):
                    for mono, d in self._reduce(head + rep + tail).items():
                        v = c * d
                        if mono in res:
                            v = res[mono] + v
                        res[mono] = v
                res = {m: v for m, v in res.items() if v}
            finally:
                self._active.discard(word)
        self._memo[word] = res
        return res

    def _append(self, terms: dict, gens: Sequence[tuple]) -> dict:
        # right-multiply a normal-form combination generator by generator
        for g in gens:
            new: dict = {}
            for mono, c in terms.items():
                for m2, d in self._reduce(mono + (g,)).items():
                    v = c * d
                    if m2 in new:
                        v = new[m2] + v
                    new[m2] = v
            terms = {m: v for m, v in new.items() if v}
        return terms

    def straighten(self, gens: Sequence[tuple]) -> AlgebraElement:
        """Expand an arbitrary product of P/R/I generators in the PBW basis."""
        gens = [tuple(g) for g in gens]
        self._budget = self.fuel
        grade = word_grade(gens)
        terms = self._append({(): self._one}, gens)
        return AlgebraElement(terms, grade, self.q)

    def rewrite(self, gens: Sequence[tuple]) -> AlgebraElement:
        """Reduce the whole product at once instead of generator by generator.

        With a random strategy this explores rule orders that :meth:`straighten`
        never visits; the confluence tests compare the two.
        """
        gens = tuple(tuple(g) for g in gens)
        self._budget = self.fuel
        return AlgebraElement(dict(self._reduce(gens)), word_grade(gens), self.q)

    def straighten_word(self, word) -> AlgebraElement:
        gens = _letters(word)
        if self.max_word_length is not None and len(gens) > self.max_word_length:
            raise WordTooLong(f"word of length {len(gens)} exceeds the cap {self.max_word_length}")
        return self.straighten(gens)

    def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        if x.q != self.q or y.q != self.q:
            raise ValueError("element and engine live at different q")
        self._budget = self.fuel
        out: dict = {}
        for wy, cy in y.terms.items():
            for m, v in self._append(dict(x.terms), wy).items():
                v = v * cy
                if m in out:
                    v = out[m] + v
                out[m] = v
        return AlgebraElement(out, x.grade + y.grade, self.q)

    def memo_stats(self) -> dict:
        return {"entries": len(self._memo), "hits": self.hits, "misses": self.misses,
                "rules": len(self._rules)}

    def clear(self):
        self._memo.clear()
        self.hits = self.misses = 0


_ENGINES: dict = {}


def default_engine(q=None) -> Straightener:
    """Shared leftmost engine per value of ``q`` (no word-length cap)."""
    key = None if q is None else as_rational(q)
    eng = _ENGINES.get(key)
    if eng is None:
        eng = _ENGINES[key] = Straightener(key, max_word_length=None)
    return eng


def straighten_word(word, *, max_word_length: Optional[int] = DEFAULT_MAX_WORD_LENGTH,
                    q=None) -> AlgebraElement:
    gens = _letters(word)
    if max_word_length is not None and len(gens) > max_word_length:
        raise WordTooLong(f"word of length {len(gens)} exceeds the cap {max_word_length}")
    return default_engine(q).straighten(gens)


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return default_engine(x.q).multiply(x, y)


def specialize(x: AlgebraElement, q0) -> AlgebraElement:
    if x.q is not None:
        raise ValueError("element is already specialised")
    q0 = as_rational(q0)
    return AlgebraElement({w: poly_eval(c, q0) for w, c in x.terms.items()}, x.grade, q0)


def generator_element(g: tuple, q=None) -> AlgebraElement:
    g = tuple(g)
    return AlgebraElement({(g,): ONE if q is None else 1}, word_grade((g,)), q)


def word_element(word, q=None) -> AlgebraElement:
    return default_engine(q).straighten(_letters(word))


def _partitions_into(roots: list, target: tuple[int, int], start: int = 0):
    # multisets (as index-non-decreasing lists) of `roots` summing to target
    if target == (0, 0):
        yield []
        return
    for k in range(start, len(roots)):
        g, (x, y) = roots[k]
        if x <= target[0] and y <= target[1]:
            for rest in _partitions_into(roots, (target[0] - x, target[1] - y), k):
                yield [g] + rest


def _root_factors(grade: DimVector) -> list:
    a, b = grade.i, grade.j
    roots = [((P_, m), (m, m + 1)) for m in range(0, b)]
    roots += [((R_, s), (s, s)) for s in range(1, min(a, b) + 1)]
    roots += [((I_, n), (n + 1, n)) for n in range(0, a)]
    return roots


def pbw_monomials(grade: DimVector) -> list[PBWMonomial]:
    """All PBW basis monomials of a grade, sorted."""
    out = []
    for combo in _partitions_into(_root_factors(grade), (grade.i, grade.j)):
        p = sorted(k for kind, k in combo if kind == P_)
        r = sorted((k for kind, k in combo if kind == R_), reverse=True)
        i = sorted((k for kind, k in combo if kind == I_), reverse=True)
        out.append(PBWMonomial(p, r, i))
    return sorted(set(out))


# -- the (alpha)-monomial basis at q = 0 ----------------------------------------------

@dataclass(frozen=True, order=True)
class AlphaMonomial:
    """``(dim P(p[0]))... delta_{d[0]}... (dim I(i[0]))...`` with each ``(a) = i^a_i j^a_j``."""

    p: tuple = ()
    delta: tuple = ()
    i: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "delta", tuple(self.delta))
        object.__setattr__(self, "i", tuple(self.i))
        if list(self.p) != sorted(self.p) or list(self.delta) != sorted(self.delta, reverse=True) \
                or list(self.i) != sorted(self.i, reverse=True):
            raise ValueError(f"not an alpha-basis monomial: {self.p} {self.delta} {self.i}")
        if any(m < 0 for m in self.p) or any(s < 1 for s in self.delta) or any(n < 0 for n in self.i):
            raise ValueError("index out of range in alpha monomial")

    @classmethod
    def from_factors(cls, factors: Sequence[tuple]) -> "AlphaMonomial":
        return cls([k for kind, k in factors if kind == P_],
                   [k for kind, k in factors if kind == R_],
                   [k for kind, k in factors if kind == I_])

    @property
    def factors(self) -> tuple:
        return tuple([(P_, m) for m in self.p] + [(R_, s) for s in self.delta]
                     + [(I_, n) for n in self.i])

    @property
    def grade(self) -> DimVector:
        # the factor grades coincide with the PBW generator grades
        return word_grade(self.factors)

    def __str__(self):
        parts = [f"(P{m})" for m in self.p] + [f"d{s}" for s in self.delta] \
            + [f"(I{n})" for n in self.i]
        return "".join(parts) or "1"

    def to_json(self) -> dict:
        return {"p": list(self.p), "delta": list(self.delta), "i": list(self.i)}


def _alpha_rule(x: tuple, y: tuple) -> Optional[tuple]:
    # kinds: 0 = (dim P(m)), 1 = delta_s, 2 = (dim I(n))
    kx, a = x
    ky, b = y
    if kx == P_ and ky == P_:
        if a <= b:
            return None
        return ((P_, (a + b) // 2), (P_, (a + b + 1) // 2))
    if kx == R_ and ky == P_:
        return ((P_, b + a),)
    if kx == I_ and ky == P_:
        return ((R_, a + b + 1),)
    if kx == I_ and ky == R_:
        return ((I_, a + b),)
    if kx == R_ and ky == R_:
        return None if a >= b else (y, x)
    if kx == I_ and ky == I_:
        if a >= b:
            return None
        return ((I_, (a + b + 1) // 2), (I_, (a + b) // 2))
    return None


def _check_factor_grade(lhs: tuple, rhs: tuple):
    if word_grade(lhs) != word_grade(rhs):
        raise AssertionError(f"rewrite {lhs} -> {rhs} breaks the grading")


def _alpha_factors(word) -> list[tuple]:
    if isinstance(word, AlphaMonomial):
        return list(word.factors)
    return _letters(word)


def q0_alpha_normal_form(word, *, rng: Optional[random.Random] = None,
                         fuel: int = DEFAULT_FUEL) -> AlphaMonomial:
    """Normal form of a word of CA_0 in the basis of products of (alpha)'s.

    The result is a single monomial with coefficient 1.
    """
    factors = _alpha_factors(word)
    if rng is None:
        out = stack_normalize(factors, _alpha_rule, fuel, _check_factor_grade)
    else:
        out = random_normalize(factors, _alpha_rule, rng, fuel, _check_factor_grade)
    return AlphaMonomial.from_factors(out)


def alpha_multiply(x: AlphaMonomial, y: AlphaMonomial) -> AlphaMonomial:
    return q0_alpha_normal_form(list(x.factors) + list(y.factors))


def alpha_word(m: AlphaMonomial) -> str:
    parts = ["i" * k + "j" * (k + 1) for k in m.p]
    parts += ["i" * s + "j" * s for s in m.delta]
    parts += ["i" * (n + 1) + "j" * n for n in m.i]
    return "".join(parts)


def alpha_expand(m: AlphaMonomial, q=None) -> AlgebraElement:
    """The word of an alpha monomial, straightened (generic q by default)."""
    return default_engine(q).straighten(_letters(alpha_word(m)))


def alpha_monomials(grade: DimVector) -> list[AlphaMonomial]:
    return [AlphaMonomial(m.p, m.r, m.i) for m in pbw_monomials(grade)]


def verify_presentations(**bounds):
    """Run the identity suite of :mod:`kroncomp.identities` and return its report."""
    from .identities import verify_presentations as run
    return run(**bounds)

"""Reineke's composition monoid of the Kronecker quiver.

An element is stored in its unique normal form

    (dim P(m_1)) * ... * (dim P(m_a)) * delta_s * (dim I(n_1)) * ... * (dim I(n_b))

with ``m`` non-decreasing and ``n`` non-increasing, which is the same data as
a multiset of Schur roots.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from ._rewrite import random_normalize, stack_normalize
from .algebra import DEFAULT_FUEL, I_, P_, R_, _letters, word_grade
from .roots import DELTA, DimVector, Prei, Prep, SchurRoot, hom_ext_generic

__all__ = [
    "MonoidElement",
    "GenericModuleDescription",
    "monoid_normalize",
    "monoid_rewrite",
    "monoid_multiply",
    "codim",
    "canonical_decomposition",
    "canonical_decomposition_closed_form",
    "describe_generic",
    "monoid_word",
]


@dataclass(frozen=True)
class MonoidElement:
    p: tuple = ()
    s: int = 0
    i: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "i", tuple(self.i))
        if list(self.p) != sorted(self.p) or list(self.i) != sorted(self.i, reverse=True):
            raise ValueError(f"not a monoid normal form: {self.p} {self.s} {self.i}")
        if self.s < 0 or any(m < 0 for m in self.p) or any(n < 0 for n in self.i):
            raise ValueError("negative index in monoid element")

    @property
    def dim(self) -> DimVector:
        a = sum(self.p) + self.s + sum(n + 1 for n in self.i)
        b = sum(m + 1 for m in self.p) + self.s + sum(self.i)
        return DimVector(a, b)

    @property
    def factors(self) -> tuple:
        out = [(P_, m) for m in self.p]
        if self.s:
            out.append((R_, self.s))
        return tuple(out + [(I_, n) for n in self.i])

    @classmethod
    def from_factors(cls, factors: Sequence[tuple]) -> "MonoidElement":
        return cls([k for kind, k in factors if kind == P_],
                   sum(k for kind, k in factors if kind == R_),
                   [k for kind, k in factors if kind == I_])

    def schur_roots(self) -> list[SchurRoot]:
        """The Schur-root multiset, sorted ascending."""
        return [Prep(m) for m in self.p] + [DELTA] * self.s + [Prei(n) for n in self.i]

    @classmethod
    def from_schur_roots(cls, roots) -> "MonoidElement":
        roots = list(roots)
        return cls(sorted(r.index for r in roots if r.kind == "P"),
                   sum(1 for r in roots if r.kind == "delta"),
                   sorted((r.index for r in roots if r.kind == "I"), reverse=True))

    def __mul__(self, other: "MonoidElement") -> "MonoidElement":
        return monoid_multiply(self, other)

    def __str__(self):
        parts = [f"(P{m})" for m in self.p]
        if self.s:
            parts.append(f"d{self.s}")
        parts += [f"(I{n})" for n in self.i]
        return "*".join(parts) or "1"

    def to_json(self, *, with_codim: bool = True) -> dict:
        out = {"p": list(self.p), "delta": self.s, "i": list(self.i),
               "dim": [self.dim.i, self.dim.j]}
        if with_codim:
            out["codim"] = codim(self)
            out["generic"] = describe_generic(self).text
        return out


IDENTITY = MonoidElement()


def _monoid_rule(x: tuple, y: tuple) -> Optional[tuple]:
    # kinds: 0 = (dim P(m)), 1 = delta_k (k >= 1), 2 = (dim I(n))
    kx, a = x
    ky, b = y
    if kx == P_ and ky == P_:
        if a <= b:
            return None
        return ((P_, (a + b) // 2), (P_, (a + b + 1) // 2))
    if kx == R_ and ky == P_:
        return ((P_, b + a),)
    if kx == I_ and ky == P_:
        # index m+n+1, forced by the grading (n+1, n) + (m, m+1)
        return ((R_, a + b + 1),)
    if kx == I_ and ky == R_:
        return ((I_, a + b),)
    if kx == R_ and ky == R_:
        return ((R_, a + b),)
    if kx == I_ and ky == I_:
        if a >= b:
            return None
        return ((I_, (a + b + 1) // 2), (I_, (a + b) // 2))
    return None


def _check_grade(lhs, rhs):
    if word_grade(lhs) != word_grade(rhs):
        raise AssertionError(f"monoid rewrite {lhs} -> {rhs} breaks the grading")


def monoid_rewrite(factors: Sequence[tuple], rng: Optional[random.Random] = None,
                   fuel: int = DEFAULT_FUEL) -> MonoidElement:
    """Normalise a factor sequence by rewriting (leftmost, or at random positions)."""
    if rng is None:
        out = stack_normalize(factors, _monoid_rule, fuel, _check_grade)
    else:
        out = random_normalize(factors, _monoid_rule, rng, fuel, _check_grade)
    return MonoidElement.from_factors(out)


def monoid_word(x: MonoidElement) -> str:
    parts = ["i" * m + "j" * (m + 1) for m in x.p]
    parts.append("i" * x.s + "j" * x.s)
    parts += ["i" * (n + 1) + "j" * n for n in x.i]
    return "".join(parts)


def monoid_normalize(word) -> MonoidElement:
    """Normal form of a word in ``i = (dim I(0))`` and ``j = (dim P(0))``."""
    return monoid_rewrite(_letters(word))


def _balance_p(ms: list) -> list:
    ms = list(ms)
    steps = 0
    changed = True
    while changed:
        changed = False
        for k in range(len(ms) - 1):
            x, y = ms[k], ms[k + 1]
            if x > y:
                ms[k], ms[k + 1] = (x + y) // 2, (x + y + 1) // 2
                changed = True
                steps += 1
        assert steps <= 10 * (len(ms) + 1) ** 2 * (max(ms, default=0) + 1), "P-balancing stalled"
    return ms


def _balance_i(ns: list) -> list:
    ns = list(ns)
    steps = 0
    changed = True
    while changed:
        changed = False
        for k in range(len(ns) - 1):
            x, y = ns[k], ns[k + 1]
            if x < y:
                ns[k], ns[k + 1] = (x + y + 1) // 2, (x + y) // 2
                changed = True
                steps += 1
        assert steps <= 10 * (len(ns) + 1) ** 2 * (max(ns, default=0) + 1), "I-balancing stalled"
    return ns


def monoid_multiply(x: MonoidElement, y: MonoidElement) -> MonoidElement:
    """Product by collapsing the middle ``I...I * P...P`` block directly.

    The preinjectives of ``x`` meet the preprojectives of ``y``; equally many
    of each annihilate into a single delta_t, the surplus side absorbs that
    delta mass and the outer blocks are rebalanced.
    """
    xi, yp = list(x.i), list(y.p)
    b, a = len(xi), len(yp)
    if b == a:
        t = sum(xi) + sum(yp) + a
        return MonoidElement(x.p, x.s + t + y.s, y.i)
    if b > a:
        eaten, kept = xi[b - a:], xi[:b - a]
        t = sum(eaten) + sum(yp) + a
        kept[-1] += t + y.s
        return MonoidElement(x.p, x.s, _balance_i(kept + list(y.i)))
    eaten, kept = yp[:b], yp[b:]
    t = sum(xi) + sum(eaten) + b
    kept[0] += x.s + t
    return MonoidElement(_balance_p(list(x.p) + kept), y.s, y.i)


def codim(x: MonoidElement) -> int:
    """Sum of generic ext(later, earlier) over the ascending Schur-root list."""
    roots = x.schur_roots()
    # group equal roots: ext(alpha, alpha) is 0 for every Schur root here
    counts = Counter(roots)
    distinct = sorted(counts)
    total = 0
    for a_idx, lo in enumerate(distinct):
        for hi in distinct[a_idx + 1:]:
            total += counts[lo] * counts[hi] * hom_ext_generic(hi, lo)[1]
    return total


def canonical_decomposition_closed_form(alpha: DimVector) -> list[SchurRoot]:
    a, b = alpha.i, alpha.j
    if a == b:
        return [DELTA] * a
    if b > a:
        d = b - a
        m = a // d
        y = a - m * d
        return [Prep(m)] * (d - y) + [Prep(m + 1)] * y
    d = a - b
    n = b // d
    y = b - n * d
    return [Prei(n + 1)] * y + [Prei(n)] * (d - y)


def canonical_decomposition(alpha: DimVector) -> list[SchurRoot]:
    """Generic decomposition of ``alpha`` into Schur roots, sorted ascending."""
    if alpha.i == 0 and alpha.j == 0:
        raise ValueError("the zero dimension vector has no canonical decomposition")
    by_monoid = monoid_normalize("i" * alpha.i + "j" * alpha.j).schur_roots()
    closed = canonical_decomposition_closed_form(alpha)
    if sorted(by_monoid) != sorted(closed):
        raise AssertionError(f"canonical decomposition mismatch for {alpha}: "
                             f"{by_monoid} vs {closed}")
    return by_monoid


@dataclass(frozen=True)
class GenericModuleDescription:
    preprojective: tuple
    regular_count: int
    preinjective: tuple
    codimension: int
    text: str = field(default="", compare=False)

    def to_json(self) -> dict:
        return {"preprojective": [f"P({m})" for m in self.preprojective],
                "regular_simples": self.regular_count,
                "preinjective": [f"I({n})" for n in self.preinjective],
                "codim": self.codimension}


def describe_generic(x: MonoidElement) -> GenericModuleDescription:
    """The dense family ``P + R_{x_1} + ... + R_{x_s} + I`` with pairwise distinct points."""
    c = codim(x)
    summands = [f"P({m})" for m in x.p] + [f"R_{{x{k}}}" for k in range(1, x.s + 1)] \
        + [f"I({n})" for n in x.i]
    body = " ⊕ ".join(summands) if summands else "0"
    if x.s >= 2:
        body += " (distinct points)"
    return GenericModuleDescription(x.p, x.s, x.i, c, f"{body}, codim {c}")

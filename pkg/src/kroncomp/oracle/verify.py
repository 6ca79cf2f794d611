"""Checks of the symbolic engines against the brute-force Hall algebra.

The relation sides here are transcribed directly from the six relation
families and do not go through :func:`kroncomp.algebra.relation_rhs`, so a
slip in the engine's rule table cannot hide behind a matching slip here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional

from ..algebra import I_, P_, R_, gen_str, straighten_word, word_grade
from ..roots import DELTA, DimVector, Prei, Prep, SchurRoot, euler_form, hom_ext_generic
from .ffield import check_prime
from .hall import (FFRep, HallElement, build_indec, enumerate_classes, hall_product, hom_dim,
                   letters_product, realize, realize_generator, realize_word)
from .regular import regular_module

__all__ = [
    "RELATION_IDS",
    "relation_sides",
    "relation_parameters",
    "verify_relation",
    "RelationCheck",
    "OracleReport",
    "verify_relations",
    "verify_words",
    "verify_split_independence",
    "verify_associativity",
    "verify_hom_ext",
    "run_oracle",
    "DEFAULT_MAX_DIM",
]

RELATION_IDS = (1, 2, 3, 4, 5, 6)
DEFAULT_MAX_DIM = {2: DimVector(3, 3), 3: DimVector(2, 3)}

# a side is a list of (coefficient as a function of q, word of generators)
Side = list[tuple[Callable[[int], int], tuple]]


def _one(q):
    return 1


def _middle(a: int, r: int, printed: bool) -> Callable[[int], int]:
    # a repeated factor [X][X] = (q+1)[X+X] divides the middle term by q+1
    if 2 * r == a and not printed:
        return lambda q: q ** a - q ** (a - 1)
    return lambda q: q ** (a + 1) - q ** (a - 1)


def relation_sides(rel: int, params: dict, printed: bool = False) -> tuple[tuple, Side]:
    """``(lhs_word, rhs_terms)`` for relation family ``rel`` at ``params``.

    ``printed=True`` gives families 1 and 2 the uniform middle coefficient
    ``q^(a+1) - q^(a-1)`` for ``r = a/2`` as well; that version is false at
    even ``a`` and is kept so the discrepancy stays checkable.
    """
    if rel == 1:
        a, m = params["a"], params["m"]
        if a < 1:
            raise ValueError("relation 1 is checked for a >= 1 only")
        rhs = [(lambda q: q ** (a + 1), ((P_, m), (P_, m + a)))]
        rhs += [(_middle(a, r, printed), ((P_, m + r), (P_, m + a - r)))
                for r in range(1, a // 2 + 1)]
        return ((P_, m + a), (P_, m)), rhs
    if rel == 2:
        a, n = params["a"], params["n"]
        if a < 1:
            raise ValueError("relation 2 is checked for a >= 1 only")
        rhs = [(lambda q: q ** (a + 1), ((I_, n + a), (I_, n)))]
        rhs += [(_middle(a, r, printed), ((I_, n + a - r), (I_, n + r)))
                for r in range(1, a // 2 + 1)]
        return ((I_, n), (I_, n + a)), rhs
    if rel == 3:
        m, n = params["m"], params["n"]
        return ((I_, n), (P_, m)), [(_one, ((R_, m + n + 1),)),
                                    (lambda q: q ** (m + n), ((P_, m), (I_, n)))]
    if rel == 4:
        s, m = params["s"], params["m"]
        rhs = [(lambda q: q ** s, ((P_, m), (R_, s)))]
        rhs += [(lambda q, r=r: q ** (s + r) - q ** (s + r - 2), ((P_, m + r), (R_, s - r)))
                for r in range(1, s)]
        rhs.append((lambda q: q ** (2 * s - 1) + q ** (2 * s - 2), ((P_, m + s),)))
        return ((R_, s), (P_, m)), rhs
    if rel == 5:
        n, s = params["n"], params["s"]
        rhs = [(lambda q: q ** s, ((R_, s), (I_, n)))]
        rhs += [(lambda q, r=r: q ** (s + r) - q ** (s + r - 2), ((R_, s - r), (I_, n + r)))
                for r in range(1, s)]
        rhs.append((lambda q: q ** (2 * s - 1) + q ** (2 * s - 2), ((I_, n + s),)))
        return ((I_, n), (R_, s)), rhs
    if rel == 6:
        s1, s2 = params["s1"], params["s2"]
        return ((R_, s1), (R_, s2)), [(_one, ((R_, s2), (R_, s1)))]
    raise ValueError(f"unknown relation {rel}")


def relation_parameters(rel: int, max_dim: DimVector) -> list[dict]:
    """Every parameter set of family ``rel`` whose grade fits in ``max_dim``."""
    bound = max_dim.i + max_dim.j
    out = []
    names = {1: ("a", "m"), 2: ("a", "n"), 3: ("m", "n"), 4: ("s", "m"), 5: ("n", "s"),
             6: ("s1", "s2")}[rel]
    for values in itertools.product(range(bound + 1), repeat=2):
        params = dict(zip(names, values))
        if rel in (1, 2) and params["a"] < 1:
            continue
        if rel in (4, 5) and params["s"] < 1:
            continue
        if rel == 6 and not (1 <= params["s1"] < params["s2"]):
            continue
        lhs, _ = relation_sides(rel, params)
        if word_grade(lhs).fits_in(max_dim):
            out.append(params)
    return out


def _realize_side(side: Side, p: int, dim: DimVector) -> HallElement:
    total = HallElement(p, dim)
    for coeff, word in side:
        c = coeff(p)
        if c:
            total = total + realize_word(word, p).scale(c)
    return total


def verify_relation(rel: int, params: dict, p: int, printed: bool = False) -> bool:
    check_prime(p)
    lhs, rhs = relation_sides(rel, params, printed)
    dim = word_grade(lhs)
    return realize_word(lhs, p) == _realize_side(rhs, p, dim)


def _describe(rel: int, params: dict) -> str:
    lhs, rhs = relation_sides(rel, params)
    args = ", ".join(f"{k}={v}" for k, v in params.items())
    return f"({rel}) {args}: " + "".join(gen_str(g) for g in lhs)


@dataclass
class RelationCheck:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        out = {"check": self.name, "ok": self.ok}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class OracleReport:
    p: int
    max_dim: DimVector
    checks: list[RelationCheck] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[RelationCheck]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {"prime": self.p, "max_dim": list(self.max_dim), "ok": self.ok,
                "checked": len(self.checks), "failed": [c.to_json() for c in self.failures],
                "notes": list(self.notes)}


def verify_relations(p: int, max_dim: Optional[DimVector] = None,
                     relations=RELATION_IDS) -> list[RelationCheck]:
    max_dim = max_dim or DEFAULT_MAX_DIM[check_prime(p)]
    out = []
    for rel in relations:
        for params in relation_parameters(rel, max_dim):
            out.append(RelationCheck(_describe(rel, params), verify_relation(rel, params, p)))
    return out


def _words(max_dim: DimVector):
    for length in range(1, max_dim.i + max_dim.j + 1):
        for letters in itertools.product("ij", repeat=length):
            w = "".join(letters)
            if DimVector(w.count("i"), w.count("j")).fits_in(max_dim):
                yield w


def verify_words(p: int, max_dim: Optional[DimVector] = None) -> list[RelationCheck]:
    """Engine against oracle: the realised normal form of every word equals the
    Hall product of its letters."""
    max_dim = max_dim or DEFAULT_MAX_DIM[check_prime(p)]
    out = []
    for w in _words(max_dim):
        engine = realize(straighten_word(w), p)
        brute = letters_product(w, p)
        detail = "" if engine == brute else f"engine {engine} vs oracle {brute}"
        out.append(RelationCheck(f"word {w}", engine == brute, detail))
    return out


def verify_split_independence(p: int = 2, max_s: int = 3) -> list[RelationCheck]:
    out = []
    for s in range(1, max_s + 1):
        images = [realize_generator((R_, s), p, (m, s - 1 - m)) for m in range(s)]
        ok = all(x == images[0] for x in images)
        out.append(RelationCheck(f"R({s}) split independence", ok))
    return out


def verify_associativity(p: int = 2, max_dim: DimVector = DimVector(2, 2)) -> list[RelationCheck]:
    """``([X][Y])[Z] == [X]([Y][Z])`` for all class triples of total grade within ``max_dim``."""
    dims = [DimVector(a, b) for a in range(max_dim.i + 1) for b in range(max_dim.j + 1)
            if (a, b) != (0, 0)]
    basis = {d: [HallElement.basis(c) for c in enumerate_classes(d, p)] for d in dims}
    out = []
    for d1, d2, d3 in itertools.product(dims, repeat=3):
        if not (d1 + d2 + d3).fits_in(max_dim):
            continue
        bad = 0
        for x, y, z in itertools.product(basis[d1], basis[d2], basis[d3]):
            if hall_product(hall_product(x, y), z) != hall_product(x, hall_product(y, z)):
                bad += 1
        out.append(RelationCheck(f"associativity {d1}{d2}{d3}", bad == 0,
                                 f"{bad} failing triples" if bad else ""))
    return out


def _schur_roots_within(bound: DimVector) -> list[SchurRoot]:
    roots = [DELTA] if DELTA.dim.fits_in(bound) else []
    m = 0
    while Prep(m).dim.fits_in(bound) or Prei(m).dim.fits_in(bound):
        if Prep(m).dim.fits_in(bound):
            roots.append(Prep(m))
        if Prei(m).dim.fits_in(bound):
            roots.append(Prei(m))
        m += 1
    return roots


def _generic_rep(x: SchurRoot, p: int, point: tuple) -> FFRep:
    if x.kind == "delta":
        return regular_module(p, {point: [1]})
    return build_indec(str(x), p)


def verify_hom_ext(p: int = 2, bound: DimVector = DimVector(4, 4)) -> list[RelationCheck]:
    """Generic Hom/Ext table against linear solves on explicit representatives.

    Two deltas sit at the distinct points ``[1:0]`` and ``[0:1]``.
    """
    out = []
    roots = _schur_roots_within(bound)
    for x, y in itertools.product(roots, repeat=2):
        if not (x.dim + y.dim).fits_in(bound):
            continue
        M = _generic_rep(x, p, (1, 0))
        N = _generic_rep(y, p, (0, 1))
        hom = hom_dim(M, N)
        ext = hom - euler_form(x.dim, y.dim)
        expected = hom_ext_generic(x, y)
        ok = (hom, ext) == expected
        out.append(RelationCheck(f"hom/ext {x},{y}", ok,
                                 "" if ok else f"oracle {(hom, ext)} vs table {expected}"))
    return out


def run_oracle(p: int, max_dim: Optional[DimVector] = None,
               relation: Optional[int] = None) -> OracleReport:
    """The full oracle suite at prime ``p`` (or a single relation family)."""
    check_prime(p)
    max_dim = max_dim or DEFAULT_MAX_DIM[p]
    report = OracleReport(p, max_dim)
    report.notes.append("relations (1) and (2) are checked for a >= 1; at a = 0 they do not hold")
    if relation is not None:
        report.checks += verify_relations(p, max_dim, (relation,))
        return report
    report.checks += verify_relations(p, max_dim)
    report.checks += verify_words(p, max_dim)
    if p == 2:
        from .regular import verify_Rs_specialization
        for s in (1, 2):
            if DimVector(s, s).fits_in(max_dim):
                report.checks.append(RelationCheck(f"R({s}) image formula",
                                                   verify_Rs_specialization(s, p)))
        report.checks += verify_split_independence(p, min(3, max_dim.i, max_dim.j))
    elif DimVector(1, 1).fits_in(max_dim):
        from .regular import verify_Rs_specialization
        report.checks.append(RelationCheck("R(1) image formula", verify_Rs_specialization(1, p)))
    return report

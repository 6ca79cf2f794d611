import itertools
import random

import pytest

from kroncomp.algebra import I_, P_, R_
from kroncomp.monoid import (IDENTITY, MonoidElement, canonical_decomposition,
                             canonical_decomposition_closed_form, codim, describe_generic,
                             monoid_multiply, monoid_normalize, monoid_rewrite, monoid_word)
from kroncomp.roots import DELTA, DimVector, Prei, Prep, hom_ext_generic

E = MonoidElement


def random_word(rng, max_len):
    return "".join(rng.choice("ij") for _ in range(rng.randint(1, max_len)))


@pytest.mark.parametrize("word, expected", [
    ("ij", E((), 1, ())),
    ("ji", E((0,), 0, (0,))),
    ("ijij", E((), 2, ())),
    ("ijji", E((1,), 0, (0,))),
    ("iji", E((), 1, (0,))),
    ("iij", E((), 0, (1,))),
])
def test_normalize_examples(word, expected):
    assert monoid_normalize(word) == expected


@pytest.mark.parametrize("x, y, expected", [
    (E((), 0, (0,)), E((0,), 0, ()), E((), 1, ())),
    (E((), 0, (3, 0)), E((0,), 0, (9,)), E((), 0, (7, 6))),
    (E((), 0, (0,)), E((), 0, (2,)), E((), 0, (1, 1))),
    (E((), 2, ()), E((), 3, ()), E((), 5, ())),
])
def test_multiply_examples(x, y, expected):
    assert monoid_multiply(x, y) == expected
    assert (x * y).dim == x.dim + y.dim


def test_codim_examples():
    assert codim(E((0,), 0, (0,))) == 2
    assert codim(E((1,), 0, (0,))) == 3
    assert codim(E((), 1, (0,))) == 1
    assert codim(E((0, 2), 1, ())) == 3
    for a, b in itertools.product(range(6), repeat=2):
        assert codim(monoid_normalize("i" * a + "j" * b)) == 0


def test_describe_generic_examples():
    assert describe_generic(E((0,), 0, (0,))).text == "P(0) ⊕ I(0), codim 2"
    assert describe_generic(E((), 3, ())).text == \
        "R_{x1} ⊕ R_{x2} ⊕ R_{x3} (distinct points), codim 0"
    assert describe_generic(E((0, 2), 1, ())).text == "P(0) ⊕ P(2) ⊕ R_{x1}, codim 3"
    assert describe_generic(IDENTITY).text == "0, codim 0"


def test_json():
    assert monoid_normalize("ijij").to_json() == {
        "p": [], "delta": 2, "i": [], "dim": [2, 2], "codim": 0,
        "generic": "R_{x1} ⊕ R_{x2} (distinct points), codim 0"}
    assert E((1,), 0, ()).to_json(with_codim=False) == {"p": [1], "delta": 0, "i": [],
                                                        "dim": [1, 2]}


def test_invalid_elements():
    with pytest.raises(ValueError):
        E((2, 1), 0, ())
    with pytest.raises(ValueError):
        E((), 0, (0, 1))
    with pytest.raises(ValueError):
        E((), -1, ())


# -- uniqueness -----------------------------------------------------------------------

def test_multiply_matches_random_rewriting():
    rng = random.Random(31)
    for _ in range(500):
        u, v = random_word(rng, 14), random_word(rng, 14)
        x, y = monoid_normalize(u), monoid_normalize(v)
        prod = monoid_multiply(x, y)
        for k in range(3):
            assert monoid_rewrite(x.factors + y.factors, random.Random(k)) == prod
            assert monoid_rewrite(monoid_normalize(u + v).factors, random.Random(k)) == prod
        assert prod.dim == x.dim + y.dim


def test_multiply_is_associative():
    rng = random.Random(8)
    for _ in range(300):
        x, y, z = (monoid_normalize(random_word(rng, 10)) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert IDENTITY * x == x * IDENTITY == x


def test_normal_forms_idempotent():
    rng = random.Random(12)
    for _ in range(500):
        x = monoid_normalize(random_word(rng, 16))
        assert monoid_normalize(monoid_word(x)) == x


def test_grading_exhaustive():
    for n in range(1, 11):
        for letters in itertools.product("ij", repeat=n):
            w = "".join(letters)
            assert monoid_normalize(w).dim == DimVector(w.count("i"), w.count("j"))


# -- defining relations ----------------------------------------------------------------

def test_ij_power_equals_i_power_j_power():
    for m in range(1, 11):
        assert monoid_normalize("ij" * m) == monoid_normalize("i" * m + "j" * m) == E((), m, ())


def test_balancing_families():
    for m in range(11):
        for a in range(1, 11):
            lhs = monoid_rewrite([(P_, m + a), (P_, m)])
            assert lhs == E((m + a // 2, m + (a + 1) // 2), 0, ())
            lhs = monoid_rewrite([(I_, m), (I_, m + a)])
            assert lhs == E((), 0, (m + (a + 1) // 2, m + a // 2))


def test_collapse_rules():
    for m, n in itertools.product(range(11), repeat=2):
        assert monoid_rewrite([(I_, n), (P_, m)]) == E((), m + n + 1, ())
    for k, m in itertools.product(range(1, 11), range(11)):
        assert monoid_rewrite([(R_, k), (P_, m)]) == E((m + k,), 0, ())
        assert monoid_rewrite([(I_, m), (R_, k)]) == E((), 0, (m + k,))
        assert monoid_rewrite([(R_, k), (R_, m + 1)]) == E((), k + m + 1, ())


# -- canonical decomposition ----------------------------------------------------------

@pytest.mark.parametrize("alpha, expected", [
    ((2, 5), [Prep(0), Prep(1), Prep(1)]),
    ((5, 5), [DELTA] * 5),
    ((7, 4), [Prei(1), Prei(1), Prei(2)]),
    ((1, 0), [Prei(0)]),
])
def test_candecomp_examples(alpha, expected):
    assert sorted(canonical_decomposition(DimVector(*alpha))) == sorted(expected)


def test_candecomp_up_to_30():
    for a, b in itertools.product(range(31), repeat=2):
        if a + b == 0:
            continue
        roots = canonical_decomposition(DimVector(a, b))
        assert sorted(roots) == sorted(canonical_decomposition_closed_form(DimVector(a, b)))
        total = DimVector(0, 0)
        for r in roots:
            total = total + r.dim
        assert total == DimVector(a, b)
        for x, y in itertools.combinations(roots, 2):
            assert hom_ext_generic(x, y)[1] == 0 and hom_ext_generic(y, x)[1] == 0
        assert codim(MonoidElement.from_schur_roots(roots)) == 0


def test_candecomp_zero():
    with pytest.raises(ValueError):
        canonical_decomposition(DimVector(0, 0))


def test_codim_zero_iff_full_space():
    seen = {}
    for n in range(1, 17):
        for letters in itertools.product("ij", repeat=n):
            w = "".join(letters)
            x = monoid_normalize(w)
            if x.dim.fits_in(DimVector(8, 8)):
                seen[x] = True
    assert len(seen) > 100
    for x in seen:
        full = monoid_normalize("i" * x.dim.i + "j" * x.dim.j)
        assert (codim(x) == 0) == (x == full), x

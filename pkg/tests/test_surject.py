import itertools
import random

import pytest

from kroncomp.algebra import AlphaMonomial, alpha_multiply, q0_alpha_normal_form
from kroncomp.monoid import MonoidElement, monoid_multiply, monoid_normalize
from kroncomp.surject import cross_check, kernel_witness, project


@pytest.mark.parametrize("alpha, expected", [
    (AlphaMonomial(delta=(1, 1)), MonoidElement((), 2, ())),
    (AlphaMonomial((0,), (), (0,)), MonoidElement((0,), 0, (0,))),
    (AlphaMonomial((1,), (2, 1), (0,)), MonoidElement((1,), 3, (0,))),
])
def test_project_examples(alpha, expected):
    assert project(alpha) == expected


def test_cross_check_examples():
    rep = cross_check("ijij")
    assert rep.images_agree
    assert rep.algebra_normal_form == AlphaMonomial(delta=(1, 1))
    assert rep.monoid_normal_form == MonoidElement((), 2, ())
    assert cross_check("ji").images_agree
    rep = cross_check("iiiijj")
    assert rep.algebra_normal_form == AlphaMonomial(i=(1, 1))
    assert rep.monoid_normal_form == MonoidElement((), 0, (1, 1))
    assert rep.to_json()["agree"] is True


def test_cross_check_exhaustive_length_8():
    for n in range(1, 9):
        for letters in itertools.product("ij", repeat=n):
            assert cross_check("".join(letters)).images_agree


def test_cross_check_random_long():
    rng = random.Random(41)
    for _ in range(500):
        w = "".join(rng.choice("ij") for _ in range(rng.randint(9, 24)))
        assert cross_check(w).images_agree, w


@pytest.mark.parametrize("m", range(2, 7))
def test_kernel_witness(m):
    left, right = kernel_witness(m)
    assert left == AlphaMonomial(delta=(1,) * m)
    assert right == AlphaMonomial(delta=(m,))
    assert left != right
    assert project(left) == project(right) == MonoidElement((), m, ())


def test_kernel_witness_m1_is_trivial():
    left, right = kernel_witness(1)
    assert left == right == AlphaMonomial(delta=(1,))


def test_project_is_a_homomorphism():
    rng = random.Random(43)
    for _ in range(500):
        x = q0_alpha_normal_form("".join(rng.choice("ij") for _ in range(rng.randint(1, 10))))
        y = q0_alpha_normal_form("".join(rng.choice("ij") for _ in range(rng.randint(1, 10))))
        assert monoid_multiply(project(x), project(y)) == project(alpha_multiply(x, y))


def test_surjective_on_small_grades():
    # every monoid element of small dimension is hit by some alpha monomial
    images = set()
    targets = set()
    for n in range(1, 11):
        for letters in itertools.product("ij", repeat=n):
            w = "".join(letters)
            images.add(project(q0_alpha_normal_form(w)))
            targets.add(monoid_normalize(w))
    assert targets <= images

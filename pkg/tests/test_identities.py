import random
import time

import pytest

from kroncomp.algebra import (AlphaMonomial, PBWMonomial, specialize, straighten_word,
                              verify_presentations, word_element)
from kroncomp.exactq import Q
from kroncomp.identities import (EXCLUSION_NOTE, basis_change, basis_lift_determinant,
                                 d1_expansion_rhs, monomiality_check, q0_coordinates, serre_relation)
from kroncomp.roots import DimVector


def test_serre_relations_vanish():
    assert serre_relation("i").is_zero()
    assert serre_relation("j").is_zero()


def test_perturbed_serre_is_detected():
    assert not serre_relation("i", Q * Q + Q).is_zero()
    assert not serre_relation("j", Q * Q + Q).is_zero()


def test_r1_times_j_is_p1():
    x = specialize(straighten_word("ijj") - straighten_word("jij"), 0)
    assert dict(x.items()) == {PBWMonomial((1,)): 1}


def test_suite_passes():
    t0 = time.perf_counter()
    report = verify_presentations()
    assert report.ok, report.failure and report.failure.name
    assert time.perf_counter() - t0 < 10
    assert len(report.checked) > 90
    assert EXCLUSION_NOTE in report.notes
    names = " ".join(report.checked)
    for needle in ("Serre", "R(1)", "P(4)", "I(4)", "R(4)"):
        assert needle in names


def d1_power_j(m):
    d1 = word_element("ij", 0) - word_element("ji", 0)
    return d1 ** m * word_element("j", 0)


@pytest.mark.parametrize("m", range(1, 6))
def test_d1_expansion_sum_from_zero(m):
    assert d1_power_j(m) == d1_expansion_rhs(m)


@pytest.mark.parametrize("m", range(2, 6))
def test_d1_expansion_sum_from_one_fails(m):
    # the r = 0 term j R(m) does not vanish at q = 0
    assert d1_power_j(m) != d1_expansion_rhs(m, start=1)


def test_report_json():
    out = verify_presentations(max_defining=1, max_derived=1, max_r=1, max_expansion=1, max_delta=1)
    js = out.to_json()
    assert js["ok"] and js["checked"] == len(out.checked) and "failure" not in js


def test_basis_lift_determinants():
    for a in range(9):
        for b in range(9 - a):
            if a + b == 0:
                continue
            alphas, pbws, _ = basis_change(DimVector(a, b))
            assert len(alphas) == len(pbws)
            assert basis_lift_determinant(DimVector(a, b)) != 0


def test_q0_coordinates_examples():
    x = specialize(straighten_word("ijij"), 0)
    assert q0_coordinates(x) == {AlphaMonomial(delta=(1, 1)): 1}
    with pytest.raises(ValueError):
        q0_coordinates(straighten_word("ij"))


def test_monomiality_random():
    rng = random.Random(17)
    for _ in range(200):
        w = "".join(rng.choice("ij") for _ in range(rng.randint(1, 12)))
        assert monomiality_check(w), w

import itertools

import pytest

from kroncomp.roots import (DELTA, DimVector, Iso, PositiveRoot, Prei, Prep, SchurRoot, euler_form,
                            hom_ext_generic, parse_dim, parse_root, root_compare, schur_compare)


def schur_roots(limit):
    return [Prep(m) for m in range(limit + 1)] + [DELTA] + [Prei(n) for n in range(limit + 1)]


def test_euler_examples():
    assert euler_form(DimVector(1, 0), DimVector(0, 1)) == -2
    assert euler_form(DimVector(1, 1), DimVector(1, 1)) == 0
    assert euler_form(DimVector(1, 0), DimVector(1, 2)) == -3


def test_dims():
    assert Prep(3).dim == DimVector(3, 4)
    assert Prei(2).dim == DimVector(3, 2)
    assert DELTA.dim == DimVector(1, 1)
    assert Iso(4).dim == DimVector(4, 4)
    with pytest.raises(ValueError):
        DimVector(-1, 0)


def test_dimvector_arithmetic():
    a, b = DimVector(1, 2), DimVector(3, 1)
    assert a + b == DimVector(4, 3)
    assert b * 2 == DimVector(6, 2)
    assert a.fits_in(DimVector(1, 2)) and not b.fits_in(a)
    assert str(a) == "[1,2]"


def test_hom_ext_examples():
    assert hom_ext_generic(DELTA, DELTA) == (0, 0)
    assert hom_ext_generic(Prei(0), Prep(0)) == (0, 2)
    for m in range(6):
        assert hom_ext_generic(DELTA, Prep(m)) == (0, 1)
    assert hom_ext_generic(Prep(1), Prep(0)) == (0, 0)


def test_euler_consistency_exhaustive():
    for x, y in itertools.product(schur_roots(20), repeat=2):
        hom, ext = hom_ext_generic(x, y)
        assert hom >= 0 and ext >= 0
        assert hom - ext == euler_form(x.dim, y.dim)


def test_ext_vanishes_upwards():
    for x, y in itertools.product(schur_roots(20), repeat=2):
        if schur_compare(x, y) < 0:
            assert hom_ext_generic(x, y)[1] == 0


def test_schur_order():
    assert schur_compare(Prep(3), DELTA) == -1
    assert schur_compare(Prei(5), Prei(2)) == -1
    assert schur_compare(DELTA, DELTA) == 0
    assert sorted([Prei(0), DELTA, Prep(2), Prei(3), Prep(0)]) == \
        [Prep(0), Prep(2), DELTA, Prei(3), Prei(0)]


def test_root_order():
    assert root_compare(Iso(3), Iso(2)) == -1
    assert root_compare(PositiveRoot("P", 9), Iso(1)) == -1
    assert root_compare(Iso(1), PositiveRoot("I", 0)) == -1


def test_parsing():
    assert parse_root("P(3)") == Prep(3)
    assert parse_root("I(0)") == Prei(0)
    assert parse_root("delta") == DELTA
    assert parse_root("3*delta") == Iso(3)
    assert parse_dim("[2,5]") == DimVector(2, 5)
    assert parse_dim("3,3") == DimVector(3, 3)
    with pytest.raises(ValueError):
        parse_root("Q(1)")
    assert str(Prep(3)) == "P(3)" and str(DELTA) == "delta"
    assert isinstance(DELTA, SchurRoot)

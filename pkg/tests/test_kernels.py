import json
import os
import subprocess
import sys

import numpy as np
import pytest

from kroncomp.oracle import _kernels as K
from kroncomp.oracle.ffield import gl_matrices, rank_mod_p
from kroncomp.oracle.hall import _build_class_table, _weights
from kroncomp.roots import DimVector

needs_numba = pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba unavailable or disabled")


@pytest.fixture
def restore_backend():
    before = K.backend()
    yield
    K.set_backend(before)


def both(fn):
    out = {}
    for name in ("numba", "numpy"):
        K.set_backend(name)
        out[name] = fn()
    return out["numba"], out["numpy"]


@needs_numba
@pytest.mark.parametrize("p, nj, ni", [(2, 2, 2), (2, 3, 2), (3, 2, 2), (2, 3, 3)])
def test_orbit_codes_agree(restore_backend, p, nj, ni):
    rng = np.random.default_rng(p * 100 + nj * 10 + ni)
    gj, gi, w = gl_matrices(nj, p), gl_matrices(ni, p), _weights(p, nj, ni)
    for _ in range(5):
        A = rng.integers(0, p, size=(nj, ni))
        B = rng.integers(0, p, size=(nj, ni))
        a, b = both(lambda: K.orbit_codes(A, B, gj, gi, p, w))
        assert np.array_equal(a, b)


@needs_numba
def test_rref_agree(restore_backend):
    rng = np.random.default_rng(0)
    for p in (2, 3):
        for shape in ((1, 1), (3, 5), (5, 3), (6, 9), (4, 4)):
            for _ in range(20):
                M = rng.integers(0, p, size=shape)
                (r1, p1), (r2, p2) = both(lambda: K.rref_mod_p(M, p))
                assert np.array_equal(r1, r2) and np.array_equal(p1, p2)


@pytest.mark.parametrize("p", [2, 3])
def test_rref_properties(p):
    rng = np.random.default_rng(p)
    for _ in range(50):
        M = rng.integers(0, p, size=(4, 6))
        R, piv = K.rref_mod_p_numpy(M, p)
        assert len(piv) == rank_mod_p(M, p)
        for r, c in enumerate(piv):
            assert R[r, c] == 1 and np.count_nonzero(R[:, c]) == 1


def test_rref_empty():
    R, piv = K.rref_mod_p(np.zeros((0, 3), dtype=np.int64), 2)
    assert R.shape == (0, 3) and len(piv) == 0
    with pytest.raises(ValueError):
        K.rref_mod_p(np.zeros(3, dtype=np.int64), 2)


@needs_numba
def test_class_tables_agree(restore_backend):
    dim = DimVector(2, 2)
    tables = []
    for name in ("numba", "numpy"):
        K.set_backend(name)
        _build_class_table.cache_clear()
        tables.append(_build_class_table(3, dim))
    assert np.array_equal(tables[0].canon, tables[1].canon)
    assert tables[0].classes == tables[1].classes


def test_set_backend_rejects_unknown():
    with pytest.raises(ValueError):
        K.set_backend("cuda")


def test_env_flag_forces_numpy():
    env = dict(os.environ, KRONCOMP_DISABLE_NUMBA="1")
    code = ("import json; from kroncomp.oracle import _kernels as K, enumerate_classes;"
            "from kroncomp.roots import DimVector;"
            "print(json.dumps([K.HAVE_NUMBA, K.backend(), len(enumerate_classes(DimVector(2, 2), 2))]))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True)
    have, name, count = json.loads(out.stdout)
    assert not have and name == "numpy"
    from kroncomp.oracle import enumerate_classes
    assert count == len(enumerate_classes(DimVector(2, 2), 2))

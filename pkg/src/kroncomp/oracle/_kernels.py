"""Hot loops of the finite-field oracle: numba kernels with pure-numpy twins.

Set ``KRONCOMP_DISABLE_NUMBA=1`` to force the numpy path (also used
automatically when numba is missing). Both paths return identical arrays.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = [
    "HAVE_NUMBA",
    "backend",
    "set_backend",
    "orbit_codes",
    "orbit_codes_numpy",
    "rref_mod_p",
    "rref_mod_p_numpy",
]

_DISABLED = os.environ.get("KRONCOMP_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLED:
        raise ImportError("numba disabled by KRONCOMP_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on the environment
    HAVE_NUMBA = False


# -- orbit encodings ----------------------------------------------------------------

def orbit_codes_numpy(A, B, gj, gi, p, weights):
    """Codes of ``(g A h, g B h)`` for every ``g`` in ``gj`` and ``h`` in ``gi``.

    ``A, B`` have shape ``(nj, ni)``; ``gj`` is ``(Gj, nj, nj)`` and ``gi`` is
    ``(Gi, ni, ni)``. A pair is encoded as ``sum(entry_k * weights[k])`` over
    the row-major entries of A followed by those of B.
    """
    nj, ni = A.shape
    half = nj * ni
    wa, wb = weights[:half], weights[half:]
    ah = np.einsum("ab,hbc->hac", A, gi) % p
    bh = np.einsum("ab,hbc->hac", B, gi) % p
    out = np.empty((gj.shape[0], gi.shape[0]), dtype=np.int64)
    chunk = max(1, 2_000_000 // max(1, gi.shape[0] * half))
    for start in range(0, gj.shape[0], chunk):
        g = gj[start:start + chunk]
        ga = np.einsum("gab,hbc->ghac", g, ah) % p
        gb = np.einsum("gab,hbc->ghac", g, bh) % p
        out[start:start + chunk] = ga.reshape(len(g), gi.shape[0], half) @ wa \
            + gb.reshape(len(g), gi.shape[0], half) @ wb
    return out.reshape(-1)


def rref_mod_p_numpy(M, p):
    """Reduced row echelon form over F_p. Returns ``(R, pivot_columns)``."""
    R = np.array(M, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = (R[r] * pow(int(R[r, c]), -1, p)) % p
        factors = R[:, c].copy()
        factors[r] = 0
        R -= np.outer(factors, R[r])
        R %= p
        pivots.append(c)
        r += 1
    return R, np.array(pivots, dtype=np.int64)


if HAVE_NUMBA:

    @njit(cache=True)
    def _orbit_codes_nb(A, B, gj, gi, p, weights):
        nj, ni = A.shape
        half = nj * ni
        n_gi = gi.shape[0]
        ah = np.empty((n_gi, nj, ni), dtype=np.int64)
        bh = np.empty((n_gi, nj, ni), dtype=np.int64)
        for h in range(n_gi):
            for a in range(nj):
                for c in range(ni):
                    sa = 0
                    sb = 0
                    for b in range(ni):
                        sa += A[a, b] * gi[h, b, c]
                        sb += B[a, b] * gi[h, b, c]
                    ah[h, a, c] = sa % p
                    bh[h, a, c] = sb % p
        out = np.empty(gj.shape[0] * n_gi, dtype=np.int64)
        k = 0
        for g in range(gj.shape[0]):
            for h in range(n_gi):
                code = 0
                for a in range(nj):
                    for c in range(ni):
                        sa = 0
                        sb = 0
                        for b in range(nj):
                            sa += gj[g, a, b] * ah[h, b, c]
                            sb += gj[g, a, b] * bh[h, b, c]
                        code += (sa % p) * weights[a * ni + c]
                        code += (sb % p) * weights[half + a * ni + c]
                out[k] = code
                k += 1
        return out

    @njit(cache=True)
    def _rref_nb(M, p):
        R = M.copy()
        rows, cols = R.shape
        for a in range(rows):
            for b in range(cols):
                R[a, b] = R[a, b] % p
        pivots = np.empty(min(rows, cols), dtype=np.int64)
        r = 0
        for c in range(cols):
            if r == rows:
                break
            k = -1
            for t in range(r, rows):
                if R[t, c] != 0:
                    k = t
                    break
            if k < 0:
                continue
            if k != r:
                for b in range(cols):
                    tmp = R[r, b]
                    R[r, b] = R[k, b]
                    R[k, b] = tmp
            # inverse by Fermat: p is prime
            inv = 1
            base = R[r, c]
            e = p - 2
            while e > 0:
                if e & 1:
                    inv = (inv * base) % p
                base = (base * base) % p
                e >>= 1
            for b in range(cols):
                R[r, b] = (R[r, b] * inv) % p
            for t in range(rows):
                f = R[t, c]
                if t != r and f != 0:
                    for b in range(cols):
                        R[t, b] = (R[t, b] - f * R[r, b]) % p
            pivots[r] = c
            r += 1
        return R, pivots[:r].copy()


_BACKEND = "numba" if HAVE_NUMBA else "numpy"


def backend() -> str:
    return _BACKEND


def set_backend(name: str) -> None:
    """Switch between ``"numba"`` and ``"numpy"`` at runtime (tests, benchmarks)."""
    global _BACKEND
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not available")
    _BACKEND = name


def _i64(x):
    return np.ascontiguousarray(x, dtype=np.int64)


def orbit_codes(A, B, gj, gi, p, weights):
    if _BACKEND == "numba":
        return _orbit_codes_nb(_i64(A), _i64(B), _i64(gj), _i64(gi), int(p), _i64(weights))
    return orbit_codes_numpy(_i64(A), _i64(B), _i64(gj), _i64(gi), int(p), _i64(weights))


def rref_mod_p(M, p):
    M = _i64(M)
    if M.ndim != 2:
        raise ValueError("rref_mod_p expects a matrix")
    if M.size == 0:
        return M.copy(), np.zeros(0, dtype=np.int64)
    if _BACKEND == "numba":
        return _rref_nb(M, int(p))
    return rref_mod_p_numpy(M, int(p))

"""Linear algebra over small prime fields F_p."""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from ._kernels import rref_mod_p

SUPPORTED_PRIMES = (2, 3)


def check_prime(p: int) -> int:
    if p not in SUPPORTED_PRIMES:
        raise ValueError(f"only p in {SUPPORTED_PRIMES} is supported, got {p}")
    return p


def rank_mod_p(M, p: int) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref_mod_p(M, p)[1])


def nullspace_mod_p(M, p: int) -> np.ndarray:
    """Basis of ``{x : M x = 0}`` as the rows of a ``(k, n)`` array."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1]
    if M.shape[0] == 0 or n == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = rref_mod_p(M, p)
    pivots = [int(c) for c in pivots]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, c in enumerate(pivots):
            basis[k, c] = (-R[r, f]) % p
    return basis


@lru_cache(maxsize=None)
def gl_matrices(n: int, p: int) -> np.ndarray:
    """All invertible ``n x n`` matrices over F_p, shape ``(|GL_n(F_p)|, n, n)``."""
    if n == 0:
        return np.zeros((1, 0, 0), dtype=np.int64)
    entries = np.array(list(itertools.product(range(p), repeat=n * n)), dtype=np.int64)
    mats = entries.reshape(-1, n, n)
    dets = np.rint(np.linalg.det(mats.astype(float))).astype(np.int64) % p
    out = mats[dets != 0]
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def subspaces(n: int, p: int) -> tuple:
    """Every subspace of F_p^n as ``(basis, pivots, nonpivots)``.

    ``basis`` is the ``(d, n)`` reduced row echelon basis.
    """
    out = []
    for d in range(n + 1):
        for piv in itertools.combinations(range(n), d):
            # free entries: columns right of each pivot that are not pivots
            slots = [(r, c) for r, pc in enumerate(piv) for c in range(pc + 1, n) if c not in piv]
            for vals in itertools.product(range(p), repeat=len(slots)):
                basis = np.zeros((d, n), dtype=np.int64)
                for r, pc in enumerate(piv):
                    basis[r, pc] = 1
                for (r, c), v in zip(slots, vals):
                    basis[r, c] = v
                nonpiv = tuple(c for c in range(n) if c not in piv)
                basis.setflags(write=False)
                out.append((basis, tuple(piv), nonpiv))
    return tuple(out)


def gaussian_binomial(n: int, k: int, p: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for t in range(k):
        num *= p ** (n - t) - 1
        den *= p ** (t + 1) - 1
    return num // den

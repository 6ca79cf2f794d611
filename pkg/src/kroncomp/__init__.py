"""Composition algebra and composition monoid of the Kronecker quiver.

Modules:

* :mod:`kroncomp.exactq` exact rationals and polynomials in ``q``
* :mod:`kroncomp.roots` dimension vectors, Schur roots, generic Hom/Ext
* :mod:`kroncomp.algebra` PBW straightening at generic q and at q = 0
* :mod:`kroncomp.monoid` the composition monoid and canonical decomposition
* :mod:`kroncomp.surject` the projection from the q=0 algebra onto the monoid
* :mod:`kroncomp.oracle` brute-force Hall algebras over F_2 and F_3
"""

from .algebra import (AlgebraElement, AlphaMonomial, PBWMonomial, Straightener, alpha_expand,
                      multiply, q0_alpha_normal_form, specialize, straighten_word,
                      verify_presentations)
from .exactq import QPolynomial
from .monoid import MonoidElement, canonical_decomposition, describe_generic, monoid_normalize
from .roots import DimVector, SchurRoot, hom_ext_generic
from .surject import cross_check, kernel_witness, project

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "AlphaMonomial",
    "PBWMonomial",
    "Straightener",
    "QPolynomial",
    "MonoidElement",
    "DimVector",
    "SchurRoot",
    "straighten_word",
    "multiply",
    "specialize",
    "q0_alpha_normal_form",
    "alpha_expand",
    "verify_presentations",
    "monoid_normalize",
    "canonical_decomposition",
    "describe_generic",
    "hom_ext_generic",
    "cross_check",
    "kernel_witness",
    "project",
]

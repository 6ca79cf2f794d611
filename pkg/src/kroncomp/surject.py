"""The surjection from CA_0 onto the monoid ring of the composition monoid.

``(alpha) -> Rep(alpha)``: preprojective and preinjective factors pass through
unchanged, while the delta partition collapses to its sum because the delta's
commute in CA_0 but multiply in the monoid.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlphaMonomial, alpha_word, q0_alpha_normal_form
from .monoid import MonoidElement, monoid_normalize

__all__ = ["ProjectionReport", "project", "cross_check", "kernel_witness"]


def project(m: AlphaMonomial) -> MonoidElement:
    return MonoidElement(m.p, sum(m.delta), m.i)


@dataclass(frozen=True)
class ProjectionReport:
    word: str
    algebra_normal_form: AlphaMonomial
    monoid_normal_form: MonoidElement
    images_agree: bool

    def to_json(self) -> dict:
        return {"word": self.word,
                "algebra": self.algebra_normal_form.to_json(),
                "monoid": self.monoid_normal_form.to_json(with_codim=False),
                "agree": self.images_agree}


def cross_check(word: str) -> ProjectionReport:
    """Compute the image of ``word`` in the monoid two ways and compare."""
    alg = q0_alpha_normal_form(word)
    mon = monoid_normalize(word)
    return ProjectionReport(word, alg, mon, project(alg) == mon)


def kernel_witness(m: int) -> tuple[AlphaMonomial, AlphaMonomial]:
    """Normal forms of ``(ij)^m`` and ``i^m j^m``: distinct in CA_0, equal in the monoid."""
    if m < 1:
        raise ValueError("kernel_witness needs m >= 1")
    left = q0_alpha_normal_form("ij" * m)
    right = q0_alpha_normal_form("i" * m + "j" * m)
    if project(left) != project(right):
        raise AssertionError(f"(ij)^{m} and i^{m}j^{m} have different monoid images")
    if m >= 2 and left == right:
        raise AssertionError(f"(ij)^{m} and i^{m}j^{m} coincide in CA_0")
    return left, right


def word_of(m: AlphaMonomial) -> str:
    return alpha_word(m)

"""Elements and conjugacy in ``A_φ = A_Γ ⋊ Z/m`` with ``t^-1 x t = φ(x)``.

An element ``v t^a`` is stored as ``(v, a)``.  Pushing ``t^a`` past a word
gives ``t^a v = φ^-a(v) t^a``, hence

    (u, a)(v, b) = (u φ^-a(v), a + b)      (u, a)^-1 = (φ^a(u^-1), -a)

Conjugating ``(u, a)`` by ``w t^k`` gives ``φ^a(w')^-1 φ^k(u) w' t^a`` with
``w' = φ^(k-a)(w)``, so ``(u, a) ~ (v, b)`` iff ``a = b`` and ``v`` is
``φ^a``-twisted conjugate to some ``φ^k(u)``.
"""

from __future__ import annotations

import re

from .errors import GroupMismatch, ParseError
from .graph import LengthPreservingAut
from .piling import build_from_codes, normal_codes
from .twisted import tcp, twisted_class_key
from .word import Word


class ExtElement:
    """``base · t^texp`` with the base kept as its normal word."""

    __slots__ = ("phi", "base", "texp")

    def __init__(self, phi: LengthPreservingAut, base: Word, texp: int = 0):
        if base.graph is not phi.graph and base.graph != phi.graph:
            raise GroupMismatch("base word and automorphism are over different graphs")
        self.phi = phi
        self.base = Word(base.graph, normal_codes(build_from_codes(base.graph, base.codes)))
        self.texp = texp % phi.order

    @classmethod
    def parse(cls, phi: LengthPreservingAut, text: str) -> "ExtElement":
        """Parse ``"<word> ; t^<k>"``; either part may be omitted."""
        word_part, sep, t_part = text.partition(";")
        texp = 0
        if sep:
            token = t_part.strip()
            offset = len((word_part + sep).encode("utf-8")) + len(t_part) - len(t_part.lstrip())
            m = re.fullmatch(r"t(?:\^([+-]?\d+))?", token)
            if m is None:
                raise ParseError("expected t^<k>", token, offset)
            texp = int(m.group(1) or 1)
        else:
            token = word_part.strip()
            m = re.fullmatch(r"t(?:\^([+-]?\d+))?", token)
            if m and "t" not in phi.graph.index:
                word_part, texp = "", int(m.group(1) or 1)
        return cls(phi, Word.parse(phi.graph, word_part), texp)

    @classmethod
    def identity(cls, phi: LengthPreservingAut) -> "ExtElement":
        return cls(phi, Word(phi.graph), 0)

    @classmethod
    def t(cls, phi: LengthPreservingAut, k: int = 1) -> "ExtElement":
        return cls(phi, Word(phi.graph), k)

    def key(self) -> tuple:
        return (self.base.codes, self.texp)

    def __eq__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        return ext_equal(self, other)

    def __hash__(self):
        return hash(self.key())

    def __mul__(self, other):
        return ext_multiply(self, other)

    def __str__(self):
        return f"{self.base} ; t^{self.texp}".lstrip()

    def __repr__(self):
        return f"ExtElement({str(self)!r})"


def _same_group(g: ExtElement, h: ExtElement):
    if g.phi is not h.phi and g.phi != h.phi:
        raise GroupMismatch("elements belong to different extensions")


def ext_multiply(g: ExtElement, h: ExtElement) -> ExtElement:
    """
    >>> from pilings.graph import example_graph, inversion_aut
    >>> phi = inversion_aut(example_graph(), ["a2", "a4"])
    >>> str(ExtElement.t(phi) * ExtElement.parse(phi, "a2"))
    'a2^-1 ; t^1'
    """
    _same_group(g, h)
    table = g.phi.letter_table(-g.texp)
    codes = g.base.codes + tuple(table[c] for c in h.base.codes)
    return ExtElement(g.phi, Word(g.base.graph, codes), g.texp + h.texp)


def ext_inverse(g: ExtElement) -> ExtElement:
    table = g.phi.letter_table(g.texp)
    return ExtElement(g.phi, Word(g.base.graph, [table[c ^ 1] for c in reversed(g.base.codes)]), -g.texp)


def ext_equal(g: ExtElement, h: ExtElement) -> bool:
    _same_group(g, h)
    return g.texp == h.texp and g.base.codes == h.base.codes


def _base_power(g: ExtElement, k: int) -> Word:
    table = g.phi.letter_table(k)
    return Word(g.base.graph, [table[c] for c in g.base.codes])


def ext_conjugate(g: ExtElement, h: ExtElement, budget=None) -> bool:
    _same_group(g, h)
    if g.texp != h.texp:
        return False
    phi_a = g.phi.power(g.texp)
    kwargs = {} if budget is None else {"budget": budget}
    return any(tcp(_base_power(g, k), h.base, phi_a, **kwargs) for k in range(g.phi.order))


def ext_class_key(g: ExtElement, budget=None) -> tuple:
    """Canonical label of the conjugacy class of ``g`` in ``A_φ``."""
    phi_a = g.phi.power(g.texp)
    kwargs = {} if budget is None else {"budget": budget}
    keys = []
    for k in range(g.phi.order):
        p = build_from_codes(g.base.graph, _base_power(g, k).codes)
        keys.append(tuple(-c for c in twisted_class_key(p, phi_a, **kwargs)))
    best = min(keys, key=lambda cs: (len(cs), cs))
    return (g.texp, tuple(-c for c in best))

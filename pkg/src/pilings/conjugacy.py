"""Linear-time conjugacy in RAAGs and canonical conjugacy-class keys.

Both words are cyclically reduced as pilings, split into non-split factors
(one per component of the support in the complement graph), and each factor
is brought to a pyramid whose normal word is a cyclic normal form.  Two
elements are conjugate exactly when supports agree and the factor forms are
rotations of one another.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .errors import GraphMismatch, LengthMismatch
from .graph import DefiningGraph
from .piling import (
    build_from_codes,
    cyclic_reduce,
    delta_subgraph,
    normal_codes,
    pyramid_codes,
    split_codes,
    Piling,
    build_piling,
)
from .word import Word, find_codes


def cyclic_forms(p: Piling, reduce=cyclic_reduce, twist_for=None) -> dict[frozenset, list[int]]:
    """Map each non-split component of ``reduce(p)`` to a cyclic normal form.

    ``twist_for(comp)`` may return per-period letter maps for the twisted
    variant; by default rotations are plain.
    """
    g = p.graph
    q = reduce(p)
    _, comps = delta_subgraph(q)
    if not comps:
        return {}
    codes = normal_codes(q)
    parts = [codes] if len(comps) == 1 else split_codes(g, codes, comps)
    forms = {}
    for comp, part in zip(comps, parts):
        twist = twist_for(comp) if twist_for else ()
        pyramid = pyramid_codes(g, part, min(comp), twist)
        forms[comp] = normal_codes(build_from_codes(g, pyramid))
    return forms


def cyclic_normal_forms(w: Word) -> dict[frozenset, Word]:
    return {comp: Word(w.graph, codes) for comp, codes in cyclic_forms(build_piling(w)).items()}


def _same_graph(u: Word, v: Word):
    if u.graph is not v.graph and u.graph != v.graph:
        raise GraphMismatch("words are over different graphs")


def conjugate(u: Word, v: Word) -> bool:
    """Decide whether ``u`` and ``v`` are conjugate in ``A_Γ``.

    >>> from pilings.graph import example_graph
    >>> g = example_graph()
    >>> conjugate(Word.parse(g, "a1 a2"), Word.parse(g, "a2 a1"))
    True
    >>> conjugate(Word.parse(g, "a1"), Word.parse(g, "a1^-1"))
    False
    """
    _same_graph(u, v)
    return forms_conjugate(cyclic_forms(build_piling(u)), cyclic_forms(build_piling(v)))


def forms_conjugate(fu: dict, fv: dict) -> bool:
    if fu.keys() != fv.keys():
        return False
    for comp, a in fu.items():
        b = fv[comp]
        if len(a) != len(b) or find_codes(a + a, b) < 0:
            return False
    return True


def cyclic_match(u: Word, v: Word) -> bool:
    """True when ``v`` is a rotation of ``u``."""
    _same_graph(u, v)
    if len(u) != len(v):
        raise LengthMismatch(f"lengths differ: {len(u)} != {len(v)}")
    return find_codes(u.codes + u.codes, v.codes) >= 0


def least_rotation(s: Sequence[int]) -> int:
    """Start index of the lexicographically least rotation (Booth)."""
    n = len(s)
    if n == 0:
        return 0
    ss = list(s) + list(s)
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        c = ss[j]
        i = f[j - k - 1]
        while i != -1 and c != ss[k + i + 1]:
            if c < ss[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if c != ss[k + i + 1]:
            if c < ss[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def min_rotation_inv(codes: Sequence[int]) -> tuple[int, ...]:
    """Rotation of ``codes`` that is least letterwise under ``≤⁻¹``."""
    k = least_rotation([-c for c in codes])
    return tuple(codes[k:]) + tuple(codes[:k])


class ClassKey(NamedTuple):
    """Canonical conjugacy-class label: ``(component, rotation)`` pairs sorted
    by component."""

    factors: tuple

    def length(self) -> int:
        return sum(len(rot) for _, rot in self.factors)


def key_from_forms(forms: dict) -> ClassKey:
    return ClassKey(tuple(sorted((tuple(sorted(comp)), min_rotation_inv(codes)) for comp, codes in forms.items())))


def class_key(u: Word) -> ClassKey:
    return piling_class_key(build_piling(u))


def piling_class_key(p: Piling) -> ClassKey:
    return key_from_forms(cyclic_forms(p))


def conjugate_pilings(g: DefiningGraph, p: Piling, q: Piling) -> bool:
    return forms_conjugate(cyclic_forms(p), cyclic_forms(q))

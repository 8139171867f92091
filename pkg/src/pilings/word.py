"""Words over ``X = V(Γ)^±``.

A :class:`Word` is a plain sequence of letter codes bound to a graph.  No
reduction happens on construction; group equality is decided by pilings.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple, Sequence

from .errors import GraphMismatch, LengthMismatch, ParseError
from .graph import DefiningGraph, LengthPreservingAut


class Letter(NamedTuple):
    vertex: int
    sign: int

    @property
    def code(self) -> int:
        return 2 * self.vertex + (self.sign < 0)

    @classmethod
    def from_code(cls, c: int) -> "Letter":
        return cls(c >> 1, -1 if c & 1 else 1)


_TOKEN_RE = re.compile(r"[^\s.]+")
_POWER_RE = re.compile(r"^([^\^]+)(?:\^([+-]?\d+))?$")


class Word:
    """A finite sequence of signed generators.

    ``codes`` holds letters as integers, ``2*v`` for ``s_v`` and ``2*v+1`` for
    its inverse.

    >>> from pilings.graph import example_graph
    >>> w = Word.parse(example_graph(), "a1 a2^-1 . a3^2")
    >>> str(w)
    'a1 a2^-1 a3 a3'
    >>> len(w)
    4
    """

    __slots__ = ("graph", "codes")

    def __init__(self, graph: DefiningGraph, codes: Iterable[int] = ()):
        self.graph = graph
        self.codes = tuple(codes)

    @classmethod
    def parse(cls, graph: DefiningGraph, text: str) -> "Word":
        codes = []
        for m in _TOKEN_RE.finditer(text):
            token = m.group()
            offset = len(text[: m.start()].encode("utf-8"))
            pm = _POWER_RE.match(token)
            if pm is None:
                raise ParseError("malformed token", token, offset)
            name, exp = pm.group(1), pm.group(2)
            if name not in graph.index:
                if name in ("1", "e") and exp is None:
                    continue
                raise ParseError("unknown generator", token, offset)
            v = graph.index[name]
            k = 1 if exp is None else int(exp)
            codes.extend([2 * v + (k < 0)] * abs(k))
        return cls(graph, codes)

    @classmethod
    def from_letters(cls, graph: DefiningGraph, letters: Iterable[Sequence[int]]) -> "Word":
        codes = []
        for v, s in letters:
            if not 0 <= v < graph.rank or s not in (1, -1):
                raise ValueError(f"invalid letter ({v}, {s})")
            codes.append(2 * v + (s < 0))
        return cls(graph, codes)

    def __len__(self):
        return len(self.codes)

    def __iter__(self):
        return map(Letter.from_code, self.codes)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.graph, self.codes[i])
        return Letter.from_code(self.codes[i])

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.codes == other.codes and self.graph == other.graph

    def __hash__(self):
        return hash(self.codes)

    def __add__(self, other: "Word") -> "Word":
        _same_graph(self, other)
        return Word(self.graph, self.codes + other.codes)

    def __repr__(self):
        return f"Word({str(self)!r})"

    def __str__(self):
        names = self.graph.vertices
        return " ".join(names[c >> 1] + ("^-1" if c & 1 else "") for c in self.codes)

    @property
    def letters(self) -> list[Letter]:
        return list(self)

    def inverse(self) -> "Word":
        return Word(self.graph, [c ^ 1 for c in reversed(self.codes)])


def _same_graph(u: Word, v: Word):
    if u.graph is not v.graph and u.graph != v.graph:
        raise GraphMismatch("words are over different graphs")


def compare_shortlex_inv(u: Word, v: Word) -> int:
    """Three-way comparison under ``≤⁻¹_SL``: shorter first, then letterwise
    with the base order reversed.  Returns -1, 0 or 1.

    >>> from pilings.graph import example_graph
    >>> g = example_graph()
    >>> compare_shortlex_inv(Word.parse(g, "a4 a1"), Word.parse(g, "a1 a4"))
    -1
    """
    _same_graph(u, v)
    a, b = u.codes, v.codes
    if len(a) != len(b):
        return -1 if len(a) < len(b) else 1
    for x, y in zip(a, b):
        if x != y:
            return -1 if x > y else 1
    return 0


def shortlex_inv_key(codes: Sequence[int]) -> tuple:
    """Sort key realizing ``≤⁻¹_SL`` on code sequences."""
    return (len(codes), tuple(-c for c in codes))


def apply_aut(phi: LengthPreservingAut, w: Word, k: int = 1) -> Word:
    _check_aut(phi, w)
    table = phi.letter_table(k)
    return Word(w.graph, [table[c] for c in w.codes])


def phi_cyclic_permute_word(w: Word, phi: LengthPreservingAut, i: int, k: int) -> Word:
    """``φ^k(x_{i+1}…x_n) φ^{k-1}(x_1…x_i)``."""
    _check_aut(phi, w)
    if not 0 <= i <= len(w):
        raise ValueError(f"split position {i} outside 0..{len(w)}")
    hi, lo = phi.letter_table(k), phi.letter_table(k - 1)
    return Word(w.graph, [hi[c] for c in w.codes[i:]] + [lo[c] for c in w.codes[:i]])


def phi_cyclic_match(u: Word, v: Word, phi: LengthPreservingAut) -> bool:
    """True when ``v`` is some φ-cyclic permutation of ``u``."""
    _same_graph(u, v)
    _check_aut(phi, u)
    if len(u) != len(v):
        raise LengthMismatch(f"lengths differ: {len(u)} != {len(v)}")
    if not u.codes:
        return True
    pattern = v.codes
    for k in range(phi.order):
        hi, lo = phi.letter_table(k), phi.letter_table(k - 1)
        text = [hi[c] for c in u.codes] + [lo[c] for c in u.codes]
        if find_codes(text, pattern) >= 0:
            return True
    return False


def _check_aut(phi: LengthPreservingAut, w: Word):
    if phi.graph is not w.graph and phi.graph != w.graph:
        raise GraphMismatch("automorphism and word are over different graphs")


def find_codes(text: Sequence[int], pattern: Sequence[int]) -> int:
    """Index of the first occurrence of ``pattern`` in ``text`` or -1.

    Small alphabets go through ``bytes.find``; larger ones use KMP.
    """
    if not pattern:
        return 0
    try:
        return bytes(text).find(bytes(pattern))
    except ValueError:
        return _kmp_find(text, pattern)


def _kmp_find(text: Sequence[int], pattern: Sequence[int]) -> int:
    fail = [0] * len(pattern)
    j = 0
    for i in range(1, len(pattern)):
        while j and pattern[i] != pattern[j]:
            j = fail[j - 1]
        if pattern[i] == pattern[j]:
            j += 1
        fail[i] = j
    j = 0
    for i, c in enumerate(text):
        while j and c != pattern[j]:
            j = fail[j - 1]
        if c == pattern[j]:
            j += 1
            if j == len(pattern):
                return i - j + 1
    return -1

"""Brute-force ground truth for the decision procedures.

Everything here is deliberately naive.  Equality of words is decided either
by exhaustive rewriting (commutations and free cancellations) or, in the
conjugator searches, by comparing pilings, which the rewriting oracle checks
independently.

Conjugator searches walk the ball of group elements breadth first, so the
first witness returned is the first element found in shortlex-by-generation
order.
"""

from __future__ import annotations

from collections import deque
from itertools import product
from typing import Iterable, Sequence

from .errors import BoundExceeded
from .graph import DefiningGraph, LengthPreservingAut
from .piling import ZERO, Piling, build_from_codes, build_piling, normal_codes
from .word import Word, shortlex_inv_key

SHUFFLE_LIMIT = 12
SHORTLEX_LIMIT = 8
STATE_CAP = 3_000_000


# -- word problem by rewriting ----------------------------------------------


def _rewrites(g: DefiningGraph, w: tuple):
    for i in range(len(w) - 1):
        a, b = w[i], w[i + 1]
        if a ^ 1 == b:
            yield w[:i] + w[i + 2:]
        elif a >> 1 != b >> 1 and g.adjacent(a >> 1, b >> 1):
            yield w[:i] + (b, a) + w[i + 2:]


def shuffle_closure(g: DefiningGraph, codes: Sequence[int], cap: int = STATE_CAP) -> set:
    """All words reachable from ``codes`` by commutations and free deletions.

    Insertions are never needed: the closure already contains every geodesic
    for the element, and two words are equal exactly when their closures
    share a geodesic.
    """
    start = tuple(codes)
    seen = {start}
    todo = [start]
    while todo:
        w = todo.pop()
        for x in _rewrites(g, w):
            if x not in seen:
                seen.add(x)
                if len(seen) > cap:
                    raise BoundExceeded(f"rewriting closure exceeded {cap} words")
                todo.append(x)
    return seen


def oracle_shuffle_equal(u: Word, v: Word) -> bool:
    if max(len(u), len(v)) > SHUFFLE_LIMIT:
        raise BoundExceeded(f"words longer than {SHUFFLE_LIMIT} letters")
    cu = shuffle_closure(u.graph, u.codes)
    if v.codes in cu:
        return True
    return not cu.isdisjoint(shuffle_closure(v.graph, v.codes))


def oracle_shortlex_min(u: Word) -> Word:
    if len(u) > SHORTLEX_LIMIT:
        raise BoundExceeded(f"words longer than {SHORTLEX_LIMIT} letters")
    return Word(u.graph, min(shuffle_closure(u.graph, u.codes), key=shortlex_inv_key))


def oracle_geodesic_length(u: Word) -> int:
    return min(len(w) for w in shuffle_closure(u.graph, u.codes))


# -- balls of group elements ------------------------------------------------


def ball(g: DefiningGraph, radius: int) -> list[tuple]:
    """One representative word (as codes) per element of length ``<= radius``,
    in breadth-first, lexicographic-extension order."""
    seen = {build_from_codes(g, ()).key()}
    out = [()]
    level = [()]
    for _ in range(radius):
        nxt = []
        for w in level:
            for c in range(2 * g.rank):
                if w and w[-1] == c ^ 1:
                    continue
                x = w + (c,)
                k = build_from_codes(g, x).key()
                if k not in seen:
                    seen.add(k)
                    nxt.append(x)
        out.extend(nxt)
        level = nxt
    return out


def _inv(codes):
    return tuple(c ^ 1 for c in reversed(codes))


def _twist(phi, codes):
    if phi is None:
        return tuple(codes)
    table = phi.letter_table(1)
    return tuple(table[c] for c in codes)


def oracle_twisted_conjugate(u: Word, v: Word, phi: LengthPreservingAut | None, bound: int) -> Word | None:
    """First ``w`` with ``|w| <= bound`` and ``φ(w)^-1 u w = v``, or None."""
    g = u.graph
    target = build_piling(v).key()
    for w in ball(g, bound):
        if build_from_codes(g, _inv(_twist(phi, w)) + u.codes + w).key() == target:
            return Word(g, w)
    return None


def oracle_conjugate(u: Word, v: Word, bound: int) -> Word | None:
    """First ``w`` with ``|w| <= bound`` and ``w^-1 u w = v``, or None."""
    return oracle_twisted_conjugate(u, v, None, bound)


def twisted_orbit(g: DefiningGraph, codes: Sequence[int], phi: LengthPreservingAut | None, radius: int) -> set:
    """Keys of ``φ(w)^-1 u w`` over all ``|w| <= radius``.

    Grown one letter at a time: conjugating by ``w x`` is conjugating the
    previous result by ``x``.
    """
    table = phi.letter_table(1) if phi is not None else range(2 * g.rank)
    start = tuple(codes)
    seen = {build_from_codes(g, start).key(): start}
    level = [start]
    for _ in range(radius):
        nxt = []
        for w in level:
            for c in range(2 * g.rank):
                x = (table[c] ^ 1,) + w + (c,)
                k = build_from_codes(g, x).key()
                if k not in seen:
                    seen[k] = x
                    nxt.append(x)
        level = nxt
    return set(seen)


def _orbit_with_witness(g, codes, phi, radius) -> dict:
    table = phi.letter_table(1) if phi is not None else range(2 * g.rank)
    start = tuple(codes)
    seen = {build_from_codes(g, start).key(): ()}
    level = [(start, ())]
    for _ in range(radius):
        nxt = []
        for x, w in level:
            for c in range(2 * g.rank):
                y = (table[c] ^ 1,) + x + (c,)
                k = build_from_codes(g, y).key()
                if k not in seen:
                    seen[k] = w + (c,)
                    nxt.append((y, w + (c,)))
        level = nxt
    return seen


def oracle_twisted_witness(u: Word, v: Word, phi: LengthPreservingAut | None, bound: int) -> Word | None:
    """Some ``w`` with ``|w| <= bound`` and ``φ(w)^-1 u w = v``, or None.

    Meets in the middle: if ``φ(a)^-1 u a = φ(b)^-1 v b`` then ``w = a b^-1``
    works, and every ``w`` of length ``<= 2r`` splits this way.
    """
    g = u.graph
    r = (bound + 1) // 2
    left = _orbit_with_witness(g, u.codes, phi, r)
    right = _orbit_with_witness(g, v.codes, phi, bound - r)
    for k, b in right.items():
        a = left.get(k)
        if a is not None:
            w = Word(g, a + _inv(b))
            assert build_from_codes(g, _inv(_twist(phi, w.codes)) + u.codes + w.codes).key() == build_piling(v).key()
            return w
    return None


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)


def classify_by_orbits(g: DefiningGraph, elements: Sequence[Sequence[int]], phi: LengthPreservingAut | None, radius: int) -> list[int]:
    """Label elements so that equal labels mean (twisted) conjugate.

    ``u`` and ``v`` are joined when their radius-``radius`` orbits meet, which
    happens exactly when a conjugator of length ``<= 2*radius`` exists.
    Labels are the transitive closure of that relation.
    """
    uf = _UnionFind(len(elements))
    owner = {}
    for i, w in enumerate(elements):
        for k in twisted_orbit(g, w, phi, radius):
            j = owner.setdefault(k, i)
            if j != i:
                uf.union(i, j)
    return [uf.find(i) for i in range(len(elements))]


# -- growth -----------------------------------------------------------------


def free_group_conj_growth(k: int, n_max: int) -> list[int]:
    """Conjugacy classes of ``F_k`` by length: cyclically reduced words up to
    rotation, counted by enumeration."""
    out = [1]
    letters = range(2 * k)
    for n in range(1, n_max + 1):
        classes = set()
        for w in product(letters, repeat=n):
            if any(w[i] ^ 1 == w[(i + 1) % n] for i in range(n)):
                continue
            classes.add(min(w[i:] + w[:i] for i in range(n)))
        out.append(len(classes))
    return out


def free_abelian_growth(r: int, n_max: int) -> list[int]:
    """Points of ``Z^r`` with 1-norm ``n``, counted by enumeration."""
    counts = [0] * (n_max + 1)
    for x in product(range(-n_max, n_max + 1), repeat=r):
        s = sum(abs(c) for c in x)
        if s <= n_max:
            counts[s] += 1
    return counts


# -- pyramids ---------------------------------------------------------------


def oracle_pyramidal_search(p: Piling, apex: int | None = None, cap: int = 200_000) -> Piling | None:
    """Breadth-first search over plain single-tile cyclic permutations for a
    piling with a single bottom tile (on ``apex`` if given)."""
    g = p.graph

    def bottoms(q):
        return [i for i, s in enumerate(q.stacks) if s and s[0] != ZERO]

    def ok(q):
        b = bottoms(q)
        return len(b) == 1 and (apex is None or b[0] == apex)

    seen = {p.key()}
    todo = deque([p])
    while todo:
        q = todo.popleft()
        if ok(q):
            return q
        codes = normal_codes(q)
        for i in bottoms(q):
            # the first i-letter of a geodesic is the bottom i-tile; it
            # commutes with everything before it, so it can be rotated away
            pos = next(n for n, c in enumerate(codes) if c >> 1 == i)
            nq = build_from_codes(g, codes[:pos] + codes[pos + 1:] + [codes[pos]])
            if nq.key() not in seen:
                seen.add(nq.key())
                if len(seen) > cap:
                    raise BoundExceeded("pyramid search exceeded its cap")
                todo.append(nq)
    return None


def words_up_to(g: DefiningGraph, n: int) -> Iterable[tuple]:
    for length in range(n + 1):
        yield from product(range(2 * g.rank), repeat=length)


# -- extensions -------------------------------------------------------------


def oracle_ext_conjugate(g, h, bound: int):
    """First ``x`` in the radius-``bound`` ball of ``A_φ`` with ``x^-1 g x = h``."""
    from .extension import ext_inverse, ext_multiply
    from .growth import ext_ball

    for sphere in ext_ball(g.phi, bound):
        for x in sphere:
            if ext_multiply(ext_multiply(ext_inverse(x), g), x).key() == h.key():
                return x
    return None


def ext_orbit(x, radius: int) -> dict:
    """Map each key of ``y^-1 x y``, for ``y`` in the radius-``radius`` ball of
    ``A_φ``, to one such ``y``."""
    from .extension import ExtElement, ext_multiply
    from .growth import ext_generators

    gens = ext_generators(x.phi)
    inverse = {}
    for s in gens:
        for s2 in gens:
            if ext_multiply(s, s2).key() == ((), 0):
                inverse[s.key()] = s2
    seen = {x.key(): ExtElement.identity(x.phi)}
    level = [(x, seen[x.key()])]
    for _ in range(radius):
        nxt = []
        for y, w in level:
            for s in gens:
                z = ext_multiply(ext_multiply(inverse[s.key()], y), s)
                if z.key() not in seen:
                    seen[z.key()] = ws = ext_multiply(w, s)
                    nxt.append((z, ws))
        level = nxt
    return seen


def oracle_ext_witness(g, h, bound: int):
    """Some ``x`` of length ``<= bound`` with ``x^-1 g x = h``, or None, found
    by meeting in the middle as in :func:`oracle_twisted_witness`."""
    from .extension import ext_inverse, ext_multiply

    r = (bound + 1) // 2
    left = ext_orbit(g, r)
    right = ext_orbit(h, bound - r)
    for k, b in right.items():
        a = left.get(k)
        if a is not None:
            x = ext_multiply(a, ext_inverse(b))
            assert ext_multiply(ext_multiply(ext_inverse(x), g), x).key() == h.key()
            return x
    return None


def classify_ext_by_orbits(elements, radius: int) -> list[int]:
    """Union-find labels joining elements whose radius-``radius`` conjugation
    orbits meet (conjugators of length ``<= 2*radius``)."""
    uf = _UnionFind(len(elements))
    owner = {}
    for i, x in enumerate(elements):
        for k in ext_orbit(x, radius):
            j = owner.setdefault(k, i)
            if j != i:
                uf.union(i, j)
    return [uf.find(i) for i in range(len(elements))]

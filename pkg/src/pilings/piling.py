"""Pilings: the canonical stack representation of RAAG elements.

Each vertex owns a stack of beads over ``{+, -, 0}`` read bottom to top.
Placing an ``s_v^±`` tile puts a ``±`` bead on stack ``v`` and a ``0`` on every
stack ``j`` outside ``St(v)``.  Tiles are not stored explicitly: the ``0``-beads
of a top (bottom) tile are always the top-most (bottom-most) beads of the
stacks it touches, and all ``0`` beads look alike, so stack contents suffice.

Beads are stored as the bytes ``+``, ``-`` and ``0``.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    BlockedTile,
    GraphMismatch,
    NoSuchTile,
    NotCyclicallyReduced,
    NotNonSplit,
)
from .graph import DefiningGraph, VertexSet
from .word import Letter, Word


class Bead(IntEnum):
    PLUS = 43  # b"+"
    MINUS = 45  # b"-"
    ZERO = 48  # b"0"


PLUS, MINUS, ZERO = Bead.PLUS.value, Bead.MINUS.value, Bead.ZERO.value
_FLIP = PLUS + MINUS  # 88 - b swaps + and -

BOTTOM = "bottom"
TOP = "top"


class TileRef(NamedTuple):
    vertex: int
    end: str
    sign: int


def _bead(sign: int) -> int:
    return PLUS if sign > 0 else MINUS


class Piling:
    """An r-tuple of bead stacks, one per vertex of the defining graph."""

    __slots__ = ("graph", "stacks", "_length")

    def __init__(self, graph: DefiningGraph, stacks: Iterable):
        self.graph = graph
        self.stacks = tuple(bytes(s) for s in stacks)
        if len(self.stacks) != graph.rank:
            raise ValueError("a piling needs one stack per vertex")
        self._length = None

    @classmethod
    def empty(cls, graph: DefiningGraph) -> "Piling":
        return cls(graph, [b""] * graph.rank)

    def key(self) -> bytes:
        """Canonical encoding, usable as a dict key or sort key."""
        return b"|".join(self.stacks)

    def __len__(self):
        """Number of ``±`` beads, i.e. the geodesic length of the element."""
        if self._length is None:
            self._length = sum(len(s) - s.count(ZERO) for s in self.stacks)
        return self._length

    def __eq__(self, other):
        if not isinstance(other, Piling):
            return NotImplemented
        return self.stacks == other.stacks and self.graph == other.graph

    def __hash__(self):
        return hash(self.stacks)

    def __repr__(self):
        return "Piling(" + "; ".join(render(self).splitlines()) + ")"

    def support(self) -> VertexSet:
        return frozenset(i for i, s in enumerate(self.stacks) if len(s) != s.count(ZERO))


def _check(p: Piling, q: Piling):
    if p.graph is not q.graph and p.graph != q.graph:
        raise GraphMismatch("pilings are over different graphs")


# -- construction -----------------------------------------------------------


def _build_stacks(g: DefiningGraph, codes: Iterable[int], stacks=None) -> list:
    if stacks is None:
        stacks = [bytearray() for _ in range(g.rank)]
    # per code: own stack, bead, cancelling bead, appenders/poppers of 0s
    plan = []
    for c in range(2 * g.rank):
        v = c >> 1
        bead = MINUS if c & 1 else PLUS
        others = [stacks[j] for j in g.nonstar[v]]
        plan.append((stacks[v], bead, _FLIP - bead, others))
    for c in codes:
        s, bead, opp, others = plan[c]
        if s and s[-1] == opp:
            s.pop()
            for t in others:
                t.pop()
        else:
            s.append(bead)
            for t in others:
                t.append(ZERO)
    return stacks


def build_piling(w: Word) -> Piling:
    """``π*(w)``: fold :func:`push_letter` over ``w``.

    >>> from pilings.graph import example_graph
    >>> print(render(build_piling(Word.parse(example_graph(), "a2 a1"))))
    a1: 0 +
    a2: + 0
    a3: 0
    a4:
    """
    return Piling(w.graph, _build_stacks(w.graph, w.codes))


def build_from_codes(g: DefiningGraph, codes: Iterable[int]) -> Piling:
    return Piling(g, _build_stacks(g, codes))


def push_letter(p: Piling, x: Letter) -> Piling:
    stacks = [bytearray(s) for s in p.stacks]
    if not 0 <= x.vertex < p.graph.rank:
        raise ValueError(f"letter vertex {x.vertex} out of range")
    return Piling(p.graph, _build_stacks(p.graph, [Letter(*x).code], stacks))


def piling_equal(p: Piling, q: Piling) -> bool:
    _check(p, q)
    return p.stacks == q.stacks


# -- normal words -----------------------------------------------------------


def normal_codes(p: Piling) -> list[int]:
    """Letter codes of the ``≤⁻¹_SL``-minimal geodesic for ``p``.

    Bottom tiles always pairwise commute, so the greedy choice of the largest
    available generator never invalidates another candidate.  Candidates are
    kept as a bitmask of vertices.
    """
    stacks = p.stacks
    nonstar = p.graph.nonstar
    pos = [0] * len(stacks)
    ends = [len(s) for s in stacks]
    cand = 0
    for v, s in enumerate(stacks):
        if s and s[0] != ZERO:
            cand |= 1 << v
    out = []
    emit = out.append
    while cand:
        v = cand.bit_length() - 1
        s = stacks[v]
        i = pos[v]
        emit(2 * v + (s[i] == MINUS))
        i += 1
        pos[v] = i
        if i == ends[v] or s[i] == ZERO:
            cand ^= 1 << v
        for j in nonstar[v]:
            k = pos[j] + 1
            pos[j] = k
            if k < ends[j] and stacks[j][k] != ZERO:
                cand |= 1 << j
    return out


def extract_normal_word(p: Piling) -> Word:
    return Word(p.graph, normal_codes(p))


# -- tiles ------------------------------------------------------------------


def bottom_tiles(p: Piling) -> set[TileRef]:
    return {
        TileRef(i, BOTTOM, 1 if s[0] == PLUS else -1)
        for i, s in enumerate(p.stacks)
        if s and s[0] != ZERO
    }


def top_tiles(p: Piling) -> set[TileRef]:
    return {
        TileRef(i, TOP, 1 if s[-1] == PLUS else -1)
        for i, s in enumerate(p.stacks)
        if s and s[-1] != ZERO
    }


def remove_tile(p: Piling, t: TileRef) -> Piling:
    v = t.vertex
    if not 0 <= v < p.graph.rank:
        raise NoSuchTile(f"vertex index {v} out of range")
    idx = 0 if t.end == BOTTOM else -1
    s = p.stacks[v]
    if not s or s[idx] == ZERO or s[idx] != _bead(t.sign):
        raise NoSuchTile(f"no {t.end} tile {t.sign:+d} on stack {p.graph.vertices[v]}")
    nonstar = p.graph.nonstar[v]
    for j in nonstar:
        sj = p.stacks[j]
        if not sj or sj[idx] != ZERO:
            raise BlockedTile(f"stack {p.graph.vertices[j]} blocks the {t.end} tile on {p.graph.vertices[v]}")
    stacks = list(p.stacks)
    for j in (v,) + nonstar:
        stacks[j] = stacks[j][1:] if idx == 0 else stacks[j][:-1]
    return Piling(p.graph, stacks)


def add_tile(p: Piling, vertex: int, sign: int, end: str) -> Piling:
    """Add an ``s_vertex^sign`` tile at ``end``; cancels against an opposite
    tile sitting at that end of the stack."""
    g = p.graph
    if not 0 <= vertex < g.rank:
        raise ValueError(f"vertex index {vertex} out of range")
    bead = _bead(sign)
    s = p.stacks[vertex]
    nonstar = g.nonstar[vertex]
    stacks = list(p.stacks)
    if end == TOP:
        if s and s[-1] == _FLIP - bead:
            for j in (vertex,) + nonstar:
                stacks[j] = stacks[j][:-1]
        else:
            stacks[vertex] = s + bytes((bead,))
            for j in nonstar:
                stacks[j] = stacks[j] + b"0"
    elif end == BOTTOM:
        if s and s[0] == _FLIP - bead:
            for j in (vertex,) + nonstar:
                stacks[j] = stacks[j][1:]
        else:
            stacks[vertex] = bytes((bead,)) + s
            for j in nonstar:
                stacks[j] = b"0" + stacks[j]
    else:
        raise ValueError(f"end must be {BOTTOM!r} or {TOP!r}")
    return Piling(g, stacks)


# -- cyclic reduction -------------------------------------------------------


def reduce_ends(p: Piling, same_sign: Sequence[bool] = ()) -> Piling:
    """Strip matching bottom/top tile pairs until none remain.

    Stack ``i`` is reducible when it starts and ends with ``±`` beads that are
    opposite, or equal when ``same_sign[i]`` is set (the twisted rule for an
    inverted generator).  Linear in the total number of beads.
    """
    g = p.graph
    stacks = p.stacks
    r = g.rank
    same = list(same_sign) + [False] * (r - len(same_sign))
    lo = [0] * r
    hi = [len(s) for s in stacks]
    dependent = g.dependent
    todo = list(range(r))
    queued = [True] * r
    changed = False
    while todo:
        i = todo.pop()
        queued[i] = False
        s = stacks[i]
        while hi[i] - lo[i] >= 2:
            a, b = s[lo[i]], s[hi[i] - 1]
            if a == ZERO or b == ZERO or (a == b) != same[i]:
                break
            changed = True
            for j in dependent[i]:
                lo[j] += 1
                hi[j] -= 1
                if j != i and not queued[j]:
                    queued[j] = True
                    todo.append(j)
    if not changed:
        return p
    return Piling(g, [s[lo[i]:hi[i]] for i, s in enumerate(stacks)])


def cyclic_reduce(p: Piling) -> Piling:
    """Plain cyclic reduction.

    >>> from pilings.graph import example_graph
    >>> g = example_graph()
    >>> cyclic_reduce(build_piling(Word.parse(g, "a1 a2 a1^-1"))) == build_piling(Word.parse(g, "a2"))
    True
    """
    return reduce_ends(p)


def is_cyclically_reduced(p: Piling, same_sign: Sequence[bool] = ()) -> bool:
    return reduce_ends(p, same_sign) is p


# -- splitting --------------------------------------------------------------


def complement_components(g: DefiningGraph, support: Iterable[int]) -> list[VertexSet]:
    """Components of ``Γ^c`` induced on ``support``, ordered by least vertex."""
    remaining = set(support)
    comps = []
    nonstar = g.nonstar
    for start in sorted(remaining):
        if start not in remaining:
            continue
        remaining.discard(start)
        comp = [start]
        todo = [start]
        while todo:
            v = todo.pop()
            for j in nonstar[v]:
                if j in remaining:
                    remaining.discard(j)
                    comp.append(j)
                    todo.append(j)
        comps.append(frozenset(comp))
    return comps


def delta_subgraph(p: Piling) -> tuple[VertexSet, list[VertexSet]]:
    support = p.support()
    return support, complement_components(p.graph, support)


def is_nonsplit(p: Piling) -> bool:
    return len(delta_subgraph(p)[1]) <= 1


def split_codes(g: DefiningGraph, codes: Sequence[int], comps: Sequence[VertexSet]) -> list[list[int]]:
    """Subsequences of ``codes`` supported on each component."""
    which = [-1] * g.rank
    for n, comp in enumerate(comps):
        for v in comp:
            which[v] = n
    parts = [[] for _ in comps]
    for c in codes:
        parts[which[c >> 1]].append(c)
    return parts


def factor_nonsplit(p: Piling) -> list[Piling]:
    if not is_cyclically_reduced(p):
        raise NotCyclicallyReduced("factorisation needs a cyclically reduced piling")
    _, comps = delta_subgraph(p)
    if len(comps) <= 1:
        return [p] if comps else []
    return [build_from_codes(p.graph, part) for part in split_codes(p.graph, normal_codes(p), comps)]


# -- pyramids ---------------------------------------------------------------


def pyramid_codes(g: DefiningGraph, codes: Sequence[int], apex: int, twist: Sequence[Sequence[int]] = ()) -> list[int]:
    """Reorder a cyclic word so that its piling has a single bottom tile.

    ``codes`` is read as the infinite word ``w σ(w) σ²(w) ...`` where ``σ`` is
    the per-period letter map ``twist[k]`` on period ``k`` (the identity when
    ``twist`` is empty, giving plain rotations).  Starting at the first
    ``apex`` letter, a letter joins the cone above it as soon as it depends on
    something already in the cone.  The first cone letter seen for each
    position of ``w`` gives the answer, which is a (twisted) cyclic
    permutation of ``w`` up to commutations.  ``w`` must be non-split and
    cyclically reduced for the result to have the same length.
    """
    n = len(codes)
    if n == 0:
        return []
    try:
        start = next(q for q, c in enumerate(codes) if c >> 1 == apex)
    except StopIteration:
        raise NotNonSplit(f"apex {g.vertices[apex]} is not in the support") from None
    dependent = g.dependent
    hit = [False] * g.rank
    assigned = bytearray(n)
    out = []
    periods = len(twist) if twist else 1
    limit = n * (g.rank + 2)
    pos = start
    while len(out) < n:
        if pos - start > limit:
            raise NotNonSplit("word is not non-split; no pyramid exists")
        period, q = divmod(pos, n)
        c = codes[q]
        v = c >> 1
        if pos == start or hit[v]:
            if not assigned[q]:
                assigned[q] = 1
                out.append(twist[period % periods][c] if twist else c)
            for j in dependent[v]:
                hit[j] = True
        pos += 1
    return out


def to_pyramidal(p: Piling, apex: int | None = None) -> Piling:
    """A cyclic permutation of ``p`` whose only bottom tile sits on ``apex``.

    The default apex is the smallest supported vertex; with max-first normal
    words this is the choice under which every rotation of the resulting
    normal word is again normal.
    """
    support, comps = delta_subgraph(p)
    if not comps:
        return p
    if len(comps) > 1:
        raise NotNonSplit("piling is split")
    if not is_cyclically_reduced(p):
        raise NotCyclicallyReduced("pyramidal form needs a cyclically reduced piling")
    if apex is None:
        apex = min(support)
    elif apex not in support:
        raise NotNonSplit(f"apex {apex} is not in the support")
    if is_pyramidal(p, apex):
        return p
    return build_from_codes(p.graph, pyramid_codes(p.graph, normal_codes(p), apex))


def is_pyramidal(p: Piling, apex: int | None = None) -> bool:
    """Exactly one bottom tile (on ``apex`` when given)."""
    bottoms = [i for i, s in enumerate(p.stacks) if s and s[0] != ZERO]
    if len(bottoms) != 1:
        return False
    return apex is None or bottoms[0] == apex


def render(p: Piling) -> str:
    names = p.graph.vertices
    lines = []
    for name, s in zip(names, p.stacks):
        beads = " ".join(chr(b) for b in s)
        lines.append(f"{name}: {beads}" if beads else f"{name}:")
    return "\n".join(lines)


def parse_render(g: DefiningGraph, text: str) -> Piling:
    """Inverse of :func:`render` (stacks may be listed in any order)."""
    stacks = [b""] * g.rank
    for line in text.strip().splitlines():
        name, _, beads = line.partition(":")
        stacks[g.vertex(name.strip())] = "".join(beads.split()).encode("ascii")
    return Piling(g, stacks)

"""Twisted conjugacy ``v = φ(w)^-1 u w`` for length-preserving ``φ``.

Moving the first letter ``x`` of a word to the end turns it into ``φ^-1(x)``
(conjugate by ``w = φ^-1(x)``); moving the last letter ``y`` to the front
turns it into ``φ(y)`` (conjugate by ``w = y^-1``).  On pilings these are
moves of a bottom tile to the top, and of a top tile to the bottom.

Two algorithms are provided.  The general one closes a piling under all such
moves at minimal length and compares the least normal word of the closure.
For pure inversions there is a linear-time path mirroring plain conjugacy.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import NamedTuple

from .errors import GraphMismatch, NotInversionAut, ResourceExhausted
from .graph import LengthPreservingAut
from .piling import (
    BOTTOM,
    TOP,
    Piling,
    TileRef,
    add_tile,
    bottom_tiles,
    build_piling,
    normal_codes,
    reduce_ends,
    remove_tile,
    top_tiles,
)
from .conjugacy import cyclic_forms
from .word import Word, find_codes

DEFAULT_BUDGET = 200_000


class Move(NamedTuple):
    """One twisted cyclic permutation: ``tile`` is taken off and ``placed``
    (vertex, sign, end) is put on; ``cancelled`` marks a length drop."""

    tile: TileRef
    placed: tuple
    cancelled: bool


def _check(p, phi: LengthPreservingAut):
    if p.graph is not phi.graph and p.graph != phi.graph:
        raise GraphMismatch("automorphism and piling are over different graphs")


def phi_tile_moves(p: Piling, phi: LengthPreservingAut) -> list[tuple[Move, Piling]]:
    """All single-tile twisted cyclic permutations of ``p``.

    A bottom tile ``s_i^e`` goes to the top as ``φ^-1(s_i^e)``; a top tile
    ``s_j^e`` goes to the bottom as ``φ(s_j^e)``.
    """
    _check(p, phi)
    fwd, back = phi.letter_table(1), phi.letter_table(-1)
    moves = []
    for tiles, table, end in ((bottom_tiles(p), back, TOP), (top_tiles(p), fwd, BOTTOM)):
        for t in sorted(tiles):
            c = table[2 * t.vertex + (t.sign < 0)]
            rest = remove_tile(p, t)
            q = add_tile(rest, c >> 1, -1 if c & 1 else 1, end)
            moves.append((Move(t, (c >> 1, -1 if c & 1 else 1, end), len(q) < len(p)), q))
    return moves


def inversion_signs(phi: LengthPreservingAut) -> list[bool]:
    return [s < 0 for s in phi.sign]


def phi_cyclic_reduce_inversions(p: Piling, phi: LengthPreservingAut) -> Piling:
    """Twisted cyclic reduction for a product of inversions.

    An inverted generator's stack reduces when it starts and ends with the
    same sign; any other stack reduces on opposite signs.
    """
    _check(p, phi)
    if not phi.is_inversion:
        raise NotInversionAut("automorphism permutes vertices")
    return reduce_ends(p, inversion_signs(phi))


def phi_reduction_step_general(p: Piling, phi: LengthPreservingAut) -> Piling | None:
    """Remove a top tile together with a bottom tile that its φ-image cancels,
    if such a pair exists."""
    _check(p, phi)
    fwd = phi.letter_table(1)
    for t in sorted(top_tiles(p)):
        c = fwd[2 * t.vertex + (t.sign < 0)]
        rest = remove_tile(p, t)
        s = rest.stacks[c >> 1]
        if s and s[0] == (43 if c & 1 else 45):
            return remove_tile(rest, TileRef(c >> 1, BOTTOM, 1 if s[0] == 43 else -1))
    return None


class TwistedClassSet:
    """Closure of a piling under twisted cyclic permutations at minimal length.

    ``pilings`` maps canonical keys to pilings; ``min_rep`` is the least normal
    word (under ``≤⁻¹_SL``) among them.
    """

    def __init__(self, pilings: dict, restarts: int, explored: int):
        self.pilings = pilings
        self.restarts = restarts
        self.explored = explored
        first = next(iter(pilings.values()))
        self.graph = first.graph
        self.length = len(first)
        self._min = None

    def __len__(self):
        return len(self.pilings)

    def __contains__(self, p: Piling):
        return p.key() in self.pilings

    @property
    def min_codes(self) -> tuple:
        if self._min is None:
            self._min = min((tuple(normal_codes(p)) for p in self.pilings.values()), key=lambda cs: tuple(-c for c in cs))
        return self._min

    @property
    def min_rep(self) -> Word:
        return Word(self.graph, self.min_codes)


def twisted_class_set(v, phi: LengthPreservingAut, budget: int | None = DEFAULT_BUDGET) -> TwistedClassSet:
    """Breadth-first closure of ``π*(v)`` under :func:`phi_tile_moves`.

    Whenever a move shortens the piling the search restarts from the shorter
    one.  ``budget`` caps the number of pilings visited over all restarts.
    """
    start = v if isinstance(v, Piling) else build_piling(v)
    _check(start, phi)
    explored = 0
    restarts = 0
    while True:
        seen = {start.key(): start}
        frontier = deque([start])
        shorter = None
        while frontier and shorter is None:
            x = frontier.popleft()
            explored += 1
            if budget is not None and explored > budget:
                raise ResourceExhausted(f"twisted class search exceeded {budget} pilings", explored)
            for move, y in phi_tile_moves(x, phi):
                if move.cancelled:
                    shorter = y
                    break
                k = y.key()
                if k not in seen:
                    seen[k] = y
                    frontier.append(y)
        if shorter is None:
            return TwistedClassSet(seen, restarts, explored)
        start = shorter
        restarts += 1


def tcp(u: Word, v: Word, phi: LengthPreservingAut, method: str = "auto", budget: int | None = DEFAULT_BUDGET) -> bool:
    """Decide whether ``v = φ(w)^-1 u w`` for some ``w``.

    ``method`` is ``"auto"`` (linear path for inversions, closure otherwise),
    ``"general"`` or ``"inversions"``.
    """
    if method == "inversions" or (method == "auto" and phi.is_inversion):
        return tcp_inversions(u, v, phi)
    if method not in ("auto", "general"):
        raise ValueError(f"unknown method {method!r}")
    pu, pv = build_piling(u), build_piling(v)
    _check(pu, phi)
    _check(pv, phi)
    if pu == pv:
        return True
    return twisted_class_key(pu, phi, budget) == twisted_class_key(pv, phi, budget)


def twisted_class_key(p: Piling, phi: LengthPreservingAut, budget: int | None = DEFAULT_BUDGET) -> tuple:
    """Normal word codes of ``min_rep`` for the closure of ``p``."""
    return _cached_key(p.graph, p.stacks, phi.perm, phi.sign, budget)


@lru_cache(maxsize=1 << 16)
def _cached_key(g, stacks, perm, sign, budget):
    phi = LengthPreservingAut(g, perm, sign)
    return twisted_class_set(Piling(g, stacks), phi, budget).min_codes


def twisted_forms(p: Piling, phi: LengthPreservingAut) -> dict:
    """Per-component twisted cyclic normal forms for an inversion ``φ``."""
    twist = tuple(phi.letter_table(-k) for k in range(phi.order))
    return cyclic_forms(p, lambda q: reduce_ends(q, inversion_signs(phi)), lambda comp: twist)


def tcp_inversions(u: Word, v: Word, phi: LengthPreservingAut) -> bool:
    """Linear-time twisted conjugacy for a product of inversions."""
    if not phi.is_inversion:
        raise NotInversionAut("automorphism permutes vertices")
    pu, pv = build_piling(u), build_piling(v)
    _check(pu, phi)
    _check(pv, phi)
    return twisted_forms_match(twisted_forms(pu, phi), twisted_forms(pv, phi), phi)


def twisted_forms_match(fu: dict, fv: dict, phi: LengthPreservingAut) -> bool:
    if fu.keys() != fv.keys():
        return False
    tables = [phi.letter_table(k) for k in range(phi.order)]
    for comp, a in fu.items():
        b = fv[comp]
        if len(a) != len(b):
            return False
        for k in range(phi.order):
            hi, lo = tables[k], tables[k - 1]
            if find_codes([hi[c] for c in a] + [lo[c] for c in a], b) >= 0:
                break
        else:
            return False
    return True

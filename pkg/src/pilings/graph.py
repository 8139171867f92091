"""Defining graphs and their length-preserving automorphisms.

Vertices are referred to by index everywhere inside the package; names only
matter when parsing or printing.  Letters of ``X = V(Γ)^±`` are encoded as
small integers ``2*v`` (for ``s_v``) and ``2*v + 1`` (for ``s_v^-1``), so the
natural order on codes is the base order ``s_1 < s_1^-1 < s_2 < ...``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import AdjacencyViolation, NotLengthPreserving, ParseError, UnknownVertex

VertexSet = frozenset  # frozenset[int] of vertex indices

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass(frozen=True, eq=False)
class DefiningGraph:
    """A finite simple graph whose edges mark commuting generators.

    ``adjacency[i]`` is a bitmask of the neighbours of vertex ``i``.
    """

    vertices: tuple[str, ...]
    adjacency: tuple[int, ...]

    def __post_init__(self):
        r = len(self.vertices)
        if r < 1:
            raise ValueError("a defining graph needs at least one vertex")
        if len(set(self.vertices)) != r:
            raise ValueError("vertex names must be unique")
        for name in self.vertices:
            if not _NAME_RE.match(name):
                raise ValueError(f"invalid vertex name {name!r}")
        if len(self.adjacency) != r:
            raise ValueError("adjacency must have one bitmask per vertex")
        full = (1 << r) - 1
        for i, mask in enumerate(self.adjacency):
            if mask & ~full:
                raise ValueError(f"adjacency of {self.vertices[i]} references unknown vertices")
            if mask >> i & 1:
                raise ValueError(f"self-loop at {self.vertices[i]}")
            for j in range(r):
                if (mask >> j & 1) != (self.adjacency[j] >> i & 1):
                    raise ValueError("adjacency must be symmetric")

    @classmethod
    def from_edges(cls, vertices: Iterable[str], edges: Iterable[Sequence[str]] = ()) -> "DefiningGraph":
        vertices = tuple(vertices)
        index = {name: i for i, name in enumerate(vertices)}
        adj = [0] * len(vertices)
        for edge in edges:
            if len(edge) != 2:
                raise ValueError(f"edge {edge!r} must have exactly two endpoints")
            a, b = edge
            for name in (a, b):
                if name not in index:
                    raise UnknownVertex(f"edge mentions unknown vertex {name!r}")
            i, j = index[a], index[b]
            if i == j:
                raise ValueError(f"self-loop at {a}")
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return cls(vertices, tuple(adj))

    # Named families used throughout the tests and the CLI.
    @classmethod
    def complete(cls, r: int, prefix: str = "a") -> "DefiningGraph":
        names = [f"{prefix}{i + 1}" for i in range(r)]
        full = (1 << r) - 1
        return cls(tuple(names), tuple(full & ~(1 << i) for i in range(r)))

    @classmethod
    def edgeless(cls, r: int, prefix: str = "a") -> "DefiningGraph":
        return cls(tuple(f"{prefix}{i + 1}" for i in range(r)), (0,) * r)

    @classmethod
    def path(cls, r: int, prefix: str = "a") -> "DefiningGraph":
        names = [f"{prefix}{i + 1}" for i in range(r)]
        return cls.from_edges(names, [(names[i], names[i + 1]) for i in range(r - 1)])

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, DefiningGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.vertices, self.adjacency))

    def __repr__(self):
        return f"DefiningGraph({list(self.vertices)}, edges={self.edge_names()})"

    @property
    def rank(self) -> int:
        return len(self.vertices)

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.vertices)}

    def vertex(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {name!r}") from None

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def commute(self, i: int, j: int) -> bool:
        """True when the generators ``s_i`` and ``s_j`` commute."""
        return i == j or bool(self.adjacency[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        r = self.rank
        return [(i, j) for i in range(r) for j in range(i + 1, r) if self.adjacency[i] >> j & 1]

    def edge_names(self) -> list[tuple[str, str]]:
        return [(self.vertices[i], self.vertices[j]) for i, j in self.edges()]

    @cached_property
    def nonstar(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex ``v`` the vertices outside ``St(v)``.

        These are the stacks that receive a 0-bead whenever an ``s_v`` tile is
        placed.
        """
        r = self.rank
        return tuple(
            tuple(j for j in range(r) if j != v and not self.adjacency[v] >> j & 1)
            for v in range(r)
        )

    @cached_property
    def dependent(self) -> tuple[tuple[int, ...], ...]:
        """``(v,) + nonstar[v]``: every stack touched by an ``s_v`` tile."""
        return tuple((v,) + rest for v, rest in enumerate(self.nonstar))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edge_names()]}


def load_graph(source) -> DefiningGraph:
    """Build a graph from parsed JSON, a JSON string, or a path to a JSON file."""
    data = _load_json(source)
    try:
        vertices = data["vertices"]
        edges = data.get("edges", [])
    except (TypeError, AttributeError, KeyError):
        raise ParseError('graph JSON must be an object with "vertices" and "edges"') from None
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError('"vertices" must be a list of strings')
    return DefiningGraph.from_edges(vertices, edges)


def _load_json(source):
    if isinstance(source, Mapping):
        return source
    if isinstance(source, str) and source.lstrip().startswith("{"):
        return json.loads(source)
    with open(source, encoding="utf-8") as fh:
        return json.load(fh)


def complement(g: DefiningGraph) -> DefiningGraph:
    r = g.rank
    full = (1 << r) - 1
    return DefiningGraph(g.vertices, tuple(full & ~mask & ~(1 << i) for i, mask in enumerate(g.adjacency)))


def link(g: DefiningGraph, v) -> VertexSet:
    if isinstance(v, str):
        v = g.vertex(v)
    if not 0 <= v < g.rank:
        raise UnknownVertex(f"vertex index {v} out of range")
    mask = g.adjacency[v]
    return frozenset(j for j in range(g.rank) if mask >> j & 1)


def star(g: DefiningGraph, v) -> VertexSet:
    if isinstance(v, str):
        v = g.vertex(v)
    return link(g, v) | {v}


def connected_components(g: DefiningGraph, s: Iterable[int]) -> list[VertexSet]:
    """Components of the subgraph of ``g`` induced on ``s``.

    Components are listed by their smallest vertex, so the output is
    deterministic.
    """
    remaining = set(s)
    if any(not 0 <= v < g.rank for v in remaining):
        raise UnknownVertex("vertex set contains an index outside the graph")
    components = []
    for start in sorted(remaining):
        if start not in remaining:
            continue
        remaining.discard(start)
        comp = {start}
        todo = [start]
        while todo:
            v = todo.pop()
            mask = g.adjacency[v]
            for j in list(remaining):
                if mask >> j & 1:
                    remaining.discard(j)
                    comp.add(j)
                    todo.append(j)
        components.append(frozenset(comp))
    return components


@dataclass(frozen=True, eq=False)
class LengthPreservingAut:
    """A signed graph permutation ``s_i -> s_perm(i)^sign(i)``.

    Every length-preserving automorphism of a RAAG has this shape, so it is
    the only automorphism representation in the package.  Build instances
    with :func:`validate_aut`.
    """

    graph: DefiningGraph
    perm: tuple[int, ...]
    sign: tuple[int, ...]
    order: int = field(default=0)

    def __post_init__(self):
        if self.order == 0:
            object.__setattr__(self, "order", _aut_order(self.perm, self.sign))

    def __eq__(self, other):
        if not isinstance(other, LengthPreservingAut):
            return NotImplemented
        return self.graph == other.graph and self.perm == other.perm and self.sign == other.sign

    def __hash__(self):
        return hash((self.perm, self.sign))

    def __repr__(self):
        return f"LengthPreservingAut({self.describe()}, order={self.order})"

    def describe(self) -> str:
        names = self.graph.vertices
        parts = []
        for i, (j, s) in enumerate(zip(self.perm, self.sign)):
            if j != i or s != 1:
                parts.append(f"{names[i]}->{names[j]}{'^-1' if s < 0 else ''}")
        return ", ".join(parts) or "id"

    @property
    def is_identity(self) -> bool:
        return self.order == 1

    @property
    def is_inversion(self) -> bool:
        """True for a composition of inversions (the vertex permutation is trivial)."""
        return all(j == i for i, j in enumerate(self.perm))

    def _table(self) -> tuple[int, ...]:
        table = []
        for v, (j, s) in enumerate(zip(self.perm, self.sign)):
            table.append(2 * j + (s < 0))
            table.append(2 * j + (s > 0))
        return tuple(table)

    @cached_property
    def _powers(self) -> tuple[tuple[int, ...], ...]:
        base = self._table()
        tables = [tuple(range(2 * self.graph.rank))]
        for _ in range(1, self.order):
            prev = tables[-1]
            tables.append(tuple(base[c] for c in prev))
        return tuple(tables)

    def letter_table(self, k: int = 1) -> tuple[int, ...]:
        """Map on letter codes induced by ``φ^k`` (``k`` taken mod the order)."""
        return self._powers[k % self.order]

    def power(self, k: int) -> "LengthPreservingAut":
        table = self.letter_table(k)
        perm = tuple(table[2 * v] >> 1 for v in range(self.graph.rank))
        sign = tuple(-1 if table[2 * v] & 1 else 1 for v in range(self.graph.rank))
        return LengthPreservingAut(self.graph, perm, sign)

    def inverse(self) -> "LengthPreservingAut":
        return self.power(-1)

    def to_json(self) -> dict:
        names = self.graph.vertices
        return {"map": {names[i]: names[j] + ("^-1" if s < 0 else "") for i, (j, s) in enumerate(zip(self.perm, self.sign))}}


def _aut_order(perm, sign) -> int:
    r = len(perm)
    seen = [False] * r
    order = 1
    for start in range(r):
        if seen[start]:
            continue
        length, total = 0, 1
        v = start
        while not seen[v]:
            seen[v] = True
            total *= sign[v]
            v = perm[v]
            length += 1
        # After `length` steps a cycle returns each of its letters to itself
        # up to the product of the signs along the cycle.
        cycle_order = length if total == 1 else 2 * length
        order = order * cycle_order // gcd(order, cycle_order)
    return order


def validate_aut(g: DefiningGraph, perm: Sequence[int], sign: Sequence[int] | None = None) -> LengthPreservingAut:
    r = g.rank
    perm = tuple(int(j) for j in perm)
    sign = tuple(1 for _ in range(r)) if sign is None else tuple(int(s) for s in sign)
    if len(perm) != r or sorted(perm) != list(range(r)):
        raise NotLengthPreserving("vertex map is not a bijection on the vertices")
    if len(sign) != r or any(s not in (1, -1) for s in sign):
        raise ValueError("signs must be +1 or -1, one per vertex")
    for i, j in g.edges():
        if not g.adjacent(perm[i], perm[j]):
            raise AdjacencyViolation(
                f"edge {{{g.vertices[i]}, {g.vertices[j]}}} maps to non-edge "
                f"{{{g.vertices[perm[i]]}, {g.vertices[perm[j]]}}}"
            )
    return LengthPreservingAut(g, perm, sign)


def identity_aut(g: DefiningGraph) -> LengthPreservingAut:
    return validate_aut(g, range(g.rank))


def inversion_aut(g: DefiningGraph, inverted: Iterable) -> LengthPreservingAut:
    flip = {g.vertex(v) if isinstance(v, str) else v for v in inverted}
    return validate_aut(g, range(g.rank), [-1 if i in flip else 1 for i in range(g.rank)])


def load_aut(g: DefiningGraph, source) -> LengthPreservingAut:
    """Parse ``{"map": {"a1": "a3", "a2": "a4^-1"}}``; omitted vertices are fixed."""
    data = _load_json(source)
    if not isinstance(data, Mapping) or not isinstance(data.get("map"), Mapping):
        raise ParseError('automorphism JSON must be an object with a "map" object')
    perm = list(range(g.rank))
    sign = [1] * g.rank
    for src, target in data["map"].items():
        i = g.vertex(src)
        if not isinstance(target, str):
            raise NotLengthPreserving(f"image of {src} must be a single letter")
        token = target.strip()
        s = 1
        if token.endswith("^-1"):
            token, s = token[:-3], -1
        elif token.endswith("^1"):
            token = token[:-2]
        if token not in g.index:
            raise NotLengthPreserving(f"image of {src} must be a single letter, got {target!r}")
        perm[i] = g.vertex(token)
        sign[i] = s
    return validate_aut(g, perm, sign)


def example_graph() -> DefiningGraph:
    """The four-generator example ``[a1,a4] = [a2,a3] = [a2,a4] = 1``."""
    return DefiningGraph.from_edges(["a1", "a2", "a3", "a4"], [("a1", "a4"), ("a2", "a3"), ("a2", "a4")])

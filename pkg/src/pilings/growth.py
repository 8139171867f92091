"""Conjugacy growth tables ``c(n)`` by exhaustive enumeration.

Spheres of the Cayley graph are enumerated breadth first with elements keyed
canonically, each element is mapped to a conjugacy-class key, and a class is
counted at the first radius where one of its elements appears.  Since every
class of length ``n <= N`` has an element in the ball of radius ``N``, every
reported coefficient is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .conjugacy import piling_class_key
from .errors import BudgetExceeded
from .extension import ExtElement, ext_class_key, ext_multiply
from .graph import DefiningGraph, LengthPreservingAut
from .piling import Piling, add_tile, TOP
from .word import Word

DEFAULT_BUDGET = 2_000_000

CAVEAT = (
    "coefficients are exact counts up to the stated radius; a finite table "
    "says nothing about rationality or transcendence of the growth series"
)


@dataclass
class GrowthTable:
    coefficients: list[int]
    metric: str
    ball_size: int = 0
    notes: list[str] = field(default_factory=list)

    def __getitem__(self, n):
        return self.coefficients[n]

    def __len__(self):
        return len(self.coefficients)

    def to_csv(self) -> str:
        return "".join(f"{n},{c}\n" for n, c in enumerate(self.coefficients))

    def to_gnuplot(self) -> str:
        lines = [f"# conjugacy growth, generators {self.metric}", f"# {CAVEAT}"]
        lines += [f"# {note}" for note in self.notes]
        lines.append("# n c(n)")
        lines += [f"{n} {c}" for n, c in enumerate(self.coefficients)]
        return "\n".join(lines) + "\n"


def _tally(first_seen: dict, n_max: int) -> list[int]:
    counts = [0] * (n_max + 1)
    for n in first_seen.values():
        counts[n] += 1
    return counts


def raag_conj_growth(g: DefiningGraph, n_max: int, budget: int = DEFAULT_BUDGET) -> GrowthTable:
    """``c(n)`` for ``A_Γ`` over ``X = V(Γ)^±`` for ``n <= n_max``."""
    start = Piling.empty(g)
    seen = {start.key()}
    level = [start]
    first = {piling_class_key(start): 0}
    for n in range(1, n_max + 1):
        nxt = []
        for p in level:
            for c in range(2 * g.rank):
                q = add_tile(p, c >> 1, -1 if c & 1 else 1, TOP)
                k = q.key()
                if k in seen:
                    continue
                seen.add(k)
                if len(seen) > budget:
                    raise BudgetExceeded(f"ball exceeded {budget} elements", len(seen))
                nxt.append(q)
                # a class is first met at its cyclically reduced length
                first.setdefault(piling_class_key(q), n)
        level = nxt
    return GrowthTable(_tally(first, n_max), "V^±", len(seen))


def ext_generators(phi: LengthPreservingAut) -> list[ExtElement]:
    g = phi.graph
    gens = [ExtElement(phi, Word(g, [c]), 0) for c in range(2 * g.rank)]
    if phi.order > 1:
        gens.append(ExtElement.t(phi, 1))
        if phi.order > 2:
            gens.append(ExtElement.t(phi, -1))
    return gens


def ext_ball(phi: LengthPreservingAut, radius: int, budget: int = DEFAULT_BUDGET) -> list[list[ExtElement]]:
    """Spheres of ``A_φ`` under ``X ∪ {t^±1}``, radius 0 to ``radius``."""
    gens = ext_generators(phi)
    e = ExtElement.identity(phi)
    seen = {e.key()}
    spheres = [[e]]
    for _ in range(radius):
        nxt = []
        for x in spheres[-1]:
            for s in gens:
                y = ext_multiply(x, s)
                k = y.key()
                if k not in seen:
                    seen.add(k)
                    if len(seen) > budget:
                        raise BudgetExceeded(f"ball exceeded {budget} elements", len(seen))
                    nxt.append(y)
        spheres.append(nxt)
    return spheres


def ext_conj_growth(g: DefiningGraph, phi: LengthPreservingAut, n_max: int, budget: int = DEFAULT_BUDGET) -> GrowthTable:
    """``c(n)`` for ``A_φ`` over ``X ∪ {t^±1}`` for ``n <= n_max``.

    With ``m = 1`` there is no ``t`` and this is the table of ``A_Γ``.
    """
    if phi.graph != g:
        raise ValueError("automorphism is over a different graph")
    spheres = ext_ball(phi, n_max, budget)
    first = {}
    for n, sphere in enumerate(spheres):
        for x in sphere:
            first.setdefault(ext_class_key(x), n)
    metric = "V^± ∪ {t^±1}" if phi.order > 1 else "V^±"
    return GrowthTable(_tally(first, n_max), metric, sum(map(len, spheres)), [f"automorphism {phi.describe()} of order {phi.order}"])


@dataclass
class SpotCheck:
    sampled: int
    same_pairs: int = 0
    cross_pairs: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def ext_spot_check(phi: LengthPreservingAut, radius: int = 4, sample: int = 500, bound: int = 8, cross_radius: int = 2, seed: int = 0) -> SpotCheck:
    """Certify the class partition used by :func:`ext_conj_growth`.

    Up to ``sample`` elements of the radius-``radius`` ball are drawn.  Each
    must be joined to the first sampled member of its class by an explicit
    conjugator of length ``<= bound``.  Separately, no two elements of the
    radius-``cross_radius`` ball in different classes may have one.
    """
    import random

    from .extension import ext_inverse
    from .oracle import ext_orbit

    spheres = ext_ball(phi, radius)
    pool = [x for sphere in spheres for x in sphere]
    rng = random.Random(seed)
    chosen = pool if len(pool) <= sample else rng.sample(pool, sample)
    report = SpotCheck(len(chosen))

    half = (bound + 1) // 2
    leaders = {}
    for x in chosen:
        key = ext_class_key(x)
        if key not in leaders:
            leaders[key] = (x, ext_orbit(x, half))
            continue
        y, left = leaders[key]
        report.same_pairs += 1
        for k, b in ext_orbit(x, bound - half).items():
            a = left.get(k)
            if a is not None:
                w = ext_multiply(a, ext_inverse(b))
                if ext_multiply(ext_multiply(ext_inverse(w), y), w).key() == x.key():
                    break
        else:
            report.failures.append(("no conjugator", str(y), str(x)))

    short = [x for sphere in spheres[: cross_radius + 1] for x in sphere]
    orbits = [set(ext_orbit(x, half)) for x in short]
    keys = [ext_class_key(x) for x in short]
    for i in range(len(short)):
        for j in range(i + 1, len(short)):
            if keys[i] != keys[j]:
                report.cross_pairs += 1
                if not orbits[i].isdisjoint(orbits[j]):
                    report.failures.append(("conjugator across classes", str(short[i]), str(short[j])))
    return report

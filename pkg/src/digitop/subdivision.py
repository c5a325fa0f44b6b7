"""Subdivisions of digital images and multivalued functions induced on them.

The r-th subdivision replaces every point of the base image by an r^n block
of refined lattice points.  Refined points are stored as integer numerator
tuples with the shared denominator ``r`` carried once on the subdivision, so
all arithmetic stays exact and hashable.  Collapsing a numerator back to its
base point is coordinatewise floor division (toward negative infinity, so
negative coordinates subdivide correctly).

A multivalued function is continuous when, for some subdivision level r, a
continuous single-valued map on the refined image induces it blockwise.  The
inducer search below sweeps r = 1..r_max; each level is decided independently
and absence below the bound is reported as "not found", never as a proof of
discontinuity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .errors import Budget, BudgetExceededError, as_budget
from .grid import (
    CU,
    Adjacency,
    DigitalImage,
    Point,
    validate_adjacency,
)
from .maps import (
    PointMap,
    closed_value_neighborhoods,
    _earlier_neighbor_lists,
    is_continuous,
    search_continuous_maps,
)


class TriState(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SubdividedImage:
    """The r-th subdivision of a base image, stored as numerator tuples."""

    base: DigitalImage
    r: int
    image: DigitalImage

    @property
    def points(self) -> frozenset[Point]:
        return self.image.points

    def collapse(self, numerator: Point) -> Point:
        """Base point owning this numerator block (floor of numerator / r)."""
        if numerator not in self.image.points:
            raise ValueError(f"{numerator} is not a numerator of this subdivision")
        return tuple(c // self.r for c in numerator)

    @cached_property
    def fibers(self) -> Mapping[Point, frozenset[Point]]:
        out: dict[Point, set[Point]] = {p: set() for p in self.base.points}
        for z in self.image.points:
            out[tuple(c // self.r for c in z)].add(z)
        return MappingProxyType({p: frozenset(zs) for p, zs in out.items()})

    def fiber(self, base_point: Point) -> frozenset[Point]:
        if base_point not in self.base.points:
            raise ValueError(f"{base_point} is not in the base image")
        return self.fibers[base_point]


def subdivide(img: DigitalImage, r: int) -> SubdividedImage:
    """Replace every base point by its r^n block of numerators."""
    if r < 1:
        raise ValueError(f"subdivision level must be at least 1, got {r}")
    numerators = set()
    offsets = tuple(itertools.product(range(r), repeat=img.dim))
    for p in img.points:
        scaled = tuple(r * c for c in p)
        for off in offsets:
            numerators.add(tuple(s + o for s, o in zip(scaled, off)))
    return SubdividedImage(img, r, DigitalImage(img.dim, frozenset(numerators)))


def collapse(s: SubdividedImage, numerator: Point) -> Point:
    """Module-level spelling of the block-collapse map."""
    return s.collapse(numerator)


@dataclass(frozen=True)
class InducerCertificate:
    """A single-valued map on a subdivision known to induce a multimap."""

    subdivision: SubdividedImage
    map: PointMap


class MultiMap:
    """A total multivalued function assigning a nonempty point set to each
    domain point.  Equality and hashing are extensional on the table; a known
    inducer, when present, rides along as a certificate only."""

    __slots__ = ("domain", "codomain", "_table", "_items", "known_inducer")

    def __init__(
        self,
        domain: DigitalImage,
        codomain: DigitalImage,
        table: Mapping[Point, Iterable[Point]],
        known_inducer: InducerCertificate | None = None,
    ) -> None:
        tbl: dict[Point, frozenset[Point]] = {}
        for x, ys in table.items():
            tbl[x] = frozenset(ys)
        if set(tbl) != domain.points:
            raise ValueError("table must cover exactly the domain")
        for x, ys in tbl.items():
            if not ys:
                raise ValueError(f"value set of {x} is empty")
            if not ys <= codomain.points:
                raise ValueError(f"value set of {x} leaves the codomain")
        self.domain = domain
        self.codomain = codomain
        self._table = tbl
        self._items = tuple(sorted((x, tuple(sorted(ys))) for x, ys in tbl.items()))
        self.known_inducer = known_inducer

    @property
    def table(self) -> Mapping[Point, frozenset[Point]]:
        return MappingProxyType(self._table)

    def __call__(self, x: Point) -> frozenset[Point]:
        return self._table[x]

    def items(self) -> tuple[tuple[Point, tuple[Point, ...]], ...]:
        return self._items

    def is_self_map(self) -> bool:
        return self.domain == self.codomain

    def is_singleton_valued(self) -> bool:
        return all(len(ys) == 1 for ys in self._table.values())

    def as_point_map(self) -> PointMap:
        if not self.is_singleton_valued():
            raise ValueError("multimap has a non-singleton value set")
        return PointMap(
            self.domain, self.codomain, {x: next(iter(ys)) for x, ys in self._table.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self._items == other._items
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain, self._items))

    def __repr__(self) -> str:
        entries = ", ".join(f"{x}->{set(ys)}" for x, ys in self._items[:3])
        more = "..." if len(self._items) > 3 else ""
        return f"MultiMap({entries}{more})"


def singleton_multimap(f: PointMap) -> MultiMap:
    """View a single-valued map as a multimap; it is its own level-1 inducer."""
    level1 = subdivide(f.domain, 1)
    inducer = PointMap(level1.image, f.codomain, dict(f.table))
    return MultiMap(
        f.domain,
        f.codomain,
        {x: (y,) for x, y in f.items()},
        known_inducer=InducerCertificate(level1, inducer),
    )


def constant_full_multimap(domain: DigitalImage, codomain: DigitalImage) -> MultiMap:
    """The multimap sending every point to the whole codomain."""
    return MultiMap(domain, codomain, {x: codomain.points for x in domain.points})


def induce_multimap(s: SubdividedImage, inducer: PointMap) -> MultiMap:
    """Blockwise image of the fibers under a map defined on the subdivision."""
    if inducer.domain != s.image:
        raise ValueError("inducer must be defined on exactly the subdivision's points")
    table = {
        x: frozenset(inducer(z) for z in fiber) for x, fiber in s.fibers.items()
    }
    return MultiMap(
        s.base,
        inducer.codomain,
        table,
        known_inducer=InducerCertificate(s, inducer),
    )


@dataclass(frozen=True)
class InducerReport:
    """Result of the bounded inducer sweep.  ``found=False`` means no inducer
    exists at any level up to the bound; it is not a discontinuity proof."""

    found: bool
    r: int | None = None
    inducer: PointMap | None = None
    subdivision: SubdividedImage | None = None
    r_max: int | None = None


def _search_inducers(
    s: SubdividedImage,
    target: MultiMap,
    domain_adj: Adjacency,
    codomain_adj: Adjacency,
    budget: Budget,
) -> Iterator[PointMap]:
    """Backtracking search for continuous maps on the subdivision that induce
    exactly the target multimap (per-fiber image-set equality)."""
    refined = s.image
    codomain = target.codomain
    order, earlier = _earlier_neighbor_lists(refined, domain_adj)
    closed = closed_value_neighborhoods(codomain, codomain_adj)

    base_of = [s.collapse(z) for z in order]
    candidates = [tuple(sorted(target(b))) for b in base_of]

    # Fiber coverage bookkeeping: a fiber must hit every required value, so
    # prune when fewer unassigned slots remain than uncovered values.
    remaining = {b: len(fiber) for b, fiber in s.fibers.items()}
    uncovered = {b: set(target(b)) for b in s.base.points}

    n = len(order)
    assignment: list[Point | None] = [None] * n

    def extend(i: int) -> Iterator[PointMap]:
        if i == n:
            yield PointMap(refined, codomain, dict(zip(order, assignment)))
            return
        feasible = candidates[i]
        for j in earlier[i]:
            nbhd = closed[assignment[j]]
            feasible = [v for v in feasible if v in nbhd]
            if not feasible:
                return
        b = base_of[i]
        remaining[b] -= 1
        for v in feasible:
            freshly_covered = v in uncovered[b]
            if freshly_covered:
                uncovered[b].discard(v)
            if len(uncovered[b]) <= remaining[b]:
                budget.spend()
                assignment[i] = v
                yield from extend(i + 1)
            if freshly_covered:
                uncovered[b].add(v)
        assignment[i] = None
        remaining[b] += 1

    return extend(0)


def find_inducer(
    target: MultiMap,
    domain_adj: Adjacency,
    codomain_adj: Adjacency,
    r_max: int = 3,
    budget: int | Budget | None = None,
) -> InducerReport:
    """Sweep subdivision levels 1..r_max for a continuous inducer of the target."""
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    validate_adjacency(domain_adj, target.domain.dim)
    validate_adjacency(codomain_adj, target.codomain.dim)
    counter = as_budget(budget, "searching for an inducer")
    for r in range(1, r_max + 1):
        s = subdivide(target.domain, r)
        for inducer in _search_inducers(s, target, domain_adj, codomain_adj, counter):
            induced = induce_multimap(s, inducer)
            if induced != target or not is_continuous(
                inducer, domain_adj, codomain_adj
            ).continuous:
                raise AssertionError("inducer search produced an invalid solution")
            return InducerReport(
                found=True, r=r, inducer=inducer, subdivision=s, r_max=r_max
            )
    return InducerReport(found=False, r_max=r_max)


def compose_multimap_then_map(front: MultiMap, g: PointMap) -> MultiMap:
    """Pointwise image composition; a known inducer of the input is composed
    with ``g`` and recorded as the inducer certificate of the result."""
    if front.codomain != g.domain:
        raise ValueError("codomain of the multimap must equal the map's domain")
    table = {x: frozenset(g(y) for y in ys) for x, ys in front.table.items()}
    certificate = None
    if front.known_inducer is not None:
        s = front.known_inducer.subdivision
        composed = PointMap(
            s.image, g.codomain, {z: g(front.known_inducer.map(z)) for z in s.points}
        )
        certificate = InducerCertificate(s, composed)
    return MultiMap(front.domain, g.codomain, table, known_inducer=certificate)


def compose_multimaps(
    front: MultiMap, back: MultiMap, domain_adj: Adjacency | None = None
) -> tuple[MultiMap, bool]:
    """Union composition of two multimaps, plus a flag recording whether the
    supplied domain adjacency makes composite continuity automatic (the domain
    adjacency must be the maximal one-step adjacency of the ambient space)."""
    if front.codomain != back.domain:
        raise ValueError("codomain of the first multimap must equal the second's domain")
    table = {
        x: frozenset(z for y in ys for z in back(y)) for x, ys in front.table.items()
    }
    applicable = isinstance(domain_adj, CU) and domain_adj.u == front.domain.dim
    return MultiMap(front.domain, back.codomain, table), applicable


def enumerate_continuous_multimaps(
    domain: DigitalImage,
    codomain: DigitalImage,
    domain_adj: Adjacency,
    codomain_adj: Adjacency,
    r: int,
    budget: int | Budget | None = None,
) -> Iterator[MultiMap]:
    """All multimaps induced by continuous maps on the level-r subdivision,
    each emitted once, in first-seen order under the canonical inducer order."""
    if r < 1:
        raise ValueError("subdivision level must be at least 1")
    s = subdivide(domain, r)
    seen: set[MultiMap] = set()
    for inducer in search_continuous_maps(
        s.image, codomain, domain_adj, codomain_adj, budget=budget
    ):
        induced = induce_multimap(s, inducer)
        if induced not in seen:
            seen.add(induced)
            yield induced


def is_multivalued_retraction(
    candidate: MultiMap,
    target: DigitalImage,
    adj: Adjacency,
    r_max: int = 3,
    budget: int | Budget | None = None,
) -> TriState:
    """Tri-state check: pointwise identity on the target plus a continuous
    inducer found within the sweep.  A missing inducer below the bound leaves
    the answer unknown rather than negative."""
    if not target.is_subset_of(candidate.domain):
        raise ValueError("target must be a subset of the multimap's domain")
    for x, ys in candidate.table.items():
        if not ys <= target.points:
            raise ValueError(f"value set of {x} leaves the target")
    if any(candidate(y) != frozenset((y,)) for y in target.points):
        return TriState.NO
    try:
        report = find_inducer(candidate, adj, adj, r_max=r_max, budget=budget)
    except BudgetExceededError:
        return TriState.UNKNOWN
    return TriState.YES if report.found else TriState.UNKNOWN

"""Single-valued functions between digital images.

Maps are stored as explicit tables, never as formulas, so that equality,
enumeration and reporting are uniform.  The named constructors build the
handful of structured maps the rest of the package leans on (identity,
constants, projections, the coordinate-flip map on a unit cube, a
shift-and-fold map on the 3x3 grid, and box clamping).

The enumeration core is a backtracking search over domain points in
lexicographic order.  A partial table is pruned as soon as two already
assigned adjacent domain points have images that are neither equal nor
adjacent, so the search visits exactly the partial tables extendable to
continuous maps.  Solutions stream out in lexicographic order of their
tables, which keeps every reported witness canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .errors import Budget, as_budget
from .grid import (
    CU,
    Adjacency,
    DigitalImage,
    Point,
    Power,
    _bfs_distances,
    _cu_adjacent,
    adjacent,
    bounds_of,
    box,
    closed_neighbors,
    cube,
    is_box,
    reflexive_adjacent,
    validate_adjacency,
)


class PointMap:
    """A total single-valued function between digital images."""

    __slots__ = ("domain", "codomain", "_table", "_items")

    def __init__(
        self,
        domain: DigitalImage,
        codomain: DigitalImage,
        table: Mapping[Point, Point],
    ) -> None:
        tbl = dict(table)
        if set(tbl) != domain.points:
            missing = domain.points - set(tbl)
            extra = set(tbl) - domain.points
            raise ValueError(
                f"table must cover exactly the domain (missing {sorted(missing)[:3]}, "
                f"extra {sorted(extra)[:3]})"
            )
        for x, y in tbl.items():
            if y not in codomain.points:
                raise ValueError(f"value {y} of {x} lies outside the codomain")
        self.domain = domain
        self.codomain = codomain
        self._table = tbl
        self._items = tuple(sorted(tbl.items()))

    @property
    def table(self) -> Mapping[Point, Point]:
        return MappingProxyType(self._table)

    def __call__(self, x: Point) -> Point:
        return self._table[x]

    def items(self) -> tuple[tuple[Point, Point], ...]:
        return self._items

    def is_self_map(self) -> bool:
        return self.domain == self.codomain

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self._items == other._items
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain, self._items))

    def __repr__(self) -> str:
        entries = ", ".join(f"{x}->{y}" for x, y in self._items[:4])
        more = "..." if len(self._items) > 4 else ""
        return f"PointMap({entries}{more})"


@dataclass(frozen=True)
class ContinuityReport:
    """Outcome of a continuity check; the witness is an adjacent domain pair
    whose images are neither equal nor adjacent."""

    continuous: bool
    witness: tuple[Point, Point] | None = None

    def __post_init__(self) -> None:
        if self.continuous == (self.witness is not None):
            raise ValueError("witness must be present exactly when discontinuous")


def is_continuous(
    f: PointMap, domain_adj: Adjacency, codomain_adj: Adjacency
) -> ContinuityReport:
    """Adjacency-preservation check: adjacent points must map to equal-or-adjacent
    points.  The witness, when present, is the least violating pair."""
    validate_adjacency(domain_adj, f.domain.dim)
    validate_adjacency(codomain_adj, f.codomain.dim)
    pts = f.domain.sorted_points
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            if not adjacent(f.domain, domain_adj, p, q):
                continue
            if not reflexive_adjacent(f.codomain, codomain_adj, f(p), f(q)):
                return ContinuityReport(continuous=False, witness=(p, q))
    return ContinuityReport(continuous=True)


def compose(f: PointMap, g: PointMap) -> PointMap:
    """The map applying ``f`` first and then ``g``."""
    if f.codomain != g.domain:
        raise ValueError("codomain of the first map must equal domain of the second")
    return PointMap(f.domain, g.codomain, {x: g(f(x)) for x in f.domain.points})


def inverse(f: PointMap) -> PointMap:
    """Inverse table of a bijective map."""
    values = set(f._table.values())
    if len(values) != len(f.domain) or values != f.codomain.points:
        raise ValueError("map is not a bijection")
    return PointMap(f.codomain, f.domain, {y: x for x, y in f.items()})


def is_isomorphism(f: PointMap, domain_adj: Adjacency, codomain_adj: Adjacency) -> bool:
    """Continuous bijection whose inverse is continuous the other way round."""
    values = set(f._table.values())
    if len(values) != len(f.domain) or values != f.codomain.points:
        return False
    if not is_continuous(f, domain_adj, codomain_adj).continuous:
        return False
    return is_continuous(inverse(f), codomain_adj, domain_adj).continuous


def is_retraction(r: PointMap, target: DigitalImage, adj: Adjacency) -> bool:
    """Continuous self-restriction onto ``target`` fixing it pointwise."""
    if not target.is_subset_of(r.domain):
        raise ValueError("retraction target must be a subset of the domain")
    if r.codomain.points != target.points:
        raise ValueError("retraction codomain must equal the target point set")
    if any(r(y) != y for y in target.points):
        return False
    return is_continuous(r, adj, adj).continuous


# --- named constructors ---------------------------------------------------


def identity_map(img: DigitalImage) -> PointMap:
    return PointMap(img, img, {x: x for x in img.points})


def constant_map(img: DigitalImage, value: Point, codomain: DigitalImage | None = None) -> PointMap:
    codomain = codomain if codomain is not None else img
    if value not in codomain.points:
        raise ValueError(f"constant value {value} is not in the codomain")
    return PointMap(img, codomain, {x: value for x in img.points})


def projection_map(img: DigitalImage, index: int) -> PointMap:
    """Projection onto one coordinate factor, as a map to a 1-dimensional image."""
    if not 0 <= index < img.dim:
        raise ValueError(f"projection index {index} out of range for dimension {img.dim}")
    codomain = DigitalImage(1, frozenset((p[index],) for p in img.points))
    return PointMap(img, codomain, {x: (x[index],) for x in img.points})


def antipodal_map(dim: int) -> PointMap:
    """Coordinate flip z -> 1 - z on the unit cube [0,1]^dim."""
    if dim < 1:
        raise ValueError("dimension must be at least 1")
    img = cube(1, dim)
    return PointMap(img, img, {x: tuple(1 - c for c in x) for x in img.points})


def shift_fold_map() -> PointMap:
    """On the grid [-1,1]^2: shift the two lower rows right (capped at 1) and
    fold the top row down onto the middle row."""
    img = box([(-1, 1), (-1, 1)])
    table = {}
    for x, y in img.points:
        if y in (-1, 0):
            table[(x, y)] = (min(1, x + 1), y)
        else:
            table[(x, y)] = (x, 0)
    return PointMap(img, img, table)


def clamp_map(img: DigitalImage, target: DigitalImage) -> PointMap:
    """Clamp every coordinate into the target box's range."""
    if target.dim != img.dim:
        raise ValueError("clamp target must share the ambient dimension")
    if not is_box(target):
        raise ValueError("clamp target must be a full integer box")
    if not target.points <= img.points:
        raise ValueError("clamp target must be contained in the image")
    bounds = bounds_of(target)
    table = {}
    for p in img.points:
        table[p] = tuple(min(max(c, lo), hi) for c, (lo, hi) in zip(p, bounds))
    return PointMap(img, target, table)


_STANDARD_KINDS = ("identity", "constant", "projection", "antipodal", "shift-fold", "clamp")


def make_standard_map(kind: str, **params) -> PointMap:
    """Dispatch to the named constructors by kind string."""
    if kind == "identity":
        return identity_map(params["img"])
    if kind == "constant":
        return constant_map(params["img"], params["value"], params.get("codomain"))
    if kind == "projection":
        return projection_map(params["img"], params["index"])
    if kind == "antipodal":
        return antipodal_map(params["dim"])
    if kind == "shift-fold":
        return shift_fold_map()
    if kind == "clamp":
        return clamp_map(params["img"], params["target"])
    raise ValueError(f"unknown map kind {kind!r} (expected one of {_STANDARD_KINDS})")


# --- enumeration ----------------------------------------------------------


def closed_value_neighborhoods(
    img: DigitalImage, adj: Adjacency
) -> dict[Point, frozenset[Point]]:
    """Closed neighborhood of every point, precomputed for search loops."""
    validate_adjacency(adj, img.dim)
    if isinstance(adj, CU):
        u = adj.u
        pts = img.sorted_points
        out = {}
        for p in pts:
            out[p] = frozenset(q for q in pts if _cu_adjacent(p, q, u)) | {p}
        return out
    out = {}
    for p in img.sorted_points:
        dist = _bfs_distances(img, adj.base, p, limit=adj.k)
        out[p] = frozenset(dist)
    return out


def _earlier_neighbor_lists(
    img: DigitalImage, adj: Adjacency
) -> tuple[tuple[Point, ...], list[list[int]]]:
    """Domain points in lexicographic order, each with the indices of the
    earlier points adjacent to it."""
    order = img.sorted_points
    closed = closed_value_neighborhoods(img, adj)
    earlier: list[list[int]] = []
    index = {p: i for i, p in enumerate(order)}
    for i, p in enumerate(order):
        earlier.append(sorted(index[q] for q in closed[p] if index[q] < i))
    return order, earlier


def search_continuous_maps(
    domain: DigitalImage,
    codomain: DigitalImage,
    domain_adj: Adjacency,
    codomain_adj: Adjacency,
    *,
    allowed: Mapping[Point, Iterable[Point]] | None = None,
    distinct: bool = False,
    budget: int | Budget | None = None,
) -> Iterator[PointMap]:
    """Stream the continuous maps whose value at each point lies in ``allowed``.

    ``allowed`` restricts candidate values per domain point (defaulting to the
    whole codomain); ``distinct`` additionally forces injectivity.  Tables are
    emitted in lexicographic order keyed by the sorted domain points, so the
    first solution is always the canonical least one.
    """
    validate_adjacency(domain_adj, domain.dim)
    validate_adjacency(codomain_adj, codomain.dim)
    counter = as_budget(budget, "searching continuous maps")
    order, earlier = _earlier_neighbor_lists(domain, domain_adj)
    closed = closed_value_neighborhoods(codomain, codomain_adj)
    all_values = tuple(codomain.sorted_points)

    candidates: list[tuple[Point, ...]] = []
    for p in order:
        if allowed is not None and p in allowed:
            vals = tuple(sorted(set(allowed[p])))
            for v in vals:
                if v not in codomain.points:
                    raise ValueError(f"allowed value {v} for {p} is outside the codomain")
        else:
            vals = all_values
        candidates.append(vals)

    n = len(order)
    assignment: list[Point | None] = [None] * n
    used: set[Point] = set()

    def extend(i: int) -> Iterator[PointMap]:
        if i == n:
            yield PointMap(domain, codomain, dict(zip(order, assignment)))
            return
        feasible = candidates[i]
        for j in earlier[i]:
            nbhd = closed[assignment[j]]
            feasible = [v for v in feasible if v in nbhd]
            if not feasible:
                return
        for v in feasible:
            if distinct and v in used:
                continue
            counter.spend()
            assignment[i] = v
            if distinct:
                used.add(v)
            yield from extend(i + 1)
            if distinct:
                used.discard(v)
        assignment[i] = None

    return extend(0)


def enumerate_continuous_maps(
    domain: DigitalImage,
    codomain: DigitalImage,
    domain_adj: Adjacency,
    codomain_adj: Adjacency,
    budget: int | Budget | None = None,
) -> Iterator[PointMap]:
    """All continuous maps from domain to codomain, each exactly once, in
    lexicographic table order."""
    return search_continuous_maps(
        domain, codomain, domain_adj, codomain_adj, budget=budget
    )

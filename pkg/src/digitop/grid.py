"""Finite digital images on the integer lattice and their adjacency structure.

A digital image is a finite nonempty set of points of Z^n, viewed as a graph
under an adjacency relation. Two kinds of adjacency are supported:

* ``CU(u)``: two distinct points are adjacent when at most ``u`` coordinates
  differ, each differing coordinate differs by exactly 1, and all remaining
  coordinates are equal.  In the plane ``CU(1)`` is 4-adjacency and ``CU(2)``
  is 8-adjacency.
* ``Power(base, k)``: two distinct points are adjacent when a base-adjacency
  path of length at most ``k`` joins them inside the image.  This relation is
  image-relative: the path must stay in the point set being queried.

Images are immutable values and every operation here is a pure query.
"""

from __future__ import annotations

import itertools
import math
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

Point = tuple[int, ...]


def as_point(coords: Iterable[int]) -> Point:
    """Coerce an iterable of integers into a point tuple."""
    point = tuple(coords)
    if not point:
        raise ValueError("a point needs at least one coordinate")
    for c in point:
        if not isinstance(c, int) or isinstance(c, bool):
            raise ValueError(f"non-integer coordinate {c!r}")
    return point


@dataclass(frozen=True)
class CU:
    """One-step lattice adjacency allowing up to ``u`` unit coordinate changes."""

    u: int

    def __post_init__(self) -> None:
        if self.u < 1:
            raise ValueError(f"CU index must be at least 1, got {self.u}")

    def __str__(self) -> str:
        return f"c{self.u}"


@dataclass(frozen=True)
class Power:
    """Path power of a one-step adjacency: joined by a short path in the image."""

    base: CU
    k: int

    def __post_init__(self) -> None:
        if not isinstance(self.base, CU):
            raise ValueError("only one level of path power over a CU base is supported")
        if self.k < 1:
            raise ValueError(f"path-power exponent must be at least 1, got {self.k}")

    def __str__(self) -> str:
        return f"{self.base}^{self.k}"


Adjacency = CU | Power

_ADJACENCY_RE = re.compile(r"^c(\d+)(?:\^(\d+))?$")


def parse_adjacency(text: str) -> Adjacency:
    """Parse ``c<u>`` or ``c<u>^<k>`` notation into an adjacency value."""
    m = _ADJACENCY_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse adjacency {text!r} (expected c<u> or c<u>^<k>)")
    base = CU(int(m.group(1)))
    if m.group(2) is None:
        return base
    return Power(base, int(m.group(2)))


def validate_adjacency(adj: Adjacency, dim: int) -> None:
    """Check that an adjacency makes sense in ambient dimension ``dim``."""
    base = adj.base if isinstance(adj, Power) else adj
    if not isinstance(base, CU):
        raise ValueError(f"unsupported adjacency {adj!r}")
    if not 1 <= base.u <= dim:
        raise ValueError(f"adjacency {adj} is invalid in dimension {dim}")


@dataclass(frozen=True)
class DigitalImage:
    """A finite nonempty set of lattice points with a declared dimension."""

    dim: int
    points: frozenset[Point]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("image dimension must be at least 1")
        if not isinstance(self.points, frozenset):
            object.__setattr__(self, "points", frozenset(self.points))
        if not self.points:
            raise ValueError("a digital image must contain at least one point")
        for p in self.points:
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not have dimension {self.dim}")

    @cached_property
    def sorted_points(self) -> tuple[Point, ...]:
        return tuple(sorted(self.points))

    def __contains__(self, point: object) -> bool:
        return point in self.points

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.sorted_points)

    def is_subset_of(self, other: "DigitalImage") -> bool:
        return self.dim == other.dim and self.points <= other.points


def image(points: Iterable[Iterable[int]], dim: int | None = None) -> DigitalImage:
    """Build an image from raw coordinate iterables, inferring the dimension."""
    pts = frozenset(as_point(p) for p in points)
    if not pts:
        raise ValueError("a digital image must contain at least one point")
    if dim is None:
        dim = len(next(iter(pts)))
    return DigitalImage(dim, pts)


def box(bounds: Iterable[tuple[int, int]]) -> DigitalImage:
    """The integer box with one inclusive (lo, hi) range per coordinate."""
    ranges = []
    for lo, hi in bounds:
        if lo > hi:
            raise ValueError(f"empty box range [{lo}, {hi}]")
        ranges.append(range(lo, hi + 1))
    if not ranges:
        raise ValueError("a box needs at least one coordinate range")
    return DigitalImage(len(ranges), frozenset(itertools.product(*ranges)))


def interval(lo: int, hi: int) -> DigitalImage:
    """The one-dimensional box [lo, hi]."""
    return box([(lo, hi)])


def cube(side_hi: int, dim: int) -> DigitalImage:
    """The box [0, side_hi]^dim."""
    return box([(0, side_hi)] * dim)


def bounds_of(img: DigitalImage) -> tuple[tuple[int, int], ...]:
    """Per-coordinate (min, max) over the image's points."""
    cols = list(zip(*img.sorted_points))
    return tuple((min(col), max(col)) for col in cols)


def is_box(img: DigitalImage) -> bool:
    """True when the image is exactly a full integer box."""
    size = 1
    for lo, hi in bounds_of(img):
        size *= hi - lo + 1
    return size == len(img)


def _require_member(img: DigitalImage, point: Point, role: str = "point") -> None:
    if len(point) != img.dim:
        raise ValueError(f"{role} {point} does not match image dimension {img.dim}")
    if point not in img.points:
        raise ValueError(f"{role} {point} is not in the image")


def _cu_adjacent(x: Point, y: Point, u: int) -> bool:
    # Raw coordinate test; membership is the caller's concern.
    if x == y:
        return False
    changed = 0
    for a, b in zip(x, y):
        d = a - b
        if d == 0:
            continue
        if d != 1 and d != -1:
            return False
        changed += 1
    return changed <= u


def _bfs_distances(
    img: DigitalImage, base: CU, start: Point, limit: int | None = None
) -> dict[Point, int]:
    """Shortest path lengths from ``start`` under the base adjacency, within the image."""
    dist = {start: 0}
    queue = deque([start])
    pts = img.points
    u = base.u
    while queue:
        p = queue.popleft()
        d = dist[p]
        if limit is not None and d >= limit:
            continue
        for q in pts:
            if q not in dist and _cu_adjacent(p, q, u):
                dist[q] = d + 1
                queue.append(q)
    return dist


def adjacent(img: DigitalImage, adj: Adjacency, x: Point, y: Point) -> bool:
    """Whether two image points are related by the adjacency (irreflexive)."""
    validate_adjacency(adj, img.dim)
    _require_member(img, x)
    _require_member(img, y)
    if isinstance(adj, CU):
        return _cu_adjacent(x, y, adj.u)
    if x == y:
        return False
    dist = _bfs_distances(img, adj.base, x, limit=adj.k)
    return y in dist


def reflexive_adjacent(img: DigitalImage, adj: Adjacency, x: Point, y: Point) -> bool:
    """Equal or adjacent: the relation written with a double harpoon."""
    if x == y:
        _require_member(img, x)
        validate_adjacency(adj, img.dim)
        return True
    return adjacent(img, adj, x, y)


def sets_adjacent(
    img: DigitalImage, adj: Adjacency, first: Iterable[Point], second: Iterable[Point]
) -> bool:
    """Whether two nonempty point sets contain an equal-or-adjacent pair."""
    a = frozenset(first)
    b = frozenset(second)
    if not a or not b:
        raise ValueError("set adjacency needs nonempty operands")
    for p in a:
        _require_member(img, p)
    for q in b:
        _require_member(img, q)
    if a & b:
        return True
    for p in a:
        for q in b:
            if adjacent(img, adj, p, q):
                return True
    return False


def neighbors(img: DigitalImage, adj: Adjacency, x: Point) -> frozenset[Point]:
    """All image points adjacent to ``x``."""
    validate_adjacency(adj, img.dim)
    _require_member(img, x)
    if isinstance(adj, CU):
        u = adj.u
        return frozenset(y for y in img.points if _cu_adjacent(x, y, u))
    dist = _bfs_distances(img, adj.base, x, limit=adj.k)
    return frozenset(y for y in dist if y != x)


def closed_neighbors(img: DigitalImage, adj: Adjacency, x: Point) -> frozenset[Point]:
    """``x`` together with all points adjacent to it."""
    return neighbors(img, adj, x) | {x}


def components(img: DigitalImage, adj: Adjacency) -> tuple[frozenset[Point], ...]:
    """Connected components, sorted by their least point."""
    validate_adjacency(adj, img.dim)
    remaining = set(img.points)
    out: list[frozenset[Point]] = []
    while remaining:
        start = next(iter(remaining))
        seen = {start}
        queue = deque([start])
        while queue:
            p = queue.popleft()
            for q in neighbors(img, adj, p):
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        remaining -= seen
        out.append(frozenset(seen))
    out.sort(key=min)
    return tuple(out)


def is_connected(img: DigitalImage, adj: Adjacency) -> tuple[bool, tuple[frozenset[Point], ...]]:
    """Connectivity verdict together with the component partition."""
    parts = components(img, adj)
    return len(parts) == 1, parts


def shortest_path_lengths(img: DigitalImage, adj: Adjacency, x: Point) -> dict[Point, int]:
    """Shortest adjacency-path lengths from ``x`` to every reachable point."""
    validate_adjacency(adj, img.dim)
    _require_member(img, x)
    if isinstance(adj, CU):
        return _bfs_distances(img, adj, x)
    # One power edge covers up to k base steps, so distances divide by k.
    base = _bfs_distances(img, adj.base, x)
    return {p: -(-d // adj.k) for p, d in base.items()}


def eccentricity(img: DigitalImage, adj: Adjacency, x: Point) -> int | float:
    """Largest shortest-path distance from ``x``; ``inf`` if some point is unreachable."""
    dist = shortest_path_lengths(img, adj, x)
    if len(dist) < len(img):
        return math.inf
    return max(dist.values())


@dataclass(frozen=True)
class StructureCertificates:
    """Structural facts that certify fixed-point behaviour outright."""

    complete: bool
    dominating: Point | None


def structure_certificates(img: DigitalImage, adj: Adjacency) -> StructureCertificates:
    """Whether the image is a complete graph, and its least dominating point.

    A dominating point is equal-or-adjacent to every point of the image.  The
    least such point (lexicographically) is reported so output is stable.
    """
    validate_adjacency(adj, img.dim)
    pts = img.sorted_points
    complete = True
    dominating: Point | None = None
    all_points = img.points
    for p in pts:
        closed = closed_neighbors(img, adj, p)
        if closed != all_points:
            complete = False
        elif dominating is None:
            dominating = p
    return StructureCertificates(complete=complete, dominating=dominating)

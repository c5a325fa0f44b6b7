"""Plain-text formats for images and maps, plus DOT export.

Image files::

    # optional comments
    dim 2
    point -1 0
    point 0 0

Map files::

    map 2 2
    -1 0 -> 0 0
    0 0 -> 1 0 | 1 1

The header carries the domain and codomain dimensions.  A line lists the
argument coordinates, an arrow, and one or more value tuples separated by
``|``.  Writers sort everything lexicographically so both formats round-trip
byte for byte.
"""

from __future__ import annotations

from .errors import FormatError
from .grid import Adjacency, DigitalImage, Point, adjacent
from .maps import PointMap
from .subdivision import MultiMap


def format_point(p: Point) -> str:
    return "(" + ",".join(str(c) for c in p) + ")"


def parse_point(text: str) -> Point:
    """Accept ``1,2``, ``(1,2)`` or whitespace-separated coordinates."""
    cleaned = text.strip().strip("()")
    parts = cleaned.replace(",", " ").split()
    if not parts:
        raise ValueError(f"cannot parse point from {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"cannot parse point from {text!r}") from None


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body))
    return out


def parse_image(text: str) -> DigitalImage:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty image file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "dim":
        raise FormatError(f"expected 'dim <n>' header, got {header!r}", lineno)
    try:
        dim = int(parts[1])
    except ValueError:
        raise FormatError(f"non-integer dimension {parts[1]!r}", lineno) from None
    if dim < 1:
        raise FormatError(f"dimension must be positive, got {dim}", lineno)

    points: set[Point] = set()
    for lineno, body in lines[1:]:
        parts = body.split()
        if parts[0] != "point":
            raise FormatError(f"expected 'point <coords>', got {body!r}", lineno)
        coords = parts[1:]
        if len(coords) != dim:
            raise FormatError(
                f"arity mismatch: expected {dim} coordinates, got {len(coords)}", lineno
            )
        try:
            p = tuple(int(c) for c in coords)
        except ValueError:
            raise FormatError(f"non-integer coordinate in {body!r}", lineno) from None
        if p in points:
            raise FormatError(f"duplicate point {format_point(p)}", lineno)
        points.add(p)
    if not points:
        raise FormatError("image file lists no points")
    return DigitalImage(dim, frozenset(points))


def write_image(img: DigitalImage) -> str:
    lines = [f"dim {img.dim}"]
    for p in img.sorted_points:
        lines.append("point " + " ".join(str(c) for c in p))
    return "\n".join(lines) + "\n"


class MapData:
    """Parsed map file: dimensions plus rows of (argument, value tuples)."""

    __slots__ = ("domain_dim", "codomain_dim", "rows")

    def __init__(
        self,
        domain_dim: int,
        codomain_dim: int,
        rows: tuple[tuple[Point, tuple[Point, ...]], ...],
    ) -> None:
        self.domain_dim = domain_dim
        self.codomain_dim = codomain_dim
        self.rows = rows

    def is_single_valued(self) -> bool:
        return all(len(values) == 1 for _, values in self.rows)

    def domain_image(self) -> DigitalImage:
        return DigitalImage(self.domain_dim, frozenset(x for x, _ in self.rows))

    def codomain_image(self) -> DigitalImage:
        values = frozenset(y for _, ys in self.rows for y in ys)
        return DigitalImage(self.codomain_dim, values)


def parse_map(text: str) -> MapData:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty map file")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "map":
        raise FormatError(f"expected 'map <n_dom> <n_cod>' header, got {header!r}", lineno)
    try:
        domain_dim, codomain_dim = int(parts[1]), int(parts[2])
    except ValueError:
        raise FormatError(f"non-integer dimension in {header!r}", lineno) from None
    if domain_dim < 1 or codomain_dim < 1:
        raise FormatError("dimensions must be positive", lineno)

    rows: list[tuple[Point, tuple[Point, ...]]] = []
    seen: set[Point] = set()
    for lineno, body in lines[1:]:
        if "->" not in body:
            raise FormatError(f"expected '<coords> -> <coords>', got {body!r}", lineno)
        left, _, right = body.partition("->")
        try:
            x = tuple(int(c) for c in left.split())
        except ValueError:
            raise FormatError(f"non-integer coordinate in {left!r}", lineno) from None
        if len(x) != domain_dim:
            raise FormatError(
                f"arity mismatch: expected {domain_dim} argument coordinates, got {len(x)}",
                lineno,
            )
        if x in seen:
            raise FormatError(f"duplicate argument {format_point(x)}", lineno)
        seen.add(x)
        values: list[Point] = []
        for chunk in right.split("|"):
            try:
                y = tuple(int(c) for c in chunk.split())
            except ValueError:
                raise FormatError(f"non-integer coordinate in {chunk!r}", lineno) from None
            if len(y) != codomain_dim:
                raise FormatError(
                    f"arity mismatch: expected {codomain_dim} value coordinates, got {len(y)}",
                    lineno,
                )
            values.append(y)
        if not values:
            raise FormatError("empty value list", lineno)
        rows.append((x, tuple(sorted(set(values)))))
    if not rows:
        raise FormatError("map file lists no rows")
    rows.sort(key=lambda row: row[0])
    return MapData(domain_dim, codomain_dim, tuple(rows))


def point_map_from_data(
    data: MapData,
    domain: DigitalImage | None = None,
    codomain: DigitalImage | None = None,
) -> PointMap:
    if not data.is_single_valued():
        raise ValueError("map file contains multivalued rows")
    domain = domain if domain is not None else data.domain_image()
    codomain = codomain if codomain is not None else data.codomain_image()
    table = {x: values[0] for x, values in data.rows}
    return PointMap(domain, codomain, table)


def multimap_from_data(
    data: MapData,
    domain: DigitalImage | None = None,
    codomain: DigitalImage | None = None,
) -> MultiMap:
    domain = domain if domain is not None else data.domain_image()
    codomain = codomain if codomain is not None else data.codomain_image()
    table = {x: values for x, values in data.rows}
    return MultiMap(domain, codomain, table)


def write_point_map(f: PointMap) -> str:
    lines = [f"map {f.domain.dim} {f.codomain.dim}"]
    for x, y in f.items():
        lines.append(
            " ".join(str(c) for c in x) + " -> " + " ".join(str(c) for c in y)
        )
    return "\n".join(lines) + "\n"


def write_multimap(F: MultiMap) -> str:
    lines = [f"map {F.domain.dim} {F.codomain.dim}"]
    for x, ys in F.items():
        rhs = " | ".join(" ".join(str(c) for c in y) for y in ys)
        lines.append(" ".join(str(c) for c in x) + " -> " + rhs)
    return "\n".join(lines) + "\n"


def export_dot(
    img: DigitalImage,
    adj: Adjacency,
    overlay: PointMap | MultiMap | None = None,
) -> str:
    """Deterministic DOT text: labeled nodes, undirected adjacency edges, and
    optional directed arrows showing a map's values."""
    lines = ["digraph image {"]
    for p in img.sorted_points:
        lines.append(f'  "{format_point(p)}";')
    pts = img.sorted_points
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            if adjacent(img, adj, p, q):
                lines.append(
                    f'  "{format_point(p)}" -> "{format_point(q)}" [dir=none];'
                )
    if overlay is not None:
        if isinstance(overlay, PointMap):
            arrows = [(x, (y,)) for x, y in overlay.items()]
        else:
            arrows = list(overlay.items())
        for x, ys in arrows:
            for y in ys:
                lines.append(
                    f'  "{format_point(x)}" -> "{format_point(y)}" [color=red];'
                )
    lines.append("}")
    return "\n".join(lines) + "\n"

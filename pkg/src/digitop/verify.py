"""Built-in verification suite: every checkable claim at desk scale.

Each check is registered with a short claim key (plus extra claim tags) so
the command line can run a filtered subset.  A check returns a list of
failure messages; an empty list is a pass.  Where a check compares the
library against an oracle, the oracle below is written from scratch on raw
coordinates and never calls the code path it is checking.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable, Sequence, TextIO

from . import afpp, maps, subdivision
from .grid import CU, DigitalImage, Point, box, cube, image, interval
from .afpp import Status
from .subdivision import TriState

Failures = list[str]


@dataclass(frozen=True)
class ClaimCheck:
    key: str
    tags: tuple[str, ...]
    title: str
    run: Callable[[], Failures]

    def matches(self, needle: str) -> bool:
        needle = needle.lower()
        return needle in self.key.lower() or any(needle in t.lower() for t in self.tags)


# --- independent oracles (raw coordinates, no library calls) ----------------


def _oracle_cu_adjacent(x: Point, y: Point, u: int) -> bool:
    if x == y:
        return False
    changed = 0
    for a, b in zip(x, y):
        if a == b:
            continue
        if abs(a - b) != 1:
            return False
        changed += 1
    return changed <= u


def _oracle_connected(points: frozenset[Point], u: int) -> bool:
    pts = set(points)
    if not pts:
        return True
    stack = [pts.pop()]
    while stack:
        p = stack.pop()
        for q in list(pts):
            if _oracle_cu_adjacent(p, q, u):
                pts.remove(q)
                stack.append(q)
    return not pts


def _oracle_articulation_points(points: frozenset[Point], u: int) -> set[Point]:
    out = set()
    for p in points:
        rest = points - {p}
        if rest and not _oracle_connected(rest, u):
            out.add(p)
    return out


def _oracle_is_continuous(
    table: dict[Point, Point], pts: Sequence[Point], dom_u: int, cod_u: int
) -> bool:
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            if _oracle_cu_adjacent(p, q, dom_u):
                fp, fq = table[p], table[q]
                if fp != fq and not _oracle_cu_adjacent(fp, fq, cod_u):
                    return False
    return True


def _oracle_count_continuous_tables(
    domain_pts: Sequence[Point], codomain_pts: Sequence[Point], dom_u: int, cod_u: int
) -> int:
    count = 0
    for values in itertools.product(codomain_pts, repeat=len(domain_pts)):
        table = dict(zip(domain_pts, values))
        if _oracle_is_continuous(table, domain_pts, dom_u, cod_u):
            count += 1
    return count


def _oracle_connected_subsets(points: Sequence[Point], u: int) -> list[frozenset[Point]]:
    out = []
    n = len(points)
    for mask in range(1, 1 << n):
        subset = frozenset(points[i] for i in range(n) if mask >> i & 1)
        if _oracle_connected(subset, u):
            out.append(subset)
    return out


def _random_image(rng: random.Random, max_points: int = 8, max_dim: int = 3) -> DigitalImage:
    dim = rng.randint(1, max_dim)
    count = rng.randint(1, max_points)
    pts = set()
    while len(pts) < count:
        pts.add(tuple(rng.randint(-3, 3) for _ in range(dim)))
    return DigitalImage(dim, frozenset(pts))


# --- the checks --------------------------------------------------------------


def _check_shift_fold_profile() -> Failures:
    failures = []
    f = maps.shift_fold_map()
    if not maps.is_continuous(f, CU(1), CU(1)).continuous:
        failures.append("shift-fold map should be continuous with the one-step adjacency")
    report = maps.is_continuous(f, CU(2), CU(2))
    if report.continuous:
        failures.append("shift-fold map should be discontinuous with the diagonal adjacency")
    elif report.witness != ((-1, 1), (0, 0)):
        failures.append(f"expected witness ((-1,1),(0,0)), got {report.witness}")
    expected_values = {(-1, -1): (0, -1), (1, 1): (1, 0), (0, 0): (1, 0)}
    for x, y in expected_values.items():
        if f(x) != y:
            failures.append(f"shift-fold map sends {x} to {f(x)}, expected {y}")
    return failures


def _check_antipodal_profile() -> Failures:
    failures = []
    for v in (2, 3):
        flip = maps.antipodal_map(v)
        all_points = flip.domain.points
        for u in range(1, v + 1):
            if not maps.is_continuous(flip, CU(u), CU(u)).continuous:
                failures.append(f"coordinate flip on dim {v} should be c{u}-continuous")
            approx = afpp.approx_fixed_points(flip, CU(u))
            if u < v and approx:
                failures.append(
                    f"coordinate flip on dim {v} should have no c{u}-approximate fixed point"
                )
            if u == v and approx != all_points:
                failures.append(
                    f"coordinate flip on dim {v} should have every point c{v}-approximate"
                )
    return failures


def _check_single_decision_table() -> Failures:
    failures = []
    unit_square = cube(1, 2)
    wide_square = box([(-1, 1), (-1, 1)])

    verdict = afpp.decide_afpp_s(unit_square, CU(1))
    if verdict.status is not Status.FAILS:
        failures.append(f"unit square under c1 should FAIL, got {verdict.status.value}")
    elif verdict.counterexample != maps.antipodal_map(2):
        failures.append("unit square counterexample should be the coordinate flip")

    verdict = afpp.decide_afpp_s(unit_square, CU(2))
    if verdict.status is not Status.HOLDS:
        failures.append(f"unit square under c2 should HOLD, got {verdict.status.value}")

    verdict = afpp.decide_afpp_s(wide_square, CU(2))
    if verdict.status is not Status.HOLDS:
        failures.append(f"3x3 grid under c2 should HOLD, got {verdict.status.value}")
    elif verdict.certificate is None or verdict.certificate.kind != "dominating-point":
        failures.append(f"3x3 grid should HOLD by dominating point, got {verdict.certificate}")
    elif verdict.certificate.point != (0, 0):
        failures.append(f"dominating point should be (0,0), got {verdict.certificate.point}")

    verdict = afpp.decide_afpp_s(wide_square, CU(1))
    if verdict.status is not Status.FAILS:
        failures.append(f"3x3 grid under c1 should FAIL, got {verdict.status.value}")

    verdict = afpp.decide_afpp_s(interval(0, 5), CU(1))
    if verdict.status is not Status.HOLDS:
        failures.append(f"[0,5] under c1 should HOLD, got {verdict.status.value}")
    return failures


def _check_generalized_box_decision() -> Failures:
    failures = []
    grid3 = cube(2, 2)
    scan = afpp.decide_afpp_s(
        grid3, CU(1), CU(1), CU(2), use_certificates=False, exhaustive_scan=True
    )
    if scan.status is not Status.HOLDS:
        failures.append(f"full enumeration should HOLD, got {scan.status.value}")
    search = afpp.decide_afpp_s(grid3, CU(1), CU(1), CU(2), use_certificates=False)
    if search.status is not scan.status:
        failures.append("search and scan paths disagree")
    certified = afpp.decide_afpp_s(grid3, CU(1), CU(1), CU(2))
    if certified.status is not scan.status:
        failures.append("certificate and scan paths disagree")
    return failures


def _check_center_power_certificates() -> Failures:
    failures = []
    for n, v in ((2, 1), (2, 2), (3, 2), (4, 2), (2, 3)):
        report = afpp.verify_box_theorems(n, v, u=1, include_single=False)
        bound = -(-n // 2)
        if report.center is None or report.center_eccentricity is None:
            failures.append(f"(n={n}, v={v}): no center point evaluated")
            continue
        if report.center_eccentricity > bound:
            failures.append(
                f"(n={n}, v={v}): center eccentricity {report.center_eccentricity} "
                f"exceeds {bound}"
            )
        pv = report.power_verdict
        if pv is None or pv.status is not Status.HOLDS or pv.certificate is None:
            failures.append(f"(n={n}, v={v}): power decision not certified HOLDS")
        sv = report.power_single_verdict
        if sv is None or sv.status is not Status.HOLDS:
            failures.append(f"(n={n}, v={v}): single-valued power decision should HOLD")
    return failures


def _check_subdivision_laws() -> Failures:
    failures = []
    rng = random.Random(2024)
    for i in range(20):
        img = _random_image(rng)
        for r in (1, 2, 3):
            s = subdivision.subdivide(img, r)
            expected = (r ** img.dim) * len(img)
            if len(s.points) != expected:
                failures.append(
                    f"sample {i}: level {r} has {len(s.points)} numerators, expected {expected}"
                )
            for base_point, fiber in s.fibers.items():
                if len(fiber) != r ** img.dim:
                    failures.append(
                        f"sample {i}: fiber of {base_point} has {len(fiber)} numerators"
                    )
                    break

    diagonal = image([(0, 0), (1, 1)])
    horizontal = image([(0, 0), (1, 0)])
    s_diag = subdivision.subdivide(diagonal, 2)
    s_horiz = subdivision.subdivide(horizontal, 2)
    art_diag = _oracle_articulation_points(s_diag.points, 2)
    art_horiz = _oracle_articulation_points(s_horiz.points, 2)
    # Oracle-computed: the unique bridge (1,1)-(2,2) makes both endpoints
    # articulation points, so the diagonal subdivision can be disconnected by
    # removing a single point while the horizontal one cannot.
    if art_diag != {(1, 1), (2, 2)}:
        failures.append(f"diagonal-pair articulation points {sorted(art_diag)} unexpected")
    if art_horiz:
        failures.append(f"horizontal-pair subdivision should be 2-connected, got {sorted(art_horiz)}")
    return failures


def _check_bounded_multivalued_results() -> Failures:
    failures = []
    small_interval = interval(0, 2)
    swept = afpp.decide_afpp_m(small_interval, CU(1), r_max=3, use_certificates=False)
    if swept.status is not Status.UNKNOWN or swept.counterexample is not None:
        failures.append("sweep on [0,2] should find no counterexample")
    certified = afpp.decide_afpp_m(small_interval, CU(1), r_max=3)
    if certified.status is not Status.HOLDS:
        failures.append(f"[0,2] should HOLD, got {certified.status.value}")
    elif certified.certificate is None or certified.certificate.kind != "interval-c1":
        failures.append(f"[0,2] should carry the interval-c1 certificate, got {certified.certificate}")

    unit_square = cube(1, 2)
    refuted = afpp.decide_afpp_m(unit_square, CU(1), r_max=1)
    if refuted.status is not Status.FAILS:
        failures.append(f"unit square under c1 should FAIL, got {refuted.status.value}")
    else:
        ce = refuted.counterexample
        if ce.r != 1 or ce.inducer.table != maps.antipodal_map(2).table:
            failures.append("level-1 counterexample should be the coordinate flip")

    for v in (1, 2, 3):
        verdict = afpp.decide_afpp_m(cube(1, v), CU(v), r_max=1)
        if verdict.status is not Status.HOLDS:
            failures.append(f"unit cube dim {v} should HOLD, got {verdict.status.value}")
        elif verdict.certificate is None or verdict.certificate.kind != "complete-graph":
            failures.append(
                f"unit cube dim {v} should HOLD by complete graph, got {verdict.certificate}"
            )
    return failures


def _check_universality_suite() -> Failures:
    failures = []
    singleton = image([(0,)])
    one = maps.identity_map(singleton)
    strict = afpp.universality_check(one, CU(1), mode="strict", opponents="single")
    if strict.status is not TriState.NO:
        failures.append(f"strict universality on a singleton should fail, got {strict.status.value}")
    weak = afpp.universality_check(one, CU(1), mode="weak", opponents="single")
    if weak.status is not TriState.YES:
        failures.append(f"weak universality on a singleton should hold, got {weak.status.value}")

    unit_square = cube(1, 2)
    full = subdivision.constant_full_multimap(unit_square, unit_square)
    report = subdivision.find_inducer(full, CU(1), CU(1), r_max=2)
    if not report.found or report.r != 2:
        failures.append("constant-full multimap on the unit square should be induced at level 2")
    else:
        induced = subdivision.induce_multimap(report.subdivision, report.inducer)
        against_single = afpp.universality_check(
            induced, CU(1), mode="weak", opponents="single", r_max=2
        )
        if against_single.status is not TriState.YES:
            failures.append(
                f"constant-full multimap should be weakly universal, got {against_single.status.value}"
            )
        against_multi = afpp.universality_check(
            induced, CU(1), mode="weak", opponents="multi", r_max=2
        )
        if against_multi.status is not TriState.YES:
            failures.append(
                "constant-full multimap should be certified weakly universal against multimaps"
            )
    return failures


def _equivalence_suite() -> list[tuple[DigitalImage, CU]]:
    singleton = image([(0,)])
    suite: list[tuple[DigitalImage, CU]] = [
        (singleton, CU(1)),
        (interval(0, 1), CU(1)),
        (interval(0, 2), CU(1)),
        (cube(1, 2), CU(1)),
        (cube(1, 2), CU(2)),
        (box([(-1, 1), (-1, 1)]), CU(1)),
        (box([(-1, 1), (-1, 1)]), CU(2)),
    ]
    return suite


def _check_equivalences() -> Failures:
    failures = []
    for img, adj in _equivalence_suite():
        single = afpp.decide_afpp_s(img, adj)
        uni = afpp.universality_check(
            maps.identity_map(img), adj, mode="weak", opponents="single"
        )
        holds = single.status is Status.HOLDS
        yes = uni.status is TriState.YES
        if holds != yes:
            failures.append(
                f"{len(img)}-point image under {adj}: decision {single.status.value} "
                f"but identity weak universality {uni.status.value}"
            )
        multi = afpp.decide_afpp_m(img, adj, r_max=2)
        if multi.status is Status.HOLDS and single.status is not Status.HOLDS:
            failures.append(
                f"{len(img)}-point image under {adj}: multivalued HOLDS but single-valued "
                f"{single.status.value}"
            )

    diagonal = image([(0, 0), (1, 1)])
    horizontal = image([(0, 0), (1, 0)])
    iso = maps.PointMap(
        diagonal, horizontal, {(0, 0): (0, 0), (1, 1): (1, 0)}
    )
    if not maps.is_isomorphism(iso, CU(2), CU(2)):
        failures.append("the two-point diagonal and horizontal images should be isomorphic")
    diag_verdict = afpp.decide_afpp_s(diagonal, CU(2))
    horiz_verdict = afpp.decide_afpp_s(horizontal, CU(2))
    if diag_verdict.status is not horiz_verdict.status:
        failures.append("isomorphic images disagree on the single-valued property")

    wide_square = box([(-1, 1), (-1, 1)])
    unit_square = cube(1, 2)
    clamp = maps.clamp_map(wide_square, unit_square)
    if not maps.is_retraction(clamp, unit_square, CU(1)):
        failures.append("clamping the 3x3 grid onto the unit square should be a retraction")
    retract_verdict = afpp.decide_afpp_s(unit_square, CU(1))
    host_verdict = afpp.decide_afpp_s(wide_square, CU(1))
    if retract_verdict.status is Status.FAILS and host_verdict.status is not Status.FAILS:
        failures.append("a retract fails but its host does not: transfer principle violated")

    harness = afpp.preservation_checks(_equivalence_suite(), r_max=2)
    for check in harness.failures():
        failures.append(f"preservation harness: {check.name} on {check.subject}: {check.detail}")
    return failures


def _check_oracle_equivalences() -> Failures:
    failures = []

    # Continuity versus the connected-subsets formulation.
    wide_square = box([(-1, 1), (-1, 1)])
    rng = random.Random(7)
    candidates: list[tuple[maps.PointMap, int, int]] = [
        (maps.shift_fold_map(), 1, 1),
        (maps.shift_fold_map(), 2, 2),
        (maps.identity_map(wide_square), 2, 2),
        (maps.clamp_map(wide_square, cube(1, 2)), 1, 1),
    ]
    for _ in range(6):
        img = _random_image(rng, max_points=6, max_dim=2)
        table = {x: rng.choice(img.sorted_points) for x in img.points}
        candidates.append((maps.PointMap(img, img, table), 1, 1))
    for f, dom_u, cod_u in candidates:
        checker = maps.is_continuous(f, CU(dom_u), CU(cod_u)).continuous
        oracle = all(
            _oracle_connected(frozenset(f(p) for p in subset), cod_u)
            for subset in _oracle_connected_subsets(f.domain.sorted_points, dom_u)
        )
        if checker != oracle:
            failures.append(
                f"continuity checker disagrees with connected-subsets oracle on {f!r}"
            )

    # Pruned enumeration counts versus raw table filtering.
    count_cases = [
        (interval(0, 1), interval(0, 1), 1, 1, 4),
        (interval(0, 2), interval(0, 2), 1, 1, 17),
        (cube(1, 2), cube(1, 2), 1, 1, None),
        (cube(1, 2), cube(1, 2), 2, 2, None),
        (image([(0, 0), (1, 0), (0, 1)]), cube(1, 2), 1, 1, None),
        (interval(0, 1), interval(0, 2), 1, 1, None),
    ]
    for domain, codomain, dom_u, cod_u, frozen in count_cases:
        enumerated = sum(
            1
            for _ in maps.enumerate_continuous_maps(
                domain, codomain, CU(dom_u), CU(cod_u)
            )
        )
        brute = _oracle_count_continuous_tables(
            domain.sorted_points, codomain.sorted_points, dom_u, cod_u
        )
        if enumerated != brute:
            failures.append(
                f"enumeration count {enumerated} != brute force {brute} "
                f"({len(domain)}->{len(codomain)} points, c{dom_u}/c{cod_u})"
            )
        if frozen is not None and enumerated != frozen:
            failures.append(f"expected frozen count {frozen}, got {enumerated}")

    # Induced multimap deduplication versus raw fiber tables at level 2.
    two_point_cases = [
        (interval(0, 1), 1),
        (image([(0, 0), (1, 1)]), 2),
        (image([(0, 0), (1, 0)]), 2),
    ]
    for img, u in two_point_cases:
        s = subdivision.subdivide(img, 2)
        numerators = s.image.sorted_points
        seen: set[tuple] = set()
        for values in itertools.product(img.sorted_points, repeat=len(numerators)):
            table = dict(zip(numerators, values))
            if not _oracle_is_continuous(table, numerators, u, u):
                continue
            key = tuple(
                frozenset(table[z] for z in sorted(s.fiber(p))) for p in img.sorted_points
            )
            seen.add(key)
        enumerated = sum(
            1 for _ in subdivision.enumerate_continuous_multimaps(img, img, CU(u), CU(u), 2)
        )
        if enumerated != len(seen):
            failures.append(
                f"multimap count {enumerated} != brute force {len(seen)} on {sorted(img.points)}"
            )
    return failures


CHECKS: tuple[ClaimCheck, ...] = (
    ClaimCheck(
        "example3.8",
        ("figure2",),
        "shift-fold map: continuous one-step, discontinuous diagonal, exact witness",
        _check_shift_fold_profile,
    ),
    ClaimCheck(
        "prop3.9",
        (),
        "coordinate flip on unit cubes: continuity and approximate fixed point sets",
        _check_antipodal_profile,
    ),
    ClaimCheck(
        "afpps-table",
        ("prop3.9", "lemma3.12", "example3.13", "thm3.10", "thm3.3"),
        "single-valued decision table on squares, grids and an interval",
        _check_single_decision_table,
    ),
    ClaimCheck(
        "cor3.4",
        ("thm3.3",),
        "generalized box decision by full enumeration on the 3x3 grid",
        _check_generalized_box_decision,
    ),
    ClaimCheck(
        "thm3.5",
        ("cor3.6",),
        "center eccentricity certifies the path-power decisions on cubes",
        _check_center_power_certificates,
    ),
    ClaimCheck(
        "subdivision-laws",
        ("example2.6", "figure1"),
        "subdivision cardinalities, fibers, and the articulation contrast",
        _check_subdivision_laws,
    ),
    ClaimCheck(
        "afppm",
        ("thm3.1", "lemma3.12", "example3.13", "prop2.12"),
        "bounded multivalued decisions: interval certificate, refutation, complete cubes",
        _check_bounded_multivalued_results,
    ),
    ClaimCheck(
        "universality",
        ("prop5.2", "section5"),
        "strict versus weak universality on a singleton; constant-full multimap",
        _check_universality_suite,
    ),
    ClaimCheck(
        "equivalences",
        ("section6", "prop2.12", "thm2.9", "thm2.10", "prop5.4"),
        "decision/universality agreement, isomorphism and retraction transfer",
        _check_equivalences,
    ),
    ClaimCheck(
        "oracles",
        ("def2.2", "thm2.3"),
        "library versus brute-force oracles: continuity, map counts, multimap counts",
        _check_oracle_equivalences,
    ),
)


def run_verification(
    filter_text: str | None = None, stream: TextIO | None = None
) -> bool:
    """Run the registered checks, print one line per check, return overall pass."""
    import sys

    out = stream if stream is not None else sys.stdout
    selected = [c for c in CHECKS if filter_text is None or c.matches(filter_text)]
    if not selected:
        print(f"no checks match filter {filter_text!r}", file=out)
        return False
    all_ok = True
    for check in selected:
        start = time.perf_counter()
        failures = check.run()
        elapsed = time.perf_counter() - start
        status = "PASS" if not failures else "FAIL"
        tags = f" ({', '.join(check.tags)})" if check.tags else ""
        print(f"{status} {check.key}{tags}: {check.title} [{elapsed:.2f}s]", file=out)
        for failure in failures:
            print(f"     - {failure}", file=out)
        all_ok = all_ok and not failures
    print(
        f"summary: {len(selected)} checks run, "
        f"{'all passed' if all_ok else 'FAILURES PRESENT'}",
        file=out,
    )
    return all_ok

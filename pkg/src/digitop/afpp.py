"""Approximate fixed point decisions for digital images.

A point is an approximate fixed point of a self-map when it is equal or
adjacent to (an element of) its image under a chosen closeness adjacency.
The single-valued property is decided exactly: the space of continuous
self-maps is finite, and a backtracking search over maps avoiding every
closed neighborhood either produces the least counterexample or proves none
exists.  The multivalued property can only be refuted within a bounded
subdivision sweep, so positive answers require a structural certificate;
this three-valued honesty contract is deliberate and central.

Certificates, tried in order (first match is the reported kind):

* ``complete-graph``: every pair of points is adjacent under the closeness
  adjacency, so any image value is acceptable.
* ``interval-c1`` (multivalued decisions only): the image is a contiguous
  one-dimensional box and all three adjacencies are the one-step relation.
* ``dominating-point``: some point is equal-or-adjacent to every point, so
  it is an approximate fixed point of every self-map.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import (
    SIZE_GUARD,
    Budget,
    BudgetExceededError,
    SizeGuardError,
    as_budget,
)
from .grid import (
    CU,
    Adjacency,
    DigitalImage,
    Point,
    Power,
    bounds_of,
    closed_neighbors,
    cube,
    eccentricity,
    structure_certificates,
    validate_adjacency,
)
from .maps import (
    PointMap,
    enumerate_continuous_maps,
    identity_map,
    is_continuous,
    is_isomorphism,
    search_continuous_maps,
)
from .subdivision import (
    MultiMap,
    TriState,
    find_inducer,
    induce_multimap,
    singleton_multimap,
    subdivide,
)


class Status(Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class Certificate:
    kind: str
    point: Point | None = None

    def __str__(self) -> str:
        if self.point is None:
            return self.kind
        return f"{self.kind} ({','.join(str(c) for c in self.point)})"


@dataclass(frozen=True)
class MultiCounterexample:
    """A refuting multimap together with the subdivision level and inducer
    that witness its continuity."""

    r: int
    inducer: PointMap
    multimap: MultiMap


@dataclass(frozen=True)
class AfppVerdict:
    status: Status
    certificate: Certificate | None = None
    counterexample: PointMap | MultiCounterexample | None = None
    detail: str | None = None


# --- fixed and approximate fixed point sets --------------------------------


def _require_self_map(m) -> None:
    if not m.is_self_map():
        raise ValueError("fixed points are only defined for self-maps")


def fixed_points(f: PointMap) -> frozenset[Point]:
    _require_self_map(f)
    return frozenset(x for x in f.domain.points if f(x) == x)


def fixed_points_multi(F: MultiMap) -> frozenset[Point]:
    _require_self_map(F)
    return frozenset(x for x in F.domain.points if x in F(x))


def approx_fixed_points(f: PointMap, approx_adj: Adjacency) -> frozenset[Point]:
    """Points equal or adjacent to their image."""
    _require_self_map(f)
    validate_adjacency(approx_adj, f.domain.dim)
    img = f.domain
    return frozenset(
        x for x in img.points if f(x) in closed_neighbors(img, approx_adj, x)
    )


def approx_fixed_points_multi(F: MultiMap, approx_adj: Adjacency) -> frozenset[Point]:
    """Points equal or adjacent to some element of their value set."""
    _require_self_map(F)
    validate_adjacency(approx_adj, F.domain.dim)
    img = F.domain
    out = set()
    for x in img.points:
        closed = closed_neighbors(img, approx_adj, x)
        if F(x) & closed:
            out.add(x)
    return frozenset(out)


# --- certificates -----------------------------------------------------------


def _complete_certificate(img: DigitalImage, approx_adj: Adjacency) -> Certificate | None:
    certs = structure_certificates(img, approx_adj)
    if certs.complete:
        return Certificate("complete-graph")
    return None


def _dominating_certificate(img: DigitalImage, approx_adj: Adjacency) -> Certificate | None:
    certs = structure_certificates(img, approx_adj)
    if certs.dominating is not None:
        return Certificate("dominating-point", certs.dominating)
    return None


def has_interval_c1_certificate(
    img: DigitalImage,
    domain_adj: Adjacency,
    codomain_adj: Adjacency,
    approx_adj: Adjacency,
) -> bool:
    """Contiguous one-dimensional box with the one-step adjacency throughout."""
    if img.dim != 1:
        return False
    if not (domain_adj == CU(1) and codomain_adj == CU(1) and approx_adj == CU(1)):
        return False
    (lo, hi), = bounds_of(img)
    return hi - lo + 1 == len(img)


def _single_certificate(img: DigitalImage, approx_adj: Adjacency) -> Certificate | None:
    return _complete_certificate(img, approx_adj) or _dominating_certificate(img, approx_adj)


def _multi_certificate(
    img: DigitalImage,
    domain_adj: Adjacency,
    codomain_adj: Adjacency,
    approx_adj: Adjacency,
) -> Certificate | None:
    cert = _complete_certificate(img, approx_adj)
    if cert is not None:
        return cert
    if has_interval_c1_certificate(img, domain_adj, codomain_adj, approx_adj):
        return Certificate("interval-c1")
    return _dominating_certificate(img, approx_adj)


def _warn_size(img: DigitalImage) -> None:
    if len(img) ** len(img) > SIZE_GUARD:
        warnings.warn(
            f"raw table space {len(img)}^{len(img)} exceeds the size guard; "
            "the pruned search may still finish, but expect a long run",
            stacklevel=3,
        )


# --- single-valued decision -------------------------------------------------


def decide_afpp_s(
    img: DigitalImage,
    domain_adj: Adjacency,
    codomain_adj: Adjacency | None = None,
    approx_adj: Adjacency | None = None,
    *,
    budget: int | Budget | None = None,
    use_certificates: bool = True,
    exhaustive_scan: bool = False,
) -> AfppVerdict:
    """Decide whether every continuous self-map has an approximate fixed point.

    The decision is exact.  With ``exhaustive_scan`` the continuous self-maps
    are enumerated outright and each is checked; otherwise an equivalent
    constrained search looks directly for a continuous map avoiding every
    closed neighborhood.  Both return the lexicographically least
    counterexample, which is re-verified before the verdict is returned.
    """
    codomain_adj = domain_adj if codomain_adj is None else codomain_adj
    approx_adj = domain_adj if approx_adj is None else approx_adj
    validate_adjacency(domain_adj, img.dim)
    validate_adjacency(codomain_adj, img.dim)
    validate_adjacency(approx_adj, img.dim)

    if use_certificates:
        cert = _single_certificate(img, approx_adj)
        if cert is not None:
            return AfppVerdict(Status.HOLDS, certificate=cert)

    _warn_size(img)
    counter = as_budget(budget, "deciding the single-valued property")
    closed = {x: closed_neighbors(img, approx_adj, x) for x in img.points}

    counterexample: PointMap | None = None
    try:
        if exhaustive_scan:
            for f in enumerate_continuous_maps(img, img, domain_adj, codomain_adj, counter):
                if all(f(x) not in closed[x] for x in img.points):
                    counterexample = f
                    break
        else:
            allowed = {
                x: tuple(sorted(img.points - closed[x])) for x in img.points
            }
            for f in search_continuous_maps(
                img, img, domain_adj, codomain_adj, allowed=allowed, budget=counter
            ):
                counterexample = f
                break
    except BudgetExceededError as exc:
        return AfppVerdict(
            Status.UNKNOWN,
            detail=f"budget exhausted after {exc.limit} extensions",
        )

    if counterexample is not None:
        _verify_single_counterexample(
            counterexample, domain_adj, codomain_adj, approx_adj
        )
        return AfppVerdict(Status.FAILS, counterexample=counterexample)
    return AfppVerdict(Status.HOLDS, detail="exhaustive search found no counterexample")


def _verify_single_counterexample(
    f: PointMap,
    domain_adj: Adjacency,
    codomain_adj: Adjacency,
    approx_adj: Adjacency,
) -> None:
    if not is_continuous(f, domain_adj, codomain_adj).continuous:
        raise AssertionError("counterexample re-verification failed: not continuous")
    if approx_fixed_points(f, approx_adj):
        raise AssertionError(
            "counterexample re-verification failed: approximate fixed point exists"
        )


# --- multivalued decision -----------------------------------------------------


def decide_afpp_m(
    img: DigitalImage,
    domain_adj: Adjacency,
    codomain_adj: Adjacency | None = None,
    approx_adj: Adjacency | None = None,
    *,
    r_max: int = 3,
    budget: int | Budget | None = None,
    use_certificates: bool = True,
) -> AfppVerdict:
    """Certificate-or-bounded-refutation decision for continuous multimaps.

    Positive answers come only from certificates: the subdivision sweep can
    refute but never confirm, since continuous multimaps may need arbitrarily
    deep subdivisions.  A clean sweep therefore reports UNKNOWN.
    """
    codomain_adj = domain_adj if codomain_adj is None else codomain_adj
    approx_adj = domain_adj if approx_adj is None else approx_adj
    validate_adjacency(domain_adj, img.dim)
    validate_adjacency(codomain_adj, img.dim)
    validate_adjacency(approx_adj, img.dim)
    if r_max < 1:
        raise ValueError("r_max must be at least 1")

    if use_certificates:
        cert = _multi_certificate(img, domain_adj, codomain_adj, approx_adj)
        if cert is not None:
            return AfppVerdict(Status.HOLDS, certificate=cert)

    counter = as_budget(budget, "deciding the multivalued property")
    closed = {x: closed_neighbors(img, approx_adj, x) for x in img.points}

    try:
        for r in range(1, r_max + 1):
            s = subdivide(img, r)
            # A refuting multimap avoids every closed neighborhood blockwise,
            # which is a per-numerator restriction on its inducer.
            allowed = {
                z: tuple(sorted(img.points - closed[s.collapse(z)]))
                for z in s.points
            }
            for inducer in search_continuous_maps(
                s.image, img, domain_adj, codomain_adj, allowed=allowed, budget=counter
            ):
                refuting = induce_multimap(s, inducer)
                _verify_multi_counterexample(
                    refuting, inducer, domain_adj, codomain_adj, approx_adj
                )
                return AfppVerdict(
                    Status.FAILS,
                    counterexample=MultiCounterexample(r, inducer, refuting),
                )
    except BudgetExceededError as exc:
        return AfppVerdict(
            Status.UNKNOWN,
            detail=f"budget exhausted after {exc.limit} extensions",
        )
    return AfppVerdict(
        Status.UNKNOWN,
        detail=f"no counterexample at any subdivision level up to {r_max}",
    )


def _verify_multi_counterexample(
    F: MultiMap,
    inducer: PointMap,
    domain_adj: Adjacency,
    codomain_adj: Adjacency,
    approx_adj: Adjacency,
) -> None:
    if not is_continuous(inducer, domain_adj, codomain_adj).continuous:
        raise AssertionError("refuting inducer re-verification failed: not continuous")
    if approx_fixed_points_multi(F, approx_adj):
        raise AssertionError(
            "refuting multimap re-verification failed: approximate fixed point exists"
        )


# --- box theorems --------------------------------------------------------------


@dataclass(frozen=True)
class BoxTheoremReport:
    """Mechanized checks for cubes [0, n]^v.

    ``single_verdict`` is the exact decision for (one-step domain and codomain
    adjacency, maximal closeness adjacency), run without certificates so the
    search itself carries the claim.  ``center``/``center_eccentricity`` locate
    a central point whose eccentricity bounds the path power needed for the
    multivalued property, and ``power_verdict``/``power_single_verdict`` are
    the certified decisions at that power.
    """

    n: int
    v: int
    u: int
    cube_image: DigitalImage
    eccentricity_bound: int
    single_verdict: AfppVerdict | None = None
    center: Point | None = None
    center_eccentricity: int | None = None
    power_verdict: AfppVerdict | None = None
    power_single_verdict: AfppVerdict | None = None

    @property
    def ok(self) -> bool:
        checks: list[bool] = []
        if self.single_verdict is not None:
            checks.append(self.single_verdict.status is Status.HOLDS)
        if self.center is not None:
            checks.append(
                self.center_eccentricity is not None
                and self.center_eccentricity <= self.eccentricity_bound
            )
        if self.power_verdict is not None:
            checks.append(self.power_verdict.status is Status.HOLDS)
            checks.append(self.power_verdict.certificate is not None)
        if self.power_single_verdict is not None:
            checks.append(self.power_single_verdict.status is Status.HOLDS)
        return bool(checks) and all(checks)


def verify_box_theorems(
    n: int,
    v: int,
    u: int = 1,
    *,
    include_single: bool = True,
    include_power: bool = True,
    budget: int | Budget | None = None,
) -> BoxTheoremReport:
    """Run the cube checks at desk scale.

    The single-valued part refuses to start when the raw table space exceeds
    the size guard, because its value lies in the exhaustive search.
    """
    if n < 1 or v < 1 or not 1 <= u <= v:
        raise ValueError("need n >= 1, v >= 1 and 1 <= u <= v")
    img = cube(n, v)
    bound = -(-n // 2)  # ceil(n / 2)

    single_verdict = None
    if include_single:
        if len(img) ** len(img) > SIZE_GUARD:
            raise SizeGuardError(
                f"cube has {len(img)} points; {len(img)}^{len(img)} tables exceed the guard"
            )
        single_verdict = decide_afpp_s(
            img,
            CU(u),
            CU(1),
            CU(v),
            budget=budget,
            use_certificates=False,
        )

    center = None
    center_ecc = None
    power_verdict = None
    power_single_verdict = None
    if include_power:
        half_lo, half_hi = n // 2, -(-n // 2)
        candidates = sorted(
            p for p in img.points if all(c in (half_lo, half_hi) for c in p)
        )
        best = min(candidates, key=lambda p: (eccentricity(img, CU(v), p), p))
        center = best
        center_ecc = int(eccentricity(img, CU(v), best))
        power_adj: Adjacency = Power(CU(v), bound)
        power_verdict = decide_afpp_m(img, CU(v), CU(v), power_adj, r_max=1)
        power_single_verdict = decide_afpp_s(img, CU(v), CU(v), power_adj)

    return BoxTheoremReport(
        n=n,
        v=v,
        u=u,
        cube_image=img,
        eccentricity_bound=bound,
        single_verdict=single_verdict,
        center=center,
        center_eccentricity=center_ecc,
        power_verdict=power_verdict,
        power_single_verdict=power_single_verdict,
    )


# --- universality ----------------------------------------------------------------


@dataclass(frozen=True)
class UniversalityReport:
    status: TriState
    witness: PointMap | MultiCounterexample | None = None
    certificate: str | None = None
    detail: str | None = None


def _as_multimap_view(F: PointMap | MultiMap) -> MultiMap:
    if isinstance(F, PointMap):
        return singleton_multimap(F)
    return F


def _establish_continuity(
    F: PointMap | MultiMap,
    domain_adj: Adjacency,
    codomain_adj: Adjacency,
    r_max: int,
    budget: Budget,
) -> None:
    if isinstance(F, PointMap):
        report = is_continuous(F, domain_adj, codomain_adj)
        if not report.continuous:
            raise ValueError(f"map is not continuous (witness {report.witness})")
        return
    cert = F.known_inducer
    if cert is not None:
        if (
            induce_multimap(cert.subdivision, cert.map) == F
            and is_continuous(cert.map, domain_adj, codomain_adj).continuous
        ):
            return
    found = find_inducer(F, domain_adj, codomain_adj, r_max=r_max, budget=budget)
    if not found.found:
        raise ValueError(
            f"multimap is not verifiably continuous within subdivision level {r_max}"
        )


def universality_check(
    F: PointMap | MultiMap,
    domain_adj: Adjacency,
    codomain_adj: Adjacency | None = None,
    *,
    mode: str = "weak",
    opponents: str = "single",
    r_max: int = 3,
    budget: int | Budget | None = None,
) -> UniversalityReport:
    """Does the candidate meet every continuous opponent somewhere?

    Meeting means: at some domain point, a value of the candidate and a value
    of the opponent are strictly adjacent (``mode="strict"``) or equal or
    adjacent (``mode="weak"``).  Against single-valued opponents the answer
    is exact.  Against multivalued opponents only refutation is searched
    (bounded by ``r_max``); positive answers need a certificate:

    * some value set covers the whole codomain (weak mode), or
    * some value is equal-or-adjacent to every codomain point (weak mode).
    """
    if mode not in ("weak", "strict"):
        raise ValueError("mode must be 'weak' or 'strict'")
    if opponents not in ("single", "multi"):
        raise ValueError("opponents must be 'single' or 'multi'")
    codomain_adj = domain_adj if codomain_adj is None else codomain_adj
    counter = as_budget(budget, "universality check")

    _establish_continuity(F, domain_adj, codomain_adj, r_max, counter)
    mm = _as_multimap_view(F)
    X, Y = mm.domain, mm.codomain
    validate_adjacency(domain_adj, X.dim)
    validate_adjacency(codomain_adj, Y.dim)

    if mode == "weak":
        all_values = Y.points
        for x in X.sorted_points:
            if mm(x) == all_values:
                return UniversalityReport(TriState.YES, certificate="constant-full-value")
        for x in X.sorted_points:
            for y in sorted(mm(x)):
                if closed_neighbors(Y, codomain_adj, y) == all_values:
                    return UniversalityReport(
                        TriState.YES, certificate="dominating-value"
                    )

    # A counterexample opponent avoids, at every point, all codomain values
    # that would meet the candidate there.
    bad: dict[Point, frozenset[Point]] = {}
    for x in X.sorted_points:
        hit: set[Point] = set()
        for y in mm(x):
            if mode == "weak":
                hit |= closed_neighbors(Y, codomain_adj, y)
            else:
                hit |= closed_neighbors(Y, codomain_adj, y) - {y}
        bad[x] = frozenset(hit)

    try:
        if opponents == "single":
            allowed = {x: tuple(sorted(Y.points - bad[x])) for x in X.points}
            for g in search_continuous_maps(
                X, Y, domain_adj, codomain_adj, allowed=allowed, budget=counter
            ):
                return UniversalityReport(TriState.NO, witness=g)
            return UniversalityReport(
                TriState.YES, detail="every continuous single-valued opponent is met"
            )
        for r in range(1, r_max + 1):
            s = subdivide(X, r)
            allowed = {
                z: tuple(sorted(Y.points - bad[s.collapse(z)])) for z in s.points
            }
            for g in search_continuous_maps(
                s.image, Y, domain_adj, codomain_adj, allowed=allowed, budget=counter
            ):
                refuting = induce_multimap(s, g)
                return UniversalityReport(
                    TriState.NO, witness=MultiCounterexample(r, g, refuting)
                )
        return UniversalityReport(
            TriState.UNKNOWN,
            detail=f"no refuting multimap at any subdivision level up to {r_max}",
        )
    except BudgetExceededError as exc:
        return UniversalityReport(
            TriState.UNKNOWN, detail=f"budget exhausted after {exc.limit} extensions"
        )


# --- multimap classification -----------------------------------------------------


@dataclass(frozen=True)
class MultimapProperties:
    injective: bool
    identity: bool


def multimap_properties(F: MultiMap) -> MultimapProperties:
    """Injectivity is extensional equality of value sets; an identity is an
    injective self-multimap containing every point in its own value set."""
    if not F.is_self_map():
        raise ValueError("identity classification needs a self-multimap")
    seen: dict[frozenset[Point], Point] = {}
    injective = True
    for x in F.domain.sorted_points:
        ys = F(x)
        if ys in seen:
            injective = False
            break
        seen[ys] = x
    identity = injective and all(x in F(x) for x in F.domain.points)
    return MultimapProperties(injective=injective, identity=identity)


# --- preservation harness -----------------------------------------------------


@dataclass(frozen=True)
class PreservationCheck:
    name: str
    subject: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class PreservationReport:
    checks: tuple[PreservationCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> tuple[PreservationCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)


def _find_isomorphism(
    a: DigitalImage,
    a_adj: Adjacency,
    b: DigitalImage,
    b_adj: Adjacency,
    budget: Budget,
) -> PointMap | None:
    if a.dim != b.dim or len(a) != len(b):
        return None
    for f in search_continuous_maps(a, b, a_adj, b_adj, distinct=True, budget=budget):
        if is_isomorphism(f, a_adj, b_adj):
            return f
    return None


def _find_retraction(
    big: DigitalImage, small: DigitalImage, adj: Adjacency, budget: Budget
) -> PointMap | None:
    target = DigitalImage(big.dim, small.points)
    allowed = {y: (y,) for y in small.points}
    for r in search_continuous_maps(
        big, target, adj, adj, allowed=allowed, budget=budget
    ):
        return r
    return None


def _describe(img: DigitalImage, adj: Adjacency) -> str:
    lo_hi = bounds_of(img)
    span = "x".join(f"[{lo},{hi}]" for lo, hi in lo_hi)
    return f"{span} ({len(img)} pts, {adj})"


def preservation_checks(
    suite: Sequence[tuple[DigitalImage, Adjacency]],
    *,
    r_max: int = 2,
    budget: int | Budget | None = None,
) -> PreservationReport:
    """Assert the transfer principles on every applicable pair in the suite.

    * isomorphic instances share the single-valued verdict;
    * a verified retract cannot lose the single-valued property its host has;
    * the same for the multivalued property, skipping UNKNOWN verdicts;
    * a certified multivalued HOLDS forces the single-valued HOLDS;
    * the multivalued verdict agrees with weak universality of the identity
      against multivalued opponents whenever both are decided.
    """
    counter = as_budget(budget, "preservation checks")
    entries = list(suite)
    single = [decide_afpp_s(img, adj, budget=counter) for img, adj in entries]
    multi = [decide_afpp_m(img, adj, r_max=r_max, budget=counter) for img, adj in entries]
    checks: list[PreservationCheck] = []

    for i, (img_a, adj_a) in enumerate(entries):
        for j in range(i + 1, len(entries)):
            img_b, adj_b = entries[j]
            try:
                iso = _find_isomorphism(img_a, adj_a, img_b, adj_b, counter)
            except BudgetExceededError:
                continue
            if iso is None:
                continue
            ok = single[i].status is single[j].status
            checks.append(
                PreservationCheck(
                    "isomorphism-preserves-single-afpp",
                    f"{_describe(img_a, adj_a)} ~ {_describe(img_b, adj_b)}",
                    ok,
                    f"{single[i].status.value} vs {single[j].status.value}",
                )
            )

    for i, (img_a, adj_a) in enumerate(entries):
        for j, (img_b, adj_b) in enumerate(entries):
            if i == j or adj_a != adj_b or img_a.dim != img_b.dim:
                continue
            if not (img_b.points < img_a.points):
                continue
            try:
                retraction = _find_retraction(img_a, img_b, adj_a, counter)
            except BudgetExceededError:
                continue
            if retraction is None:
                continue
            ok = not (
                single[i].status is Status.HOLDS and single[j].status is Status.FAILS
            )
            checks.append(
                PreservationCheck(
                    "retract-preserves-single-afpp",
                    f"{_describe(img_b, adj_b)} retract of {_describe(img_a, adj_a)}",
                    ok,
                    f"host {single[i].status.value}, retract {single[j].status.value}",
                )
            )
            if multi[i].status is not Status.UNKNOWN and multi[j].status is not Status.UNKNOWN:
                ok = not (
                    multi[i].status is Status.HOLDS and multi[j].status is Status.FAILS
                )
                checks.append(
                    PreservationCheck(
                        "retract-preserves-multi-afpp",
                        f"{_describe(img_b, adj_b)} retract of {_describe(img_a, adj_a)}",
                        ok,
                        f"host {multi[i].status.value}, retract {multi[j].status.value}",
                    )
                )

    for i, (img, adj) in enumerate(entries):
        if multi[i].status is Status.HOLDS:
            checks.append(
                PreservationCheck(
                    "multi-afpp-implies-single-afpp",
                    _describe(img, adj),
                    single[i].status is Status.HOLDS,
                    f"multi {multi[i].status.value}, single {single[i].status.value}",
                )
            )

    for i, (img, adj) in enumerate(entries):
        uni = universality_check(
            identity_map(img),
            adj,
            mode="weak",
            opponents="multi",
            r_max=r_max,
            budget=counter,
        )
        if uni.status is TriState.UNKNOWN or multi[i].status is Status.UNKNOWN:
            continue
        agree = (uni.status is TriState.YES) == (multi[i].status is Status.HOLDS)
        checks.append(
            PreservationCheck(
                "identity-weak-universality-matches-multi-afpp",
                _describe(img, adj),
                agree,
                f"universality {uni.status.value}, multi {multi[i].status.value}",
            )
        )

    return PreservationReport(tuple(checks))

"""Command-line front end.

Exit codes: 0 for a positive verdict (holds / continuous / found / yes),
1 for a negative one, 2 for unknown, and 3 and up for usage or I/O errors.
Every decision command prints one ``verdict:`` line, optionally followed by
``certificate:`` or ``witness:`` lines; witness maps follow in map-file form
so they can be piped back in.  The ``DIGITOP_BUDGET`` environment variable
overrides the default search budget when ``--budget`` is absent.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import afpp, formats, maps, subdivision, verify
from .afpp import MultiCounterexample, Status
from .errors import BudgetExceededError, FormatError
from .grid import Adjacency, DigitalImage, eccentricity, parse_adjacency
from .maps import PointMap
from .subdivision import TriState

EXIT_POSITIVE = 0
EXIT_NEGATIVE = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc


def _load_image(path: str) -> DigitalImage:
    return formats.parse_image(_read_text(path))


def _adjacency(text: str) -> Adjacency:
    try:
        return parse_adjacency(text)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc


def _resolve_budget(value: int | None) -> int | None:
    if value is not None:
        return value
    env = os.environ.get("DIGITOP_BUDGET")
    if env is None:
        return None
    try:
        return int(env)
    except ValueError:
        raise _UsageError(f"DIGITOP_BUDGET must be an integer, got {env!r}") from None


def _add_common(parser: argparse.ArgumentParser, *, rmax: bool = False) -> None:
    parser.add_argument("--budget", type=int, default=None, help="search node budget")
    if rmax:
        parser.add_argument(
            "--rmax", type=int, default=3, help="largest subdivision level to sweep"
        )
    parser.add_argument(
        "--deterministic",
        action="store_true",
        default=True,
        help="canonical witnesses (default; kept for interface stability)",
    )
    parser.add_argument(
        "--fast",
        action="store_true",
        help="permit first-found witnesses (annotated; output is canonical anyway)",
    )


def _note_fast(args: argparse.Namespace) -> None:
    if getattr(args, "fast", False):
        print("note: first-found witness ordering requested; output is canonical")


def _build_parser() -> _Parser:
    parser = _Parser(prog="digitop", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-continuity", help="decide continuity of a single-valued map")
    p.add_argument("--map", required=True, dest="map_path")
    p.add_argument("--image", dest="image_path", help="domain image (default: map arguments)")
    p.add_argument("--codomain", dest="codomain_path", help="codomain image (default: map values)")
    p.add_argument("--adjacency", required=True)
    p.add_argument("--codomain-adjacency", dest="codomain_adjacency")
    _add_common(p)

    p = sub.add_parser("subdivide", help="print the refined image at a subdivision level")
    p.add_argument("--image", required=True, dest="image_path")
    p.add_argument("-r", "--level", type=int, required=True, dest="level")

    p = sub.add_parser("induce", help="induce a multimap from a map on a subdivision")
    p.add_argument("--image", required=True, dest="image_path", help="base image")
    p.add_argument("-r", "--level", type=int, required=True, dest="level")
    p.add_argument("--map", required=True, dest="map_path", help="map on the numerators")
    p.add_argument("--codomain", dest="codomain_path")

    p = sub.add_parser("find-inducer", help="search for a continuous inducer of a multimap")
    p.add_argument("--map", required=True, dest="map_path")
    p.add_argument("--image", dest="image_path")
    p.add_argument("--codomain", dest="codomain_path")
    p.add_argument("--adjacency", required=True)
    p.add_argument("--codomain-adjacency", dest="codomain_adjacency")
    _add_common(p, rmax=True)

    p = sub.add_parser("decide-afpps", help="decide the single-valued fixed point property")
    p.add_argument("--image", required=True, dest="image_path")
    p.add_argument("--adjacency", required=True)
    p.add_argument("--codomain-adjacency", dest="codomain_adjacency")
    p.add_argument("--approx-adjacency", dest="approx_adjacency")
    p.add_argument("--no-certificates", action="store_true")
    _add_common(p)

    p = sub.add_parser("decide-afppm", help="decide the multivalued fixed point property")
    p.add_argument("--image", required=True, dest="image_path")
    p.add_argument("--adjacency", required=True)
    p.add_argument("--codomain-adjacency", dest="codomain_adjacency")
    p.add_argument("--approx-adjacency", dest="approx_adjacency")
    p.add_argument("--no-certificates", action="store_true")
    _add_common(p, rmax=True)

    p = sub.add_parser("universality", help="check a map against all continuous opponents")
    p.add_argument("--map", dest="map_path")
    p.add_argument("--identity", action="store_true", help="use the identity of --image")
    p.add_argument("--image", dest="image_path")
    p.add_argument("--codomain", dest="codomain_path")
    p.add_argument("--adjacency", required=True)
    p.add_argument("--codomain-adjacency", dest="codomain_adjacency")
    p.add_argument("--mode", choices=("weak", "strict"), default="weak")
    p.add_argument("--opponents", choices=("single", "multi"), default="single")
    _add_common(p, rmax=True)

    p = sub.add_parser("enumerate-maps", help="stream all continuous maps")
    p.add_argument("--image", required=True, dest="image_path")
    p.add_argument("--codomain", dest="codomain_path")
    p.add_argument("--adjacency", required=True)
    p.add_argument("--codomain-adjacency", dest="codomain_adjacency")
    p.add_argument("--limit", type=int, default=None, help="print at most this many maps")
    p.add_argument("--count-only", action="store_true")
    _add_common(p)

    p = sub.add_parser("eccentricity", help="shortest-path eccentricities")
    p.add_argument("--image", required=True, dest="image_path")
    p.add_argument("--adjacency", required=True)
    p.add_argument("--point", help="single point, e.g. '0,0' (default: all points)")

    p = sub.add_parser("export-dot", help="write the adjacency graph as DOT")
    p.add_argument("--image", required=True, dest="image_path")
    p.add_argument("--adjacency", required=True)
    p.add_argument("--map", dest="map_path", help="overlay a map's arrows")

    p = sub.add_parser("verify-paper", help="run the bundled claim checks")
    p.add_argument("--filter", dest="filter_text", help="run only matching claim keys")

    return parser


def _print_witness_map(f: PointMap) -> None:
    print("witness: map")
    sys.stdout.write(formats.write_point_map(f))


def _print_multi_witness(ce: MultiCounterexample) -> None:
    print(f"witness: multimap at level {ce.r}")
    sys.stdout.write(formats.write_multimap(ce.multimap))
    print("inducer:")
    sys.stdout.write(formats.write_point_map(ce.inducer))


def _cmd_check_continuity(args: argparse.Namespace) -> int:
    data = formats.parse_map(_read_text(args.map_path))
    domain = _load_image(args.image_path) if args.image_path else None
    codomain = _load_image(args.codomain_path) if args.codomain_path else None
    f = formats.point_map_from_data(data, domain, codomain)
    dom_adj = _adjacency(args.adjacency)
    cod_adj = _adjacency(args.codomain_adjacency) if args.codomain_adjacency else dom_adj
    _note_fast(args)
    report = maps.is_continuous(f, dom_adj, cod_adj)
    if report.continuous:
        print("verdict: continuous")
        return EXIT_POSITIVE
    print("verdict: discontinuous")
    a, b = report.witness
    print(f"witness: {formats.format_point(a)} {formats.format_point(b)}")
    return EXIT_NEGATIVE


def _cmd_subdivide(args: argparse.Namespace) -> int:
    img = _load_image(args.image_path)
    s = subdivision.subdivide(img, args.level)
    print(f"# numerators with denominator {s.r}")
    sys.stdout.write(formats.write_image(s.image))
    return EXIT_POSITIVE


def _cmd_induce(args: argparse.Namespace) -> int:
    img = _load_image(args.image_path)
    s = subdivision.subdivide(img, args.level)
    data = formats.parse_map(_read_text(args.map_path))
    codomain = _load_image(args.codomain_path) if args.codomain_path else None
    inducer = formats.point_map_from_data(data, s.image, codomain)
    induced = subdivision.induce_multimap(s, inducer)
    sys.stdout.write(formats.write_multimap(induced))
    return EXIT_POSITIVE


def _cmd_find_inducer(args: argparse.Namespace) -> int:
    data = formats.parse_map(_read_text(args.map_path))
    domain = _load_image(args.image_path) if args.image_path else None
    codomain = _load_image(args.codomain_path) if args.codomain_path else None
    target = formats.multimap_from_data(data, domain, codomain)
    dom_adj = _adjacency(args.adjacency)
    cod_adj = _adjacency(args.codomain_adjacency) if args.codomain_adjacency else dom_adj
    _note_fast(args)
    try:
        report = subdivision.find_inducer(
            target, dom_adj, cod_adj, r_max=args.rmax, budget=_resolve_budget(args.budget)
        )
    except BudgetExceededError as exc:
        print("verdict: unknown")
        print(f"note: {exc}")
        return EXIT_UNKNOWN
    if report.found:
        print("verdict: found")
        print(f"level: {report.r}")
        print("inducer:")
        sys.stdout.write(formats.write_point_map(report.inducer))
        return EXIT_POSITIVE
    print("verdict: not-found")
    print(f"note: no continuous inducer at any level up to {report.r_max}")
    return EXIT_UNKNOWN


def _decision_exit(status: Status) -> int:
    if status is Status.HOLDS:
        return EXIT_POSITIVE
    if status is Status.FAILS:
        return EXIT_NEGATIVE
    return EXIT_UNKNOWN


def _print_afpp_verdict(verdict: afpp.AfppVerdict) -> None:
    print(f"verdict: {verdict.status.value}")
    if verdict.certificate is not None:
        print(f"certificate: {verdict.certificate}")
    if verdict.detail is not None:
        print(f"note: {verdict.detail}")
    if isinstance(verdict.counterexample, PointMap):
        _print_witness_map(verdict.counterexample)
    elif isinstance(verdict.counterexample, MultiCounterexample):
        _print_multi_witness(verdict.counterexample)


def _cmd_decide_afpps(args: argparse.Namespace) -> int:
    img = _load_image(args.image_path)
    dom_adj = _adjacency(args.adjacency)
    cod_adj = _adjacency(args.codomain_adjacency) if args.codomain_adjacency else dom_adj
    approx_adj = _adjacency(args.approx_adjacency) if args.approx_adjacency else dom_adj
    _note_fast(args)
    verdict = afpp.decide_afpp_s(
        img,
        dom_adj,
        cod_adj,
        approx_adj,
        budget=_resolve_budget(args.budget),
        use_certificates=not args.no_certificates,
    )
    _print_afpp_verdict(verdict)
    return _decision_exit(verdict.status)


def _cmd_decide_afppm(args: argparse.Namespace) -> int:
    img = _load_image(args.image_path)
    dom_adj = _adjacency(args.adjacency)
    cod_adj = _adjacency(args.codomain_adjacency) if args.codomain_adjacency else dom_adj
    approx_adj = _adjacency(args.approx_adjacency) if args.approx_adjacency else dom_adj
    _note_fast(args)
    verdict = afpp.decide_afpp_m(
        img,
        dom_adj,
        cod_adj,
        approx_adj,
        r_max=args.rmax,
        budget=_resolve_budget(args.budget),
        use_certificates=not args.no_certificates,
    )
    _print_afpp_verdict(verdict)
    return _decision_exit(verdict.status)


def _cmd_universality(args: argparse.Namespace) -> int:
    dom_adj = _adjacency(args.adjacency)
    cod_adj = _adjacency(args.codomain_adjacency) if args.codomain_adjacency else dom_adj
    if args.identity:
        if not args.image_path:
            raise _UsageError("--identity needs --image")
        img = _load_image(args.image_path)
        candidate: PointMap | subdivision.MultiMap = maps.identity_map(img)
    elif args.map_path:
        data = formats.parse_map(_read_text(args.map_path))
        domain = _load_image(args.image_path) if args.image_path else None
        codomain = _load_image(args.codomain_path) if args.codomain_path else None
        if data.is_single_valued():
            candidate = formats.point_map_from_data(data, domain, codomain)
        else:
            candidate = formats.multimap_from_data(data, domain, codomain)
    else:
        raise _UsageError("universality needs --map or --identity")
    _note_fast(args)
    try:
        report = afpp.universality_check(
            candidate,
            dom_adj,
            cod_adj,
            mode=args.mode,
            opponents=args.opponents,
            r_max=args.rmax,
            budget=_resolve_budget(args.budget),
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    print(f"verdict: {report.status.value}")
    if report.certificate is not None:
        print(f"certificate: {report.certificate}")
    if report.detail is not None:
        print(f"note: {report.detail}")
    if isinstance(report.witness, PointMap):
        _print_witness_map(report.witness)
    elif isinstance(report.witness, MultiCounterexample):
        _print_multi_witness(report.witness)
    if report.status is TriState.YES:
        return EXIT_POSITIVE
    if report.status is TriState.NO:
        return EXIT_NEGATIVE
    return EXIT_UNKNOWN


def _cmd_enumerate_maps(args: argparse.Namespace) -> int:
    img = _load_image(args.image_path)
    codomain = _load_image(args.codomain_path) if args.codomain_path else img
    dom_adj = _adjacency(args.adjacency)
    cod_adj = _adjacency(args.codomain_adjacency) if args.codomain_adjacency else dom_adj
    _note_fast(args)
    count = 0
    try:
        for f in maps.enumerate_continuous_maps(
            img, codomain, dom_adj, cod_adj, _resolve_budget(args.budget)
        ):
            count += 1
            if not args.count_only and (args.limit is None or count <= args.limit):
                sys.stdout.write(formats.write_point_map(f))
                print()
    except BudgetExceededError as exc:
        print("verdict: unknown")
        print(f"note: {exc} ({count} maps emitted before exhaustion)")
        return EXIT_UNKNOWN
    print(f"count: {count}")
    return EXIT_POSITIVE


def _cmd_eccentricity(args: argparse.Namespace) -> int:
    img = _load_image(args.image_path)
    adj = _adjacency(args.adjacency)
    if args.point:
        try:
            p = formats.parse_point(args.point)
        except ValueError as exc:
            raise _UsageError(str(exc)) from exc
        if p not in img.points:
            raise _UsageError(f"point {formats.format_point(p)} is not in the image")
        value = eccentricity(img, adj, p)
        text = "infinite" if value == float("inf") else str(int(value))
        print(f"eccentricity: {text}")
        return EXIT_POSITIVE
    for p in img.sorted_points:
        value = eccentricity(img, adj, p)
        text = "infinite" if value == float("inf") else str(int(value))
        print(f"{formats.format_point(p)}: {text}")
    return EXIT_POSITIVE


def _cmd_export_dot(args: argparse.Namespace) -> int:
    img = _load_image(args.image_path)
    adj = _adjacency(args.adjacency)
    overlay = None
    if args.map_path:
        data = formats.parse_map(_read_text(args.map_path))
        if data.is_single_valued():
            overlay = formats.point_map_from_data(data, img, None)
        else:
            overlay = formats.multimap_from_data(data, img, None)
    sys.stdout.write(formats.export_dot(img, adj, overlay))
    return EXIT_POSITIVE


def _cmd_verify_paper(args: argparse.Namespace) -> int:
    ok = verify.run_verification(args.filter_text)
    return EXIT_POSITIVE if ok else EXIT_NEGATIVE


_COMMANDS = {
    "check-continuity": _cmd_check_continuity,
    "subdivide": _cmd_subdivide,
    "induce": _cmd_induce,
    "find-inducer": _cmd_find_inducer,
    "decide-afpps": _cmd_decide_afpps,
    "decide-afppm": _cmd_decide_afppm,
    "universality": _cmd_universality,
    "enumerate-maps": _cmd_enumerate_maps,
    "eccentricity": _cmd_eccentricity,
    "export-dot": _cmd_export_dot,
    "verify-paper": _cmd_verify_paper,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # argparse --help
        code = exc.code
        return 0 if code in (0, None) else EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())

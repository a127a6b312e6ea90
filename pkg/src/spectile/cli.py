"""Command-line surface.

Exit codes: 0 = success / consistent, 1 = a conjecture violation (or a
failed lemma suite), 2 = usage or input error.  All reports are
deterministic for identical inputs and flags.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional

from . import fileio
from ._version import __version__
from .charsums import (
    NotVanishingError,
    lam_leung,
    project,
    zero_set,
)
from .group import (
    EqualPrimesError,
    GroupSpec,
    Multiset,
    NotPrimeError,
    SubsetMask,
    SymmetryGroupTooLargeError,
)
from .spectral import SpectralCertificate, find_spectrum
from .tiling import NotASubgroupError, NotATilingError, TilingCertificate, find_complement
from .verify import (
    ExhaustiveMode,
    GroupTooLargeForExhaustiveError,
    SampledMode,
    lemma_suite,
    verify_conjecture,
)

CERT_DIR_ENV = "SPECTILE_CERT_DIR"

_INPUT_ERRORS = (
    fileio.ParseError,
    fileio.RangeError,
    fileio.DuplicateElementError,
    NotPrimeError,
    EqualPrimesError,
    NotVanishingError,
    NotASubgroupError,
    NotATilingError,
    SymmetryGroupTooLargeError,
    GroupTooLargeForExhaustiveError,
    ValueError,
    OSError,
)


def _read(path: str) -> bytes:
    return Path(path).read_bytes()


def _load_subset(path: str) -> SubsetMask:
    spec, obj = fileio.parse_set_file(_read(path))
    if isinstance(obj, Multiset):
        raise fileio.ParseError("this command requires a plain set, not a multiset")
    return obj


def _load_multiset(path: str) -> Multiset:
    spec, obj = fileio.parse_set_file(_read(path))
    if isinstance(obj, SubsetMask):
        return Multiset.from_subset(obj)
    return obj


def _cert_path(args: argparse.Namespace, command: str) -> Optional[str]:
    if getattr(args, "certs", None):
        return args.certs
    env_dir = os.environ.get(CERT_DIR_ENV)
    if env_dir:
        return str(Path(env_dir) / f"{command}.certs.jsonl")
    return None


def _emit(args: argparse.Namespace, command: str, records: list) -> None:
    path = _cert_path(args, command)
    if path and records:
        fileio.append_certificates(path, records)


def _fmt_elements(s: SubsetMask) -> str:
    return "[" + ", ".join(f"[[{g.u1},{g.u2}],{g.v}]" for g in s.elements()) + "]"


# -- commands -------------------------------------------------------------------


def _cmd_check(args: argparse.Namespace) -> int:
    s = _load_subset(args.file)
    print(f"group: p={s.spec.p} q={s.spec.q} (n={s.spec.n})")
    print(f"subject: {_fmt_elements(s)} ({s.card} elements)")
    records = []
    if s.card == 0:
        print("spectral: no")
        print("tile: no")
        print("consistent: yes")
        return 0
    sres = find_spectrum(s)
    tres = find_complement(s)
    spectral = isinstance(sres, SpectralCertificate)
    tile = isinstance(tres, TilingCertificate)
    if spectral:
        print("spectral: yes")
        print(f"spectrum: {_fmt_elements(sres.Lambda)}")
    else:
        print(f"spectral: no (exhausted {sres.nodes_explored} nodes)")
    if tile:
        print("tile: yes")
        print(f"complement: {_fmt_elements(tres.T)}")
    else:
        print(f"tile: no (exhausted {tres.nodes_explored} nodes)")
    records.append(fileio.spectrum_record(sres))
    records.append(fileio.complement_record(tres))
    consistent = spectral == tile
    print(f"consistent: {'yes' if consistent else 'no'}")
    if not consistent:
        records.append(
            fileio.violation_record(s, sres.nodes_explored, tres.nodes_explored)
        )
    _emit(args, "check", records)
    return 0 if consistent else 1


def _cmd_spectrum(args: argparse.Namespace) -> int:
    s = _load_subset(args.file)
    if s.card == 0:
        raise ValueError("spectrum search requires a nonempty set")
    res = find_spectrum(s)
    if isinstance(res, SpectralCertificate):
        print("spectral: yes")
        print(f"spectrum: {_fmt_elements(res.Lambda)}")
    else:
        print(f"spectral: no (exhausted {res.nodes_explored} nodes)")
    _emit(args, "spectrum", [fileio.spectrum_record(res)])
    return 0


def _cmd_complement(args: argparse.Namespace) -> int:
    s = _load_subset(args.file)
    if s.card == 0:
        raise ValueError("complement search requires a nonempty set")
    res = find_complement(s)
    if isinstance(res, TilingCertificate):
        print("tile: yes")
        print(f"complement: {_fmt_elements(res.T)}")
    else:
        print(f"tile: no (exhausted {res.nodes_explored} nodes)")
    _emit(args, "complement", [fileio.complement_record(res)])
    return 0


def _cmd_zeroset(args: argparse.Namespace) -> int:
    s = _load_subset(args.file)
    z = zero_set(s)
    print(f"zero set: {z.card} characters")
    for g in z.elements():
        print(f"  [[{g.u1},{g.u2}],{g.v}]")
    return 0


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'u1,u2', got {text!r}")
    return int(parts[0]), int(parts[1])


def _cmd_project(args: argparse.Namespace) -> int:
    m = _load_multiset(args.file)
    a = _parse_pair(args.a)
    c = project(m, a, args.b)
    print(fileio.write_matrix_file(c))
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    c = fileio.parse_matrix_file(_read(args.file))
    try:
        d = lam_leung(c)
    except NotVanishingError:
        print("vanishing: no")
        return 0
    print("vanishing: yes")
    print(f"x: {list(d.x)}")
    print(f"y: {list(d.y)}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    spec = GroupSpec(args.p, args.q)
    if args.exhaustive:
        mode = ExhaustiveMode(size=args.size, use_orbits=args.orbits)
    elif args.samples is not None:
        mode = SampledMode(seed=args.seed, trials=args.samples, size=args.size)
    else:
        raise ValueError("choose either --exhaustive or --samples N")
    report = verify_conjecture(spec, mode, workers=args.workers)
    print(report.render())
    records = [
        fileio.violation_record(v.subject, v.spectrum_nodes, v.complement_nodes)
        for v in report.violations
    ]
    _emit(args, "verify", records)
    return 1 if report.violation_count else 0


def _cmd_lemmas(args: argparse.Namespace) -> int:
    spec = GroupSpec(args.p, args.q)
    report = lemma_suite(spec, args.seed, args.trials)
    print(report.render())
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectile",
        description="Exact spectral-set and tiling decisions on Z_p^2 x Z_q.",
    )
    parser.add_argument("--version", action="version", version=f"spectile {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_certs(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--certs",
            metavar="PATH",
            help="append machine-readable certificates to this JSON-lines file "
            f"(default: ${CERT_DIR_ENV}/<command>.certs.jsonl when the "
            "environment variable is set)",
        )

    p = sub.add_parser("check", help="decide spectral? tile? for a set file")
    p.add_argument("file")
    add_certs(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("spectrum", help="search for a spectrum")
    p.add_argument("file")
    add_certs(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("complement", help="search for a tiling complement")
    p.add_argument("file")
    add_certs(p)
    p.set_defaults(func=_cmd_complement)

    p = sub.add_parser("zeroset", help="list nonzero characters vanishing on the set")
    p.add_argument("file")
    p.set_defaults(func=_cmd_zeroset)

    p = sub.add_parser("project", help="project a (multi)set to a p x q grid")
    p.add_argument("file")
    p.add_argument("--a", required=True, metavar="U1,U2", help="plane direction, nonzero")
    p.add_argument("--b", required=True, type=int, help="nonzero residue mod q")
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser("decompose", help="decompose a vanishing p x q matrix")
    p.add_argument("file", metavar="matrix-file")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("verify", help="scan subsets and check spectral <=> tile")
    p.add_argument("--p", required=True, type=int)
    p.add_argument("--q", required=True, type=int)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--samples", type=int, metavar="N")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--size", type=int, default=None, metavar="K")
    p.add_argument("--orbits", action="store_true", help="scan orbit representatives")
    p.add_argument("--workers", type=int, default=1)
    add_certs(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("lemmas", help="run the randomized lemma property suite")
    p.add_argument("--p", required=True, type=int)
    p.add_argument("--q", required=True, type=int)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--trials", required=True, type=int)
    p.set_defaults(func=_cmd_lemmas)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

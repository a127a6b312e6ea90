"""Set files, matrix files, and certificate records.

Set files are JSON objects; certificates are JSON lines with a schema
version on every line.  Output is normalized -- elements ascending by
index, fixed key order -- so files diff cleanly and byte-identical runs
produce byte-identical artifacts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Union

from ._version import __version__
from .charsums import CoefficientMatrix
from .group import Element, GroupSpec, Multiset, SubsetMask
from .spectral import NoSpectrum, SpectralCertificate, verify_spectral_pair
from .tiling import NoComplement, TilingCertificate, verify_tiling

CERT_SCHEMA = 1

SetLike = Union[SubsetMask, Multiset]


class ParseError(ValueError):
    """Malformed JSON or a structurally invalid document."""


class RangeError(ValueError):
    """A coordinate lies outside its residue range."""


class DuplicateElementError(ValueError):
    """An element repeats in a plain set file."""


# -- set files -----------------------------------------------------------------


def _element_from_json(spec: GroupSpec, raw: object, pos: int) -> Element:
    if (
        not isinstance(raw, list)
        or len(raw) != 2
        or not isinstance(raw[0], list)
        or len(raw[0]) != 2
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in (*raw[0], raw[1]))
    ):
        raise ParseError(f"elements[{pos}]: expected [[u1,u2],v] with integer entries")
    u1, u2 = raw[0]
    v = raw[1]
    for name, value, bound in (("u1", u1, spec.p), ("u2", u2, spec.p), ("v", v, spec.q)):
        if not 0 <= value < bound:
            raise RangeError(
                f"elements[{pos}]: {name} = {value} out of range [0, {bound})"
            )
    return Element(u1, u2, v)


def _looks_like_element(raw: object) -> bool:
    return (
        isinstance(raw, list)
        and len(raw) == 2
        and isinstance(raw[0], list)
        and len(raw[0]) == 2
        and not isinstance(raw[0][0], list)
    )


def parse_set_file(data: Union[bytes, str]) -> tuple[GroupSpec, SetLike]:
    """Parse a set/multiset file into validated in-memory objects."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not valid UTF-8: {exc}") from exc
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    for key in ("p", "q"):
        if key not in doc:
            raise ParseError(f"missing required key {key!r}")
        if not isinstance(doc[key], int) or isinstance(doc[key], bool):
            raise ParseError(f"key {key!r} must be an integer")
    multiset = doc.get("multiset", False)
    if not isinstance(multiset, bool):
        raise ParseError('key "multiset" must be a boolean')
    if "elements" not in doc or not isinstance(doc["elements"], list):
        raise ParseError('key "elements" must be a list')
    spec = GroupSpec(doc["p"], doc["q"])

    counts = [0] * spec.n
    for pos, entry in enumerate(doc["elements"]):
        if _looks_like_element(entry):
            g = _element_from_json(spec, entry, pos)
            mult = 1
        elif isinstance(entry, list) and len(entry) == 2 and _looks_like_element(entry[0]):
            g = _element_from_json(spec, entry[0], pos)
            if not isinstance(entry[1], int) or isinstance(entry[1], bool) or entry[1] < 0:
                raise ParseError(f"elements[{pos}]: count must be a nonnegative integer")
            mult = entry[1]
        else:
            raise ParseError(
                f"elements[{pos}]: expected [[u1,u2],v] or [[[u1,u2],v], count]"
            )
        i = spec.index(g)
        if not multiset:
            if mult != 1:
                raise ParseError(
                    f"elements[{pos}]: counts other than 1 require \"multiset\": true"
                )
            if counts[i]:
                raise DuplicateElementError(
                    f"elements[{pos}]: duplicate element [[{g.u1},{g.u2}],{g.v}]"
                )
        counts[i] += mult

    if multiset:
        return spec, Multiset(spec, tuple(counts))
    bits = 0
    for i, c in enumerate(counts):
        if c:
            bits |= 1 << i
    return spec, SubsetMask(spec, bits)


def _element_json(g: Element) -> list:
    return [[g.u1, g.u2], g.v]


def write_set_file(obj: SetLike) -> str:
    """Canonical JSON for a set or multiset: elements ascending by index."""
    spec = obj.spec
    doc: dict = {"p": spec.p, "q": spec.q}
    if isinstance(obj, Multiset):
        doc["multiset"] = True
        doc["elements"] = [
            [_element_json(spec.element(i)), c]
            for i, c in enumerate(obj.counts)
            if c
        ]
    else:
        doc["elements"] = [_element_json(g) for g in obj.elements()]
    return json.dumps(doc, separators=(", ", ": "))


# -- matrix files ----------------------------------------------------------------


def parse_matrix_file(data: Union[bytes, str]) -> CoefficientMatrix:
    """Parse a standalone {"p", "q", "matrix"} document.

    Dimensions are not required to be prime: the decomposition machinery is
    useful as a vanishing-sum oracle on any p x q integer grid.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    for key in ("p", "q"):
        if not isinstance(doc.get(key), int) or isinstance(doc.get(key), bool):
            raise ParseError(f"key {key!r} must be an integer")
    p, q = doc["p"], doc["q"]
    if p < 1 or q < 1:
        raise ParseError("matrix dimensions must be positive")
    rows = doc.get("matrix")
    if (
        not isinstance(rows, list)
        or len(rows) != p
        or any(
            not isinstance(r, list)
            or len(r) != q
            or any(not isinstance(x, int) or isinstance(x, bool) for x in r)
            for r in rows
        )
    ):
        raise ParseError(f'key "matrix" must be a {p} x {q} array of integers')
    return CoefficientMatrix(p, q, tuple(tuple(r) for r in rows))


def write_matrix_file(c: CoefficientMatrix) -> str:
    return json.dumps(
        {"p": c.p, "q": c.q, "matrix": [list(r) for r in c.rows]},
        separators=(", ", ": "),
    )


# -- certificate records -----------------------------------------------------------

CERT_KINDS = ("spectrum", "complement", "no_spectrum", "no_complement", "violation")


@dataclass(frozen=True)
class CertificateRecord:
    """One verifiable line of a certificate log."""

    kind: str
    group: GroupSpec
    subject: tuple[Element, ...]
    witness: Optional[tuple[Element, ...]]
    exhaustion: tuple[tuple[str, int], ...] = ()
    version: str = __version__

    def __post_init__(self) -> None:
        if self.kind not in CERT_KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")
        has_witness = self.witness is not None
        if has_witness != (self.kind in ("spectrum", "complement")):
            raise ValueError(
                "witness must be present exactly for spectrum/complement records"
            )

    def subject_mask(self) -> SubsetMask:
        return SubsetMask.from_elements(self.group, self.subject)

    def witness_mask(self) -> Optional[SubsetMask]:
        if self.witness is None:
            return None
        return SubsetMask.from_elements(self.group, self.witness)

    def to_json_line(self) -> str:
        doc = {
            "schema": CERT_SCHEMA,
            "kind": self.kind,
            "group": {"p": self.group.p, "q": self.group.q},
            "subject": [_element_json(g) for g in self.subject],
            "witness": None
            if self.witness is None
            else [_element_json(g) for g in self.witness],
            "exhaustion": dict(self.exhaustion),
            "version": self.version,
        }
        return json.dumps(doc, separators=(", ", ": "))

    @classmethod
    def from_json_line(cls, line: str) -> "CertificateRecord":
        try:
            doc = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"column {exc.colno}: {exc.msg}") from exc
        if not isinstance(doc, dict) or doc.get("schema") != CERT_SCHEMA:
            raise ParseError(f"expected a schema {CERT_SCHEMA} certificate object")
        group = doc.get("group")
        if not isinstance(group, dict):
            raise ParseError('key "group" must be an object')
        spec = GroupSpec(group.get("p"), group.get("q"))
        subject = tuple(
            _element_from_json(spec, raw, i) for i, raw in enumerate(doc.get("subject", []))
        )
        raw_witness = doc.get("witness")
        witness = (
            None
            if raw_witness is None
            else tuple(
                _element_from_json(spec, raw, i) for i, raw in enumerate(raw_witness)
            )
        )
        exhaustion = doc.get("exhaustion", {})
        if not isinstance(exhaustion, dict) or any(
            not isinstance(v, int) for v in exhaustion.values()
        ):
            raise ParseError('key "exhaustion" must map names to integers')
        return cls(
            kind=doc.get("kind"),
            group=spec,
            subject=subject,
            witness=witness,
            exhaustion=tuple(sorted(exhaustion.items())),
            version=str(doc.get("version", "")),
        )


def spectrum_record(result: Union[SpectralCertificate, NoSpectrum]) -> CertificateRecord:
    if isinstance(result, SpectralCertificate):
        return CertificateRecord(
            kind="spectrum",
            group=result.S.spec,
            subject=tuple(result.S.elements()),
            witness=tuple(result.Lambda.elements()),
            exhaustion=(("spectrum_nodes", result.nodes_explored),),
        )
    return CertificateRecord(
        kind="no_spectrum",
        group=result.S.spec,
        subject=tuple(result.S.elements()),
        witness=None,
        exhaustion=(("spectrum_nodes", result.nodes_explored),),
    )


def complement_record(result: Union[TilingCertificate, NoComplement]) -> CertificateRecord:
    if isinstance(result, TilingCertificate):
        return CertificateRecord(
            kind="complement",
            group=result.S.spec,
            subject=tuple(result.S.elements()),
            witness=tuple(result.T.elements()),
            exhaustion=(("complement_nodes", result.nodes_explored),),
        )
    return CertificateRecord(
        kind="no_complement",
        group=result.S.spec,
        subject=tuple(result.S.elements()),
        witness=None,
        exhaustion=(("complement_nodes", result.nodes_explored),),
    )


def violation_record(
    subject: SubsetMask, spectrum_nodes: int, complement_nodes: int
) -> CertificateRecord:
    return CertificateRecord(
        kind="violation",
        group=subject.spec,
        subject=tuple(subject.elements()),
        witness=None,
        exhaustion=(
            ("complement_nodes", complement_nodes),
            ("spectrum_nodes", spectrum_nodes),
        ),
    )


def recheck_certificate(rec: CertificateRecord) -> bool:
    """Re-verify a record from scratch; every emitted record must pass."""
    from .spectral import find_spectrum
    from .tiling import find_complement

    subject = rec.subject_mask()
    exhaustion = dict(rec.exhaustion)
    if rec.kind == "spectrum":
        return verify_spectral_pair(subject, rec.witness_mask())
    if rec.kind == "complement":
        return verify_tiling(subject, rec.witness_mask())
    if rec.kind == "no_spectrum":
        res = find_spectrum(subject)
        return isinstance(res, NoSpectrum) and res.nodes_explored == exhaustion.get(
            "spectrum_nodes"
        )
    if rec.kind == "no_complement":
        res = find_complement(subject)
        return isinstance(res, NoComplement) and res.nodes_explored == exhaustion.get(
            "complement_nodes"
        )
    if rec.kind == "violation":
        spectral = isinstance(find_spectrum(subject), SpectralCertificate)
        tile = isinstance(find_complement(subject), TilingCertificate)
        return spectral != tile
    raise ValueError(f"unknown certificate kind {rec.kind!r}")


def append_certificates(path: str, records: list[CertificateRecord]) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        for rec in records:
            fh.write(rec.to_json_line() + "\n")

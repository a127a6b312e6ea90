"""Spectrality decisions: verify spectral pairs, search for spectra,
construct subgroup-complement spectra.

A candidate spectrum is a clique: Lambda works for S exactly when
|Lambda| = |S| and every nonzero difference of Lambda lies in the zero set
Z(S).  The search therefore walks the Cayley graph on G with connection
set Z(S), normalized to 0 in Lambda (translation invariance), taking
candidates in ascending element-index order so the first certificate found
is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charsums import zero_set_bits
from .group import (
    GroupSpec,
    SubsetMask,
    _add_rows,
    _neg_index,
    is_subgroup,
    iter_bits,
    translate_bits,
)
from .tiling import NotASubgroupError, NotATilingError, subgroup_complement, verify_tiling


@dataclass(frozen=True)
class SpectralCertificate:
    """A verified spectral pair (S, Lambda)."""

    S: SubsetMask
    Lambda: SubsetMask
    normalized: bool
    nodes_explored: int = 0


@dataclass(frozen=True)
class NoSpectrum:
    """Negative answer with its search exhaustion record."""

    S: SubsetMask
    nodes_explored: int


def verify_spectral_pair(s: SubsetMask, lam: SubsetMask) -> bool:
    """True iff |S| = |Lambda| >= 1 and every nonzero difference of Lambda is in Z(S)."""
    if s.spec != lam.spec:
        raise ValueError("sets belong to different groups")
    if s.card != lam.card or s.card == 0:
        return False
    spec = s.spec
    zbits = zero_set_bits(spec, s.bits)
    rows = _add_rows(spec)
    neg = _neg_index(spec)
    idxs = lam.indices()
    for i, x in enumerate(idxs):
        row = rows[x]
        for y in idxs[i + 1 :]:
            if not zbits >> row[neg[y]] & 1:
                return False
    return True


def _spectral_bits(spec: GroupSpec, sbits: int) -> tuple[int | None, int]:
    """Clique search for a spectrum containing 0; (lambda bits or None, nodes)."""
    m = sbits.bit_count()
    if m == 1:
        return 1, 0
    zbits = zero_set_bits(spec, sbits)
    if zbits.bit_count() < m - 1:
        return None, 0
    n = spec.n
    adj: list[int | None] = [None] * n
    nodes = 0

    def dfs(pbits: int, need: int, lam: int) -> int | None:
        nonlocal nodes
        if need == 0:
            return lam
        while pbits:
            if pbits.bit_count() < need:
                return None
            b = pbits & -pbits
            pbits ^= b
            v = b.bit_length() - 1
            nodes += 1
            a = adj[v]
            if a is None:
                a = translate_bits(spec, zbits, v)
                adj[v] = a
            found = dfs(pbits & a, need - 1, lam | b)
            if found is not None:
                return found
        return None

    result = dfs(zbits, m - 1, 1)
    return result, nodes


def find_spectrum(s: SubsetMask) -> SpectralCertificate | NoSpectrum:
    """Search for a spectrum of S, normalized to contain 0.

    Negative answers are exhaustive over all |S|-cliques containing 0 in
    the zero-set Cayley graph; the number of visited search nodes is
    reported alongside.
    """
    if s.card == 0:
        raise ValueError("find_spectrum requires a nonempty set")
    lam_bits, nodes = _spectral_bits(s.spec, s.bits)
    if lam_bits is None:
        return NoSpectrum(S=s, nodes_explored=nodes)
    return SpectralCertificate(
        S=s,
        Lambda=SubsetMask(s.spec, lam_bits),
        normalized=True,
        nodes_explored=nodes,
    )


def is_spectral(s: SubsetMask) -> bool:
    if s.card == 0:
        return False
    lam_bits, _ = _spectral_bits(s.spec, s.bits)
    return lam_bits is not None


def subgroup_complement_spectrum(a: SubsetMask, b: SubsetMask) -> SpectralCertificate:
    """Spectrum for A when A + B = G (direct) and B is a subgroup.

    The spectrum is the complement subgroup P with P + B = G; the returned
    certificate is re-verified before being handed out.
    """
    if a.spec != b.spec:
        raise ValueError("sets belong to different groups")
    if not is_subgroup(b):
        raise NotASubgroupError("the complement factor must be a subgroup")
    if not verify_tiling(a, b):
        raise NotATilingError("A and B do not tile the group")
    p = subgroup_complement(b)
    cert = SpectralCertificate(S=a, Lambda=p, normalized=True, nodes_explored=0)
    if not verify_spectral_pair(a, p):
        raise AssertionError("subgroup complement failed spectral verification")
    return cert

"""Tiling decisions: verify S + T = G, search complements, build subgroup
complements.

The complement search is a backtracking exact cover over translates of S:
always branch at the least-index uncovered element, and admit a translate
only when it is disjoint from everything placed so far -- which is exactly
the condition that T - T avoids S - S outside 0, one placement at a time.
The normalization 0 in T is sound because complements translate freely.
"""

from __future__ import annotations

from dataclasses import dataclass

from .group import (
    Element,
    GroupSpec,
    SubsetMask,
    _add_rows,
    _neg_index,
    is_subgroup,
    iter_bits,
    span,
    translate_bits,
)


class NotASubgroupError(ValueError):
    """The given set is not a subgroup."""


class NotATilingError(ValueError):
    """The given pair does not tile the group."""


@dataclass(frozen=True)
class TilingCertificate:
    """A verified tiling pair: S + T = G with |S| * |T| = |G|."""

    S: SubsetMask
    T: SubsetMask
    normalized: bool
    nodes_explored: int = 0


@dataclass(frozen=True)
class NoComplement:
    """Negative answer with its search exhaustion record."""

    S: SubsetMask
    nodes_explored: int


def verify_tiling(s: SubsetMask, t: SubsetMask) -> bool:
    """True iff every group element is s + t in exactly one way."""
    if s.spec != t.spec:
        raise ValueError("sets belong to different groups")
    spec = s.spec
    n = spec.n
    if s.card == 0 or s.card * t.card != n:
        return False
    acc = 0
    for ti in iter_bits(t.bits):
        x = translate_bits(spec, s.bits, ti)
        if x & acc:
            return False
        acc |= x
    return acc == (1 << n) - 1


def _complement_bits(spec: GroupSpec, sbits: int) -> tuple[int | None, int]:
    """Exact cover search for T with 0 in T; returns (tbits or None, nodes)."""
    n = spec.n
    m = sbits.bit_count()
    if m == 0 or n % m:
        return None, 0
    full = (1 << n) - 1
    if sbits == full:
        return 1, 0
    s_idx = list(iter_bits(sbits))
    neg = _neg_index(spec)
    rows = _add_rows(spec)
    trans: list[int | None] = [None] * n
    trans[0] = sbits
    nodes = 0

    def dfs(covered: int, tbits: int) -> int | None:
        nonlocal nodes
        if covered == full:
            return tbits
        e = (~covered & (covered + 1)).bit_length() - 1
        row_e = rows[e]
        cands = sorted(row_e[neg[s]] for s in s_idx)
        for t in cands:
            x = trans[t]
            if x is None:
                x = translate_bits(spec, sbits, t)
                trans[t] = x
            if x & covered:
                continue
            nodes += 1
            found = dfs(covered | x, tbits | (1 << t))
            if found is not None:
                return found
        return None

    result = dfs(sbits, 1)
    return result, nodes


def find_complement(s: SubsetMask) -> TilingCertificate | NoComplement:
    """Search for a tiling complement, normalized to contain 0.

    Negative answers are exhaustive: every branch of the cover search was
    explored, and the number of attempted placements is reported.
    """
    if s.card == 0:
        raise ValueError("find_complement requires a nonempty set")
    tbits, nodes = _complement_bits(s.spec, s.bits)
    if tbits is None:
        return NoComplement(S=s, nodes_explored=nodes)
    return TilingCertificate(
        S=s, T=SubsetMask(s.spec, tbits), normalized=True, nodes_explored=nodes
    )


def is_tile(s: SubsetMask) -> bool:
    if s.card == 0:
        return False
    tbits, _ = _complement_bits(s.spec, s.bits)
    return tbits is not None


def _plane_part(spec: GroupSpec, b: SubsetMask) -> list[tuple[int, int]]:
    return [(g.u1, g.u2) for g in b.elements() if g.v == 0]


def subgroup_complement(b: SubsetMask) -> SubsetMask:
    """A subgroup L with B + L = G (direct), built per isomorphism type.

    B splits as (plane part) x (Z_q part) because the component orders are
    coprime; each factor is complemented inside its own direct factor and
    the complement is the span of the two pieces.
    """
    spec = b.spec
    if not is_subgroup(b):
        raise NotASubgroupError("complement construction requires a subgroup")
    p, q = spec.p, spec.q
    plane = _plane_part(spec, b)
    has_q = any(g.u1 == 0 and g.u2 == 0 and g.v != 0 for g in b.elements())

    gens: list[Element] = []
    if len(plane) == 1:
        gens += [Element(1, 0, 0), Element(0, 1, 0)]
    elif len(plane) == p:
        w = next(u for u in plane if u != (0, 0))
        line = {((c * w[0]) % p, (c * w[1]) % p) for c in range(p)}
        for u1 in range(p):
            for u2 in range(p):
                if (u1, u2) not in line:
                    gens.append(Element(u1, u2, 0))
                    break
            else:
                continue
            break
    # len(plane) == p*p: the whole plane, complemented by the trivial subgroup
    if not has_q:
        gens.append(Element(0, 0, 1))

    comp = span(spec, gens)
    if not verify_tiling(b, comp):
        raise AssertionError("constructed complement failed verification")
    return comp

"""Exact character sums over Z_p^2 x Z_q.

A character sum over a multiset M is bookkept exactly as the p x q integer
matrix c[j][k] = total multiplicity of the root zeta_p^j * zeta_q^k in the
sum.  Vanishing is then a pure integer question, decided per character
order:

  order 1   total weight is zero
  order p   all row sums equal        (equidistribution mod p)
  order q   all column sums equal     (equidistribution mod q)
  order pq  c[j][k] - c[j][0] - c[0][k] + c[0][0] = 0 for all j, k

The order-pq test accepts exactly the matrices of the form
c[j][k] = y_j + x_k over the integers, i.e. the span of full rows and full
columns; this is the rank-(p+q-1) relation lattice of the pq-th roots of
unity.  A double-precision oracle (numeric_char_sum) cross-checks the whole
integer route in the test suite; it is never consulted by the exact code.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .group import (
    Element,
    GroupSpec,
    Multiset,
    SubsetMask,
    iter_bits,
)

MultisetLike = Union[Multiset, SubsetMask]


class NotVanishingError(ValueError):
    """The coefficient matrix does not satisfy the vanishing criterion."""


def _as_multiset(m: MultisetLike) -> Multiset:
    if isinstance(m, SubsetMask):
        return Multiset.from_subset(m)
    return m


@dataclass(frozen=True)
class CoefficientMatrix:
    """p x q integer matrix of root-of-unity multiplicities."""

    p: int
    q: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.p or any(len(r) != self.q for r in self.rows):
            raise ValueError(f"expected a {self.p} x {self.q} matrix")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "CoefficientMatrix":
        tup = tuple(tuple(int(x) for x in r) for r in rows)
        if not tup or not tup[0]:
            raise ValueError("matrix must be nonempty")
        return cls(len(tup), len(tup[0]), tup)

    def entry(self, j: int, k: int) -> int:
        return self.rows[j][k]

    @property
    def total(self) -> int:
        return sum(sum(r) for r in self.rows)

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(r[k] for r in self.rows) for k in range(self.q))

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for r in self.rows for x in r)


@dataclass(frozen=True)
class CosetDecomposition:
    """Weights of full Z_p-cosets (x, one per column) and Z_q-cosets (y).

    Reconstruction: c[j][k] = y[j] + x[k].  The representation is pinned to
    the canonical member of the shift family by min(y) = 0.
    """

    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(v < 0 for v in self.x) or any(v < 0 for v in self.y):
            raise ValueError("coset multipliers must be nonnegative")
        if min(self.y) != 0:
            raise ValueError("canonical form requires min(y) = 0")

    @property
    def p(self) -> int:
        return len(self.y)

    @property
    def q(self) -> int:
        return len(self.x)

    def reconstruct(self) -> CoefficientMatrix:
        return CoefficientMatrix(
            self.p,
            self.q,
            tuple(tuple(yj + xk for xk in self.x) for yj in self.y),
        )


def char_coeff_matrix(chi: Element, m: MultisetLike) -> CoefficientMatrix:
    """Exact exponent bookkeeping of the sum chi(M)."""
    ms = _as_multiset(m)
    spec = ms.spec
    spec.validate_element(chi)
    p, q = spec.p, spec.q
    cells = [[0] * q for _ in range(p)]
    a1, a2, b = chi.u1, chi.u2, chi.v
    counts = ms.counts
    for i, c in enumerate(counts):
        if c:
            g = spec.element(i)
            cells[(g.u1 * a1 + g.u2 * a2) % p][(g.v * b) % q] += c
    return CoefficientMatrix(p, q, tuple(tuple(r) for r in cells))


def _separable(c: CoefficientMatrix) -> bool:
    # c[j][k] = y_j + x_k over the integers iff all double differences vanish
    rows = c.rows
    r0 = rows[0]
    c00 = r0[0]
    for j in range(1, c.p):
        rj = rows[j]
        cj0 = rj[0]
        for k in range(1, c.q):
            if rj[k] - cj0 - r0[k] + c00:
                return False
    return True


def vanishes(chi: Element, m: MultisetLike) -> bool:
    """Exact truth of chi(M) = 0, decided by the order of chi."""
    ms = _as_multiset(m)
    spec = ms.spec
    order = spec.order(chi)
    c = char_coeff_matrix(chi, ms)
    if order == 1:
        return c.total == 0
    if order == spec.p:
        sums = c.row_sums()
        return all(s == sums[0] for s in sums)
    if order == spec.q:
        sums = c.col_sums()
        return all(s == sums[0] for s in sums)
    return _separable(c)


def equidistributed(m: MultisetLike, a: tuple[int, int]) -> bool:
    """True iff M puts weight |M|/p on each coset of {<u,a> = 0}."""
    ms = _as_multiset(m)
    spec = ms.spec
    p = spec.p
    a1, a2 = a[0] % p, a[1] % p
    if a1 == 0 and a2 == 0:
        raise ValueError("direction a must be nonzero")
    classes = [0] * p
    for i, c in enumerate(ms.counts):
        if c:
            g = spec.element(i)
            classes[(g.u1 * a1 + g.u2 * a2) % p] += c
    return all(s == classes[0] for s in classes)


def project(m: MultisetLike, a: tuple[int, int], b: int) -> CoefficientMatrix:
    """Push M onto the p x q grid (inner-product class against a, raw v).

    Rows are indexed by <x, a> mod p rather than by multiples of a, so the
    fibration stays well-defined even when <a, a> = 0 mod p; columns keep
    the q-coordinate untouched.  Relates to char_coeff_matrix((a, b), M) by
    the column relabeling k = v*b mod q.
    """
    ms = _as_multiset(m)
    spec = ms.spec
    p, q = spec.p, spec.q
    a1, a2 = a[0] % p, a[1] % p
    if a1 == 0 and a2 == 0:
        raise ValueError("direction a must be nonzero")
    if b % q == 0:
        raise ValueError("b must be nonzero mod q")
    cells = [[0] * q for _ in range(p)]
    for i, c in enumerate(ms.counts):
        if c:
            g = spec.element(i)
            cells[(g.u1 * a1 + g.u2 * a2) % p][g.v] += c
    return CoefficientMatrix(p, q, tuple(tuple(r) for r in cells))


def lam_leung(c: CoefficientMatrix) -> CosetDecomposition:
    """Split a vanishing nonnegative matrix into full rows and columns.

    Raises NotVanishingError if the order-pq criterion fails.  For matrices
    that do satisfy it, the nonnegative decomposition always exists and the
    canonical one (min(y) = 0) is returned.
    """
    if not c.is_nonnegative():
        raise ValueError("decomposition requires a nonnegative matrix")
    if not _separable(c):
        raise NotVanishingError("matrix does not satisfy the vanishing criterion")
    col0 = tuple(r[0] for r in c.rows)
    base = min(range(c.p), key=lambda j: col0[j])
    y = tuple(col0[j] - col0[base] for j in range(c.p))
    x = c.rows[base]
    assert all(v >= 0 for v in x)  # nonnegativity is forced for valid inputs
    return CosetDecomposition(x=tuple(x), y=y)


# -- zero sets ----------------------------------------------------------------
#
# Vanishing of chi(S) depends only on the cyclic subgroup generated by chi
# (Galois conjugation permutes the roots within an order class), so the zero
# set is assembled from one test per plane direction [a] -- for the order-p
# and order-pq classes -- plus a single order-q test.  Each test reads only
# cell counts |S /\ cell|, so the whole thing is a handful of popcounts.


@dataclass(frozen=True)
class _CharTables:
    directions: tuple[tuple[int, int], ...]
    flat_cells: tuple[tuple[int, ...], ...]  # per direction: p*q masks, j*q + v
    vlevel_masks: tuple[int, ...]
    order_p_masks: tuple[int, ...]
    order_pq_masks: tuple[int, ...]
    order_q_mask: int


@lru_cache(maxsize=None)
def _char_tables(spec: GroupSpec) -> _CharTables:
    p, q, n = spec.p, spec.q, spec.n
    directions = [(0, 1)] + [(1, c) for c in range(p)]
    flat_cells = []
    order_p_masks = []
    order_pq_masks = []
    for a1, a2 in directions:
        cells = [0] * (p * q)
        for i in range(n):
            g = spec.element(i)
            j = (g.u1 * a1 + g.u2 * a2) % p
            cells[j * q + g.v] |= 1 << i
        flat_cells.append(tuple(cells))
        pmask = 0
        pqmask = 0
        for c in range(1, p):
            base = spec.index(Element(c * a1 % p, c * a2 % p, 0))
            pmask |= 1 << base
            for b in range(1, q):
                pqmask |= 1 << (base + b)
        order_p_masks.append(pmask)
        order_pq_masks.append(pqmask)
    vlevel = [0] * q
    for i in range(n):
        vlevel[i % q] |= 1 << i
    qmask = 0
    for b in range(1, q):
        qmask |= 1 << b  # characters (0, b) have index b
    return _CharTables(
        directions=tuple(directions),
        flat_cells=tuple(flat_cells),
        vlevel_masks=tuple(vlevel),
        order_p_masks=tuple(order_p_masks),
        order_pq_masks=tuple(order_pq_masks),
        order_q_mask=qmask,
    )


def zero_set_bits(spec: GroupSpec, sbits: int) -> int:
    """Bit vector of the nonzero characters vanishing on the subset sbits."""
    t = _char_tables(spec)
    p, q = spec.p, spec.q
    card = sbits.bit_count()
    z = 0
    if card % q == 0:
        share = card // q
        if all((sbits & m).bit_count() == share for m in t.vlevel_masks):
            z |= t.order_q_mask
    share_p = card // p
    test_p = card % p == 0
    for d in range(p + 1):
        cnt = [(sbits & m).bit_count() for m in t.flat_cells[d]]
        if test_p:
            ok = True
            for j in range(p):
                if sum(cnt[j * q : (j + 1) * q]) != share_p:
                    ok = False
                    break
            if ok:
                z |= t.order_p_masks[d]
        ok = True
        c00 = cnt[0]
        for j in range(1, p):
            cj0 = cnt[j * q]
            for v in range(1, q):
                if cnt[j * q + v] - cj0 - cnt[v] + c00:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            z |= t.order_pq_masks[d]
    return z


def zero_set(s: SubsetMask) -> SubsetMask:
    """All nonzero characters chi with chi(S) = 0, as a subset of the dual."""
    return SubsetMask(s.spec, zero_set_bits(s.spec, s.bits))


def numeric_char_sum(chi: Element, m: MultisetLike) -> float:
    """|chi(M)| by direct double-precision evaluation; test oracle only."""
    ms = _as_multiset(m)
    spec = ms.spec
    wp = cmath.exp(2j * math.pi / spec.p)
    wq = cmath.exp(2j * math.pi / spec.q)
    total = 0j
    for i, c in enumerate(ms.counts):
        if c:
            j, k = spec.char_exponents(chi, spec.element(i))
            total += c * wp**j * wq**k
    return abs(total)

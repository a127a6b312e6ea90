"""Group arithmetic for G = Z_p^2 x Z_q.

Elements, bit-vector subsets, integer multisets, and the affine symmetry
action (GL(2,p) on the plane part, unit scaling on the Z_q part, plus
translations).  The element indexing fixed here,

    index(u1, u2, v) = (u1*p + u2)*q + v,

is the single bit-exact convention shared by every other module and by the
file formats.  All values are immutable after construction and all
operations are pure functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Optional


class NotPrimeError(ValueError):
    """A group parameter is composite (or < 2)."""


class EqualPrimesError(ValueError):
    """The two group primes coincide."""


class SymmetryGroupTooLargeError(RuntimeError):
    """Affine-map enumeration would exceed the configured cap."""


# Refuse to enumerate affine maps once |GL(2,p)| * (q-1) * n exceeds this.
DEFAULT_SYMMETRY_CAP = 10_000_000


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


class Element(NamedTuple):
    """A point (u1, u2, v) of Z_p^2 x Z_q; also indexes a character."""

    u1: int
    u2: int
    v: int


@dataclass(frozen=True)
class GroupSpec:
    """The pair of distinct primes (p, q) defining G = Z_p^2 x Z_q."""

    p: int
    q: int

    def __post_init__(self) -> None:
        for name, value in (("p", self.p), ("q", self.q)):
            if not is_prime(value):
                raise NotPrimeError(f"{name} = {value} is not prime")
        if self.p == self.q:
            raise EqualPrimesError(f"p and q must be distinct, both are {self.p}")

    @property
    def n(self) -> int:
        """Group order p^2 * q."""
        return self.p * self.p * self.q

    # -- element encoding ---------------------------------------------------

    def index(self, g: Element) -> int:
        return (g.u1 * self.p + g.u2) * self.q + g.v

    def element(self, i: int) -> Element:
        lin, v = divmod(i, self.q)
        u1, u2 = divmod(lin, self.p)
        if not 0 <= u1 < self.p:
            raise ValueError(f"index {i} out of range [0, {self.n})")
        return Element(u1, u2, v)

    def elements(self) -> Iterator[Element]:
        for i in range(self.n):
            yield self.element(i)

    def validate_element(self, g: Element) -> Element:
        if not (0 <= g.u1 < self.p and 0 <= g.u2 < self.p and 0 <= g.v < self.q):
            raise ValueError(f"element {tuple(g)} out of range for p={self.p}, q={self.q}")
        return g

    def zero(self) -> Element:
        return Element(0, 0, 0)

    # -- group law ----------------------------------------------------------

    def add(self, g: Element, h: Element) -> Element:
        p, q = self.p, self.q
        return Element((g.u1 + h.u1) % p, (g.u2 + h.u2) % p, (g.v + h.v) % q)

    def neg(self, g: Element) -> Element:
        p, q = self.p, self.q
        return Element(-g.u1 % p, -g.u2 % p, -g.v % q)

    def sub(self, g: Element, h: Element) -> Element:
        return self.add(g, self.neg(h))

    def scale(self, k: int, g: Element) -> Element:
        p, q = self.p, self.q
        return Element(k * g.u1 % p, k * g.u2 % p, k * g.v % q)

    def order(self, g: Element) -> int:
        """Additive order: one of 1, p, q, pq."""
        u_zero = g.u1 == 0 and g.u2 == 0
        v_zero = g.v == 0
        if u_zero and v_zero:
            return 1
        if v_zero:
            return self.p
        if u_zero:
            return self.q
        return self.p * self.q

    def char_exponents(self, chi: Element, g: Element) -> tuple[int, int]:
        """Exponents (j, k) with chi(g) = zeta_p^j * zeta_q^k.

        chi = (a, b) acts on g = (u, v) through j = <u, a> mod p and
        k = v*b mod q; the pairing is symmetric in chi and g.
        """
        j = (g.u1 * chi.u1 + g.u2 * chi.u2) % self.p
        k = (g.v * chi.v) % self.q
        return j, k


def make_group(p: int, q: int) -> GroupSpec:
    """Validate (p, q) and build the group descriptor."""
    return GroupSpec(p, q)


def inner_p(u: tuple[int, int], a: tuple[int, int], p: int) -> int:
    """Scalar product u1*a1 + u2*a2 mod p on the plane part."""
    return (u[0] * a[0] + u[1] * a[1]) % p


# -- cached index tables ----------------------------------------------------
#
# The tables below are the only state shared between calls; they are built
# once per GroupSpec and are read-only afterwards, so concurrent use is safe.


@lru_cache(maxsize=None)
def _add_rows(spec: GroupSpec) -> tuple[tuple[int, ...], ...]:
    """rows[g][h] = index(element(g) + element(h))."""
    p, q, n = spec.p, spec.q, spec.n
    decoded = [spec.element(i) for i in range(n)]
    rows = []
    for g in decoded:
        row = []
        for h in decoded:
            row.append(((g.u1 + h.u1) % p * p + (g.u2 + h.u2) % p) * q + (g.v + h.v) % q)
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def _neg_index(spec: GroupSpec) -> tuple[int, ...]:
    return tuple(spec.index(spec.neg(g)) for g in spec.elements())


@lru_cache(maxsize=None)
def _trans_bit_rows(spec: GroupSpec) -> tuple[tuple[int, ...], ...]:
    """rows[g][h] = 1 << index(g + h), for fast bit-vector translation."""
    return tuple(tuple(1 << j for j in row) for row in _add_rows(spec))


def translate_bits(spec: GroupSpec, bits: int, gi: int) -> int:
    """Translate a bit vector by the element with index gi."""
    row = _trans_bit_rows(spec)[gi]
    out = 0
    while bits:
        b = bits & -bits
        out |= row[b.bit_length() - 1]
        bits ^= b
    return out


def iter_bits(bits: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while bits:
        b = bits & -bits
        yield b.bit_length() - 1
        bits ^= b


# -- subsets and multisets ---------------------------------------------------


@dataclass(frozen=True)
class SubsetMask:
    """A subset of G as a bit vector (bit i = element with index i)."""

    spec: GroupSpec
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < (1 << self.spec.n):
            raise ValueError(f"bit vector out of range for group of order {self.spec.n}")

    @classmethod
    def empty(cls, spec: GroupSpec) -> "SubsetMask":
        return cls(spec, 0)

    @classmethod
    def full(cls, spec: GroupSpec) -> "SubsetMask":
        return cls(spec, (1 << spec.n) - 1)

    @classmethod
    def from_indices(cls, spec: GroupSpec, indices: Iterable[int]) -> "SubsetMask":
        bits = 0
        for i in indices:
            if not 0 <= i < spec.n:
                raise ValueError(f"index {i} out of range [0, {spec.n})")
            bits |= 1 << i
        return cls(spec, bits)

    @classmethod
    def from_elements(cls, spec: GroupSpec, elems: Iterable[Element]) -> "SubsetMask":
        return cls.from_indices(spec, (spec.index(spec.validate_element(g)) for g in elems))

    @property
    def card(self) -> int:
        return self.bits.bit_count()

    def indices(self) -> list[int]:
        return list(iter_bits(self.bits))

    def elements(self) -> list[Element]:
        return [self.spec.element(i) for i in iter_bits(self.bits)]

    def contains_index(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def __contains__(self, g: Element) -> bool:
        return self.contains_index(self.spec.index(g))

    def __len__(self) -> int:
        return self.card

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements())

    def _check_same(self, other: "SubsetMask") -> None:
        if self.spec != other.spec:
            raise ValueError("subsets belong to different groups")

    def __or__(self, other: "SubsetMask") -> "SubsetMask":
        self._check_same(other)
        return SubsetMask(self.spec, self.bits | other.bits)

    def __and__(self, other: "SubsetMask") -> "SubsetMask":
        self._check_same(other)
        return SubsetMask(self.spec, self.bits & other.bits)

    def __sub__(self, other: "SubsetMask") -> "SubsetMask":
        self._check_same(other)
        return SubsetMask(self.spec, self.bits & ~other.bits)

    def complement(self) -> "SubsetMask":
        return SubsetMask(self.spec, self.bits ^ ((1 << self.spec.n) - 1))

    def translate(self, g: Element) -> "SubsetMask":
        gi = self.spec.index(self.spec.validate_element(g))
        return SubsetMask(self.spec, translate_bits(self.spec, self.bits, gi))


@dataclass(frozen=True)
class Multiset:
    """Nonnegative integer counts per element.

    Counts are plain Python integers, so arithmetic is exact and unbounded
    by construction.
    """

    spec: GroupSpec
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.spec.n:
            raise ValueError(f"expected {self.spec.n} counts, got {len(self.counts)}")
        if any(c < 0 for c in self.counts):
            raise ValueError("multiset counts must be nonnegative")

    @classmethod
    def from_subset(cls, s: SubsetMask) -> "Multiset":
        bits = s.bits
        return cls(s.spec, tuple((bits >> i) & 1 for i in range(s.spec.n)))

    @classmethod
    def from_pairs(cls, spec: GroupSpec, pairs: Iterable[tuple[Element, int]]) -> "Multiset":
        counts = [0] * spec.n
        for g, c in pairs:
            if c < 0:
                raise ValueError(f"negative count {c} for element {tuple(g)}")
            counts[spec.index(spec.validate_element(g))] += c
        return cls(spec, tuple(counts))

    @classmethod
    def constant(cls, spec: GroupSpec, c: int) -> "Multiset":
        return cls(spec, (c,) * spec.n)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def count_of(self, g: Element) -> int:
        return self.counts[self.spec.index(g)]

    def support(self) -> SubsetMask:
        bits = 0
        for i, c in enumerate(self.counts):
            if c:
                bits |= 1 << i
        return SubsetMask(self.spec, bits)

    def is_constant(self) -> bool:
        return min(self.counts) == max(self.counts)


def difference_multiset(s: SubsetMask) -> Multiset:
    """counts[d] = number of ordered pairs (x, y) in S x S with x - y = d."""
    spec = s.spec
    rows = _add_rows(spec)
    neg = _neg_index(spec)
    counts = [0] * spec.n
    idxs = s.indices()
    for y in idxs:
        row = rows[neg[y]]
        for x in idxs:
            counts[row[x]] += 1
    return Multiset(spec, tuple(counts))


def difference_set(s: SubsetMask) -> SubsetMask:
    """The set S - S (support of the difference multiset)."""
    spec = s.spec
    neg = _neg_index(spec)
    bits = 0
    for y in s.indices():
        bits |= translate_bits(spec, s.bits, neg[y])
    return SubsetMask(spec, bits)


# -- subgroups ---------------------------------------------------------------


def cyclic_subgroup(spec: GroupSpec, g: Element) -> SubsetMask:
    """All integer multiples of g."""
    spec.validate_element(g)
    bits = 1 << spec.index(spec.zero())
    cur = g
    while spec.index(cur) != 0:
        bits |= 1 << spec.index(cur)
        cur = spec.add(cur, g)
    return SubsetMask(spec, bits)


def span(spec: GroupSpec, gens: Iterable[Element]) -> SubsetMask:
    """Subgroup generated by gens: all sums of multiples of the generators."""
    bits = 1 << 0  # identity has index 0
    for g in gens:
        spec.validate_element(g)
        gi = spec.index(g)
        prev = -1
        while prev != bits:
            prev = bits
            bits |= translate_bits(spec, bits, gi)
    return SubsetMask(spec, bits)


def is_subgroup(s: SubsetMask) -> bool:
    """True iff S contains 0 and is closed under addition."""
    if not s.contains_index(0):
        return False
    spec = s.spec
    rows = _add_rows(spec)
    idxs = s.indices()
    bits = s.bits
    for x in idxs:
        row = rows[x]
        for y in idxs:
            if not bits >> row[y] & 1:
                return False
    return True


# -- affine symmetries --------------------------------------------------------


def gl2_order(p: int) -> int:
    return (p * p - 1) * (p * p - p)


def affine_map_count(spec: GroupSpec) -> int:
    return gl2_order(spec.p) * (spec.q - 1) * spec.n


@dataclass(frozen=True)
class AffineMap:
    """x = (u, v) -> (A u, r v) + t with A in GL(2, p) and r a unit of Z_q."""

    spec: GroupSpec
    a: tuple[tuple[int, int], tuple[int, int]]
    r: int
    t: Element

    def __post_init__(self) -> None:
        p, q = self.spec.p, self.spec.q
        (a11, a12), (a21, a22) = self.a
        if any(not 0 <= x < p for x in (a11, a12, a21, a22)):
            raise ValueError("matrix entries out of range mod p")
        if (a11 * a22 - a12 * a21) % p == 0:
            raise ValueError("matrix is singular mod p")
        if math.gcd(self.r, q) != 1 or not 0 < self.r < q:
            raise ValueError(f"r = {self.r} is not a unit mod q = {q}")
        self.spec.validate_element(self.t)

    def apply(self, g: Element) -> Element:
        p, q = self.spec.p, self.spec.q
        (a11, a12), (a21, a22) = self.a
        u1 = (a11 * g.u1 + a12 * g.u2 + self.t.u1) % p
        u2 = (a21 * g.u1 + a22 * g.u2 + self.t.u2) % p
        v = (self.r * g.v + self.t.v) % q
        return Element(u1, u2, v)

    def index_perm(self) -> tuple[int, ...]:
        """The map as a permutation of element indices."""
        spec = self.spec
        return tuple(spec.index(self.apply(g)) for g in spec.elements())

    @classmethod
    def identity(cls, spec: GroupSpec) -> "AffineMap":
        return cls(spec, ((1, 0), (0, 1)), 1, spec.zero())


def _invertible_matrices(p: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    out = []
    for a11 in range(p):
        for a12 in range(p):
            for a21 in range(p):
                for a22 in range(p):
                    if (a11 * a22 - a12 * a21) % p:
                        out.append(((a11, a12), (a21, a22)))
    return out


def enumerate_affine_maps(
    spec: GroupSpec, cap: int = DEFAULT_SYMMETRY_CAP
) -> Iterator[AffineMap]:
    """All |GL(2,p)| * (q-1) * n affine maps, in a fixed deterministic order."""
    count = affine_map_count(spec)
    if count > cap:
        raise SymmetryGroupTooLargeError(
            f"{count} affine maps exceed the cap of {cap}"
        )
    matrices = _invertible_matrices(spec.p)
    for a in matrices:
        for r in range(1, spec.q):
            for t in spec.elements():
                yield AffineMap(spec, a, r, t)


def apply_map(m: AffineMap, s: SubsetMask) -> SubsetMask:
    if m.spec != s.spec:
        raise ValueError("map and subset belong to different groups")
    spec = s.spec
    bits = 0
    for g in s.elements():
        bits |= 1 << spec.index(m.apply(g))
    return SubsetMask(spec, bits)

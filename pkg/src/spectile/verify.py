"""Conjecture harness: scan subsets, decide spectral and tile for each,
stratify by gcd size class, and aggregate violations.

Exhaustive mode walks every subset of G directly (each subset is its own
scan unit); orbit mode walks one representative per affine orbit and
weights tallies by orbit size.  Sampled mode draws seeded random subsets
with sizes biased toward divisors of |G|.  All modes are deterministic:
identical (group, mode, seed) produce byte-identical reports regardless of
how the scan is partitioned across workers.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Union

from . import charsums
from .charsums import NotVanishingError, _char_tables, lam_leung
from .group import (
    DEFAULT_SYMMETRY_CAP,
    AffineMap,
    Element,
    GroupSpec,
    Multiset,
    SubsetMask,
    difference_set,
    enumerate_affine_maps,
    is_subgroup,
    iter_bits,
    span,
    translate_bits,
)
from .spectral import _spectral_bits, subgroup_complement_spectrum
from .tiling import _complement_bits


class GroupTooLargeForExhaustiveError(RuntimeError):
    """The group exceeds the configured exhaustive-scan cap."""


DEFAULT_EXHAUSTIVE_CAP = 20
DEFAULT_ORBIT_CAP = 28


# -- size classes -------------------------------------------------------------


@dataclass(frozen=True)
class SizeClass:
    """gcd(|G|, |S|): one of 1, p, q, p^2, pq, p^2 q."""

    m: int
    label: str


def _class_label(m: int, spec: GroupSpec) -> str:
    p, q = spec.p, spec.q
    return {1: "1", p: "p", q: "q", p * p: "p2", p * q: "pq", p * p * q: "p2q"}[m]


def size_class(card: int, spec: GroupSpec) -> SizeClass:
    if not 1 <= card <= spec.n:
        raise ValueError(f"cardinality {card} out of range [1, {spec.n}]")
    m = math.gcd(spec.n, card)
    return SizeClass(m, _class_label(m, spec))


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# -- deterministic sampling RNG ------------------------------------------------

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(x: int) -> int:
    x &= _MASK64
    x ^= x >> 30
    x = (x * 0xBF58476D1CE4E5B9) & _MASK64
    x ^= x >> 27
    x = (x * 0x94D049BB133111EB) & _MASK64
    x ^= x >> 31
    return x


def batch_seed(master: int, batch: int) -> int:
    """Seed for batch number `batch`: mix(mix(master) xor mix(batch + 1)).

    Every batch gets an independent stream derived only from the master
    seed and its own index, so results cannot depend on how batches are
    assigned to workers.
    """
    return _mix64(_mix64(master) ^ _mix64(batch + 1))


class SplitMix64:
    """splitmix64, the documented 64-bit generator behind sampled mode."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix64(self._state)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), unbiased by rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (_MASK64 + 1) - ((_MASK64 + 1) % bound)
        while True:
            x = self.next64()
            if x < limit:
                return x % bound

    def sample_bits(self, n: int, k: int) -> int:
        """Uniform k-subset of [0, n) as a bit vector (partial Fisher-Yates)."""
        arr = list(range(n))
        bits = 0
        for i in range(k):
            j = i + self.below(n - i)
            arr[i], arr[j] = arr[j], arr[i]
            bits |= 1 << arr[i]
        return bits


# -- scan modes and reports ----------------------------------------------------


@dataclass(frozen=True)
class ExhaustiveMode:
    size: Optional[int] = None
    use_orbits: bool = False

    def describe(self) -> str:
        out = "exhaustive(orbits)" if self.use_orbits else "exhaustive"
        if self.size is not None:
            out += f" size={self.size}"
        return out


@dataclass(frozen=True)
class SampledMode:
    seed: int
    trials: int
    size: Optional[int] = None

    def describe(self) -> str:
        out = f"sampled(seed={self.seed}, trials={self.trials})"
        if self.size is not None:
            out += f" size={self.size}"
        return out


Mode = Union[ExhaustiveMode, SampledMode]


@dataclass(frozen=True)
class ClassTally:
    both: int = 0
    spectral_only: int = 0
    tile_only: int = 0
    neither: int = 0

    @property
    def total(self) -> int:
        return self.both + self.spectral_only + self.tile_only + self.neither


@dataclass(frozen=True)
class Violation:
    """A subset where the spectral and tile decisions disagree."""

    subject: SubsetMask
    spectral: bool
    tile: bool
    spectrum: Optional[SubsetMask]
    complement: Optional[SubsetMask]
    spectrum_nodes: int
    complement_nodes: int


@dataclass(frozen=True)
class ConjectureReport:
    group: GroupSpec
    mode: Mode
    tallies: tuple[tuple[SizeClass, ClassTally], ...]
    violations: tuple[Violation, ...]
    orbits_scanned: int

    @property
    def violation_count(self) -> int:
        return len(self.violations)

    @property
    def subjects_tallied(self) -> int:
        return sum(t.total for _, t in self.tallies)

    def render(self) -> str:
        lines = [
            f"group: p={self.group.p} q={self.group.q} (n={self.group.n})",
            f"mode: {self.mode.describe()}",
            f"scanned: {self.orbits_scanned}",
            f"{'class':<8}{'both':>12}{'spectral-only':>16}{'tile-only':>12}{'neither':>12}",
        ]
        for cls, t in self.tallies:
            lines.append(
                f"{cls.label:<8}{t.both:>12}{t.spectral_only:>16}{t.tile_only:>12}{t.neither:>12}"
            )
        lines.append(f"violations: {self.violation_count}")
        for v in self.violations:
            lines.append(
                f"  subject={_render_elements(v.subject)} spectral={v.spectral} tile={v.tile}"
            )
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "group": {"p": self.group.p, "q": self.group.q, "n": self.group.n},
            "mode": self.mode.describe(),
            "scanned": self.orbits_scanned,
            "classes": [
                {
                    "m": cls.m,
                    "label": cls.label,
                    "both": t.both,
                    "spectral_only": t.spectral_only,
                    "tile_only": t.tile_only,
                    "neither": t.neither,
                }
                for cls, t in self.tallies
            ],
            "violations": [
                {
                    "subject": [[list(g[:2]), g[2]] for g in v.subject.elements()],
                    "spectral": v.spectral,
                    "tile": v.tile,
                    "spectrum_nodes": v.spectrum_nodes,
                    "complement_nodes": v.complement_nodes,
                }
                for v in self.violations
            ],
        }


def _render_elements(s: SubsetMask) -> str:
    return "[" + ",".join(f"[[{g.u1},{g.u2}],{g.v}]" for g in s.elements()) + "]"


# -- subset classification -------------------------------------------------------


def _classify_bits(
    spec: GroupSpec, bits: int
) -> tuple[Optional[int], int, Optional[int], int]:
    """(spectrum bits | None, nodes, complement bits | None, nodes)."""
    if bits == 0:
        return None, 0, None, 0
    sp_w, sp_n = _spectral_bits(spec, bits)
    ti_w, ti_n = _complement_bits(spec, bits)
    return sp_w, sp_n, ti_w, ti_n


_RawViolation = tuple[int, bool, bool, Optional[int], Optional[int], int, int]


def _scan_range(
    spec: GroupSpec, lo: int, hi: int, size: Optional[int]
) -> tuple[dict[int, list[int]], list[_RawViolation], int]:
    n = spec.n
    tallies: dict[int, list[int]] = {d: [0, 0, 0, 0] for d in _divisors(n)}
    violations: list[_RawViolation] = []
    scanned = 0
    gcd = math.gcd
    for bits in range(lo, hi):
        card = bits.bit_count()
        if size is not None and card != size:
            continue
        scanned += 1
        sp_w, sp_n, ti_w, ti_n = _classify_bits(spec, bits)
        spectral = sp_w is not None
        tile = ti_w is not None
        cat = (0 if tile else 1) if spectral else (2 if tile else 3)
        tallies[gcd(n, card)][cat] += 1
        if spectral != tile:
            violations.append((bits, spectral, tile, sp_w, ti_w, sp_n, ti_n))
    return tallies, violations, scanned


def _sample_range(
    spec: GroupSpec, seed: int, lo: int, hi: int, size: Optional[int]
) -> tuple[dict[int, list[int]], list[_RawViolation], int]:
    """Scan sampled trials lo..hi-1; trial i is seeded by batch_seed(seed, i)."""
    n = spec.n
    divisors = _divisors(n)
    nondivisors = [s for s in range(1, n + 1) if n % s]
    tallies: dict[int, list[int]] = {d: [0, 0, 0, 0] for d in divisors}
    violations: list[_RawViolation] = []
    gcd = math.gcd
    for trial in range(lo, hi):
        rng = SplitMix64(batch_seed(seed, trial))
        if size is not None:
            card = size
        else:
            pool = list(divisors)
            for _ in range(3):
                pool.append(nondivisors[rng.below(len(nondivisors))])
            card = pool[rng.below(len(pool))]
        bits = rng.sample_bits(n, card)
        sp_w, sp_n, ti_w, ti_n = _classify_bits(spec, bits)
        spectral = sp_w is not None
        tile = ti_w is not None
        cat = (0 if tile else 1) if spectral else (2 if tile else 3)
        tallies[gcd(n, card)][cat] += 1
        if spectral != tile:
            violations.append((bits, spectral, tile, sp_w, ti_w, sp_n, ti_n))
    return tallies, violations, hi - lo


def _scan_chunk(args: tuple) -> tuple[dict[int, list[int]], list[_RawViolation], int]:
    kind, p, q, seed, lo, hi, size = args
    spec = GroupSpec(p, q)
    if kind == "exhaustive":
        return _scan_range(spec, lo, hi, size)
    return _sample_range(spec, seed, lo, hi, size)


def _merge_and_report(
    spec: GroupSpec,
    mode: Mode,
    parts: list[tuple[dict[int, list[int]], list[_RawViolation], int]],
) -> ConjectureReport:
    n = spec.n
    merged: dict[int, list[int]] = {d: [0, 0, 0, 0] for d in _divisors(n)}
    raw_violations: list[_RawViolation] = []
    scanned = 0
    for tallies, violations, count in parts:
        for m, row in tallies.items():
            acc = merged[m]
            for i in range(4):
                acc[i] += row[i]
        raw_violations.extend(violations)
        scanned += count
    raw_violations.sort(key=lambda v: v[0])
    out_tallies = tuple(
        (SizeClass(m, _class_label(m, spec)), ClassTally(*merged[m]))
        for m in _divisors(n)
    )
    out_violations = tuple(
        Violation(
            subject=SubsetMask(spec, bits),
            spectral=spectral,
            tile=tile,
            spectrum=SubsetMask(spec, sp_w) if sp_w is not None else None,
            complement=SubsetMask(spec, ti_w) if ti_w is not None else None,
            spectrum_nodes=sp_n,
            complement_nodes=ti_n,
        )
        for bits, spectral, tile, sp_w, ti_w, sp_n, ti_n in raw_violations
    )
    return ConjectureReport(
        group=spec,
        mode=mode,
        tallies=out_tallies,
        violations=out_violations,
        orbits_scanned=scanned,
    )


def verify_conjecture(
    spec: GroupSpec,
    mode: Mode,
    *,
    exhaustive_cap: int = DEFAULT_EXHAUSTIVE_CAP,
    orbit_cap: int = DEFAULT_ORBIT_CAP,
    workers: int = 1,
) -> ConjectureReport:
    """Check spectral <=> tile over the requested scan and tally by class.

    Any subset where the two decisions disagree is recorded as a violation
    together with both search exhaustion records.
    """
    n = spec.n
    if isinstance(mode, ExhaustiveMode):
        if mode.use_orbits:
            if n > orbit_cap:
                raise GroupTooLargeForExhaustiveError(
                    f"n = {n} exceeds the orbit-reduced cap of {orbit_cap}"
                )
            return _verify_orbits(spec, mode)
        if n > exhaustive_cap:
            raise GroupTooLargeForExhaustiveError(
                f"n = {n} exceeds the exhaustive cap of {exhaustive_cap}; "
                "use orbit reduction or sampled mode"
            )
        total = 1 << n
        chunks = _split_range(total, workers)
        jobs = [("exhaustive", spec.p, spec.q, 0, lo, hi, mode.size) for lo, hi in chunks]
    else:
        if mode.trials < 0:
            raise ValueError("trials must be nonnegative")
        chunks = _split_range(mode.trials, workers)
        jobs = [
            ("sampled", spec.p, spec.q, mode.seed, lo, hi, mode.size)
            for lo, hi in chunks
        ]
    if workers <= 1 or len(jobs) <= 1:
        parts = [_scan_chunk(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_chunk, jobs))
    return _merge_and_report(spec, mode, parts)


def _split_range(total: int, workers: int) -> list[tuple[int, int]]:
    if total == 0:
        return [(0, 0)]
    pieces = max(1, workers) * 4
    step = max(1, -(-total // pieces))
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _verify_orbits(spec: GroupSpec, mode: ExhaustiveMode) -> ConjectureReport:
    n = spec.n
    tallies: dict[int, list[int]] = {d: [0, 0, 0, 0] for d in _divisors(n)}
    violations: list[_RawViolation] = []
    scanned = 0
    gcd = math.gcd
    for rep_bits, orbit_size, _ in _orbit_stream(spec):
        card = rep_bits.bit_count()
        if mode.size is not None and card != mode.size:
            continue
        scanned += 1
        sp_w, sp_n, ti_w, ti_n = _classify_bits(spec, rep_bits)
        spectral = sp_w is not None
        tile = ti_w is not None
        cat = (0 if tile else 1) if spectral else (2 if tile else 3)
        tallies[gcd(n, card)][cat] += orbit_size
        if spectral != tile:
            violations.append((rep_bits, spectral, tile, sp_w, ti_w, sp_n, ti_n))
    parts = [(tallies, violations, scanned)]
    return _merge_and_report(spec, mode, parts)


# -- orbit enumeration -----------------------------------------------------------


def _primitive_root(m: int) -> int:
    if m == 2:
        return 1
    for g in range(2, m):
        x, order = g, 1
        while x != 1:
            x = x * g % m
            order += 1
        if order == m - 1:
            return g
    raise ValueError(f"{m} is not prime")


def _generator_perms(spec: GroupSpec) -> list[tuple[int, ...]]:
    """Index permutations generating the affine symmetry group."""
    p, q = spec.p, spec.q
    maps = [
        AffineMap(spec, ((1, 0), (0, 1)), 1, Element(1, 0, 0)),
        AffineMap(spec, ((1, 0), (0, 1)), 1, Element(0, 1, 0)),
        AffineMap(spec, ((1, 0), (0, 1)), 1, Element(0, 0, 1)),
        AffineMap(spec, ((1, 1), (0, 1)), 1, spec.zero()),
        AffineMap(spec, ((0, p - 1), (1, 0)), 1, spec.zero()),
    ]
    gp = _primitive_root(p)
    if gp != 1:
        maps.append(AffineMap(spec, ((gp, 0), (0, 1)), 1, spec.zero()))
    gq = _primitive_root(q)
    if gq != 1:
        maps.append(AffineMap(spec, ((1, 0), (0, 1)), gq, spec.zero()))
    return [m.index_perm() for m in maps]


def _permute_bits(bits: int, perm: tuple[int, ...]) -> int:
    out = 0
    while bits:
        b = bits & -bits
        out |= 1 << perm[b.bit_length() - 1]
        bits ^= b
    return out


def _orbit_stream(spec: GroupSpec) -> Iterator[tuple[int, int, int]]:
    """(representative bits, orbit size, minimum bits) per affine orbit.

    The representative is the smallest orbit member containing element 0
    (the empty set for the empty orbit); the stream is ordered by the
    orbit's minimal member.  Memory is one byte per subset of G.
    """
    n = spec.n
    perms = _generator_perms(spec)
    total = 1 << n
    seen = bytearray(total)
    for start in range(total):
        if seen[start]:
            continue
        seen[start] = 1
        stack = [start]
        size = 0
        best0 = start if start & 1 else None
        while stack:
            cur = stack.pop()
            size += 1
            if cur & 1 and (best0 is None or cur < best0):
                best0 = cur
            for perm in perms:
                img = _permute_bits(cur, perm)
                if not seen[img]:
                    seen[img] = 1
                    stack.append(img)
        yield (best0 if start else 0, size, start)


def enumerate_representatives(
    spec: GroupSpec, size: Optional[int] = None, cap: int = DEFAULT_EXHAUSTIVE_CAP
) -> Iterator[SubsetMask]:
    """Exactly one subset per affine orbit, containing 0 when nonempty."""
    if spec.n > cap:
        raise GroupTooLargeForExhaustiveError(
            f"n = {spec.n} exceeds the representative-enumeration cap of {cap}"
        )
    for rep_bits, _, _ in _orbit_stream(spec):
        if size is not None and rep_bits.bit_count() != size:
            continue
        yield SubsetMask(spec, rep_bits)


def canonical_form(s: SubsetMask, cap: int = DEFAULT_SYMMETRY_CAP) -> SubsetMask:
    """Smallest bit vector in the affine orbit of S; constant on orbits."""
    best = s.bits
    for perm in _all_map_perms(s.spec, cap):
        img = _permute_bits(s.bits, perm)
        if img < best:
            best = img
    return SubsetMask(s.spec, best)


_perm_cache: dict[GroupSpec, tuple[tuple[int, ...], ...]] = {}


def _all_map_perms(spec: GroupSpec, cap: int) -> tuple[tuple[int, ...], ...]:
    cached = _perm_cache.get(spec)
    if cached is None:
        cached = tuple(m.index_perm() for m in enumerate_affine_maps(spec, cap))
        _perm_cache[spec] = cached
    return cached


# -- direction coverage ------------------------------------------------------------


def direction_coverage(s: SubsetMask) -> bool:
    """True iff every plane direction has a nonzero multiple inside S - S."""
    spec = s.spec
    p = spec.p
    dbits = difference_set(s).bits
    for a1, a2 in _char_tables(spec).directions:
        if not any(
            dbits >> spec.index(Element(c * a1 % p, c * a2 % p, 0)) & 1
            for c in range(1, p)
        ):
            return False
    return True


# -- lemma property suite -------------------------------------------------------------


@dataclass(frozen=True)
class LemmaResult:
    name: str
    trials: int
    failures: int
    counterexample: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass(frozen=True)
class PropertyReport:
    group: GroupSpec
    seed: int
    trials: int
    results: tuple[LemmaResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def render(self) -> str:
        lines = [
            f"group: p={self.group.p} q={self.group.q} (n={self.group.n})",
            f"seed: {self.seed}  trials: {self.trials}",
        ]
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {r.name} ({r.trials} trials)"
            if r.counterexample:
                line += f"  counterexample: {r.counterexample}"
            lines.append(line)
        return "\n".join(lines)


def _random_nonzero_pair(rng: SplitMix64, p: int) -> tuple[int, int]:
    while True:
        a = (rng.below(p), rng.below(p))
        if a != (0, 0):
            return a


def _check_corollary_divisibility(
    spec: GroupSpec, rng: SplitMix64, trials: int, van: Callable
) -> LemmaResult:
    """Vanishing at an order-p (order-q) character forces p | |M| (q | |M|)."""
    p, q, n = spec.p, spec.q, spec.n
    failures = 0
    cex = None
    for _ in range(trials):
        use_p = rng.below(2) == 0
        if use_p:
            a = _random_nonzero_pair(rng, p)
            chi = Element(a[0], a[1], 0)
            divisor = p
        else:
            chi = Element(0, 0, 1 + rng.below(q - 1))
            divisor = q
        counts = [0] * n
        if rng.below(3) < 2:
            # sums of full cosets: vanishing by construction
            for _ in range(1 + rng.below(4)):
                g = spec.element(rng.below(n))
                mult = 1 + rng.below(3)
                if use_p:
                    while True:
                        w = Element(rng.below(p), rng.below(p), 0)
                        if (w.u1 * chi.u1 + w.u2 * chi.u2) % p:
                            break
                    steps = p
                else:
                    w = Element(0, 0, 1)
                    steps = q
                cur = g
                for _ in range(steps):
                    counts[spec.index(cur)] += mult
                    cur = spec.add(cur, w)
        else:
            # noise: usually non-vanishing, exercises the rejection path
            for _ in range(1 + rng.below(8)):
                counts[rng.below(n)] += 1 + rng.below(3)
        m = Multiset(spec, tuple(counts))
        if van(chi, m) and m.total % divisor:
            failures += 1
            if cex is None:
                cex = f"chi={tuple(chi)} |M|={m.total} counts={counts}"
    return LemmaResult("corollary-divisibility", trials, failures, cex)


def _check_constant_multiset(
    spec: GroupSpec, rng: SplitMix64, trials: int
) -> LemmaResult:
    """M vanishes at every nonzero character iff M is constant."""
    n = spec.n
    failures = 0
    cex = None
    for _ in range(trials):
        if rng.below(2) == 0:
            m = Multiset.constant(spec, rng.below(4))
            bad = next(
                (i for i in range(1, n) if not charsums.vanishes(spec.element(i), m)),
                None,
            )
            if bad is not None:
                failures += 1
                if cex is None:
                    cex = f"constant {m.counts[0]} not vanishing at chi index {bad}"
        else:
            counts = [rng.below(4) for _ in range(n)]
            if min(counts) == max(counts):
                counts[rng.below(n)] += 1
            m = Multiset(spec, tuple(counts))
            if all(charsums.vanishes(spec.element(i), m) for i in range(1, n)):
                failures += 1
                if cex is None:
                    cex = f"non-constant multiset vanishing everywhere: {counts}"
    return LemmaResult("constant-multiset", trials, failures, cex)


def _check_coset_decomposition(
    spec: GroupSpec, rng: SplitMix64, trials: int
) -> LemmaResult:
    """Round trip y_j + x_k matrices; reject non-vanishing ones."""
    p, q = spec.p, spec.q
    failures = 0
    cex = None
    for _ in range(trials):
        x = [rng.below(6) for _ in range(q)]
        y = [rng.below(6) for _ in range(p)]
        c = charsums.CoefficientMatrix(
            p, q, tuple(tuple(yj + xk for xk in x) for yj in y)
        )
        try:
            d = lam_leung(c)
            ok = (
                d.reconstruct() == c
                and p * sum(d.x) + q * sum(d.y) == c.total
                and min(d.y) == 0
            )
        except NotVanishingError:
            ok = False
        if not ok:
            failures += 1
            if cex is None:
                cex = f"x={x} y={y}"
            continue
        rows = [[rng.below(6) for _ in range(q)] for _ in range(p)]
        c2 = charsums.CoefficientMatrix(p, q, tuple(tuple(r) for r in rows))
        if not charsums._separable(c2):
            try:
                lam_leung(c2)
            except NotVanishingError:
                pass
            else:
                failures += 1
                if cex is None:
                    cex = f"non-vanishing matrix accepted: {rows}"
    return LemmaResult("coset-decomposition", trials, failures, cex)


def _check_subgroup_spectrum(
    spec: GroupSpec, rng: SplitMix64, trials: int
) -> LemmaResult:
    """Any transversal of a subgroup is spectral with the complement subgroup."""
    p, q, n = spec.p, spec.q, spec.n
    failures = 0
    cex = None
    for _ in range(trials):
        gens = []
        plane_kind = rng.below(3)
        if plane_kind == 1:
            w = _random_nonzero_pair(rng, p)
            gens.append(Element(w[0], w[1], 0))
        elif plane_kind == 2:
            gens += [Element(1, 0, 0), Element(0, 1, 0)]
        if rng.below(2):
            gens.append(Element(0, 0, 1))
        b = span(spec, gens)
        # random transversal: one element per coset of B
        covered = 0
        abits = 0
        for i in range(n):
            if covered >> i & 1:
                continue
            coset = translate_bits(spec, b.bits, i)
            members = list(iter_bits(coset))
            abits |= 1 << members[rng.below(len(members))]
            covered |= coset
        a = SubsetMask(spec, abits)
        try:
            subgroup_complement_spectrum(a, b)
        except Exception as exc:  # any failure disproves the lemma check
            failures += 1
            if cex is None:
                cex = f"B={sorted(b.indices())} A={sorted(a.indices())}: {exc}"
    return LemmaResult("subgroup-spectrum", trials, failures, cex)


def lemma_suite(
    spec: GroupSpec,
    seed: int,
    trials: int,
    vanishes_fn: Optional[Callable] = None,
) -> PropertyReport:
    """Randomized property checks for the structural lemmas.

    `vanishes_fn` replaces the vanishing decision inside the divisibility
    check only; it exists so the harness can demonstrate that an injected
    bug is actually caught.
    """
    van = vanishes_fn if vanishes_fn is not None else charsums.vanishes
    results = (
        _check_corollary_divisibility(
            spec, SplitMix64(batch_seed(seed, 1)), trials, van
        ),
        _check_constant_multiset(spec, SplitMix64(batch_seed(seed, 2)), trials),
        _check_coset_decomposition(spec, SplitMix64(batch_seed(seed, 3)), trials),
        _check_subgroup_spectrum(spec, SplitMix64(batch_seed(seed, 4)), trials),
    )
    return PropertyReport(group=spec, seed=seed, trials=trials, results=results)

"""Independent brute-force oracles for the test suite.

These deliberately avoid the library's search machinery: candidate
witnesses are enumerated exhaustively with itertools, spectra are checked
through per-character vanishing, and tilings through direct sumset
counting on plain Python sets.  Slow and dumb on purpose.
"""

from __future__ import annotations

import json
from itertools import combinations
from pathlib import Path

from spectile import Multiset, SubsetMask, vanishes

DATA_DIR = Path(__file__).parent / "data"


def sub_index(spec, x: int, y: int) -> int:
    return spec.index(spec.sub(spec.element(x), spec.element(y)))


def add_index(spec, x: int, y: int) -> int:
    return spec.index(spec.add(spec.element(x), spec.element(y)))


def brute_zero_set(s: SubsetMask) -> set[int]:
    spec = s.spec
    ind = Multiset.from_subset(s)
    return {i for i in range(1, spec.n) if vanishes(spec.element(i), ind)}


def brute_find_spectrum(s: SubsetMask):
    """First |S|-subset containing 0 whose differences all vanish on S."""
    spec = s.spec
    m = s.card
    if m == 0:
        return None
    if m == 1:
        return (0,)
    n = spec.n
    z = brute_zero_set(s)
    subtab = [[sub_index(spec, x, y) for y in range(n)] for x in range(n)]
    for combo in combinations(range(1, n), m - 1):
        lam = (0,) + combo
        ok = True
        for i in range(m):
            row = subtab[lam[i]]
            for j in range(i + 1, m):
                if row[lam[j]] not in z:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return lam
    return None


def brute_find_complement(s: SubsetMask):
    """First complement containing 0 found by direct sumset counting."""
    spec = s.spec
    n = spec.n
    m = s.card
    if m == 0 or n % m:
        return None
    tsize = n // m
    sidx = s.indices()
    addtab = [[add_index(spec, x, y) for y in range(n)] for x in sidx]
    if tsize == 1:
        return (0,) if m == n else None
    for combo in combinations(range(1, n), tsize - 1):
        t = (0,) + combo
        seen = set()
        ok = True
        for ti in t:
            for row in addtab:
                x = row[ti]
                if x in seen:
                    ok = False
                    break
                seen.add(x)
            if not ok:
                break
        if ok and len(seen) == n:
            return t
    return None


def brute_is_spectral(s: SubsetMask) -> bool:
    return brute_find_spectrum(s) is not None


def brute_is_tile(s: SubsetMask) -> bool:
    return brute_find_complement(s) is not None


def generate_regression_fixture(path: Path) -> dict:
    """Counts of spectral sets and tiles by cardinality for p=2, q=3,
    computed by the brute-force oracles above.  Run once; the JSON output
    is frozen under version control and later runs must reproduce it."""
    from spectile import Element, make_group

    spec = make_group(2, 3)
    n = spec.n
    spectral_by_card = [0] * (n + 1)
    tile_by_card = [0] * (n + 1)
    for bits in range(1 << n):
        s = SubsetMask(spec, bits)
        card = s.card
        if brute_is_spectral(s):
            spectral_by_card[card] += 1
        if brute_is_tile(s):
            tile_by_card[card] += 1

    two_with_zero = []
    for i in range(1, n):
        s = SubsetMask(spec, 1 | (1 << i))
        g = spec.element(i)
        two_with_zero.append(
            {
                "element": [[g.u1, g.u2], g.v],
                "order": spec.order(g),
                "spectral": brute_is_spectral(s),
                "tile": brute_is_tile(s),
            }
        )
    doc = {
        "group": {"p": 2, "q": 3},
        "spectral_by_card": spectral_by_card,
        "tile_by_card": tile_by_card,
        "two_element_sets_with_zero": two_with_zero,
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    return doc


if __name__ == "__main__":
    out = DATA_DIR / "regression_p2_q3.json"
    doc = generate_regression_fixture(out)
    print("spectral by card:", doc["spectral_by_card"])
    print("tile by card:    ", doc["tile_by_card"])
    two = doc["two_element_sets_with_zero"]
    print(
        "two-element sets with 0:",
        sum(e["spectral"] for e in two),
        "spectral,",
        sum(e["tile"] for e in two),
        "tiles, of",
        len(two),
    )

import random

import pytest

from spectile import (
    Element,
    Multiset,
    NoComplement,
    NotASubgroupError,
    SubsetMask,
    TilingCertificate,
    apply_map,
    cyclic_subgroup,
    enumerate_affine_maps,
    find_complement,
    is_subgroup,
    is_tile,
    make_group,
    subgroup_complement,
    vanishes,
    verify_tiling,
)

from oracles import brute_find_complement, brute_is_tile

G23 = make_group(2, 3)
G32 = make_group(3, 2)
PLANE = SubsetMask.from_elements(
    G23, [Element(u1, u2, 0) for u1 in range(2) for u2 in range(2)]
)
ZQ = SubsetMask.from_elements(G23, [Element(0, 0, v) for v in range(3)])


def test_verify_tiling_examples():
    assert verify_tiling(ZQ, PLANE)
    assert verify_tiling(PLANE, ZQ)
    assert verify_tiling(
        SubsetMask.full(G23), SubsetMask.from_elements(G23, [Element(0, 0, 0)])
    )
    assert not verify_tiling(ZQ, ZQ)
    assert not verify_tiling(SubsetMask.empty(G23), SubsetMask.full(G23))
    # wrong cardinality product
    assert not verify_tiling(PLANE, PLANE)


def test_no_size_six_complement_for_order_three_pair():
    s = SubsetMask.from_elements(G23, [Element(0, 0, 0), Element(0, 0, 1)])
    res = find_complement(s)
    assert isinstance(res, NoComplement)
    assert brute_find_complement(s) is None
    # spot-check one size-6 candidate directly
    t = SubsetMask.from_indices(G23, [0, 1, 2, 3, 4, 5])
    assert not verify_tiling(s, t)


def test_find_complement_examples():
    s = SubsetMask.from_elements(G23, [Element(0, 0, 0), Element(1, 0, 0)])
    cert = find_complement(s)
    assert isinstance(cert, TilingCertificate)
    assert cert.T.card == 6 and Element(0, 0, 0) in cert.T
    assert verify_tiling(s, cert.T)

    zero = SubsetMask.from_elements(G23, [Element(0, 0, 0)])
    cert = find_complement(zero)
    assert cert.T == SubsetMask.full(G23)

    full = SubsetMask.full(G23)
    cert = find_complement(full)
    assert cert.T == zero

    with pytest.raises(ValueError):
        find_complement(SubsetMask.empty(G23))
    assert not is_tile(SubsetMask.empty(G23))


def test_verify_tiling_symmetric():
    rng = random.Random(61)
    for _ in range(200):
        s = SubsetMask(G23, rng.getrandbits(12))
        t = SubsetMask(G23, rng.getrandbits(12))
        assert verify_tiling(s, t) == verify_tiling(t, s)


def test_subgroup_complement_examples():
    b = cyclic_subgroup(G32, Element(1, 0, 0))
    comp = subgroup_complement(b)
    assert comp.card == 6
    assert is_subgroup(comp)
    assert Element(0, 0, 1) in comp
    assert any(g.v == 0 and (g.u1, g.u2) != (0, 0) for g in comp.elements())
    assert verify_tiling(b, comp)

    trivial = SubsetMask.from_elements(G32, [Element(0, 0, 0)])
    assert subgroup_complement(trivial) == SubsetMask.full(G32)

    plane32 = SubsetMask.from_elements(
        G32, [Element(u1, u2, 0) for u1 in range(3) for u2 in range(3)]
    )
    zq32 = SubsetMask.from_elements(G32, [Element(0, 0, v) for v in range(2)])
    assert subgroup_complement(plane32) == zq32

    with pytest.raises(NotASubgroupError):
        subgroup_complement(SubsetMask.from_elements(G32, [Element(0, 0, 1)]))


def test_divisor_coverage():
    # a subgroup of every divisor order exists and tiles with its complement
    for spec in (G23, G32):
        orders_seen = set()
        for bits in range(1 << spec.n):
            s = SubsetMask(spec, bits)
            if s.card and is_subgroup(s):
                comp = subgroup_complement(s)
                assert verify_tiling(s, comp)
                orders_seen.add(s.card)
        n = spec.n
        assert orders_seen == {d for d in range(1, n + 1) if n % d == 0}


def test_translation_and_automorphism_invariance():
    rng = random.Random(67)
    autos = [m for m in enumerate_affine_maps(G23) if m.t == G23.zero()]
    for _ in range(20):
        s = SubsetMask(G23, rng.getrandbits(12) | 1)
        base = is_tile(s)
        for g in G23.elements():
            assert is_tile(s.translate(g)) == base
        for m in autos[::7]:
            assert is_tile(apply_map(m, s)) == base


def test_fourier_product_identity_on_found_tilings():
    rng = random.Random(71)
    checked = 0
    for _ in range(200):
        s = SubsetMask(G23, rng.getrandbits(12) | 1)
        res = find_complement(s)
        if isinstance(res, TilingCertificate):
            si = Multiset.from_subset(s)
            ti = Multiset.from_subset(res.T)
            for i in range(1, G23.n):
                chi = G23.element(i)
                assert vanishes(chi, si) or vanishes(chi, ti)
            checked += 1
    assert checked > 15


def test_search_agrees_with_brute_oracle_sample():
    rng = random.Random(73)
    for _ in range(60):
        s = SubsetMask(G23, rng.getrandbits(12) | 1)
        assert is_tile(s) == brute_is_tile(s)


def test_exhaustion_records_are_deterministic():
    s = SubsetMask.from_elements(G23, [Element(0, 0, 0), Element(0, 0, 1)])
    r1 = find_complement(s)
    r2 = find_complement(s)
    assert isinstance(r1, NoComplement)
    assert r1.nodes_explored == r2.nodes_explored

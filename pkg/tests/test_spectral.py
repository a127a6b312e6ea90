import random

import pytest

from spectile import (
    Element,
    NoSpectrum,
    NotASubgroupError,
    NotATilingError,
    SpectralCertificate,
    SubsetMask,
    apply_map,
    cyclic_subgroup,
    enumerate_affine_maps,
    find_spectrum,
    is_spectral,
    is_subgroup,
    make_group,
    span,
    subgroup_complement_spectrum,
    verify_spectral_pair,
)

from oracles import brute_find_spectrum, brute_is_spectral

G23 = make_group(2, 3)
PLANE = SubsetMask.from_elements(
    G23, [Element(u1, u2, 0) for u1 in range(2) for u2 in range(2)]
)
ZQ = SubsetMask.from_elements(G23, [Element(0, 0, v) for v in range(3)])


def test_verify_spectral_pair_examples():
    assert verify_spectral_pair(PLANE, PLANE)
    singleton = SubsetMask.from_elements(G23, [Element(0, 0, 0)])
    assert verify_spectral_pair(singleton, singleton)
    s = SubsetMask.from_elements(G23, [Element(0, 0, 0), Element(1, 0, 0)])
    lam = SubsetMask.from_elements(G23, [Element(0, 0, 0), Element(0, 0, 1)])
    assert not verify_spectral_pair(s, lam)
    assert not verify_spectral_pair(s, PLANE)  # size mismatch
    assert not verify_spectral_pair(SubsetMask.empty(G23), SubsetMask.empty(G23))


def test_find_spectrum_examples():
    s = SubsetMask.from_elements(G23, [Element(0, 0, 0), Element(1, 0, 0)])
    cert = find_spectrum(s)
    assert isinstance(cert, SpectralCertificate)
    assert cert.Lambda.card == 2 and Element(0, 0, 0) in cert.Lambda
    assert verify_spectral_pair(s, cert.Lambda)

    s = SubsetMask.from_elements(G23, [Element(0, 0, 0), Element(0, 0, 1)])
    res = find_spectrum(s)
    assert isinstance(res, NoSpectrum)
    assert brute_find_spectrum(s) is None

    full = SubsetMask.full(G23)
    cert = find_spectrum(full)
    assert isinstance(cert, SpectralCertificate)
    assert cert.Lambda == full

    with pytest.raises(ValueError):
        find_spectrum(SubsetMask.empty(G23))
    assert not is_spectral(SubsetMask.empty(G23))


def test_first_certificate_is_deterministic():
    s = PLANE
    cert1 = find_spectrum(s)
    cert2 = find_spectrum(s)
    assert cert1 == cert2
    assert cert1.Lambda == PLANE  # ascending-index search lands on the plane itself


def test_duality_of_found_pairs():
    rng = random.Random(43)
    found = 0
    for _ in range(300):
        s = SubsetMask(G23, rng.getrandbits(12) | 1)
        res = find_spectrum(s)
        if isinstance(res, SpectralCertificate):
            assert verify_spectral_pair(res.Lambda, res.S)
            found += 1
    assert found > 10


def test_translation_invariance():
    rng = random.Random(47)
    for _ in range(40):
        s = SubsetMask(G23, rng.getrandbits(12))
        if s.card == 0:
            continue
        base = is_spectral(s)
        for g in G23.elements():
            assert is_spectral(s.translate(g)) == base


def test_translated_pairs_still_verify():
    s = SubsetMask.from_elements(G23, [Element(0, 0, 0), Element(1, 0, 0)])
    cert = find_spectrum(s)
    for g in G23.elements():
        for h in G23.elements():
            assert verify_spectral_pair(s.translate(g), cert.Lambda.translate(h))


def test_automorphism_invariance_on_small_group():
    rng = random.Random(53)
    autos = [m for m in enumerate_affine_maps(G23) if m.t == G23.zero()]
    for _ in range(25):
        s = SubsetMask(G23, rng.getrandbits(12) | 1)
        base = is_spectral(s)
        for m in autos:
            assert is_spectral(apply_map(m, s)) == base


def test_every_subgroup_is_spectral():
    for spec in (G23, make_group(3, 2)):
        count = 0
        for bits in range(1 << spec.n):
            s = SubsetMask(spec, bits)
            if s.card and is_subgroup(s):
                assert is_spectral(s)
                count += 1
        # subgroup lattice: (2 + p+1) plane subgroups x 2 choices of q-part
        assert count == (spec.p + 3) * 2


def test_subgroup_complement_spectrum_examples():
    # transversal of the embedded Z_q: shift members of each coset freely
    a = SubsetMask.from_elements(
        G23,
        [Element(0, 0, 0), Element(0, 1, 1), Element(1, 0, 0), Element(1, 1, 2)],
    )
    cert = subgroup_complement_spectrum(a, ZQ)
    assert cert.Lambda == PLANE
    assert verify_spectral_pair(a, cert.Lambda)

    zero = SubsetMask.from_elements(G23, [Element(0, 0, 0)])
    cert = subgroup_complement_spectrum(zero, SubsetMask.full(G23))
    assert cert.Lambda == zero

    b = cyclic_subgroup(G23, Element(1, 0, 0))
    a = SubsetMask.from_elements(
        G23,
        [
            Element(0, 0, 0),
            Element(0, 1, 0),
            Element(0, 0, 1),
            Element(0, 1, 1),
            Element(0, 0, 2),
            Element(0, 1, 2),
        ],
    )
    cert = subgroup_complement_spectrum(a, b)
    assert cert.Lambda.card == 6
    assert is_subgroup(cert.Lambda)
    assert Element(0, 1, 0) in cert.Lambda and Element(0, 0, 1) in cert.Lambda


def test_subgroup_complement_spectrum_errors():
    not_subgroup = SubsetMask.from_elements(G23, [Element(0, 0, 0), Element(0, 0, 1)])
    with pytest.raises(NotASubgroupError):
        subgroup_complement_spectrum(PLANE, not_subgroup)
    with pytest.raises(NotATilingError):
        subgroup_complement_spectrum(PLANE, PLANE)


def test_search_agrees_with_brute_oracle_sample():
    rng = random.Random(59)
    for _ in range(60):
        s = SubsetMask(G23, rng.getrandbits(12) | 1)
        assert is_spectral(s) == brute_is_spectral(s)


def test_exhaustion_records_are_deterministic():
    s = SubsetMask.from_elements(G23, [Element(0, 0, 0), Element(0, 0, 1)])
    r1 = find_spectrum(s)
    r2 = find_spectrum(s)
    assert isinstance(r1, NoSpectrum)
    assert r1.nodes_explored == r2.nodes_explored

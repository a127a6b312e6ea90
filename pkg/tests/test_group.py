import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectile import (
    AffineMap,
    Element,
    EqualPrimesError,
    GroupSpec,
    Multiset,
    NotPrimeError,
    SubsetMask,
    SymmetryGroupTooLargeError,
    apply_map,
    cyclic_subgroup,
    difference_multiset,
    difference_set,
    enumerate_affine_maps,
    inner_p,
    is_subgroup,
    make_group,
    span,
)

G23 = make_group(2, 3)
G32 = make_group(3, 2)


def test_make_group_examples():
    assert make_group(2, 3) == GroupSpec(2, 3)
    assert make_group(2, 3).n == 12
    assert make_group(3, 2).n == 18
    with pytest.raises(NotPrimeError):
        make_group(4, 3)
    with pytest.raises(NotPrimeError):
        make_group(3, 9)
    with pytest.raises(EqualPrimesError):
        make_group(5, 5)


def test_add_neg_examples():
    g = G32
    assert g.add(Element(1, 2, 1), Element(2, 2, 1)) == Element(0, 1, 0)
    assert g.neg(Element(0, 0, 0)) == Element(0, 0, 0)
    assert g.neg(Element(1, 0, 1)) == Element(2, 0, 1)


def test_index_roundtrip():
    for spec in (G23, G32, make_group(5, 3)):
        for i in range(spec.n):
            assert spec.index(spec.element(i)) == i
        seen = {spec.index(g) for g in spec.elements()}
        assert seen == set(range(spec.n))


@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 1),
       st.integers(0, 2), st.integers(0, 2), st.integers(0, 1))
def test_group_laws(a1, a2, av, b1, b2, bv):
    g = G32
    x, y = Element(a1, a2, av), Element(b1, b2, bv)
    assert g.add(x, y) == g.add(y, x)
    assert g.add(x, g.neg(x)) == g.zero()
    assert g.sub(x, y) == g.add(x, g.neg(y))


def test_order_examples():
    g = G32
    assert g.order(Element(0, 0, 0)) == 1
    assert g.order(Element(1, 0, 0)) == 3
    assert g.order(Element(1, 2, 1)) == 6


def test_order_classes_partition():
    for spec in (G23, G32, make_group(5, 2)):
        p, q = spec.p, spec.q
        counts = {1: 0, p: 0, q: 0, p * q: 0}
        for g in spec.elements():
            counts[spec.order(g)] += 1
        assert counts == {
            1: 1,
            p: p * p - 1,
            q: q - 1,
            p * q: (p * p - 1) * (q - 1),
        }


def test_inner_p_examples():
    assert inner_p((1, 2), (3, 1), 5) == 0
    assert inner_p((0, 0), (4, 4), 5) == 0
    assert inner_p((1, 1), (1, 1), 5) == 2


def test_char_exponents_examples():
    g = G32
    assert g.char_exponents(Element(1, 0, 1), Element(1, 2, 1)) == (1, 1)
    for e in g.elements():
        assert g.char_exponents(Element(0, 0, 0), e) == (0, 0)
    assert g.char_exponents(Element(1, 1, 0), Element(2, 1, 1)) == (0, 0)


def test_char_exponents_symmetric():
    g = G32
    for chi in g.elements():
        for x in g.elements():
            assert g.char_exponents(chi, x) == g.char_exponents(x, chi)


def test_cyclic_subgroup_examples():
    s = cyclic_subgroup(G23, Element(0, 0, 0))
    assert s.card == 1 and Element(0, 0, 0) in s
    assert cyclic_subgroup(G23, Element(1, 0, 1)).card == 6
    assert span(G23, [Element(1, 0, 0), Element(0, 1, 0)]).card == 4


def test_subgroups_closed():
    for g in (Element(1, 0, 1), Element(0, 1, 0), Element(1, 1, 2)):
        s = cyclic_subgroup(G23, g)
        assert is_subgroup(s)
    assert is_subgroup(span(G32, [Element(1, 0, 0), Element(0, 0, 1)]))
    assert not is_subgroup(SubsetMask.from_elements(G23, [Element(0, 0, 1)]))
    assert not is_subgroup(
        SubsetMask.from_elements(G23, [Element(0, 0, 0), Element(0, 0, 1)])
    )


def test_difference_multiset_examples():
    d = difference_multiset(SubsetMask.from_elements(G23, [Element(0, 0, 0)]))
    assert d.count_of(Element(0, 0, 0)) == 1 and d.total == 1

    s = SubsetMask.from_elements(G23, [Element(0, 0, 0), Element(1, 0, 0)])
    d = difference_multiset(s)
    assert d.count_of(Element(0, 0, 0)) == 2
    assert d.count_of(Element(1, 0, 0)) == 2
    assert d.total == 4

    d = difference_multiset(SubsetMask.full(G23))
    assert all(c == 12 for c in d.counts)


def test_difference_multiset_total_is_card_squared():
    s = SubsetMask.from_indices(G32, [0, 3, 7, 11, 16])
    d = difference_multiset(s)
    assert d.total == 25
    assert d.count_of(Element(0, 0, 0)) == 5


def test_affine_map_counts():
    def brute_gl2(p):
        return sum(
            1
            for a in range(p)
            for b in range(p)
            for c in range(p)
            for d in range(p)
            if (a * d - b * c) % p
        )

    assert brute_gl2(2) == 6
    assert brute_gl2(3) == 48
    assert sum(1 for _ in enumerate_affine_maps(G23)) == 6 * 2 * 12
    assert sum(1 for _ in enumerate_affine_maps(G32)) == 48 * 1 * 18


def test_affine_map_cap():
    with pytest.raises(SymmetryGroupTooLargeError):
        list(enumerate_affine_maps(G23, cap=10))


def test_affine_identity_and_validation():
    ident = AffineMap.identity(G23)
    s = SubsetMask.from_indices(G23, [0, 5, 7])
    assert apply_map(ident, s) == s
    with pytest.raises(ValueError):
        AffineMap(G23, ((1, 0), (2, 0)), 1, G23.zero())  # singular mod 2
    with pytest.raises(ValueError):
        AffineMap(G23, ((1, 0), (0, 1)), 0, G23.zero())  # r not a unit


def test_apply_map_preserves_structure():
    import random

    rng = random.Random(5)
    maps = list(enumerate_affine_maps(G23))
    for _ in range(25):
        s = SubsetMask(G23, rng.getrandbits(12))
        m = maps[rng.randrange(len(maps))]
        image = apply_map(m, s)
        assert image.card == s.card
        if m.t == G23.zero():
            assert difference_set(image) == apply_map(m, difference_set(s))


def test_multiset_validation():
    with pytest.raises(ValueError):
        Multiset(G23, (0,) * 11)
    with pytest.raises(ValueError):
        Multiset(G23, (-1,) + (0,) * 11)
    m = Multiset.from_pairs(G23, [(Element(0, 0, 1), 3), (Element(1, 1, 2), 1)])
    assert m.total == 4
    assert m.support().card == 2


def test_subset_mask_basics():
    s = SubsetMask.from_elements(G23, [Element(0, 0, 0), Element(1, 1, 2)])
    assert len(s) == 2
    assert Element(0, 0, 0) in s and Element(1, 0, 0) not in s
    assert s.complement().card == 10
    assert (s | s.complement()) == SubsetMask.full(G23)
    t = s.translate(Element(1, 0, 0))
    assert t.card == 2 and Element(1, 0, 0) in t
    with pytest.raises(ValueError):
        SubsetMask(G23, 1 << 12)
    with pytest.raises(ValueError):
        s | SubsetMask.empty(G32)

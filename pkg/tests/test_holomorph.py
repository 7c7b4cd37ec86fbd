import pytest

from hopfgalois.perm import parse_perm_list
from hopfgalois.group import (
    PermGroup,
    alternating_group,
    cyclic_group,
    dihedral_group,
    is_solvable,
    symmetric_group,
)
from hopfgalois.holomorph import (
    LabelledGroup,
    automorphism_group,
    holomorph,
    holomorph_is_solvable,
    regular_representation,
)
from hopfgalois.search import is_isomorphic, normalizer_in


def lab(G):
    return LabelledGroup.from_perm_group(G)


def test_labelled_group_identity_first_and_table_bijective():
    L = lab(symmetric_group(3))
    assert L.element_perms[0].is_identity()
    assert L.order == 6
    # associativity spot check
    for a in range(6):
        for b in range(6):
            for c in range(0, 6, 2):
                assert L.mul(L.mul(a, b), c) == L.mul(a, L.mul(b, c))


def test_regular_representation_is_regular():
    for G in (cyclic_group(6), symmetric_group(3), alternating_group(5)):
        rep = regular_representation(lab(G))
        assert rep.degree == G.order()
        assert rep.is_regular()
        assert rep.order() == G.order()


def test_regular_representation_c6_single_cycle():
    rep = regular_representation(lab(cyclic_group(6)))
    assert rep.gens[0].cycle_type() == (6,)


def test_automorphism_orders_from_the_degree5_chapter():
    assert automorphism_group(lab(cyclic_group(30))).order() == 8
    assert automorphism_group(lab(dihedral_group(15))).order() == 120
    F20 = PermGroup(parse_perm_list("(1,2,3,4,5);(2,3,5,4)", 5))
    assert automorphism_group(lab(F20)).order() == 20
    assert automorphism_group(lab(cyclic_group(20))).order() == 8
    C2_3 = PermGroup(parse_perm_list("(1,2);(3,4);(5,6)", 6))
    assert automorphism_group(lab(C2_3)).order() == 168


def test_automorphisms_fix_identity_and_respect_multiplication():
    L = lab(dihedral_group(5))
    aut = automorphism_group(L)
    assert aut.order() == 20
    for f in aut.elements():
        assert f(0) == 0
        for x in range(L.order):
            for y in range(L.order):
                assert f(L.mul(x, y)) == L.mul(f(x), f(y))


def test_holomorph_orders():
    assert holomorph(lab(cyclic_group(6))).order() == 12
    assert holomorph(lab(symmetric_group(3))).order() == 36
    assert holomorph(lab(dihedral_group(5))).order() == 200
    assert holomorph(lab(cyclic_group(10))).order() == 40


def test_holomorph_c6_is_dihedral():
    hol = holomorph(lab(cyclic_group(6)))
    assert is_isomorphic(hol, dihedral_group(6))[0]


def test_holomorph_s3_is_s3_squared():
    hol = holomorph(lab(symmetric_group(3)))
    S3 = symmetric_group(3)
    s3s3 = PermGroup(
        parse_perm_list("(1,2,3);(1,2);(4,5,6);(4,5)", 6)
    )
    assert is_isomorphic(hol, s3s3)[0]


def test_holomorph_a5():
    hol = holomorph(lab(alternating_group(5)))
    assert hol.order() == 7200
    assert not is_solvable(hol)
    # A5 x| S5: the translation copy is normal with S5 on top
    lam = regular_representation(lab(alternating_group(5)))
    for g in hol.gens:
        for x in lam.gens:
            assert (g * x * g.inverse()) in lam


def test_stabilizer_of_identity_is_aut():
    for G in (cyclic_group(8), dihedral_group(6), symmetric_group(3)):
        L = lab(G)
        hol = holomorph(L)
        aut = automorphism_group(L)
        assert hol.point_stabilizer(0).element_set() == aut.element_set()


def test_holomorph_order_formula():
    for G in (cyclic_group(12), dihedral_group(4), alternating_group(4)):
        L = lab(G)
        assert holomorph(L).order() == L.order * automorphism_group(L).order()


def test_holomorph_equals_normalizer_of_regular_image():
    # the defining property, checked exactly for small orders
    for G in (
        cyclic_group(6),
        symmetric_group(3),
        cyclic_group(8),
        dihedral_group(4),
        PermGroup(parse_perm_list("(1,2);(3,4);(5,6)", 6)),
        cyclic_group(10),
        dihedral_group(5),
        cyclic_group(12),
        dihedral_group(6),
        alternating_group(4),
    ):
        L = lab(G)
        rep = regular_representation(L)
        nor = normalizer_in(symmetric_group(rep.degree), rep)
        assert holomorph(L).element_set() == nor.element_set()


def test_holomorph_solvability_examples():
    assert holomorph_is_solvable(lab(cyclic_group(15)))
    assert holomorph_is_solvable(lab(cyclic_group(30)))
    assert holomorph_is_solvable(lab(dihedral_group(15)))
    assert not holomorph_is_solvable(lab(alternating_group(5)))
    C2_3xC5 = PermGroup(parse_perm_list("(1,2);(3,4);(5,6);(7,8,9,10,11)", 11))
    assert not holomorph_is_solvable(lab(C2_3xC5))


def test_holomorph_solvability_agrees_with_derived_series():
    for G in (cyclic_group(20), dihedral_group(6), alternating_group(4)):
        L = lab(G)
        assert holomorph_is_solvable(L) == is_solvable(holomorph(L))


def test_size_bound_enforced():
    with pytest.raises(ValueError):
        LabelledGroup.from_perm_group(symmetric_group(5))

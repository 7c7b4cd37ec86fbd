import pytest

from hopfgalois.perm import Perm, parse_perm, parse_perm_list
from hopfgalois.group import (
    PermGroup,
    alternating_group,
    coset_action,
    cyclic_group,
    dihedral_group,
    symmetric_group,
)
from hopfgalois.holomorph import LabelledGroup, holomorph
from hopfgalois.search import (
    BudgetExceeded,
    SearchBudget,
    all_subgroups,
    centralizer_in,
    conjugating_perm_in_sym,
    find_monomorphisms,
    fuse_under_conjugation,
    is_isomorphic,
    normalizer_in,
    subgroup_conjugacy_orbit,
)

PAPER_N8 = "(1,6)(2,7)(3,5)(4,8);(1,4)(2,3)(5,7)(6,8);(1,3)(2,4)(5,6)(7,8)"


def test_normalizer_of_elementary_abelian_in_s8():
    N = PermGroup(parse_perm_list(PAPER_N8, 8))
    nor = normalizer_in(symmetric_group(8), N)
    assert nor.order() == 1344
    hol_gens = tuple(N.gens) + tuple(
        parse_perm_list("(2,3)(5,7);(2,7)(3,5);(2,4)(7,8);(2,6)(3,5,8,4)", 8)
    )
    assert PermGroup(hol_gens).element_set() == nor.element_set()


def test_normalizer_matches_brute_force_on_s8():
    N = PermGroup(parse_perm_list(PAPER_N8, 8))
    S8 = symmetric_group(8)
    nor = normalizer_in(S8, N)
    brute = [
        e
        for e in S8.elements()
        if all((e * g * e.inverse()) in N for g in N.gens)
    ]
    assert nor.order() == len(brute)
    assert nor.element_set() == frozenset(p.images for p in brute)


def test_normalizer_of_c10_in_s10():
    nor = normalizer_in(symmetric_group(10), cyclic_group(10))
    assert nor.order() == 40


def test_group_is_self_normalizing_in_itself():
    G = dihedral_group(6)
    assert normalizer_in(G, G).element_set() == G.element_set()


def test_normalizer_elements_normalize():
    N = PermGroup(parse_perm_list("(1,2,3,4,5,6,7,8,9,10)", 10))
    nor = normalizer_in(symmetric_group(10), N)
    for e in nor.elements():
        for g in N.gens:
            assert (e * g * e.inverse()) in N


def test_normalizer_requires_containment():
    with pytest.raises(ValueError):
        normalizer_in(alternating_group(4), symmetric_group(4))


def test_centralizer_identity_is_whole_group():
    G = symmetric_group(4)
    assert centralizer_in(G, G.identity()).order() == 24


def test_centralizer_examples():
    S5 = symmetric_group(5)
    assert centralizer_in(S5, parse_perm("(2,5)(3,4)", 5)).order() == 8
    assert centralizer_in(S5, parse_perm("(1,2,3,4,5)", 5)).order() == 5


def test_centralizer_by_definition():
    G = dihedral_group(6)
    g = parse_perm("(1,2,3,4,5,6)", 6)
    cent = centralizer_in(G, g)
    members = {e.images for e in G.elements() if e * g == g * e}
    assert cent.element_set() == frozenset(members)


def test_centralizer_requires_membership():
    with pytest.raises(ValueError):
        centralizer_in(alternating_group(4), parse_perm("(1,2)", 4))


def test_embed_c3_into_c6():
    homs = find_monomorphisms(cyclic_group(3), cyclic_group(6))
    images = {h.image_group().element_set() for h in homs}
    assert len(images) == 1


def test_embedding_finds_s4_in_hol_c2_cubed():
    S4 = symmetric_group(4)
    C3 = S4.subgroup([parse_perm("(1,2,3)", 4)])
    act = coset_action(S4, C3)
    G8 = act.image
    Gp8 = G8.point_stabilizer(0)
    lab = LabelledGroup.from_perm_group(PermGroup(parse_perm_list("(1,2);(3,4);(5,6)", 6)))
    hol = holomorph(lab)
    homs = find_monomorphisms(
        G8, hol, injective=True, transitive_image=True, subgroup=Gp8, stabilized_point=0
    )
    assert homs
    img = homs[0].image_group()
    assert img.order() == 24 and img.is_transitive()
    # the stabilizer condition holds exactly
    assert img.point_stabilizer(0).order() == 3
    G1 = PermGroup(parse_perm_list("(1,7,4,2)(3,6,5,8);(1,2)(3,7)(4,6)(5,8)", 8))
    assert conjugating_perm_in_sym(img, G1) is not None


def test_no_transitive_s4_in_hol_q8():
    S4 = symmetric_group(4)
    C3 = S4.subgroup([parse_perm("(1,2,3)", 4)])
    G8 = coset_action(S4, C3).image
    Gp8 = G8.point_stabilizer(0)
    Q8 = PermGroup(parse_perm_list("(1,2,3,4)(5,6,7,8);(1,5,3,7)(2,8,4,6)", 8))
    hol = holomorph(LabelledGroup.from_perm_group(Q8))
    assert hol.order() == 192
    homs = find_monomorphisms(
        G8, hol, injective=True, transitive_image=True, subgroup=Gp8, stabilized_point=0
    )
    assert homs == []


def test_every_returned_map_is_a_monomorphism():
    C6 = cyclic_group(6)
    D6 = dihedral_group(6)
    homs = find_monomorphisms(C6, D6)
    assert homs
    for h in homs:
        assert h.is_injective()
        a = parse_perm("(1,2,3,4,5,6)", 6)
        assert h(a * a) == h(a) * h(a)


def test_budget_exhaustion_is_distinct_from_nonexistence():
    S4 = symmetric_group(4)
    C3 = S4.subgroup([parse_perm("(1,2,3)", 4)])
    G8 = coset_action(S4, C3).image
    Gp8 = G8.point_stabilizer(0)
    Q8 = PermGroup(parse_perm_list("(1,2,3,4)(5,6,7,8);(1,5,3,7)(2,8,4,6)", 8))
    hol = holomorph(LabelledGroup.from_perm_group(Q8))
    with pytest.raises(BudgetExceeded):
        find_monomorphisms(
            G8, hol, injective=True, transitive_image=True,
            subgroup=Gp8, stabilized_point=0, budget=SearchBudget(3),
        )


def test_is_isomorphic_basics():
    assert not is_isomorphic(cyclic_group(6), symmetric_group(3))[0]
    flag, wit = is_isomorphic(
        dihedral_group(3), PermGroup(parse_perm_list("(1,2,3);(1,2)", 3))
    )
    assert flag
    a = parse_perm("(1,2,3)", 3)
    assert wit(a).order() == 3


def test_is_isomorphic_witness_respects_multiplication():
    D12 = dihedral_group(6)
    lab = LabelledGroup.from_perm_group(D12)
    from hopfgalois.holomorph import regular_representation

    reg = regular_representation(lab)
    flag, wit = is_isomorphic(D12, reg)
    assert flag
    els = D12.elements()
    for a in els[:6]:
        for b in els[:6]:
            assert wit(a * b) == wit(a) * wit(b)


def test_is_isomorphic_is_reflexive_and_symmetric():
    groups = [cyclic_group(6), dihedral_group(4), symmetric_group(4)]
    for G in groups:
        assert is_isomorphic(G, G)[0]
    for A in groups:
        for B in groups:
            assert is_isomorphic(A, B)[0] == is_isomorphic(B, A)[0]


def test_subgroup_lattice_counts():
    assert len(all_subgroups(symmetric_group(4))) == 30
    assert len(all_subgroups(alternating_group(4))) == 10
    assert len(all_subgroups(dihedral_group(4))) == 10


def test_fusion_in_s4():
    S4 = symmetric_group(4)
    order2 = [H for H in all_subgroups(S4) if H.order() == 2]
    classes = fuse_under_conjugation(S4, order2)
    assert sorted(len(c) for c in classes) == [3, 6]


def test_subgroup_conjugacy_orbit():
    S4 = symmetric_group(4)
    H = S4.subgroup([parse_perm("(1,2)", 4)])
    orbit = subgroup_conjugacy_orbit(S4, H)
    assert len(orbit) == 6


def test_conjugating_perm_in_sym():
    A = PermGroup([parse_perm("(1,2,3,4)", 4)])
    B = PermGroup([parse_perm("(1,3,2,4)", 4)])
    c = conjugating_perm_in_sym(A, B)
    assert c is not None
    assert {(c * g * c.inverse()).images for g in A.elements()} == {
        g.images for g in B.elements()
    }
    V = PermGroup(parse_perm_list("(1,2)(3,4);(1,3)(2,4)", 4))
    assert conjugating_perm_in_sym(A, V) is None

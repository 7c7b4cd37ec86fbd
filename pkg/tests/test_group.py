import random

import pytest
from hypothesis import given, settings, strategies as st

from hopfgalois.perm import Perm, parse_perm, parse_perm_list
from hopfgalois.group import (
    PermGroup,
    abelian_invariants,
    alternating_group,
    conjugacy_classes,
    core_in,
    coset_action,
    cyclic_group,
    derived_series,
    dihedral_group,
    group_fingerprint,
    intersection,
    is_solvable,
    normal_subgroups,
    symmetric_group,
)


def brute_closure(gens, degree):
    elements = {Perm.identity(degree).images}
    frontier = [Perm.identity(degree)]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y.images not in elements:
                    elements.add(y.images)
                    new.append(y)
        frontier = new
    return elements


@settings(max_examples=30, deadline=None)
@given(st.lists(st.permutations(range(6)).map(Perm), min_size=1, max_size=3))
def test_chain_order_matches_brute_closure(gens):
    G = PermGroup(gens, 6)
    closure = brute_closure(G.gens or (Perm.identity(6),), 6)
    assert G.order() == len(closure)
    assert G.element_set() == frozenset(closure)


def test_chain_order_spot_checks_random_medium_groups():
    rng = random.Random(7)
    for _ in range(8):
        degree = rng.randint(5, 9)
        gens = []
        for _ in range(2):
            images = list(range(degree))
            rng.shuffle(images)
            gens.append(Perm(images))
        G = PermGroup(gens, degree)
        if G.order() <= 5000:
            assert G.order() == len(brute_closure(G.gens, degree))


def test_stabilizer_chain_examples():
    assert cyclic_group(10).order() == 10
    N = PermGroup(
        parse_perm_list("(1,6)(2,7)(3,5)(4,8);(1,4)(2,3)(5,7)(6,8);(1,3)(2,4)(5,6)(7,8)", 8)
    )
    assert N.order() == 8
    hol_gens = tuple(N.gens) + tuple(
        parse_perm_list("(2,3)(5,7);(2,7)(3,5);(2,4)(7,8);(2,6)(3,5,8,4)", 8)
    )
    assert PermGroup(hol_gens).order() == 1344


def test_chain_is_deterministic():
    gens = parse_perm_list("(1,2,3,4,5);(1,2)", 5)
    a = PermGroup(gens)
    b = PermGroup(gens)
    assert [p.images for p in a.elements()] == [p.images for p in b.elements()]


def test_membership():
    S4 = symmetric_group(4)
    assert parse_perm("(1,2,3)", 4) in S4
    A4 = alternating_group(4)
    assert parse_perm("(1,2)", 4) not in A4


def test_orbit_structure():
    C6 = cyclic_group(6)
    assert C6.is_transitive() and C6.is_regular()
    G1 = PermGroup(parse_perm_list("(1,7,4,2)(3,6,5,8);(1,2)(3,7)(4,6)(5,8)", 8))
    assert G1.order() == 24 and G1.is_transitive() and not G1.is_regular()
    fixed = PermGroup(parse_perm_list("(1,2)", 4))
    assert fixed.orbits() == [[0, 1], [2], [3]]


def test_regular_iff_transitive_and_order_equals_degree():
    D = dihedral_group(4)
    assert D.is_transitive() and not D.is_regular()
    K = PermGroup(parse_perm_list("(1,2)(3,4);(1,3)(2,4)", 4))
    assert K.is_regular()
    for e in K.elements():
        assert e.is_identity() or not e.fixed_points()


def test_point_stabilizer():
    S5 = symmetric_group(5)
    stab = S5.point_stabilizer(4)
    assert stab.order() == 24
    assert all(g(4) == 4 for g in stab.gens)


def test_conjugacy_classes_s4():
    sizes = sorted(c.size for c in conjugacy_classes(symmetric_group(4)))
    assert sizes == [1, 3, 6, 6, 8]
    # all order-3 elements are one class
    classes3 = [c for c in conjugacy_classes(symmetric_group(4)) if c.rep.order() == 3]
    assert len(classes3) == 1 and classes3[0].size == 8


def test_conjugacy_classes_abelian_all_singletons():
    assert all(c.size == 1 for c in conjugacy_classes(cyclic_group(12)))


def test_classes_partition_group():
    G = dihedral_group(6)
    classes = conjugacy_classes(G)
    assert sum(c.size for c in classes) == G.order()


def test_normal_subgroups_s4():
    assert [N.order() for N in normal_subgroups(symmetric_group(4))] == [1, 4, 12, 24]


def test_normal_subgroups_f20():
    F20 = PermGroup(parse_perm_list("(1,2,3,4,5);(2,3,5,4)", 5))
    orders = [N.order() for N in normal_subgroups(F20)]
    assert orders == [1, 5, 10, 20]
    assert orders.count(10) == 1


def test_normal_subgroups_s5():
    assert [N.order() for N in normal_subgroups(symmetric_group(5))] == [1, 60, 120]


def test_normal_subgroups_closed_under_generator_conjugation():
    G = symmetric_group(4)
    for N in normal_subgroups(G):
        for g in G.gens:
            for x in N.gens:
                assert (g * x * g.inverse()) in N


def test_solvability():
    assert is_solvable(cyclic_group(6))
    assert is_solvable(symmetric_group(4))
    assert not is_solvable(alternating_group(5))
    assert not is_solvable(symmetric_group(6))
    series = derived_series(symmetric_group(4))
    assert [g.order() for g in series] == [24, 12, 4, 1]


def test_coset_action_natural():
    S4 = symmetric_group(4)
    S3 = S4.point_stabilizer(3)
    res = coset_action(S4, S3)
    assert res.image.degree == 4
    assert res.kernel.order() == 1
    assert res.point_of_identity == 0
    assert len(res.transversal) == 4


def test_coset_action_degree8():
    S4 = symmetric_group(4)
    C3 = S4.subgroup([parse_perm("(1,2,3)", 4)])
    res = coset_action(S4, C3)
    assert res.image.degree == 8
    assert res.image.order() == 24
    assert res.image.is_transitive()
    stab = res.image.point_stabilizer(0)
    assert stab.order() == 3


def test_coset_action_degenerate():
    G = symmetric_group(3)
    res = coset_action(G, G)
    assert res.image.degree == 1
    assert res.kernel.order() == 6


def test_coset_kernel_is_core():
    S4 = symmetric_group(4)
    D8 = S4.subgroup(parse_perm_list("(1,2,3,4);(1,3)", 4))
    kernel = coset_action(S4, D8).kernel
    assert kernel.order() == 4
    # largest normal subgroup of S4 inside D8 is the Klein group
    best = max(
        (N for N in normal_subgroups(S4) if N.is_subgroup_of(D8)),
        key=lambda N: N.order(),
    )
    assert kernel.element_set() == best.element_set()


def test_core_of_point_stabilizer_trivial():
    S5 = symmetric_group(5)
    assert core_in(S5, S5.point_stabilizer(0)).order() == 1


def test_homomorphism_rejects_non_homomorphism():
    S3 = symmetric_group(3)
    from hopfgalois.group import Homomorphism

    with pytest.raises(ValueError):
        # sending both a 3-cycle and a transposition to a transposition
        Homomorphism(S3, parse_perm_list("(1,2);(1,2)", 2))


def test_homomorphism_images():
    from hopfgalois.group import Homomorphism

    S4 = symmetric_group(4)
    C3 = S4.subgroup([parse_perm("(1,2,3)", 4)])
    act = coset_action(S4, C3).action
    els = S4.elements()
    rng = random.Random(3)
    for _ in range(40):
        a, b = rng.choice(els), rng.choice(els)
        assert act(a * b) == act(a) * act(b)


def test_abelian_invariants():
    assert abelian_invariants(cyclic_group(12)) == (3, 4)
    assert abelian_invariants(symmetric_group(4)) == (2,)
    assert abelian_invariants(alternating_group(5)) == ()
    assert abelian_invariants(dihedral_group(6)) == (2, 2)
    K = PermGroup(parse_perm_list("(1,2);(3,4);(5,6)", 6))
    assert abelian_invariants(K) == (2, 2, 2)


def test_fingerprint_s4():
    fp = group_fingerprint(symmetric_group(4))
    assert fp.order == 24
    assert fp.element_order_histogram == ((1, 1), (2, 9), (3, 8), (4, 6))
    assert fp.is_solvable
    assert fp.abelian_invariants_of_abelianization == (2,)


def test_fingerprint_cycle_types_conjugation_invariant():
    G = PermGroup(parse_perm_list("(1,2,3,4,5,6)", 6))
    c = parse_perm("(1,3)(2,6)", 6)
    H = PermGroup([c * g * c.inverse() for g in G.gens])
    assert (
        group_fingerprint(G).cycle_type_multiset
        == group_fingerprint(H).cycle_type_multiset
    )


def test_intersection():
    S4 = symmetric_group(4)
    V = S4.subgroup(parse_perm_list("(1,2)(3,4);(1,3)(2,4)", 4))
    D8 = S4.subgroup(parse_perm_list("(1,2,3,4);(1,3)", 4))
    assert intersection(V, D8).order() == 4
    C3 = S4.subgroup([parse_perm("(1,2,3)", 4)])
    assert intersection(C3, V).order() == 1

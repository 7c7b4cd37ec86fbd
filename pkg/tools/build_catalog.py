#!/usr/bin/env python3
"""Generate src/hopfgalois/data/catalog.txt.

Groups of every supported order are produced by closing a small set of seed
constructions under prime-index cyclic extensions: every solvable group has a
normal subgroup of prime index, so extending each group M of order m/p by
each compatible (automorphism, coset-power) pair and deduplicating with the
package's isomorphism test yields every solvable group of order m; A5 is the
only non-solvable group in range and is seeded directly.  Counts are asserted
against the classical census before anything is written.

Run from the repository root:  python tools/build_catalog.py
"""

from __future__ import annotations

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hopfgalois.perm import Perm, parse_perm_list
from hopfgalois.group import (
    PermGroup,
    alternating_group,
    core_in,
    coset_action,
    cyclic_group,
    dihedral_group,
    element_order_histogram,
    prime_factors,
    symmetric_group,
)
from hopfgalois.search import all_subgroups
from hopfgalois.holomorph import LabelledGroup, abstract_automorphism_maps
from hopfgalois.search import is_isomorphic, iso_invariant_key
from hopfgalois.catalog import (
    Catalog,
    CatalogEntry,
    GroupId,
    KNOWN_GROUP_COUNTS,
    SUPPORTED_ORDERS,
    TransitiveEntry,
    parse_catalog,
    print_catalog,
    verify_catalog,
)

OUT = Path(__file__).resolve().parent.parent / "src" / "hopfgalois" / "data" / "catalog.txt"


# -- constructions ------------------------------------------------------------------


def from_table(size, mult, gen_labels, labels):
    """Regular representation of an abstract group given by a mult function."""
    index = {lab: i for i, lab in enumerate(labels)}
    assert len(index) == size
    gens = []
    for g in gen_labels:
        images = [index[mult(g, x)] for x in labels]
        gens.append(Perm(images))
    # relabel so that the identity (labels[0]) is point 0 by construction
    return PermGroup(gens, size)


def dicyclic(m: int) -> PermGroup:
    """Dicyclic group of order 4m: <a,b | a^(2m)=1, b^2=a^m, b a b^-1 = a^-1>."""
    n = 2 * m
    labels = [(i, j) for j in (0, 1) for i in range(n)]
    labels.sort(key=lambda t: (t[1], t[0]))
    labels = [(0, 0)] + [t for t in labels if t != (0, 0)]

    def mult(u, v):
        i, j = u
        k, l = v
        if j == 0:
            return ((i + k) % n, l)
        i2 = (i - k) % n
        if l == 0:
            return (i2, 1)
        return ((i2 + m) % n, 0)

    return from_table(4 * m, mult, [(1, 0), (0, 1)], labels)


def direct_product(A: PermGroup, B: PermGroup) -> PermGroup:
    """Disjoint-union faithful representation of A x B."""
    na, nb = A.degree, B.degree
    gens = []
    for g in A.gens:
        gens.append(Perm(tuple(g.images) + tuple(na + i for i in range(nb))))
    for h in B.gens:
        gens.append(Perm(tuple(range(na)) + tuple(na + x for x in h.images)))
    return PermGroup(gens, na + nb)


def affine_f3_squared(include_rotation: bool, include_reflection: bool) -> PermGroup:
    """Subgroups of AGL(2,3) on the 9 points of F3 x F3.

    Translations plus optionally r: (x,y) -> (-y,x) of order 4 and
    m: (x,y) -> (y,x); <t1,t2,r> is the order-36 Frobenius group,
    <t1,t2,r,m> has order 72, <t1,t2,-1> is the generalized dihedral group
    of order 18.
    """
    def pt(x, y):
        return (x % 3) * 3 + (y % 3)

    def perm_of(f):
        return Perm(tuple(f(x, y) for x in range(3) for y in range(3)))

    t1 = perm_of(lambda x, y: pt(x + 1, y))
    t2 = perm_of(lambda x, y: pt(x, y + 1))
    gens = [t1, t2]
    if include_rotation:
        gens.append(perm_of(lambda x, y: pt(-y, x)))
    else:
        gens.append(perm_of(lambda x, y: pt(-x, -y)))
    if include_reflection:
        gens.append(perm_of(lambda x, y: pt(y, x)))
    return PermGroup(gens, 9)


def matrix_group_f3(gen_matrices) -> PermGroup:
    """Matrix generators acting on the 8 nonzero vectors of F3^2."""
    vectors = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}
    gens = []
    for mat in gen_matrices:
        (a, b), (c, d) = mat
        images = [
            index[((a * x + b * y) % 3, (c * x + d * y) % 3)] for x, y in vectors
        ]
        gens.append(Perm(images))
    return PermGroup(gens, 8)


def gl32() -> PermGroup:
    """GL(3,2) on the 7 nonzero vectors of F2^3 (vector v indexed v-1)."""
    mats = [
        ((1, 1, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    ]
    gens = []
    for mat in mats:
        images = []
        for v in range(1, 8):
            bits = ((v >> 2) & 1, (v >> 1) & 1, v & 1)
            w = [sum(mat[r][c] * bits[c] for c in range(3)) % 2 for r in range(3)]
            images.append(((w[0] << 2) | (w[1] << 1) | w[2]) - 1)
        gens.append(Perm(images))
    return PermGroup(gens, 7)


def affine_prime(p: int, mult_by: int) -> PermGroup:
    """<x -> x+1, x -> m*x> on Z_p."""
    add = Perm([(x + 1) % p for x in range(p)])
    mul = Perm([(mult_by * x) % p for x in range(p)])
    return PermGroup([add, mul], p)


def semidirect_cyclic(A: PermGroup, q: int, power: int) -> PermGroup:
    """A x| C_q with the C_q generator acting as a -> a^power (A abelian)."""
    lab = LabelledGroup.from_perm_group(A)
    m = lab.order
    act = [0] * m
    for i in range(m):
        acc = 0
        for _ in range(power % lab.order_of(i)):
            acc = lab.table[acc][i]
        act[i] = acc
    phis = [list(range(m))]
    cur = act
    while cur != list(range(m)):
        phis.append(cur)
        cur = [act[x] for x in cur]
    if q % len(phis) != 0:
        raise ValueError("power map order does not divide q")

    def phi(k):
        return phis[k % len(phis)]

    size = m * q
    labels = [(a, k) for k in range(q) for a in range(m)]
    labels = [(0, 0)] + [t for t in labels if t != (0, 0)]

    def mult(u, v):
        a1, k1 = u
        a2, k2 = v
        return (lab.table[a1][phi(k1)[a2]], (k1 + k2) % q)

    gen_labels = [(g, 0) for g in lab.generator_indices()] + [(0, 1)]
    return from_table(size, mult, gen_labels, labels)


# -- seeds --------------------------------------------------------------------------


def abelian_group(divisors) -> PermGroup:
    G = cyclic_group(divisors[0])
    for d in divisors[1:]:
        G = direct_product(G, cyclic_group(d))
    return G


def seed_groups():
    """Named constructions; every paper-referenced group appears here."""
    seeds = []

    def add(order, name, group):
        assert group.order() == order, (name, group.order())
        seeds.append((order, name, group))

    q8 = PermGroup(
        parse_perm_list("(1,2,3,4)(5,6,7,8);(1,5,3,7)(2,8,4,6)", 8)
    )
    add(8, "Q8", q8)
    add(12, "Dic3", dicyclic(3))
    add(16, "Q16", dicyclic(4))
    add(20, "Dic5", dicyclic(5))
    add(24, "Dic6", dicyclic(6))
    add(28, "Dic7", dicyclic(7))
    add(32, "Q32", dicyclic(8))
    add(36, "Dic9", dicyclic(9))
    add(40, "Dic10", dicyclic(10))
    add(60, "Dic15", dicyclic(15))
    for n in range(3, 31):
        if 2 * n in SUPPORTED_ORDERS:
            add(2 * n, f"D(2x{n})", dihedral_group(n))
    add(6, "S3", symmetric_group(3))
    add(12, "A4", alternating_group(4))
    add(24, "S4", symmetric_group(4))
    add(24, "SL(2,3)", matrix_group_f3([((1, 1), (0, 1)), ((0, 2), (1, 0))]))
    add(24, "A4xC2", direct_product(alternating_group(4), cyclic_group(2)))
    add(60, "A5", alternating_group(5))
    add(60, "A4xC5", direct_product(alternating_group(4), cyclic_group(5)))
    add(18, "S3xC3", direct_product(symmetric_group(3), cyclic_group(3)))
    add(18, "(C3xC3):C2", affine_f3_squared(False, False))
    add(36, "F36", affine_f3_squared(True, False))
    add(36, "S3xS3", direct_product(symmetric_group(3), symmetric_group(3)))
    add(20, "F20", affine_prime(5, 2))
    add(20, "C5:C4", semidirect_cyclic(cyclic_group(5), 4, -1))
    add(21, "F21", affine_prime(7, 2))
    add(30, "S3xC5", direct_product(symmetric_group(3), cyclic_group(5)))
    add(30, "D(2x5)xC3", direct_product(dihedral_group(5), cyclic_group(3)))
    add(40, "C2xC2xC2xC5", abelian_group([2, 2, 2, 5]))
    add(24, "C2xC2xC2xC3", abelian_group([2, 2, 2, 3]))
    return seeds


# -- prime-index extensions -----------------------------------------------------------


def compose_map(f, g):
    return [f[x] for x in g]


def inner_map(lab: LabelledGroup, u: int):
    ui = lab.inv(u)
    return [lab.table[lab.table[u][x]][ui] for x in range(lab.order)]


def aut_class_reps(lab: LabelledGroup, auts):
    """Orbit representatives of auts under Aut-conjugation."""
    aut_perms = [Perm(a) for a in auts]
    aut_group = PermGroup(PermGroup(aut_perms, lab.order).minimized_gens(), lab.order)
    pool = {p.images: p for p in aut_perms}
    remaining = set(pool)
    reps = []
    for key in sorted(remaining):
        if key not in remaining:
            continue
        orbit = {key}
        queue = [pool[key]]
        while queue:
            x = queue.pop(0)
            for g in aut_group.gens:
                c = g * x * g.inverse()
                if c.images not in orbit:
                    orbit.add(c.images)
                    queue.append(c)
        remaining -= orbit
        reps.append(list(pool[key].images))
    return reps


def extensions_of(M: PermGroup, p: int):
    """All extensions 1 -> M -> G -> C_p -> 1 (M normal), up to over-counting."""
    lab = LabelledGroup.from_perm_group(M)
    m = lab.order
    auts = abstract_automorphism_maps(lab)
    inner = {}
    for u in range(m):
        inner.setdefault(tuple(inner_map(lab, u)), u)
    out = []
    for alpha in aut_class_reps(lab, auts):
        power = list(range(m))
        for _ in range(p):
            power = compose_map(alpha, power)
        key = tuple(power)
        if key not in inner:
            continue
        m0_candidates = [
            u for u in range(m) if tuple(inner_map(lab, u)) == key and alpha[u] == u
        ]
        alpha_powers = [list(range(m))]
        for _ in range(p - 1):
            alpha_powers.append(compose_map(alpha, alpha_powers[-1]))
        for m0 in m0_candidates:
            out.append(_extension_group(lab, p, alpha_powers, m0))
    return out


def _extension_group(lab: LabelledGroup, p: int, alpha_powers, m0: int) -> PermGroup:
    m = lab.order
    size = m * p

    def mult(u, v):
        x, i = u
        y, j = v
        z = lab.table[x][alpha_powers[i][y]]
        k = i + j
        if k >= p:
            z = lab.table[z][m0]
            k -= p
        return (z, k)

    labels = [(0, 0)] + [
        (a, k) for k in range(p) for a in range(m) if (a, k) != (0, 0)
    ]
    gen_labels = [(g, 0) for g in lab.generator_indices()] + [(0, 1)]
    return from_table(size, mult, gen_labels, labels)


# -- assembly ---------------------------------------------------------------------------


def invariant_factor_name(G: PermGroup) -> str:
    """GAP-style abelian name from invariant factors (largest first)."""
    from hopfgalois.group import abelian_invariants

    divisors = list(abelian_invariants(G))
    primary = {}
    for q in divisors:
        p = min(f for f in range(2, q + 1) if q % f == 0)
        primary.setdefault(p, []).append(q)
    for p in primary:
        primary[p].sort(reverse=True)
    width = max(len(v) for v in primary.values())
    factors = []
    for k in range(width):
        f = 1
        for p in sorted(primary):
            if k < len(primary[p]):
                f *= primary[p][k]
        factors.append(f)
    return "x".join(f"C{f}" for f in factors)


def build_groups():
    t0 = time.time()
    seeds = seed_groups()
    by_order: dict[int, list] = {order: [] for order in sorted(SUPPORTED_ORDERS)}

    def register(name, G, bucket):
        key = iso_invariant_key(G)
        for i, (other_name, other, other_key) in enumerate(bucket):
            if key != other_key:
                continue
            flag, _ = is_isomorphic(G, other)
            if flag:
                if name is not None and other_name is None:
                    bucket[i] = (name, other, other_key)
                return
        bucket.append((name, G, key))

    for order in sorted(SUPPORTED_ORDERS):
        bucket: list = []
        for o, name, G in seeds:
            if o == order:
                register(name, G, bucket)
        if order == 1:
            bucket.append(("C1", PermGroup((), 1), iso_invariant_key(PermGroup((), 1))))
        else:
            for p in prime_factors(order):
                sub = order // p
                if sub not in SUPPORTED_ORDERS:
                    raise AssertionError(f"missing subordinate order {sub}")
                for _, M, _k in by_order[sub]:
                    for G in extensions_of(M, p):
                        register(None, G, bucket)
        expected = KNOWN_GROUP_COUNTS[order]
        if len(bucket) != expected:
            raise AssertionError(
                f"order {order}: built {len(bucket)} classes, census says {expected}"
            )
        by_order[order] = bucket
        print(f"order {order:3d}: {len(bucket):2d} groups   ({time.time()-t0:6.1f}s)")
    return by_order


def finalize_entries(by_order):
    """Assign names and indices; order 18 gets the pinned indices 4 and 5."""
    entries = []
    for order in sorted(SUPPORTED_ORDERS):
        rows = []
        for name, G, _key in by_order[order]:
            if name is None and G.is_abelian():
                name = invariant_factor_name(G)
            hist = element_order_histogram(G)
            rows.append([name, G, hist])
        rows.sort(
            key=lambda r: (
                not r[1].is_abelian(),
                r[2],
                iso_invariant_key(r[1]),
                r[0] or "~",
            )
        )
        if order == 18:
            # pinned: index 4 = generalized dihedral (C3xC3):C2, index 5 = C6xC3;
            # these are exactly the two order-18 types carrying degree-18
            # witnesses (check_order18_pin verifies before anything is written)
            def pin_rank(row):
                if row[0] == "(C3xC3):C2":
                    return 1
                if row[0] == "C6xC3":
                    return 2
                return 0
            rows.sort(key=pin_rank)
        for idx, (name, G, _h) in enumerate(rows, start=1):
            if name is None:
                name = f"G{order}.{idx}"
            entries.append(
                CatalogEntry(
                    id=GroupId(order, idx),
                    name=name,
                    degree=G.degree,
                    gens=tuple(G.minimized_gens() if G.gens else ()) or
                         ((Perm.identity(G.degree),) if order == 1 else ()),
                )
            )
    return entries


def build_transitive():
    """The transitive groups of degree 2..7 with their standard labels."""
    entries = []

    def add(degree, index, name, G):
        assert G.degree == degree and G.is_transitive(), (degree, index, name)
        entries.append(
            TransitiveEntry(degree=degree, index=index, name=name,
                            gens=tuple(G.minimized_gens()))
        )

    add(2, 1, "C2", cyclic_group(2))
    add(3, 1, "C3", cyclic_group(3))
    add(3, 2, "S3", symmetric_group(3))

    S4 = symmetric_group(4)
    add(4, 1, "C4", cyclic_group(4))
    add(4, 2, "C2xC2", PermGroup(parse_perm_list("(1,2)(3,4);(1,3)(2,4)", 4)))
    add(4, 3, "D(2x4)", dihedral_group(4))
    add(4, 4, "A4", alternating_group(4))
    add(4, 5, "S4", S4)

    add(5, 1, "C5", cyclic_group(5))
    add(5, 2, "D(2x5)", dihedral_group(5))
    add(5, 3, "F5", affine_prime(5, 2))
    add(5, 4, "A5", alternating_group(5))
    add(5, 5, "S5", symmetric_group(5))

    # degree 6
    S3 = symmetric_group(3)
    add(6, 1, "C6", cyclic_group(6))
    lab_s3 = LabelledGroup.from_perm_group(S3)
    add(6, 2, "S3", PermGroup([Perm(lab_s3.table[g]) for g in lab_s3.generator_indices()], 6))
    add(6, 3, "D(2x6)", dihedral_group(6))
    A4 = alternating_group(4)
    add(6, 4, "A4", coset_action(A4, A4.subgroup(parse_perm_list("(1,2)(3,4)", 4))).image)
    f18 = direct_product(S3, cyclic_group(3))
    diag3 = f18.subgroup(parse_perm_list("(1,2,3)(4,5,6)", 6))
    add(6, 5, "F18", coset_action(f18, diag3).image)
    twoA4 = direct_product(A4, cyclic_group(2))
    v_stab = twoA4.subgroup(parse_perm_list("(1,2)(3,4)(5,6);(1,3)(2,4)(5,6)", 6))
    add(6, 6, "2A4", coset_action(twoA4, v_stab).image)
    add(6, 7, "S4(6d)", coset_action(S4, S4.subgroup(parse_perm_list("(1,2);(3,4)", 4))).image)
    add(6, 8, "S4(6c)", coset_action(S4, S4.subgroup(parse_perm_list("(1,2,3,4)", 4))).image)
    s3s3 = direct_product(S3, S3)
    diag6 = s3s3.subgroup(parse_perm_list("(1,2,3)(4,5,6);(1,2)(4,5)", 6))
    add(6, 9, "F18:2", coset_action(s3s3, diag6).image)
    f36 = affine_f3_squared(True, False)
    s3_in_f36 = f36.subgroup(
        [Perm([(3 * ((x + 1) % 3) + y) for x in range(3) for y in range(3)]),
         Perm([(3 * ((-x) % 3) + ((-y) % 3)) for x in range(3) for y in range(3)])]
    )
    add(6, 10, "F36", coset_action(f36, s3_in_f36).image)
    twoS4 = direct_product(S4, cyclic_group(2))
    d8_diag = twoS4.subgroup(parse_perm_list("(1,2,3,4)(5,6);(1,3)", 6))
    add(6, 11, "2S4", coset_action(twoS4, d8_diag).image)
    A5 = alternating_group(5)
    d10 = A5.subgroup(parse_perm_list("(1,2,3,4,5);(2,5)(3,4)", 5))
    add(6, 12, "A5", coset_action(A5, d10).image)
    f72 = affine_f3_squared(True, True)
    d12_in = None
    for H in all_subgroups(f72):
        if H.order() == 12 and core_in(f72, H).order() == 1:
            d12_in = H
            break
    add(6, 13, "F36:2", coset_action(f72, d12_in).image)
    S5 = symmetric_group(5)
    f20 = S5.subgroup(parse_perm_list("(1,2,3,4,5);(2,3,5,4)", 5))
    add(6, 14, "S5", coset_action(S5, f20).image)
    add(6, 15, "A6", alternating_group(6))
    add(6, 16, "S6", symmetric_group(6))

    add(7, 1, "C7", cyclic_group(7))
    add(7, 2, "D(2x7)", dihedral_group(7))
    add(7, 3, "F21", affine_prime(7, 2))
    add(7, 4, "F42", affine_prime(7, 3))
    add(7, 5, "PSL(3,2)", gl32())
    add(7, 6, "A7", alternating_group(7))
    add(7, 7, "S7", symmetric_group(7))
    return entries


def check_order18_pin(catalog: Catalog):
    """Confirm the paper's degree-18 witness types are (18,4) and (18,5)."""
    from hopfgalois.hopf import ExtensionProblem, byott_embeddings

    f36 = affine_f3_squared(True, False)
    neg = f36.subgroup([Perm([(3 * ((-x) % 3) + ((-y) % 3)) for x in range(3) for y in range(3)])])
    P = ExtensionProblem(f36, neg)
    assert P.index == 18
    working = []
    for entry in catalog.groups_of_order(18):
        ws = byott_embeddings(P, entry)
        print(f"  order-18 type {entry.id} {entry.name}: {len(ws)} witness class(es)")
        if ws:
            working.append(entry.id.index)
    assert 4 in working and 5 in working, (
        f"pinned indices must carry witnesses, got {working}"
    )
    return working


def main():
    by_order = build_groups()
    entries = finalize_entries(by_order)
    transitive = build_transitive()
    catalog = Catalog(entries, transitive)
    print("checking the (18,4)/(18,5) pin against the degree-18 problem...")
    working = check_order18_pin(catalog)
    print(f"  witness-bearing order-18 indices: {working}")
    text = print_catalog(catalog)
    reparsed = parse_catalog(text)
    assert print_catalog(reparsed) == text, "round-trip is not byte-stable"
    print("running full catalog verification...")
    t0 = time.time()
    verify_catalog(reparsed, deep=True)
    print(f"  verification passed ({time.time()-t0:.1f}s)")
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(text, encoding="utf-8")
    print(f"wrote {OUT} ({len(text.splitlines())} lines)")


if __name__ == "__main__":
    main()

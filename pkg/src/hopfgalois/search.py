"""Backtrack searches: constrained monomorphisms, normalizers, isomorphism.

All searches are deterministic (candidate lists are sorted) and use only
sound pruning, so an exhausted search is a proof of nonexistence.  Budgeted
searches raise BudgetExceeded instead of returning a partial answer as if it
were complete.
"""

from __future__ import annotations

from itertools import permutations

from .perm import Perm
from .group import (
    ORDER_ENUM_BOUND,
    Homomorphism,
    PermGroup,
    StabChain,
    conjugacy_classes,
    derived_series,
    abelian_invariants,
    is_natural_symmetric,
    is_solvable,
)

DEFAULT_NODE_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """A search ran out of node budget; carries any witnesses found so far."""

    def __init__(self, nodes: int, found=None):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes
        self.found = list(found or [])


class SearchBudget:
    __slots__ = ("limit", "nodes")

    def __init__(self, limit: int | None = None):
        self.limit = DEFAULT_NODE_BUDGET if limit is None else limit
        self.nodes = 0

    def spend(self, found=None):
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExceeded(self.nodes, found)


# -- generator sequences -------------------------------------------------------


def generator_sequence(source: PermGroup, prefix_subgroup: PermGroup | None = None):
    """A small generating sequence for source, starting with subgroup generators.

    Leading with the constrained subgroup lets the search draw its images from
    the (much smaller) designated point stabilizer.
    """
    seq = []
    if prefix_subgroup is not None and prefix_subgroup.order() > 1:
        seq.extend(prefix_subgroup.minimized_gens())
    chain = StabChain(seq, source.degree) if seq else None
    target_order = source.order()
    for g in sorted(source.gens, key=lambda p: (-p.order(), p.images)):
        if chain is not None and (chain.order() == target_order or chain.contains(g)):
            continue
        seq.append(g)
        chain = StabChain(seq, source.degree)
    if (chain.order() if chain else 1) != target_order:
        raise AssertionError("generator sequence does not generate the source")
    return seq


def _conjugacy_orbit_reps(pool, conjugators: PermGroup):
    """Deterministic orbit representatives of pool under conjugation."""
    pool_keys = {p.images: p for p in pool}
    remaining = set(pool_keys)
    reps = []
    gens = conjugators.gens
    inv = [g.inverse() for g in gens]
    for key in sorted(remaining):
        if key not in remaining:
            continue
        seed = pool_keys[key]
        orbit = {key}
        queue = [seed]
        while queue:
            x = queue.pop(0)
            for g, gi in zip(gens, inv):
                c = g * x * gi
                if c.images not in orbit:
                    orbit.add(c.images)
                    queue.append(Perm._raw(c.images))
        remaining -= orbit
        reps.append(seed)
    return reps


# -- constrained monomorphism search -------------------------------------------


def find_monomorphisms(
    source: PermGroup,
    target: PermGroup,
    *,
    injective: bool = True,
    transitive_image: bool = False,
    subgroup: PermGroup | None = None,
    stabilized_point: int | None = None,
    limit: int | None = None,
    budget: SearchBudget | None = None,
    reduce_first: bool = True,
):
    """All homomorphisms source -> target satisfying the given constraints.

    Constraints: injectivity; transitive image; a designated subgroup of the
    source mapping into the stabilizer of a designated target point, exactly
    (the image subgroup is the full point stabilizer of the image).

    With reduce_first=True the first generator image runs over conjugacy
    representatives (under the constraint-preserving subgroup of the target),
    so the result is complete up to that conjugation; every returned map is
    fully verified.  Raises BudgetExceeded on node exhaustion, carrying any
    witnesses found before the cutoff.
    """
    if (subgroup is None) != (stabilized_point is None):
        raise ValueError("subgroup and stabilized_point must be given together")
    if injective and target.order() % source.order() != 0:
        return []
    budget = budget or SearchBudget()

    seq = generator_sequence(source, subgroup)
    if not seq:
        hom = Homomorphism(source, [], target)
        return [hom]
    n_constrained = 0
    if subgroup is not None:
        n_constrained = len(subgroup.minimized_gens()) if subgroup.order() > 1 else 0

    prefix_orders = []
    for k in range(1, len(seq) + 1):
        prefix_orders.append(StabChain(seq[:k], source.degree).order())

    stab = target.point_stabilizer(stabilized_point) if subgroup is not None else None
    target_elements = target.elements()
    pools = {}

    def pool_for(position: int, order: int):
        constrained = position < n_constrained
        key = (constrained, order)
        if key not in pools:
            src = stab.elements() if constrained else target_elements
            pools[key] = sorted(
                (p for p in src if p.order() == order), key=lambda p: p.images
            )
        return pools[key]

    first_pool = pool_for(0, seq[0].order())
    if reduce_first:
        conjugators = stab if n_constrained > 0 else target
        first_pool = _conjugacy_orbit_reps(first_pool, conjugators)

    found = []
    seq_group = PermGroup(seq, source.degree)
    word_orders = [
        [( (seq[j] * seq[k]).order(), (seq[k] * seq[j]).order(),
           seq[j].commutator(seq[k]).order() ) for j in range(k)]
        for k in range(len(seq))
    ]

    def image_ok(ts) -> bool:
        image = PermGroup(ts, target.degree)
        if transitive_image and not image.is_transitive():
            return False
        if subgroup is not None:
            orbit = image.orbit(stabilized_point)
            stab_order = image.order() // len(orbit)
            if stab_order != subgroup.order():
                return False
        return True

    def extend(k, ts):
        if k == len(seq):
            if image_ok(ts):
                found.append(Homomorphism(seq_group, ts, target))
            return
        candidates = first_pool if k == 0 else pool_for(k, seq[k].order())
        for t in candidates:
            if limit is not None and len(found) >= limit:
                return
            budget.spend(found)
            ok = True
            for j, (o1, o2, o3) in enumerate(word_orders[k]):
                tj = ts[j]
                if (tj * t).order() != o1 or (t * tj).order() != o2:
                    ok = False
                    break
                if tj.commutator(t).order() != o3:
                    ok = False
                    break
            if not ok:
                continue
            if k > 0:
                if injective:
                    t_chain = StabChain(ts + [t], target.degree)
                    if t_chain.order() != prefix_orders[k]:
                        continue
                graph = StabChain(
                    [_pair(g, im, source.degree) for g, im in zip(seq, ts + [t])],
                    source.degree + target.degree,
                )
                if graph.order() != prefix_orders[k]:
                    continue
            extend(k + 1, ts + [t])

    extend(0, [])
    if limit is not None:
        found[:] = found[:limit]
    return found


def _pair(src: Perm, img: Perm, ns: int) -> Perm:
    return Perm._raw(src.images + tuple(x + ns for x in img.images))


# -- isomorphism ---------------------------------------------------------------


def iso_invariant_key(G: PermGroup) -> tuple:
    """A cheap isomorphism-invariant key used to filter candidate pairs."""
    classes = conjugacy_classes(G)
    profile = tuple(sorted((c.rep.order(), c.size) for c in classes))
    center = sum(1 for c in classes if c.size == 1)
    series = tuple(H.order() for H in derived_series(G))
    return (
        G.order(),
        profile,
        center,
        series,
        abelian_invariants(G),
        is_solvable(G),
    )


def is_isomorphic(G: PermGroup, H: PermGroup, budget: SearchBudget | None = None):
    """Decide G ~= H; returns (flag, witness Homomorphism or None)."""
    if G.order() != H.order():
        return False, None
    if G.order() > ORDER_ENUM_BOUND:
        raise ValueError("order exceeds the isomorphism-test bound")
    if iso_invariant_key(G) != iso_invariant_key(H):
        return False, None
    homs = find_monomorphisms(G, H, injective=True, limit=1, budget=budget)
    if homs:
        return True, homs[0]
    return False, None


# -- normalizers and centralizers ----------------------------------------------

BRUTE_AMBIENT_BOUND = ORDER_ENUM_BOUND


def centralizer_in(G: PermGroup, g: Perm) -> PermGroup:
    """Centralizer of g in G, by definition (G enumerable)."""
    if g not in G:
        raise ValueError("element is not in the group")
    members = [e for e in G.elements() if (e * g).images == (g * e).images]
    return PermGroup(PermGroup(members, G.degree).minimized_gens(), G.degree)


def normalizer_in(ambient: PermGroup, H: PermGroup) -> PermGroup:
    """Normalizer of H in ambient.

    For a transitive H inside the full symmetric group the normalizer is
    enumerated through its (point image, induced automorphism) parametrization;
    every candidate is still verified by conjugating the generators of H.
    Small ambients fall back to the definition.
    """
    if not H.is_subgroup_of(ambient):
        raise ValueError("H is not contained in the ambient group")
    if is_natural_symmetric(ambient) and H.is_transitive() and H.order() > 1:
        return _normalizer_in_sym_transitive(H)
    if ambient.order() <= BRUTE_AMBIENT_BOUND:
        members = [e for e in ambient.elements() if _normalizes(e, H)]
        return PermGroup(PermGroup(members, H.degree).minimized_gens(), H.degree)
    raise ValueError("ambient group too large for normalizer computation")


def _normalizes(e: Perm, H: PermGroup) -> bool:
    ei = e.inverse()
    return all((e * g * ei) in H for g in H.gens)


def _normalizer_in_sym_transitive(H: PermGroup) -> PermGroup:
    """Normalizer of transitive H in Sym(degree).

    Any g normalizing a transitive H is determined by y = g(0) together with
    the automorphism phi it induces, via g(h(0)) = phi(h)(y); candidates from
    all (phi, y) pairs are built and verified, distinct pairs giving distinct
    elements, so the count certifies the order.
    """
    from .holomorph import LabelledGroup, abstract_automorphism_maps

    n = H.degree
    lab = LabelledGroup.from_perm_group(H)
    els = lab.element_perms
    auts = abstract_automorphism_maps(lab)
    members = []
    for phi in auts:
        for y in range(n):
            g_img = [None] * n
            ok = True
            for ih, h in enumerate(els):
                x = h(0)
                val = els[phi[ih]](y)
                if g_img[x] is None:
                    g_img[x] = val
                elif g_img[x] != val:
                    ok = False
                    break
            if not ok or None in g_img or len(set(g_img)) != n:
                continue
            g = Perm(g_img)
            if _normalizes(g, H):
                members.append(g)
    group = PermGroup(members, n)
    if group.order() != len(members):
        raise AssertionError("normalizer parametrization produced a non-group")
    return PermGroup(group.minimized_gens(), n)


# -- subgroup machinery ----------------------------------------------------------


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


def all_subgroups(G: PermGroup) -> list:
    """Every subgroup of G, by closure under prime-power-element extensions.

    Any subgroup K strictly containing a subgroup M satisfies K = <M, x> for
    some x in K - M of prime power order, so the bottom-up sweep is complete.
    """
    identity = G.identity()
    ppow = [e for e in G.elements() if _is_prime_power(e.order())]
    ppow.sort(key=lambda p: p.images)
    trivial = PermGroup((), G.degree)
    seen = {frozenset({identity.images}): trivial}
    frontier = [trivial]
    while frontier:
        fresh = []
        for H in frontier:
            h_set = H.element_set()
            for e in ppow:
                if e.images in h_set:
                    continue
                K = PermGroup(tuple(H.gens) + (e,), G.degree)
                key = K.element_set()
                if key not in seen:
                    seen[key] = K
                    fresh.append(K)
        frontier = fresh
    return sorted(seen.values(), key=lambda H: (H.order(), sorted(H.element_set())))


def subgroup_conjugacy_orbit(G: PermGroup, H: PermGroup):
    """All G-conjugates of H, as a set of element-image frozensets."""
    start = H.element_set()
    perms = {start: [Perm._raw(im) for im in start]}
    queue = [start]
    pairs = [(g, g.inverse()) for g in G.gens]
    while queue:
        s = queue.pop(0)
        ps = perms[s]
        for g, gi in pairs:
            conj = [g * p * gi for p in ps]
            key = frozenset(p.images for p in conj)
            if key not in perms:
                perms[key] = conj
                queue.append(key)
    return set(perms)


def fuse_under_conjugation(G: PermGroup, subgroups) -> list:
    """Partition subgroups into G-conjugacy classes (deterministic order)."""
    by_key = {}
    for H in subgroups:
        by_key.setdefault(H.element_set(), H)
    order = sorted(by_key, key=lambda k: (len(k), sorted(k)))
    classes = []
    assigned = set()
    for key in order:
        if key in assigned:
            continue
        orbit = subgroup_conjugacy_orbit(G, by_key[key])
        members = [by_key[k] for k in order if k in orbit]
        assigned |= orbit
        classes.append(members)
    return classes


def conjugating_perm_in_sym(A: PermGroup, B: PermGroup) -> Perm | None:
    """Some c in Sym(degree) with c A c^-1 = B, by exhaustive scan (degree <= 8)."""
    if A.degree != B.degree:
        return None
    if A.degree > 8:
        raise ValueError("degree above 8 not supported by the exhaustive scan")
    if A.order() != B.order():
        return None
    a_types = sorted(e.cycle_type() for e in A.elements())
    if a_types != sorted(e.cycle_type() for e in B.elements()):
        return None
    b_set = B.element_set()
    for images in permutations(range(A.degree)):
        c = Perm._raw(images)
        ci = c.inverse()
        if all((c * g * ci).images in b_set for g in A.gens):
            return c
    return None

"""Permutation groups backed by deterministic Schreier-Sims stabilizer chains.

The chain construction is fully deterministic for a fixed generator list:
base points are taken from an optional prescribed prefix and otherwise as the
smallest point moved by the residue that opens the level, orbits are built
breadth-first in point-insertion order, and Schreier generators are processed
in sorted point order.  Everything downstream (element enumeration, coset
actions, search results) inherits this determinism.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .perm import Perm

# Hard ceiling for operations that enumerate all group elements.
ORDER_ENUM_BOUND = 100_000


class StabChain:
    """Base points, transversals and strong generators for a PermGroup.

    ``level_gens[i]`` holds every strong generator fixing the first i base
    points, so the group of level i is exactly ``<level_gens[i]>``.  Sifting a
    Schreier generator through a still-incomplete deeper chain can only fail
    towards redundant registrations, never towards false membership, so the
    sweep order below (deepest dirty level first) is sound.
    """

    def __init__(self, generators, degree: int, base_prefix=()):
        self.degree = degree
        self.base = list(base_prefix)
        self.level_gens = [[] for _ in self.base]
        self.transversals = [{b: Perm.identity(degree)} for b in self.base]
        top_dirty = None
        for g in generators:
            residue, stuck = self._strip(g, 0)
            if residue.is_identity():
                continue
            self._register(residue, stuck)
            self._stabilize(stuck)
        for i in range(len(self.base)):
            self._rebuild(i)

    def _strip(self, g: Perm, start: int):
        for i in range(start, len(self.base)):
            x = g(self.base[i])
            trans = self.transversals[i]
            if x not in trans:
                return g, i
            g = trans[x].inverse() * g
        return g, len(self.base)

    def _register(self, g: Perm, stuck: int):
        """Record g as a strong generator fixing the first `stuck` base points."""
        if stuck == len(self.base):
            self.base.append(min(p for p in range(self.degree) if g(p) != p))
            self.level_gens.append([])
            self.transversals.append({self.base[-1]: Perm.identity(self.degree)})
        for i in range(stuck + 1):
            self.level_gens[i].append(g)

    def _rebuild(self, i: int):
        base = self.base[i]
        trans = {base: Perm.identity(self.degree)}
        queue = [base]
        gens = self.level_gens[i]
        while queue:
            point = queue.pop(0)
            u = trans[point]
            for g in gens:
                image = g(point)
                if image not in trans:
                    trans[image] = g * u
                    queue.append(image)
        self.transversals[i] = trans

    def _stabilize(self, start: int):
        i = min(start, len(self.base) - 1)
        while i >= 0:
            deepest = self._schreier_sweep(i)
            if deepest is None:
                i -= 1
            else:
                i = deepest

    def _schreier_sweep(self, i: int):
        """One Schreier pass over level i.

        Stops at the first missing residue and reports the level it was
        registered at, so the driver cleans the deeper chain (and refreshes
        its transversals) before this level is swept again; sifting against a
        stale deeper chain would register duplicates.  Returns None for a
        clean pass.
        """
        self._rebuild(i)
        trans = self.transversals[i]
        gens = self.level_gens[i]
        for point in sorted(trans):
            u = trans[point]
            for h in gens:
                schreier = trans[h(point)].inverse() * (h * u)
                if schreier.is_identity():
                    continue
                residue, stuck = self._strip(schreier, i + 1)
                if residue.is_identity():
                    continue
                self._register(residue, stuck)
                return stuck
        return None

    def order(self) -> int:
        n = 1
        for trans in self.transversals:
            n *= len(trans)
        return n

    def contains(self, g: Perm) -> bool:
        if g.degree != self.degree:
            return False
        residue, _ = self._strip(g, 0)
        return residue.is_identity()

    def strong_generators_below(self, k: int):
        """Generators of the subgroup stabilizing the first k base points."""
        if k >= len(self.base):
            return []
        return list(self.level_gens[k])

    def elements(self):
        """All group elements, in deterministic transversal-product order."""
        tails = [Perm.identity(self.degree)]
        for i in range(len(self.base) - 1, -1, -1):
            trans = self.transversals[i]
            if len(trans) == 1:
                continue
            reps = [trans[p] for p in sorted(trans)]
            tails = [u * t for u in reps for t in tails]
        return tails


class PermGroup:
    """A finite permutation group given by generators.

    Instances are immutable; the stabilizer chain and element list are
    computed on demand and cached (idempotently, so concurrent readers see
    a consistent value).
    """

    __slots__ = ("degree", "gens", "_chain", "_elements", "_elementset", "name")

    def __init__(self, gens, degree: int | None = None, name: str = ""):
        gens = tuple(gens)
        if degree is None:
            if not gens:
                raise ValueError("degree required for an empty generator list")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError("generators of mixed degree")
        self.degree = degree
        self.gens = tuple(g for g in gens if not g.is_identity())
        self._chain = None
        self._elements = None
        self._elementset = None
        self.name = name

    # -- chain-backed basics ------------------------------------------------

    @property
    def chain(self) -> StabChain:
        if self._chain is None:
            self._chain = StabChain(self.gens, self.degree)
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def __contains__(self, g: Perm) -> bool:
        return self.chain.contains(g)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PermGroup)
            and self.degree == other.degree
            and self.order() == other.order()
            and all(g in self for g in other.gens)
        )

    def __hash__(self):
        raise TypeError("PermGroup is not hashable; key by element_set()")

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} gens={len(self.gens)}>"

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def elements(self):
        if self._elements is None:
            if self.order() > ORDER_ENUM_BOUND:
                raise ValueError(f"order {self.order()} exceeds enumeration bound")
            self._elements = tuple(self.chain.elements())
        return self._elements

    def element_set(self) -> frozenset:
        if self._elementset is None:
            self._elementset = frozenset(p.images for p in self.elements())
        return self._elementset

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self.degree == other.degree and all(g in other for g in self.gens)

    def subgroup(self, gens, name: str = "") -> PermGroup:
        return PermGroup(gens, self.degree, name=name)

    # -- orbits -------------------------------------------------------------

    def orbit(self, point: int) -> list:
        seen = {point}
        queue = [point]
        while queue:
            p = queue.pop(0)
            for g in self.gens:
                q = g(p)
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return sorted(seen)

    def orbits(self) -> list:
        remaining = set(range(self.degree))
        out = []
        while remaining:
            orb = self.orbit(min(remaining))
            out.append(orb)
            remaining -= set(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree if self.degree else True

    def is_regular(self) -> bool:
        return self.is_transitive() and self.order() == self.degree

    def is_semiregular(self) -> bool:
        return all(
            g.is_identity() or not g.fixed_points() for g in self.elements()
        )

    def is_abelian(self) -> bool:
        gens = self.gens
        return all(
            (a * b).images == (b * a).images
            for i, a in enumerate(gens)
            for b in gens[i + 1 :]
        )

    def point_stabilizer(self, point: int) -> PermGroup:
        chain = StabChain(self.gens, self.degree, base_prefix=(point,))
        return self.subgroup(chain.strong_generators_below(1))

    def minimized_gens(self):
        """A deterministic, usually small generating subset of gens."""
        order = self.order()
        chosen = []
        sub = None
        for g in sorted(self.gens, key=lambda p: (-p.order(), p.images)):
            if sub is not None and sub.contains(g):
                continue
            chosen.append(g)
            sub = StabChain(chosen, self.degree)
            if sub.order() == order:
                break
        return chosen


def symmetric_group(n: int) -> PermGroup:
    gens = []
    if n >= 2:
        gens.append(Perm.from_cycles(n, [tuple(range(n))]))
        gens.append(Perm.from_cycles(n, [(0, 1)]))
    return PermGroup(gens, n, name=f"S{n}")


def alternating_group(n: int) -> PermGroup:
    gens = [
        Perm.from_cycles(n, [(i, i + 1, i + 2)]) for i in range(n - 2)
    ]
    return PermGroup(gens, n, name=f"A{n}")


def cyclic_group(n: int) -> PermGroup:
    return PermGroup([Perm.from_cycles(n, [tuple(range(n))])], n, name=f"C{n}")


def dihedral_group(n: int) -> PermGroup:
    """Dihedral group of order 2n in its natural degree-n action."""
    rot = Perm.from_cycles(n, [tuple(range(n))])
    ref = Perm([(-i) % n for i in range(n)])
    return PermGroup([rot, ref], n, name=f"D(2x{n})")


def is_natural_symmetric(G: PermGroup) -> bool:
    return G.order() == factorial(G.degree)


# -- closures, series, classes -----------------------------------------------


def generated_closure(gens, degree: int) -> PermGroup:
    return PermGroup(gens, degree)


def normal_closure(G: PermGroup, seeds) -> PermGroup:
    """Smallest subgroup containing seeds and closed under G-conjugation."""
    gens = [s for s in seeds if not s.is_identity()]
    closure = PermGroup(gens, G.degree)
    queue = list(gens)
    while queue:
        s = queue.pop(0)
        for g in G.gens:
            c = g * s * g.inverse()
            if c not in closure:
                gens.append(c)
                closure = PermGroup(gens, G.degree)
                queue.append(c)
    return closure


def derived_subgroup(G: PermGroup) -> PermGroup:
    comms = [
        a.commutator(b)
        for i, a in enumerate(G.gens)
        for b in G.gens[i + 1 :]
    ]
    return normal_closure(G, comms)


def derived_series(G: PermGroup) -> list:
    series = [G]
    while True:
        d = derived_subgroup(series[-1])
        if d.order() == series[-1].order():
            break
        series.append(d)
        if d.order() == 1:
            break
    return series


def is_solvable(G: PermGroup) -> bool:
    return derived_series(G)[-1].order() == 1


@dataclass
class ConjClass:
    rep: Perm
    elements: tuple
    size: int


def conjugacy_classes(G: PermGroup) -> list:
    """Conjugacy classes in deterministic (element-enumeration) order."""
    if G.order() > ORDER_ENUM_BOUND:
        raise ValueError(f"order {G.order()} exceeds the conjugacy bound")
    elements = G.elements()
    seen = set()
    classes = []
    for e in elements:
        if e.images in seen:
            continue
        orbit = {e.images: e}
        queue = [e]
        while queue:
            x = queue.pop(0)
            for g in G.gens:
                c = g * x * g.inverse()
                if c.images not in orbit:
                    orbit[c.images] = c
                    queue.append(c)
        seen |= orbit.keys()
        members = tuple(sorted(orbit.values()))
        classes.append(ConjClass(rep=e, elements=members, size=len(members)))
    return classes


def normal_subgroups(G: PermGroup) -> list:
    """All normal subgroups of G, as joins of class closures.

    Every normal subgroup is the join of the normal closures of the classes
    it contains, so closing {class closures} under pairwise join is complete.
    """
    classes = conjugacy_classes(G)
    found = {}

    def register(H: PermGroup):
        key = H.element_set()
        if key not in found:
            found[key] = H
            return H, True
        return found[key], False

    register(PermGroup((), G.degree))
    fresh = []
    for cls in classes:
        if cls.rep.is_identity():
            continue
        H, new = register(normal_closure(G, [cls.rep]))
        if new:
            fresh.append(H)
    pool = list(found.values())
    while fresh:
        batch, fresh = fresh, []
        for a in batch:
            for b in pool:
                J, new = register(PermGroup(a.gens + b.gens, G.degree))
                if new:
                    fresh.append(J)
            pool = list(found.values())
    return sorted(found.values(), key=lambda H: (H.order(), sorted(H.element_set())))


def intersection(A: PermGroup, B: PermGroup) -> PermGroup:
    if A.degree != B.degree:
        raise ValueError("degree mismatch")
    small, big = (A, B) if A.order() <= B.order() else (B, A)
    members = [e for e in small.elements() if e in big]
    return PermGroup(members, A.degree)


# -- homomorphisms and actions ------------------------------------------------


def _combine(src: Perm, img: Perm) -> Perm:
    ns = src.degree
    return Perm(list(src.images) + [x + ns for x in img.images])


class Homomorphism:
    """A verified group homomorphism, given by images of the source generators.

    Well-definedness is certified by the order of the graph subgroup of
    ``source x target``: the map extends to a homomorphism exactly when that
    order equals the source order.
    """

    def __init__(self, source: PermGroup, images, target: PermGroup | None = None):
        images = tuple(images)
        if len(images) != len(source.gens):
            raise ValueError("one image per source generator required")
        self.source = source
        self.images = images
        self.target = target
        self.target_degree = images[0].degree if images else (
            target.degree if target else 0
        )
        combined = [_combine(g, im) for g, im in zip(source.gens, images)]
        self._graph = StabChain(
            combined, source.degree + self.target_degree,
            base_prefix=tuple(range(source.degree)),
        )
        if self._graph.order() != source.order():
            raise ValueError("generator images do not define a homomorphism")
        self._image_group = None

    def __call__(self, g: Perm) -> Perm:
        ns = self.source.degree
        img = Perm.identity(self.target_degree)
        residue = g
        chain = self._graph
        for i, base in enumerate(chain.base):
            if base >= ns:
                break
            x = residue(base)
            trans = chain.transversals[i]
            if x not in trans:
                raise ValueError("element is not in the source group")
            u = trans[x]
            u_src = Perm._raw(u.images[:ns])
            residue = u_src.inverse() * residue
            img = img * Perm._raw(tuple(p - ns for p in u.images[ns:]))
        if not residue.is_identity():
            raise ValueError("element is not in the source group")
        return img

    def image_group(self) -> PermGroup:
        if self._image_group is None:
            self._image_group = PermGroup(self.images, self.target_degree)
        return self._image_group

    def is_injective(self) -> bool:
        return self.image_group().order() == self.source.order()

    def image_of_subgroup(self, H: PermGroup) -> PermGroup:
        return PermGroup([self(h) for h in H.gens], self.target_degree)


@dataclass
class CosetActionResult:
    """Left-translation action of G on G/H."""

    image: PermGroup
    transversal: list
    kernel: PermGroup
    point_of_identity: int
    action: Homomorphism


def coset_action(G: PermGroup, H: PermGroup) -> CosetActionResult:
    """Action of G on the left cosets xH; the coset H itself is point 0."""
    if not H.is_subgroup_of(G):
        raise ValueError("H is not a subgroup of G")
    h_elements = H.elements()

    def key(x: Perm):
        return min((x * h).images for h in h_elements)

    reps = [G.identity()]
    index_of = {key(reps[0]): 0}
    i = 0
    while i < len(reps):
        for g in G.gens:
            y = g * reps[i]
            k = key(y)
            if k not in index_of:
                index_of[k] = len(reps)
                reps.append(y)
        i += 1
    n_cosets = len(reps)
    gen_images = []
    for g in G.gens:
        gen_images.append(Perm(index_of[key(g * reps[i])] for i in range(n_cosets)))
    action = Homomorphism(G, gen_images)
    image = action.image_group()
    kernel = _action_kernel(G, gen_images, n_cosets)
    return CosetActionResult(
        image=image,
        transversal=reps,
        kernel=kernel,
        point_of_identity=0,
        action=action,
    )


def _action_kernel(G: PermGroup, gen_images, n_points: int) -> PermGroup:
    """Kernel of the homomorphism G -> Sym(n_points) given on generators."""
    ns = G.degree
    combined = [_combine(g, im) for g, im in zip(G.gens, gen_images)]
    chain = StabChain(
        combined, ns + n_points,
        base_prefix=tuple(range(ns, ns + n_points)),
    )
    kernel_gens = [
        Perm(g.images[:ns]) for g in chain.strong_generators_below(n_points)
    ]
    return PermGroup(kernel_gens, ns)


def core_in(G: PermGroup, H: PermGroup) -> PermGroup:
    """Largest normal subgroup of G contained in H (the coset-action kernel)."""
    return coset_action(G, H).kernel


# -- fingerprints --------------------------------------------------------------


@dataclass(frozen=True)
class GroupFingerprint:
    """Isomorphism-invariant summary (cycle types are conjugation-invariant)."""

    order: int
    element_order_histogram: tuple
    cycle_type_multiset: tuple
    abelian_invariants_of_abelianization: tuple
    is_solvable: bool


def element_order_histogram(G: PermGroup) -> tuple:
    hist = {}
    for e in G.elements():
        o = e.order()
        hist[o] = hist.get(o, 0) + 1
    return tuple(sorted(hist.items()))


def prime_factors(n: int) -> list:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def abelian_invariants(G: PermGroup) -> tuple:
    """Elementary divisors (prime powers, ascending) of G/[G,G].

    Recovered from element-order counts of the abelianization: with
    s_i = log_p #{x : x^(p^i) = 1}, the p-part partition has exactly
    s_i - s_{i-1} parts of size >= i.
    """
    der = derived_subgroup(G)
    if der.order() == G.order():
        return ()
    Q = coset_action(G, der).image
    orders = [e.order() for e in Q.elements()]
    invariants = []
    for p in prime_factors(Q.order()):
        total_p = sum(1 for o in orders if _is_power_of(o, p))
        s = [0]
        i = 0
        while p ** s[-1] < total_p:
            i += 1
            cnt = sum(1 for o in orders if _is_power_of(o, p) and o <= p**i)
            e = 0
            while p**e < cnt:
                e += 1
            if p**e != cnt:
                raise AssertionError("abelianization count is not a p-power")
            s.append(e)
        mu = [s[j] - s[j - 1] for j in range(1, len(s))]
        for j in range(1, (mu[0] if mu else 0) + 1):
            part = sum(1 for m in mu if m >= j)
            if part:
                invariants.append(p**part)
    return tuple(sorted(invariants))


def _is_power_of(o: int, p: int) -> bool:
    while o % p == 0:
        o //= p
    return o == 1


def group_fingerprint(G: PermGroup) -> GroupFingerprint:
    if G.order() > ORDER_ENUM_BOUND:
        raise ValueError(f"order {G.order()} exceeds the fingerprint bound")
    cycle_types = {}
    for e in G.elements():
        t = e.cycle_type()
        cycle_types[t] = cycle_types.get(t, 0) + 1
    return GroupFingerprint(
        order=G.order(),
        element_order_histogram=element_order_histogram(G),
        cycle_type_multiset=tuple(sorted(cycle_types.items())),
        abelian_invariants_of_abelianization=abelian_invariants(G),
        is_solvable=is_solvable(G),
    )

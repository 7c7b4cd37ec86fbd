"""Regular representations, automorphism groups and holomorphs.

A LabelledGroup pins down an abstract group of order <= 64 as an element
table with index 0 the identity; the labelling is the breadth-first closure
of the generator list (right multiplication, generators in listed order), so
everything built from it is reproducible byte-for-byte.
"""

from __future__ import annotations

from .perm import Perm
from .group import PermGroup, is_solvable

MAX_LABELLED_ORDER = 64


class AutBudgetExceeded(RuntimeError):
    """The automorphism backtrack hit its node budget (not a completeness claim)."""


class LabelledGroup:
    """An abstract finite group as an indexed element table."""

    def __init__(self, element_perms, source=None):
        self.element_perms = list(element_perms)
        self.order = len(self.element_perms)
        if self.order > MAX_LABELLED_ORDER:
            raise ValueError(f"order {self.order} exceeds bound {MAX_LABELLED_ORDER}")
        self.source = source
        if not self.element_perms[0].is_identity():
            raise ValueError("element 0 must be the identity")
        index = {p.images: i for i, p in enumerate(self.element_perms)}
        if len(index) != self.order:
            raise ValueError("duplicate elements in the table")
        self.table = []
        for p in self.element_perms:
            row = [index[(p * q).images] for q in self.element_perms]
            if sorted(row) != list(range(self.order)):
                raise ValueError("multiplication row is not a bijection")
            self.table.append(row)
        for j in range(self.order):
            col = [self.table[i][j] for i in range(self.order)]
            if sorted(col) != list(range(self.order)):
                raise ValueError("multiplication column is not a bijection")
        self.inverse = [0] * self.order
        for i, row in enumerate(self.table):
            self.inverse[row.index(0)] = i
        self._orders = None
        self._gen_indices = None

    @staticmethod
    def from_perm_group(G: PermGroup, source=None) -> LabelledGroup:
        """Label G's elements by breadth-first closure of its generator list."""
        if G.order() > MAX_LABELLED_ORDER:
            raise ValueError(f"order {G.order()} exceeds bound {MAX_LABELLED_ORDER}")
        identity = G.identity()
        elements = [identity]
        seen = {identity.images}
        queue = [identity]
        while queue:
            x = queue.pop(0)
            for g in G.gens:
                y = x * g
                if y.images not in seen:
                    seen.add(y.images)
                    elements.append(y)
                    queue.append(y)
        lab = LabelledGroup(elements, source=source)
        lab._gen_indices = [elements.index(g) for g in G.gens]
        return lab

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return self.inverse[i]

    def order_of(self, i: int) -> int:
        if self._orders is None:
            orders = []
            for k in range(self.order):
                o, x = 1, k
                while x != 0:
                    x = self.table[x][k]
                    o += 1
                orders.append(o)
            self._orders = orders
        return self._orders[i]

    def generator_indices(self) -> list:
        if self._gen_indices is None or not self._gen_indices:
            # deterministic fallback: greedy closure over the element list
            chosen = []
            reach = {0}
            for i in range(1, self.order):
                if i in reach:
                    continue
                chosen.append(i)
                reach = self._closure(chosen)
                if len(reach) == self.order:
                    break
            self._gen_indices = chosen
        return self._gen_indices

    def _closure(self, gens) -> set:
        reach = {0}
        queue = [0]
        while queue:
            x = queue.pop(0)
            for g in gens:
                y = self.table[x][g]
                if y not in reach:
                    reach.add(y)
                    queue.append(y)
        return reach

    def conjugacy_class_sizes(self) -> list:
        """class size of each element under inner automorphisms."""
        sizes = [0] * self.order
        seen = [False] * self.order
        for i in range(self.order):
            if seen[i]:
                continue
            orbit = {i}
            queue = [i]
            while queue:
                x = queue.pop(0)
                for g in range(self.order):
                    c = self.table[self.table[g][x]][self.inverse[g]]
                    if c not in orbit:
                        orbit.add(c)
                        queue.append(c)
            for x in orbit:
                seen[x] = True
            for x in orbit:
                sizes[x] = len(orbit)
        return sizes


def regular_representation(N: LabelledGroup) -> PermGroup:
    """Left regular representation on N's indices; point 0 is the identity."""
    gens = [Perm(N.table[g]) for g in N.generator_indices()]
    rep = PermGroup(gens, N.order, name="lambda")
    return rep


def abstract_automorphism_maps(N: LabelledGroup, node_limit: int = 2_000_000) -> list:
    """Every automorphism of N, as index maps, by verified backtrack.

    Candidate generator images are filtered by element order and conjugacy
    class size; a candidate tuple is accepted only if the breadth-first
    extension over the Cayley graph is conflict-free and bijective, which
    checks phi(y*g) = phi(y)*phi(g) on every edge and hence full
    multiplicativity.  The enumeration is exhaustive, so the returned list is
    complete; past node_limit it raises instead of under-reporting.
    """
    gen_idx = N.generator_indices()
    if not gen_idx:
        return [[0]]
    pools = []
    sizes = N.conjugacy_class_sizes()
    for g in gen_idx:
        pool = [
            i
            for i in range(N.order)
            if N.order_of(i) == N.order_of(g) and sizes[i] == sizes[g]
        ]
        pools.append(pool)
    maps = []
    nodes = 0

    def backtrack(k, chosen):
        nonlocal nodes
        if k == len(pools):
            phi = _extend_automorphism(N, gen_idx, chosen)
            if phi is not None:
                maps.append(phi)
            return
        for cand in pools[k]:
            nodes += 1
            if nodes > node_limit:
                raise AutBudgetExceeded(
                    f"automorphism search exceeded {node_limit} nodes"
                )
            backtrack(k + 1, chosen + [cand])

    backtrack(0, [])
    return maps


def _extend_automorphism(N: LabelledGroup, gen_idx, images):
    phi = [None] * N.order
    phi[0] = 0
    queue = [0]
    while queue:
        y = queue.pop(0)
        fy = phi[y]
        for g, t in zip(gen_idx, images):
            x = N.table[y][g]
            fx = N.table[fy][t]
            if phi[x] is None:
                phi[x] = fx
                queue.append(x)
            elif phi[x] != fx:
                return None
    if None in phi or len(set(phi)) != N.order:
        return None
    return phi


def automorphism_group(N: LabelledGroup) -> PermGroup:
    """Aut(N) acting on N's indices, fixing the identity point 0."""
    maps = abstract_automorphism_maps(N)
    perms = [Perm(phi) for phi in maps]
    group = PermGroup(perms, N.order, name="Aut")
    if group.order() != len(maps):
        raise AssertionError("automorphism maps do not close into a group")
    return PermGroup(group.minimized_gens(), N.order, name="Aut")


_HOL_CACHE: dict = {}


def _cache_key(N: LabelledGroup):
    if N.source is not None:
        return ("id", N.source)
    return ("gens", N.order, tuple(N.element_perms[g].images for g in N.generator_indices()))


def holomorph(N: LabelledGroup) -> PermGroup:
    """Hol(N) = lambda(N) . Aut(N) on N's indices."""
    key = _cache_key(N)
    cached = _HOL_CACHE.get(key)
    if cached is not None:
        return cached
    lam = regular_representation(N)
    aut = automorphism_group(N)
    hol = PermGroup(tuple(lam.gens) + tuple(aut.gens), N.order, name="Hol")
    if hol.order() != N.order * aut.order():
        raise AssertionError("holomorph order mismatch")
    hol_aut = hol.point_stabilizer(0)
    if hol_aut.order() != aut.order():
        raise AssertionError("stabilizer of the identity is not Aut(N)")
    _HOL_CACHE[key] = hol
    return hol


def automorphism_group_of(N: LabelledGroup) -> PermGroup:
    return holomorph(N).point_stabilizer(0)


def holomorph_is_solvable(N: LabelledGroup) -> bool:
    """Solvability of Hol(N) via N and Aut(N) (their extension)."""
    if not is_solvable(regular_representation(N)):
        return False
    return is_solvable(automorphism_group(N))

"""The Hopf-Galois classifier.

Decides, for a pair (G, G') of a finite group and subgroup modelling
Gal(closure/k) >= Gal(closure/K), whether the extension is Galois, almost
classically Galois, Hopf Galois without being almost classically Galois, or
not Hopf Galois, together with explicit witnesses: normal complements,
embeddings into holomorphs, and regular subgroups normalized by the
translation action.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .perm import Perm
from .group import (
    PermGroup,
    Homomorphism,
    coset_action,
    intersection,
    is_solvable,
    normal_subgroups,
)
from .holomorph import holomorph, holomorph_is_solvable
from .catalog import Catalog, CatalogEntry, GroupId, load_catalog
from .search import (
    BudgetExceeded,
    SearchBudget,
    all_subgroups,
    find_monomorphisms,
    fuse_under_conjugation,
)


class Verdict(Enum):
    GALOIS = "Galois"
    ALMOST_CLASSICALLY_GALOIS = "AlmostClassicallyGalois"
    HOPF_GALOIS_NOT_ACG = "HopfGaloisNotACG"
    NOT_HOPF_GALOIS = "NotHopfGalois"
    UNDECIDED = "Undecided"

    @property
    def is_hopf_galois(self) -> bool:
        return self in (
            Verdict.GALOIS,
            Verdict.ALMOST_CLASSICALLY_GALOIS,
            Verdict.HOPF_GALOIS_NOT_ACG,
        )


class OracleUnsupported(ValueError):
    """gp_oracle is exact only for degree <= 6 and prime degrees <= 11."""


class TransportError(AssertionError):
    """byott_to_regular produced something that failed its hard postcondition."""


class HypothesisViolation(ValueError):
    """A transitivity-composition input failed verification; carries a witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ExtensionProblem:
    """A pair (G, G') standing for a separable extension of degree [G:G'].

    If G' contains a nontrivial normal subgroup of G (the coset action is
    unfaithful, i.e. the stated Galois closure is too big), the problem is
    classified against the faithful quotient action and flagged.
    """

    def __init__(self, G: PermGroup, Gp: PermGroup):
        if not Gp.is_subgroup_of(G):
            raise ValueError("G' is not a subgroup of G")
        self.given_G = G
        self.given_Gp = Gp
        self.index = G.order() // Gp.order()
        self._given_normals = None
        self._core = None
        self._action = None
        self._effective = None
        self._solvable = None

    @property
    def degree(self) -> int:
        return self.index

    def normal_subgroups_of_G(self):
        """Normal subgroups of the effective (faithful) G."""
        if self.effective_is_given():
            if self._given_normals is None:
                self._given_normals = normal_subgroups(self.given_G)
            return self._given_normals
        return normal_subgroups(self.effective[0])

    @property
    def core(self) -> PermGroup:
        """Largest normal subgroup of the given G inside G'."""
        if self._core is None:
            if self._given_normals is None:
                self._given_normals = normal_subgroups(self.given_G)
            inside = [
                N for N in self._given_normals
                if self.given_Gp.order() % N.order() == 0
                and N.is_subgroup_of(self.given_Gp)
            ]
            self._core = max(inside, key=lambda N: N.order())
        return self._core

    @property
    def closure_shrank(self) -> bool:
        return self.core.order() > 1

    @property
    def action(self):
        """Left-translation action of the given G on G/G' (lazy)."""
        if self._action is None:
            self._action = coset_action(self.given_G, self.given_Gp)
        return self._action

    @property
    def effective(self):
        """A faithful pair equivalent to (G, G'): the input if the core is
        trivial, otherwise the coset-action image with its point stabilizer."""
        if self._effective is None:
            if self.closure_shrank:
                image = self.action.image
                self._effective = (image, image.point_stabilizer(0))
            else:
                self._effective = (self.given_G, self.given_Gp)
        return self._effective

    def effective_is_given(self) -> bool:
        return not self.closure_shrank

    def solvable(self) -> bool:
        if self._solvable is None:
            self._solvable = is_solvable(self.effective[0])
        return self._solvable

    def conjugate_images(self, x: Perm) -> Perm:
        """lambda(x) for x in the given G."""
        return self.action.action(x)


@dataclass
class HGStructureWitness:
    """One Hopf-Galois structure of abstract type n_type on the problem."""

    n_type: GroupId
    n_name: str
    beta: Homomorphism
    alpha_image: PermGroup | None = None


@dataclass
class HGClassification:
    verdict: Verdict
    degree: int
    group_order: int
    witnesses: list = field(default_factory=list)
    normal_complements: list = field(default_factory=list)
    exact_structure_count: int | None = None
    structures_by_type: dict = field(default_factory=dict)
    undecided_reason: str | None = None
    budget_hit_types: list = field(default_factory=list)
    closure_shrank: bool = False

    @property
    def is_hopf_galois(self) -> bool:
        return self.verdict.is_hopf_galois

    def witness_type_names(self):
        return sorted({w.n_name for w in self.witnesses})


# -- almost classically Galois -----------------------------------------------------


def acg_check(P: ExtensionProblem) -> list:
    """All normal complements of G' in G (on the faithful quotient if needed)."""
    G, Gp = P.effective
    order = G.order()
    target = order // Gp.order()
    comps = []
    for N in P.normal_subgroups_of_G():
        if N.order() != target:
            continue
        if intersection(N, Gp).order() == 1:
            comps.append(N)
    return comps


# -- the direct Greither-Pareigis oracle --------------------------------------------


_REGULAR_CACHE: dict = {}


def regular_subgroups_of_sym(n: int) -> list:
    """Every regular subgroup of Sym(n), for n <= 6, by exhaustive closure.

    A regular subgroup has order n <= 6, hence is generated by at most two
    elements, and all its nonidentity elements are fixed-point-free; so
    closing every pair of fixed-point-free elements (with early abort once a
    fixed point or more than n elements appear) is exhaustive.
    """
    if n > 6:
        raise OracleUnsupported("exhaustive regular-subgroup scan needs n <= 6")
    if n in _REGULAR_CACHE:
        return _REGULAR_CACHE[n]
    from itertools import permutations

    identity = Perm.identity(n)
    derangements = [
        Perm(im) for im in permutations(range(n)) if all(im[i] != i for i in range(n))
    ]
    found = {}
    if n == 1:
        found[frozenset({identity.images})] = PermGroup((), 1)
    for i, a in enumerate(derangements):
        for b in derangements[i:]:
            elements = {identity.images, a.images}
            frontier = [a]
            ok = True
            while frontier and ok:
                x = frontier.pop()
                for g in (a, b):
                    y = x * g
                    if y.images in elements:
                        continue
                    if not y.is_identity() and y.fixed_points():
                        ok = False
                        break
                    elements.add(y.images)
                    if len(elements) > n:
                        ok = False
                        break
                    frontier.append(y)
            if not ok or len(elements) != n:
                continue
            if b.images not in elements:
                continue
            key = frozenset(elements)
            if key not in found:
                found[key] = PermGroup([a, b], n)
    out = sorted(found.values(), key=lambda M: sorted(M.element_set()))
    _REGULAR_CACHE[n] = out
    return out


def _is_normalized_by(gens, M: PermGroup) -> bool:
    for g in gens:
        gi = g.inverse()
        for m in M.gens:
            if (g * m * gi) not in M:
                return False
    return True


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def gp_oracle(P: ExtensionProblem) -> list:
    """Exact set of regular subgroups of Sym(n) normalized by lambda(G).

    Supported for n <= 6 (exhaustive scan) and prime n <= 11.  For prime p,
    a regular subgroup M normalized by lambda(G) is normal in H = lambda(G)M;
    since Sym(p) has Sylow p-subgroups of order p, M is the unique Sylow
    p-subgroup of H and so contains, hence equals, the Sylow p-subgroup of
    lambda(G); the only candidate is that subgroup.
    """
    n = P.index
    lam = P.action.image
    if n <= 6:
        candidates = regular_subgroups_of_sym(n)
    elif _is_prime(n) and n <= 11:
        cyc = None
        for e in lam.elements():
            if e.order() == n:
                cyc = e
                break
        if cyc is None:
            raise AssertionError("transitive group of prime degree without a p-cycle")
        candidates = [PermGroup([cyc], n)]
    else:
        raise OracleUnsupported(f"degree {n} outside the oracle's range")
    return [M for M in candidates if _is_normalized_by(lam.gens, M)]


def oracle_applicable(n: int) -> bool:
    return n <= 6 or (_is_prime(n) and n <= 11)


# -- Byott translation ---------------------------------------------------------------


def byott_embeddings(
    P: ExtensionProblem,
    entry: CatalogEntry,
    budget: SearchBudget | None = None,
) -> list:
    """Embeddings of G into Hol(N) carrying G' exactly onto the stabilizer of e_N.

    Returned up to conjugacy by the stabilizer of e_N in Hol(N) (the subgroup
    of Hol(N) preserving the marked-point condition); the transported regular
    subgroup is constant on each such class, so no Hopf-Galois structure is
    lost by the deduplication.  A solvable holomorph cannot contain a
    non-solvable G, and |G| must divide |Hol(N)|; both filters are exact.
    """
    n = P.index
    if entry.id.order != n:
        raise ValueError(f"|N| = {entry.id.order} does not match the degree {n}")
    G, Gp = P.effective
    lab = entry.labelled()
    hol = holomorph(lab)
    if hol.order() % G.order() != 0:
        return []
    if not P.solvable() and holomorph_is_solvable(lab):
        return []
    homs = find_monomorphisms(
        G,
        hol,
        injective=True,
        transitive_image=True,
        subgroup=Gp,
        stabilized_point=0,
        budget=budget,
    )
    deduped = _dedupe_pointwise(homs, hol)
    return [
        HGStructureWitness(n_type=entry.id, n_name=entry.name, beta=h) for h in deduped
    ]


def _dedupe_pointwise(homs, hol: PermGroup):
    """Keep one representative per pointwise-conjugacy class under Stab_Hol(0)."""
    if len(homs) <= 1:
        return list(homs)
    aut_elements = hol.point_stabilizer(0).elements()
    kept = []
    kept_images = []
    for h in homs:
        images = h.images
        is_dup = False
        for other in kept_images:
            for a in aut_elements:
                ai = a.inverse()
                if all(
                    (a * im * ai).images == om.images
                    for im, om in zip(images, other)
                ):
                    is_dup = True
                    break
            if is_dup:
                break
        if not is_dup:
            kept.append(h)
            kept_images.append(images)
    return kept


def byott_to_regular(P: ExtensionProblem, witness: HGStructureWitness,
                     catalog: Catalog | None = None) -> PermGroup:
    """The regular subgroup of Sym(G/G') corresponding to a Byott witness.

    Builds the point bijection b(i) = beta(x_i)(e_N) from the coset
    transversal and transports the right-translation copy of N through it.
    The output is verified regular and normalized by lambda(G); any failure
    raises (it would mean a transport-direction bug, never a silent answer).
    """
    catalog = catalog or load_catalog()
    entry = catalog.entry(witness.n_type)
    lab = entry.labelled()
    n = P.index
    beta = witness.beta
    act = P.action
    if P.effective_is_given():
        b = [beta(x)(0) for x in act.transversal]
    else:
        b = [beta(act.action(x))(0) for x in act.transversal]
    if sorted(b) != list(range(n)):
        raise TransportError("coset-to-N point map is not a bijection")
    b_inv = [0] * n
    for i, v in enumerate(b):
        b_inv[v] = i
    # frozen convention: transport the right translations x -> x*y
    perms = [
        Perm(tuple(b_inv[lab.table[b[i]][y]] for i in range(n))) for y in range(n)
    ]
    M = PermGroup([p for p in perms if not p.is_identity()], n)
    if M.order() != n or not M.is_regular():
        raise TransportError("transported copy of N is not regular")
    if not _is_normalized_by(act.image.gens, M):
        raise TransportError("transported copy of N is not normalized by lambda(G)")
    return M


# -- classification -------------------------------------------------------------------


def classify_extension(
    P: ExtensionProblem,
    *,
    catalog: Catalog | None = None,
    node_budget: int | None = None,
) -> HGClassification:
    """Classify (G, G') per the holomorph-translation procedure.

    Galois if G' is trivial; else almost classically Galois if a normal
    complement exists; else Hopf Galois iff some group N of order n admits a
    Byott embedding; NotHopfGalois only after every N type is exhausted.
    Budget exhaustion or an out-of-catalog degree yields Undecided, never a
    negative verdict.  The exact structure count is filled in whenever the
    direct oracle applies.
    """
    catalog = catalog or load_catalog()
    G, Gp = P.effective
    result = HGClassification(
        verdict=Verdict.UNDECIDED,
        degree=P.index,
        group_order=G.order(),
        closure_shrank=P.closure_shrank,
    )
    if Gp.order() == 1:
        result.verdict = Verdict.GALOIS
        result.normal_complements = [G]
    else:
        comps = acg_check(P)
        if comps:
            result.verdict = Verdict.ALMOST_CLASSICALLY_GALOIS
            result.normal_complements = comps
        elif P.index not in catalog.supported_orders:
            result.verdict = Verdict.UNDECIDED
            result.undecided_reason = "out-of-catalog"
        else:
            budget = SearchBudget(node_budget)
            witnesses = []
            budget_hit = []
            for entry in catalog.groups_of_order(P.index):
                try:
                    witnesses.extend(byott_embeddings(P, entry, budget))
                except BudgetExceeded:
                    budget_hit.append(entry.id)
            result.budget_hit_types = budget_hit
            if witnesses:
                result.verdict = Verdict.HOPF_GALOIS_NOT_ACG
                result.witnesses = witnesses
                for w in witnesses:
                    M = byott_to_regular(P, w, catalog)
                    w.alpha_image = M
                    bucket = result.structures_by_type.setdefault(w.n_type, [])
                    if all(M.element_set() != other.element_set() for other in bucket):
                        bucket.append(M)
            elif budget_hit:
                result.verdict = Verdict.UNDECIDED
                result.undecided_reason = "budget"
            else:
                result.verdict = Verdict.NOT_HOPF_GALOIS
    if oracle_applicable(P.index) and result.verdict != Verdict.UNDECIDED:
        result.exact_structure_count = len(gp_oracle(P))
    return result


def byott_structure_survey(
    P: ExtensionProblem,
    *,
    catalog: Catalog | None = None,
    node_budget: int | None = None,
):
    """All Byott witnesses and transported structures, for any (G, G').

    Unlike classify_extension this runs the full embedding searches even for
    Galois and almost classically Galois problems; it is the byott side of
    the oracle-equivalence check.
    """
    catalog = catalog or load_catalog()
    budget = SearchBudget(node_budget)
    witnesses = []
    structures = []
    seen = set()
    for entry in catalog.groups_of_order(P.index):
        for w in byott_embeddings(P, entry, budget):
            w.alpha_image = byott_to_regular(P, w, catalog)
            witnesses.append(w)
            key = w.alpha_image.element_set()
            if key not in seen:
                seen.add(key)
                structures.append(w.alpha_image)
    return witnesses, structures


# -- intermediate extensions -----------------------------------------------------------


@dataclass
class ScanRow:
    order: int
    class_index: int
    class_size: int
    rep: PermGroup
    degree: int
    classification: HGClassification

    @property
    def key(self):
        return (self.order, self.class_index)

    @property
    def label(self):
        return f"|G''|={self.order}#{self.class_index}"


def intermediate_scan(
    G: PermGroup,
    Gp: PermGroup,
    *,
    catalog: Catalog | None = None,
    node_budget: int | None = None,
) -> list:
    """Classify (G, G'') for every class of proper nontrivial G'' < G'.

    Classes are fused under G-conjugacy (conjugate subgroups give equivalent
    coset actions), ordered by (order, canonical signature), and one
    representative per class is classified.
    """
    if not Gp.is_subgroup_of(G):
        raise ValueError("G' is not a subgroup of G")
    proper = [
        H for H in all_subgroups(Gp) if 1 < H.order() < Gp.order()
    ]
    classes = fuse_under_conjugation(G, proper)
    classes.sort(key=lambda cls: (cls[0].order(), sorted(cls[0].element_set())))
    rows = []
    counters = {}
    for cls in classes:
        rep = cls[0]
        order = rep.order()
        counters[order] = counters.get(order, 0) + 1
        P = ExtensionProblem(G, rep)
        rows.append(
            ScanRow(
                order=order,
                class_index=counters[order],
                class_size=len(cls),
                rep=rep,
                degree=P.index,
                classification=classify_extension(
                    P, catalog=catalog, node_budget=node_budget
                ),
            )
        )
    return rows


def prime_degree_classify(
    P: ExtensionProblem,
    *,
    catalog: Catalog | None = None,
    node_budget: int | None = None,
) -> HGClassification:
    """Classifier specialization for prime degree <= 11 (solvability criterion)."""
    if not (_is_prime(P.index) and P.index <= 11):
        raise ValueError(f"degree {P.index} is not a supported prime")
    return classify_extension(P, catalog=catalog, node_budget=node_budget)


# -- transitivity of the Hopf-Galois condition ------------------------------------------


def product_embedding(sigma: Perm, tau: Perm) -> Perm:
    """The image of (sigma, tau) in Sym(n*r), pairs (i1,i2) flattened as i1*r+i2."""
    n, r = sigma.degree, tau.degree
    return Perm(
        tuple(sigma(i1) * r + tau(i2) for i1 in range(n) for i2 in range(r))
    )


def _verify_normalized(gens, M: PermGroup, what: str):
    for g in gens:
        gi = g.inverse()
        for m in M.gens:
            c = g * m * gi
            if c not in M:
                raise HypothesisViolation(
                    f"{what} is not normalized: conjugating {m.cycle_string()} "
                    f"by {g.cycle_string()} leaves the subgroup",
                    witness=(g, m, c),
                )


def transitivity_compose(
    G: PermGroup,
    Gp: PermGroup,
    Gpp: PermGroup,
    N_wit: PermGroup,
    R_wit: PermGroup,
):
    """Compose Hopf-Galois structures along G >= G' >= G''.

    Requires N_wit regular in Sym([G:G']) normalized by the G-action on
    G/G', and R_wit regular in Sym([G':G'']) normalized by the image of the
    G'-action on G'/G'' (the kernel of that action is quotiented away by
    taking the image).  Returns the degree-n*r action of G on transversal
    pairs together with the regular subgroup N_wit x R_wit; both the action
    (transitive with point stabilizer G'') and the normalization of the
    product are verified, not assumed.
    """
    if not (Gpp.is_subgroup_of(Gp) and Gp.is_subgroup_of(G)):
        raise ValueError("need G'' <= G' <= G")
    act1 = coset_action(G, Gp)
    act2 = coset_action(Gp, Gpp)
    n, r = act1.image.degree, act2.image.degree
    if not (N_wit.degree == n and N_wit.is_regular()):
        raise HypothesisViolation("N witness is not a regular subgroup of Sym(n)")
    if not (R_wit.degree == r and R_wit.is_regular()):
        raise HypothesisViolation("R witness is not a regular subgroup of Sym(r)")
    _verify_normalized(act1.image.gens, N_wit, "N witness")
    _verify_normalized(act2.image.gens, R_wit, "R witness")

    x = act1.transversal
    x_inv = [rep.inverse() for rep in x]
    images = []
    for g in G.gens:
        img = [0] * (n * r)
        phi_g = act1.action(g)
        for i in range(n):
            i2 = phi_g(i)
            g_prime = x_inv[i2] * (g * x[i])
            psi = act2.action(g_prime)
            for j in range(r):
                img[i * r + j] = i2 * r + psi(j)
        images.append(Perm(img))
    composed = Homomorphism(PermGroup(G.gens, G.degree), images)
    image = composed.image_group()
    if not image.is_transitive():
        raise AssertionError("composed action is not transitive")
    # transitivity plus |G| = nr|G''| forces {g : g fixes the base pair} = G''
    for h in Gpp.gens:
        if composed(h)(0) != 0:
            raise AssertionError("G'' does not stabilize the base pair")
    if G.order() != n * r * Gpp.order():
        raise AssertionError("index bookkeeping is off")
    id_n, id_r = N_wit.identity(), R_wit.identity()
    product = PermGroup(
        [product_embedding(a, id_r) for a in N_wit.minimized_gens()]
        + [product_embedding(id_n, b) for b in R_wit.minimized_gens()],
        n * r,
    )
    if product.order() != n * r or not product.is_regular():
        raise AssertionError("product witness is not regular")
    _verify_normalized(image.gens, product, "product witness")
    return composed, product

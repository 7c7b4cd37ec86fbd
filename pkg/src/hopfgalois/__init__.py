"""hopfgalois: a computational classifier for the Hopf-Galois property.

Given a finite group with a designated subgroup, modelling the Galois group
of the closure of a separable field extension together with the subgroup
fixing the extension, decide whether the extension is Galois, almost
classically Galois, Hopf Galois without being almost classically Galois, or
not Hopf Galois, with explicit group-theoretic witnesses throughout.
"""

from .perm import Perm, parse_perm, parse_perm_list
from .group import (
    PermGroup,
    Homomorphism,
    coset_action,
    group_fingerprint,
    normal_subgroups,
    conjugacy_classes,
    is_solvable,
)
from .holomorph import LabelledGroup, automorphism_group, holomorph, holomorph_is_solvable, regular_representation
from .catalog import (
    Catalog,
    CatalogEntry,
    GroupId,
    TransitiveEntry,
    UnsupportedOrderError,
    groups_of_order,
    identify_transitive,
    load_catalog,
    transitive_groups,
    verify_catalog,
)
from .hopf import (
    ExtensionProblem,
    HGClassification,
    HGStructureWitness,
    Verdict,
    acg_check,
    byott_embeddings,
    byott_to_regular,
    classify_extension,
    gp_oracle,
    intermediate_scan,
    prime_degree_classify,
    product_embedding,
    transitivity_compose,
)

__version__ = "0.1.0"

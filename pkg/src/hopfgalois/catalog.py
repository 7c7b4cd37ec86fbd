"""Catalog of small groups and transitive groups of degree <= 7.

The data lives in a versioned text file (``data/catalog.txt`` by default,
overridable via the HG_CATALOG environment variable or an explicit path).
Record grammar, one record per line, ``#`` comments, 1-based cycles:

    HGCATALOG 1
    G <order> <index> <name> <degree> <gen-cycles>;<gen-cycles>;...
    T <degree> <index> <name> <gen-cycles>;...

Round-tripping a catalog through parse/print is byte-stable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources

from .group import PermGroup, is_solvable
from .holomorph import LabelledGroup
from .perm import parse_perm_list, perm_list_string
from .search import (
    all_subgroups,
    conjugating_perm_in_sym,
    fuse_under_conjugation,
    is_isomorphic,
    iso_invariant_key,
)

FORMAT_VERSION = "1"

SUPPORTED_ORDERS = frozenset(range(1, 33)) | {36, 40, 60}

# Classical census of isomorphism classes per supported order.
KNOWN_GROUP_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2,
    11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5, 19: 1,
    20: 5, 21: 2, 22: 2, 23: 1, 24: 15, 25: 2, 26: 2, 27: 5, 28: 4,
    29: 1, 30: 4, 31: 1, 32: 51, 36: 14, 40: 14, 60: 13,
}

# Transitive groups of each degree, 2..7.
KNOWN_TRANSITIVE_COUNTS = {2: 1, 3: 2, 4: 5, 5: 5, 6: 16, 7: 7}


class UnsupportedOrderError(ValueError):
    """Requested order is outside the supported catalog range."""


class CatalogVerificationError(AssertionError):
    pass


@dataclass(frozen=True, order=True)
class GroupId:
    order: int
    index: int

    def __str__(self):
        return f"({self.order},{self.index})"


@dataclass
class CatalogEntry:
    id: GroupId
    name: str
    degree: int
    gens: tuple
    is_abelian: bool = field(default=False)
    is_solvable: bool = field(default=False)
    _group: PermGroup | None = field(default=None, repr=False)
    _labelled: LabelledGroup | None = field(default=None, repr=False)

    def group(self) -> PermGroup:
        if self._group is None:
            self._group = PermGroup(self.gens, self.degree, name=self.name)
        return self._group

    def labelled(self) -> LabelledGroup:
        if self._labelled is None:
            self._labelled = LabelledGroup.from_perm_group(self.group(), source=self.id)
        return self._labelled


@dataclass
class TransitiveEntry:
    degree: int
    index: int
    name: str
    gens: tuple
    _group: PermGroup | None = field(default=None, repr=False)

    @property
    def label(self) -> str:
        return f"{self.degree}T{self.index}"

    def group(self) -> PermGroup:
        if self._group is None:
            self._group = PermGroup(self.gens, self.degree, name=self.label)
        return self._group


class Catalog:
    def __init__(self, groups, transitive):
        self.groups = {}
        for entry in groups:
            self.groups.setdefault(entry.id.order, []).append(entry)
        for order, entries in self.groups.items():
            entries.sort(key=lambda e: e.id.index)
        self.transitive = {}
        for entry in transitive:
            self.transitive.setdefault(entry.degree, []).append(entry)
        for degree, entries in self.transitive.items():
            entries.sort(key=lambda e: e.index)

    @property
    def supported_orders(self):
        return SUPPORTED_ORDERS

    def groups_of_order(self, m: int):
        if m not in SUPPORTED_ORDERS:
            raise UnsupportedOrderError(
                f"order {m} is outside the supported set {{1..32, 36, 40, 60}}"
            )
        return list(self.groups.get(m, []))

    def transitive_groups(self, n: int):
        if not 2 <= n <= 7:
            raise ValueError(f"transitive groups are catalogued for degree 2..7, not {n}")
        return list(self.transitive.get(n, []))

    def entry(self, gid: GroupId) -> CatalogEntry:
        for e in self.groups_of_order(gid.order):
            if e.id == gid:
                return e
        raise KeyError(str(gid))

    def transitive_entry(self, label: str) -> TransitiveEntry:
        label = label.upper()
        degree, _, index = label.partition("T")
        for e in self.transitive_groups(int(degree)):
            if e.index == int(index):
                return e
        raise KeyError(label)

    def identify_transitive(self, G: PermGroup) -> str:
        """The nTk label of the entry conjugate to G in Sym(degree)."""
        if G.degree > 7:
            raise ValueError("identification supported for degree <= 7 only")
        if not G.is_transitive():
            raise ValueError("group is not transitive")
        order = G.order()
        for entry in self.transitive_groups(G.degree):
            cand = entry.group()
            if cand.order() != order:
                continue
            if conjugating_perm_in_sym(G, cand) is not None:
                return entry.label
        raise LookupError("no catalogue entry is conjugate to the given group")


# -- text format -----------------------------------------------------------------


def parse_catalog(text: str) -> Catalog:
    groups = []
    transitive = []
    version_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if not version_seen:
            if fields[0] != "HGCATALOG" or len(fields) != 2:
                raise ValueError(f"line {lineno}: missing HGCATALOG header")
            if fields[1] != FORMAT_VERSION:
                raise ValueError(f"line {lineno}: unsupported format version {fields[1]}")
            version_seen = True
            continue
        if fields[0] == "G":
            if len(fields) != 6:
                raise ValueError(f"line {lineno}: malformed G record")
            order, index, name, degree, gens = (
                int(fields[1]), int(fields[2]), fields[3], int(fields[4]), fields[5],
            )
            entry = CatalogEntry(
                id=GroupId(order, index),
                name=name,
                degree=degree,
                gens=tuple(parse_perm_list(gens, degree)),
            )
            groups.append(entry)
        elif fields[0] == "T":
            if len(fields) != 5:
                raise ValueError(f"line {lineno}: malformed T record")
            degree, index, name, gens = (
                int(fields[1]), int(fields[2]), fields[3], fields[4],
            )
            transitive.append(
                TransitiveEntry(
                    degree=degree,
                    index=index,
                    name=name,
                    gens=tuple(parse_perm_list(gens, degree)),
                )
            )
        else:
            raise ValueError(f"line {lineno}: unknown record type {fields[0]!r}")
    catalog = Catalog(groups, transitive)
    for order, entries in catalog.groups.items():
        for e in entries:
            e.is_abelian = e.group().is_abelian()
            e.is_solvable = is_solvable(e.group())
    return catalog


def print_catalog(catalog: Catalog) -> str:
    lines = ["# hopfgalois group catalog", f"HGCATALOG {FORMAT_VERSION}"]
    for order in sorted(catalog.groups):
        for e in catalog.groups[order]:
            lines.append(
                f"G {e.id.order} {e.id.index} {e.name} {e.degree} "
                f"{perm_list_string(e.gens)}"
            )
    for degree in sorted(catalog.transitive):
        for e in catalog.transitive[degree]:
            lines.append(
                f"T {e.degree} {e.index} {e.name} {perm_list_string(e.gens)}"
            )
    return "\n".join(lines) + "\n"


_DEFAULT: Catalog | None = None


def default_catalog_text() -> str:
    override = os.environ.get("HG_CATALOG")
    if override:
        with open(override, "r", encoding="utf-8") as fh:
            return fh.read()
    return resources.files("hopfgalois.data").joinpath("catalog.txt").read_text("utf-8")


def load_catalog(path: str | None = None) -> Catalog:
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_catalog(fh.read())
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = parse_catalog(default_catalog_text())
    return _DEFAULT


def groups_of_order(m: int, catalog: Catalog | None = None):
    return (catalog or load_catalog()).groups_of_order(m)


def transitive_groups(n: int, catalog: Catalog | None = None):
    return (catalog or load_catalog()).transitive_groups(n)


def identify_transitive(G: PermGroup, catalog: Catalog | None = None) -> str:
    return (catalog or load_catalog()).identify_transitive(G)


# -- verification ------------------------------------------------------------------


@dataclass
class VerificationCheck:
    name: str
    passed: bool
    detail: str = ""


def verify_catalog(catalog: Catalog | None = None, deep: bool = True):
    """Run every catalogue self-check; raises on the first failure.

    Checks: per-order counts against the classical census, per-entry order
    correctness, pairwise non-isomorphism within each order, transitive
    entries transitive with correct counts and pairwise non-conjugate, and
    (for degrees <= 5) agreement with an exhaustive enumeration of the
    transitive subgroups of the symmetric group up to conjugacy.
    """
    catalog = catalog or load_catalog()
    checks = []

    def check(name, passed, detail=""):
        checks.append(VerificationCheck(name, bool(passed), detail))
        if not passed:
            raise CatalogVerificationError(f"{name}: {detail}")

    for order in sorted(SUPPORTED_ORDERS):
        entries = catalog.groups_of_order(order)
        check(
            f"count[{order}]",
            len(entries) == KNOWN_GROUP_COUNTS[order],
            f"{len(entries)} entries, expected {KNOWN_GROUP_COUNTS[order]}",
        )
        for e in entries:
            check(
                f"order[{e.id}]",
                e.group().order() == order,
                f"generators give order {e.group().order()}",
            )
            check(
                f"tags[{e.id}]",
                e.is_abelian == e.group().is_abelian()
                and e.is_solvable == is_solvable(e.group()),
                "stored tag bits disagree with recomputation",
            )
    if deep:
        for order in sorted(SUPPORTED_ORDERS):
            entries = catalog.groups_of_order(order)
            keys = [iso_invariant_key(e.group()) for e in entries]
            for i in range(len(entries)):
                for j in range(i + 1, len(entries)):
                    if keys[i] != keys[j]:
                        continue
                    flag, _ = is_isomorphic(entries[i].group(), entries[j].group())
                    check(
                        f"noniso[{entries[i].id},{entries[j].id}]",
                        not flag,
                        "entries are isomorphic",
                    )
            check(f"noniso[{order}]", True, f"{len(entries)} pairwise non-isomorphic")

    for degree in range(2, 8):
        entries = catalog.transitive_groups(degree)
        check(
            f"tcount[{degree}]",
            len(entries) == KNOWN_TRANSITIVE_COUNTS[degree],
            f"{len(entries)} entries, expected {KNOWN_TRANSITIVE_COUNTS[degree]}",
        )
        check(
            f"tlabels[{degree}]",
            [e.index for e in entries] == list(range(1, len(entries) + 1)),
            "labels are not 1..k in order",
        )
        for e in entries:
            check(f"ttrans[{e.label}]", e.group().is_transitive(), "not transitive")
        if deep:
            for i in range(len(entries)):
                for j in range(i + 1, len(entries)):
                    a, b = entries[i].group(), entries[j].group()
                    if a.order() != b.order():
                        continue
                    conj = conjugating_perm_in_sym(a, b)
                    check(
                        f"tnonconj[{entries[i].label},{entries[j].label}]",
                        conj is None,
                        "entries are conjugate",
                    )
    if deep:
        for degree in range(2, 6):
            found = enumerate_transitive_subgroups(degree)
            entries = catalog.transitive_groups(degree)
            check(
                f"texhaustive[{degree}]",
                len(found) == len(entries),
                f"enumeration found {len(found)} classes",
            )
            for cls in found:
                rep = cls[0]
                matches = [
                    e.label
                    for e in entries
                    if e.group().order() == rep.order()
                    and conjugating_perm_in_sym(rep, e.group()) is not None
                ]
                check(
                    f"tmatch[{degree},order {rep.order()}]",
                    len(matches) == 1,
                    f"enumerated class matches {matches}",
                )
    return checks


def enumerate_transitive_subgroups(n: int):
    """All transitive subgroups of Sym(n) up to conjugacy, by exhaustion (n <= 5)."""
    from .group import symmetric_group

    if n > 5:
        raise ValueError("exhaustive enumeration supported for n <= 5")
    sym = symmetric_group(n)
    subs = [H for H in all_subgroups(sym) if H.is_transitive()]
    return fuse_under_conjugation(sym, subs)

"""Permutations of {0, ..., n-1} with 1-based cycle notation at the boundary.

Composition convention, fixed for the whole package: ``(p * q)(x) == p(q(x))``,
i.e. the right factor acts first.  Points are 0-based everywhere in code;
cycle strings are 1-based, matching the usual written notation.
"""

from __future__ import annotations

import re
from math import lcm


class Perm:
    """An immutable permutation, stored as its tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images!r}")
        self.images = images

    @staticmethod
    def _raw(images: tuple) -> Perm:
        """Unvalidated constructor for internal arithmetic (hot path)."""
        p = object.__new__(Perm)
        p.images = images
        return p

    @staticmethod
    def identity(degree: int) -> Perm:
        return Perm._raw(tuple(range(degree)))

    @staticmethod
    def from_cycles(degree: int, cycles) -> Perm:
        """Build a permutation from 0-based cycles, e.g. [(0, 5), (1, 6)]."""
        images = list(range(degree))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:]):
                images[a] = b
            if cycle:
                images[cycle[-1]] = cycle[0]
        return Perm(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Perm) -> Perm:
        s = self.images
        o = other.images
        if len(s) != len(o):
            raise ValueError(f"degree mismatch: {len(s)} vs {len(o)}")
        return Perm._raw(tuple(s[x] for x in o))

    def inverse(self) -> Perm:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm._raw(tuple(inv))

    def __pow__(self, n: int) -> Perm:
        if n < 0:
            return self.inverse() ** (-n)
        result = Perm.identity(len(self.images))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: Perm) -> bool:
        return self.images < other.images

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, include_fixed: bool = False):
        """Disjoint cycles as tuples of 0-based points, smallest point first."""
        seen = [False] * len(self.images)
        out = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                seen[x] = True
                cycle.append(x)
                x = self.images[x]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def cycle_type(self) -> tuple:
        """Partition of the degree by cycle lengths, descending."""
        return tuple(
            sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True)
        )

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def fixed_points(self) -> tuple:
        return tuple(i for i, j in enumerate(self.images) if i == j)

    def conjugated_by(self, g: Perm) -> Perm:
        """Return g * self * g^-1."""
        return g * self * g.inverse()

    def commutator(self, other: Perm) -> Perm:
        """Return self^-1 * other^-1 * self * other."""
        return self.inverse() * other.inverse() * self * other

    def __repr__(self) -> str:
        return f"Perm({self.cycle_string()!r}, degree={self.degree})"

    def __str__(self) -> str:
        return self.cycle_string()

    def cycle_string(self) -> str:
        """1-based cycle notation, e.g. ``(1,6)(2,7)(3,5)(4,8)``; identity is ``()``."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join(
            "(" + ",".join(str(x + 1) for x in c) + ")" for c in cycles
        )


_CYCLE_RE = re.compile(r"\(\s*([0-9\s,]*?)\s*\)")


def parse_perm(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation; whitespace-insensitive, round-trip exact."""
    stripped = re.sub(r"\s+", "", text)
    if stripped in ("", "()"):
        return Perm.identity(degree)
    pos = 0
    cycles = []
    for match in _CYCLE_RE.finditer(stripped):
        if match.start() != pos:
            raise ValueError(f"malformed cycle notation: {text!r}")
        pos = match.end()
        body = match.group(1)
        if not body:
            continue
        points = [int(tok) - 1 for tok in body.split(",")]
        if any(p < 0 or p >= degree for p in points):
            raise ValueError(f"point out of range 1..{degree} in {text!r}")
        if len(set(points)) != len(points):
            raise ValueError(f"repeated point inside a cycle: {text!r}")
        cycles.append(tuple(points))
    if pos != len(stripped):
        raise ValueError(f"malformed cycle notation: {text!r}")
    flat = [p for c in cycles for p in c]
    if len(set(flat)) != len(flat):
        raise ValueError(f"cycles are not disjoint: {text!r}")
    return Perm.from_cycles(degree, cycles)


def parse_perm_list(text: str, degree: int) -> list:
    """Parse a ``;``-separated list of cycle-notation permutations."""
    parts = [part for part in text.split(";") if part.strip()]
    return [parse_perm(part, degree) for part in parts]


def perm_list_string(perms) -> str:
    return ";".join(p.cycle_string() for p in perms)

"""Exact permutations of {0, ..., n-1} with cycle arithmetic and cycle-notation I/O.

Points are 0-based everywhere in this package.  The 1-based convention of
classical cycle notation appears only at the text boundary: parse_cycles
reads "(1 2 3)" style strings and format_cycles writes them.  Composition
follows function notation, (p * q)(x) = p(q(x)), so q acts first.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator


class CycleNotationError(ValueError):
    """Cycle-notation text that cannot be parsed."""


class Permutation:
    """An immutable bijection of {0, ..., n-1}, stored as its image tuple.

    images[x] is the image of x.  Instances are hashable and totally
    ordered by lexicographic comparison of image tuples; that ordering is
    the canonical order used for deterministic scans across the package.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        imgs = tuple(images)
        n = len(imgs)
        if n == 0:
            raise ValueError("degree must be at least 1")
        seen = [False] * n
        for x in imgs:
            if not isinstance(x, int) or not 0 <= x < n:
                raise ValueError(f"not a bijection of 0..{n - 1}: bad image {x!r}")
            if seen[x]:
                raise ValueError(f"not a bijection of 0..{n - 1}: image {x} repeats")
            seen[x] = True
        self.images = imgs
        self._hash = hash(imgs)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Iterable[int]]) -> "Permutation":
        """Build from disjoint cycles of 0-based points."""
        images = list(range(degree))
        touched = set()
        for cyc in cycles:
            cyc = tuple(cyc)
            for a in cyc:
                if not 0 <= a < degree:
                    raise ValueError(f"point {a} out of range 0..{degree - 1}")
                if a in touched:
                    raise ValueError(f"point {a} repeats across cycles")
                touched.add(a)
            for i, a in enumerate(cyc):
                images[a] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self.images) != len(other.images):
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        s = self.images
        return Permutation(s[x] for x in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(inv)

    def __pow__(self, m: int) -> "Permutation":
        n = len(self.images)
        images = [0] * n
        for cyc in self.cycles(include_fixed=True):
            k = len(cyc)
            shift = m % k
            for i, a in enumerate(cyc):
                images[a] = cyc[(i + shift) % k]
        return Permutation(images)

    def cycles(self, include_fixed: bool = False) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles, each starting at its least point, sorted by least point."""
        out = []
        done = [False] * len(self.images)
        for start in range(len(self.images)):
            if done[start]:
                continue
            cyc = [start]
            done[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                done[x] = True
                x = self.images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return tuple(out)

    def cycle_type(self) -> tuple[int, ...]:
        """Multiset of cycle lengths, fixed points included, sorted nondecreasing."""
        return tuple(sorted(len(c) for c in self.cycles(include_fixed=True)))

    def fixed_points(self) -> frozenset[int]:
        return frozenset(x for x, y in enumerate(self.images) if x == y)

    def support(self) -> frozenset[int]:
        return frozenset(x for x, y in enumerate(self.images) if x != y)

    def order(self) -> int:
        return math.lcm(*self.cycle_type())

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images))

    def is_cycle(self) -> bool:
        """Exactly one cycle of length >= 2; fixed points are allowed."""
        return len(self.cycles()) == 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __le__(self, other: "Permutation") -> bool:
        return self.images <= other.images

    def __gt__(self, other: "Permutation") -> bool:
        return self.images > other.images

    def __ge__(self, other: "Permutation") -> bool:
        return self.images >= other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation.parse({format_cycles(self)!r}, {self.degree})"

    def __str__(self) -> str:
        return format_cycles(self)

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        return parse_cycles(text, degree)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p after q: x maps to p(q(x))."""
    return p * q


def conjugate(p: Permutation, g: Permutation) -> Permutation:
    """g^-1 * p * g, the conjugate of p by g acting on relabelled points."""
    return g.inverse() * p * g


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation like "(1 2 3)(4 5)" into a Permutation.

    Whitespace and commas separate points; "()" denotes the identity.
    Cycles must be disjoint and every point must lie in 1..degree.
    """
    if degree < 1:
        raise ValueError("degree must be at least 1")
    s = text.strip()
    if not s:
        raise CycleNotationError("empty cycle notation")
    cycles: list[list[int]] = []
    taken: set[int] = set()
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise CycleNotationError(f"expected '(' near {s[i:i + 10]!r}")
        j = s.find(")", i)
        if j < 0:
            raise CycleNotationError(f"unclosed '(' near {s[i:i + 10]!r}")
        body = s[i + 1:j].replace(",", " ")
        cyc: list[int] = []
        for tok in body.split():
            try:
                k = int(tok)
            except ValueError:
                raise CycleNotationError(f"bad point {tok!r}") from None
            if not 1 <= k <= degree:
                raise CycleNotationError(f"point {k} out of range 1..{degree}")
            if k - 1 in taken or k - 1 in cyc:
                raise CycleNotationError(f"repeated point {k}")
            cyc.append(k - 1)
        taken.update(cyc)
        if cyc:
            cycles.append(cyc)
        i = j + 1
    return Permutation.from_cycles(degree, cycles)


def format_cycles(p: Permutation) -> str:
    """Write 1-based cycle notation: fixed points omitted, identity is "()"."""
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(a + 1) for a in cyc) + ")" for cyc in cycles)


def all_permutations(degree: int) -> Iterator[Permutation]:
    """Every permutation of the given degree in canonical (lexicographic) order."""
    import itertools

    for images in itertools.permutations(range(degree)):
        yield Permutation(images)

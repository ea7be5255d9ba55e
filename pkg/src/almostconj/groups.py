"""Finite permutation groups at desk scale: full element enumeration, conjugacy
classes, coset actions, and exhaustive subgroup search.

Everything here works with explicit element lists.  That is deliberate: the
orders involved stay below a few thousand, and exhaustive scans keep every
result deterministic and certifiable.  Element lists are always sorted in
canonical (lexicographic image) order, so any "first found" answer is stable
across runs and generator orderings.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .arith import is_prime_power
from .perms import Permutation, conjugate

DEFAULT_ELEMENT_CAP = 100_000
DEFAULT_SUBGROUP_CAP = 50_000

# order**2 multiplication tables back the subgroup search; beyond S7 they stop
# being desk scale
_TABLE_LIMIT = 5100


class CapExceededError(RuntimeError):
    """An enumeration outgrew its configured cap.

    partial_count holds how many objects had been found when the cap hit.
    """

    def __init__(self, message: str, partial_count: int):
        super().__init__(message)
        self.partial_count = partial_count


@dataclass(frozen=True)
class EnumerationLimits:
    """Caps threaded through enumeration-heavy entry points."""

    element_cap: int = DEFAULT_ELEMENT_CAP
    subgroup_cap: int = DEFAULT_SUBGROUP_CAP


def _close_permutations(
    generators: Sequence[Permutation], cap: int, what: str = "group"
) -> set[Permutation]:
    identity = Permutation.identity(generators[0].degree)
    els = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for a in frontier:
            for g in generators:
                c = a * g
                if c not in els:
                    els.add(c)
                    new.append(c)
                    if len(els) > cap:
                        raise CapExceededError(
                            f"{what} enumeration exceeded cap {cap}", len(els)
                        )
        frontier = new
    return els


class PermGroup:
    """A permutation group given by generators, with its full element list."""

    def __init__(self, generators: Iterable[Permutation], cap: int = DEFAULT_ELEMENT_CAP):
        gens = tuple(generators)
        if not gens:
            raise ValueError("at least one generator is required")
        degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"degree mismatch: {degree} vs {g.degree}")
        self.degree = degree
        self.generators = gens
        self.elements: tuple[Permutation, ...] = tuple(
            sorted(_close_permutations(gens, cap))
        )
        self.element_set: frozenset[Permutation] = frozenset(self.elements)
        self.identity = Permutation.identity(degree)
        self.named_subgroups: dict[str, "Subgroup"] = {}
        self._classes: Optional[tuple["ConjugacyClass", ...]] = None
        self._class_of: Optional[dict[Permutation, int]] = None
        self._index: Optional[dict[Permutation, int]] = None
        self._mult: Optional[list[list[int]]] = None
        self._inv: Optional[list[int]] = None
        self._lattice: Optional[_Lattice] = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in self.element_set

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"<PermGroup degree {self.degree} order {self.order} = <{gens}>>"

    # -- multiplication tables -------------------------------------------------

    def _tables(self) -> tuple[dict[Permutation, int], list[list[int]], list[int]]:
        if self._mult is None:
            n = self.order
            if n > _TABLE_LIMIT:
                raise CapExceededError(
                    f"group of order {n} is beyond the subgroup-search table limit"
                    f" {_TABLE_LIMIT}",
                    n,
                )
            by_images = {p.images: i for i, p in enumerate(self.elements)}
            mult = []
            for a in self.elements:
                ai = a.images
                row = [
                    by_images[tuple(ai[x] for x in b.images)] for b in self.elements
                ]
                mult.append(row)
            self._index = {p: i for i, p in enumerate(self.elements)}
            self._mult = mult
            self._inv = [by_images[p.inverse().images] for p in self.elements]
        return self._index, self._mult, self._inv


def generate_elements(
    generators: Iterable[Permutation], cap: int = DEFAULT_ELEMENT_CAP
) -> PermGroup:
    """Multiplication-closure of the generators, as a PermGroup.

    Raises CapExceededError (with the partial count) if the closure passes cap.
    The resulting element list does not depend on generator order.
    """
    return PermGroup(generators, cap=cap)


class Subgroup:
    """A subgroup of a PermGroup, held as an explicit sorted element tuple."""

    __slots__ = ("parent", "elements", "element_set", "_gens")

    def __init__(
        self,
        parent: PermGroup,
        elements: Iterable[Permutation],
        check: bool = True,
    ):
        self.parent = parent
        self.elements: tuple[Permutation, ...] = tuple(sorted(set(elements)))
        self.element_set: frozenset[Permutation] = frozenset(self.elements)
        self._gens: Optional[tuple[Permutation, ...]] = None
        if check:
            if not self.elements:
                raise ValueError("a subgroup cannot be empty")
            if not self.element_set <= parent.element_set:
                raise ValueError("elements do not all lie in the parent group")
            for a in self.elements:
                for b in self.elements:
                    if a * b not in self.element_set:
                        raise ValueError(
                            f"not closed under composition: {a} * {b} escapes"
                        )

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __contains__(self, p: Permutation) -> bool:
        return p in self.element_set

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.parent is other.parent
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash(self.elements)

    def generating_set(self) -> tuple[Permutation, ...]:
        """A small generating set, chosen greedily in canonical order."""
        if self._gens is None:
            gens: list[Permutation] = []
            closure = {self.parent.identity}
            for p in self.elements:
                if p not in closure:
                    gens.append(p)
                    closure = _close_permutations(gens, cap=self.order)
                    if len(closure) == self.order:
                        break
            if not gens:
                gens = [self.parent.identity]
            self._gens = tuple(gens)
        return self._gens

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generating_set())
        return f"<Subgroup order {self.order} = <{gens}> of order-{self.parent.order} group>"


def subgroup_from_generators(
    parent: PermGroup, generators: Iterable[Permutation]
) -> Subgroup:
    """The subgroup of parent generated by the given elements."""
    gens = tuple(generators)
    if not gens:
        return Subgroup(parent, [parent.identity], check=False)
    for g in gens:
        if g not in parent.element_set:
            raise ValueError(f"generator {g} does not lie in the group")
    els = _close_permutations(gens, cap=parent.order)
    sub = Subgroup(parent, els, check=False)
    sub._gens = gens
    return sub


def trivial_subgroup(parent: PermGroup) -> Subgroup:
    return Subgroup(parent, [parent.identity], check=False)


def whole_subgroup(parent: PermGroup) -> Subgroup:
    return Subgroup(parent, parent.elements, check=False)


# -- conjugacy ----------------------------------------------------------------


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Permutation
    members: tuple[Permutation, ...]
    element_order: int

    @property
    def size(self) -> int:
        return len(self.members)


def conjugacy_classes(group: PermGroup) -> tuple[ConjugacyClass, ...]:
    """Conjugacy classes, sorted by (element order, size, representative).

    The representative of each class is its canonical-minimal member.
    """
    if group._classes is None:
        remaining = set(group.elements)
        classes = []
        for p in group.elements:
            if p not in remaining:
                continue
            orbit = {p}
            frontier = [p]
            while frontier:
                new = []
                for x in frontier:
                    for g in group.generators:
                        y = conjugate(x, g)
                        if y not in orbit:
                            orbit.add(y)
                            new.append(y)
                frontier = new
            remaining -= orbit
            members = tuple(sorted(orbit))
            classes.append(
                ConjugacyClass(members[0], members, members[0].order())
            )
        classes.sort(key=lambda c: (c.element_order, c.size, c.representative))
        group._classes = tuple(classes)
        group._class_of = {
            p: i for i, c in enumerate(group._classes) for p in c.members
        }
    return group._classes


def class_index_map(group: PermGroup) -> dict[Permutation, int]:
    """element -> index of its class in the conjugacy_classes ordering."""
    conjugacy_classes(group)
    assert group._class_of is not None
    return group._class_of


def are_conjugate_subgroups(
    group: PermGroup, h1: Subgroup, h2: Subgroup
) -> tuple[bool, Optional[Permutation]]:
    """Exhaustive conjugacy test; on success the witness g has g^-1 H1 g = H2."""
    if h1.order != h2.order:
        raise ValueError(
            f"subgroups have different orders: {h1.order} vs {h2.order}"
        )
    if h1.element_set == h2.element_set:
        return True, group.identity
    probe = next((p for p in h1.elements if not p.is_identity()), None)
    target = h2.element_set
    for g in group.elements:
        ginv = g.inverse()
        if probe is not None and ginv * probe * g not in target:
            continue
        if {ginv * h * g for h in h1.elements} == target:
            return True, g
    return False, None


def normal_closure(group: PermGroup, elements: Iterable[Permutation]) -> Subgroup:
    """Smallest normal subgroup of the group containing the given elements."""
    seed = tuple(elements)
    for s in seed:
        if s not in group.element_set:
            raise ValueError(f"element {s} does not lie in the group")
    conj_gens = {conjugate(s, g) for s in seed for g in group.elements}
    conj_gens.discard(group.identity)
    if not conj_gens:
        return trivial_subgroup(group)
    els = _close_permutations(tuple(sorted(conj_gens)), cap=group.order)
    return Subgroup(group, els, check=False)


# -- group actions ------------------------------------------------------------


class GSet:
    """An action of a group on points 0..size-1.

    action maps every group element to the degree-size Permutation it induces;
    the map is a homomorphism by construction.  points records which original
    points the positions stand for (identity labelling unless this GSet is a
    restriction of a larger one).
    """

    __slots__ = ("group", "size", "points", "action", "coset_reps", "subgroup")

    def __init__(
        self,
        group,
        size: int,
        action: dict[Permutation, Permutation],
        points: Optional[tuple[int, ...]] = None,
        coset_reps: Optional[tuple[Permutation, ...]] = None,
        subgroup: Optional[Subgroup] = None,
    ):
        self.group = group
        self.size = size
        self.points = tuple(range(size)) if points is None else points
        self.action = action
        self.coset_reps = coset_reps
        self.subgroup = subgroup

    def perm(self, g: Permutation) -> Permutation:
        """The permutation of 0..size-1 induced by the group element g."""
        return self.action[g]

    def act(self, g: Permutation, i: int) -> int:
        return self.action[g].images[i]

    def acting_elements(self) -> tuple[Permutation, ...]:
        return self.group.elements

    def acting_generators(self) -> tuple[Permutation, ...]:
        if isinstance(self.group, PermGroup):
            return self.group.generators
        return self.group.generating_set()

    def restrict(self, point_subset: Iterable[int], group=None) -> "GSet":
        """The action of `group` (default: the same group) on an invariant set
        of positions, renumbered 0..t-1 in increasing original order."""
        pts = tuple(sorted(point_subset))
        acting = self.group if group is None else group
        reindex = {p: i for i, p in enumerate(pts)}
        sub_action = {}
        for g in acting.elements:
            imgs = self.action[g].images
            moved = []
            for p in pts:
                q = imgs[p]
                if q not in reindex:
                    raise ValueError(f"point set is not invariant: {p} leaves it")
                moved.append(reindex[q])
            sub_action[g] = Permutation(moved)
        return GSet(
            acting,
            len(pts),
            sub_action,
            points=tuple(self.points[p] for p in pts),
        )

    def __repr__(self) -> str:
        return f"<GSet of size {self.size} under order-{len(self.group.elements)} group>"


def natural_gset(group: PermGroup) -> GSet:
    """The group acting on its own 0..degree-1 points."""
    return GSet(group, group.degree, {g: g for g in group.elements})


def coset_action(group: PermGroup, h: Subgroup) -> GSet:
    """The left-translation action of the group on the cosets gH.

    Position 0 is the coset H itself; positions are ordered by canonical
    minimal coset representative, recorded in coset_reps.
    """
    if not h.element_set <= group.element_set:
        raise ValueError("H is not a subgroup of the given group")
    coset_of: dict[Permutation, int] = {}
    reps: list[Permutation] = []
    for g in group.elements:
        if g in coset_of:
            continue
        idx = len(reps)
        reps.append(g)
        for x in h.elements:
            coset_of[g * x] = idx
    m = len(reps)
    assert m * h.order == group.order
    action = {
        g: Permutation(coset_of[g * r] for r in reps) for g in group.elements
    }
    return GSet(group, m, action, coset_reps=tuple(reps), subgroup=h)


def stabilizer_of_point(omega: GSet, i: int) -> Subgroup:
    """The subgroup of elements whose action fixes position i."""
    if not isinstance(omega.group, PermGroup):
        raise ValueError("stabilizers are only taken inside a full PermGroup")
    if not 0 <= i < omega.size:
        raise ValueError(f"position {i} out of range 0..{omega.size - 1}")
    els = [g for g in omega.group.elements if omega.action[g].images[i] == i]
    return Subgroup(omega.group, els, check=False)


# -- exhaustive subgroup search ----------------------------------------------


@dataclass
class _Lattice:
    bound: int
    # frozenset of element indices -> generating index tuple
    subgroups: dict[frozenset[int], tuple[int, ...]]
    # conjugacy classes of subgroups, each a list of frozensets (sorted), class
    # list sorted by canonical representative
    classes: list[list[frozenset[int]]]


def _closure_idx(
    mult: list[list[int]], gens: Sequence[int], id_idx: int, bound: int
) -> Optional[frozenset[int]]:
    """Closure of the generators inside the index table, or None past bound."""
    seen = bytearray(len(mult))
    seen[id_idx] = 1
    members = [id_idx]
    frontier = [id_idx]
    while frontier:
        new = []
        for a in frontier:
            row = mult[a]
            for g in gens:
                c = row[g]
                if not seen[c]:
                    seen[c] = 1
                    members.append(c)
                    if len(members) > bound:
                        return None
                    new.append(c)
        frontier = new
    return frozenset(members)


def _subgroup_lattice(group: PermGroup, bound: int, cap: int) -> _Lattice:
    """All subgroups of order <= bound, exhaustively, grouped by conjugacy.

    Joins are taken between conjugacy-class representatives and cyclic
    subgroups of prime-power order; every new subgroup is closed under
    conjugation immediately.  Every subgroup is the join of its prime-power
    cyclic subgroups, and a conjugate of any join of a representative is the
    join of a conjugate, so the sweep is exhaustive below the bound.
    """
    if group._lattice is not None and group._lattice.bound >= bound:
        return group._lattice
    index, mult, inv = group._tables()
    n = group.order
    id_idx = index[group.identity]
    gen_idxs = sorted({index[g] for g in group.generators})

    subgroups: dict[frozenset[int], tuple[int, ...]] = {}
    classes: list[list[frozenset[int]]] = []
    queue: deque[tuple[frozenset[int], tuple[int, ...]]] = deque()

    def conj_set(fs: frozenset[int], g: int) -> frozenset[int]:
        gi = inv[g]
        row_of = mult
        return frozenset(row_of[row_of[gi][x]][g] for x in fs)

    def add_class(fs: frozenset[int], gens: tuple[int, ...]) -> None:
        orbit = {fs: gens}
        frontier = [fs]
        while frontier:
            new = []
            for cur in frontier:
                cur_gens = orbit[cur]
                for g in gen_idxs:
                    img = conj_set(cur, g)
                    if img not in orbit:
                        gi = inv[g]
                        orbit[img] = tuple(
                            mult[mult[gi][x]][g] for x in cur_gens
                        )
                        new.append(img)
            frontier = new
        members = sorted(orbit, key=lambda s: tuple(sorted(s)))
        classes.append(members)
        for member in members:
            subgroups[member] = orbit[member]
        if len(subgroups) > cap:
            raise CapExceededError(
                f"subgroup search exceeded cap {cap}", len(subgroups)
            )
        rep = members[0]
        queue.append((rep, subgroups[rep]))

    # seed: every cyclic subgroup; join partners: the prime-power ones
    pp_cyclics: list[int] = []
    seen_cyclic: set[frozenset[int]] = set()
    for e in range(n):
        members = [id_idx]
        x = e
        while x != id_idx:
            members.append(x)
            x = mult[x][e]
        fs = frozenset(members)
        if is_prime_power(len(fs)) and len(fs) <= bound:
            pp_cyclics.append(e)
        if fs in seen_cyclic or len(fs) > bound:
            continue
        seen_cyclic.add(fs)
        if fs not in subgroups:
            add_class(fs, (e,))

    while queue:
        rep_fs, rep_gens = queue.popleft()
        for c in pp_cyclics:
            if c in rep_fs:
                continue
            joined = _closure_idx(mult, rep_gens + (c,), id_idx, bound)
            if joined is not None and joined not in subgroups:
                add_class(joined, rep_gens + (c,))

    lattice = _Lattice(bound, subgroups, classes)
    group._lattice = lattice
    return lattice


def _subgroup_from_indices(group: PermGroup, fs: frozenset[int]) -> Subgroup:
    els = [group.elements[i] for i in sorted(fs)]
    return Subgroup(group, els, check=False)


def subgroup_classes_of_order(
    group: PermGroup, order: int, cap: int = DEFAULT_SUBGROUP_CAP
) -> list[list[Subgroup]]:
    """Conjugacy classes of subgroups of the exact order, exhaustively.

    Classes are sorted by their canonical representative, members likewise.
    """
    if order < 1:
        raise ValueError(f"subgroup order must be positive, got {order}")
    if group.order % order != 0:
        raise ValueError(
            f"{order} does not divide the group order {group.order}"
        )
    if order == group.order:
        return [[whole_subgroup(group)]]
    if order == 1:
        return [[trivial_subgroup(group)]]
    lattice = _subgroup_lattice(group, order, cap)
    out = []
    for cls in lattice.classes:
        if len(cls[0]) == order:
            out.append([_subgroup_from_indices(group, fs) for fs in cls])
    out.sort(key=lambda cls: cls[0].elements)
    return out


def subgroups_of_order(
    group: PermGroup, order: int, cap: int = DEFAULT_SUBGROUP_CAP
) -> list[Subgroup]:
    """All subgroups of the exact order, sorted canonically."""
    flat = [
        sub
        for cls in subgroup_classes_of_order(group, order, cap)
        for sub in cls
    ]
    flat.sort(key=lambda s: s.elements)
    return flat

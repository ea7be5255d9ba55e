"""Orbit, block, and fixed-point structure of group actions.

Everything here works on a GSet, so the same code serves natural actions,
coset actions, and restrictions.  Points are positions 0..size-1; callers
that print for humans convert to 1-based themselves.

The block machinery centres on groups generated by cycles (permutations with
exactly one cycle of length >= 2).  For such groups the common fixed-point
set can be read off a single well-chosen element, which is what makes
set-level facts about blocks detectable from fixed-point counts alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime
from .groups import (
    GSet,
    PermGroup,
    Subgroup,
    natural_gset,
    normal_closure,
    subgroup_from_generators,
)
from .perms import Permutation


def orbits(omega: GSet) -> list[tuple[int, ...]]:
    """Orbit partition of the positions, each orbit sorted, least point first."""
    return _orbits_under(omega, omega.acting_generators())


def _orbits_under(
    omega: GSet, elements: tuple[Permutation, ...]
) -> list[tuple[int, ...]]:
    seen = [False] * omega.size
    out: list[tuple[int, ...]] = []
    perms = [omega.perm(g) for g in elements]
    for start in range(omega.size):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        queue = [start]
        while queue:
            p = queue.pop()
            for img in perms:
                q = img.images[p]
                if not seen[q]:
                    seen[q] = True
                    orbit.append(q)
                    queue.append(q)
        out.append(tuple(sorted(orbit)))
    return out


def is_transitive(omega: GSet) -> bool:
    return len(orbits(omega)) == 1


@dataclass(frozen=True)
class BlockSystem:
    """A partition of the positions into equal-size cells permuted by the group."""

    blocks: tuple[tuple[int, ...], ...]
    block_size: int

    @property
    def is_trivial(self) -> bool:
        return self.block_size == 1 or len(self.blocks) == 1

    def cell_of(self, point: int) -> tuple[int, ...]:
        for cell in self.blocks:
            if point in cell:
                return cell
        raise ValueError(f"point {point} not covered by the system")


def _system_from_partition(classes: dict[int, list[int]]) -> BlockSystem:
    blocks = tuple(sorted(tuple(sorted(c)) for c in classes.values()))
    sizes = {len(b) for b in blocks}
    assert len(sizes) == 1, f"unequal cells {sorted(sizes)}"
    return BlockSystem(blocks, len(blocks[0]))


def _blocks_with_pair(omega: GSet, x: int) -> BlockSystem:
    """Finest block system in which positions 0 and x share a cell."""
    parent = list(range(omega.size))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    gens = [omega.perm(g) for g in omega.acting_generators()]
    queue = [(0, x)]
    parent[find(x)] = find(0)
    while queue:
        a, b = queue.pop()
        for img in gens:
            ra, rb = find(img.images[a]), find(img.images[b])
            if ra != rb:
                parent[rb] = ra
                queue.append((ra, rb))
    classes: dict[int, list[int]] = {}
    for p in range(omega.size):
        classes.setdefault(find(p), []).append(p)
    return _system_from_partition(classes)


def minimal_block_system(omega: GSet) -> BlockSystem | None:
    """Smallest-cell nontrivial block system of a transitive action, or None.

    Sweeps the seed pair {0, x} over x; ties broken by the smaller x, so the
    witness is deterministic.
    """
    if not is_transitive(omega):
        raise ValueError("block systems are defined for transitive actions")
    best: BlockSystem | None = None
    for x in range(1, omega.size):
        system = _blocks_with_pair(omega, x)
        if system.block_size == omega.size:
            continue
        if best is None or system.block_size < best.block_size:
            best = system
            if best.block_size == 2:
                break
    return best


def is_primitive(omega: GSet) -> tuple[bool, BlockSystem | None]:
    """Whether only trivial block systems exist; witness system when not."""
    witness = minimal_block_system(omega)
    return witness is None, witness


def _cycle_generators(h: Subgroup, omega: GSet) -> tuple[Permutation, ...]:
    gens = h.generating_set()
    for g in gens:
        if not omega.perm(g).is_cycle():
            raise ValueError(
                f"generator {g} does not act as a cycle on the point set"
            )
    return gens


def fixed_point_detector(h: Subgroup, omega: GSet) -> Permutation:
    """An element of h whose fixed positions are exactly the h-fixed positions.

    Requires h's recorded generators to act as cycles.  Each generator's
    support then lies in a single orbit, so h splits as a direct product of
    per-orbit factors; the detector is the product of one fixed-point-free
    element from each factor.
    """
    if h.order == 1:
        return h.parent.identity
    gens = _cycle_generators(h, omega)
    detector = h.parent.identity
    for orbit in _orbits_under(omega, h.elements):
        if len(orbit) == 1:
            continue
        orbit_set = set(orbit)
        local = [g for g in gens if set(omega.perm(g).support()) <= orbit_set]
        factor = subgroup_from_generators(h.parent, local)
        for g in factor.elements:
            img = omega.perm(g).images
            if all(img[p] != p for p in orbit):
                detector = detector * g
                break
        else:
            raise AssertionError("transitive factor with no fixed-point-free element")
    fixed = omega.perm(detector).fixed_points()
    assert all(
        fixed <= omega.perm(g).fixed_points() for g in h.generating_set()
    ), "detector fixes a point some generator moves"
    return detector


def min_fixed_points(h: Subgroup, omega: GSet) -> int:
    """Number of h-fixed positions; equals the minimum over h's elements."""
    detector = fixed_point_detector(h, omega)
    count = len(omega.perm(detector).fixed_points())
    assert count == min(
        len(omega.perm(g).fixed_points()) for g in h.elements
    ), "detector does not achieve the elementwise minimum"
    return count


def common_fixed_positions(elements, omega: GSet) -> frozenset[int]:
    fixed = frozenset(range(omega.size))
    for g in elements:
        fixed &= omega.perm(g).fixed_points()
    return fixed


def rudio_fixing_set(
    omega: GSet, sigma: Permutation, x: int
) -> list[Permutation]:
    """Cycles whose common fixed set is exactly {x}, for a primitive action.

    sigma must act as a cycle of length strictly between 1 and the degree and
    fix position x.  For every other sigma-fixed position y, the first group
    element g in canonical order with g.y inside sigma's support and g.x
    outside it yields the conjugate cycle that separates y from x.
    """
    primitive, _ = is_primitive(omega)
    if not primitive:
        raise ValueError("fixing sets of this kind need a primitive action")
    image = omega.perm(sigma)
    if not image.is_cycle():
        raise ValueError("sigma does not act as a cycle")
    support = image.support()
    ell = len(support)
    if not 1 < ell < omega.size:
        raise ValueError(
            f"cycle length {ell} must be strictly between 1 and {omega.size}"
        )
    if image.images[x] != x:
        raise ValueError(f"position {x} is not fixed by sigma")
    out = [sigma]
    for y in sorted(image.fixed_points() - {x}):
        for g in omega.acting_elements():
            gi = omega.perm(g).images
            if gi[y] in support and gi[x] not in support:
                out.append(g.inverse() * sigma * g)
                break
        else:
            raise AssertionError("no separating conjugator; action not primitive?")
    assert common_fixed_positions(out, omega) == {x}
    return out


def is_two_transitive(omega: GSet) -> bool:
    """Transitive with a point stabilizer transitive on the other positions."""
    if not is_transitive(omega):
        raise ValueError("2-transitivity is defined for transitive actions")
    if omega.size == 1:
        return True
    stab = tuple(
        g for g in omega.acting_elements() if omega.perm(g).images[0] == 0
    )
    rest = _orbits_under(omega, stab)
    return sum(1 for orbit in rest if orbit != (0,)) == 1


def is_affine_type(n1: Subgroup, o1: GSet) -> tuple[bool, Subgroup | None]:
    """Whether n1 has a normal cyclic subgroup of prime order equal to the degree.

    Such a subgroup acts as the translation group of the affine line, so a
    True answer pins n1 inside the one-dimensional affine group.
    """
    ell = o1.size
    if not is_prime(ell):
        raise ValueError(f"degree {ell} is not prime")
    if len(_orbits_under(o1, tuple(n1.elements))) != 1:
        raise ValueError("the subgroup does not act transitively")
    for g in n1.elements:
        if g.order() != ell:
            continue
        candidate = subgroup_from_generators(n1.parent, [g])
        if candidate.order != ell:
            continue
        if all(
            h.inverse() * c * h in candidate.element_set
            for h in n1.elements
            for c in candidate.elements
        ):
            return True, candidate
    return False, None


@dataclass(frozen=True)
class ClosureReport:
    """Decomposition of the normal closure of all length-ell cycle actions."""

    ell: int
    image: PermGroup
    closure: Subgroup
    orbits: tuple[GSet, ...]
    t: int
    factors: tuple[Subgroup, ...]
    branch: str
    fixed_positions: tuple[int, ...]


def induced_image(omega: GSet) -> PermGroup:
    """The group of position permutations the action induces."""
    return PermGroup([omega.perm(g) for g in omega.acting_generators()])


def ell_cycle_closure_report(
    group: PermGroup, omega: GSet, ell: int
) -> ClosureReport:
    """Normal closure of all length-ell cycles in the induced image, decomposed.

    The closure's nontrivial orbits all share one size t, the closure is the
    product of its per-orbit factors, and each factor's action falls into one
    branch: t > ell, or (t = ell) two-transitive versus affine.
    """
    if ell < 2:
        raise ValueError("cycle length must be at least 2")
    if group is not omega.group:
        raise ValueError("the action does not belong to the given group")
    image = induced_image(omega)
    seeds = [p for p in image.elements if p.is_cycle() and len(p.support()) == ell]
    if not seeds:
        raise ValueError(f"no element acts as a cycle of length {ell}")
    closure = normal_closure(image, seeds)
    nat = natural_gset(image)
    all_orbits = _orbits_under(nat, closure.elements)
    nontrivial = [o for o in all_orbits if len(o) > 1]
    fixed = tuple(o[0] for o in all_orbits if len(o) == 1)
    sizes = {len(o) for o in nontrivial}
    if len(sizes) != 1:
        raise ValueError(f"orbit sizes differ: {sorted(sizes)}")
    t = sizes.pop()
    factor_subs = []
    orbit_actions = []
    for orbit in nontrivial:
        cell = set(orbit)
        members = [g for g in closure.elements if set(g.support()) <= cell]
        factor_subs.append(Subgroup(image, members, check=False))
        orbit_actions.append(nat.restrict(orbit, group=closure))
    branches = set()
    for sub, act in zip(factor_subs, orbit_actions):
        if t > ell:
            branches.add("t_greater_than_ell")
        elif is_two_transitive(act):
            branches.add("two_transitive")
        else:
            affine, _ = is_affine_type(sub, act)
            if not affine:
                raise ValueError(
                    "orbit action is neither 2-transitive nor of affine type"
                )
            branches.add("affine")
    if len(branches) != 1:
        raise ValueError(f"orbit branches disagree: {sorted(branches)}")
    return ClosureReport(
        ell=ell,
        image=image,
        closure=closure,
        orbits=tuple(orbit_actions),
        t=t,
        factors=tuple(factor_subs),
        branch=branches.pop(),
        fixed_positions=fixed,
    )


def _setwise_stabilizer(omega: GSet, cell: frozenset[int]) -> list[Permutation]:
    return [
        g
        for g in omega.acting_elements()
        if frozenset(omega.perm(g).images[p] for p in cell) == cell
    ]


def block_stabilizer_membership(
    omega: GSet, cycles: list[Permutation], g: Permutation
) -> bool:
    """Whether g stabilizes the block B = common fixed set of the given cycles.

    Decided purely through fixed-point counts: the group generated by the
    cycles together with their g-conjugates has exactly |B| fixed positions
    when g keeps B, and none when g moves it.  The answer is cross-checked
    against direct setwise stabilization.
    """
    for s in cycles:
        if not omega.perm(s).is_cycle():
            raise ValueError(f"{s} does not act as a cycle")
    block = common_fixed_positions(cycles, omega)
    if not block:
        raise ValueError("the cycles have no common fixed position")
    if not _is_block(omega, block):
        raise ValueError("the common fixed set is not a block")
    conjugates = [g * s * g.inverse() for s in cycles]
    joined = subgroup_from_generators(omega.group, list(cycles) + conjugates)
    count = min_fixed_points(joined, omega)
    if count == len(block):
        inside = True
    elif count == 0:
        inside = False
    else:
        raise ValueError(
            f"fixed count {count} strictly between 0 and {len(block)};"
            " the dichotomy fails, so a precondition does not hold"
        )
    direct = frozenset(omega.perm(g).images[p] for p in block) == block
    if inside != direct:
        raise ValueError("fixed-count verdict contradicts direct stabilization")
    return inside


def _is_block(omega: GSet, cell: frozenset[int]) -> bool:
    for g in omega.acting_elements():
        img = frozenset(omega.perm(g).images[p] for p in cell)
        if img != cell and img & cell:
            return False
    return True


def block_proof_group(
    omega: GSet, block: frozenset[int]
) -> tuple[Subgroup, Subgroup, Subgroup]:
    """(setwise stabilizer H, cycle core of the block, its outside closure K).

    The cycle core is generated by group elements acting as cycles supported
    inside the block; K is generated by its conjugates under elements outside
    H, so K fixes the block pointwise and (when the core is transitive on the
    block) is transitive on every other block.
    """
    if not _is_block(omega, block):
        raise ValueError("the given set is not a block")
    group = omega.group
    h_sub = Subgroup(group, _setwise_stabilizer(omega, block), check=False)
    core_gens = [
        g
        for g in group.elements
        if omega.perm(g).is_cycle() and set(omega.perm(g).support()) <= block
    ]
    core = subgroup_from_generators(group, core_gens)
    if len(_orbits_under(omega, core.elements)) != omega.size - len(block) + 1:
        raise ValueError("the cycles inside the block do not cover it transitively")
    k_gens = [
        g * c * g.inverse()
        for g in group.elements
        if g not in h_sub.element_set
        for c in core_gens
    ]
    return h_sub, core, subgroup_from_generators(group, k_gens)


def restricted_block_character(
    omega: GSet, block: frozenset[int], k: Subgroup, h: Permutation
) -> int:
    """Fixed positions of h inside the block, recovered from whole-set counts.

    k must fix the block pointwise and act transitively on each other block;
    h must stabilize the block setwise.  Averaging the fixed counts of h*k
    over k and subtracting the h-fixed blocks other than this one leaves the
    in-block count, which is asserted against direct counting.
    """
    h_img = omega.perm(h)
    if frozenset(h_img.images[p] for p in block) != block:
        raise ValueError("h does not stabilize the block setwise")
    outside: dict[int, set[int]] = {}
    for g in k.elements:
        img = omega.perm(g)
        if not block <= img.fixed_points():
            raise ValueError("k does not fix the block pointwise")
    for orbit in _orbits_under(omega, tuple(k.elements)):
        if block & set(orbit):
            continue
        if len(orbit) != len(block):
            raise ValueError(
                f"outside orbit {orbit} does not match the block size"
            )
        outside[orbit[0]] = set(orbit)
    covered = len(block) + sum(len(o) for o in outside.values())
    if covered != omega.size:
        raise ValueError("k's outside orbits do not cover the other blocks")
    f = 1 + sum(
        1
        for o in outside.values()
        if {h_img.images[p] for p in o} == o
    )
    total = sum(
        len(omega.perm(h * g).fixed_points()) for g in k.elements
    )
    if total % k.order != 0:
        raise ValueError(
            f"summed fixed count {total} is not divisible by |K| = {k.order}"
        )
    result = total // k.order - (f - 1)
    direct = sum(1 for p in block if h_img.images[p] == p)
    assert result == direct, f"formula {result} != direct count {direct}"
    return result

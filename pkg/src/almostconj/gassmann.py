"""Almost conjugacy of subgroups, detected and certified through characters.

Two subgroups are almost conjugate when they meet every conjugacy class of
the parent in equally many elements; equivalently the two coset actions have
the same fixed-point character.  Conjugate subgroups always qualify, so the
interesting reports are the nontrivial ones.  The criterion scanner looks
for single cycle types that force every almost conjugate pair to be
conjugate, and the excluded-prime test carves out the lengths for which that
inference is known to fail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .arith import is_prime, is_prime_power
from .groups import (
    DEFAULT_SUBGROUP_CAP,
    GSet,
    PermGroup,
    Subgroup,
    are_conjugate_subgroups,
    class_index_map,
    conjugacy_classes,
    coset_action,
    stabilizer_of_point,
    subgroup_classes_of_order,
)
from .perms import Permutation
from .structure import is_transitive


@dataclass(frozen=True)
class PermCharacter:
    """Fixed-point counts of an action, one value per conjugacy class."""

    group: PermGroup
    class_reps: tuple[Permutation, ...]
    values: tuple[int, ...]


def perm_character(omega: GSet) -> PermCharacter:
    """The class function counting fixed positions of each element's action.

    Spot-checks one further member per class, since equal counts across a
    class are what make the values well defined.
    """
    group = omega.group
    reps = []
    values = []
    for cls in conjugacy_classes(group):
        count = len(omega.perm(cls.representative).fixed_points())
        probe = cls.members[len(cls.members) // 2]
        assert len(omega.perm(probe).fixed_points()) == count
        reps.append(cls.representative)
        values.append(count)
    return PermCharacter(group, tuple(reps), tuple(values))


def class_intersection_profile(group: PermGroup, h: Subgroup) -> tuple[int, ...]:
    """|H meets C| over the conjugacy classes C, in canonical class order."""
    lookup = class_index_map(group)
    counts = [0] * len(conjugacy_classes(group))
    for x in h.elements:
        counts[lookup[x]] += 1
    assert sum(counts) == h.order
    return tuple(counts)


def is_gassmann_equivalent(omega: GSet, omega2: GSet) -> bool:
    """Whether the two actions of one group have identical characters."""
    if omega.group is not omega2.group:
        raise ValueError("the two actions must share one parent group")
    return perm_character(omega).values == perm_character(omega2).values


@dataclass(frozen=True)
class GassmannReport:
    h1: Subgroup
    h2: Subgroup
    gassmann: bool
    trivial: bool
    conjugating_witness: Optional[Permutation]
    intersection_profiles: tuple[tuple[int, ...], tuple[int, ...]]


def is_gassmann_triple(group: PermGroup, h1: Subgroup, h2: Subgroup) -> GassmannReport:
    """Full report on (group; h1, h2), with the three characterizations
    (class profiles, coset-action characters, elementwise fixed counts)
    asserted to agree."""
    p1 = class_intersection_profile(group, h1)
    p2 = class_intersection_profile(group, h2)
    gassmann = p1 == p2
    om1, om2 = coset_action(group, h1), coset_action(group, h2)
    assert gassmann == (perm_character(om1).values == perm_character(om2).values)
    assert gassmann == all(
        len(om1.perm(g).fixed_points()) == len(om2.perm(g).fixed_points())
        for g in group.elements
    )
    trivial = False
    witness = None
    if h1.order == h2.order:
        trivial, witness = are_conjugate_subgroups(group, h1, h2)
    if trivial:
        assert gassmann
    return GassmannReport(
        h1=h1,
        h2=h2,
        gassmann=gassmann,
        trivial=trivial,
        conjugating_witness=witness,
        intersection_profiles=(p1, p2),
    )


def enumerate_gassmann_triples(
    group: PermGroup, index: int, cap: int = DEFAULT_SUBGROUP_CAP
) -> list[GassmannReport]:
    """All nontrivial almost conjugate pairs of subgroups at the given index.

    One report per unordered pair of subgroup conjugacy classes, since
    conjugate subgroups share their profiles; within a class the canonical
    representative stands in for the pair.
    """
    if index < 1 or group.order % index != 0:
        raise ValueError(
            f"index {index} does not divide the group order {group.order}"
        )
    classes = subgroup_classes_of_order(group, group.order // index, cap)
    reps = [cls[0] for cls in classes]
    profiles = [class_intersection_profile(group, rep) for rep in reps]
    out = []
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            if profiles[i] != profiles[j]:
                continue
            report = is_gassmann_triple(group, reps[i], reps[j])
            assert report.gassmann and not report.trivial
            out.append(report)
    return out


def is_solitary_bruteforce(
    group: PermGroup, h: Subgroup, cap: int = DEFAULT_SUBGROUP_CAP
) -> bool:
    """Whether every equal-profile subgroup of the same order is conjugate to h.

    Compares class profiles across the exhaustive list of same-order subgroup
    classes; any equal-profile foreign class is double-checked to have a
    character-equal coset action before reporting non-solitary.
    """
    classes = subgroup_classes_of_order(group, h.order, cap)
    target = class_intersection_profile(group, h)
    own = None
    for cls in classes:
        if any(member.element_set == h.element_set for member in cls):
            own = cls
            break
    assert own is not None, "exhaustive class list misses the subgroup"
    for cls in classes:
        if cls is own:
            continue
        if class_intersection_profile(group, cls[0]) == target:
            assert is_gassmann_equivalent(
                coset_action(group, h), coset_action(group, cls[0])
            )
            return False
    return True


@dataclass(frozen=True)
class CriterionWitness:
    condition: str
    element: Permutation
    cycle_type: tuple[int, ...]
    ell: Optional[int]


def _point_involution_type(parts: tuple[int, ...]) -> bool:
    return parts[0] == 1 and len(parts) > 1 and set(parts[1:]) == {2}


def theorem1_criterion(omega: GSet) -> Optional[CriterionWitness]:
    """First element, in canonical order, whose cycle type forces triviality.

    Conditions, tried in order for each element:
      i    type (1, 2, ..., 2);
      ii   some part l > 1 coprime to the degree times the other parts
           (a full cycle never qualifies here: l = n shares every factor);
      iii  some prime part l dividing no other part, l neither 11 nor of the
           form (q^k - 1)/(q - 1) with q a prime power and k >= 3.
    """
    if not is_transitive(omega):
        raise ValueError("the criterion applies to transitive actions")
    n = omega.size
    for g in omega.acting_elements():
        parts = omega.perm(g).cycle_type()
        if _point_involution_type(parts):
            return CriterionWitness("i", g, parts, None)
        distinct = sorted(set(parts))
        hit = None
        for ell in distinct:
            if ell <= 1 or len(parts) == 1:
                continue
            others = list(parts)
            others.remove(ell)
            if math.gcd(ell, n * math.prod(others)) == 1:
                hit = CriterionWitness("ii", g, parts, ell)
                break
        if hit:
            return hit
        for ell in distinct:
            if not is_prime(ell):
                continue
            others = list(parts)
            others.remove(ell)
            if math.prod(others) % ell == 0:
                continue
            if not excluded_prime(ell).excluded:
                return CriterionWitness("iii", g, parts, ell)
    return None


@dataclass(frozen=True)
class ExcludedPrimeResult:
    ell: int
    excluded: bool
    q: Optional[int]
    k: Optional[int]


def excluded_prime(ell: int) -> ExcludedPrimeResult:
    """Whether the prime is 11 or a repunit value (q^k - 1)/(q - 1), k >= 3.

    These are the primes for which a prime-length cycle is known to be
    insufficient; all others certify triviality.  The witness is found with k
    ascending from 3 and the base q ascending within each k.
    """
    if not is_prime(ell):
        raise ValueError(f"{ell} is not prime")
    if ell == 11:
        return ExcludedPrimeResult(ell, True, None, None)
    for k in range(3, int(math.log2(ell + 1)) + 2):
        q = 2
        while True:
            value = (q**k - 1) // (q - 1)
            if value > ell:
                break
            if value == ell and is_prime_power(q):
                return ExcludedPrimeResult(ell, True, q, k)
            q += 1
    return ExcludedPrimeResult(ell, False, None, None)


def _point_involutions_by_fixed_point(
    omega: GSet,
) -> dict[int, list[Permutation]]:
    found: dict[int, list[Permutation]] = {}
    for g in omega.acting_elements():
        img = omega.perm(g)
        if _point_involution_type(img.cycle_type()):
            fixed = next(iter(img.fixed_points()))
            found.setdefault(fixed, []).append(g)
    return found


def equivariant_bijection_via_involutions(
    omega: GSet, omega2: GSet
) -> tuple[int, ...]:
    """The canonical equivariant point map between two equivalent actions.

    Each position x of the first action is sent to the unique fixed position
    of a point involution fixing x, read off on the second action.  The map
    does not depend on which involution is chosen: two involutions sharing
    their fixed point compose to an element with an odd number of fixed
    points, and that parity transfers through the character, so they share
    their fixed point on the other action as well.  Both the independence and
    the equivariance are asserted.
    """
    if not is_transitive(omega):
        raise ValueError("the first action must be transitive")
    if not is_gassmann_equivalent(omega, omega2):
        raise ValueError("the two actions are not equivalent")
    by_fixed = _point_involutions_by_fixed_point(omega)
    if not by_fixed:
        raise ValueError("no element acts as a point involution")
    assert set(by_fixed) == set(range(omega.size)), (
        "transitivity must spread involutions over every position"
    )
    mapping = []
    for x in range(omega.size):
        sigmas = by_fixed[x]
        targets = set()
        for s in sigmas:
            img = omega2.perm(s)
            assert _point_involution_type(img.cycle_type())
            targets.add(next(iter(img.fixed_points())))
        for a in sigmas:
            for b in sigmas:
                if a is b:
                    continue
                count = len(omega2.perm(a * b).fixed_points())
                assert count % 2 == 1, "shared fixed point needs odd parity"
        assert len(targets) == 1, "involution choice changed the image"
        mapping.append(targets.pop())
    assert sorted(mapping) == list(range(omega2.size)), "map is not a bijection"
    for g in omega.acting_generators():
        src, dst = omega.perm(g), omega2.perm(g)
        for x in range(omega.size):
            assert mapping[src.images[x]] == dst.images[mapping[x]], (
                "map fails equivariance"
            )
    return tuple(mapping)


def corresponding_stabilizers_agree(
    omega: GSet, omega2: GSet, mapping: tuple[int, ...]
) -> bool:
    """Whether Stab(x) equals Stab(mapping[x]) for every position x."""
    return all(
        stabilizer_of_point(omega, x).element_set
        == stabilizer_of_point(omega2, mapping[x]).element_set
        for x in range(omega.size)
    )

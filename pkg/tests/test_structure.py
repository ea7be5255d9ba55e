import random

import pytest

from almostconj.catalog import builtin_group
from almostconj.groups import (
    CapExceededError,
    PermGroup,
    generate_elements,
    natural_gset,
    subgroup_from_generators,
    whole_subgroup,
)
from almostconj.perms import Permutation, parse_cycles
from almostconj.structure import (
    block_proof_group,
    block_stabilizer_membership,
    common_fixed_positions,
    ell_cycle_closure_report,
    fixed_point_detector,
    is_affine_type,
    is_primitive,
    is_transitive,
    is_two_transitive,
    min_fixed_points,
    minimal_block_system,
    orbits,
    restricted_block_character,
    rudio_fixing_set,
)


def nat(name):
    return natural_gset(builtin_group(name))


# -- random corpora -----------------------------------------------------------


def random_cycle(rng, degree):
    length = rng.randint(2, degree)
    points = rng.sample(range(degree), length)
    return Permutation.from_cycles(degree, [points])


def generator_orbit_count(gens, degree):
    parent = list(range(degree))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        for p in range(degree):
            ra, rb = find(p), find(g(p))
            if ra != rb:
                parent[rb] = ra
    return len({find(p) for p in range(degree)})


def cycle_generated_corpus(count, max_degree=10, cap=6000, seed=20240117):
    """Deterministic list of (group, generator subgroup) closed from cycles."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        degree = rng.randint(3, max_degree)
        gens = [random_cycle(rng, degree) for _ in range(rng.randint(1, 3))]
        try:
            group = generate_elements(gens, cap=cap)
        except CapExceededError:
            continue
        out.append((group, subgroup_from_generators(group, gens)))
    return out


def single_length_transitive_corpus(count, max_degree=10, cap=25000, seed=7711):
    """Transitive groups generated by same-length cycles, length prime or
    coprime to the degree; instances exceeding the closure cap are skipped."""
    from almostconj.arith import is_prime
    from math import gcd

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        degree = rng.randint(4, max_degree)
        lengths = [
            l
            for l in range(2, degree + 1)
            if gcd(l, degree) == 1 or is_prime(l)
        ]
        length = rng.choice(lengths)
        gens = []
        for _ in range(40):
            points = rng.sample(range(degree), length)
            gens.append(Permutation.from_cycles(degree, [points]))
            if generator_orbit_count(gens, degree) == 1:
                break
        else:
            continue
        try:
            group = generate_elements(gens, cap=cap)
        except CapExceededError:
            continue
        out.append(group)
    return out


# -- orbits and transitivity --------------------------------------------------


def test_orbit_examples():
    g = generate_elements([parse_cycles("(1 2 3)", 5)])
    assert orbits(natural_gset(g)) == [(0, 1, 2), (3,), (4,)]
    g = generate_elements([parse_cycles("(1 2)", 5), parse_cycles("(3 4 5)", 5)])
    assert orbits(natural_gset(g)) == [(0, 1), (2, 3, 4)]
    assert orbits(nat("sym:4")) == [(0, 1, 2, 3)]


def test_transitive_flags():
    assert is_transitive(nat("cyclic:6"))
    assert not is_transitive(natural_gset(generate_elements([parse_cycles("(1 2)", 3)])))


# -- blocks and primitivity ---------------------------------------------------


def test_c4_blocks():
    prim, system = is_primitive(nat("cyclic:4"))
    assert not prim
    assert system.blocks == ((0, 2), (1, 3))
    assert system.block_size == 2
    assert not system.is_trivial


def test_symmetric_groups_primitive():
    for n in (3, 4, 5, 6):
        prim, system = is_primitive(nat(f"sym:{n}"))
        assert prim and system is None


def test_gl3_2_primitive():
    prim, _ = is_primitive(nat("gl3_2"))
    assert prim


def test_dihedral_blocks():
    prim, system = is_primitive(nat("dihedral:6"))
    assert not prim
    assert system.block_size == 2
    for img in (p for p in builtin_group("dihedral:6").elements):
        cells = {frozenset(img(x) for x in cell) for cell in system.blocks}
        assert cells == {frozenset(c) for c in system.blocks}


def test_minimal_system_is_minimal():
    # C12 has systems with cells of size 2, 3, 4, 6; the sweep returns size 2
    system = minimal_block_system(nat("cyclic:12"))
    assert system.block_size == 2
    assert system.blocks[0] == (0, 6)


def test_primitivity_needs_transitive():
    g = generate_elements([parse_cycles("(1 2)", 4)])
    with pytest.raises(ValueError, match="transitive"):
        is_primitive(natural_gset(g))


def test_primitivity_for_prime_or_coprime_cycle_lengths():
    for group in single_length_transitive_corpus(200):
        prim, system = is_primitive(natural_gset(group))
        assert prim, f"{group} has blocks {system.blocks}"


# -- fixed point detectors ----------------------------------------------------


def test_detector_examples():
    g5 = builtin_group("sym:5")
    h = subgroup_from_generators(g5, [parse_cycles("(1 2 3)", 5)])
    om = natural_gset(g5)
    det = fixed_point_detector(h, om)
    assert det == parse_cycles("(1 2 3)", 5)
    assert om.perm(det).fixed_points() == {3, 4}

    g6 = builtin_group("sym:6")
    h = subgroup_from_generators(
        g6, [parse_cycles("(1 2 3)", 6), parse_cycles("(4 5)", 6)]
    )
    det = fixed_point_detector(h, natural_gset(g6))
    assert det == parse_cycles("(1 2 3)(4 5)", 6)


def test_detector_transitive_case_is_fixed_point_free():
    g = builtin_group("cyclic:7")
    det = fixed_point_detector(whole_subgroup(g), natural_gset(g))
    assert not natural_gset(g).perm(det).fixed_points()


def test_detector_rejects_non_cycle_generators():
    g = builtin_group("sym:4")
    h = subgroup_from_generators(g, [parse_cycles("(1 2)(3 4)", 4)])
    with pytest.raises(ValueError, match="cycle"):
        fixed_point_detector(h, natural_gset(g))


def test_min_fixed_examples():
    g5 = builtin_group("sym:5")
    h = subgroup_from_generators(g5, [parse_cycles("(1 2 3)", 5)])
    assert min_fixed_points(h, natural_gset(g5)) == 2
    c6 = builtin_group("cyclic:6")
    assert min_fixed_points(whole_subgroup(c6), natural_gset(c6)) == 0


def test_detector_corpus():
    # the detector achieves the common fixed set, which equals the
    # elementwise minimum - both facts checked against exhaustive scans
    for group, sub in cycle_generated_corpus(500):
        om = natural_gset(group)
        det = fixed_point_detector(sub, om)
        exact = common_fixed_positions(sub.elements, om)
        assert om.perm(det).fixed_points() == exact
        low = min(len(om.perm(g).fixed_points()) for g in sub.elements)
        assert min_fixed_points(sub, om) == len(exact) == low


# -- rudio sets ---------------------------------------------------------------


def test_rudio_examples():
    om = nat("sym:4")
    s = rudio_fixing_set(om, parse_cycles("(1 2)", 4), 2)
    assert common_fixed_positions(s, om) == {2}
    om = nat("sym:5")
    s = rudio_fixing_set(om, parse_cycles("(1 2 3)", 5), 3)
    assert common_fixed_positions(s, om) == {3}


def test_rudio_exhaustive_small():
    for name in ("sym:4", "frobenius20"):
        group = builtin_group(name)
        om = natural_gset(group)
        for sigma in group.elements:
            if not sigma.is_cycle() or not 1 < len(sigma.support()) < group.degree:
                continue
            for x in sorted(sigma.fixed_points()):
                s = rudio_fixing_set(om, sigma, x)
                assert common_fixed_positions(s, om) == {x}
                for member in s:
                    assert om.perm(member).is_cycle()


def test_rudio_errors():
    with pytest.raises(ValueError, match="primitive"):
        rudio_fixing_set(nat("cyclic:4"), parse_cycles("(1 2 3 4)", 4), 0)
    om = nat("sym:4")
    with pytest.raises(ValueError, match="cycle"):
        rudio_fixing_set(om, parse_cycles("(1 2)(3 4)", 4), 0)
    with pytest.raises(ValueError, match="length"):
        rudio_fixing_set(om, parse_cycles("(1 2 3 4)", 4), 0)
    with pytest.raises(ValueError, match="not fixed"):
        rudio_fixing_set(om, parse_cycles("(1 2)", 4), 1)


# -- 2-transitivity and affine type -------------------------------------------


def test_two_transitive():
    assert is_two_transitive(nat("sym:3"))
    assert not is_two_transitive(nat("cyclic:4"))
    assert is_two_transitive(nat("gl3_2"))
    assert is_two_transitive(nat("alt:5"))
    assert not is_two_transitive(nat("dihedral:5"))
    with pytest.raises(ValueError, match="transitive"):
        is_two_transitive(natural_gset(generate_elements([parse_cycles("(1 2)", 4)])))


def test_affine_type():
    c5 = builtin_group("cyclic:5")
    ok, witness = is_affine_type(whole_subgroup(c5), natural_gset(c5))
    assert ok and witness.order == 5

    f20 = builtin_group("frobenius20")
    ok, witness = is_affine_type(whole_subgroup(f20), natural_gset(f20))
    assert ok and witness.order == 5
    # the witness is the unique subgroup of order 5, normal in the parent
    for g in f20.elements:
        for c in witness.elements:
            assert g.inverse() * c * g in witness.element_set

    a5 = builtin_group("alt:5")
    ok, witness = is_affine_type(whole_subgroup(a5), natural_gset(a5))
    assert not ok and witness is None

    s4 = builtin_group("sym:4")
    with pytest.raises(ValueError, match="prime"):
        is_affine_type(whole_subgroup(s4), natural_gset(s4))


# -- closure reports ----------------------------------------------------------


def assert_factors_decompose(report):
    for i, a in enumerate(report.factors):
        for b in report.factors[i + 1 :]:
            for x in a.elements:
                for y in b.elements:
                    assert x * y == y * x
    merged = subgroup_from_generators(
        report.image, [g for f in report.factors for g in f.elements]
    )
    assert merged.element_set == report.closure.element_set


def test_closure_report_s5():
    g = builtin_group("sym:5")
    r = ell_cycle_closure_report(g, natural_gset(g), 5)
    assert r.closure.order == 60
    assert len(r.orbits) == 1 and r.t == 5
    assert r.branch == "two_transitive"
    assert_factors_decompose(r)


def test_closure_report_two_orbits():
    g = generate_elements([parse_cycles("(1 2 3)", 6), parse_cycles("(4 5 6)", 6)])
    r = ell_cycle_closure_report(g, natural_gset(g), 3)
    assert len(r.orbits) == 2 and r.t == 3
    assert [f.order for f in r.factors] == [3, 3]
    assert r.branch == "affine"
    assert r.closure.order == 9
    assert_factors_decompose(r)


def test_closure_report_frobenius():
    g = builtin_group("frobenius20")
    r = ell_cycle_closure_report(g, natural_gset(g), 5)
    assert r.t == 5 and r.branch == "affine"
    assert r.closure.order == 5
    assert_factors_decompose(r)


def test_closure_report_t_greater():
    g = builtin_group("sym:5")
    r = ell_cycle_closure_report(g, natural_gset(g), 2)
    assert r.t == 5 and r.branch == "t_greater_than_ell"
    assert r.closure.order == 120


def test_closure_report_fixed_positions():
    g = generate_elements([parse_cycles("(1 2 3)", 5), parse_cycles("(4 5)", 5)])
    r = ell_cycle_closure_report(g, natural_gset(g), 3)
    assert r.fixed_positions == (3, 4)
    assert [o.points for o in r.orbits] == [(0, 1, 2)]


def test_closure_report_normality():
    g = builtin_group("sym:5")
    r = ell_cycle_closure_report(g, natural_gset(g), 5)
    for x in r.image.generators:
        for n in r.closure.elements:
            assert x.inverse() * n * x in r.closure.element_set


def test_closure_report_no_such_cycle():
    g = builtin_group("sym:4")
    with pytest.raises(ValueError, match="no element"):
        ell_cycle_closure_report(g, natural_gset(g), 5)


# -- block stabilizer membership ---------------------------------------------


def test_block_membership_d4():
    om = nat("dihedral:4")
    s = [parse_cycles("(2 4)", 4)]
    assert common_fixed_positions(s, om) == {0, 2}
    assert not block_stabilizer_membership(om, s, parse_cycles("(1 2 3 4)", 4))
    assert block_stabilizer_membership(om, s, parse_cycles("(1 3)", 4))
    assert block_stabilizer_membership(om, s, om.group.identity)


def test_block_membership_whole_group_sweep():
    om = nat("dihedral:4")
    s = [parse_cycles("(2 4)", 4)]
    block = common_fixed_positions(s, om)
    for g in om.group.elements:
        expect = frozenset(om.perm(g).images[p] for p in block) == block
        assert block_stabilizer_membership(om, s, g) == expect


def test_block_membership_rejects_non_block():
    om = nat("sym:4")
    with pytest.raises(ValueError, match="not a block"):
        block_stabilizer_membership(om, [parse_cycles("(1 2)", 4)], om.group.identity)


# -- restricted block character -----------------------------------------------


def test_restricted_character_d4():
    om = nat("dihedral:4")
    block = frozenset({0, 2})
    h_sub, core, k = block_proof_group(om, block)
    assert h_sub.order == 4
    assert core.order == 2
    assert [str(p) for p in k.elements] == ["()", "(2 4)"]
    assert restricted_block_character(om, block, k, parse_cycles("(1 3)", 4)) == 0
    assert restricted_block_character(om, block, k, om.group.identity) == 2
    for h in h_sub.elements:
        direct = sum(1 for p in block if om.perm(h).images[p] == p)
        assert restricted_block_character(om, block, k, h) == direct


def test_restricted_character_klein_with_supplied_k():
    g = generate_elements([parse_cycles("(1 2)", 4), parse_cycles("(3 4)", 4)])
    om = natural_gset(g)
    k = subgroup_from_generators(g, [parse_cycles("(3 4)", 4)])
    h = parse_cycles("(3 4)", 4)
    assert restricted_block_character(om, frozenset({0, 1}), k, h) == 2
    assert restricted_block_character(om, frozenset({0, 1}), k, g.identity) == 2


def test_restricted_character_wreath_sweep():
    # two blocks of three points, full symmetric inside each, swapped by an
    # involution; every block stabilizer element must match direct counting
    g = generate_elements(
        [
            parse_cycles("(1 2)", 6),
            parse_cycles("(1 2 3)", 6),
            parse_cycles("(1 4)(2 5)(3 6)", 6),
        ]
    )
    assert g.order == 72
    om = natural_gset(g)
    block = frozenset({0, 1, 2})
    h_sub, core, k = block_proof_group(om, block)
    assert core.order == 6 and k.order == 6 and h_sub.order == 36
    for h in h_sub.elements:
        direct = sum(1 for p in block if om.perm(h).images[p] == p)
        assert restricted_block_character(om, block, k, h) == direct


def test_restricted_character_input_errors():
    om = nat("dihedral:4")
    block = frozenset({0, 2})
    _, _, k = block_proof_group(om, block)
    with pytest.raises(ValueError, match="setwise"):
        restricted_block_character(om, block, k, parse_cycles("(1 2 3 4)", 4))
    bad_k = subgroup_from_generators(om.group, [parse_cycles("(1 3)", 4)])
    with pytest.raises(ValueError, match="pointwise"):
        restricted_block_character(om, block, bad_k, om.group.identity)


def test_block_proof_group_needs_inner_cycles():
    # C4's size-2 block contains no cycle support, so the construction fails
    om = nat("cyclic:4")
    with pytest.raises(ValueError, match="transitively"):
        block_proof_group(om, frozenset({0, 2}))

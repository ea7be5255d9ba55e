#!/usr/bin/env python3
"""Derive the checked-in generator strings for the gl3_2 and psl2_11 catalog
entries, and verify every claim the catalog makes about them.

gl3_2: invertible 3x3 matrices over F_2 permuting the 7 nonzero vectors.
Point i (0-based) is the vector with binary encoding i+1.  The dual action
permutes the 7 two-dimensional subspaces; line j is the kernel of the linear
functional with encoding j+1.  point_stab fixes point 0, line_stab fixes
line 0 = {points 1, 3, 5} setwise.

psl2_11: SL(2,11) modulo its center acting by Mobius maps on the projective
line over F_11.  Point 0 is infinity and point k (1 <= k <= 11) is the field
value k-1.  a5_1 and a5_2 are the first two nonconjugate order-60 subgroups
found by scanning generator pairs in canonical order.

Run from the repository root:  python3 scripts/derive_catalog.py
"""

import sys
from itertools import product

sys.path.insert(0, "src")

from almostconj.groups import (
    Subgroup,
    are_conjugate_subgroups,
    generate_elements,
    subgroup_from_generators,
)
from almostconj.perms import Permutation, format_cycles


def mat_to_point_perm(m):
    """Permutation of the 7 nonzero vectors of F_2^3 induced by the matrix."""
    images = []
    for v in range(1, 8):
        bits = ((v >> 2) & 1, (v >> 1) & 1, v & 1)
        w = [0, 0, 0]
        for i in range(3):
            w[i] = sum(m[i][j] * bits[j] for j in range(3)) % 2
        images.append((w[0] << 2 | w[1] << 1 | w[2]) - 1)
    return Permutation(images)


def line_points(phi):
    """0-based points on the line cut out by the functional with encoding phi."""
    pts = []
    for v in range(1, 8):
        if bin(v & phi).count("1") % 2 == 0:
            pts.append(v - 1)
    return frozenset(pts)


def derive_gl32():
    shear = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    rotate = ((0, 0, 1), (1, 0, 0), (0, 1, 0))
    gens = [mat_to_point_perm(shear), mat_to_point_perm(rotate)]
    g = generate_elements(gens)
    assert g.order == 168, g.order
    assert g.degree == 7

    lines = [line_points(phi) for phi in range(1, 8)]
    assert all(len(l) == 3 for l in lines)

    point_stab = Subgroup(g, [p for p in g.elements if p(0) == 0], check=False)
    line0 = lines[0]
    line_stab = Subgroup(
        g,
        [p for p in g.elements if {p(x) for x in line0} == line0],
        check=False,
    )
    assert point_stab.order == 24 and line_stab.order == 24
    ok, _ = are_conjugate_subgroups(g, point_stab, line_stab)
    assert not ok, "point and line stabilizers must not be conjugate"

    def two_generators(sub):
        for a, b in product(sub.elements, repeat=2):
            if a >= b:
                continue
            cand = subgroup_from_generators(g, [a, b])
            if cand.element_set == sub.element_set:
                return [a, b]
        raise AssertionError("no 2-element generating set found")

    return {
        "generators": [format_cycles(p) for p in gens],
        "point_stab": [format_cycles(p) for p in two_generators(point_stab)],
        "line_stab": [format_cycles(p) for p in two_generators(line_stab)],
    }


def derive_psl211():
    q = 11
    # points: 0 = infinity, k = field value k-1
    def mobius(a, b, c, d):
        images = []
        for pt in range(q + 1):
            if pt == 0:  # infinity
                images.append(0 if c == 0 else (a * pow(c, q - 2, q)) % q + 1)
            else:
                z = pt - 1
                num, den = (a * z + b) % q, (c * z + d) % q
                if den == 0:
                    images.append(0)
                else:
                    images.append((num * pow(den, q - 2, q)) % q + 1)
        return Permutation(images)

    t = mobius(1, 1, 0, 1)   # z -> z + 1
    s = mobius(0, -1, 1, 0)  # z -> -1/z
    g = generate_elements([t, s])
    assert g.order == 660, g.order
    assert g.degree == 12

    order2 = [p for p in g.elements if p.order() == 2]
    order3 = [p for p in g.elements if p.order() == 3]
    a5_subs = []
    for a in order2:
        for b in order3:
            cand = subgroup_from_generators(g, [a, b])
            if cand.order != 60:
                continue
            if any(cand.element_set == s.element_set for s in a5_subs):
                continue
            if not a5_subs:
                a5_subs.append(cand)
                first = cand
            else:
                ok, _ = are_conjugate_subgroups(g, first, cand)
                if not ok:
                    a5_subs.append(cand)
            if len(a5_subs) == 2:
                break
        if len(a5_subs) == 2:
            break
    a5_1, a5_2 = a5_subs
    ok, _ = are_conjugate_subgroups(g, a5_1, a5_2)
    assert not ok

    return {
        "generators": [format_cycles(t), format_cycles(s)],
        "a5_1": [format_cycles(p) for p in a5_1.generating_set()],
        "a5_2": [format_cycles(p) for p in a5_2.generating_set()],
    }


def main():
    gl = derive_gl32()
    psl = derive_psl211()
    print("# paste into src/almostconj/catalog.py")
    print(f"GL3_2_GENERATORS = {tuple(gl['generators'])!r}")
    print(f"GL3_2_POINT_STAB = {tuple(gl['point_stab'])!r}")
    print(f"GL3_2_LINE_STAB = {tuple(gl['line_stab'])!r}")
    print(f"PSL2_11_GENERATORS = {tuple(psl['generators'])!r}")
    print(f"PSL2_11_A5_1 = {tuple(psl['a5_1'])!r}")
    print(f"PSL2_11_A5_2 = {tuple(psl['a5_2'])!r}")


if __name__ == "__main__":
    main()

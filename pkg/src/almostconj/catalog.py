"""Built-in group catalog and the group-file text format.

Catalog names:

  sym:N alt:N cyclic:N dihedral:N   classical families (alt needs N >= 3,
                                    dihedral N >= 3, others N >= 1)
  frobenius20                       order-20 Frobenius group on 5 points,
                                    named subgroup point_stab
  gl3_2                             invertible 3x3 matrices over F_2 on the
                                    7 projective-plane points; named
                                    subgroups point_stab, line_stab
  psl2_11                           Mobius action on the 12-point projective
                                    line over F_11; named subgroups a5_1,
                                    a5_2 (order 60, not conjugate)

The generator strings for gl3_2 and psl2_11 were computed by
scripts/derive_catalog.py, which rebuilds them from matrix arithmetic and
verifies every property the catalog relies on.

Group files are plain text: a "degree N" line, then one generator per line
in cycle notation; blank lines and '#' comments are ignored.
"""

from __future__ import annotations

import os
import re
from functools import lru_cache

from .groups import (
    DEFAULT_ELEMENT_CAP,
    PermGroup,
    Subgroup,
    generate_elements,
    subgroup_from_generators,
)
from .perms import Permutation, format_cycles, parse_cycles

GL3_2_GENERATORS = ("(2 6)(3 7)", "(1 4 2)(3 5 6)")
GL3_2_POINT_STAB = ("(4 6)(5 7)", "(2 4 3 5)(6 7)")
GL3_2_LINE_STAB = ("(4 6)(5 7)", "(1 3 7 5)(2 4)")
PSL2_11_GENERATORS = (
    "(2 3 4 5 6 7 8 9 10 11 12)",
    "(1 2)(3 12)(4 7)(5 9)(6 10)(8 11)",
)
PSL2_11_A5_1 = (
    "(1 2)(3 4)(5 10)(6 8)(7 9)(11 12)",
    "(1 2 3)(4 12 8)(5 7 10)(6 9 11)",
)
PSL2_11_A5_2 = (
    "(1 2)(3 4)(5 10)(6 8)(7 9)(11 12)",
    "(1 2 7)(3 11 4)(5 9 6)(8 10 12)",
)

CATALOG_FAMILIES = ("sym", "alt", "cyclic", "dihedral")
CATALOG_FIXED = ("frobenius20", "gl3_2", "psl2_11")


class UnknownGroupError(ValueError):
    """A group name that is not in the catalog."""


def _family_generators(family: str, n: int) -> list[Permutation]:
    if family == "sym":
        if n < 1:
            raise UnknownGroupError("sym:N needs N >= 1")
        if n == 1:
            return [Permutation.identity(1)]
        gens = [parse_cycles("(1 2)", n)]
        if n > 2:
            gens.append(Permutation(list(range(1, n)) + [0]))
        return gens
    if family == "alt":
        if n < 3:
            raise UnknownGroupError("alt:N needs N >= 3")
        gens = [parse_cycles("(1 2 3)", n)]
        if n > 3:
            if n % 2 == 1:
                gens.append(Permutation(list(range(1, n)) + [0]))
            else:
                gens.append(Permutation([0] + list(range(2, n)) + [1]))
        return gens
    if family == "cyclic":
        if n < 1:
            raise UnknownGroupError("cyclic:N needs N >= 1")
        return [Permutation(list(range(1, n)) + [0])]
    if family == "dihedral":
        if n < 3:
            raise UnknownGroupError("dihedral:N needs N >= 3")
        rotation = Permutation(list(range(1, n)) + [0])
        reflection = Permutation([0] + list(range(n - 1, 0, -1)))
        return [rotation, reflection]
    raise UnknownGroupError(f"unknown family {family!r}")


def catalog_names() -> list[str]:
    return [f"{fam}:N" for fam in CATALOG_FAMILIES] + list(CATALOG_FIXED)


@lru_cache(maxsize=None)
def builtin_group(name: str, cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """The catalog group for the given name; results are cached and shared."""
    m = re.fullmatch(r"(sym|alt|cyclic|dihedral):(\d+)", name)
    if m:
        return generate_elements(_family_generators(m.group(1), int(m.group(2))), cap)
    if name == "frobenius20":
        gens = [parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(2 3 5 4)", 5)]
        g = generate_elements(gens, cap)
        assert g.order == 20
        g.named_subgroups["point_stab"] = Subgroup(
            g, [p for p in g.elements if p(0) == 0], check=False
        )
        return g
    if name == "gl3_2":
        gens = [parse_cycles(s, 7) for s in GL3_2_GENERATORS]
        g = generate_elements(gens, cap)
        assert g.order == 168
        g.named_subgroups["point_stab"] = subgroup_from_generators(
            g, [parse_cycles(s, 7) for s in GL3_2_POINT_STAB]
        )
        g.named_subgroups["line_stab"] = subgroup_from_generators(
            g, [parse_cycles(s, 7) for s in GL3_2_LINE_STAB]
        )
        return g
    if name == "psl2_11":
        gens = [parse_cycles(s, 12) for s in PSL2_11_GENERATORS]
        g = generate_elements(gens, cap)
        assert g.order == 660
        g.named_subgroups["a5_1"] = subgroup_from_generators(
            g, [parse_cycles(s, 12) for s in PSL2_11_A5_1]
        )
        g.named_subgroups["a5_2"] = subgroup_from_generators(
            g, [parse_cycles(s, 12) for s in PSL2_11_A5_2]
        )
        return g
    raise UnknownGroupError(
        f"unknown group {name!r}; catalog: {', '.join(catalog_names())}"
    )


def parse_group_file(text: str) -> tuple[int, list[Permutation]]:
    """Parse the group-file format into (degree, generators)."""
    degree = None
    generators: list[Permutation] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            m = re.fullmatch(r"degree\s+(\d+)", line)
            if not m:
                raise ValueError(
                    f"line {lineno}: expected 'degree N' before generators"
                )
            degree = int(m.group(1))
            if degree < 1:
                raise ValueError(f"line {lineno}: degree must be at least 1")
            continue
        generators.append(parse_cycles(line, degree))
    if degree is None:
        raise ValueError("missing 'degree N' line")
    if not generators:
        generators = [Permutation.identity(degree)]
    return degree, generators


def format_group_file(group: PermGroup) -> str:
    lines = [f"degree {group.degree}"]
    lines.extend(format_cycles(g) for g in group.generators)
    return "\n".join(lines) + "\n"


def load_group(name_or_path: str, cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    """Resolve a catalog name, or failing that a group-file path."""
    try:
        return builtin_group(name_or_path, cap)
    except UnknownGroupError:
        pass
    if os.path.exists(name_or_path):
        with open(name_or_path, encoding="utf-8") as fh:
            _, gens = parse_group_file(fh.read())
        return generate_elements(gens, cap)
    raise UnknownGroupError(
        f"{name_or_path!r} is neither a catalog name nor a readable file;"
        f" catalog: {', '.join(catalog_names())}"
    )

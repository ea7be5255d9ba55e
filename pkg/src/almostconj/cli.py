"""Command-line front end.

Subcommands mirror the library: group inspection, Gassmann analysis of
subgroup pairs, the cycle-type criterion scan, block structure, and the
number-field comparisons.  Output is an aligned table by default or a
JSON document with --json; repeated runs of the same invocation produce
byte-identical output.

Exit codes: 0 for a positive finding, 1 for "ran fine, the answer is
negative" (not conjugate, no witness, densities disagree, ...), 2 for
usage or input errors, 3 when an enumeration cap is exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import __version__
from .catalog import (
    DEFAULT_ELEMENT_CAP,
    UnknownGroupError,
    load_group,
    parse_group_file,
)
from .gassmann import (
    DEFAULT_SUBGROUP_CAP,
    enumerate_gassmann_triples,
    excluded_prime,
    is_gassmann_triple,
    is_solitary_bruteforce,
    theorem1_criterion,
)
from .groups import (
    CapExceededError,
    PermGroup,
    Subgroup,
    conjugacy_classes,
    coset_action,
    natural_gset,
    subgroup_classes_of_order,
    subgroup_from_generators,
)
from .numberfields import (
    chebotarev_consistency,
    compare_decompositions,
    decomposition_type,
    format_polynomial,
    inert_density,
    parse_polynomial,
    sturm_signature,
)
from .perms import format_cycles
from .structure import ell_cycle_closure_report, is_primitive


class UsageError(ValueError):
    """Bad flags or malformed input; maps to exit code 2."""


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    payload: Optional[dict] = None
    error: Optional[str] = None
    as_json: bool = False


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


# -- input resolution ---------------------------------------------------------


def _load(ns: argparse.Namespace) -> PermGroup:
    cap = getattr(ns, "cap", None)
    return load_group(ns.group, cap=cap if cap else DEFAULT_ELEMENT_CAP)


def _resolve_subgroup(group: PermGroup, text: str) -> Subgroup:
    """A named subgroup of the group, or a generator file of equal degree."""
    if text in group.named_subgroups:
        return group.named_subgroups[text]
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            degree, gens = parse_group_file(fh.read())
        if degree != group.degree:
            raise UsageError(
                f"subgroup file degree {degree} does not match "
                f"group degree {group.degree}"
            )
        return subgroup_from_generators(group, gens)
    known = ", ".join(sorted(group.named_subgroups)) or "none"
    raise UsageError(
        f"unknown subgroup {text!r}: not a file, and the group's named "
        f"subgroups are: {known}"
    )


def _action(ns: argparse.Namespace, group: PermGroup):
    """Natural action, or the coset action on --h1 when given."""
    h1 = getattr(ns, "h1", None)
    if h1:
        return coset_action(group, _resolve_subgroup(group, h1))
    return natural_gset(group)


def _poly(text: str):
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    return parse_polynomial(text)


def _frac(fr: Fraction) -> dict:
    return {
        "num": fr.numerator,
        "den": fr.denominator,
        "decimal": f"{float(fr):.6g}",
    }


def _points(points) -> list[int]:
    return [p + 1 for p in sorted(points)]


# -- handlers: each returns (exit_code, inputs_echo, body) --------------------


def _h_group_info(ns):
    g = _load(ns)
    body = {
        "order": g.order,
        "degree": g.degree,
        "generators": [format_cycles(p) for p in g.generators],
        "named_subgroups": {
            name: g.named_subgroups[name].order
            for name in sorted(g.named_subgroups)
        },
    }
    return 0, {"group": ns.group}, body


def _h_group_classes(ns):
    g = _load(ns)
    rows = [
        {
            "order": c.element_order,
            "size": c.size,
            "representative": format_cycles(c.representative),
        }
        for c in conjugacy_classes(g)
    ]
    return 0, {"group": ns.group}, {"class_count": len(rows), "classes": rows}


def _h_group_subgroups(ns):
    g = _load(ns)
    if ns.index < 1 or g.order % ns.index:
        raise UsageError(f"index {ns.index} does not divide the order {g.order}")
    order = g.order // ns.index
    cap = ns.cap if ns.cap else DEFAULT_SUBGROUP_CAP
    classes = subgroup_classes_of_order(g, order, cap=cap)
    body = {
        "index": ns.index,
        "subgroup_order": order,
        "class_count": len(classes),
        "classes": [
            {
                "class_size": len(cls),
                "generators": [format_cycles(p) for p in cls[0].generating_set()],
            }
            for cls in classes
        ],
    }
    return 0, {"group": ns.group, "index": ns.index}, body


def _h_gassmann_check(ns):
    g = _load(ns)
    h1 = _resolve_subgroup(g, ns.h1)
    h2 = _resolve_subgroup(g, ns.h2)
    report = is_gassmann_triple(g, h1, h2)
    body = {
        "gassmann": report.gassmann,
        "conjugate": report.trivial,
        "witness": (
            format_cycles(report.conjugating_witness)
            if report.conjugating_witness is not None
            else None
        ),
        "profiles": [list(p) for p in report.intersection_profiles],
    }
    echo = {"group": ns.group, "h1": ns.h1, "h2": ns.h2}
    return (0 if report.trivial else 1), echo, body


def _h_gassmann_enumerate(ns):
    g = _load(ns)
    if ns.index < 1 or g.order % ns.index:
        raise UsageError(f"index {ns.index} does not divide the order {g.order}")
    cap = ns.cap if ns.cap else DEFAULT_SUBGROUP_CAP
    found = enumerate_gassmann_triples(g, ns.index, cap=cap)
    body = {
        "index": ns.index,
        "count": len(found),
        "pairs": [
            {
                "subgroup_order": r.h1.order,
                "h1_generators": [format_cycles(p) for p in r.h1.generating_set()],
                "h2_generators": [format_cycles(p) for p in r.h2.generating_set()],
            }
            for r in found
        ],
    }
    echo = {"group": ns.group, "index": ns.index}
    return (0 if found else 1), echo, body


def _h_gassmann_solitary(ns):
    g = _load(ns)
    h = _resolve_subgroup(g, ns.h1)
    cap = ns.cap if ns.cap else DEFAULT_SUBGROUP_CAP
    verdict = is_solitary_bruteforce(g, h, cap=cap)
    echo = {"group": ns.group, "h1": ns.h1}
    return (0 if verdict else 1), echo, {"solitary": verdict}


def _h_criterion_scan(ns):
    g = _load(ns)
    omega = _action(ns, g)
    witness = theorem1_criterion(omega)
    if witness is None:
        body = {"witness": None}
        code = 1
    else:
        body = {
            "witness": {
                "condition": witness.condition,
                "element": format_cycles(witness.element),
                "cycle_type": list(witness.cycle_type),
                "ell": witness.ell,
            }
        }
        code = 0
    echo = {"group": ns.group, "h1": getattr(ns, "h1", None)}
    return code, echo, body


def _h_excluded_prime(ns):
    r = excluded_prime(ns.ell)
    body = {"ell": r.ell, "excluded": r.excluded, "q": r.q, "k": r.k}
    return 0, {"ell": ns.ell}, body


def _h_structure_blocks(ns):
    g = _load(ns)
    omega = _action(ns, g)
    primitive, system = is_primitive(omega)
    body = {
        "primitive": primitive,
        "block_size": None if primitive else system.block_size,
        "blocks": (
            None
            if primitive
            else [_points(b) for b in system.blocks]
        ),
    }
    echo = {"group": ns.group, "h1": getattr(ns, "h1", None)}
    return (1 if primitive else 0), echo, body


def _h_structure_closure(ns):
    g = _load(ns)
    omega = _action(ns, g)
    rep = ell_cycle_closure_report(g, omega, ns.ell)
    body = {
        "ell": rep.ell,
        "branch": rep.branch,
        "t": rep.t,
        "closure_order": rep.closure.order,
        "orbit_count": len(rep.orbits),
        "factor_orders": [f.order for f in rep.factors],
        "fixed_positions": _points(rep.fixed_positions),
    }
    echo = {"group": ns.group, "h1": getattr(ns, "h1", None), "ell": ns.ell}
    return 0, echo, body


def _h_nf_decomposition(ns):
    f = _poly(ns.poly)
    t = decomposition_type(f, ns.prime)
    body = {
        "type": None if t is None else list(t.residue_degrees),
        "ramified": t is None,
    }
    echo = {"poly": format_polynomial(f), "prime": ns.prime}
    return (1 if t is None else 0), echo, body


def _h_nf_density(ns):
    f = _poly(ns.poly)
    d = inert_density(f, ns.bound)
    echo = {"poly": format_polynomial(f), "bound": ns.bound}
    return 0, echo, {"inert": _frac(d)}


def _h_nf_signature(ns):
    f = _poly(ns.poly)
    sig = sturm_signature(f)
    echo = {"poly": format_polynomial(f)}
    return 0, echo, {
        "real_places": sig.real_places,
        "complex_places": sig.complex_places,
    }


def _h_nf_compare(ns):
    f1 = _poly(ns.poly)
    f2 = _poly(ns.poly2)
    rep = compare_decompositions(f1, f2, ns.bound)
    body = {
        "agree": rep.agree,
        "first_disagreement": rep.first_disagreement,
        "skipped_ramified": list(rep.skipped_ramified),
        "compared": rep.compared,
    }
    echo = {
        "poly": format_polynomial(f1),
        "poly2": format_polynomial(f2),
        "bound": ns.bound,
    }
    return (0 if rep.agree else 1), echo, body


def _h_nf_chebotarev(ns):
    g = _load(ns)
    omega = _action(ns, g)
    f = _poly(ns.poly)
    rep = chebotarev_consistency(g, omega, f, ns.bound)
    body = {
        "consistent": rep.consistent,
        "all_types_realized": rep.all_types_realized,
        "max_deviation": _frac(rep.max_deviation),
        "unramified_count": rep.unramified_count,
        "frequencies": [
            {
                "cycle_type": list(row.cycle_type),
                "predicted": _frac(row.predicted),
                "observed": _frac(row.observed),
            }
            for row in rep.frequencies
        ],
    }
    echo = {
        "group": ns.group,
        "h1": getattr(ns, "h1", None),
        "poly": format_polynomial(f),
        "bound": ns.bound,
    }
    return (0 if rep.consistent else 1), echo, body


# -- parser -------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="almostconj", description=__doc__.splitlines()[0])
    top = parser.add_subparsers(dest="domain", required=True)

    fmt = _Parser(add_help=False)
    out = fmt.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="emit a JSON document")
    out.add_argument(
        "--table", action="store_true", help="emit an aligned table (default)"
    )

    def leaf(sub, name, handler, command_name, **kwargs):
        p = sub.add_parser(name, parents=[fmt], **kwargs)
        p.set_defaults(handler=handler, command_name=command_name)
        return p

    group = top.add_parser("group", help="inspect a catalog or file group")
    gsub = group.add_subparsers(dest="verb", required=True)
    p = leaf(gsub, "info", _h_group_info, "group info")
    p.add_argument("--group", required=True, metavar="NAME|FILE")
    p.add_argument("--cap", type=int, default=None)
    p = leaf(gsub, "classes", _h_group_classes, "group classes")
    p.add_argument("--group", required=True, metavar="NAME|FILE")
    p.add_argument("--cap", type=int, default=None)
    p = leaf(gsub, "subgroups", _h_group_subgroups, "group subgroups")
    p.add_argument("--group", required=True, metavar="NAME|FILE")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)

    gas = top.add_parser("gassmann", help="analyze subgroup pairs")
    asub = gas.add_subparsers(dest="verb", required=True)
    p = leaf(asub, "check", _h_gassmann_check, "gassmann check")
    p.add_argument("--group", required=True, metavar="NAME|FILE")
    p.add_argument("--h1", required=True, metavar="NAME|FILE")
    p.add_argument("--h2", required=True, metavar="NAME|FILE")
    p.add_argument("--cap", type=int, default=None)
    p = leaf(asub, "enumerate", _h_gassmann_enumerate, "gassmann enumerate")
    p.add_argument("--group", required=True, metavar="NAME|FILE")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)
    p = leaf(asub, "solitary", _h_gassmann_solitary, "gassmann solitary")
    p.add_argument("--group", required=True, metavar="NAME|FILE")
    p.add_argument("--h1", required=True, metavar="NAME|FILE")
    p.add_argument("--cap", type=int, default=None)

    crit = top.add_parser("criterion", help="cycle-type conjugacy criterion")
    csub = crit.add_subparsers(dest="verb", required=True)
    p = leaf(csub, "scan", _h_criterion_scan, "criterion scan")
    p.add_argument("--group", required=True, metavar="NAME|FILE")
    p.add_argument("--h1", default=None, metavar="NAME|FILE",
                   help="scan the coset action on this subgroup")
    p.add_argument("--cap", type=int, default=None)

    p = leaf(top, "excluded-prime", _h_excluded_prime, "excluded-prime",
             help="is this prime of the excluded form?")
    p.add_argument("ell", type=int)

    struct = top.add_parser("structure", help="blocks and cycle closures")
    ssub = struct.add_subparsers(dest="verb", required=True)
    p = leaf(ssub, "blocks", _h_structure_blocks, "structure blocks")
    p.add_argument("--group", required=True, metavar="NAME|FILE")
    p.add_argument("--h1", default=None, metavar="NAME|FILE")
    p.add_argument("--cap", type=int, default=None)
    p = leaf(ssub, "closure-report", _h_structure_closure,
             "structure closure-report")
    p.add_argument("--group", required=True, metavar="NAME|FILE")
    p.add_argument("--h1", default=None, metavar="NAME|FILE")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)

    nf = top.add_parser("nf", help="number-field comparisons")
    nsub = nf.add_subparsers(dest="verb", required=True)
    p = leaf(nsub, "decomposition", _h_nf_decomposition, "nf decomposition")
    p.add_argument("--poly", required=True, metavar="STRING|@FILE")
    p.add_argument("--prime", type=int, required=True)
    p = leaf(nsub, "density", _h_nf_density, "nf density")
    p.add_argument("--poly", required=True, metavar="STRING|@FILE")
    p.add_argument("--bound", type=int, default=100000)
    p = leaf(nsub, "signature", _h_nf_signature, "nf signature")
    p.add_argument("--poly", required=True, metavar="STRING|@FILE")
    p = leaf(nsub, "compare", _h_nf_compare, "nf compare")
    p.add_argument("--poly", required=True, metavar="STRING|@FILE")
    p.add_argument("--poly2", required=True, metavar="STRING|@FILE")
    p.add_argument("--bound", type=int, default=10000)
    p = leaf(nsub, "chebotarev", _h_nf_chebotarev, "nf chebotarev")
    p.add_argument("--group", required=True, metavar="NAME|FILE")
    p.add_argument("--h1", default=None, metavar="NAME|FILE")
    p.add_argument("--poly", required=True, metavar="STRING|@FILE")
    p.add_argument("--bound", type=int, default=100000)
    p.add_argument("--cap", type=int, default=None)

    return parser


def run(argv: list[str]) -> CommandResult:
    """Parse and dispatch; never raises on bad input."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except UsageError as e:
        return CommandResult(2, error=f"usage error: {e}")
    except SystemExit as e:
        return CommandResult(int(e.code or 0))
    try:
        code, echo, body = ns.handler(ns)
    except UsageError as e:
        return CommandResult(2, error=f"input error: {e}", as_json=ns.json)
    except CapExceededError as e:
        return CommandResult(3, error=f"cap exceeded: {e}", as_json=ns.json)
    except UnknownGroupError as e:
        return CommandResult(2, error=str(e), as_json=ns.json)
    except (ValueError, OSError) as e:
        return CommandResult(2, error=f"input error: {e}", as_json=ns.json)
    payload = {
        "tool_version": __version__,
        "command": ns.command_name,
        "inputs_echo": echo,
    }
    payload.update(body)
    return CommandResult(code, payload=payload, as_json=ns.json)


# -- table rendering ----------------------------------------------------------


def _columns(header: list[str], rows: list[list[str]]) -> str:
    widths = [
        max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
        for i, h in enumerate(header)
    ]
    out = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for r in rows:
        out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(out)


def _yesno(b: bool) -> str:
    return "yes" if b else "no"


def _frac_text(obj: dict) -> str:
    return f"{obj['num']}/{obj['den']} ≈ {obj['decimal']}"


def _type_text(t: list[int]) -> str:
    return "(" + ", ".join(str(x) for x in t) + ")"


def render_table(payload: dict) -> str:
    """Human-readable rendering; every value shown comes from the payload."""
    cmd = payload["command"]
    echo = payload["inputs_echo"]
    if cmd == "group info":
        lines = [
            f"group {echo['group']}: order {payload['order']}, "
            f"degree {payload['degree']}",
            "generators: " + " ".join(payload["generators"]),
        ]
        for name, order in payload["named_subgroups"].items():
            lines.append(f"subgroup {name}: order {order}")
        return "\n".join(lines)
    if cmd == "group classes":
        rows = [
            [str(c["order"]), str(c["size"]), c["representative"]]
            for c in payload["classes"]
        ]
        return _columns(["order", "size", "representative"], rows)
    if cmd == "group subgroups":
        head = (
            f"index {payload['index']}: {payload['class_count']} conjugacy "
            f"class(es) of order {payload['subgroup_order']}"
        )
        lines = [head]
        for i, cls in enumerate(payload["classes"], 1):
            gens = " ".join(cls["generators"])
            lines.append(f"class {i} (size {cls['class_size']}): {gens}")
        return "\n".join(lines)
    if cmd == "gassmann check":
        lines = [
            f"gassmann: {_yesno(payload['gassmann'])}",
            f"conjugate: {_yesno(payload['conjugate'])}",
        ]
        if payload["witness"] is not None:
            lines.append(f"witness: {payload['witness']}")
        return "\n".join(lines)
    if cmd == "gassmann enumerate":
        if payload["count"] == 0:
            return "no nontrivial Gassmann triples found"
        lines = [
            f"{payload['count']} nontrivial pair(s) at index {payload['index']}"
        ]
        for i, pair in enumerate(payload["pairs"], 1):
            lines.append(
                f"pair {i} (order {pair['subgroup_order']}):"
            )
            lines.append("  h1: " + " ".join(pair["h1_generators"]))
            lines.append("  h2: " + " ".join(pair["h2_generators"]))
        return "\n".join(lines)
    if cmd == "gassmann solitary":
        return f"solitary: {_yesno(payload['solitary'])}"
    if cmd == "criterion scan":
        w = payload["witness"]
        if w is None:
            return "no criterion witness"
        line = (
            f"condition ({w['condition']}): element {w['element']}, "
            f"cycle type {_type_text(w['cycle_type'])}"
        )
        if w["ell"] is not None:
            line += f", ell = {w['ell']}"
        return line
    if cmd == "excluded-prime":
        if not payload["excluded"]:
            return f"{payload['ell']}: not excluded"
        if payload["q"] is None:
            return f"{payload['ell']}: excluded"
        return (
            f"{payload['ell']} = ({payload['q']}^{payload['k']} - 1)"
            f"/({payload['q']} - 1): excluded"
        )
    if cmd == "structure blocks":
        if payload["primitive"]:
            return "primitive: yes"
        lines = [f"blocks of size {payload['block_size']}:"]
        for b in payload["blocks"]:
            lines.append("  {" + ", ".join(str(x) for x in b) + "}")
        return "\n".join(lines)
    if cmd == "structure closure-report":
        lines = [
            f"ell = {payload['ell']}, branch: {payload['branch']}",
            f"orbit size t = {payload['t']}, orbits: {payload['orbit_count']}",
            f"closure order {payload['closure_order']}, factor orders "
            + str(payload["factor_orders"]),
        ]
        if payload["fixed_positions"]:
            lines.append(
                "fixed positions: "
                + ", ".join(str(x) for x in payload["fixed_positions"])
            )
        return "\n".join(lines)
    if cmd == "nf decomposition":
        prefix = f"{echo['poly']} mod {echo['prime']}: "
        if payload["ramified"]:
            return prefix + "ramified"
        return prefix + "type " + _type_text(payload["type"])
    if cmd == "nf density":
        return "inert " + _frac_text(payload["inert"])
    if cmd == "nf signature":
        return (
            f"signature ({payload['real_places']}, "
            f"{payload['complex_places']})"
        )
    if cmd == "nf compare":
        skipped = ", ".join(str(p) for p in payload["skipped_ramified"])
        if payload["agree"]:
            line = f"agree at all {payload['compared']} compared primes"
        else:
            line = (
                f"disagree, first at p = {payload['first_disagreement']} "
                f"({payload['compared']} compared)"
            )
        if skipped:
            line += f"; skipped ramified: {skipped}"
        return line
    if cmd == "nf chebotarev":
        rows = [
            [
                _type_text(r["cycle_type"]),
                _frac_text(r["predicted"]),
                _frac_text(r["observed"]),
            ]
            for r in payload["frequencies"]
        ]
        table = _columns(["cycle type", "predicted", "observed"], rows)
        return (
            table
            + f"\nmax deviation {_frac_text(payload['max_deviation'])}"
            + f"\nconsistent: {_yesno(payload['consistent'])}"
        )
    # fallback: flat key/value dump of the non-header fields
    skip = {"tool_version", "command", "inputs_echo"}
    return "\n".join(
        f"{k}: {v}" for k, v in payload.items() if k not in skip
    )


def main(argv: Optional[list[str]] = None) -> None:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.error is not None:
        print(result.error, file=sys.stderr)
    elif result.payload is not None:
        if result.as_json:
            print(json.dumps(result.payload, indent=2))
        else:
            print(render_table(result.payload))
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()

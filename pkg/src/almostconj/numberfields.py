"""Prime decomposition types, densities, and signatures of number fields.

A monic integer polynomial stands in for the field it defines.  The
residue degrees of a rational prime p are read off from the degrees of
the irreducible factors of the polynomial modulo p; primes where the
reduction is not squarefree are treated as ramified and skipped.  That
proxy misses nothing on the unramified side and can only skip extra
primes (index divisors), so comparisons between two polynomials stay
sound.  Real and complex places are counted by an exact Sturm chain.

Irreducibility over the rationals is assumed, not checked.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional

from .arith import is_prime, primes_below
from .groups import GSet, PermGroup

__all__ = [
    "IntPolynomial",
    "DecompositionType",
    "Signature",
    "DecompositionComparison",
    "TypeFrequency",
    "ChebotarevReport",
    "parse_polynomial",
    "format_polynomial",
    "decomposition_type",
    "ramified_primes",
    "inert_density",
    "sturm_signature",
    "compare_decompositions",
    "chebotarev_consistency",
    "DEGREE7_PAIR",
    "DEGREE11_PAIR",
]


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, constant term first; trailing zeros trimmed."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        cs = tuple(self.coefficients)
        if not cs:
            raise ValueError("polynomial needs at least one coefficient")
        if any(not isinstance(c, int) or isinstance(c, bool) for c in cs):
            raise ValueError("coefficients must be integers")
        while len(cs) > 1 and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coefficients", cs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return self.coefficients[-1] == 1

    def derivative(self) -> "IntPolynomial":
        cs = self.coefficients
        if len(cs) == 1:
            return IntPolynomial((0,))
        return IntPolynomial(tuple(i * c for i, c in enumerate(cs) if i > 0))

    def __str__(self) -> str:
        return format_polynomial(self)


@dataclass(frozen=True)
class DecompositionType:
    """Residue degrees of the primes above p, nondecreasing."""

    residue_degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "residue_degrees", tuple(sorted(self.residue_degrees))
        )

    @property
    def is_inert(self) -> bool:
        return len(self.residue_degrees) == 1


@dataclass(frozen=True)
class Signature:
    real_places: int
    complex_places: int


_TERM_FORMS = (
    re.compile(r"^(\d+)$"),
    re.compile(r"^x$"),
    re.compile(r"^x\^(\d+)$"),
    re.compile(r"^(\d+)\*x$"),
    re.compile(r"^(\d+)\*x\^(\d+)$"),
)


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse "x^7-7*x+3" style input.

    Terms are c, x, c*x, c*x^k, or x^k, joined by + and -; whitespace is
    ignored.  Anything else (floats, other variables, implicit
    multiplication) is rejected.
    """
    compact = "".join(text.split())
    if not compact:
        raise ValueError("empty polynomial")
    coeff_by_exp: dict[int, int] = {}
    for piece in re.split(r"(?=[+-])", compact):
        if not piece:
            continue
        sign = 1
        if piece[0] in "+-":
            sign = -1 if piece[0] == "-" else 1
            piece = piece[1:]
        for form in _TERM_FORMS:
            m = form.match(piece)
            if m:
                break
        else:
            raise ValueError(
                f"bad term {piece!r}: expected c, x, c*x, c*x^k, or x^k"
            )
        groups = m.groups()
        if piece == "x":
            c, k = 1, 1
        elif piece.startswith("x^"):
            c, k = 1, int(groups[0])
        elif piece.endswith("*x"):
            c, k = int(groups[0]), 1
        elif len(groups) == 2:
            c, k = int(groups[0]), int(groups[1])
        else:
            c, k = int(groups[0]), 0
        coeff_by_exp[k] = coeff_by_exp.get(k, 0) + sign * c
    top = max(coeff_by_exp)
    return IntPolynomial(
        tuple(coeff_by_exp.get(k, 0) for k in range(top + 1))
    )


def format_polynomial(f: IntPolynomial) -> str:
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coefficients[k]
        if c == 0 and f.degree > 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            xpart = "x" if k == 1 else f"x^{k}"
            body = xpart if abs(c) == 1 else f"{abs(c)}*{xpart}"
        if not parts:
            parts.append(body if c >= 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c >= 0 else f" - {body}")
    return "".join(parts) if parts else "0"


# -- arithmetic mod p, coefficient lists constant-first -----------------------


def _trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    """a*b mod (f, p); f monic mod p of degree n, inputs of degree < n."""
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    n = len(f) - 1
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k] % p
        if c:
            base = k - n
            for j in range(n):
                prod[base + j] -= c * f[j]
    del prod[n:]
    return _trim([c % p for c in prod])


def _powmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    b = base
    while e:
        if e & 1:
            result = _mulmod(result, b, f, p)
        e >>= 1
        if e:
            b = _mulmod(b, b, f, p)
    return result


def _rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while a and len(a) - 1 >= db:
        c = (a[-1] * inv) % p
        shift = len(a) - 1 - db
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bj) % p
        a.pop()
        _trim(a)
    return a


def _quo(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    if len(a) < len(b):
        return []
    q = [0] * (len(a) - db)
    while a and len(a) - 1 >= db:
        c = (a[-1] * inv) % p
        shift = len(a) - 1 - db
        q[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] = (a[shift + j] - c * bj) % p
        a.pop()
        _trim(a)
    return _trim(q)


def _gcdmod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, _rem(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [(c * inv) % p for c in a]
    return a


def _reduction(f: IntPolynomial, p: int) -> list[int]:
    return _trim([c % p for c in f.coefficients])


def _is_ramified_mod(fbar: list[int], p: int) -> bool:
    deriv = _trim([(i * c) % p for i, c in enumerate(fbar)][1:])
    return len(_gcdmod(fbar, deriv, p)) != 1


@lru_cache(maxsize=200000)
def _residue_degrees(
    coefficients: tuple[int, ...], p: int
) -> Optional[tuple[int, ...]]:
    fbar = _trim([c % p for c in coefficients])
    if _is_ramified_mod(fbar, p):
        return None
    degrees: list[int] = []
    g = fbar
    h = [0, 1]
    d = 0
    while len(g) - 1 > 0:
        d += 1
        if 2 * d > len(g) - 1:
            degrees.append(len(g) - 1)
            break
        h = _powmod(h, p, g, p)
        diff = list(h) + [0] * (2 - len(h))
        diff[1] = (diff[1] - 1) % p
        factor = _gcdmod(g, diff, p)
        if len(factor) > 1:
            degrees.extend([d] * ((len(factor) - 1) // d))
            g = _quo(g, factor, p)
            h = _rem(h, g, p) if len(g) > 1 else []
    degrees.sort()
    return tuple(degrees)


def decomposition_type(
    f: IntPolynomial, p: int
) -> Optional[DecompositionType]:
    """Residue degrees of p, or None when p is ramified.

    Distinct-degree factorization: for d = 1, 2, ... strip off the
    product of the degree-d irreducible factors as gcd(g, x^(p^d) - x),
    maintaining x^(p^d) by repeated squaring modulo the remaining part.
    Once 2d exceeds the remaining degree that part is irreducible.
    """
    if not f.is_monic:
        raise ValueError("polynomial must be monic")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    degrees = _residue_degrees(f.coefficients, p)
    if degrees is None:
        return None
    assert sum(degrees) == f.degree
    return DecompositionType(degrees)


def ramified_primes(f: IntPolynomial, bound: int) -> frozenset[int]:
    """Primes p < bound where f mod p is not squarefree."""
    if not f.is_monic:
        raise ValueError("polynomial must be monic")
    return frozenset(
        p
        for p in primes_below(bound)
        if _is_ramified_mod(_reduction(f, p), p)
    )


def inert_density(f: IntPolynomial, bound: int) -> Fraction:
    """Fraction of unramified primes below bound that stay inert."""
    if not f.is_monic:
        raise ValueError("polynomial must be monic")
    if bound < 100:
        raise ValueError("bound must be at least 100")
    inert = 0
    unramified = 0
    for p in primes_below(bound):
        degrees = _residue_degrees(f.coefficients, p)
        if degrees is None:
            continue
        unramified += 1
        if len(degrees) == 1:
            inert += 1
    if unramified == 0:
        raise ValueError("no unramified primes below bound")
    return Fraction(inert, unramified)


# -- exact real root counting -------------------------------------------------


def _content(cs: tuple[int, ...]) -> int:
    g = 0
    for c in cs:
        g = gcd(g, abs(c))
    return g or 1


def _primitive(cs: tuple[int, ...]) -> tuple[int, ...]:
    g = _content(cs)
    return tuple(c // g for c in cs)


def _pseudo_rem_signed(
    a: tuple[int, ...], b: tuple[int, ...]
) -> tuple[int, ...]:
    """Remainder of a by b scaled by a positive constant, exact over Z."""
    delta = len(a) - len(b)
    scale = b[-1] ** (delta + 1)
    r = [c * scale for c in a]
    db = len(b) - 1
    while len(r) - 1 >= db:
        lead = r[-1]
        if lead:
            shift = len(r) - 1 - db
            q, check = divmod(lead, b[-1])
            assert check == 0
            for j, bj in enumerate(b):
                r[shift + j] -= q * bj
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    out = tuple(r)
    return tuple(-c for c in out) if scale < 0 else out


def _sturm_chain(f: IntPolynomial) -> list[tuple[int, ...]]:
    chain = [f.coefficients]
    d = f.derivative().coefficients
    if d != (0,):
        chain.append(d)
        while True:
            r = _pseudo_rem_signed(chain[-2], chain[-1])
            if not r:
                break
            chain.append(_primitive(tuple(-c for c in r)))
    return chain


def _sign_variations(signs: list[int]) -> int:
    nonzero = [s for s in signs if s]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a * b < 0)


def sturm_signature(f: IntPolynomial) -> Signature:
    """(real places, complex places) via a Sturm chain at +-infinity.

    The chain uses pseudo-remainders scaled by positive constants with
    primitive-part reduction after each step, so every computation is
    exact.  Requires f squarefree over the rationals.
    """
    chain = _sturm_chain(f)
    if f.degree > 0 and len(chain[-1]) > 1:
        raise ValueError("polynomial is not squarefree")
    at_pos = [cs[-1] for cs in chain]
    at_neg = [
        cs[-1] * (-1 if (len(cs) - 1) % 2 else 1) for cs in chain
    ]
    r1 = _sign_variations(at_neg) - _sign_variations(at_pos)
    assert 0 <= r1 <= f.degree and (f.degree - r1) % 2 == 0
    return Signature(r1, (f.degree - r1) // 2)


# -- comparisons --------------------------------------------------------------


@dataclass(frozen=True)
class DecompositionComparison:
    agree: bool
    first_disagreement: Optional[int]
    skipped_ramified: tuple[int, ...]
    compared: int


def compare_decompositions(
    f1: IntPolynomial, f2: IntPolynomial, bound: int
) -> DecompositionComparison:
    """Compare residue degrees at every prime below bound unramified in both."""
    if f1.degree != f2.degree:
        raise ValueError(
            f"degree mismatch: {f1.degree} vs {f2.degree}"
        )
    skipped: list[int] = []
    compared = 0
    for p in primes_below(bound):
        d1 = _residue_degrees(f1.coefficients, p)
        d2 = _residue_degrees(f2.coefficients, p)
        if d1 is None or d2 is None:
            skipped.append(p)
            continue
        compared += 1
        if d1 != d2:
            return DecompositionComparison(
                False, p, tuple(skipped), compared
            )
    return DecompositionComparison(True, None, tuple(skipped), compared)


@dataclass(frozen=True)
class TypeFrequency:
    cycle_type: tuple[int, ...]
    predicted: Fraction
    observed: Fraction


@dataclass(frozen=True)
class ChebotarevReport:
    consistent: bool
    all_types_realized: bool
    frequencies: tuple[TypeFrequency, ...]
    max_deviation: Fraction
    unramified_count: int


def chebotarev_consistency(
    group: PermGroup,
    omega: GSet,
    f: IntPolynomial,
    bound: int,
    tolerance: Fraction = Fraction(1, 20),
) -> ChebotarevReport:
    """Check observed decomposition types against the action's cycle types.

    The pairing of f with its Galois action (group, omega) is taken on
    trust.  Every type seen at an unramified prime below bound must
    occur as a cycle type on omega, and each type's observed share must
    sit within tolerance of the share of elements carrying that cycle
    type.
    """
    if omega.group is not group:
        raise ValueError("omega is not an action of the given group")
    if omega.size != f.degree:
        raise ValueError(
            f"degree mismatch: action on {omega.size} points vs degree {f.degree}"
        )
    acting = omega.acting_elements()
    type_counts: dict[tuple[int, ...], int] = {}
    for g in acting:
        t = omega.perm(g).cycle_type()
        type_counts[t] = type_counts.get(t, 0) + 1
    observed: dict[tuple[int, ...], int] = {}
    unramified = 0
    for p in primes_below(bound):
        degrees = _residue_degrees(f.coefficients, p)
        if degrees is None:
            continue
        unramified += 1
        observed[degrees] = observed.get(degrees, 0) + 1
    all_realized = set(observed) <= set(type_counts)
    rows = []
    max_dev = Fraction(0)
    for t in sorted(set(type_counts) | set(observed)):
        predicted = Fraction(type_counts.get(t, 0), len(acting))
        seen = Fraction(observed.get(t, 0), unramified) if unramified else Fraction(0)
        max_dev = max(max_dev, abs(predicted - seen))
        rows.append(TypeFrequency(t, predicted, seen))
    return ChebotarevReport(
        consistent=all_realized and max_dev <= tolerance,
        all_types_realized=all_realized,
        frequencies=tuple(rows),
        max_deviation=max_dev,
        unramified_count=unramified,
    )


DEGREE7_PAIR = (
    parse_polynomial("x^7-7*x+3"),
    parse_polynomial("x^7+14*x^4-42*x^2-21*x+9"),
)

DEGREE11_PAIR = (
    parse_polynomial(
        "x^11-2*x^10+3*x^9+2*x^8-5*x^7+16*x^6-10*x^5+10*x^4+2*x^3-3*x^2+4*x-1"
    ),
    parse_polynomial(
        "x^11-2*x^10+x^9-5*x^8+13*x^7-9*x^6+x^5-8*x^4+9*x^3-3*x^2-2*x+1"
    ),
)

"""Machine-checkable encodings of the paper-derived identities.

Each descriptor pairs a parameter schema (with domain constraints) with two
independent evaluators.  LHS evaluators of Lerch identities call only the
phi dispatcher and its derivative; trig-product LHS evaluators call only
elementary functions; closed-form RHS evaluators never reuse LHS
intermediates.

Evaluators return (value, kappa) where kappa is the cancellation factor:
sum of top-level additive term magnitudes over the result magnitude, or
for products the largest partial-product magnitude over the result
magnitude.
"""
from __future__ import annotations

import cmath
import functools
import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import EvaluationError, LerchkitError
from .numerics import constants, gamma, principal_pow
from .lerch import phi, phi_ds, polylog_ds

GUARD = 0.05  # pole-distance guard for trig arguments, in radians

Assignment = dict
SideValue = tuple[complex, float]


@dataclass(frozen=True)
class ParamSpec:
    name: str
    kind: str       # integer | real | complex
    domain: str     # human-readable bounds / construction rule


@dataclass(frozen=True)
class ParamSchema:
    params: tuple[ParamSpec, ...]
    draw: Callable[[random.Random], Assignment]
    constraints: tuple[tuple[str, Callable[[Assignment], bool]], ...] = ()


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    title: str
    schema: ParamSchema
    lhs: Callable[[Assignment], SideValue]
    rhs: Callable[[Assignment], SideValue]
    branch_sensitive: bool
    base_tol: float
    # scale w such that a single principal-branch slip multiplies one side
    # by exp(2 pi i d w); present only on branch-sensitive identities
    exponent_scale: Callable[[Assignment], complex] | None = None
    tags: Callable[[Assignment], tuple[str, ...]] = field(default=lambda a: ())


def _sum_side(terms: Iterable[complex]) -> SideValue:
    terms = list(terms)
    value = sum(terms)
    absum = sum(abs(t) for t in terms)
    kappa = absum / abs(value) if value != 0 else math.inf
    return value, max(kappa, 1.0)


def _product_side(factors: Iterable[complex]) -> SideValue:
    """Multiply keeping the running magnitude near 1 (large and small factors
    interleaved), so the partial-product peak reflects irreducible growth
    rather than evaluation order; also avoids intermediate overflow.

    kappa is the peak partial-product magnitude over the result magnitude
    floored at unit scale: sinking to a small product value costs no
    relative precision, only an unremovable peak above the result does.
    """
    order = sorted(factors, key=abs)
    lo, hi = 0, len(order) - 1
    value = 1.0 + 0.0j
    maxmag = 0.0
    while lo <= hi:
        if abs(value) >= 1.0:
            value *= order[lo]
            lo += 1
        else:
            value *= order[hi]
            hi -= 1
        maxmag = max(maxmag, abs(value))
    if value == 0:
        return value, math.inf
    kappa = maxmag / max(abs(value), 1.0)
    return value, max(kappa, 1.0)


def _single(value: complex) -> SideValue:
    return value, 1.0


def _draw_disk(rng: random.Random, radius: float) -> complex:
    r = radius * math.sqrt(rng.random())
    return cmath.rect(r, 2.0 * math.pi * rng.random())


def _draw_annulus(rng: random.Random, lo: float, hi: float) -> complex:
    r = math.sqrt(rng.uniform(lo * lo, hi * hi))
    return cmath.rect(r, 2.0 * math.pi * rng.random())


def _coprime_to(rng: random.Random, n: int, hi: int = 12) -> int:
    return rng.choice([c for c in range(1, hi + 1) if math.gcd(c, n) == 1])


def _sin_clear(x: complex) -> bool:
    return abs(cmath.sin(x)) >= GUARD


def _cos_clear(x: complex) -> bool:
    return abs(cmath.cos(x)) >= GUARD


def _clear_of_nonpositive_integers(v: complex, limit: int = 45) -> bool:
    return min(abs(v + g) for g in range(limit)) >= GUARD


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % f for f in range(2, int(n ** 0.5) + 1))


# --------------------------------------------------------------------------
# 1. main theorem
# --------------------------------------------------------------------------

def _theorem_v_args(a: Assignment) -> tuple[complex, complex, complex]:
    la = cmath.log(a["a"])
    j, n = a["j"], a["n"]
    return (-j - 0.5j * la, j + 1 - 0.5j * la, 1 - 1j * la / (2 * n))


def _theorem_draw(rng: random.Random) -> Assignment:
    n = rng.randint(1, 8)
    l = _coprime_to(rng, n)
    j = rng.randint(0, n - 1)
    regime = "R1" if rng.random() < 2.0 / 3.0 else "R2"
    if regime == "R1":
        k = complex(rng.randint(0, 3))
        q0 = rng.randint(1, 12)
        c = rng.randint(-3 * n * q0, 3 * n * q0)
        m = complex(c * math.pi / (n * q0))
    else:
        k = _draw_disk(rng, 3.0)
        # Im m shrinks with j: the summand prefactor grows like
        # e^(2 j Im m) against an O(n) result, so unscaled draws are
        # unverifiably ill-conditioned in doubles
        m = complex(rng.uniform(-1.0, 1.0),
                    rng.uniform(0.1, min(1.0, 2.0 / max(j, 1))))
    a = cmath.exp(_draw_disk(rng, 2.0))
    return {"regime": regime, "n": n, "l": l, "j": j, "k": k, "a": a, "m": m}


def _theorem_guards_ok(a: Assignment) -> bool:
    n, l, m = a["n"], a["l"], a["m"]
    if a["regime"] == "R1":
        if not _sin_clear(m * n):
            return False
        for p in range(n):
            if not _sin_clear(m + math.pi * l * p / n):
                return False
    else:
        la = cmath.log(a["a"])
        if abs(la) < GUARD:
            return False  # log^k(a) with complex k needs log a != 0
        # for non-integer k the identity only holds with log a off the
        # third quadrant, where principal log^k(a) crosses its branch cut
        if la.real < GUARD and la.imag < GUARD:
            return False
    return all(_clear_of_nonpositive_integers(v) for v in _theorem_v_args(a))


def _theorem_lhs(a: Assignment) -> SideValue:
    n, l, j, k, m = a["n"], a["l"], a["j"], a["k"], a["m"]
    v1, v2, _ = _theorem_v_args(a)
    terms = []
    for p in range(n):
        zp = cmath.exp(2j * (m * n + l * p * math.pi) / n)
        pref = cmath.exp(-2j * j * (math.pi * l * p + m * n) / n)
        terms.append(pref * phi(zp, -k, v1).value)
        terms.append(pref * cmath.exp(2j * (2 * j + 1) * (math.pi * l * p / n + m))
                     * phi(zp, -k, v2).value)
    return _sum_side(terms)


def _theorem_rhs(a: Assignment) -> SideValue:
    n, k, m = a["n"], a["k"], a["m"]
    la = cmath.log(a["a"])
    _, _, v3 = _theorem_v_args(a)
    zr = cmath.exp(2j * m * n)
    t_log = principal_pow(la, k)
    t_phi = (principal_pow(2.0, k + 1) * principal_pow(1j * n, k)
             * zr * phi(zr, -k, v3).value)
    pref = principal_pow(2j, -k) * n
    value = pref * (t_log + t_phi)
    kappa = (abs(t_log) + abs(t_phi)) / abs(t_log + t_phi) if t_log + t_phi != 0 else math.inf
    return value, max(kappa, 1.0)


def _theorem_tags(a: Assignment) -> tuple[str, ...]:
    tags = [f"regime={a['regime']}"]
    if a["j"] == a["n"] - 1:
        tags.append("j=n-1")
    tags.append("l=prime" if _is_prime(a["l"]) else "l=composite")
    return tuple(tags)


def _theorem_main() -> IdentityDescriptor:
    schema = ParamSchema(
        params=(
            ParamSpec("n", "integer", "[1, 8]"),
            ParamSpec("l", "integer", "[1, 12], gcd(l, n) = 1"),
            ParamSpec("j", "integer", "[0, n-1]"),
            ParamSpec("k", "complex", "R1: integer [0, 3]; R2: |k| <= 3"),
            ParamSpec("m", "complex", "R1: c pi/(n q0), q0 <= 12; R2: Im m in [0.1, 1]"),
            ParamSpec("a", "complex", "|log a| <= 2"),
        ),
        draw=_theorem_draw,
        constraints=(
            ("gcd(l,n)=1", lambda a: math.gcd(a["l"], a["n"]) == 1),
            ("0<=j<=n-1", lambda a: 0 <= a["j"] <= a["n"] - 1),
            ("pole and v guards", _theorem_guards_ok),
        ),
    )
    return IdentityDescriptor(
        id="theorem-main",
        title="finite sum of Lerch functions in terms of one Lerch function",
        schema=schema, lhs=_theorem_lhs, rhs=_theorem_rhs,
        branch_sensitive=False, base_tol=1e-9, tags=_theorem_tags,
    )


# --------------------------------------------------------------------------
# 2. degenerate cosecant-cosine sum
# --------------------------------------------------------------------------

def _degenerate_draw(rng: random.Random) -> Assignment:
    n = rng.randint(1, 50)
    l = _coprime_to(rng, n)
    j = rng.randint(0, n - 1)
    if rng.random() < 0.5:
        m = complex(rng.uniform(-2.0, 2.0))
    else:
        # csc * cos terms grow like e^(2 j |Im m|) against an O(n) result,
        # so Im m shrinks with j to stay verifiable in doubles
        im_cap = min(0.8, 2.0 / max(j, 1))
        m = complex(rng.uniform(-2.0, 2.0), rng.uniform(-im_cap, im_cap))
    return {"n": n, "l": l, "j": j, "m": m}


def _degenerate_guards_ok(a: Assignment) -> bool:
    n, l, m = a["n"], a["l"], a["m"]
    if not _sin_clear(m * n):
        return False
    return all(_sin_clear(math.pi * l * p / n + m) for p in range(n))


def _degenerate_lhs(a: Assignment) -> SideValue:
    n, l, j, m = a["n"], a["l"], a["j"], a["m"]
    terms = []
    for p in range(n):
        t = math.pi * l * p / n + m
        terms.append(-cmath.cos((2 * j + 1) * t) / cmath.sin(t))
    return _sum_side(terms)


def _degenerate_rhs(a: Assignment) -> SideValue:
    n, m = a["n"], a["m"]
    return _single(-n * cmath.cos(m * n) / cmath.sin(m * n))


def _degenerate() -> IdentityDescriptor:
    schema = ParamSchema(
        params=(
            ParamSpec("n", "integer", "[1, 50]"),
            ParamSpec("l", "integer", "[1, 12], gcd(l, n) = 1"),
            ParamSpec("j", "integer", "[0, n-1]"),
            ParamSpec("m", "complex", "real [-2, 2] or with |Im m| <= 0.8"),
        ),
        draw=_degenerate_draw,
        constraints=(
            ("gcd(l,n)=1", lambda a: math.gcd(a["l"], a["n"]) == 1),
            ("sin-distance guards", _degenerate_guards_ok),
        ),
    )
    return IdentityDescriptor(
        id="degenerate-watson-harkins",
        title="cosecant-cosine finite sum equals -n cot(m n)",
        schema=schema, lhs=_degenerate_lhs, rhs=_degenerate_rhs,
        branch_sensitive=False, base_tol=1e-10,
    )


# --------------------------------------------------------------------------
# 3-6. finite trigonometric products
#
# Each was derived from the theorem at a fixed j, which requires n >= j+1;
# below that the printed closed forms do not hold, so the samplers start
# at the smallest valid n (A, B: j=1; C: j=3; D: j=1 with l=2, n odd).
# --------------------------------------------------------------------------

def _trig_x_draw(rng: random.Random) -> float:
    return rng.uniform(-2.5, 2.5)


def _product_a_lhs(a: Assignment) -> SideValue:
    n, x = a["n"], a["x"]
    factors = []
    for p in range(n):
        t = math.pi * p / n
        factors.append(
            cmath.sin(t + x / 2) ** 3 / (cmath.sin(t + x / 4) ** 2 * cmath.sin(t + x))
            * cmath.exp(4 * cmath.sin(x / 4) ** 2
                        * (2 * cmath.cos(2 * t + x) + cmath.cos(2 * t + 1.5 * x))))
    return _product_side(factors)


def _product_a_rhs(a: Assignment) -> SideValue:
    n, x = a["n"], a["x"]
    return _single(2 * cmath.cos(n * x / 4) ** 2 / cmath.cos(n * x / 2))


def _product_b_lhs(a: Assignment) -> SideValue:
    n, x = a["n"], a["x"]
    ipi = 1j * math.pi
    factors = []
    for p in range(n):
        t = math.pi * p / n
        base = cmath.sin(t + x / 2) / cmath.sin(t + x)
        factors.append(principal_pow(base, ipi))
        factors.append(cmath.exp(
            cmath.cos(t + x / 2) / cmath.sin(t + x / 2)
            - cmath.cos(t + x) / cmath.sin(t + x)
            + 2 * cmath.sin(x / 2) * (2 * cmath.cos(2 * t + 1.5 * x)
                                      + ipi * cmath.sin(2 * t + 1.5 * x))))
    return _product_side(factors)


def _product_b_rhs(a: Assignment) -> SideValue:
    n, x = a["n"], a["x"]
    ipi = 1j * math.pi
    arg = n / cmath.sin(n * x)
    # sinh(u) + cosh(u) evaluated as exp(u): the literal sum cancels
    # catastrophically for u << 0
    value = (principal_pow(2.0, -ipi) * principal_pow(1.0 / cmath.cos(n * x / 2), ipi)
             * cmath.exp(arg))
    return _single(value)


def _product_c_lhs(a: Assignment) -> SideValue:
    n, x = a["n"], a["x"]
    factors = []
    for p in range(n):
        t = math.pi * p / n
        tp = 2 * t
        expo = (-4 * cmath.sin(x / 4) * cmath.sin(tp + 0.75 * x)
                - (4.0 / 3.0) * cmath.sin(0.75 * x) * cmath.sin(3 * tp + 2.25 * x)
                + cmath.sin(x) * cmath.sin(2 * tp + 3 * x)
                + (2.0 / 3.0) * cmath.sin(1.5 * x) * cmath.sin(3 * tp + 4.5 * x)
                - 4 * cmath.sin(x / 2) * cmath.sin(t) * cmath.cos(3 * t + 1.5 * x))
        factors.append(
            cmath.sin(t + x / 2) ** 3 / (cmath.sin(t + x / 4) ** 2 * cmath.sin(t + x))
            * cmath.exp(expo))
    return _product_side(factors)


def _product_c_rhs(a: Assignment) -> SideValue:
    n, x = a["n"], a["x"]
    return _sum_side([1.0 / cmath.cos(n * x / 2), 1.0 + 0.0j])


def _product_d_lhs(a: Assignment) -> SideValue:
    n, x = a["n"], a["x"]
    factors = []
    for p in range(n):
        u = 2 * math.pi * p / n
        factors.append(
            cmath.sin(u + x / 4) ** 14 * cmath.sin(u + x)
            / (cmath.sin(u + x / 8) ** 8 * cmath.sin(u + x / 2) ** 7)
            * cmath.exp(-8 * cmath.cos(2 * u + x / 4) + 14 * cmath.cos(2 * u + x / 2)
                        - 7 * cmath.cos(2 * u + x) + cmath.cos(2 * u + 2 * x)))
    return _product_side(factors)


def _product_d_rhs(a: Assignment) -> SideValue:
    n, x = a["n"], a["x"]
    value = (8 * cmath.cos(n * x / 8) ** 8 * cmath.cos(n * x / 2)
             / cmath.cos(n * x / 4) ** 6)
    return _single(value)


def _trig_product(ident: str, title: str, n_lo: int, n_hi: int, lhs, rhs,
                  guard: Callable[[Assignment], bool], branch_sensitive: bool,
                  odd_n: bool = False) -> IdentityDescriptor:
    def draw(rng: random.Random) -> Assignment:
        if odd_n:
            n = rng.choice(range(n_lo, n_hi + 1, 2))
        else:
            n = rng.randint(n_lo, n_hi)
        return {"n": n, "x": _trig_x_draw(rng)}

    schema = ParamSchema(
        params=(
            ParamSpec("n", "integer", f"[{n_lo}, {n_hi}]" + (", odd" if odd_n else "")),
            ParamSpec("x", "real", "[-2.5, 2.5] with pole-distance guards"),
        ),
        draw=draw,
        constraints=(("pole-distance guards", guard),),
    )
    return IdentityDescriptor(
        id=ident, title=title, schema=schema, lhs=lhs, rhs=rhs,
        branch_sensitive=branch_sensitive, base_tol=1e-8,
        exponent_scale=(lambda a: 1j * math.pi) if branch_sensitive else None,
    )


def _guard_a(a: Assignment) -> bool:
    n, x = a["n"], a["x"]
    if not _cos_clear(n * x / 2):
        return False
    return all(_sin_clear(math.pi * p / n + x / 4) and _sin_clear(math.pi * p / n + x)
               for p in range(n))


def _guard_b(a: Assignment) -> bool:
    n, x = a["n"], a["x"]
    if not (_cos_clear(n * x / 2) and _sin_clear(n * x)):
        return False
    return all(_sin_clear(math.pi * p / n + x / 2) and _sin_clear(math.pi * p / n + x)
               for p in range(n))


def _guard_d(a: Assignment) -> bool:
    n, x = a["n"], a["x"]
    if not _cos_clear(n * x / 4):
        return False
    return all(_sin_clear(2 * math.pi * p / n + x / 8)
               and _sin_clear(2 * math.pi * p / n + x / 2) for p in range(n))


# --------------------------------------------------------------------------
# 7, 8, 12. Lerch recurrences
# --------------------------------------------------------------------------

def _recurrence_draw(j_choices: tuple[int, ...]):
    def draw(rng: random.Random) -> Assignment:
        j = rng.choice(j_choices)
        return {
            "z": _draw_annulus(rng, 0.1, 0.9),
            "s": _draw_disk(rng, 3.0),
            "a": complex(rng.uniform(0.2, 3.0) + j, rng.uniform(-2.0, 2.0)),
            "j": j,
        }
    return draw


def _three_term_lhs(a: Assignment) -> SideValue:
    return _single(phi(a["z"], a["s"], a["a"]).value)


def _three_term_rhs(asn: Assignment) -> SideValue:
    z, s, a, j = asn["z"], asn["s"], asn["a"], asn["j"]
    zj = principal_pow(z, j)
    t1 = zj * principal_pow(z, j + 1) * (-phi(z, s, a + 2 * j + 1).value)
    t2 = zj * 2 * z * phi(z, s, a + j + 1).value
    t3 = zj * principal_pow(1j, s) * principal_pow(1j * (a + j), -s)
    return _sum_side([t1, t2, t3])


def _recurrence_three_term() -> IdentityDescriptor:
    # The printed identity is the theorem's n = 1 instance, which only
    # exists for j = 0 (checked numerically: it fails for j >= 1), so the
    # sampler fixes j = 0.
    schema = ParamSchema(
        params=(
            ParamSpec("z", "complex", "0.1 <= |z| <= 0.9"),
            ParamSpec("s", "complex", "|s| <= 3"),
            ParamSpec("a", "complex", "Re(a) in [0.2, 3], |Im a| <= 2"),
            ParamSpec("j", "integer", "{0} (identity invalid for j >= 1)"),
        ),
        draw=_recurrence_draw((0,)),
        constraints=(
            ("j valid", lambda a: a["j"] == 0),
            ("a clear of poles", lambda a: _clear_of_nonpositive_integers(a["a"])),
        ),
    )
    return IdentityDescriptor(
        id="recurrence-three-term",
        title="three-neighbour recurrence from the n = 1 theorem instance",
        schema=schema, lhs=_three_term_lhs, rhs=_three_term_rhs,
        branch_sensitive=False, base_tol=1e-10,
    )


def _two_term_lhs(a: Assignment) -> SideValue:
    return _single(phi(a["z"], a["s"], a["a"]).value)


def _two_term_rhs(asn: Assignment) -> SideValue:
    z, s, a = asn["z"], asn["s"], asn["a"]
    t1 = z * phi(z, s, a + 1).value
    t2 = principal_pow(a, -s)
    return _sum_side([t1, t2])


def _recurrence_two_term() -> IdentityDescriptor:
    schema = ParamSchema(
        params=(
            ParamSpec("z", "complex", "0.1 <= |z| <= 0.9"),
            ParamSpec("s", "complex", "|s| <= 3"),
            ParamSpec("a", "complex", "Re(a) in [0.2, 3], |Im a| <= 2"),
        ),
        draw=lambda rng: {k: v for k, v in _recurrence_draw((0,))(rng).items() if k != "j"},
        constraints=(
            ("a clear of poles", lambda a: _clear_of_nonpositive_integers(a["a"])),
        ),
    )
    return IdentityDescriptor(
        id="recurrence-two-term",
        title="consecutive-neighbour recurrence Phi = z Phi(a+1) + a^-s",
        schema=schema, lhs=_two_term_lhs, rhs=_two_term_rhs,
        branch_sensitive=False, base_tol=1e-10,
    )


def _n2_lhs(asn: Assignment) -> SideValue:
    z, s, a, j, l = asn["z"], asn["s"], asn["a"], asn["j"], asn["l"]
    el = cmath.exp(1j * math.pi * l)
    ejl = cmath.exp(1j * math.pi * j * l)
    z2j1 = principal_pow(z, 2 * j + 1)
    terms = [
        ejl * phi(z, s, a - j).value,
        ejl * z2j1 * phi(z, s, a + j + 1).value,
        ejl * z2j1 * cmath.exp(1j * math.pi * (j + 1) * l) * phi(el * z, s, a + j + 1).value,
        phi(el * z, s, a - j).value,
    ]
    return _sum_side(terms)


def _n2_rhs(asn: Assignment) -> SideValue:
    z, s, a, j, l = asn["z"], asn["s"], asn["a"], asn["j"], asn["l"]
    pref = 2 * cmath.exp(1j * math.pi * j * l) * principal_pow(z, j)
    t1 = pref * principal_pow(2.0, 1 - s) * z * z * phi(z * z, s, a / 2 + 1).value
    t2 = pref * cmath.exp(1j * math.pi * s / 2) * principal_pow(1j * a, -s)
    return _sum_side([t1, t2])


def _recurrence_n2() -> IdentityDescriptor:
    # n = 2 theorem instance: valid for j in {0, 1} only (fails for j >= 2,
    # matching the theorem's j <= n-1 requirement).
    def draw(rng: random.Random) -> Assignment:
        asn = _recurrence_draw((0, 1))(rng)
        asn["l"] = rng.choice((1, 3))
        return asn

    schema = ParamSchema(
        params=(
            ParamSpec("z", "complex", "0.1 <= |z| <= 0.9"),
            ParamSpec("s", "complex", "|s| <= 3"),
            ParamSpec("a", "complex", "Re(a) > j + 0.2, |Im a| <= 2"),
            ParamSpec("j", "integer", "{0, 1} (identity invalid for j >= 2)"),
            ParamSpec("l", "integer", "{1, 3}"),
        ),
        draw=draw,
        constraints=(
            ("Re(a) > j + 0.2", lambda a: a["a"].real > a["j"] + 0.2),
            ("a/2+1, a-j clear of poles",
             lambda a: _clear_of_nonpositive_integers(a["a"] - a["j"])
             and _clear_of_nonpositive_integers(a["a"] / 2 + 1)
             and abs(a["a"]) >= GUARD),
        ),
    )
    return IdentityDescriptor(
        id="recurrence-n2",
        title="two-root recurrence from the n = 2 theorem instance",
        schema=schema, lhs=_n2_lhs, rhs=_n2_rhs,
        branch_sensitive=False, base_tol=1e-10,
    )


# --------------------------------------------------------------------------
# 9. Glaisher-constant identity (no free parameters)
# --------------------------------------------------------------------------

def _glaisher_lhs(_: Assignment) -> SideValue:
    terms = [
        -phi_ds(-1j, -1.0, 0.0).value,
        -phi_ds(1j, -1.0, 0.0).value,
        -polylog_ds(-1.0, -1j).value,
        -polylog_ds(-1.0, 1j).value,
    ]
    return _sum_side(terms)


def _glaisher_rhs(_: Assignment) -> SideValue:
    big_a = constants().glaisher
    return _single(complex(math.log(big_a ** 24 / (16 * 2 ** (2.0 / 3.0) * math.e ** 2))))


def _glaisher() -> IdentityDescriptor:
    schema = ParamSchema(params=(), draw=lambda rng: {}, constraints=())
    return IdentityDescriptor(
        id="glaisher",
        title="order-derivative identity at s = -1 in terms of Glaisher's constant",
        schema=schema, lhs=_glaisher_lhs, rhs=_glaisher_rhs,
        branch_sensitive=False, base_tol=1e-8,
    )


# --------------------------------------------------------------------------
# 10. tangent-quotient product
# --------------------------------------------------------------------------

def _rational_pi(rng: random.Random, n: int) -> complex:
    q0 = rng.randint(1, 12)
    c = rng.randint(-3 * n * q0, 3 * n * q0)
    return complex(c * math.pi / (n * q0))


def _tangent_draw(rng: random.Random) -> Assignment:
    n = rng.randint(1, 8)
    l = _coprime_to(rng, n)
    return {"n": n, "l": l, "m": _rational_pi(rng, n), "r": _rational_pi(rng, n)}


def _tangent_guards_ok(a: Assignment) -> bool:
    n, l, m, r = a["n"], a["l"], a["m"], a["r"]
    if not (_sin_clear(m * n) and _sin_clear(r * n)):
        return False
    for p in range(n):
        u = (math.pi * l * p + m * n) / (2 * n)
        w = (math.pi * l * p + n * r) / (2 * n)
        if not (_sin_clear(u) and _cos_clear(u) and _sin_clear(w) and _cos_clear(w)):
            return False
    return True


def _tangent_lhs(a: Assignment) -> SideValue:
    n, l, m, r = a["n"], a["l"], a["m"], a["r"]
    factors = []
    for p in range(n):
        u = (math.pi * l * p + m * n) / (2 * n)
        w = (math.pi * l * p + n * r) / (2 * n)
        cot_u = cmath.cos(u) / cmath.sin(u)
        tan_w = cmath.sin(w) / cmath.cos(w)
        factors.append(principal_pow(1j * cot_u, 2 * cmath.exp(-1j * (math.pi * l * p + m * n) / n)))
        factors.append(principal_pow(-1j * tan_w, 2 * cmath.exp(-1j * (math.pi * l * p + n * r) / n)))
    return _product_side(factors)


def _tangent_rhs(a: Assignment) -> SideValue:
    n, m, r = a["n"], a["m"], a["r"]
    v = 1 + 1.0 / (2 * n)
    zm = cmath.exp(2j * m * n)
    zr = cmath.exp(2j * n * r)
    expo = 2 * zm * phi(zm, 1.0, v).value - 2 * zr * phi(zr, 1.0, v).value
    return _single(cmath.exp(expo))


def _tangent_quotient() -> IdentityDescriptor:
    schema = ParamSchema(
        params=(
            ParamSpec("n", "integer", "[1, 8]"),
            ParamSpec("l", "integer", "[1, 12], gcd(l, n) = 1"),
            ParamSpec("m", "real", "c pi/(n q0), q0 <= 12, guards"),
            ParamSpec("r", "real", "c pi/(n q0), q0 <= 12, guards"),
        ),
        draw=_tangent_draw,
        constraints=(
            ("gcd(l,n)=1", lambda a: math.gcd(a["l"], a["n"]) == 1),
            ("cot/tan pole-zero guards", _tangent_guards_ok),
        ),
    )
    return IdentityDescriptor(
        id="tangent-quotient-product",
        title="cot/tan power product equals exp of a Lerch difference at s = 1",
        schema=schema, lhs=_tangent_lhs, rhs=_tangent_rhs,
        branch_sensitive=True, base_tol=1e-8,
        exponent_scale=lambda a: 2 * cmath.exp(-1j * a["m"]),
    )


# --------------------------------------------------------------------------
# 11. quotient of trig functions raised to a complex power
# --------------------------------------------------------------------------

def _bpower_draw(rng: random.Random) -> Assignment:
    n = rng.randint(1, 10)
    l = _coprime_to(rng, n)
    return {"n": n, "l": l, "x": rng.uniform(-2.0, 2.0), "b": _draw_annulus(rng, 0.5, 3.0)}


def _bpower_args(a: Assignment, p: int) -> tuple[complex, complex, complex]:
    n, l, x, b = a["n"], a["l"], a["x"], a["b"]
    t = l * p * math.pi / n
    return t + x / b, t + x / (b * b), t + x


def _bpower_guards_ok(a: Assignment) -> bool:
    n, x, b = a["n"], a["x"], a["b"]
    for p in range(n):
        aa, bb, cc = _bpower_args(a, p)
        if not (_sin_clear(aa) and _cos_clear(aa) and _sin_clear(bb)
                and _cos_clear(bb) and _sin_clear(cc)):
            return False
    for arg in (n * x / b, n * x / (b * b)):
        if not (_sin_clear(arg) and _cos_clear(arg)):
            return False
    return _sin_clear(complex(n * x))


def _bpower_quotient_factor(aa: complex, bb: complex, b: complex) -> complex:
    num = cmath.cos(aa) * (cmath.sin(aa) / cmath.cos(aa))
    den = cmath.cos(bb) * (cmath.sin(bb) / cmath.cos(bb))
    return principal_pow(num / den, b)


def _bpower_lhs(a: Assignment) -> SideValue:
    n, b = a["n"], a["b"]
    factors = []
    for p in range(n):
        aa, bb, cc = _bpower_args(a, p)
        factors.append(cmath.sin(aa) / cmath.sin(cc))
        factors.append(_bpower_quotient_factor(aa, bb, b))
    return _product_side(factors)


def _bpower_rhs(a: Assignment) -> SideValue:
    n, x, b = a["n"], a["x"], a["b"]
    aa, bb = n * x / b, n * x / (b * b)
    factors = [cmath.sin(aa) / cmath.sin(complex(n * x)),
               _bpower_quotient_factor(aa, bb, b)]
    return _product_side(factors)


def _b_power_quotient() -> IdentityDescriptor:
    schema = ParamSchema(
        params=(
            ParamSpec("n", "integer", "[1, 10]"),
            ParamSpec("l", "integer", "[1, 12], gcd(l, n) = 1"),
            ParamSpec("x", "real", "[-2, 2] with guards"),
            ParamSpec("b", "complex", "0.5 <= |b| <= 3"),
        ),
        draw=_bpower_draw,
        constraints=(
            ("gcd(l,n)=1", lambda a: math.gcd(a["l"], a["n"]) == 1),
            ("trig pole-zero guards", _bpower_guards_ok),
        ),
    )
    return IdentityDescriptor(
        id="b-power-quotient",
        title="sine-quotient product with a complex-power factor",
        schema=schema, lhs=_bpower_lhs, rhs=_bpower_rhs,
        branch_sensitive=True, base_tol=1e-8,
        exponent_scale=lambda a: a["b"],
    )


# --------------------------------------------------------------------------
# 13, 14. log-gamma identities
# --------------------------------------------------------------------------

def _loggamma_draw(rng: random.Random) -> Assignment:
    return {"a": complex(rng.uniform(2.5, 8.0), rng.uniform(-4.0, 4.0))}


def _loggamma_guards_ok(asn: Assignment) -> bool:
    a = asn["a"]
    if abs(a - 2.0) < 0.1:
        return False
    args = (a / 4, (a - 2) / 4, (a + 1) / 4, (a + 2) / 4, (a + 3) / 4)
    return all(min(abs(g + q) for q in range(12)) >= 0.1 for g in args)


def _loggamma_sum_lhs(asn: Assignment) -> SideValue:
    a = asn["a"]
    return _sum_side([phi_ds(-1j, 0.0, a).value, phi_ds(1j, 0.0, a).value])


def _loggamma_sum_rhs(asn: Assignment) -> SideValue:
    a = asn["a"]
    # encoded exactly as printed, including the (a - 2) factor
    value = 2 * cmath.log(2 * gamma(a / 4) / ((a - 2) * gamma((a - 2) / 4)))
    return _single(value)


def _loggamma_sum() -> IdentityDescriptor:
    schema = ParamSchema(
        params=(ParamSpec("a", "complex", "Re(a) in [2.5, 8], |Im a| <= 4, a != 2"),),
        draw=_loggamma_draw,
        constraints=(("gamma args clear of poles", _loggamma_guards_ok),),
    )
    return IdentityDescriptor(
        id="loggamma-sum",
        title="Phi'(-i,0,a) + Phi'(i,0,a) as a log-gamma ratio",
        schema=schema, lhs=_loggamma_sum_lhs, rhs=_loggamma_sum_rhs,
        branch_sensitive=False, base_tol=1e-8,
    )


def _loggamma_product_lhs(asn: Assignment) -> SideValue:
    a = asn["a"]
    dm = phi_ds(-1j, 0.0, a).value
    dp = phi_ds(1j, 0.0, a).value
    return _sum_side([dm * dm, -dp * dp])


def _loggamma_product_rhs(asn: Assignment) -> SideValue:
    a = asn["a"]
    log1 = cmath.log(gamma(a / 4) / (2 * gamma((a + 2) / 4)))
    log2 = cmath.log(4 * gamma((a + 3) / 4) ** 2 / gamma((a + 1) / 4) ** 2)
    return _product_side([2j, log1, log2])


def _loggamma_diff_product() -> IdentityDescriptor:
    schema = ParamSchema(
        params=(ParamSpec("a", "complex", "Re(a) in [2.5, 8], |Im a| <= 4, a != 2"),),
        draw=_loggamma_draw,
        constraints=(("gamma args clear of poles", _loggamma_guards_ok),),
    )
    return IdentityDescriptor(
        id="loggamma-diff-product",
        title="Phi'(-i,0,a)^2 - Phi'(i,0,a)^2 as a product of log-gamma ratios",
        schema=schema, lhs=_loggamma_product_lhs, rhs=_loggamma_product_rhs,
        branch_sensitive=False, base_tol=1e-8,
    )


@functools.lru_cache(maxsize=1)
def registry() -> tuple[IdentityDescriptor, ...]:
    """All 14 identity descriptors, ids stable across releases."""
    return (
        _theorem_main(),
        _degenerate(),
        _trig_product("trig-product-A",
                      "sine/cosecant product with a cos-sum exponential",
                      2, 12, _product_a_lhs, _product_a_rhs, _guard_a, False),
        _trig_product("trig-product-B",
                      "sine-quotient product with exponent i pi",
                      2, 12, _product_b_lhs, _product_b_rhs, _guard_b, True),
        _trig_product("trig-product-C",
                      "sine/cosecant product with a sin-sum exponential",
                      4, 12, _product_c_lhs, _product_c_rhs, _guard_a, False),
        _trig_product("trig-product-D",
                      "14th-power sine product on doubled angles",
                      3, 11, _product_d_lhs, _product_d_rhs, _guard_d, False,
                      odd_n=True),
        _recurrence_three_term(),
        _recurrence_two_term(),
        _glaisher(),
        _tangent_quotient(),
        _b_power_quotient(),
        _recurrence_n2(),
        _loggamma_sum(),
        _loggamma_diff_product(),
    )


def find(identity_id: str) -> IdentityDescriptor:
    for d in registry():
        if d.id == identity_id:
            return d
    raise LerchkitError(f"unknown identity id: {identity_id!r}")


def evaluate_side(d: IdentityDescriptor, side: str, assignment: Assignment) -> SideValue:
    """Evaluate one side; evaluator failures carry the assignment context."""
    fn = {"lhs": d.lhs, "rhs": d.rhs}[side.lower()]
    try:
        return fn(assignment)
    except LerchkitError as exc:
        raise EvaluationError(d.id, side, assignment, exc) from exc

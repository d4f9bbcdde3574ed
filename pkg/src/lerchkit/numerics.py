"""Complex elementary and gamma-family special functions, integer tables, constants.

Everything here is double precision only and uses principal branches
throughout.  No operation picks a non-principal branch implicitly.
"""
from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PoleError

EULER_GAMMA = 0.5772156649015328606

# 20-digit Glaisher-Kinkelin reference, used by tests and the constants
# report as a cross-check.  The runtime constant is computed from the
# library's own zeta derivative, see constants().
GLAISHER_REFERENCE = 1.2824271291006226369


def principal_log(z: complex) -> complex:
    """Principal branch of log: log|z| + i*Arg(z), Arg in (-pi, pi]."""
    z = complex(z)
    if z == 0:
        raise DomainError("principal_log: z = 0")
    return cmath.log(z)


def principal_pow(z: complex, w: complex) -> complex:
    """z**w = exp(w * principal_log(z)), with 0**w = 0 for Re(w) > 0 and 0**0 = 1.

    Real integer exponents of modest size are done by binary powering so
    that e.g. z**1 is exactly z.
    """
    z = complex(z)
    w = complex(w)
    if z == 0:
        if w == 0:
            return 1.0 + 0.0j
        if w.real > 0:
            return 0.0 + 0.0j
        raise DomainError(f"principal_pow: 0 ** w undefined for Re(w) <= 0 (w={w})")
    if w.imag == 0.0 and w.real.is_integer() and abs(w.real) <= 64:
        n = int(w.real)
        if n < 0:
            return 1.0 / _ipow(z, -n)
        return _ipow(z, n)
    return cmath.exp(w * cmath.log(z))


def _ipow(z: complex, n: int) -> complex:
    result = 1.0 + 0.0j
    base = z
    while n:
        if n & 1:
            result *= base
        base *= base
        n >>= 1
    return result


def _is_nonpositive_integer(z: complex) -> bool:
    return z.imag == 0.0 and z.real <= 0.0 and z.real.is_integer()


# Lanczos rational approximation, g = 607/128 with 15 coefficients
# (Godfrey's set).  Gives ~15 significant digits on Re(z) >= 1/2.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


def log_gamma(z: complex) -> complex:
    """log-gamma: an L with exp(L) = Gamma(z), continuous on Re(z) > 0.

    For Re(z) < 1/2 the reflection formula is used with principal logs,
    which may jump branches; callers needing continuity stay in the right
    half plane.
    """
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"log_gamma: pole at z={z}")
    if z.real < 0.5:
        return math.log(math.pi) - cmath.log(cmath.sin(math.pi * z)) - log_gamma(1.0 - z)
    zz = z - 1.0
    s = _LANCZOS_C[0]
    for i in range(1, 15):
        s += _LANCZOS_C[i] / (zz + i)
    t = zz + _LANCZOS_G + 0.5
    return (zz + 0.5) * cmath.log(t) - t + _LOG_SQRT_2PI + cmath.log(s)


def gamma(z: complex) -> complex:
    """Gamma(z) by Lanczos approximation; reflection for Re(z) < 1/2."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"gamma: pole at z={z}")
    if z.real < 0.5:
        return math.pi / (cmath.sin(math.pi * z) * gamma(1.0 - z))
    return cmath.exp(log_gamma(z))


# B_{2j} / (2j) for the digamma asymptotic series.
_DIGAMMA_TAIL = (
    1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
    1.0 / 132, -691.0 / 32760, 1.0 / 12, -3617.0 / 8160,
)


def digamma(z: complex) -> complex:
    """psi(z): upward recurrence to Re(z) >= 10, then the asymptotic series."""
    z = complex(z)
    if _is_nonpositive_integer(z):
        raise PoleError(f"digamma: pole at z={z}")
    acc = 0.0 + 0.0j
    while z.real < 10.0:
        acc -= 1.0 / z
        z += 1.0
    w = 1.0 / (z * z)
    r = cmath.log(z) - 0.5 / z
    wp = w
    for b in _DIGAMMA_TAIL:
        r -= b * wp
        wp *= w
    return acc + r


@functools.lru_cache(maxsize=None)
def _bernoulli_fractions(count: int) -> tuple[Fraction, ...]:
    # Defining recurrence sum_{j<=m} C(m+1,j) B_j = 0, i.e. B_1 = -1/2.
    bs = [Fraction(1)]
    for m in range(1, count):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * bs[j]
        bs.append(-acc / (m + 1))
    return tuple(bs)


def bernoulli_numbers(count: int) -> list[float]:
    """B_0 .. B_{count-1} with B_1 = -1/2, exact recurrence downcast to float."""
    if not 1 <= count <= 40:
        raise DomainError(f"bernoulli_numbers: count must be in [1, 40], got {count}")
    return [float(b) for b in _bernoulli_fractions(count)]


@functools.lru_cache(maxsize=None)
def eulerian_numbers(k: int) -> list[int]:
    """Row k of the Eulerian triangle (exact integers).

    Row 0 is [1]; row k >= 1 has the k nonzero entries A(k, 0..k-1) from the
    two-term recurrence A(k,j) = (j+1) A(k-1,j) + (k-j) A(k-1,j-1).
    """
    if not 0 <= k <= 20:
        raise DomainError(f"eulerian_numbers: k must be in [0, 20], got {k}")
    row = [1]
    for kk in range(1, k + 1):
        prev = row
        row = []
        for j in range(kk):
            left = prev[j] if j < len(prev) else 0
            up = prev[j - 1] if j >= 1 else 0
            row.append((j + 1) * left + (kk - j) * up)
    return row


@dataclass(frozen=True)
class Constants:
    pi: float
    log2: float
    euler_gamma: float
    glaisher: float


@functools.lru_cache(maxsize=1)
def constants() -> Constants:
    """Named constants; glaisher = exp(1/12 - zeta'(-1)) from the library's own zeta."""
    from .lerch import hurwitz_zeta_ds  # deferred: lerch depends on this module

    zeta_prime_minus_one = hurwitz_zeta_ds(-1.0 + 0.0j, 1.0 + 0.0j).value.real
    glaisher = math.exp(1.0 / 12.0 - zeta_prime_minus_one)
    return Constants(pi=math.pi, log2=math.log(2.0),
                     euler_gamma=EULER_GAMMA, glaisher=glaisher)

"""Hurwitz-Lerch zeta Phi(z, s, v) = sum_{n>=0} (v+n)^(-s) z^n and relatives.

Four evaluation strategies behind one dispatcher:

  neg-int     exact rational closed form for s a nonpositive integer,
              valid for every z != 1 (the analytic continuation),
  series      direct summation for |z| <= 0.99,
  root-unity  reduction to Hurwitz zeta values when z = e^(2 pi i r/q),
  integral    the gamma-weighted integral representation for Re(s) > 0,
              Re(v) > 0, |z| <= 1.

Phi(z, s, 0) is defined by omitting the n = 0 term (the value continued
from Re(s) < 0), i.e. Phi(z, s, 0) = z * Phi(z, s, 1).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple

from .errors import ConvergenceError, DomainError, NoStrategyError, PoleError
from .numerics import (_bernoulli_fractions, digamma, eulerian_numbers, gamma,
                       principal_pow)
from .quadrature import integrate_tail, integrate_unit_singular

_EPS = 2.220446049250313e-16


class LerchArgs(NamedTuple):
    z: complex
    s: complex
    v: complex


@dataclass(frozen=True)
class EvalResult:
    value: complex
    est_error: float
    strategy: str  # neg-int | series | root-unity | integral
    work: int


@dataclass(frozen=True)
class RootOfUnity:
    q: int
    r: int
    value: complex


def recognize_root_of_unity(z: complex, max_q: int = 4096,
                            tol: float = 1e-12) -> RootOfUnity | None:
    """Match z to e^(2 pi i r/q), q <= max_q, via continued fractions.

    Returns None when |z| is off the unit circle, the angle does not
    rationalize within tol, or q < 2 (z = 1 is never recognized).
    """
    z = complex(z)
    if abs(abs(z) - 1.0) > tol:
        return None
    frac = cmath.phase(z) / (2.0 * math.pi)
    approx = Fraction(frac).limit_denominator(max_q)
    if abs(frac - float(approx)) > tol:
        return None
    q = approx.denominator
    if q < 2:
        return None
    r = approx.numerator % q
    return RootOfUnity(q=q, r=r, value=cmath.exp(2j * math.pi * r / q))


def _is_nonpositive_integer(v: complex) -> bool:
    return v.imag == 0.0 and v.real <= 0.0 and v.real.is_integer()


def _li_negative_order(k: int, z: complex) -> complex:
    """Li_{-k}(z) for integer k >= 0: rational in z with Eulerian numerators."""
    if k == 0:
        return z / (1.0 - z)
    num = 0.0 + 0.0j
    zp = z
    for a in eulerian_numbers(k):
        num += a * zp
        zp *= z
    return num / (1.0 - z) ** (k + 1)


def phi_neg_int(z: complex, k_order: int, v: complex) -> EvalResult:
    """Strategy A: Phi(z, -k_order, v) in exact closed form, any z != 1.

    Phi(z,-n,v) = v^n + sum_{k=0..n} C(n,k) v^(n-k) Li_{-k}(z); the lone
    v^n is the n = 0 series term.  With v = 0 that term is omitted and the
    value is Li_{-n}(z).
    """
    z = complex(z)
    v = complex(v)
    if z == 1:
        raise DomainError("phi_neg_int: z = 1")
    if not 0 <= k_order <= 20:
        raise DomainError(f"phi_neg_int: k_order must be in [0, 20], got {k_order}")
    n = k_order
    if v == 0:
        value = _li_negative_order(n, z)
        return EvalResult(value, 4.0 * _EPS * abs(value) * (n + 2), "neg-int", n + 1)
    absum = 0.0
    value = principal_pow(v, n)
    absum += abs(value)
    for k in range(n + 1):
        term = math.comb(n, k) * principal_pow(v, n - k) * _li_negative_order(k, z)
        value += term
        absum += abs(term)
    return EvalResult(value, 4.0 * _EPS * absum * (n + 2), "neg-int", n + 1)


_SERIES_CAP = 10 ** 6


def phi_series(z: complex, s: complex, v: complex) -> EvalResult:
    """Strategy B: direct summation for |z| <= 0.99.

    Terms are added until a rigorous geometric bound on the remaining tail
    drops below 1e-15 of the partial sum; that bound is the est_error.
    """
    z = complex(z)
    s = complex(s)
    v = complex(v)
    az = abs(z)
    if az > 0.99:
        raise DomainError(f"phi_series: |z| = {az:.4f} > 0.99")
    start = 0
    if v == 0:
        start = 1  # v-zero convention: omit the n = 0 term
    elif _is_nonpositive_integer(v):
        raise PoleError(f"phi_series: v = {v} is a nonpositive integer")
    total = 0.0 + 0.0j
    absum = 0.0
    zpow = z ** start
    n = start
    abss = abs(s)
    while n < _SERIES_CAP:
        term = zpow * (v + n) ** (-s)
        total += term
        absum += abs(term)
        # once beyond the polynomial regime, |t_{m+1}/t_m| <= q < 1 for all
        # m >= n, so the tail is below |t_n| q/(1-q)
        avn = abs(v + n)
        if n >= start + 8 and avn > 2.0:
            q = az * math.exp(abss / (avn - 1.0))
            if q < 1.0:
                bound = abs(term) * q / (1.0 - q)
                if bound <= 1e-15 * abs(total):
                    return EvalResult(total, bound + _EPS * absum, "series", n - start + 1)
        zpow *= z
        n += 1
    raise ConvergenceError(f"phi_series: {_SERIES_CAP} terms without convergence")


_EM_J = 12
_EM_COEFF = tuple(
    float(_bernoulli_fractions(2 * _EM_J + 1)[2 * j] / math.factorial(2 * j))
    for j in range(1, _EM_J + 1)
)


def hurwitz_zeta(s: complex, v: complex) -> EvalResult:
    """zeta(s, v) for s != 1, Re(v) > 0.

    Euler-Maclaurin with N = max(12, ceil|s| + 10) leading terms and J = 12
    Bernoulli corrections; at exact nonpositive integer s the Bernoulli
    polynomial closed form zeta(-k, v) = -B_{k+1}(v)/(k+1) is used instead
    (the generic path loses digits to cancellation there).
    """
    s = complex(s)
    v = complex(v)
    if s == 1:
        raise PoleError("hurwitz_zeta: pole at s = 1")
    if v.real <= 0:
        raise DomainError(f"hurwitz_zeta: Re(v) = {v.real} <= 0")
    if s.imag == 0.0 and s.real <= 0.0 and s.real.is_integer() and s.real >= -39:
        m = int(-s.real) + 1
        bern = _bernoulli_fractions(m + 1)
        value = 0.0 + 0.0j
        absum = 0.0
        vp = 1.0 + 0.0j  # v^j, built up
        coeffs = [float(bern[m - j]) * math.comb(m, j) for j in range(m + 1)]
        for j in range(m + 1):
            term = coeffs[j] * vp
            value += term
            absum += abs(term)
            vp *= v
        value /= -m
        return EvalResult(value, _EPS * absum / m + _EPS * abs(value), "root-unity", m + 1)
    n_lead = max(12, math.ceil(abs(s)) + 10)
    total = 0.0 + 0.0j
    absum = 0.0
    for n in range(n_lead):
        term = (v + n) ** (-s)
        total += term
        absum += abs(term)
    w = v + n_lead
    closer = w ** (1.0 - s) / (s - 1.0) + 0.5 * w ** (-s)
    total += closer
    absum += abs(closer)
    poch = s
    wpow = w ** (-s - 1.0)
    w2 = w * w
    last = 0.0
    for j, coeff in enumerate(_EM_COEFF, start=1):
        term = coeff * poch * wpow
        total += term
        last = abs(term)
        absum += last
        poch *= (s + (2 * j - 1)) * (s + 2 * j)
        wpow /= w2
    return EvalResult(total, last + _EPS * absum, "root-unity", n_lead + _EM_J)


_DS_RHO = 0.25
_DS_M = 32
_DS_NODES = tuple(
    (cmath.exp(2j * math.pi * k / _DS_M), cmath.exp(-2j * math.pi * k / _DS_M))
    for k in range(_DS_M)
)


def _contour_derivative(f: Callable[[complex], EvalResult], s0: complex) -> EvalResult:
    """d f / d s at s0 by the M-point trapezoid Cauchy formula on |s-s0| = rho."""
    values = []
    est_in = 0.0
    work = 0
    for fwd, _ in _DS_NODES:
        res = f(s0 + _DS_RHO * fwd)
        values.append(res.value)
        est_in += res.est_error
        work += res.work
    d_full = sum(val * bwd for val, (_, bwd) in zip(values, _DS_NODES)) / (_DS_M * _DS_RHO)
    d_half = sum(values[k] * _DS_NODES[k][1] for k in range(0, _DS_M, 2)) / ((_DS_M // 2) * _DS_RHO)
    est = abs(d_full - d_half) + est_in / (_DS_M * _DS_RHO)
    return EvalResult(d_full, est, "root-unity", work)


def hurwitz_zeta_ds(s0: complex, v: complex) -> EvalResult:
    """d zeta/d s at s0 via the circular-contour derivative (rho 1/4, M 32)."""
    s0 = complex(s0)
    v = complex(v)
    if abs(s0 - 1.0) <= _DS_RHO + 1e-9:
        raise DomainError(f"hurwitz_zeta_ds: circle |s - {s0}| = {_DS_RHO} touches the pole s = 1")
    return _contour_derivative(lambda s: hurwitz_zeta(s, v), s0)


def phi_root_unity(zeta_q: RootOfUnity, s: complex, v: complex) -> EvalResult:
    """Strategy C: Phi at z = e^(2 pi i r/q) as q^(-s) sum_r z^r zeta(s, (v+r)/q).

    At s = 1 exactly the zeta poles cancel (sum_r z^r = 0) and the digamma
    form Phi(z,1,v) = -(1/q) sum_r z^r psi((v+r)/q) is used.
    """
    s = complex(s)
    v = complex(v)
    q = zeta_q.q
    if q < 2:
        raise DomainError("phi_root_unity: q must be >= 2 (z = 1 unsupported)")
    if v.real <= 0:
        raise DomainError(f"phi_root_unity: Re(v) = {v.real} <= 0 (pre-shift v first)")
    z = zeta_q.value
    if s == 1:
        acc = 0.0 + 0.0j
        absum = 0.0
        zp = 1.0 + 0.0j
        for r in range(q):
            term = zp * digamma((v + r) / q)
            acc += term
            absum += abs(term)
            zp *= z
        value = -acc / q
        return EvalResult(value, _EPS * absum / q * 4.0, "root-unity", q)
    acc = 0.0 + 0.0j
    absum = 0.0
    est_in = 0.0
    work = 0
    zp = 1.0 + 0.0j
    for r in range(q):
        inner = hurwitz_zeta(s, (v + r) / q)
        acc += zp * inner.value
        absum += abs(inner.value)
        est_in += inner.est_error
        work += inner.work
        zp *= z
    scale = principal_pow(complex(q), -s)
    value = scale * acc
    est = abs(scale) * (est_in + _EPS * absum)
    return EvalResult(value, est, "root-unity", work)


def _integrand_pole_distance(z: complex) -> float:
    """min_t |1 - z e^(-t)| on t >= 0: distance from 1 to the segment [0, z]."""
    zz = abs(z) ** 2
    if zz == 0:
        return 1.0
    tau = z.real / zz  # projection of 1 onto the ray through z
    if tau <= 0.0:
        return 1.0
    if tau >= 1.0:
        return abs(1.0 - z)
    return abs(1.0 - tau * z)


def phi_integral(z: complex, s: complex, v: complex) -> EvalResult:
    """Strategy D: (1/Gamma(s)) int_0^inf t^(s-1) e^(-v t)/(1 - z e^(-t)) dt.

    Valid for Re(v) > 0, Re(s) > 0, |z| <= 1, z != 1, with the integration
    path kept at least 1e-6 away from the integrand pole at t = -log z.
    """
    z = complex(z)
    s = complex(s)
    v = complex(v)
    if z == 1:
        raise DomainError("phi_integral: z = 1")
    if v.real <= 0:
        raise DomainError(f"phi_integral: Re(v) = {v.real} <= 0")
    if s.real <= 0:
        raise DomainError(f"phi_integral: Re(s) = {s.real} <= 0")
    if abs(z) > 1.0 + 1e-12:
        raise DomainError(f"phi_integral: |z| = {abs(z):.6f} > 1")
    dist = _integrand_pole_distance(z)
    if dist < 1e-6:
        raise DomainError(f"phi_integral: path within {dist:.2e} of the integrand pole")
    sm1 = s - 1.0

    def f_unit(x: float, _xc: float) -> complex:
        return cmath.exp(sm1 * math.log(x)) * cmath.exp(-v * x) / (1.0 - z * math.exp(-x))

    def f_tail(t: float) -> complex:
        return cmath.exp(sm1 * math.log(t)) * cmath.exp(-v * t) / (1.0 - z * math.exp(-t))

    unit = integrate_unit_singular(f_unit, alpha=s.real)
    tail = integrate_tail(f_tail, decay=v.real)
    g = gamma(s)
    value = (unit.value + tail.value) / g
    est = (unit.est_error + tail.est_error) / abs(g) + _EPS * abs(value)
    return EvalResult(value, est, "integral", unit.nodes_used + tail.nodes_used)


def _shift_v(z: complex, s: complex, v: complex,
             inner: Callable[[complex], EvalResult]) -> EvalResult:
    """Apply Phi(z,s,v) = z^M Phi(z,s,v+M) + sum_{m<M} z^m (v+m)^(-s) so that
    Re(v + M) > 0, then evaluate via `inner`."""
    if v.real > 0:
        return inner(v)
    m_shift = math.floor(-v.real) + 1
    head = 0.0 + 0.0j
    absum = 0.0
    zp = 1.0 + 0.0j
    for m in range(m_shift):
        vm = v + m
        if vm == 0 and s != 0 and s.real >= 0:
            raise PoleError(f"phi: term (v+{m}) = 0 with Re(s) >= 0 in the shift sum")
        term = zp * principal_pow(vm, -s)
        head += term
        absum += abs(term)
        zp *= z
    res = inner(v + m_shift)
    value = head + zp * res.value
    est = abs(zp) * res.est_error + _EPS * (absum + abs(zp) * abs(res.value))
    return EvalResult(value, est, res.strategy, res.work + m_shift)


def phi(z: complex, s: complex, v: complex) -> EvalResult:
    """Dispatcher: first applicable of neg-int, series, root-unity, integral.

    Raises NoStrategyError listing which guard failed for each strategy.
    """
    z = complex(z)
    s = complex(s)
    v = complex(v)
    if z == 1:
        raise DomainError("phi: z = 1 unsupported (use hurwitz_zeta)")
    if v == 0:
        inner = phi(z, s, 1.0 + 0.0j)
        return EvalResult(z * inner.value, abs(z) * inner.est_error,
                          inner.strategy, inner.work)
    reasons: dict[str, str] = {}

    if s.imag == 0.0 and s.real <= 0.0 and s.real.is_integer() and s.real >= -20:
        return phi_neg_int(z, int(-s.real), v)
    reasons["neg-int"] = "s is not a nonpositive integer in [-20, 0]"

    if abs(z) <= 0.99:
        return phi_series(z, s, v)
    reasons["series"] = f"|z| = {abs(z):.4f} > 0.99"

    root = recognize_root_of_unity(z)
    if root is not None:
        return _shift_v(z, s, v, lambda vv: phi_root_unity(root, s, vv))
    reasons["root-unity"] = "z not matched to e^(2 pi i r/q) with q <= 4096"

    if abs(z) > 1.0 + 1e-12:
        reasons["integral"] = f"|z| = {abs(z):.4f} > 1"
    elif s.real <= 0:
        reasons["integral"] = f"Re(s) = {s.real} <= 0"
    elif _integrand_pole_distance(z) < 1e-6:
        reasons["integral"] = "integration path passes within 1e-6 of the pole at t = -log z"
    else:
        return _shift_v(z, s, v, lambda vv: phi_integral(z, s, vv))

    raise NoStrategyError(reasons)


def phi_ds(z: complex, s0: complex, v: complex) -> EvalResult:
    """d Phi/d s at s0 by the circular-contour derivative applied to phi.

    The circle |s - s0| = 1/4 must lie inside the dispatcher's valid
    s-region for (z, v); for unit-circle z every contour point is
    additionally kept away from s = 1 where evaluation is ill-conditioned.
    """
    z = complex(z)
    s0 = complex(s0)
    v = complex(v)
    if abs(z) > 0.99:
        for fwd, _ in _DS_NODES:
            sk = s0 + _DS_RHO * fwd
            if abs(sk - 1.0) < 0.01:
                raise DomainError(
                    f"phi_ds: contour point {sk} too close to s = 1 for |z| ~ 1")
    return _contour_derivative(lambda s: phi(z, s, v), s0)


def polylog(s: complex, z: complex) -> EvalResult:
    """Li_s(z) = z * Phi(z, s, 1)."""
    z = complex(z)
    if z == 0:
        return EvalResult(0.0 + 0.0j, 0.0, "series", 1)
    inner = phi(z, s, 1.0 + 0.0j)
    return EvalResult(z * inner.value, abs(z) * inner.est_error,
                      inner.strategy, inner.work)


def polylog_ds(s0: complex, z: complex) -> EvalResult:
    """d Li_s(z)/d s at s0, i.e. z * dPhi/ds(z, s0, 1)."""
    z = complex(z)
    if z == 0:
        return EvalResult(0.0 + 0.0j, 0.0, "series", 1)
    inner = phi_ds(z, s0, 1.0 + 0.0j)
    return EvalResult(z * inner.value, abs(z) * inner.est_error,
                      inner.strategy, inner.work)

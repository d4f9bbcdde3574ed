"""Quadrature for the Lerch integral representation.

Two rules: a doubly-exponential (tanh-sinh) transform on (0, 1) robust to
algebraic endpoint singularities, and a truncated adaptive Gauss rule on
[1, inf) for exponentially decaying tails.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable

import numpy.polynomial.legendre

from .errors import ConvergenceError, DomainError

NODE_CAP = 4096
TARGET_REL = 1e-13

# Unit-interval integrands receive (x, 1-x) with both arguments computed
# without cancellation, so singular factors at either endpoint can be
# evaluated accurately: f(x, xc) with xc standing for 1 - x.
UnitIntegrand = Callable[[float, float], complex]
TailIntegrand = Callable[[float], complex]


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    est_error: float
    nodes_used: int


_PI_HALF = math.pi / 2.0
_T_MAX = 4.8  # exp(-pi*sinh(4.8)) ~ 1e-83: deep enough for alpha >= 0.3 tails


@functools.lru_cache(maxsize=16)
def _ts_level(h: float) -> tuple[tuple[float, float, float], ...]:
    """(x, 1-x, weight) tanh-sinh nodes at mesh h, both endpoint gaps exact."""
    nodes = []
    k = 0
    while k * h <= _T_MAX:
        t = k * h
        u = _PI_HALF * math.sinh(t)
        ep = math.exp(-2.0 * u)
        x = 1.0 / (1.0 + ep)
        xc = ep / (1.0 + ep)
        w = _PI_HALF * math.cosh(t) * (2.0 * ep / ((1.0 + ep) * (1.0 + ep)))
        nodes.append((x, xc, w))
        if k > 0:
            nodes.append((xc, x, w))
        k += 1
    return tuple(nodes)


def integrate_unit_singular(f: UnitIntegrand, alpha: float) -> QuadratureResult:
    """Integrate f over (0, 1) where |f| = O(x^(alpha-1)) at 0, alpha > 0.

    Doubly-exponential transform clustering nodes at both endpoints;
    refines the mesh until successive levels agree to TARGET_REL or the
    node cap is reached.
    """
    if alpha <= 0:
        raise DomainError(f"integrate_unit_singular: alpha must be > 0, got {alpha}")
    h = 0.5
    prev = None
    total = 0.0 + 0.0j
    est = math.inf
    nodes_used = 0
    while nodes_used < NODE_CAP:
        s = 0.0 + 0.0j
        level = _ts_level(h)
        for x, xc, w in level:
            s += w * f(x, xc)
        total = s * h
        nodes_used += len(level)
        if prev is not None:
            est = abs(total - prev)
            if est <= TARGET_REL * max(1.0, abs(total)):
                return QuadratureResult(total, est, nodes_used)
        prev = total
        h *= 0.5
    if est > 1e-8 * max(abs(total), 1e-300):
        raise ConvergenceError(
            f"integrate_unit_singular: node cap {NODE_CAP} reached, est_error {est:.3e}")
    return QuadratureResult(total, est, nodes_used)


_GL_ORDER = 15
_gl_x, _gl_w = numpy.polynomial.legendre.leggauss(_GL_ORDER)
_GL_NODES = tuple((float(x), float(w)) for x, w in zip(_gl_x, _gl_w))


def _gl15(f: TailIntegrand, a: float, b: float) -> complex:
    c = 0.5 * (a + b)
    half = 0.5 * (b - a)
    s = 0.0 + 0.0j
    for x, w in _GL_NODES:
        s += w * f(c + half * x)
    return s * half


def integrate_tail(f: TailIntegrand, decay: float) -> QuadratureResult:
    """Integrate f over [1, inf) assuming |f(t)| <= M exp(-decay t).

    Truncates at T = 1 + (40 + ln max(1, M)) / decay so the discarded tail
    is below ~1e-16 of scale, then bisects [1, T] adaptively with a fixed
    15-point Gauss kernel.  est_error includes the truncation bound.
    """
    if decay <= 0:
        raise DomainError(f"integrate_tail: decay must be > 0, got {decay}")
    m_bound = 1.0
    for t in (1.0, 2.0, 5.0, 10.0):
        m_bound = max(m_bound, abs(f(t)) * math.exp(min(decay * t, 700.0)))
    big_t = 1.0 + (40.0 + math.log(m_bound)) / decay
    trunc = m_bound * math.exp(-decay * big_t) / decay

    scale = max(1.0, abs(_gl15(f, 1.0, min(big_t, 3.0))))
    total = 0.0 + 0.0j
    est = trunc
    nodes_used = 0
    stack = [(1.0, big_t)]
    while stack:
        a, b = stack.pop()
        whole = _gl15(f, a, b)
        mid = 0.5 * (a + b)
        left = _gl15(f, a, mid)
        right = _gl15(f, mid, b)
        nodes_used += 3 * _GL_ORDER
        err = abs(whole - (left + right))
        if err <= TARGET_REL * scale * (b - a) / (big_t - 1.0) or nodes_used >= NODE_CAP:
            total += left + right
            est += err
        else:
            stack.append((a, mid))
            stack.append((mid, b))
    if nodes_used >= NODE_CAP and est > 1e-8 * max(abs(total), 1e-300):
        raise ConvergenceError(
            f"integrate_tail: node cap {NODE_CAP} reached, est_error {est:.3e}")
    return QuadratureResult(total, est, nodes_used)

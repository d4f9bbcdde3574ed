"""Lerch evaluator tests: strategy contracts, cross-checks, dispatcher rules.

Brute-force oracles are implemented here, independent of the library's
evaluation paths; frozen constants were produced by a high-precision
run before the build.
"""
import cmath
import math
import random
from fractions import Fraction

import pytest

from lerchkit import (DomainError, NoStrategyError, PoleError, digamma,
                      hurwitz_zeta, hurwitz_zeta_ds, log_gamma, phi, phi_ds,
                      phi_integral, phi_neg_int, phi_root_unity, phi_series,
                      polylog, polylog_ds, recognize_root_of_unity)

PHI_HALF_2_1 = 1.1644810529300250118        # pi^2/6 - ln^2 2
PHI_09I = complex(0.2893492537587247384, 0.1078067039095711018)
PHI_I_32_2 = complex(0.2705203248586681132, 0.1354973465387979596)
PHI_I_1_11 = complex(0.7025926584810956113, 0.3270825445052135839)
PHI_M099 = 0.6950854936731323509             # ln(1.99)/0.99
PHI_W3 = complex(-0.1354166666666666667, -0.1744078938176994497)
ZETA_PRIME_MINUS_1 = -0.1654211437004509292
HALF_LOG_2PI = 0.9189385332046727418
DPHI_HALF_AT_0 = -1.0156678457368767844      # -sum_{n>=1} ln(n+1)/2^n
LOGGAMMA_SUM_AT_6 = -1.6278588363903810635
LI2_HALF = 0.5822405264650125059
LI_DS_SUM = -0.3677103030988720953           # Li'_-1(i) + Li'_-1(-i)
GLAISHER_REF = 1.2824271291006226369


def series_oracle(z, s, v, cap=100000, tol=1e-18):
    """Plain partial summation of the defining series, |z| < 1."""
    total = 0j
    zp = 1 + 0j
    start = 0
    if v == 0:
        start, zp = 1, z
    for n in range(start, cap):
        term = zp * (v + n) ** (-s)
        total += term
        if n > 20 and abs(term) < tol * abs(total):
            break
        zp *= z
    return total


def em_oracle(s, v, n_lead=50, j_corr=10):
    """Independent Euler-Maclaurin with doubled leading terms."""
    bern = [Fraction(1)]
    for m in range(1, 2 * j_corr + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * bern[j]
        bern.append(-acc / (m + 1))
    total = sum((v + n) ** (-s) for n in range(n_lead))
    w = v + n_lead
    total += w ** (1 - s) / (s - 1) + 0.5 * w ** (-s)
    poch = s
    wpow = w ** (-s - 1)
    for j in range(1, j_corr + 1):
        total += float(bern[2 * j]) / math.factorial(2 * j) * poch * wpow
        poch *= (s + 2 * j - 1) * (s + 2 * j)
        wpow /= w * w
    return total


class TestNegIntStrategy:
    def test_geometric_case(self):
        res = phi_neg_int(1 / 3, 0, 7.0)
        assert res.value == pytest.approx(1.5, rel=1e-14)
        assert res.strategy == "neg-int"

    def test_order_one(self):
        # brute force: sum (n + 1/2) (1/3)^n = 3/2
        oracle = series_oracle(1 / 3 + 0j, -1.0, 0.5 + 0j)
        res = phi_neg_int(1 / 3, 1, 0.5)
        assert res.value == pytest.approx(oracle, rel=1e-13)
        assert res.value == pytest.approx(1.5, rel=1e-13)

    def test_outside_disk_continuation(self):
        # series diverges at z=2; value is the rational continuation
        res = phi_neg_int(2.0, 1, 0.0)
        assert res.value == pytest.approx(2.0, rel=1e-13)

    def test_z_one_rejected(self):
        with pytest.raises(DomainError):
            phi_neg_int(1.0, 2, 0.5)

    def test_matches_series_inside_disk(self):
        rng = random.Random(7)
        for _ in range(50):
            z = cmath.rect(rng.uniform(0.05, 0.8), rng.uniform(-3, 3))
            v = complex(rng.uniform(-3, 3), rng.uniform(-2, 2))
            k = rng.randint(0, 6)
            oracle = series_oracle(z, complex(-k), v)
            got = phi_neg_int(z, k, v).value
            assert abs(got - oracle) <= 1e-11 * max(1.0, abs(oracle))


class TestSeriesStrategy:
    def test_z_zero(self):
        assert phi_series(0.0, 2.0, 5.0).value == pytest.approx(0.04, rel=1e-15)

    def test_dilogarithm_value(self):
        res = phi_series(0.5, 2.0, 1.0)
        assert res.value == pytest.approx(PHI_HALF_2_1, rel=1e-14)
        assert res.est_error <= 1e-13

    def test_complex_all_around(self):
        oracle = series_oracle(0.9j, 1 + 1j, 2 - 1j)
        res = phi_series(0.9j, 1 + 1j, 2 - 1j)
        assert abs(res.value - oracle) <= 1e-12 * abs(oracle)
        assert res.value == pytest.approx(PHI_09I, rel=1e-13)

    def test_radius_guard(self):
        with pytest.raises(DomainError):
            phi_series(0.995, 2.0, 1.0)

    def test_nonpositive_integer_v(self):
        with pytest.raises(PoleError):
            phi_series(0.5, 2.5, -3.0)

    def test_estimate_bounds_error(self):
        for (z, s, v) in [(0.99 + 0j, 3 + 0j, 1 + 0j), (0.7j, -2.5 + 1j, 0.3 + 0j),
                          (-0.9 + 0.3j, 1 + 0j, 2 + 2j)]:
            res = phi_series(z, s, v)
            oracle = series_oracle(z, s, v)
            assert abs(res.value - oracle) <= max(res.est_error, 1e-14 * abs(oracle))


class TestHurwitzZeta:
    def test_basel(self):
        assert hurwitz_zeta(2.0, 1.0).value == pytest.approx(math.pi ** 2 / 6, rel=1e-14)

    def test_shift_identity(self):
        s, v = 2.5 + 1j, 1.3
        lhs = hurwitz_zeta(s, v).value - hurwitz_zeta(s, v + 1).value
        assert abs(lhs - v ** -s) <= 1e-12 * abs(v ** -s)

    def test_minus_one(self):
        res = hurwitz_zeta(-1.0, 1.0)
        assert res.value == pytest.approx(-1 / 12, rel=1e-13)
        assert res.value == pytest.approx(em_oracle(-1.0 + 1e-30j, 1.0 + 0j), rel=1e-10)

    def test_against_doubled_parameter_oracle(self):
        rng = random.Random(11)
        for _ in range(40):
            s = complex(rng.uniform(-5, 8), rng.uniform(-8, 8))
            v = complex(rng.uniform(0.2, 4), rng.uniform(-1, 1))
            if abs(s - 1) < 0.1 or (s.imag == 0 and s.real.is_integer()):
                continue
            got = hurwitz_zeta(s, v)
            oracle = em_oracle(s, v)
            assert abs(got.value - oracle) <= max(1e-11 * abs(oracle), 5e-14), (s, v)

    def test_pole_and_domain(self):
        with pytest.raises(PoleError):
            hurwitz_zeta(1.0, 2.0)
        with pytest.raises(DomainError):
            hurwitz_zeta(2.0, -0.5)

    def test_multiplication_theorem(self):
        # q^-s sum_r zeta(s, (v+r)/q) = zeta(s, v)
        rng = random.Random(12)
        for q in (2, 3, 4):
            for _ in range(10):
                s = complex(rng.uniform(-3, 5), rng.uniform(-5, 5))
                v = complex(rng.uniform(0.3, 3), rng.uniform(-0.5, 0.5))
                if abs(s - 1) < 0.2:
                    continue
                total = sum(hurwitz_zeta(s, (v + r) / q).value for r in range(q))
                lhs = q ** (-s) * total
                rhs = hurwitz_zeta(s, v).value
                assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(rhs))


class TestHurwitzZetaDs:
    def test_at_zero(self):
        res = hurwitz_zeta_ds(0.0, 1.0)
        assert res.value.real == pytest.approx(-HALF_LOG_2PI, abs=1e-10)
        assert abs(res.value.imag) < 1e-12

    def test_glaisher_link(self):
        res = hurwitz_zeta_ds(-1.0, 1.0)
        expected = 1 / 12 - math.log(GLAISHER_REF)
        assert res.value.real == pytest.approx(expected, abs=1e-13)
        assert res.value.real == pytest.approx(ZETA_PRIME_MINUS_1, abs=1e-13)

    def test_against_central_difference(self):
        s0, v = 2.0, 1.5
        h = 1e-4
        fd = (hurwitz_zeta(s0 + h, v).value - hurwitz_zeta(s0 - h, v).value) / (2 * h)
        assert abs(hurwitz_zeta_ds(s0, v).value - fd) <= 1e-6

    def test_log_gamma_link(self):
        # zeta'(0, v) = log Gamma(v) - (1/2) log(2 pi)
        for v in (0.5, 1.0, 1.5, 2 + 1j):
            lhs = hurwitz_zeta_ds(0.0, v).value
            rhs = log_gamma(v) - HALF_LOG_2PI
            assert abs(lhs - rhs) <= 1e-9, v

    def test_circle_near_pole_rejected(self):
        with pytest.raises(DomainError):
            hurwitz_zeta_ds(1.1, 1.0)


class TestRootUnityStrategy:
    def test_alternating_basel(self):
        root = recognize_root_of_unity(-1.0 + 0j)
        res = phi_root_unity(root, 2.0, 1.0)
        assert res.value == pytest.approx(math.pi ** 2 / 12, rel=1e-13)

    def test_s_one_digamma_path(self):
        root = recognize_root_of_unity(-1.0 + 0j)
        # sum (-1)^n/(n+1) = ln 2
        res = phi_root_unity(root, 1.0, 1.0)
        assert res.value == pytest.approx(math.log(2), rel=1e-13)

    def test_s_one_matches_integral(self):
        root = recognize_root_of_unity(1j)
        lhs = phi_root_unity(root, 1.0, 1.1)
        rhs = phi_integral(1j, 1.0, 1.1)
        assert abs(lhs.value - rhs.value) <= 1e-10 * abs(lhs.value)
        assert lhs.value == pytest.approx(PHI_I_1_11, rel=1e-12)

    def test_matches_neg_int_strategy(self):
        root = recognize_root_of_unity(-1.0 + 0j)
        lhs = phi_root_unity(root, -3.0, 2.0)
        rhs = phi_neg_int(-1.0, 3, 2.0)
        assert abs(lhs.value - rhs.value) <= 1e-12 * max(1.0, abs(rhs.value))

    def test_domain_guards(self):
        root = recognize_root_of_unity(1j)
        with pytest.raises(DomainError):
            phi_root_unity(root, 2.0, -1.5)


class TestRootRecognition:
    def test_simple_roots(self):
        for q, r in [(2, 1), (3, 1), (7, 5), (12, 11), (4096, 1)]:
            z = cmath.exp(2j * math.pi * r / q)
            root = recognize_root_of_unity(z)
            assert root is not None and (root.q, root.r) == (q, r)
            assert abs(root.value ** root.q - 1) <= 1e-13 * root.q

    def test_one_never_recognized(self):
        assert recognize_root_of_unity(1.0 + 0j) is None

    def test_off_circle(self):
        assert recognize_root_of_unity(0.5 + 0.5j) is None

    def test_irrational_angle(self):
        assert recognize_root_of_unity(cmath.exp(3j)) is None


class TestIntegralStrategy:
    def test_matches_series(self):
        lhs = phi_integral(0.5, 2.0, 1.0)
        rhs = phi_series(0.5, 2.0, 1.0)
        assert abs(lhs.value - rhs.value) <= 1e-11 * abs(rhs.value)

    def test_matches_root_unity(self):
        lhs = phi_integral(1j, 1.5, 2.0)
        assert abs(lhs.value - PHI_I_32_2) <= 1e-10 * abs(PHI_I_32_2)

    def test_near_minus_one(self):
        # Phi(-0.99, 1, 1) = -ln(1 - z)/z at z = -0.99
        res = phi_integral(-0.99, 1.0, 1.0)
        assert res.value == pytest.approx(PHI_M099, rel=1e-9)

    def test_guards(self):
        with pytest.raises(DomainError):
            phi_integral(0.5, -1.5, 1.0)   # Re(s) <= 0
        with pytest.raises(DomainError):
            phi_integral(0.5, 2.0, -1.0)   # Re(v) <= 0
        with pytest.raises(DomainError):
            phi_integral(1.0 + 1e-9, 2.0, 1.0)  # within 1e-6 of the pole


class TestDispatcher:
    def test_paper_recurrence_point(self):
        z, s, v = 0.7j, 2 - 1j, 0.3 + 0.2j
        lhs = phi(z, s, v).value
        rhs = z * phi(z, s, v + 1).value + v ** -s
        assert abs(lhs - rhs) <= 1e-12 * (abs(lhs) + abs(v ** -s))

    def test_z_zero(self):
        assert phi(0.0, 3 + 2j, 2.0).value == pytest.approx(2.0 ** -(3 + 2j), rel=1e-14)

    def test_routing_neg_int_on_unit_circle(self):
        z = cmath.exp(2j * math.pi / 3)
        res = phi(z, -2.0, 0.25)
        assert res.strategy == "neg-int"
        root = recognize_root_of_unity(z)
        other = phi_root_unity(root, -2.0, 0.25)
        assert abs(res.value - other.value) <= 1e-12 * max(1.0, abs(res.value))
        assert res.value == pytest.approx(PHI_W3, rel=1e-12)

    def test_routing_series(self):
        assert phi(0.5, 2.5 + 1j, 1.0).strategy == "series"

    def test_routing_root_unity(self):
        assert phi(1j, 2.5 + 1j, 1.0).strategy == "root-unity"

    def test_routing_integral(self):
        assert phi(cmath.exp(3j), 1.5, 1.0).strategy == "integral"

    def test_z_one_rejected(self):
        with pytest.raises(DomainError):
            phi(1.0, 2.0, 1.0)

    def test_no_strategy_lists_reasons(self):
        with pytest.raises(NoStrategyError) as err:
            phi(cmath.exp(3j), -1.5, 1.0)  # unit circle, irrational, Re s < 0
        reasons = err.value.reasons
        assert set(reasons) == {"neg-int", "series", "root-unity", "integral"}

    def test_v_zero_convention(self):
        for (z, s) in [(0.5 + 0j, 2.5 + 1j), (1j, 2.0 + 0j), (-0.3 + 0.4j, -1.5 + 0j)]:
            direct = phi(z, s, 0.0).value
            shifted = z * phi(z, s, 1.0).value
            assert direct == shifted

    def test_shift_pole(self):
        with pytest.raises(PoleError):
            phi(1j, 2.5, -3.0)  # shift sum hits (v + 3) = 0 with Re(s) > 0

    def test_negative_v_shift_consistency(self):
        # Re(v) < 0 handled by the forward recurrence on circle strategies
        z = 1j
        v = -1.3 + 0.4j
        s = 2.5 + 0.5j
        lhs = phi(z, s, v).value
        rhs = z ** 2 * phi(z, s, v + 2).value + v ** -s + z * (v + 1) ** -s
        assert abs(lhs - rhs) <= 1e-12 * max(abs(lhs), 1.0)


class TestPhiDs:
    def test_frozen_series_derivative(self):
        res = phi_ds(0.5, 0.0, 1.0)
        assert res.value.real == pytest.approx(DPHI_HALF_AT_0, abs=1e-11)
        assert abs(res.value.imag) <= 1e-12

    def test_loggamma_paper_point(self):
        got = phi_ds(1j, 0.0, 6.0).value + phi_ds(-1j, 0.0, 6.0).value
        assert got.real == pytest.approx(LOGGAMMA_SUM_AT_6, abs=1e-10)
        expected = 2 * cmath.log(2 * cmath.exp(log_gamma(1.5)) / (4 * cmath.exp(log_gamma(1.0))))
        assert abs(got - expected) <= 1e-10

    def test_against_central_difference(self):
        h = 1e-4
        fd = (phi(-1.0, 2 + h, 1.0).value - phi(-1.0, 2 - h, 1.0).value) / (2 * h)
        assert abs(phi_ds(-1.0, 2.0, 1.0).value - fd) <= 1e-6

    def test_circle_guard_near_s_one_on_circle_z(self):
        with pytest.raises(DomainError):
            phi_ds(1j, 1.01, 2.0)


class TestPolylog:
    def test_rational_value(self):
        assert polylog(-1.0, 0.5).value == pytest.approx(2.0, rel=1e-14)

    def test_dilog_half(self):
        assert polylog(2.0, 0.5).value == pytest.approx(LI2_HALF, rel=1e-13)

    def test_at_zero(self):
        assert polylog(2.5, 0.0).value == 0

    def test_derivative_pair_for_glaisher(self):
        got = polylog_ds(-1.0, 1j).value + polylog_ds(-1.0, -1j).value
        assert got.real == pytest.approx(LI_DS_SUM, abs=1e-10)
        assert abs(got.imag) <= 1e-10


class TestCrossStrategyAndProperties:
    def test_recurrence_across_strategies(self):
        rng = random.Random(21)
        checked = 0
        while checked < 200:
            mode = rng.randrange(3)
            if mode == 0:
                z = cmath.rect(rng.uniform(0.05, 0.95), rng.uniform(-3, 3))
                s = complex(rng.uniform(-4, 4), rng.uniform(-3, 3))
            elif mode == 1:
                z = cmath.exp(2j * math.pi * rng.randint(1, 11) / 12)
                s = complex(rng.uniform(-4, 4), rng.uniform(-3, 3))
                if z == 1:
                    continue
            else:
                z = cmath.exp(1j * rng.uniform(0.3, 6.0))
                s = complex(rng.uniform(0.5, 4), rng.uniform(-2, 2))
            v = complex(rng.uniform(0.2, 3), rng.uniform(-1, 1))
            try:
                f_v = phi(z, s, v).value
                f_v1 = phi(z, s, v + 1).value
            except NoStrategyError:
                continue
            head = v ** -s
            resid = f_v - z * f_v1 - head
            assert abs(resid) <= 1e-10 * (abs(f_v) + abs(head)) + 1e-13, (z, s, v)
            checked += 1

    def test_conjugation_symmetry(self):
        rng = random.Random(22)
        for _ in range(60):
            z = cmath.rect(rng.uniform(0.1, 0.9), rng.uniform(-3, 3))
            s = complex(rng.uniform(-3, 3), rng.uniform(-2, 2))
            v = complex(rng.uniform(0.3, 3), rng.uniform(-1, 1))
            a = phi(z.conjugate(), s.conjugate(), v.conjugate()).value
            b = phi(z, s, v).value.conjugate()
            assert abs(a - b) <= 1e-12 * max(1.0, abs(b))

    def test_series_integral_overlap(self):
        rng = random.Random(23)
        for _ in range(30):
            z = cmath.rect(rng.uniform(0.2, 0.9), rng.uniform(-3, 3))
            s = complex(rng.uniform(0.3, 4), rng.uniform(-2, 2))
            v = complex(rng.uniform(0.3, 3), rng.uniform(-1, 1))
            a = phi_series(z, s, v).value
            b = phi_integral(z, s, v).value
            assert abs(a - b) <= 1e-9 * max(abs(a), 1e-3), (z, s, v)

    def test_root_unity_integral_overlap(self):
        rng = random.Random(24)
        for _ in range(20):
            q = rng.randint(2, 24)
            r = rng.choice([c for c in range(1, q) if math.gcd(c, q) == 1])
            z = cmath.exp(2j * math.pi * r / q)
            s = complex(rng.uniform(0.3, 4), rng.uniform(-2, 2))
            v = complex(rng.uniform(0.3, 3), 0)
            root = recognize_root_of_unity(z)
            a = phi_root_unity(root, s, v).value
            b = phi_integral(z, s, v).value
            assert abs(a - b) <= 1e-9 * max(abs(a), 1e-3), (q, r, s, v)

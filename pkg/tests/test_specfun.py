"""Special-function accuracy against independent oracles.

Oracles are computed inside the tests: recurrence products from
Gamma(1/2), log-factorial sums, direct series with tail bounds, and the
theta product formula.  They never reuse the implementation path they
check.
"""

import math
import random

import numpy as np
import pytest

from hyptrig.errors import DomainError
from hyptrig.specfun import (AccuracySpec, gamma, log_gamma, hurwitz_zeta,
                             riemann_zeta, polygamma, dirichlet_beta,
                             dirichlet_eta, bessel_j, theta1_prime0)

SQRT_PI = math.sqrt(math.pi)


class TestGamma:
    def test_gamma_one(self):
        assert gamma(1.0).value == pytest.approx(1.0, rel=1e-14)

    def test_gamma_half(self):
        # forced by the reflection formula: Gamma(1/2)^2 = pi
        assert gamma(0.5).value == pytest.approx(SQRT_PI, rel=1e-14)

    def test_gamma_recurrence_oracle(self):
        # Gamma(7.5) from Gamma(0.5) via Gamma(x+1) = x Gamma(x)
        expected = SQRT_PI
        for k in range(7):
            expected *= 0.5 + k
        assert gamma(7.5).value == pytest.approx(expected, rel=1e-13)

    def test_accuracy_claim_along_axis(self):
        # recurrence oracle at integer+half points through x = 49.5
        expected = SQRT_PI
        for k in range(49):
            expected *= 0.5 + k
            x = 1.5 + k
            got = gamma(x).value
            oracle = expected
            assert abs(got - oracle) <= 1e-12 * oracle
        assert gamma(49.5).est_rel_error <= 1e-12

    def test_reflection_property(self):
        rng = random.Random(12345)
        for _ in range(50):
            z = rng.uniform(0.05, 0.95)
            # Gamma(1-z) via recurrence from Gamma(2-z) keeps x > 0
            g1mz = gamma(2.0 - z).value / (1.0 - z)
            lhs = gamma(z).value * g1mz * math.sin(math.pi * z) / math.pi
            assert abs(lhs - 1.0) <= 1e-11

    def test_duplication_property(self):
        # Gamma(2n+1) = 2^(2n)/sqrt(pi) Gamma(n+1/2) Gamma(n+1)
        for n in range(1, 11):
            lhs = gamma(2.0 * n + 1.0).value
            rhs = (4.0 ** n / SQRT_PI * gamma(n + 0.5).value
                   * gamma(float(n + 1)).value)
            assert abs(lhs - rhs) <= 1e-11 * abs(rhs)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            gamma(0.0)
        with pytest.raises(DomainError):
            gamma(-1.5)


class TestLogGamma:
    def test_zeros(self):
        assert abs(log_gamma(1.0).value) <= 1e-13
        assert abs(log_gamma(2.0).value) <= 1e-13

    def test_log_factorial_oracle(self):
        # ln Gamma(100) = sum of ln k, k = 1..99
        oracle = sum(math.log(k) for k in range(1, 100))
        assert log_gamma(100.0).value == pytest.approx(oracle, rel=1e-14)

    def test_large_argument(self):
        oracle = math.fsum(math.log(k) for k in range(1, 10_000))
        assert log_gamma(1e4).value == pytest.approx(oracle, rel=1e-13)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            log_gamma(-3.0)


class TestHurwitzZeta:
    def test_basel(self):
        assert hurwitz_zeta(2.0, 1.0).value == pytest.approx(math.pi ** 2 / 6, rel=1e-13)

    def test_direct_sum_oracle(self):
        # large s converges fast enough for naive summation
        for (s, a) in [(8.0, 1.0), (6.0, 0.3), (10.0, 2.5)]:
            oracle = sum((n + a) ** (-s) for n in range(200_000, -1, -1))
            assert hurwitz_zeta(s, a).value == pytest.approx(oracle, rel=1e-12)

    def test_half_offset_reduction(self):
        # zeta(s, 1/2) = (2^s - 1) zeta(s)
        s = 3.0
        lhs = hurwitz_zeta(s, 0.5).value
        rhs = (2.0 ** s - 1.0) * riemann_zeta(s).value
        assert lhs == pytest.approx(rhs, rel=1e-13)

    def test_functional_equation_point(self):
        a = 0.7
        lhs = hurwitz_zeta(2.0, a + 1.0).value
        rhs = hurwitz_zeta(2.0, a).value - a ** (-2.0)
        assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_functional_equation_property(self):
        rng = random.Random(777)
        for _ in range(100):
            s = rng.uniform(1.1, 20.0)
            a = rng.uniform(0.1, 10.0)
            za = hurwitz_zeta(s, a).value
            zb = hurwitz_zeta(s, a + 1.0).value
            assert abs(zb - za + a ** (-s)) <= 1e-11 * abs(za)

    def test_wide_domain(self):
        # spot checks across the contractual (s, a) box
        for (s, a) in [(1.01, 0.01), (60.0, 100.0), (1.5, 99.5), (59.0, 0.5)]:
            v = hurwitz_zeta(s, a)
            assert math.isfinite(v.value) and v.value > 0.0

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            hurwitz_zeta(1.0, 1.0)
        with pytest.raises(DomainError):
            hurwitz_zeta(2.0, 0.0)


class TestRiemannZeta:
    def test_basel(self):
        assert riemann_zeta(2.0).value == pytest.approx(math.pi ** 2 / 6, rel=1e-13)

    def test_zeta_four(self):
        # direct summation oracle: tail below 1e-13 by n = 2000
        oracle = sum(n ** (-4.0) for n in range(2000, 0, -1)) + 2000 ** (-3.0) / 3.0
        assert riemann_zeta(4.0).value == pytest.approx(math.pi ** 4 / 90, rel=1e-13)
        assert riemann_zeta(4.0).value == pytest.approx(oracle, rel=1e-12)

    def test_pole_excluded(self):
        with pytest.raises(DomainError):
            riemann_zeta(1.0)


class TestPolygamma:
    def test_trigamma_half(self):
        # zeta(2, 1/2) = 3 zeta(2) so psi'(1/2) = pi^2/2
        assert polygamma(1, 0.5).value == pytest.approx(math.pi ** 2 / 2, rel=1e-12)

    def test_trigamma_one(self):
        assert polygamma(1, 1.0).value == pytest.approx(math.pi ** 2 / 6, rel=1e-12)

    def test_trigamma_reflection_point(self):
        z = 0.3
        lhs = polygamma(1, z).value + polygamma(1, 1.0 - z).value
        rhs = math.pi ** 2 / math.sin(math.pi * z) ** 2
        assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_trigamma_reflection_property(self):
        rng = random.Random(4242)
        for _ in range(40):
            z = rng.uniform(0.05, 0.95)
            lhs = polygamma(1, z).value + polygamma(1, 1.0 - z).value
            rhs = math.pi ** 2 / math.sin(math.pi * z) ** 2
            assert abs(lhs - rhs) <= 1e-10 * abs(rhs)

    def test_sign_convention(self):
        # psi''(x) < 0 for x > 0
        assert polygamma(2, 1.5).value < 0.0

    def test_domain(self):
        with pytest.raises(DomainError):
            polygamma(0, 1.0)
        with pytest.raises(DomainError):
            polygamma(1, -1.0)


def _alternating_oracle(terms):
    # Aitken-accelerated partial sums at two depths, for frozen-free checks
    sums = list(np.cumsum(terms))

    def aitken_pass(s):
        out = []
        for k in range(len(s) - 2):
            d1, d2 = s[k + 1] - s[k], s[k + 2] - s[k + 1]
            den = d2 - d1
            out.append(s[k + 2] - d2 * d2 / den if abs(den) > 1e-300 else s[k + 2])
        return out

    depth1 = sums
    for _ in range(6):
        depth1 = aitken_pass(depth1)
    depth2 = sums
    for _ in range(8):
        depth2 = aitken_pass(depth2)
    assert abs(depth1[-1] - depth2[-1]) < 1e-12
    return depth2[-1]


class TestDirichletBeta:
    def test_leibniz(self):
        assert dirichlet_beta(1.0).value == pytest.approx(math.pi / 4, rel=1e-13)

    def test_catalan(self):
        oracle = _alternating_oracle([(-1.0) ** k / (2 * k + 1) ** 2
                                      for k in range(40)])
        assert dirichlet_beta(2.0).value == pytest.approx(oracle, rel=1e-12)

    def test_beta_three(self):
        assert dirichlet_beta(3.0).value == pytest.approx(math.pi ** 3 / 32, rel=1e-13)

    def test_hurwitz_consistency_property(self):
        for p in (1.5, 2.0, 3.0, 5.0):
            b = dirichlet_beta(p).value
            hz = 4.0 ** (-p) * (hurwitz_zeta(p, 0.25).value
                                - hurwitz_zeta(p, 0.75).value)
            assert abs(b - hz) <= 1e-11 * abs(b)

    def test_small_p(self):
        oracle = _alternating_oracle([(-1.0) ** k / (2 * k + 1) ** 0.5
                                      for k in range(40)])
        assert dirichlet_beta(0.5).value == pytest.approx(oracle, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            dirichlet_beta(0.0)


class TestDirichletEta:
    def test_ln2(self):
        assert dirichlet_eta(1.0).value == pytest.approx(math.log(2.0), rel=1e-13)

    def test_zeta_relation(self):
        s = 3.0
        assert dirichlet_eta(s).value == pytest.approx(
            (1.0 - 2.0 ** (1.0 - s)) * riemann_zeta(s).value, rel=1e-13)

    def test_eta_zero(self):
        # eta(0) = 1/2 (Abel sum of 1 - 1 + 1 - ...)
        assert dirichlet_eta(0.0).value == pytest.approx(0.5, rel=1e-12)

    def test_branch_continuity(self):
        below = dirichlet_eta(1.2499).value
        above = dirichlet_eta(1.2501).value
        assert abs(below - above) < 1e-4


class TestBesselJ:
    def test_j0_origin(self):
        assert bessel_j(0.0, 0.0).value == 1.0

    def test_j0_even(self):
        x = 2.3
        assert bessel_j(0.0, -x).value == bessel_j(0.0, x).value

    def test_half_order_closed_form(self):
        # J_{1/2}(x) = sqrt(2/(pi x)) sin x, checked at x = 1
        oracle = math.sqrt(2.0 / math.pi) * math.sin(1.0)
        assert bessel_j(0.5, 1.0).value == pytest.approx(oracle, rel=1e-13)

    def test_minus_one_order(self):
        assert bessel_j(-1.0, 1.7).value == pytest.approx(
            -bessel_j(1.0, 1.7).value, rel=1e-14)

    def test_odd_parity(self):
        assert bessel_j(1.0, -2.0).value == pytest.approx(
            -bessel_j(1.0, 2.0).value, rel=1e-14)

    def test_recurrence_oracle(self):
        # J_{n-1}(x) + J_{n+1}(x) = (2n/x) J_n(x)
        for x in (0.7, 3.0, 8.0):
            for n in (1, 2, 5):
                lhs = bessel_j(n - 1.0, x).value + bessel_j(n + 1.0, x).value
                rhs = 2.0 * n / x * bessel_j(float(n), x).value
                assert abs(lhs - rhs) <= 1e-11 * max(1e-6, abs(rhs))

    def test_addition_identity_5_1(self):
        # sum_k (-1)^k t^k ((2z+t)/(2z))^k J_k(z)/k! = J0(z+t), K = 30
        for (z, t) in ((2.0, 0.5), (3.0, -1.0), (1.0, 1.0)):
            total = 0.0
            for k in range(31):
                coef = (-t * (2.0 * z + t) / (2.0 * z)) ** k / math.factorial(k)
                total += coef * bessel_j(float(k), z).value
            assert abs(total - bessel_j(0.0, z + t).value) <= 1e-9

    def test_est_rel_error_honesty(self):
        # the claimed bound must cover the cancellation at larger x
        sv = bessel_j(0.0, 20.0)
        oracle_terms = []
        term = 1.0
        q = 100.0  # (x/2)^2
        oracle_terms.append(term)
        for k in range(1, 80):
            term *= -q / (k * k)
            oracle_terms.append(term)
        oracle = math.fsum(sorted(oracle_terms, key=abs))
        assert abs(sv.value - oracle) <= max(sv.est_rel_error * abs(oracle), 1e-15)

    def test_domain(self):
        with pytest.raises(DomainError):
            bessel_j(-2.0, 1.0)
        with pytest.raises(DomainError):
            bessel_j(0.5, -1.0)
        with pytest.raises(DomainError):
            bessel_j(0.0, 60.0)


def _theta_product(q: float) -> float:
    # independent oracle: theta1'(0, q) = 2 q^(1/4) prod (1 - q^(2n))^3
    prod = 1.0
    n = 1
    while True:
        factor = 1.0 - q ** (2 * n)
        prod *= factor ** 3
        if q ** (2 * n) < 1e-18:
            return 2.0 * q ** 0.25 * prod
        n += 1


class TestTheta1Prime:
    def test_small_q_leading_term(self):
        q = 1e-12
        assert theta1_prime0(q).value == pytest.approx(2.0 * q ** 0.25, rel=1e-8)

    def test_frozen_point(self):
        # 50-term direct-summation oracle at q = e^-2
        q = math.exp(-2.0)
        oracle = 2.0 * math.fsum((-1.0) ** (n + 1) * (2 * n - 1) * q ** ((n - 0.5) ** 2)
                                 for n in range(1, 51))
        assert theta1_prime0(q).value == pytest.approx(oracle, rel=1e-13)

    def test_product_formula_agreement(self):
        for q in (0.1, 0.3, 0.5, 0.67):
            assert theta1_prime0(q).value == pytest.approx(
                _theta_product(q), rel=1e-12)

    def test_large_q_honest_estimate(self):
        # at q = 0.99 the true value (~3e-107) is beneath the double-precision
        # cancellation floor; the summation must terminate and report that
        # honestly rather than claim accuracy
        sv = theta1_prime0(0.99)
        assert abs(sv.value) <= 1e-12
        assert sv.est_rel_error > 1.0

    def test_domain(self):
        with pytest.raises(DomainError):
            theta1_prime0(0.0)
        with pytest.raises(DomainError):
            theta1_prime0(1.0)


class TestAccuracySpec:
    def test_invariants(self):
        with pytest.raises(DomainError):
            AccuracySpec(target_rel_error=0.0)
        with pytest.raises(DomainError):
            AccuracySpec(target_rel_error=1e-2)
        with pytest.raises(DomainError):
            AccuracySpec(max_terms=8)

    def test_deterministic(self):
        acc = AccuracySpec(target_rel_error=1e-10, max_terms=10_000)
        a = hurwitz_zeta(3.7, 1.9, acc).value
        b = hurwitz_zeta(3.7, 1.9, acc).value
        assert a == b

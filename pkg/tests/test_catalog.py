"""Catalog tests: closed-form spot values, validity enforcement, integrand
annotations, the helper identities, and the cross-entry relations."""

import math

import numpy as np
import pytest

from hyptrig.errors import DomainError, UnknownEntryError
from hyptrig import catalog
from hyptrig.catalog import (closed_form, integrand, list_entries, get_entry,
                             lemma5_lhs, lemma5_rhs, rhs_4_123_5, cf_3_532_1,
                             cf_4_124_1_ext, lemniscatic_period)
from hyptrig.quad import integrate, integrate_finite, Integrand
from hyptrig import specfun as sf

PI = math.pi


class TestClosedFormSpotValues:
    def test_4119(self):
        assert closed_form("4.119", {"p": 1.0, "q": 1.0}) == pytest.approx(
            math.log(math.cosh(PI / 2.0)), rel=1e-14)

    def test_41212_antisymmetry(self):
        assert closed_form("4.121.2", {"a": 1.0, "b": 1.0, "beta": 1.0}) == 0.0

    def test_41231(self):
        assert closed_form("4.123.1", {"a": 1.0}) == pytest.approx(
            PI / 4.0 - 1.0, rel=1e-14)

    def test_hw2(self):
        assert closed_form("HW2", {}) == 16.0

    def test_41241_equal_rates(self):
        # p = q: J0(0) = 1
        assert closed_form("4.124.1", {"p": 2.0, "q": 2.0, "u": 2.0}) == pytest.approx(
            PI / 2.0, rel=1e-14)

    def test_l4_zero(self):
        assert closed_form("L4", {"a": 0.0, "beta": 1.0}) == pytest.approx(0.0, abs=1e-15)

    def test_unknown_entry(self):
        with pytest.raises(UnknownEntryError):
            closed_form("9.999", {})

    def test_domain_error_names_predicate(self):
        with pytest.raises(DomainError, match=r"\|b\| < a"):
            closed_form("L1", {"p": 2.0, "a": 1.0, "b": 2.0})
        with pytest.raises(DomainError, match="p > 1"):
            closed_form("L1", {"p": 0.5, "a": 1.0, "b": 0.0})
        with pytest.raises(DomainError, match="missing parameter"):
            closed_form("4.119", {"p": 1.0})


class TestIntegrandMetadata:
    def test_4118_shape(self):
        f, spec = integrand("4.118", {"a": 1.0})
        assert spec.shape == "decay"
        xs = np.array([0.5, 1.0, 2.0])
        expect = xs * np.sin(xs) / np.cosh(xs) ** 2
        assert np.allclose(f.eval(xs), expect, rtol=1e-14)

    def test_41241_shape(self):
        f, spec = integrand("4.124.1", {"p": 2.0, "q": 1.0, "u": 1.0})
        assert spec.shape == "endpoint_singular"
        assert (spec.lower, spec.upper) == (0.0, 1.0)
        assert f.eval_upper_dist is not None

    def test_41232_removable_points(self):
        f, spec = integrand("4.123.2", {"a": 1.0})
        assert f.removable_points == (0.0, PI)
        # annotated limits match a Taylor expansion of the integrand
        a = 1.0
        lim0, limpi = f.limit_values
        assert lim0 == pytest.approx(-2.0 / ((a * a + 1.0) * PI ** 2), rel=1e-13)
        assert limpi == pytest.approx(-1.0 / (2.0 * (math.cosh(a * PI) + 1.0)), rel=1e-13)
        eps = 1e-5
        near0 = float(f.eval(np.array([eps]))[0])
        nearpi = float(f.eval(np.array([PI + eps]))[0])
        assert near0 == pytest.approx(lim0, rel=1e-4)
        assert nearpi == pytest.approx(limpi, rel=1e-4)

    def test_41237_substituted_variable(self):
        f, spec = integrand("4.123.7", {"a": 1.0})
        assert spec.shape == "oscillatory"
        assert spec.period_hint == pytest.approx(2.0 * PI)
        # value at t corresponds to x = sqrt(t/2) in the original variable
        t = np.array([2.0])
        x = math.sqrt(1.0)
        g = (math.sin(PI * x / 2) * math.sinh(PI * x / 2)
             / (math.cos(PI * x) + math.cosh(PI * x)))
        assert float(f.eval(t)[0]) == pytest.approx(0.5 * math.sin(1.0) * g, rel=1e-13)

    def test_41242_undefined_as_printed(self):
        f, spec = integrand("4.124.2", {"a": 1.0, "beta": 0.5, "u": 1.0})
        assert spec.lower == 1.0 and spec.shape == "oscillatory"
        with np.errstate(invalid="ignore"):
            vals = f.eval(np.array([1.5, 2.0, 10.0]))
        assert np.all(~np.isfinite(vals))


class TestLemma5:
    def test_vanishing_at_zero(self):
        assert lemma5_lhs(1e-30, 1.0, 5) == pytest.approx(0.0, abs=1e-28)
        assert lemma5_rhs(1e-30, 1.0) == pytest.approx(0.0, abs=1e-13)

    def test_quarter_point(self):
        # Gamma(1/2) Gamma(3/2) = pi/2
        assert lemma5_rhs(0.25, 1.0) == pytest.approx(math.log(PI / 2.0), rel=1e-13)

    def test_truncated_sum_matches(self):
        assert lemma5_lhs(0.5, 2.0, 60) == pytest.approx(
            lemma5_rhs(0.5, 2.0), abs=1e-10)

    def test_domain(self):
        with pytest.raises(DomainError):
            lemma5_lhs(4.0, 2.0, 10)
        with pytest.raises(DomainError):
            lemma5_rhs(1.0, 1.0)


class TestRhs41235:
    def test_large_a_dominant_term(self):
        # as a grows everything beyond the k = 0 term becomes negligible
        beta, gamma = 0.3, 0.9
        for a in (20.0, 30.0):
            full = rhs_4_123_5(a, beta, gamma)
            first = (PI * math.exp(-a * gamma)
                     / (2.0 * gamma * (math.cos(gamma * PI) + math.cos(beta * PI))))
            k0 = (math.exp(-(1.0 - beta) * a) / (gamma ** 2 - (1.0 - beta) ** 2)
                  - math.exp(-(1.0 + beta) * a) / (gamma ** 2 - (1.0 + beta) ** 2)
                  ) / math.sin(beta * PI)
            assert full == pytest.approx(first + k0, rel=1e-8)

    def test_matches_quadrature(self):
        a, beta, gamma = 1.0, 0.3, 0.9
        f, spec = integrand("4.123.5", {"a": a, "beta": beta, "gamma": gamma})
        r = integrate(f, spec, 1e-12)
        assert r.status == "converged"
        assert rhs_4_123_5(a, beta, gamma) == pytest.approx(r.value, rel=1e-8)

    def test_pole_rejected(self):
        # for beta = 0.3 the pole set is {0.7, 1.3, 2.7, 3.3, ...}
        with pytest.raises(DomainError, match="k=0"):
            rhs_4_123_5(1.0, 0.3, 1.3)
        with pytest.raises(DomainError, match="pole"):
            rhs_4_123_5(1.0, 0.3, 0.7)

    def test_explicit_terms(self):
        v_auto = rhs_4_123_5(1.0, 0.5, 2.0)
        v_fixed = rhs_4_123_5(1.0, 0.5, 2.0, terms=200)
        assert v_auto == pytest.approx(v_fixed, rel=1e-12)


class TestCf35321:
    def test_r_zero_single_term(self):
        # a = b = 1: r = 0, integrand x^0 e^-x, integral 1
        assert cf_3_532_1(0.0, 1.0, 1.0, "derived") == pytest.approx(1.0, rel=1e-14)

    def test_small_b_limit_sech(self):
        # b -> 0 approaches int sech = pi/2
        v = cf_3_532_1(0.0, 1.0, 1e-3, "derived")
        assert abs(v - PI / 2.0) < 2e-3
        f, spec = integrand("3.532.1", {"n": 0.0, "a": 1.0, "b": 1e-3})
        r = integrate(f, spec, 1e-11)
        assert v == pytest.approx(r.value, rel=1e-9)

    def test_printed_to_derived_ratio(self):
        # at r = 0: Gamma(2n+1)/(2 Gamma(n+1)), exactly 6 for n = 2
        ratio = cf_3_532_1(2.0, 1.0, 1.0, "printed") / cf_3_532_1(2.0, 1.0, 1.0, "derived")
        assert ratio == pytest.approx(6.0, rel=1e-12)

    def test_validation(self):
        with pytest.raises(DomainError):
            cf_3_532_1(2.0, 1.0, 1.0, "both")
        with pytest.raises(DomainError):
            cf_3_532_1(-1.5, 1.0, 1.0, "derived")
        with pytest.raises(DomainError):
            cf_3_532_1(0.0, 1.0, -1.0, "derived")


class TestNuExtension:
    def test_nu_zero_reduces_to_base(self):
        for pp in ({"p": 2.0, "q": 1.0, "u": 1.0}, {"p": 1.5, "q": 0.8, "u": 1.2}):
            ext = cf_4_124_1_ext(pp["p"], pp["q"], pp["u"], 0.0)
            assert ext == pytest.approx(closed_form("4.124.1", pp), rel=1e-12)

    def test_nu_minus_one_reduces_to_closed_form(self):
        for pp in ({"p": 2.0, "q": 1.0, "u": 1.0}, {"p": 3.0, "q": 0.5, "u": 1.5}):
            ext = cf_4_124_1_ext(pp["p"], pp["q"], pp["u"], -1.0)
            assert ext == pytest.approx(closed_form("4.124.1-nu-1", pp), rel=1e-12)

    def test_half_cases_inside_domain(self):
        # nu = -1/2 drops the weight entirely: plain finite integral oracle
        p, q, u = 2.0, 1.0, 1.0
        ext = cf_4_124_1_ext(p, q, u, -0.5)
        f = Integrand(eval=lambda x: np.cos(p * x) * np.cosh(q * np.sqrt((u - x) * (u + x))))
        r = integrate_finite(f, 0.0, u, 1e-12)
        assert ext == pytest.approx(r.value, rel=1e-10)

    def test_nu_half_boundary_undefined(self):
        # Gamma(0) appears in the n = 0 coefficient
        with pytest.raises(DomainError):
            cf_4_124_1_ext(2.0, 1.0, 1.0, 0.5)


class TestRegistry:
    def test_contents(self):
        ids = [e.id for e in list_entries()]
        assert "4.118" in ids and "4.124.2" in ids
        assert len(ids) >= 25

    def test_suspect_flag(self):
        assert "suspect" in get_entry("4.124.2").flags

    def test_dual_convention_flag(self):
        assert "dual_convention" in get_entry("3.532.1").flags

    def test_constant_entries(self):
        for eid in ("HW1", "HW2", "HW3"):
            e = get_entry(eid)
            assert "constant_entry" in e.flags
            assert e.param_names == ()

    def test_deterministic_order(self):
        assert [e.id for e in list_entries()] == [e.id for e in list_entries()]


class TestCrossEntryRelations:
    def test_sum_rule_4123(self):
        # cf(4.123.1) + cf(4.123.2) = 2 cf(4.123.4)
        for a in (0.5, 1.0, 2.0, 5.0):
            lhs = (closed_form("4.123.1", {"a": a})
                   + closed_form("4.123.2", {"a": a}))
            rhs = 2.0 * closed_form("4.123.4", {"a": a})
            assert abs(lhs - rhs) <= 1e-13 * max(1.0, abs(rhs))

    def test_difference_rule_4123(self):
        # cf(4.123.2) - cf(4.123.1) = 2 cf(4.123.3); the factor 2 is forced
        # by the displayed closed forms
        for a in (0.5, 1.0, 2.0, 5.0):
            lhs = (closed_form("4.123.2", {"a": a})
                   - closed_form("4.123.1", {"a": a}))
            rhs = 2.0 * closed_form("4.123.3", {"a": a})
            assert abs(lhs - rhs) <= 1e-13 * max(1.0, abs(rhs))

    def test_41222_beta_zero_reduction(self):
        # 4.122.2 at beta = 0 is (1/2) ln cosh(a pi), i.e. half of 4.119 at
        # (p, q) = (2a, 1) because 1 - cos(2ax) = 2 sin^2(ax)
        for a in (0.4, 1.0, 2.5):
            v = closed_form("4.122.2", {"a": a, "beta": 0.0})
            assert v == pytest.approx(0.5 * math.log(math.cosh(a * PI)), rel=1e-12)
            assert v == pytest.approx(
                0.5 * closed_form("4.119", {"p": 2.0 * a, "q": 1.0}), rel=1e-12)

    def test_gudermannian_reduction(self):
        # 4.122.1 at beta = 0 equals L4 with (a, beta) -> (gamma, delta)
        for (gamma, delta) in ((1.0, 1.0), (2.0, 0.7), (0.3, 2.0)):
            lhs = closed_form("4.122.1", {"beta": 0.0, "gamma": gamma, "delta": delta})
            rhs = closed_form("L4", {"a": gamma, "beta": delta})
            assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_lemma1_weight_x_is_corollary(self):
        for (a, b) in ((1.0, 0.0), (1.0, 0.5), (2.0, 1.3)):
            lhs = closed_form("L1", {"p": 2.0, "a": a, "b": b})
            rhs = closed_form("C1", {"a": a, "b": b})
            assert abs(lhs - rhs) <= 1e-11 * abs(rhs)

    def test_csch_moment_zeta_representation(self):
        # L1 at b = 0, a = 1 against the (1 - 2^-p)^(-1)-form of the
        # zeta-function moment representation
        for p in (2.0, 3.0, 4.5):
            lhs = closed_form("L1", {"p": p, "a": 1.0, "b": 0.0})
            rhs = (2.0 * sf.gamma(p).value * sf.riemann_zeta(p).value
                   * (1.0 - 2.0 ** (-p)))
            assert abs(lhs - rhs) <= 1e-11 * abs(rhs)

    def test_4118_is_derivative(self):
        # closed form equals -d/da [pi a / (2 sinh(pi a/2))], central diff
        def phi(a):
            return PI * a / (2.0 * math.sinh(PI * a / 2.0))

        h = 1e-5
        for a in (0.7, 1.5, 3.0):
            cf = closed_form("4.118", {"a": a})
            deriv = -(phi(a + h) - phi(a - h)) / (2.0 * h)
            assert abs(cf - deriv) <= 1e-8

    def test_kernel_expansion(self):
        # 1/(cosh x - cos x) = (2/sin x) sum_{n<=80} e^(-n x) sin(n x)
        n = np.arange(1, 81)
        for x in (0.5, 1.0, 2.0):
            lhs = 1.0 / (math.cosh(x) - math.cos(x))
            rhs = 2.0 / math.sin(x) * float(np.sum(np.exp(-n * x) * np.sin(n * x)))
            assert abs(lhs - rhs) <= 1e-10

    def test_hw3_constant(self):
        omega = lemniscatic_period()
        assert omega == pytest.approx(2.622057554292119, rel=1e-12)
        assert closed_form("HW3", {}) == pytest.approx(omega ** 2 - 4.0, rel=1e-12)

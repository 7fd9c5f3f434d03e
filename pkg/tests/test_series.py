import cmath
import math

import numpy as np
import pytest
import sympy as sp

from invpower import (ConfigurationError, DomainError, PotentialMonomial,
                      SeriesConfig, SeriesSolution, Strategy, build_series,
                      evaluate_solution, ode_residual, omega_exponent,
                      origin_params, recurrence_residual)


def sym_recurrence_lhs(coeffs, s, alpha, beta, kappa, lam, eps):
    """Independent symbolic substitution of the coefficient recurrence."""
    a = sp.Rational(alpha)
    b = sp.Rational(beta) / 2
    k = sp.Rational(kappa)
    L = sp.Rational(lam)
    ss = sp.Integer(s)

    def get(i):
        return coeffs.get(i, 0)

    lhs = (2 * sp.sqrt(a) * (ss + b + 1) * get(s + int(b) + 1)
           + 2 * sp.I * eps * sp.sqrt(a * k) * get(s + int(b))
           + ((ss + 2) * (ss + 1) + sp.Rational(beta) ** 2 / 16
              + sp.Rational(beta) * (ss / sp.Integer(2) - sp.Rational(1, 4))
              - (L**2 - sp.Rational(1, 4))) * get(s + 2)
           + (2 * sp.I * eps * sp.sqrt(k) * (ss + 1)
              + sp.I * eps * sp.Rational(beta) * sp.sqrt(k) / 2) * get(s + 1))
    return complex(sp.N(lhs))


def desk_config(beta=6.0, alpha=1.0, kappa=1.0, lam=0.5, eps=1, s_min=0, s_max=40,
                strategy=Strategy.ONE_SIDED):
    return SeriesConfig(pot=PotentialMonomial(alpha, beta), kappa=kappa, lam=lam,
                        epsilon=eps, s_min=s_min, s_max=s_max, strategy=strategy)


def manual_solution(coeffs, config):
    return SeriesSolution(omega=float(omega_exponent(config.pot.beta)),
                          coefficients=dict(coeffs), config=config,
                          normalization_index=0)


class TestOmega:
    def test_beta4_recovers_one(self):
        assert omega_exponent(4.0) == 1.0

    def test_beta8(self):
        assert omega_exponent(8.0) == 2.0

    def test_odd_beta_is_polydromic(self):
        omega = omega_exponent(5.0)
        assert omega == 1.25
        assert omega.polydromic

    def test_small_beta_rejected(self):
        with pytest.raises(DomainError):
            omega_exponent(2.0)

    def test_dominant_singularity_coefficient_vanishes(self):
        # sqrt(alpha) (2 omega - beta/2) must be exactly zero
        for beta in (4.0, 6.0, 8.0, 10.0):
            omega = omega_exponent(beta)
            assert math.sqrt(2.0) * (2.0 * omega - beta / 2.0) == 0.0


class TestRecurrenceResidual:
    def test_all_zero_is_homogeneous(self):
        config = desk_config()
        for s in (-5, -3, 0, 7):
            assert recurrence_residual({}, s, config) == 0

    def test_hand_case_beta6(self):
        # at s = -3 the relation reads 2 a_1 + 2i a_0 = 0
        config = desk_config()
        assert recurrence_residual({0: 1.0, 1: -1j}, -3, config) == pytest.approx(0.0, abs=1e-15)
        assert recurrence_residual({0: 1.0, 1: 1j}, -3, config) == pytest.approx(4j, rel=1e-15)

    @pytest.mark.parametrize("s", [-4, -3, -2, -1, 0, 1])
    def test_matches_symbolic_oracle(self, s):
        coeffs = {0: 1.0, 1: -1j, 2: 0.8125, 3: 0.5 - 0.25j}
        config = desk_config()
        expected = sym_recurrence_lhs(coeffs, s, 1, 6, 1, sp.Rational(1, 2), 1)
        assert recurrence_residual(coeffs, s, config) == pytest.approx(expected, abs=1e-13)


class TestBuildOneSided:
    def test_beta6_leading_coefficients(self):
        sol = build_series(desk_config(s_max=10))
        assert sol.coefficients[0] == 1.0
        assert sol.coefficients[1] == -1j
        assert sol.coefficients[2] == 13.0 / 16.0
        assert sol.normalization_index == 0

    def test_beta4_first_coefficient_from_symbolic_oracle(self):
        config = desk_config(beta=4.0, s_max=8)
        sol = build_series(config)
        # solve the s = -2 relation symbolically for a_1
        a1 = sp.symbols("a1")
        eq = sp.Eq(2 * a1 + 2 * sp.I + (1 - 5) * 1, 0)
        expected = complex(sp.solve(eq, a1)[0])
        assert sol.coefficients[1] == pytest.approx(expected, rel=1e-15)

    def test_negative_window_entries_are_zero(self):
        sol = build_series(desk_config(s_min=-5, s_max=10))
        for s in range(-5, 0):
            assert sol.coefficients[s] == 0

    def test_all_defining_relations_satisfied(self):
        config = desk_config(beta=8.0, alpha=0.5, lam=1.0, s_max=30)
        sol = build_series(config)
        b = config.half_beta
        for s in range(-b - 1, config.s_max - b):
            res = recurrence_residual(sol.coefficients, s, config)
            scale = max(abs(sol.coefficients.get(i, 0.0)) * abs(c)
                        for i, c in [(s + b + 1, 2 * math.sqrt(0.5) * (s + b + 1)),
                                     (s + 2, (s + 2) * (s + 1))])
            assert abs(res) <= 1e-12 * max(1.0, scale)

    def test_odd_beta_rejected(self):
        with pytest.raises(ConfigurationError, match="even"):
            desk_config(beta=5.0)

    def test_narrow_window_rejected(self):
        with pytest.raises(DomainError):
            desk_config(s_max=2)


class TestBuildWindowed:
    def test_matches_one_sided_up_to_scale(self):
        one = build_series(desk_config(s_min=-5, s_max=10))
        win = build_series(desk_config(s_min=-5, s_max=10, strategy=Strategy.WINDOWED))
        scale = win.coefficients[0]
        assert scale != 0
        for s in range(-5, 11):
            rescaled = win.coefficients[s] / scale
            assert rescaled == pytest.approx(one.coefficients[s], rel=1e-8, abs=1e-8)

    def test_normalization_largest_is_one(self):
        win = build_series(desk_config(s_min=-5, s_max=10, strategy=Strategy.WINDOWED))
        mags = [abs(v) for v in win.coefficients.values()]
        assert max(mags) == pytest.approx(1.0, rel=1e-12)
        assert abs(win.coefficients[win.normalization_index]) == pytest.approx(1.0, rel=1e-12)

    def test_interior_recurrence_holds(self):
        config = desk_config(s_min=-5, s_max=10, strategy=Strategy.WINDOWED)
        win = build_series(config)
        b = config.half_beta
        for s in range(config.s_min - 1, config.s_max - b):
            res = recurrence_residual(win.coefficients, s, config)
            scale = max(abs(c) * abs(win.coefficients.get(i, 0.0))
                        for i, c in [(s + b + 1, 2.0 * (s + b + 1)),
                                     (s + 2, (s + 2) * (s + 1) + 4.0)])
            assert abs(res) <= 1e-10 * max(1.0, scale)


class TestEvaluate:
    def test_single_term_beta4(self):
        config = desk_config(beta=4.0, s_max=8)
        sol = manual_solution({0: 1.0}, config)
        origin = origin_params(config.pot)
        value = evaluate_solution(sol, origin, 1.0)
        assert value == pytest.approx(cmath.exp(-1.0) * cmath.exp(1j), rel=1e-14)

    def test_beta6_three_terms_at_r1(self):
        config = desk_config(s_max=10)
        sol = manual_solution({0: 1.0, 1: -1j, 2: 13.0 / 16.0}, config)
        origin = origin_params(config.pot)
        expected = cmath.exp(-0.5) * cmath.exp(1j) * (1.0 - 1j + 13.0 / 16.0)
        assert evaluate_solution(sol, origin, 1.0) == pytest.approx(expected, rel=1e-14)

    def test_epsilon_conjugation(self):
        plus = build_series(desk_config(s_max=20))
        minus = build_series(desk_config(eps=-1, s_max=20))
        for s, value in plus.coefficients.items():
            assert minus.coefficients[s] == pytest.approx(value.conjugate(), rel=1e-13, abs=1e-300)
        origin = origin_params(plus.config.pot)
        for r in (0.1, 0.3, 1.0):
            assert evaluate_solution(minus, origin, r) == pytest.approx(
                evaluate_solution(plus, origin, r).conjugate(), rel=1e-13)

    def test_rejects_nonpositive_r(self):
        sol = build_series(desk_config(s_max=10))
        origin = origin_params(sol.config.pot)
        with pytest.raises(DomainError):
            evaluate_solution(sol, origin, 0.0)

    def test_rejects_mismatched_origin(self):
        sol = build_series(desk_config(s_max=10))
        wrong = origin_params(PotentialMonomial(1.0, 4.0))
        with pytest.raises(DomainError):
            evaluate_solution(sol, wrong, 1.0)


class TestOdeResidual:
    def test_zero_solution(self):
        config = desk_config(s_max=10)
        sol = manual_solution({0: 0.0}, config)
        assert ode_residual(sol, origin_params(config.pot), 1.0) == 0.0

    def test_beta4_exact_form_small_r(self):
        # single-term series is the exact near-origin form; the residual is
        # dominated by the neglected kappa and centrifugal terms
        config = desk_config(beta=4.0, lam=0.5, s_max=8)
        sol = manual_solution({0: 1.0}, config)
        origin = origin_params(config.pot)
        r = 1e-3
        y = abs(evaluate_solution(sol, origin, r))
        bound = (abs(config.kappa) + abs(config.lam**2 - 0.25) / r**2) * y
        assert ode_residual(sol, origin, r) <= 3.0 * bound + 1e-250

    def test_residual_tiny_near_origin(self):
        sol = build_series(desk_config(s_max=40))
        origin = origin_params(sol.config.pot)
        assert ode_residual(sol, origin, 0.1) < 1e-15

    def test_truncation_convergence_in_validity_region(self):
        # within the empirical validity region the residual must not grow
        # (beyond a 10x noise allowance) as the truncation order increases
        origin = origin_params(PotentialMonomial(1.0, 6.0))
        for r in (0.05, 0.1, 0.2):
            residuals = [ode_residual(build_series(desk_config(s_max=n)), origin, r)
                         for n in (10, 20, 40)]
            assert residuals[1] <= 10.0 * residuals[0] + 1e-250
            assert residuals[2] <= 10.0 * residuals[1] + 1e-250

    def test_asymptotic_divergence_outside_validity_region(self):
        # the coefficients grow factorially: far from the origin the
        # truncated series stops being a solution at all
        sol = build_series(desk_config(s_max=40))
        origin = origin_params(sol.config.pot)
        assert ode_residual(sol, origin, 1.0) > 1.0

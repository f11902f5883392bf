import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from umbralpoly import (
    DEFAULT_CONTROL,
    GammaPoleError,
    MomentRule,
    NoConvergenceError,
    SeriesControl,
    UmbralMonomial,
    UmbralPolynomial,
    c_moment,
    eval_exp,
    eval_poly,
    h_moment,
    monomial,
    tricomi,
)

from conftest import rel_err

J0_AT_2 = 0.2238907791412356680518  # sum (-1)^r / (r!)^2


class TestCMoment:
    def test_zero_exponent_is_one(self):
        assert c_moment(0) == 1

    def test_integer_exponent_is_exact_inverse_factorial(self):
        assert c_moment(4) == F(1, 24)
        assert c_moment(F(6)) == F(1, 720)

    def test_half_exponent_matches_gamma_constant(self):
        # 1/Gamma(3/2) = 2/sqrt(pi)
        assert rel_err(c_moment(0.5), 2 / math.sqrt(math.pi)) < 1e-13

    def test_accuracy_across_working_range(self):
        mu = -0.5
        while mu <= 50:
            if abs(mu - round(mu)) > 1e-9 or mu >= 0:
                assert rel_err(c_moment(mu), 1 / math.gamma(mu + 1)) < 1e-13
            mu += 0.7

    @pytest.mark.parametrize("mu", [-1, -2, -7, F(-3)])
    def test_negative_integer_exponent_is_a_pole(self, mu):
        with pytest.raises(GammaPoleError):
            c_moment(mu)


class TestHMoment:
    def test_examples(self):
        assert h_moment(3, 5) == 0
        assert h_moment(2, 1) == 2
        assert h_moment(4, 3) == 108

    @given(k=st.integers(min_value=0, max_value=40), y=st.fractions(max_denominator=50))
    def test_odd_exponents_annihilate(self, k, y):
        assert h_moment(2 * k + 1, y) == 0

    @given(
        k=st.integers(min_value=0, max_value=20),
        y=st.fractions(min_value=-10, max_value=10, max_denominator=20),
    )
    def test_even_exponents_exact_on_rationals(self, k, y):
        want = y**k * (math.factorial(2 * k) // math.factorial(k))
        assert h_moment(2 * k, y) == want

    def test_rejects_bad_exponents(self):
        with pytest.raises(ValueError):
            h_moment(-1, 1)
        with pytest.raises(ValueError):
            h_moment(1.5, 1)


class TestMonomialAlgebra:
    def test_product_adds_exponents(self):
        a = UmbralMonomial(2, c_exponent=F(1, 2), h_exponent=1)
        b = UmbralMonomial(3, c_exponent=F(3, 2), h_exponent=2)
        c = a * b
        assert c.coefficient == 6
        assert c.c_exponent == F(2)
        assert c.h_exponent == 3

    def test_rejects_negative_c_exponent(self):
        with pytest.raises(ValueError):
            UmbralMonomial(1, c_exponent=-1)

    def test_rejects_fractional_h_exponent(self):
        with pytest.raises(ValueError):
            UmbralMonomial(1, h_exponent=0.5)

    @given(
        mu=st.fractions(min_value=0, max_value=10, max_denominator=4),
        nu=st.fractions(min_value=0, max_value=10, max_denominator=4),
    )
    def test_exponent_additivity_under_the_vacuum(self, mu, nu):
        # product of two pure-c monomials evaluates as the summed exponent
        p = monomial(1, c_exponent=mu) * monomial(1, c_exponent=nu)
        got = eval_poly(p, MomentRule.c())
        want = c_moment(mu + nu)
        if isinstance(got, F) and isinstance(want, F):
            assert got == want
        else:
            assert rel_err(got, want) < 1e-13


class TestPolynomialAlgebra:
    def test_merges_equal_rational_exponents(self):
        p = monomial(F(1), c_exponent=F(1, 2)) + monomial(F(2), c_exponent=F(1, 2))
        assert len(p.terms) == 1
        assert p.terms[0].coefficient == 3

    def test_merges_float_exponents_within_tolerance(self):
        p = monomial(1.0, c_exponent=0.5) + monomial(1.0, c_exponent=0.5 + 1e-14)
        assert len(p.terms) == 1

    def test_zero_coefficients_are_dropped(self):
        p = monomial(1, c_exponent=1) - monomial(1, c_exponent=1)
        assert p.is_zero

    @given(
        a=st.integers(-5, 5),
        b=st.integers(-5, 5),
        e1=st.integers(0, 4),
        e2=st.integers(0, 4),
    )
    def test_linearity_of_eval_poly(self, a, b, e1, e2):
        p = monomial(F(1), c_exponent=e1)
        q = monomial(F(1), c_exponent=e2)
        lhs = eval_poly(a * p + b * q, MomentRule.c())
        rhs = a * eval_poly(p, MomentRule.c()) + b * eval_poly(q, MomentRule.c())
        assert lhs == rhs

    def test_power_matches_repeated_product(self):
        p = monomial(F(1)) + monomial(F(-2), c_exponent=1)
        assert (p**3).terms == (p * p * p).terms


class TestEvalPoly:
    def test_vacuum_normalization(self):
        assert eval_poly(UmbralPolynomial.one(), MomentRule.c()) == 1

    def test_umbral_binomial_square_is_degree_two_laguerre(self):
        # (y - c x)^2 at x=1, y=1 evaluates to 1 - 2/Gamma(2) + 1/Gamma(3)
        p = (monomial(F(1)) + monomial(F(-1), c_exponent=1)) ** 2
        assert eval_poly(p, MomentRule.c()) == F(-1, 2)

    def test_tensor_moment_factorizes(self):
        p = monomial(F(1), c_exponent=1, h_exponent=2)
        assert eval_poly(p, MomentRule.tensor(F(1))) == 2

    def test_pure_c_rule_rejects_h_terms(self):
        p = monomial(1, h_exponent=2)
        with pytest.raises(ValueError):
            eval_poly(p, MomentRule.c())

    def test_pure_h_rule_rejects_c_terms(self):
        p = monomial(1, c_exponent=1)
        with pytest.raises(ValueError):
            eval_poly(p, MomentRule.h(1))


class TestEvalExp:
    def test_empty_polynomial_gives_one(self):
        assert eval_exp(UmbralPolynomial.zero(), MomentRule.c()) == 1.0

    def test_nonzero_constant_term_is_rejected(self):
        p = monomial(F(1)) + monomial(F(1), c_exponent=1)
        with pytest.raises(ValueError):
            eval_exp(p, MomentRule.c())

    def test_pure_c_linear_gives_squared_factorial_series(self):
        p = monomial(F(-1), c_exponent=1)
        assert rel_err(eval_exp(p, MomentRule.c()), J0_AT_2) < 1e-14

    def test_gaussian_closed_form_example(self):
        # h-exponential at z=0.7, y=0.3 equals e^(y z^2) = e^0.147
        p = monomial(F(7, 10), h_exponent=1)
        got = eval_exp(p, MomentRule.h(F(3, 10)))
        assert rel_err(got, math.exp(0.147)) < 1e-12

    @pytest.mark.parametrize("z", [-2, -1, F(-1, 2), F(1, 2), 1, 2])
    @pytest.mark.parametrize("y", [-2, -1, F(-1, 2), F(1, 2), 1, 2])
    def test_gaussian_identity_on_grid(self, z, y):
        p = monomial(F(z), h_exponent=1)
        got = eval_exp(p, MomentRule.h(F(y)))
        assert rel_err(got, math.exp(float(y) * float(z) ** 2)) < 1e-10

    @given(
        z=st.floats(min_value=-2, max_value=2, allow_nan=False),
        y=st.floats(min_value=-2, max_value=2, allow_nan=False),
    )
    @settings(max_examples=60, deadline=None)
    def test_gaussian_identity_random_points(self, z, y):
        p = monomial(F(z), h_exponent=1)
        got = eval_exp(p, MomentRule.h(F(y)))
        assert rel_err(got, math.exp(y * z * z)) < 1e-10

    @pytest.mark.parametrize("x", [0.0, 0.5, 1.0, 2.0, 3.0, 4.0])
    def test_matches_tricomi_series_on_linear_c_argument(self, x):
        p = monomial(-F(x), c_exponent=1)
        got = eval_exp(p, MomentRule.c())
        want = tricomi(0, x, DEFAULT_CONTROL).value
        assert rel_err(got, want) < 1e-12

    def test_prefix_shifts_the_moment_pattern(self):
        # c^2 e^(-c) evaluates to the alpha=2 series at argument 1
        p = monomial(F(-1), c_exponent=1)
        got = eval_exp(p, MomentRule.c(), prefix=monomial(F(1), c_exponent=2))
        want = tricomi(2, 1.0, DEFAULT_CONTROL).value
        assert rel_err(got, want) < 1e-12

    def test_survives_runs_of_exactly_zero_odd_terms(self):
        # every odd power of the h symbol contributes nothing; the stop rule
        # must not fire on those zeros alone
        p = monomial(F(2), h_exponent=1)
        got = eval_exp(p, MomentRule.h(F(2)))
        assert rel_err(got, math.exp(8.0)) < 1e-12

    def test_no_convergence_raises_with_term_count(self):
        p = monomial(F(2), h_exponent=1)
        ctl = SeriesControl(rel_tol=1e-15, consecutive_small=3, max_terms=5)
        with pytest.raises(NoConvergenceError) as exc:
            eval_exp(p, MomentRule.h(F(2)), ctl)
        assert exc.value.terms_used == 5


class TestSeriesControl:
    def test_defaults(self):
        assert DEFAULT_CONTROL.rel_tol == 1e-15
        assert DEFAULT_CONTROL.consecutive_small == 3
        assert DEFAULT_CONTROL.max_terms == 200

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"rel_tol": 0.0},
            {"rel_tol": -1e-9},
            {"max_terms": 0},
            {"consecutive_small": 0},
        ],
    )
    def test_rejects_bad_parameters(self, kwargs):
        with pytest.raises(ValueError):
            SeriesControl(**kwargs)

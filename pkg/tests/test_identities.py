"""Instance-level tests of every identity check.

Frozen values below were computed with the oracles in ``tests/oracles.py``
(symbolic series expansion), not with the package.
"""
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bernoulli_euler import identities as ids
from bernoulli_euler.polynomials import Poly, unified_poly
from bernoulli_euler.series import ParameterError, Params

F = Fraction
small = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 20))


@st.composite
def regular_params(draw):
    lam = draw(small.filter(bool))
    mu = draw(small.filter(lambda m: m != 1 and m - 1 != lam))
    return Params(lam, mu)


def test_big_lambda():
    assert ids.big_lambda(0, 0) == F(1, 2)
    assert ids.big_lambda(2, 1) == F(3, 24)


class TestMonomial:
    def test_n0(self):
        r = ids.check_monomial_determinantal(0, 2, F(1, 3))
        assert r.equal and r.lhs == r.rhs == 1

    def test_n1_classical_line(self):
        r = ids.check_monomial_determinantal(1, 1, F(1, 2))
        assert r.equal and r.rhs == F(1, 2)

    def test_at_zero(self):
        r = ids.check_monomial_determinantal(3, 1, 0)
        assert r.equal and r.lhs == 0

    @pytest.mark.parametrize("lam", [0, -1])
    def test_rejects(self, lam):
        with pytest.raises(ParameterError):
            ids.check_monomial_determinantal(2, lam, 1)

    @pytest.mark.parametrize("n,x,value", [(0, 5, 1), (2, 1, 1), (4, 0, 0)])
    def test_classical(self, n, x, value):
        r = ids.check_monomial_classical(n, x)
        assert r.equal and r.lhs == value

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10), small.filter(lambda v: v not in (0, -1)), small)
    def test_property(self, n, lam, x):
        assert ids.check_monomial_determinantal(n, lam, x).equal


class TestAddition:
    def test_y_zero(self):
        r = ids.check_addition(5, Params(F(3, 4), F(-2)), F(1, 2), 0)
        assert r.equal and r.lhs == r.rhs

    def test_euler(self):
        r = ids.check_addition(3, Params(1, 0), 0, 1)
        assert r.equal and r.lhs == F(-1, 4)

    def test_apostol_euler(self):
        r = ids.check_addition(2, Params(2, 0), 1, -1)
        assert r.equal and r.lhs == F(4, 27)

    def test_polynomial_form(self):
        r = ids.check_addition(6, Params(F(5, 2), F(1, 3)), 0, F(-7, 2), polynomial=True)
        assert r.equal and isinstance(r.lhs, Poly)

    def test_numbers_from_polys(self):
        p = Params(F(7, 5), F(3, 2))
        r = ids.check_numbers_from_polys(0, p, 9)
        assert r.equal and r.lhs == (2 - p.mu) / (p.lam + 1 - p.mu)
        assert ids.check_numbers_from_polys(2, Params(1, 2), F(1, 3)).lhs == F(1, 6)
        r = ids.check_numbers_from_polys(1, Params(2, 0), 7)
        assert r.equal and r.rhs == F(-4, 9)

    @pytest.mark.parametrize(
        "n,p,x", [(0, Params(3, 5), 2), (2, Params(1, 0), F(1, 2)), (3, Params(2, 2), 1)]
    )
    def test_connection(self, n, p, x):
        assert ids.check_connection_prop(n, p, x).equal

    def test_connection_other_lambda(self):
        assert ids.check_connection_prop(4, Params(2, 2), F(1, 3), lam=F(-5, 7)).equal

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10), regular_params(), small, small)
    def test_property(self, n, p, x, y):
        assert ids.check_addition(n, p, x, y).equal
        assert ids.check_numbers_from_polys(n, p, x).equal


class TestRaabe:
    @pytest.mark.parametrize("n,mu,x", [(0, 0, 0), (4, F(3, 2), F(-1, 3)), (7, -5, 2)])
    def test_m1(self, n, mu, x):
        r = ids.check_raabe(n, 1, mu, x)
        assert r.equal and r.lhs == r.rhs

    def test_mu0(self):
        r = ids.check_raabe(2, 3, 0, F(1, 2))
        assert r.equal and r.lhs == F(-1, 36)
        c = ids.check_raabe_classical(2, 3, F(1, 2), "Euler")
        assert (c.lhs, c.rhs) == (r.lhs, r.rhs)

    def test_mu3(self):
        r = ids.check_raabe(3, 3, 3, 0)
        assert r.equal and r.lhs == F(1, 432)

    def test_even_m(self):
        with pytest.raises(ParameterError):
            ids.check_raabe(2, 2, 0, 0)
        with pytest.raises(ParameterError):
            ids.check_raabe_classical(2, 4, 0, "Euler")

    def test_classical(self):
        r = ids.check_raabe_classical(1, 2, 0, "Bernoulli")
        assert r.equal and r.lhs == F(-1, 2)
        r = ids.check_raabe_classical(0, 3, 0, "Euler")
        assert r.equal and r.lhs == 1
        r = ids.check_raabe_classical(2, 3, 1, "Bernoulli")
        assert r.equal and r.lhs == F(1, 18)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(0, 8), st.sampled_from([1, 3, 5]), small, small)
    def test_mu0_degenerates_to_classical(self, n, m, mu, x):
        if mu == 1:
            mu = F(0)
        assert ids.check_raabe(n, m, mu, x).equal
        r = ids.check_raabe(n, m, 0, x)
        c = ids.check_raabe_classical(n, m, x, "Euler")
        assert (r.lhs, r.rhs) == (c.lhs, c.rhs)


class TestExplicitForms:
    def test_euler_form_n0(self):
        p = Params(F(2, 3), F(-4))
        r = ids.check_explicit_euler_form(0, p, 5)
        assert r.equal and r.lhs == (2 - p.mu) / (p.lam + 1 - p.mu)

    def test_euler_form_bernoulli_singular_rejected(self):
        with pytest.raises(ParameterError):
            ids.check_explicit_euler_form(2, Params(1, 2), F(1, 2))
        assert ids.check_explicit_euler_form(2, Params(3, 2), F(1, 2)).equal

    def test_euler_form_value(self):
        r = ids.check_explicit_euler_form(1, Params(2, 0), 0)
        assert r.equal and r.lhs == F(-4, 9)

    def test_convex_mu0(self):
        for n in range(6):
            assert ids.check_convex_combination(n, Params(1, 0), F(2, 7)).equal

    def test_convex_bernoulli(self):
        r = ids.check_convex_combination(2, Params(3, 2), F(1, 2))
        assert r.equal and r.lhs == -1

    def test_convex_brute(self):
        # (lambda=2, mu=3) has a pole; (5, 3) is the nearest admissible pair
        assert ids.check_convex_combination(3, Params(5, 3), 1).equal

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 12), regular_params(), small)
    def test_property(self, n, p, x):
        assert ids.check_explicit_euler_form(n, p, x).equal
        assert ids.check_convex_combination(n, p, x).equal


class TestUpsilon:
    def test_n1_euler_line(self):
        for variant in ids.UPSILON_VARIANTS:
            r = ids.check_upsilon_identity(1, Params(1, 0), 1, variant)
            assert r.rhs == -2 and r.equal

    def test_n1_rhs_at_zero(self):
        r = ids.check_upsilon_identity(1, Params(1, 0), 0, "Rescaled")
        assert r.rhs == -2

    def test_printed_rhs_fails_for_both_variants(self):
        p = Params(5, 3)
        reports = [ids.check_upsilon_identity(2, p, F(1, 2), v) for v in ids.UPSILON_VARIANTS]
        assert [r.equal for r in reports] == [False, False]
        assert reports[1].rhs == -5
        assert all(r.note for r in reports)

    def test_corrected_rhs_selects_rescaled(self):
        p = Params(5, 3)
        asp = ids.check_upsilon_identity(2, p, F(1, 2), "AsPrinted", rhs_form="corrected")
        res = ids.check_upsilon_identity(2, p, F(1, 2), "Rescaled", rhs_form="corrected")
        assert res.equal and res.rhs == -2 and res.note is None
        assert not asp.equal and asp.identity_id == "upsilon:AsPrinted:corrected"

    def test_rejects(self):
        with pytest.raises(ValueError):
            ids.check_upsilon_identity(0, Params(1, 0), 1, "Rescaled")
        with pytest.raises(ParameterError):
            ids.check_upsilon_identity(2, Params(2, 3), 1, "Rescaled")
        with pytest.raises(ValueError):
            ids.check_upsilon_identity(2, Params(3, 0), 1, "Literal")

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 8), regular_params(), small)
    def test_rescaled_corrected_property(self, n, p, x):
        assert ids.check_upsilon_identity(n, p, x, "Rescaled", rhs_form="corrected").equal

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 6), regular_params(), small)
    def test_variants_agree_at_mu0(self, n, p, x):
        p = Params(p.lam if p.lam != -1 else 2, 0)
        a = ids.check_upsilon_identity(n, p, x, "AsPrinted")
        b = ids.check_upsilon_identity(n, p, x, "Rescaled")
        assert a.equal and b.equal and a.lhs == b.lhs


class TestCalculus:
    def test_derivative_l0(self):
        assert ids.check_derivative(5, 0, Params(F(2, 3), F(1, 4))).equal

    def test_derivative_euler(self):
        r = ids.check_derivative(3, 1, Params(1, 0))
        assert r.equal and r.rhs == Poly([0, -3, 3]) * 1

    def test_over_differentiation(self):
        r = ids.check_derivative(2, 3, Params(F(-7, 2), 5))
        assert r.equal and r.lhs.is_zero() and r.rhs.is_zero()

    def test_integral_empty_interval(self):
        r = ids.check_integral(4, Params(3, F(1, 2)), F(2, 3), F(2, 3))
        assert r.equal and r.lhs == 0

    def test_integral_bernoulli(self):
        r = ids.check_integral(1, Params(1, 2), 0, 1)
        assert r.equal and r.lhs == 0

    def test_integral_apostol_euler(self):
        r = ids.check_integral(2, Params(2, 0), F(1, 2), F(3, 2))
        assert r.equal and r.lhs == F(-1, 54)

    def test_shifted_printed_is_erratum(self):
        r = ids.check_integral_shifted(1, Params(1, 0), 0, 1)
        assert not r.equal and (r.lhs, r.rhs) == (0, F(1, 4))
        assert "C(n+1,k)" in r.note

    def test_shifted_n0_and_y0_agree(self):
        p = Params(F(4, 3), F(-1, 2))
        assert ids.check_integral_shifted(0, p, F(1, 5), F(7, 3)).equal
        assert ids.check_integral_shifted(5, p, F(1, 5), 0).equal

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 12), regular_params(), small, small)
    def test_integral_property(self, n, p, x, y):
        assert ids.check_integral(n, p, x, y).equal
        assert ids.check_integral_shifted(n, p, x, y, form="corrected").equal


class TestRecurrence:
    def test_n0(self):
        r = ids.check_recurrence_th3(0, Params(1, 0), 0)
        assert r.equal and r.lhs == r.rhs == F(-1, 2)

    @pytest.mark.parametrize("n,p,x", [(1, Params(5, 3), F(1, 2)), (2, Params(1, 4), 0)])
    def test_instances(self, n, p, x):
        assert ids.check_recurrence_th3(n, p, x).equal

    @pytest.mark.parametrize("p", [Params(3, 2), Params(1, 2), Params(2, 3)])
    def test_rejects(self, p):
        with pytest.raises(ParameterError):
            ids.check_recurrence_th3(1, p, 0)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 8), regular_params().filter(lambda p: p.mu != 2), small)
    def test_property(self, n, p, x):
        assert ids.check_recurrence_th3(n, p, x).equal


class TestUmbral:
    def test_translation(self):
        r = ids.check_umbral_translation(0, Params(F(5, 2), 7), 3)
        assert r.equal
        r = ids.check_umbral_translation(2, Params(1, 2), 0)
        assert r.equal and r.lhs == F(1, 6)
        r = ids.check_umbral_translation(3, Params(2, 0), F(1, 3))
        assert r.equal and r.lhs == F(-4, 81)
        assert ids.check_umbral_translation(9, Params(F(-3, 8), F(5, 6)), 0, polynomial=True).equal

    def test_cross(self):
        p = Params(F(3, 4), F(-1, 3))
        r = ids.check_umbral_cross(4, 0, p, F(1, 2), 0)
        assert r.equal and r.lhs == r.rhs == unified_poly(p, 4)(F(1, 2))
        r = ids.check_umbral_cross(2, 1, Params(1, 0), 0, 1)
        assert r.equal and r.lhs == F(-1, 4)
        assert ids.check_umbral_cross(3, 2, Params(5, 3), F(1, 2), F(-1, 3)).equal

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 8), st.integers(0, 8), regular_params(), small, small)
    def test_cross_symmetry(self, n, m, p, x, y):
        a = ids.check_umbral_cross(n, m, p, x, y)
        b = ids.check_umbral_cross(m, n, p, x + y, -y)
        assert a.equal and b.equal
        assert (a.lhs, a.rhs) == (b.rhs, b.lhs)


def test_report_json():
    r = ids.check_derivative(2, 1, Params(1, 0))
    d = r.with_meta(seed=7, index=3).to_dict()
    text = json.dumps(d)
    assert json.loads(text)["lhs"] == ["-1", "2"]
    assert d["instance"] == {"n": 2, "l": 1, "lambda": "1", "mu": "0"}
    assert d["equal"] is True and d["seed"] == 7 and d["note"] is None


def test_erratum_note_only_on_failure():
    ok = ids.check_upsilon_identity(1, Params(3, F(1, 2)), 2, "Rescaled")
    assert ok.equal and ok.note is None and ok.documented
    bad = ids.check_upsilon_identity(3, Params(3, F(1, 2)), 2, "Rescaled")
    assert not bad.equal and bad.documented and bad.note == ids.ERRATA["upsilon:Rescaled"]

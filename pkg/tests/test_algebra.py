from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockosc.algebra import (
    DegenerateSpectrumError,
    LaurentPoly,
    Monomial,
    OperatorMatrix,
    Poly,
    QuasiMonomial,
    back_substitute,
    basis_transplant,
    quasi_monomial_expand,
    rat,
    rat_str,
)

rationals = st.fractions(
    min_value=-100, max_value=100, max_denominator=50
)


class TestRational:
    def test_parse_and_format_roundtrip(self):
        assert rat("15/8") == F(15, 8)
        assert rat("-4") == F(-4)
        assert rat_str(F(-4)) == "-4"
        assert rat_str(F(15, 8)) == "15/8"
        assert rat_str(F(-3, 6)) == "-1/2"

    def test_canonical_form(self):
        x = F(6, -8)
        assert x.denominator > 0
        assert (x.numerator, x.denominator) == (-3, 4)

    @given(rationals, rationals, rationals)
    def test_addition_associative(self, a, b, c):
        assert (a + b) + c == a + (b + c)

    @given(rationals.filter(lambda a: a != 0))
    def test_multiplicative_inverse(self, a):
        assert a * (1 / a) == 1


class TestPoly:
    def test_zero_degree_sentinel(self):
        assert Poly().degree is None
        assert Poly([0, 0]).degree is None
        assert Poly([0, 1]).degree == 1

    def test_trailing_zeros_stripped(self):
        assert Poly([1, 2, 0, 0]).coeffs == (F(1), F(2))

    def test_arithmetic(self):
        p = Poly([1, 1])
        assert p * p == Poly([1, 2, 1])
        assert p - p == Poly()
        assert p.scale(3) == Poly([3, 3])

    def test_shift_arg(self):
        p = Poly([0, 0, 1])  # y^2
        assert p.shift_arg(1) == Poly([1, 2, 1])
        assert p.shift_arg(F(-1, 2)) == Poly([F(1, 4), -1, 1])

    def test_scale_arg(self):
        assert Poly([1, 1, 1]).scale_arg(2) == Poly([1, 2, 4])

    def test_eval_horner(self):
        p = Poly([F(1, 2), -3, 1])
        assert p(F(1, 3)) == F(1, 2) - 1 + F(1, 9)

    def test_monic(self):
        assert Poly([2, 4]).monic() == Poly([F(1, 2), 1])
        with pytest.raises(ValueError):
            Poly().monic()


class TestLaurentPoly:
    def test_no_zero_coefficients_stored(self):
        p = LaurentPoly({-2: 1, 0: 0, 3: F(1, 2)})
        assert set(p.terms) == {-2, 3}

    def test_mul_with_poles(self):
        p = LaurentPoly({-1: 1}) * LaurentPoly({1: 2, 2: 3})
        assert p == LaurentPoly({0: 2, 1: 3})

    def test_to_poly_rejects_poles(self):
        with pytest.raises(ValueError):
            LaurentPoly({-1: 1}).to_poly()

    def test_scale_arg_negative_powers(self):
        p = LaurentPoly({-1: 1, 2: 1})
        assert p.scale_arg(2) == LaurentPoly({-1: F(1, 2), 2: 4})

    def test_derivative(self):
        p = LaurentPoly({-1: 1, 0: 5, 2: 3})
        assert p.derivative() == LaurentPoly({-2: -1, 1: 6})


class TestQuasiMonomial:
    def test_empty_product(self):
        assert quasi_monomial_expand(0, 1) == Poly.one()

    def test_single_factor(self):
        assert quasi_monomial_expand(1, F(7, 3)) == Poly([0, 1])

    def test_cubic_expansion(self):
        # y(y-1)(y-2) expanded by hand.
        assert quasi_monomial_expand(3, 1) == Poly([0, 2, -3, 1])

    def test_delta_zero_collapses_to_monomial(self):
        assert quasi_monomial_expand(5, 0) == Poly.monomial(5)

    @pytest.mark.parametrize("delta", [F(1), F(1, 2), F(-1, 3)])
    @pytest.mark.parametrize("n", range(8))
    def test_monic_of_exact_degree(self, n, delta):
        p = quasi_monomial_expand(n, delta)
        assert p.degree == n
        assert p.leading == 1

    @pytest.mark.parametrize("delta", [F(1), F(1, 2), F(-1, 3)])
    def test_roots_are_grid_points(self, delta):
        for n in range(1, 9):
            p = quasi_monomial_expand(n, delta)
            for k in range(n):
                assert p(k * delta) == 0


class TestBasisTransplant:
    def test_quasi_to_monomial_by_hand(self):
        # 1 + y(y-1) = y^2 - y + 1
        out = basis_transplant([1, 0, 1], QuasiMonomial(F(1)), Monomial())
        assert out == Poly([1, -1, 1])

    def test_monomial_identity(self):
        coeffs = [F(3), F(-1, 2), F(0), F(7)]
        assert basis_transplant(coeffs, Monomial(), Monomial()) == Poly(coeffs)

    @pytest.mark.parametrize("delta", [F(1), F(5, 7), F(-2)])
    def test_degree_one_is_basis_independent(self, delta):
        assert basis_transplant([0, 1], QuasiMonomial(delta), Monomial()) == Poly([0, 1])

    @given(
        st.lists(rationals, max_size=16),
        st.sampled_from([F(1), F(1, 2), F(-1, 3)]),
    )
    @settings(max_examples=60)
    def test_round_trip_is_identity(self, coeffs, delta):
        forward = basis_transplant(coeffs, QuasiMonomial(delta), Monomial())
        back = basis_transplant(forward, Monomial(), QuasiMonomial(delta))
        assert back == Poly(coeffs)

    @given(
        st.lists(rationals, max_size=12),
        st.sampled_from([F(1), F(1, 2)]),
        st.sampled_from([F(-1, 3), F(3)]),
    )
    @settings(max_examples=40)
    def test_round_trip_between_quasi_bases(self, coeffs, d1, d2):
        forward = basis_transplant(coeffs, QuasiMonomial(d1), QuasiMonomial(d2))
        back = basis_transplant(forward, QuasiMonomial(d2), QuasiMonomial(d1))
        assert back == Poly(coeffs)


class TestBackSubstitute:
    def matrix_hf_diff_p2(self):
        # Columns are the images of 1, y, y^2 under 4y f'' - 4(y - 1/2) f'.
        return OperatorMatrix(
            [[0, 2, 0], [0, -4, 12], [0, 0, -8]], Monomial()
        )

    def test_level_one_eigenvector(self):
        v = back_substitute(self.matrix_hf_diff_p2(), -4, 1)
        assert v == Poly([F(-1, 2), 1])

    def test_identity_pivot_zero(self):
        ident = OperatorMatrix([[1, 0], [0, 2]], Monomial())
        assert back_substitute(ident, 1, 0) == Poly.one()

    def test_degenerate_diagonal_raises(self):
        m = OperatorMatrix([[0, 1], [0, 0]], Monomial())
        with pytest.raises(DegenerateSpectrumError):
            back_substitute(m, 0, 1)

    def test_remultiplication_exact(self):
        m = self.matrix_hf_diff_p2()
        for pivot, value in enumerate([F(0), F(-4), F(-8)]):
            v = back_substitute(m, value, pivot)
            image = m.apply(v.coeffs)
            assert image == [value * c for c in list(v.coeffs) + [F(0)] * (3 - len(v.coeffs))]

    def test_pivot_mismatch_rejected(self):
        with pytest.raises(ValueError):
            back_substitute(self.matrix_hf_diff_p2(), -3, 1)


class TestOperatorMatrix:
    def test_must_be_square(self):
        with pytest.raises(ValueError):
            OperatorMatrix([[1, 2]], Monomial())

    def test_apply_pads_short_vectors(self):
        m = OperatorMatrix([[1, 2], [0, 3]], Monomial())
        assert m.apply([1]) == [F(1), F(0)]

    def test_apply_rejects_long_vectors(self):
        m = OperatorMatrix([[1]], Monomial())
        with pytest.raises(ValueError):
            m.apply([1, 2])

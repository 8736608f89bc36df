import random
from fractions import Fraction as F

import pytest

from fockosc.algebra import LaurentPoly, Monomial, Poly, QuasiMonomial
from fockosc.fock import AlgebraMismatchError, FockPoly, build_hf, build_hg, q_int
from fockosc.realize import (
    Differential,
    FiniteDifference,
    QDilatation,
    UnsupportedDegreeError,
    apply_a,
    apply_b,
    apply_op,
    heisenberg_residual,
    realize_matrix,
    stencil_of,
    vacuum_image,
)

DELTAS = [F(1), F(1, 2), F(-1, 3)]
QS = [F(2), F(1, 2), F(3, 7)]
PS = [F(0), F(1), F(5, 2)]


def random_polys(count, max_degree, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        degree = rng.randint(0, max_degree)
        coeffs = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(degree + 1)]
        coeffs[degree] = coeffs[degree] or F(1)
        out.append(Poly(coeffs))
    return out


class TestRealizationParams:
    def test_fd_rejects_zero_step(self):
        with pytest.raises(ValueError):
            FiniteDifference(0)

    @pytest.mark.parametrize("q", [0, 1])
    def test_qdil_rejects_degenerate_parameter(self, q):
        with pytest.raises(ValueError):
            QDilatation(q)


class TestGeneratorActions:
    def test_differential_pair(self):
        f = Poly([1, 2, 3])
        assert apply_a(Differential(), f) == Poly([2, 6])
        assert apply_b(Differential(), f) == Poly([0, 1, 2, 3])

    def test_fd_b_is_shifted_multiplication(self):
        # y(1 - d D-) f collapses to y * f(y - d).
        d = F(1, 2)
        f = Poly([0, 0, 1])
        assert apply_b(FiniteDifference(d), f) == Poly.monomial(1) * f.shift_arg(-d)

    def test_qdil_a_on_monomials(self):
        q = F(3, 7)
        r = QDilatation(q)
        for k in range(6):
            image = apply_a(r, Poly.monomial(k))
            expected = Poly.monomial(k - 1, q_int(k, q)) if k else Poly()
            assert image == expected


class TestHeisenbergResidual:
    def test_differential_cubic(self):
        assert heisenberg_residual(Differential(), 1, Poly.monomial(3)).is_zero

    @pytest.mark.parametrize("delta", DELTAS)
    def test_fd_random_degree_15(self, delta):
        for f in random_polys(25, 15, seed=101):
            assert heisenberg_residual(FiniteDifference(delta), 1, f).is_zero

    def test_qdil_quartic(self):
        assert heisenberg_residual(QDilatation(F(3, 7)), F(3, 7), Poly.monomial(4)).is_zero

    @pytest.mark.parametrize("q", [F(2), F(1, 3), F(7, 5)])
    def test_qdil_random(self, q):
        for f in random_polys(25, 15, seed=202):
            assert heisenberg_residual(QDilatation(q), q, f).is_zero

    def test_wrong_bracket_parameter_rejected(self):
        with pytest.raises(ValueError):
            heisenberg_residual(Differential(), 2, Poly.one())

    def test_flipped_dilatation_sign_breaks_the_relation(self):
        # With denominator y(1-q) the bracket would come out as -1, not 1:
        # equivalently, a.b - q.b.a applied through the corrected operators
        # is +1, never -1.
        r = QDilatation(F(2))
        f = Poly.monomial(3)
        ab = apply_a(r, apply_b(r, f))
        ba = apply_b(r, apply_a(r, f))
        assert ab - ba.scale(F(2)) == f  # and not -f


class TestVacuum:
    @pytest.mark.parametrize(
        "r", [Differential(), FiniteDifference(F(1, 2)), QDilatation(F(5, 2))]
    )
    def test_vacuum_is_annihilated(self, r):
        assert vacuum_image(r).is_zero


class TestRealizeMatrix:
    def test_differential_hf_small(self):
        m = realize_matrix(build_hf(0), Differential(), 2)
        assert m.rows == (
            (F(0), F(2), F(0)),
            (F(0), F(-4), F(12)),
            (F(0), F(0), F(-8)),
        )
        assert m.basis == Monomial()

    @pytest.mark.parametrize("p", PS)
    @pytest.mark.parametrize("delta", DELTAS)
    def test_transplant_principle_hf(self, p, delta):
        md = realize_matrix(build_hf(p), Differential(), 12)
        mfd = realize_matrix(build_hf(p), FiniteDifference(delta), 12)
        assert mfd.rows == md.rows
        assert mfd.basis == QuasiMonomial(delta)

    @pytest.mark.parametrize("delta", DELTAS)
    def test_transplant_principle_random_lowering_words(self, delta):
        # Any element whose words all carry a lowering power acts the same
        # on quasi-monomials as its differential form does on monomials.
        rng = random.Random(77)
        for _ in range(10):
            terms = {
                (rng.randint(0, 2), rng.randint(1, 2)): F(rng.randint(-5, 5) or 1)
                for _ in range(rng.randint(1, 3))
            }
            h = FockPoly(terms)
            md = realize_matrix(h, Differential(), 9)
            mfd = realize_matrix(h, FiniteDifference(delta), 9)
            assert mfd.rows == md.rows

    @pytest.mark.parametrize("q", QS)
    def test_qdil_diagonal_is_deformed(self, q):
        m = realize_matrix(build_hf(0, q=q), QDilatation(q), 8)
        assert m.diagonal() == tuple(-4 * q_int(n, q) for n in range(9))

    def test_qdil_small_example(self):
        m = realize_matrix(build_hf(0, q=2), QDilatation(2), 2)
        assert m.diagonal() == (F(0), F(-4), F(-12))

    def test_fock_action_matches_realized_matrix(self):
        # Acting on b^j through the vacuum is the same linear map as the
        # dilatation realization acting on y^j.
        from fockosc.fock import act_on_poly

        q = F(3, 7)
        h = build_hf(F(1), q=q)
        m = realize_matrix(h, QDilatation(q), 6)
        for j in range(7):
            image = act_on_poly(h, Poly.monomial(j))
            padded = list(image.coeffs) + [F(0)] * (7 - len(image.coeffs))
            assert padded == list(m.column(j))

    def test_context_mismatch_rejected(self):
        with pytest.raises(AlgebraMismatchError):
            realize_matrix(build_hf(0, q=2), Differential(), 3)
        with pytest.raises(AlgebraMismatchError):
            realize_matrix(build_hf(0), QDilatation(2), 3)

    @pytest.mark.parametrize("side", [1, -1])
    def test_q_limit_of_dilatation_entries(self, side):
        # Entries approach the differential ones linearly in (q - 1) as q
        # walks toward 1 along q = 1 +/- 1/2^k.
        target = realize_matrix(build_hf(0), Differential(), 6)
        gaps = []
        for k in range(1, 7):
            q = 1 + side * F(1, 2**k)
            m = realize_matrix(build_hf(0, q=q), QDilatation(q), 6)
            gaps.append(
                max(
                    abs(m.rows[i][j] - target.rows[i][j])
                    for i in range(7)
                    for j in range(7)
                )
            )
        assert all(later < earlier for earlier, later in zip(gaps, gaps[1:]))
        # Linear-in-(q-1) convergence: two halvings of (q-1) shrink the
        # gap by better than half once the tail is reached.
        assert 2 * gaps[-1] < gaps[-3]

    def test_sum_form_at_q_one_is_exactly_differential(self):
        # The deformed-integer sum form is defined at q = 1, where the
        # vacuum action reproduces the differential matrix exactly.
        from fockosc.fock import act_on_poly

        target = realize_matrix(build_hf(0), Differential(), 6)
        h = build_hf(0, q=1)
        for j in range(7):
            image = act_on_poly(h, Poly.monomial(j))
            padded = list(image.coeffs) + [F(0)] * (7 - len(image.coeffs))
            assert padded == list(target.column(j))

    def test_degree_non_increase_of_hf(self):
        m = realize_matrix(build_hf(F(5, 2)), Differential(), 10)
        for j in range(11):
            column = m.column(j)
            assert all(column[i] == 0 for i in range(j + 1, 11))


class TestStencils:
    def test_three_point_hf_delta1(self):
        st = stencil_of(build_hf(0), FiniteDifference(F(1)))
        assert st.offsets == (-1, 0, 1)
        assert st.coeff(1) == LaurentPoly({0: 2, 1: 4})
        assert st.coeff(0) == LaurentPoly({0: -2, 1: -12})
        assert st.coeff(-1) == LaurentPoly({1: 8})

    @pytest.mark.parametrize("delta", DELTAS)
    @pytest.mark.parametrize("p", PS)
    def test_three_point_general(self, p, delta):
        st = stencil_of(build_hf(p), FiniteDifference(delta))
        d = delta
        half = p + F(1, 2)
        assert st.coeff(1) == LaurentPoly({0: 4 * half / d, 1: 4 / d**2})
        assert st.coeff(0) == LaurentPoly(
            {0: -4 * half / d, 1: -4 / d - 8 / d**2}
        )
        assert st.coeff(-1) == LaurentPoly({1: 4 / d + 4 / d**2})

    @pytest.mark.parametrize("delta", DELTAS)
    @pytest.mark.parametrize("B", [F(1), F(-2, 3)])
    def test_four_point_hg(self, B, delta):
        st = stencil_of(build_hg(0, B), FiniteDifference(delta))
        assert st.offsets == (-1, 0, 1, 2)
        assert st.coeff(2) == LaurentPoly({0: 4 * B / delta**2})

    @pytest.mark.parametrize("q", QS)
    @pytest.mark.parametrize("p", PS)
    def test_dilatation_three_point(self, p, q):
        st = stencil_of(build_hf(p, q=q), QDilatation(q))
        assert st.offsets == (0, 1, 2)
        assert st.coeff(2) == LaurentPoly({-1: 4 / (q * (q - 1) ** 2)})
        # Middle and stationary coefficients from the composition:
        half = p + F(1, 2)
        c1 = LaurentPoly(
            {-1: -4 * (1 + q - half * q * (q - 1)) / (q * (q - 1) ** 2), 0: F(-4) / (q - 1)}
        )
        c0 = LaurentPoly({-1: 4 * (1 - half * (q - 1)) / (q - 1) ** 2, 0: F(4) / (q - 1)})
        assert st.coeff(1) == c1
        assert st.coeff(0) == c0

    def test_row_sum_annihilates_constants(self):
        st = stencil_of(build_hf(F(5, 2)), FiniteDifference(F(1, 2)))
        total = LaurentPoly()
        for _, c in st.terms:
            total = total + c
        assert total.is_zero

    @pytest.mark.parametrize("p", PS)
    @pytest.mark.parametrize("delta", DELTAS)
    def test_two_path_equality_fd(self, p, delta):
        # Stencil application and matrix application agree on every basis
        # element of the quasi-monomial flag.
        from fockosc.algebra import basis_element, from_monomial_coeffs

        h = build_hf(p)
        st = stencil_of(h, FiniteDifference(delta))
        m = realize_matrix(h, FiniteDifference(delta), 16)
        basis = QuasiMonomial(delta)
        for j in range(17):
            image = st.apply(basis_element(basis, j))
            vec = from_monomial_coeffs(image, basis)
            padded = list(vec.coeffs) + [F(0)] * (17 - len(vec.coeffs))
            assert padded == list(m.column(j))

    @pytest.mark.parametrize("delta", DELTAS)
    @pytest.mark.parametrize("B", [F(1), F(-2, 3)])
    def test_two_path_equality_fd_four_point(self, B, delta):
        from fockosc.algebra import basis_element, from_monomial_coeffs

        h = build_hg(F(5, 2), B)
        st = stencil_of(h, FiniteDifference(delta))
        m = realize_matrix(h, FiniteDifference(delta), 16)
        basis = QuasiMonomial(delta)
        for j in range(17):
            image = st.apply(basis_element(basis, j))
            vec = from_monomial_coeffs(image, basis)
            padded = list(vec.coeffs) + [F(0)] * (17 - len(vec.coeffs))
            assert padded == list(m.column(j))

    @pytest.mark.parametrize("q", QS)
    @pytest.mark.parametrize("B", [F(0), F(1), F(-2, 3)])
    def test_two_path_equality_qdil(self, q, B):
        h = build_hg(F(1), B, q=q)
        st = stencil_of(h, QDilatation(q))
        m = realize_matrix(h, QDilatation(q), 16)
        for j in range(17):
            image = st.apply(Poly.monomial(j))
            padded = list(image.coeffs) + [F(0)] * (17 - len(image.coeffs))
            assert padded == list(m.column(j))

    def test_qdil_stencil_of_hg_keeps_three_points(self):
        # The shift coefficient B only reshuffles coefficients; scaling
        # stencils keep offsets {0, 1, 2}.
        st = stencil_of(build_hg(0, F(1), q=F(2)), QDilatation(F(2)))
        assert st.offsets == (0, 1, 2)

    def test_negative_delta_matches_positive(self):
        ma = realize_matrix(build_hf(1), FiniteDifference(F(1, 2)), 10)
        mb = realize_matrix(build_hf(1), FiniteDifference(F(-1, 2)), 10)
        assert ma.diagonal() == mb.diagonal()

    def test_differential_has_no_stencil(self):
        with pytest.raises(ValueError):
            stencil_of(build_hf(0), Differential())

    def test_unsupported_lowering_degree(self):
        h = FockPoly({(0, 3): 1})
        with pytest.raises(UnsupportedDegreeError):
            stencil_of(h, FiniteDifference(F(1)))


class TestFlagInvariance:
    def test_raising_generator_subspace_invariance(self):
        # The spin-2 raising generator leaves P_2 invariant but pushes
        # y^4 out of P_4; exact image degrees show the difference.
        from fockosc.fock import sl2_generators

        jplus2 = sl2_generators(2).jplus
        r = Differential()
        images_p2 = [apply_op(jplus2, r, Poly.monomial(k)) for k in range(3)]
        assert all(im.is_zero or im.degree <= 2 for im in images_p2)
        overflow = apply_op(jplus2, r, Poly.monomial(4))
        assert overflow.degree == 5

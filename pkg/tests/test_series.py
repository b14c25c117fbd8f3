"""Poincare polynomials and the closed product-formula checks."""

import pytest

from quotcells.series import (filt_poincare, filt_presentation_check,
                              infinite_limits_check, infinite_quot_series,
                              poly_coeff, poly_trim, quot_poincare,
                              quot_series_check, symmetric_product_poincare,
                              tensor_model_series)


class TestSymmetricProduct:
    def test_genus_zero_is_projective_space(self):
        for m in range(5):
            assert symmetric_product_poincare(0, m) == [1, 0] * m + [1]

    def test_curve_itself(self):
        assert symmetric_product_poincare(1, 1) == [1, 2, 1]
        assert symmetric_product_poincare(2, 1) == [1, 4, 1]

    def test_empty_product(self):
        assert symmetric_product_poincare(3, 0) == [1]

    @pytest.mark.parametrize("g,m", [(0, 3), (0, 4), (1, 2), (1, 3), (1, 4),
                                     (2, 2), (2, 4)])
    def test_against_invariant_projector(self, g, m):
        # independent route: dimensions of the symmetric invariants of
        # H*(C)^(x m), degree by degree, via the averaging projector
        from fractions import Fraction
        from math import factorial
        from quotcells.ring import (RingContext, RingElement,
                                    letter_monomials, permute_factors)
        from quotcells.weights import permutations
        ctx = RingContext(genus=g, factors=m)
        dims = []
        for d in range(2 * m + 1):
            total = 0
            for sigma in permutations(m):
                for letters in letter_monomials(ctx, d):
                    mono = (letters, (0,) * m, ())
                    image = permute_factors(sigma, RingElement(ctx, {mono: Fraction(1)}))
                    total += image.coeffs.get(mono, 0)
            dims.append(int(Fraction(total, factorial(m))))
        assert poly_trim(dims) == symmetric_product_poincare(g, m)


class TestQuot:
    def test_rank_one_is_symmetric_product(self):
        for g in (0, 1, 2):
            for l in range(4):
                assert quot_poincare(g, 1, l) == symmetric_product_poincare(g, l)

    def test_two_strata_example(self):
        assert quot_poincare(0, 2, 1) == [1, 0, 2, 0, 1]

    def test_length_zero(self):
        assert quot_poincare(2, 3, 0) == [1]

    @pytest.mark.parametrize("g", [0, 1, 2])
    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_product_formula(self, g, r):
        residuals = quot_series_check(g, r, 4, 10)
        assert all(not p for p in residuals), (g, r, residuals)


class TestFilt:
    def test_small_case(self):
        assert filt_poincare(0, 2, 1) == [1, 0, 2, 0, 1]

    def test_rank_one(self):
        assert filt_poincare(1, 1, 2) == poly_trim(
            [1, 4, 6, 4, 1])  # (1+2t+t^2)^2

    def test_zero_factors(self):
        assert filt_poincare(2, 3, 0) == [1]

    @pytest.mark.parametrize("g", [0, 1, 2])
    @pytest.mark.parametrize("r", [1, 2, 3])
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_presentation(self, g, r, n):
        assert not filt_presentation_check(g, r, n)


class TestStrataDimensions:
    def test_single_factor(self):
        # strata polynomial vs ranks of the classes w^l * a
        from quotcells.ring import RingContext
        from quotcells.series import decomposition_dimension_check
        ctx = RingContext(genus=1, factors=1)
        report = decomposition_dimension_check(ctx, 3, 6)
        assert report["pass"], report

    def test_degree_zero(self):
        from quotcells.ring import RingContext
        from quotcells.series import decomposition_dimension_check
        ctx = RingContext(genus=0, factors=2)
        report = decomposition_dimension_check(ctx, 2, 0)
        assert report["per_degree"][0]["strata"] == 1
        assert report["per_degree"][0]["rank"] == 1


class TestInfiniteLimits:
    def test_constant_term(self):
        assert infinite_quot_series(1, 0) == [1]

    def test_first_betti_number(self):
        for g in (0, 1, 2):
            assert infinite_quot_series(g, 1)[1] == 2 * g

    def test_genus_zero_values(self):
        # prod 1/((1-t^{2h})(1-t^{2h+2})) for h >= 0 starts
        # 1 + t^2 + 3 t^4 + ...
        series = infinite_quot_series(0, 6)
        assert series[0] == 1 and series[2] == 2

    def test_tensor_model_agrees(self):
        for g in (0, 1):
            assert tensor_model_series(g, 10) == infinite_quot_series(g, 10)

    @pytest.mark.parametrize("g", [0, 1])
    def test_stabilization(self, g):
        report = infinite_limits_check(g, 8)
        assert report["pass"], report

    def test_diagonal_values_stabilize_explicitly(self):
        g = 1
        limit = infinite_quot_series(g, 4)
        for k in range(5):
            for r in range(k + 1, k + 4):
                assert poly_coeff(quot_poincare(g, r, r), k) == limit[k]

"""Root extraction, the special-basis machinery, and certified factorizations."""

import math
import random
from fractions import Fraction

import pytest

from recform import (
    RecurrenceRelation,
    SequenceFamily,
    UniPoly,
    block_matrix_b,
    build_form,
    char_roots,
    decompose_form,
    expand_linear_factors,
    orthonormal_factorization,
    special_basis_matrix,
)
from recform.errors import DependentInitialsError, PrecisionError

from conftest import approx_matrix_close, binary_family, grid_matmul, random_family

GOLDEN_RATIO_RELATION = RecurrenceRelation((1, 1))  # x^2 - x - 1
DOUBLE_ROOT_RELATION = RecurrenceRelation((-4, 4))  # (x - 2)^2
SPLIT_RELATION = RecurrenceRelation((-10, 7))  # (x - 2)(x - 5)
NARAYANA_RELATION = RecurrenceRelation((1, 0, 1))  # x^3 - x^2 - 1


class TestCharRoots:
    def test_golden_ratio_pair(self):
        roots = char_roots(GOLDEN_RATIO_RELATION, precision=1e-12)
        assert [r.multiplicity for r in roots] == [1, 1]
        values = sorted(r.value.real for r in roots)
        sqrt5 = math.sqrt(5.0)
        assert abs(values[0] - (1 - sqrt5) / 2) < 1e-12
        assert abs(values[1] - (1 + sqrt5) / 2) < 1e-12
        assert all(r.value.imag == 0.0 for r in roots)

    def test_double_rational_root(self):
        roots = char_roots(DOUBLE_ROOT_RELATION)
        assert len(roots) == 1
        assert roots[0].is_exact
        assert roots[0].value == 2
        assert roots[0].multiplicity == 2

    def test_cubic_with_one_real_root(self):
        roots = char_roots(NARAYANA_RELATION, precision=1e-12)
        assert [r.multiplicity for r in roots] == [1, 1, 1]
        poly = NARAYANA_RELATION.char_poly()
        real = [r for r in roots if r.value.imag == 0.0]
        assert len(real) == 1
        assert abs(real[0].value.real - 1.4655712318767682) < 1e-10
        for r in roots:
            assert abs(poly.eval_complex(r.value.value)) <= 1e-10

    def test_conjugate_pairs_are_exact_mirrors(self):
        roots = char_roots(NARAYANA_RELATION)
        complexes = [r.value for r in roots if r.value.imag != 0.0]
        assert len(complexes) == 2
        assert complexes[0].value == complexes[1].value.conjugate()

    def test_unreachable_precision_reports_bounds(self):
        with pytest.raises(PrecisionError) as info:
            char_roots(NARAYANA_RELATION, precision=1e-40)
        assert info.value.best_bounds
        assert min(info.value.best_bounds) > 0


class TestSpecialBasis:
    def test_repeated_root_stripe(self):
        roots = char_roots(DOUBLE_ROOT_RELATION)
        grid = special_basis_matrix(DOUBLE_ROOT_RELATION, roots)
        assert grid == ((Fraction(1), Fraction(2)), (Fraction(0), Fraction(2)))

    def test_simple_rational_roots_give_vandermonde(self):
        roots = char_roots(SPLIT_RELATION)
        grid = special_basis_matrix(SPLIT_RELATION, roots)
        assert grid == ((Fraction(1), Fraction(2)), (Fraction(1), Fraction(5)))

    def test_cubic_vandermonde(self):
        roots = char_roots(NARAYANA_RELATION)
        grid = special_basis_matrix(NARAYANA_RELATION, roots)
        for row, datum in zip(grid, roots):
            alpha = datum.value.value
            assert abs(row[0].value - 1) < 1e-12
            assert abs(row[1].value - alpha) < 1e-10
            assert abs(row[2].value - alpha * alpha) < 1e-10


class TestBlockMatrix:
    def test_repeated_root_block(self):
        roots = char_roots(DOUBLE_ROOT_RELATION)
        grid = block_matrix_b(roots)
        assert grid == ((Fraction(2), Fraction(0)), (Fraction(2), Fraction(2)))

    def test_simple_roots_diagonal(self):
        roots = char_roots(SPLIT_RELATION)
        grid = block_matrix_b(roots)
        assert grid == ((Fraction(2), Fraction(0)), (Fraction(0), Fraction(5)))

    def test_det_equals_exponential_base(self):
        roots = char_roots(DOUBLE_ROOT_RELATION)
        grid = block_matrix_b(roots)
        assert grid[0][0] * grid[1][1] == DOUBLE_ROOT_RELATION.base == 4

    @pytest.mark.parametrize(
        "relation", [SPLIT_RELATION, DOUBLE_ROOT_RELATION, NARAYANA_RELATION]
    )
    def test_shifted_grid_identity(self, relation):
        # the block matrix steps the special basis: shifted grid == B . grid
        roots = char_roots(relation)
        grid = special_basis_matrix(relation, roots)
        shifted = special_basis_matrix(relation, roots, start=1)
        product = grid_matmul(block_matrix_b(roots), grid)
        assert approx_matrix_close(shifted, product)


class TestDecomposeForm:
    def test_split_rational_roots_exact_axes(self):
        family = binary_family(7, -10, [(1, 2), (1, 5)])
        decomposition = decompose_form(family)
        assert decomposition.residual == 0.0
        assert decomposition.is_exact
        vectors = sorted(f.coefficients for f in decomposition.factors)
        assert vectors == [(0, 1), (1, 0)]

    def test_repeated_root_single_factor(self):
        family = binary_family(2, -1, [(2, 3), (4, 5)])
        decomposition = decompose_form(family)
        assert decomposition.residual == 0.0
        (factor,) = decomposition.factors
        assert factor.multiplicity == 2
        assert factor.coefficients == (Fraction(-1, 2), Fraction(1, 2))
        expanded = expand_linear_factors([(factor.coefficients, 2)], 2)
        assert expanded == build_form(family).form_f

    def test_narayana_matches_published_directions(self, narayana):
        decomposition = decompose_form(narayana)
        assert decomposition.residual <= 1e-9
        for factor in decomposition.factors:
            alpha = factor.source_root.value.value
            direction = (
                3 * alpha**2 + 3 * alpha - 2,
                -3 * alpha**2 + 3 * alpha + 2,
                3 * alpha**2 - 3 * alpha,
            )
            got = [c.value for c in factor.coefficients]
            scale = got[0] / direction[0]
            for g, d in zip(got, direction):
                assert abs(g - scale * d) <= 1e-8 * max(1.0, abs(g))

    def test_dependent_rows_rejected(self):
        family = SequenceFamily(RecurrenceRelation((1, 1)), [(1, 1), (3, 3)])
        with pytest.raises(DependentInitialsError):
            decompose_form(family)

    def test_residual_zero_whenever_roots_rational(self):
        # build relations from known rational roots, then factor random families
        rng = random.Random(6060)
        for _ in range(10):
            k = rng.randint(2, 3)
            poly = UniPoly([1])
            for _ in range(k):
                root = Fraction(rng.randint(-4, 4), rng.choice([1, 1, 2]))
                poly = poly * UniPoly([-root, 1])
            if poly.coefficient(0) == 0:
                continue
            gammas = [-poly.coefficient(0)] + [-poly.coefficient(i) for i in range(1, k)]
            relation = RecurrenceRelation(gammas)
            family = random_family(rng, k, height=5)
            family = SequenceFamily(relation, family.initial_matrix.entries)
            if family.delta() == 0:
                continue
            decomposition = decompose_form(family)
            assert decomposition.residual == 0.0
            assert decomposition.is_exact

    def test_cubic_with_repeated_root_stays_exact(self):
        # (x - 2)^2 (x - 3): the double root contributes one squared factor
        relation = RecurrenceRelation((12, -16, 7))
        family = SequenceFamily(relation, [(1, 0, 2), (0, 1, 1), (3, 1, 0)])
        decomposition = decompose_form(family)
        assert decomposition.residual == 0.0
        mults = sorted(f.multiplicity for f in decomposition.factors)
        assert mults == [1, 2]
        expanded = expand_linear_factors(
            [(f.coefficients, f.multiplicity) for f in decomposition.factors], 3
        )
        assert expanded == build_form(family).form_f

    def test_mixed_exact_and_approximate_roots(self):
        # (x - 1)(x^2 - x - 1): one rational root next to the golden-ratio pair
        relation = RecurrenceRelation((-1, 0, 2))
        roots = char_roots(relation)
        assert sorted(r.is_exact for r in roots) == [False, False, True]
        family = SequenceFamily(relation, [(1, 0, 2), (0, 1, 1), (3, 1, 0)])
        decomposition = decompose_form(family)
        assert not decomposition.is_exact
        assert decomposition.residual <= 1e-9

    def test_certification_on_random_families(self):
        rng = random.Random(8899)
        for _ in range(100):
            family = random_family(rng, rng.randint(2, 4), height=8)
            decomposition = decompose_form(family)
            assert decomposition.residual <= 1e-9

    def test_conjugate_factor_vectors(self, narayana):
        decomposition = decompose_form(narayana)
        pairs = [f for f in decomposition.factors if f.source_root.value.imag != 0.0]
        assert len(pairs) == 2
        lower, upper = sorted(pairs, key=lambda f: f.source_root.value.imag)
        for a, b in zip(lower.coefficients, upper.coefficients):
            assert abs(a.value - b.value.conjugate()) <= a.error_bound + b.error_bound + 1e-12


class TestOrthonormalFactorization:
    def test_golden_ratio_power_rows(self):
        decomposition = orthonormal_factorization(GOLDEN_RATIO_RELATION)
        assert decomposition.residual <= 1e-12
        product = 1.0
        for factor in decomposition.factors:
            assert abs(factor.coefficients[0].value - 1) < 1e-12
            product *= factor.coefficients[1].value
        # the two roots multiply to -B = -1
        assert abs(product - (-1.0)) < 1e-10

    def test_repeated_root_squared(self):
        decomposition = orthonormal_factorization(DOUBLE_ROOT_RELATION)
        (factor,) = decomposition.factors
        assert factor.multiplicity == 2
        assert factor.coefficients == (Fraction(1), Fraction(2))
        assert decomposition.residual == 0.0

    def test_cubic_vandermonde_rows(self):
        decomposition = orthonormal_factorization(NARAYANA_RELATION)
        assert decomposition.residual <= 1e-9
        for factor in decomposition.factors:
            alpha = factor.source_root.value.value
            assert abs(factor.coefficients[1].value - alpha) < 1e-10
            assert abs(factor.coefficients[2].value - alpha * alpha) < 1e-10

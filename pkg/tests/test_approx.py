"""Error-bound propagation of the approximate complex carrier."""

import threading
from fractions import Fraction

import pytest

from recform import ComplexApprox, RecurrenceRelation, Sequence, decompose_form
from recform.errors import CertificationError


class TestBounds:
    def test_exactly_representable_values_have_zero_bound(self):
        assert ComplexApprox.from_exact(3).error_bound == 0.0
        assert ComplexApprox.from_exact(Fraction(1, 2)).error_bound == 0.0

    def test_inexact_conversion_gets_a_bound(self):
        third = ComplexApprox.from_exact(Fraction(1, 3))
        assert third.error_bound > 0.0

    def test_addition_sums_bounds(self):
        a = ComplexApprox(1.0, 0.0, 1e-10)
        b = ComplexApprox(2.0, 0.0, 3e-10)
        assert (a + b).error_bound >= 4e-10

    def test_multiplication_product_rule(self):
        a = ComplexApprox(2.0, 0.0, 1e-10)
        b = ComplexApprox(3.0, 0.0, 1e-12)
        # |a| db + |b| da dominates
        assert (a * b).error_bound >= 2.0 * 1e-12 + 3.0 * 1e-10

    def test_powers_accumulate(self):
        a = ComplexApprox(2.0, 1.0, 1e-12)
        assert (a**3).error_bound > a.error_bound

    def test_bounds_must_be_finite(self):
        with pytest.raises(ValueError):
            ComplexApprox(1.0, 0.0, float("inf"))

    def test_mixed_arithmetic_promotes(self):
        a = ComplexApprox(1.5, 0.0, 1e-12)
        assert isinstance(Fraction(1, 2) * a, ComplexApprox)
        assert isinstance(Fraction(1, 2) + a, ComplexApprox)
        assert isinstance(Fraction(1, 2) - a, ComplexApprox)


class TestCertificationPayload:
    def test_residual_travels_with_the_error(self, narayana):
        with pytest.raises(CertificationError) as info:
            decompose_form(narayana, tolerance=1e-30)
        assert 0.0 < info.value.residual < 1e-9


class TestSequenceCacheConcurrency:
    def test_threaded_evaluation_is_consistent(self):
        seq = Sequence(RecurrenceRelation((1, 1)), (0, 1))
        results: dict[int, list] = {}
        errors = []

        def worker(tag: int):
            try:
                results[tag] = [seq.eval(n) for n in range(-200, 201)]
            except Exception as exc:  # pragma: no cover - failure path
                errors.append(exc)

        threads = [threading.Thread(target=worker, args=(i,)) for i in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert not errors
        baseline = results[0]
        assert all(results[tag] == baseline for tag in results)
        # spot check both branches of the recursion
        assert seq.eval(10) == 55
        assert seq.eval(-2) == -1

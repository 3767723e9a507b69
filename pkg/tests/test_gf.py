#!/usr/bin/env python3
"""
Unit tests for the finite field module.

Run with:
    python -m pytest tests/test_gf.py -v

Or standalone:
    python tests/test_gf.py
"""

import sys
from pathlib import Path

import numpy as np

# Add project root to path for standalone execution
sys.path.insert(0, str(Path(__file__).parent.parent))

from sylow.core.errors import FieldError
from sylow.gf import FieldElem, arith, is_irreducible, make_field, render


class TestPrimeField:
    """Tests for F_p with e = 1."""

    def test_inverse_of_two_in_f3(self):
        F = make_field(3)
        assert F.inv(2) == 2

    def test_half_in_f5(self):
        F = make_field(5)
        assert F.half == 3
        assert F.mul(F.half, 2) == 1

    def test_modulus_of_prime_field(self):
        assert make_field(7).modulus == (0, 1)

    def test_from_int_reduces_mod_p(self):
        F = make_field(5)
        assert F.from_int(-1) == 4
        assert F.from_int(12) == 2

    def test_trace_is_identity(self):
        F = make_field(5)
        assert [F.trace(a) for a in F.elements()] == [0, 1, 2, 3, 4]

    def test_inverse_of_zero_raises(self):
        F = make_field(3)
        try:
            F.inv(0)
            raise AssertionError("Should have raised FieldError")
        except FieldError:
            pass

    def test_even_characteristic_rejected(self):
        try:
            make_field(2)
            raise AssertionError("Should have raised FieldError")
        except FieldError:
            pass

    def test_composite_p_rejected(self):
        try:
            make_field(9)
            raise AssertionError("Should have raised FieldError")
        except FieldError:
            pass

    def test_fields_are_cached(self):
        assert make_field(3) is make_field(3)


class TestExtensionField:
    """Tests for F_9 = F_3[x]/(x^2 + 1)."""

    def test_modulus(self):
        assert make_field(3, 2).modulus == (1, 0, 1)

    def test_every_nonzero_element_is_invertible(self):
        F = make_field(3, 2)
        for a in F.nonzero():
            assert F.mul(a, F.inv(a)) == 1

    def test_x_squared_is_minus_one(self):
        F = make_field(3, 2)
        x = F.from_coeffs([0, 1])
        assert F.mul(x, x) == F.neg(1)

    def test_trace_of_one(self):
        # Tr(1) = e * 1 = 2 in F_3
        assert make_field(3, 2).trace(1) == 2

    def test_trace_is_additive(self):
        F = make_field(3, 2)
        for a in F.elements():
            for b in F.elements():
                assert F.trace(F.add(a, b)) == (F.trace(a) + F.trace(b)) % 3

    def test_render_lists_coefficients_lowest_first(self):
        F = make_field(3, 2)
        assert F.to_coeffs(5) == [2, 1]
        assert render(F, 5) == "2,1"

    def test_matmul_matches_scalar_products(self):
        F = make_field(3, 2)
        a = np.array([[1, 5], [0, 7]], dtype=np.int64)
        b = np.array([[3, 0], [8, 1]], dtype=np.int64)
        out = F.matmul(a, b)
        for r in range(2):
            for c in range(2):
                expected = F.add(F.mul(int(a[r, 0]), int(b[0, c])), F.mul(int(a[r, 1]), int(b[1, c])))
                assert out[r, c] == expected

    def test_zero_extension_degree_rejected(self):
        try:
            make_field(3, 0)
            raise AssertionError("Should have raised FieldError")
        except FieldError:
            pass

    def test_f25_multiplication(self):
        # modulus x^2 + x + 1, so x^2 = -x - 1
        F = make_field(5, 2)
        assert F.modulus == (1, 1, 1)
        x = F.from_coeffs([0, 1])
        assert F.mul(x, x) == F.from_coeffs([4, 4])
        assert all(F.pow(a, 24) == 1 for a in F.nonzero())

    def test_tables_are_read_only(self):
        F = make_field(3, 2)
        for table in (F.add_table, F.mul_table, F.neg_table, F.inv_table, F.trace_table):
            try:
                table[0] = 1
                raise AssertionError("Should have raised ValueError")
            except ValueError:
                pass


class TestIrreducibility:
    """Tests for the irreducibility check used to pick the modulus."""

    def test_x2_plus_1_over_f3(self):
        assert is_irreducible([1, 0, 1], 3)

    def test_x2_minus_1_over_f3(self):
        assert not is_irreducible([2, 0, 1], 3)

    def test_x2_plus_1_over_f5(self):
        # 2^2 = -1 in F_5
        assert not is_irreducible([1, 0, 1], 5)


class TestFieldElem:
    """Tests for the operator wrapper."""

    def test_operators(self):
        F = make_field(5)
        a = F.element(2)
        assert int(a * 3) == 1
        assert int(a + 4) == 1
        assert int(a - 3) == 4
        assert int(-a) == 3
        assert int(a / a) == 1
        assert int(a**2) == 4

    def test_reflected_operators(self):
        F = make_field(5)
        a = F.element(2)
        assert int(1 - a) == 4
        assert int(1 / a) == 3
        assert int(3 + a) == 0
        assert int(2 * a) == 4

    def test_arith_dispatch(self):
        F = make_field(3, 2)
        a, b = F.element(4), F.element(7)
        assert arith(a, b, "add") == a + b
        assert arith(a, None, "inv") == a.inverse()

    def test_arith_unknown_op(self):
        F = make_field(3)
        try:
            arith(F.element(1), F.element(1), "pow")
            raise AssertionError("Should have raised FieldError")
        except FieldError:
            pass

    def test_mixed_fields_rejected(self):
        a = FieldElem(make_field(3), 1)
        b = FieldElem(make_field(5), 1)
        try:
            a + b
            raise AssertionError("Should have raised FieldError")
        except FieldError:
            pass

    def test_element_out_of_range(self):
        try:
            make_field(3).element(3)
            raise AssertionError("Should have raised FieldError")
        except FieldError:
            pass


def run_tests():
    """Run all tests."""
    import traceback

    test_classes = [TestPrimeField, TestExtensionField, TestIrreducibility, TestFieldElem]
    passed = 0
    failed = 0

    for test_class in test_classes:
        print(f"\n{'='*60}")
        print(f"Running {test_class.__name__}")
        print("=" * 60)

        instance = test_class()
        for method_name in dir(instance):
            if method_name.startswith("test_"):
                try:
                    getattr(instance, method_name)()
                    print(f"  ✓ {method_name}")
                    passed += 1
                except AssertionError as e:
                    print(f"  ✗ {method_name}: {e}")
                    failed += 1
                except Exception as e:
                    print(f"  ✗ {method_name}: {e}")
                    traceback.print_exc()
                    failed += 1

    print(f"\n{'='*60}")
    print(f"Results: {passed} passed, {failed} failed")
    print("=" * 60)

    return failed == 0


if __name__ == "__main__":
    success = run_tests()
    sys.exit(0 if success else 1)

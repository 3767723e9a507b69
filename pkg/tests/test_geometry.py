#!/usr/bin/env python3
"""
Unit tests for Lie types, position regions and closed subsets.

Run with:
    python -m pytest tests/test_geometry.py -v

Or standalone:
    python tests/test_geometry.py
"""

import sys
from pathlib import Path

# Add project root to path for standalone execution
sys.path.insert(0, str(Path(__file__).parent.parent))

from sylow.core.errors import GeometryError
from sylow.gf import make_field
from sylow.geometry import (
    Family,
    LieType,
    closure,
    epsilon,
    gram_matrix,
    in_cc,
    in_pkl,
    in_pup,
    is_closed,
    mirror,
    mirror_position,
    pup,
    region_members,
)


class TestLieType:
    """Tests for sizes and parsing."""

    def test_sizes(self):
        assert (LieType(Family.B, 2).N, LieType(Family.B, 2).ntilde) == (5, 3)
        assert (LieType(Family.C, 2).N, LieType(Family.C, 2).ntilde) == (4, 2)
        assert (LieType(Family.D, 3).N, LieType(Family.D, 3).ntilde) == (6, 3)
        assert (LieType(Family.A, 2).N, LieType(Family.A, 2).ntilde) == (3, 3)

    def test_parse(self):
        assert LieType.parse("C_3") == LieType(Family.C, 3)
        assert LieType.parse("b2") == LieType(Family.B, 2)
        assert str(LieType.parse("D4")) == "D_4"

    def test_family_from_string(self):
        assert LieType("c", 2).family is Family.C

    def test_bad_rank(self):
        try:
            LieType(Family.B, 0)
            raise AssertionError("Should have raised GeometryError")
        except GeometryError:
            pass

    def test_bad_family(self):
        try:
            LieType.parse("E6")
            raise AssertionError("Should have raised GeometryError")
        except GeometryError:
            pass

    def test_only_type_a_lacks_a_form(self):
        assert not LieType(Family.A, 2).has_form
        assert LieType(Family.D, 2).has_form


class TestMirror:
    """Tests for the mirror map and ε."""

    def test_mirror(self):
        assert mirror(1, 5) == 5
        assert mirror(3, 5) == 3
        assert mirror_position((1, 2), 5) == (4, 5)

    def test_mirror_out_of_range(self):
        try:
            mirror(6, 5)
            raise AssertionError("Should have raised GeometryError")
        except GeometryError:
            pass

    def test_epsilon_type_c(self):
        t = LieType(Family.C, 2)
        assert epsilon(1, 4, t) == -1
        assert epsilon(1, 2, t) == 1
        assert epsilon(3, 4, t) == 1

    def test_epsilon_orthogonal_types(self):
        t = LieType(Family.B, 2)
        assert all(epsilon(i, j, t) == 1 for i in range(1, 6) for j in range(1, 6))

    def test_gram_matrix_type_c(self):
        F = make_field(3)
        S = gram_matrix(LieType(Family.C, 2), F)
        assert S[0, 3] == 1 and S[1, 2] == 1
        assert S[2, 1] == 2 and S[3, 0] == 2
        assert int(S.sum()) == 6


class TestRegions:
    """Tests for pUP and its neighbours."""

    def test_pup_sizes(self):
        assert len(pup(LieType(Family.B, 2))) == 4
        assert len(pup(LieType(Family.C, 2))) == 4
        assert len(pup(LieType(Family.C, 3))) == 9
        assert len(pup(LieType(Family.D, 3))) == 6
        assert len(pup(LieType(Family.A, 2))) == 3

    def test_pup_b2(self):
        assert pup(LieType(Family.B, 2)) == ((1, 2), (1, 3), (1, 4), (2, 3))

    def test_antidiagonal_only_in_type_c(self):
        assert in_pup((1, 4), LieType(Family.C, 2))
        assert in_cc((1, 4), LieType(Family.C, 2))
        assert not in_pup((1, 5), LieType(Family.B, 2))
        assert not in_pup((1, 6), LieType(Family.D, 3))

    def test_tril_and_trir_split_pup(self):
        t = LieType(Family.B, 2)
        assert region_members("tril", t) == ((1, 2), (1, 3), (2, 3))
        assert region_members("trir", t) == ((1, 4),)
        for t in (LieType(Family.C, 3), LieType(Family.D, 3)):
            left, right = region_members("tril", t), region_members("trir", t)
            assert set(left) | set(right) == set(pup(t))
            assert not set(left) & set(right)

    def test_rpc_complements_pup(self):
        t = LieType(Family.D, 3)
        ur = set(region_members("UR", t))
        rpc = set(region_members("RPC", t))
        assert rpc | set(pup(t)) == ur
        assert not rpc & set(pup(t))

    def test_pkl_contains_lower_triangle(self):
        t = LieType(Family.C, 2)
        assert in_pkl((3, 1), t)
        assert in_pkl((1, 4), t)
        assert not in_pkl((2, 4), t)

    def test_unknown_region(self):
        try:
            region_members("XYZ", LieType(Family.B, 2))
            raise AssertionError("Should have raised GeometryError")
        except GeometryError:
            pass


class TestClosedness:
    """Tests for closed subsets of pUP."""

    def test_pup_and_empty_are_closed(self):
        t = LieType(Family.B, 2)
        assert is_closed(pup(t), t)
        assert is_closed([], t)

    def test_missing_product_position(self):
        t = LieType(Family.B, 2)
        assert not is_closed([(1, 2), (2, 3)], t)
        J = closure([(1, 2), (2, 3)], t)
        assert (1, 3) in J
        assert is_closed(J, t)

    def test_single_antidiagonal_position_is_closed(self):
        assert is_closed([(1, 4)], LieType(Family.C, 2))

    def test_positions_outside_pup_rejected(self):
        try:
            is_closed([(2, 4)], LieType(Family.B, 2))
            raise AssertionError("Should have raised GeometryError")
        except GeometryError:
            pass


def run_tests():
    """Run all tests."""
    import traceback

    test_classes = [TestLieType, TestMirror, TestRegions, TestClosedness]
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

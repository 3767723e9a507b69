#!/usr/bin/env python3
"""
Unit tests for orbit combinatorics, the orbit engine and the classification
by cores.

Run with:
    python -m pytest tests/test_orbits.py -v

Or standalone:
    python tests/test_orbits.py
"""

import itertools
import sys
from pathlib import Path

# Add project root to path for standalone execution
sys.path.insert(0, str(Path(__file__).parent.parent))

from sylow.characters import CharacterSpace, LinChar
from sylow.core.config import Budget
from sylow.core.errors import BudgetExceeded, PreconditionError
from sylow.geometry import Family, LieType
from sylow.gf import make_field
from sylow.group import ClassicalGroup
from sylow.orbits import (
    OrbitEngine,
    classify,
    conditions_of,
    is_main_separated,
    is_staircase,
    limbs_and_places,
    main_conditions,
)

B2 = LieType(Family.B, 2)
C2 = LieType(Family.C, 2)


def engine_for(family: str, n: int, p: int = 3, budget: Budget | None = None) -> OrbitEngine:
    group = ClassicalGroup(LieType(Family(family), n), make_field(p), budget or Budget())
    return OrbitEngine(CharacterSpace(group))


def char(*entries: tuple[int, int, int]) -> LinChar:
    return LinChar.from_dict({(i, j): v for i, j, v in entries})


# =============================================================================
# Conditions
# =============================================================================


class TestConditions:
    """Tests for main, minor and supplementary conditions."""

    def test_main_conditions_are_rightmost_per_row(self):
        a = char((1, 2, 1), (1, 4, 2), (2, 3, 1))
        assert main_conditions(a) == ((1, 4), (2, 3))

    def test_b2_e14(self):
        c = conditions_of(LinChar.unit((1, 4)), B2)
        assert c.mc == ((1, 4),)
        assert c.rmc == ((1, 4),)
        assert c.minc == ((1, 2),)
        assert c.suppl == ()
        assert c.core == {(1, 4), (1, 2)}
        assert c.verge == LinChar.unit((1, 4))

    def test_antidiagonal_main_condition_has_no_minor(self):
        c = conditions_of(LinChar.unit((1, 4)), C2)
        assert c.minc == ()
        assert c.core == {(1, 4)}

    def test_zero_character(self):
        c = conditions_of(LinChar.from_dict({}), B2)
        assert c.mc == () and c.core == frozenset()
        assert c.is_staircase

    def test_supplementary_condition(self):
        # B_3: the minor column 3 of (1,5) meets row 2 left of its main condition (2,4)
        t = LieType(Family.B, 3)
        c = conditions_of(char((1, 5, 1), (2, 4, 1)), t)
        assert c.lmc == ((2, 4),)
        assert c.minc == ((1, 3),)
        assert c.suppl == ((2, 3),)
        assert c.core == {(1, 5), (2, 4), (1, 3), (2, 3)}

    def test_staircase_detection(self):
        assert is_staircase(char((1, 4, 1), (2, 3, 1)))
        assert not is_staircase(char((1, 3, 1), (2, 3, 1)))

    def test_main_separation(self):
        assert is_main_separated(LinChar.unit((1, 4)), B2)
        # (2,3) lies on the arm of (1,4)
        assert not is_main_separated(char((1, 4, 1), (2, 3, 1)), B2)


class TestLimbsAndPlaces:
    """Tests for arms, legs and the place bijection."""

    def test_b2_e14(self):
        data = limbs_and_places(conditions_of(LinChar.unit((1, 4)), B2), B2)
        assert data.places == {(1, 3)}
        assert data.limb == {(2, 3)}
        assert data.phi == {(2, 3): (1, 3)}

    def test_c2_e14(self):
        data = limbs_and_places(conditions_of(LinChar.unit((1, 4)), C2), C2)
        assert data.places == {(1, 2), (1, 3)}
        assert data.phi == {(1, 2): (1, 3), (1, 3): (1, 2)}

    def test_c2_e13(self):
        data = limbs_and_places(conditions_of(LinChar.unit((1, 3)), C2), C2)
        assert len(data.places) == 1

    def test_non_staircase_rejected(self):
        c = conditions_of(char((1, 3, 1), (2, 3, 1)), B2)
        try:
            limbs_and_places(c, B2)
            raise AssertionError("Should have raised PreconditionError")
        except PreconditionError:
            pass


# =============================================================================
# Orbit engine
# =============================================================================


class TestOrbitEngine:
    """Tests for BFS orbits and their descriptions."""

    def test_orbit_sizes(self):
        c2 = engine_for("C", 2)
        assert c2.enumerate_orbit(LinChar.unit((1, 4))).size == 9
        assert c2.enumerate_orbit(LinChar.unit((1, 2))).size == 1
        assert engine_for("B", 2).enumerate_orbit(LinChar.unit((1, 4))).size == 3

    def test_zero_is_a_fixed_point(self):
        orbit = engine_for("B", 2).enumerate_orbit(LinChar.from_dict({}))
        assert orbit.size == 1
        assert orbit.core_rep == LinChar.from_dict({})

    def test_b2_orbit_members(self):
        orbit = engine_for("B", 2).enumerate_orbit(LinChar.unit((1, 4)))
        # e14 + β e13 - ½β² e12
        expected = {char((1, 4, 1), (1, 3, b), (1, 2, (-2 * b * b) % 3)) for b in range(3)}
        assert orbit.members == expected
        assert orbit.representative == LinChar.unit((1, 4))
        assert orbit.core_rep == LinChar.unit((1, 4))
        assert orbit.places == ((1, 3),)

    def test_main_conditions_constant_on_orbits(self):
        engine = engine_for("C", 2)
        for orbit in engine.orbit_decomposition():
            for b in orbit.members:
                assert main_conditions(b) == orbit.conditions.mc

    def test_decomposition_partitions_v(self):
        for family, n in (("B", 2), ("C", 2)):
            engine = engine_for(family, n)
            orbits = engine.orbit_decomposition()
            assert sum(o.size for o in orbits) == 81
            keys = [o.representative.sort_key(engine.space.pup) for o in orbits]
            assert keys == sorted(keys)

    def test_fill_places_enumerates_the_orbit(self):
        engine = engine_for("C", 2)
        a = LinChar.unit((1, 4))
        orbit = engine.enumerate_orbit(a)
        places = sorted(orbit.limbs.places)
        filled = {
            engine.fill_places(a, dict(zip(places, values)))
            for values in itertools.product(range(3), repeat=len(places))
        }
        assert filled == orbit.members

    def test_fill_places_with_own_values(self):
        engine = engine_for("B", 2)
        b = char((1, 4, 1), (1, 3, 2), (1, 2, 1))
        assert engine.fill_places(b, {(1, 3): 2}) == b

    def test_fill_places_needs_every_place(self):
        engine = engine_for("C", 2)
        try:
            engine.fill_places(LinChar.unit((1, 4)), {(1, 2): 1})
            raise AssertionError("Should have raised PreconditionError")
        except PreconditionError:
            pass

    def test_to_core(self):
        engine = engine_for("C", 2)
        orbit = engine.enumerate_orbit(LinChar.unit((1, 4)))
        assert {engine.to_core(b) for b in orbit.members} == {LinChar.unit((1, 4))}

    def test_staircase_transform(self):
        engine = engine_for("B", 2)
        a = char((1, 3, 1), (2, 3, 1))
        b, witness = engine.staircase_transform(a)
        assert b == LinChar.unit((1, 3))
        assert engine.space.dot_left(witness, a) == b

    def test_non_staircase_orbit_records_image(self):
        engine = engine_for("B", 2)
        orbit = engine.enumerate_orbit(char((1, 3, 1), (2, 3, 1)))
        assert not orbit.is_staircase
        assert is_staircase(orbit.staircase_image)
        assert engine.space.dot_left(orbit.witness, orbit.representative) == orbit.staircase_image
        assert len(engine.orbit_members(orbit.staircase_image)) == orbit.size

    def test_orbit_budget(self):
        engine = engine_for("C", 2, budget=Budget(max_orbit_size=2))
        try:
            engine.enumerate_orbit(LinChar.unit((1, 4)))
            raise AssertionError("Should have raised BudgetExceeded")
        except BudgetExceeded:
            pass


class TestStabilizers:
    """Tests for J(A) and stabilizers."""

    def test_zero_is_fixed_by_u(self):
        engine = engine_for("B", 2)
        zero = LinChar.from_dict({})
        assert len(engine.stabilizer(zero)) == 81
        assert engine.J_of(conditions_of(zero, B2)) == frozenset(engine.space.pup)

    def test_b2_e14(self):
        engine = engine_for("B", 2)
        a = LinChar.unit((1, 4))
        J = engine.J_of(conditions_of(a, B2))
        assert J == {(1, 2), (1, 3), (1, 4)}
        stab = engine.stabilizer(a)
        assert len(stab) == 27
        assert set(stab) == set(engine.space.group.pattern_elements(J))


class TestClassification:
    """Tests for classification by cores."""

    def test_classify_b2(self):
        report = classify(engine_for("B", 2), stabilizers=True)
        assert report.total == 81
        assert report.label == "B_2"
        assert len(report.cores) == report.staircase_count
        for record in report.records:
            if record.staircase:
                assert record.verge_stabilizer_ok and record.core_stabilizer_ok
                assert record.size == 3 ** len(record.places)
            else:
                assert record.staircase_image is not None

    def test_classify_c2_without_stabilizers(self):
        report = classify(engine_for("C", 2), stabilizers=False)
        assert report.total == 81
        assert all(r.verge_stabilizer_ok is None for r in report.records)

    def test_classify_d3(self):
        report = classify(engine_for("D", 3), stabilizers=False)
        assert report.label == "D_3"
        assert report.total == 729
        assert len(set(report.cores)) == report.staircase_count
        for record in report.records:
            if record.staircase:
                assert record.size == 3 ** len(record.places)
                assert record.size == 3 ** (6 - len(record.J))
            else:
                assert record.staircase_image is not None


def run_tests():
    """Run all tests."""
    import traceback

    test_classes = [
        TestConditions,
        TestLimbsAndPlaces,
        TestOrbitEngine,
        TestStabilizers,
        TestClassification,
    ]
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

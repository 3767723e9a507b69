#!/usr/bin/env python3
"""
Unit tests for cyclotomic integers, class functions and orbit characters.

Run with:
    python -m pytest tests/test_cyclo.py -v

Or standalone:
    python tests/test_cyclo.py
"""

import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

# Add project root to path for standalone execution
sys.path.insert(0, str(Path(__file__).parent.parent))

from sylow.characters import CharacterSpace, LinChar
from sylow.core.errors import FieldError, PreconditionError, VerificationError
from sylow.cyclo import (
    ClassFunction,
    CycInt,
    GroupTable,
    character_table,
    conjugacy_classes,
    cyc_arith,
    induce,
    inner_product,
    right_transversal,
    sum_class_functions,
)
from sylow.cyclo.orbit_character import monomial_trace, orbit_character
from sylow.geometry import Family, LieType
from sylow.gf import make_field
from sylow.group import ClassicalGroup
from sylow.orbits import OrbitEngine


def setup(family: str, n: int) -> tuple[CharacterSpace, GroupTable]:
    group = ClassicalGroup(LieType(Family(family), n), make_field(3))
    return CharacterSpace(group), GroupTable(group)


# =============================================================================
# CycInt
# =============================================================================


class TestCycInt:
    """Tests for exact arithmetic in Z[ζ_p]."""

    def test_roots_of_unity_multiply(self):
        assert CycInt.zeta(3, 1) * CycInt.zeta(3, 2) == CycInt.one(3)
        assert CycInt.zeta(5, 3) * CycInt.zeta(5, 4) == CycInt.zeta(5, 2)

    def test_sum_of_all_roots_is_zero(self):
        total = CycInt.zero(5)
        for t in range(5):
            total = total + CycInt.zeta(5, t)
        assert total.is_zero()

    def test_conjugation_is_an_involution(self):
        rng = random.Random(0)
        for _ in range(50):
            a = CycInt(5, tuple(rng.randint(-9, 9) for _ in range(4)))
            assert a.conj().conj() == a

    def test_norm_of_zeta_is_one(self):
        z = CycInt.zeta(7, 3)
        assert (z * z.conj()).rational_part() == 1

    def test_shift_matches_multiplication(self):
        a = CycInt(3, (2, -1))
        assert a.shift(2) == a * CycInt.zeta(3, 2)

    def test_integer_coercion(self):
        assert CycInt.zeta(3) + 1 == CycInt.from_exponent_counts(3, [1, 1, 0])
        assert (CycInt.one(3) * 4).rational_part() == 4

    def test_big_coordinates_stay_exact(self):
        big = CycInt.from_int(5, 10**30)
        assert (big * big).rational_part() == 10**60

    def test_rational_part_of_irrational(self):
        with pytest.raises(VerificationError):
            CycInt.zeta(3).rational_part()

    def test_to_fraction(self):
        assert CycInt.from_int(3, 6).to_fraction(4) == Fraction(3, 2)

    def test_mixed_rings(self):
        with pytest.raises(FieldError):
            CycInt.one(3) + CycInt.one(5)

    def test_wrong_coordinate_count(self):
        with pytest.raises(FieldError):
            CycInt(3, (1, 2, 3))

    def test_cyc_arith(self):
        a, b = CycInt.zeta(3), CycInt.zeta(3, 2)
        assert cyc_arith(a, b, "mul") == CycInt.one(3)
        assert cyc_arith(a, None, "conj") == b
        with pytest.raises(FieldError):
            cyc_arith(a, None, "add")


# =============================================================================
# Class functions
# =============================================================================


class TestClassFunctions:
    """Tests for storage, inner products and conjugacy classes."""

    def test_trivial_has_norm_one(self):
        _, table = setup("B", 2)
        one = ClassFunction.trivial(table)
        assert inner_product(one, one) == 1
        assert one.degree() == 1

    def test_regular_character(self):
        _, table = setup("C", 2)
        reg = ClassFunction.regular(table)
        assert reg.degree() == 81
        assert inner_product(reg, ClassFunction.trivial(table)) == 1

    def test_value_count_checked(self):
        _, table = setup("B", 1)
        with pytest.raises(PreconditionError):
            ClassFunction(table, [CycInt.one(3)])

    def test_conjugacy_classes_partition_u(self):
        _, table = setup("B", 2)
        classes = conjugacy_classes(table)
        assert sum(len(c) for c in classes) == 81
        assert classes[0] == [table.identity]
        group = table.group
        for cls in classes:
            for g in table.elements[:10]:
                assert group.conjugate(g, cls[0]) in cls

    def test_induce_from_whole_group(self):
        _, table = setup("B", 1)
        one = CycInt.one(3)
        xi = induce(table, lambda g: True, lambda g: one, [table.identity])
        assert xi == ClassFunction.trivial(table)

    def test_induce_trivial_from_identity_is_regular(self):
        _, table = setup("B", 1)
        one = CycInt.one(3)
        reps = right_transversal(table, [table.identity])
        xi = induce(table, lambda g: g == table.identity, lambda g: one, reps)
        assert xi == ClassFunction.regular(table)


# =============================================================================
# Character tables
# =============================================================================


class TestCharacterTable:
    """Tests for characters tabulated on conjugacy classes."""

    def test_orbit_characters_tabulate_the_regular_character(self):
        space, table = setup("B", 2)
        orbits = OrbitEngine(space).orbit_decomposition()
        chars = [orbit_character(space, table, o.members) for o in orbits]
        ct = character_table(table, chars)
        assert len(ct.values) == len(orbits)
        assert sum(ct.class_sizes) == 81
        assert ct.representatives[0] == table.identity
        for k in range(len(ct.representatives)):
            column = sum((row[k] for row in ct.values), CycInt.zero(3))
            assert column == CycInt.from_int(3, 81 if k == 0 else 0)

    def test_b1_table_is_the_abelian_table(self):
        space, table = setup("B", 1)
        orbits = OrbitEngine(space).orbit_decomposition()
        ct = character_table(table, [orbit_character(space, table, o.members) for o in orbits])
        assert ct.class_sizes == [1, 1, 1]
        for row in ct.values:
            assert row[0] == CycInt.one(3)
            assert row[1] in {CycInt.zeta(3, t) for t in range(3)}

    def test_rejects_non_class_functions(self):
        _, table = setup("B", 2)
        classes = conjugacy_classes(table)
        big = next(c for c in classes if len(c) > 1)
        spike = ClassFunction.from_function(
            table, lambda g: CycInt.from_int(3, 1 if g == big[-1] else 0), "spike"
        )
        with pytest.raises(VerificationError):
            character_table(table, [spike])


# =============================================================================
# Orbit characters
# =============================================================================


class TestOrbitCharacters:
    """Tests for characters of orbit modules."""

    def test_degree_is_orbit_size(self):
        space, table = setup("C", 2)
        members = OrbitEngine(space).orbit_members(LinChar.unit((1, 4)))
        chi = orbit_character(space, table, members)
        assert chi.degree() == 9

    def test_orbit_characters_sum_to_regular(self):
        space, table = setup("B", 2)
        orbits = OrbitEngine(space).orbit_decomposition()
        total = sum_class_functions(table, (orbit_character(space, table, o.members) for o in orbits))
        assert total == ClassFunction.regular(table)

    def test_matches_monomial_trace(self):
        space, table = setup("B", 1)
        for orbit in OrbitEngine(space).orbit_decomposition():
            chi = orbit_character(space, table, orbit.members)
            basis = sorted(orbit.members, key=lambda b: b.sort_key(space.pup))
            for u in table.elements:
                assert chi(u) == monomial_trace(space, basis, u)

    def test_orbit_characters_are_class_functions(self):
        space, table = setup("C", 2)
        members = OrbitEngine(space).orbit_members(LinChar.unit((1, 3)))
        assert orbit_character(space, table, members).is_class_function()

    def test_distinct_orbits_are_orthogonal_in_b1(self):
        # U is abelian of order 3: each orbit is a single linear character
        space, table = setup("B", 1)
        orbits = OrbitEngine(space).orbit_decomposition()
        chars = [orbit_character(space, table, o.members) for o in orbits]
        for i, chi in enumerate(chars):
            for j, psi in enumerate(chars):
                assert inner_product(chi, psi) == (1 if i == j else 0)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])

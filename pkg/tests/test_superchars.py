#!/usr/bin/env python3
"""
Unit tests for elementary characters, basic sets and the decomposition of
André–Neto modules into U-orbits.

Run with:
    python -m pytest tests/test_superchars.py -v

Or standalone:
    python tests/test_superchars.py
"""

import sys
from pathlib import Path

import pytest

# Add project root to path for standalone execution
sys.path.insert(0, str(Path(__file__).parent.parent))

from sylow.characters import CharacterSpace, LinChar
from sylow.core.errors import PreconditionError
from sylow.cyclo import ClassFunction, GroupTable
from sylow.geometry import Family, LieType
from sylow.gf import make_field
from sylow.group import ClassicalGroup
from sylow.orbits import OrbitEngine
from sylow.superchars import (
    BasicSet,
    ElementaryCharacters,
    basic_set_violations,
    decompose_AN,
    degree_formula,
    elementary_case,
    enumerate_basic_sets,
    mirror_closure,
    orthogonality_report,
    rho,
    supercharacter,
    tilde_orbit,
    verge_class,
)

B2 = LieType(Family.B, 2)
C2 = LieType(Family.C, 2)


class Setup:
    """Shared space, engine and elementary characters for one group at q = 3."""

    def __init__(self, t: LieType):
        group = ClassicalGroup(t, make_field(3))
        self.space = CharacterSpace(group)
        self.engine = OrbitEngine(self.space)
        self.elementary = ElementaryCharacters(self.space, GroupTable(group))


_SETUPS: dict[LieType, Setup] = {}


def setup(t: LieType) -> Setup:
    if t not in _SETUPS:
        _SETUPS[t] = Setup(t)
    return _SETUPS[t]


def char(*entries: tuple[int, int, int]) -> LinChar:
    return LinChar.from_dict({(i, j): v for i, j, v in entries})


# =============================================================================
# Elementary characters
# =============================================================================


class TestRho:
    """Tests for ρ_{i,j} and the degree formula."""

    def test_tril(self):
        assert rho((1, 3), B2) == {(1, 2)}
        assert rho((1, 2), C2) == frozenset()

    def test_trir(self):
        assert rho((1, 4), B2) == {(1, 2), (2, 3)}
        assert rho((1, 4), C2) == {(1, 2)}
        assert rho((1, 3), C2) == {(1, 2)}

    def test_degree_formula(self):
        assert degree_formula((1, 4), C2, 3) == 3
        assert degree_formula((1, 4), B2, 3) == 9
        assert degree_formula((1, 2), C2, 3) == 1

    def test_cases(self):
        assert elementary_case((1, 4), C2) == 3
        assert elementary_case((1, 3), C2) == 1
        assert elementary_case((1, 4), B2) == 2
        assert elementary_case((1, 3), B2) == 1

    def test_rho_outside_pup(self):
        with pytest.raises(PreconditionError):
            rho((2, 4), B2)


class TestElementaryCharacters:
    """Tests for ξ^{i,j}_α = Ind χ^{i,j}_α."""

    def test_datum_rejects_zero_alpha(self):
        with pytest.raises(PreconditionError):
            setup(C2).elementary.datum((1, 4), 0)

    def test_datum_label(self):
        assert setup(C2).elementary.datum((1, 4), 2).label == "ξ^{1,4}_2"

    def test_normality(self):
        for t in (B2, C2):
            elementary = setup(t).elementary
            for pos in setup(t).space.pup:
                assert elementary.check_normal(elementary.datum(pos, 1))

    def test_degrees(self):
        elementary = setup(C2).elementary
        assert elementary.character(elementary.datum((1, 4), 1)).degree() == 3
        assert elementary.character(elementary.datum((1, 2), 1)).degree() == 1
        elementary = setup(B2).elementary
        assert elementary.character(elementary.datum((1, 4), 2)).degree() == 9

    def test_characters_are_cached(self):
        elementary = setup(B2).elementary
        d = elementary.datum((1, 3), 1)
        assert elementary.character(d) is elementary.character(d)

    def test_identify_tril(self):
        s = setup(C2)
        report = s.elementary.identify(s.elementary.datum((1, 2), 1), s.engine)
        assert report.case == 1
        assert report.orbit_sizes == [1]

    def test_identify_trir_orthogonal(self):
        s = setup(B2)
        report = s.elementary.identify(s.elementary.datum((1, 4), 1), s.engine)
        assert report.case == 2
        assert report.orbit_sizes == [3, 3, 3]
        assert report.degree == 9

    def test_identify_antidiagonal(self):
        s = setup(C2)
        report = s.elementary.identify(s.elementary.datum((1, 4), 1), s.engine)
        assert report.case == 3
        assert report.orbit_sizes == [9]
        assert report.inner_products["<O,xi>"] == 1

    def test_ij_suborbit(self):
        s = setup(C2)
        d = s.elementary.datum((1, 4), 1)
        members = s.elementary.ij_suborbit(LinChar.unit((1, 4)), d)
        assert members == {char((1, 4, 1), (1, 2, c)) for c in range(3)}

    def test_ij_suborbit_needs_matching_verge(self):
        s = setup(C2)
        d = s.elementary.datum((1, 4), 1)
        with pytest.raises(PreconditionError):
            s.elementary.ij_suborbit(LinChar.unit((1, 4), 2), d)


# =============================================================================
# Basic sets and supercharacters
# =============================================================================


class TestBasicSets:
    """Tests for basic subsets D and Φ."""

    def test_mirror_closure(self):
        assert mirror_closure([(1, 4)], B2) == {(1, 4), (2, 5)}
        assert mirror_closure([(1, 4)], C2) == {(1, 4)}

    def test_violations(self):
        assert basic_set_violations({(1, 4), (2, 5)}, B2) == []
        assert any("condition (i)" in v for v in basic_set_violations({(1, 2)}, B2))
        doubled = mirror_closure([(1, 2), (1, 3)], B2)
        assert any("condition (ii)" in v for v in basic_set_violations(doubled, B2))

    def test_build(self):
        bs = BasicSet.build(B2, {(1, 4): 1})
        assert bs.D == {(1, 4), (2, 5)}
        assert bs.verge() == LinChar.unit((1, 4))
        assert not bs.has_antidiagonal
        assert str(bs) == "{1@1,4}"

    def test_build_rejects_bad_input(self):
        with pytest.raises(PreconditionError):
            BasicSet.build(B2, {(1, 2): 1, (1, 3): 1})
        with pytest.raises(PreconditionError):
            BasicSet.build(B2, {(1, 4): 0})
        with pytest.raises(PreconditionError):
            BasicSet.build(B2, {(1, 5): 1})

    def test_antidiagonal(self):
        assert BasicSet.build(C2, {(1, 4): 1}).has_antidiagonal

    def test_enumeration(self):
        sets = list(enumerate_basic_sets(B2, make_field(3)))
        assert len(sets) == 13
        assert sets[0].phi == ()
        assert len(list(enumerate_basic_sets(C2, make_field(3)))) == 17

    def test_supercharacter_of_empty_set_is_trivial(self):
        elementary = setup(B2).elementary
        xi = supercharacter(BasicSet.build(B2, {}), elementary)
        assert xi == ClassFunction.trivial(elementary.table)

    def test_supercharacter_of_singleton(self):
        elementary = setup(C2).elementary
        xi = supercharacter(BasicSet.build(C2, {(1, 3): 2}), elementary)
        assert xi == elementary.character(elementary.datum((1, 3), 2))


# =============================================================================
# Decomposition
# =============================================================================


class TestDecomposition:
    """Tests for verge classes and André–Neto modules."""

    def test_tilde_orbit_is_verge_class(self):
        space = setup(B2).space
        a = LinChar.unit((1, 4))
        orbit = tilde_orbit(space, a)
        assert len(orbit) == 9
        assert orbit == set(verge_class(space, a))

    def test_decompose_b2(self):
        s = setup(B2)
        report = decompose_AN(BasicSet.build(B2, {(1, 4): 1}), s.engine, s.elementary)
        assert report.tilde_size == 9
        assert report.orbit_count == 3
        assert all(size == 3 for _, size in report.cores)
        assert report.exact
        # ξ^{1,4} splits into the three A_β orbit characters
        assert report.multiplicity == 3

    def test_decompose_antidiagonal(self):
        s = setup(C2)
        report = decompose_AN(BasicSet.build(C2, {(1, 4): 1}), s.engine, s.elementary)
        assert report.tilde_size == 9
        assert report.orbit_count == 1
        assert not report.exact
        assert report.multiplicity == 1

    def test_every_basic_set_decomposes(self):
        s = setup(B2)
        sets = list(enumerate_basic_sets(B2, make_field(3)))
        for bs in sets:
            assert decompose_AN(bs, s.engine, s.elementary).exact

    def test_supercharacters_are_orthogonal(self):
        sets = list(enumerate_basic_sets(B2, make_field(3)))
        products = orthogonality_report(sets, setup(B2).elementary)
        assert len(products) == 13 * 12 // 2
        assert all(v == 0 for v in products.values())


if __name__ == "__main__":
    pytest.main([__file__, "-v"])

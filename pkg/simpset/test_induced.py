"""
Tests for S-level maps and homotopies induced from Ord* data.
"""

from dataclasses import replace

import pytest

from OrderY.exceptions import StructuralError
from ordstar.maps import identity_map, zero_map
from ordstar.simplicial import (
    LevelMap,
    basepoint_level_map,
    cone_contraction,
    constant_homotopy,
    identity_level_map,
)
from simpset.induced import homotopy_from_ord, map_from_ord
from simpset.sets import validate_simplicial_homotopy


@pytest.mark.unit
class TestMapFromOrd:
    """S^f(C) for level maps f."""

    def test_identity(self, chain2, circle):
        f = map_from_ord(identity_level_map(circle), chain2)
        assert all(f[n] == tuple(range(f.source.size(n))) for n in range(f.cap + 1))

    def test_into_constant(self, chain3, cone, const0):
        """Everything lands on the single simplex of S^const0."""
        f = map_from_ord(basepoint_level_map(cone, const0), chain3)
        assert all(set(f[n]) == {0} for n in range(f.cap + 1))

    def test_trivial_category(self, trivial, cone):
        f = map_from_ord(identity_level_map(cone), trivial)
        assert all(f[n] == (0,) for n in range(f.cap + 1))

    def test_non_simplicial_level_map(self, chain2, circle):
        maps = (identity_map(0), identity_map(1), zero_map(2, 2), zero_map(3, 3))
        with pytest.raises(StructuralError) as error:
            map_from_ord(LevelMap(circle, circle, maps, name="broken"), chain2)
        assert error.value.location == "map_from_ord"


@pytest.mark.unit
class TestHomotopyFromOrd:
    """The S-level homotopy passes the simplicial homotopy identities."""

    def test_constant_homotopy(self, chain2, circle):
        H = homotopy_from_ord(constant_homotopy(identity_level_map(circle)), chain2)
        assert validate_simplicial_homotopy(H).ok
        assert H.f.maps == H.g.maps

    def test_cone_contraction(self, chain3, cone):
        H = homotopy_from_ord(cone_contraction(cone), chain3)
        report = validate_simplicial_homotopy(H)
        assert report.ok, str(report)
        assert set(H.f[1]) == {0}

    def test_trivial_category_collapses(self, trivial, cone):
        H = homotopy_from_ord(cone_contraction(cone), trivial)
        assert all(set(table) == {0} for table in H.maps.values())

    def test_invalid_homotopy(self, chain2, circle):
        f = identity_level_map(circle)
        H = constant_homotopy(f)
        maps = dict(H.maps)
        maps[(1, 1)] = zero_map(1, 2)
        with pytest.raises(StructuralError) as error:
            homotopy_from_ord(replace(H, maps=maps), chain2)
        assert error.value.location == "homotopy_from_ord"

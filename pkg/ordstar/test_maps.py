"""
Tests for pointed ordered maps.
"""

import pytest

from OrderY.exceptions import StructuralError
from ordstar.factories import MonotoneOrdMapFactory
from ordstar.maps import (
    OrdMap,
    OrdSet,
    compose_ord,
    identity_map,
    monotone_maps,
    ord_map,
    pointed_maps,
    zero_map,
)


@pytest.mark.unit
class TestCompose:
    """compose_ord examples."""

    def test_identity_left(self):
        f = ord_map(1, 2, [0, 2])
        assert compose_ord(identity_map(2), f) == f

    def test_identity_right(self):
        f = ord_map(1, 2, [0, 2])
        assert compose_ord(f, identity_map(1)) == f

    def test_pointwise_evaluation(self):
        """[0,1,1] after [0,2] is [0,1]."""
        g = ord_map(2, 1, [0, 1, 1])
        f = ord_map(1, 2, [0, 2])
        assert compose_ord(g, f) == OrdMap(1, 1, (0, 1))

    def test_size_mismatch(self):
        with pytest.raises(StructuralError, match="cannot compose"):
            compose_ord(identity_map(3), identity_map(2))

    @pytest.mark.properties
    def test_composites_stay_valid(self):
        """Composites of valid maps are valid and pointed."""
        for f in pointed_maps(2, 3):
            for g in pointed_maps(3, 2):
                h = compose_ord(g, f)
                assert h.problems() == []
                assert h.images[0] == 0

    @pytest.mark.properties
    def test_associative(self):
        maps = [MonotoneOrdMapFactory() for _ in range(3)]
        a, b, c = maps
        assert compose_ord(compose_ord(c, b), a) == compose_ord(c, compose_ord(b, a))


@pytest.mark.unit
class TestValidity:
    """Relaxed validity of pointed maps."""

    def test_basepoint_must_be_fixed(self):
        with pytest.raises(StructuralError, match="basepoint"):
            ord_map(1, 1, [1, 1])

    def test_wrapping_top_point_allowed(self):
        """The circle's top face sends its last point back to 0."""
        f = ord_map(2, 1, [0, 1, 0])
        assert not f.is_monotone
        assert f.support == [1]

    def test_gap_in_support_rejected(self):
        with pytest.raises(StructuralError, match="interval"):
            ord_map(3, 2, [0, 1, 0, 2])

    def test_decreasing_rejected(self):
        with pytest.raises(StructuralError, match="increasing"):
            ord_map(2, 2, [0, 2, 1])

    def test_image_out_of_range(self):
        with pytest.raises(StructuralError, match="outside"):
            ord_map(1, 1, [0, 2])

    def test_wrong_length(self):
        assert OrdMap(2, 2, (0, 1)).problems() == ["expected 3 images, got 2"]

    def test_zero_map(self):
        assert zero_map(2, 3).support == []
        assert zero_map(2, 3).is_monotone


@pytest.mark.unit
class TestEnumeration:
    """Enumerating maps between small ordered sets."""

    def test_monotone_count(self):
        """Weakly increasing pointed maps [n] -> [m] number C(m+n, n)."""
        assert len(list(monotone_maps(2, 2))) == 6
        assert len(list(monotone_maps(1, 3))) == 4

    def test_monotone_are_pointed_maps(self):
        relaxed = set(pointed_maps(2, 2))
        assert set(monotone_maps(2, 2)) <= relaxed

    def test_relaxed_count(self):
        """[1] -> [1]: zero and identity; [2] -> [1]: four maps."""
        assert set(pointed_maps(1, 1)) == {OrdMap(1, 1, (0, 0)), OrdMap(1, 1, (0, 1))}
        assert set(pointed_maps(2, 1)) == {
            OrdMap(2, 1, (0, 0, 0)),
            OrdMap(2, 1, (0, 1, 0)),
            OrdMap(2, 1, (0, 1, 1)),
            OrdMap(2, 1, (0, 0, 1)),
        }

    def test_all_enumerated_maps_valid(self):
        for f in pointed_maps(3, 2):
            assert f.problems() == []


@pytest.mark.unit
class TestOrdSet:
    def test_canonical_form(self):
        """Labels map to their positions; the basepoint comes first."""
        Z, position = OrdSet.from_labels(["*", "x", "y"])
        assert Z == OrdSet(2)
        assert position == {"*": 0, "x": 1, "y": 2}
        assert list(Z.elements) == [0, 1, 2]

    def test_negative_size(self):
        with pytest.raises(StructuralError):
            OrdSet(-1)

    def test_duplicate_labels(self):
        with pytest.raises(StructuralError):
            OrdSet.from_labels(["*", "x", "x"])

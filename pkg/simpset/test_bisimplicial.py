"""
Tests for bisimplicial sets, their diagonals and bisimplicial maps.
"""

import pytest

from OrderY.exceptions import CapError
from nerve.cyclic import cyclic_nerve, nerve_tables
from nerve.grid import cn_bisimplicial
from simpset.bisimplicial import (
    BisimplicialMap,
    BisimplicialSet,
    diagonal,
    diagonal_map,
    validate_bisimplicial,
    validate_bisimplicial_map,
)
from simpset.sets import validate, validate_map


def _identity(size):
    return tuple(range(size))


@pytest.fixture
def constant_columns(chain2):
    """CN(chain2) in every row, identities vertically."""
    tables = nerve_tables(chain2.base)
    return BisimplicialSet(
        name="CN(chain2) x const",
        cap=3,
        level=lambda p, q: tables.level(p),
        h_face=lambda p, q, i: tables.face(p, i),
        v_face=lambda p, q, i: _identity(len(tables.level(p))),
        h_degeneracy=lambda p, q, i: tables.degeneracy(p, i),
        v_degeneracy=lambda p, q, i: _identity(len(tables.level(p))),
        cyclic=lambda p, q: tables.cyclic(p),
    )


@pytest.mark.unit
class TestDiagonal:
    """diag X with d_i = dh_i dv_i."""

    def test_vertically_constant_grid(self, chain2, constant_columns):
        """The diagonal of a vertically constant grid is its row."""
        D = diagonal(constant_columns)
        row = cyclic_nerve(chain2, 3).simplicial
        assert [D.size(n) for n in range(4)] == [row.size(n) for n in range(4)]
        assert D.faces == row.faces
        assert D.degeneracies == row.degeneracies

    def test_point_grid(self, trivial, circle):
        D = diagonal(cn_bisimplicial(trivial, circle))
        assert [D.size(n) for n in range(4)] == [1, 1, 1, 1]
        assert validate(D).ok

    def test_chain2_on_circle(self, chain2, circle):
        """X_{1,1} is CN_1 of S_1 chain2 = chain2: seven cyclic pairs."""
        D = diagonal(cn_bisimplicial(chain2, circle), 2)
        assert [D.size(n) for n in range(2)] == [1, 7]
        report = validate(D)
        assert report.ok, str(report)

    def test_cap_beyond_grid(self, chain2, circle):
        with pytest.raises(CapError):
            diagonal(cn_bisimplicial(chain2, circle, 2), 3)


@pytest.mark.unit
class TestValidateBisimplicial:
    """Rows, columns and commuting squares."""

    def test_constant_columns(self, constant_columns):
        assert validate_bisimplicial(constant_columns).ok

    def test_broken_vertical_face(self, chain2):
        """A vertical face that collapses everything breaks dv_0 sv_0 = id."""
        tables = nerve_tables(chain2.base)
        B = BisimplicialSet(
            name="broken",
            cap=2,
            level=lambda p, q: tables.level(p),
            h_face=lambda p, q, i: tables.face(p, i),
            v_face=lambda p, q, i: (0,) * len(tables.level(p)),
            h_degeneracy=lambda p, q, i: tables.degeneracy(p, i),
            v_degeneracy=lambda p, q, i: _identity(len(tables.level(p))),
        )
        report = validate_bisimplicial(B)
        assert not report.ok
        assert report.mentions("column 0")

    def test_entry_outside_cap(self, constant_columns):
        with pytest.raises(CapError):
            constant_columns.elements(4, 0)


@pytest.mark.unit
class TestBisimplicialMaps:
    def test_identity(self, constant_columns):
        F = BisimplicialMap(
            constant_columns,
            constant_columns,
            lambda p, q: _identity(constant_columns.size(p, q)),
            name="id",
        )
        assert validate_bisimplicial_map(F).ok
        D = diagonal(constant_columns)
        assert validate_map(diagonal_map(F, D, D)).ok

    def test_rotation_is_not_a_map(self, constant_columns):
        """t itself does not commute with the horizontal faces."""
        F = BisimplicialMap(constant_columns, constant_columns, lambda p, q: constant_columns.t(p, q), name="t")
        report = validate_bisimplicial_map(F)
        assert "commute.dh" in report.codes()

"""
Tests for homotopy invariance and homotopy equivalences of Y.

Tests:
- The constant homotopy certifies identical matrices
- The cone contraction: the basepoint map and the identity agree on the invariants
- A rejected homotopy certifies nothing
- cone and const0 are homotopy equivalent and induce inverse isomorphisms
"""

import pytest

from OrderY.reports import ValidationReport
from homalg.linalg import to_rows
from invariants.homotopy import homotopy_equivalence, homotopy_invariance, induced_matrices
from ordstar.simplicial import (
    basepoint_level_map,
    cone_contraction,
    constant_homotopy,
    identity_level_map,
    simplicial_cone,
)


@pytest.mark.unit
class TestInducedMatrices:
    @pytest.mark.integration
    def test_identity(self, chain2, circle):
        matrices = induced_matrices(chain2, identity_level_map(circle), degrees=range(2))
        assert to_rows(matrices.s_homology[0]) == [[1]]
        assert to_rows(matrices.s_homology[1]) == [[1]]

    @pytest.mark.integration
    def test_basepoint_map_kills_h1(self, chain2, circle):
        matrices = induced_matrices(chain2, basepoint_level_map(circle, circle), degrees=range(2))
        assert to_rows(matrices.s_homology[0]) == [[1]]
        assert to_rows(matrices.s_homology[1]) == [[0]]

    def test_degrees_beyond_cap_are_noted(self, trivial, circle):
        report = ValidationReport(subject="induced")
        matrices = induced_matrices(trivial, identity_level_map(circle), degrees=[2, 3], report=report)
        assert sorted(matrices.s_homology) == [2]
        assert matrices.hh == {}
        assert any("skipped" in note for note in report.notes)


@pytest.mark.integration
class TestHomotopyInvariance:
    def test_constant_homotopy(self, chain2, circle):
        f = identity_level_map(circle)
        report = homotopy_invariance(chain2, f, f, constant_homotopy(f), degrees=range(2))
        assert report.ok, str(report)
        assert any(note.startswith("hh_0") for note in report.notes)

    def test_cone_contraction(self, chain2, cone):
        H = cone_contraction(cone)
        report = homotopy_invariance(chain2, H.f, H.g, H, degrees=(0,))
        assert report.ok, str(report)
        assert "s_homology_0: identical 1x1 matrices" in report.notes

    @pytest.mark.slow
    def test_cone_contraction_to_degree_two(self, chain2):
        H = cone_contraction(simplicial_cone(4))
        report = homotopy_invariance(chain2, H.f, H.g, H, degrees=(0, 1, 2))
        assert report.ok, str(report)
        for label in ("s_homology", "hh", "hc"):
            assert {n for n in range(3) if any(note.startswith(f"{label}_{n}:") for note in report.notes)} == {0, 1, 2}
        assert not any("skipped" in note for note in report.notes)


@pytest.mark.unit
@pytest.mark.edge_cases
class TestRejectedHomotopy:
    def test_wrong_end(self, chain2, circle):
        f = identity_level_map(circle)
        g = basepoint_level_map(circle, circle)
        report = homotopy_invariance(chain2, f, g, constant_homotopy(f))
        assert not report.ok
        assert "boundary.g" in report.codes()
        assert "homotopy rejected; invariance not certified" in report.notes


@pytest.mark.integration
class TestHomotopyEquivalence:
    def test_cone_and_point(self, chain2, cone, const0):
        f = basepoint_level_map(cone, const0)
        g = basepoint_level_map(const0, cone)
        H_fg = constant_homotopy(identity_level_map(const0))
        report = homotopy_equivalence(chain2, f, g, cone_contraction(cone), H_fg, degrees=(0,))
        assert report.ok, str(report)
        assert "s_homology_0: dimension 1 on both sides" in report.notes

    def test_swapped_homotopies_are_rejected(self, chain2, cone, const0):
        f = basepoint_level_map(cone, const0)
        g = basepoint_level_map(const0, cone)
        H_fg = constant_homotopy(identity_level_map(const0))
        report = homotopy_equivalence(chain2, f, g, H_fg, cone_contraction(cone), degrees=(0,))
        assert "equivalence.ends" in report.codes()
        assert "homotopies rejected; equivalence not certified" in report.notes

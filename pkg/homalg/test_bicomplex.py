"""
Tests for total complexes, mixed complexes and the SBI sequence.

Tests:
- The point grid: HH is k in degree 0, HC is k in even degrees
- The diagonal and the total complex have the same homology
- SBI exactness holds and the shifted control fails
- Broken mixed complexes are named
"""

import pytest
from sympy import QQ
from sympy.polys.matrices.sdm import SDM

from OrderY.exceptions import CapError, StructuralError
from homalg.bicomplex import (
    ConnesSequence,
    MixedComplex,
    cyclic_homology,
    mixed_from_cyclic,
    sbi_exactness,
    total_complex,
    validate_mixed,
)
from homalg.chains import betti_numbers, homology, normalized_chains
from homalg.fields import FieldSpec
from homalg.linalg import to_rows
from nerve.grid import cn_bisimplicial
from ordstar.simplicial import simplicial_circle
from simpset.bisimplicial import BisimplicialSet, diagonal


@pytest.fixture
def point_grid(trivial, circle):
    return cn_bisimplicial(trivial, circle)


@pytest.fixture
def chain2_grid(chain2, circle):
    return cn_bisimplicial(chain2, circle)


@pytest.mark.unit
class TestPointGrid:
    """CN(S^circle(trivial)) is the point grid."""

    def test_total_complex(self, point_grid, rationals):
        T = total_complex(point_grid, rationals)
        assert [T.dim(n) for n in range(4)] == [1, 0, 0, 0]

    def test_hochschild(self, point_grid, rationals):
        seq = ConnesSequence(mixed_from_cyclic(point_grid, rationals))
        assert [seq.dim_HH(n) for n in range(3)] == [1, 0, 0]

    def test_cyclic_even_degrees(self, point_grid, rationals):
        seq = ConnesSequence(mixed_from_cyclic(point_grid, rationals))
        assert [seq.dim_HC(n) for n in range(3)] == [1, 0, 1]
        assert seq.dim_HC(-1) == 0

    def test_periodicity_map(self, point_grid, rationals):
        M = mixed_from_cyclic(point_grid, rationals)
        result = cyclic_homology(M, 2)
        assert to_rows(result.S) == [[1]]
        assert result.B is None
        assert to_rows(cyclic_homology(M, 0).I) == [[1]]

    def test_beyond_reliable(self, point_grid, rationals):
        seq = ConnesSequence(mixed_from_cyclic(point_grid, rationals))
        with pytest.raises(CapError):
            seq.HC(3)

    def test_sbi_exact(self, point_grid, rationals):
        report = sbi_exactness(mixed_from_cyclic(point_grid, rationals), [0, 1, 2])
        assert report.ok, str(report)
        assert report.notes

    def test_shifted_control_fails(self, point_grid, rationals):
        report = sbi_exactness(mixed_from_cyclic(point_grid, rationals), [0, 1, 2], shift=1)
        assert "sbi.exact" in report.codes()
        assert "shifted" in report.subject

    def test_degrees_beyond_range_are_noted(self, point_grid, rationals):
        report = sbi_exactness(mixed_from_cyclic(point_grid, rationals), [5])
        assert report.ok
        assert any("skipped" in note for note in report.notes)


@pytest.mark.unit
@pytest.mark.edge_cases
class TestMixedValidation:
    def test_needs_cyclic_rows(self):
        B = BisimplicialSet(
            name="flat point",
            cap=2,
            level=lambda p, q: ("*",),
            h_face=lambda p, q, i: (0,),
            v_face=lambda p, q, i: (0,),
            h_degeneracy=lambda p, q, i: (0,),
            v_degeneracy=lambda p, q, i: (0,),
        )
        with pytest.raises(StructuralError) as error:
            mixed_from_cyclic(B, None)
        assert error.value.location == "mixed_from_cyclic"

    def test_bB_violation(self, rationals):
        one = SDM({0: {0: QQ(1)}}, (1, 1), QQ)
        M = MixedComplex(name="broken", field=rationals, basis=(("x",), ("y",)), b={1: one}, B={0: one})
        report = validate_mixed(M)
        assert report.codes() == ["mixed.bB"]
        assert report.mentions("degree 0")

    def test_cap_beyond_grid(self, point_grid, rationals):
        with pytest.raises(CapError):
            total_complex(point_grid, rationals, cap=4)


@pytest.mark.integration
class TestChain2Grid:
    """CN(S^circle(chain2)) to total degree 3."""

    def test_mixed_identities(self, chain2_grid, rationals):
        assert validate_mixed(mixed_from_cyclic(chain2_grid, rationals)).ok

    def test_diagonal_matches_total(self, chain2_grid, rationals):
        """Homology of the diagonal equals homology of the total complex."""
        diag = normalized_chains(diagonal(chain2_grid), rationals)
        total = total_complex(chain2_grid, rationals)
        assert betti_numbers(diag) == betti_numbers(total)

    def test_hochschild_is_total(self, chain2_grid, rationals):
        M = mixed_from_cyclic(chain2_grid, rationals)
        total = total_complex(chain2_grid, rationals)
        assert [homology(M.hochschild, n).dimension for n in range(3)] == betti_numbers(total)

    def test_sbi_exact(self, chain2_grid, rationals):
        report = sbi_exactness(mixed_from_cyclic(chain2_grid, rationals), [0, 1, 2])
        assert report.ok, str(report)

    def test_sbi_exact_mod_two(self, chain2_grid, f2):
        assert sbi_exactness(mixed_from_cyclic(chain2_grid, f2), [0, 1, 2]).ok

    @pytest.mark.parametrize("shift", [1, 2])
    def test_shifted_control_fails(self, chain2_grid, rationals, shift):
        report = sbi_exactness(mixed_from_cyclic(chain2_grid, rationals), [0, 1, 2], shift=shift)
        assert "sbi.exact" in report.codes()
        assert report.mentions("HH_0")

    def test_negative_shift(self, chain2_grid, rationals):
        with pytest.raises(StructuralError) as error:
            sbi_exactness(mixed_from_cyclic(chain2_grid, rationals), [0], shift=-1)
        assert error.value.location == "shift"


@pytest.fixture(params=["q", "fp:2"])
def field(request):
    return FieldSpec.parse(request.param)


@pytest.mark.integration
@pytest.mark.slow
class TestChain2GridToDegreeThree:
    """CN(S^circle(chain2)) with the circle built to cap 4 and 5."""

    def test_diagonal_matches_total(self, chain2, field):
        grid = cn_bisimplicial(chain2, simplicial_circle(4))
        diag = normalized_chains(diagonal(grid), field)
        total = total_complex(grid, field)
        assert betti_numbers(diag, range(4)) == betti_numbers(total, range(4))

    def test_sbi_exact(self, chain2, field):
        M = mixed_from_cyclic(cn_bisimplicial(chain2, simplicial_circle(5)), field)
        report = sbi_exactness(M, range(4))
        assert report.ok, str(report)
        assert any(note.startswith("HC_2 (S, B)") for note in report.notes)

    @pytest.mark.parametrize("shift", [1, 2, 3])
    def test_shifted_control_fails(self, chain2, field, shift):
        M = mixed_from_cyclic(cn_bisimplicial(chain2, simplicial_circle(5)), field)
        assert "sbi.exact" in sbi_exactness(M, range(4), shift=shift).codes()

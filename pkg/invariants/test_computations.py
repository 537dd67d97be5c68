"""
Tests for K_0, HH, HC, the SBI check and H_*(S^Y).

Tests:
- K_0 of the trivial category is trivial, K_0 of chain2 is Z
- HH and HC of the point grid, with the degree shift of order Y
- Cap requirements raise CapError
- Cross-checks and the mis-aligned SBI control
"""

import pytest

from OrderY.exceptions import CapError, StructuralError
from homalg.fields import FieldSpec
from invariants.computations import hc, hh, k0, k0_report, s_homology, sbi_check, sbi_report
from ordstar.simplicial import simplicial_circle


@pytest.mark.unit
class TestK0:
    """π_1 of S^Y(C) by edge paths."""

    def test_trivial_category(self, trivial, circle):
        G, A = k0(trivial, circle)
        assert G.generators == ()
        assert A.is_trivial

    def test_chain2_report(self, chain2, circle):
        report = k0_report(chain2, circle)
        assert report.ok
        assert report.invariant == "K0"
        assert report.values["abelianization"] == {"rank": 1, "torsion": [], "group": "Z"}
        assert report.values["h1_dimension"] == 1
        assert report.values["presentation"]["generators"] == ["g0 = (i(0,a))"]

    def test_mod_two(self, chain2, circle, f2):
        report = k0_report(chain2, circle, k=f2)
        assert report.ok
        assert report.field == "fp:2"

    def test_needs_reduced(self, chain2, cone):
        with pytest.raises(StructuralError) as error:
            k0(chain2, cone)
        assert error.value.location == "k0"

    def test_needs_two_skeleton(self, chain2, circle):
        with pytest.raises(StructuralError) as error:
            k0(chain2, circle, cap=1)
        assert error.value.location == "cap"


@pytest.mark.unit
class TestHochschild:
    """HH_p^Y is H_{p+1} of the diagonal."""

    @pytest.mark.parametrize("p", [0, 1])
    def test_point_grid(self, trivial, circle, p):
        report = hh(trivial, circle, p)
        assert report.values[str(p)]["dimension"] == 0
        assert report.values[str(p)]["chain_degree"] == p + 1
        assert report.reliable == [0, 1]

    def test_beyond_cap(self, trivial, circle):
        with pytest.raises(CapError):
            hh(trivial, circle, 2)

    def test_negative_degree(self, trivial, circle):
        with pytest.raises(CapError):
            hh(trivial, circle, -1)

    @pytest.mark.integration
    def test_crosscheck_with_total(self, chain2, circle):
        report = hh(chain2, circle, 0, crosscheck=True)
        assert report.checks is not None
        assert report.ok, str(report.checks)
        assert report.checks.notes

    @pytest.mark.integration
    @pytest.mark.slow
    @pytest.mark.parametrize("p", range(3))
    def test_crosscheck_to_degree_three(self, chain2, p):
        report = hh(chain2, simplicial_circle(4), p, crosscheck=True)
        assert report.ok, str(report.checks)


@pytest.mark.unit
class TestCyclic:
    """HC_p^Y is HC_{p+1} of the mixed complex."""

    def test_point_grid(self, trivial, circle):
        assert hc(trivial, circle, 0).values["0"]["dimension"] == 0
        one = hc(trivial, circle, 1).values["1"]
        assert one["dimension"] == 1
        assert one["module_degree"] == 2
        assert one["S"] == [["1"]]
        assert "B" not in one

    def test_higher_cap(self, trivial):
        circle = simplicial_circle(5)
        dims = [hc(trivial, circle, p).values[str(p)]["dimension"] for p in range(4)]
        assert dims == [0, 1, 0, 1]

    def test_beyond_cap(self, trivial, circle):
        with pytest.raises(CapError):
            hc(trivial, circle, 2)


@pytest.mark.unit
class TestSBI:
    def test_exact(self, trivial, circle):
        report = sbi_check(trivial, circle, degrees=range(2))
        assert report.ok, str(report)

    def test_shifted_control(self, trivial, circle):
        report = sbi_check(trivial, circle, degrees=range(2), shift=1)
        assert "sbi.exact" in report.codes()

    @pytest.mark.integration
    @pytest.mark.slow
    def test_chain2_to_degree_three(self, chain2):
        report = sbi_check(chain2, simplicial_circle(5), degrees=range(4))
        assert report.ok, str(report)

    @pytest.mark.integration
    @pytest.mark.parametrize("shift", [1, 2])
    def test_chain2_shifted_control(self, chain2, shift):
        report = sbi_check(chain2, simplicial_circle(5), degrees=range(4), shift=shift)
        assert "sbi.exact" in report.codes()
        assert report.mentions("HH_0")

    def test_report_values(self, trivial, circle):
        report = sbi_report(trivial, circle, degrees=range(4))
        assert report.values == {"0": {"HH": 0, "HC": 0}, "1": {"HH": 0, "HC": 1}}
        assert report.ok


@pytest.mark.unit
class TestPointGridToDegreeThree:
    """The trivial category with the circle at cap 5, over Q and F_2."""

    @pytest.fixture(params=["q", "fp:2"])
    def field(self, request):
        return FieldSpec.parse(request.param)

    @pytest.mark.parametrize("p", range(4))
    def test_hochschild_vanishes(self, trivial, field, p):
        report = hh(trivial, simplicial_circle(5), p, k=field)
        assert report.values[str(p)]["dimension"] == 0
        assert report.field == str(field)

    def test_cyclic_in_odd_degrees(self, trivial, field):
        circle = simplicial_circle(5)
        dims = [hc(trivial, circle, p, k=field).values[str(p)]["dimension"] for p in range(4)]
        assert dims == [0, 1, 0, 1]

    def test_sbi_exact(self, trivial, field):
        report = sbi_check(trivial, simplicial_circle(5), k=field, degrees=range(4))
        assert report.ok, str(report)


@pytest.mark.unit
class TestSHomology:
    def test_circle(self, chain2, circle):
        report = s_homology(chain2, circle)
        assert [report.values[str(n)]["dimension"] for n in range(3)] == [1, 1, 0]
        assert report.values["1"]["representatives"] == [[{"simplex": "(i(0,a))", "coefficient": "1"}]]
        assert report.reliable == [0, 2]

    def test_beyond_cap(self, chain2, circle):
        with pytest.raises(CapError):
            s_homology(chain2, circle, degrees=[3])

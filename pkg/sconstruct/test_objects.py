"""
Tests for S_n C: canonical quotient grids, enumeration and the Ord* action.

Tests:
- Canonical grids on chains of the lattice examples
- Malformed chains are rejected with a location
- Level sizes of S_n C
- S(phi) on the standard examples, identities and composites
"""

from itertools import product

import pytest

from OrderY.exceptions import StructuralError
from ordstar.maps import OrdMap, compose_ord, identity_map, pointed_maps, zero_map
from sconstruct.objects import apply_ord_map, canonical_quotients, enumerate_s_objects, s_level


@pytest.mark.unit
class TestCanonicalQuotients:
    """The normal form of a chain of cofibrations."""

    def test_degree_zero(self, chain2):
        x = canonical_quotients(chain2, ())
        assert x.n == 0
        assert x.objects == ("0",)
        assert x.is_zero

    def test_degree_one(self, chain2):
        """0 >-> a: A_01 = a with the identity, A_11 = 0."""
        x = canonical_quotients(chain2, ["i(0,a)"])
        assert x.obj(0, 1) == "a"
        assert x.q(0, 1) == "i(a,a)"
        assert x.obj(1, 1) == "0"

    def test_quotient_of_two_step_chain(self, chain3):
        """0 >-> a >-> b: A_02 = b and the quotient b/a is the bottom."""
        x = canonical_quotients(chain3, ["i(0,a)", "i(a,b)"])
        assert x.obj(0, 2) == "b"
        assert x.obj(1, 2) == "0"
        assert x.objects == ("0", "a", "b")

    def test_quotient_over_zero_prefix(self, chain2):
        """0 >-> 0 >-> a: the quotient a/0 is a itself."""
        x = canonical_quotients(chain2, ["i(0,0)", "i(0,a)"])
        assert x.obj(1, 2) == "a"

    def test_memoized(self, chain3):
        first = canonical_quotients(chain3, ["i(0,a)", "i(a,b)"])
        assert canonical_quotients(chain3, ("i(0,a)", "i(a,b)")) is first

    def test_equality_by_chain(self, chain2):
        assert canonical_quotients(chain2, ["i(0,a)"]) == canonical_quotients(chain2, ("i(0,a)",))
        assert canonical_quotients(chain2, ["i(0,a)"]) != canonical_quotients(chain2, ["i(0,0)"])


@pytest.mark.edge_cases
class TestMalformedChains:
    """Chains that do not start at 0 or do not compose."""

    def test_chain_not_starting_at_zero(self, chain2):
        with pytest.raises(StructuralError) as error:
            canonical_quotients(chain2, ["i(a,a)"])
        assert error.value.location == "chain[0]"

    def test_zero_morphism_is_not_a_cofibration(self, chain2):
        with pytest.raises(StructuralError, match="not a cofibration"):
            canonical_quotients(chain2, ["i(0,a)", "z(a,a)"])

    def test_unknown_morphism(self, chain2):
        with pytest.raises(StructuralError, match="unknown morphism"):
            canonical_quotients(chain2, ["i(0,x)"])

    def test_gap_in_chain(self, chain3):
        with pytest.raises(StructuralError) as error:
            canonical_quotients(chain3, ["i(0,a)", "i(b,b)"])
        assert error.value.location == "chain[1]"


@pytest.mark.unit
class TestEnumeration:
    """Sizes and order of S_n C."""

    def test_degree_zero_is_a_point(self, diamond):
        assert len(enumerate_s_objects(diamond, 0)) == 1

    @pytest.mark.parametrize("fixture", ["trivial", "chain2", "chain3", "diamond"])
    def test_degree_one_matches_objects(self, request, fixture):
        """S_1 C is in bijection with the objects of C."""
        C = request.getfixturevalue(fixture)
        level = enumerate_s_objects(C, 1)
        assert sorted(x.objects[1] for x in level) == sorted(C.objects)

    @pytest.mark.parametrize("n, size", [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
    def test_chain2_sizes(self, chain2, n, size):
        """Monotone sequences 0 <= x_1 <= ... <= x_n in {0, a}."""
        assert len(enumerate_s_objects(chain2, n)) == size

    def test_chain3_degree_two(self, chain3):
        assert len(enumerate_s_objects(chain3, 2)) == 6

    def test_trivial_is_a_point_everywhere(self, trivial):
        assert [len(enumerate_s_objects(trivial, n)) for n in range(5)] == [1] * 5

    def test_zero_chain_first(self, chain3):
        level = s_level(chain3, 3)
        assert level.basepoint.is_zero
        assert level.position(level.basepoint) == 0

    def test_deterministic_order(self, chain3):
        assert enumerate_s_objects(chain3, 3) == enumerate_s_objects(chain3, 3)


@pytest.mark.unit
class TestApplyOrdMap:
    """S(phi) on objects."""

    def test_identity(self, chain3):
        for x in enumerate_s_objects(chain3, 2):
            assert apply_ord_map(chain3, x, identity_map(2)) == x

    def test_surjection_composes_cofibrations(self, chain3):
        """[2] -> [1] with images (0, 1, 1) composes a_1 after a_0."""
        x = canonical_quotients(chain3, ["i(0,a)", "i(a,b)"])
        y = apply_ord_map(chain3, x, OrdMap(2, 1, (0, 1, 1)))
        assert y.chain == ("i(0,b)",)

    def test_injection_inserts_identity(self, chain2):
        """[1] -> [2] with images (0, 2) puts an identity cofibration on the empty preimage."""
        x = canonical_quotients(chain2, ["i(0,a)"])
        y = apply_ord_map(chain2, x, OrdMap(1, 2, (0, 2)))
        assert y.chain == ("i(0,0)", "i(0,a)")

    def test_support_above_first_step_takes_quotients(self, chain3):
        """[2] -> [1] with images (0, 0, 1) keeps only b/a, which is zero here."""
        x = canonical_quotients(chain3, ["i(0,a)", "i(a,b)"])
        y = apply_ord_map(chain3, x, OrdMap(2, 1, (0, 0, 1)))
        assert y.is_zero

    def test_zero_map_gives_zero_chain(self, chain3):
        x = canonical_quotients(chain3, ["i(0,a)", "i(a,b)"])
        assert apply_ord_map(chain3, x, zero_map(2, 3)).is_zero

    def test_degree_mismatch(self, chain2):
        x = canonical_quotients(chain2, ["i(0,a)"])
        with pytest.raises(StructuralError) as error:
            apply_ord_map(chain2, x, identity_map(2))
        assert error.value.location == "apply_ord_map"

    def test_invalid_map_rejected(self, chain2):
        x = canonical_quotients(chain2, ["i(0,a)", "i(a,a)"])
        with pytest.raises(StructuralError):
            apply_ord_map(chain2, x, OrdMap(2, 2, (0, 2, 1)))


def _check_functoriality(C, sizes):
    failures = []
    for n, m, l in product(sizes, repeat=3):
        for phi in pointed_maps(n, m):
            for psi in pointed_maps(m, l):
                composite = compose_ord(psi, phi)
                for x in enumerate_s_objects(C, n):
                    lhs = apply_ord_map(C, x, composite)
                    rhs = apply_ord_map(C, apply_ord_map(C, x, phi), psi)
                    if lhs != rhs:
                        failures.append((str(x), str(phi), str(psi)))
    return failures


@pytest.mark.properties
class TestFunctoriality:
    """S(psi o phi) = S(psi) o S(phi) exactly."""

    def test_chain3_up_to_three(self, chain3):
        assert _check_functoriality(chain3, range(4)) == []

    def test_diamond_up_to_two(self, diamond):
        assert _check_functoriality(diamond, range(3)) == []

    @pytest.mark.slow
    def test_chain2_up_to_four(self, chain2):
        assert _check_functoriality(chain2, range(5)) == []

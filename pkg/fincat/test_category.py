"""
Tests for finite categories and the category-law checker.

Tests:
- Lattice generator output
- Identity, composition and zero-object violations
- Structural errors for unresolved ids
"""

from dataclasses import replace

import pytest

from OrderY.exceptions import StructuralError
from fincat.checks import validate_category
from fincat.factories import BooleanLatticeFactory, ChainCategoryFactory
from fincat.lattice import lattice_category


@pytest.mark.unit
class TestLatticeGenerator:
    """Shape of generated lattice categories."""

    def test_trivial_has_one_identity(self, trivial):
        """The trivial category has one object and only its identity."""
        assert trivial.objects == ("0",)
        assert list(trivial.base.morphisms) == ["i(0,0)"]
        assert validate_category(trivial.base).ok

    def test_chain2_has_five_morphisms(self, chain2):
        """Two identities, 0->a, a->0 and the zero endomorphism of a."""
        assert set(chain2.base.morphisms) == {"i(0,0)", "i(0,a)", "z(a,0)", "i(a,a)", "z(a,a)"}
        assert chain2.cofibrations == frozenset({"i(0,0)", "i(0,a)", "i(a,a)"})

    def test_chain3_is_valid(self, chain3):
        """The chain 0 < a < b passes the law checker."""
        report = validate_category(chain3.base)
        assert report.ok, str(report)
        assert len(chain3.objects) == 3

    def test_bottom_moved_first(self):
        """The bottom element becomes the zero object wherever it is listed."""
        C = lattice_category(["a", "0"], [("0", "a")])
        assert C.zero == "0"
        assert C.objects[0] == "0"

    def test_missing_join_rejected(self):
        """Two maximal elements without a common upper bound are not a semilattice."""
        with pytest.raises(StructuralError, match="no join"):
            lattice_category(["0", "a", "b"], [("0", "a"), ("0", "b")])

    def test_cycle_rejected(self):
        """Mutually comparable distinct elements are rejected."""
        with pytest.raises(StructuralError):
            lattice_category(["0", "a", "b"], [("0", "a"), ("a", "b"), ("b", "a")])

    def test_unknown_element_in_relation(self):
        """Relations may only mention declared elements."""
        with pytest.raises(StructuralError, match="unknown element"):
            lattice_category(["0"], [("0", "x")])

    @pytest.mark.parametrize("length", [1, 2, 3, 4])
    def test_chain_factory_sizes(self, length):
        """A chain of n elements has n(n+1)/2 inclusions and (n-1)n zero maps."""
        C = ChainCategoryFactory(length=length)
        inclusions = length * (length + 1) // 2
        assert len(C.base.morphisms) == inclusions + (length - 1) * length

    def test_boolean_lattice(self):
        """The Boolean lattice on two atoms is the diamond."""
        C = BooleanLatticeFactory(atoms=2)
        assert set(C.objects) == {"0", "1", "2", "12"}
        assert validate_category(C.base).ok


@pytest.mark.unit
class TestCategoryLaws:
    """Negative cases for validate_category."""

    def test_corrupted_identity_law(self, chain2):
        """A wrong composite with an identity is reported with the pair."""
        compose = dict(chain2.base.compose)
        compose[("i(a,a)", "z(a,a)")] = "i(a,a)"
        broken = replace(chain2.base, compose=compose)
        report = validate_category(broken)
        assert not report.ok
        assert "identity" in report.codes()
        assert report.mentions("(i(a,a), z(a,a))")

    def test_missing_composite_on_trivial(self, trivial):
        """Dropping the only composition entry is named."""
        broken = replace(trivial.base, compose={})
        report = validate_category(broken)
        assert "compose.missing" in report.codes()
        assert report.mentions("(i(0,0), i(0,0))")

    def test_extra_composite(self, chain2):
        """A composition entry for a non-composable pair is flagged."""
        compose = dict(chain2.base.compose)
        compose[("i(0,a)", "i(0,a)")] = "i(0,a)"
        report = validate_category(replace(chain2.base, compose=compose))
        assert "compose.extra" in report.codes()

    def test_associativity_failure(self, chain3):
        """Making z(b,b) idempotent onto the identity breaks associativity."""
        compose = dict(chain3.base.compose)
        compose[("z(b,b)", "z(b,b)")] = "i(b,b)"
        report = validate_category(replace(chain3.base, compose=compose))
        assert "associativity" in report.codes()
        assert report.mentions("(z(b,b), z(b,b), i(a,b))")

    def test_zero_object_not_initial(self, chain2):
        """Declaring a nonzero object as zero is reported."""
        report = validate_category(replace(chain2.base, zero="a"))
        assert "zero" in report.codes()

    def test_unknown_morphism_raises(self, chain2):
        """Unresolved ids are structural errors naming the id."""
        compose = dict(chain2.base.compose)
        compose[("i(a,a)", "i(a,a)")] = "ghost"
        with pytest.raises(StructuralError, match="ghost"):
            validate_category(replace(chain2.base, compose=compose))

    def test_missing_identity_raises(self, chain2):
        """Every object needs an identity entry."""
        identities = {"0": "i(0,0)"}
        with pytest.raises(StructuralError, match="identity"):
            validate_category(replace(chain2.base, identities=identities))


@pytest.mark.unit
class TestCategoryQueries:
    """Hom-sets, zero morphisms and isomorphisms."""

    def test_hom_sets(self, chain2):
        assert chain2.hom("a", "a") == ("i(a,a)", "z(a,a)")
        assert chain2.hom("a", "0") == ("z(a,0)",)
        assert chain2.hom("0", "a") == ("i(0,a)",)

    def test_zero_morphism_factors_through_zero(self, chain2):
        assert chain2.base.zero_morphism("a", "a") == "z(a,a)"
        assert chain2.zero_in("a") == "i(0,a)"
        assert chain2.zero_out("a") == "z(a,0)"

    def test_isomorphisms_are_identities(self, chain3):
        """In a lattice category the only isomorphisms are identities."""
        isos = {m for m in chain3.base.morphisms if chain3.base.is_isomorphism(m)}
        assert isos == {"i(0,0)", "i(a,a)", "i(b,b)"}

    def test_composition_lookup_error(self, chain2):
        """comp on a non-composable pair is a structural error."""
        with pytest.raises(StructuralError):
            chain2.comp("i(0,a)", "i(0,a)")

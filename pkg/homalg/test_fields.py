"""
Tests for coefficient field specs.
"""

import pytest
from sympy import GF, QQ

from OrderY.exceptions import StructuralError
from homalg.fields import FieldSpec


@pytest.mark.unit
class TestFieldSpec:
    """Parsing and rendering."""

    def test_rationals(self):
        k = FieldSpec.parse("q")
        assert k == FieldSpec()
        assert k.domain == QQ
        assert k.characteristic == 0
        assert str(k) == "q"

    def test_prime_field(self):
        k = FieldSpec.parse(" FP:3 ")
        assert k == FieldSpec(prime=3)
        assert k.domain == GF(3)
        assert k.characteristic == 3
        assert str(k) == "fp:3"

    @pytest.mark.parametrize("text", ["fp:4", "fp:1", "fp:x", "z", ""])
    def test_rejected(self, text):
        with pytest.raises(StructuralError) as error:
            FieldSpec.parse(text)
        assert error.value.location == "field"

    def test_default_follows_settings(self, settings):
        assert FieldSpec.default() == FieldSpec()
        settings.KY_DEFAULT_FIELD = "fp:2"
        assert FieldSpec.default() == FieldSpec(prime=2)

    def test_render_fraction(self, rationals):
        assert rationals.render(QQ(1, 2)) == "1/2"
        assert rationals.render(rationals.scalar(-3)) == "-3"

    def test_scalar_reduces(self, f2):
        assert f2.scalar(4) == f2.domain.zero

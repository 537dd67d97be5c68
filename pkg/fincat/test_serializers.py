"""
Tests for category documents.
"""

import pytest

from OrderY.documents import write_json
from OrderY.exceptions import StructuralError
from fincat.checks import validate_cofibrations
from fincat.serializers import category_to_document, load_category, read_category


@pytest.mark.unit
class TestCategoryDocuments:
    """Loading and dumping category files."""

    def test_document_reloads_to_valid_category(self, chain3):
        """A dumped builtin loads back and passes the checker."""
        C = load_category(category_to_document(chain3))
        assert C.name == "chain3"
        assert set(C.base.morphisms) == set(chain3.base.morphisms)
        assert validate_cofibrations(C).ok

    def test_unknown_composite_named(self, chain2):
        """Unknown names are hard errors with the entry location."""
        document = category_to_document(chain2)
        document["compose"][0]["gf"] = "nope"
        with pytest.raises(StructuralError) as excinfo:
            load_category(document)
        assert "compose[0].gf" in str(excinfo.value)
        assert "nope" in str(excinfo.value)

    def test_unknown_object_in_morphism(self, chain2):
        document = category_to_document(chain2)
        document["morphisms"][1]["dst"] = "ghost"
        with pytest.raises(StructuralError, match=r"morphisms\[1\]\.dst"):
            load_category(document)

    def test_unknown_witness_leg(self, chain2):
        document = category_to_document(chain2)
        document["pushouts"][0]["inc_other"] = "ghost"
        with pytest.raises(StructuralError, match=r"pushouts\[0\]\.inc_other"):
            load_category(document)

    def test_missing_field(self, chain2):
        """A document without a zero object is rejected at 'zero'."""
        document = category_to_document(chain2)
        del document["zero"]
        with pytest.raises(StructuralError, match="category:zero"):
            load_category(document)

    def test_duplicate_object(self, chain2):
        document = category_to_document(chain2)
        document["objects"].append("a")
        with pytest.raises(StructuralError, match="duplicate object"):
            load_category(document)

    def test_missing_identity_entry(self, chain2):
        document = category_to_document(chain2)
        del document["identities"]["a"]
        with pytest.raises(StructuralError, match="no identity"):
            load_category(document)

    def test_pushouts_optional(self, trivial):
        """Cofibrations and pushouts default to empty lists."""
        document = category_to_document(trivial)
        del document["pushouts"]
        del document["cofibrations"]
        C = load_category(document)
        assert C.witnesses == {}
        assert C.cofibrations == frozenset()

    def test_read_category_file(self, chain2, tmp_path):
        """Files are named after their stem."""
        path = tmp_path / "mine.cat"
        write_json(path, category_to_document(chain2))
        C = read_category(path)
        assert C.name == "mine"
        assert validate_cofibrations(C).ok

    def test_read_invalid_json(self, tmp_path):
        path = tmp_path / "bad.cat"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(StructuralError, match="invalid JSON"):
            read_category(path)

    def test_read_missing_file(self, tmp_path):
        with pytest.raises(StructuralError, match="file not found"):
            read_category(tmp_path / "absent.cat")

"""
Category documents: JSON in, FinCofCategory out, and back.

All references are by name; an unknown name is a hard error whose location
names the offending entry (e.g. ``compose[3].gf``).
"""

import logging
from pathlib import Path
from typing import Any, Dict

from rest_framework import serializers
from rest_framework.exceptions import ValidationError

from OrderY.documents import read_json
from OrderY.exceptions import StructuralError, raise_for_serializer
from .category import FinCategory, FinCofCategory, PushoutWitness

logger = logging.getLogger(__name__)


class MorphismEntrySerializer(serializers.Serializer):
    id = serializers.CharField()
    src = serializers.CharField()
    dst = serializers.CharField()


class ComposeEntrySerializer(serializers.Serializer):
    g = serializers.CharField()
    f = serializers.CharField()
    gf = serializers.CharField()


class PushoutEntrySerializer(serializers.Serializer):
    cof = serializers.CharField()
    along = serializers.CharField()
    obj = serializers.CharField()
    inc_cof = serializers.CharField()
    inc_other = serializers.CharField()


class CategoryDocumentSerializer(serializers.Serializer):
    """
    Category file with cofibrations and pushout witnesses.

    Expected input:
    - objects: array of names
    - morphisms: array of {id, src, dst}
    - compose: array of {g, f, gf}
    - identities: {object: morphism id}
    - zero: object name
    - cofibrations: array of morphism ids
    - pushouts: array of {cof, along, obj, inc_cof, inc_other}
    """
    name = serializers.CharField(required=False)
    objects = serializers.ListField(child=serializers.CharField(), allow_empty=False)
    morphisms = MorphismEntrySerializer(many=True)
    compose = ComposeEntrySerializer(many=True)
    identities = serializers.DictField(child=serializers.CharField())
    zero = serializers.CharField()
    cofibrations = serializers.ListField(child=serializers.CharField(), required=False, default=list)
    pushouts = PushoutEntrySerializer(many=True, required=False, default=list)

    def validate_objects(self, value):
        seen = set()
        for index, name in enumerate(value):
            if name in seen:
                raise ValidationError(f"duplicate object {name!r} at position {index}")
            seen.add(name)
        return value

    def validate(self, attrs: Dict[str, Any]) -> Dict[str, Any]:
        objects = set(attrs["objects"])
        morphisms = {}

        def require_object(name, where):
            if name not in objects:
                raise ValidationError({where: f"unknown object {name!r}"})

        def require_morphism(name, where):
            if name not in morphisms:
                raise ValidationError({where: f"unknown morphism {name!r}"})

        for index, entry in enumerate(attrs["morphisms"]):
            if entry["id"] in morphisms:
                raise ValidationError({f"morphisms[{index}].id": f"duplicate morphism {entry['id']!r}"})
            require_object(entry["src"], f"morphisms[{index}].src")
            require_object(entry["dst"], f"morphisms[{index}].dst")
            morphisms[entry["id"]] = (entry["src"], entry["dst"])

        for index, entry in enumerate(attrs["compose"]):
            for key in ("g", "f", "gf"):
                require_morphism(entry[key], f"compose[{index}].{key}")
        for obj, m in attrs["identities"].items():
            require_object(obj, f"identities.{obj}")
            require_morphism(m, f"identities.{obj}")
        missing = [obj for obj in attrs["objects"] if obj not in attrs["identities"]]
        if missing:
            raise ValidationError({"identities": f"object {missing[0]!r} has no identity"})
        require_object(attrs["zero"], "zero")
        for index, m in enumerate(attrs["cofibrations"]):
            require_morphism(m, f"cofibrations[{index}]")
        for index, entry in enumerate(attrs["pushouts"]):
            require_object(entry["obj"], f"pushouts[{index}].obj")
            for key in ("cof", "along", "inc_cof", "inc_other"):
                require_morphism(entry[key], f"pushouts[{index}].{key}")

        attrs["morphism_table"] = morphisms
        return attrs


def load_category(document, name=None):
    """
    Build a FinCofCategory from a parsed category document.

    Raises:
        StructuralError: On malformed documents or unknown names.
    """
    data = raise_for_serializer(CategoryDocumentSerializer(data=document), subject="category")
    compose = {}
    for index, entry in enumerate(data["compose"]):
        key = (entry["g"], entry["f"])
        if key in compose and compose[key] != entry["gf"]:
            raise StructuralError(f"conflicting composites for {key}", location=f"category:compose[{index}]")
        compose[key] = entry["gf"]
    base = FinCategory(
        objects=tuple(data["objects"]),
        morphisms=data["morphism_table"],
        compose=compose,
        identities=dict(data["identities"]),
        zero=data["zero"],
        name=name or data.get("name") or "category",
    )
    witnesses = {
        (entry["cof"], entry["along"]): PushoutWitness(**entry)
        for entry in data["pushouts"]
    }
    logger.debug(f"Loaded category {base.name}: {len(base.objects)} objects, {len(witnesses)} witnesses")
    return FinCofCategory(base=base, cofibrations=frozenset(data["cofibrations"]), witnesses=witnesses)


def read_category(path):
    """Read and load a category file."""
    return load_category(read_json(path), name=Path(path).stem)


def category_to_document(C):
    """Inverse of load_category for categories with string ids."""
    base = C.base
    order = list(base.morphisms)
    return {
        "name": base.name,
        "objects": list(base.objects),
        "morphisms": [{"id": m, "src": s, "dst": t} for m, (s, t) in base.morphisms.items()],
        "compose": [{"g": g, "f": f, "gf": gf} for (g, f), gf in base.compose.items()],
        "identities": dict(base.identities),
        "zero": base.zero,
        "cofibrations": [m for m in order if m in C.cofibrations],
        "pushouts": [
            {
                "cof": w.cof,
                "along": w.along,
                "obj": w.obj,
                "inc_cof": w.inc_cof,
                "inc_other": w.inc_other,
            }
            for w in C.witnesses.values()
        ],
    }

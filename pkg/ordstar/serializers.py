"""
Y documents and homotopy documents.

Y file: {"cap", "levels", "faces": [{n, i, images}], "degeneracies": [{n, i, images}]}.
Homotopy file: {"f": [{n, images}], "g": [{n, images}], "h": [{n, i, images}]},
interpreted against a given source and target Y.
"""

import logging
from pathlib import Path
from typing import Any, Dict

from django.conf import settings
from rest_framework import serializers
from rest_framework.exceptions import ValidationError

from OrderY.documents import read_json
from OrderY.exceptions import StructuralError, raise_for_serializer
from .maps import OrdMap
from .simplicial import LevelMap, OrdHomotopy, SimplicialOrd

logger = logging.getLogger(__name__)


class StructureMapSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=0)
    i = serializers.IntegerField(min_value=0)
    images = serializers.ListField(child=serializers.IntegerField(min_value=0), allow_empty=False)


class LevelImagesSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=0)
    images = serializers.ListField(child=serializers.IntegerField(min_value=0), allow_empty=False)


class YDocumentSerializer(serializers.Serializer):
    """
    Simplicial object in Ord*, truncated at `cap`.

    Images are 0-based with 0 the basepoint.
    """
    name = serializers.CharField(required=False)
    cap = serializers.IntegerField(min_value=0)
    levels = serializers.ListField(child=serializers.IntegerField(min_value=0), allow_empty=False)
    faces = StructureMapSerializer(many=True, required=False, default=list)
    degeneracies = StructureMapSerializer(many=True, required=False, default=list)

    def validate_cap(self, value):
        max_cap = getattr(settings, "KY_MAX_CAP", 6)
        if value > max_cap:
            raise ValidationError(f"cap {value} exceeds KY_MAX_CAP={max_cap}")
        return value

    def validate(self, attrs: Dict[str, Any]) -> Dict[str, Any]:
        cap, levels = attrs["cap"], attrs["levels"]
        if len(levels) != cap + 1:
            raise ValidationError({"levels": f"expected {cap + 1} level sizes, got {len(levels)}"})
        for kind, offset, top in (("faces", -1, cap), ("degeneracies", 1, cap - 1)):
            seen = set()
            for index, entry in enumerate(attrs[kind]):
                n, i = entry["n"], entry["i"]
                where = f"{kind}[{index}]"
                if n > top or i > n or (kind == "faces" and n == 0):
                    raise ValidationError({where: f"no {kind[:-1]} with n={n}, i={i} below cap {cap}"})
                if (n, i) in seen:
                    raise ValidationError({where: f"duplicate entry n={n}, i={i}"})
                seen.add((n, i))
                if len(entry["images"]) != levels[n] + 1:
                    raise ValidationError({f"{where}.images": f"expected {levels[n] + 1} images"})
                if max(entry["images"]) > levels[n + offset]:
                    raise ValidationError({f"{where}.images": f"image outside [0, {levels[n + offset]}]"})
        return attrs


class HomotopyDocumentSerializer(serializers.Serializer):
    name = serializers.CharField(required=False)
    f = LevelImagesSerializer(many=True)
    g = LevelImagesSerializer(many=True)
    h = StructureMapSerializer(many=True)


def load_Y(document, name=None):
    """
    Build a SimplicialOrd from a parsed Y document.

    Maps are not checked here beyond their shapes; run validate_Y.
    """
    data = raise_for_serializer(YDocumentSerializer(data=document), subject="Y")
    levels = tuple(data["levels"])
    faces = {
        (e["n"], e["i"]): OrdMap(levels[e["n"]], levels[e["n"] - 1], tuple(e["images"]))
        for e in data["faces"]
    }
    degeneracies = {
        (e["n"], e["i"]): OrdMap(levels[e["n"]], levels[e["n"] + 1], tuple(e["images"]))
        for e in data["degeneracies"]
    }
    return SimplicialOrd(
        cap=data["cap"],
        levels=levels,
        faces=faces,
        degeneracies=degeneracies,
        name=name or data.get("name") or "Y",
    )


def Y_to_document(Y):
    return {
        "name": Y.name,
        "cap": Y.cap,
        "levels": list(Y.levels),
        "faces": [{"n": n, "i": i, "images": list(m.images)} for (n, i), m in sorted(Y.faces.items())],
        "degeneracies": [
            {"n": n, "i": i, "images": list(m.images)} for (n, i), m in sorted(Y.degeneracies.items())
        ],
    }


def load_homotopy(document, source, target, name=None):
    """Build an OrdHomotopy between `source` and `target` from a parsed document."""
    data = raise_for_serializer(HomotopyDocumentSerializer(data=document), subject="homotopy")

    def level_map(key):
        entries = sorted(data[key], key=lambda e: e["n"])
        if [e["n"] for e in entries] != list(range(len(entries))):
            raise StructuralError("levels must be 0..N without gaps", location=f"homotopy:{key}")
        maps = []
        for e in entries:
            n = e["n"]
            if n > min(source.cap, target.cap):
                raise StructuralError(f"level {n} beyond the caps", location=f"homotopy:{key}")
            maps.append(OrdMap(source.levels[n], target.levels[n], tuple(e["images"])))
        return LevelMap(source, target, tuple(maps), name=key)

    f, g = level_map("f"), level_map("g")
    maps = {}
    for index, e in enumerate(data["h"]):
        n = e["n"]
        if n + 1 > target.cap or n > source.cap:
            raise StructuralError(f"h at level {n} beyond the caps", location=f"homotopy:h[{index}]")
        maps[(n, e["i"])] = OrdMap(source.levels[n], target.levels[n + 1], tuple(e["images"]))
    return OrdHomotopy(f, g, maps, name=name or data.get("name") or "H")


def homotopy_to_document(H):
    return {
        "name": H.name,
        "f": [{"n": n, "images": list(m.images)} for n, m in enumerate(H.f.maps)],
        "g": [{"n": n, "images": list(m.images)} for n, m in enumerate(H.g.maps)],
        "h": [{"n": n, "i": i, "images": list(m.images)} for (n, i), m in sorted(H.maps.items())],
    }


def read_Y(path):
    return load_Y(read_json(path), name=Path(path).stem)

"""
Validation of command-line arguments.
"""

from typing import Any, Dict

from django.conf import settings
from rest_framework import serializers

from OrderY.exceptions import StructuralError
from homalg.fields import FieldSpec

COMMANDS = (
    "validate",
    "s-set",
    "homology",
    "k0",
    "hh",
    "hc",
    "sbi",
    "trace",
    "product",
    "homotopy-check",
)

NEEDS_Y = set(COMMANDS) - {"validate"}
NEEDS_PI1 = {"k0"}


def parse_range(text):
    """Parse "A..B" (inclusive) or a single degree "A"."""
    text = str(text).strip()
    low, sep, high = text.partition("..")
    try:
        low = int(low)
        high = int(high) if sep else low
    except ValueError:
        raise serializers.ValidationError(f"expected A..B, got {text!r}") from None
    if low < 0 or high < low:
        raise serializers.ValidationError(f"empty or negative range {text!r}")
    return low, high


class RunConfigSerializer(serializers.Serializer):
    """One invocation: command, inputs, field, caps, degrees and output mode."""

    command = serializers.ChoiceField(choices=COMMANDS)
    category = serializers.CharField()
    y = serializers.CharField(required=False, allow_null=True, default=None)
    target_y = serializers.CharField(required=False, allow_null=True, default=None)
    homotopy = serializers.CharField(required=False, allow_null=True, default=None)
    bifunctor = serializers.CharField(required=False, allow_null=True, default=None)
    cap = serializers.IntegerField(required=False, allow_null=True, default=None, min_value=0)
    field = serializers.CharField(required=False, allow_null=True, default=None)
    p = serializers.IntegerField(required=False, allow_null=True, default=None, min_value=0)
    q = serializers.IntegerField(required=False, allow_null=True, default=None, min_value=0)
    range = serializers.CharField(required=False, allow_null=True, default=None)
    output = serializers.ChoiceField(choices=("text", "structured"), default="text")
    crosscheck = serializers.BooleanField(default=False)
    shift = serializers.IntegerField(default=0, min_value=0)

    def validate_field(self, value):
        try:
            return FieldSpec.parse(value or getattr(settings, "KY_DEFAULT_FIELD", "q"))
        except StructuralError as exc:
            raise serializers.ValidationError(str(exc)) from None

    def validate_range(self, value):
        return None if value is None else parse_range(value)

    def validate_cap(self, value):
        limit = getattr(settings, "KY_MAX_CAP", 6)
        if value is not None and value > limit:
            raise serializers.ValidationError(f"cap {value} exceeds KY_MAX_CAP={limit}")
        return value

    def validate(self, attrs: Dict[str, Any]) -> Dict[str, Any]:
        command = attrs["command"]
        if command in NEEDS_Y and not attrs.get("y"):
            raise serializers.ValidationError({"y": f"{command} needs --y"})
        if command in NEEDS_PI1 and attrs.get("cap") is not None and attrs["cap"] < 2:
            raise serializers.ValidationError({"cap": f"{command} needs cap >= 2"})
        if command == "product" and not attrs.get("bifunctor"):
            raise serializers.ValidationError({"bifunctor": "product needs --bifunctor"})
        if command == "homotopy-check" and not attrs.get("homotopy"):
            raise serializers.ValidationError({"homotopy": "homotopy-check needs --homotopy"})
        return attrs

    def degrees(self, default):
        """Degrees from --p, else --range, else `default`."""
        data = self.validated_data
        if data.get("p") is not None:
            return range(data["p"], data["p"] + 1)
        if data.get("range") is not None:
            low, high = data["range"]
            return range(low, high + 1)
        return default

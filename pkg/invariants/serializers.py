"""
Output serializers for invariant reports.
"""

from rest_framework import serializers


class InvariantReportSerializer(serializers.Serializer):
    """Structured rendering of an InvariantReport; keys are emitted sorted by dump_json."""

    invariant = serializers.CharField()
    instance = serializers.CharField()
    coefficients = serializers.CharField(source="field")
    caps = serializers.DictField(child=serializers.IntegerField())
    reliable = serializers.ListField(child=serializers.IntegerField())
    values = serializers.JSONField()
    valid = serializers.BooleanField(source="ok")
    checks = serializers.SerializerMethodField()
    notes = serializers.ListField(child=serializers.CharField())
    pin = serializers.CharField()

    def get_checks(self, obj):
        return obj.checks.as_dict() if obj.checks is not None else None


class ValidationReportSerializer(serializers.Serializer):
    subject = serializers.CharField()
    valid = serializers.BooleanField(source="ok")
    violations = serializers.SerializerMethodField()
    notes = serializers.ListField(child=serializers.CharField())

    def get_violations(self, obj):
        return [
            {"code": v.code, "location": v.location, "message": v.message}
            for v in obj.violations
        ]

"""
Error hierarchy shared by all apps.

Validators report law violations in a ValidationReport; the exceptions below
are raised for problems that make a computation impossible.
"""


class StructuralError(ValueError):
    """Malformed input: unresolved identifier, shape mismatch, bad document."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location

    def __str__(self):
        message = super().__str__()
        if self.location:
            return f"{self.location}: {message}"
        return message


class MissingWitnessError(StructuralError):
    """A pushout witness required by a construction is absent."""

    def __init__(self, cof, along, purpose="pushout"):
        super().__init__(
            f"missing {purpose} witness for cofibration '{cof}' along '{along}'",
            location=f"pushouts[{cof}, {along}]",
        )
        self.cof = cof
        self.along = along


class CapError(StructuralError):
    """A degree or level lies outside the cap or the enumeration guard."""


class ConstructionError(ValueError):
    """An internal identity or uniqueness check failed during a construction."""


def first_error_location(detail, path=""):
    """
    Walk DRF error detail (nested dicts and lists) to its first message.

    Returns:
        (location, message), e.g. ("morphisms[2].src", "unknown object 'x'").
    """
    if isinstance(detail, dict):
        for key, value in detail.items():
            if key == "non_field_errors":
                return first_error_location(value, path)
            child = f"{path}.{key}" if path else str(key)
            return first_error_location(value, child)
    if isinstance(detail, list):
        for index, value in enumerate(detail):
            if isinstance(value, (dict, list)) and value:
                return first_error_location(value, f"{path}[{index}]")
            if not isinstance(value, (dict, list)):
                return path, str(value)
    return path, str(detail)


def raise_for_serializer(serializer, subject):
    """Raise StructuralError naming the first invalid field of a serializer."""
    if serializer.is_valid():
        return serializer.validated_data
    location, message = first_error_location(serializer.errors)
    raise StructuralError(message, location=f"{subject}:{location}" if location else subject)

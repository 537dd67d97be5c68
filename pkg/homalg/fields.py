"""
Coefficient fields: the rationals or a prime field.
"""

from dataclasses import dataclass
from functools import cached_property

from django.conf import settings
from sympy import GF, QQ, isprime

from OrderY.exceptions import StructuralError


@dataclass(frozen=True)
class FieldSpec:
    """
    A coefficient field, written "q" for the rationals or "fp:P" for F_P.

    Attributes:
        prime: The characteristic, or None for the rationals.
    """

    prime: int = None

    @classmethod
    def parse(cls, text):
        """
        Parse a field spec.

        Raises:
            StructuralError: If the text is not "q" or "fp:P" with P prime.
        """
        text = str(text).strip().lower()
        if text == "q":
            return cls()
        if text.startswith("fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise StructuralError(f"characteristic {text[3:]!r} is not an integer", location="field") from None
            if not isprime(p):
                raise StructuralError(f"{p} is not prime", location="field")
            return cls(prime=p)
        raise StructuralError(f"unknown field {text!r}; use q or fp:P", location="field")

    @classmethod
    def default(cls):
        return cls.parse(getattr(settings, "KY_DEFAULT_FIELD", "q"))

    @cached_property
    def domain(self):
        return QQ if self.prime is None else GF(self.prime)

    @property
    def characteristic(self):
        return self.prime or 0

    def scalar(self, value):
        return self.domain.convert(value)

    def render(self, value):
        """A domain element as a plain string, e.g. "-1" or "1/2"."""
        return str(self.domain.to_sympy(value))

    def __str__(self):
        return "q" if self.prime is None else f"fp:{self.prime}"

"""
Validation reports.

A report collects every violated law instead of stopping at the first one, so
that a checker run on a broken category names all offending items.
"""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    location: str = ""

    def __str__(self):
        if self.location:
            return f"[{self.code}] {self.location}: {self.message}"
        return f"[{self.code}] {self.message}"


@dataclass
class ValidationReport:
    """
    Outcome of a checker.

    Attributes:
        subject: What was checked (e.g. "category chain2", "homotopy").
        violations: Every violated law found.
        notes: Informational lines (skipped checks, ranks, flags).
    """

    subject: str
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def add(self, code, message, location=""):
        self.violations.append(Violation(code, message, location))

    def note(self, message):
        self.notes.append(message)

    def merge(self, other):
        """Fold another report's findings into this one and return self."""
        self.violations.extend(other.violations)
        self.notes.extend(other.notes)
        return self

    def codes(self):
        return sorted({v.code for v in self.violations})

    def mentions(self, text):
        """True when some violation names `text` in its location or message."""
        return any(text in v.location or text in v.message for v in self.violations)

    def as_dict(self):
        return {
            "subject": self.subject,
            "valid": self.ok,
            "violations": [
                {"code": v.code, "location": v.location, "message": v.message}
                for v in self.violations
            ],
            "notes": list(self.notes),
        }

    def __str__(self):
        if self.ok:
            return f"{self.subject}: valid"
        lines = [f"{self.subject}: {len(self.violations)} violation(s)"]
        lines.extend(f"  {v}" for v in self.violations)
        return "\n".join(lines)

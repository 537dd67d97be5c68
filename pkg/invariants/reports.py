"""
Invariant reports: what was computed, on which instance, within which range.
"""

import hashlib
from dataclasses import dataclass, field

from OrderY.documents import dump_json
from .serializers import InvariantReportSerializer


@dataclass
class InvariantReport:
    """
    One computed invariant.

    Attributes:
        invariant: Name such as "HH", "HC", "K0" or "trace".
        instance: Description of the category and Y.
        field: Coefficient field spec.
        caps: Caps used, e.g. {"Y": 3, "grid": 3}.
        reliable: [low, high] degree range in which values are complete.
        values: Degree or key -> computed data (JSON-ready).
        checks: ValidationReport of any cross-checks run alongside.
    """

    invariant: str
    instance: str
    field: str
    caps: dict
    reliable: list
    values: dict = field(default_factory=dict)
    checks: object = None
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return self.checks is None or self.checks.ok

    @property
    def pin(self):
        """Short digest of the values, stable across runs, used to pin regressions."""
        return hashlib.sha256(dump_json(self.values).encode("utf-8")).hexdigest()[:16]

    def merge(self, other):
        self.values.update(other.values)
        self.notes.extend(other.notes)
        if other.checks is not None:
            if self.checks is None:
                self.checks = other.checks
            else:
                self.checks.merge(other.checks)
        return self

    def as_dict(self):
        return dict(InvariantReportSerializer(self).data)

    def as_text(self):
        low, high = self.reliable
        lines = [
            f"invariant: {self.invariant}",
            f"instance: {self.instance}",
            f"field: {self.field}",
            "caps: " + ", ".join(f"{key}={value}" for key, value in sorted(self.caps.items())),
            f"reliable: {low}..{high}",
        ]
        for key in sorted(self.values, key=_degree_order):
            lines.append(f"{key}: {dump_json(self.values[key], indent=None)}")
        if self.checks is not None:
            lines.append(f"checks: {'passed' if self.checks.ok else 'FAILED'}")
            lines.extend(f"  {v}" for v in self.checks.violations)
        lines.extend(f"note: {note}" for note in self.notes)
        lines.append(f"pin: {self.pin}")
        return "\n".join(lines)


def _degree_order(key):
    text = str(key)
    return (0, int(text), "") if text.lstrip("-").isdigit() else (1, 0, text)


def render_matrix(M, k):
    """An SDM as nested lists of coefficient strings."""
    rows, cols = M.shape
    dense = [["0"] * cols for _ in range(rows)]
    for i, row in M.items():
        for j, value in row.items():
            if value:
                dense[i][j] = k.render(value)
    return dense

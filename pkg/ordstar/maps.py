"""
Finite ordered pointed sets [n] and the maps between them.

A map [n] -> [m] is valid when it fixes the basepoint 0 and its support
(the points not sent to 0) is an interval on which it is weakly increasing.
Weakly increasing pointed maps are the special case whose support is a top
segment; `is_monotone` tests for that case.
"""

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement

from OrderY.exceptions import StructuralError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrdSet:
    """The canonical pointed ordered set [size] = {0 < 1 < ... < size}."""

    size: int

    def __post_init__(self):
        if self.size < 0:
            raise StructuralError(f"size must be >= 0, got {self.size}", location="OrdSet")

    @property
    def elements(self):
        return range(self.size + 1)

    @classmethod
    def from_labels(cls, labels):
        """
        Canonical form of an ordered pointed set given as labels, basepoint first.

        Returns:
            (OrdSet, dict label -> position), the unique order isomorphism.
        """
        labels = list(labels)
        if not labels or len(set(labels)) != len(labels):
            raise StructuralError("labels must be distinct and include the basepoint", location="OrdSet")
        return cls(len(labels) - 1), {label: k for k, label in enumerate(labels)}


@dataclass(frozen=True)
class OrdMap:
    source: int
    target: int
    images: tuple

    def __call__(self, x):
        return self.images[x]

    @property
    def support(self):
        return [x for x in range(1, self.source + 1) if self.images[x] != 0]

    def problems(self):
        """Reasons this map is not a valid pointed map, empty when valid."""
        found = []
        if len(self.images) != self.source + 1:
            found.append(f"expected {self.source + 1} images, got {len(self.images)}")
            return found
        if self.images[0] != 0:
            found.append("basepoint not preserved")
        if any(not 0 <= y <= self.target for y in self.images):
            found.append(f"image outside [0, {self.target}]")
        support = self.support
        if support and support != list(range(support[0], support[-1] + 1)):
            found.append("support is not an interval")
        if any(self.images[x] > self.images[x + 1] for x in support[:-1]):
            found.append("not increasing on its support")
        return found

    def check(self, location="map"):
        found = self.problems()
        if found:
            raise StructuralError(f"{self.images}: {found[0]}", location=location)
        return self

    @property
    def is_monotone(self):
        return all(a <= b for a, b in zip(self.images, self.images[1:]))

    def __str__(self):
        return f"[{self.source}]->[{self.target}] {list(self.images)}"


def ord_map(source, target, images):
    return OrdMap(source, target, tuple(images)).check()


def identity_map(n):
    return OrdMap(n, n, tuple(range(n + 1)))


def zero_map(n, m):
    """The map [n] -> [m] sending everything to the basepoint."""
    return OrdMap(n, m, (0,) * (n + 1))


def compose_ord(g, f):
    """
    Return g∘f.

    Raises:
        StructuralError: If the target of f is not the source of g.
    """
    if f.target != g.source:
        raise StructuralError(
            f"cannot compose {g} after {f}: sizes {f.target} and {g.source} differ",
            location="compose_ord",
        )
    return OrdMap(f.source, g.target, tuple(g.images[y] for y in f.images))


def monotone_maps(n, m):
    """All weakly increasing pointed maps [n] -> [m], in lexicographic order."""
    for tail in combinations_with_replacement(range(m + 1), n):
        yield OrdMap(n, m, (0,) + tail)


def pointed_maps(n, m):
    """All valid maps [n] -> [m] in the relaxed sense, grouped by support."""
    for start in range(1, n + 2):
        for stop in range(start, n + 2):
            width = stop - start
            if width == 0:
                if start == 1:
                    yield zero_map(n, m)
                continue
            for values in combinations_with_replacement(range(1, m + 1), width):
                images = [0] * (n + 1)
                images[start:stop] = values
                yield OrdMap(n, m, tuple(images))

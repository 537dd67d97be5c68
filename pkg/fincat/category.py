"""
Finite presented categories and categories with cofibrations.

Categories are presented strictly: morphism equality is identifier equality and
composition is a lookup in an explicit table. Identifiers may be any hashable
value; file-based categories use strings, derived categories (S-construction
levels) use integers.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property

from OrderY.exceptions import MissingWitnessError, StructuralError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FinCategory:
    """
    A finite category given by tables.

    Attributes:
        objects: Object ids in declaration order.
        morphisms: Morphism id -> (source id, target id), in declaration order.
        compose: (g, f) -> id of g∘f for every composable pair.
        identities: Object id -> identity morphism id.
        zero: Id of the zero object.
        name: Label used in reports.
    """

    objects: tuple
    morphisms: dict
    compose: dict
    identities: dict
    zero: object
    name: str = "category"

    def src(self, m):
        return self.morphisms[m][0]

    def dst(self, m):
        return self.morphisms[m][1]

    def identity(self, obj):
        return self.identities[obj]

    def comp(self, g, f):
        """Return g∘f, raising StructuralError when the table has no entry."""
        try:
            return self.compose[(g, f)]
        except KeyError:
            raise StructuralError(
                f"no composite for ({g!r}, {f!r})", location="compose"
            ) from None

    @cached_property
    def _hom(self):
        table = {}
        for m, (s, t) in self.morphisms.items():
            table.setdefault((s, t), []).append(m)
        return {key: tuple(value) for key, value in table.items()}

    def hom(self, a, b):
        return self._hom.get((a, b), ())

    @cached_property
    def _into(self):
        table = {obj: [] for obj in self.objects}
        for m, (_, t) in self.morphisms.items():
            table[t].append(m)
        return {key: tuple(value) for key, value in table.items()}

    @cached_property
    def _out_of(self):
        table = {obj: [] for obj in self.objects}
        for m, (s, _) in self.morphisms.items():
            table[s].append(m)
        return {key: tuple(value) for key, value in table.items()}

    def into(self, obj):
        """Morphisms with target `obj`, in declaration order."""
        return self._into[obj]

    def out_of(self, obj):
        """Morphisms with source `obj`, in declaration order."""
        return self._out_of[obj]

    def zero_in(self, obj):
        """The unique morphism 0 -> obj."""
        return self._unique(self.zero, obj)

    def zero_out(self, obj):
        """The unique morphism obj -> 0."""
        return self._unique(obj, self.zero)

    def zero_morphism(self, a, b):
        """The morphism a -> b factoring through the zero object."""
        return self.comp(self.zero_in(b), self.zero_out(a))

    def _unique(self, a, b):
        candidates = self.hom(a, b)
        if len(candidates) != 1:
            raise StructuralError(
                f"expected exactly one morphism {a!r} -> {b!r}, found {len(candidates)}",
                location="zero",
            )
        return candidates[0]

    def is_zero_object(self, obj):
        return all(
            len(self.hom(obj, x)) == 1 and len(self.hom(x, obj)) == 1
            for x in self.objects
        )

    def is_isomorphism(self, m):
        s, t = self.morphisms[m]
        id_s, id_t = self.identities[s], self.identities[t]
        return any(
            self.compose.get((n, m)) == id_s and self.compose.get((m, n)) == id_t
            for n in self.hom(t, s)
        )

    def composable_pairs(self):
        """All (g, f) with src(g) == dst(f), in a deterministic order."""
        for f, (_, t) in self.morphisms.items():
            for g in self.out_of(t):
                yield g, f

    def check_references(self):
        """
        Raise StructuralError naming the first unresolved identifier.

        Checks that morphism endpoints, identity entries, composition entries
        and the zero object all refer to declared ids.
        """
        objects = set(self.objects)
        if len(objects) != len(self.objects):
            raise StructuralError("duplicate object id", location="objects")
        if self.zero not in objects:
            raise StructuralError(f"unknown object {self.zero!r}", location="zero")
        for m, (s, t) in self.morphisms.items():
            for end in (s, t):
                if end not in objects:
                    raise StructuralError(
                        f"unknown object {end!r}", location=f"morphisms[{m}]"
                    )
        for obj in self.objects:
            if obj not in self.identities:
                raise StructuralError(
                    f"object {obj!r} has no identity", location="identities"
                )
        for obj, m in self.identities.items():
            if obj not in objects:
                raise StructuralError(f"unknown object {obj!r}", location="identities")
            if m not in self.morphisms:
                raise StructuralError(
                    f"unknown morphism {m!r}", location=f"identities[{obj}]"
                )
        for (g, f), gf in self.compose.items():
            for name, m in (("g", g), ("f", f), ("gf", gf)):
                if m not in self.morphisms:
                    raise StructuralError(
                        f"unknown morphism {m!r}", location=f"compose[{g}, {f}].{name}"
                    )


@dataclass(frozen=True)
class PushoutWitness:
    """
    A chosen pushout of the cofibration `cof`: A >-> B along `along`: A -> C.

    `inc_cof`: B -> P and `inc_other`: C -> P are the two legs into `obj`.
    """

    cof: object
    along: object
    obj: object
    inc_cof: object
    inc_other: object


@dataclass(frozen=True, eq=False)
class FinCofCategory:
    """A finite category with a cofibration set and a pushout-witness table."""

    base: FinCategory
    cofibrations: frozenset
    witnesses: dict = field(default_factory=dict)

    @property
    def name(self):
        return self.base.name

    @property
    def objects(self):
        return self.base.objects

    @property
    def zero(self):
        return self.base.zero

    def src(self, m):
        return self.base.src(m)

    def dst(self, m):
        return self.base.dst(m)

    def hom(self, a, b):
        return self.base.hom(a, b)

    def comp(self, g, f):
        return self.base.comp(g, f)

    def identity(self, obj):
        return self.base.identity(obj)

    def zero_in(self, obj):
        return self.base.zero_in(obj)

    def zero_out(self, obj):
        return self.base.zero_out(obj)

    def is_cofibration(self, m):
        return m in self.cofibrations

    def cofibrations_from(self, obj):
        """Cofibrations with source `obj`, in declaration order."""
        return tuple(m for m in self.base.out_of(obj) if m in self.cofibrations)

    def witness(self, cof, along):
        """Return the witness for (cof, along) or raise MissingWitnessError."""
        try:
            return self.witnesses[(cof, along)]
        except KeyError:
            raise MissingWitnessError(cof, along) from None

    def is_sum_pair(self, cof, along):
        """
        True for pairs whose pushout would be a coproduct of nonzero objects.

        A finite category with a zero object has no such coproducts unless it
        is trivial, so these pairs are exempt from the witness requirement.
        """
        base = self.base
        return (
            base.is_zero_object(base.src(cof))
            and not base.is_zero_object(base.dst(cof))
            and not base.is_zero_object(base.dst(along))
        )

    def unique_cofibration(self, a, b):
        """The only cofibration a -> b; StructuralError if there is none or several."""
        candidates = [m for m in self.hom(a, b) if m in self.cofibrations]
        if len(candidates) != 1:
            raise StructuralError(
                f"expected one cofibration {a!r} -> {b!r}, found {len(candidates)}",
                location="cofibrations",
            )
        return candidates[0]

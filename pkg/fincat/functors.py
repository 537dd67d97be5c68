"""
Functors and bifunctors between finite categories with cofibrations.

The builders here derive maps from the cofibration order (x <= y when some
cofibration x -> y exists), which on lattice categories is the lattice order.
Functoriality and exactness are never assumed; see fincat.exactness.
"""

import logging
from dataclasses import dataclass
from itertools import product

from OrderY.exceptions import StructuralError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Functor:
    source: object
    target: object
    object_map: dict
    morphism_map: dict
    name: str = "F"

    def obj(self, x):
        return self.object_map[x]

    def mor(self, m):
        return self.morphism_map[m]


@dataclass(frozen=True, eq=False)
class BiFunctor:
    """A functor on the product category left x right, given on pairs."""

    left: object
    right: object
    target: object
    object_map: dict
    morphism_map: dict
    name: str = "F"

    def obj(self, x, y):
        return self.object_map[(x, y)]

    def mor(self, f, g):
        return self.morphism_map[(f, g)]

    def partial_left(self, y):
        """F(-, y) as a functor on the left category."""
        id_y = self.right.identity(y)
        return Functor(
            source=self.left,
            target=self.target,
            object_map={x: self.object_map[(x, y)] for x in self.left.objects},
            morphism_map={f: self.morphism_map[(f, id_y)] for f in self.left.base.morphisms},
            name=f"{self.name}(-, {y})",
        )

    def partial_right(self, x):
        """F(x, -) as a functor on the right category."""
        id_x = self.left.identity(x)
        return Functor(
            source=self.right,
            target=self.target,
            object_map={y: self.object_map[(x, y)] for y in self.right.objects},
            morphism_map={g: self.morphism_map[(id_x, g)] for g in self.right.base.morphisms},
            name=f"{self.name}({x}, -)",
        )


def cofibration_order(C):
    """Pairs (x, y) such that some cofibration x -> y exists."""
    return {(C.src(m), C.dst(m)) for m in C.cofibrations}


def _bound(C, leq, x, y, lower):
    if lower:
        candidates = [u for u in C.objects if (u, x) in leq and (u, y) in leq]
        best = [u for u in candidates if all((v, u) in leq for v in candidates)]
    else:
        candidates = [u for u in C.objects if (x, u) in leq and (y, u) in leq]
        best = [u for u in candidates if all((u, v) in leq for v in candidates)]
    if len(best) != 1:
        kind = "meet" if lower else "join"
        raise StructuralError(f"{x!r} and {y!r} have no {kind} in the cofibration order", location=C.name)
    return best[0]


def _image_morphism(E, both_cofibrations, a, b):
    if both_cofibrations:
        return E.unique_cofibration(a, b)
    return E.base.zero_morphism(a, b)


def identity_functor(C):
    return Functor(
        source=C,
        target=C,
        object_map={x: x for x in C.objects},
        morphism_map={m: m for m in C.base.morphisms},
        name="id",
    )


def zero_functor(C, E):
    """The functor sending everything to the zero object of E."""
    id_zero = E.identity(E.zero)
    return Functor(
        source=C,
        target=E,
        object_map={x: E.zero for x in C.objects},
        morphism_map={m: id_zero for m in C.base.morphisms},
        name="zero",
    )


def meet_with(C, element):
    """The endofunctor x -> x ∧ element of a lattice-like category."""
    if element not in C.objects:
        raise StructuralError(f"unknown object {element!r}", location="meet_with")
    leq = cofibration_order(C)
    object_map = {x: _bound(C, leq, x, element, lower=True) for x in C.objects}
    morphism_map = {
        m: _image_morphism(C, m in C.cofibrations, object_map[C.src(m)], object_map[C.dst(m)])
        for m in C.base.morphisms
    }
    return Functor(C, C, object_map, morphism_map, name=f"meet({element})")


def _lattice_bifunctor(C, lower, name):
    leq = cofibration_order(C)
    object_map = {
        (x, y): _bound(C, leq, x, y, lower=lower)
        for x, y in product(C.objects, repeat=2)
    }
    morphism_map = {}
    for f, g in product(C.base.morphisms, repeat=2):
        a = object_map[(C.src(f), C.src(g))]
        b = object_map[(C.dst(f), C.dst(g))]
        both = f in C.cofibrations and g in C.cofibrations
        morphism_map[(f, g)] = _image_morphism(C, both, a, b)
    logger.debug(f"Built {name} bifunctor on {C.name}")
    return BiFunctor(C, C, C, object_map, morphism_map, name=name)


def meet_bifunctor(C):
    """(x, y) -> x ∧ y; pairs of cofibrations go to the cofibration, the rest to zero."""
    return _lattice_bifunctor(C, lower=True, name="meet")


def join_bifunctor(C):
    """(x, y) -> x ∨ y; pairs of cofibrations go to the cofibration, the rest to zero."""
    return _lattice_bifunctor(C, lower=False, name="join")


def zero_bifunctor(C, D, E):
    id_zero = E.identity(E.zero)
    return BiFunctor(
        left=C,
        right=D,
        target=E,
        object_map={(x, y): E.zero for x, y in product(C.objects, D.objects)},
        morphism_map={(f, g): id_zero for f, g in product(C.base.morphisms, D.base.morphisms)},
        name="zero",
    )


BUILTIN_BIFUNCTORS = {
    "meet": meet_bifunctor,
    "join": join_bifunctor,
    "zero": lambda C: zero_bifunctor(C, C, C),
}

"""
The category S_n C and the action of Ord* maps on its morphisms.

A morphism x -> y of S_n C is a family f_k: A_k -> B_k (k = 1..n) commuting with
the chains; the maps on quotient grids are then forced by the pushouts. Along
phi: [n] -> [m] a morphism is transported to the grid entries carried by
S(phi): component j is f_{L(j)} when r = 0 and otherwise the unique map
A_{r,L(j)} -> B_{r,L(j)} induced on quotients.
"""

import logging
from dataclasses import dataclass, field

from django.conf import settings

from OrderY.exceptions import CapError, StructuralError
from fincat.category import FinCategory
from fincat.checks import find_mediating
from .objects import s_construction, s_level

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SCategory:
    """
    S_n C with integer ids.

    Attributes:
        level: The SLevel whose positions are the object ids.
        category: FinCategory on those ids; morphism ids are ints.
        components: Morphism id -> (f_1, ..., f_n) in C.
        lookup: (source id, target id, components) -> morphism id.
    """

    level: object
    category: FinCategory
    components: tuple
    lookup: dict
    construction: object = field(repr=False)
    _transports: dict = field(default_factory=dict, repr=False)

    @property
    def n(self):
        return self.level.n

    def morphism(self, source, target, components):
        return self.lookup[(source, target, tuple(components))]

    def transport(self, phi, target):
        """
        The functor S(phi): S_n C -> S_m C on ids.

        Returns:
            (object map, morphism map) as tuples indexed by id.
        """
        if phi.source != self.n or phi.target != target.n:
            raise StructuralError(
                f"cannot transport along {phi} from S_{self.n} to S_{target.n}", location="transport"
            )
        key = (phi, id(target))
        cached = self._transports.get(key)
        if cached is not None:
            return cached
        construction = self.construction
        elements = self.level.elements
        objects = tuple(target.level.position(construction.apply(x, phi)) for x in elements)
        index = construction.supported_index(phi)
        maps = []
        for m, components in enumerate(self.components):
            s, t = self.category.morphisms[m]
            moved = transport_components(construction.C, elements[s], elements[t], components, phi.target, index)
            maps.append(target.lookup[(objects[s], objects[t], moved)])
        result = (objects, tuple(maps))
        self._transports[key] = result
        return result


def transport_components(C, x, y, components, m, index):
    """Components of S(phi)(f) for f: x -> y, given (r, L) of phi (None for the zero map)."""
    zero_id = C.identity(C.zero)
    if index is None:
        return (zero_id,) * m
    r, L = index
    moved = []
    for j in range(1, m + 1):
        l = L[j]
        f = zero_id if l == 0 else components[l - 1]
        if r == 0:
            moved.append(f)
        else:
            moved.append(find_mediating(C, x.obj(r, l), [x.q(r, l)], [C.comp(y.q(r, l), f)]))
    return tuple(moved)


def _morphisms_between(C, x, y):
    found = []

    def extend(prefix, k):
        if k == x.n:
            found.append(tuple(prefix))
            return
        previous = C.identity(C.zero) if k == 0 else prefix[-1]
        required = C.comp(y.chain[k], previous)
        for f in C.hom(x.objects[k + 1], y.objects[k + 1]):
            if C.comp(f, x.chain[k]) == required:
                extend(prefix + [f], k + 1)

    extend([], 0)
    return found


def s_category(C, n):
    """
    Build S_n C as a finite category, memoized per category and degree.

    Raises:
        CapError: If the morphism count exceeds KY_MAX_LEVEL_SIZE.
    """
    construction = s_construction(C)
    cached = construction.categories.get(n)
    if cached is not None:
        return cached
    limit = getattr(settings, "KY_MAX_LEVEL_SIZE", 200_000)
    level = s_level(C, n)

    components, lookup, morphisms = [], {}, {}
    for s, x in enumerate(level.elements):
        for t, y in enumerate(level.elements):
            for family in _morphisms_between(C, x, y):
                m = len(components)
                components.append(family)
                lookup[(s, t, family)] = m
                morphisms[m] = (s, t)
        if len(components) > limit:
            raise CapError(f"S_{n} of {C.name} has more than {limit} morphisms", location="KY_MAX_LEVEL_SIZE")

    identities = {
        s: lookup[(s, s, tuple(C.identity(obj) for obj in x.objects[1:]))]
        for s, x in enumerate(level.elements)
    }
    outgoing = {}
    for m, (s, _) in morphisms.items():
        outgoing.setdefault(s, []).append(m)
    compose = {}
    for f, (s, t) in morphisms.items():
        for g in outgoing.get(t, ()):
            family = tuple(C.comp(a, b) for a, b in zip(components[g], components[f]))
            compose[(g, f)] = lookup[(s, morphisms[g][1], family)]

    category = FinCategory(
        objects=tuple(range(len(level.elements))),
        morphisms=morphisms,
        compose=compose,
        identities=identities,
        zero=0,
        name=f"S{n}({C.name})",
    )
    result = SCategory(level=level, category=category, components=tuple(components), lookup=lookup,
                       construction=construction)
    construction.categories[n] = result
    logger.info(f"Built {category.name}: {len(level.elements)} objects, {len(components)} morphisms")
    return result


class SBiFunctor:
    """
    S_n F: S_n C x S_n D -> S_n E for a bifunctor F, on ids of the S categories.

    Chains map to the chains of images F(a_j, b_j) and morphisms componentwise;
    both are memoized.
    """

    def __init__(self, F, n):
        self.F = F
        self.n = n
        self.left = s_category(F.left, n)
        self.right = s_category(F.right, n)
        self.target = s_category(F.target, n)
        self._objects = {}
        self._morphisms = {}

    def obj(self, x, y):
        key = (x, y)
        if key not in self._objects:
            a = self.left.level.elements[x]
            b = self.right.level.elements[y]
            chain = tuple(self.F.mor(f, g) for f, g in zip(a.chain, b.chain))
            image = self.target.construction.canonical(chain)
            self._objects[key] = self.target.level.position(image)
        return self._objects[key]

    def mor(self, f, g):
        key = (f, g)
        if key not in self._morphisms:
            s = self.obj(self.left.category.src(f), self.right.category.src(g))
            t = self.obj(self.left.category.dst(f), self.right.category.dst(g))
            family = tuple(
                self.F.mor(a, b) for a, b in zip(self.left.components[f], self.right.components[g])
            )
            self._morphisms[key] = self.target.lookup[(s, t, family)]
        return self._morphisms[key]


def s_bifunctor(F, n):
    return SBiFunctor(F, n)

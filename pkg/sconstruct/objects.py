"""
Objects of S_n C: chains of cofibrations from 0 with their canonical quotient grid.

The grid of a chain 0 = A_0 >-> A_1 >-> ... >-> A_n is normalized through the
witness table:
    A_{0j} = A_j with q_{0j} the identity,
    A_{jj} = 0,
    A_{ij} (0 < i < j) = the witness pushout of A_i >-> A_j along A_i -> 0.
Structural maps A_{ij} -> A_{ik} come from the universal property of A_{ij}
and every sequence A_{ij} >-> A_{ik} ->> A_{jk} is re-verified to be a
cofibration sequence.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from weakref import WeakKeyDictionary

from django.conf import settings

from OrderY.exceptions import CapError, ConstructionError, StructuralError
from fincat.checks import find_mediating, pushout_failure

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SObject:
    """
    A canonical object of S_n C, compared by its chain.

    Attributes:
        n: Degree.
        chain: Cofibration ids a_0..a_{n-1}, a_i: A_i >-> A_{i+1}.
        objects: A_0..A_n.
        grid: (i, j) -> (A_ij, q_ij: A_j -> A_ij) for i <= j.
        structural: (i, j, k) -> cofibration A_ij >-> A_ik for i <= j <= k.
    """

    n: int
    chain: tuple
    objects: tuple
    grid: dict = field(repr=False)
    structural: dict = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, SObject) and self.chain == other.chain and self.n == other.n

    def __hash__(self):
        return hash((self.n, self.chain))

    def obj(self, i, j):
        return self.grid[(i, j)][0]

    def q(self, i, j):
        return self.grid[(i, j)][1]

    @property
    def is_zero(self):
        return all(obj == self.objects[0] for obj in self.objects)

    def __str__(self):
        return "(" + ", ".join(str(a) for a in self.chain) + ")"


class SConstruction:
    """Canonical S-construction data for one category, memoized per chain."""

    def __init__(self, C):
        self.C = C
        self._objects = {}
        self._levels = {}
        self.categories = {}

    def composite(self, chain, i, j):
        """The cofibration A_i >-> A_j composed from the chain (identity when i == j)."""
        C = self.C
        if i == j:
            source = C.zero if i == 0 else C.dst(chain[i - 1])
            return C.identity(source)
        m = chain[i]
        for a in chain[i + 1:j]:
            m = C.comp(a, m)
        return m

    def _check_chain(self, chain):
        C = self.C
        current = C.zero
        for position, a in enumerate(chain):
            if a not in C.base.morphisms:
                raise StructuralError(f"unknown morphism {a!r}", location=f"chain[{position}]")
            if not C.is_cofibration(a):
                raise StructuralError(f"{a!r} is not a cofibration", location=f"chain[{position}]")
            if C.src(a) != current:
                raise StructuralError(
                    f"{a!r} starts at {C.src(a)!r}, expected {current!r}", location=f"chain[{position}]"
                )
            current = C.dst(a)

    def canonical(self, chain):
        """
        Complete a chain of cofibrations from 0 to its canonical SObject.

        Raises:
            StructuralError: If the chain is malformed.
            MissingWitnessError: If a quotient witness is absent.
            ConstructionError: If a mediating search or a cofibration-sequence
                check fails.
        """
        chain = tuple(chain)
        cached = self._objects.get(chain)
        if cached is not None:
            return cached
        self._check_chain(chain)
        C = self.C
        n = len(chain)
        objects = (C.zero,) + tuple(C.dst(a) for a in chain)

        grid, legs = {}, {}
        for j in range(n + 1):
            grid[(0, j)] = (objects[j], C.identity(objects[j]))
            if j > 0:
                grid[(j, j)] = (C.zero, C.zero_out(objects[j]))
            for i in range(1, j):
                w = C.witness(self.composite(chain, i, j), C.zero_out(objects[i]))
                grid[(i, j)] = (w.obj, w.inc_cof)
                legs[(i, j)] = w.inc_other

        structural = {}
        for i in range(n + 1):
            for j in range(i, n + 1):
                for k in range(j, n + 1):
                    target = grid[(i, k)][0]
                    if i == 0:
                        s = self.composite(chain, j, k)
                    elif i == j:
                        s = C.zero_in(target)
                    else:
                        s = find_mediating(
                            C,
                            grid[(i, j)][0],
                            [grid[(i, j)][1], legs[(i, j)]],
                            [C.comp(grid[(i, k)][1], self.composite(chain, j, k)), C.zero_in(target)],
                        )
                    structural[(i, j, k)] = s

        x = SObject(n=n, chain=chain, objects=objects, grid=grid, structural=structural)
        self._verify_sequences(x)
        self._objects[chain] = x
        return x

    def _verify_sequences(self, x):
        C = self.C
        for (i, j, k), s in x.structural.items():
            if not C.is_cofibration(s):
                logger.error(f"Structural map {s!r} of {x} at {(i, j, k)} is not a cofibration")
                raise ConstructionError(f"structural map A{i}{j} -> A{i}{k} of {x} is not a cofibration")
            p = find_mediating(C, x.obj(i, k), [x.q(i, k)], [x.q(j, k)])
            failure = pushout_failure(
                C, s, C.zero_out(x.obj(i, j)), x.obj(j, k), p, C.zero_in(x.obj(j, k))
            )
            if failure:
                raise ConstructionError(
                    f"A{i}{j} >-> A{i}{k} ->> A{j}{k} of {x} is not a cofibration sequence: {failure[1]}"
                )

    def zero_object(self, n):
        return self.canonical((self.C.identity(self.C.zero),) * n)

    def _steps(self, obj):
        steps = list(self.C.cofibrations_from(obj))
        identity = self.C.identity(obj)
        if identity in steps:
            steps.remove(identity)
            steps.insert(0, identity)
        return steps

    def enumerate(self, n):
        """All SObjects of degree n; the zero chain first, then depth-first order."""
        cached = self._levels.get(n)
        if cached is not None:
            return cached
        limit = getattr(settings, "KY_MAX_LEVEL_SIZE", 200_000)
        chains = []

        def extend(prefix, obj):
            if len(prefix) == n:
                chains.append(prefix)
                if len(chains) > limit:
                    raise CapError(
                        f"S_{n} of {self.C.name} has more than {limit} objects", location="KY_MAX_LEVEL_SIZE"
                    )
                return
            for a in self._steps(obj):
                extend(prefix + (a,), self.C.dst(a))

        extend((), self.C.zero)
        level = tuple(self.canonical(chain) for chain in chains)
        self._levels[n] = level
        logger.debug(f"S_{n} of {self.C.name}: {len(level)} objects")
        return level

    def supported_index(self, phi):
        """(r, L) for phi, or None when phi kills every step."""
        support = phi.support
        if not support:
            return None
        r = support[0] - 1
        L = []
        for j in range(phi.target + 1):
            below = [x for x in support if phi(x) <= j]
            L.append(max(below) if below else r)
        return r, tuple(L)

    def apply(self, x, phi):
        """The SObject S(phi)(x) of degree phi.target."""
        if phi.source != x.n:
            raise StructuralError(
                f"map source [{phi.source}] does not match degree {x.n}", location="apply_ord_map"
            )
        phi.check(location="apply_ord_map")
        index = self.supported_index(phi)
        if index is None:
            return self.zero_object(phi.target)
        r, L = index
        chain = tuple(x.structural[(r, L[j], L[j + 1])] for j in range(phi.target))
        return self.canonical(chain)


_CONSTRUCTIONS = WeakKeyDictionary()


def s_construction(C):
    """The memoized SConstruction of C."""
    construction = _CONSTRUCTIONS.get(C)
    if construction is None:
        construction = SConstruction(C)
        _CONSTRUCTIONS[C] = construction
    return construction


def canonical_quotients(C, chain):
    return s_construction(C).canonical(chain)


def enumerate_s_objects(C, n):
    return list(s_construction(C).enumerate(n))


def apply_ord_map(C, x, phi):
    return s_construction(C).apply(x, phi)


@dataclass(frozen=True)
class SLevel:
    """S_n C as a pointed set; the basepoint is the zero chain at position 0."""

    n: int
    elements: tuple

    @property
    def basepoint(self):
        return self.elements[0]

    @cached_property
    def _positions(self):
        return {x: k for k, x in enumerate(self.elements)}

    def position(self, x):
        return self._positions[x]


def s_level(C, Z):
    """S_Z C through the canonical isomorphism Z = [n]; Z may be an OrdSet or a size."""
    n = getattr(Z, "size", Z)
    return SLevel(n=n, elements=s_construction(C).enumerate(n))

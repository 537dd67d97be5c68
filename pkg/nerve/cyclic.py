"""
The cyclic nerve of a finite category.

An n-simplex is a tuple (f_0, ..., f_n) with f_i: A_{i+1} -> A_i for i < n and
f_n: A_0 -> A_n. Faces compose neighbours (d_i for i < n replaces f_i, f_{i+1}
by f_i∘f_{i+1}; d_n replaces f_n, f_0 by f_n∘f_0 at the front), s_i inserts the
identity of A_{i+1} after f_i, and t rotates f_n to the front.
"""

import logging
from dataclasses import dataclass
from weakref import WeakKeyDictionary

from OrderY.exceptions import ConstructionError
from simpset.sets import SimplicialSet, after, check_level_size, validate

logger = logging.getLogger(__name__)


def face_element(A, element, i):
    n = len(element) - 1
    if i < n:
        return element[:i] + (A.comp(element[i], element[i + 1]),) + element[i + 2:]
    return (A.comp(element[n], element[0]),) + element[1:n]


def degeneracy_element(A, element, i):
    return element[: i + 1] + (A.identity(A.src(element[i])),) + element[i + 1:]


def rotate_element(element):
    return (element[-1],) + element[:-1]


def identity_loop(A, obj, n):
    """The degree-n simplex of identities on `obj`."""
    return (A.identity(obj),) * (n + 1)


class NerveTables:
    """Cyclic nerve levels and structure tables of one category, built on demand."""

    def __init__(self, A):
        self.A = A
        self._levels = {}
        self._positions = {}
        self._tables = {}

    def level(self, n):
        cached = self._levels.get(n)
        if cached is None:
            cached = tuple(_enumerate(self.A, n))
            check_level_size(len(cached), f"CN_{n}({self.A.name})")
            self._levels[n] = cached
            self._positions[n] = {element: k for k, element in enumerate(cached)}
        return cached

    def position(self, n, element):
        self.level(n)
        return self._positions[n][element]

    def _table(self, key, build):
        cached = self._tables.get(key)
        if cached is None:
            cached = build()
            self._tables[key] = cached
        return cached

    def face(self, n, i):
        return self._table(("d", n, i), lambda: tuple(
            self.position(n - 1, face_element(self.A, e, i)) for e in self.level(n)
        ))

    def degeneracy(self, n, i):
        return self._table(("s", n, i), lambda: tuple(
            self.position(n + 1, degeneracy_element(self.A, e, i)) for e in self.level(n)
        ))

    def cyclic(self, n):
        return self._table(("t", n), lambda: tuple(
            self.position(n, rotate_element(e)) for e in self.level(n)
        ))

    def image(self, n, morphism_map, target):
        """Table of the nerve map induced by a functor given on morphism ids."""
        return tuple(
            target.position(n, tuple(morphism_map[m] for m in e)) for e in self.level(n)
        )


def _enumerate(A, n):
    if n == 0:
        return [(m,) for m, (s, t) in A.morphisms.items() if s == t]
    found = []

    def extend(prefix):
        if len(prefix) == n:
            for f in A.hom(A.dst(prefix[0]), A.src(prefix[-1])):
                found.append(prefix + (f,))
            return
        for f in A.into(A.src(prefix[-1])):
            extend(prefix + (f,))

    for f in A.morphisms:
        extend((f,))
    return found


_TABLES = WeakKeyDictionary()


def nerve_tables(A):
    """Memoized NerveTables of A."""
    tables = _TABLES.get(A)
    if tables is None:
        tables = NerveTables(A)
        _TABLES[A] = tables
    return tables


@dataclass(frozen=True, eq=False)
class CyclicSet:
    """A simplicial set with cyclic operators t_n (position tables)."""

    simplicial: SimplicialSet
    cyclic: tuple

    @property
    def cap(self):
        return self.simplicial.cap

    @property
    def name(self):
        return self.simplicial.name

    def t(self, n):
        return self.cyclic[n]


def validate_cyclic(Z):
    """
    Check the simplicial identities and the cyclic relations within the cap.

    Relations: t_n^{n+1} = id; d_i t = t d_{i-1} and d_0 t = d_n;
    s_i t = t s_{i-1} and s_0 t = t^2 s_n.
    """
    X = Z.simplicial
    report = validate(X)
    report.subject = f"cyclic set {X.name}"
    if not report.ok:
        return report
    for n in range(X.cap + 1):
        t = Z.t(n)
        power = tuple(range(X.size(n)))
        for _ in range(n + 1):
            power = after(t, power)
        if power != tuple(range(X.size(n))):
            report.add("cyclic.order", f"t_{n}^{n + 1} is not the identity", f"level {n}")
        if n >= 1:
            previous = Z.t(n - 1)
            if after(X.d(n, 0), t) != X.d(n, n):
                report.add("cyclic.d", "d_0 t != d_n", f"level {n}")
            for i in range(1, n + 1):
                if after(X.d(n, i), t) != after(previous, X.d(n, i - 1)):
                    report.add("cyclic.d", f"d_{i} t != t d_{i - 1}", f"level {n}")
        if n < X.cap:
            following = Z.t(n + 1)
            if after(X.s(n, 0), t) != after(following, after(following, X.s(n, n))):
                report.add("cyclic.s", "s_0 t != t^2 s_n", f"level {n}")
            for i in range(1, n + 1):
                if after(X.s(n, i), t) != after(following, X.s(n, i - 1)):
                    report.add("cyclic.s", f"s_{i} t != t s_{i - 1}", f"level {n}")
    logger.info(f"Validated cyclic set {X.name}: valid={report.ok}")
    return report


def cyclic_nerve(A, cap):
    """
    The cyclic nerve of A up to `cap`, with all relations verified.

    Raises:
        ConstructionError: If a simplicial or cyclic relation fails.
    """
    A = getattr(A, "base", A)
    tables = nerve_tables(A)
    X = SimplicialSet(
        cap=cap,
        elements=tuple(tables.level(n) for n in range(cap + 1)),
        faces={(n, i): tables.face(n, i) for n in range(1, cap + 1) for i in range(n + 1)},
        degeneracies={(n, i): tables.degeneracy(n, i) for n in range(cap) for i in range(n + 1)},
        name=f"CN({A.name})",
    )
    Z = CyclicSet(simplicial=X, cyclic=tuple(tables.cyclic(n) for n in range(cap + 1)))
    report = validate_cyclic(Z)
    if not report.ok:
        logger.error(f"Cyclic nerve of {A.name} fails its relations: {report}")
        raise ConstructionError(f"cyclic nerve of {A.name} fails: {report.violations[0]}")
    return Z


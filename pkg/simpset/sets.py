"""
Capped simplicial sets stored as index tables.

Level n of a SimplicialSet is a tuple of hashable labels; faces and degeneracies
are tuples of positions, so d(n, i)[x] is the position in level n - 1 of the
i-th face of simplex x. Pointed sets carry the basepoint position per level.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property

from django.conf import settings

from OrderY.exceptions import CapError, ConstructionError, StructuralError
from OrderY.reports import ValidationReport

logger = logging.getLogger(__name__)


def after(a, b):
    """Index-table composite a∘b."""
    return tuple(a[v] for v in b)


def check_level_size(size, where):
    limit = getattr(settings, "KY_MAX_LEVEL_SIZE", 200_000)
    if size > limit:
        raise CapError(f"{where} has {size} simplices, more than {limit}", location="KY_MAX_LEVEL_SIZE")


@dataclass(frozen=True, eq=False)
class SimplicialSet:
    """
    A simplicial set truncated at `cap`.

    Attributes:
        cap: Highest level N.
        elements: Per level, the tuple of simplex labels.
        faces: (n, i) -> positions, level n -> level n - 1, for 1 <= n <= N.
        degeneracies: (n, i) -> positions, level n -> level n + 1, for n < N.
        basepoints: Per level basepoint position, or None when unpointed.
        name: Label used in reports.
    """

    cap: int
    elements: tuple
    faces: dict
    degeneracies: dict
    basepoints: tuple = None
    name: str = "X"
    _nondegenerate: dict = field(default_factory=dict, repr=False)

    def size(self, n):
        return len(self.elements[n])

    def d(self, n, i):
        return self.faces[(n, i)]

    def s(self, n, i):
        return self.degeneracies[(n, i)]

    def label(self, n, x):
        return self.elements[n][x]

    @cached_property
    def _positions(self):
        return [{label: k for k, label in enumerate(level)} for level in self.elements]

    def position(self, n, label):
        return self._positions[n][label]

    @property
    def is_pointed(self):
        return self.basepoints is not None

    @property
    def is_reduced(self):
        return self.size(0) == 1

    def nondegenerate(self, n):
        """Positions of level-n simplices outside the image of every degeneracy."""
        if not 0 <= n <= self.cap:
            raise CapError(f"degree {n} outside 0..{self.cap} of {self.name}", location="nondegenerate")
        cached = self._nondegenerate.get(n)
        if cached is not None:
            return cached
        degenerate = set()
        for i in range(n):
            degenerate.update(self.s(n - 1, i))
        result = tuple(x for x in range(self.size(n)) if x not in degenerate)
        self._nondegenerate[n] = result
        return result

    def is_degenerate(self, n, x):
        return x not in set(self.nondegenerate(n))

    def truncate(self, cap):
        if cap > self.cap:
            raise CapError(f"cannot raise the cap of {self.name} from {self.cap} to {cap}", location="cap")
        return SimplicialSet(
            cap=cap,
            elements=self.elements[: cap + 1],
            faces={k: v for k, v in self.faces.items() if k[0] <= cap},
            degeneracies={k: v for k, v in self.degeneracies.items() if k[0] < cap},
            basepoints=self.basepoints[: cap + 1] if self.basepoints is not None else None,
            name=self.name,
        )


def from_functions(name, cap, level, face, degeneracy, basepoint=None):
    """
    Tabulate a simplicial set from label-level functions.

    Args:
        level: n -> iterable of labels.
        face: (n, i, label) -> label in level n - 1.
        degeneracy: (n, i, label) -> label in level n + 1.
        basepoint: n -> basepoint label, or None for an unpointed set.

    Raises:
        ConstructionError: If a structure map leaves its target level.
        CapError: If a level exceeds KY_MAX_LEVEL_SIZE.
    """
    elements = []
    for n in range(cap + 1):
        labels = tuple(level(n))
        check_level_size(len(labels), f"level {n} of {name}")
        elements.append(labels)
    positions = [{label: k for k, label in enumerate(labels)} for labels in elements]

    def locate(n, label, where):
        try:
            return positions[n][label]
        except KeyError:
            logger.error(f"{where} of {name} produced {label!r} outside level {n}")
            raise ConstructionError(f"{where} of {name} produced {label!r}, not a simplex of level {n}") from None

    faces = {
        (n, i): tuple(locate(n - 1, face(n, i, x), f"d({n},{i})") for x in elements[n])
        for n in range(1, cap + 1)
        for i in range(n + 1)
    }
    degeneracies = {
        (n, i): tuple(locate(n + 1, degeneracy(n, i, x), f"s({n},{i})") for x in elements[n])
        for n in range(cap)
        for i in range(n + 1)
    }
    basepoints = None
    if basepoint is not None:
        basepoints = tuple(locate(n, basepoint(n), "basepoint") for n in range(cap + 1))
    X = SimplicialSet(cap, tuple(elements), faces, degeneracies, basepoints, name=name)
    logger.debug(f"Tabulated {name}: sizes {[len(e) for e in elements]}")
    return X


def point(cap, name="point"):
    """The one-point simplicial set."""
    return from_functions(name, cap, lambda n: ("*",), lambda n, i, x: x, lambda n, i, x: x, lambda n: "*")


def validate(X):
    """
    Check table shapes, the simplicial identities and basepoint preservation.

    Returns:
        ValidationReport with codes shape, identity.dd, identity.ds,
        identity.ss and basepoint.
    """
    report = ValidationReport(subject=f"simplicial set {X.name}")
    N = X.cap
    if len(X.elements) != N + 1:
        report.add("shape", f"expected {N + 1} levels, got {len(X.elements)}", "levels")
        return report
    for n in range(1, N + 1):
        for i in range(n + 1):
            _check_table(report, X.faces.get((n, i)), X.size(n), X.size(n - 1), f"d({n},{i})")
    for n in range(N):
        for i in range(n + 1):
            _check_table(report, X.degeneracies.get((n, i)), X.size(n), X.size(n + 1), f"s({n},{i})")
    if not report.ok:
        return report

    d, s = X.d, X.s
    for n in range(2, N + 1):
        for j in range(n + 1):
            for i in range(j):
                if after(d(n - 1, i), d(n, j)) != after(d(n - 1, j - 1), d(n, i)):
                    report.add("identity.dd", f"d_{i} d_{j} != d_{j - 1} d_{i}", f"level {n}")
    for n in range(N):
        identity = tuple(range(X.size(n)))
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = after(d(n + 1, i), s(n, j))
                if i < j:
                    rhs = after(s(n - 1, j - 1), d(n, i))
                elif i in (j, j + 1):
                    rhs = identity
                else:
                    rhs = after(s(n - 1, j), d(n, i - 1))
                if lhs != rhs:
                    report.add("identity.ds", f"d_{i} s_{j} fails", f"level {n}")
    for n in range(N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                if after(s(n + 1, i), s(n, j)) != after(s(n + 1, j + 1), s(n, i)):
                    report.add("identity.ss", f"s_{i} s_{j} != s_{j + 1} s_{i}", f"level {n}")

    if X.is_pointed:
        b = X.basepoints
        for n in range(1, N + 1):
            if X.s(n - 1, 0)[b[n - 1]] != b[n]:
                report.add("basepoint", "basepoint is not the degenerate basepoint", f"level {n}")
            for i in range(n + 1):
                if d(n, i)[b[n]] != b[n - 1]:
                    report.add("basepoint", f"d_{i} moves the basepoint", f"level {n}")
    logger.info(f"Validated {X.name} (cap {N}): valid={report.ok}")
    return report


def _check_table(report, table, source, target, where):
    if table is None:
        report.add("shape", "map missing", where)
    elif len(table) != source:
        report.add("shape", f"expected {source} entries, got {len(table)}", where)
    elif any(not 0 <= v < target for v in table):
        report.add("shape", f"entry outside level of size {target}", where)


def _require_same_cap(X, Z, operation):
    if X.cap != Z.cap:
        raise StructuralError(f"caps differ: {X.name} has {X.cap}, {Z.name} has {Z.cap}", location=operation)


def product(X, Z):
    """Levelwise product; simplices are position pairs. Pointed when both factors are."""
    _require_same_cap(X, Z, "product")
    basepoint = None
    if X.is_pointed and Z.is_pointed:
        basepoint = lambda n: (X.basepoints[n], Z.basepoints[n])  # noqa: E731
    return from_functions(
        f"{X.name}x{Z.name}",
        X.cap,
        lambda n: ((x, z) for x in range(X.size(n)) for z in range(Z.size(n))),
        lambda n, i, p: (X.d(n, i)[p[0]], Z.d(n, i)[p[1]]),
        lambda n, i, p: (X.s(n, i)[p[0]], Z.s(n, i)[p[1]]),
        basepoint,
    )


def smash(X, Z):
    """
    X ∧ Z: the product with both basepoint slices collapsed to "*".

    Non-basepoint simplices are position pairs (x, z).
    """
    _require_same_cap(X, Z, "smash")
    if not (X.is_pointed and Z.is_pointed):
        raise StructuralError("smash needs pointed simplicial sets", location="smash")
    bx, bz = X.basepoints, Z.basepoints

    def collapse(n, x, z):
        return "*" if x == bx[n] or z == bz[n] else (x, z)

    def level(n):
        yield "*"
        for x in range(X.size(n)):
            for z in range(Z.size(n)):
                if x != bx[n] and z != bz[n]:
                    yield (x, z)

    def face(n, i, p):
        return p if p == "*" else collapse(n - 1, X.d(n, i)[p[0]], Z.d(n, i)[p[1]])

    def degeneracy(n, i, p):
        return p if p == "*" else collapse(n + 1, X.s(n, i)[p[0]], Z.s(n, i)[p[1]])

    return from_functions(f"{X.name}^{Z.name}", X.cap, level, face, degeneracy, lambda n: "*")


@dataclass(frozen=True, eq=False)
class SimplicialMap:
    """Levelwise position tables f_n: X_n -> Z_n for n <= cap."""

    source: SimplicialSet
    target: SimplicialSet
    maps: tuple
    name: str = "f"

    @property
    def cap(self):
        return len(self.maps) - 1

    def __getitem__(self, n):
        return self.maps[n]


def identity_map(X):
    return SimplicialMap(X, X, tuple(tuple(range(X.size(n))) for n in range(X.cap + 1)), name="id")


def compose_maps(g, f):
    if f.target is not g.source:
        raise StructuralError(f"cannot compose {g.name} after {f.name}", location="compose_maps")
    cap = min(f.cap, g.cap)
    return SimplicialMap(f.source, g.target, tuple(after(g[n], f[n]) for n in range(cap + 1)),
                         name=f"{g.name}*{f.name}")


def validate_map(f):
    """Check shapes, commutation with faces and degeneracies, and basepoints."""
    X, Z = f.source, f.target
    report = ValidationReport(subject=f"simplicial map {f.name}")
    if f.cap > min(X.cap, Z.cap):
        report.add("shape", "map has levels beyond the caps", "maps")
        return report
    for n in range(f.cap + 1):
        _check_table(report, f.maps[n], X.size(n), Z.size(n), f"f({n})")
    if not report.ok:
        return report
    for n in range(1, f.cap + 1):
        for i in range(n + 1):
            if after(f[n - 1], X.d(n, i)) != after(Z.d(n, i), f[n]):
                report.add("commute.d", f"f does not commute with d_{i}", f"level {n}")
    for n in range(f.cap):
        for i in range(n + 1):
            if after(f[n + 1], X.s(n, i)) != after(Z.s(n, i), f[n]):
                report.add("commute.s", f"f does not commute with s_{i}", f"level {n}")
    if X.is_pointed and Z.is_pointed:
        for n in range(f.cap + 1):
            if f[n][X.basepoints[n]] != Z.basepoints[n]:
                report.add("basepoint", "basepoint not preserved", f"level {n}")
    return report


@dataclass(frozen=True, eq=False)
class SimplicialHomotopy:
    """Position tables h_{i,n}: X_n -> Z_{n+1} for 0 <= i <= n < cap, from f to g."""

    f: SimplicialMap
    g: SimplicialMap
    maps: dict
    name: str = "H"

    def h(self, n, i):
        return self.maps[(n, i)]


def validate_simplicial_homotopy(H):
    """
    Check the homotopy identities for H: f ~ g on position tables.

    The identity list is the one used for Ord*-level homotopies: faces with
    i < j, i = j != 0, i > j + 1, degeneracies on both sides of j, and the
    boundary conditions d_0 h_0 = f, d_{n+1} h_n = g.
    """
    f, g = H.f, H.g
    report = ValidationReport(subject=f"homotopy {H.name}")
    report.merge(validate_map(f))
    report.merge(validate_map(g))
    if not report.ok:
        report.note("f or g is not simplicial; homotopy identities not checked")
        return report
    X, Z = f.source, f.target
    N = min(f.cap, g.cap)
    for n in range(N):
        for i in range(n + 1):
            _check_table(report, H.maps.get((n, i)), X.size(n), Z.size(n + 1), f"h({n},{i})")
    if not report.ok:
        return report

    h = H.h
    for n in range(N):
        if after(Z.d(n + 1, 0), h(n, 0)) != f[n]:
            report.add("boundary.f", "d_0 h_0 != f", f"level {n}")
        if after(Z.d(n + 1, n + 1), h(n, n)) != g[n]:
            report.add("boundary.g", f"d_{n + 1} h_{n} != g", f"level {n}")
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = after(Z.d(n + 1, i), h(n, j))
                if i < j:
                    rhs = after(h(n - 1, j - 1), X.d(n, i))
                elif i == j and j != 0:
                    rhs = after(Z.d(n + 1, j), h(n, j - 1))
                elif i > j + 1:
                    rhs = after(h(n - 1, j), X.d(n, i - 1))
                else:
                    continue
                if lhs != rhs:
                    report.add("homotopy.d", f"d_{i} h_{j} fails", f"level {n}")
    for n in range(N - 1):
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = after(Z.s(n + 1, i), h(n, j))
                if i <= j:
                    rhs = after(h(n + 1, j + 1), X.s(n, i))
                else:
                    rhs = after(h(n + 1, j), X.s(n, i - 1))
                if lhs != rhs:
                    report.add("homotopy.s", f"s_{i} h_{j} fails", f"level {n}")
    logger.info(f"Simplicial homotopy {H.name}: valid={report.ok}")
    return report


def dump_simplicial_set(X, limit=None):
    """
    Per-level simplex tables with face and degeneracy images.

    Returns:
        dict suitable for dump_json; labels are rendered with str().
    """
    levels = []
    for n in range(X.cap + 1):
        rows = []
        count = X.size(n) if limit is None else min(limit, X.size(n))
        for x in range(count):
            row = {"simplex": str(X.label(n, x))}
            if n > 0:
                row["faces"] = [str(X.label(n - 1, X.d(n, i)[x])) for i in range(n + 1)]
            if n < X.cap:
                row["degeneracies"] = [str(X.label(n + 1, X.s(n, i)[x])) for i in range(n + 1)]
            rows.append(row)
        levels.append({
            "level": n,
            "size": X.size(n),
            "nondegenerate": len(X.nondegenerate(n)),
            "simplices": rows,
        })
    return {"name": X.name, "cap": X.cap, "pointed": X.is_pointed, "levels": levels}

"""
Simplicial objects Y in finite ordered pointed sets, level maps and homotopies.

Everything is truncated at a dimension cap N: Y has levels Y_0..Y_N, faces
d_{i,n} for 1 <= n <= N and degeneracies s_{i,n} for n < N. Identities are
checked only where both sides are defined within the cap.
"""

import logging
from dataclasses import dataclass, field

from OrderY.exceptions import StructuralError
from OrderY.reports import ValidationReport
from .maps import OrdMap, compose_ord, identity_map, zero_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SimplicialOrd:
    """
    A simplicial object in Ord* truncated at `cap`.

    Attributes:
        cap: Highest level N.
        levels: Sizes |Y_n| - 1, i.e. Y_n = [levels[n]].
        faces: (n, i) -> OrdMap Y_n -> Y_{n-1}.
        degeneracies: (n, i) -> OrdMap Y_n -> Y_{n+1}.
        name: Label used in reports.
    """

    cap: int
    levels: tuple
    faces: dict
    degeneracies: dict
    name: str = "Y"

    def size(self, n):
        return self.levels[n]

    def d(self, n, i):
        return self.faces[(n, i)]

    def s(self, n, i):
        return self.degeneracies[(n, i)]

    @property
    def is_reduced(self):
        """Y_0 is the one-point set [0]."""
        return self.levels[0] == 0

    def truncate(self, cap):
        """The same Y with a lower cap."""
        if cap > self.cap:
            raise StructuralError(f"cannot raise the cap of {self.name} from {self.cap} to {cap}", location="cap")
        return SimplicialOrd(
            cap=cap,
            levels=self.levels[: cap + 1],
            faces={k: v for k, v in self.faces.items() if k[0] <= cap},
            degeneracies={k: v for k, v in self.degeneracies.items() if k[0] < cap},
            name=self.name,
        )


def from_functions(name, cap, size, face, degeneracy):
    """Build a SimplicialOrd from level-size and pointwise face/degeneracy functions."""
    levels = tuple(size(n) for n in range(cap + 1))
    faces = {
        (n, i): OrdMap(levels[n], levels[n - 1], tuple(face(n, i, x) for x in range(levels[n] + 1)))
        for n in range(1, cap + 1)
        for i in range(n + 1)
    }
    degeneracies = {
        (n, i): OrdMap(levels[n], levels[n + 1], tuple(degeneracy(n, i, x) for x in range(levels[n] + 1)))
        for n in range(cap)
        for i in range(n + 1)
    }
    return SimplicialOrd(cap, levels, faces, degeneracies, name=name)


def _check_cap(cap, minimum=1):
    if cap < minimum:
        raise StructuralError(f"cap must be at least {minimum}, got {cap}", location="cap")


def simplicial_circle(cap):
    """
    The pointed simplicial circle with Y_n = [n].

    The n-simplex k of the circle collapses onto the basepoint under the top
    face when k = n, so d_n wraps the last point to 0.
    """
    _check_cap(cap)

    def face(n, i, x):
        y = x - 1 if i < x else x
        return 0 if y == n else y

    def degeneracy(n, i, x):
        return x + 1 if i < x else x

    return from_functions("circle", cap, lambda n: n, face, degeneracy)


def simplicial_cone(cap):
    """
    The simplicial interval with vertex 1 as basepoint, Y_n = [n + 1].

    An n-simplex is recorded by its number k of zero vertices; k = 0 is the
    basepoint simplex.
    """
    _check_cap(cap)
    return from_functions(
        "cone",
        cap,
        lambda n: n + 1,
        lambda n, i, k: k - 1 if i < k else k,
        lambda n, i, k: k + 1 if i < k else k,
    )


def constant_Y(cap, size=0):
    """The constant simplicial object at [size]; all structure maps are identities."""
    _check_cap(cap, minimum=0)
    return from_functions(f"const{size}", cap, lambda n: size, lambda n, i, x: x, lambda n, i, x: x)


def validate_Y(Y):
    """
    Check shapes, map validity and the simplicial identities of Y.

    Returns:
        ValidationReport naming the failing identity with its level and indices.
    """
    report = ValidationReport(subject=f"simplicial object {Y.name}")
    N = Y.cap
    if len(Y.levels) != N + 1:
        report.add("shape", f"expected {N + 1} levels, got {len(Y.levels)}", "levels")
        return report
    for n in range(1, N + 1):
        for i in range(n + 1):
            _check_shape(report, Y.faces.get((n, i)), Y.levels[n], Y.levels[n - 1], f"d({n},{i})")
    for n in range(N):
        for i in range(n + 1):
            _check_shape(report, Y.degeneracies.get((n, i)), Y.levels[n], Y.levels[n + 1], f"s({n},{i})")
    if not report.ok:
        return report

    d, s = Y.d, Y.s
    for n in range(2, N + 1):
        for j in range(n + 1):
            for i in range(j):
                if compose_ord(d(n - 1, i), d(n, j)) != compose_ord(d(n - 1, j - 1), d(n, i)):
                    report.add("identity.dd", f"d_{i} d_{j} != d_{j - 1} d_{i}", f"level {n}")
    for n in range(N):
        ident = identity_map(Y.levels[n])
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = compose_ord(d(n + 1, i), s(n, j))
                if i < j:
                    rhs = compose_ord(s(n - 1, j - 1), d(n, i))
                elif i in (j, j + 1):
                    rhs = ident
                else:
                    rhs = compose_ord(s(n - 1, j), d(n, i - 1))
                if lhs != rhs:
                    report.add("identity.ds", f"d_{i} s_{j} fails", f"level {n}")
    for n in range(N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                if compose_ord(s(n + 1, i), s(n, j)) != compose_ord(s(n + 1, j + 1), s(n, i)):
                    report.add("identity.ss", f"s_{i} s_{j} != s_{j + 1} s_{i}", f"level {n}")
    logger.info(f"Validated {Y.name} (cap {N}): valid={report.ok}")
    return report


def _check_shape(report, m, source, target, where):
    if m is None:
        report.add("shape", "map missing", where)
    elif (m.source, m.target) != (source, target):
        report.add("shape", f"map is [{m.source}]->[{m.target}], expected [{source}]->[{target}]", where)
    else:
        for problem in m.problems():
            report.add("map", problem, where)


@dataclass(frozen=True, eq=False)
class LevelMap:
    """A levelwise map f_n: Y_n -> Y'_n for n <= min(cap)."""

    source: SimplicialOrd
    target: SimplicialOrd
    maps: tuple
    name: str = "f"

    @property
    def cap(self):
        return len(self.maps) - 1

    def __getitem__(self, n):
        return self.maps[n]


def identity_level_map(Y):
    return LevelMap(Y, Y, tuple(identity_map(Y.levels[n]) for n in range(Y.cap + 1)), name="id")


def compose_level_maps(g, f):
    """The levelwise composite g∘f of two level maps."""
    if f.target is not g.source:
        raise StructuralError(f"cannot compose {g.name} after {f.name}", location="compose_level_maps")
    cap = min(f.cap, g.cap)
    return LevelMap(f.source, g.target, tuple(compose_ord(g[n], f[n]) for n in range(cap + 1)),
                    name=f"{g.name}*{f.name}")


def basepoint_level_map(Y, Z):
    """The map sending every simplex of Y to the basepoint of Z."""
    cap = min(Y.cap, Z.cap)
    return LevelMap(Y, Z, tuple(zero_map(Y.levels[n], Z.levels[n]) for n in range(cap + 1)), name="basepoint")


def validate_level_map(f):
    """Check f_{n-1} d_i = d'_i f_n and f_{n+1} s_i = s'_i f_n within the common cap."""
    Y, Z = f.source, f.target
    report = ValidationReport(subject=f"level map {f.name}")
    if f.cap > min(Y.cap, Z.cap):
        report.add("shape", f"map has {len(f.maps)} levels beyond the caps", "maps")
        return report
    for n, m in enumerate(f.maps):
        _check_shape(report, m, Y.levels[n], Z.levels[n], f"f({n})")
    if not report.ok:
        return report
    for n in range(1, f.cap + 1):
        for i in range(n + 1):
            if compose_ord(f[n - 1], Y.d(n, i)) != compose_ord(Z.d(n, i), f[n]):
                report.add("commute.d", f"f does not commute with d_{i}", f"level {n}")
    for n in range(f.cap):
        for i in range(n + 1):
            if compose_ord(f[n + 1], Y.s(n, i)) != compose_ord(Z.s(n, i), f[n]):
                report.add("commute.s", f"f does not commute with s_{i}", f"level {n}")
    return report


@dataclass(frozen=True, eq=False)
class OrdHomotopy:
    """
    Maps h_{i,n}: Y_n -> Y'_{n+1}, 0 <= i <= n < cap, from f to g.

    Attributes:
        f, g: LevelMaps Y -> Y' on the same cap.
        maps: (n, i) -> OrdMap.
    """

    f: LevelMap
    g: LevelMap
    maps: dict = field(default_factory=dict)
    name: str = "H"

    @property
    def cap(self):
        return self.f.cap

    def h(self, n, i):
        return self.maps[(n, i)]


def validate_homotopy(f, g, H):
    """
    Check the simplicial homotopy identities for H: f ~ g.

    With h_j = h_{j,n}: Y_n -> Y'_{n+1}:
        d_i h_j = h_{j-1} d_i              (i < j)
        d_j h_j = d_j h_{j-1}              (i = j != 0)
        d_i h_j = h_j d_{i-1}              (i > j + 1)
        s_i h_j = h_{j+1} s_i              (i <= j)
        s_i h_j = h_j s_{i-1}              (i > j)
        d_0 h_0 = f,  d_{n+1} h_n = g
    Degeneracy identities need h at level n + 1 and are checked for n <= cap - 2.

    Returns:
        ValidationReport; f and g are validated first.

    Raises:
        StructuralError: If H does not have the shape of a homotopy Y -> Y'.
    """
    report = ValidationReport(subject=f"homotopy {H.name}")
    report.merge(validate_level_map(f))
    report.merge(validate_level_map(g))
    if not report.ok:
        report.note("f or g is not simplicial; homotopy identities not checked")
        return report

    Y, Z = f.source, f.target
    if g.source is not Y or g.target is not Z or g.cap != f.cap:
        raise StructuralError("f and g must share source, target and cap", location="homotopy")
    N = f.cap
    if N > Z.cap:
        raise StructuralError("homotopy needs the target cap to reach the map cap", location="homotopy")
    for n in range(N):
        for i in range(n + 1):
            m = H.maps.get((n, i))
            if m is None or (m.source, m.target) != (Y.levels[n], Z.levels[n + 1]):
                raise StructuralError(f"h({n},{i}) missing or of the wrong shape", location=f"h({n},{i})")
            for problem in m.problems():
                report.add("map", problem, f"h({n},{i})")
    if not report.ok:
        return report

    h = H.h
    for n in range(N):
        if compose_ord(Z.d(n + 1, 0), h(n, 0)) != f[n]:
            report.add("boundary.f", "d_0 h_0 != f", f"level {n}")
        if compose_ord(Z.d(n + 1, n + 1), h(n, n)) != g[n]:
            report.add("boundary.g", f"d_{n + 1} h_{n} != g", f"level {n}")
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = compose_ord(Z.d(n + 1, i), h(n, j))
                if i < j:
                    rhs = compose_ord(h(n - 1, j - 1), Y.d(n, i))
                elif i == j and j != 0:
                    rhs = compose_ord(Z.d(n + 1, j), h(n, j - 1))
                elif i > j + 1:
                    rhs = compose_ord(h(n - 1, j), Y.d(n, i - 1))
                else:
                    continue
                if lhs != rhs:
                    report.add("homotopy.d", f"d_{i} h_{j} fails", f"level {n}")
    for n in range(N - 1):
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = compose_ord(Z.s(n + 1, i), h(n, j))
                if i <= j:
                    rhs = compose_ord(h(n + 1, j + 1), Y.s(n, i))
                else:
                    rhs = compose_ord(h(n + 1, j), Y.s(n, i - 1))
                if lhs != rhs:
                    report.add("homotopy.s", f"s_{i} h_{j} fails", f"level {n}")
    logger.info(f"Homotopy {H.name} from {f.name} to {g.name}: valid={report.ok}")
    return report


def constant_homotopy(f):
    """h_{i,n} = s'_{i,n} f_n, a homotopy from f to itself."""
    Z = f.target
    if f.cap > Z.cap:
        raise StructuralError("map cap exceeds the target cap", location="constant_homotopy")
    maps = {
        (n, i): compose_ord(Z.s(n, i), f[n])
        for n in range(f.cap)
        for i in range(n + 1)
    }
    return OrdHomotopy(f, f, maps, name=f"const({f.name})")


def cone_contraction(Y):
    """
    The contraction of the cone onto its basepoint: h_{j,n}(k) = min(k, j + 1).

    A homotopy from the basepoint map to the identity of `Y`, which must be a
    simplicial_cone.
    """
    if Y.levels != tuple(n + 1 for n in range(Y.cap + 1)):
        raise StructuralError("cone_contraction needs a simplicial_cone", location="cone_contraction")
    f = basepoint_level_map(Y, Y)
    g = identity_level_map(Y)
    maps = {
        (n, j): OrdMap(Y.levels[n], Y.levels[n + 1], tuple(min(k, j + 1) for k in range(Y.levels[n] + 1)))
        for n in range(Y.cap)
        for j in range(n + 1)
    }
    return OrdHomotopy(f, g, maps, name="cone-contraction")

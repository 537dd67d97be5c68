"""
Bisimplicial sets built on demand, and their diagonals.

Entries X_{p,q} and structure tables are produced by callables and memoized, so
a homology computation only tabulates the part of the grid it touches. The
horizontal direction is p, the vertical direction q. An optional cyclic
operator t acts horizontally.
"""

import logging

from OrderY.exceptions import CapError
from OrderY.reports import ValidationReport, Violation
from .sets import SimplicialMap, SimplicialSet, after, check_level_size, validate

logger = logging.getLogger(__name__)


class BisimplicialSet:
    """
    A bisimplicial set truncated at `cap` in both directions.

    Args:
        name: Label used in reports.
        cap: Highest index in each direction.
        level: (p, q) -> tuple of labels.
        h_face, v_face: (p, q, i) -> position tables into X_{p-1,q} / X_{p,q-1}.
        h_degeneracy, v_degeneracy: (p, q, i) -> tables into X_{p+1,q} / X_{p,q+1}.
        cyclic: Optional (p, q) -> table X_{p,q} -> X_{p,q}.
    """

    def __init__(self, name, cap, level, h_face, v_face, h_degeneracy, v_degeneracy, cyclic=None):
        self.name = name
        self.cap = cap
        self._builders = {
            "level": level,
            "dh": h_face,
            "dv": v_face,
            "sh": h_degeneracy,
            "sv": v_degeneracy,
            "t": cyclic,
        }
        self._cache = {}

    def _get(self, kind, *key):
        p, q = key[0], key[1]
        if not (0 <= p <= self.cap and 0 <= q <= self.cap):
            raise CapError(f"entry ({p},{q}) outside cap {self.cap} of {self.name}", location=kind)
        cached = self._cache.get((kind,) + key)
        if cached is None:
            cached = tuple(self._builders[kind](*key))
            if kind == "level":
                check_level_size(len(cached), f"X({p},{q}) of {self.name}")
                logger.debug(f"{self.name}: X({p},{q}) has {len(cached)} elements")
            self._cache[(kind,) + key] = cached
        return cached

    @property
    def is_cyclic(self):
        return self._builders["t"] is not None

    def elements(self, p, q):
        return self._get("level", p, q)

    def size(self, p, q):
        return len(self.elements(p, q))

    def dh(self, p, q, i):
        return self._get("dh", p, q, i)

    def dv(self, p, q, i):
        return self._get("dv", p, q, i)

    def sh(self, p, q, i):
        return self._get("sh", p, q, i)

    def sv(self, p, q, i):
        return self._get("sv", p, q, i)

    def t(self, p, q):
        return self._get("t", p, q)

    def row(self, q, cap=None):
        """The horizontal simplicial set X_{*,q} up to `cap`."""
        cap = self.cap if cap is None else cap
        return SimplicialSet(
            cap=cap,
            elements=tuple(self.elements(p, q) for p in range(cap + 1)),
            faces={(p, i): self.dh(p, q, i) for p in range(1, cap + 1) for i in range(p + 1)},
            degeneracies={(p, i): self.sh(p, q, i) for p in range(cap) for i in range(p + 1)},
            name=f"{self.name}[*,{q}]",
        )

    def column(self, p, cap=None):
        """The vertical simplicial set X_{p,*} up to `cap`."""
        cap = self.cap if cap is None else cap
        return SimplicialSet(
            cap=cap,
            elements=tuple(self.elements(p, q) for q in range(cap + 1)),
            faces={(q, i): self.dv(p, q, i) for q in range(1, cap + 1) for i in range(q + 1)},
            degeneracies={(q, i): self.sv(p, q, i) for q in range(cap) for i in range(q + 1)},
            name=f"{self.name}[{p},*]",
        )


def diagonal(B, cap=None):
    """
    The diagonal simplicial set: level n is X_{n,n}, d_i = dh_i dv_i, s_i = sh_i sv_i.

    Raises:
        CapError: If `cap` exceeds the grid cap.
    """
    cap = B.cap if cap is None else cap
    if cap > B.cap:
        raise CapError(f"diagonal to {cap} needs grid cap {cap}, {B.name} has {B.cap}", location="diagonal")
    X = SimplicialSet(
        cap=cap,
        elements=tuple(B.elements(n, n) for n in range(cap + 1)),
        faces={
            (n, i): after(B.dh(n, n - 1, i), B.dv(n, n, i))
            for n in range(1, cap + 1)
            for i in range(n + 1)
        },
        degeneracies={
            (n, i): after(B.sh(n, n + 1, i), B.sv(n, n, i))
            for n in range(cap)
            for i in range(n + 1)
        },
        name=f"diag({B.name})",
    )
    logger.info(f"Diagonal of {B.name} to cap {cap}: sizes {[X.size(n) for n in range(cap + 1)]}")
    return X


def validate_bisimplicial(B, cap=None):
    """
    Check both directions and the commutation of horizontal with vertical maps.

    Entries are checked for p + q <= cap (default: the grid cap), which covers
    everything the total complex up to that degree uses.
    """
    cap = B.cap if cap is None else cap
    report = ValidationReport(subject=f"bisimplicial set {B.name}")
    for q in range(cap + 1):
        report.merge(_located(validate(B.row(q, cap - q)), f"row {q}"))
    for p in range(cap + 1):
        report.merge(_located(validate(B.column(p, cap - p)), f"column {p}"))
    if not report.ok:
        return report

    for p in range(cap + 1):
        for q in range(cap + 1 - p):
            where = f"({p},{q})"
            for i in range(p + 1 if p else 0):
                for j in range(q + 1 if q else 0):
                    if after(B.dh(p, q - 1, i), B.dv(p, q, j)) != after(B.dv(p - 1, q, j), B.dh(p, q, i)):
                        report.add("commute.dd", f"dh_{i} dv_{j} != dv_{j} dh_{i}", where)
            if p + q == cap:
                continue
            for i in range(p + 1):
                for j in range(q + 1 if q else 0):
                    if after(B.sh(p, q - 1, i), B.dv(p, q, j)) != after(B.dv(p + 1, q, j), B.sh(p, q, i)):
                        report.add("commute.sd", f"sh_{i} dv_{j} != dv_{j} sh_{i}", where)
            for i in range(p + 1 if p else 0):
                for j in range(q + 1):
                    if after(B.dh(p, q + 1, i), B.sv(p, q, j)) != after(B.sv(p - 1, q, j), B.dh(p, q, i)):
                        report.add("commute.ds", f"dh_{i} sv_{j} != sv_{j} dh_{i}", where)
    logger.info(f"Validated {B.name} to total degree {cap}: valid={report.ok}")
    return report


def _located(report, where):
    report.violations = [Violation(v.code, v.message, f"{where}: {v.location}") for v in report.violations]
    return report


class BisimplicialMap:
    """Entrywise position tables X_{p,q} -> X'_{p,q}, built on demand."""

    def __init__(self, source, target, entry, name="F"):
        self.source = source
        self.target = target
        self.name = name
        self._entry = entry
        self._cache = {}

    def __getitem__(self, key):
        cached = self._cache.get(key)
        if cached is None:
            cached = tuple(self._entry(*key))
            self._cache[key] = cached
        return cached


def validate_bisimplicial_map(F, cap=None):
    """Check that F commutes with all structure maps (and t when both are cyclic) for p + q <= cap."""
    X, Z = F.source, F.target
    cap = min(X.cap, Z.cap) if cap is None else cap
    report = ValidationReport(subject=f"bisimplicial map {F.name}")
    for p in range(cap + 1):
        for q in range(cap + 1 - p):
            where = f"({p},{q})"
            f = F[(p, q)]
            if len(f) != X.size(p, q) or any(not 0 <= v < Z.size(p, q) for v in f):
                report.add("shape", "table does not fit the grid entry", where)
                continue
            for i in range(p + 1 if p else 0):
                if after(F[(p - 1, q)], X.dh(p, q, i)) != after(Z.dh(p, q, i), f):
                    report.add("commute.dh", f"F does not commute with dh_{i}", where)
            for j in range(q + 1 if q else 0):
                if after(F[(p, q - 1)], X.dv(p, q, j)) != after(Z.dv(p, q, j), f):
                    report.add("commute.dv", f"F does not commute with dv_{j}", where)
            if p + q < cap:
                for i in range(p + 1):
                    if after(F[(p + 1, q)], X.sh(p, q, i)) != after(Z.sh(p, q, i), f):
                        report.add("commute.sh", f"F does not commute with sh_{i}", where)
                for j in range(q + 1):
                    if after(F[(p, q + 1)], X.sv(p, q, j)) != after(Z.sv(p, q, j), f):
                        report.add("commute.sv", f"F does not commute with sv_{j}", where)
            if X.is_cyclic and Z.is_cyclic and after(f, X.t(p, q)) != after(Z.t(p, q), f):
                report.add("commute.t", "F does not commute with t", where)
    logger.info(f"Validated bisimplicial map {F.name} to total degree {cap}: valid={report.ok}")
    return report


def diagonal_map(F, source, target):
    """The simplicial map diag(F) between prebuilt diagonals of F's source and target."""
    cap = min(source.cap, target.cap)
    return SimplicialMap(source, target, tuple(F[(n, n)] for n in range(cap + 1)), name=f"diag({F.name})")

"""
The bisimplicial cyclic nerve CN(S^Y(C)) and maps into it.

Entry (p, q) is CN_p of the category S_{Y_q} C. Horizontal structure is the
cyclic nerve's; vertical maps act on each morphism of a tuple through the
transport along Y's structure maps.
"""

import logging

from OrderY.exceptions import ConstructionError
from sconstruct.morphisms import s_bifunctor, s_category
from simpset.bisimplicial import (
    BisimplicialMap,
    BisimplicialSet,
    validate_bisimplicial,
    validate_bisimplicial_map,
)
from .cyclic import CyclicSet, nerve_tables, validate_cyclic

logger = logging.getLogger(__name__)


def cn_bisimplicial(C, Y, cap=None, check=True):
    """
    Build CN(S^Y(C)) up to `cap` in both directions.

    Args:
        C: FinCofCategory.
        Y: SimplicialOrd.
        cap: Grid cap (default: the cap of Y).
        check: Verify both directions, the cyclic relations and the commuting
            squares for p + q <= cap before returning.

    Raises:
        ConstructionError: If a check fails.
    """
    cap = Y.cap if cap is None else min(cap, Y.cap)

    def category(q):
        return s_category(C, Y.size(q))

    def tables(q):
        return nerve_tables(category(q).category)

    def vertical(p, q, phi, target_q):
        _, maps = category(q).transport(phi, category(target_q))
        return tables(q).image(p, maps, tables(target_q))

    B = BisimplicialSet(
        name=f"CN(S^{Y.name}({C.name}))",
        cap=cap,
        level=lambda p, q: tables(q).level(p),
        h_face=lambda p, q, i: tables(q).face(p, i),
        v_face=lambda p, q, i: vertical(p, q, Y.d(q, i), q - 1),
        h_degeneracy=lambda p, q, i: tables(q).degeneracy(p, i),
        v_degeneracy=lambda p, q, i: vertical(p, q, Y.s(q, i), q + 1),
        cyclic=lambda p, q: tables(q).cyclic(p),
    )
    if check:
        _check_grid(B, cap)
    return B


def _check_grid(B, cap):
    report = validate_bisimplicial(B, cap)
    for q in range(cap + 1):
        row = CyclicSet(B.row(q, cap - q), tuple(B.t(p, q) for p in range(cap - q + 1)))
        report.merge(validate_cyclic(row))
    if not report.ok:
        logger.error(f"{B.name} fails its relations: {report}")
        raise ConstructionError(f"{B.name} fails: {report.violations[0]}")
    logger.info(f"{B.name}: relations verified to total degree {cap}")


def product_grid(X, Z):
    """Entrywise product of two bisimplicial sets; cyclic when both factors are."""
    cap = min(X.cap, Z.cap)

    def pairs(a, b):
        return tuple((u, v) for u in range(len(a)) for v in range(len(b)))

    def componentwise(table_x, table_z, size_z):
        return tuple(table_x[u] * size_z + table_z[v] for u in range(len(table_x)) for v in range(len(table_z)))

    cyclic = None
    if X.is_cyclic and Z.is_cyclic:
        cyclic = lambda p, q: componentwise(X.t(p, q), Z.t(p, q), Z.size(p, q))  # noqa: E731
    return BisimplicialSet(
        name=f"{X.name}x{Z.name}",
        cap=cap,
        level=lambda p, q: pairs(X.elements(p, q), Z.elements(p, q)),
        h_face=lambda p, q, i: componentwise(X.dh(p, q, i), Z.dh(p, q, i), Z.size(p - 1, q)),
        v_face=lambda p, q, i: componentwise(X.dv(p, q, i), Z.dv(p, q, i), Z.size(p, q - 1)),
        h_degeneracy=lambda p, q, i: componentwise(X.sh(p, q, i), Z.sh(p, q, i), Z.size(p + 1, q)),
        v_degeneracy=lambda p, q, i: componentwise(X.sv(p, q, i), Z.sv(p, q, i), Z.size(p, q + 1)),
        cyclic=cyclic,
    )


def bifunctor_entry(F, Y, left, right, target):
    """
    Entry tables of the CN-level map induced by F: the pair at position
    u * |right| + v goes to the tuple of S-level images F(f_i, g_i).
    """
    functors = {}

    def functor(q):
        n = Y.size(q)
        if n not in functors:
            functors[n] = s_bifunctor(F, n)
        return functors[n]

    def entry(p, q):
        S = functor(q)
        target_tables = nerve_tables(S.target.category)
        xs, zs = left.elements(p, q), right.elements(p, q)
        return tuple(
            target_tables.position(p, tuple(S.mor(f, g) for f, g in zip(x, z)))
            for x in xs
            for z in zs
        )

    return entry


def cn_of_bifunctor(F, Y, cap=None, left=None, right=None, target=None):
    """
    The map CN(S^Y(C)) x CN(S^Y(D)) -> CN(S^Y(E)) induced by F: C x D -> E.

    Returns:
        (BisimplicialMap, ValidationReport). The report names every structure
        map the induced map fails to commute with; horizontal maps and the
        cyclic operator always commute, vertical faces that divide by a
        quotient need not.
    """
    cap = Y.cap if cap is None else min(cap, Y.cap)
    left = left or cn_bisimplicial(F.left, Y, cap)
    right = right or cn_bisimplicial(F.right, Y, cap)
    target = target or cn_bisimplicial(F.target, Y, cap)
    source = product_grid(left, right)
    induced = BisimplicialMap(source, target, bifunctor_entry(F, Y, left, right, target), name=f"CN({F.name})")
    report = validate_bisimplicial_map(induced, cap)
    if not report.ok:
        logger.warning(f"{induced.name} on {Y.name}: {len(report.violations)} commutation failure(s)")
    return induced, report


def dump_grid(B, cap=None, sample=3):
    """Grid sizes for p + q <= cap and the first `sample` elements of each entry."""
    cap = B.cap if cap is None else cap
    entries = []
    for p in range(cap + 1):
        for q in range(cap + 1 - p):
            elements = B.elements(p, q)
            entries.append({
                "p": p,
                "q": q,
                "size": len(elements),
                "sample": [str(e) for e in elements[:sample]],
            })
    return {"name": B.name, "cap": cap, "cyclic": B.is_cyclic, "entries": entries}


def cn_of_level_map(C, f, source=None, target=None, cap=None):
    """
    The map CN(S^Y(C)) -> CN(S^{Y'}(C)) induced by a level map f: Y -> Y'.

    Entry (p, q) applies the functor S(f_q): S_{Y_q} C -> S_{Y'_q} C to every
    morphism of a cyclic tuple.

    Raises:
        ConstructionError: If the induced map fails to commute with the grids.
    """
    cap = f.cap if cap is None else min(cap, f.cap)
    source = source or cn_bisimplicial(C, f.source, cap)
    target = target or cn_bisimplicial(C, f.target, cap)

    def entry(p, q):
        S = s_category(C, f.source.size(q))
        T = s_category(C, f.target.size(q))
        _, maps = S.transport(f[q], T)
        return nerve_tables(S.category).image(p, maps, nerve_tables(T.category))

    induced = BisimplicialMap(source, target, entry, name=f"CN(S^{f.name})")
    report = validate_bisimplicial_map(induced, cap)
    if not report.ok:
        logger.error(f"{induced.name} is not a bisimplicial map: {report}")
        raise ConstructionError(f"{induced.name} fails: {report.violations[0]}")
    return induced

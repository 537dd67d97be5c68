"""
Maps and homotopies of S-level simplicial sets induced from Ord*-level data.
"""

import logging

from OrderY.exceptions import ConstructionError, StructuralError
from ordstar.simplicial import validate_homotopy, validate_level_map
from sconstruct.objects import s_construction
from sconstruct.simplicial import s_simplicial_set
from .sets import SimplicialHomotopy, SimplicialMap, validate_map, validate_simplicial_homotopy

logger = logging.getLogger(__name__)


def _induced_table(C, phi, source, target, n_source, n_target):
    construction = s_construction(C)
    return tuple(
        target.position(n_target, construction.apply(x, phi))
        for x in source.elements[n_source]
    )


def map_from_ord(f, C, source=None, target=None):
    """
    S^f(C): S^Y(C) -> S^{Y'}(C) for a level map f: Y -> Y'.

    Args:
        f: LevelMap.
        C: FinCofCategory.
        source, target: Prebuilt S^Y(C) and S^{Y'}(C) (built up to f.cap if omitted).

    Raises:
        StructuralError: If f does not commute with the structure of Y and Y'.
        ConstructionError: If the induced map fails simplicial-map validation.
    """
    report = validate_level_map(f)
    if not report.ok:
        raise StructuralError(f"{f.name} is not a simplicial map: {report.violations[0]}", location="map_from_ord")
    source = source or s_simplicial_set(C, f.source, f.cap)
    target = target or s_simplicial_set(C, f.target, f.cap)
    cap = min(f.cap, source.cap, target.cap)
    maps = tuple(_induced_table(C, f[n], source, target, n, n) for n in range(cap + 1))
    induced = SimplicialMap(source, target, maps, name=f"S^{f.name}")
    report = validate_map(induced)
    if not report.ok:
        logger.error(f"Induced map {induced.name} is not simplicial: {report}")
        raise ConstructionError(f"induced map {induced.name} is not simplicial: {report.violations[0]}")
    return induced


def homotopy_from_ord(H, C, source=None, target=None):
    """
    The S-level homotopy with h_{i,n} = S(h_{i,n}) on objects.

    Raises:
        StructuralError: If H fails validate_homotopy.
        ConstructionError: If the induced tables fail the homotopy identities.
    """
    report = validate_homotopy(H.f, H.g, H)
    if not report.ok:
        raise StructuralError(f"{H.name} is not a homotopy: {report.violations[0]}", location="homotopy_from_ord")
    source = source or s_simplicial_set(C, H.f.source, H.cap)
    target = target or s_simplicial_set(C, H.f.target, H.cap)
    f = map_from_ord(H.f, C, source, target)
    g = map_from_ord(H.g, C, source, target)
    cap = min(f.cap, g.cap)
    maps = {
        (n, i): _induced_table(C, H.h(n, i), source, target, n, n + 1)
        for n in range(cap)
        for i in range(n + 1)
    }
    induced = SimplicialHomotopy(f, g, maps, name=f"S^{H.name}")
    report = validate_simplicial_homotopy(induced)
    if not report.ok:
        logger.error(f"Induced homotopy {induced.name} fails: {report}")
        raise ConstructionError(f"induced homotopy {induced.name} fails: {report.violations[0]}")
    return induced

"""
Assembly of the simplicial set S^Y(C) = obj S(C) ∘ Y.
"""

import logging

from OrderY.exceptions import CapError
from simpset.sets import SimplicialSet
from .objects import s_construction, s_level

logger = logging.getLogger(__name__)


def s_simplicial_set(C, Y, cap=None):
    """
    Build S^Y(C) up to `cap` (default: the cap of Y).

    Level m is S_{Y_m} C; faces and degeneracies are S applied to the structure
    maps of Y. The basepoint at every level is the zero chain.

    Raises:
        CapError: If `cap` exceeds the cap of Y or a level exceeds the size guard.
    """
    cap = Y.cap if cap is None else cap
    if cap > Y.cap:
        raise CapError(f"cap {cap} exceeds the cap {Y.cap} of {Y.name}", location="s_simplicial_set")
    construction = s_construction(C)
    levels = [s_level(C, Y.size(m)) for m in range(cap + 1)]

    def induced(phi, source, target):
        return tuple(target.position(construction.apply(x, phi)) for x in source.elements)

    faces = {
        (m, i): induced(Y.d(m, i), levels[m], levels[m - 1])
        for m in range(1, cap + 1)
        for i in range(m + 1)
    }
    degeneracies = {
        (m, i): induced(Y.s(m, i), levels[m], levels[m + 1])
        for m in range(cap)
        for i in range(m + 1)
    }
    X = SimplicialSet(
        cap=cap,
        elements=tuple(level.elements for level in levels),
        faces=faces,
        degeneracies=degeneracies,
        basepoints=(0,) * (cap + 1),
        name=f"S^{Y.name}({C.name})",
    )
    logger.info(f"Built {X.name}: level sizes {[len(level.elements) for level in levels]}")
    return X

"""
One (category, Y, field, cap) instance with its intermediate structures built lazily.
"""

import logging
from functools import cached_property

from django.conf import settings

from OrderY.exceptions import CapError
from homalg.bicomplex import ConnesSequence, mixed_from_cyclic, total_complex
from homalg.chains import normalized_chains
from homalg.fields import FieldSpec
from nerve.grid import cn_bisimplicial
from sconstruct.simplicial import s_simplicial_set
from simpset.bisimplicial import diagonal

logger = logging.getLogger(__name__)


def resolve_cap(Y, cap=None):
    """
    The cap to compute with: the cap of Y unless a smaller one is requested.

    Raises:
        CapError: If `cap` exceeds the cap of Y or KY_MAX_CAP.
    """
    cap = Y.cap if cap is None else int(cap)
    limit = getattr(settings, "KY_MAX_CAP", 6)
    if cap > Y.cap:
        raise CapError(f"cap {cap} exceeds the cap {Y.cap} of {Y.name}", location="cap")
    if cap > limit:
        raise CapError(f"cap {cap} exceeds KY_MAX_CAP={limit}", location="cap")
    if cap < 0:
        raise CapError(f"cap {cap} is negative", location="cap")
    return cap


class Instance:
    """
    Lazily built S^Y(C), CN(S^Y(C)), its diagonal, total and mixed complexes.

    Chain complexes are cached per top degree so a low-degree question never
    pays for the full cap.
    """

    def __init__(self, C, Y, k=None, cap=None):
        self.C = C
        self.Y = Y
        self.k = k or FieldSpec.default()
        self.cap = resolve_cap(Y, cap)
        self._s_chains = {}
        self._diagonal_chains = {}

    @property
    def description(self):
        return f"C = {self.C.name}, Y = {self.Y.name}"

    @cached_property
    def s_set(self):
        return s_simplicial_set(self.C, self.Y, self.cap)

    def s_chains(self, top):
        if top not in self._s_chains:
            self._s_chains[top] = normalized_chains(self.s_set, self.k, cap=self._within(top, "S-chains"))
        return self._s_chains[top]

    @cached_property
    def grid(self):
        return cn_bisimplicial(self.C, self.Y, self.cap)

    @cached_property
    def diagonal(self):
        return diagonal(self.grid, self.cap)

    def diagonal_chains(self, top):
        if top not in self._diagonal_chains:
            self._diagonal_chains[top] = normalized_chains(self.diagonal, self.k, cap=self._within(top, "diagonal chains"))
        return self._diagonal_chains[top]

    @cached_property
    def total(self):
        return total_complex(self.grid, self.k, self.cap)

    @cached_property
    def mixed(self):
        return mixed_from_cyclic(self.grid, self.k, self.cap)

    @cached_property
    def sequence(self):
        return ConnesSequence(self.mixed)

    def _within(self, top, what):
        if top > self.cap:
            raise CapError(f"{what} to degree {top} need cap {top}; the instance has cap {self.cap}", location="cap")
        return top

    def caps(self, **extra):
        caps = {"Y": self.Y.cap, "instance": self.cap}
        caps.update(extra)
        return caps

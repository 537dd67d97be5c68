"""
factory-boy factories for small lattice categories used in tests.
"""

import factory

from .lattice import chain_category, lattice_category


class ChainCategoryFactory(factory.Factory):
    """Chain lattice 0 < x1 < ... < x{length-1}."""

    class Meta:
        model = chain_category

    class Params:
        length = 2

    names = factory.LazyAttribute(lambda o: ["0"] + [f"x{k}" for k in range(1, o.length)])
    name = factory.LazyAttribute(lambda o: f"chain{o.length}")


class BooleanLatticeFactory(factory.Factory):
    """Subsets of {1..atoms} ordered by inclusion, named by their members."""

    class Meta:
        model = lattice_category

    class Params:
        atoms = 2

    elements = factory.LazyAttribute(
        lambda o: ["".join(str(k) for k in range(1, o.atoms + 1) if mask >> (k - 1) & 1) or "0"
                   for mask in range(2 ** o.atoms)]
    )
    relations = factory.LazyAttribute(
        lambda o: [
            (x, y)
            for x in o.elements
            for y in o.elements
            if x != y and (x == "0" or set(x) < set(y))
        ]
    )
    name = factory.LazyAttribute(lambda o: f"boolean{o.atoms}")

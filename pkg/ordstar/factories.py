"""
factory-boy factories for pointed ordered maps.
"""

import random

import factory

from .maps import OrdMap


def _monotone_images(o):
    rng = random.Random(o.seed)
    tail = sorted(rng.randint(0, o.target) for _ in range(o.source))
    return (0,) + tuple(tail)


class MonotoneOrdMapFactory(factory.Factory):
    """A weakly increasing pointed map [source] -> [target], seeded."""

    class Meta:
        model = OrdMap

    class Params:
        seed = factory.Sequence(lambda k: k)

    source = 3
    target = 3
    images = factory.LazyAttribute(_monotone_images)

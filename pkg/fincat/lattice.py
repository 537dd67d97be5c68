"""
Example generators: the trivial category and lattice categories.

A lattice category has the elements of a finite join-semilattice with bottom
as objects. Between x and y there is an inclusion i(x,y) when x <= y and a zero
morphism z(x,y) when x is not the bottom (for the bottom the two coincide and
only i(0,y) exists). Inclusions compose to inclusions, anything involving a
zero morphism is zero. All inclusions are cofibrations.

The generator is not trusted: its output is run through validate_cofibrations
and rejected if the checker finds anything.
"""

import logging
from itertools import product

from OrderY.exceptions import ConstructionError, StructuralError
from .category import FinCategory, FinCofCategory, PushoutWitness
from .checks import validate_cofibrations

logger = logging.getLogger(__name__)


def inclusion(x, y):
    return f"i({x},{y})"


def zero_map(x, y):
    return f"z({x},{y})"


def order_closure(elements, relations):
    """
    Reflexive-transitive closure of the generating relations.

    Raises:
        StructuralError: On unknown elements or a cycle (antisymmetry failure).
    """
    known = set(elements)
    leq = {(x, x) for x in elements}
    for x, y in relations:
        for end in (x, y):
            if end not in known:
                raise StructuralError(f"unknown element {end!r}", location="relations")
        leq.add((x, y))
    for k, i, j in product(elements, repeat=3):
        if (i, k) in leq and (k, j) in leq:
            leq.add((i, j))
    for x, y in leq:
        if x != y and (y, x) in leq:
            raise StructuralError(f"{x!r} and {y!r} are mutually below each other", location="relations")
    return leq


def lattice_category(elements, relations=(), name="lattice", check=True):
    """
    Build the lattice category of a finite join-semilattice with bottom.

    Args:
        elements: Element names; the bottom is moved to the front.
        relations: Generating pairs (x, y) meaning x <= y.
        name: Category name used in reports.
        check: Run the cofibration checker on the result.

    Returns:
        FinCofCategory.

    Raises:
        StructuralError: If the order has no bottom or some pair has no join.
        ConstructionError: If the generated tables fail the checker.
    """
    elements = list(dict.fromkeys(elements))
    if not elements:
        raise StructuralError("a lattice needs at least a bottom element", location="elements")
    leq = order_closure(elements, relations)

    bottoms = [x for x in elements if all((x, y) in leq for y in elements)]
    if not bottoms:
        raise StructuralError("order has no bottom element", location="relations")
    bottom = bottoms[0]
    elements.remove(bottom)
    elements.insert(0, bottom)

    join = {}
    for x, y in product(elements, repeat=2):
        upper = [u for u in elements if (x, u) in leq and (y, u) in leq]
        least = [u for u in upper if all((u, v) in leq for v in upper)]
        if not least:
            raise StructuralError(f"{x!r} and {y!r} have no join", location="relations")
        join[(x, y)] = least[0]

    morphisms = {}
    for x, y in product(elements, repeat=2):
        if (x, y) in leq:
            morphisms[inclusion(x, y)] = (x, y)
        if x != bottom:
            morphisms[zero_map(x, y)] = (x, y)

    def zero_between(x, y):
        return inclusion(bottom, y) if x == bottom else zero_map(x, y)

    compose = {}
    is_inclusion = {m: m.startswith("i(") for m in morphisms}
    for f, (x, y) in morphisms.items():
        for g, (y2, w) in morphisms.items():
            if y2 != y:
                continue
            if is_inclusion[f] and is_inclusion[g]:
                compose[(g, f)] = inclusion(x, w)
            else:
                compose[(g, f)] = zero_between(x, w)

    base = FinCategory(
        objects=tuple(elements),
        morphisms=morphisms,
        compose=compose,
        identities={x: inclusion(x, x) for x in elements},
        zero=bottom,
        name=name,
    )
    cofibrations = frozenset(m for m in morphisms if is_inclusion[m])

    witnesses = {}
    for cof in sorted(cofibrations, key=list(morphisms).index):
        a, b = morphisms[cof]
        for along in base.out_of(a):
            c = morphisms[along][1]
            if a == bottom:
                if b == bottom:
                    w = PushoutWitness(cof, along, c, along, inclusion(c, c))
                elif c == bottom:
                    w = PushoutWitness(cof, along, b, inclusion(b, b), cof)
                else:
                    # coproduct of nonzero objects: does not exist
                    continue
            elif is_inclusion[along]:
                p = join[(b, c)]
                w = PushoutWitness(cof, along, p, inclusion(b, p), inclusion(c, p))
            else:
                w = PushoutWitness(cof, along, c, zero_between(b, c), inclusion(c, c))
            witnesses[(cof, along)] = w

    C = FinCofCategory(base=base, cofibrations=cofibrations, witnesses=witnesses)
    logger.info(f"Generated lattice category {name}: {len(elements)} objects, {len(morphisms)} morphisms")
    if check:
        report = validate_cofibrations(C, require_sums=False)
        if not report.ok:
            logger.error(f"Generated category {name} rejected by the checker: {report}")
            raise ConstructionError(f"generated category {name} failed the checker:\n{report}")
    return C


def trivial_category(name="trivial"):
    """The one-object category with only its identity."""
    return lattice_category(["0"], name=name)


def chain_category(names, name=None):
    """Lattice category of the chain names[0] < names[1] < ... ."""
    relations = list(zip(names, names[1:]))
    return lattice_category(names, relations, name=name or f"chain{len(names)}")


def diamond_category(name="diamond"):
    """Lattice category of 0 < a, b < 1 with a and b incomparable."""
    return lattice_category(
        ["0", "a", "b", "1"],
        [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        name=name,
    )

"""
Fundamental groups of reduced simplicial sets and their abelianizations.
"""

import logging
from dataclasses import dataclass

from sympy import Matrix, ZZ, factorint
from sympy.matrices.normalforms import smith_normal_form

from OrderY.exceptions import StructuralError

logger = logging.getLogger(__name__)


def free_reduce(word):
    """Cancel adjacent g g^-1 pairs in a word of (generator, ±1) letters."""
    reduced = []
    for letter in word:
        if reduced and reduced[-1][0] == letter[0] and reduced[-1][1] == -letter[1]:
            reduced.pop()
        else:
            reduced.append(letter)
    return tuple(reduced)


def invert(word):
    return tuple((g, -e) for g, e in reversed(word))


@dataclass(frozen=True)
class FPGroup:
    """
    A finitely presented group.

    Attributes:
        generators: Generator labels.
        relators: Words, each a tuple of (generator index, ±1).
    """

    generators: tuple
    relators: tuple

    def word(self, word):
        if not word:
            return "1"
        return " ".join(
            f"g{g}" if e == 1 else f"g{g}^-1" for g, e in word
        )

    def exponent_sums(self):
        """Relation matrix over the integers: one row per relator."""
        rows = []
        for relator in self.relators:
            row = [0] * len(self.generators)
            for g, e in relator:
                row[g] += e
            rows.append(row)
        return rows

    def as_dict(self):
        return {
            "generators": [f"g{j} = {label}" for j, label in enumerate(self.generators)],
            "relators": [self.word(r) for r in self.relators],
        }

    def __str__(self):
        generators = ", ".join(f"g{j}" for j in range(len(self.generators)))
        relators = ", ".join(self.word(r) for r in self.relators)
        return f"<{generators} | {relators}>"


@dataclass(frozen=True)
class AbelianGroup:
    """
    Z^rank plus torsion Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... and each d_i > 1.
    """

    rank: int
    torsion: tuple = ()

    @property
    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    def elementary_divisors(self):
        """Prime powers of the torsion part, sorted."""
        powers = []
        for d in self.torsion:
            powers.extend(int(p) ** int(e) for p, e in factorint(d).items())
        return sorted(powers)

    def dimension_over(self, k):
        """dim of the group tensored with k: the rank plus torsion divisible by char k."""
        p = k.characteristic
        return self.rank + (sum(1 for d in self.torsion if d % p == 0) if p else 0)

    def as_dict(self):
        return {"rank": self.rank, "torsion": list(self.torsion), "group": str(self)}

    def __str__(self):
        parts = ["Z"] * self.rank + [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def pi1_edge_path(X):
    """
    The edge-path presentation of π_1 of a reduced simplicial set.

    Generators are the nondegenerate 1-simplices; degenerate edges are the
    empty word. Each nondegenerate 2-simplex s contributes the relator
    [d_2 s][d_0 s][d_1 s]^-1.

    Raises:
        StructuralError: If X is not reduced or its cap is below 2.
    """
    if X.cap < 2:
        raise StructuralError(f"π_1 of {X.name} needs the 2-skeleton; cap is {X.cap}", location="cap")
    if not X.is_reduced:
        raise StructuralError(
            f"{X.name} has {X.size(0)} vertices; π_1 by edge paths needs a reduced set, check that Y_0 = [0]",
            location="pi1_edge_path",
        )
    edges = X.nondegenerate(1)
    generator = {x: j for j, x in enumerate(edges)}

    def letter(edge):
        j = generator.get(edge)
        return () if j is None else ((j, 1),)

    relators = []
    for s in X.nondegenerate(2):
        word = letter(X.d(2, 2)[s]) + letter(X.d(2, 0)[s]) + invert(letter(X.d(2, 1)[s]))
        word = free_reduce(word)
        if word and word not in relators:
            relators.append(word)
    G = FPGroup(generators=tuple(str(X.label(1, x)) for x in edges), relators=tuple(relators))
    logger.info(f"π_1({X.name}): {len(G.generators)} generators, {len(G.relators)} relators")
    return G


def abelianize(G):
    """
    G/[G, G] from the Smith normal form of the exponent-sum matrix.
    """
    n = len(G.generators)
    rows = [row for row in G.exponent_sums() if any(row)]
    if not rows:
        return AbelianGroup(rank=n)
    diagonal = smith_normal_form(Matrix(rows), domain=ZZ)
    factors = sorted(abs(int(diagonal[i, i])) for i in range(min(diagonal.shape)))
    nonzero = [d for d in factors if d]
    A = AbelianGroup(rank=n - len(nonzero), torsion=tuple(d for d in nonzero if d > 1))
    logger.info(f"Abelianization of a group on {n} generators: {A}")
    return A

"""
Chain complexes over a field, their homology and induced maps.

Boundary matrices are SDMs with rows indexed by degree n - 1 and columns by
degree n. A complex built up to degree N computes homology reliably only up to
N - 1; asking for more raises CapError instead of returning a truncated answer.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property

from sympy.polys.matrices.sdm import SDM

from OrderY.exceptions import CapError, ConstructionError, StructuralError
from OrderY.reports import ValidationReport
from .linalg import add_into, apply, columns_of, from_columns, hstack, is_zero, kernel, pivots, solve

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ChainComplex:
    """
    A bounded chain complex C_0 <- C_1 <- ... <- C_N.

    Attributes:
        name: Label used in reports.
        field: FieldSpec of the coefficients.
        basis: Per degree, the tuple of basis labels.
        boundaries: n -> SDM of shape (dim C_{n-1}, dim C_n), 1 <= n <= N.
        reliable: Highest degree whose homology is complete (default N - 1).
        source: The simplicial set the complex was built from, if any.
        positions: Per degree, simplex positions of the basis elements.
    """

    name: str
    field: object
    basis: tuple
    boundaries: dict
    reliable: int = None
    source: object = None
    positions: tuple = None
    _homology: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.reliable is None:
            object.__setattr__(self, "reliable", self.top - 1)

    @property
    def top(self):
        return len(self.basis) - 1

    def dim(self, n):
        return len(self.basis[n]) if 0 <= n <= self.top else 0

    def boundary(self, n):
        M = self.boundaries.get(n)
        if M is None:
            return SDM({}, (self.dim(n - 1), self.dim(n)), self.field.domain)
        return M

    @cached_property
    def _index(self):
        return [{x: k for k, x in enumerate(level)} for level in self.positions]

    def index_of(self, n, position):
        """Basis index of simplex `position` in degree n, or None when it is not a basis element."""
        return self._index[n].get(position)


def verify_differential(name, boundaries, top):
    """
    Raise ConstructionError unless ∂_{n-1}∂_n = 0 for 2 <= n <= top.
    """
    for n in range(2, top + 1):
        outer, inner = boundaries.get(n - 1), boundaries.get(n)
        if outer is None or inner is None or 0 in outer.shape or 0 in inner.shape:
            continue
        if not is_zero(outer.matmul(inner)):
            logger.error(f"{name}: boundary squares to a nonzero map in degree {n}")
            raise ConstructionError(f"{name}: ∂∂ != 0 from degree {n}")


def normalized_chains(X, k, cap=None, normalized=True):
    """
    The chain complex of a simplicial set with coefficients in k.

    Args:
        X: SimplicialSet.
        k: FieldSpec.
        cap: Highest chain degree (default: the cap of X).
        normalized: Use nondegenerate simplices as basis and drop degenerate
            faces. The unnormalized complex is only meant for cross-checks.

    Raises:
        CapError: If `cap` exceeds the cap of X.
        ConstructionError: If the boundary does not square to zero.
    """
    cap = X.cap if cap is None else cap
    if cap > X.cap:
        raise CapError(f"chains to degree {cap} need {X.name} to cap {cap}, it has {X.cap}", location="normalized_chains")
    K = k.domain
    signs = (K.one, -K.one)
    if normalized:
        positions = tuple(X.nondegenerate(n) for n in range(cap + 1))
    else:
        positions = tuple(tuple(range(X.size(n))) for n in range(cap + 1))
    index = [{x: j for j, x in enumerate(level)} for level in positions]

    boundaries = {}
    for n in range(1, cap + 1):
        columns = []
        for x in positions[n]:
            column = {}
            for i in range(n + 1):
                j = index[n - 1].get(X.d(n, i)[x])
                if j is not None:
                    add_into(column, j, signs[i % 2])
            columns.append(column)
        boundaries[n] = from_columns(columns, len(positions[n - 1]), K)

    prefix = "N" if normalized else "C"
    name = f"{prefix}({X.name}; {k})"
    verify_differential(name, boundaries, cap)
    basis = tuple(tuple(X.label(n, x) for x in level) for n, level in enumerate(positions))
    CC = ChainComplex(name=name, field=k, basis=basis, boundaries=boundaries, source=X, positions=positions)
    logger.info(f"Built {name}: ranks {[len(level) for level in positions]}")
    return CC


@dataclass(frozen=True, eq=False)
class Homology:
    """
    H_p of a chain complex with a chosen basis of representative cycles.

    Attributes:
        complex: The ChainComplex.
        degree: p.
        cycles: dim ker ∂_p.
        boundaries: rank ∂_{p+1}.
        representatives: Cycle vectors whose classes form a basis.
    """

    complex: ChainComplex
    degree: int
    cycles: int
    boundaries: int
    representatives: tuple

    @property
    def dimension(self):
        return len(self.representatives)

    def coordinates(self, vectors):
        """
        Coordinates of cycle vectors in the representative basis.

        Raises:
            ConstructionError: If some vector is not a cycle.
        """
        CC, p = self.complex, self.degree
        if not self.representatives:
            return [[] for _ in vectors]
        incoming = CC.boundary(p + 1)
        reps = from_columns(list(self.representatives), CC.dim(p), CC.field.domain)
        A = hstack([incoming, reps], CC.dim(p), CC.field.domain)
        offset = incoming.shape[1]
        zero = CC.field.domain.zero
        return [
            [x.get(offset + r, zero) for r in range(self.dimension)]
            for x in solve(A, list(vectors))
        ]


def homology(CC, p):
    """
    H_p(CC) by exact elimination.

    Raises:
        CapError: If p exceeds the reliable range of CC.
        StructuralError: If p is negative.
    """
    if p < 0:
        raise StructuralError(f"negative degree {p}", location="homology")
    if p > CC.reliable:
        raise CapError(
            f"H_{p} of {CC.name} needs chains in degree {p + 1}; reliable up to {CC.reliable}, raise the cap",
            location="homology",
        )
    cached = CC._homology.get(p)
    if cached is not None:
        return cached
    K = CC.field.domain
    if p == 0:
        cycles = [{j: K.one} for j in range(CC.dim(0))]
    else:
        cycles = kernel(CC.boundary(p))
    incoming = CC.boundary(p + 1)
    offset = incoming.shape[1]
    stacked = hstack([incoming, from_columns(cycles, CC.dim(p), K)], CC.dim(p), K)
    chosen = pivots(stacked)
    representatives = tuple(cycles[j - offset] for j in chosen if j >= offset)
    H = Homology(
        complex=CC,
        degree=p,
        cycles=len(cycles),
        boundaries=sum(1 for j in chosen if j < offset),
        representatives=representatives,
    )
    CC._homology[p] = H
    logger.info(f"H_{p}({CC.name}) has dimension {H.dimension}")
    return H


def betti_numbers(CC, degrees=None):
    degrees = range(CC.reliable + 1) if degrees is None else degrees
    return [homology(CC, p).dimension for p in degrees]


@dataclass(frozen=True, eq=False)
class ChainMap:
    """Degreewise matrices from source to target chains."""

    source: ChainComplex
    target: ChainComplex
    matrices: dict
    name: str = "f"

    def matrix(self, n):
        M = self.matrices.get(n)
        if M is None:
            return SDM({}, (self.target.dim(n), self.source.dim(n)), self.target.field.domain)
        return M


def validate_chain_map(f, top=None):
    """Check ∂ f_n = f_{n-1} ∂ for 1 <= n <= top."""
    top = min(f.source.top, f.target.top) if top is None else top
    report = ValidationReport(subject=f"chain map {f.name}")
    for n in range(1, top + 1):
        lhs = _product(f.target.boundary(n), f.matrix(n))
        rhs = _product(f.matrix(n - 1), f.source.boundary(n))
        if lhs != rhs:
            report.add("chain.commute", f"∂ {f.name} != {f.name} ∂", f"degree {n}")
    return report


def _product(A, B):
    """Columns of A·B, tolerating empty dimensions."""
    if 0 in A.shape or 0 in B.shape:
        return [dict() for _ in range(B.shape[1])]
    return columns_of(A.matmul(B))


def simplicial_chain_map(f, source, target, name=None):
    """
    The map of normalized chains induced by a simplicial map; simplices sent to
    degenerate ones go to zero.
    """
    if source.positions is None or target.positions is None:
        raise StructuralError("chain map needs complexes built from simplicial sets", location="simplicial_chain_map")
    K = target.field.domain
    top = min(source.top, target.top, f.cap)
    matrices = {}
    for n in range(top + 1):
        columns = []
        for x in source.positions[n]:
            j = target.index_of(n, f[n][x])
            columns.append({} if j is None else {j: K.one})
        matrices[n] = from_columns(columns, target.dim(n), K)
    return ChainMap(source, target, matrices, name=name or f.name)


def induced_map(f, p, source_homology=None, target_homology=None):
    """
    The matrix of H_p(f) in the representative bases (rows: target).
    """
    Hs = source_homology or homology(f.source, p)
    Ht = target_homology or homology(f.target, p)
    return induced_by_matrix(f.matrix(p), Hs, Ht)


def induced_by_matrix(M, Hs, Ht):
    """Matrix of the map on homology induced by a chain-level matrix M: Hs.complex -> Ht.complex."""
    images = [apply(M, rep) for rep in Hs.representatives]
    coordinates = Ht.coordinates(images) if images else []
    columns = [{r: c for r, c in enumerate(column) if c} for column in coordinates]
    return from_columns(columns, Ht.dimension, Ht.complex.field.domain)


def induced_on_homology(f, k, p, source=None, target=None):
    """
    H_p of a simplicial map f with coefficients in k.

    Args:
        source, target: Prebuilt normalized complexes of f's source and target.

    Raises:
        CapError: If the cap of f does not cover degree p + 1.
    """
    if p + 1 > f.cap:
        raise CapError(f"H_{p} of {f.name} needs the map to degree {p + 1}, it stops at {f.cap}",
                       location="induced_on_homology")
    source = source or normalized_chains(f.source, k, cap=f.cap)
    target = target or normalized_chains(f.target, k, cap=f.cap)
    return induced_map(simplicial_chain_map(f, source, target), p)


def render_vector(CC, n, vector):
    """A chain as [{"simplex", "coefficient"}] in basis order."""
    return [
        {"simplex": str(CC.basis[n][j]), "coefficient": CC.field.render(c)}
        for j, c in sorted(vector.items())
    ]


def dump_homology(CC, degrees=None):
    """
    Per degree: chain rank, cycles, boundaries, dimension and representatives.

    Degrees default to the reliable range; each entry says whether it is reliable.
    """
    degrees = range(CC.reliable + 1) if degrees is None else degrees
    entries = []
    for p in degrees:
        entry = {"degree": p, "chains": CC.dim(p), "reliable": 0 <= p <= CC.reliable}
        if entry["reliable"]:
            H = homology(CC, p)
            entry.update(
                cycles=H.cycles,
                boundaries=H.boundaries,
                dimension=H.dimension,
                representatives=[render_vector(CC, p, rep) for rep in H.representatives],
            )
        entries.append(entry)
    return {"name": CC.name, "field": str(CC.field), "reliable": CC.reliable, "degrees": entries}

"""
Total complexes of bisimplicial sets and Connes' (b, B) mixed complex.

Chains are normalized in both directions: a basis cell (p, q, x) is an entry
of X_{p,q} outside the images of all horizontal and vertical degeneracies.
The total differential is ∂^h + (-1)^p ∂^v. On a grid whose rows are cyclic
sets, Connes' operator acts on row p by B = s N with the extra degeneracy
s = t_{p+1} s_p and N = Σ_j (-1)^{pj} t^j.

Cyclic homology is the homology of the (b, B) totalization, whose degree n
part is M_n ⊕ M_{n-2} ⊕ ...; the maps of the SBI sequence
... -> HH_n -I-> HC_n -S-> HC_{n-2} -B-> HH_{n-1} -> ... are read off the
slots of that totalization.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property

from sympy.polys.matrices.sdm import SDM

from OrderY.exceptions import CapError, ConstructionError, StructuralError
from OrderY.reports import ValidationReport
from .chains import ChainComplex, homology, induced_by_matrix, verify_differential
from .linalg import add_into, columns_of, from_columns, is_zero, rank

logger = logging.getLogger(__name__)


class _Cells:
    """Doubly normalized cells of a bisimplicial set, grouped by total degree."""

    def __init__(self, B, cap):
        self.B = B
        self.cap = cap
        self.cells = []
        for n in range(cap + 1):
            level = []
            for p in range(n + 1):
                level.extend((p, n - p, x) for x in self.normal(p, n - p))
            self.cells.append(tuple(level))
        self.index = [{cell: k for k, cell in enumerate(level)} for level in self.cells]

    def normal(self, p, q):
        B = self.B
        degenerate = set()
        for i in range(p):
            degenerate.update(B.sh(p - 1, q, i))
        for j in range(q):
            degenerate.update(B.sv(p, q - 1, j))
        return tuple(x for x in range(B.size(p, q)) if x not in degenerate)

    def labels(self, n):
        return tuple((p, q, self.B.elements(p, q)[x]) for p, q, x in self.cells[n])

    def locate(self, n, cell):
        return self.index[n].get(cell)


def _require_cap(B, cap, operation):
    cap = B.cap if cap is None else cap
    if cap > B.cap:
        raise CapError(f"{operation} to degree {cap} needs the grid to cap {cap}, {B.name} has {B.cap}",
                       location=operation)
    return cap


def _total_boundaries(cells, K):
    B = cells.B
    one = K.one
    boundaries = {}
    for n in range(1, cells.cap + 1):
        columns = []
        for p, q, x in cells.cells[n]:
            column = {}
            for i in range(p + 1 if p else 0):
                k = cells.locate(n - 1, (p - 1, q, B.dh(p, q, i)[x]))
                if k is not None:
                    add_into(column, k, one if i % 2 == 0 else -one)
            for j in range(q + 1 if q else 0):
                k = cells.locate(n - 1, (p, q - 1, B.dv(p, q, j)[x]))
                if k is not None:
                    add_into(column, k, one if (p + j) % 2 == 0 else -one)
            columns.append(column)
        boundaries[n] = from_columns(columns, len(cells.cells[n - 1]), K)
    return boundaries


def total_complex(B, k, cap=None):
    """
    Tot of the doubly normalized chains of B up to total degree `cap`.

    Raises:
        CapError: If `cap` exceeds the grid cap.
        ConstructionError: If the total differential does not square to zero.
    """
    cap = _require_cap(B, cap, "total_complex")
    cells = _Cells(B, cap)
    boundaries = _total_boundaries(cells, k.domain)
    name = f"Tot({B.name}; {k})"
    verify_differential(name, boundaries, cap)
    basis = tuple(cells.labels(n) for n in range(cap + 1))
    logger.info(f"Built {name}: ranks {[len(level) for level in basis]}")
    return ChainComplex(name=name, field=k, basis=basis, boundaries=boundaries)


@dataclass(frozen=True, eq=False)
class MixedComplex:
    """
    Graded module with b of degree -1 and B of degree +1.

    Attributes:
        b: n -> SDM M_n -> M_{n-1}, 1 <= n <= cap.
        B: n -> SDM M_n -> M_{n+1}, 0 <= n < cap.
    """

    name: str
    field: object
    basis: tuple
    b: dict
    B: dict
    cells: object = field(default=None, repr=False)

    @property
    def cap(self):
        return len(self.basis) - 1

    def dim(self, n):
        return len(self.basis[n]) if 0 <= n <= self.cap else 0

    def b_matrix(self, n):
        return self.b.get(n) or SDM({}, (self.dim(n - 1), self.dim(n)), self.field.domain)

    def B_matrix(self, n):
        return self.B.get(n) or SDM({}, (self.dim(n + 1), self.dim(n)), self.field.domain)

    @cached_property
    def hochschild(self):
        """(M, b) as a chain complex."""
        return ChainComplex(name=f"HH({self.name})", field=self.field, basis=self.basis, boundaries=self.b)

    @cached_property
    def cyclic(self):
        """The (b, B) totalization, with slot offsets per degree."""
        return _cyclic_totalization(self)


def _compose(A, Bm):
    if 0 in A.shape or 0 in Bm.shape:
        return [dict() for _ in range(Bm.shape[1])]
    return columns_of(A.matmul(Bm))


def _sum_is_zero(first, second):
    for a, c in zip(first, second):
        total = dict(a)
        for key, value in c.items():
            add_into(total, key, value)
        if total:
            return False
    return True


def validate_mixed(M):
    """
    Check b² = 0, B² = 0 and bB + Bb = 0 wherever both sides lie within the cap.
    """
    report = ValidationReport(subject=f"mixed complex {M.name}")
    for n in range(2, M.cap + 1):
        if any(_compose(M.b_matrix(n - 1), M.b_matrix(n))):
            report.add("mixed.bb", "b b != 0", f"degree {n}")
    for n in range(M.cap - 1):
        if any(_compose(M.B_matrix(n + 1), M.B_matrix(n))):
            report.add("mixed.BB", "B B != 0", f"degree {n}")
    for n in range(M.cap):
        bB = _compose(M.b_matrix(n + 1), M.B_matrix(n))
        Bb = _compose(M.B_matrix(n - 1), M.b_matrix(n)) if n >= 1 else [dict() for _ in range(M.dim(n))]
        if not _sum_is_zero(bB, Bb):
            report.add("mixed.bB", "b B + B b != 0", f"degree {n}")
    logger.info(f"Validated {M.name}: valid={report.ok}")
    return report


def mixed_from_cyclic(B, k, cap=None):
    """
    The mixed complex of a bisimplicial set with cyclic rows.

    The module and b are the doubly normalized total complex; Connes' B acts
    horizontally on normalized chains.

    Raises:
        StructuralError: If B has no cyclic operator.
        ConstructionError: If an identity of the mixed complex fails.
    """
    if not B.is_cyclic:
        raise StructuralError(f"{B.name} has no cyclic operator", location="mixed_from_cyclic")
    cap = _require_cap(B, cap, "mixed_from_cyclic")
    K = k.domain
    cells = _Cells(B, cap)
    b = _total_boundaries(cells, K)
    connes = {}
    for n in range(cap):
        columns = []
        for p, q, x in cells.cells[n]:
            column = {}
            rotate = B.t(p, q)
            extra = (B.sh(p, q, p), B.t(p + 1, q))
            y = x
            for j in range(p + 1):
                image = extra[1][extra[0][y]]
                target = cells.locate(n + 1, (p + 1, q, image))
                if target is not None:
                    add_into(column, target, K.one if (p * j) % 2 == 0 else -K.one)
                y = rotate[y]
            columns.append(column)
        connes[n] = from_columns(columns, len(cells.cells[n + 1]), K)
    M = MixedComplex(
        name=f"{B.name}; {k}",
        field=k,
        basis=tuple(cells.labels(n) for n in range(cap + 1)),
        b=b,
        B=connes,
        cells=cells,
    )
    report = validate_mixed(M)
    if not report.ok:
        logger.error(f"Mixed complex of {B.name} fails its identities: {report}")
        raise ConstructionError(f"mixed complex of {B.name} fails: {report.violations[0]}")
    logger.info(f"Built mixed complex of {B.name} to degree {cap}")
    return M


@dataclass(frozen=True)
class _Totalization:
    complex: ChainComplex
    offsets: tuple

    def slot(self, n, j):
        """Offset of slot j (module degree n - 2j) inside degree n."""
        return self.offsets[n][j]


def _cyclic_totalization(M):
    K = M.field.domain
    offsets, basis = [], []
    for n in range(M.cap + 1):
        level, slots, start = [], [], 0
        for j in range(n // 2 + 1):
            slots.append(start)
            level.extend((j, label) for label in M.basis[n - 2 * j])
            start += M.dim(n - 2 * j)
        offsets.append(tuple(slots))
        basis.append(tuple(level))
    boundaries = {}
    for n in range(1, M.cap + 1):
        columns = []
        for j in range(n // 2 + 1):
            m = n - 2 * j
            b_cols = columns_of(M.b_matrix(m)) if m >= 1 else [dict() for _ in range(M.dim(m))]
            B_cols = columns_of(M.B_matrix(m)) if j >= 1 else [dict() for _ in range(M.dim(m))]
            for e in range(M.dim(m)):
                column = {}
                if m >= 1:
                    for i, value in b_cols[e].items():
                        add_into(column, offsets[n - 1][j] + i, value)
                if j >= 1:
                    for i, value in B_cols[e].items():
                        add_into(column, offsets[n - 1][j - 1] + i, value)
                columns.append(column)
        boundaries[n] = from_columns(columns, len(basis[n - 1]), K)
    name = f"HC({M.name})"
    verify_differential(name, boundaries, M.cap)
    CC = ChainComplex(name=name, field=M.field, basis=tuple(basis), boundaries=boundaries)
    return _Totalization(CC, tuple(offsets))


class ConnesSequence:
    """
    HH, HC and the maps I, S, B of a mixed complex, degree by degree.

    Groups in negative degrees are zero. Everything is reliable up to cap - 1.
    """

    def __init__(self, M):
        self.M = M
        self.total = M.cyclic
        self.reliable = M.cap - 1

    def _check(self, n, what):
        if n > self.reliable:
            raise CapError(f"{what}_{n} of {self.M.name} needs degree {n + 1}; reliable up to {self.reliable}",
                           location="cyclic_homology")

    def HH(self, n):
        self._check(n, "HH")
        return homology(self.M.hochschild, n) if n >= 0 else None

    def HC(self, n):
        self._check(n, "HC")
        return homology(self.total.complex, n) if n >= 0 else None

    def dim_HH(self, n):
        return self.HH(n).dimension if n >= 0 else 0

    def dim_HC(self, n):
        return self.HC(n).dimension if n >= 0 else 0

    def _zero(self, rows, cols):
        return SDM({}, (rows, cols), self.M.field.domain)

    def I(self, n):
        """HH_n -> HC_n."""
        if n < 0:
            return self._zero(0, 0)
        K = self.M.field.domain
        columns = [{self.total.slot(n, 0) + e: K.one} for e in range(self.M.dim(n))]
        chain = from_columns(columns, self.total.complex.dim(n), K)
        return induced_by_matrix(chain, self.HH(n), self.HC(n))

    def S(self, n):
        """HC_n -> HC_{n-2}."""
        if n < 2:
            return self._zero(self.dim_HC(n - 2), self.dim_HC(n))
        K = self.M.field.domain
        columns = [dict() for _ in range(self.M.dim(n))]
        for j in range(1, n // 2 + 1):
            m = n - 2 * j
            for e in range(self.M.dim(m)):
                columns.append({self.total.slot(n - 2, j - 1) + e: K.one})
        chain = from_columns(columns, self.total.complex.dim(n - 2), K)
        return induced_by_matrix(chain, self.HC(n), self.HC(n - 2))

    def B(self, n):
        """HC_n -> HH_{n+1}."""
        if n < 0:
            return self._zero(self.dim_HH(n + 1), 0)
        connes = columns_of(self.M.B_matrix(n))
        columns = connes + [dict() for _ in range(self.total.complex.dim(n) - self.M.dim(n))]
        chain = from_columns(columns, self.M.dim(n + 1), self.M.field.domain)
        return induced_by_matrix(chain, self.HC(n), self.HH(n + 1))


@dataclass(frozen=True)
class CyclicHomology:
    """HC_q with the SBI maps touching it (None where out of range)."""

    degree: int
    dimension: int
    hochschild: int
    I: object
    S: object
    B: object


def cyclic_homology(M, q, sequence=None):
    """
    HC_q of a mixed complex with I: HH_q -> HC_q, S: HC_q -> HC_{q-2} and
    B: HC_q -> HH_{q+1}; B is None when HH_{q+1} is beyond the reliable range.

    Raises:
        CapError: If q is beyond the reliable range.
    """
    seq = sequence or ConnesSequence(M)
    connecting = seq.B(q) if q + 1 <= seq.reliable else None
    return CyclicHomology(
        degree=q,
        dimension=seq.dim_HC(q),
        hochschild=seq.dim_HH(q),
        I=seq.I(q),
        S=seq.S(q),
        B=connecting,
    )


def _exact_at(report, name, dimension, incoming, outgoing):
    """dim V = rank(in) + rank(out), plus out ∘ in = 0 when shapes allow."""
    r_in, r_out = rank(incoming), rank(outgoing)
    report.note(f"{name}: dim {dimension}, rank in {r_in}, rank out {r_out}")
    if incoming.shape[0] == outgoing.shape[1] and 0 not in incoming.shape and 0 not in outgoing.shape:
        if not is_zero(outgoing.matmul(incoming)):
            report.add("sbi.composite", "consecutive maps do not compose to zero", name)
    if dimension != r_in + r_out:
        report.add("sbi.exact", f"dim {dimension} != {r_in} + {r_out}", name)


def sbi_exactness(M, degrees, shift=0, sequence=None):
    """
    Check exactness of the SBI sequence of M at every node touching `degrees`.

    Nodes are HH_n (between B_{n-1} and I_n), HC_n (between I_n and S_n) and
    HC_n again (between S_{n+2} and B_n); a node is checked when every group it
    involves is reliable.

    Args:
        shift: Let the HC side of the sequence lag the HH side by this many
            degrees. The node HH_n is then bounded by B_{n-1-shift} and
            I_{n-shift}, and HC_n stands for HC_{n-shift}. A misaligned sequence
            is checked from HH_0 upward; any positive shift must fail there.

    Raises:
        StructuralError: If shift is negative.
    """
    if shift < 0:
        raise StructuralError(f"shift must be >= 0, got {shift}", location="shift")
    seq = sequence or ConnesSequence(M)
    R = seq.reliable
    report = ValidationReport(subject=f"SBI sequence of {M.name}" + (f" (HC shifted by {shift})" if shift else ""))
    nodes = sorted(set(degrees) | set(range(min(shift, R + 1))))

    for n in nodes:
        if n > R:
            report.note(f"degree {n} beyond the reliable range {R}; skipped")
            continue
        m = n - shift
        _exact_at(report, f"HH_{n}", seq.dim_HH(n), seq.B(m - 1), seq.I(m))
        _exact_at(report, f"HC_{n} (I, S)", seq.dim_HC(m), seq.I(m), seq.S(m))
        if m + 2 <= R:
            _exact_at(report, f"HC_{n} (S, B)", seq.dim_HC(m), seq.S(m + 2), seq.B(m))
    logger.info(f"{report.subject}: exact={report.ok}")
    return report


def mixed_chain_matrix(F, source, target, n):
    """The matrix M_n -> M'_n of a bisimplicial map F on doubly normalized cells."""
    K = target.field.domain
    columns = []
    for p, q, x in source.cells.cells[n]:
        k = target.cells.locate(n, (p, q, F[(p, q)][x]))
        columns.append({} if k is None else {k: K.one})
    return from_columns(columns, target.dim(n), K)


def induced_on_mixed(F, source, target, n):
    """
    The maps HH_n -> HH'_n and HC_n -> HC'_n induced by a bisimplicial map F
    commuting with the cyclic operators.

    Args:
        source, target: ConnesSequences of the mixed complexes of F's grids.
    """
    Ms, Mt = source.M, target.M
    hh = induced_by_matrix(mixed_chain_matrix(F, Ms, Mt, n), source.HH(n), target.HH(n))
    K = Mt.field.domain
    columns = []
    for j in range(n // 2 + 1):
        block = columns_of(mixed_chain_matrix(F, Ms, Mt, n - 2 * j))
        offset = target.total.slot(n, j)
        columns.extend({offset + i: value for i, value in column.items()} for column in block)
    chain = from_columns(columns, target.total.complex.dim(n), K)
    hc = induced_by_matrix(chain, source.HC(n), target.HC(n))
    return hh, hc

"""
Eilenberg–Zilber shuffle products on normalized chains.

A (p, q)-shuffle is a split of {0, ..., p+q-1} into increasing mu (p entries)
and nu (q entries). It sends x ⊗ z to the pair (s_nu x, s_mu z), where s_nu
applies s_{nu_1} first and s_{nu_q} last, with sign (-1)^{Σ (mu_i - i)}.
"""

import logging
from itertools import combinations

from OrderY.exceptions import CapError, ConstructionError
from simpset.sets import product
from .chains import ChainComplex, ChainMap, normalized_chains, validate_chain_map, verify_differential
from .linalg import add_into, from_columns

logger = logging.getLogger(__name__)


def shuffles(p, q):
    """All (mu, nu) splits of range(p + q) with |mu| = p, with their signs."""
    total = range(p + q)
    for mu in combinations(total, p):
        chosen = set(mu)
        nu = tuple(j for j in total if j not in chosen)
        sign = (-1) ** sum(m - i for i, m in enumerate(mu))
        yield mu, nu, sign


def _degenerate(X, n, x, indices):
    for j in indices:
        x = X.s(n, j)[x]
        n += 1
    return x


def shuffle_product(X, Z, x, z, p, q):
    """
    Signed pairs (sign, (u, v)) of the shuffle product of simplex x in X_p and z in Z_q.

    u and v are positions in X_{p+q} and Z_{p+q}.

    Raises:
        CapError: If p + q exceeds either cap.
    """
    if p + q > min(X.cap, Z.cap):
        raise CapError(f"shuffle of degrees {p} and {q} exceeds the caps", location="shuffle_product")
    return [
        (sign, (_degenerate(X, p, x, nu), _degenerate(Z, q, z, mu)))
        for mu, nu, sign in shuffles(p, q)
    ]


def tensor_complex(CX, CZ, top=None):
    """
    CX ⊗ CZ with ∂(x ⊗ z) = ∂x ⊗ z + (-1)^p x ⊗ ∂z, up to degree `top`.

    Basis labels are (p, i, j): basis element i of CX_p times j of CZ_{n-p}.
    """
    top = min(CX.top, CZ.top) if top is None else top
    K = CX.field.domain
    basis = []
    for n in range(top + 1):
        basis.append(tuple(
            (p, i, j)
            for p in range(n + 1)
            for i in range(CX.dim(p))
            for j in range(CZ.dim(n - p))
        ))
    index = [{label: k for k, label in enumerate(level)} for level in basis]
    boundaries = {}
    for n in range(1, top + 1):
        columns = []
        for p, i, j in basis[n]:
            q = n - p
            column = {}
            if p > 0:
                for a, c in CX.boundary(p).items():
                    value = c.get(i)
                    if value:
                        add_into(column, index[n - 1][(p - 1, a, j)], value)
            if q > 0:
                sign = K.one if p % 2 == 0 else -K.one
                for b, c in CZ.boundary(q).items():
                    value = c.get(j)
                    if value:
                        add_into(column, index[n - 1][(p, i, b)], sign * value)
            columns.append(column)
        boundaries[n] = from_columns(columns, len(basis[n - 1]), K)
    name = f"{CX.name}⊗{CZ.name}"
    verify_differential(name, boundaries, top)
    return ChainComplex(name=name, field=CX.field, basis=tuple(basis), boundaries=boundaries)


def shuffle_map(CX, CZ, CP=None):
    """
    The shuffle chain map CX ⊗ CZ -> C(X × Z) on normalized chains.

    Args:
        CX, CZ: Normalized complexes built from simplicial sets over one field.
        CP: Prebuilt normalized complex of product(X, Z).

    Raises:
        ConstructionError: If the fields differ or the map fails ∂ sh = sh ∂.
    """
    if CX.field != CZ.field:
        raise ConstructionError(f"fields differ: {CX.field} and {CZ.field}")
    X, Z = CX.source, CZ.source
    top = min(CX.top, CZ.top)
    if CP is None:
        P = product(X.truncate(top) if X.cap > top else X, Z.truncate(top) if Z.cap > top else Z)
        CP = normalized_chains(P, CX.field)
    P = CP.source
    K = CX.field.domain
    T = tensor_complex(CX, CZ, top)
    matrices = {}
    for n in range(top + 1):
        columns = []
        for p, i, j in T.basis[n]:
            q = n - p
            x, z = CX.positions[p][i], CZ.positions[q][j]
            column = {}
            for sign, pair in shuffle_product(X, Z, x, z, p, q):
                k = CP.index_of(n, P.position(n, pair))
                if k is not None:
                    add_into(column, k, K.convert(sign))
            columns.append(column)
        matrices[n] = from_columns(columns, CP.dim(n), K)
    sh = ChainMap(T, CP, matrices, name="shuffle")
    report = validate_chain_map(sh, top)
    if not report.ok:
        logger.error(f"Shuffle map {T.name} -> {CP.name} is not a chain map: {report}")
        raise ConstructionError(f"shuffle map is not a chain map: {report.violations[0]}")
    logger.info(f"Shuffle map {T.name} -> {CP.name} verified to degree {top}")
    return sh

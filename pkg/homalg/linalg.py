"""
Exact sparse linear algebra on sympy SDM matrices.

Vectors are dicts {index: coefficient} with no zero entries. Matrices act on
column vectors: column j of a boundary matrix is the image of basis element j.
Elimination uses SDM.rref, whose pivoting is deterministic.
"""

from sympy.polys.matrices.sdm import SDM

from OrderY.exceptions import ConstructionError


def add_into(vector, index, value):
    """vector[index] += value, dropping the entry when it cancels."""
    if index in vector:
        value = vector[index] + value
    if value:
        vector[index] = value
    else:
        vector.pop(index, None)


def scale(vector, value):
    return {i: c * value for i, c in vector.items() if c * value}


def from_columns(columns, nrows, K):
    """SDM of shape (nrows, len(columns)) with the given column vectors."""
    rows = {}
    for j, column in enumerate(columns):
        for i, value in column.items():
            value = K.convert(value)
            if value:
                rows.setdefault(i, {})[j] = value
    return SDM(rows, (nrows, len(columns)), K)


def columns_of(M):
    """Column vectors of M as dicts."""
    columns = [dict() for _ in range(M.shape[1])]
    for i, row in M.items():
        for j, value in row.items():
            if value:
                columns[j][i] = value
    return columns


def hstack(matrices, nrows, K):
    columns = []
    for M in matrices:
        columns.extend(columns_of(M))
    return from_columns(columns, nrows, K)


def is_zero(M):
    return not any(value for row in M.values() for value in row.values())


def apply(M, vector):
    """M · vector for a dict vector over the columns of M."""
    result = {}
    for i, row in M.items():
        total = None
        for j, value in row.items():
            c = vector.get(j)
            if c:
                total = value * c if total is None else total + value * c
        if total:
            result[i] = total
    return result


def pivots(M):
    if is_zero(M):
        return []
    return list(M.rref()[1])


def rank(M):
    return len(pivots(M))


def kernel(M):
    """A basis of the null space of M, as vectors over its columns."""
    ncols = M.shape[1]
    if ncols == 0:
        return []
    K = M.domain
    if is_zero(M):
        return [{j: K.one} for j in range(ncols)]
    basis, _ = M.nullspace()
    return [dict(row) for _, row in sorted(basis.items())]


def solve(A, targets):
    """
    Particular solutions x of A x = t for each target vector t.

    Free variables are set to zero.

    Raises:
        ConstructionError: If some target lies outside the column space of A.
    """
    nrows, ncols = A.shape
    K = A.domain
    if not targets:
        return []
    augmented = hstack([A, from_columns(targets, nrows, K)], nrows, K)
    if is_zero(augmented):
        return [{} for _ in targets]
    reduced, pivot_columns = augmented.rref()
    if any(p >= ncols for p in pivot_columns):
        raise ConstructionError("target vector outside the column space")
    pivot_row = {p: r for r, p in enumerate(pivot_columns)}
    solutions = []
    for k in range(len(targets)):
        x = {}
        for p, r in pivot_row.items():
            value = reduced[r].get(ncols + k)
            if value:
                x[p] = value
        solutions.append(x)
    return solutions


def to_rows(M):
    """Dense nested lists of sympy numbers, for reports and comparisons."""
    nrows, ncols = M.shape
    K = M.domain
    dense = [[0] * ncols for _ in range(nrows)]
    for i, row in M.items():
        for j, value in row.items():
            dense[i][j] = K.to_sympy(value)
    return dense


def multiply(A, B):
    """A·B, also when an inner or outer dimension is zero."""
    if 0 in A.shape or 0 in B.shape:
        return SDM({}, (A.shape[0], B.shape[1]), A.domain)
    return A.matmul(B)


def identity(n, K):
    return SDM({i: {i: K.one} for i in range(n)}, (n, n), K)

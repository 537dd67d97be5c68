"""
Products induced by a bi-exact bifunctor F: C x D -> E.

On K-theory the product is the pointed map S^Y(C) ∧ S^Y(D) -> S^Y(E) sending
a pair of chains to the chain of images F(a_j, b_j). On Hochschild homology
it is the shuffle cross product into the diagonal of the product grid,
followed by the grid map induced by F.
"""

import logging

from OrderY.exceptions import CapError, ConstructionError, StructuralError
from OrderY.reports import ValidationReport
from fincat.exactness import is_biexact
from homalg.chains import homology, normalized_chains
from homalg.fields import FieldSpec
from homalg.linalg import add_into, from_columns
from homalg.products import shuffle_product
from nerve.grid import cn_bisimplicial, cn_of_bifunctor
from sconstruct.morphisms import s_bifunctor
from sconstruct.simplicial import s_simplicial_set
from simpset.bisimplicial import diagonal
from simpset.sets import SimplicialMap, smash, validate_map
from .instances import resolve_cap
from .reports import InvariantReport, render_matrix

logger = logging.getLogger(__name__)


def _require_biexact(F):
    report = is_biexact(F)
    if not report.ok:
        raise StructuralError(f"{F.name} is not bi-exact: {report.violations[0]}", location="is_biexact")


def _check_basepoint(F, report):
    L, R, E = F.left, F.right, F.target
    for a in L.objects:
        if not E.base.is_zero_object(F.obj(a, R.zero)):
            report.add("smash.basepoint", f"F({a}, 0) is not zero", str(a))
    for b in R.objects:
        if not E.base.is_zero_object(F.obj(L.zero, b)):
            report.add("smash.basepoint", f"F(0, {b}) is not zero", str(b))


def product_k_map(F, Y, cap=None):
    """
    The levelwise product S^Y(C) ∧ S^Y(D) -> S^Y(E) of a bi-exact F.

    Returns:
        (SimplicialMap, ValidationReport). The report carries the basepoint
        check F(A, 0) = 0 = F(0, B) and the simplicial-map validation; the
        map is returned even when a structure map fails to commute.

    Raises:
        StructuralError: If F is not bi-exact.
    """
    _require_biexact(F)
    cap = resolve_cap(Y, cap)
    SC = s_simplicial_set(F.left, Y, cap)
    SD = s_simplicial_set(F.right, Y, cap)
    SE = s_simplicial_set(F.target, Y, cap)
    X = smash(SC, SD)
    report = ValidationReport(subject=f"product map of {F.name} on order {Y.name}")
    _check_basepoint(F, report)

    maps = []
    for n in range(cap + 1):
        S = s_bifunctor(F, Y.size(n))
        maps.append(tuple(
            SE.basepoints[n] if element == "*" else S.obj(*element)
            for element in X.elements[n]
        ))
    product = SimplicialMap(X, SE, tuple(maps), name=f"S^{Y.name}({F.name})")
    report.merge(validate_map(product))
    if not report.ok:
        logger.warning(f"{product.name}: {len(report.violations)} violation(s)")
    return product, report


def product_hh(F, Y, p, q, k=None, cap=None):
    """
    The pairing HH_p^Y(C) ⊗ HH_q^Y(D) -> HH_{p+q+1}^Y(E).

    Classes of degree p+1 and q+1 on the diagonals are multiplied by shuffles
    into degree p+q+2 of the product grid's diagonal and pushed along CN(F).

    Returns:
        SDM of shape (dim HH_{p+q+1}(E), dim HH_p(C) * dim HH_q(D)); the column
        of a pair (i, j) of basis classes is i * dim HH_q(D) + j.

    Raises:
        CapError: If the cap is below p + q + 3.
        ConstructionError: If CN(F) fails to be a bisimplicial map.
    """
    _require_biexact(F)
    k = k or FieldSpec.default()
    cap = resolve_cap(Y, cap)
    n = p + q + 2
    if n + 1 > cap:
        raise CapError(f"the product into HH_{p + q + 1} needs cap {n + 1}; cap is {cap}", location="cap")
    left = cn_bisimplicial(F.left, Y, cap)
    right = cn_bisimplicial(F.right, Y, cap)
    target = cn_bisimplicial(F.target, Y, cap)
    induced, report = cn_of_bifunctor(F, Y, cap, left, right, target)
    if not report.ok:
        raise ConstructionError(f"{induced.name} is not a bisimplicial map: {report.violations[0]}")

    top = n + 1
    DL, DR, DE = diagonal(left, top), diagonal(right, top), diagonal(target, top)
    CL = normalized_chains(DL, k, cap=p + 2)
    CR = normalized_chains(DR, k, cap=q + 2)
    CE = normalized_chains(DE, k, cap=top)
    HL, HR, HE = homology(CL, p + 1), homology(CR, q + 1), homology(CE, n)
    K = k.domain
    table = induced[(n, n)]
    width = right.size(n, n)

    images = []
    for a in HL.representatives:
        for b in HR.representatives:
            chain = {}
            for i, x_coefficient in a.items():
                x = CL.positions[p + 1][i]
                for j, z_coefficient in b.items():
                    z = CR.positions[q + 1][j]
                    for sign, (u, v) in shuffle_product(DL, DR, x, z, p + 1, q + 1):
                        index = CE.index_of(n, table[u * width + v])
                        if index is not None:
                            add_into(chain, index, K.convert(sign) * x_coefficient * z_coefficient)
            images.append(chain)
    coordinates = HE.coordinates(images) if images else []
    pairing = from_columns(
        [{r: c for r, c in enumerate(column) if c} for column in coordinates],
        HE.dimension,
        K,
    )
    logger.info(f"Product HH_{p} x HH_{q} -> HH_{p + q + 1} for {F.name}: shape {pairing.shape}")
    return pairing


def product_report(F, Y, p, q, k=None, cap=None):
    k = k or FieldSpec.default()
    cap = resolve_cap(Y, cap)
    _, checks = product_k_map(F, Y, cap)
    values = {}
    if checks.ok:
        values[f"{p},{q}"] = {
            "target_degree": p + q + 1,
            "pairing": render_matrix(product_hh(F, Y, p, q, k, cap), k),
        }
    notes = [] if checks.ok else ["the product map fails validation; no pairing reported"]
    return InvariantReport(
        invariant="product",
        instance=f"F = {F.name}, Y = {Y.name}",
        field=str(k),
        caps={"Y": Y.cap, "instance": cap},
        reliable=[0, cap - 2],
        values=values,
        checks=checks,
        notes=notes,
    )

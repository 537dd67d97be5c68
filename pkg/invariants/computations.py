"""
K0, Hochschild and cyclic invariants of order Y.

Degree conventions: HH_p^Y is H_{p+1} of the diagonal of CN(S^Y(C)) and HC_p^Y
is HC_{p+1} of the mixed complex of that grid. A report never carries a value
outside the degrees its caps make complete.
"""

import logging

from OrderY.exceptions import CapError, StructuralError
from OrderY.reports import ValidationReport
from homalg.bicomplex import cyclic_homology, sbi_exactness
from homalg.chains import homology, render_vector
from homalg.groups import abelianize, pi1_edge_path
from .instances import Instance
from .reports import InvariantReport, render_matrix

logger = logging.getLogger(__name__)


def _require(condition, message):
    if not condition:
        raise CapError(message, location="cap")


def k0(C, Y, cap=None):
    """
    K_0^Y(C) as π_1 of S^Y(C) by edge paths, with its abelianization.

    Returns:
        (FPGroup, AbelianGroup)

    Raises:
        StructuralError: If Y is not reduced or its cap is below 2.
    """
    if not Y.is_reduced:
        raise StructuralError(
            f"K_0 of order {Y.name} needs a reduced Y (Y_0 = [0]) so that S^Y(C) is connected "
            f"with the zero chain as basepoint; Y_0 has size {Y.size(0)}",
            location="k0",
        )
    instance = Instance(C, Y, cap=cap)
    if instance.cap < 2:
        raise StructuralError(f"K_0 needs the 2-skeleton; cap is {instance.cap}", location="cap")
    G = pi1_edge_path(instance.s_set)
    return G, abelianize(G)


def k0_report(C, Y, k=None, cap=None):
    """
    K_0 with the Hurewicz check: dim (K_0)_ab ⊗ k equals dim H_1(S^Y(C); k).
    """
    instance = Instance(C, Y, k, cap)
    G, A = k0(C, Y, instance.cap)
    H1 = homology(instance.s_chains(2), 1)
    checks = ValidationReport(subject=f"Hurewicz consistency for {instance.description}")
    if A.dimension_over(instance.k) != H1.dimension:
        checks.add(
            "hurewicz",
            f"abelianization {A} has dimension {A.dimension_over(instance.k)} over {instance.k}, "
            f"H_1 has dimension {H1.dimension}",
            "K_0",
        )
    return InvariantReport(
        invariant="K0",
        instance=instance.description,
        field=str(instance.k),
        caps=instance.caps(pi1=2),
        reliable=[0, 0],
        values={
            "presentation": G.as_dict(),
            "abelianization": A.as_dict(),
            "h1_dimension": H1.dimension,
        },
        checks=checks,
        notes=["the presentation is reported as is; commutativity is never assumed"],
    )


def hh(C, Y, p, k=None, cap=None, crosscheck=False):
    """
    HH_p^Y(C) = H_{p+1}(diag CN(S^Y(C)); k).

    Args:
        crosscheck: Also compute H_{p+1} of the total complex and report a
            violation when the dimensions differ.

    Raises:
        CapError: If the cap is below p + 2.
    """
    instance = Instance(C, Y, k, cap)
    _require(p >= 0, f"HH_{p}: degree must be non-negative")
    _require(p + 2 <= instance.cap, f"HH_{p} needs the diagonal to degree {p + 2}; cap is {instance.cap}")
    CC = instance.diagonal_chains(p + 2)
    H = homology(CC, p + 1)
    values = {
        str(p): {
            "dimension": H.dimension,
            "chain_degree": p + 1,
            "cycles": H.cycles,
            "boundaries": H.boundaries,
        }
    }
    checks = None
    if crosscheck:
        checks = ValidationReport(subject=f"diagonal against total complex for {instance.description}")
        total = homology(instance.total, p + 1).dimension
        checks.note(f"H_{p + 1}: diagonal {H.dimension}, total {total}")
        if total != H.dimension:
            checks.add("crosscheck.total", f"diagonal gives {H.dimension}, total complex gives {total}", f"HH_{p}")
    logger.info(f"HH_{p} of {instance.description} over {instance.k}: {H.dimension}")
    return InvariantReport(
        invariant="HH",
        instance=instance.description,
        field=str(instance.k),
        caps=instance.caps(diagonal=p + 2),
        reliable=[0, instance.cap - 2],
        values=values,
        checks=checks,
    )


def hc(C, Y, p, k=None, cap=None):
    """
    HC_p^Y(C) = HC_{p+1} of the mixed complex of CN(S^Y(C)), with the SBI maps
    touching it.

    Raises:
        CapError: If the cap is below p + 2.
    """
    instance = Instance(C, Y, k, cap)
    _require(p >= 0, f"HC_{p}: degree must be non-negative")
    _require(p + 2 <= instance.cap, f"HC_{p} needs the mixed complex to degree {p + 2}; cap is {instance.cap}")
    n = p + 1
    result = cyclic_homology(instance.mixed, n, instance.sequence)
    value = {
        "dimension": result.dimension,
        "hochschild": result.hochschild,
        "module_degree": n,
        "I": render_matrix(result.I, instance.k),
        "S": render_matrix(result.S, instance.k),
    }
    if result.B is not None:
        value["B"] = render_matrix(result.B, instance.k)
    logger.info(f"HC_{p} of {instance.description} over {instance.k}: {result.dimension}")
    return InvariantReport(
        invariant="HC",
        instance=instance.description,
        field=str(instance.k),
        caps=instance.caps(mixed=instance.cap),
        reliable=[0, instance.cap - 2],
        values={str(p): value},
    )


def sbi_check(C, Y, k=None, degrees=range(4), cap=None, shift=0):
    """
    Exactness of HH_N -> HC_N -> HC_{N-2} -> HH_{N-1} at the nodes of Y-degrees
    `degrees` (module degrees N = p + 1). Ranks of every map are recorded as notes.

    Args:
        shift: Misalign HC by this many degrees; any nonzero value is a control
            that should fail.
    """
    return _sbi(Instance(C, Y, k, cap), degrees, shift)


def _sbi(instance, degrees, shift):
    report = sbi_exactness(instance.mixed, [p + 1 for p in degrees], shift=shift, sequence=instance.sequence)
    report.subject = f"SBI sequence of {instance.description} over {instance.k}"
    return report


def sbi_report(C, Y, k=None, degrees=range(4), cap=None, shift=0):
    instance = Instance(C, Y, k, cap)
    checks = _sbi(instance, degrees, shift)
    seq = instance.sequence
    values = {
        str(p): {"HH": seq.dim_HH(p + 1), "HC": seq.dim_HC(p + 1)}
        for p in degrees
        if p + 1 <= seq.reliable
    }
    return InvariantReport(
        invariant="SBI",
        instance=instance.description,
        field=str(instance.k),
        caps=instance.caps(mixed=instance.cap),
        reliable=[0, instance.cap - 2],
        values=values,
        checks=checks,
    )


def s_homology(C, Y, degrees=None, k=None, cap=None):
    """
    H_n(S^Y(C); k), the homological shadow of K_{n-1}^Y, for n in `degrees`.

    Raises:
        CapError: If a degree needs chains above the cap.
    """
    instance = Instance(C, Y, k, cap)
    degrees = range(instance.cap) if degrees is None else degrees
    top = max(degrees, default=0) + 1
    _require(top <= instance.cap, f"H_{top - 1} of S^Y needs chains to degree {top}; cap is {instance.cap}")
    CC = instance.s_chains(top)
    values = {}
    for n in degrees:
        H = homology(CC, n)
        values[str(n)] = {
            "dimension": H.dimension,
            "chains": CC.dim(n),
            "representatives": [render_vector(CC, n, rep) for rep in H.representatives],
        }
    return InvariantReport(
        invariant="H(S^Y)",
        instance=instance.description,
        field=str(instance.k),
        caps=instance.caps(chains=top),
        reliable=[0, instance.cap - 1],
        values=values,
    )

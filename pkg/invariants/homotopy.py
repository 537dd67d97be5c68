"""
Homotopy invariance of the order-Y invariants.

Homotopic level maps f, g: Y -> Y' must induce the same matrices on
H_*(S^Y(C)), on HH_*^Y and on HC_*^Y. A homotopy equivalence (f, g, H_gf, H_fg)
must induce mutually inverse isomorphisms.
"""

import logging
from dataclasses import dataclass

from OrderY.reports import ValidationReport
from homalg.bicomplex import induced_on_mixed
from homalg.chains import induced_map, induced_on_homology, simplicial_chain_map
from homalg.linalg import identity, multiply, to_rows
from nerve.grid import cn_of_level_map
from ordstar.simplicial import compose_level_maps, identity_level_map, validate_homotopy
from simpset.bisimplicial import diagonal_map
from simpset.induced import map_from_ord
from .instances import Instance

logger = logging.getLogger(__name__)


@dataclass
class InducedMatrices:
    """Matrices of one level map on each invariant, keyed by Y-degree."""

    s_homology: dict
    hh: dict
    hc: dict


def _pair(C, f, k, cap):
    cap = min(f.cap, cap) if cap is not None else f.cap
    return Instance(C, f.source, k, cap), Instance(C, f.target, k, cap)


def induced_matrices(C, f, k=None, degrees=range(3), source=None, target=None, report=None):
    """
    The matrices of f on H_n(S^Y), HH_n^Y and HC_n^Y for n in `degrees`,
    skipping (with a note on `report`) every degree beyond the caps.
    """
    if source is None or target is None:
        source, target = _pair(C, f, k, None)
    cap = min(source.cap, target.cap)
    report = report if report is not None else ValidationReport(subject=f"induced maps of {f.name}")
    matrices = InducedMatrices({}, {}, {})
    s_degrees = [n for n in degrees if n + 1 <= cap]
    cn_degrees = [n for n in degrees if n + 2 <= cap]
    for n in degrees:
        if n + 1 > cap:
            report.note(f"H_{n} of S^Y beyond the cap {cap}; skipped")
        if n + 2 > cap:
            report.note(f"HH_{n} and HC_{n} beyond the cap {cap}; skipped")

    if s_degrees:
        top = max(s_degrees) + 1
        S_f = map_from_ord(f, C, source.s_set, target.s_set)
        for n in s_degrees:
            matrices.s_homology[n] = induced_on_homology(
                S_f, source.k, n, source=source.s_chains(top), target=target.s_chains(top)
            )
    if cn_degrees:
        top = max(cn_degrees) + 2
        grid_map = cn_of_level_map(C, f, source.grid, target.grid, cap)
        diag = diagonal_map(grid_map, source.diagonal, target.diagonal)
        chain_map = simplicial_chain_map(diag, source.diagonal_chains(top), target.diagonal_chains(top))
        for n in cn_degrees:
            matrices.hh[n] = induced_map(chain_map, n + 1)
            _, matrices.hc[n] = induced_on_mixed(grid_map, source.sequence, target.sequence, n + 1)
    return matrices


def _compare(report, label, first, second, n):
    if to_rows(first) != to_rows(second):
        report.add(f"invariance.{label}", f"induced matrices differ: {to_rows(first)} != {to_rows(second)}",
                   f"degree {n}")
    else:
        report.note(f"{label}_{n}: identical {first.shape[0]}x{first.shape[1]} matrices")


def homotopy_invariance(C, f, g, H, k=None, degrees=range(3), cap=None):
    """
    Certify that homotopic f, g: Y -> Y' induce identical matrices.

    A homotopy rejected by validate_homotopy yields its own failing report and
    nothing is certified.
    """
    report = validate_homotopy(f, g, H)
    report.subject = f"homotopy invariance for {H.name}: {f.name} ~ {g.name}"
    if not report.ok:
        report.note("homotopy rejected; invariance not certified")
        logger.warning(f"{report.subject}: homotopy rejected")
        return report
    source, target = _pair(C, f, k, cap)
    mf = induced_matrices(C, f, k, degrees, source, target, report)
    mg = induced_matrices(C, g, k, degrees, source, target, ValidationReport(subject="discarded"))
    for label in ("s_homology", "hh", "hc"):
        first, second = getattr(mf, label), getattr(mg, label)
        for n in sorted(first):
            _compare(report, label, first[n], second[n], n)
    logger.info(f"{report.subject}: certified={report.ok}")
    return report


def _same_level_map(a, b):
    cap = min(a.cap, b.cap)
    return all(a[n] == b[n] for n in range(cap + 1))


def _check_inverse(report, label, first, second, n):
    """second ∘ first must be the identity."""
    product = multiply(second, first)
    size = first.shape[1]
    if product.shape != (size, size) or to_rows(product) != to_rows(identity(size, first.domain)):
        report.add(f"equivalence.{label}", "induced maps are not mutually inverse", f"degree {n}")


def homotopy_equivalence(C, f, g, H_gf, H_fg, k=None, degrees=range(3), cap=None):
    """
    Certify that f: Y -> Y' and g: Y' -> Y with homotopies g∘f ~ id and
    f∘g ~ id induce mutually inverse isomorphisms on H_*(S^Y), HH_* and HC_*.
    """
    report = ValidationReport(subject=f"homotopy equivalence {f.name}, {g.name}")
    gf, fg = compose_level_maps(g, f), compose_level_maps(f, g)
    for H, expected, identity_map, label in (
        (H_gf, gf, identity_level_map(f.source), "g*f"),
        (H_fg, fg, identity_level_map(f.target), "f*g"),
    ):
        if not (_same_level_map(H.f, expected) and _same_level_map(H.g, identity_map)):
            report.add("equivalence.ends", f"{H.name} does not run from {label} to the identity", H.name)
        report.merge(validate_homotopy(H.f, H.g, H))
    if not report.ok:
        report.note("homotopies rejected; equivalence not certified")
        return report

    source, target = _pair(C, f, k, cap)
    mf = induced_matrices(C, f, k, degrees, source, target, report)
    mg = induced_matrices(C, g, k, degrees, target, source, ValidationReport(subject="discarded"))
    for label in ("s_homology", "hh", "hc"):
        forward, backward = getattr(mf, label), getattr(mg, label)
        for n in sorted(forward):
            _check_inverse(report, label, forward[n], backward[n], n)
            _check_inverse(report, label, backward[n], forward[n], n)
            report.note(f"{label}_{n}: dimension {forward[n].shape[1]} on both sides")
    logger.info(f"{report.subject}: certified={report.ok}")
    return report

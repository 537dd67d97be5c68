"""
The Dennis trace D^Y: S^Y(C) -> diag CN(S^Y(C)).

A level-m simplex of S^Y(C) is an object x of S_{Y_m} C; its image is the
cyclic m-tuple (id_x, ..., id_x) on the diagonal entry (m, m).
"""

import logging
from dataclasses import dataclass, field

from OrderY.exceptions import CapError, ConstructionError
from OrderY.reports import ValidationReport
from homalg.chains import homology, induced_map, induced_on_homology, simplicial_chain_map
from homalg.groups import pi1_edge_path
from homalg.linalg import from_columns, multiply, to_rows
from nerve.grid import cn_of_level_map
from nerve.cyclic import identity_loop, nerve_tables
from sconstruct.morphisms import s_category
from simpset.bisimplicial import diagonal_map
from simpset.induced import map_from_ord
from simpset.sets import SimplicialMap, validate_map
from .instances import Instance
from .reports import InvariantReport, render_matrix

logger = logging.getLogger(__name__)


@dataclass
class TraceResult:
    """
    Attributes:
        map: The simplicial map D^Y, validated.
        matrices: p -> matrix of H_{p+1}(S^Y(C)) -> H_{p+1}(diag CN) = HH_p^Y.
        generators: Edge labels generating K_0 (reduced Y only).
        composite: Matrix K_0 generators -> HH_0 (reduced Y only).
    """

    instance: Instance
    map: SimplicialMap
    matrices: dict = field(default_factory=dict)
    generators: tuple = ()
    composite: object = None
    notes: list = field(default_factory=list)

    def report(self):
        k = self.instance.k
        values = {str(p): render_matrix(M, k) for p, M in self.matrices.items()}
        if self.composite is not None:
            values["k0"] = {
                "generators": list(self.generators),
                "image": render_matrix(self.composite, k),
            }
        return InvariantReport(
            invariant="trace",
            instance=self.instance.description,
            field=str(k),
            caps=self.instance.caps(trace=self.map.cap),
            reliable=[0, self.instance.cap - 2],
            values=values,
            notes=list(self.notes),
        )


def trace_map(instance, top):
    """
    D^Y up to level `top`, checked against every face and degeneracy.

    Raises:
        ConstructionError: If D^Y fails to be simplicial.
    """
    X, D = instance.s_set, instance.diagonal
    maps = []
    for m in range(top + 1):
        A = s_category(instance.C, instance.Y.size(m)).category
        tables = nerve_tables(A)
        maps.append(tuple(tables.position(m, identity_loop(A, x, m)) for x in range(X.size(m))))
    D_Y = SimplicialMap(X, D, tuple(maps), name="D^Y")
    report = validate_map(D_Y)
    if not report.ok:
        logger.error(f"Dennis trace on {instance.description} is not simplicial: {report}")
        raise ConstructionError(f"Dennis trace is not simplicial: {report.violations[0]}")
    logger.info(f"Dennis trace on {instance.description} verified to level {top}")
    return D_Y


def dennis_trace(C, Y, degrees=(0,), k=None, cap=None):
    """
    The trace on homology, H_{p+1}(S^Y(C)) -> HH_p^Y(C), for p in `degrees`.

    At p = 0 and reduced Y the result also carries the composite
    K_0 -> (K_0)_ab -> H_1(S^Y(C)) -> HH_0^Y(C) on the edge generators.

    Raises:
        CapError: If the cap is below max(degrees) + 2.
        ConstructionError: If D^Y is not simplicial.
    """
    instance = Instance(C, Y, k, cap)
    top = max(degrees, default=0) + 2
    if top > instance.cap:
        raise CapError(f"the trace in degree {top - 2} needs cap {top}; cap is {instance.cap}", location="cap")
    D_Y = trace_map(instance, top)
    source, target = instance.s_chains(top), instance.diagonal_chains(top)
    result = TraceResult(instance=instance, map=D_Y)
    for p in degrees:
        result.matrices[p] = induced_on_homology(D_Y, instance.k, p + 1, source=source, target=target)
    if 0 in degrees:
        if Y.is_reduced:
            _k0_composite(result, source, result.matrices[0])
        else:
            result.notes.append(f"{Y.name} is not reduced; the K_0 composite is not defined")
    return result


def _k0_composite(result, chains, trace_matrix):
    X = result.instance.s_set
    G = pi1_edge_path(X)
    H1 = homology(chains, 1)
    K = chains.field.domain
    edges = X.nondegenerate(1)
    cycles = [{chains.index_of(1, x): K.one} for x in edges]
    coordinates = H1.coordinates(cycles)
    hurewicz = from_columns(
        [{r: c for r, c in enumerate(column) if c} for column in coordinates],
        H1.dimension,
        K,
    )
    result.generators = G.generators
    result.composite = multiply(trace_matrix, hurewicz)


def trace_naturality(C, f, degrees=(0,), k=None, cap=None):
    """
    Check HH(f) ∘ D^Y = D^{Y'} ∘ H(S^f) on H_{p+1} for a level map f: Y -> Y'.

    Raises:
        CapError: If the common cap is below max(degrees) + 2.
    """
    cap = f.cap if cap is None else min(cap, f.cap)
    source, target = Instance(C, f.source, k, cap), Instance(C, f.target, k, cap)
    top = max(degrees, default=0) + 2
    if top > cap:
        raise CapError(f"trace naturality in degree {top - 2} needs cap {top}; cap is {cap}", location="cap")
    report = ValidationReport(subject=f"naturality of the trace along {f.name}")
    s_map = simplicial_chain_map(map_from_ord(f, C, source.s_set, target.s_set),
                                 source.s_chains(top), target.s_chains(top))
    grid_map = cn_of_level_map(C, f, source.grid, target.grid, cap)
    cn_map = simplicial_chain_map(diagonal_map(grid_map, source.diagonal, target.diagonal),
                                  source.diagonal_chains(top), target.diagonal_chains(top))
    trace_source = simplicial_chain_map(trace_map(source, top), source.s_chains(top), source.diagonal_chains(top))
    trace_target = simplicial_chain_map(trace_map(target, top), target.s_chains(top), target.diagonal_chains(top))
    for p in degrees:
        n = p + 1
        lhs = multiply(induced_map(cn_map, n), induced_map(trace_source, n))
        rhs = multiply(induced_map(trace_target, n), induced_map(s_map, n))
        if to_rows(lhs) != to_rows(rhs):
            report.add("trace.natural", "HH(f) D^Y != D^Y' H(S^f)", f"degree {p}")
        else:
            report.note(f"degree {p}: square commutes ({lhs.shape[0]}x{lhs.shape[1]})")
    return report

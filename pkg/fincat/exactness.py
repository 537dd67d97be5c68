"""
Functoriality, exactness and bi-exactness checks.
"""

import logging
from itertools import product

from OrderY.exceptions import MissingWitnessError
from OrderY.reports import ValidationReport
from .checks import find_mediating, pushout_failure

logger = logging.getLogger(__name__)


def validate_functor(F):
    """Check that F is total, well-typed and preserves identities and composition."""
    S, T = F.source.base, F.target.base
    report = ValidationReport(subject=f"functor {F.name}")
    for x in S.objects:
        if F.object_map.get(x) not in T.objects:
            report.add("functor.object", "object has no image", str(x))
    for m, (s, t) in S.morphisms.items():
        image = F.morphism_map.get(m)
        if image not in T.morphisms:
            report.add("functor.morphism", "morphism has no image", str(m))
        elif T.morphisms[image] != (F.object_map.get(s), F.object_map.get(t)):
            report.add("functor.type", f"image {image!r} has the wrong endpoints", str(m))
    if not report.ok:
        return report
    for x in S.objects:
        if F.mor(S.identity(x)) != T.identity(F.obj(x)):
            report.add("functor.identity", "identity not preserved", str(x))
    for g, f in S.composable_pairs():
        if F.mor(S.comp(g, f)) != T.comp(F.mor(g), F.mor(f)):
            report.add("functor.composition", "composition not preserved", f"({g}, {f})")
    return report


def validate_bifunctor(F):
    """Functoriality of F on the product category, checked on all pairs."""
    L, R, T = F.left.base, F.right.base, F.target.base
    report = ValidationReport(subject=f"bifunctor {F.name}")
    for x, y in product(L.objects, R.objects):
        if F.object_map.get((x, y)) not in T.objects:
            report.add("functor.object", "object pair has no image", f"({x}, {y})")
    for f, g in product(L.morphisms, R.morphisms):
        image = F.morphism_map.get((f, g))
        expected = (F.object_map.get((L.src(f), R.src(g))), F.object_map.get((L.dst(f), R.dst(g))))
        if image not in T.morphisms:
            report.add("functor.morphism", "morphism pair has no image", f"({f}, {g})")
        elif T.morphisms[image] != expected:
            report.add("functor.type", f"image {image!r} has the wrong endpoints", f"({f}, {g})")
    if not report.ok:
        return report
    for x, y in product(L.objects, R.objects):
        if F.mor(L.identity(x), R.identity(y)) != T.identity(F.obj(x, y)):
            report.add("functor.identity", "identity not preserved", f"({x}, {y})")
    right_pairs = list(R.composable_pairs())
    for g1, f1 in L.composable_pairs():
        for g2, f2 in right_pairs:
            lhs = F.mor(L.comp(g1, f1), R.comp(g2, f2))
            rhs = T.comp(F.mor(g1, g2), F.mor(f1, f2))
            if lhs != rhs:
                report.add("functor.composition", "composition not preserved", f"(({g1}, {g2}), ({f1}, {f2}))")
    return report


def is_exact(F):
    """
    Check exactness of a functor between categories with cofibrations.

    Checks F(0) = 0, that cofibrations go to cofibrations and that every
    witness square of the source maps to a pushout square of the target
    (re-verified by universal-property search).
    """
    report = validate_functor(F)
    report.subject = f"exactness of {F.name}"
    if not report.ok:
        return report
    S, T = F.source, F.target
    if not T.base.is_zero_object(F.obj(S.zero)):
        report.add("exact.zero", f"F(0) = {F.obj(S.zero)!r} is not a zero object", str(S.zero))
    for c in S.cofibrations:
        if F.mor(c) not in T.cofibrations:
            report.add("exact.cofibration", f"image {F.mor(c)!r} is not a cofibration", str(c))
    for (cof, along), w in S.witnesses.items():
        failure = pushout_failure(
            T, F.mor(cof), F.mor(along), F.obj(w.obj), F.mor(w.inc_cof), F.mor(w.inc_other)
        )
        if failure:
            report.add("exact.pushout", f"image of the witness square: {failure[1]}", f"({cof}, {along})")
    logger.debug(f"Exactness of {F.name}: {report.ok}")
    return report


def is_biexact(F):
    """
    Check the two bi-exactness conditions of a bifunctor.

    Condition (1): every partial functor F(C, -) and F(-, D) is exact.
    Condition (2): for cofibrations c: C >-> C' and d: D >-> D' the canonical
    morphism F(C', D) ⊔ F(C, D') -> F(C', D') is a cofibration. Condition (2)
    is only examined when (1) holds. Pushouts of sum pairs without witnesses
    are noted as skipped.

    Raises:
        MissingWitnessError: If a non-sum pushout needed by (2) is absent.
    """
    report = validate_bifunctor(F)
    report.subject = f"bi-exactness of {F.name}"
    if not report.ok:
        return report
    L, R, E = F.left, F.right, F.target

    for y in R.objects:
        report.merge(is_exact(F.partial_left(y)))
    for x in L.objects:
        report.merge(is_exact(F.partial_right(x)))
    if not report.ok:
        report.note("condition (1) failed; condition (2) not examined")
        return report

    skipped = 0
    for c, d in product(sorted(L.cofibrations, key=str), sorted(R.cofibrations, key=str)):
        x, x2 = L.src(c), L.dst(c)
        y, y2 = R.src(d), R.dst(d)
        horizontal = F.mor(c, R.identity(y))
        vertical = F.mor(L.identity(x), d)
        w = E.witnesses.get((horizontal, vertical))
        if w is None:
            if E.is_sum_pair(horizontal, vertical):
                skipped += 1
                continue
            raise MissingWitnessError(horizontal, vertical, purpose="bi-exactness pushout")
        corner = find_mediating(
            E,
            w.obj,
            [w.inc_cof, w.inc_other],
            [F.mor(L.identity(x2), d), F.mor(c, R.identity(y2))],
        )
        if corner not in E.cofibrations:
            report.add("biexact.corner", f"corner map {corner!r} is not a cofibration", f"({c}, {d})")
    if skipped:
        report.note(f"{skipped} corner pushout(s) of sum pairs skipped")
    logger.info(f"Bi-exactness of {F.name}: {report.ok}")
    return report

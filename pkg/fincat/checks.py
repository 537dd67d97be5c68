"""
Axiom checkers for finite categories with cofibrations.

Every check is an exhaustive search over the finite hom-sets. Law violations are
collected in a ValidationReport; unresolved identifiers raise StructuralError.
"""

import logging

from django.conf import settings

from OrderY.exceptions import ConstructionError, StructuralError
from OrderY.reports import ValidationReport

logger = logging.getLogger(__name__)


def validate_category(C):
    """
    Check the category laws of a FinCategory.

    Args:
        C: FinCategory to check.

    Returns:
        ValidationReport listing composition-table gaps, identity-law and
        associativity failures and zero-object problems.

    Raises:
        StructuralError: If any table refers to an undeclared id.
    """
    C.check_references()
    report = ValidationReport(subject=f"category {C.name}")

    for obj, m in C.identities.items():
        if C.morphisms[m] != (obj, obj):
            report.add("identity.type", f"{m!r} is not an endomorphism of {obj!r}", f"identities[{obj}]")

    composable = set()
    for g, f in C.composable_pairs():
        composable.add((g, f))
        gf = C.compose.get((g, f))
        if gf is None:
            report.add("compose.missing", "composable pair has no composite", f"({g}, {f})")
        elif C.morphisms[gf] != (C.src(f), C.dst(g)):
            report.add("compose.type", f"composite {gf!r} has the wrong endpoints", f"({g}, {f})")
    for g, f in C.compose:
        if (g, f) not in composable:
            report.add("compose.extra", "entry for a non-composable pair", f"({g}, {f})")

    for m, (s, t) in C.morphisms.items():
        id_s, id_t = C.identities[s], C.identities[t]
        if C.compose.get((id_t, m)) != m:
            report.add("identity", "left identity law fails", f"({id_t}, {m})")
        if C.compose.get((m, id_s)) != m:
            report.add("identity", "right identity law fails", f"({m}, {id_s})")

    for g, f in composable:
        gf = C.compose.get((g, f))
        if gf is None:
            continue
        for h in C.out_of(C.dst(g)):
            hg = C.compose.get((h, g))
            if hg is None:
                continue
            left = C.compose.get((hg, f))
            right = C.compose.get((h, gf))
            if left is not None and right is not None and left != right:
                report.add("associativity", f"(h∘g)∘f = {left!r} but h∘(g∘f) = {right!r}", f"({h}, {g}, {f})")

    for x in C.objects:
        if len(C.hom(C.zero, x)) != 1:
            report.add("zero", f"{len(C.hom(C.zero, x))} morphisms from the zero object", f"hom({C.zero}, {x})")
        if len(C.hom(x, C.zero)) != 1:
            report.add("zero", f"{len(C.hom(x, C.zero))} morphisms to the zero object", f"hom({x}, {C.zero})")

    logger.info(f"Category {C.name}: {len(C.objects)} objects, {len(C.morphisms)} morphisms, valid={report.ok}")
    return report


def pushout_failure(C, cof, along, obj, inc_cof, inc_other):
    """
    Test the pushout universal property of a candidate square.

    Args:
        C: FinCategory or FinCofCategory.
        cof: Morphism A -> B.
        along: Morphism A -> C'.
        obj: Candidate pushout object P.
        inc_cof: Leg B -> P.
        inc_other: Leg C' -> P.

    Returns:
        None when the square is a pushout, otherwise (code, message) naming
        the first failure.
    """
    base = getattr(C, "base", C)
    if base.comp(inc_cof, cof) != base.comp(inc_other, along):
        return "cof2.square", "square does not commute"
    b, c = base.dst(cof), base.dst(along)
    for t in base.objects:
        legs_into = base.hom(obj, t)
        for x in base.hom(b, t):
            x_cof = base.comp(x, cof)
            for y in base.hom(c, t):
                if base.comp(y, along) != x_cof:
                    continue
                count = sum(
                    1
                    for u in legs_into
                    if base.comp(u, inc_cof) == x and base.comp(u, inc_other) == y
                )
                if count != 1:
                    return "cof2.universal", f"cocone ({x}, {y}) into {t!r} has {count} mediating morphisms"
    return None


def find_mediating(C, obj, legs, targets):
    """
    Find the unique u: obj -> T with u∘leg == target for every leg.

    Args:
        C: FinCategory or FinCofCategory.
        obj: Source object of the mediating morphism.
        legs: Morphisms into `obj`.
        targets: Morphisms into T, one per leg (all with the same target T).

    Raises:
        ConstructionError: If zero or several candidates exist.
    """
    base = getattr(C, "base", C)
    t = base.dst(targets[0])
    found = [
        u for u in base.hom(obj, t)
        if all(base.comp(u, leg) == target for leg, target in zip(legs, targets))
    ]
    if len(found) != 1:
        logger.error(f"Mediating search out of {obj!r} into {t!r} found {len(found)} candidates")
        raise ConstructionError(
            f"expected a unique mediating morphism {obj!r} -> {t!r}, found {len(found)}"
        )
    return found[0]


def validate_cofibrations(C, require_sums=None):
    """
    Check (Cof1), (Cof2) and closure of the cofibrations under composition.

    Witnesses are required for every (cofibration, morphism from its source)
    pair except sum pairs, unless `require_sums` (default: the KY_STRICT_SUMS
    setting) is true. Every supplied witness is verified: commuting square,
    universal property by exhaustive cocone search, and inc_other being a
    cofibration.

    Args:
        C: FinCofCategory.
        require_sums: Also demand witnesses for sum pairs.

    Returns:
        ValidationReport.
    """
    if require_sums is None:
        require_sums = getattr(settings, "KY_STRICT_SUMS", False)
    report = validate_category(C.base)
    report.subject = f"cofibrations of {C.name}"
    if not report.ok:
        report.note("category laws failed; cofibration axioms not checked")
        return report

    base = C.base
    for m in C.cofibrations:
        if m not in base.morphisms:
            raise StructuralError(f"unknown morphism {m!r}", location="cofibrations")

    for m in base.morphisms:
        if base.is_isomorphism(m) and m not in C.cofibrations:
            report.add("cof1.iso", "isomorphism is not a cofibration", m)
    for x in base.objects:
        if base.zero_in(x) not in C.cofibrations:
            report.add("cof1.initial", f"0 -> {x!r} is not a cofibration", base.zero_in(x))

    for (cof, along), w in C.witnesses.items():
        _check_witness_references(C, cof, along, w)
        where = f"({cof}, {along})"
        if cof not in C.cofibrations:
            report.add("witness.shape", "keyed by a non-cofibration", where)
            continue
        if base.src(cof) != base.src(along):
            report.add("witness.shape", "cofibration and morphism have different sources", where)
            continue
        if (base.morphisms[w.inc_cof] != (base.dst(cof), w.obj)
                or base.morphisms[w.inc_other] != (base.dst(along), w.obj)):
            report.add("witness.shape", "legs do not end at the pushout object", where)
            continue
        if w.inc_other not in C.cofibrations:
            report.add("cof2.inc_other", f"leg {w.inc_other!r} is not a cofibration", where)
        failure = pushout_failure(base, cof, along, w.obj, w.inc_cof, w.inc_other)
        if failure:
            report.add(*failure, where)

    skipped = 0
    for cof in sorted(C.cofibrations, key=_declared_order(base)):
        for along in base.out_of(base.src(cof)):
            if (cof, along) in C.witnesses:
                continue
            if not require_sums and C.is_sum_pair(cof, along):
                skipped += 1
                continue
            report.add("cof2.missing", "no pushout witness", f"({cof}, {along})")
    if skipped:
        report.note(f"{skipped} sum pair(s) without witnesses exempted")

    for g, f in base.composable_pairs():
        if g in C.cofibrations and f in C.cofibrations:
            gf = base.compose.get((g, f))
            if gf is not None and gf not in C.cofibrations:
                report.add("closure", f"composite {gf!r} of cofibrations is not a cofibration", f"({g}, {f})")

    logger.info(f"Cofibration check on {C.name}: {len(C.witnesses)} witnesses, valid={report.ok}")
    return report


def quotient(C, cof):
    """
    Return (B/A, quotient morphism B -> B/A) for a cofibration A >-> B.

    Raises:
        MissingWitnessError: If the pushout along A -> 0 was not supplied.
    """
    w = C.witness(cof, C.zero_out(C.src(cof)))
    return w.obj, w.inc_cof


def _check_witness_references(C, cof, along, w):
    base = C.base
    for name, m in (("cof", cof), ("along", along), ("inc_cof", w.inc_cof), ("inc_other", w.inc_other)):
        if m not in base.morphisms:
            raise StructuralError(f"unknown morphism {m!r}", location=f"pushouts[{cof}, {along}].{name}")
    if w.obj not in base.objects:
        raise StructuralError(f"unknown object {w.obj!r}", location=f"pushouts[{cof}, {along}].obj")


def _declared_order(base):
    order = {m: i for i, m in enumerate(base.morphisms)}
    return order.__getitem__

"""
Dispatch of the ky subcommands.

Exit codes: 0 success, 1 a validation or construction check failed, 2 the
input was malformed (bad flag, bad file, unknown name, cap out of range).
"""

import argparse
import logging
from dataclasses import dataclass

from OrderY.documents import dump_json, read_json
from OrderY.exceptions import ConstructionError, StructuralError, raise_for_serializer
from fincat.checks import validate_cofibrations
from homalg.chains import dump_homology
from invariants.computations import hc, hh, k0_report, s_homology, sbi_report
from invariants.homotopy import homotopy_invariance
from invariants.instances import Instance
from invariants.products import product_report
from invariants.reports import InvariantReport
from invariants.serializers import ValidationReportSerializer
from invariants.trace import dennis_trace
from ordstar.serializers import load_homotopy
from ordstar.simplicial import cone_contraction, constant_homotopy, identity_level_map, validate_Y
from simpset.sets import dump_simplicial_set
from .builtins import load_bifunctor, load_category_ref, load_Y_ref
from .serializers import COMMANDS, RunConfigSerializer

logger = logging.getLogger(__name__)

SUCCESS, VALIDATION_FAILED, INPUT_ERROR = 0, 1, 2


@dataclass
class RunResult:
    code: int
    output: str
    report: object = None


class ArgumentParser(argparse.ArgumentParser):
    """An argparse parser that raises instead of exiting."""

    def error(self, message):
        raise StructuralError(message, location="argv")


def build_parser(parser=None):
    parser = parser or ArgumentParser(prog="ky", description="Order-Y K-theory and Hochschild invariants")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--category", required=True, help="category file or builtin name")
    parser.add_argument("--y", help="Y file or builtin name (circle, const0, cone)")
    parser.add_argument("--target-y", dest="target_y", help="target Y of a homotopy (default: --y)")
    parser.add_argument("--homotopy", help="homotopy file, or cone-contraction / constant")
    parser.add_argument("--bifunctor", help="builtin bifunctor: meet, join or zero")
    parser.add_argument("--cap", type=int)
    parser.add_argument("--field", help="q or fp:P")
    parser.add_argument("--p", type=int)
    parser.add_argument("--q", type=int)
    parser.add_argument("--range", help="degree range A..B")
    parser.add_argument("--output", choices=("text", "structured"), default="text")
    parser.add_argument("--crosscheck", action="store_true", help="compare the diagonal with the total complex")
    parser.add_argument("--shift", type=int, default=0, help="misalign HC in the SBI check (control)")
    return parser


OPTIONS = tuple(
    action.dest for action in build_parser()._actions if action.dest != "help"
)


def parse_config(options):
    serializer = RunConfigSerializer(data={key: value for key, value in options.items() if value is not None})
    raise_for_serializer(serializer, subject="run")
    return serializer


def run(argv):
    """
    Run one ky invocation.

    Returns:
        RunResult with the exit code and the rendered report.
    """
    try:
        options = vars(build_parser().parse_args(list(argv)))
    except StructuralError as exc:
        return RunResult(INPUT_ERROR, f"error: {exc}")
    return execute(options)


def execute(options):
    """Validate parsed options and run the command they name."""
    try:
        config = parse_config({key: options.get(key) for key in OPTIONS})
        report = _dispatch(config)
    except ConstructionError as exc:
        logger.error(f"Construction check failed: {exc}")
        return RunResult(VALIDATION_FAILED, f"error: {exc}")
    except StructuralError as exc:
        logger.error(f"Input error: {exc}")
        return RunResult(INPUT_ERROR, f"error: {exc}")
    output = _render(report, config.validated_data["output"])
    return RunResult(SUCCESS if report.ok else VALIDATION_FAILED, output, report)


def _render(report, mode):
    if mode == "structured":
        if isinstance(report, InvariantReport):
            return dump_json(report.as_dict())
        return dump_json(dict(ValidationReportSerializer(report).data))
    if isinstance(report, InvariantReport):
        return report.as_text()
    return str(report) + ("".join(f"\nnote: {n}" for n in report.notes))


def _dispatch(config):
    data = config.validated_data
    command, k, cap = data["command"], data["field"], data.get("cap")
    C = load_category_ref(data["category"])
    if command == "validate":
        return _validate(C, data)
    Y = load_Y_ref(data["y"], cap)
    cap = Y.cap if cap is None else cap
    default = range(0, max(cap - 1, 1))

    if command == "s-set":
        instance = Instance(C, Y, k, cap)
        return _dump("S^Y", instance, dump_simplicial_set(instance.s_set))
    if command == "homology":
        return s_homology(C, Y, config.degrees(range(cap)), k, cap)
    if command == "k0":
        return k0_report(C, Y, k, cap)
    if command == "hh":
        return _merged(hh(C, Y, p, k, cap, data["crosscheck"]) for p in config.degrees(default))
    if command == "hc":
        return _merged(hc(C, Y, p, k, cap) for p in config.degrees(default))
    if command == "sbi":
        return sbi_report(C, Y, k, config.degrees(default), cap, data["shift"])
    if command == "trace":
        return dennis_trace(C, Y, config.degrees(range(1)), k, cap).report()
    if command == "product":
        F = load_bifunctor(data["bifunctor"], C)
        return product_report(F, Y, data.get("p") or 0, data.get("q") or 0, k, cap)
    return _homotopy_check(C, Y, data, k, cap, config.degrees(default))


def _merged(reports):
    merged = None
    for report in reports:
        merged = report if merged is None else merged.merge(report)
    return merged


def _dump(kind, instance, data):
    return InvariantReport(
        invariant=kind,
        instance=instance.description,
        field=str(instance.k),
        caps=instance.caps(),
        reliable=[0, instance.cap],
        values={"dump": data, "homology": dump_homology(instance.s_chains(instance.cap))},
    )


def _validate(C, data):
    report = validate_cofibrations(C)
    if data.get("y"):
        Y = load_Y_ref(data["y"], data.get("cap"))
        report.merge(validate_Y(Y))
    return report


def _homotopy_check(C, Y, data, k, cap, degrees):
    target = load_Y_ref(data["target_y"], cap) if data.get("target_y") else Y
    ref = data["homotopy"]
    if ref == "cone-contraction":
        H = cone_contraction(Y)
    elif ref == "constant":
        H = constant_homotopy(identity_level_map(Y))
    else:
        H = load_homotopy(read_json(ref), Y, target)
    checks = homotopy_invariance(C, H.f, H.g, H, k, degrees, cap)
    return InvariantReport(
        invariant="homotopy",
        instance=f"C = {C.name}, {H.name}: {Y.name} -> {target.name}",
        field=str(k),
        caps={"Y": Y.cap, "instance": cap},
        reliable=[0, cap - 2],
        values={"certified": checks.ok},
        checks=checks,
    )

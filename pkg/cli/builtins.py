"""
Builtin categories, simplicial objects and bifunctors.

Documents under KY_BUILTINS_DIR are preferred; a builtin whose document is
missing is generated in memory and run through the checkers before use.
"""

import logging
from pathlib import Path

from django.conf import settings

from OrderY.documents import write_json
from OrderY.exceptions import StructuralError
from fincat.checks import validate_cofibrations
from fincat.functors import BUILTIN_BIFUNCTORS
from fincat.lattice import chain_category, diamond_category, trivial_category
from fincat.serializers import category_to_document, read_category
from ordstar.serializers import Y_to_document, read_Y
from ordstar.simplicial import constant_Y, simplicial_circle, simplicial_cone, validate_Y

logger = logging.getLogger(__name__)

CATEGORY_SUFFIX = ".cat"
Y_SUFFIX = ".y"

BUILTIN_CATEGORIES = {
    "trivial": trivial_category,
    "chain2": lambda: chain_category(["0", "a"], name="chain2"),
    "chain3": lambda: chain_category(["0", "a", "b"], name="chain3"),
    "diamond": diamond_category,
}

BUILTIN_Y = {
    "circle": simplicial_circle,
    "const0": constant_Y,
    "cone": simplicial_cone,
}


def builtins_dir():
    return Path(getattr(settings, "KY_BUILTINS_DIR", "builtins"))


def _builtin_name(ref, suffix):
    name = Path(ref).name
    return name[: -len(suffix)] if name.endswith(suffix) else name


def _checked(report, what):
    if not report.ok:
        raise StructuralError(f"builtin {what} fails its checker: {report.violations[0]}", location=what)


def generate_category(name):
    """A builtin category, built and checker-validated in memory."""
    C = BUILTIN_CATEGORIES[name]()
    _checked(validate_cofibrations(C), name)
    return C


def generate_Y(name, cap):
    Y = BUILTIN_Y[name](cap)
    _checked(validate_Y(Y), name)
    return Y


def load_category_ref(ref):
    """
    Resolve --category: an existing file, then a builtin document, then an
    in-memory builtin.

    Raises:
        StructuralError: If the reference names neither a file nor a builtin.
    """
    path = Path(ref)
    if path.is_file():
        return read_category(path)
    name = _builtin_name(ref, CATEGORY_SUFFIX)
    if name not in BUILTIN_CATEGORIES:
        raise StructuralError(f"no such file or builtin category {ref!r}", location="--category")
    document = builtins_dir() / f"{name}{CATEGORY_SUFFIX}"
    if document.is_file():
        return read_category(document)
    logger.warning(f"Builtin category {name} not found in {builtins_dir()}; generating it in memory")
    return generate_category(name)


def load_Y_ref(ref, cap=None):
    """
    Resolve --y: an existing file or a builtin name. Builtins are built to `cap`
    (default KY_DEFAULT_CAP); files keep their own cap, truncated to `cap`.

    Raises:
        StructuralError: If the reference is unknown or the file's cap is too small.
    """
    path = Path(ref)
    if path.is_file():
        Y = read_Y(path)
        _checked(validate_Y(Y), str(path))
        return _truncated(Y, cap)
    name = _builtin_name(ref, Y_SUFFIX)
    if name not in BUILTIN_Y:
        raise StructuralError(f"no such file or builtin Y {ref!r}", location="--y")
    cap = getattr(settings, "KY_DEFAULT_CAP", 3) if cap is None else cap
    document = builtins_dir() / f"{name}{Y_SUFFIX}"
    if document.is_file():
        Y = read_Y(document)
        if Y.cap >= cap:
            _checked(validate_Y(Y), name)
            return _truncated(Y, cap)
    return generate_Y(name, cap)


def _truncated(Y, cap):
    if cap is None or cap == Y.cap:
        return Y
    if cap > Y.cap:
        raise StructuralError(f"{Y.name} has cap {Y.cap}, {cap} requested", location="--cap")
    return Y.truncate(cap)


def load_bifunctor(name, C):
    if name not in BUILTIN_BIFUNCTORS:
        raise StructuralError(f"unknown bifunctor {name!r}; choose from {sorted(BUILTIN_BIFUNCTORS)}",
                              location="--bifunctor")
    return BUILTIN_BIFUNCTORS[name](C)


def write_builtins(directory=None, cap=None):
    """
    Generate, check and write every builtin document.

    Returns:
        List of written paths.
    """
    directory = Path(directory) if directory else builtins_dir()
    cap = getattr(settings, "KY_MAX_CAP", 6) if cap is None else cap
    written = []
    for name in BUILTIN_CATEGORIES:
        path = directory / f"{name}{CATEGORY_SUFFIX}"
        write_json(path, category_to_document(generate_category(name)))
        written.append(path)
    for name in BUILTIN_Y:
        path = directory / f"{name}{Y_SUFFIX}"
        write_json(path, Y_to_document(generate_Y(name, cap)))
        written.append(path)
    logger.info(f"Wrote {len(written)} builtin documents to {directory}")
    return written

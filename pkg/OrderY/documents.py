"""
JSON document input and deterministic JSON output.
"""

from pathlib import Path

from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from .exceptions import StructuralError


class DocumentRenderer(JSONRenderer):
    """JSONRenderer with spaced separators on single-line output."""

    compact = False


def _sorted(data):
    if isinstance(data, dict):
        return {key: _sorted(data[key]) for key in sorted(data, key=str)}
    if isinstance(data, (list, tuple)):
        return [_sorted(item) for item in data]
    return data


def read_json(path):
    """Parse a JSON document, raising StructuralError with the file location."""
    path = Path(path)
    try:
        with path.open("rb") as stream:
            return JSONParser().parse(stream)
    except FileNotFoundError:
        raise StructuralError("file not found", location=str(path)) from None
    except ParseError as exc:
        message = str(exc.detail).removeprefix("JSON parse error - ")
        raise StructuralError(f"invalid JSON: {message}", location=str(path)) from None


def dump_json(data, indent=2):
    """Sorted-key JSON so that identical inputs give byte-identical output."""
    context = {"indent": indent} if indent else {}
    return DocumentRenderer().render(_sorted(data), renderer_context=context).decode("utf-8")


def write_json(path, data):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_json(data) + "\n", encoding="utf-8")

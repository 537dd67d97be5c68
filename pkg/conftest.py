"""
Pytest configuration and shared fixtures.

Provides:
- Builtin categories (trivial, chain2, chain3, diamond)
- Builtin simplicial objects (circle, cone, const0) at cap 3
- Coefficient fields
- Pinned KY_* settings
"""

import pytest

from fincat.lattice import chain_category, diamond_category, trivial_category
from homalg.fields import FieldSpec
from ordstar.simplicial import constant_Y, simplicial_circle, simplicial_cone


@pytest.fixture(autouse=True)
def pin_ky_settings(settings, tmp_path):
    """Tests run with the documented defaults and an empty builtins directory."""
    settings.KY_DEFAULT_FIELD = "q"
    settings.KY_DEFAULT_CAP = 3
    settings.KY_MAX_CAP = 6
    settings.KY_MAX_LEVEL_SIZE = 200_000
    settings.KY_STRICT_SUMS = False
    settings.KY_BUILTINS_DIR = tmp_path / "builtins"


@pytest.fixture
def trivial():
    return trivial_category()


@pytest.fixture
def chain2():
    """0 < a: five morphisms, one nonzero quotient."""
    return chain_category(["0", "a"], name="chain2")


@pytest.fixture
def chain3():
    return chain_category(["0", "a", "b"], name="chain3")


@pytest.fixture
def diamond():
    return diamond_category()


@pytest.fixture
def circle():
    return simplicial_circle(3)


@pytest.fixture
def cone():
    return simplicial_cone(3)


@pytest.fixture
def const0():
    return constant_Y(3)


@pytest.fixture
def rationals():
    return FieldSpec()


@pytest.fixture
def f2():
    return FieldSpec(prime=2)

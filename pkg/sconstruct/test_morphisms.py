"""
Tests for the categories S_n C, transport along Ord* maps and S_n of bifunctors.
"""

import pytest

from OrderY.exceptions import StructuralError
from fincat.functors import meet_bifunctor, zero_bifunctor
from ordstar.maps import identity_map
from sconstruct.morphisms import s_bifunctor, s_category


@pytest.mark.unit
class TestSCategory:
    """Objects and morphisms of S_n C."""

    @pytest.mark.parametrize("n, count", [(0, 1), (1, 5), (2, 12), (3, 22)])
    def test_chain2_morphism_counts(self, chain2, n, count):
        assert len(s_category(chain2, n).components) == count

    def test_degree_one_is_the_category(self, chain2):
        """S_1 C has the objects and morphisms of C."""
        S = s_category(chain2, 1)
        assert len(S.category.objects) == len(chain2.objects)
        assert len(S.category.morphisms) == len(chain2.base.morphisms)

    def test_zero_object(self, chain3):
        S = s_category(chain3, 2)
        assert S.category.zero == 0
        assert S.category.is_zero_object(0)

    def test_identities_are_identity_families(self, chain2):
        S = s_category(chain2, 2)
        for s, x in enumerate(S.level.elements):
            family = S.components[S.category.identity(s)]
            assert family == tuple(chain2.identity(obj) for obj in x.objects[1:])

    def test_memoized(self, chain2):
        assert s_category(chain2, 2) is s_category(chain2, 2)


def _preserves_composition(S, T, maps):
    for (g, f), gf in S.category.compose.items():
        if maps[gf] != T.category.comp(maps[g], maps[f]):
            return False
    return True


@pytest.mark.unit
class TestTransport:
    """S(phi) is a functor S_n C -> S_m C."""

    @pytest.mark.parametrize("Y_name", ["circle", "cone"])
    def test_structure_maps_are_functors(self, request, chain2, Y_name):
        Y = request.getfixturevalue(Y_name)
        structure = [Y.d(n, i) for n in (1, 2) for i in range(n + 1)]
        structure += [Y.s(n, i) for n in (0, 1) for i in range(n + 1)]
        for phi in structure:
            S, T = s_category(chain2, phi.source), s_category(chain2, phi.target)
            objects, maps = S.transport(phi, T)
            for mor, (s, t) in S.category.morphisms.items():
                assert T.category.morphisms[maps[mor]] == (objects[s], objects[t])
            for s in S.category.objects:
                assert maps[S.category.identity(s)] == T.category.identity(objects[s])
            assert _preserves_composition(S, T, maps)

    def test_identity_transport(self, chain2):
        S = s_category(chain2, 2)
        objects, maps = S.transport(identity_map(2), S)
        assert objects == tuple(S.category.objects)
        assert maps == tuple(range(len(S.components)))

    def test_shape_mismatch(self, chain2):
        S, T = s_category(chain2, 2), s_category(chain2, 1)
        with pytest.raises(StructuralError) as error:
            S.transport(identity_map(2), T)
        assert error.value.location == "transport"


@pytest.mark.unit
class TestSBiFunctor:
    """S_n F on ids."""

    def test_zero_bifunctor_lands_on_zero(self, chain2):
        S = s_bifunctor(zero_bifunctor(chain2, chain2, chain2), 2)
        size = len(S.left.level.elements)
        assert {S.obj(x, y) for x in range(size) for y in range(size)} == {0}

    def test_meet_with_zero_chain(self, chain2):
        S = s_bifunctor(meet_bifunctor(chain2), 2)
        for x in range(len(S.left.level.elements)):
            assert S.obj(x, 0) == 0
            assert S.obj(0, x) == 0

    def test_meet_is_idempotent_on_chains(self, chain2):
        S = s_bifunctor(meet_bifunctor(chain2), 2)
        for x in range(len(S.left.level.elements)):
            assert S.obj(x, x) == x

    def test_morphisms_follow_objects(self, chain2):
        S = s_bifunctor(meet_bifunctor(chain2), 1)
        for f, (s, t) in S.left.category.morphisms.items():
            image = S.mor(f, f)
            assert S.target.category.morphisms[image] == (S.obj(s, s), S.obj(t, t))

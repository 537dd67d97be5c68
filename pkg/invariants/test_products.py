"""
Tests for products induced by bi-exact bifunctors.

The zero bifunctor induces a valid product everywhere. The lattice meet
commutes with every horizontal map but not with the vertical faces that
divide by a quotient, so its product is reported as failing.
"""

import pytest

from OrderY.exceptions import CapError, ConstructionError
from fincat.functors import meet_bifunctor, zero_bifunctor
from homalg.linalg import is_zero
from invariants.products import product_hh, product_k_map, product_report


@pytest.mark.unit
class TestProductKMap:
    def test_zero_bifunctor(self, chain2, circle):
        product, report = product_k_map(zero_bifunctor(chain2, chain2, chain2), circle)
        assert report.ok, str(report)
        assert all(image == 0 for image in product.maps[1])

    def test_meet_fails_on_faces(self, chain2, circle):
        product, report = product_k_map(meet_bifunctor(chain2), circle)
        assert report.codes() == ["commute.d"]
        assert product.cap == 3

    def test_meet_on_constant_order(self, chain2, const0):
        _, report = product_k_map(meet_bifunctor(chain2), const0)
        assert report.ok


@pytest.mark.unit
class TestProductHH:
    """
    Shapes and target degrees only. The builtin bifunctors whose product map
    validates (zero everywhere, meet over const0) pair zero groups, so every
    pairing here is empty; the nonzero cross product is covered by the shuffle
    map on the torus in homalg.
    """

    def test_zero_on_point(self, trivial, circle):
        pairing = product_hh(zero_bifunctor(trivial, trivial, trivial), circle, 0, 0)
        assert pairing.shape == (0, 0)
        assert is_zero(pairing)

    @pytest.mark.integration
    def test_meet_on_constant_order(self, chain2, const0):
        pairing = product_hh(meet_bifunctor(chain2), const0, 0, 0)
        assert pairing.shape == (0, 0)

    def test_needs_cap(self, trivial, circle):
        with pytest.raises(CapError):
            product_hh(zero_bifunctor(trivial, trivial, trivial), circle, 1, 0)

    @pytest.mark.integration
    def test_meet_is_not_bisimplicial(self, chain2, circle):
        with pytest.raises(ConstructionError):
            product_hh(meet_bifunctor(chain2), circle, 0, 0)


@pytest.mark.unit
class TestProductReport:
    def test_failing_product_has_no_pairing(self, chain2, circle):
        report = product_report(meet_bifunctor(chain2), circle, 0, 0)
        assert not report.ok
        assert report.values == {}
        assert report.notes == ["the product map fails validation; no pairing reported"]

    def test_zero_product(self, trivial, circle):
        report = product_report(zero_bifunctor(trivial, trivial, trivial), circle, 0, 0)
        assert report.ok
        assert report.values == {"0,0": {"target_degree": 1, "pairing": []}}

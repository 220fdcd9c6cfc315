"""
Tests for the full heap catalog: families, height-zero ideals, folding, fixtures
and synthesis.
"""

from __future__ import annotations

import pytest

from tests.conftest import catalog_heap, skip_slow


def _default_keys():
    from heapkit.catalog import DEFAULT_KEYS

    return DEFAULT_KEYS


class TestCatalogKey:
    """Key parsing, rank bounds and slugs."""

    def test_parse(self):
        from heapkit.catalog import CatalogKey, Family

        key = CatalogKey.parse("D_spin:6:twisted")
        assert key.family is Family.D_SPIN
        assert key.rank == 6
        assert key.variant == "twisted"
        assert key.slug == "D_spin_6_twisted"

    def test_fixed_rank(self):
        """E7 always has rank 7; other ranks are rejected."""
        from heapkit.catalog import CatalogKey, Family
        from heapkit.core.errors import RankOutOfBounds

        assert CatalogKey(Family.E7).rank == 7
        assert CatalogKey(Family.E7).slug == "E7"
        with pytest.raises(RankOutOfBounds):
            CatalogKey(Family.E7, 6)

    def test_minimum_rank(self):
        from heapkit.catalog import CatalogKey, Family
        from heapkit.core.errors import RankOutOfBounds

        with pytest.raises(RankOutOfBounds):
            CatalogKey(Family.D_NAT, 3)

    def test_default_variant(self):
        from heapkit.catalog import CatalogKey, Family

        assert CatalogKey(Family.E6).variant == "heap"
        assert CatalogKey(Family.A_NAT, 3).variant is None
        with pytest.raises(ValueError):
            CatalogKey(Family.A_NAT, 3, "dual")

    def test_diagram(self):
        from heapkit.catalog import CatalogKey, Family

        assert CatalogKey(Family.C_FOLD, 3).diagram.name == "C3^(1)"
        assert CatalogKey(Family.A2_TWIST, 3).diagram.name == "A5^(2)"
        assert CatalogKey(Family.D2_TWIST, 3).diagram.name == "D4^(2)"


class TestCatalogHeaps:
    """Every catalog heap is a full heap with the expected ideal count."""

    @pytest.mark.parametrize("key", _default_keys(), ids=lambda k: k.slug)
    def test_period_is_null_root(self, key):
        from heapkit.cartan import null_root
        from heapkit.catalog import build

        heap = build(key)
        assert heap.diagram.name == key.diagram.name
        assert heap.period == null_root(heap.diagram)

    @pytest.mark.parametrize("key", _default_keys(), ids=lambda k: k.slug)
    def test_height_zero_ideal_count(self, key):
        from heapkit.catalog import build, expected_ideal_count

        heap = build(key)
        assert len(heap.height_zero_cuts) == expected_ideal_count(key)

    @pytest.mark.parametrize(
        "family,count", [("E6", 27), ("E7", 56)]
    )
    def test_exceptional_minuscule(self, family, count):
        from heapkit.catalog import CatalogKey, Family, expected_ideal_count

        assert expected_ideal_count(CatalogKey(Family(family))) == count

    @pytest.mark.parametrize("family,size", [("E6", 12), ("E7", 18)])
    def test_exceptional_motif_size(self, family, size):
        assert catalog_heap(family).size == size

    def test_base_heap_agrees_with_cuts(self, d4_heap):
        """Order ideals of E0 give the same height-zero cuts as the cut search."""
        from heapkit.catalog import enumerate_height_zero_ideals

        cuts = [c.levels for c in enumerate_height_zero_ideals(d4_heap)]
        assert sorted(cuts) == sorted(d4_heap.height_zero_cuts)

    def test_base_heap_a2(self, a2_heap):
        """E' is everything up to E(0, 0); E0 is the rest of the period, with character theta."""
        from heapkit.catalog import base_subheap_E0

        prime, e0 = base_subheap_E0(a2_heap)
        assert prime.levels == (1, 0, 0)
        assert e0.character().coeffs == (0, 1, 1)

    @pytest.mark.parametrize("slug", ["A_nat:3", "D_nat:4", "E6", "D2_twist:3", "B_fold:3"])
    def test_base_ideals_form_lattice(self, slug):
        """Order ideals of E0 are closed under union and intersection."""
        from heapkit.catalog import (
            CatalogKey,
            base_subheap_E0,
            build,
            expected_ideal_count,
            order_ideals,
        )

        key = CatalogKey.parse(slug)
        _, e0 = base_subheap_E0(build(key))
        ideals = set(order_ideals(e0))
        assert len(ideals) == expected_ideal_count(key)
        for first in ideals:
            for second in ideals:
                assert first | second in ideals
                assert first & second in ideals

    def test_order_ideals_of_chain(self):
        """A three-element chain has four order ideals."""
        from heapkit.cartan import finite_diagram
        from heapkit.catalog import order_ideals
        from heapkit.heap import heap_of_word

        ideals = order_ideals(heap_of_word(finite_diagram("A", 3), [0, 1, 2]))
        assert [len(i) for i in ideals] == [0, 1, 2, 3]

    def test_spin_variants(self):
        from heapkit.catalog import spin_layer_variants

        assert "plain" in spin_layer_variants(catalog_heap("D_spin", 5, "plain"))
        assert "twisted" in spin_layer_variants(catalog_heap("D_spin", 4, "twisted"))

    def test_weight_walk_rejects_level(self):
        from heapkit.cartan import affine_diagram
        from heapkit.catalog import heap_from_weight

        with pytest.raises(ValueError):
            heap_from_weight(affine_diagram("A", 2), [-1, 0, 0])

    def test_e6_dual_variant(self):
        """The dual E6 heap reverses the order of the default one."""
        from heapkit.heap import periodic_isomorphic

        assert periodic_isomorphic(catalog_heap("E6", variant="dual"), catalog_heap("E6").dual())


class TestFolding:
    """Folded heaps and their cover provenance."""

    def test_c_fold_word(self, c2_heap):
        """A3^(1) folds along i -> -i mod 4 to ...0 1 2 1... over C2^(1)."""
        assert c2_heap.word() == (0, 1, 2, 1)
        assert c2_heap.folded
        assert not c2_heap.provenance.twisted
        assert c2_heap.provenance.cover_labels == (0, 1, 2, 3)

    def test_a1_halves_period(self):
        """A1^(1) comes from A3^(1) under the half-turn with a halved period."""
        heap = catalog_heap("A1_nat")
        assert heap.provenance.twisted
        assert heap.period.coeffs == (1, 1)
        assert heap.provenance.cover.diagram.name == "A3^(1)"

    def test_half_period_word(self, a3_heap):
        from heapkit.catalog import half_period_word
        from heapkit.catalog.families import half_turn

        u = half_period_word(a3_heap, half_turn(4))
        assert u is not None
        assert len(u) == 2

    def test_wrong_target_rejected(self, a3_heap):
        from heapkit.cartan import affine_diagram
        from heapkit.catalog import fold_heap
        from heapkit.catalog.families import half_turn
        from heapkit.core.errors import FoldPreconditionViolated

        with pytest.raises(FoldPreconditionViolated):
            fold_heap(a3_heap, half_turn(4), affine_diagram("C", 2))

    def test_comparability(self, a3_heap):
        from heapkit.cartan import affine_diagram, fold_diagram
        from heapkit.catalog import check_comparability
        from heapkit.catalog.families import c_fold_involution

        folded = fold_diagram(affine_diagram("A", 3), c_fold_involution(2))
        check_comparability(a3_heap, folded)

    def test_fold_root_heap(self):
        """
        The chain 2 < 3 < 4 < 5 in the A5^(1) cover of C3^(1) has parity +1 under the
        compatible orientation and pushes to (0, 1, 2, 1).
        """
        from heapkit.cartan import RootVector
        from heapkit.rep import RepresentationSpace

        heap = catalog_heap("C_fold", 3)
        provenance = heap.provenance
        alpha = RootVector.of([0, 0, 1, 1, 1, 1])
        space = RepresentationSpace(provenance.cover, provenance.orientation)
        window = provenance.cover.window(1)
        found = space.find_root_heaps(alpha, window)
        assert found
        for root_heap in found:
            finite = window.subheap(root_heap.indices(window))
            assert finite.parity(provenance.orientation) == 1
        assert provenance.folded.push(alpha).coeffs == (0, 1, 2, 1)


class TestFixtures:
    """Hand-computed golden heaps."""

    @pytest.mark.parametrize("slug", ["A_nat:2", "A_nat:3", "A_nat:5", "A1_nat", "C_fold:2"])
    def test_matches_fixture(self, slug, test_config):
        from heapkit.catalog import CatalogKey, matches_fixture

        assert matches_fixture(test_config.fixtures_dir, CatalogKey.parse(slug))

    def test_stored_fixtures_are_catalog_keys(self, test_config):
        """Every stored file names a default key and loads as a full heap."""
        from heapkit.catalog import load_fixture
        from heapkit.heap import verify_axioms

        slugs = {key.slug for key in _default_keys()}
        stored = sorted(test_config.fixtures_dir.glob("*.json"))
        assert len(stored) >= 5
        for path in stored:
            assert path.stem in slugs
            assert verify_axioms(load_fixture(path)).passed

    @pytest.mark.parametrize("key", _default_keys(), ids=lambda k: k.slug)
    def test_frozen_round_trip(self, key, tmp_path):
        """A frozen heap reloads with the same motif, covers, period and ideals."""
        from heapkit.catalog import build, freeze, load_fixture, matches_fixture
        from heapkit.heap import periodic_isomorphic

        (path,) = freeze(tmp_path, [key])
        heap, reloaded = build(key), load_fixture(path)
        assert reloaded.to_dict() == heap.to_dict()
        assert reloaded.height_zero_cuts == heap.height_zero_cuts
        assert periodic_isomorphic(reloaded, heap)
        assert matches_fixture(tmp_path, key)

    def test_missing_fixture(self, test_config):
        from heapkit.catalog import CatalogKey, matches_fixture

        assert not matches_fixture(test_config.fixtures_dir, CatalogKey.parse("A_nat:7"))

    def test_freeze(self, tmp_path):
        from heapkit.catalog import CatalogKey, freeze, matches_fixture

        keys = [CatalogKey.parse("A_nat:3"), CatalogKey.parse("C_fold:2")]
        paths = freeze(tmp_path, keys)
        assert [p.name for p in paths] == ["A_nat_3.json", "C_fold_2.json"]
        assert all(matches_fixture(tmp_path, key) for key in keys)


@pytest.mark.slow
@skip_slow
class TestSynthesis:
    """Exhaustive full heap search."""

    def test_e6(self):
        """Two full heaps over E6^(1): the heap and its dual."""
        from heapkit.cartan import affine_diagram
        from heapkit.catalog import synthesize_full_heaps
        from heapkit.heap import periodic_isomorphic

        heaps = synthesize_full_heaps(affine_diagram("E", 6))
        assert len(heaps) == 2
        assert any(periodic_isomorphic(h, catalog_heap("E6")) for h in heaps)

    def test_e7(self):
        from heapkit.cartan import affine_diagram
        from heapkit.catalog import synthesize_full_heaps

        assert len(synthesize_full_heaps(affine_diagram("E", 7))) == 1

    def test_f4_has_none(self):
        from heapkit.cartan import affine_diagram
        from heapkit.catalog import synthesize_full_heaps

        assert synthesize_full_heaps(affine_diagram("F", 4)) == []

    def test_max_solutions(self):
        from heapkit.cartan import affine_diagram
        from heapkit.catalog import synthesize_full_heaps

        assert len(synthesize_full_heaps(affine_diagram("E", 6), max_solutions=1)) == 1

    def test_budget(self):
        """A tiny node budget stops the search and keeps what was found."""
        from heapkit.cartan import affine_diagram
        from heapkit.catalog import FullHeapSynthesizer
        from heapkit.config import SynthesisConfig
        from heapkit.core.errors import SearchBudgetExceeded

        search = FullHeapSynthesizer(affine_diagram("E", 7), SynthesisConfig(node_budget=10))
        with pytest.raises(SearchBudgetExceeded) as excinfo:
            search.run()
        assert isinstance(excinfo.value.partial, list)
        assert not search.stats.complete

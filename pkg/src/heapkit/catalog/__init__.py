"""Catalog heaps, folding, synthesis and the base heap E0."""

from heapkit.catalog.base import base_subheap_E0, enumerate_height_zero_ideals, order_ideals
from heapkit.catalog.families import (
    DEFAULT_KEYS,
    CatalogKey,
    Family,
    build,
    expected_ideal_count,
    heap_from_weight,
    spin_layer_variants,
)
from heapkit.catalog.fixtures import fixture_path, freeze, load_fixture, matches_fixture
from heapkit.catalog.folding import check_comparability, fold_heap, half_period_word
from heapkit.catalog.synthesis import FullHeapSynthesizer, SynthesisStats, synthesize_full_heaps

__all__ = [
    # Families
    "Family",
    "CatalogKey",
    "DEFAULT_KEYS",
    "build",
    "expected_ideal_count",
    "heap_from_weight",
    "spin_layer_variants",
    # Folding
    "fold_heap",
    "check_comparability",
    "half_period_word",
    # Base heap
    "base_subheap_E0",
    "order_ideals",
    "enumerate_height_zero_ideals",
    # Synthesis
    "FullHeapSynthesizer",
    "SynthesisStats",
    "synthesize_full_heaps",
    # Fixtures
    "fixture_path",
    "freeze",
    "load_fixture",
    "matches_fixture",
]

"""
Golden heap fixtures: one JSON file per catalog key, named by the key's slug.
"""

from __future__ import annotations

from collections.abc import Iterable
from pathlib import Path

from heapkit.catalog.families import DEFAULT_KEYS, CatalogKey, build
from heapkit.core.logging_config import get_logger
from heapkit.heap.io import load_heap, save_heap
from heapkit.heap.isomorphism import periodic_isomorphic
from heapkit.heap.periodic import PeriodicHeap

log = get_logger(__name__)


def fixture_path(directory: Path, key: CatalogKey) -> Path:
    return directory / f"{key.slug}.json"


def freeze(directory: Path, keys: Iterable[CatalogKey] = DEFAULT_KEYS) -> list[Path]:
    """Build and write every key; returns the written paths."""
    written = []
    for key in keys:
        path = fixture_path(directory, key)
        save_heap(build(key), path)
        written.append(path)
        log.debug(f"Froze {key} to {path}")
    log.info(f"Froze {len(written)} heaps into {directory}")
    return written


def load_fixture(path: Path) -> PeriodicHeap:
    return load_heap(path)


def matches_fixture(directory: Path, key: CatalogKey) -> bool:
    """Whether the stored heap for `key` is isomorphic to a fresh build."""
    path = fixture_path(directory, key)
    if not path.exists():
        return False
    return periodic_isomorphic(load_fixture(path), build(key))

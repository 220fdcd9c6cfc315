#!/usr/bin/env python
"""
heapkit Fixture Tool

Writes catalog heaps as JSON fixtures, or checks existing fixtures against fresh builds:
- freeze_fixtures.py [DIR] [KEY ...]          write fixtures
- freeze_fixtures.py --check [DIR] [KEY ...]  compare up to isomorphism
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

# Add src to path
ROOT_DIR = Path(__file__).parent.parent
sys.path.insert(0, str(ROOT_DIR / "src"))

from heapkit.catalog import DEFAULT_KEYS, CatalogKey, freeze, matches_fixture  # noqa: E402
from heapkit.catalog.fixtures import fixture_path  # noqa: E402

DEFAULT_DIR = ROOT_DIR / "tests" / "fixtures"


@dataclass
class FixtureRun:
    """Outcome of one freeze or check pass."""

    directory: Path
    checked: list[str] = field(default_factory=list)
    missing: list[str] = field(default_factory=list)
    mismatched: list[str] = field(default_factory=list)
    written: list[Path] = field(default_factory=list)
    duration_sec: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatched


def check(directory: Path, keys: list[CatalogKey]) -> FixtureRun:
    run = FixtureRun(directory)
    start = time.perf_counter()
    for key in keys:
        if not fixture_path(directory, key).exists():
            run.missing.append(key.slug)
            continue
        run.checked.append(key.slug)
        if not matches_fixture(directory, key):
            run.mismatched.append(key.slug)
    run.duration_sec = time.perf_counter() - start
    return run


def write(directory: Path, keys: list[CatalogKey]) -> FixtureRun:
    run = FixtureRun(directory)
    start = time.perf_counter()
    run.written = freeze(directory, keys)
    run.duration_sec = time.perf_counter() - start
    return run


def report(run: FixtureRun) -> str:
    lines = ["=" * 60, f"  FIXTURES in {run.directory}", "=" * 60]
    for path in run.written:
        lines.append(f"  [WROTE] {path.name}")
    for slug in run.checked:
        status = "MISMATCH" if slug in run.mismatched else "OK"
        lines.append(f"  [{status}] {slug}")
    for slug in run.missing:
        lines.append(f"  [SKIP] {slug} (no fixture)")
    lines.append(f"  Duration: {run.duration_sec:.2f}s")
    return "\n".join(lines)


def main() -> None:
    """Main entry point."""
    args = sys.argv[1:]
    checking = "--check" in args
    args = [a for a in args if a != "--check"]

    directory = DEFAULT_DIR
    families = {k.family.value for k in DEFAULT_KEYS}
    if args and ":" not in args[0] and args[0] not in families:
        directory = Path(args.pop(0))

    try:
        keys = [CatalogKey.parse(a) for a in args] if args else list(DEFAULT_KEYS)
    except ValueError as e:
        print(f"[ERROR] {e}")
        sys.exit(2)

    run = check(directory, keys) if checking else write(directory, keys)
    print(report(run))

    if run.ok:
        print("\n[SUCCESS] Fixtures up to date")
        sys.exit(0)
    print(f"\n[FAILURE] {len(run.mismatched)} fixture(s) differ from the catalog")
    sys.exit(1)


if __name__ == "__main__":
    main()

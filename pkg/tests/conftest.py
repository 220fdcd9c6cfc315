"""
PyTest Configuration and Fixtures

Provides:
- Test configuration and markers
- Catalog heap builders shared across test modules
- The 4x4 matrix oracle for sl_4 structure constants
"""

from __future__ import annotations

import os
import sys
from collections.abc import Generator
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import pytest

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))


# =============================================================================
# Configuration
# =============================================================================


@dataclass
class TestConfig:
    """Test configuration."""

    fixtures_dir: Path = Path(__file__).parent / "fixtures"
    seed: int = 0
    sample_size: int = 60
    cyclicity_pairs: int = 100


@pytest.fixture(scope="session")
def test_config() -> TestConfig:
    """Global test configuration."""
    return TestConfig()


@pytest.fixture(autouse=True, scope="session")
def quiet_logging() -> Generator[None, None, None]:
    """Keep loguru at WARNING on stderr for the whole session."""
    from heapkit.core.logging_config import LogConfig, LogLevel, setup_logging

    setup_logging(LogConfig(console_level=LogLevel.WARNING))
    yield


# =============================================================================
# Catalog heaps
# =============================================================================


def catalog_heap(family: str, rank: int = 0, variant: str | None = None):
    """Build a catalog heap by family name."""
    from heapkit.catalog import CatalogKey, Family, build

    return build(CatalogKey(Family(family), rank, variant))


@pytest.fixture(scope="session")
def a2_heap():
    """The A2^(1) heap ...0 1 2 0 1 2..."""
    return catalog_heap("A_nat", 2)


@pytest.fixture(scope="session")
def a3_heap():
    return catalog_heap("A_nat", 3)


@pytest.fixture(scope="session")
def c2_heap():
    return catalog_heap("C_fold", 2)


@pytest.fixture(scope="session")
def d4_heap():
    return catalog_heap("D_nat", 4)


@pytest.fixture(scope="session")
def e6_heap():
    return catalog_heap("E6")


@pytest.fixture(scope="session")
def e7_heap():
    return catalog_heap("E7")


# =============================================================================
# sl_4 oracle
# =============================================================================


class SL4Oracle:
    """
    The natural sl_4 module on the four height-zero ideals of the A3^(1) heap, written
    down from the chain 0 < 1 < 2 < 3 of the motif.

    Ideal c_m holds E' and the first m motif elements above E(0, 0), so c_m is
    (1, 0, 0, 0) plus one level on vertices 1..m. The root alpha_i + ... + alpha_j
    moves c_{i-1} to c_j through the chain i < ... < j, with sign -1 for every arrow
    k+1 -> k of the orientation along it. Heap operators are only read back through
    `heap_matrix`, to be compared against these matrices.
    """

    def __init__(self, heap):
        from heapkit.rep import IdealCut, RepresentationSpace

        self.heap = heap
        self.space = RepresentationSpace(heap)
        self.basis = [IdealCut.of((1,) + tuple(int(k <= m) for k in (1, 2, 3))) for m in range(4)]
        self.index = {cut: i for i, cut in enumerate(self.basis)}

    @staticmethod
    def span(alpha) -> tuple[int, int]:
        """(i, j) with alpha = +-(alpha_i + ... + alpha_j)."""
        coeffs = [abs(c) for c in alpha.coeffs]
        support = [k for k, c in enumerate(coeffs) if c]
        assert coeffs[0] == 0 and set(coeffs) <= {0, 1}
        assert support == list(range(support[0], support[-1] + 1))
        return support[0], support[-1]

    def sign(self, i: int, j: int) -> int:
        arrows = self.heap.diagram.orientation
        flips = sum(1 for k in range(i, j) if (k + 1, k) in arrows)
        return -1 if flips % 2 else 1

    def root(self, alpha) -> np.ndarray:
        """X_alpha for positive alpha, Y_{-alpha} for negative alpha."""
        i, j = self.span(alpha)
        m = np.zeros((4, 4), dtype=int)
        if alpha.is_positive:
            m[j, i - 1] = self.sign(i, j)
        else:
            m[i - 1, j] = self.sign(i, j)
        return m

    def simple_h(self, i: int) -> np.ndarray:
        """+1 on the ideal whose top is labelled i, -1 on the one where i is addable."""
        assert 1 <= i <= 3
        m = np.zeros((4, 4), dtype=int)
        m[i, i] = 1
        m[i - 1, i - 1] = -1
        return m

    def heap_matrix(self, operator) -> np.ndarray:
        """Column i holds the image of basis vector i under a heap operator."""
        m = np.zeros((4, 4), dtype=int)
        for i, cut in enumerate(self.basis):
            for target, c in operator(cut).items():
                m[self.index[target], i] = int(c)
        return m

    @staticmethod
    def bracket(x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return x @ y - y @ x


@pytest.fixture(scope="session")
def sl4_oracle(a3_heap) -> SL4Oracle:
    return SL4Oracle(a3_heap)


# =============================================================================
# Markers
# =============================================================================


def pytest_configure(config):
    """Configure custom markers."""
    config.addinivalue_line("markers", "slow: mark test as slow running")
    config.addinivalue_line("markers", "integration: mark test as integration test")
    config.addinivalue_line("markers", "benchmark: mark test as performance benchmark")


# Skip conditions
skip_slow = pytest.mark.skipif(
    os.getenv("SKIP_SLOW_TESTS", "0") == "1",
    reason="Slow tests skipped via SKIP_SLOW_TESTS env var",
)


def catalog_params(slow: tuple[str, ...] = ("E7",)) -> list:
    """Every default catalog key as a test parameter; the listed slugs are marked slow."""
    from heapkit.catalog import DEFAULT_KEYS

    return [
        pytest.param(
            key, id=key.slug, marks=[pytest.mark.slow, skip_slow] if key.slug in slow else []
        )
        for key in DEFAULT_KEYS
    ]

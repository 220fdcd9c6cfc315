"""
heapkit - Full Heaps over Affine Dynkin Diagrams

This package provides:
- Generalized Cartan matrices, Dynkin diagrams, roots and diagram folding
- Finite and periodic heaps, windows, isomorphism and JSON/DOT serialization
- The full heap catalog, folding of heaps, and a threaded full heap search
- The ideal module with raising, lowering and root operators and their relation suites
- Chevalley structure constants and the loop algebra action
- Crystal graphs, Weyl group and quantized actions on the ideal module
"""

__version__ = "0.1.0"

from heapkit.catalog import CatalogKey, Family, build, synthesize_full_heaps
from heapkit.cartan import DynkinDiagram, affine_diagram, parse_diagram
from heapkit.config import HeapkitConfig, get_config, set_config
from heapkit.core import (
    LogConfig,
    LogLevel,
    LogPerformance,
    VerificationReport,
    get_logger,
    setup_logging,
)
from heapkit.heap import PeriodicHeap, verify_axioms
from heapkit.rep import RepresentationSpace

__all__ = [
    # Config
    "HeapkitConfig",
    "get_config",
    "set_config",
    # Logging
    "setup_logging",
    "get_logger",
    "LogConfig",
    "LogLevel",
    "LogPerformance",
    # Diagrams
    "DynkinDiagram",
    "affine_diagram",
    "parse_diagram",
    # Heaps
    "PeriodicHeap",
    "verify_axioms",
    "CatalogKey",
    "Family",
    "build",
    "synthesize_full_heaps",
    # Representations
    "RepresentationSpace",
    "VerificationReport",
]

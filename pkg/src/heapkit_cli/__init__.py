"""
heapkit CLI - Command Line Interface

Browse the full heap catalog, render heaps and crystals, and run verification suites.
"""

__version__ = "0.1.0"

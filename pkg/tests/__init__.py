"""
heapkit Test Suite

Cartan data, heaps, catalog, representations, crystals and the CLI.
"""

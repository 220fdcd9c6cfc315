"""
Tests for Cartan matrices, Dynkin diagrams, roots and diagram folding.
"""

from __future__ import annotations

import pytest


class TestClassification:
    """Finite / affine / indefinite classification."""

    def test_affine_families(self):
        """Every named affine diagram classifies as affine."""
        from heapkit.cartan import CartanClass, affine_diagram, classify

        for kind, rank in [("A", 1), ("A", 4), ("B", 3), ("C", 2), ("D", 5), ("E", 6),
                           ("E", 7), ("E", 8), ("F", 4), ("A2", 3), ("D2", 3), ("E2", 0)]:
            assert classify(affine_diagram(kind, rank)).kind is CartanClass.AFFINE

    def test_finite_families(self):
        """Finite diagrams classify as finite with a positive witness."""
        from heapkit.cartan import CartanClass, classify, finite_diagram

        for kind, rank in [("A", 3), ("B", 3), ("C", 3), ("D", 4), ("E", 6), ("F", 4)]:
            result = classify(finite_diagram(kind, rank))
            assert result.kind is CartanClass.FINITE
            assert all(x > 0 for x in result.witness)

    def test_indefinite(self):
        """A triangle with a double edge is neither finite nor affine."""
        from heapkit.cartan import CartanClass, GeneralizedCartanMatrix, classify

        m = GeneralizedCartanMatrix.from_rows([[2, -2, -1], [-2, 2, -1], [-1, -1, 2]])
        assert classify(m).kind is CartanClass.INDEFINITE

    def test_disconnected_rejected(self):
        """Classification needs a connected diagram."""
        from heapkit.cartan import GeneralizedCartanMatrix, classify
        from heapkit.core.errors import DisconnectedDiagram

        m = GeneralizedCartanMatrix.from_rows([[2, 0], [0, 2]])
        with pytest.raises(DisconnectedDiagram):
            classify(m)


class TestRoots:
    """Positive roots, null roots, marks and symmetrizers."""

    @pytest.mark.parametrize(
        "kind,rank,count", [("A", 3, 6), ("D", 4, 12), ("E", 6, 36), ("E", 7, 63), ("B", 3, 9)]
    )
    def test_positive_root_counts(self, kind, rank, count):
        """Reflection closure gives the classical root counts."""
        from heapkit.cartan import finite_diagram, positive_roots

        assert len(positive_roots(finite_diagram(kind, rank))) == count

    def test_finite_part_of_affine(self):
        """Deleting vertex 0 from A3^(1) leaves the six roots of A3, zero at vertex 0."""
        from heapkit.cartan import affine_diagram, finite_positive_roots

        roots = finite_positive_roots(affine_diagram("A", 3))
        assert len(roots) == 6
        assert all(r[0] == 0 for r in roots)

    def test_null_root_e6(self):
        """delta for E6^(1) in Kac labelling has height 12 (the Coxeter number)."""
        from heapkit.cartan import affine_diagram, null_root

        delta = null_root(affine_diagram("E", 6))
        assert delta.coeffs == (1, 1, 2, 3, 2, 1, 2)
        assert delta.height == 12

    def test_null_and_highest_root(self):
        """theta = delta - alpha_0 is a root of the finite part."""
        from heapkit.cartan import affine_diagram, finite_positive_roots, null_and_highest_root

        diagram = affine_diagram("D", 5)
        delta, theta = null_and_highest_root(diagram)
        assert theta in finite_positive_roots(diagram)
        assert delta.height == 8

    def test_symmetrizer(self):
        """d_i a_ij = d_j a_ji, with the long roots of C2^(1) at the ends."""
        from heapkit.cartan import affine_diagram, symmetrizer

        diagram = affine_diagram("C", 2)
        a = diagram.cartan
        d = symmetrizer(a)
        for i in range(a.n):
            for j in range(a.n):
                assert d[i] * a[i, j] == d[j] * a[j, i]
        assert min(d) == 1
        assert d[0] == d[2] == 2 * d[1]

    def test_comarks_simply_laced(self):
        """Marks and comarks agree for simply-laced diagrams."""
        from heapkit.cartan import affine_diagram, comarks, null_root

        diagram = affine_diagram("E", 7)
        assert comarks(diagram) == null_root(diagram)

    def test_pairing_and_reflection(self):
        """s_i(alpha_i) = -alpha_i and <alpha_j, alpha_i^vee> = a_ij."""
        from heapkit.cartan import RootVector, finite_diagram, pairing, simple_reflection

        diagram = finite_diagram("A", 3)
        a1 = RootVector.simple(3, 0)
        a2 = RootVector.simple(3, 1)
        assert simple_reflection(0, a1, diagram) == -a1
        assert pairing(a2, a1, diagram) == -1
        assert simple_reflection(0, a2, diagram) == a1 + a2

    def test_root_trichotomy(self):
        """Pairings -1, 0, 1 match sum / orthogonal / difference."""
        from heapkit.cartan import RootCase, RootVector, finite_diagram, root_trichotomy

        diagram = finite_diagram("A", 3)
        a1 = RootVector.of([1, 0, 0])
        a2 = RootVector.of([0, 1, 0])
        a3 = RootVector.of([0, 0, 1])
        assert root_trichotomy(a1, a2, diagram)[0] is RootCase.SUM
        assert root_trichotomy(a1, a3, diagram)[0] is RootCase.ORTHOGONAL
        assert root_trichotomy(a1 + a2, a2, diagram)[0] is RootCase.DIFFERENCE


class TestSigns:
    """Orientation signs on vertices and root characters."""

    def test_vertex_sign(self):
        """sgn(p, p) = -1; along an edge exactly one direction is -1."""
        from heapkit.cartan import affine_diagram

        diagram = affine_diagram("A", 3)
        assert diagram.sgn(1, 1) == -1
        assert {diagram.sgn(1, 2), diagram.sgn(2, 1)} == {1, -1}
        assert diagram.sgn(1, 3) == 1

    def test_flip_changes_sign(self):
        """Reversing an arrow swaps the two signs on that edge."""
        from heapkit.cartan import affine_diagram

        diagram = affine_diagram("A", 3)
        flipped = diagram.flip(1, 2)
        assert flipped.sgn(1, 2) == diagram.sgn(2, 1)

    def test_root_sign_multiplicative(self):
        """The root sign is a product of vertex signs."""
        from heapkit.cartan import RootVector, affine_diagram, sgn

        diagram = affine_diagram("A", 3)
        a1 = RootVector.simple(4, 1)
        a2 = RootVector.simple(4, 2)
        assert sgn(diagram, a1, a2) == diagram.sgn(1, 2)
        assert sgn(diagram, a1 + a2, a1 + a2) == diagram.sgn(1, 2) * diagram.sgn(2, 1)


class TestRootSystemProperties:
    """Properties checked over whole root systems and every orientation."""

    @pytest.mark.parametrize(
        "kind,rank,affine",
        [("A", 3, False), ("C", 3, False), ("E", 6, False), ("A", 2, True), ("E", 7, True)],
    )
    def test_reflection_is_involution(self, kind, rank, affine):
        """s_i(s_i(v)) = v for 1000 random integer vectors."""
        import numpy as np

        from heapkit.cartan import RootVector, affine_diagram, finite_diagram, simple_reflection

        diagram = affine_diagram(kind, rank) if affine else finite_diagram(kind, rank)
        rng = np.random.default_rng(0)
        for row in rng.integers(-9, 10, size=(1000, diagram.n)):
            v = RootVector.of(int(x) for x in row)
            for i in range(diagram.n):
                assert simple_reflection(i, simple_reflection(i, v, diagram), diagram) == v

    @pytest.mark.parametrize("kind,rank", [("A", 2), ("A", 3), ("D", 4)])
    def test_trichotomy_exhaustive(self, kind, rank):
        """Every ordered pair of positive roots falls in exactly one consistent case."""
        from collections import Counter

        from heapkit.cartan import RootCase, finite_diagram, positive_roots, root_trichotomy

        diagram = finite_diagram(kind, rank)
        roots = positive_roots(diagram)
        cases: Counter[RootCase] = Counter()
        for alpha in roots:
            for beta in roots:
                case, k = root_trichotomy(alpha, beta, diagram, roots)
                assert k in (-1, 0, 1, 2)
                cases[case] += 1
        assert cases[RootCase.EQUAL] == len(roots)
        assert cases[RootCase.OPPOSITE] == 0
        assert sum(cases.values()) == len(roots) ** 2

    @pytest.mark.parametrize("rank", [2, 3])
    def test_sign_antisymmetric_every_orientation(self, rank):
        """sgn(alpha, beta) = -sgn(beta, alpha) whenever alpha + beta is a root."""
        from itertools import product

        from heapkit.cartan import finite_diagram, positive_roots, sgn

        diagram = finite_diagram("A", rank)
        roots = positive_roots(diagram)
        root_set = set(roots)
        pairs = [(a, b) for a in roots for b in roots if a + b in root_set]
        assert pairs
        edges = diagram.cartan.edges
        for flips in product((False, True), repeat=len(edges)):
            arrows = [
                (q, p) if flip else (p, q) for (p, q), flip in zip(edges, flips, strict=True)
            ]
            oriented = diagram.with_orientation(arrows)
            for alpha, beta in pairs:
                assert sgn(oriented, alpha, beta) == -sgn(oriented, beta, alpha)

    @pytest.mark.parametrize("kind,rank", [("D", 4), ("E", 6)])
    def test_sign_antisymmetric_default_orientation(self, kind, rank):
        from heapkit.cartan import finite_diagram, positive_roots, sgn

        diagram = finite_diagram(kind, rank)
        roots = positive_roots(diagram)
        root_set = set(roots)
        for alpha in roots:
            for beta in roots:
                if alpha + beta in root_set:
                    assert sgn(diagram, alpha, beta) == -sgn(diagram, beta, alpha)


class TestNamedDiagrams:
    """Parsing and the nonexistence guard."""

    @pytest.mark.parametrize(
        "name,expected",
        [("E6^(1)", "E6^(1)"), ("E7affine", "E7^(1)"), ("C3^(1)", "C3^(1)"),
         ("A5^(2)", "A5^(2)"), ("D4^(2)", "D4^(2)"), ("A3", "A3")],
    )
    def test_parse(self, name, expected):
        """Names in both styles parse to the Kac-labelled diagram."""
        from heapkit.cartan import parse_diagram

        assert parse_diagram(name).name == expected

    def test_parse_rejects_garbage(self):
        from heapkit.cartan import parse_diagram

        with pytest.raises(ValueError):
            parse_diagram("Q7")

    @pytest.mark.parametrize("name", ["F4affine", "E8affine", "E6^(2)", "A3", "D5"])
    def test_no_full_heap(self, name):
        """Finite types and F4^(1), E8^(1), E6^(2) admit no full heap."""
        from heapkit.cartan import parse_diagram, require_full_heap_possible
        from heapkit.core.errors import NoFullHeap

        with pytest.raises(NoFullHeap):
            require_full_heap_possible(parse_diagram(name))

    def test_full_heap_possible(self):
        from heapkit.cartan import parse_diagram, require_full_heap_possible

        require_full_heap_possible(parse_diagram("E7affine"))


class TestFolding:
    """Diagram automorphisms of order two."""

    def test_c_fold(self):
        """i -> -i mod 6 on A5^(1) folds to C3^(1)."""
        from heapkit.cartan import affine_diagram, classify, fold_diagram
        from heapkit.catalog.families import c_fold_involution

        folded = fold_diagram(affine_diagram("A", 5), c_fold_involution(3))
        assert folded.diagram.cartan == affine_diagram("C", 3).cartan
        assert len(folded.orbits) == 4
        assert classify(folded.diagram).kind.value == "affine"

    def test_push_character(self):
        """The character (0, 0, 1, 1, 1, 1) on A5^(1) pushes to (0, 1, 2, 1) on C3^(1)."""
        from heapkit.cartan import RootVector, affine_diagram, fold_diagram
        from heapkit.catalog.families import c_fold_involution

        folded = fold_diagram(affine_diagram("A", 5), c_fold_involution(3))
        pushed = folded.push(RootVector.of([0, 0, 1, 1, 1, 1]))
        assert pushed.coeffs == (0, 1, 2, 1)

    def test_rejects_non_automorphism(self):
        from heapkit.cartan import affine_diagram, fold_diagram
        from heapkit.core.errors import NotAnAutomorphism

        with pytest.raises(NotAnAutomorphism):
            fold_diagram(affine_diagram("D", 4), (2, 1, 0, 3, 4))

    def test_rejects_adjacent_orbit(self):
        """Swapping the two ends of an edge puts adjacent vertices in one orbit."""
        from heapkit.cartan import affine_diagram, fold_diagram
        from heapkit.core.errors import AdjacentOrbitViolation

        # Reflection of the 4-cycle fixing no vertex: 0<->1, 2<->3.
        with pytest.raises(AdjacentOrbitViolation):
            fold_diagram(affine_diagram("A", 3), (1, 0, 3, 2))

    def test_compatible_orientation(self):
        """mu maps the compatible orientation to itself."""
        from heapkit.cartan import affine_diagram, compatible_orientation, is_compatible
        from heapkit.catalog.families import c_fold_involution

        cover = affine_diagram("A", 5)
        mu = c_fold_involution(3)
        oriented = compatible_orientation(cover, mu)
        assert {(mu[p], mu[q]) for p, q in oriented.orientation} == set(oriented.orientation)
        assert is_compatible(oriented, mu)

"""
Tests for the ideal module: cut vectors, simple and root operators, relation suites,
structure constants and the loop algebra action.
"""

from __future__ import annotations

import numpy as np
import pytest

from tests.conftest import catalog_params, skip_slow


def _cut(*levels):
    from heapkit.rep import IdealCut

    return IdealCut.of(levels)


def _untwisted_simply_laced():
    families = {"A_nat", "D_nat", "D_spin", "E6", "E7"}
    return [
        param
        for param in catalog_params()
        if param.values[0].family.value in families and param.values[0].variant != "twisted"
    ]


class TestLaurent:
    """Laurent polynomials and q-integers."""

    def test_q_integer(self):
        """[2]_q = q + q^-1 and [3]_q = q^2 + 1 + q^-2."""
        from heapkit.rep import LaurentPoly, q_integer

        q = LaurentPoly.q()
        assert q_integer(2) == q + q**-1
        assert q_integer(3) == q**2 + 1 + q**-2
        assert q_integer(2, 2) == q**2 + q**-2

    def test_q_factorial_at_one(self):
        from heapkit.rep import q_factorial

        assert q_factorial(4).substitute_one() == 24
        assert q_factorial(0) == 1

    def test_exact_div(self):
        """(q^2 - q^-2) / (q - q^-1) = q + q^-1."""
        from heapkit.rep import LaurentPoly, q_integer

        q = LaurentPoly.q()
        assert (q**2 - q**-2).exact_div(q - q**-1) == q_integer(2)
        with pytest.raises(ValueError):
            (q + 2).exact_div(q - 1)

    def test_str(self):
        from heapkit.rep import LaurentPoly

        q = LaurentPoly.q()
        assert str(q**2 - 3) == "q^2 - 3"
        assert str(LaurentPoly()) == "0"


class TestVectors:
    """Ideal cuts and sparse module vectors."""

    def test_cut_arithmetic(self):
        cut = _cut(1, 0, 0)
        assert cut.moved(1).levels == (1, 1, 0)
        assert cut.plus([1, 1, 1]).levels == (2, 1, 1)
        assert cut.plus([1, 0, 0], -1).levels == (0, 0, 0)
        assert cut.meet(_cut(0, 1, 0)).levels == (0, 0, 0)
        assert cut.join(_cut(0, 1, 0)).levels == (1, 1, 0)
        assert cut.contains(0, 0) and not cut.contains(1, 0)

    def test_cancellation(self):
        """Zero coefficients are dropped."""
        from heapkit.rep import ModuleVector

        v = ModuleVector.basis(_cut(1, 0, 0), 2)
        assert not (v - v)
        assert (v + v).coefficient(_cut(1, 0, 0)) == 4
        assert v.single() == (_cut(1, 0, 0), 2)
        assert (v + ModuleVector.basis(_cut(1, 1, 0))).single() is None


class TestSimpleOperators:
    """X_p, Y_p, H_p and the affine T, D on the A2^(1) heap."""

    def test_height_zero_basis(self, a2_heap):
        from heapkit.rep import RepresentationSpace

        space = RepresentationSpace(a2_heap)
        assert [c.levels for c in space.height_zero] == [(1, 0, 0), (1, 1, 0), (1, 1, 1)]

    def test_raise_and_lower(self, a2_heap):
        from heapkit.rep import ModuleVector, RepresentationSpace

        space = RepresentationSpace(a2_heap)
        assert space.X(1)(_cut(1, 0, 0)) == ModuleVector.basis(_cut(1, 1, 0))
        assert space.Y(1)(_cut(1, 1, 0)) == ModuleVector.basis(_cut(1, 0, 0))
        assert not space.X(2)(_cut(1, 0, 0))
        assert not space.Y(2)(_cut(1, 0, 0))

    def test_h_eigenvalues(self, a2_heap):
        """+1 on removable, -1 on addable, 0 otherwise."""
        from heapkit.rep import RepresentationSpace

        space = RepresentationSpace(a2_heap)
        cut = _cut(1, 0, 0)
        assert space.h_eigenvalue(0, cut) == 1
        assert space.h_eigenvalue(1, cut) == -1
        assert space.h_eigenvalue(2, cut) == 0

    def test_operator_algebra(self, a2_heap):
        """Composition, sums and powers act on module vectors by linearity."""
        from heapkit.rep import ModuleVector, RepresentationSpace, bracket, identity

        space = RepresentationSpace(a2_heap)
        cut = _cut(1, 0, 0)
        up = space.X(2) @ space.X(1)
        assert up(cut) == ModuleVector.basis(_cut(1, 1, 1))
        assert not space.X(1).power(2)(cut)
        assert identity()(cut) == ModuleVector.basis(cut)
        assert bracket(space.X(1), space.Y(1))(cut) == space.H(1)(cut)
        assert (space.H(0) + space.H(1))(cut) == ModuleVector()

    def test_invalid_cut(self, a2_heap):
        from heapkit.core.errors import InvalidCut
        from heapkit.rep import RepresentationSpace

        with pytest.raises(InvalidCut):
            RepresentationSpace(a2_heap).cut((0, 1, 0))

    def test_shift_and_degree(self, a2_heap):
        """T moves a cut by one period with a sign; D multiplies by the height."""
        from heapkit.rep import ModuleVector, RepresentationSpace

        space = RepresentationSpace(a2_heap)
        image = space.T()(_cut(1, 0, 0)).single()
        assert image is not None
        assert image[0].levels == (2, 1, 1)
        assert image[1] in (1, -1)
        assert space.T_inv()(space.T()(_cut(1, 0, 0))) == ModuleVector.basis(_cut(1, 0, 0))
        assert not space.D()(_cut(1, 0, 0))
        assert space.D()(_cut(2, 1, 1)) == ModuleVector.basis(_cut(2, 1, 1))


class TestRootOperators:
    """Real roots, coroots and root heaps."""

    def test_real_roots(self, a2_heap):
        from heapkit.cartan import RootVector
        from heapkit.rep import RepresentationSpace

        space = RepresentationSpace(a2_heap)
        assert space.is_positive_real_root(RootVector.of([1, 2, 1]))
        assert space.is_positive_real_root(RootVector.of([0, 1, 1]))
        assert not space.is_positive_real_root(RootVector.of([1, 1, 1]))
        assert not space.is_positive_real_root(RootVector.of([0, -1, 0]))

    def test_rejects_non_root(self, a2_heap):
        from heapkit.cartan import RootVector
        from heapkit.core.errors import NotAPositiveRoot
        from heapkit.rep import RepresentationSpace

        with pytest.raises(NotAPositiveRoot):
            RepresentationSpace(a2_heap).X_root(RootVector.of([0, 2, 0]))

    def test_coroots_c2(self, c2_heap):
        """Long roots of C2 have coroots alpha/2 scaled by the symmetrizer."""
        from heapkit.cartan import RootVector
        from heapkit.rep import RepresentationSpace

        space = RepresentationSpace(c2_heap)
        assert space.coroot(RootVector.of([0, 1, 0])).coeffs == (0, 1, 0)
        assert space.coroot(RootVector.of([0, 0, 1])).coeffs == (0, 0, 1)
        assert space.coroot(RootVector.of([0, 2, 1])).coeffs == (0, 1, 1)
        assert len(space.finite_roots) == 4

    def test_root_heaps_split_uniquely(self, a3_heap):
        """alpha_1 + alpha_2 splits only as the ideal alpha_1 under the filter alpha_2."""
        from heapkit.cartan import RootVector
        from heapkit.rep import RepresentationSpace

        space = RepresentationSpace(a3_heap)
        window = a3_heap.window(1)
        alpha = RootVector.of([0, 1, 1, 0])
        found = space.find_root_heaps(alpha, window)
        assert found
        a1, a2 = RootVector.simple(4, 1), RootVector.simple(4, 2)
        for root_heap in found:
            assert sorted(p for p, _ in root_heap.elements) == [1, 2]
            assert space.split_root_heap(root_heap, a1, a2) == [(a1, a2)]

    def test_b_pm(self, a3_heap):
        """A single element E(1, 0) is extremal at 1 and extends upward through 2."""
        from heapkit.rep import RepresentationSpace

        space = RepresentationSpace(a3_heap)
        window = a3_heap.window(1)
        single = [window.index_of(1, 0)]
        assert space.b_pm(window, single, 1) == (1, 1)
        assert space.b_pm(window, single, 2)[0] == -1

    def test_convex_required(self, a3_heap):
        from heapkit.core.errors import NotConvex
        from heapkit.rep import RepresentationSpace

        space = RepresentationSpace(a3_heap)
        window = a3_heap.window(1)
        gap = [window.index_of(0, 0), window.index_of(2, 0)]
        with pytest.raises(NotConvex):
            space.b_pm(window, gap, 1)


class TestRelationSuites:
    """Defining relations and root-operator identities hold on catalog heaps."""

    @pytest.mark.parametrize("fixture", ["a2_heap", "c2_heap", "d4_heap"])
    def test_defining_relations(self, fixture, request):
        from heapkit.rep import verify_defining_relations

        report = verify_defining_relations(request.getfixturevalue(fixture))
        assert report.passed, report.to_dict()["failures"][:3]
        assert report.checks > 0

    def test_dropped_cover_reported(self, a3_heap):
        """Removing any single motif or boundary cover yields a failing report with a witness."""
        from heapkit.rep import verify_defining_relations

        variants = [
            a3_heap.with_covers(covers=[c for c in a3_heap.covers if c != dropped])
            for dropped in a3_heap.covers
        ] + [
            a3_heap.with_covers(
                boundary_covers=[c for c in a3_heap.boundary_covers if c != dropped]
            )
            for dropped in a3_heap.boundary_covers
        ]
        assert len(variants) == len(a3_heap.covers) + len(a3_heap.boundary_covers)
        for broken in variants:
            report = verify_defining_relations(broken)
            assert not report.passed
            assert report.failures[0].witness is not None

    def test_unorderable_heap_reported(self, a2_heap):
        """A heap whose copies never meet fails with a structure entry naming the error."""
        from heapkit.rep import verify_defining_relations

        report = verify_defining_relations(a2_heap.with_covers(boundary_covers=[]))
        assert report.relations_failed() == {"relations.structure"}
        assert report.failures[0].witness == {"error": "InvalidCut"}
        assert report.metadata["diagram"] == "A2^(1)"

    @pytest.mark.parametrize("fixture", ["a2_heap", "c2_heap", "d4_heap"])
    def test_maximal_element_cases(self, fixture, request):
        from heapkit.rep import verify_maximal_element_cases

        report = verify_maximal_element_cases(request.getfixturevalue(fixture))
        assert report.passed

    @pytest.mark.slow
    def test_e7_defining_relations(self, e7_heap):
        from heapkit.rep import verify_defining_relations

        assert verify_defining_relations(e7_heap).passed

    @pytest.mark.parametrize("key", catalog_params())
    def test_defining_relations_on_catalog(self, key):
        from heapkit.catalog import build
        from heapkit.rep import verify_defining_relations

        report = verify_defining_relations(build(key))
        assert report.passed, report.to_dict()["failures"][:3]
        assert report.checks > 0

    @pytest.mark.parametrize(
        "fixture,count",
        [
            ("d4_heap", 12),
            pytest.param("e6_heap", 36, marks=[pytest.mark.slow, skip_slow]),
        ],
    )
    def test_root_operators_simply_laced(self, fixture, count, request):
        from heapkit.rep import verify_root_operators

        report = verify_root_operators(request.getfixturevalue(fixture))
        assert report.passed, report.to_dict()["failures"][:3]
        assert report.metadata["roots"] == count

    def test_root_operators(self, a3_heap):
        from heapkit.rep import verify_root_operators

        report = verify_root_operators(a3_heap)
        assert report.passed, report.to_dict()["failures"][:3]
        assert report.metadata["roots"] == 6

    def test_composition(self, d4_heap, test_config):
        from heapkit.rep import verify_composition

        report = verify_composition(d4_heap, test_config.sample_size, test_config.seed)
        assert report.passed

    def test_composition_sample_size(self, d4_heap):
        """Zero compositions are redrawn until the requested number of triples is checked."""
        from heapkit.rep import verify_composition

        report = verify_composition(d4_heap, sample_size=200, seed=0)
        assert report.passed, report.to_dict()["failures"][:3]
        assert report.checks == 200
        assert report.metadata["sampled"] == 200
        assert report.metadata["attempts"] >= 100
        assert "exhausted" not in report.metadata

    def test_composition_attempt_cap(self, a2_heap):
        """A single root has no nonzero compositions; the draw stops at the cap."""
        from heapkit.cartan import RootVector
        from heapkit.rep import verify_composition
        from heapkit.rep.relations import COMPOSITION_ATTEMPTS_PER_SAMPLE

        alpha = RootVector.simple(3, 1)
        report = verify_composition(a2_heap, sample_size=4, roots=[alpha])
        assert report.checks == 0
        assert report.metadata["exhausted"]
        assert report.metadata["attempts"] == 4 * COMPOSITION_ATTEMPTS_PER_SAMPLE

    def test_composition_skipped_when_folded(self, c2_heap):
        from heapkit.rep import verify_composition

        report = verify_composition(c2_heap, sample_size=5)
        assert "composition" in report.skipped
        assert report.checks == 0

    def test_ad_power_serre(self, a2_heap):
        """ad(X_0)^2 (X_1) vanishes on the basis."""
        from heapkit.rep import RepresentationSpace, ad_power

        space = RepresentationSpace(a2_heap)
        serre = ad_power(space.X(0), space.X(1), 2)
        assert all(not serre(cut) for cut in space.domain(1))


class TestChevalley:
    """Structure constants of sl_4 from the A3^(1) heap."""

    def test_table_shape(self, a3_heap):
        """Four sums, eight differences and six coroot rows."""
        from heapkit.rep import verify_chevalley

        table, report = verify_chevalley(a3_heap)
        assert report.passed, report.to_dict()["failures"][:3]
        assert len(table.brackets) == 12
        assert len(table.coroots) == 6
        assert table.independent
        assert set(table.constants()) <= {1, -1}

    def test_csv(self, a3_heap):
        from heapkit.rep import chevalley_table

        rows = chevalley_table(a3_heap).to_csv().splitlines()
        assert rows[0] == "alpha,beta,constant"
        assert len(rows) == 1 + 12 + 6

    def test_constant_antisymmetry(self, a3_heap):
        from heapkit.cartan import RootVector
        from heapkit.rep import chevalley_table

        table = chevalley_table(a3_heap)
        a1, a2 = RootVector.simple(4, 1), RootVector.simple(4, 2)
        assert table.constant(a1, a2) == -table.constant(a2, a1)

    def test_c2_constants(self, c2_heap):
        """Doubly-laced constants stay within +-1, +-2."""
        from heapkit.rep import verify_chevalley

        table, report = verify_chevalley(c2_heap)
        assert table is not None
        assert set(table.constants()) <= {1, -1, 2, -2}

    @pytest.mark.parametrize("slug", ["C_fold:2", "C_fold:3", "B_fold:3"])
    def test_doubly_laced_tables(self, slug):
        """Folded tables pass every check with constants in +-1, +-2."""
        from heapkit.catalog import CatalogKey, build
        from heapkit.rep import verify_chevalley

        table, report = verify_chevalley(build(CatalogKey.parse(slug)))
        assert table is not None
        assert report.passed, report.to_dict()["failures"][:3]
        assert set(table.constants()) <= {1, -1, 2, -2}

    def test_match_constant_ambiguous(self, a3_heap):
        from heapkit.cartan import RootVector
        from heapkit.core.errors import AmbiguousMatch
        from heapkit.rep import RepresentationSpace, match_constant, zero_operator

        space = RepresentationSpace(a3_heap)
        x = space.X_root(RootVector.simple(4, 1))
        with pytest.raises(AmbiguousMatch):
            match_constant(x, zero_operator(), list(space.height_zero))


class TestSL4Oracle:
    """The heap operators on the four height-zero ideals form the natural sl_4 module."""

    def test_basis_is_height_zero(self, sl4_oracle):
        assert sorted(sl4_oracle.basis) == sorted(sl4_oracle.space.height_zero)

    def test_root_operators_match_matrix_units(self, sl4_oracle):
        """X_alpha and Y_alpha are the signed matrix units read off the chain."""
        space = sl4_oracle.space
        for alpha in space.finite_roots:
            assert np.array_equal(
                sl4_oracle.heap_matrix(space.X_root(alpha)), sl4_oracle.root(alpha)
            )
            assert np.array_equal(
                sl4_oracle.heap_matrix(space.Y_root(alpha)), sl4_oracle.root(-alpha)
            )

    def test_cartan_matches(self, sl4_oracle):
        for i in (1, 2, 3):
            heap_h = sl4_oracle.heap_matrix(sl4_oracle.space.H(i))
            assert np.array_equal(heap_h, sl4_oracle.simple_h(i))

    def test_brackets_match_table(self, sl4_oracle):
        from heapkit.rep import chevalley_table

        table = chevalley_table(sl4_oracle.space)
        assert len(table.brackets) == 12
        for row in table.brackets:
            lhs = sl4_oracle.bracket(sl4_oracle.root(row.alpha), sl4_oracle.root(row.beta))
            assert np.array_equal(lhs, row.constant * sl4_oracle.root(row.result))

    def test_coroots_match_table(self, sl4_oracle):
        from heapkit.rep import chevalley_table

        table = chevalley_table(sl4_oracle.space)
        for crow in table.coroots:
            lhs = sl4_oracle.bracket(sl4_oracle.root(crow.alpha), sl4_oracle.root(-crow.alpha))
            rhs = sum(c * sl4_oracle.simple_h(i) for i, c in enumerate(crow.coroot.coeffs) if c)
            assert np.array_equal(lhs, rhs)

    def test_cartan_trace_free(self, sl4_oracle):
        """H_1, H_2, H_3 are diagonal and trace free on the natural module."""
        for i in (1, 2, 3):
            h = sl4_oracle.heap_matrix(sl4_oracle.space.H(i))
            assert np.array_equal(h, np.diag(np.diag(h)))
            assert int(np.trace(h)) == 0


class TestAffine:
    """T-equivariance, the central element and the affine sign."""

    @pytest.mark.parametrize("fixture", ["a2_heap", "d4_heap"])
    def test_affine_relations(self, fixture, request):
        from heapkit.rep import verify_affine_relations

        report = verify_affine_relations(request.getfixturevalue(fixture))
        assert report.passed, report.to_dict()["failures"][:3]
        assert report.metadata["epsilon"] in (1, -1)

    @pytest.mark.parametrize("key", _untwisted_simply_laced())
    def test_affine_relations_on_catalog(self, key):
        from heapkit.catalog import build
        from heapkit.rep import verify_affine_relations

        report = verify_affine_relations(build(key))
        assert report.passed, report.to_dict()["failures"][:3]

    def test_central_element_vanishes(self, e6_heap):
        from heapkit.rep import RepresentationSpace, central_operator

        space = RepresentationSpace(e6_heap)
        k = central_operator(space)
        assert all(not k(cut) for cut in space.domain(1))

    def test_twisted_skips_t_commutation(self):
        from heapkit.rep import verify_affine_relations
        from tests.conftest import catalog_heap

        report = verify_affine_relations(catalog_heap("A1_nat"))
        assert "affine.T_commutes" in report.skipped
        assert "affine.epsilon" in report.skipped
        assert "affine.T_commutes" not in report.relations_failed()
        assert "skipped" in report.summary()
        assert report.to_dict()["skipped"] == report.skipped

    def test_untwisted_runs_every_check(self, a2_heap):
        from heapkit.rep import verify_affine_relations

        report = verify_affine_relations(a2_heap)
        assert report.skipped == []
        assert "skipped" not in report.summary()

    def test_loop_action(self, a2_heap):
        """t^1 (x) X_1 is X_1 followed by one period shift."""
        from heapkit.rep import RepresentationSpace, loop_action

        space = RepresentationSpace(a2_heap)
        image = loop_action(space, 1, space.X(1), _cut(1, 0, 0)).single()
        assert image is not None
        assert image[0].levels == (2, 2, 1)

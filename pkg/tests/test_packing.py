"""Reflections, inversive charts, packing orbits, and SVG emission."""
from fractions import Fraction

import pytest

from thinlab import (
    IntMatrix,
    PackingError,
    cluster_seeds,
    get_entry,
    invariant_forms,
    mirror_vectors,
    orbit_circles,
    reflection_vector,
    to_inversive,
)
from thinlab.cli import _signature31_form
from thinlab.packing import build_chart, _bilinear
from thinlab.svgout import render_svg

# the standard inversive form with integer entries: -2*b_hat*b + x^2 + y^2
Q_STD = ((0, -1, 0, 0), (-1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


@pytest.fixture(scope="module")
def packing_form():
    return _signature31_form(invariant_forms(get_entry("ex10").gens, "symmetric"))


@pytest.fixture(scope="module")
def packing_orbit(packing_form):
    return orbit_circles(get_entry("ex10").gens, packing_form, 6)


class TestReflectionVector:
    def test_diagonal_reflection(self):
        g = IntMatrix(((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 0), (0, 0, 0, 1)))
        q = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, -1))
        assert reflection_vector(g, q) == (0, 0, 1, 0)

    def test_all_four_generators_are_reflections(self, packing_form):
        gens = get_entry("ex10").gens
        for g in gens.generators:
            assert (g @ g).is_identity()
            v = reflection_vector(g, packing_form)  # raises if reconstruction fails
            assert _bilinear(packing_form, v, v) > 0

    def test_second_generator_exact_vector(self, packing_form):
        g = get_entry("ex10").gens.generators[1]
        assert reflection_vector(g, packing_form) == (0, 1, -2, 0)

    def test_identity_rejected(self, packing_form):
        with pytest.raises(PackingError):
            reflection_vector(IntMatrix.identity(4), packing_form)

    def test_non_involution_rejected(self, packing_form):
        g = get_entry("ex9").gens.generators[1]  # infinite order
        with pytest.raises(PackingError):
            reflection_vector(g, packing_form)


class TestInversiveChart:
    def test_standard_form_chart_is_euclidean(self):
        chart = build_chart(Q_STD)
        assert chart.d == (1, 1)

    def test_unit_circle(self):
        chart = build_chart(Q_STD)
        c = to_inversive((-2, 1, 0, 0), chart)
        assert c.curvature_exact == 1
        assert c.co_curvature_exact == -1
        assert c.center == (0.0, 0.0)
        assert c.radius == 1.0
        assert not c.is_line

    def test_projective_invariance(self):
        chart = build_chart(Q_STD)
        assert to_inversive((-2, 1, 0, 0), chart) == to_inversive((-4, 2, 0, 0), chart)

    def test_nonpositive_norm_rejected(self):
        chart = build_chart(Q_STD)
        with pytest.raises(PackingError):
            to_inversive((1, 1, 0, 0), chart)  # norm -2
        with pytest.raises(PackingError):
            to_inversive((1, 0, 0, 0), chart)  # isotropic

    def test_line_flagged(self):
        chart = build_chart(Q_STD)
        line = to_inversive((0, 0, 0, 1), chart)
        assert line.is_line
        (normal, offset) = line.line_geometry()
        assert normal == (0.0, 1.0) and offset == 0.0

    def test_wrong_signature_rejected(self):
        q = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
        with pytest.raises(PackingError):
            build_chart(q)

    def test_packing_chart_determinant_class(self, packing_form):
        # diag(6, 1): the definite part cannot be made Euclidean rationally
        chart = build_chart(packing_form)
        assert chart.d == (6, 1)


class TestClusterAndOrbit:
    def test_two_spacelike_cluster_circles(self, packing_form):
        gens = get_entry("ex10").gens
        seeds = cluster_seeds(gens, packing_form)
        assert seeds == [(0, 0, 0, 1), (0, 1, 0, -2)]
        norms = [_bilinear(packing_form, v, v) for v in seeds]
        assert norms == [1, 4]  # perfect squares: exact curvatures all along

    def test_mirror_mode_depth_zero_is_exactly_the_mirrors(self, packing_form):
        gens = get_entry("ex10").gens
        orbit = orbit_circles(gens, packing_form, 0, seeds="mirrors")
        assert orbit.size == 4
        assert {oc.vec for oc in orbit.circles} == set(
            mirror_vectors(gens, packing_form)
        )

    def test_orbit_growth_is_monotone(self, packing_form):
        gens = get_entry("ex10").gens
        sizes = []
        previous: set | None = None
        for depth in range(5):
            orbit = orbit_circles(gens, packing_form, depth)
            vecs = {oc.vec for oc in orbit.circles}
            sizes.append(len(vecs))
            if previous is not None:
                assert previous <= vecs
            previous = vecs
        assert sizes == sorted(sizes)

    def test_generator_application_stays_inside_next_depth(self, packing_form):
        gens = get_entry("ex10").gens
        orbit_d = orbit_circles(gens, packing_form, 3)
        orbit_d1 = orbit_circles(gens, packing_form, 4)
        bigger = {oc.vec for oc in orbit_d1.circles}
        for oc in orbit_d.circles:
            for g in gens.generators:
                image = tuple(
                    sum(g.entries[i][j] * oc.vec[j] for j in range(4)) for i in range(4)
                )
                assert image in bigger

    def test_norm_preserved_exactly_through_depth_six(self, packing_orbit):
        for oc in packing_orbit.circles:
            assert oc.circle.unit_norm_residual() == 0
            assert oc.circle.sqrt_norm is not None

    def test_integral_curvatures_after_one_rescaling(self, packing_orbit):
        assert packing_orbit.scale == Fraction(1, 12)
        curvatures = packing_orbit.scaled_curvatures()
        assert all(c.denominator == 1 for c in curvatures)

    def test_depth_witness_words_apply_correctly(self, packing_orbit):
        from thinlab import eval_word

        gens = get_entry("ex10").gens
        seeds = {oc.vec for oc in packing_orbit.circles if oc.depth == 0}
        for oc in packing_orbit.circles[:40]:
            g = eval_word(gens, oc.word)
            preimages = {
                tuple(
                    sum(g.inverse().entries[i][j] * oc.vec[j] for j in range(4))
                    for i in range(4)
                )
            }
            assert preimages & seeds or oc.depth == 0

    def test_mirror_seeded_orbit_has_no_global_rescaling(self, packing_form):
        gens = get_entry("ex10").gens
        orbit = orbit_circles(gens, packing_form, 2, seeds="mirrors")
        # mirror norms fall in two rational square classes (6 and 3), so no
        # single rescaling can make all curvatures integral
        assert orbit.scale is None
        assert not orbit.all_curvatures_integral()

    def test_no_duplicate_circles(self, packing_orbit):
        vecs = [oc.vec for oc in packing_orbit.circles]
        assert len(vecs) == len(set(vecs))


class TestRenderSvg:
    def test_empty_orbit_is_valid_svg(self, packing_form):
        gens = get_entry("ex10").gens
        orbit = orbit_circles(gens, packing_form, 0)
        orbit.circles = []
        orbit.mirrors = []
        svg = render_svg(orbit, timestamp=False)
        assert svg.startswith("<?xml")
        assert "<svg" in svg and "</svg>" in svg
        assert "<circle" not in svg

    def test_circle_count_matches_orbit(self, packing_orbit):
        svg = render_svg(packing_orbit, timestamp=False)
        finite_orbit = sum(1 for oc in packing_orbit.circles if not oc.circle.is_line)
        finite_mirrors = sum(1 for oc in packing_orbit.mirrors if not oc.circle.is_line)
        assert svg.count("<circle") == finite_orbit + finite_mirrors
        lines = sum(1 for oc in packing_orbit.circles if oc.circle.is_line)
        mirror_lines = sum(1 for oc in packing_orbit.mirrors if oc.circle.is_line)
        assert svg.count("<line") == lines + mirror_lines

    def test_labels_audit(self, packing_orbit):
        svg = render_svg(packing_orbit, labels=True, timestamp=False)
        curvatures = packing_orbit.scaled_curvatures()
        expected = sum(
            1
            for oc, k in zip(packing_orbit.circles, curvatures)
            if not oc.circle.is_line and abs(k) >= 1
        )
        assert svg.count("<text") == expected

    def test_deterministic_without_timestamp(self, packing_orbit):
        a = render_svg(packing_orbit, labels=True, timestamp=False)
        b = render_svg(packing_orbit, labels=True, timestamp=False)
        assert a == b

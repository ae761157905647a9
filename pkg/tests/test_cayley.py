"""Cayley graph construction: regularity, folding, components."""
import numpy as np
import pytest

from thinlab import GeneratorSet, IntMatrix, build_cayley, enumerate_image, get_entry
from thinlab.cayley import complete_graph, cycle_graph, disjoint_union


class TestBuildCayley:
    def test_p3_without_identification(self):
        image = enumerate_image(get_entry("ex5").gens, 3)
        g = build_cayley(image, psl=False)
        assert g.num_vertices == 24
        assert g.k == 4
        assert g.is_simple()
        assert g.degree_check()
        assert g.is_symmetric()

    def test_p3_with_identification(self):
        image = enumerate_image(get_entry("ex5").gens, 3)
        g = build_cayley(image, psl=True)
        assert g.num_vertices == 12
        assert g.k == 4  # the B-edges double up: multigraph semantics
        assert g.degree_check()
        assert not g.is_simple()

    def test_single_generator_cycle(self):
        t = GeneratorSet("t-only", (IntMatrix(((1, 1), (0, 1))),))
        image = enumerate_image(t, 5)
        g = build_cayley(image)
        assert g.num_vertices == 5
        assert g.k == 2
        assert g.component_count() == 1
        # 5-cycle: adjacency rows each {1, 1} on two distinct neighbors
        assert g.is_simple()

    def test_incomplete_image_rejected(self):
        image = enumerate_image(get_entry("ex1").gens, 11, cap=10)
        with pytest.raises(ValueError):
            build_cayley(image)

    def test_handshake_over_catalog(self):
        for entry_id, p in (("ex1", 5), ("ex2", 3), ("ex5", 7)):
            image = enumerate_image(get_entry(entry_id).gens, p)
            for psl in (False, True):
                g = build_cayley(image, psl=psl)
                assert g.degree_check()
                assert g.is_symmetric()

    def test_python_and_numpy_paths_agree(self):
        from thinlab.cayley import _build_python

        image = enumerate_image(get_entry("ex5").gens, 5)
        g1 = build_cayley(image, psl=True)
        g2 = _build_python(image, True, image.n, image.modulus, image.symbols,
                           len(image.symbols))
        assert g1.num_vertices == g2.num_vertices
        assert np.array_equal(g1.neighbors, g2.neighbors)


class TestGenericGraphs:
    def test_cycle(self):
        g = cycle_graph(6)
        assert g.k == 2 and g.degree_check() and g.component_count() == 1

    def test_complete(self):
        g = complete_graph(5)
        assert g.k == 4 and g.is_simple()

    def test_disjoint_union_components(self):
        g = disjoint_union(cycle_graph(4), cycle_graph(6))
        assert g.component_count() == 2

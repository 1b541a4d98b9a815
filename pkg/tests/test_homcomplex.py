"""Tests for multihomomorphism cells, hom posets, and their certificates."""

import math

import pytest

from dihom import (
    Digraph,
    EmptyComplex,
    InvalidRange,
    MultiHom,
    ShapeMismatch,
    SizeCapExceeded,
    StaircaseCell,
    VertexMap,
    closure_nu,
    directed_cycle,
    directed_path,
    complete_bipartite_digraph,
    enumerate_homomorphisms,
    hom_one_skeleton,
    hom_poset,
    is_multihom,
    multihom_of_map,
    out_neighborhood_complex,
    reduced_homology,
    sphere_tournament,
    staircase_cells,
    transitive_tournament,
)

from conftest import nbd_example_digraph, pentagon_tournament, random_digraph


class TestMultiHom:
    def test_assignments_roundtrip(self):
        a = MultiHom([{0}, {2, 3}, {1}])
        assert a.assignments == (frozenset({0}), frozenset({2, 3}), frozenset({1}))
        assert a.masks == (0b0001, 0b1100, 0b0010)
        assert len(a) == 3
        assert a[1] == {2, 3}

    def test_dimension_counts_extra_members(self):
        assert MultiHom([{0}, {1}]).dimension() == 0
        assert MultiHom([{0}, {2, 3}]).dimension() == 1
        assert MultiHom([{0, 1}, {2, 3}]).dimension() == 2

    def test_order_is_pointwise_containment(self):
        small = MultiHom([{0}, {2}])
        big = MultiHom([{0}, {2, 3}])
        assert small.leq(big)
        assert big.leq(big)
        assert not big.leq(small)
        assert not MultiHom([{1}, {2}]).leq(big)
        # Different lengths never compare.
        assert not MultiHom([{0}]).leq(big)

    def test_singleton_cells_are_vertex_maps(self):
        f = VertexMap([2, 0, 1])
        cell = multihom_of_map(f)
        assert cell.is_singleton()
        assert cell.singleton_map() == f
        assert cell.dimension() == 0

        fat = MultiHom([{0, 1}, {2}])
        assert not fat.is_singleton()
        with pytest.raises(ShapeMismatch):
            fat.singleton_map()

    def test_value_equality_and_hash(self):
        a = MultiHom([{0}, {1, 2}])
        b = MultiHom([[0], [2, 1]])
        assert a == b
        assert hash(a) == hash(b)
        assert a != MultiHom([{0}, {1}])
        assert len({a, b}) == 1

    def test_key_is_sorted_tuples(self):
        assert MultiHom([{3, 1}, {0}]).key() == ((1, 3), (0,))

    def test_rejects_empty_assignment(self):
        with pytest.raises(ShapeMismatch):
            MultiHom([{0}, set()])

    def test_rejects_negative_vertex(self):
        with pytest.raises(ShapeMismatch):
            MultiHom([{0}, {-1}])

    def test_immutable(self):
        a = MultiHom([{0}])
        with pytest.raises(AttributeError):
            a.masks = ()


class TestIsMultihom:
    def setup_method(self):
        self.k2 = transitive_tournament(2)
        self.k4 = transitive_tournament(4)

    def test_valid_cell(self):
        assert is_multihom(MultiHom([{0}, {2, 3}]), self.k2, self.k4)

    def test_missing_edge_fails(self):
        # 1 -> 1 would have to be a loop of the target.
        assert not is_multihom(MultiHom([{0, 1}, {1, 2}]), self.k2, self.k4)

    def test_wrong_arrow_direction_fails(self):
        assert not is_multihom(MultiHom([{3}, {0}]), self.k2, self.k4)

    def test_loop_needs_looped_clique(self):
        loop = Digraph(1, [(0, 0)])
        looped_pair = Digraph(2, [(0, 0), (1, 1)])
        assert is_multihom(MultiHom([{0}]), loop, looped_pair)
        # {0, 1} is not mutually adjacent in the target, so the doubled
        # assignment is not a cell even though both singletons are.
        assert not is_multihom(MultiHom([{0, 1}]), loop, looped_pair)

    def test_shape_errors(self):
        with pytest.raises(ShapeMismatch):
            is_multihom(MultiHom([{0}]), self.k2, self.k4)
        with pytest.raises(ShapeMismatch):
            is_multihom(MultiHom([{0}, {4}]), self.k2, self.k4)


class TestHomPoset:
    def test_census_of_edge_into_k4(self):
        p = hom_poset(transitive_tournament(2), transitive_tournament(4))
        assert len(p) == 17
        assert p.dimension_census() == {0: 6, 1: 8, 2: 3}
        assert p.euler_characteristic() == 1

    @pytest.mark.parametrize("n,total", [(4, 17), (5, 49), (6, 129)])
    def test_census_growth(self, n, total):
        p = hom_poset(transitive_tournament(2), transitive_tournament(n))
        assert len(p) == total

    def test_minimal_cells_are_the_homomorphisms(self):
        g = transitive_tournament(2)
        h = transitive_tournament(4)
        p = hom_poset(g, h)
        assert p.homomorphisms() == enumerate_homomorphisms(g, h)
        assert all(c.dimension() == 0 for c in p.minimal_cells())

    def test_covers_are_single_element_extensions(self):
        p = hom_poset(transitive_tournament(2), transitive_tournament(4))
        cells = list(p)
        expected = {
            (i, j)
            for i, a in enumerate(cells)
            for j, b in enumerate(cells)
            if a.leq(b) and b.dimension() == a.dimension() + 1
        }
        assert set(p.covering_index_pairs()) == expected

    def test_membership_and_index(self):
        p = hom_poset(transitive_tournament(2), transitive_tournament(4))
        cell = MultiHom([{0}, {2, 3}])
        assert cell in p
        assert list(p)[p.index(cell)] == cell
        assert MultiHom([{0, 1}, {1}]) not in p

    def test_empty_when_no_homomorphism_exists(self):
        p = hom_poset(directed_cycle(3), transitive_tournament(5))
        assert len(p) == 0
        assert p.homomorphisms() == []
        assert not p.is_connected()

    def test_empty_source_has_one_cell(self):
        p = hom_poset(Digraph(0, []), transitive_tournament(3))
        assert len(p) == 1
        assert p.euler_characteristic() == 1
        assert p.is_connected()

    def test_rotation_components(self):
        p = hom_poset(directed_cycle(3), directed_cycle(3))
        comps = p.components()
        assert len(comps) == 3
        assert all(len(c) == 1 for c in comps)

    def test_as_poset_matches_strict_order(self):
        p = hom_poset(transitive_tournament(2), transitive_tournament(3))
        q = p.as_poset()
        assert len(q.elements) == len(p)
        for a in p:
            for b in p:
                assert q.lt(a, b) == (a != b and a.leq(b))

    def test_cap(self):
        with pytest.raises(SizeCapExceeded):
            hom_poset(transitive_tournament(2), transitive_tournament(6), cap=100)

    def test_maximal_cells_of_edge_into_k4(self):
        p = hom_poset(transitive_tournament(2), transitive_tournament(4))
        tops = {c.key() for c in p.maximal_cells()}
        assert tops == {
            ((0,), (1, 2, 3)),
            ((0, 1), (2, 3)),
            ((0, 1, 2), (3,)),
        }


class TestOneSkeleton:
    def test_codimension_one_tournament_pair_is_a_path(self):
        s = hom_one_skeleton(transitive_tournament(3), transitive_tournament(4))
        assert len(s) == 4
        assert len(s.edges) == 3
        assert s.is_connected()
        degrees = sorted(len(s.neighbors(i)) for i in range(len(s)))
        assert degrees == [1, 1, 2, 2]

    @pytest.mark.parametrize("r,s,count", [(2, 2, 1), (2, 5, 4), (3, 5, 3), (5, 5, 1)])
    def test_path_into_path_counts(self, r, s, count):
        sk = hom_one_skeleton(directed_path(r), directed_path(s))
        assert len(sk) == count
        # Distinct shifts differ everywhere, so no two maps are adjacent.
        assert len(sk.edges) == 0

    @pytest.mark.parametrize("r,s", [(3, 3), (6, 3), (5, 3), (4, 3), (8, 4), (6, 4)])
    def test_cycle_into_cycle_counts(self, r, s):
        sk = hom_one_skeleton(directed_cycle(r), directed_cycle(s))
        assert len(sk) == (s if r % s == 0 else 0)

    def test_triangle_into_pentagon_tournament_is_a_long_cycle(self):
        sk = hom_one_skeleton(directed_cycle(3), pentagon_tournament())
        assert len(sk) == 15
        assert len(sk.edges) == 15
        assert sk.is_connected()
        assert all(len(sk.neighbors(i)) == 2 for i in range(15))
        # Closed walk along the unique cycle returns to the start after 15
        # steps, so the skeleton is one circle rather than several.
        dist = sk.bfs_distances(0)
        assert max(dist) == 7

    def test_loops_can_disconnect_the_skeleton(self):
        g = Digraph(1, [(0, 0)])
        h = Digraph(2, [(0, 0), (1, 1)])
        sk = hom_one_skeleton(g, h)
        assert len(sk) == 2
        assert len(sk.edges) == 0
        assert not sk.is_connected()
        assert sk.components() == [[0], [1]]

    def test_bfs_distance_unreachable_is_minus_one(self):
        sk = hom_one_skeleton(Digraph(1, [(0, 0)]), Digraph(2, [(0, 0), (1, 1)]))
        assert sk.bfs_distances(0) == [0, -1]


class TestClosureNu:
    def test_bipartite_orientation_closes_to_a_point(self):
        red = closure_nu(complete_bipartite_digraph(2, 3))
        assert len(red.image_poset.elements) == 1
        assert red.order_complex_dimension == 0
        assert set(red.mapping.values()) == {frozenset({2, 3, 4})}

    def test_extensive_idempotent_monotone(self):
        red = closure_nu(nbd_example_digraph())
        m = red.mapping
        for face, closed in m.items():
            assert face <= closed
            assert m[closed] == closed
        for a in m:
            for b in m:
                if a <= b:
                    assert m[a] <= m[b]

    @pytest.mark.parametrize(
        "g",
        [nbd_example_digraph(), sphere_tournament(1), pentagon_tournament()],
        ids=["worked-example", "hexagon", "pentagon"],
    )
    def test_image_complex_preserves_homology(self, g):
        red = closure_nu(g)
        assert reduced_homology(red.image_complex) == reduced_homology(
            out_neighborhood_complex(g)
        )

    def test_image_complex_preserves_homology_randomized(self, rng):
        hits = 0
        for _ in range(25):
            g = random_digraph(rng, 4, p=0.5, loops=False)
            if g.edge_count == 0:
                continue
            hits += 1
            red = closure_nu(g)
            assert reduced_homology(red.image_complex) == reduced_homology(
                out_neighborhood_complex(g)
            )
        assert hits >= 15

    def test_edgeless_digraph_raises(self):
        with pytest.raises(EmptyComplex):
            closure_nu(Digraph(3, []))


class TestStaircase:
    def test_two_into_four(self):
        cells = staircase_cells(2, 4)
        assert len(cells) == 3
        assert all(c.is_staircase for c in cells)
        assert {c.blocks for c in cells} == {
            ((0,), (1, 2, 3)),
            ((0, 1), (2, 3)),
            ((0, 1, 2), (3,)),
        }

    def test_three_into_five(self):
        cells = staircase_cells(3, 5)
        assert len(cells) == 6
        assert all(c.is_staircase for c in cells)

    @pytest.mark.parametrize("m,n", [(2, 2), (2, 6), (3, 4), (4, 6), (5, 5)])
    def test_count_is_compositions(self, m, n):
        assert len(staircase_cells(m, n)) == math.comb(n - 1, m - 1)

    def test_rejects_bad_ranges(self):
        with pytest.raises(InvalidRange):
            staircase_cells(1, 3)
        with pytest.raises(InvalidRange):
            staircase_cells(3, 2)

    def test_predicate_rejects_non_staircases(self):
        # Gap between blocks.
        assert not StaircaseCell(MultiHom([{0}, {2}]), 3).is_staircase
        # Does not start at zero.
        assert not StaircaseCell(MultiHom([{1}, {2}]), 3).is_staircase
        # Non-contiguous block.
        assert not StaircaseCell(MultiHom([{0, 2}, {1}]), 3).is_staircase
        # Leftover target vertex.
        assert not StaircaseCell(MultiHom([{0}, {1}]), 3).is_staircase

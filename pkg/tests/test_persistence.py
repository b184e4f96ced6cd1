"""Unit tests for persistence.py."""
from .testutil import TestCase

from common import BadParams, CLASSICAL, FieldMismatch, INF, Window
import complexes
from complexes import SimplicialMap
import families
from linalg import PrimeField
import persistence
from persistence import SimplicialChains


class PersistenceTest(TestCase):

    def setUp(self):
        super().setUp()
        self.c5 = families.cycle(5, directed=False)
        self.c6 = families.cycle(6)

    def test_pentagon_homology(self):
        table = persistence.simplicial_homology(
            complexes.independence_complex(self.c5, CLASSICAL))
        self.assertEqual((1, 1, 0, 0), table.betti)
        self.assertEqual((5, 5, 0, 0), table.chain_dims)
        self.assertEqual((), table.truncated)
        self.assertEqual({
            'field': 'q',
            'betti': [1, 1, 0, 0],
            'chain_dims': [5, 5, 0, 0],
            'truncated': [],
        }, table.to_record())

    def test_prism_homology(self):
        # two filled triangles joined by three antipodal edges
        ind = complexes.independence_complex(self.c6, CLASSICAL)
        self.assertEqual((1, 2, 0, 0), persistence.simplicial_homology(ind).betti)
        self.assertEqual((1, 2), persistence.simplicial_homology(ind, degree_cap=1).betti)

    def test_truncated_top_degree(self):
        ind = complexes.independence_complex(self.c6, CLASSICAL, dim_cap=1)
        table = persistence.simplicial_homology(ind)
        self.assertEqual((1, 4), table.betti)
        self.assertEqual((1,), table.truncated)
        self.assertEqual((1,), table.exact())

    def test_check_euler(self):
        ind = complexes.independence_complex(self.c6, CLASSICAL)
        table = persistence.simplicial_homology(ind)
        self.assertEqual([6, 9, 2], ind.counts())
        persistence.check_euler(table, ind.counts())

        with self.assertRaises(AssertionError):
            persistence.check_euler(table, [6, 8, 2])

        # a table that stops short of the complex's dimension isn't comparable
        persistence.check_euler(persistence.simplicial_homology(ind, degree_cap=1),
                                [6, 8, 2])

    def test_betti_over_primes(self):
        ind = complexes.independence_complex(self.c6, CLASSICAL)
        self.assertEqual({
            'q': (1, 2, 0, 0),
            'gf2': (1, 2, 0, 0),
            'gf3': (1, 2, 0, 0),
        }, persistence.betti_over_primes(ind, primes=(2, 3)))

    def test_cycles_and_boundaries(self):
        chains = SimplicialChains(complexes.independence_complex(self.c5, CLASSICAL))
        self.assertEqual(1, len(chains.cycles(1)))
        self.assertEqual([], chains.boundaries(1))
        self.assertEqual(5, len(chains.cycles(0)))
        self.assertEqual(4, len(chains.boundaries(0)))
        self.assertEqual(4, chains.boundary_rank(1))
        self.assertEqual(0, chains.boundary_rank(0))

    def test_simplicial_boundary(self):
        chains = SimplicialChains(complexes.independence_complex(self.c6, CLASSICAL))
        self.assertEqual({(2, 4): 1, (0, 4): -1, (0, 2): 1},
                         chains.boundary({(0, 2, 4): 1}))
        self.assertEqual({}, chains.boundary({(3,): 1}))

    def test_m_slice(self):
        barcode = persistence.persistence_slice(self.c6, 'm', degree_cap=1)
        self.assertEqual(persistence.M_INCREASING, barcode.direction)
        self.assertEqual(1, barcode.fixed)
        self.assertEqual((2, 3, INF), barcode.thresholds)
        self.assertEqual(Window(1, 3), barcode.window(1))

        self.assertCountEqual([
            {'degree': 0, 'birth': 2, 'death': 'inf', 'direction': 'm-increasing'},
            {'degree': 0, 'birth': 2, 'death': 3, 'direction': 'm-increasing'},
            {'degree': 1, 'birth': 3, 'death': 'inf', 'direction': 'm-increasing'},
            {'degree': 1, 'birth': 3, 'death': 'inf', 'direction': 'm-increasing'},
        ], list(barcode.to_records()))

        for index, degree, expected in (
                (0, 0, 2), (1, 0, 1), (2, 0, 1),
                (0, 1, 0), (1, 1, 2), (2, 1, 2),
        ):
            with self.subTest(index=index, degree=degree):
                self.assertEqual(expected, barcode.alive(index, degree))

    def test_n_slice(self):
        barcode = persistence.persistence_slice(self.c6, 'n', degree_cap=1)
        self.assertEqual(persistence.N_DECREASING, barcode.direction)
        self.assertEqual(INF, barcode.fixed)
        self.assertEqual((3, 2, 1), barcode.thresholds)
        self.assertEqual(Window(3, INF), barcode.window(0))

        for index, degree, expected in ((0, 0, 6), (1, 0, 3), (2, 0, 1), (2, 1, 2)):
            with self.subTest(index=index, degree=degree):
                self.assertEqual(expected, barcode.alive(index, degree))

    def test_slice_matches_betti_numbers(self):
        for g in self.random_digraphs(6, max_vertices=6):
            for axis in 'm', 'n':
                barcode = persistence.persistence_slice(g, axis, degree_cap=1)
                for index in range(len(barcode.thresholds)):
                    w = barcode.window(index)
                    ind = complexes.independence_complex(g, w, dim_cap=2)
                    betti = persistence.simplicial_homology(ind, degree_cap=1).betti
                    with self.subTest(g=g, axis=axis, window=str(w)):
                        self.assertEqual(betti, tuple(barcode.alive(index, d)
                                                      for d in range(len(betti))))

    def test_slice_bad_axis(self):
        with self.assertRaises(BadParams):
            persistence.persistence_slice(self.c6, 'x')

    def test_leq(self):
        self.assertTrue(persistence.leq(Window(2, 3), Window(1, 3)))
        self.assertTrue(persistence.leq(Window(1, 2), Window(1, INF)))
        self.assertFalse(persistence.leq(Window(1, 3), Window(2, 3)))
        self.assertFalse(persistence.leq(Window(1, INF), Window(1, 2)))

    def test_rank_invariant(self):
        ri = persistence.rank_invariant(self.c6, degree_cap=1)
        self.assertEqual(6, len(ri.points))
        self.assertEqual(2, ri.betti[(Window(1, 2), 0)])
        self.assertEqual(3, ri.betti[(Window(2, 3), 0)])
        self.assertEqual(2, ri.betti[(Window(1, INF), 1)])

        for a, b, degree, expected in (
                (Window(1, 2), Window(1, 2), 0, 2),
                (Window(1, 2), Window(1, 3), 0, 1),
                (Window(2, 3), Window(1, 3), 0, 1),
                (Window(2, 3), Window(2, INF), 0, 3),
                (Window(1, 3), Window(1, INF), 1, 2),
                (Window(1, 2), Window(1, INF), 1, 0),
        ):
            with self.subTest(a=str(a), b=str(b), degree=degree):
                self.assertEqual(expected, ri.rank(a, b, degree))

        records = list(ri.to_records())
        self.assertEqual(len(ri.ranks), len(records))
        self.assertIn({'from': {'n': 1, 'm': 2}, 'to': {'n': 1, 'm': 3},
                       'degree': 0, 'rank': 1}, records)

    def test_rank_invariant_parallel(self):
        serial = persistence.rank_invariant(self.c6, degree_cap=1)
        parallel = persistence.rank_invariant(self.c6, degree_cap=1, jobs=3)
        self.assertEqual(serial.ranks, parallel.ranks)

    def test_induced_homology_rank(self):
        small = complexes.independence_complex(self.c6, Window(1, 2), 2)
        big = complexes.independence_complex(self.c6, Window(1, 3), 2)
        chain_map = persistence.simplicial_chain_map(
            SimplicialMap(small, big, range(6)).validate())
        self.assertEqual({0: 1, 1: 0}, persistence.induced_homology_rank(
            SimplicialChains(small, degree_cap=1),
            SimplicialChains(big, degree_cap=1), chain_map))

    def test_induced_homology_rank_field_mismatch(self):
        ind = complexes.independence_complex(self.c6, CLASSICAL)
        with self.assertRaises(FieldMismatch):
            persistence.induced_homology_rank(
                SimplicialChains(ind), SimplicialChains(ind, field=PrimeField(2)),
                lambda vec: vec)

    def test_simplicial_chain_map_signs(self):
        ind = complexes.independence_complex(self.c6, CLASSICAL)
        swap = persistence.simplicial_chain_map(SimplicialMap(ind, ind, (2, 1, 0, 3, 4, 5)))
        self.assertEqual({(0, 2): -1}, swap({(0, 2): 1}))
        self.assertEqual({(2, 4): 1}, swap({(0, 4): 1}))

        collapse = persistence.simplicial_chain_map(SimplicialMap(ind, ind, (0,) * 6))
        self.assertEqual({}, collapse({(0, 2): 1}))
        self.assertEqual({(0,): 3}, collapse({(4,): 3}))

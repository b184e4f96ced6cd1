"""Unit tests for capacity.py."""
import sympy

from .testutil import digraph, TestCase

from common import AlphaTimeout, CLASSICAL, INF, SizeOverflow, TooLarge, Window
import capacity
import complexes
import families
import products


class CapacityTest(TestCase):

    def setUp(self):
        super().setUp()
        self.c5 = families.cycle(5, directed=False)

    def test_alpha_pentagon(self):
        self.assertEqual(2, capacity.alpha(self.c5, CLASSICAL))
        wg = complexes.window_graph(self.c5, CLASSICAL)
        clique = capacity.max_clique(wg)
        self.assertEqual(2, len(clique))
        self.assertIn(clique, wg.edges)

    def test_alpha_pentagon_squared(self):
        square = products.strong_power(self.c5, 2)
        self.assertEqual(5, capacity.alpha(square, CLASSICAL))
        self.assertEqual(5, capacity.alpha_exhaustive(square, CLASSICAL))
        self.assertEqual(5, capacity.alpha_networkx(square, CLASSICAL))

    def test_alpha_windows(self):
        c6 = families.cycle(6)
        for w, expected in (
                (CLASSICAL, 3),
                (Window(2, 3), 2),
                (Window(1, 2), 3),
                (Window(3, INF), 1),
        ):
            with self.subTest(window=str(w)):
                self.assertEqual(expected, capacity.alpha(c6, w))

    def test_alpha_empty(self):
        empty = digraph(0)
        self.assertEqual(0, capacity.alpha(empty, CLASSICAL))
        self.assertEqual(0, capacity.alpha_exhaustive(empty, CLASSICAL))
        self.assertEqual(0, capacity.root_color_bound(
            complexes.window_graph(empty, CLASSICAL)))

    def test_alpha_agrees_with_oracles(self):
        for g in self.random_digraphs(12):
            for w in CLASSICAL, Window(1, 2), Window(2, INF):
                with self.subTest(g=g, window=str(w)):
                    expected = capacity.alpha_exhaustive(g, w)
                    self.assertEqual(expected, capacity.alpha(g, w))
                    self.assertEqual(expected, capacity.alpha_networkx(g, w))
                    self.assertLessEqual(expected, capacity.root_color_bound(
                        complexes.window_graph(g, w)))

    def test_alpha_timeout(self):
        square = products.strong_power(self.c5, 2)
        with self.assertRaises(AlphaTimeout) as e:
            capacity.alpha(square, CLASSICAL, budget=1)
        self.assertLessEqual(e.exception.lower, 5)
        self.assertGreaterEqual(e.exception.upper, 5)
        self.assertEqual(3, e.exception.status)

    def test_exhaustive_cap(self):
        with self.assertRaises(TooLarge):
            capacity.alpha_exhaustive(self.c5, CLASSICAL, cap=4)

    def test_root_bound(self):
        self.assertEqual(2, capacity.root_bound(8, 3))
        self.assertEqual(sympy.sqrt(5), capacity.root_bound(5, 2))
        self.assertEqual(1, capacity.root_bound(1, 7))

    def test_capacity_bound_pentagon(self):
        got = capacity.capacity_bound(self.c5, CLASSICAL, p_max=2)
        self.assertEqual((2, 5), got.alphas)
        self.assertEqual(2, got.best_power)
        self.assertEqual(sympy.sqrt(5), got.best_bound)
        self.assertEqual(((1, 1, True),), got.supermultiplicativity)

        record = got.to_record()
        self.assertEqual('sqrt(5)', record['bound'])
        self.assertAlmostEqual(2.2360679, record['approx'], places=6)
        self.assertEqual([2, 5], record['alphas'])
        self.assertEqual({'n': 1, 'm': 'inf'}, record['window'])
        self.assertEqual([[1, 1, True]], record['supermultiplicative'])

    def test_capacity_bound_complete_graph(self):
        got = capacity.capacity_bound(families.complete_graph(4), CLASSICAL, p_max=2)
        self.assertEqual((1, 1), got.alphas)
        self.assertEqual(1, got.best_power)
        self.assertEqual('1', got.to_record()['bound'])

    def test_capacity_bound_parallel(self):
        serial = capacity.capacity_bound(self.c5, CLASSICAL, p_max=2)
        self.assertEqual(serial, capacity.capacity_bound(self.c5, CLASSICAL, p_max=2, jobs=2))

    def test_capacity_bound_size_overflow(self):
        with self.assertRaises(SizeOverflow):
            capacity.capacity_bound(self.c5, CLASSICAL, p_max=3, cap=100)

    def test_inequalities(self):
        checks = capacity.verify_capacity_inequalities(families.cycle(5), p_max=2)
        self.assertEqual(24, len(checks))
        for check in checks:
            with self.subTest(claim=check.claim, p=check.p, window=str(check.window)):
                self.assertEqual(2, len(check.values))
                if check.asserted:
                    self.assertTrue(check.holds)

        self.assertEqual(
            {'α(und(G)^p) <= α(und(G^p))', 'α(und(G^p)) <= α(G^p)',
             'α(G^p) <= α(und(G^p))', 'α(und(G^p)) <= α(und(G)^p)',
             'α(G^p) <= α(und(G)^p)'},
            {c.claim for c in checks})
        self.assertEqual(8, sum(1 for c in checks if not c.asserted))

    def test_inequalities_with_morphism(self):
        checks = capacity.verify_capacity_inequalities(
            families.line(6), p_max=1, n_values=(), m_values=(),
            morphism=families.line_to_cycle(6),
            windows=(Window(1, 2), Window(1, 3), Window(1, 4), CLASSICAL))
        self.assertEqual([
            ('α(source^p) <= α(target^p)', Window(1, 2), True),
            ('α(source^p) <= α(target^p)', Window(1, 3), True),
            ('α(source^p) <= α(target^p), premise fails', Window(1, 4), None),
            ('α(source^p) <= α(target^p), premise fails', CLASSICAL, None),
        ], [(c.claim, c.window, c.holds) for c in checks])
        self.assertEqual({
            'claim': 'α(source^p) <= α(target^p), premise fails',
            'p': 1,
            'window': {'n': 1, 'm': 4},
            'values': [],
            'holds': None,
            'asserted': True,
        }, checks[2].to_record())

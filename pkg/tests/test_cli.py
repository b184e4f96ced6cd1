"""Unit tests for cli.py."""
from pathlib import Path

from click.testing import CliRunner
import ujson

from .testutil import TestCase

from cli import cli


class CliTest(TestCase):

    def setUp(self):
        super().setUp()
        self.runner = CliRunner(mix_stderr=False)

    def run_cli(self, *args, status=0, env=None):
        result = self.runner.invoke(cli, args, env=env, catch_exceptions=False)
        self.assertEqual(status, result.exit_code, result.output + result.stderr)
        return result

    def records(self, *args, status=0):
        result = self.run_cli('--format', 'records', *args, status=status)
        return [ujson.loads(line) for line in result.output.splitlines()]

    def test_dist(self):
        recs = self.records('dist', '--input', 'gen:cycle_digraph,r=4')
        self.assertEqual(16, len(recs))
        self.assertEqual({'schema': 1, 'kind': 'distance', 'u': 0, 'v': 0, 'd': 0}, recs[0])
        self.assertEqual(2, recs[2]['d'])

    def test_dist_bare_spec(self):
        recs = self.records('dist', '--input', 'cycle_digraph:r=6')
        self.assertEqual(36, len(recs))
        self.assertEqual(3, recs[3]['d'])

    def test_dist_unreachable(self):
        recs = self.records('dist', '--input', 'gen:zigzag,n=4')
        self.assertEqual('inf', recs[2]['d'])

    def test_dist_human(self):
        output = self.run_cli('dist', '--input', 'gen:cycle_digraph,r=4').output
        self.assertIn('u[0]', output)
        self.assertIn('u[3]', output)

    def test_options_from_env(self):
        result = self.run_cli('capacity', '--input', 'gen:cycle_graph,r=5',
                              env={'PINDY_FORMAT': 'records', 'PINDY_CAPACITY_PMAX': '1'})
        recs = [ujson.loads(line) for line in result.output.splitlines()]
        self.assertEqual(['power', 'capacity'], [r['kind'] for r in recs])

    def test_ind(self):
        [rec] = self.records('ind', '--input', 'gen:cycle_digraph,r=6', '--window', '2:3')
        self.assertEqual({
            'schema': 1,
            'kind': 'complex',
            'window': {'n': 2, 'm': 3},
            'dims': [6, 3],
            'dimension': 1,
            'capped': False,
            'alpha': 2,
        }, rec)

    def test_ind_list(self):
        recs = self.records('ind', '--input', 'gen:cycle_digraph,r=6', '--window', '2:3',
                            '--list')
        simplices = [r['vertices'] for r in recs if r['kind'] == 'simplex']
        self.assertEqual(9, len(simplices))
        self.assertIn([1, 4], simplices)

    def test_ind_human(self):
        output = self.run_cli('ind', '--input', 'gen:cycle_graph,r=5').output
        self.assertIn('Ind at (1/2, ∞]: dimension 1, alpha 2', output)

    def test_ind_capped(self):
        output = self.run_cli('ind', '--input', 'gen:cycle_digraph,r=6',
                              '--dim-cap', '1').output
        self.assertIn('alpha > 2, capped', output)

    def test_bad_window(self):
        result = self.run_cli('ind', '--input', 'gen:segment', '--window', '3:2', status=2)
        self.assertIn('n < m', result.stderr)

    def test_bad_generator(self):
        result = self.run_cli('dist', '--input', 'gen:nope,n=3', status=2)
        self.assertIn('Unknown family', result.stderr)

    def test_missing_file(self):
        self.run_cli('dist', '--input', 'no/such/file.txt', status=2)

    def test_edge_list_file(self):
        with self.runner.isolated_filesystem():
            Path('g.txt').write_text('digraph 3\n0 1\n1 2\n')
            recs = self.records('dist', '--input', 'g.txt')
        self.assertEqual(2, recs[2]['d'])

    def test_path_homology(self):
        [rec] = self.records('path-homology', '--input', 'gen:line_digraph,n=5',
                             '--window', '1:2', '--max-len', '2')
        self.assertEqual('path_homology', rec['kind'])
        self.assertEqual([5, 6, 6], rec['inf'])
        self.assertEqual([2, 0], rec['betti_inf'][:2])
        self.assertEqual(rec['betti_inf'][:2], rec['betti_sup'][:2])
        self.assertEqual([2], rec['truncated'])

    def test_path_homology_gf2(self):
        [rec] = self.records('path-homology', '--input', 'gen:line_digraph,n=5',
                             '--window', '1:2', '--max-len', '1', '--coeff', 'gf2')
        self.assertEqual('gf2', rec['field'])

    def test_bad_coeff(self):
        self.run_cli('path-homology', '--input', 'gen:segment', '--coeff', 'gf4', status=2)

    def test_persist(self):
        recs = self.records('persist', '--input', 'gen:cycle_digraph,r=6', '--slice', 'm',
                            '--dim-cap', '2')
        self.assertEqual(4, len(recs))
        self.assertEqual({'bar'}, {r['kind'] for r in recs})
        self.assertEqual({1}, {r['fixed'] for r in recs})
        self.assertEqual(2, sum(1 for r in recs if r['degree'] == 1))

    def test_persist_n_slice(self):
        recs = self.records('persist', '--input', 'gen:cycle_digraph,r=6', '--slice', 'n',
                            '--dim-cap', '2')
        self.assertEqual({'inf'}, {r['fixed'] for r in recs})
        self.assertEqual({'n-decreasing'}, {r['direction'] for r in recs})

    def test_rank_invariant(self):
        recs = self.records('rank-invariant', '--input', 'gen:cycle_digraph,r=6',
                            '--grid', '1:2,1:3', '--dim-cap', '2')
        self.assertEqual(6, len(recs))
        self.assertIn({'schema': 1, 'kind': 'rank', 'from': {'n': 1, 'm': 2},
                       'to': {'n': 1, 'm': 3}, 'degree': 0, 'rank': 1}, recs)

    def test_capacity(self):
        recs = self.records('capacity', '--input', 'gen:cycle_graph,r=5', '--pmax', '2')
        self.assertEqual(['power', 'power', 'capacity'], [r['kind'] for r in recs])
        self.assertEqual([2, 5], [r['alpha'] for r in recs[:2]])
        self.assertEqual('sqrt(5)', recs[2]['bound'])
        self.assertEqual(2, recs[2]['best_power'])

    def test_capacity_human(self):
        output = self.run_cli('capacity', '--input', 'gen:cycle_graph,r=5',
                              '--pmax', '2').output
        self.assertIn('Capacity at (1/2, ∞] >= sqrt(5) ≈ 2.236068, from p = 2', output)

    def test_capacity_timeout(self):
        result = self.run_cli('--format', 'records', 'capacity', '--input',
                              'gen:cycle_graph,r=5', '--budget', '1', status=3)
        [rec] = [ujson.loads(line) for line in result.output.splitlines()]
        self.assertEqual('timeout', rec['kind'])
        self.assertLessEqual(rec['lower'], 2)
        self.assertGreaterEqual(rec['upper'], 2)

    def test_capacity_size_overflow(self):
        result = self.run_cli('capacity', '--input', 'gen:cycle_graph,r=5', '--pmax', '2',
                              '--product-cap', '10', status=2)
        self.assertIn('over the cap of 10', result.stderr)

    def test_product_power(self):
        recs = self.records('product', '--input', 'gen:cycle_graph,r=5', '--power', '2',
                            '--check-metric')
        self.assertEqual({'schema': 1, 'kind': 'product', 'directed': False,
                          'vertex_count': 25, 'pairs': 100}, recs[0])
        self.assertEqual('max_metric', recs[1]['kind'])
        self.assertEqual(0, recs[1]['max_mismatches'])

    def test_product_with(self):
        output = self.run_cli('product', '--input', 'gen:segment', '--with',
                              'gen:segment').output
        self.assertTrue(output.startswith('digraph 4\n0 1\n0 2\n0 3\n'))

    def test_product_needs_one_of(self):
        self.run_cli('product', '--input', 'gen:segment', status=2)
        self.run_cli('product', '--input', 'gen:segment', '--with', 'gen:segment',
                     '--power', '2', status=2)

    def test_check_geodesic(self):
        recs = self.records('check-geodesic', '--map', 'line_to_cycle:r=6',
                            '--window', '1:3')
        self.assertEqual('geodesic', recs[0]['kind'])
        self.assertEqual(3, recs[0]['max_verified_radius_doubled'])
        self.assertFalse(recs[0]['is_embedding'])
        self.assertEqual({'schema': 1, 'kind': 'induced_map', 'window': {'n': 1, 'm': 3},
                          'injective': True}, recs[1])

    def test_check_geodesic_radius_too_small(self):
        result = self.run_cli('check-geodesic', '--map', 'line_to_cycle:r=6',
                              '--window', '1:4', status=1)
        self.assertIn('Verified doubled radius 3, not an embedding', result.output)

    def test_check_geodesic_vertex_map(self):
        recs = self.records('check-geodesic', '--input', 'gen:zigzag,n=4',
                            '--target', 'gen:segment', '--vertex-map', '0,1,0,1')
        self.assertEqual('inf', recs[0]['max_verified_radius_doubled'])

    def test_check_geodesic_not_a_morphism(self):
        self.run_cli('check-geodesic', '--input', 'gen:segment', '--target', 'gen:segment',
                     '--vertex-map', '1,0', status=1)

    def test_check_geodesic_needs_a_map(self):
        self.run_cli('check-geodesic', status=2)

    def test_check_automorphisms(self):
        [rec] = self.records('check-automorphisms', '--input', 'gen:cycle_digraph,r=5',
                             '--window', '1:inf')
        self.assertEqual(5, rec['count'])
        self.assertEqual([0, 1, 2, 3, 4], rec['permutations'][0])

    def test_check_automorphisms_too_large(self):
        self.run_cli('check-automorphisms', '--input', 'gen:cycle_graph,r=13', status=2)

    def test_check_regular(self):
        with self.runner.isolated_filesystem():
            Path('line.json').write_text(ujson.dumps({str(v): [v] for v in range(6)}))
            Path('parabola.json').write_text(
                ujson.dumps({str(v): [v, v * v] for v in range(6)}))

            result = self.run_cli('check-regular', '--input', 'gen:cycle_digraph,r=6',
                                  '-k', '3', '--coords', 'line.json', status=1)
            self.assertIn('dimension too small', result.stderr)

            self.run_cli('check-regular', '--input', 'gen:cycle_digraph,r=6',
                         '-k', '3', '--coords', 'parabola.json')

    def test_verify(self):
        recs = self.records('verify', '--suite', 'distances', '--suite', 'domination',
                            '--instances', '2', '--max-vertices', '4')
        self.assertEqual({'claim'}, {r['kind'] for r in recs})
        self.assertEqual({'distances', 'domination'}, {r['suite'] for r in recs})
        self.assertEqual({'closed-form-distances', 'distance-domination'},
                         {r['theorem'] for r in recs})
        self.assertTrue(all(r['passed'] for r in recs))

    def test_verify_theorem(self):
        recs = self.records('verify', '--theorem', 'persistent-simplicial-embedding',
                            '--input', 'gen:zigzag,n=6')
        self.assertEqual({'persistent-simplicial-embedding'}, {r['theorem'] for r in recs})
        self.assertEqual({'vertex-identity-maps'}, {r['suite'] for r in recs})
        self.assertTrue(all(r['passed'] for r in recs))

        # a suite named both ways runs once
        recs = self.records('verify', '--theorem', 'distance-domination',
                            '--suite', 'domination', '--instances', '2')
        self.assertEqual(2, len(recs))

        output = self.run_cli('verify', '--theorem', 'distance-domination',
                              '--instances', '2').output
        self.assertIn('statement', output)
        self.assertIn('distance-domination', output)

    def test_verify_unknown_theorem(self):
        self.run_cli('verify', '--theorem', '1.1', status=2)

    def test_verify_unknown_suite(self):
        self.run_cli('verify', '--suite', 'nope', status=2)

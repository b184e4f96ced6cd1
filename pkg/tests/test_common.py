"""Unit tests for common.py."""
from .testutil import TestCase

import common
from common import AlphaTimeout, BadParams, CLASSICAL, INF, Window


class CommonTest(TestCase):

    def test_window_parse(self):
        for expected, text in (
                (Window(1, INF), '1:inf'),
                (Window(2, 5), '2:5'),
                (Window(2, 3), ' 2 : 3 '),
        ):
            with self.subTest(text=text):
                self.assertEqual(expected, Window.parse(text))

    def test_window_parse_bad(self):
        for text in '', 'x', '2', '3:2', '2:2', '0:2', '-1:2', '1:-inf', None:
            with self.subTest(text=text), self.assertRaises(BadParams):
                Window.parse(text)

    def test_window_constructor_validates(self):
        for n, m in (0, 2), (3, 3), (1.5, 4), (True, 3), (1, 2.5), (1, True), (1, '2.5'):
            with self.subTest(n=n, m=m), self.assertRaises(BadParams):
                Window(n, m)

    def test_window_contains(self):
        w = Window(1, 3)
        self.assertEqual([False, False, True, True, False, False],
                         [w.contains(d) for d in (0, 1, 2, 3, 4, INF)])
        self.assertTrue(CLASSICAL.contains(INF))
        self.assertFalse(CLASSICAL.contains(1))

    def test_window_strings(self):
        self.assertEqual('1:inf', str(CLASSICAL))
        self.assertEqual('2:5', str(Window(2, 5)))
        self.assertEqual('(1/2, ∞]', CLASSICAL.label())
        self.assertEqual('(2/2, 5/2]', Window(2, 5).label())
        self.assertEqual({'n': 1, 'm': 'inf'}, CLASSICAL.to_record())

    def test_window_m_accepts_inf_string(self):
        self.assertEqual(CLASSICAL, Window(1, 'inf'))

    def test_window_order(self):
        self.assertLess(Window(1, 2), Window(1, 3))
        self.assertLess(Window(1, INF), Window(2, 3))

    def test_format_parse_distance(self):
        self.assertEqual('inf', common.format_distance(INF))
        self.assertEqual(3, common.format_distance(3))
        self.assertEqual(INF, common.parse_distance('inf'))
        self.assertEqual(4, common.parse_distance('4'))
        self.assertEqual(4, common.parse_distance(4.0))
        self.assertEqual(0, common.parse_distance(' 0 '))
        for bad in '-1', 'x', None, -2, True, False, 2.5, '2.5', '':
            with self.subTest(val=bad), self.assertRaises(BadParams):
                common.parse_distance(bad)

    def test_error(self):
        with self.assertRaises(BadParams) as e:
            common.error('foo')
        self.assertEqual('foo', str(e.exception))
        self.assertEqual(2, e.exception.status)

    def test_error_kwargs(self):
        with self.assertRaises(AlphaTimeout) as e:
            common.error('out of budget', cls=AlphaTimeout, lower=3, upper=5)
        self.assertEqual((3, 5, 3), (e.exception.lower, e.exception.upper,
                                     e.exception.status))

    def test_statuses(self):
        for expected, cls in (
                (1, common.Error),
                (2, common.BadParams),
                (2, common.TooLarge),
                (2, common.SizeOverflow),
                (1, common.NotAMorphism),
                (1, common.NotASimplicialMap),
                (1, common.NotAChainMap),
                (1, common.RadiusTooSmall),
                (1, common.FieldMismatch),
                (3, common.AlphaTimeout),
        ):
            with self.subTest(cls=cls):
                self.assertEqual(expected, cls.status)

    def test_run_jobs_keeps_order(self):
        for jobs in 1, 3:
            with self.subTest(jobs=jobs):
                self.assertEqual([0, 1, 4, 9, 16],
                                 common.run_jobs(lambda x: x * x, range(5), jobs=jobs))

    def test_run_jobs_empty(self):
        self.assertEqual([], common.run_jobs(lambda x: x, [], jobs=4))

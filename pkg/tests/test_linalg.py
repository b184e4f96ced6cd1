"""Unit tests for linalg.py."""
from fractions import Fraction
import random

from .testutil import TestCase

from common import BadParams, FieldMismatch
import linalg
from linalg import PrimeField, QQ, Reducer


class LinalgTest(TestCase):

    def test_field(self):
        self.assertIs(QQ, linalg.field('q'))
        self.assertEqual(PrimeField(2), linalg.field('gf2'))
        self.assertEqual(PrimeField(1000003), linalg.field(' GF1000003 '))
        for name in 'gf4', 'gf1', 'r', 'gf':
            with self.subTest(name=name), self.assertRaises(BadParams):
                linalg.field(name)

    def test_prime_field_arithmetic(self):
        gf5 = PrimeField(5)
        self.assertEqual('gf5', gf5.name)
        self.assertEqual(3, gf5.coerce(Fraction(1, 2)))
        self.assertEqual(4, gf5.coerce(-1))
        self.assertEqual(1, gf5.add(3, 3))
        self.assertEqual(2, gf5.inv(3))
        self.assertEqual(2, gf5.neg(3))
        with self.assertRaises(FieldMismatch):
            gf5.coerce(Fraction(1, 5))

    def test_rationals(self):
        self.assertEqual('q', QQ.name)
        self.assertEqual(Fraction(1, 3), QQ.inv(3))
        self.assertEqual(Fraction(-2, 3), QQ.neg(QQ.coerce('2/3')))

    def test_add_scaled_drops_zeros(self):
        target = {0: Fraction(1), 1: Fraction(2)}
        linalg.add_scaled(QQ, target, {0: Fraction(1), 2: Fraction(1)}, Fraction(-1))
        self.assertEqual({1: 2, 2: -1}, target)

    def test_matrix_rank_depends_on_field(self):
        columns = linalg.from_rows([[1, 1], [1, -1]])
        self.assertEqual(2, linalg.matrix_rank(columns))
        gf2 = PrimeField(2)
        self.assertEqual(1, linalg.matrix_rank(linalg.from_rows([[1, 1], [1, -1]], gf2), gf2))

    def test_matrix_rank_empty(self):
        self.assertEqual(0, linalg.matrix_rank([]))
        self.assertEqual(0, linalg.matrix_rank([{}, {}]))

    def test_cross_checked_rank_random(self):
        for i in range(30):
            rows = [[Fraction(random.randint(-5, 5), random.randint(1, 4)) for _ in range(6)]
                    for _ in range(6)]
            if i % 2:
                # force a dependent row
                rows[5] = [a + 2 * b for a, b in zip(rows[0], rows[1])]
            with self.subTest(rows=rows):
                columns = linalg.from_rows(rows)
                check = linalg.cross_checked_rank(columns)
                self.assertEqual(1000003, check.prime)
                self.assertTrue(check.agreed)
                self.assertTrue(check.confirmed)
                self.assertIsNone(check.recomputed_rank)
                self.assertEqual(linalg._sympy_rank(columns), check.rank)
                if i % 2:
                    self.assertLessEqual(check.rank, 5)

    def test_cross_checked_rank_disagreement(self):
        # determinant -5
        check = linalg.cross_checked_rank(linalg.from_rows([[1, 2], [3, 1]]), prime=5)
        self.assertEqual(linalg.RankCheck(rank=2, prime=5, modular_rank=1,
                                          recomputed_rank=2), check)
        self.assertFalse(check.agreed)
        self.assertTrue(check.confirmed)

    def test_cross_checked_rank_denominator(self):
        check = linalg.cross_checked_rank(linalg.from_rows([[Fraction(1, 5)]]), prime=5)
        self.assertEqual(1, check.rank)
        self.assertIsNone(check.modular_rank)
        self.assertEqual(1, check.recomputed_rank)
        self.assertTrue(check.confirmed)

    def test_cross_checked_rank_empty(self):
        self.assertEqual(linalg.RankCheck(rank=0, prime=1000003, modular_rank=0),
                         linalg.cross_checked_rank([]))

    def test_kernel_basis(self):
        self.assertEqual([{1: 1, 0: -2}],
                         linalg.kernel_basis([{0: 1}, {0: 2}, {1: 1}]))
        self.assertEqual([{0: 1}], linalg.kernel_basis([{}]))

    def test_kernel_relations_vanish(self):
        columns = linalg.from_rows([[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]])
        relations = linalg.kernel_basis(columns)
        self.assertEqual(2, len(relations))
        for rel in relations:
            self.assertEqual({}, linalg.combine(QQ, columns, rel))

    def test_image_basis(self):
        self.assertEqual([0, 2], linalg.image_basis([{0: 1}, {0: 3}, {1: 1}, {0: 1, 1: 1}]))

    def test_reducer_coordinates(self):
        reducer = Reducer(QQ)
        self.assertIsNone(reducer.add({0: 1, 1: 1}, id='a'))
        self.assertIsNone(reducer.add({1: 1}, id='b'))
        self.assertEqual(2, len(reducer))
        self.assertEqual({'a': 2, 'b': 1}, reducer.coordinates({0: 2, 1: 3}))
        self.assertIsNone(reducer.coordinates({2: 1}))
        self.assertTrue(reducer.contains({0: 5}))
        self.assertFalse(reducer.contains({2: 1}))

    def test_combine(self):
        self.assertEqual({0: 1, 1: 3},
                         linalg.combine(QQ, [{0: 1}, {1: 1}], {0: 1, 1: 3}))

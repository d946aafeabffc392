import unittest
from itertools import product
from math import factorial

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from symcone.combinat import Multipartition, Partition, ShapeMismatch, partitions_of
from symcone.symgroup import (CapExceeded, ClassList, centralizer_order, character, class_size, cycle_type,
                              hurwitz_count, perm_table, sector_centralizer_order)


class TestClasses(unittest.TestCase):
    def test_centralizer_order(self):
        self.assertEqual(centralizer_order(4, Partition([2, 1, 1])), 4)
        self.assertEqual(centralizer_order(3, Partition([3])), 3)
        self.assertEqual(centralizer_order(5, Partition([1] * 5)), 120)
        with self.assertRaises(ShapeMismatch):
            centralizer_order(4, Partition([3]))

    def test_class_size(self):
        self.assertEqual(class_size(3, Partition([3])), 2)
        self.assertEqual(class_size(4, Partition([1] * 4)), 1)
        self.assertEqual(class_size(4, Partition([2, 1, 1])), 6)

    def test_class_sizes_sum_to_group_order(self):
        for d in range(1, 8):
            self.assertEqual(sum(class_size(d, sigma) for sigma in partitions_of(d)), factorial(d))

    def test_sector_centralizer_order(self):
        self.assertEqual(sector_centralizer_order((2, 0), Multipartition([[2], []])), 2)
        self.assertEqual(sector_centralizer_order((1, 1), Multipartition([[1], [1]])), 1)
        self.assertEqual(sector_centralizer_order((2, 2), Multipartition([[1, 1], [2]])), 4)

    def test_cycle_type(self):
        self.assertEqual(cycle_type((1, 2, 0, 3)), Partition([3, 1]))
        self.assertEqual(cycle_type(()), Partition())


class TestPermTable(unittest.TestCase):
    def test_ranks_are_row_indices(self):
        table = perm_table(4)
        np.testing.assert_array_equal(table.rank(table.elements), np.arange(24))

    def test_members_match_class_sizes(self):
        table = perm_table(5)
        for sigma in partitions_of(5):
            self.assertEqual(len(table.members(sigma)), class_size(5, sigma))

    def test_compose_right_to_left(self):
        table = perm_table(3)
        a, b = 1, 3
        products = table.compose(np.array([a]), np.array([b]))
        expected = table.elements[a][table.elements[b]]
        np.testing.assert_array_equal(table.elements[products[0, 0]], expected)


class TestHurwitzCount(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(hurwitz_count(ClassList(2, [[2], [2]])), 1)
        self.assertEqual(hurwitz_count(ClassList(4, [[1, 1, 1, 1]])), 1)
        self.assertEqual(hurwitz_count(ClassList(3, [[3], [3]])), 2)
        self.assertEqual(hurwitz_count(ClassList(3, [[3], [2, 1]])), 0)

    def test_three_transpositions_in_s3(self):
        # Products of two transpositions are 3-cycles or the identity.
        self.assertEqual(hurwitz_count(ClassList(3, [[2, 1], [2, 1], [3]])), 6)

    def test_cap(self):
        with self.assertRaises(CapExceeded):
            hurwitz_count(ClassList(7, [[7]]))
        with self.assertRaises(CapExceeded):
            hurwitz_count(ClassList(4, [[4]]), cap=3)

    def test_unknown_backend(self):
        with self.assertRaises(ValueError):
            hurwitz_count(ClassList(2, [[2]]), backend="tables")

    def test_bad_class_list(self):
        with self.assertRaises(ShapeMismatch):
            ClassList(3, [])
        with self.assertRaises(ShapeMismatch):
            ClassList(3, [[2]])

    def test_character_backend_beyond_cap(self):
        self.assertEqual(hurwitz_count(ClassList(7, [[7]]), backend="character"), 0)
        self.assertEqual(hurwitz_count(ClassList(7, [[1] * 7]), backend="character"), 1)
        self.assertEqual(hurwitz_count(ClassList(7, [[7], [7]]), backend="character"), class_size(7, Partition([7])))

    def test_characters(self):
        self.assertEqual(character([3], [2, 1]), 1)
        self.assertEqual(character([1, 1, 1], [2, 1]), -1)
        self.assertEqual(character([2, 1], [1, 1, 1]), 2)
        self.assertEqual(character([2, 1], [3]), -1)

    @given(st.integers(min_value=1, max_value=4), st.data())
    @settings(max_examples=40, deadline=None)
    def test_backends_agree(self, d, data):
        classes = partitions_of(d)
        length = data.draw(st.integers(min_value=1, max_value=3))
        chosen = [data.draw(st.sampled_from(classes)) for _ in range(length)]
        class_list = ClassList(d, chosen)
        self.assertEqual(hurwitz_count(class_list), hurwitz_count(class_list, backend="character"))

    def test_rotation_and_reversal_invariance(self):
        for d in range(1, 5):
            for chosen in product(partitions_of(d), repeat=3):
                chosen = list(chosen)
                count = hurwitz_count(ClassList(d, chosen))
                self.assertEqual(count, hurwitz_count(ClassList(d, chosen[1:] + chosen[:1])))
                self.assertEqual(count, hurwitz_count(ClassList(d, chosen[::-1])))

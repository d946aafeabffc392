import unittest
from fractions import Fraction

from symcone.combinat import Partition, ShapeMismatch
from symcone.exactalg import LinearForm, exact_ring
from symcone.sectors import (FACTORS, PRINTED, BadExponent, EdgeClass, FixedSector, centralizer_ratio, edge_factor_polys,
                             edge_factor_W, edge_weight, enumerate_edges, enumerate_sectors, rc_prefactor,
                             recursion_coefficient, sector_euler_class)


class TestFixedSector(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(len(enumerate_sectors(1, 1)), 2)
        self.assertEqual(len(enumerate_sectors(2, 0)), 2)
        self.assertEqual(len(enumerate_sectors(2, 1)), 5)

    def test_sectors_are_distinct(self):
        sectors = enumerate_sectors(3, 2)
        self.assertEqual(len(set(sectors)), len(sectors))
        self.assertTrue(all(s.d == 3 and s.r == 2 for s in sectors))

    def test_shape_checks(self):
        with self.assertRaises(ShapeMismatch):
            FixedSector((1, 0), [[2], []])
        with self.assertRaises(ShapeMismatch):
            FixedSector((1, 0), [[1]])

    def test_from_sigma(self):
        s = FixedSector.from_sigma([[2], []])
        self.assertEqual(tuple(s.mu), (2, 0))
        self.assertEqual(s.r_sigma, 2)
        self.assertFalse(s.is_ones())
        self.assertEqual(FixedSector.from_json({"sigma": [[2], []]}), s)
        self.assertEqual(FixedSector.from_json(s.to_json()), s)

    def test_euler_class(self):
        ctx = exact_ring(1)
        a0, a1 = ctx.alpha(0), ctx.alpha(1)
        self.assertEqual(sector_euler_class(FixedSector((1, 0), [[1], []])), a0 - a1)
        self.assertEqual(sector_euler_class(FixedSector((1, 1), [[1], [1]])), (a0 - a1) * (a1 - a0))
        self.assertEqual(sector_euler_class(FixedSector((2,), [[2]])), exact_ring(0).one())


class TestEdges(unittest.TestCase):
    def test_d1_edges(self):
        edges = enumerate_edges(FixedSector((1, 0), [[1], []]), 3)
        self.assertEqual(len(edges), 3)
        self.assertEqual(sorted(kappa.q for kappa in edges), [1, 2, 3])
        self.assertTrue(all(kappa.i1 == 0 and kappa.i2 == 1 for kappa in edges))

    def test_no_edges_on_a_point(self):
        self.assertEqual(enumerate_edges(FixedSector((2,), [[1, 1]]), 3), [])

    def test_fractional_degree(self):
        edges = enumerate_edges(FixedSector((2, 0), [[2], []]), 1)
        self.assertEqual(len(edges), 1)
        kappa = edges[0]
        self.assertEqual((kappa.i2, kappa.mov, kappa.q), (1, Partition([2]), Fraction(1, 2)))
        self.assertEqual(kappa.beta, 1)

    def test_degrees_respect_cap(self):
        for s in enumerate_sectors(3, 1):
            for kappa in enumerate_edges(s, 2):
                self.assertLessEqual(kappa.beta, 2)
                self.assertTrue(all(isinstance(b, int) and b > 0 for b in kappa.beta_parts))

    def test_target_and_reverse(self):
        kappa = EdgeClass(FixedSector((2, 0), [[1, 1], []]), 0, 1, [1], 1)
        self.assertEqual(kappa.target, FixedSector((1, 1), [[1], [1]]))
        back = kappa.reverse()
        self.assertEqual(back.base, kappa.target)
        self.assertEqual(back.target, kappa.base)
        self.assertEqual((back.i1, back.i2), (1, 0))

    def test_invalid_edges(self):
        s = FixedSector((1, 0), [[1], []])
        with self.assertRaises(ShapeMismatch):
            EdgeClass(s, 0, 0, [1], 1)
        with self.assertRaises(ShapeMismatch):
            EdgeClass(s, 1, 0, [1], 1)
        with self.assertRaises(ShapeMismatch):
            EdgeClass(s, 0, 1, [1], Fraction(1, 2))


class TestEdgeWeights(unittest.TestCase):
    def test_untwisted_weight(self):
        kappa = EdgeClass(FixedSector((1, 0), [[1], []]), 0, 1, [1], 2)
        w, wbar = edge_weight(kappa)
        self.assertEqual(w, LinearForm([Fraction(1, 2), Fraction(-1, 2)]))
        self.assertEqual(wbar, w)

    def test_twisted_weight(self):
        kappa = EdgeClass(FixedSector((2, 0), [[2], []]), 0, 1, [2], Fraction(1, 2))
        _, wbar = edge_weight(kappa)
        self.assertEqual(wbar, LinearForm([4, -4]))

    def test_unit_degree(self):
        kappa = EdgeClass(FixedSector((1, 0, 0), [[1], [], []]), 0, 2, [1], 1)
        _, wbar = edge_weight(kappa)
        self.assertEqual(wbar, LinearForm.difference(2, 0, 2))


class TestRecursionCoefficient(unittest.TestCase):
    def setUp(self):
        self.ctx = exact_ring(1)
        self.a0 = self.ctx.alpha(0)
        self.a1 = self.ctx.alpha(1)
        self.s = FixedSector((1, 0), [[1], []])

    def test_degree_one(self):
        kappa = EdgeClass(self.s, 0, 1, [1], 1)
        self.assertEqual(edge_factor_W(kappa), self.a1 - self.a0)
        self.assertEqual(recursion_coefficient(kappa, 1), 1 / (self.a1 - self.a0))

    def test_degree_two_by_expansion(self):
        kappa = EdgeClass(self.s, 0, 1, [1], 2)
        half = Fraction(1, 2)
        # B=1 gives (a0+a1)/2 - a_i for i=0,1; B=2 gives a1 - a0 only.
        expected_w = ((self.a0 + self.a1) * half - self.a0) * ((self.a0 + self.a1) * half - self.a1) * (self.a1 - self.a0)
        self.assertEqual(len(edge_factor_polys(kappa)), 3)
        self.assertEqual(edge_factor_W(kappa), expected_w)
        self.assertEqual(recursion_coefficient(kappa, 1), half / expected_w)

    def test_top_order_has_no_sign(self):
        kappa = EdgeClass(FixedSector((2, 0), [[1, 1], []]), 0, 1, [1, 1], 1)
        self.assertEqual(rc_prefactor(kappa, 2), 1)
        self.assertEqual(rc_prefactor(kappa, 1), -1)

    def test_bad_exponent(self):
        kappa = EdgeClass(self.s, 0, 1, [1], 1)
        for a in (0, 2):
            with self.assertRaises(BadExponent):
                recursion_coefficient(kappa, a)

    def test_w_times_rc_is_prefactor(self):
        for s in enumerate_sectors(2, 1):
            for kappa in enumerate_edges(s, 2):
                for a in range(1, kappa.mov_count + 1):
                    product = edge_factor_W(kappa) * recursion_coefficient(kappa, a)
                    self.assertEqual(product, s.ring().const(rc_prefactor(kappa, a)))

    def test_factor_normalization(self):
        twisted = 0
        for s in enumerate_sectors(2, 1):
            for kappa in enumerate_edges(s, 2):
                scale = Fraction(kappa.r_sigma) ** len(edge_factor_polys(kappa))
                twisted += kappa.r_sigma > 1
                self.assertEqual(edge_factor_W(kappa, FACTORS), edge_factor_W(kappa, PRINTED) * scale)
                for a in range(1, kappa.mov_count + 1):
                    self.assertEqual(recursion_coefficient(kappa, a, FACTORS) * scale,
                                     recursion_coefficient(kappa, a, PRINTED))
        self.assertGreater(twisted, 0)

    def test_unknown_normalization(self):
        kappa = EdgeClass(self.s, 0, 1, [1], 1)
        with self.assertRaises(ValueError):
            edge_factor_polys(kappa, "rescaled")
        with self.assertRaises(ValueError):
            recursion_coefficient(kappa, 1, "rescaled")


class TestCentralizerRatio(unittest.TestCase):
    def test_example(self):
        kappa = EdgeClass(FixedSector((2, 0), [[1, 1], []]), 0, 1, [1], 1)
        self.assertEqual(centralizer_ratio(kappa), (2, 2))

    def test_all_small_edges(self):
        for d in range(1, 5):
            for s in enumerate_sectors(d, 1):
                for kappa in enumerate_edges(s, 2):
                    lhs, rhs = centralizer_ratio(kappa)
                    self.assertEqual(lhs, rhs)

import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st
from mrg32k3a.mrg32k3a import MRG32k3a

from symcone.exactalg import (DivByZero, LinearForm, NonLinearPole, SpecializationFailed, exact_ring, laurent_at,
                              pole_support, random_point, random_specialize)

small = st.integers(min_value=-5, max_value=5)


class TestRationalFunction(unittest.TestCase):
    def setUp(self):
        self.ctx = exact_ring(1)
        self.a0 = self.ctx.alpha(0)
        self.a1 = self.ctx.alpha(1)
        self.z = self.ctx.zvar()

    def test_cancellation(self):
        self.assertTrue(((self.a0 - self.a1) + (self.a1 - self.a0)).is_zero)
        self.assertEqual((self.a0 ** 2 - self.a1 ** 2) / (self.a0 - self.a1), self.a0 + self.a1)

    def test_evaluate(self):
        self.assertEqual((self.a0 - self.a1).evaluate([0, 1]), -1)
        self.assertEqual((self.z / (self.a0 - self.a1)).evaluate([2, 1, 5]), 5)
        with self.assertRaises(DivByZero):
            (self.a0 - self.a1).inverse().evaluate([1, 1])

    def test_division_by_zero(self):
        with self.assertRaises(DivByZero):
            self.a0 / self.ctx.zero()

    def test_constants(self):
        half = self.ctx.const(Fraction(1, 2))
        self.assertTrue(half.is_constant())
        self.assertEqual(half.constant_value(), Fraction(1, 2))
        self.assertFalse(self.a0.is_constant())
        self.assertTrue(self.z.depends_on_z())
        self.assertFalse((self.a0 / self.a1).depends_on_z())

    def test_normal_form_is_canonical(self):
        left = 1 / ((self.a0 - self.a1) * (self.a0 - self.z))
        right = (1 / (self.a0 - self.a1)) * (1 / (self.a0 - self.z))
        self.assertEqual(left, right)
        self.assertEqual(hash(left), hash(right))

    @given(small, small, small, small, st.integers(min_value=1, max_value=3))
    @settings(max_examples=40, deadline=None)
    def test_arithmetic_commutes_with_evaluation(self, c0, c1, c2, c3, k):
        f = self.a0 * c0 + self.a1 * c1 + self.z * c2 + c3
        g = 1 / (self.a0 - self.a1 - self.z * k)
        point = [3, 7, 11]
        self.assertEqual((f * g).evaluate(point), f.evaluate(point) * g.evaluate(point))
        self.assertEqual((f + g).evaluate(point), f.evaluate(point) + g.evaluate(point))
        self.assertEqual((f - g).evaluate(point), f.evaluate(point) - g.evaluate(point))


class TestLaurent(unittest.TestCase):
    def setUp(self):
        self.ctx = exact_ring(1)
        self.w = LinearForm.difference(1, 0, 1)
        self.wpoly = self.ctx.linear(self.w)
        self.z = self.ctx.zvar()

    def test_simple_pole(self):
        f = 1 / (self.wpoly - self.z)
        self.assertEqual(laurent_at(f, self.w, -1), self.ctx.one())
        self.assertTrue(laurent_at(f, self.w, -2).is_zero)
        self.assertTrue(laurent_at(f, self.w, 0).is_zero)

    def test_double_pole_times_z(self):
        f = 1 / ((self.wpoly - self.z) ** 2 * self.z)
        self.assertEqual(laurent_at(f, self.w, -2), 1 / self.wpoly)
        self.assertEqual(laurent_at(f, self.w, -1), 1 / self.wpoly ** 2)

    def test_polynomial(self):
        self.assertEqual(laurent_at(self.z, self.w, 0), self.wpoly)
        self.assertEqual(laurent_at(self.z, self.w, 1), self.ctx.const(-1))
        self.assertTrue(laurent_at(self.z, self.w, 2).is_zero)

    def test_zero(self):
        self.assertTrue(laurent_at(self.ctx.zero(), self.w, -3).is_zero)

    def test_resubstitution(self):
        f = (self.z + 2) / ((self.wpoly - self.z) ** 2 * (self.ctx.alpha(1) - self.z))
        u = self.ctx.const(Fraction(1, 3))
        point = [5, 2]
        # Principal part plus the regular remainder must reproduce f near w.
        principal = laurent_at(f, self.w, -2) * u ** -2 + laurent_at(f, self.w, -1) * u ** -1
        remainder = f.evaluate(point + [3 - Fraction(1, 3)]) - principal.evaluate(point)
        regular = sum((laurent_at(f, self.w, k).evaluate(point) * Fraction(1, 3) ** k for k in range(0, 15)), Fraction(0))
        self.assertLess(abs(remainder - regular), Fraction(1, 10 ** 4))


class TestPoleSupport(unittest.TestCase):
    def setUp(self):
        self.ctx = exact_ring(1)
        self.a0 = self.ctx.alpha(0)
        self.a1 = self.ctx.alpha(1)
        self.z = self.ctx.zvar()

    def test_read_off_factors(self):
        support = pole_support(1 / (self.z * (self.a0 - self.a1 - self.z)))
        self.assertEqual(support.zero_order, 1)
        self.assertEqual(support.poles, [(LinearForm([1, -1]), 1)])
        self.assertEqual(support.infinity_degree, -2)

    def test_no_poles(self):
        support = pole_support(self.a0)
        self.assertEqual(support.poles, [])
        self.assertEqual(support.zero_order, 0)

    def test_double_pole(self):
        support = pole_support(1 / (self.a0 - self.a1 - self.z) ** 2)
        self.assertEqual(support.order_at(LinearForm([1, -1])), 2)

    def test_scaled_location(self):
        support = pole_support(1 / (self.a0 - self.a1 - self.z * 2))
        self.assertEqual(support.locations(), [LinearForm([Fraction(1, 2), Fraction(-1, 2)])])

    def test_nonlinear(self):
        with self.assertRaises(NonLinearPole):
            pole_support(1 / (self.z ** 2 + self.a0 ** 2))
        with self.assertRaises(NonLinearPole):
            pole_support(1 / (self.a0 * self.z - 1))


class TestLinearForm(unittest.TestCase):
    def test_direction(self):
        canonical, scale = LinearForm([2, -4]).direction()
        self.assertEqual(canonical, LinearForm([1, -2]))
        self.assertEqual(scale, 2)
        canonical, scale = LinearForm([Fraction(-1, 2), Fraction(1, 2)]).direction()
        self.assertEqual(canonical, LinearForm([1, -1]))
        self.assertEqual(scale, Fraction(-1, 2))

    def test_str(self):
        self.assertEqual(str(LinearForm([1, -1])), "a0 - a1")
        self.assertEqual(str(LinearForm([0, 0])), "0")


class TestSpecialization(unittest.TestCase):
    def setUp(self):
        self.ctx = exact_ring(1)
        self.a0 = self.ctx.alpha(0)
        self.a1 = self.ctx.alpha(1)
        self.rng = MRG32k3a(s_ss_sss_index=[0, 0, 0])

    def test_first_point(self):
        value, point = random_specialize(self.a0 - self.a1, self.rng, first_point=[0, 1])
        self.assertEqual(value, -1)
        self.assertEqual(point[:2], [0, 1])

    def test_retry_after_coincident_alphas(self):
        f = 1 / (self.a0 - self.a1)
        value, point = random_specialize(f, self.rng, first_point=[1, 1])
        self.assertNotEqual(point[0], point[1])
        self.assertEqual(value, 1 / (point[0] - point[1]))

    def test_failure(self):
        with self.assertRaises(SpecializationFailed):
            random_specialize(1 / (self.a0 - self.a1), self.rng, max_tries=1, first_point=[1, 1])

    def test_points_are_distinct_and_deterministic(self):
        first = random_point(MRG32k3a(s_ss_sss_index=[3, 0, 0]), 5)
        second = random_point(MRG32k3a(s_ss_sss_index=[3, 0, 0]), 5)
        self.assertEqual(first, second)
        self.assertEqual(len(set(first)), 5)

# SPDX-License-Identifier: GPL-3.0-or-later
# vim: et:ts=4
import dataclasses
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from toeplitz_involution import SpecMismatch
from toeplitz_involution.involution import (apply_phi, apply_phi_twice, phi_homomorphism,
                                            phi_squared, verify_involution)
from toeplitz_involution.poly import Polynomial, change_ring, poly_parse
from toeplitz_involution.ring import ZZ, RingSpec
from toeplitz_involution.toeplitz import minor_table
from tests.strategies import Z2, Z6, Z8, polynomials, term_lists


def P(text, n, ring=ZZ):
    return poly_parse(ring, n, text)


class TestPhi(unittest.TestCase):

    def test_images(self):
        self.assertEqual(phi_homomorphism(ZZ, 2).images, (P("x1", 2), P("x1^2 - x2", 2)))
        self.assertEqual(phi_homomorphism(ZZ, 0).images, ())
        self.assertEqual(phi_homomorphism(ZZ, 3).image(3), P("x1^3 - 2*x1*x2 + x3", 3))

    def test_apply(self):
        self.assertEqual(apply_phi(P("x1", 2), ZZ, 2), P("x1", 2))
        self.assertEqual(apply_phi(P("-4", 3, Z6), Z6, 3), P("2", 3, Z6))
        self.assertEqual(apply_phi(P("x2", 2), ZZ, 2), P("x1^2 - x2", 2))

    def test_apply_twice(self):
        self.assertEqual(apply_phi_twice(P("x1", 2), ZZ, 2), P("x1", 2))
        self.assertEqual(apply_phi_twice(P("x2", 2), ZZ, 2), P("x2", 2))
        p = P("3*x1^2*x5 - x2*x3 + 7*x4 + 1", 5, Z8)
        self.assertEqual(apply_phi_twice(p, Z8, 5), P("1 + 7*x4 - x2*x3 + 3*x1^2*x5", 5, Z8))

    def test_mismatch(self):
        with self.assertRaises(SpecMismatch):
            apply_phi(P("x1", 3), ZZ, 4)
        with self.assertRaises(SpecMismatch):
            apply_phi_twice(P("x1", 3), Z6, 3)
        with self.assertRaises(SpecMismatch):
            phi_homomorphism(ZZ, 3, minor_table(ZZ, 4))

    def test_phi_squared_is_identity(self):
        for ring in (ZZ, Z2, Z6):
            for n in range(0, 7):
                self.assertTrue(phi_squared(ring, n).is_identity(), (ring, n))


class TestVerify(unittest.TestCase):

    def test_generators(self):
        for ring in (ZZ, Z2, Z6):
            for n in range(1, 11):
                report = verify_involution(ring, n)
                self.assertTrue(report.overall, (ring, n))
                self.assertEqual(len(report.per_generator), n)
                self.assertEqual(report.failures(), [])

    def test_report_contents(self):
        report = verify_involution(ZZ, 2)
        first, second = report.per_generator
        self.assertEqual((first.k, first.passed), (1, True))
        self.assertEqual(second.image, P("x1^2 - x2", 2))
        self.assertEqual(second.double_image, P("x2", 2))
        obj = report.to_json()
        self.assertEqual(obj["ring"], "z")
        self.assertTrue(obj["overall"])
        self.assertEqual([g["k"] for g in obj["generators"]], [1, 2])
        self.assertEqual(obj["generators"][1]["double_image"]["terms"], [{"coeff": "1", "exps": [0, 1]}])

    def test_no_generators(self):
        report = verify_involution(ZZ, 0)
        self.assertTrue(report.overall)
        self.assertEqual(report.per_generator, ())

    def test_report_is_immutable(self):
        report = verify_involution(Z6, 3)
        self.assertIsInstance(report.per_generator, tuple)
        with self.assertRaises(dataclasses.FrozenInstanceError):
            report.n = 4
        with self.assertRaises(dataclasses.FrozenInstanceError):
            report.per_generator[0].passed = False
        self.assertEqual(report, verify_involution(Z6, 3))

    def test_corrupted_table(self):
        table = minor_table(ZZ, 4).replace(2, P("x2", 4))
        report = verify_involution(ZZ, 4, table)
        self.assertFalse(report.overall)
        self.assertIn(3, report.failures())
        self.assertNotIn(1, report.failures())
        self.assertNotIn(2, report.failures())
        check = report.per_generator[2]
        self.assertEqual(check.double_image, P("2*x1^3 - 4*x1*x2 + x3", 4))


class TestInvolutionProperties(unittest.TestCase):

    def check_twice_is_identity(self, ring, terms):
        p = Polynomial.from_terms(ring, 5, terms)
        copy = Polynomial.from_terms(ring, 5, list(reversed(terms)))
        self.assertEqual(apply_phi_twice(p, ring, 5), copy)

    @settings(max_examples=100)
    @given(term_lists(5, max_degree=3, max_terms=5))
    def test_random_polynomials_integers(self, terms):
        self.check_twice_is_identity(ZZ, terms)

    @settings(max_examples=100)
    @given(term_lists(5, max_degree=3, max_terms=5))
    def test_random_polynomials_mod8(self, terms):
        self.check_twice_is_identity(Z8, terms)

    @settings(max_examples=100)
    @given(st.data())
    def test_homomorphism_laws(self, data):
        ring = data.draw(st.sampled_from((ZZ, Z2, Z6, Z8)))
        p = data.draw(polynomials(ring, 4, max_degree=2, max_terms=4))
        q = data.draw(polynomials(ring, 4, max_degree=2, max_terms=4))
        self.assertEqual(apply_phi(p + q, ring, 4), apply_phi(p, ring, 4) + apply_phi(q, ring, 4))
        self.assertEqual(apply_phi(p * q, ring, 4), apply_phi(p, ring, 4) * apply_phi(q, ring, 4))

    @settings(max_examples=100)
    @given(st.integers(-50, 50), st.integers(1, 4))
    def test_fixed_points(self, c, n):
        constant = Polynomial.constant(ZZ, n, c)
        self.assertEqual(apply_phi(constant, ZZ, n), constant)
        x1 = Polynomial.generator(ZZ, n, 1)
        self.assertEqual(apply_phi(x1, ZZ, n), x1)

    @settings(max_examples=100)
    @given(st.sampled_from((2, 6, 8, 9)), polynomials(ZZ, 4, max_degree=3, max_terms=5,
                                                      coeffs=st.integers(-1000, 1000)))
    def test_commutes_with_reduction(self, modulus, p):
        quotient = RingSpec.integers_mod(modulus)
        self.assertEqual(change_ring(apply_phi(p, ZZ, 4), quotient),
                         apply_phi(change_ring(p, quotient), quotient, 4))


if __name__ == '__main__':
    unittest.main()

from fractions import Fraction
from itertools import combinations

from django.test import SimpleTestCase, tag

from sieves.errors import ContractError, DomainError
from sieves.util.delta import (DeltaArg, collapse_check, delta, empirical_delta_density, pair_collapse_arg,
                               pair_collapse_check, sieve_factor)
from tests.oracle import divides_above_square

SMALL_PRIMES = (2, 3, 5, 7, 11, 13)


def prime_sets():
    '''(small primes, pivot) for every pair and triple of SMALL_PRIMES.'''
    for size in (2, 3):
        for combo in combinations(SMALL_PRIMES, size):
            yield list(combo[:-1]), combo[-1]


class DeltaTest(SimpleTestCase):

    def test_quotient_zero_is_in_domain(self):
        self.assertEqual(delta(DeltaArg(4, 2, 2)), 1)

    def test_negative_quotient(self):
        self.assertEqual(delta(DeltaArg(2, 2, 2)), 0)

    def test_non_integer_quotient(self):
        self.assertEqual(delta(DeltaArg(3, 2, 2)), 0)

    def test_zero_divisor(self):
        with self.assertRaises(DomainError):
            delta(DeltaArg(4, 0, 2))

    def test_large_arguments_stay_exact(self):
        big = 10 ** 30 + 7
        self.assertEqual(delta(DeltaArg(big * 3, 3, big)), 1)
        self.assertEqual(delta(DeltaArg(big * 3 + 3, 3, big + 2)), 0)


class SieveFactorTest(SimpleTestCase):

    def test_known_values(self):
        self.assertEqual(sieve_factor(12, 2), 0)
        self.assertEqual(sieve_factor(6, 3), 1)
        self.assertEqual(sieve_factor(9, 3), 0)

    def test_quadratic_boundary(self):
        for p in SMALL_PRIMES:
            for n in range(2, 400):
                self.assertEqual(sieve_factor(n, p), 0 if divides_above_square(n, p) else 1, (n, p))


class CollapseCheckTest(SimpleTestCase):

    def test_known_values(self):
        self.assertEqual(collapse_check(12, {2}, 3), (1, 1))
        self.assertEqual(collapse_check(6, {2}, 3), (0, 0))
        self.assertEqual(collapse_check(30, {2, 3}, 5), (1, 1))

    def test_pivot_must_be_largest(self):
        with self.assertRaises(ContractError):
            collapse_check(30, {5}, 3)
        with self.assertRaises(ContractError):
            collapse_check(30, {3}, 3)

    def test_duplicates_rejected(self):
        with self.assertRaises(ContractError):
            collapse_check(30, [2, 2], 3)

    def test_identity_small_range(self):
        for small, pivot in prime_sets():
            for n in range(2, 3000):
                lhs, rhs = collapse_check(n, small, pivot)
                self.assertEqual(lhs, rhs, (n, small, pivot))

    @tag('slow')
    def test_identity_exhaustive(self):
        for small, pivot in prime_sets():
            for n in range(2, 10 ** 5 + 1):
                lhs, rhs = collapse_check(n, small, pivot)
                if lhs != rhs:
                    self.fail("collapse fails at n=%d for %r, %d" % (n, small, pivot))

    def test_is_pure(self):
        self.assertEqual(collapse_check(210, [2, 3, 5], 7), collapse_check(210, [2, 3, 5], 7))


class PairCollapseTest(SimpleTestCase):

    def test_shift_solves_both_congruences(self):
        arg = pair_collapse_arg([3, 5], [7], gap=2)
        self.assertEqual(arg.divisor, 105)
        self.assertEqual(arg.numerator % 15, 0)
        self.assertEqual((arg.numerator - 2) % 7, 0)

    def test_identity(self):
        cases = [([3], [5], 2), ([5], [3], 2), ([2, 3], [5, 7], 2), ([3], [], 4), ([], [5], 6),
                 ([7], [3, 5], 4), ([5, 11], [13], 6)]
        for lower, upper, gap in cases:
            for n in range(3, 5000):
                lhs, rhs = pair_collapse_check(n, lower, upper, gap)
                self.assertEqual(lhs, rhs, (n, lower, upper, gap))

    def test_twin_value(self):
        # 3 | 33 and 5 | 35, both above their squares
        self.assertEqual(pair_collapse_check(33, [3], [5]), (1, 1))
        self.assertEqual(pair_collapse_check(3, [3], [5]), (0, 0))

    def test_contract(self):
        with self.assertRaises(ContractError):
            pair_collapse_arg([3], [3])
        with self.assertRaises(ContractError):
            pair_collapse_arg([3], [5], gap=0)
        with self.assertRaises(ContractError):
            pair_collapse_arg([], [])


class EmpiricalDensityTest(SimpleTestCase):

    def test_unit_divisor(self):
        self.assertEqual(empirical_delta_density(1, 0, 0, 100), Fraction(99, 100))

    def test_converges_to_reciprocal(self):
        self.assertLess(abs(empirical_delta_density(5, 0, 5, 10 ** 5) - Fraction(1, 5)), Fraction(1, 1000))
        self.assertLess(abs(empirical_delta_density(6, 2, 2, 10 ** 5) - Fraction(1, 6)), Fraction(1, 1000))

    def test_matches_direct_count(self):
        for q, s, r, N in [(5, 0, 5, 1000), (6, 2, 2, 997), (7, 3, 40, 500), (4, -3, 1, 64), (9, 0, 1000, 100)]:
            count = sum(delta(DeltaArg(m + s, q, r)) for m in range(2, N + 1))
            self.assertEqual(empirical_delta_density(q, s, r, N), Fraction(count, N), (q, s, r, N))

    def test_error_bound(self):
        N = 10 ** 5
        for q in range(1, 101):
            for s in range(-10, 11):
                for r in range(-100, 101, 7):
                    error = abs(empirical_delta_density(q, s, r, N) - Fraction(1, q))
                    self.assertLessEqual(error, Fraction(abs(r) * q + abs(s) + q, N), (q, s, r))

    def test_domain(self):
        with self.assertRaises(DomainError):
            empirical_delta_density(0, 0, 0, 10)
        with self.assertRaises(DomainError):
            empirical_delta_density(20, 0, 0, 10)

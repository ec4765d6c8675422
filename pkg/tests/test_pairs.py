from math import prod

from django.test import SimpleTestCase, tag

from sieves.errors import ContractError, DomainError
from sieves.util.delta import DeltaArg, delta
from sieves.util.pairs import (PairSpec, pair_block, pair_pdf, pi_pair, pi_pair_k, pi_twin, pi_twin_k,
                               pi_twin_k_literal, twin_pdf_product, twin_pdf_simplified)
from sieves.util.pdf import PrimeBasis, first_primes
from tests.oracle import is_prime, pairs_upto

ODD_PRIMES = (3, 5, 7, 11, 13)


def brackets(n, p, gap):
    return (1 - delta(DeltaArg(n, p, p))) * (1 - delta(DeltaArg(n + gap, p, p)))


class TwinPdfTest(SimpleTestCase):

    def test_product_values(self):
        self.assertEqual(twin_pdf_product(11, PrimeBasis((2, 3))), 1)
        # 9 = 3^2 is filtered
        self.assertEqual(twin_pdf_product(7, PrimeBasis((2, 3))), 0)
        self.assertEqual(twin_pdf_product(3, PrimeBasis((2,))), 1)

    def test_simplified_values(self):
        self.assertEqual(twin_pdf_simplified(11, PrimeBasis((2, 3, 5))), 1)
        self.assertEqual(twin_pdf_simplified(23, PrimeBasis((2, 3, 5))), 0)

    def test_domain(self):
        with self.assertRaises(DomainError):
            twin_pdf_product(2, PrimeBasis((2,)))
        with self.assertRaises(DomainError):
            twin_pdf_simplified(2, PrimeBasis((2,)))
        with self.assertRaises(ContractError):
            twin_pdf_simplified(5, PrimeBasis((3, 5), verify=False))

    def test_simplified_equals_product(self):
        for k in range(0, 9):
            basis = first_primes(k)
            for n in range(3, 5000):
                self.assertEqual(twin_pdf_simplified(n, basis), twin_pdf_product(n, basis), (n, k))

    @tag('slow')
    def test_simplified_equals_product_exhaustive(self):
        for k in range(1, 9):
            basis = first_primes(k)
            for n in range(3, 10 ** 5 + 1):
                if twin_pdf_simplified(n, basis) != twin_pdf_product(n, basis):
                    self.fail("block form differs at n=%d, k=%d" % (n, k))


class PairBlockTest(SimpleTestCase):

    def check_disjoint(self, limit):
        for half_gap in range(1, 6):
            for p in ODD_PRIMES:
                if (2 * half_gap) % p == 0:
                    continue
                for n in range(3, limit):
                    both = delta(DeltaArg(n, p, p)) * delta(DeltaArg(n + 2 * half_gap, p, p))
                    self.assertEqual(both, 0, (n, p, half_gap))

    def test_blocks_disjoint(self):
        self.check_disjoint(3000)

    @tag('slow')
    def test_blocks_disjoint_exhaustive(self):
        self.check_disjoint(10 ** 5 + 1)

    def test_reduction_where_exact(self):
        for half_gap in range(1, 16):
            gap = 2 * half_gap
            for p in (2,) + ODD_PRIMES:
                if gap % p:
                    continue
                start = 3 if p == 2 else p * p
                for n in range(start, 5000):
                    self.assertEqual(brackets(n, p, gap), 1 - delta(DeltaArg(n, p, p)), (n, p, gap))
                    self.assertEqual(pair_block(n, p, half_gap), brackets(n, p, gap), (n, p, gap))

    def test_reduction_below_square(self):
        # (3, 9): 9 = 3^2 so the upper bracket is 0 while the lower one is 1
        self.assertEqual(brackets(3, 3, 6), 0)
        self.assertEqual(1 - delta(DeltaArg(3, 3, 3)), 1)
        self.assertEqual(pair_block(3, 3, 3), 0)
        self.assertEqual(pair_pdf(3, PairSpec(3)), 0)

    def test_block_matches_brackets_everywhere(self):
        for half_gap in range(1, 8):
            for p in (2,) + ODD_PRIMES:
                for n in range(3, 600):
                    expected = brackets(n, p, 2 * half_gap)
                    if p == 2:
                        expected = 1 - delta(DeltaArg(n, 2, 2))
                    self.assertEqual(pair_block(n, p, half_gap), expected, (n, p, half_gap))


class PairPdfTest(SimpleTestCase):

    def test_known_values(self):
        self.assertEqual(pair_pdf(5, PairSpec(3)), 1)
        self.assertEqual(pair_pdf(3, PairSpec(1)), 1)
        self.assertEqual(pair_pdf(9, PairSpec(1)), 0)

    def test_spec(self):
        with self.assertRaises(DomainError):
            PairSpec(0)
        self.assertEqual(PairSpec(3).gap, 6)
        with self.assertRaises(DomainError):
            pair_pdf(2, PairSpec(1))

    def test_full_basis_detects_prime_pairs(self):
        for half_gap in range(1, 6):
            for n in range(3, 3000):
                expected = int(is_prime(n) and is_prime(n + 2 * half_gap))
                self.assertEqual(pair_pdf(n, PairSpec(half_gap)), expected, (n, half_gap))

    def test_partial_basis_count(self):
        for k in (1, 2, 4):
            basis = first_primes(k)
            for half_gap in (1, 2, 3, 15):
                literal = sum(pair_pdf(m, PairSpec(half_gap, basis)) for m in range(3, 2001))
                self.assertEqual(pi_pair_k(2000, k, half_gap), literal, (k, half_gap))


class PairCountTest(SimpleTestCase):

    def test_twin_values(self):
        self.assertEqual(pi_twin(20), 4)
        self.assertEqual(pi_twin(100), 8)
        self.assertEqual(pi_twin(3), 1)
        with self.assertRaises(DomainError):
            pi_twin(2)

    def test_pair_values(self):
        self.assertEqual(pi_pair(20, 2), 4)
        self.assertEqual(pi_pair(20, 3), 5)
        self.assertEqual(pi_pair(3, 1), 1)

    def test_pairs_match_oracle(self):
        for gap in (2, 4, 6, 8, 12):
            self.assertEqual(pi_pair(4000, gap // 2), len(pairs_upto(4000, gap)), gap)

    def test_twin_is_pair_with_gap_two(self):
        for n in (3, 4, 5, 99, 1000, 65537, 10 ** 5):
            self.assertEqual(pi_pair(n, 1), pi_twin(n), n)

    def test_partial_twin_values(self):
        self.assertEqual(pi_twin_k(10, 1), 4)
        self.assertEqual(pi_twin_k(3, 1), 1)
        self.assertLessEqual(abs(pi_twin_k(10 ** 6, 2) - 166666), 100)

    def test_partial_twin_matches_literal(self):
        for k in range(1, 6):
            for n in (3, 10, 120, 2500):
                self.assertEqual(pi_twin_k(n, k), pi_twin_k_literal(n, k), (n, k))

    def test_twin_density(self):
        n = 10 ** 6
        for k in range(1, 7):
            primes = first_primes(k).primes
            density = 0.5
            for p in primes[1:]:
                density *= 1 - 2 / p
            self.assertLessEqual(abs(pi_twin_k(n, k) / n - density), prod(primes) / n + 1e-4, k)

import numpy as np
from django.test import SimpleTestCase

from sieves.errors import ContractError, DomainError
from sieves.util.series import CountSeries, auto_checkpoints, count_series, lower_member_masks
from sieves.util.sieve import segmented_sieve
from tests.oracle import pairs_upto, prime_count


class CountSeriesTest(SimpleTestCase):

    def test_known_values(self):
        self.assertEqual(count_series('pi', {}, [10, 100]).checkpoints, ((10, 4), (100, 25)))
        self.assertEqual(count_series('pi_k', {'k': 1}, [10]).checkpoints, ((10, 5),))
        self.assertEqual(count_series('pi', {}, [2]).checkpoints, ((2, 1),))

    def test_contract(self):
        with self.assertRaises(ContractError):
            count_series('pi', {}, [100, 10])
        with self.assertRaises(ContractError):
            count_series('pi', {}, [10, 10])
        with self.assertRaises(ContractError):
            count_series('pi', {}, [])
        with self.assertRaises(ContractError):
            count_series('sigma', {}, [10])

    def test_domain(self):
        with self.assertRaises(DomainError):
            count_series('pi', {}, [1])
        with self.assertRaises(DomainError):
            count_series('pi_twin', {}, [2])
        with self.assertRaises(DomainError):
            count_series('pi_pair', {'half_gap': 0}, [10])
        with self.assertRaises(DomainError):
            count_series('pi_k', {'k': 0}, [10])

    def test_series_invariants(self):
        with self.assertRaises(ContractError):
            CountSeries('pi', {}, ((10, 4), (20, 3)))
        with self.assertRaises(ContractError):
            CountSeries('pi', {}, ((3, 4),))
        series = CountSeries('pi', {}, ((10, 4), (20, 8)))
        self.assertEqual(series.count_at(20), 8)
        self.assertEqual(series.last, 8)
        with self.assertRaises(KeyError):
            series.count_at(15)

    def test_checkpoints_across_chunk_boundaries(self):
        # SIEVE_SEGMENT_SIZE is 1 << 16 under the testing settings
        n = 200000
        bitmap = segmented_sieve(n + 6)
        cumulative = np.cumsum(bitmap.unpack(0, n + 1))
        points = [2, 3, 65535, 65536, 65537, 131071, 131072, 150000, n]
        series = count_series('pi', {}, points, bitmap=bitmap)
        self.assertEqual(series.checkpoints, tuple((p, int(cumulative[p])) for p in points))

    def test_pair_counts(self):
        points = [3, 20, 100, 1000, 5000]
        for gap in (2, 4, 6, 30):
            series = count_series('pi_pair', {'half_gap': gap // 2}, points)
            self.assertEqual(series.checkpoints, tuple((p, len(pairs_upto(p, gap))) for p in points), gap)
        twins = count_series('pi_twin', {}, points)
        self.assertEqual(twins.checkpoints, count_series('pi_pair', {'half_gap': 1}, points).checkpoints)

    def test_small_bitmap_is_replaced(self):
        small = segmented_sieve(50)
        self.assertEqual(count_series('pi', {}, [1000], bitmap=small).last, prime_count(1000))

    def test_masks_need_room_for_the_gap(self):
        with self.assertRaises(ContractError):
            list(lower_member_masks(segmented_sieve(100), 6, 3, 98))


class AutoCheckpointsTest(SimpleTestCase):

    def test_decades(self):
        self.assertEqual(auto_checkpoints(10 ** 6), [1000, 10000, 100000, 1000000])
        self.assertEqual(auto_checkpoints(5000), [1000, 5000])
        self.assertEqual(auto_checkpoints(500), [500])

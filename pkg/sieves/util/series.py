'''
    Checkpointed counting functions.

    Every counter in the package (pi, pi_k, the twin and 2k-pair counts and
    their partial-basis variants) is the number of lower members m <= n of a
    window pattern on a sieve bitmap: bit m alone for the prime counts, bits
    m and m + gap for the pair counts. A single streaming pass over the bitmap
    produces the counts at all checkpoints.
'''

import logging
from dataclasses import dataclass, field

import numpy as np
from django.conf import settings

from sieves.errors import ContractError, DomainError
from sieves.util.pdf import first_primes
from sieves.util.sieve import partial_sieve, segmented_sieve

logger = logging.getLogger(__name__)

# kind -> (lowest counted m, needs k, needs half_gap)
KINDS = {
    'pi': (2, False, False),
    'pi_k': (2, True, False),
    'pi_twin': (3, False, False),
    'pi_twin_k': (3, True, False),
    'pi_pair': (3, False, True),
    'pi_pair_k': (3, True, True),
}


@dataclass(frozen=True)
class CountSeries:
    '''Counts of one counting function at increasing checkpoints.'''
    kind: str
    params: dict = field(hash=False)
    checkpoints: tuple

    def __post_init__(self):
        previous = 0
        for n, count in self.checkpoints:
            if count < previous or count > n:
                raise ContractError("count %d at n=%d breaks monotonicity or exceeds n" % (count, n))
            previous = count

    def count_at(self, n):
        for m, count in self.checkpoints:
            if m == n:
                return count
        raise KeyError(n)

    @property
    def last(self):
        return self.checkpoints[-1][1]


def gap_of(kind, params):
    if kind in ('pi', 'pi_k'):
        return 0
    if kind in ('pi_twin', 'pi_twin_k'):
        return 2
    half_gap = params.get('half_gap', 0)
    if half_gap < 1:
        raise DomainError("half_gap must be >= 1, got %d" % half_gap)
    return 2 * half_gap


def bitmap_for(kind, params, n_max, threads=None, segment_size=None):
    '''
        Sieve bitmap a counting function of this kind reads, covering n_max.
    '''
    if KINDS[kind][1]:
        k = params.get('k', 0)
        if k < 1:
            raise DomainError("k must be >= 1, got %d" % k)
        return partial_sieve(n_max, first_primes(k), segment_size, threads)
    return segmented_sieve(n_max, segment_size, threads)


def lower_member_masks(bitmap, gap, floor, stop, chunk_size=None):
    '''
        Yields (lo, mask) where mask[i] is set when lo + i is a counted lower
        member: bit lo+i set (and bit lo+i+gap set when gap > 0), floor <= lo+i <= stop.
    '''
    chunk_size = chunk_size or settings.SIEVE_SEGMENT_SIZE
    if stop + gap > bitmap.n_max:
        raise ContractError("bitmap up to %d cannot serve n=%d with gap %d" % (bitmap.n_max, stop, gap))

    for lo, window in bitmap.chunks(chunk_size, overlap=gap, stop=stop + 1):
        length = min(chunk_size, stop + 1 - lo)
        mask = window[:length]
        if gap:
            mask = mask & window[gap:gap + length]
        if lo < floor:
            mask[:floor - lo] = False
        yield lo, mask


def count_series(kind, params, checkpoints, bitmap=None, threads=None, segment_size=None):
    '''
        Counts of one counting function at every checkpoint, in one pass.

        :param kind: one of KINDS
        :param params: {'k': ..., 'half_gap': ...} as the kind needs
        :param checkpoints: strictly increasing n values
        :param bitmap: optional bitmap of the right kind, reused when it covers the range
        :param threads, segment_size: sieve settings for a bitmap built here
        :return: CountSeries
    '''
    if kind not in KINDS:
        raise ContractError("unknown counting function %r" % kind)
    checkpoints = list(checkpoints)
    if not checkpoints:
        raise ContractError("at least one checkpoint is required")
    if any(b <= a for a, b in zip(checkpoints, checkpoints[1:])):
        raise ContractError("checkpoints must be strictly increasing: %r" % (checkpoints,))

    floor = KINDS[kind][0]
    if checkpoints[0] < floor:
        raise DomainError("%s is defined for n >= %d, got %d" % (kind, floor, checkpoints[0]))

    gap = gap_of(kind, params)
    top = checkpoints[-1]
    if bitmap is None or bitmap.n_max < top + gap:
        bitmap = bitmap_for(kind, params, top + gap, threads, segment_size)

    counts = []
    running = 0
    pending = iter(checkpoints)
    target = next(pending)
    for lo, mask in lower_member_masks(bitmap, gap, floor, top):
        while target is not None and target < lo + mask.size:
            counts.append((target, running + int(np.count_nonzero(mask[:target - lo + 1]))))
            target = next(pending, None)
        running += int(np.count_nonzero(mask))

    logger.debug("%s %r counted at %d checkpoints", kind, params, len(counts))
    return CountSeries(kind, dict(params), tuple(counts))


def auto_checkpoints(n_max, start=3):
    '''
        Logarithmic grid: decades 10^start .. n_max, plus n_max itself when it
        is not a decade. A ceiling below the first decade gives [n_max].
    '''
    points = []
    decade = 10 ** start
    while decade <= n_max:
        points.append(decade)
        decade *= 10
    if not points or points[-1] != n_max:
        points.append(n_max)
    return points

'''
    Segmented bit-array sieve.

    Marking for every base prime p starts at p*p, which is exactly the
    quadratic zero-point boundary of the PDF: a bitmap sieved with the first
    k primes is the truth table of the k-prime PDF, and a bitmap sieved with
    all primes up to sqrt(n_max) is the primality table.

    Segments are sieved independently (optionally on a thread pool) and
    packed in segment order, so the result does not depend on the number of
    threads or on the segment size.
'''

import logging
import struct
from concurrent.futures import ThreadPoolExecutor
from math import isqrt

import numpy as np
from django.conf import settings

from sieves.errors import ContractError, DomainError, ResourceLimitError

logger = logging.getLogger(__name__)

BITMAP_MAGIC = b'PDFSIEVE'
BITMAP_HEADER = struct.Struct('<8sQ')


class PrimeBitmap(object):
    '''
        Immutable little-endian bit array over 0..n_max. Bit m is set when m
        survived the sieve that produced the bitmap.
    '''

    def __init__(self, n_max, bits):
        if bits.size != n_max // 8 + 1:
            raise ContractError("bitmap of %d bytes cannot cover 0..%d" % (bits.size, n_max))
        self.n_max = n_max
        self.bits = bits
        self.bits.flags.writeable = False

    def __contains__(self, n):
        if n < 0 or n > self.n_max:
            return False
        return bool((self.bits[n >> 3] >> (n & 7)) & 1)

    def __eq__(self, other):
        if not isinstance(other, PrimeBitmap):
            return NotImplemented
        return self.n_max == other.n_max and np.array_equal(self.bits, other.bits)

    def __repr__(self):
        return 'PrimeBitmap(n_max=%d)' % self.n_max

    def unpack(self, start=0, stop=None):
        '''
            Bool array for the integers in [start, stop), stop capped at n_max + 1.
        '''
        stop = self.n_max + 1 if stop is None else min(stop, self.n_max + 1)
        start = max(start, 0)
        if start >= stop:
            return np.zeros(0, dtype=bool)

        raw = np.unpackbits(self.bits[start >> 3:(stop + 7) >> 3], bitorder='little')
        skip = start & 7
        return raw[skip:skip + stop - start].view(bool)

    def _windows(self, start, stop):
        stop = self.n_max + 1 if stop is None else min(stop, self.n_max + 1)
        step = settings.SIEVE_SEGMENT_SIZE
        for lo in range(max(start, 0), stop, step):
            yield lo, self.unpack(lo, min(lo + step, stop))

    def count(self, start=0, stop=None):
        '''Set bits in [start, stop), one SIEVE_SEGMENT_SIZE window at a time.'''
        return sum(int(np.count_nonzero(window)) for _, window in self._windows(start, stop))

    def values(self, start=0, stop=None):
        '''Set positions in [start, stop) as an int64 array.'''
        parts = [np.flatnonzero(window).astype(np.int64) + lo for lo, window in self._windows(start, stop)]
        if not parts:
            return np.zeros(0, dtype=np.int64)
        return np.concatenate(parts)

    def chunks(self, chunk_size, overlap=0, start=0, stop=None):
        '''
            Yields (lo, window) where window covers [lo, lo + chunk_size + overlap)
            clipped to the bitmap; the lo values step by chunk_size up to stop.
        '''
        stop = self.n_max + 1 if stop is None else min(stop, self.n_max + 1)
        for lo in range(start, stop, chunk_size):
            yield lo, self.unpack(lo, lo + chunk_size + overlap)


def resolve_threads(threads=None):
    '''
        Thread count for sieving: explicit argument, then the PDFSIEVE_THREADS
        environment variable (read into settings), then 1.
    '''
    if threads is None:
        threads = getattr(settings, 'SIEVE_THREADS', 1) or 1
    if threads < 1:
        raise DomainError("thread count must be >= 1, got %d" % threads)
    return threads


def check_budget(n_max):
    '''
        Refuses bitmaps that would not fit the configured memory budget.
    '''
    if n_max > settings.SIEVE_N_LIMIT:
        logger.warning("refusing n_max=%d above SIEVE_N_LIMIT=%d", n_max, settings.SIEVE_N_LIMIT)
        raise ResourceLimitError(
            "n_max=%d exceeds the implementation limit %d" % (n_max, settings.SIEVE_N_LIMIT))

    nbytes = n_max // 8 + 1
    if nbytes > settings.SIEVE_MEMORY_BUDGET:
        logger.warning("refusing n_max=%d: bitmap needs %d bytes, budget is %d",
                       n_max, nbytes, settings.SIEVE_MEMORY_BUDGET)
        raise ResourceLimitError(
            "a bitmap up to %d needs %d MiB but SIEVE_MEMORY_BUDGET is %d MiB; "
            "lower --n or raise SIEVE_MEMORY_BUDGET"
            % (n_max, nbytes >> 20, settings.SIEVE_MEMORY_BUDGET >> 20))


def simple_sieve(limit):
    '''
        Classic sieve, primes <= limit as an int64 array. Used for base primes.
    '''
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def sieve_segment(low, high, base_primes):
    '''
        Sieves [low, high) with the sorted base primes, each one marking its
        multiples from p*p on. 0 and 1 are never set.
    '''
    segment = np.ones(high - low, dtype=bool)
    if low < 2:
        segment[:2 - low] = False

    for p in base_primes:
        p2 = p * p
        if p2 >= high:
            break
        first = max(p2, -(-low // p) * p)
        segment[first - low::p] = False

    return segment


def _segment_plan(n_max, segment_size):
    return [(low, min(low + segment_size, n_max + 1)) for low in range(0, n_max + 1, segment_size)]


def build_bitmap(n_max, base_primes, segment_size=None, threads=None):
    '''
        Runs the segmented sieve over 0..n_max with the given base primes and
        packs the segments, in order, into a PrimeBitmap.
    '''
    if n_max < 2:
        raise DomainError("n_max must be >= 2, got %d" % n_max)
    if segment_size is None:
        segment_size = settings.SIEVE_SEGMENT_SIZE
    if segment_size < 1:
        raise DomainError("segment size must be >= 1, got %d" % segment_size)
    threads = resolve_threads(threads)
    check_budget(n_max)

    base = sorted(int(p) for p in base_primes)
    plan = _segment_plan(n_max, segment_size)
    logger.info("sieving 0..%d with %d base primes in %d segments (segment_size=%d, threads=%d)",
                n_max, len(base), len(plan), segment_size, threads)

    packed = np.zeros(n_max // 8 + 1, dtype=np.uint8)
    pos = 0
    pending = np.zeros(0, dtype=bool)

    def emit(segment):
        nonlocal pos, pending
        pending = np.concatenate((pending, segment)) if pending.size else segment
        whole = pending.size - pending.size % 8
        if whole:
            chunk = np.packbits(pending[:whole], bitorder='little')
            packed[pos:pos + chunk.size] = chunk
            pos += chunk.size
            pending = pending[whole:]

    if threads == 1:
        for low, high in plan:
            emit(sieve_segment(low, high, base))
    else:
        # bounded waves keep at most a few segments per worker in memory
        wave = threads * 4
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for i in range(0, len(plan), wave):
                batch = plan[i:i + wave]
                for segment in pool.map(lambda bounds: sieve_segment(bounds[0], bounds[1], base), batch):
                    emit(segment)

    if pending.size:
        packed[pos] = np.packbits(pending, bitorder='little')[0]

    return PrimeBitmap(n_max, packed)


def segmented_sieve(n_max, segment_size=None, threads=None):
    '''
        Primality bitmap of 0..n_max.

        :param n_max: upper bound, >= 2
        :param segment_size: integers per segment (defaults to SIEVE_SEGMENT_SIZE)
        :param threads: worker threads (defaults to resolve_threads())
        :return: PrimeBitmap with bit m set iff m is prime
    '''
    if n_max < 2:
        raise DomainError("n_max must be >= 2, got %d" % n_max)
    return build_bitmap(n_max, simple_sieve(isqrt(n_max)), segment_size, threads)


def partial_sieve(n_max, basis, segment_size=None, threads=None):
    '''
        Truth table of the PDF charged with the given basis over 0..n_max.
        Bit m (m >= 2) is set iff no basis prime p has p | m and m >= p*p.
    '''
    return build_bitmap(n_max, basis.primes, segment_size, threads)


def write_bitmap(bitmap, fh):
    '''
        Raw export: 16-byte header (magic "PDFSIEVE", u64 little-endian n_max)
        followed by the LSB-first packed bits.
    '''
    fh.write(BITMAP_HEADER.pack(BITMAP_MAGIC, bitmap.n_max))
    fh.write(bitmap.bits.tobytes())


def read_bitmap(fh):
    '''Reads a bitmap written by write_bitmap.'''
    header = fh.read(BITMAP_HEADER.size)
    if len(header) != BITMAP_HEADER.size:
        raise ContractError("truncated bitmap header")
    magic, n_max = BITMAP_HEADER.unpack(header)
    if magic != BITMAP_MAGIC:
        raise ContractError("not a PDFSIEVE bitmap (magic %r)" % magic)

    bits = np.frombuffer(fh.read(), dtype=np.uint8).copy()
    return PrimeBitmap(n_max, bits)


def write_primes(bitmap, out, chunk_size=1 << 20):
    '''Writes the set positions as newline-delimited decimal text.'''
    for lo, window in bitmap.chunks(chunk_size):
        values = np.flatnonzero(window) + lo
        if values.size:
            out.write('\n'.join(map(str, values.tolist())) + '\n')

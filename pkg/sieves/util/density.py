'''
    Closed-form targets and predictions for the sieve counts.

    Products of many factors close to 1 are formed as exp(fsum(log1p(...))):
    math.fsum is exactly rounded, so the only error left is one rounding per
    log1p term and one in the final exp.
'''

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import exp, fsum, isqrt, log, log1p
from typing import Optional

import numpy as np
from django.conf import settings
from scipy import integrate

from sieves.errors import DomainError
from sieves.util.pdf import first_primes, pi, pi_k
from sieves.util.pairs import pi_twin
from sieves.util.series import count_series, lower_member_masks
from sieves.util.sieve import partial_sieve, segmented_sieve, simple_sieve

logger = logging.getLogger(__name__)

# published values, used as comparison targets only
TWIN_PRIME_CONSTANT = 0.66016181584686957392781211
BRUN_CONSTANT = 1.9021604

BRUN_BOUND_FACTOR = 3.42


@dataclass(frozen=True)
class DensityReport:
    '''
        Empirical density count/n against its theoretical product.
    '''
    kind: str
    k: int
    n: int
    empirical: Fraction
    theoretical: float

    @property
    def abs_error(self):
        return abs(float(self.empirical) - self.theoretical)

    @property
    def ratio(self):
        return float(self.empirical) / self.theoretical

    def row(self):
        return [self.kind, self.k, self.n, float(self.empirical), self.theoretical, self.abs_error, self.ratio]


@dataclass(frozen=True)
class HLPrediction:
    '''
        Hardy-Littlewood prediction 2 * C_twin * S(k) * li2(n) for the pairs
        (p, p + 2k), p <= n, next to the sieved count.
    '''
    half_gap: int
    n: int
    c_twin: float
    singular_factor: float
    li2_value: float
    actual: int
    pi_n: Optional[int] = None

    @property
    def predicted(self):
        return 2 * self.c_twin * self.singular_factor * self.li2_value

    @property
    def ratio(self):
        return self.actual / self.predicted

    @property
    def asymptotic(self):
        '''The n / ln^2 n form of the same law.'''
        return 2 * self.c_twin * self.singular_factor * self.n / log(self.n) ** 2

    @property
    def probe(self):
        '''The n * (pi(n)/n)^2 form, available when pi(n) is known.'''
        if self.pi_n is None:
            return None
        return 2 * self.c_twin * self.singular_factor * self.pi_n ** 2 / self.n


def _check_k(k):
    if k < 1:
        raise DomainError("k must be >= 1, got %d" % k)


def log_product(log_terms):
    '''exp of the exactly rounded sum of log factors.'''
    return exp(fsum(log_terms))


def theoretical_density(k):
    '''
        prod_{l<=k} (1 - 1/p_l), the density of the k-prime PDF.
    '''
    _check_k(k)
    return log_product(log1p(-1.0 / p) for p in first_primes(k))


def twin_theoretical_density(k):
    '''
        (1 - 1/2) * prod_{m=2..k} (1 - 2/p_m), the density of the k-prime twin PDF.
    '''
    _check_k(k)
    primes = first_primes(k).primes
    return log_product([log1p(-0.5)] + [log1p(-2.0 / p) for p in primes[1:]])


def pair_theoretical_density(k, half_gap):
    '''
        Density of the k-prime 2k-pair PDF: each basis prime dividing the gap
        removes one residue class, every other odd prime removes two.
    '''
    _check_k(k)
    if half_gap < 1:
        raise DomainError("half_gap must be >= 1, got %d" % half_gap)
    primes = first_primes(k).primes
    terms = [log1p(-0.5)]
    for p in primes[1:]:
        terms.append(log1p((-1.0 if half_gap % p == 0 else -2.0) / p))
    return log_product(terms)


def ratio_target(k):
    '''
        2 * prod_{m=2..k} (1 - 1/(p_m - 1)^2)
            = twin_theoretical_density(k) / theoretical_density(k)^2
    '''
    _check_k(k)
    primes = first_primes(k).primes
    return 2 * log_product(log1p(-1.0 / (p - 1) ** 2) for p in primes[1:])


def prime_density_partials(k_max):
    '''theoretical_density(1..k_max); strictly decreasing toward 0.'''
    _check_k(k_max)
    primes = first_primes(k_max).primes
    terms = [log1p(-1.0 / p) for p in primes]
    return [exp(fsum(terms[:i])) for i in range(1, k_max + 1)]


def twin_density_partials(k_max):
    '''twin_theoretical_density(1..k_max); strictly decreasing toward 0.'''
    _check_k(k_max)
    primes = first_primes(k_max).primes
    terms = [log1p(-0.5)] + [log1p(-2.0 / p) for p in primes[1:]]
    return [exp(fsum(terms[:i])) for i in range(1, k_max + 1)]


def partial_count_series(k, checkpoints, half_gap=None, segment_size=None, threads=None):
    '''
        (pi_k, pi_twin_k[, pi_pair_k]) CountSeries at the checkpoints from one
        partial sieve; the pair series is added when half_gap is given.
    '''
    _check_k(k)
    top = max(checkpoints)
    if min(checkpoints) < 3:
        raise DomainError("partial counts need n >= 3, got %d" % min(checkpoints))
    reach = max(2, 2 * half_gap) if half_gap else 2
    bitmap = partial_sieve(top + reach, first_primes(k), segment_size, threads)
    series = [count_series('pi_k', {'k': k}, checkpoints, bitmap=bitmap),
              count_series('pi_twin_k', {'k': k}, checkpoints, bitmap=bitmap)]
    if half_gap:
        series.append(count_series('pi_pair_k', {'k': k, 'half_gap': half_gap}, checkpoints, bitmap=bitmap))
    return series


def partial_counts(k, n):
    '''(pi_k(n), pi_twin_k(n)) from one partial sieve up to n + 2.'''
    primes, twins = partial_count_series(k, [n])
    return primes.last, twins.last


def ratio_empirical(k, n):
    '''
        (pi_twin_k(n)/n) * (n/pi_k(n))^2
    '''
    prime_count, twin_count = partial_counts(k, n)
    if prime_count == 0:
        raise DomainError("pi_%d(%d) is zero" % (k, n))
    return float(Fraction(twin_count * n, prime_count ** 2))


def ratio_full(n, bitmap=None):
    '''
        (pi_twin(n)/n) * (n/pi(n))^2 with every prime charged.
    '''
    if n < 3:
        raise DomainError("the ratio needs n >= 3, got %d" % n)
    if bitmap is None or bitmap.n_max < n + 2:
        bitmap = segmented_sieve(n + 2)
    return float(Fraction(pi_twin(n, bitmap) * n, pi(n, bitmap) ** 2))


@lru_cache(maxsize=8)
def twin_constant(p_max):
    '''
        prod_{2 < p <= p_max} (1 - 1/(p - 1)^2)

        The log terms are summed per sieve chunk with fsum, then the chunk
        sums in chunk order.
    '''
    if p_max < 3:
        raise DomainError("p_max must be >= 3, got %d" % p_max)

    bitmap = segmented_sieve(p_max)
    partials = []
    for lo, window in bitmap.chunks(settings.SIEVE_SEGMENT_SIZE):
        primes = np.flatnonzero(window) + lo
        primes = primes[primes > 2].astype(np.float64)
        if primes.size:
            partials.append(fsum(np.log1p(-1.0 / (primes - 1.0) ** 2)))

    logger.info("twin constant partial product over primes <= %d from %d chunks", p_max, len(partials))
    return exp(fsum(partials))


def default_twin_constant():
    return twin_constant(settings.TWIN_CONSTANT_PMAX)


def odd_prime_divisors(m):
    '''Distinct odd primes dividing m, by division with sieved primes <= sqrt(m).'''
    divisors = []
    for p in simple_sieve(isqrt(m)).tolist():
        if m % p == 0:
            if p > 2:
                divisors.append(p)
            while m % p == 0:
                m //= p
    if m > 2:
        divisors.append(m)
    return divisors


def singular_series(half_gap):
    '''
        prod_{p > 2, p | half_gap} (p - 1)/(p - 2)
    '''
    if half_gap < 1:
        raise DomainError("half_gap must be >= 1, got %d" % half_gap)
    factor = Fraction(1)
    for p in odd_prime_divisors(half_gap):
        factor *= Fraction(p - 1, p - 2)
    return float(factor)


def _inverse_log_squared(t):
    return 1.0 / log(t) ** 2


def li2_between(a, b):
    '''
        Integral of dt / ln^2 t over [a, b], a > 1, by adaptive quadrature on
        doubling panels.
    '''
    if a <= 1:
        raise DomainError("li2 needs a lower limit > 1, got %r" % a)
    if b < a:
        raise DomainError("upper limit %r below lower limit %r" % (b, a))

    pieces = []
    lo = float(a)
    while lo < b:
        hi = min(2.0 * lo, float(b))
        value, _ = integrate.quad(_inverse_log_squared, lo, hi,
                                  epsabs=0.0, epsrel=settings.LI2_EPSREL, limit=200)
        pieces.append(value)
        lo = hi
    return fsum(pieces)


def li2(x):
    '''
        Integral of dt / ln^2 t over [2, x].
    '''
    if x < 2:
        raise DomainError("li2 is defined for x >= 2, got %r" % x)
    return li2_between(2, x)


def hl_prediction(n, half_gap, bitmap=None, p_max=None):
    '''
        Hardy-Littlewood prediction for prime pairs (p, p + 2*half_gap), p <= n.

        :param bitmap: optional primality bitmap covering n + 2*half_gap
        :param p_max: twin constant ceiling (TWIN_CONSTANT_PMAX by default)
    '''
    if n < 3:
        raise DomainError("hl_prediction needs n >= 3, got %d" % n)
    return hl_series([n], half_gap, bitmap, p_max)[0]


def hl_series(checkpoints, half_gap, bitmap=None, p_max=None):
    '''
        HLPrediction at every checkpoint, from one streaming count.
    '''
    if half_gap < 1:
        raise DomainError("half_gap must be >= 1, got %d" % half_gap)
    top = max(checkpoints)
    if bitmap is None or bitmap.n_max < top + 2 * half_gap:
        bitmap = segmented_sieve(top + 2 * half_gap)

    c_twin = twin_constant(p_max or settings.TWIN_CONSTANT_PMAX)
    factor = singular_series(half_gap)
    pairs = count_series('pi_pair', {'half_gap': half_gap}, checkpoints, bitmap=bitmap)
    primes = count_series('pi', {}, checkpoints, bitmap=bitmap)

    return [HLPrediction(half_gap, n, c_twin, factor, li2(n), actual, primes.count_at(n))
            for n, actual in pairs.checkpoints]


def brun_series(checkpoints, bitmap=None):
    '''
        Partial Brun sums: sum over twin pairs (p, p+2), p <= n, of 1/p + 1/(p+2),
        at every checkpoint. A prime in two pairs (5 in (3,5) and (5,7))
        contributes twice.

        :return: list of (n, sum)
    '''
    checkpoints = list(checkpoints)
    if checkpoints[0] < 3:
        raise DomainError("Brun sums need n >= 3, got %d" % checkpoints[0])
    top = checkpoints[-1]
    if bitmap is None or bitmap.n_max < top + 2:
        bitmap = segmented_sieve(top + 2)

    sums = []
    partials = []
    pending = iter(checkpoints)
    target = next(pending)
    for lo, mask in lower_member_masks(bitmap, 2, 3, top):
        lower = (np.flatnonzero(mask) + lo).astype(np.float64)
        terms = 1.0 / lower + 1.0 / (lower + 2.0)
        while target is not None and target < lo + mask.size:
            inside = terms[lower <= target]
            sums.append((target, fsum(partials + [fsum(inside)])))
            target = next(pending, None)
        partials.append(fsum(terms))

    return sums


def brun_partial(n, bitmap=None):
    '''Partial Brun sum up to n.'''
    return brun_series([n], bitmap)[0][1]


def brun_upper_bound(n, c_twin=None):
    '''
        Comparison curve 3.42 * 2 * C_twin * n / ln^2 n.
    '''
    if n <= 1:
        raise DomainError("the bound needs n > 1, got %r" % n)
    if c_twin is None:
        c_twin = default_twin_constant()
    return BRUN_BOUND_FACTOR * 2 * c_twin * n / log(n) ** 2


def pnt_ratio(n, bitmap=None):
    '''pi(n) * ln(n) / n'''
    if n < 2:
        raise DomainError("pnt_ratio needs n >= 2, got %d" % n)
    return pi(n, bitmap) * log(n) / n


def density_report(k, n):
    '''pi_k(n)/n against theoretical_density(k).'''
    _check_k(k)
    return DensityReport('density', k, n, Fraction(pi_k(n, k), n), theoretical_density(k))


def partial_reports(k, checkpoints, half_gap=None, segment_size=None, threads=None):
    '''
        Reports of one basis size at every checkpoint from a single partial
        sieve: density, twin density and the ratio functional against its
        target, plus the 2k-pair density when half_gap is given.
    '''
    series = partial_count_series(k, checkpoints, half_gap, segment_size, threads)
    density = theoretical_density(k)
    twin_density = twin_theoretical_density(k)
    target = ratio_target(k)
    pair_density = pair_theoretical_density(k, half_gap) if half_gap else None

    reports = []
    for i, (n, prime_count) in enumerate(series[0].checkpoints):
        twin_count = series[1].checkpoints[i][1]
        reports.append(DensityReport('density', k, n, Fraction(prime_count, n), density))
        reports.append(DensityReport('twin_density', k, n, Fraction(twin_count, n), twin_density))
        reports.append(DensityReport('ratio', k, n, Fraction(twin_count * n, prime_count ** 2), target))
        if half_gap:
            pair_count = series[2].checkpoints[i][1]
            reports.append(DensityReport('pair_density', k, n, Fraction(pair_count, n), pair_density))
    return reports

'''
    The prime detecting function (PDF).

    The PDF charged with the first k primes is the product

        p_k(n) = (1 - delta(n/p_1 - p_1)) ... (1 - delta(n/p_k - p_k)),  n >= 2

    It classifies every n below p_{k+1}^2 exactly; above that window an
    outcome of 1 only says no charged prime p divides n with n >= p^2.
    The literal evaluation lives here next to the self-charging recurrence
    and the counting functions pi and pi_k, whose fast paths run on the
    segmented sieve bitmaps.
'''

import logging
from dataclasses import dataclass, field
from math import isqrt, log

from django.conf import settings

from sieves.errors import ContractError, DomainError, ResourceLimitError
from sieves.util.delta import sieve_factor
from sieves.util.sieve import partial_sieve, segmented_sieve, simple_sieve

logger = logging.getLogger(__name__)


def trial_division_is_prime(n):
    '''
        Oracle used to verify bases and to cross-check the sieves.
    '''
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def next_prime(n):
    m = max(n + 1, 2)
    while not trial_division_is_prime(m):
        m += 1
    return m


@dataclass(frozen=True)
class PrimeBasis:
    '''
        The first k primes, in order; the "charge" of a partial PDF.

        Construction checks the list against the trial-division oracle unless
        verify=False is passed by a producer whose output is already checked
        (the recurrence and the sieve).
    '''
    primes: tuple
    verify: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'primes', tuple(int(p) for p in self.primes))
        if self.verify:
            self._check()

    def _check(self):
        primes = self.primes
        if primes and primes[0] != 2:
            raise ContractError("a basis must start at 2, got %d" % primes[0])
        for a, b in zip(primes, primes[1:]):
            if b <= a:
                raise ContractError("basis is not strictly increasing at %d, %d" % (a, b))
            if any(trial_division_is_prime(m) for m in range(a + 1, b)):
                raise ContractError("basis skips a prime between %d and %d" % (a, b))
        for p in primes:
            if not trial_division_is_prime(p):
                raise ContractError("%d is not prime" % p)

    @property
    def k(self):
        return len(self.primes)

    @property
    def validity_limit(self):
        '''Largest n the basis classifies exactly: p_{k+1}^2 - 1.'''
        last = self.primes[-1] if self.primes else 1
        return next_prime(last) ** 2 - 1

    def __iter__(self):
        return iter(self.primes)

    def __len__(self):
        return len(self.primes)


def first_primes(k):
    '''
        PrimeBasis of the first k primes.
    '''
    if k < 0:
        raise DomainError("k must be >= 0, got %d" % k)
    if k == 0:
        return PrimeBasis(())

    # p_k < k (ln k + ln ln k) for k >= 6
    bound = 15 if k < 6 else int(k * (log(k) + log(log(k)))) + 1
    primes = simple_sieve(bound)[:k]
    return PrimeBasis(tuple(primes.tolist()), verify=k <= 1000)


def pdf_eval(n, basis):
    '''
        Literal product of the basis brackets at n.

        :param n: integer >= 2
        :param basis: PrimeBasis
        :return: 1 or 0
    '''
    if n < 2:
        raise DomainError("the PDF is defined for n >= 2, got %d" % n)

    result = 1
    for p in basis:
        result *= sieve_factor(n, p)
    return result


class PdfState(object):
    '''
        Mutable state of the self-charging recurrence: the primes found so far
        and the next integer to classify. Single owner only.
    '''

    def __init__(self):
        self.basis = []
        self.cursor = 2

    def classify(self, n):
        '''
            Current PDF at n. Brackets with p*p > n are identically 1, so the
            product stops there and at the first zero bracket.
        '''
        for p in self.basis:
            if p * p > n:
                break
            if sieve_factor(n, p) == 0:
                return 0
        return 1

    def charge(self, p):
        self.basis.append(p)

    def step(self):
        '''Classifies the cursor, charges it when it is prime and advances.'''
        n = self.cursor
        found = self.classify(n)
        if found:
            self.charge(n)
        self.cursor = n + 1
        return found

    def run_until(self, n_max):
        while self.cursor <= n_max:
            self.step()
        return PrimeBasis(tuple(self.basis), verify=False)


def recurrence_run(n_max):
    '''
        Starts from p_0(n) = 1 and walks n = 2 .. n_max, charging every n the
        current PDF accepts.

        :return: PrimeBasis of all primes <= n_max
    '''
    if n_max < 2:
        raise DomainError("n_max must be >= 2, got %d" % n_max)
    if n_max > settings.LITERAL_PDF_LIMIT:
        raise ResourceLimitError(
            "literal recurrence is limited to n <= %d (LITERAL_PDF_LIMIT)" % settings.LITERAL_PDF_LIMIT)

    logger.debug("running the PDF recurrence up to %d", n_max)
    return PdfState().run_until(n_max)


def pi(n, bitmap=None):
    '''
        Number of primes <= n, i.e. the sum of p(m) over 2 <= m <= n.

        :param bitmap: optional primality bitmap covering n, reused when given
    '''
    if n < 2:
        raise DomainError("pi is defined for n >= 2, got %d" % n)
    if bitmap is None or bitmap.n_max < n:
        bitmap = segmented_sieve(n)
    return bitmap.count(0, n + 1)


def pi_k(n, k):
    '''
        Literal summatory function of the k-prime PDF over 2 <= m <= n,
        evaluated on the partial-sieve bitmap (same truth table).
    '''
    if n < 2:
        raise DomainError("pi_k is defined for n >= 2, got %d" % n)
    if k < 1:
        raise DomainError("k must be >= 1, got %d" % k)
    return partial_sieve(n, first_primes(k)).count(0, n + 1)


def pi_k_literal(n, k):
    '''
        pi_k by per-number evaluation of the full product; the cross-check path.
    '''
    if n < 2:
        raise DomainError("pi_k is defined for n >= 2, got %d" % n)
    if k < 1:
        raise DomainError("k must be >= 1, got %d" % k)
    if n > settings.LITERAL_PDF_LIMIT:
        raise ResourceLimitError(
            "literal sweeps are limited to n <= %d (LITERAL_PDF_LIMIT)" % settings.LITERAL_PDF_LIMIT)

    basis = first_primes(k)
    return sum(pdf_eval(m, basis) for m in range(2, n + 1))

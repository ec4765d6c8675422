'''
    Twin and 2k-gap pair detecting functions and the pair counting functions.

    The product form multiplies two PDFs, at n and at n + 2k. Expanding each
    bracket pair gives the block form: for an odd prime p that cannot divide
    both members the cross term vanishes and the block is
    1 - delta(n/p - p) - delta((n+2k)/p - p); for p | 2k the pair of
    brackets reduces to the single bracket 1 - delta(n/p - p).

    Pairs are counted by their lower member p <= n; (2, 3) is not a twin pair.
'''

import logging
from dataclasses import dataclass
from math import isqrt
from typing import Optional

from sieves.errors import ContractError, DomainError, InvariantViolation
from sieves.util.delta import DeltaArg, delta
from sieves.util.pdf import PrimeBasis, first_primes, pdf_eval
from sieves.util.series import count_series
from sieves.util.sieve import simple_sieve

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairSpec:
    '''
        Pair (n, n + 2*half_gap). basis=None means the full PDF (primality).
    '''
    half_gap: int
    basis: Optional[PrimeBasis] = None

    def __post_init__(self):
        if self.half_gap < 1:
            raise DomainError("half_gap must be >= 1, got %d" % self.half_gap)

    @property
    def gap(self):
        return 2 * self.half_gap


def _check_pair_domain(n):
    if n < 3:
        raise DomainError("pair detecting functions are defined for n >= 3, got %d" % n)


def twin_pdf_product(n, basis):
    '''
        Product of two PDFs with the same basis: p_k(n) * p_k(n + 2).
    '''
    _check_pair_domain(n)
    return pdf_eval(n, basis) * pdf_eval(n + 2, basis)


def twin_pdf_simplified(n, basis):
    '''
        Block form of the twin detecting function:

            (1 - delta(n/2 - 2)) * prod_{m>=2} (1 - delta(n/p_m - p_m) - delta((n+2)/p_m - p_m))
    '''
    _check_pair_domain(n)
    primes = basis.primes
    if not primes:
        return 1
    if primes[0] != 2:
        raise ContractError("the block form needs a basis starting at 2")

    result = 1 - delta(DeltaArg(n, 2, 2))
    for p in primes[1:]:
        block = 1 - delta(DeltaArg(n, p, p)) - delta(DeltaArg(n + 2, p, p))
        if block < 0:
            raise InvariantViolation("twin block for p=%d at n=%d evaluated to %d" % (p, n, block))
        result *= block
    return result


def pair_block(n, p, half_gap):
    '''
        One block of the 2k-pair detecting function for prime p.

        p = 2 and odd p | half_gap use the single bracket wherever the reduction
        is exact (n >= 3 for p = 2, n >= p*p for odd p); below p*p an odd
        divisor of the gap keeps both brackets.
    '''
    gap = 2 * half_gap
    low = DeltaArg(n, p, p)
    high = DeltaArg(n + gap, p, p)

    if p == 2:
        return 1 - delta(low)
    if half_gap % p == 0:
        if n >= p * p:
            return 1 - delta(low)
        return (1 - delta(low)) * (1 - delta(high))

    block = 1 - delta(low) - delta(high)
    if block < 0:
        raise InvariantViolation("pair block for p=%d, gap %d at n=%d evaluated to %d" % (p, gap, n, block))
    return block


def pair_pdf(n, spec):
    '''
        2k-pair detecting function in block form.

        With spec.basis=None every prime up to sqrt(n + 2k) is charged, and the
        outcome is 1 iff n and n + 2k are both prime. With a partial basis
        the outcome is 1 iff both members pass the k-prime PDF.
    '''
    _check_pair_domain(n)
    if spec.basis is None:
        primes = simple_sieve(isqrt(n + spec.gap)).tolist()
    else:
        primes = spec.basis.primes

    result = 1
    for p in primes:
        result *= pair_block(n, p, spec.half_gap)
        if not result:
            break
    return result


def pi_twin(n, bitmap=None):
    '''
        Twin pairs (p, p + 2) with 3 <= p <= n.
    '''
    _check_pair_domain(n)
    return count_series('pi_twin', {}, [n], bitmap=bitmap).last


def pi_twin_k(n, k, bitmap=None):
    '''
        Summatory function of the k-prime twin detecting function over 3 <= m <= n.
    '''
    _check_pair_domain(n)
    return count_series('pi_twin_k', {'k': k}, [n], bitmap=bitmap).last


def pi_twin_k_literal(n, k):
    '''pi_twin_k by per-number block evaluation; the cross-check path.'''
    _check_pair_domain(n)
    basis = first_primes(k)
    return sum(twin_pdf_simplified(m, basis) for m in range(3, n + 1))


def pi_pair(n, half_gap, bitmap=None):
    '''
        Prime pairs (p, p + 2*half_gap) with 3 <= p <= n.
    '''
    _check_pair_domain(n)
    return count_series('pi_pair', {'half_gap': half_gap}, [n], bitmap=bitmap).last


def pi_pair_k(n, k, half_gap, bitmap=None):
    '''
        Pairs (m, m + 2*half_gap), 3 <= m <= n, passing the k-prime pair detecting function.
    '''
    _check_pair_domain(n)
    return count_series('pi_pair_k', {'k': k, 'half_gap': half_gap}, [n], bitmap=bitmap).last

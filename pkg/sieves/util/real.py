'''
    The PDF and the prime counting function at real arguments.

    p(x) := p(ceil(x)) extends the PDF to reals. Its running integral is the
    piecewise linear pi_hat, which agrees with pi at every integer and whose
    slope on each open interval (m-1, m) is p(m). The unit step version of
    pi comes from a train of unit point masses at the primes; integrating the
    train is counting locations.

    Arguments may be int, float or Fraction; pi_hat and the integral keep the
    argument's arithmetic, so Fraction input gives exact results.
'''

from fractions import Fraction
from math import ceil, floor

import numpy as np

from sieves.errors import ContractError, DomainError
from sieves.util.pdf import trial_division_is_prime
from sieves.util.sieve import segmented_sieve


class InterpolatedPi(object):
    '''
        pi at the integers 0..n_max and its piecewise linear interpolation.
    '''

    def __init__(self, n_max, bitmap=None):
        if bitmap is None or bitmap.n_max < n_max:
            bitmap = segmented_sieve(n_max)
        self.n_max = n_max
        self.bitmap = bitmap
        self.table = np.cumsum(bitmap.unpack(0, n_max + 1), dtype=np.int64)

    def pi(self, m):
        return int(self.table[m])

    def _check_range(self, x, low=2):
        if x < low:
            raise DomainError("argument must be >= %d, got %s" % (low, x))
        if x > self.n_max - 1:
            raise DomainError("argument %s beyond the table (n_max - 1 = %d)" % (x, self.n_max - 1))

    def pdf_real(self, x):
        '''p(ceil(x)), 1 on (p-1, p] for every prime p.'''
        if x < 2:
            raise DomainError("the PDF is defined for x >= 2, got %s" % x)
        m = ceil(x)
        if m > self.n_max:
            raise DomainError("argument %s beyond the table (n_max = %d)" % (x, self.n_max))
        return 1 if m in self.bitmap else 0

    def pi_hat(self, x):
        '''pi(floor(x)) + (pi(floor(x + 1)) - pi(floor(x))) * {x}'''
        self._check_range(x)
        f = floor(x)
        frac = x - f
        low = self.pi(f)
        return low + (self.pi(f + 1) - low) * frac

    def interval_slope(self, x):
        '''Slope of the linear piece whose open interval (m-1, m) holds x.'''
        m = ceil(x)
        if m == x:
            raise ContractError("%s is a breakpoint; the slope is taken on open intervals" % x)
        return self.pi(m) - self.pi(m - 1)

    def left_derivative_check(self, x, h_min):
        '''
            Difference quotient (pi_hat(x) - pi_hat(x - h)) / h next to p(x).

            Evaluated in exact rational arithmetic; the step must stay on the
            piece (ceil(x) - 1, ceil(x)], where the two values coincide.

            :return: (quotient, pdf_real(x))
        '''
        x = Fraction(x)
        h = Fraction(h_min)
        if h <= 0:
            raise ContractError("h must be positive, got %s" % h)
        if x <= 2:
            raise DomainError("x must be > 2, got %s" % x)
        if x - h < ceil(x) - 1:
            raise ContractError("step %s from %s crosses the breakpoint %d" % (h, x, ceil(x) - 1))

        quotient = (self.pi_hat(x) - self.pi_hat(x - h)) / h
        return quotient, self.pdf_real(x)

    def integrate_pdf_real(self, x):
        '''
            pi(2) + integral of p(y) over [2, x], summed span by span: every
            interval (m-1, m] with m prime contributes its length inside [2, x].
            The point mass at 2 is the integration constant, so the result
            equals pi_hat(x).
        '''
        self._check_range(x)
        f = floor(x)
        whole = self.bitmap.count(3, f + 1)
        part = (x - f) if (x > f and (f + 1) in self.bitmap) else 0
        return 1 + whole + part


class SpikeTrain(object):
    '''
        Unit point masses at the primes up to coverage.
    '''

    def __init__(self, locations, coverage=None, verify=True):
        self.locations = np.asarray(locations, dtype=np.int64)
        if self.locations.size > 1 and np.any(np.diff(self.locations) <= 0):
            raise ContractError("spike locations must be strictly increasing")
        if verify:
            bad = [int(p) for p in self.locations if not trial_division_is_prime(int(p))]
            if bad:
                raise ContractError("spike locations are not prime: %r" % bad[:5])
        self.coverage = coverage if coverage is not None else int(self.locations[-1]) if self.locations.size else 0

    @classmethod
    def from_bitmap(cls, bitmap):
        return cls(bitmap.values(), coverage=bitmap.n_max, verify=False)

    def __len__(self):
        return int(self.locations.size)

    def step_pi(self, x):
        '''
            Mass on (-inf, x]: the number of locations <= x.
        '''
        if x > self.coverage:
            raise ContractError("x=%s beyond the train coverage %d" % (x, self.coverage))
        return int(np.searchsorted(self.locations, x, side='right'))


def step_pi_from_spikes(x, train):
    '''pi(floor(x)) as the mass of the train on (-inf, x].'''
    return train.step_pi(x)

'''
    Exact integer semantics of the delta filter.

    delta(x) is 1 when x is a non-negative integer and 0 otherwise. Every
    argument the PDF ever feeds it has the shape numerator/divisor - offset,
    so it is evaluated as a divisibility test plus a quotient comparison and
    no floating point is involved anywhere in this module.
'''

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from sieves.errors import ContractError, DomainError


@dataclass(frozen=True)
class DeltaArg:
    '''The argument numerator/divisor - offset of one delta factor.'''
    numerator: int
    divisor: int
    offset: int


def _ceil_div(a, b):
    return -(-a // b)


def delta(arg):
    '''
        Evaluates delta(numerator/divisor - offset).

        :param arg: DeltaArg with divisor >= 1
        :return: 1 iff divisor | numerator and numerator/divisor >= offset, else 0
    '''
    if arg.divisor < 1:
        raise DomainError("delta divisor must be >= 1, got %d" % arg.divisor)

    if arg.numerator % arg.divisor != 0:
        return 0

    return 1 if arg.numerator // arg.divisor - arg.offset >= 0 else 0


def sieve_factor(n, p):
    '''
        One bracket (1 - delta(n/p - p)) of the PDF product.

        Zero exactly when p | n and n >= p*p (the quadratic zero-point boundary).
    '''
    return 1 - delta(DeltaArg(n, p, p))


def collapse_check(n, small_primes, pivot):
    '''
        Evaluates both ends of the delta-product collapse identity

            delta(n/p_m1 - p_m1) ... delta(n/p_k - p_k)
                = delta(n/(p_m1 ... p_k) - ceil(p_k / (p_m1 ...)))

        :param n: tested integer
        :param small_primes: distinct primes, all strictly below pivot
        :param pivot: the largest prime p_k
        :return: (LHS, RHS); the identity says they are equal
    '''
    small = list(small_primes)
    if len(set(small)) != len(small):
        raise ContractError("small primes must be pairwise distinct: %r" % (small,))
    if any(p >= pivot for p in small):
        raise ContractError("pivot %d must be strictly larger than %r" % (pivot, sorted(small)))

    lhs = delta(DeltaArg(n, pivot, pivot))
    for p in small:
        lhs *= delta(DeltaArg(n, p, p))

    q = prod(small)
    rhs = delta(DeltaArg(n, q * pivot, _ceil_div(pivot, q)))

    return lhs, rhs


def pair_collapse_arg(lower_primes, upper_primes, gap=2):
    '''
        Builds the single delta argument that replaces

            prod_{p in lower} delta(n/p - p) * prod_{q in upper} delta((n+gap)/q - q)

        The result is DeltaArg(numerator=s, divisor=Q, offset=r); the collapsed
        factor for a given n is delta(DeltaArg(n + s, Q, r)) with
        Q = q1*q2, s = q1*m1 = q2*m2 + gap and r the quotient bound that
        carries both quadratic thresholds.
    '''
    lower = sorted(lower_primes)
    upper = sorted(upper_primes)

    if gap <= 0:
        raise ContractError("gap must be positive, got %d" % gap)
    if not lower and not upper:
        raise ContractError("at least one prime is needed on either side")
    if set(lower) & set(upper):
        raise ContractError("lower and upper prime sets overlap: %r" % (sorted(set(lower) & set(upper)),))

    q1 = prod(lower)
    q2 = prod(upper)
    big_q = q1 * q2

    # CRT shift: s = 0 mod q1 and s = gap mod q2
    m1 = (gap * pow(q1, -1, q2)) % q2 if q2 > 1 else 0
    s = q1 * m1

    thresholds = []
    if lower:
        thresholds.append(lower[-1] ** 2)
    if upper:
        thresholds.append(upper[-1] ** 2 - gap)
    threshold = max(thresholds)

    r = _ceil_div(threshold + s, big_q)

    return DeltaArg(s, big_q, r)


def pair_collapse_check(n, lower_primes, upper_primes, gap=2):
    '''
        Evaluates both sides of the two-sided collapse for the pair (n, n+gap).

        :return: (LHS, RHS) where LHS is the product of the individual delta
                 factors and RHS the single collapsed delta
    '''
    collapsed = pair_collapse_arg(lower_primes, upper_primes, gap)

    lhs = 1
    for p in lower_primes:
        lhs *= delta(DeltaArg(n, p, p))
    for q in upper_primes:
        lhs *= delta(DeltaArg(n + gap, q, q))

    rhs = delta(DeltaArg(n + collapsed.numerator, collapsed.divisor, collapsed.offset))

    return lhs, rhs


def empirical_delta_density(q, s, r, N):
    '''
        Finite estimator (1/N) * #{2 <= m <= N : delta((m+s)/q - r) = 1}.

        Tends to 1/q for any fixed finite s and r. The count is taken in closed
        form: the admissible m form one residue class mod q starting at
        max(2, q*r - s).

        :return: Fraction
    '''
    if q < 1:
        raise DomainError("q must be >= 1, got %d" % q)
    if N < q:
        raise DomainError("N must be >= q (N=%d, q=%d)" % (N, q))

    lo = max(2, q * r - s)
    if lo > N:
        return Fraction(0, N)

    first = lo + (-(lo + s)) % q
    count = 0 if first > N else (N - first) // q + 1

    return Fraction(count, N)

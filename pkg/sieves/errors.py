'''
    Exceptions raised by the sieve library.

    Every class carries the process exit code the management commands
    report for it, so a command only has to read `exc.exit_code`.
'''

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_INVARIANT = 4


class SieveError(Exception):
    '''Base class of all library errors.'''
    exit_code = EXIT_INVARIANT


class DomainError(SieveError, ValueError):
    '''
        An argument lies outside the domain of the operation,
        e.g. n < 2 for the PDF or a zero divisor for delta.
    '''
    exit_code = EXIT_USAGE


class ContractError(SieveError, ValueError):
    '''
        The caller broke a precondition of the operation (unsorted
        checkpoints, a pivot that is not the largest prime, ...).
    '''
    exit_code = EXIT_USAGE


class ResourceLimitError(SieveError):
    '''A run would exceed the configured memory budget or size ceiling.'''
    exit_code = EXIT_RESOURCE


class InvariantViolation(SieveError, AssertionError):
    '''An identity that must hold by construction did not.'''
    exit_code = EXIT_INVARIANT

from pdfsieve.settings.base import *

DEBUG = False

# SHOULD NEVER CHANGE THIS VALUE
SECRET_KEY = 'this-is-a-secret-key-for-testing-settings-only'

# Archive lives in memory so test runs leave nothing behind
DATABASE_LOCATION = 'sqlite:///:memory:'

# Small segments so every test crosses segment boundaries
SIEVE_SEGMENT_SIZE = 1 << 16

LOGGING['loggers']['sieves']['level'] = 'WARNING'

# twin constant ceiling for prediction tests that do not pass --pmax
TWIN_CONSTANT_PMAX = 10 ** 6

"""
Django settings for the pdfsieve project.

Only the pieces the management commands need are configured: the `sieves`
app, logging, the run archive location and the sieve tuning knobs.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

import os
BASE_DIR = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# GLOBAL VALUES FOR THE RUN ARCHIVE (SQLAlchemy, not the Django ORM)
DB_FULL_PATH = os.path.join(BASE_DIR, 'pdfsieve.db')
DATABASE_LOCATION = 'sqlite:///' + DB_FULL_PATH

# Application definition

INSTALLED_APPS = (
    'sieves',
)

# The Django ORM is not used; the archive goes through SQLAlchemy.
DATABASES = {}

USE_I18N = False

USE_TZ = True

TIME_ZONE = 'UTC'

# Sieve tuning

# integers per segment; one bool byte each, so 1 MiB of scratch per worker
SIEVE_SEGMENT_SIZE = 1 << 20

# largest packed prime bitmap (bytes) a single run may allocate
SIEVE_MEMORY_BUDGET = 256 * 1024 * 1024

SIEVE_N_LIMIT = 10 ** 10

# ceiling for per-number literal PDF sweeps (recurrence, literal pi_k)
LITERAL_PDF_LIMIT = 10 ** 8

SIEVE_THREADS = int(os.environ.get('PDFSIEVE_THREADS', '1') or 1)

# Analytics

TWIN_CONSTANT_PMAX = 10 ** 8

LI2_EPSREL = 1e-12

CSV_SIGNIFICANT_DIGITS = 15

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
            'stream': 'ext://sys.stderr',
        },
    },
    'loggers': {
        'sieves': {
            'handlers': ['console'],
            'level': 'INFO',
            'propagate': False,
        },
    },
}

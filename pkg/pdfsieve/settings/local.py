from pdfsieve.settings.base import *

DEBUG = True

# SHOULD NEVER CHANGE THIS VALUE
SECRET_KEY = 'this-is-a-secret-key-for-local-settings-only'

# Runs on a workstation may use more threads; PDFSIEVE_THREADS still wins.
SIEVE_THREADS = int(os.environ.get('PDFSIEVE_THREADS', os.cpu_count() or 1))

import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "pdfsieve.settings.testing")
django.setup()

'''
    Module to initialize database access.
'''

from functools import lru_cache

from django.conf import settings

import sieves.models as models
from sieves.util.db_conn import Database


@lru_cache(maxsize=None)
def connection(location=None):
    '''
        Database for the given SQLAlchemy URL (DATABASE_LOCATION by default),
        tables created on first use.
    '''
    db = Database(location or settings.DATABASE_LOCATION)
    db.create_tables(models.Base.metadata)
    return db

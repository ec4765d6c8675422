from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker
from sqlalchemy.pool import StaticPool

MEMORY_LOCATIONS = ('sqlite://', 'sqlite:///:memory:')


class Database(object):
    '''
        Engine and session factory for the run archive.
    '''
    def __init__(self, location):
        self.location = location

        if location in MEMORY_LOCATIONS:
            # one shared connection, otherwise every session sees an empty database
            self.engine = create_engine('sqlite://', echo=False, poolclass=StaticPool,
                                        connect_args={'check_same_thread': False})
        else:
            self.engine = create_engine(location, echo=False)

        self.Session = sessionmaker(bind=self.engine)
        self.session = self.Session()

    def create_tables(self, metadata):
        metadata.create_all(self.engine)

    def new_session(self):
        '''
            Closes the previous session and opens a fresh one; one session per
            archive operation.
        '''
        self.session.close()
        self.session = self.Session()
        return self.session

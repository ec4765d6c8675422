'''
The run archive: every table a management command emitted with --save.

Cells are stored already formatted (JSON lists of strings), so a stored
table is written out again byte for byte.
'''

from sqlalchemy import Column, ForeignKey, Index, Integer, String
from sqlalchemy.orm import declarative_base, relationship
from sqlalchemy.types import TIMESTAMP

# Base class for the declarative table definitions below.
Base = declarative_base()


class Run(Base):
    '''The class representing the schema of the run table.'''
    __tablename__ = 'run'

    run_id = Column(Integer, autoincrement=True, primary_key=True)
    command = Column(String, nullable=False)
    created = Column(TIMESTAMP(timezone=True), nullable=False)
    # JSON object of the validated RunConfig
    parameters = Column(String, nullable=False)
    output_format = Column(String, nullable=False)
    # JSON list of column names
    header = Column(String, nullable=False)
    row_count = Column(Integer, nullable=False)

    rows = relationship("RunRow", order_by="RunRow.ordinal", cascade="all, delete-orphan")


class RunRow(Base):
    '''The class representing the schema of the run_row table.'''
    __tablename__ = 'run_row'

    run_id = Column(Integer, ForeignKey('run.run_id', ondelete="CASCADE"), primary_key=True)
    ordinal = Column(Integer, primary_key=True)
    # JSON list of formatted cells
    cells = Column(String, nullable=False)


# Table: run. Columns: command, created
Index('run_idx_command_created', Run.command, Run.created)
